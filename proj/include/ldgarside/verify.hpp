#ifndef LDGARSIDE_VERIFY_HPP_
#define LDGARSIDE_VERIFY_HPP_

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace ldgarside {

  // A counterexample, or evidence of one, with the command line replaying it.
  struct Failure {
    std::string inputs;
    std::string expected;
    std::string actual;
    std::string repro;
  };

  enum class Status { pass, fail, exhausted };

  [[nodiscard]] std::string_view to_string(Status s) noexcept;

  struct Report {
    std::string suite;
    // Effective parameters, in a fixed order.
    std::vector<std::pair<std::string, std::string>> params;
    std::size_t                                      cases_checked = 0;
    // Sorted, so that reports do not depend on evaluation order.
    std::vector<Failure> failures;
    // Cases abandoned because reversing ran out of budget.
    std::vector<std::string> exhausted;
    // Free-form facts recorded by the suite (counts and the like).
    std::vector<std::pair<std::string, std::string>> notes;

    // A definite failure outranks exhausted cases.
    [[nodiscard]] Status status() const noexcept {
      if (!failures.empty()) {
        return Status::fail;
      }
      return exhausted.empty() ? Status::pass : Status::exhausted;
    }
  };

  // Bounds shared by all suites; unset values take the suite's default.
  struct SuiteOptions {
    std::optional<std::size_t> max_size;         // terms
    std::optional<std::size_t> max_simple_size;  // terms whose simples are listed
    std::optional<std::size_t> max_addr_len;
    std::optional<std::size_t> max_index;        // braid generators
    std::optional<std::size_t> samples;
    std::size_t                budget = 1'000'000;
    std::uint64_t              seed   = 1;
  };

  // Names accepted by run_suite, in documentation order.
  [[nodiscard]] std::vector<std::string> const& suite_names();

  // One-line description of a suite.
  [[nodiscard]] std::string_view suite_summary(std::string_view name);

  // Throws std::invalid_argument for an unknown suite name.
  [[nodiscard]] Report run_suite(std::string_view name, SuiteOptions const& opts);

}  // namespace ldgarside

#endif  // LDGARSIDE_VERIFY_HPP_
