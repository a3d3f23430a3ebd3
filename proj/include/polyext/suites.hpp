#pragma once

// Verification suites: each one recomputes a structural characterisation
// of the extension from products and exhaustive search over fragments and
// compares the two.

#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "polyext/extension.hpp"
#include "polyext/report.hpp"

namespace polyext::verify {

  struct SuiteParams {
    // Base fragment bound L. Triple-exhaustive suites use L, pairwise suites
    // L + 1, witness searches 2(L + 1) and solver searches L + 2.
    std::size_t   bound            = 1;
    std::uint64_t seed             = 20240611;
    std::size_t   negative_samples = 200;

    std::size_t triple_bound() const noexcept {
      return bound;
    }
    std::size_t pair_bound() const noexcept {
      return bound + 1;
    }
    std::size_t witness_bound() const noexcept {
      return 2 * (bound + 1);
    }
    std::size_t solver_bound() const noexcept {
      return bound + 2;
    }
  };

  struct SuiteInfo {
    std::string_view              name;
    std::string_view              anchor;
    std::vector<std::string_view> results;
  };

  // Every suite, in run order.
  std::vector<SuiteInfo> const& suite_table();
  // The structural results the suites verify.
  std::vector<std::string_view> const& verified_results();
  // Throws std::logic_error unless every verified result belongs to exactly
  // one suite and every suite lists at least one result.
  void check_result_map();

  bool is_suite(std::string_view name);

  // Throws Error for an unknown suite name.
  SuiteReport run_suite(Extension const&   ext,
                        std::string const& context,
                        std::string_view   name,
                        SuiteParams const& params = {});

  std::vector<SuiteReport> run_suites(Extension const&   ext,
                                      std::string const& context,
                                      SuiteParams const& params = {});

  // A built-in monoid, a θ name ("id" or "one") and an alphabet size.
  struct Fixture {
    std::string monoid;
    std::string theta;
    std::size_t k = 1;

    std::string label() const;
  };

  // "id" (identity map) or "one" (constant to the identity). Throws Error
  // for other names.
  Theta resolve_theta(FiniteMonoid const& m, std::string_view name);

  // Every built-in monoid with each admissible θ and each k: "one" always,
  // "id" for groups of order > 1.
  std::vector<Fixture> fixture_matrix(std::vector<std::size_t> const& ks = {1,
                                                                            2});

  // Runs every suite on every fixture. A fixture that fails to load yields
  // one failing "load" report instead.
  std::vector<SuiteReport> run_all(std::vector<Fixture> const& fixtures,
                                   SuiteParams const&          params = {});

  bool all_passed(std::vector<SuiteReport> const& reports);

}  // namespace polyext::verify
