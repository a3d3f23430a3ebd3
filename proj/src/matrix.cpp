#include "polyext/suites.hpp"

namespace polyext::verify {

  std::string Fixture::label() const {
    return monoid + "/" + theta + "/k" + std::to_string(k);
  }

  Theta resolve_theta(FiniteMonoid const& m, std::string_view name) {
    if (name == "id") {
      return Theta::identity(m.size());
    }
    if (name == "one") {
      return Theta::constant(m.size(), m.identity());
    }
    throw Error("unknown theta '" + std::string(name)
                + "'; expected id, one or a file");
  }

  std::vector<Fixture> fixture_matrix(std::vector<std::size_t> const& ks) {
    std::vector<Fixture> out;
    for (std::size_t k : ks) {
      for (auto const& name : monoids::builtin_names()) {
        auto const m     = *monoids::builtin(name);
        bool const group = m.unit_group().size() == m.size();
        if (group && m.size() > 1) {
          out.push_back({name, "id", k});
        }
        out.push_back({name, "one", k});
      }
    }
    return out;
  }

  std::vector<SuiteReport> run_all(std::vector<Fixture> const& fixtures,
                                   SuiteParams const&          params) {
    std::vector<SuiteReport> out;
    for (auto const& fx : fixtures) {
      std::optional<Extension> ext;
      try {
        auto m = monoids::builtin(fx.monoid);
        if (!m) {
          throw Error("unknown built-in monoid '" + fx.monoid + "'");
        }
        Theta theta = resolve_theta(*m, fx.theta);
        ext.emplace(std::move(*m), std::move(theta), Alphabet(fx.k));
      } catch (Error const& e) {
        SuiteReport r;
        r.suite   = "load";
        r.anchor  = "the monoid and theta form a valid extension";
        r.context = fx.label();
        r.verdict = "skipped";
        r.cases   = 1;
        r.fail({fx.label()}, "valid context", e.what());
        out.push_back(std::move(r));
        continue;
      }
      auto reports = run_suites(*ext, fx.label(), params);
      std::move(reports.begin(), reports.end(), std::back_inserter(out));
    }
    return out;
  }

}  // namespace polyext::verify
