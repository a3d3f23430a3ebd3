// Acceptance run: one PASS/FAIL line per criterion, exit status 0 iff all
// pass.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <map>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "polyext/fragment.hpp"
#include "polyext/suites.hpp"

using namespace polyext;
using namespace polyext::verify;

namespace {

  constexpr double      assoc_budget_seconds = 60.0;
  constexpr std::size_t negative_samples     = 200;
  constexpr std::size_t round_trip_literals  = 1000;
  constexpr std::uint64_t round_trip_seed    = 12;

  struct Context {
    Fixture   fixture;
    Extension ext;
  };

  std::vector<Context> const& contexts() {
    static std::vector<Context> const out = [] {
      std::vector<Context> v;
      for (auto const& fx : fixture_matrix({1, 2})) {
        auto m = *monoids::builtin(fx.monoid);
        auto t = resolve_theta(m, fx.theta);
        v.push_back({fx, Extension(std::move(m), std::move(t), Alphabet(fx.k))});
      }
      return v;
    }();
    return out;
  }

  struct Outcome {
    bool        pass = true;
    std::string note;

    void require(bool ok, std::string const& why) {
      if (!ok) {
        if (pass) note.clear();
        pass = false;
        note += (note.empty() ? "" : "; ") + why;
      }
    }
  };

  // Runs a suite on every context; failures are recorded against the
  // outcome.
  std::vector<SuiteReport> run_everywhere(std::string const& suite, Outcome& out,
                                          SuiteParams const& p = {}) {
    std::vector<SuiteReport> reports;
    for (auto const& c : contexts()) {
      auto r = run_suite(c.ext, c.fixture.label(), suite, p);
      out.require(r.passed(), c.fixture.label() + " " + suite + " failed ("
                                  + std::to_string(r.failure_count) + ")");
      reports.push_back(std::move(r));
    }
    return reports;
  }

  std::uint64_t total_cases(std::vector<SuiteReport> const& rs) {
    std::uint64_t n = 0;
    for (auto const& r : rs) n += r.cases;
    return n;
  }

  Outcome criterion_1() {
    Outcome out;
    auto const t0      = std::chrono::steady_clock::now();
    auto const reports = run_everywhere("associativity", out);
    double const secs  = std::chrono::duration<double>(
                            std::chrono::steady_clock::now() - t0).count();
    std::set<int> seen;
    for (auto const& r : reports) {
      for (auto const& [name, hits] : r.details["case_hits"].items()) {
        if (hits.get<std::uint64_t>() > 0) seen.insert(name[0] - '0');
      }
    }
    out.require(contexts().size() >= 6, "fewer than 6 contexts");
    out.require(seen.size() == 9, "only " + std::to_string(seen.size()) + " of 9 cases hit");
    out.require(secs < assoc_budget_seconds, "over the time budget");
    std::ostringstream s;
    s << contexts().size() << " contexts, " << total_cases(reports)
      << " triples, cases 1-9 hit, " << secs << " s";
    if (out.pass) out.note = s.str();
    return out;
  }

  Outcome criterion_2() {
    Outcome       out;
    std::uint64_t n = 0;
    for (char const* s : {"idempotents", "inverses", "center_units"}) {
      n += total_cases(run_everywhere(s, out));
    }
    for (auto const& c : contexts()) {
      auto const r = run_suite(c.ext, c.fixture.label(), "inverses");
      bool const inverse = c.ext.monoid().is_inverse_monoid();
      out.require(r.details["inverse"].get<bool>() == inverse,
                  c.fixture.label() + " uniqueness of inverses");
    }
    if (out.pass) out.note = std::to_string(n) + " checks on Fragment(2), zero mismatches";
    return out;
  }

  Outcome criterion_3() {
    Outcome out;
    auto const reports = run_everywhere("commuting_idempotents", out);
    for (std::size_t i = 0; i < reports.size(); ++i) {
      auto const& name = contexts()[i].fixture.monoid;
      std::string const want = name == "lz2" ? "noncommuting pair found" : "idempotents commute";
      out.require(reports[i].verdict == want, reports[i].context + " verdict " + reports[i].verdict);
      if (name == "lz2" && reports[i].verdict == want && out.pass) {
        out.note = "lz2 pair " + reports[i].details["pair"].dump();
      }
    }
    if (out.pass) out.note = "C2, C3, chain2, I2 commute; " + out.note;
    return out;
  }

  Outcome criterion_4() {
    Outcome     out;
    SuiteParams p;
    p.negative_samples = negative_samples;
    auto const reports = run_everywhere("green", out, p);
    out.require(p.witness_bound() == 4, "witness bound is not 4");
    std::uint64_t negatives = 0;
    std::uint64_t positives = 0;
    for (auto const& r : reports) {
      for (auto const& [rel, c] : r.details["relations"].items()) {
        auto const avail = c["negative"].get<std::uint64_t>();
        auto const used  = c["sampled"].get<std::uint64_t>();
        out.require(used == std::min<std::uint64_t>(avail, negative_samples),
                    r.context + " " + rel + " sampled " + std::to_string(used));
        negatives += used;
        positives += c["positive"].get<std::uint64_t>();
      }
    }
    if (out.pass) {
      out.note = std::to_string(positives)
                 + " positive pairs witnessed, " + std::to_string(negatives)
                 + " sampled negatives without witness of length <= 4";
    }
    return out;
  }

  Outcome simple_criterion(char const* suite, char const* what) {
    Outcome out;
    auto const reports = run_everywhere(suite, out);
    if (out.pass) out.note = std::to_string(total_cases(reports)) + " " + what;
    return out;
  }

  Outcome criterion_7() {
    Outcome out;
    run_everywhere("e_unitary", out);
    auto ctx = [](char const* m, char const* t) -> Extension const& {
      for (auto const& c : contexts())
        if (c.fixture.monoid == m && c.fixture.theta == t && c.fixture.k == 2) return c.ext;
      throw std::logic_error("missing context");
    };
    out.require(ctx("chain2", "one").is_zero_e_unitary(), "chain2/one not 0-E-unitary");
    out.require(ctx("C2", "id").is_zero_e_unitary(), "C2/id not 0-E-unitary");
    auto const& c2 = ctx("C2", "one");
    out.require(!c2.is_zero_e_unitary(), "C2/one reported 0-E-unitary");
    auto const r = run_suite(c2, "C2/one/k2", "e_unitary");
    if (!r.details.contains("violation")) {
      out.require(false, "no violating pair exhibited");
      return out;
    }
    auto const& v  = r.details["violation"];
    auto const  e  = c2.parse(v["e"].get<std::string>());
    auto const  s  = c2.parse(v["s"].get<std::string>());
    auto const  es = c2.mul(e, s);
    Fragment const f1(c2, 1);
    out.require(f1.contains(e) && f1.contains(s), "violation outside Fragment(1)");
    out.require(!es.is_zero() && c2.mul(es, es) == es && c2.mul(e, e) == e
                    && c2.mul(s, s) != s,
                "violation does not check out");
    if (out.pass) {
      out.note = "chain2/one and C2/id true, C2/one false with e*s = "
                 + v["e"].get<std::string>() + "*" + v["s"].get<std::string>()
                 + " = " + c2.render(es);
    }
    return out;
  }

  // Right solution sets are bounded by |a2|+1 slices, left ones by |a1|+1
  // (the mirror bound); left sets above |a2|+1 are counted in the note.
  Outcome criterion_8() {
    Outcome       out;
    auto const    reports = run_everywhere("solver", out);
    std::uint64_t beyond  = 0;
    for (auto const& r : reports) {
      beyond += r.details["left_sets_beyond_right_word_bound"].get<std::uint64_t>();
    }
    if (out.pass) {
      out.note = std::to_string(total_cases(reports))
                 + " solution sets; right sets <= |a2|+1 slices, left sets <= |a1|+1 slices ("
                 + std::to_string(beyond) + " left sets exceed |a2|+1)";
    }
    return out;
  }

  Outcome criterion_9() {
    Outcome out;
    std::uint64_t n = 0;
    for (auto const& c : contexts()) {
      if (c.fixture.k != 1) continue;
      auto const r = run_suite(c.ext, c.fixture.label(), "bicyclic");
      out.require(r.passed(), c.fixture.label() + " bicyclic failed");
      n += r.cases;
    }
    if (out.pass) out.note = std::to_string(n) + " one-letter products, exponents <= 4, no zeros";
    return out;
  }

  Outcome criterion_11() {
    Outcome out;
    auto const reports = run_everywhere("translation", out);
    for (auto const& r : reports) {
      if (r.context.ends_with("k2")) {
        out.require(r.details["pairs"]
                        == nlohmann::json::array({nlohmann::json::array({"[]", "[]"}),
                                               nlohmann::json::array({"[a]", "[b]"}),
                                               nlohmann::json::array({"[ab]", "[a]"})}),
                    r.context + " used other pairs");
      }
    }
    if (out.pass) out.note = std::to_string(total_cases(reports)) + " round trips h(f(x)) = x";
    return out;
  }

  Outcome criterion_12() {
    Outcome out;
    std::string const cmd = std::string("\"") + POLYEXT_CLI + "\" check --all > /dev/null";
    int const rc = std::system(cmd.c_str());
    out.require(rc == 0, "check --all exited with " + std::to_string(rc));

    std::mt19937_64 rng(round_trip_seed);
    std::size_t     done = 0;
    for (std::size_t i = 0; i < round_trip_literals; ++i) {
      auto const& c   = contexts()[rng() % contexts().size()];
      auto const& ext = c.ext;
      BrElem      x;
      if (rng() % 20 != 0) {
        auto word = [&] {
          std::vector<Letter> w(rng() % 5);
          for (auto& a : w) a = Letter(rng() % ext.alphabet().size());
          return Word(std::span<Letter const>(w));
        };
        x = BrElem(Element(rng() % ext.monoid().size()), PElem(word(), word()));
      }
      std::string const text = ext.render(x);
      // Also accept the S-part by name where the monoid has names.
      std::string alt = text;
      if (!x.is_zero() && !ext.monoid().names().empty()) {
        alt = "(" + ext.monoid().element_name(x.element()) + text.substr(text.find(','));
      }
      bool ok = false;
      try {
        ok = ext.parse(text) == x && ext.render(ext.parse(text)) == text
             && ext.parse(alt) == x;
      } catch (Error const&) {
        ok = false;
      }
      out.require(ok, "round trip failed for " + text);
      done += ok;
    }
    if (out.pass) {
      out.note = "check --all exit 0; " + std::to_string(done) + " literals round-trip";
    }
    return out;
  }

}  // namespace

int main() {
  check_result_map();
  std::vector<std::pair<std::string, std::function<Outcome()>>> const criteria = {
      {"associativity over Fragment(1)^3", criterion_1},
      {"characterisations vs oracles on Fragment(2)", criterion_2},
      {"commuting idempotents", criterion_3},
      {"Green's relations with witnesses", criterion_4},
      {"0-simplicity witnesses", [] { return simple_criterion("zero_simple", "ordered pairs x*b*y = a"); }},
      {"quotient homomorphism and surjectivity", [] { return simple_criterion("quotient", "checks"); }},
      {"0-E-unitarity", criterion_7},
      {"solvers vs brute force over Fragment(3)", criterion_8},
      {"bicyclic reduction", criterion_9},
      {"slice metric axioms, balls and isolated zero", [] { return simple_criterion("metric", "checks"); }},
      {"translation bijection h(f(x)) = x", criterion_11},
      {"CLI check --all and literal round trip", criterion_12},
  };
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (std::exception const& e) {
      o.pass = false;
      o.note = std::string("exception: ") + e.what();
    }
    all = all && o.pass;
    std::cout << "criterion " << (i + 1) << ": " << (o.pass ? "PASS" : "FAIL") << "  "
              << criteria[i].first << " -- " << o.note << std::endl;
  }
  return all ? 0 : 1;
}
