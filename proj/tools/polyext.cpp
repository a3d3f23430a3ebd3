// polyext: evaluate products, answer structural queries and run the
// verification suites for a λ-polycyclic Bruck–Reilly extension.

#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "polyext/extension.hpp"
#include "polyext/monoid_io.hpp"
#include "polyext/suites.hpp"

namespace {

  using namespace polyext;
  using nlohmann::json;

  constexpr int exit_ok      = 0;
  constexpr int exit_failed  = 1;
  constexpr int exit_usage   = 2;

  struct Config {
    std::string   monoid;
    std::string   theta;
    std::size_t   k      = 2;
    std::size_t   bound  = 1;
    std::string   format = "text";
    std::string   out;
    std::uint64_t seed   = verify::SuiteParams{}.seed;

    bool json() const {
      return format == "json";
    }
  };

  // Loads --monoid and --theta. Built-in names default to θ = one; files
  // must carry theta themselves or get it from --theta.
  Extension load_extension(Config const& cfg) {
    if (cfg.monoid.empty()) {
      throw Error("--monoid is required");
    }
    std::optional<FiniteMonoid> m;
    std::optional<Theta>        file_theta;
    if (auto b = monoids::builtin(cfg.monoid)) {
      m = std::move(*b);
    } else if (std::filesystem::exists(cfg.monoid)) {
      auto spec  = load_monoid_json(cfg.monoid);
      m          = std::move(spec.monoid);
      file_theta = std::move(spec.theta);
    } else {
      throw Error("'" + cfg.monoid + "' is neither a built-in monoid ("
                  + [] {
                      std::string s;
                      for (auto const& n : monoids::builtin_names()) {
                        s += (s.empty() ? "" : ", ") + n;
                      }
                      return s;
                    }()
                  + ") nor a file");
    }
    std::optional<Theta> theta;
    if (cfg.theta == "id" || cfg.theta == "one") {
      theta = verify::resolve_theta(*m, cfg.theta);
    } else if (!cfg.theta.empty()) {
      theta = load_theta_json(cfg.theta);
    } else if (file_theta) {
      theta = file_theta;
    } else if (monoids::builtin(cfg.monoid)) {
      theta = verify::resolve_theta(*m, "one");
    } else {
      throw Error("monoid file '" + cfg.monoid
                  + "' has no theta; pass --theta");
    }
    return Extension(std::move(*m), std::move(*theta), Alphabet(cfg.k));
  }

  std::string context_label(Config const& cfg) {
    std::string theta = cfg.theta;
    if (theta.empty()) {
      theta = monoids::builtin(cfg.monoid) ? "one" : "file";
    }
    return verify::Fixture{cfg.monoid, theta, cfg.k}.label();
  }

  void emit(Config const& cfg, std::string const& text) {
    if (cfg.out.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream file(cfg.out);
    if (!file) {
      throw Error("cannot write '" + cfg.out + "'");
    }
    file << text;
  }

  std::string lines(std::vector<std::string> const& xs) {
    std::string out;
    for (auto const& x : xs) {
      out += x + "\n";
    }
    return out;
  }

  int cmd_eval(Config const& cfg, std::string const& expr) {
    Extension const ext     = load_extension(cfg);
    auto const      factors = ext.parse_product(expr);
    BrElem          acc     = factors.front();
    for (std::size_t i = 1; i < factors.size(); ++i) {
      acc = ext.mul(acc, factors[i]);
    }
    if (cfg.json()) {
      emit(cfg, json{{"expr", expr}, {"result", ext.render(acc)}}.dump(2) + "\n");
    } else {
      emit(cfg, ext.render(acc) + "\n");
    }
    return exit_ok;
  }

  struct QueryArgs {
    std::string              what;
    std::vector<std::string> args;
  };

  void need(QueryArgs const& q, std::size_t n, std::string const& usage) {
    if (q.args.size() != n) {
      throw CLI::ValidationError("query " + q.what, "usage: query " + usage);
    }
  }

  int cmd_query(Config const& cfg, QueryArgs const& q) {
    Extension const ext = load_extension(cfg);
    json            doc{{"query", q.what}};
    std::vector<std::string> text;

    auto boolean = [&](bool b) {
      doc["result"] = b;
      text.push_back(b ? "true" : "false");
    };

    if (q.what == "idem" || q.what == "center" || q.what == "unit"
        || q.what == "quotient" || q.what == "inv") {
      need(q, 1, q.what + " ELEM");
      BrElem const x = ext.parse(q.args[0]);
      doc["args"]    = {ext.render(x)};
      if (q.what == "idem") {
        boolean(ext.is_idempotent(x));
      } else if (q.what == "center") {
        boolean(ext.is_in_center(x));
      } else if (q.what == "unit") {
        boolean(ext.is_unit(x));
      } else if (q.what == "quotient") {
        doc["result"] = to_string(ext.quotient(x));
        text.push_back(to_string(ext.quotient(x)));
      } else {
        auto const y = ext.inverse_of(x);
        doc["result"] = y ? json(ext.render(*y)) : json(nullptr);
        text.push_back(y ? ext.render(*y) : "none");
      }
    } else if (q.what == "green") {
      need(q, 3, "green L|R|H|D|J ELEM ELEM");
      auto const rel = parse_green(q.args[0]);
      if (!rel) {
        throw CLI::ValidationError("query green",
                                   "unknown relation '" + q.args[0]
                                       + "'; expected L, R, H, D or J");
      }
      BrElem const x = ext.parse(q.args[1]);
      BrElem const y = ext.parse(q.args[2]);
      doc["args"]    = {q.args[0], ext.render(x), ext.render(y)};
      bool const related = ext.green(*rel, x, y);
      boolean(related);
      if (related && !x.is_zero()) {
        if (*rel == Green::L || *rel == Green::H) {
          auto const w = ext.l_witness(x, y);
          doc["l_witness"] = {ext.render(w->first), ext.render(w->second)};
          text.push_back("x = " + ext.render(w->first) + " * y, y = "
                         + ext.render(w->second) + " * x");
        }
        if (*rel == Green::R || *rel == Green::H) {
          auto const w = ext.r_witness(x, y);
          doc["r_witness"] = {ext.render(w->first), ext.render(w->second)};
          text.push_back("x = y * " + ext.render(w->first) + ", y = x * "
                         + ext.render(w->second));
        }
        if (*rel == Green::D) {
          auto const z = ext.d_middle(x, y);
          doc["middle"] = ext.render(*z);
          text.push_back("x L " + ext.render(*z) + " R y");
        }
      }
    } else if (q.what == "solve") {
      need(q, 3, "solve right|left A B");
      if (q.args[0] != "right" && q.args[0] != "left") {
        throw CLI::ValidationError("query solve",
                                   "expected right or left, got '" + q.args[0]
                                       + "'");
      }
      BrElem const a = ext.parse(q.args[1]);
      BrElem const b = ext.parse(q.args[2]);
      if (a.is_zero() || b.is_zero()) {
        throw Error("solve needs nonzero arguments");
      }
      auto const sols = q.args[0] == "right" ? ext.solve_right(a, b)
                                             : ext.solve_left(a, b);
      json arr = json::array();
      text.push_back(std::to_string(sols.size())
                     + (sols.size() == 1 ? " solution" : " solutions"));
      for (auto const& x : sols) {
        arr.push_back(ext.render(x));
        text.push_back(ext.render(x));
      }
      doc["args"]   = {q.args[0], ext.render(a), ext.render(b)};
      doc["result"] = arr;
    } else if (q.what == "witness") {
      need(q, 2, "witness A B");
      BrElem const a = ext.parse(q.args[0]);
      BrElem const b = ext.parse(q.args[1]);
      if (a.is_zero() || b.is_zero()) {
        throw Error("witness needs nonzero arguments");
      }
      auto const [x, y]  = ext.zero_simple_witness(a, b);
      BrElem const check = ext.mul(x, b, y);
      bool const   ok    = check == a;
      doc["args"]        = {ext.render(a), ext.render(b)};
      doc["x"]           = ext.render(x);
      doc["y"]           = ext.render(y);
      doc["product"]     = ext.render(check);
      doc["result"]      = ok;
      text.push_back("x = " + ext.render(x));
      text.push_back("y = " + ext.render(y));
      text.push_back("x * b * y = " + ext.render(check)
                     + (ok ? " (ok)" : " (MISMATCH)"));
      if (!ok) {
        emit(cfg, cfg.json() ? doc.dump(2) + "\n" : lines(text));
        return exit_failed;
      }
    } else {
      throw CLI::ValidationError("query",
                                 "unknown query '" + q.what
                                     + "'; expected idem, inv, green, center, "
                                       "unit, solve, witness or quotient");
    }
    emit(cfg, cfg.json() ? doc.dump(2) + "\n" : lines(text));
    return exit_ok;
  }

  int cmd_check(Config const& cfg, std::vector<std::string> const& suites,
                bool k_given) {
    for (auto const& s : suites) {
      if (!verify::is_suite(s)) {
        throw CLI::ValidationError("--suite", "unknown suite '" + s + "'");
      }
    }
    verify::SuiteParams params;
    params.bound = cfg.bound;
    params.seed  = cfg.seed;

    std::vector<verify::SuiteReport> reports;
    auto run_on = [&](Extension const& ext, std::string const& label) {
      if (suites.empty()) {
        auto rs = verify::run_suites(ext, label, params);
        reports.insert(reports.end(), rs.begin(), rs.end());
      } else {
        for (auto const& s : suites) {
          reports.push_back(verify::run_suite(ext, label, s, params));
        }
      }
    };

    if (cfg.monoid.empty()) {
      std::vector<std::size_t> ks = {1, 2};
      if (k_given) {
        ks = {cfg.k};
      }
      for (auto const& fx : verify::fixture_matrix(ks)) {
        auto m = *monoids::builtin(fx.monoid);
        Extension ext(m, verify::resolve_theta(m, fx.theta), Alphabet(fx.k));
        run_on(ext, fx.label());
      }
    } else {
      std::string const label = context_label(cfg);
      try {
        run_on(load_extension(cfg), label);
      } catch (Error const& e) {
        verify::SuiteReport r;
        r.suite   = "load";
        r.anchor  = "the monoid and theta form a valid extension";
        r.context = label;
        r.verdict = "skipped";
        r.cases   = 1;
        r.fail({cfg.monoid}, "valid context", e.what());
        reports.push_back(std::move(r));
      }
    }

    bool const pass = verify::all_passed(reports);
    if (cfg.json()) {
      json doc = {{"pass", pass}, {"reports", verify::to_json(reports)}};
      emit(cfg, doc.dump(2) + "\n");
    } else {
      std::string text;
      std::size_t failed = 0;
      for (auto const& r : reports) {
        text += verify::to_text(r);
        failed += !r.passed();
      }
      text += std::to_string(reports.size() - failed) + "/"
              + std::to_string(reports.size()) + " suites passed\n";
      emit(cfg, text);
    }
    return pass ? exit_ok : exit_failed;
  }

}  // namespace

int main(int argc, char** argv) {
  verify::check_result_map();

  CLI::App app{"Evaluate, query and verify λ-polycyclic Bruck–Reilly extensions "
               "of finite monoids"};
  app.require_subcommand(1);
  app.fallthrough();

  Config cfg;
  app.add_option("--monoid", cfg.monoid,
                 "Built-in monoid (trivial, C2, C3, chain2, lz2, I2) or JSON file");
  app.add_option("--theta", cfg.theta, "id, one or a JSON file");
  auto* k_opt = app.add_option("-k", cfg.k, "Alphabet size")
                    ->check(CLI::PositiveNumber);
  app.add_option("-L", cfg.bound, "Base fragment bound")
      ->check(CLI::NonNegativeNumber);
  app.add_option("--format", cfg.format, "Output format")
      ->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", cfg.out, "Write output to this file");
  app.add_option("--seed", cfg.seed, "Seed for sampled checks");

  std::string expr;
  auto*       eval = app.add_subcommand("eval", "Evaluate a product of elements");
  eval->add_option("expr", expr, "elem (* elem)*")->required();

  QueryArgs q;
  auto*     query = app.add_subcommand("query", "Answer a structural query");
  query->add_option("what", q.what,
                    "idem | inv | green | center | unit | solve | witness | "
                    "quotient")
      ->required();
  query->add_option("args", q.args, "Query arguments");

  std::vector<std::string> suites;
  bool                     all = false;
  auto* check = app.add_subcommand("check", "Run verification suites");
  check->add_flag("--all", all, "Run every suite (default)");
  check->add_option("--suite", suites, "Run only these suites");

  try {
    app.parse(argc, argv);
    if (all && !suites.empty()) {
      throw CLI::ValidationError("check", "--all and --suite are exclusive");
    }
    if (eval->parsed()) {
      return cmd_eval(cfg, expr);
    }
    if (query->parsed()) {
      return cmd_query(cfg, q);
    }
    return cmd_check(cfg, suites, k_opt->count() > 0);
  } catch (CLI::ParseError const& e) {
    int const rc = app.exit(e);
    return rc == 0 ? exit_ok : exit_usage;
  } catch (Error const& e) {
    std::cerr << "error: " << e.what() << "\n";
    return exit_usage;
  }
}
