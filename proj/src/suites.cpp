#include "polyext/suites.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cmath>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

#include <boost/dynamic_bitset.hpp>

#include "polyext/fragment.hpp"

namespace polyext::verify {

  namespace {

    using Bits = boost::dynamic_bitset<>;

    struct Suite {
      SuiteInfo info;
      void (*run)(Extension const&, SuiteParams const&, SuiteReport&);
    };

    std::string render_all(Extension const&           ext,
                           std::vector<BrElem> const& xs) {
      std::string out = "{";
      for (std::size_t i = 0; i < xs.size(); ++i) {
        out += (i ? ", " : "") + ext.render(xs[i]);
      }
      return out + "}";
    }

    std::string yes_no(bool b) {
      return b ? "true" : "false";
    }

    // Deterministic partial Fisher–Yates: the first min(count, total)
    // entries of a seeded permutation of 0..total-1.
    std::vector<std::size_t> sample_indices(std::size_t   total,
                                            std::size_t   count,
                                            std::uint64_t seed) {
      std::vector<std::size_t> idx(total);
      for (std::size_t i = 0; i < total; ++i) {
        idx[i] = i;
      }
      std::mt19937_64   rng(seed);
      std::size_t const take = std::min(count, total);
      for (std::size_t i = 0; i < take; ++i) {
        std::size_t const j = i + std::size_t(rng() % (total - i));
        std::swap(idx[i], idx[j]);
      }
      idx.resize(take);
      return idx;
    }

    Word power(Letter a, std::size_t n) {
      std::vector<Letter> letters(n, a);
      return Word(std::span<Letter const>(letters));
    }

    ////////////////////////////////////////////////////////////////////////
    // associativity
    ////////////////////////////////////////////////////////////////////////

    // Position of the word relations of three nonzero factors among the
    // cases of the associativity argument. Index 0 is case 1, indices 1-3
    // are cases 2a-2c, then cases 3 to 9.
    std::size_t case_index(BrElem const& x, BrElem const& y, BrElem const& z) {
      enum { A, B, C, D, N };
      int first = N, second = N;
      std::optional<Word> u, v;
      if (is_suffix(x.right(), y.left())) {
        first = A;
      } else if ((u = strip_suffix(x.right(), y.left()))) {
        first = B;
      }
      if ((v = strip_suffix(z.left(), y.right()))) {
        second = C;
      } else if (is_suffix(z.left(), y.right())) {
        second = D;
      }
      if (first == A && second == C) return 0;
      if (first == B && second == C) {
        if (is_suffix(*v, *u)) return 1;
        if (is_suffix(*u, *v)) return 2;
        return 3;
      }
      if (first == A && second == D) return 4;
      if (first == B && second == D) return 5;
      if (first == A) return 6;
      if (second == C) return 7;
      if (first == B) return 8;
      if (second == D) return 9;
      return 10;
    }

    constexpr std::array<char const*, 11> case_names
        = {"1", "2a", "2b", "2c", "3", "4", "5", "6", "7", "8", "9"};

    void run_associativity(Extension const&   ext,
                           SuiteParams const& p,
                           SuiteReport&       r) {
      Fragment const                f(ext, p.triple_bound());
      std::array<std::uint64_t, 11> hits{};
      for (auto const& x : f) {
        for (auto const& y : f) {
          BrElem const xy = ext.mul(x, y);
          for (auto const& z : f) {
            ++r.cases;
            BrElem const lhs = ext.mul(xy, z);
            BrElem const rhs = ext.mul(x, ext.mul(y, z));
            if (lhs != rhs) {
              r.fail({ext.render(x), ext.render(y), ext.render(z)},
                     ext.render(lhs),
                     ext.render(rhs));
            }
            if (!x.is_zero() && !y.is_zero() && !z.is_zero()) {
              ++hits[case_index(x, y, z)];
            }
          }
        }
      }
      // Sub-cases of case 2 are recorded only: 2b needs a left word of
      // length 2 in the third factor. With one letter every two words are
      // suffix-comparable, so only the cases 1 to 4 can occur.
      bool const one_letter = ext.alphabet().size() == 1;
      nlohmann::json coverage = nlohmann::json::object();
      std::array<std::uint64_t, 9> top{};
      for (std::size_t i = 0; i < hits.size(); ++i) {
        coverage[case_names[i]] = hits[i];
        top[i == 0 ? 0 : (i <= 3 ? 1 : i - 2)] += hits[i];
      }
      for (std::size_t c = 0; c < top.size(); ++c) {
        bool const reachable = !one_letter || c < 4;
        if (reachable != (top[c] > 0)) {
          r.fail({"case " + std::to_string(c + 1)},
                 reachable ? "hit" : "not hit",
                 top[c] > 0 ? "hit" : "not hit");
        }
      }
      r.details["fragment_size"] = f.size();
      r.details["case_hits"]     = coverage;
      r.verdict                  = "associative";
    }

    ////////////////////////////////////////////////////////////////////////
    // idempotents
    ////////////////////////////////////////////////////////////////////////

    void run_idempotents(Extension const&   ext,
                         SuiteParams const& p,
                         SuiteReport&       r) {
      Fragment const f(ext, p.pair_bound());
      std::size_t    count = 0;
      for (auto const& x : f) {
        ++r.cases;
        bool const oracle = ext.mul(x, x) == x;
        bool const actual = ext.is_idempotent(x);
        count += oracle;
        if (oracle != actual) {
          r.fail({ext.render(x)}, yes_no(oracle), yes_no(actual));
        }
      }
      r.details["idempotents"] = count;
    }

    ////////////////////////////////////////////////////////////////////////
    // commuting_idempotents
    ////////////////////////////////////////////////////////////////////////

    void run_commuting_idempotents(Extension const&   ext,
                                   SuiteParams const& p,
                                   SuiteReport&       r) {
      Fragment const      f(ext, p.pair_bound());
      std::vector<BrElem> idem;
      for (auto const& x : f) {
        if (ext.mul(x, x) == x) {
          idem.push_back(x);
        }
      }
      std::optional<std::pair<BrElem, BrElem>> clash;
      for (auto const& e : idem) {
        for (auto const& g : idem) {
          ++r.cases;
          if (!clash && ext.mul(e, g) != ext.mul(g, e)) {
            clash = {e, g};
          }
        }
      }
      FiniteMonoid const& m        = ext.monoid();
      bool const          expected = m.idempotents_commute();
      if (expected != !clash) {
        r.fail({"idempotents commute"},
               yes_no(expected),
               yes_no(!clash)
                   + (clash ? " at " + render_all(ext, {clash->first,
                                                        clash->second})
                            : ""));
      }
      if (expected) {
        r.verdict = "idempotents commute";
        return;
      }
      for (Element e : m.idempotents()) {
        for (Element g : m.idempotents()) {
          if (m.product(e, g) == m.product(g, e)) {
            continue;
          }
          BrElem const x(e, PElem::one()), y(g, PElem::one());
          ++r.cases;
          bool const lifted = ext.mul(x, x) == x && ext.mul(y, y) == y
                              && ext.mul(x, y) != ext.mul(y, x);
          if (!lifted) {
            r.fail({ext.render(x), ext.render(y)},
                   "noncommuting idempotents",
                   "commuting or not idempotent");
          }
          r.verdict                = "noncommuting pair found";
          r.details["pair_in_S"]   = {m.element_name(e), m.element_name(g)};
          r.details["pair"]        = {ext.render(x), ext.render(y)};
          r.details["products"]    = {ext.render(ext.mul(x, y)),
                                      ext.render(ext.mul(y, x))};
          return;
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // inverses
    ////////////////////////////////////////////////////////////////////////

    void run_inverses(Extension const&   ext,
                      SuiteParams const& p,
                      SuiteReport&       r) {
      Fragment const      f(ext, p.pair_bound());
      Fragment const      search(ext, p.witness_bound());
      FiniteMonoid const& m           = ext.monoid();
      bool                all_regular = true;
      bool                all_unique  = true;
      for (auto const& x : f) {
        ++r.cases;
        std::vector<BrElem> found;
        for (auto const& z : search) {
          BrElem const xz = ext.mul(x, z);
          if ((xz.is_zero() && !x.is_zero()) || ext.mul(xz, x) != x) {
            continue;
          }
          if (ext.mul(z, x, z) == z) {
            found.push_back(z);
          }
        }
        std::vector<BrElem> predicted;
        if (x.is_zero()) {
          predicted.push_back(x);
        } else {
          for (Element t : m.inverses_of(x.element())) {
            predicted.emplace_back(t, inverse(x.pelem()));
          }
          std::sort(predicted.begin(), predicted.end());
        }
        if (found != predicted) {
          r.fail({ext.render(x)},
                 render_all(ext, found),
                 render_all(ext, predicted));
        }
        auto const y = ext.inverse_of(x);
        if (y.has_value() != !found.empty()
            || (y && !std::binary_search(found.begin(), found.end(), *y))) {
          r.fail({ext.render(x)},
                 found.empty() ? "none" : "one of " + render_all(ext, found),
                 y ? ext.render(*y) : "none");
        }
        all_regular = all_regular && !found.empty();
        all_unique  = all_unique && found.size() == 1;
      }
      if (all_regular != m.is_regular()) {
        r.fail({"regular"}, yes_no(all_regular), yes_no(m.is_regular()));
      }
      if (all_unique != m.is_inverse_monoid()) {
        r.fail({"inverse"}, yes_no(all_unique), yes_no(m.is_inverse_monoid()));
      }
      r.details["regular"] = all_regular;
      r.details["inverse"] = all_unique;
      r.verdict = all_unique ? "inverse" : (all_regular ? "regular" : "not regular");
    }

    ////////////////////////////////////////////////////////////////////////
    // green
    ////////////////////////////////////////////////////////////////////////

    constexpr std::array<Green, 5> relations
        = {Green::L, Green::R, Green::H, Green::D, Green::J};

    // Bounded reachability inside a fragment: left[j] holds every i with
    // f[i] = r * f[j] for some multiplier r, right[j] the same for f[j] * r.
    struct Reach {
      std::vector<Bits> left, right;

      Reach(Extension const& ext, Fragment const& f, Fragment const& mult)
          : left(f.size(), Bits(f.size())), right(f.size(), Bits(f.size())) {
        for (std::size_t j = 0; j < f.size(); ++j) {
          for (auto const& r : mult) {
            if (auto i = f.index_of(ext.mul(r, f[j]))) {
              left[j].set(*i);
            }
            if (auto i = f.index_of(ext.mul(f[j], r))) {
              right[j].set(*i);
            }
          }
        }
      }

      bool l(std::size_t i, std::size_t j) const {
        return left[j][i] && left[i][j];
      }
      bool r(std::size_t i, std::size_t j) const {
        return right[j][i] && right[i][j];
      }
    };

    // Some r, q in mult with r * from * q = to.
    bool two_sided(Extension const& ext,
                   Fragment const&  mult,
                   BrElem const&    from,
                   BrElem const&    to) {
      std::set<BrElem> left;
      for (auto const& r : mult) {
        left.insert(ext.mul(r, from));
      }
      for (auto const& a : left) {
        if (a.is_zero()) {
          if (to.is_zero()) {
            return true;
          }
          continue;
        }
        for (auto const& q : mult) {
          if (ext.mul(a, q) == to) {
            return true;
          }
        }
      }
      return false;
    }

    void run_green(Extension const&   ext,
                   SuiteParams const& p,
                   SuiteReport&       r) {
      Fragment const    f(ext, p.pair_bound());
      Fragment const    mult(ext, p.witness_bound());
      Reach const       reach(ext, f, mult);
      std::size_t const n = f.size();

      auto l_ok = [&](BrElem const& x, BrElem const& y) {
        auto w = ext.l_witness(x, y);
        return w && ext.mul(w->first, y) == x && ext.mul(w->second, x) == y;
      };
      auto r_ok = [&](BrElem const& x, BrElem const& y) {
        auto w = ext.r_witness(x, y);
        return w && ext.mul(y, w->first) == x && ext.mul(x, w->second) == y;
      };

      std::array<std::vector<std::pair<std::size_t, std::size_t>>, 5> negative;
      std::array<std::uint64_t, 5> positive{};
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          BrElem const& x = f[i];
          BrElem const& y = f[j];
          for (std::size_t k = 0; k < relations.size(); ++k) {
            Green const rel = relations[k];
            if (!ext.green(rel, x, y)) {
              negative[k].emplace_back(i, j);
              continue;
            }
            ++r.cases;
            ++positive[k];
            bool ok = true;
            if (x.is_zero() || y.is_zero()) {
              ok = x == y;
            } else if (rel == Green::L) {
              ok = l_ok(x, y);
            } else if (rel == Green::R) {
              ok = r_ok(x, y);
            } else if (rel == Green::H) {
              ok = l_ok(x, y) && r_ok(x, y);
            } else if (rel == Green::D) {
              auto z = ext.d_middle(x, y);
              ok     = z && l_ok(x, *z) && r_ok(*z, y);
            } else {
              auto [a, b] = ext.zero_simple_witness(x, y);
              auto [c, d] = ext.zero_simple_witness(y, x);
              ok = ext.mul(a, y, b) == x && ext.mul(c, x, d) == y;
            }
            if (!ok) {
              r.fail({std::string(to_string(rel)), ext.render(x), ext.render(y)},
                     "witness reproduces both elements",
                     "witness missing or wrong");
            }
          }
        }
      }

      // D within the bound: some middle element of the pair fragment that is
      // L-reachable from x and R-reachable to y.
      std::vector<Bits> d_reach(n, Bits(n));
      {
        std::vector<Bits> r_rows(n, Bits(n));
        for (std::size_t z = 0; z < n; ++z) {
          for (std::size_t j = 0; j < n; ++j) {
            r_rows[z][j] = reach.r(z, j);
          }
        }
        for (std::size_t i = 0; i < n; ++i) {
          for (std::size_t z = 0; z < n; ++z) {
            if (reach.l(i, z)) {
              d_reach[i] |= r_rows[z];
            }
          }
        }
      }

      std::array<std::uint64_t, 5> sampled{};
      for (std::size_t k = 0; k < relations.size(); ++k) {
        Green const rel  = relations[k];
        auto const  pick = sample_indices(
            negative[k].size(), p.negative_samples, p.seed + k);
        for (std::size_t s : pick) {
          auto const [i, j] = negative[k][s];
          ++r.cases;
          ++sampled[k];
          bool related = false;
          switch (rel) {
            case Green::L: related = reach.l(i, j); break;
            case Green::R: related = reach.r(i, j); break;
            case Green::H: related = reach.l(i, j) && reach.r(i, j); break;
            case Green::D: related = d_reach[i][j]; break;
            case Green::J:
              related = two_sided(ext, mult, f[j], f[i])
                        && two_sided(ext, mult, f[i], f[j]);
              break;
          }
          if (related) {
            r.fail({std::string(to_string(rel)), ext.render(f[i]),
                    ext.render(f[j])},
                   "no witness within the bound",
                   "witness found");
          }
        }
      }

      // H-classes and D-classes seen through bounded witnesses.
      bool combinatorial = true;
      bool bisimple      = true;
      for (std::size_t i = 1; i < n; ++i) {
        for (std::size_t j = 1; j < n; ++j) {
          combinatorial = combinatorial
                          && (i == j || !(reach.l(i, j) && reach.r(i, j)));
          bisimple = bisimple && d_reach[i][j];
        }
      }
      FiniteMonoid const& m = ext.monoid();
      if (combinatorial != m.is_combinatorial()) {
        r.fail({"combinatorial"}, yes_no(combinatorial),
               yes_no(m.is_combinatorial()));
      }
      if (bisimple != m.is_bisimple()) {
        r.fail({"0-bisimple"}, yes_no(bisimple), yes_no(m.is_bisimple()));
      }

      nlohmann::json counts = nlohmann::json::object();
      for (std::size_t k = 0; k < relations.size(); ++k) {
        counts[std::string(to_string(relations[k]))]
            = {{"positive", positive[k]},
               {"negative", negative[k].size()},
               {"sampled", sampled[k]}};
      }
      r.details["fragment_size"]  = n;
      r.details["witness_bound"]  = p.witness_bound();
      r.details["relations"]      = counts;
      r.details["combinatorial"]  = combinatorial;
      r.details["zero_bisimple"]  = bisimple;
    }

    ////////////////////////////////////////////////////////////////////////
    // zero_simple
    ////////////////////////////////////////////////////////////////////////

    void run_zero_simple(Extension const&   ext,
                         SuiteParams const& p,
                         SuiteReport&       r) {
      Fragment const f(ext, p.pair_bound());
      for (auto it = f.begin() + 1; it != f.end(); ++it) {
        for (auto jt = f.begin() + 1; jt != f.end(); ++jt) {
          ++r.cases;
          auto const [x, y] = ext.zero_simple_witness(*it, *jt);
          BrElem const got  = ext.mul(x, *jt, y);
          if (got != *it) {
            r.fail({ext.render(*it), ext.render(*jt)},
                   ext.render(*it),
                   ext.render(got));
          }
        }
      }
      r.verdict = "0-simple";
    }

    ////////////////////////////////////////////////////////////////////////
    // quotient
    ////////////////////////////////////////////////////////////////////////

    void run_quotient(Extension const&   ext,
                      SuiteParams const& p,
                      SuiteReport&       r) {
      Fragment const f(ext, p.pair_bound());
      for (auto const& x : f) {
        for (auto const& y : f) {
          ++r.cases;
          PElem const lhs = ext.quotient(ext.mul(x, y));
          PElem const rhs = multiply(ext.quotient(x), ext.quotient(y));
          if (lhs != rhs) {
            r.fail({ext.render(x), ext.render(y)},
                   to_string(rhs),
                   to_string(lhs));
          }
        }
      }
      std::map<PElem, std::size_t> image;
      for (auto const& x : f) {
        ++image[ext.quotient(x)];
      }
      for (auto const& q : f.pelems()) {
        ++r.cases;
        if (!image.count(q)) {
          r.fail({to_string(q)}, "in the image", "missing");
        }
      }
      bool nontrivial = false;
      for (auto const& [q, count] : image) {
        nontrivial = nontrivial || count > 1;
      }
      bool const simple = ext.monoid().size() == 1;
      if (simple == nontrivial) {
        r.fail({"slice congruence nontrivial"},
               yes_no(!simple),
               yes_no(nontrivial));
      }
      r.details["image_size"] = image.size();
      r.verdict = simple ? "congruence-simple" : "slice congruence is proper";
    }

    ////////////////////////////////////////////////////////////////////////
    // e_unitary
    ////////////////////////////////////////////////////////////////////////

    void run_e_unitary(Extension const&   ext,
                       SuiteParams const& p,
                       SuiteReport&       r) {
      Fragment const      f(ext, p.triple_bound());
      std::vector<BrElem> idem;
      for (auto const& x : f) {
        if (!x.is_zero() && ext.mul(x, x) == x) {
          idem.push_back(x);
        }
      }
      bool commute = true;
      for (auto const& e : idem) {
        for (auto const& g : idem) {
          ++r.cases;
          commute = commute && ext.mul(e, g) == ext.mul(g, e);
        }
      }
      bool regular = true;
      for (auto const& x : f) {
        bool has = false;
        for (auto const& z : f) {
          ++r.cases;
          if (ext.mul(x, z, x) == x && ext.mul(z, x, z) == z) {
            has = true;
            break;
          }
        }
        regular = regular && has;
      }
      std::optional<std::array<BrElem, 3>> violation;
      for (auto const& e : idem) {
        for (auto it = f.begin() + 1; it != f.end() && !violation; ++it) {
          ++r.cases;
          BrElem const es = ext.mul(e, *it);
          if (!es.is_zero() && ext.mul(es, es) == es
              && ext.mul(*it, *it) != *it) {
            violation = {e, *it, es};
          }
        }
      }
      bool const oracle = commute && regular && !violation;
      bool const actual = ext.is_zero_e_unitary();
      if (oracle != actual) {
        r.fail({"0-E-unitary"}, yes_no(oracle), yes_no(actual));
      }
      r.details["inverse"] = commute && regular;
      if (violation) {
        r.details["violation"] = {{"e", ext.render((*violation)[0])},
                                  {"s", ext.render((*violation)[1])},
                                  {"es", ext.render((*violation)[2])}};
      }
      r.verdict = oracle ? "0-E-unitary"
                         : (commute && regular ? "not 0-E-unitary"
                                               : "not 0-E-unitary (not inverse)");
    }

    ////////////////////////////////////////////////////////////////////////
    // center_units
    ////////////////////////////////////////////////////////////////////////

    void run_center_units(Extension const&   ext,
                          SuiteParams const& p,
                          SuiteReport&       r) {
      Fragment const f(ext, p.pair_bound());
      BrElem const   one     = ext.identity();
      std::size_t    units   = 0;
      std::size_t    central = 0;
      for (auto const& x : f) {
        r.cases += 2;
        bool unit = false, centre = true;
        for (auto const& y : f) {
          BrElem const xy = ext.mul(x, y);
          BrElem const yx = ext.mul(y, x);
          unit            = unit || (xy == one && yx == one);
          centre          = centre && xy == yx;
        }
        units += unit;
        central += centre;
        if (unit != ext.is_unit(x)) {
          r.fail({"unit", ext.render(x)}, yes_no(unit), yes_no(!unit));
        }
        if (centre != ext.is_in_center(x)) {
          r.fail({"center", ext.render(x)}, yes_no(centre), yes_no(!centre));
        }
      }
      r.details["units"]   = units;
      r.details["central"] = central;
    }

    ////////////////////////////////////////////////////////////////////////
    // solver
    ////////////////////////////////////////////////////////////////////////

    std::size_t slice_count(std::vector<BrElem> const& xs) {
      std::set<PElem> slices;
      for (auto const& x : xs) {
        slices.insert(x.pelem());
      }
      return slices.size();
    }

    void run_solver(Extension const&   ext,
                    SuiteParams const& p,
                    SuiteReport&       r) {
      Fragment const f(ext, p.triple_bound());
      Fragment const search(ext, p.solver_bound());
      std::size_t    max_slices = 0, total = 0;
      std::size_t    left_over_right_bound = 0;
      for (auto at = f.begin() + 1; at != f.end(); ++at) {
        BrElem const&                           a = *at;
        std::vector<std::vector<BrElem>>        right(f.size()), left(f.size());
        for (auto const& x : search) {
          if (auto i = f.index_of(ext.mul(a, x))) {
            right[*i].push_back(x);
          }
          if (auto i = f.index_of(ext.mul(x, a))) {
            left[*i].push_back(x);
          }
        }
        for (std::size_t bi = 1; bi < f.size(); ++bi) {
          BrElem const& b = f[bi];
          for (bool on_right : {true, false}) {
            ++r.cases;
            auto const got
                = on_right ? ext.solve_right(a, b) : ext.solve_left(a, b);
            auto const& expected = on_right ? right[bi] : left[bi];
            std::string const label = on_right ? "right" : "left";
            for (auto const& x : got) {
              if (!search.contains(x)) {
                r.fail({label, ext.render(a), ext.render(b)},
                       "solutions inside the search fragment",
                       ext.render(x));
              }
            }
            if (got != expected) {
              r.fail({label, ext.render(a), ext.render(b)},
                     render_all(ext, expected),
                     render_all(ext, got));
            }
            std::size_t const slices = slice_count(got);
            std::size_t const bound
                = (on_right ? a.right() : a.left()).size() + 1;
            if (slices > bound) {
              r.fail({label, ext.render(a), ext.render(b)},
                     "at most " + std::to_string(bound) + " slices",
                     std::to_string(slices));
            }
            if (!on_right && slices > a.right().size() + 1) {
              ++left_over_right_bound;
            }
            max_slices = std::max(max_slices, slices);
            total += got.size();
          }
        }
      }
      r.details["search_bound"]      = p.solver_bound();
      r.details["solutions"]         = total;
      r.details["max_slices"]        = max_slices;
      r.details["left_sets_beyond_right_word_bound"] = left_over_right_bound;
    }

    ////////////////////////////////////////////////////////////////////////
    // metric
    ////////////////////////////////////////////////////////////////////////

    void check_metric(Extension const&   ext,
                      Fragment const&    f,
                      SliceMetric const& d,
                      std::string const& name,
                      SuiteReport&       r) {
      constexpr double  eps = 1e-12;
      std::size_t const n   = f.size();
      std::vector<double> dist(n * n);
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          dist[i * n + j] = d(f[i], f[j]);
        }
      }
      auto at = [&](std::size_t i, std::size_t j) { return dist[i * n + j]; };
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          ++r.cases;
          double const dij = at(i, j);
          if ((dij == 0.0) != (i == j) || dij < 0.0 || dij > 1.0 + eps) {
            r.fail({name, ext.render(f[i]), ext.render(f[j])},
                   i == j ? "0" : "in (0, 1]",
                   std::to_string(dij));
          }
          if (std::abs(dij - at(j, i)) > eps) {
            r.fail({name, ext.render(f[i]), ext.render(f[j])},
                   std::to_string(at(j, i)),
                   std::to_string(dij));
          }
          if ((f[i].is_zero() != f[j].is_zero()) && dij != 1.0) {
            r.fail({name, ext.render(f[i]), ext.render(f[j])},
                   "1",
                   std::to_string(dij));
          }
          if (!f[i].is_zero() && dij < 1.0
              && (f[j].is_zero() || f[j].pelem() != f[i].pelem())) {
            r.fail({name, ext.render(f[i]), ext.render(f[j])},
                   "ball of radius 1 inside the slice",
                   std::to_string(dij));
          }
        }
      }
      std::uint64_t triangles = 0;
      for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
          double const dij = at(i, j);
          for (std::size_t k = 0; k < n; ++k) {
            ++triangles;
            if (dij > at(i, k) + at(k, j) + eps) {
              r.fail({name, ext.render(f[i]), ext.render(f[k]),
                      ext.render(f[j])},
                     "d(x,z) <= d(x,y) + d(y,z)",
                     std::to_string(dij) + " > " + std::to_string(at(i, k))
                         + " + " + std::to_string(at(k, j)));
            }
          }
        }
      }
      r.cases += triangles;
    }

    void run_metric(Extension const&   ext,
                    SuiteParams const& p,
                    SuiteReport&       r) {
      Fragment const      f(ext, p.pair_bound());
      FiniteMonoid const& m = ext.monoid();
      check_metric(ext, f, SliceMetric::discrete(m), "discrete", r);
      check_metric(ext, f, SliceMetric::index_gap(m), "index_gap", r);
      ++r.cases;
      bool rejected = false;
      try {
        std::vector<std::vector<double>> wide(m.size(),
                                              std::vector<double>(m.size(), 2.0));
        for (std::size_t i = 0; i < m.size(); ++i) {
          wide[i][i] = 0.0;
        }
        SliceMetric const unused(m, wide);
        (void) unused;
      } catch (Error const&) {
        rejected = true;
      }
      if (!rejected && m.size() > 1) {
        r.fail({"distance 2 on S"}, "rejected", "accepted");
      }
      r.details["fragment_size"] = f.size();
    }

    ////////////////////////////////////////////////////////////////////////
    // embeddings
    ////////////////////////////////////////////////////////////////////////

    void run_embeddings(Extension const&   ext,
                        SuiteParams const& p,
                        SuiteReport&       r) {
      FiniteMonoid const& m = ext.monoid();
      Fragment const      f(ext, p.pair_bound());
      for (auto const& w : enumerate_words(ext.alphabet(), p.pair_bound())) {
        for (Element s = 0; s < m.size(); ++s) {
          for (Element t = 0; t < m.size(); ++t) {
            ++r.cases;
            BrElem const lhs = ext.mul(ext.embed_s(w, s), ext.embed_s(w, t));
            BrElem const rhs = ext.embed_s(w, m.product(s, t));
            if (lhs != rhs) {
              r.fail({ext.render(ext.embed_s(w, s)), ext.render(ext.embed_s(w, t))},
                     ext.render(rhs),
                     ext.render(lhs));
            }
          }
        }
      }
      for (Element e : m.idempotents()) {
        for (auto const& a : f.pelems()) {
          for (auto const& b : f.pelems()) {
            ++r.cases;
            BrElem const lhs = ext.mul(ext.embed_p(e, a), ext.embed_p(e, b));
            BrElem const rhs = ext.embed_p(e, multiply(a, b));
            if (lhs != rhs) {
              r.fail({ext.render(ext.embed_p(e, a)), ext.render(ext.embed_p(e, b))},
                     ext.render(rhs),
                     ext.render(lhs));
            }
          }
        }
      }
      for (Element s = 0; s < m.size(); ++s) {
        if (m.is_idempotent(s)) {
          continue;
        }
        ++r.cases;
        bool thrown = false;
        try {
          (void) ext.embed_p(s, PElem::one());
        } catch (Error const&) {
          thrown = true;
        }
        BrElem const x(s, PElem::one());
        if (!thrown || ext.mul(x, x) == x) {
          r.fail({ext.render(x)}, "rejected, square leaves the copy",
                 thrown ? "square stays" : "accepted");
        }
      }
      // A slice is closed under the product exactly when its words agree.
      for (auto it = f.pelems().begin() + 1; it != f.pelems().end(); ++it) {
        bool closed = true;
        for (Element s = 0; s < m.size(); ++s) {
          for (Element t = 0; t < m.size(); ++t) {
            ++r.cases;
            BrElem const xy = ext.mul(BrElem(s, *it), BrElem(t, *it));
            closed = closed && !xy.is_zero() && xy.pelem() == *it;
          }
        }
        if (closed != (it->left() == it->right())) {
          r.fail({to_string(*it)},
                 yes_no(it->left() == it->right()),
                 yes_no(closed));
        }
      }
    }

    ////////////////////////////////////////////////////////////////////////
    // suffix_growth
    ////////////////////////////////////////////////////////////////////////

    void run_suffix_growth(Extension const&   ext,
                           SuiteParams const& p,
                           SuiteReport&       r) {
      Fragment const f(ext, p.pair_bound());
      std::size_t    nonzero = 0;
      for (auto x = f.begin() + 1; x != f.end(); ++x) {
        for (auto y = f.begin() + 1; y != f.end(); ++y) {
          ++r.cases;
          BrElem const c = ext.mul(*x, *y);
          if (c.is_zero()) {
            continue;
          }
          ++nonzero;
          if (!is_suffix(x->left(), c.left())
              || !is_suffix(y->right(), c.right())) {
            r.fail({ext.render(*x), ext.render(*y)},
                   "left word of x and right word of y are suffixes",
                   ext.render(c));
          }
        }
      }
      r.details["nonzero_products"] = nonzero;
    }

    ////////////////////////////////////////////////////////////////////////
    // translation
    ////////////////////////////////////////////////////////////////////////

    void run_translation(Extension const&   ext,
                         SuiteParams const& p,
                         SuiteReport&       r) {
      Fragment const f(ext, p.pair_bound());
      Element const  one = ext.monoid().identity();
      std::vector<std::pair<Word, Word>> pairs;
      if (ext.alphabet().size() >= 2) {
        pairs = {{Word{}, Word{}}, {Word{0}, Word{1}}, {Word{0, 1}, Word{0}}};
      } else {
        pairs = {{Word{}, Word{}}, {Word{0}, Word{0}}, {Word{0, 0}, Word{0}}};
      }
      nlohmann::json used = nlohmann::json::array();
      for (auto const& [u, v] : pairs) {
        used.push_back({to_string(u), to_string(v)});
        BrElem const left_f(one, PElem(u, Word{}));
        BrElem const right_f(one, PElem(Word{}, v));
        BrElem const left_h(one, PElem(Word{}, u));
        BrElem const right_h(one, PElem(v, Word{}));
        std::string const tag = to_string(u) + "," + to_string(v);
        for (auto const& x : f) {
          ++r.cases;
          BrElem const y = ext.mul(left_f, x, right_f);
          BrElem const back = ext.mul(left_h, y, right_h);
          BrElem const shape
              = x.is_zero() ? x
                            : BrElem(x.element(),
                                     PElem(concat(x.left(), u),
                                           concat(x.right(), v)));
          if (ext.translate(u, v, x) != y || y != shape) {
            r.fail({tag, ext.render(x)}, ext.render(shape),
                   ext.render(ext.translate(u, v, x)));
          }
          if (ext.untranslate(u, v, y) != back || back != x) {
            r.fail({tag, ext.render(x)}, ext.render(x), ext.render(back));
          }
          if (!ext.in_translated_copy(u, v, y)) {
            r.fail({tag, ext.render(y)}, "inside the copy", "outside");
          }
        }
        for (auto const& y : f) {
          if (!ext.in_translated_copy(u, v, y)) {
            continue;
          }
          ++r.cases;
          BrElem const there = ext.mul(left_f, ext.mul(left_h, y, right_h), right_f);
          if (there != y) {
            r.fail({tag, ext.render(y)}, ext.render(y), ext.render(there));
          }
        }
      }
      r.details["pairs"] = used;
    }

    ////////////////////////////////////////////////////////////////////////
    // bicyclic
    ////////////////////////////////////////////////////////////////////////

    void run_bicyclic(Extension const& ext, SuiteParams const&, SuiteReport& r) {
      Element const one = ext.monoid().identity();
      for (std::size_t k = 0; k <= 4; ++k) {
        for (std::size_t l = 0; l <= 4; ++l) {
          for (std::size_t m = 0; m <= 4; ++m) {
            for (std::size_t n = 0; n <= 4; ++n) {
              ++r.cases;
              std::size_t const c = std::min(l, m);
              PElem const expected(power(0, k + m - c), power(0, l + n - c));
              PElem const x(power(0, k), power(0, l));
              PElem const y(power(0, m), power(0, n));
              PElem const got = multiply(x, y);
              BrElem const lifted
                  = ext.mul(BrElem(one, x), BrElem(one, y));
              if (got != expected || lifted != BrElem(one, expected)) {
                r.fail({to_string(x), to_string(y)},
                       to_string(expected),
                       to_string(got) + " / " + ext.render(lifted));
              }
            }
          }
        }
      }
    }

    std::vector<Suite> const& suites() {
      static std::vector<Suite> const table = {
          {{"associativity",
            "the extension product is associative",
            {"associativity"}},
           run_associativity},
          {{"idempotents",
            "(s, u^-1 v) is idempotent iff s is idempotent and u = v",
            {"idempotent characterisation"}},
           run_idempotents},
          {{"commuting_idempotents",
            "idempotents commute iff they commute in S",
            {"commuting idempotents"}},
           run_commuting_idempotents},
          {{"inverses",
            "the inverses of (s, u^-1 v) are (t, v^-1 u) with t inverse to s",
            {"inverse elements", "regularity transfer", "inverse-semigroup transfer"}},
           run_inverses},
          {{"green",
            "L, R, H, D follow the S-side relation and the right word, left "
            "word, both words or neither",
            {"Green's relations", "combinatorial iff S is", "0-bisimple iff S is bisimple"}},
           run_green},
          {{"zero_simple",
            "every nonzero element divides every other on both sides",
            {"0-simplicity"}},
           run_zero_simple},
          {{"quotient",
            "forgetting the S-part is a homomorphism onto the polycyclic monoid",
            {"slice congruence"}},
           run_quotient},
          {{"e_unitary",
            "0-E-unitary iff S is inverse and E-unitary and the kernel of theta "
            "is E(S)",
            {"0-E-unitary criterion"}},
           run_e_unitary},
          {{"center_units",
            "the centre is (s, 1) with s central and fixed by theta, the units "
            "are (s, 1) with s a unit",
            {"centre", "group of units"}},
           run_center_units},
          {{"solver",
            "a*x = b and x*a = b have finitely many solutions in boundedly many "
            "slices",
            {"finite solution sets", "slice bound of solution sets"}},
           run_solver},
          {{"metric",
            "the slice metric built from a metric on S bounded by 1",
            {"slice metric"}},
           run_metric},
          {{"embeddings",
            "S embeds onto each slice (s, w^-1 w) and the polycyclic monoid "
            "embeds at each idempotent",
            {"embedded copies"}},
           run_embeddings},
          {{"suffix_growth",
            "a nonzero product keeps the outer words as suffixes",
            {"suffix growth"}},
           run_suffix_growth},
          {{"translation",
            "two-sided translation by (1, u^-1) and (1, v) is a bijection onto "
            "the copy with words ending in u and v",
            {"translation bijection"}},
           run_translation},
          {{"bicyclic",
            "on one letter the product follows the bicyclic min formula",
            {"bicyclic formula"}},
           run_bicyclic},
      };
      return table;
    }

  }  // namespace

  std::vector<SuiteInfo> const& suite_table() {
    static std::vector<SuiteInfo> const table = [] {
      std::vector<SuiteInfo> out;
      for (auto const& s : suites()) {
        out.push_back(s.info);
      }
      return out;
    }();
    return table;
  }

  std::vector<std::string_view> const& verified_results() {
    static std::vector<std::string_view> const results = {
        "associativity",
        "idempotent characterisation",
        "commuting idempotents",
        "embedded copies",
        "inverse elements",
        "regularity transfer",
        "inverse-semigroup transfer",
        "suffix growth",
        "Green's relations",
        "combinatorial iff S is",
        "0-bisimple iff S is bisimple",
        "0-simplicity",
        "slice congruence",
        "0-E-unitary criterion",
        "centre",
        "group of units",
        "finite solution sets",
        "slice bound of solution sets",
        "slice metric",
        "translation bijection",
        "bicyclic formula",
    };
    return results;
  }

  void check_result_map() {
    std::map<std::string_view, std::size_t> owners;
    for (auto const& s : suite_table()) {
      if (s.results.empty()) {
        throw std::logic_error("suite " + std::string(s.name)
                               + " verifies nothing");
      }
      for (auto res : s.results) {
        ++owners[res];
      }
    }
    for (auto res : verified_results()) {
      auto it = owners.find(res);
      if (it == owners.end() || it->second != 1) {
        throw std::logic_error("result '" + std::string(res)
                               + "' is not owned by exactly one suite");
      }
      owners.erase(it);
    }
    if (!owners.empty()) {
      throw std::logic_error("suite result '"
                             + std::string(owners.begin()->first)
                             + "' is not a known result");
    }
  }

  bool is_suite(std::string_view name) {
    for (auto const& s : suites()) {
      if (s.info.name == name) {
        return true;
      }
    }
    return false;
  }

  SuiteReport run_suite(Extension const&   ext,
                        std::string const& context,
                        std::string_view   name,
                        SuiteParams const& params) {
    for (auto const& s : suites()) {
      if (s.info.name != name) {
        continue;
      }
      SuiteReport r;
      r.suite       = std::string(s.info.name);
      r.anchor      = std::string(s.info.anchor);
      r.context     = context;
      auto const t0 = std::chrono::steady_clock::now();
      try {
        s.run(ext, params, r);
      } catch (std::exception const& e) {
        r.fail({"suite"}, "completion", std::string("exception: ") + e.what());
      }
      r.ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                 std::chrono::steady_clock::now() - t0)
                 .count();
      return r;
    }
    throw Error("unknown suite '" + std::string(name) + "'");
  }

  std::vector<SuiteReport> run_suites(Extension const&   ext,
                                      std::string const& context,
                                      SuiteParams const& params) {
    std::vector<SuiteReport> out;
    for (auto const& s : suites()) {
      out.push_back(run_suite(ext, context, s.info.name, params));
    }
    return out;
  }

  bool all_passed(std::vector<SuiteReport> const& reports) {
    return std::all_of(reports.begin(), reports.end(),
                       [](auto const& r) { return r.passed(); });
  }

}  // namespace polyext::verify
