#include "polyext/extension.hpp"

#include <algorithm>
#include <cmath>

#include "grammar.hpp"

namespace polyext {

  BrElem::BrElem(Element s, PElem p) : _zero(false), _s(s), _p(std::move(p)) {
    if (_p.is_zero()) {
      throw Error("the zero of the polycyclic monoid cannot appear in a pair");
    }
  }

  std::strong_ordering BrElem::operator<=>(BrElem const& other) const noexcept {
    if (_zero || other._zero) {
      return !_zero <=> !other._zero;
    }
    if (auto c = _p <=> other._p; c != 0) {
      return c;
    }
    return _s <=> other._s;
  }

  Extension::Extension(FiniteMonoid monoid, Theta theta, Alphabet alphabet)
      : _monoid(std::move(monoid)),
        _theta(std::move(theta)),
        _alphabet(alphabet) {
    if (auto v = validate_theta(_monoid, _theta)) {
      throw InvalidTheta(*v);
    }
  }

  bool Extension::contains(BrElem const& x) const noexcept {
    return x.is_zero()
           || (_monoid.contains(x.element()) && x.pelem().fits(_alphabet));
  }

  void Extension::check(BrElem const& x) const {
    if (x.is_zero()) {
      return;
    }
    if (!_monoid.contains(x.element())) {
      throw Error("element index " + std::to_string(x.element())
                  + " is outside " + _monoid.name());
    }
    check_word(_alphabet, x.left());
    check_word(_alphabet, x.right());
  }

  BrElem Extension::identity() const {
    return BrElem(_monoid.identity(), PElem::one());
  }

  BrElem Extension::mul(BrElem const& x, BrElem const& y) const {
    check(x);
    check(y);
    if (x.is_zero() || y.is_zero()) {
      return BrElem::zero();
    }
    Element const s = x.element(), t = y.element();
    if (auto u = strip_suffix(y.left(), x.right())) {
      return BrElem(_monoid.product(_theta.pow(u->size(), s), t),
                    PElem(concat(*u, x.left()), y.right()));
    }
    if (auto v = strip_suffix(x.right(), y.left())) {
      return BrElem(_monoid.product(s, _theta.pow(v->size(), t)),
                    PElem(x.left(), concat(*v, y.right())));
    }
    return BrElem::zero();
  }

  bool Extension::is_idempotent(BrElem const& x) const {
    check(x);
    return x.is_zero()
           || (_monoid.is_idempotent(x.element()) && x.left() == x.right());
  }

  std::optional<BrElem> Extension::inverse_of(BrElem const& x) const {
    check(x);
    if (x.is_zero()) {
      return x;
    }
    auto const candidates = _monoid.inverses_of(x.element());
    if (candidates.empty()) {
      return std::nullopt;
    }
    return BrElem(candidates.front(), inverse(x.pelem()));
  }

  bool Extension::green(Green rel, BrElem const& x, BrElem const& y) const {
    check(x);
    check(y);
    if (x.is_zero() || y.is_zero()) {
      return x.is_zero() && y.is_zero();
    }
    Element const s = x.element(), t = y.element();
    switch (rel) {
      case Green::L:
        return _monoid.green(Green::L, s, t) && x.right() == y.right();
      case Green::R:
        return _monoid.green(Green::R, s, t) && x.left() == y.left();
      case Green::H:
        return _monoid.green(Green::H, s, t) && x.pelem() == y.pelem();
      case Green::D: return _monoid.green(Green::D, s, t);
      case Green::J: return true;
    }
    return false;
  }

  namespace {
    // Least r with r * t = s, or s = t * r when on_right.
    std::optional<Element> divide(FiniteMonoid const& m,
                                  Element             s,
                                  Element             t,
                                  bool                on_right) {
      auto const r = on_right ? m.solve_right(t, s) : m.solve_left(t, s);
      if (r.empty()) {
        return std::nullopt;
      }
      return r.front();
    }
  }  // namespace

  std::optional<std::pair<BrElem, BrElem>>
  Extension::l_witness(BrElem const& x, BrElem const& y) const {
    if (!green(Green::L, x, y)) {
      return std::nullopt;
    }
    if (x.is_zero()) {
      return std::pair{identity(), identity()};
    }
    auto const r = divide(_monoid, x.element(), y.element(), false);
    auto const q = divide(_monoid, y.element(), x.element(), false);
    return std::pair{BrElem(*r, PElem(x.left(), y.left())),
                     BrElem(*q, PElem(y.left(), x.left()))};
  }

  std::optional<std::pair<BrElem, BrElem>>
  Extension::r_witness(BrElem const& x, BrElem const& y) const {
    if (!green(Green::R, x, y)) {
      return std::nullopt;
    }
    if (x.is_zero()) {
      return std::pair{identity(), identity()};
    }
    auto const r = divide(_monoid, x.element(), y.element(), true);
    auto const q = divide(_monoid, y.element(), x.element(), true);
    return std::pair{BrElem(*r, PElem(y.right(), x.right())),
                     BrElem(*q, PElem(x.right(), y.right()))};
  }

  std::optional<BrElem> Extension::d_middle(BrElem const& x,
                                            BrElem const& y) const {
    if (x.is_zero() || y.is_zero() || !green(Green::D, x, y)) {
      return std::nullopt;
    }
    for (Element r = 0; r < _monoid.size(); ++r) {
      if (_monoid.green(Green::L, x.element(), r)
          && _monoid.green(Green::R, r, y.element())) {
        return BrElem(r, PElem(y.left(), x.right()));
      }
    }
    return std::nullopt;
  }

  std::pair<BrElem, BrElem>
  Extension::zero_simple_witness(BrElem const& a, BrElem const& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) {
      throw Error("zero_simple_witness requires nonzero arguments");
    }
    Word const    u{Letter(0)};
    Element const twist = _theta.pow(u.size(), b.element());
    BrElem const  x(_monoid.unit_inverse(twist),
                   PElem(a.left(), concat(u, b.left())));
    BrElem const  y(a.element(), PElem(concat(u, b.right()), a.right()));
    return {x, y};
  }

  PElem Extension::quotient(BrElem const& x) const {
    check(x);
    return x.is_zero() ? PElem::zero() : x.pelem();
  }

  bool Extension::is_in_center(BrElem const& x) const {
    check(x);
    if (x.is_zero()) {
      return true;
    }
    Element const s = x.element();
    return _monoid.is_central(s) && _theta(s) == s && x.pelem().is_one();
  }

  bool Extension::is_unit(BrElem const& x) const {
    check(x);
    return !x.is_zero() && _monoid.is_unit(x.element()) && x.pelem().is_one();
  }

  bool Extension::is_zero_e_unitary() const {
    if (!_monoid.is_inverse_monoid() || !_monoid.is_e_unitary()) {
      return false;
    }
    return _theta.fiber(_monoid.identity()) == _monoid.idempotents();
  }

  std::vector<BrElem> Extension::solve_right(BrElem const& a,
                                             BrElem const& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) {
      throw Error("solve_right requires nonzero arguments");
    }
    Element const       s = a.element(), t = b.element();
    std::vector<BrElem> result;
    for (PElem const& xi : polyext::solve_right(a.pelem(), b.pelem())) {
      if (auto u = strip_suffix(xi.left(), a.right())) {
        // (θ^|u|(s) x, ...) = (t, ...)
        for (Element x : _monoid.solve_right(_theta.pow(u->size(), s), t)) {
          result.emplace_back(x, xi);
        }
      } else {
        // a2 = v x1: (s θ^|v|(x), ...) = (t, ...)
        auto const v = strip_suffix(a.right(), xi.left());
        for (Element y : _monoid.solve_right(s, t)) {
          for (Element x : _theta.pow_fiber(v->size(), y)) {
            result.emplace_back(x, xi);
          }
        }
      }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::vector<BrElem> Extension::solve_left(BrElem const& a,
                                            BrElem const& b) const {
    check(a);
    check(b);
    if (a.is_zero() || b.is_zero()) {
      throw Error("solve_left requires nonzero arguments");
    }
    Element const       s = a.element(), t = b.element();
    std::vector<BrElem> result;
    for (PElem const& xi : polyext::solve_left(a.pelem(), b.pelem())) {
      if (auto u = strip_suffix(a.left(), xi.right())) {
        // (θ^|u|(x) s, ...) = (t, ...)
        for (Element y : _monoid.solve_left(s, t)) {
          for (Element x : _theta.pow_fiber(u->size(), y)) {
            result.emplace_back(x, xi);
          }
        }
      } else {
        // x2 = v a1: (x θ^|v|(s), ...) = (t, ...)
        auto const v = strip_suffix(xi.right(), a.left());
        for (Element x : _monoid.solve_left(_theta.pow(v->size(), s), t)) {
          result.emplace_back(x, xi);
        }
      }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  BrElem Extension::embed_s(Word const& w, Element s) const {
    BrElem x(s, PElem(w, w));
    check(x);
    return x;
  }

  BrElem Extension::embed_p(Element e, PElem const& p) const {
    if (!_monoid.contains(e) || !_monoid.is_idempotent(e)) {
      throw Error(_monoid.element_name(e) + " is not an idempotent of "
                  + _monoid.name());
    }
    if (p.is_zero()) {
      return BrElem::zero();
    }
    BrElem x(e, p);
    check(x);
    return x;
  }

  BrElem Extension::translate(Word const&   u,
                              Word const&   v,
                              BrElem const& x) const {
    Element const one = _monoid.identity();
    return mul(BrElem(one, PElem(u, Word{})), x, BrElem(one, PElem(Word{}, v)));
  }

  BrElem Extension::untranslate(Word const&   u,
                                Word const&   v,
                                BrElem const& y) const {
    Element const one = _monoid.identity();
    return mul(BrElem(one, PElem(Word{}, u)), y, BrElem(one, PElem(v, Word{})));
  }

  bool Extension::in_translated_copy(Word const&   u,
                                     Word const&   v,
                                     BrElem const& x) const {
    return x.is_zero() || (is_suffix(u, x.left()) && is_suffix(v, x.right()));
  }

  std::string Extension::render(BrElem const& x) const {
    if (x.is_zero()) {
      return "0";
    }
    return "(s" + std::to_string(x.element()) + "," + to_string(x.pelem())
           + ")";
  }

  BrElem Extension::parse(std::string_view text) const {
    detail::TextCursor cursor(text);
    cursor.skip_space();
    BrElem x = detail::read_element(cursor, *this);
    cursor.finish();
    return x;
  }

  std::vector<BrElem> Extension::parse_product(std::string_view text) const {
    detail::TextCursor  cursor(text);
    std::vector<BrElem> factors;
    cursor.skip_space();
    factors.push_back(detail::read_element(cursor, *this));
    cursor.skip_space();
    while (cursor.consume("*")) {
      cursor.skip_space();
      factors.push_back(detail::read_element(cursor, *this));
      cursor.skip_space();
    }
    cursor.finish();
    return factors;
  }

  ////////////////////////////////////////////////////////////////////////
  // SliceMetric
  ////////////////////////////////////////////////////////////////////////

  SliceMetric::SliceMetric(FiniteMonoid const&              m,
                           std::vector<std::vector<double>> distances)
      : _d(std::move(distances)) {
    std::size_t const n = m.size();
    if (_d.size() != n) {
      throw Error("distance matrix must have one row per element");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (_d[i].size() != n) {
        throw Error("distance matrix must be square");
      }
      for (std::size_t j = 0; j < n; ++j) {
        double const d = _d[i][j];
        if (!std::isfinite(d) || d < 0 || d > 1) {
          throw Error("distances on S must lie in [0, 1]; got "
                      + std::to_string(d));
        }
        if ((d == 0) != (i == j)) {
          throw Error("d(x, y) = 0 must hold exactly when x = y");
        }
        if (d != _d[j][i]) {
          throw Error("distance matrix is not symmetric");
        }
      }
    }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        for (std::size_t k = 0; k < n; ++k) {
          if (_d[i][k] > _d[i][j] + _d[j][k] + 1e-12) {
            throw Error("triangle inequality fails on S");
          }
        }
      }
    }
  }

  SliceMetric SliceMetric::discrete(FiniteMonoid const& m) {
    std::size_t const                n = m.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n, 1.0));
    for (std::size_t i = 0; i < n; ++i) {
      d[i][i] = 0.0;
    }
    return SliceMetric(m, std::move(d));
  }

  SliceMetric SliceMetric::index_gap(FiniteMonoid const& m) {
    std::size_t const                n = m.size();
    std::vector<std::vector<double>> d(n, std::vector<double>(n));
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) {
        d[i][j] = double(i > j ? i - j : j - i) / double(n);
      }
    }
    return SliceMetric(m, std::move(d));
  }

  double SliceMetric::operator()(BrElem const& x, BrElem const& y) const {
    if (x == y) {
      return 0.0;
    }
    if (x.is_zero() || y.is_zero() || x.pelem() != y.pelem()) {
      return 1.0;
    }
    return _d[x.element()][y.element()];
  }

}  // namespace polyext
