#include "polyext/monoid.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace polyext {

  std::string_view to_string(Green rel) noexcept {
    switch (rel) {
      case Green::L: return "L";
      case Green::R: return "R";
      case Green::H: return "H";
      case Green::D: return "D";
      case Green::J: return "J";
    }
    return "?";
  }

  std::optional<Green> parse_green(std::string_view name) noexcept {
    for (Green g : {Green::L, Green::R, Green::H, Green::D, Green::J}) {
      if (to_string(g) == name) {
        return g;
      }
    }
    return std::nullopt;
  }

  std::string MonoidViolation::describe() const {
    switch (kind) {
      case Kind::associativity:
        return "associativity fails at (" + std::to_string(x) + ","
               + std::to_string(y) + "," + std::to_string(z) + ")";
      case Kind::left_identity:
        return "left identity law fails at " + std::to_string(x);
      case Kind::right_identity:
        return "right identity law fails at " + std::to_string(x);
    }
    return "unknown violation";
  }

  std::optional<MonoidViolation> validate_monoid(Table const& table,
                                                 Element      identity) {
    std::size_t const n = table.size();
    if (n == 0) {
      throw Error("a monoid needs at least one element");
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (table[i].size() != n) {
        throw Error("table row " + std::to_string(i) + " has "
                    + std::to_string(table[i].size()) + " entries, expected "
                    + std::to_string(n));
      }
      for (std::size_t j = 0; j < n; ++j) {
        if (table[i][j] >= n) {
          throw Error("table entry (" + std::to_string(i) + ","
                      + std::to_string(j) + ") = "
                      + std::to_string(table[i][j]) + " is out of range");
        }
      }
    }
    if (identity >= n) {
      throw Error("identity " + std::to_string(identity) + " is out of range");
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        Element const xy = table[x][y];
        for (Element z = 0; z < n; ++z) {
          if (table[xy][z] != table[x][table[y][z]]) {
            return MonoidViolation{MonoidViolation::Kind::associativity, x, y,
                                   z};
          }
        }
      }
    }
    for (Element x = 0; x < n; ++x) {
      if (table[identity][x] != x) {
        return MonoidViolation{MonoidViolation::Kind::left_identity, x};
      }
      if (table[x][identity] != x) {
        return MonoidViolation{MonoidViolation::Kind::right_identity, x};
      }
    }
    return std::nullopt;
  }

  FiniteMonoid::FiniteMonoid(std::string              name,
                             Table                    table,
                             Element                  identity,
                             std::vector<std::string> names)
      : _name(std::move(name)),
        _table(std::move(table)),
        _identity(identity),
        _names(std::move(names)) {
    if (auto v = validate_monoid(_table, _identity)) {
      throw InvalidMonoid(*v);
    }
    std::size_t const n = size();
    if (!_names.empty()) {
      if (_names.size() != n) {
        throw Error("expected " + std::to_string(n) + " element names, got "
                    + std::to_string(_names.size()));
      }
      auto sorted = _names;
      std::sort(sorted.begin(), sorted.end());
      if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
        throw Error("element names must be distinct");
      }
    }

    _unit_inverse.assign(n, std::nullopt);
    for (Element x = 0; x < n; ++x) {
      if (is_idempotent(x)) {
        _idempotents.push_back(x);
      }
      for (Element y = 0; y < n; ++y) {
        if (_table[x][y] == _identity && _table[y][x] == _identity) {
          _unit_inverse[x] = y;
          break;
        }
      }
      if (_unit_inverse[x]) {
        _units.push_back(x);
      }
      bool central = true;
      for (Element y = 0; y < n && central; ++y) {
        central = _table[x][y] == _table[y][x];
      }
      if (central) {
        _center.push_back(x);
      }
    }

    // Principal ideals. Since S has an identity, S¹x = Sx.
    std::vector<std::vector<bool>> left(n, std::vector<bool>(n)),
        right(n, std::vector<bool>(n)), two(n, std::vector<bool>(n));
    for (Element x = 0; x < n; ++x) {
      for (Element s = 0; s < n; ++s) {
        left[x][_table[s][x]]  = true;
        right[x][_table[x][s]] = true;
        for (Element t = 0; t < n; ++t) {
          two[x][_table[_table[s][x]][t]] = true;
        }
      }
    }
    _L.assign(n * n, false);
    _R.assign(n * n, false);
    _J.assign(n * n, false);
    _D.assign(n * n, false);
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        _L[x * n + y] = left[x] == left[y];
        _R[x * n + y] = right[x] == right[y];
        _J[x * n + y] = two[x] == two[y];
      }
    }
    for (Element x = 0; x < n; ++x) {
      for (Element y = 0; y < n; ++y) {
        bool lr = false, rl = false;
        for (Element z = 0; z < n; ++z) {
          lr = lr || (rel(_L, x, z) && rel(_R, z, y));
          rl = rl || (rel(_R, x, z) && rel(_L, z, y));
        }
        if (lr != rl) {
          throw std::logic_error("L∘R differs from R∘L in " + _name);
        }
        _D[x * n + y] = lr;
      }
    }

    _regular = true;
    _inverse = true;
    for (Element x = 0; x < n; ++x) {
      std::size_t const count = inverses_of(x).size();
      _regular                = _regular && count >= 1;
      _inverse                = _inverse && count == 1;
    }
  }

  std::string FiniteMonoid::element_name(Element x) const {
    if (!_names.empty()) {
      return _names.at(x);
    }
    return "s" + std::to_string(x);
  }

  std::optional<Element> FiniteMonoid::find(std::string_view name) const {
    for (Element x = 0; x < _names.size(); ++x) {
      if (_names[x] == name) {
        return x;
      }
    }
    return std::nullopt;
  }

  bool FiniteMonoid::is_central(Element x) const {
    return std::binary_search(_center.begin(), _center.end(), x);
  }

  Element FiniteMonoid::unit_inverse(Element x) const {
    if (!_unit_inverse.at(x)) {
      throw Error(element_name(x) + " is not a unit of " + _name);
    }
    return *_unit_inverse[x];
  }

  bool FiniteMonoid::green(Green r, Element x, Element y) const {
    switch (r) {
      case Green::L: return rel(_L, x, y);
      case Green::R: return rel(_R, x, y);
      case Green::H: return rel(_L, x, y) && rel(_R, x, y);
      case Green::D: return rel(_D, x, y);
      case Green::J: return rel(_J, x, y);
    }
    return false;
  }

  bool FiniteMonoid::green_composite(Green   rel1,
                                     Green   rel2,
                                     Element x,
                                     Element y) const {
    for (Element z = 0; z < size(); ++z) {
      if (green(rel1, x, z) && green(rel2, z, y)) {
        return true;
      }
    }
    return false;
  }

  std::vector<Element> FiniteMonoid::inverses_of(Element x) const {
    std::vector<Element> result;
    for (Element y = 0; y < size(); ++y) {
      if (product(product(x, y), x) == x && product(product(y, x), y) == y) {
        result.push_back(y);
      }
    }
    return result;
  }

  bool FiniteMonoid::idempotents_commute() const {
    for (Element e : _idempotents) {
      for (Element f : _idempotents) {
        if (product(e, f) != product(f, e)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteMonoid::is_combinatorial() const {
    for (Element x = 0; x < size(); ++x) {
      for (Element y = 0; y < size(); ++y) {
        if (x != y && green(Green::H, x, y)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteMonoid::is_bisimple() const {
    for (Element x = 0; x < size(); ++x) {
      if (!green(Green::D, _identity, x)) {
        return false;
      }
    }
    return true;
  }

  bool FiniteMonoid::is_e_unitary() const {
    if (!_inverse) {
      throw Error("E-unitarity is defined for inverse monoids; " + _name
                  + " is not inverse");
    }
    for (Element e : _idempotents) {
      for (Element s = 0; s < size(); ++s) {
        if (is_idempotent(product(e, s)) && !is_idempotent(s)) {
          return false;
        }
      }
    }
    return true;
  }

  bool FiniteMonoid::nat_leq(Element x, Element y) const {
    if (_inverse) {
      for (Element e : _idempotents) {
        if (product(e, y) == x) {
          return true;
        }
      }
      return false;
    }
    if (is_idempotent(x) && is_idempotent(y)) {
      return product(x, y) == x && product(y, x) == x;
    }
    throw Error("the natural order on " + _name
                + " is only defined between idempotents");
  }

  std::vector<Element> FiniteMonoid::solve_right(Element s, Element t) const {
    std::vector<Element> result;
    for (Element x = 0; x < size(); ++x) {
      if (product(s, x) == t) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::vector<Element> FiniteMonoid::solve_left(Element s, Element t) const {
    std::vector<Element> result;
    for (Element x = 0; x < size(); ++x) {
      if (product(x, s) == t) {
        result.push_back(x);
      }
    }
    return result;
  }

  ////////////////////////////////////////////////////////////////////////
  // Theta
  ////////////////////////////////////////////////////////////////////////

  Theta Theta::identity(std::size_t n) {
    std::vector<Element> map(n);
    for (Element x = 0; x < n; ++x) {
      map[x] = x;
    }
    return Theta(std::move(map));
  }

  Theta Theta::constant(std::size_t n, Element value) {
    return Theta(std::vector<Element>(n, value));
  }

  Element Theta::pow(std::size_t n, Element x) const {
    for (std::size_t i = 0; i < n; ++i) {
      x = _map[x];
    }
    return x;
  }

  std::vector<Element> Theta::fiber(Element y) const {
    return pow_fiber(1, y);
  }

  std::vector<Element> Theta::pow_fiber(std::size_t n, Element y) const {
    std::vector<Element> result;
    for (Element x = 0; x < _map.size(); ++x) {
      if (pow(n, x) == y) {
        result.push_back(x);
      }
    }
    return result;
  }

  std::string ThetaViolation::describe() const {
    switch (kind) {
      case Kind::wrong_size: return "map size does not match the monoid";
      case Kind::out_of_range:
        return "image of " + std::to_string(x) + " is out of range";
      case Kind::not_multiplicative:
        return "theta(xy) != theta(x)theta(y) at (" + std::to_string(x) + ","
               + std::to_string(y) + ")";
      case Kind::not_unit:
        return "theta(" + std::to_string(x)
               + ") lies outside the group of units";
    }
    return "unknown violation";
  }

  std::optional<ThetaViolation> validate_theta(FiniteMonoid const& m,
                                               Theta const&        theta) {
    using Kind = ThetaViolation::Kind;
    if (theta.size() != m.size()) {
      return ThetaViolation{Kind::wrong_size};
    }
    for (Element x = 0; x < m.size(); ++x) {
      if (!m.contains(theta(x))) {
        return ThetaViolation{Kind::out_of_range, x};
      }
    }
    for (Element x = 0; x < m.size(); ++x) {
      if (!m.is_unit(theta(x))) {
        return ThetaViolation{Kind::not_unit, x};
      }
    }
    for (Element x = 0; x < m.size(); ++x) {
      for (Element y = 0; y < m.size(); ++y) {
        if (theta(m.product(x, y)) != m.product(theta(x), theta(y))) {
          return ThetaViolation{Kind::not_multiplicative, x, y};
        }
      }
    }
    return std::nullopt;
  }

  ////////////////////////////////////////////////////////////////////////
  // Built-in monoids
  ////////////////////////////////////////////////////////////////////////

  namespace monoids {

    FiniteMonoid trivial() {
      return FiniteMonoid("trivial", Table{{0}}, 0, {"e"});
    }

    FiniteMonoid cyclic(std::size_t n) {
      Table                    table(n, std::vector<Element>(n));
      std::vector<std::string> names(n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          table[i][j] = Element((i + j) % n);
        }
        names[i] = i == 0 ? "e" : i == 1 ? "g" : "g^" + std::to_string(i);
      }
      return FiniteMonoid("C" + std::to_string(n), std::move(table), 0,
                          std::move(names));
    }

    FiniteMonoid chain_semilattice(std::size_t n) {
      Table                    table(n, std::vector<Element>(n));
      std::vector<std::string> names(n);
      for (Element i = 0; i < n; ++i) {
        for (Element j = 0; j < n; ++j) {
          table[i][j] = std::max(i, j);
        }
        names[i] = i == 0   ? "id"
                   : n == 2 ? "f"
                            : "f" + std::to_string(i);
      }
      return FiniteMonoid("chain" + std::to_string(n), std::move(table), 0,
                          std::move(names));
    }

    FiniteMonoid left_zero_with_identity(std::size_t n) {
      std::size_t const        size = n + 1;
      Table                    table(size, std::vector<Element>(size));
      std::vector<std::string> names(size);
      names[0] = "id";
      for (Element i = 0; i < size; ++i) {
        for (Element j = 0; j < size; ++j) {
          table[i][j] = i == 0 ? j : i;
        }
        if (i != 0) {
          names[i] = n == 2 ? std::string(1, i == 1 ? 'x' : 'y')
                            : "x" + std::to_string(i);
        }
      }
      return FiniteMonoid("lz" + std::to_string(n), std::move(table), 0,
                          std::move(names));
    }

    FiniteMonoid symmetric_inverse_monoid(std::size_t n) {
      constexpr int    undefined = -1;
      using PartialMap = std::vector<int>;
      std::vector<PartialMap> maps;
      PartialMap              current(n, undefined);
      // Enumerate all injective partial maps by backtracking.
      auto extend = [&](auto&& self, std::size_t i, std::vector<bool>& used) {
        if (i == n) {
          maps.push_back(current);
          return;
        }
        for (std::size_t j = 0; j < n; ++j) {
          if (!used[j]) {
            used[j]    = true;
            current[i] = int(j);
            self(self, i + 1, used);
            used[j] = false;
          }
        }
        current[i] = undefined;
        self(self, i + 1, used);
      };
      std::vector<bool> used(n, false);
      extend(extend, 0, used);

      auto rank = [](PartialMap const& m) {
        return std::count_if(m.begin(), m.end(), [](int v) { return v >= 0; });
      };
      std::stable_sort(maps.begin(), maps.end(),
                       [&](PartialMap const& a, PartialMap const& b) {
                         return rank(a) > rank(b);
                       });

      std::map<PartialMap, Element> index;
      for (Element i = 0; i < maps.size(); ++i) {
        index[maps[i]] = i;
      }
      std::size_t const size = maps.size();
      Table             table(size, std::vector<Element>(size));
      for (Element i = 0; i < size; ++i) {
        for (Element j = 0; j < size; ++j) {
          PartialMap composite(n, undefined);
          for (std::size_t p = 0; p < n; ++p) {
            int const mid = maps[i][p];
            composite[p]  = mid == undefined ? undefined : maps[j][mid];
          }
          table[i][j] = index.at(composite);
        }
      }

      std::vector<std::string> names;
      if (n == 2) {
        std::map<PartialMap, std::string> const known
            = {{{0, 1}, "id"},          {{1, 0}, "t"},
               {{0, undefined}, "e1"},  {{undefined, 1}, "e2"},
               {{1, undefined}, "a"},   {{undefined, 0}, "b"},
               {{undefined, undefined}, "z"}};
        for (auto const& m : maps) {
          names.push_back(known.at(m));
        }
      }
      return FiniteMonoid("I" + std::to_string(n), std::move(table), 0,
                          std::move(names));
    }

    std::vector<std::string> builtin_names() {
      return {"trivial", "C2", "C3", "chain2", "lz2", "I2"};
    }

    std::optional<FiniteMonoid> builtin(std::string_view name) {
      if (name == "trivial") {
        return trivial();
      } else if (name == "C2") {
        return cyclic(2);
      } else if (name == "C3") {
        return cyclic(3);
      } else if (name == "chain2") {
        return chain_semilattice(2);
      } else if (name == "lz2") {
        return left_zero_with_identity(2);
      } else if (name == "I2") {
        return symmetric_inverse_monoid(2);
      }
      return std::nullopt;
    }

  }  // namespace monoids

}  // namespace polyext
