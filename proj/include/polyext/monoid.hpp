#pragma once

// Finite monoids given by Cayley tables, the S-side structure the extension
// delegates to, and the twisting homomorphism θ: S → H(1).

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "polyext/error.hpp"

namespace polyext {

  using Element = std::uint32_t;
  using Table   = std::vector<std::vector<Element>>;

  enum class Green { L, R, H, D, J };

  std::string_view     to_string(Green rel) noexcept;
  std::optional<Green> parse_green(std::string_view name) noexcept;

  // First failure found when checking the monoid laws. For associativity
  // (x, y, z) is the triple with (xy)z != x(yz); for the identity laws only
  // x is meaningful.
  struct MonoidViolation {
    enum class Kind { associativity, left_identity, right_identity };

    Kind    kind;
    Element x = 0, y = 0, z = 0;

    std::string describe() const;
    bool        operator==(MonoidViolation const&) const = default;
  };

  // Checks associativity over all n³ triples, then both identity laws.
  // Throws Error on structural problems (ragged table, index out of range).
  std::optional<MonoidViolation> validate_monoid(Table const& table,
                                                 Element      identity);

  class InvalidMonoid : public Error {
   public:
    explicit InvalidMonoid(MonoidViolation v)
        : Error("not a monoid: " + v.describe()), _violation(v) {}

    MonoidViolation const& violation() const noexcept {
      return _violation;
    }

   private:
    MonoidViolation _violation;
  };

  class FiniteMonoid {
   public:
    // Throws InvalidMonoid if the table is not a monoid with the given
    // identity, Error on structural problems or a bad name list.
    FiniteMonoid(std::string              name,
                 Table                    table,
                 Element                  identity,
                 std::vector<std::string> names = {});

    std::string const& name() const noexcept {
      return _name;
    }
    std::size_t size() const noexcept {
      return _table.size();
    }
    Element identity() const noexcept {
      return _identity;
    }
    Table const& table() const noexcept {
      return _table;
    }
    Element product(Element x, Element y) const {
      return _table[x][y];
    }
    bool contains(Element x) const noexcept {
      return x < size();
    }

    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    // The element's name, or "s<i>" for unnamed monoids.
    std::string           element_name(Element x) const;
    std::optional<Element> find(std::string_view name) const;

    // E(S), H(1) and Z(S), in increasing index order.
    std::vector<Element> const& idempotents() const noexcept {
      return _idempotents;
    }
    std::vector<Element> const& unit_group() const noexcept {
      return _units;
    }
    std::vector<Element> const& center() const noexcept {
      return _center;
    }
    bool is_idempotent(Element x) const {
      return _table[x][x] == x;
    }
    bool is_unit(Element x) const {
      return _unit_inverse[x].has_value();
    }
    bool is_central(Element x) const;
    // The group inverse of a unit. Throws Error for non-units.
    Element unit_inverse(Element x) const;

    // Definitional Green's relations via principal ideals of S¹ = S.
    // D is L∘R.
    bool green(Green rel, Element x, Element y) const;
    // ∃z: x rel1 z and z rel2 y.
    bool green_composite(Green rel1, Green rel2, Element x, Element y) const;

    // {y : xyx = x and yxy = y}
    std::vector<Element> inverses_of(Element x) const;
    bool                 is_regular() const noexcept {
      return _regular;
    }
    // Every element has exactly one inverse.
    bool is_inverse_monoid() const noexcept {
      return _inverse;
    }
    bool idempotents_commute() const;
    // H-classes are singletons.
    bool is_combinatorial() const;
    // A single D-class.
    bool is_bisimple() const;

    // ∀e ∈ E, s: es ∈ E ⟹ s ∈ E. Requires an inverse monoid; throws Error
    // otherwise.
    bool is_e_unitary() const;
    // Natural partial order. On an inverse monoid x ≤ y iff x = ey for some
    // idempotent e; on any monoid, for idempotents x ≤ y iff xy = yx = x.
    // Throws Error when neither case applies.
    bool nat_leq(Element x, Element y) const;

    // {x : s x = t} and {x : x s = t}.
    std::vector<Element> solve_right(Element s, Element t) const;
    std::vector<Element> solve_left(Element s, Element t) const;

    bool operator==(FiniteMonoid const& other) const {
      return _table == other._table && _identity == other._identity;
    }

   private:
    bool rel(std::vector<bool> const& m, Element x, Element y) const {
      return m[std::size_t(x) * size() + y];
    }

    std::string              _name;
    Table                    _table;
    Element                  _identity;
    std::vector<std::string> _names;

    std::vector<Element>                _idempotents;
    std::vector<Element>                _units;
    std::vector<Element>                _center;
    std::vector<std::optional<Element>> _unit_inverse;
    bool                                _regular = false;
    bool                                _inverse = false;

    // n×n relation matrices, row-major.
    std::vector<bool> _L, _R, _J, _D;
  };

  // A map S → S, intended to be a homomorphism into H(1).
  class Theta {
   public:
    explicit Theta(std::vector<Element> map) : _map(std::move(map)) {}

    static Theta identity(std::size_t n);
    static Theta constant(std::size_t n, Element value);

    std::size_t size() const noexcept {
      return _map.size();
    }
    std::vector<Element> const& map() const noexcept {
      return _map;
    }
    Element operator()(Element x) const {
      return _map[x];
    }
    // θⁿ(x); θ⁰(x) = x.
    Element pow(std::size_t n, Element x) const;
    // {x : θ(x) = y}
    std::vector<Element> fiber(Element y) const;
    // {x : θⁿ(x) = y}
    std::vector<Element> pow_fiber(std::size_t n, Element y) const;

    bool operator==(Theta const&) const = default;

   private:
    std::vector<Element> _map;
  };

  struct ThetaViolation {
    enum class Kind { wrong_size, out_of_range, not_multiplicative, not_unit };

    Kind    kind;
    Element x = 0, y = 0;

    std::string describe() const;
    bool        operator==(ThetaViolation const&) const = default;
  };

  // θ must be multiplicative (θ(xy) = θ(x)θ(y), witness pair (x, y)) with
  // image inside H(1) (witness x).
  std::optional<ThetaViolation> validate_theta(FiniteMonoid const& m,
                                               Theta const&        theta);

  class InvalidTheta : public Error {
   public:
    explicit InvalidTheta(ThetaViolation v)
        : Error("invalid theta: " + v.describe()), _violation(v) {}

    ThetaViolation const& violation() const noexcept {
      return _violation;
    }

   private:
    ThetaViolation _violation;
  };

  namespace monoids {
    FiniteMonoid trivial();
    // Z/n, element i is g^i.
    FiniteMonoid cyclic(std::size_t n);
    // {0 > 1 > ... > n-1} under min in the order, i.e. xy = max(x, y) on
    // indices; 0 is the identity.
    FiniteMonoid chain_semilattice(std::size_t n);
    // A left-zero semigroup of size n (xy = x) with an identity adjoined at
    // index 0.
    FiniteMonoid left_zero_with_identity(std::size_t n);
    // All partial bijections of {0, ..., n-1}, composed left to right.
    // Identity at index 0.
    FiniteMonoid symmetric_inverse_monoid(std::size_t n);

    // Built-in fixtures by name: trivial, C2, C3, chain2, lz2, I2.
    std::vector<std::string> builtin_names();
    std::optional<FiniteMonoid> builtin(std::string_view name);
  }  // namespace monoids

}  // namespace polyext
