#pragma once

// The λ-polycyclic Bruck–Reilly extension of a finite monoid S twisted by a
// homomorphism θ: S → H(1): the set (S × (P_k ∖ {0})) ⊔ {0} with
//
//   (s, a1^-1 a2) * (t, b1^-1 b2) =
//       (θ^|u|(s) t, (u a1)^-1 b2)   if b1 = u a2,
//       (s θ^|v|(t), a1^-1 (v b2))   if a2 = v b1,
//       0                            otherwise,
//
// and 0 absorbing on both sides. Every structural characterisation of this
// semigroup is answered here directly from S, θ and the words.

#include <compare>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "polyext/monoid.hpp"
#include "polyext/polycyclic.hpp"
#include "polyext/word.hpp"

namespace polyext {

  // Either the zero, or a pair (s, u^-1 v) with a nonzero P-part.
  class BrElem {
   public:
    // The zero.
    BrElem() = default;
    // Throws Error when p is the zero of P_k.
    BrElem(Element s, PElem p);

    static BrElem zero() {
      return BrElem();
    }

    bool is_zero() const noexcept {
      return _zero;
    }
    Element element() const noexcept {
      return _s;
    }
    PElem const& pelem() const noexcept {
      return _p;
    }
    Word const& left() const noexcept {
      return _p.left();
    }
    Word const& right() const noexcept {
      return _p.right();
    }

    bool operator==(BrElem const&) const = default;
    // Zero first, then by P-part, then by S-element.
    std::strong_ordering operator<=>(BrElem const& other) const noexcept;

   private:
    bool    _zero = true;
    Element _s    = 0;
    PElem   _p;
  };

  class Extension {
   public:
    // Throws InvalidTheta unless θ is a homomorphism into H(1).
    Extension(FiniteMonoid monoid, Theta theta, Alphabet alphabet);

    FiniteMonoid const& monoid() const noexcept {
      return _monoid;
    }
    Theta const& theta() const noexcept {
      return _theta;
    }
    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }

    // x names an element of this extension.
    bool contains(BrElem const& x) const noexcept;
    // Throws Error unless contains(x).
    void check(BrElem const& x) const;

    // (1_S, 1).
    BrElem identity() const;

    BrElem mul(BrElem const& x, BrElem const& y) const;
    BrElem mul(BrElem const& x, BrElem const& y, BrElem const& z) const {
      return mul(mul(x, y), z);
    }

    // 0, or s ∈ E(S) and u = v.
    bool is_idempotent(BrElem const& x) const;

    // (s', v^-1 u) for the least-index inverse s' of s in S; nullopt when s
    // has none.
    std::optional<BrElem> inverse_of(BrElem const& x) const;

    // Green's relations via the S-side relations and the words. 0 is only
    // related to itself; J is universal on nonzero elements.
    bool green(Green rel, BrElem const& x, BrElem const& y) const;

    // For L-related x, y: (r, q) with x = r*y and y = q*x.
    std::optional<std::pair<BrElem, BrElem>> l_witness(BrElem const& x,
                                                       BrElem const& y) const;
    // For R-related x, y: (r, q) with x = y*r and y = x*q.
    std::optional<std::pair<BrElem, BrElem>> r_witness(BrElem const& x,
                                                       BrElem const& y) const;
    // For D-related nonzero x, y: z with x L z and z R y.
    std::optional<BrElem> d_middle(BrElem const& x, BrElem const& y) const;

    // For nonzero a, b: (x, y) with x * b * y = a, using the one-letter word
    // [a] as the spacer.
    std::pair<BrElem, BrElem> zero_simple_witness(BrElem const& a,
                                                  BrElem const& b) const;

    // (s, p) ↦ p and 0 ↦ 0: the quotient by the congruence whose classes are
    // the slices S_{u^-1 v}.
    PElem quotient(BrElem const& x) const;

    // 0, or s ∈ Z(S), θ(s) = s and p = 1.
    bool is_in_center(BrElem const& x) const;
    // s ∈ H(1) and p = 1.
    bool is_unit(BrElem const& x) const;

    // S inverse and E-unitary, and θ^-1(1_S) = E(S).
    bool is_zero_e_unitary() const;

    // Exact, sorted solution sets of a*x = b and x*a = b for nonzero a, b.
    std::vector<BrElem> solve_right(BrElem const& a, BrElem const& b) const;
    std::vector<BrElem> solve_left(BrElem const& a, BrElem const& b) const;

    // s ↦ (s, w^-1 w).
    BrElem embed_s(Word const& w, Element s) const;
    // p ↦ (e, p), 0 ↦ 0. Throws Error unless e is idempotent.
    BrElem embed_p(Element e, PElem const& p) const;

    // x ↦ (1_S, u^-1) * x * (1_S, v), onto the copy of the extension whose
    // words end in u and v respectively.
    BrElem translate(Word const& u, Word const& v, BrElem const& x) const;
    // y ↦ (1_S, u) * y * (1_S, v^-1), the inverse of translate on its image.
    BrElem untranslate(Word const& u, Word const& v, BrElem const& y) const;
    // 0, or left word ends in u and right word ends in v.
    bool in_translated_copy(Word const& u, Word const& v, BrElem const& x) const;

    // Element text: "0" or "(s<i>,pelem)".
    std::string render(BrElem const& x) const;
    // Accepts "s<i>" or an element name for the S-part.
    BrElem parse(std::string_view text) const;
    // elem ("*" elem)*
    std::vector<BrElem> parse_product(std::string_view text) const;

   private:
    FiniteMonoid _monoid;
    Theta        _theta;
    Alphabet     _alphabet;
  };

  // d_S on S with values in [0, 1], extended to the extension by
  //   d(x, x) = 0, d((s,p), (t,p)) = d_S(s, t), and 1 for every other pair.
  class SliceMetric {
   public:
    // Throws Error unless distances is an n×n metric with values <= 1.
    SliceMetric(FiniteMonoid const& m, std::vector<std::vector<double>> distances);

    static SliceMetric discrete(FiniteMonoid const& m);
    // |i - j| / n
    static SliceMetric index_gap(FiniteMonoid const& m);

    double on_monoid(Element s, Element t) const {
      return _d[s][t];
    }
    double operator()(BrElem const& x, BrElem const& y) const;

   private:
    std::vector<std::vector<double>> _d;
  };

}  // namespace polyext
