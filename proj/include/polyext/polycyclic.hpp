#pragma once

// The polycyclic monoid P_k on a k-letter alphabet. A nonzero element is
// kept in its unique normal form u^-1 v; generator words are evaluated into
// normal form and never stored.

#include <compare>
#include <string>
#include <string_view>
#include <vector>

#include "polyext/word.hpp"

namespace polyext {

  class PElem {
   public:
    // The identity []^-1[].
    PElem() = default;
    PElem(Word left, Word right)
        : _left(std::move(left)), _right(std::move(right)) {}

    static PElem zero() {
      PElem z;
      z._zero = true;
      return z;
    }
    static PElem one() {
      return PElem();
    }

    bool is_zero() const noexcept {
      return _zero;
    }
    bool is_one() const noexcept {
      return !_zero && _left.empty() && _right.empty();
    }
    // u in u^-1 v. Empty for zero.
    Word const& left() const noexcept {
      return _left;
    }
    // v in u^-1 v. Empty for zero.
    Word const& right() const noexcept {
      return _right;
    }

    bool fits(Alphabet const& alphabet) const noexcept {
      return _left.fits(alphabet) && _right.fits(alphabet);
    }

    bool operator==(PElem const&) const = default;
    // Zero sorts first, then by (left, right) in shortlex.
    std::strong_ordering operator<=>(PElem const& other) const noexcept;

   private:
    bool _zero = false;
    Word _left;
    Word _right;
  };

  PElem multiply(PElem const& x, PElem const& y);
  PElem inverse(PElem const& x);
  bool  is_idempotent(PElem const& x) noexcept;

  // Every ξ with α·ξ = β, sorted. α and β must be nonzero.
  std::vector<PElem> solve_right(PElem const& alpha, PElem const& beta);
  // Every ξ with ξ·α = β, sorted. α and β must be nonzero.
  std::vector<PElem> solve_left(PElem const& alpha, PElem const& beta);

  // p_i is []^-1[i]; q_i = p_i^-1 is [i]^-1[].
  struct Generator {
    Letter letter;
    bool   inverse;

    PElem value() const;
    bool  operator==(Generator const&) const = default;
  };

  // Whitespace-separated "p<i>" / "q<i>" tokens; each index must be < k.
  std::vector<Generator> parse_generators(Alphabet const& alphabet,
                                          std::string_view text);
  PElem evaluate(std::vector<Generator> const& tokens);
  PElem evaluate_generators(Alphabet const& alphabet, std::string_view text);

  // "0", "1" or "[u]^-1[v]".
  std::string to_string(PElem const& x);
  PElem       parse_pelem(std::string_view text);

}  // namespace polyext
