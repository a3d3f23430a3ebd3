#include "polyext/polycyclic.hpp"

#include <algorithm>
#include <cctype>

#include "grammar.hpp"
#include "polyext/error.hpp"

namespace polyext {

  std::strong_ordering PElem::operator<=>(PElem const& other) const noexcept {
    if (_zero != other._zero) {
      return _zero ? std::strong_ordering::less
                   : std::strong_ordering::greater;
    }
    if (auto c = _left <=> other._left; c != 0) {
      return c;
    }
    return _right <=> other._right;
  }

  // x = a1^-1 a2, y = b1^-1 b2.
  //   b1 = u a2  ->  (u a1)^-1 b2
  //   a2 = v b1  ->  a1^-1 (v b2)
  //   otherwise  ->  0
  PElem multiply(PElem const& x, PElem const& y) {
    if (x.is_zero() || y.is_zero()) {
      return PElem::zero();
    }
    if (auto u = strip_suffix(y.left(), x.right())) {
      return PElem(concat(*u, x.left()), y.right());
    }
    if (auto v = strip_suffix(x.right(), y.left())) {
      return PElem(x.left(), concat(*v, y.right()));
    }
    return PElem::zero();
  }

  PElem inverse(PElem const& x) {
    if (x.is_zero()) {
      return x;
    }
    return PElem(x.right(), x.left());
  }

  bool is_idempotent(PElem const& x) noexcept {
    return x.is_zero() || x.left() == x.right();
  }

  std::vector<PElem> solve_right(PElem const& alpha, PElem const& beta) {
    if (alpha.is_zero() || beta.is_zero()) {
      throw Error("solve_right requires nonzero arguments");
    }
    Word const& a1 = alpha.left();
    Word const& a2 = alpha.right();
    Word const& b1 = beta.left();
    Word const& b2 = beta.right();

    std::vector<PElem> result;
    // ξ = x1^-1 x2 with x1 = u a2: the product is (u a1)^-1 x2.
    if (auto u = strip_suffix(b1, a1)) {
      result.emplace_back(concat(*u, a2), b2);
    }
    // a2 = v x1: the product is a1^-1 (v x2), one candidate per split of a2.
    if (a1 == b1) {
      for (std::size_t cut = 0; cut <= a2.size(); ++cut) {
        Word const v(a2.letters().first(cut));
        Word const x1(a2.letters().subspan(cut));
        if (auto x2 = strip_prefix(b2, v)) {
          result.emplace_back(x1, std::move(*x2));
        }
      }
    }
    std::sort(result.begin(), result.end());
    result.erase(std::unique(result.begin(), result.end()), result.end());
    return result;
  }

  std::vector<PElem> solve_left(PElem const& alpha, PElem const& beta) {
    if (alpha.is_zero() || beta.is_zero()) {
      throw Error("solve_left requires nonzero arguments");
    }
    // x ↦ x^-1 is an anti-isomorphism: ξα = β  ⟺  α^-1 ξ^-1 = β^-1.
    auto result = solve_right(inverse(alpha), inverse(beta));
    for (auto& xi : result) {
      xi = inverse(xi);
    }
    std::sort(result.begin(), result.end());
    return result;
  }

  PElem Generator::value() const {
    return inverse ? PElem(Word{letter}, Word{}) : PElem(Word{}, Word{letter});
  }

  std::vector<Generator> parse_generators(Alphabet const& alphabet,
                                          std::string_view text) {
    detail::TextCursor     cursor(text);
    std::vector<Generator> tokens;
    cursor.skip_space();
    while (!cursor.at_end()) {
      bool inverse;
      if (cursor.consume("p")) {
        inverse = false;
      } else if (cursor.consume("q")) {
        inverse = true;
      } else {
        cursor.fail("unknown generator token, expected p<i> or q<i>");
      }
      std::size_t const start = cursor.position();
      std::size_t const index = cursor.decimal();
      if (index >= alphabet.size()) {
        throw ParseError("generator index " + std::to_string(index)
                             + " is not below the alphabet size "
                             + std::to_string(alphabet.size()),
                         start);
      }
      if (!cursor.at_end()
          && !std::isspace(static_cast<unsigned char>(cursor.peek()))) {
        cursor.fail("generator tokens must be separated by whitespace");
      }
      tokens.push_back({Letter(index), inverse});
      cursor.skip_space();
    }
    return tokens;
  }

  PElem evaluate(std::vector<Generator> const& tokens) {
    PElem result = PElem::one();
    for (auto const& g : tokens) {
      result = multiply(result, g.value());
    }
    return result;
  }

  PElem evaluate_generators(Alphabet const& alphabet, std::string_view text) {
    return evaluate(parse_generators(alphabet, text));
  }

  std::string to_string(PElem const& x) {
    if (x.is_zero()) {
      return "0";
    }
    if (x.is_one()) {
      return "1";
    }
    return to_string(x.left()) + "^-1" + to_string(x.right());
  }

  PElem parse_pelem(std::string_view text) {
    detail::TextCursor cursor(text);
    cursor.skip_space();
    PElem x = detail::read_pelem(cursor);
    cursor.finish();
    return x;
  }

}  // namespace polyext
