#include <cctype>

#include "grammar.hpp"
#include "polyext/extension.hpp"

namespace polyext::detail {

  PElem read_pelem(TextCursor& cursor) {
    if (cursor.consume("0")) {
      return PElem::zero();
    }
    if (cursor.consume("1")) {
      return PElem::one();
    }
    Word u = cursor.word();
    cursor.expect("^-1");
    Word v = cursor.word();
    return PElem(std::move(u), std::move(v));
  }

  BrElem read_element(TextCursor& cursor, Extension const& ext) {
    if (cursor.consume("0")) {
      return BrElem::zero();
    }
    cursor.expect("(");
    cursor.skip_space();
    std::size_t const sref_at = cursor.position();
    std::string const sref    = cursor.identifier();
    std::optional<Element> s = ext.monoid().find(sref);
    if (!s && sref.size() > 1 && sref[0] == 's') {
      bool digits = true;
      for (std::size_t i = 1; i < sref.size(); ++i) {
        digits = digits && std::isdigit(static_cast<unsigned char>(sref[i]));
      }
      if (digits && sref.size() < 12) {
        s = Element(std::stoul(sref.substr(1)));
      }
    }
    if (!s || !ext.monoid().contains(*s)) {
      throw ParseError("unknown element '" + sref + "' of "
                           + ext.monoid().name(),
                       sref_at);
    }
    cursor.skip_space();
    cursor.expect(",");
    cursor.skip_space();
    std::size_t const p_at = cursor.position();
    PElem             p    = read_pelem(cursor);
    if (p.is_zero()) {
      throw ParseError("a pair cannot have a zero P-part; write 0 instead",
                       p_at);
    }
    if (!p.fits(ext.alphabet())) {
      throw ParseError("word letter outside the "
                           + std::to_string(ext.alphabet().size())
                           + "-letter alphabet",
                       p_at);
    }
    cursor.skip_space();
    cursor.expect(")");
    return BrElem(*s, std::move(p));
  }

}  // namespace polyext::detail
