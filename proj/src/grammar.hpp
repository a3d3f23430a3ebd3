#pragma once

#include "polyext/polycyclic.hpp"
#include "text_cursor.hpp"

namespace polyext {
  class Extension;
  class BrElem;
}  // namespace polyext

namespace polyext::detail {

  // pelem := "0" | "1" | word "^-1" word
  PElem read_pelem(TextCursor& cursor);

  // elem := "0" | "(" sref "," pelem ")"
  BrElem read_element(TextCursor& cursor, Extension const& ext);

}  // namespace polyext::detail
