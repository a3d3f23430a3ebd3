#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "polyext/extension.hpp"

namespace polyext::verify {

  // The finite piece of an extension containing 0 and every (s, u^-1 v) with
  // |u|, |v| <= bound. Elements are kept sorted (BrElem order), so the zero
  // comes first and each slice is a contiguous run.
  class Fragment {
   public:
    Fragment(Extension const& ext, std::size_t bound);

    // n · W² + 1 where W is the number of words of length <= bound.
    static std::size_t expected_size(std::size_t     monoid_size,
                                     Alphabet const& alphabet,
                                     std::size_t     bound);

    std::size_t bound() const noexcept {
      return _bound;
    }
    std::size_t size() const noexcept {
      return _elements.size();
    }
    std::vector<BrElem> const& elements() const noexcept {
      return _elements;
    }
    BrElem const& operator[](std::size_t i) const {
      return _elements[i];
    }
    auto begin() const noexcept {
      return _elements.begin();
    }
    auto end() const noexcept {
      return _elements.end();
    }

    // The nonzero elements (everything after the leading zero).
    std::vector<BrElem> nonzero() const {
      return {_elements.begin() + 1, _elements.end()};
    }
    // 0 and every u^-1 v with |u|, |v| <= bound, sorted.
    std::vector<PElem> const& pelems() const noexcept {
      return _pelems;
    }

    std::optional<std::size_t> index_of(BrElem const& x) const;
    bool                       contains(BrElem const& x) const {
      return index_of(x).has_value();
    }

   private:
    std::size_t         _bound;
    std::vector<BrElem> _elements;
    std::vector<PElem>  _pelems;
  };

}  // namespace polyext::verify
