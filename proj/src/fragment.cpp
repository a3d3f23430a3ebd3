#include "polyext/fragment.hpp"

#include <algorithm>

namespace polyext::verify {

  Fragment::Fragment(Extension const& ext, std::size_t bound) : _bound(bound) {
    auto const words = enumerate_words(ext.alphabet(), bound);
    _pelems.reserve(words.size() * words.size() + 1);
    _pelems.push_back(PElem::zero());
    for (auto const& u : words) {
      for (auto const& v : words) {
        _pelems.emplace_back(u, v);
      }
    }
    std::sort(_pelems.begin(), _pelems.end());

    std::size_t const n = ext.monoid().size();
    _elements.reserve((_pelems.size() - 1) * n + 1);
    _elements.push_back(BrElem::zero());
    for (auto it = _pelems.begin() + 1; it != _pelems.end(); ++it) {
      for (Element s = 0; s < n; ++s) {
        _elements.emplace_back(s, *it);
      }
    }
  }

  std::size_t Fragment::expected_size(std::size_t     monoid_size,
                                      Alphabet const& alphabet,
                                      std::size_t     bound) {
    std::size_t const w = word_count(alphabet, bound);
    return monoid_size * w * w + 1;
  }

  std::optional<std::size_t> Fragment::index_of(BrElem const& x) const {
    auto it = std::lower_bound(_elements.begin(), _elements.end(), x);
    if (it == _elements.end() || !(*it == x)) {
      return std::nullopt;
    }
    return std::size_t(it - _elements.begin());
  }

}  // namespace polyext::verify
