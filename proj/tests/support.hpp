#pragma once

// Conversions between library values and the reference types in oracle.hpp.

#include "oracle.hpp"
#include "polyext/extension.hpp"

namespace support {

  inline polyext::Word word(oracle::Letters const& w) {
    std::vector<polyext::Letter> letters(w.begin(), w.end());
    return polyext::Word(std::span<polyext::Letter const>(letters));
  }

  inline oracle::Letters letters(polyext::Word const& w) {
    return oracle::Letters(w.begin(), w.end());
  }

  inline polyext::PElem pelem(oracle::P const& p) {
    return p.zero ? polyext::PElem::zero()
                  : polyext::PElem(word(p.u), word(p.v));
  }

  inline oracle::P p(polyext::PElem const& x) {
    return x.is_zero() ? oracle::P{true, {}, {}}
                       : oracle::P{false, letters(x.left()), letters(x.right())};
  }

  inline oracle::X x(polyext::BrElem const& e) {
    if (e.is_zero()) return oracle::X{};
    return oracle::X{false, int(e.element()), letters(e.left()),
                     letters(e.right())};
  }

  inline polyext::BrElem brelem(oracle::X const& e) {
    if (e.zero) return polyext::BrElem::zero();
    return polyext::BrElem(polyext::Element(e.s),
                           polyext::PElem(word(e.u), word(e.v)));
  }

  inline oracle::Monoid monoid(polyext::FiniteMonoid const& m) {
    oracle::Monoid out;
    out.one = int(m.identity());
    for (auto const& row : m.table()) {
      out.table.emplace_back(row.begin(), row.end());
    }
    return out;
  }

  inline std::vector<int> theta(polyext::Theta const& t) {
    return std::vector<int>(t.map().begin(), t.map().end());
  }

  inline polyext::Extension context(std::string const& name,
                                    std::string const& theta_name,
                                    std::size_t        k) {
    auto m = *polyext::monoids::builtin(name);
    auto t = theta_name == "id" ? polyext::Theta::identity(m.size())
                                : polyext::Theta::constant(m.size(), m.identity());
    return polyext::Extension(std::move(m), std::move(t), polyext::Alphabet(k));
  }

}  // namespace support
