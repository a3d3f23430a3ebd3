#include <random>

#include "doctest.h"
#include "polyext/fragment.hpp"
#include "support.hpp"

using namespace polyext;
using support::context;

namespace {
  std::vector<Extension> matrix() {
    std::vector<Extension> out;
    for (std::size_t k : {1, 2}) {
      for (auto const& name : monoids::builtin_names()) {
        auto const m = *monoids::builtin(name);
        if (m.size() > 1 && m.unit_group().size() == m.size()) {
          out.push_back(context(name, "id", k));
        }
        out.push_back(context(name, "one", k));
      }
    }
    return out;
  }
}  // namespace

TEST_CASE("product examples") {
  auto const ext = context("C2", "id", 2);
  auto const x   = ext.parse("(g,[]^-1[])");
  auto const y   = ext.parse("(g,[a]^-1[])");
  CHECK(ext.mul(x, y) == ext.parse("(e,[a]^-1[])"));
  CHECK(ext.mul(ext.parse("(g,[]^-1[a])"), ext.parse("(g,[b]^-1[])")).is_zero());
  for (auto const& z : verify::Fragment(ext, 2)) {
    CHECK(ext.mul(ext.identity(), z) == z);
    CHECK(ext.mul(z, ext.identity()) == z);
    CHECK(ext.mul(BrElem::zero(), z).is_zero());
    CHECK(ext.mul(z, BrElem::zero()).is_zero());
  }
}

TEST_CASE("product agrees with the reference implementation") {
  for (auto const& ext : matrix()) {
    auto const m = support::monoid(ext.monoid());
    auto const t = support::theta(ext.theta());
    verify::Fragment const f(ext, 2);
    for (auto const& x : f) {
      for (auto const& y : f) {
        auto const want = oracle::mul(m, t, support::x(x), support::x(y));
        if (support::brelem(want) != ext.mul(x, y)) {
          FAIL_CHECK(ext.render(x) << " * " << ext.render(y));
        }
      }
    }
  }
}

TEST_CASE("idempotent examples") {
  auto const ext = context("C2", "id", 2);
  CHECK(ext.is_idempotent(ext.parse("(e,[ab]^-1[ab])")));
  CHECK_FALSE(ext.is_idempotent(ext.parse("(g,[a]^-1[a])")));
  CHECK_FALSE(ext.is_idempotent(ext.parse("(e,[a]^-1[b])")));
  CHECK(ext.is_idempotent(BrElem::zero()));
}

TEST_CASE("inverse examples") {
  auto const c2 = context("C2", "id", 2);
  CHECK(c2.inverse_of(c2.parse("(g,[a]^-1[b])")) == c2.parse("(g,[b]^-1[a])"));
  auto const chain = context("chain2", "one", 2);
  CHECK(chain.inverse_of(chain.parse("(f,1)")) == chain.parse("(f,1)"));
  auto const lz = context("lz2", "one", 2);
  auto const x  = lz.parse("(x,1)");
  auto const y  = lz.inverse_of(x);
  REQUIRE(y.has_value());
  CHECK(*y == lz.parse("(x,1)"));
  for (auto const& cand : {lz.parse("(x,1)"), lz.parse("(y,1)")}) {
    CHECK(lz.mul(x, cand, x) == x);
    CHECK(lz.mul(cand, x, cand) == cand);
  }
  CHECK(lz.inverse_of(BrElem::zero()) == BrElem::zero());

  Extension const nil(FiniteMonoid("nil3", {{0, 1, 2}, {1, 2, 2}, {2, 2, 2}}, 0),
                      Theta::constant(3, 0), Alphabet(2));
  CHECK_FALSE(nil.inverse_of(nil.parse("(s1,[a]^-1[])")).has_value());
}

TEST_CASE("Green's relation examples and witnesses") {
  auto const c2 = context("C2", "id", 2);
  auto const a  = c2.parse("(e,[a]^-1[b])");
  auto const b  = c2.parse("(g,[ba]^-1[b])");
  CHECK(c2.green(Green::L, a, b));
  CHECK_FALSE(c2.green(Green::R, a, c2.parse("(g,[b]^-1[b])")));
  auto const w = c2.l_witness(a, b);
  REQUIRE(w.has_value());
  CHECK(c2.mul(w->first, b) == a);
  CHECK(c2.mul(w->second, a) == b);

  auto const triv = context("trivial", "one", 2);
  verify::Fragment const f(triv, 1);
  for (auto const& x : f)
    for (auto const& y : f)
      CHECK(triv.green(Green::H, x, y) == (x == y));

  // The R witness with differing right words, checked by products.
  auto const i2 = context("I2", "one", 2);
  auto const x  = i2.parse("(e1,[a]^-1[b])");
  auto const y  = i2.parse("(a,[a]^-1[ab])");
  REQUIRE(i2.green(Green::R, x, y));
  auto const rw = i2.r_witness(x, y);
  REQUIRE(rw.has_value());
  CHECK(i2.mul(y, rw->first) == x);
  CHECK(i2.mul(x, rw->second) == y);

  CHECK(i2.green(Green::J, x, i2.parse("(z,[]^-1[])")));
  CHECK_FALSE(i2.green(Green::J, x, BrElem::zero()));
  CHECK(i2.green(Green::D, BrElem::zero(), BrElem::zero()));
  CHECK_FALSE(i2.green(Green::D, x, i2.parse("(z,1)")));
}

TEST_CASE("0-simplicity witness examples") {
  auto const c2     = context("C2", "id", 2);
  auto const a      = c2.parse("(g,[]^-1[])");
  auto const b      = c2.parse("(g,[a]^-1[a])");
  auto const [x, y] = c2.zero_simple_witness(a, b);
  CHECK(x == c2.parse("(g,[]^-1[aa])"));
  CHECK(y == c2.parse("(g,[aa]^-1[])"));
  CHECK(c2.mul(x, b, y) == a);

  for (auto const& ext : {context("C3", "id", 1), context("I2", "one", 2)}) {
    auto const one = ext.identity();
    auto const [p, q] = ext.zero_simple_witness(one, one);
    CHECK(ext.mul(p, one, q) == one);
  }
  CHECK_THROWS_AS(c2.zero_simple_witness(a, BrElem::zero()), Error);
}

TEST_CASE("quotient examples") {
  auto const c2 = context("C2", "id", 2);
  CHECK(c2.quotient(c2.parse("(g,[a]^-1[b])")) == parse_pelem("[a]^-1[b]"));
  CHECK(c2.quotient(BrElem::zero()).is_zero());
}

TEST_CASE("centre and unit examples") {
  auto const id  = context("C2", "id", 2);
  auto const one = context("C2", "one", 2);
  CHECK(id.is_in_center(id.parse("(g,1)")));
  CHECK(id.is_unit(id.parse("(g,1)")));
  CHECK_FALSE(one.is_in_center(one.parse("(g,1)")));
  CHECK(one.is_unit(one.parse("(g,1)")));
  for (auto const* ext : {&id, &one}) {
    auto const x = ext->parse("(e,[a]^-1[a])");
    CHECK_FALSE(ext->is_in_center(x));
    CHECK_FALSE(ext->is_unit(x));
  }
  CHECK(id.is_in_center(BrElem::zero()));
  CHECK_FALSE(id.is_unit(BrElem::zero()));
}

TEST_CASE("0-E-unitary examples") {
  CHECK(context("chain2", "one", 2).is_zero_e_unitary());
  CHECK(context("C2", "id", 2).is_zero_e_unitary());
  auto const c2 = context("C2", "one", 2);
  CHECK_FALSE(c2.is_zero_e_unitary());
  auto const e = c2.parse("(e,[a]^-1[a])");
  auto const s = c2.parse("(g,1)");
  CHECK(c2.mul(e, s) == e);
  CHECK(c2.is_idempotent(e));
  CHECK_FALSE(c2.is_idempotent(s));
  CHECK_FALSE(context("I2", "one", 2).is_zero_e_unitary());
  CHECK_FALSE(context("lz2", "one", 2).is_zero_e_unitary());
}

TEST_CASE("solver examples") {
  auto const c2 = context("C2", "id", 2);
  CHECK(c2.solve_right(c2.parse("(e,[]^-1[a])"), c2.parse("(e,[]^-1[ab])"))
        == std::vector<BrElem>{c2.parse("(e,[]^-1[b])"), c2.parse("(e,[a]^-1[ab])")});
  auto const triv = context("trivial", "one", 2);
  CHECK(triv.solve_right(triv.identity(), triv.identity())
        == std::vector<BrElem>{triv.identity()});
  CHECK(c2.solve_right(c2.parse("(e,[]^-1[a])"), c2.parse("(e,[]^-1[b])"))
        == std::vector<BrElem>{c2.parse("(e,[a]^-1[b])")});
  // Every product a*x keeps the letter a at the end of its left word.
  CHECK(c2.solve_right(c2.parse("(e,[a]^-1[])"), c2.identity()).empty());

  // x*a = b with a = (e,[a]^-1[]) has one solution per suffix of [a].
  auto const left = c2.solve_left(c2.parse("(e,[a]^-1[])"), c2.parse("(e,[a]^-1[])"));
  CHECK(left.size() == 2);
}

TEST_CASE("embedding examples") {
  auto const c2 = context("C2", "id", 2);
  for (Element s = 0; s < 2; ++s)
    for (Element t = 0; t < 2; ++t)
      CHECK(c2.mul(c2.embed_s(Word{}, s), c2.embed_s(Word{}, t))
            == c2.embed_s(Word{}, c2.monoid().product(s, t)));
  CHECK(c2.mul(c2.embed_p(0, parse_pelem("[]^-1[a]")), c2.embed_p(0, parse_pelem("[a]^-1[]")))
        == c2.embed_p(0, PElem::one()));
  CHECK(c2.embed_p(0, PElem::zero()).is_zero());
  CHECK_THROWS_AS(c2.embed_p(1, PElem::one()), Error);
  auto const g = c2.parse("(g,1)");
  CHECK(c2.mul(g, g) != g);
}

TEST_CASE("translation examples") {
  auto const c2 = context("C2", "id", 2);
  verify::Fragment const f(c2, 2);
  for (auto const& x : f) {
    CHECK(c2.translate(Word{}, Word{}, x) == x);
    auto const y = c2.translate(Word{0}, Word{1}, x);
    CHECK(c2.untranslate(Word{0}, Word{1}, y) == x);
    if (!x.is_zero()) {
      CHECK(y.left() == concat(x.left(), Word{0}));
      CHECK(y.right() == concat(x.right(), Word{1}));
    }
    CHECK(c2.in_translated_copy(Word{0}, Word{1}, y));
  }
}

TEST_CASE("slice metric examples") {
  auto const c2 = context("C2", "id", 2);
  auto const d  = SliceMetric::discrete(c2.monoid());
  auto const x  = c2.parse("(e,[a]^-1[a])");
  CHECK(d(x, x) == 0.0);
  CHECK(d(x, c2.parse("(g,[a]^-1[a])")) == 1.0);
  CHECK(d(x, c2.parse("(e,[b]^-1[b])")) == 1.0);
  CHECK(d(x, BrElem::zero()) == 1.0);

  auto const c3  = context("C3", "id", 2);
  auto const gap = SliceMetric::index_gap(c3.monoid());
  CHECK(gap(c3.parse("(s0,1)"), c3.parse("(s2,1)")) == doctest::Approx(2.0 / 3.0));
  CHECK_THROWS_AS(SliceMetric(c2.monoid(), {{0, 2}, {2, 0}}), Error);
  CHECK_THROWS_AS(SliceMetric(c2.monoid(), {{0, 0.5}, {0.25, 0}}), Error);
  CHECK_THROWS_AS(SliceMetric(c2.monoid(), {{0, 0}, {0, 0}}), Error);
  CHECK_THROWS_AS(SliceMetric(c3.monoid(), {{0, 0.1, 1}, {0.1, 0, 0.1}, {1, 0.1, 0}}),
                  Error);
}

TEST_CASE("element text grammar") {
  auto const i2 = context("I2", "one", 2);
  CHECK(i2.render(i2.parse("(b,[a]^-1[])")) == "(s4,[a]^-1[])");
  CHECK(i2.parse("( s4 , [a]^-1[] )") == i2.parse("(b,[a]^-1[])"));
  CHECK(i2.parse("0").is_zero());
  CHECK(i2.render(BrElem::zero()) == "0");
  CHECK(i2.render(i2.identity()) == "(s0,1)");
  CHECK(i2.parse_product("(s1,1) * 0 * (t,[]^-1[b])").size() == 3);

  CHECK_THROWS_AS(i2.parse("(s7,1)"), ParseError);
  CHECK_THROWS_AS(i2.parse("(w,1)"), ParseError);
  CHECK_THROWS_AS(i2.parse("(s0,0)"), ParseError);
  CHECK_THROWS_AS(i2.parse("(s0,[c]^-1[])"), ParseError);
  CHECK_THROWS_AS(i2.parse("(s0,1) junk"), ParseError);
  CHECK_THROWS_AS(i2.parse_product("(s0,1) *"), ParseError);
  try {
    i2.parse("(s0,[a]^-1[b]");
    FAIL("accepted a truncated literal");
  } catch (ParseError const& e) {
    CHECK(e.position() == 13);
  }
  CHECK_THROWS_AS(i2.check(BrElem(9, PElem::one())), Error);
  CHECK_THROWS_AS(BrElem(0, PElem::zero()), Error);
}

TEST_CASE("render and parse round trip on seeded random literals") {
  std::mt19937_64 rng(7);
  for (auto const& ext : matrix()) {
    verify::Fragment const f(ext, 3);
    for (int i = 0; i < 200; ++i) {
      auto const& x    = f[rng() % f.size()];
      auto const  text = ext.render(x);
      CHECK(ext.parse(text) == x);
      CHECK(ext.render(ext.parse(text)) == text);
    }
  }
  Extension const wide(*monoids::builtin("C2"), Theta::identity(2), Alphabet(40));
  BrElem const    x(1, PElem(Word{39, 0}, Word{26}));
  CHECK(wide.render(x) == "(s1,[39.0]^-1[26])");
  CHECK(wide.parse(wide.render(x)) == x);
}
