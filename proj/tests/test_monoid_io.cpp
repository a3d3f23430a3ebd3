#include "doctest.h"
#include "polyext/monoid_io.hpp"

using namespace polyext;

namespace {
  std::filesystem::path data(char const* name) {
    return std::filesystem::path(POLYEXT_DATA_DIR) / name;
  }
}  // namespace

TEST_CASE("shipped I2 and C2 files match the built-ins") {
  auto const i2 = load_monoid_json(data("I2.json"));
  CHECK(i2.monoid == *monoids::builtin("I2"));
  CHECK(i2.monoid.names() == monoids::builtin("I2")->names());
  REQUIRE(i2.theta.has_value());
  CHECK(*i2.theta == Theta::constant(7, 0));

  auto const c2 = load_monoid_json(data("C2.json"));
  CHECK(c2.monoid == *monoids::builtin("C2"));
  CHECK(*c2.theta == Theta::identity(2));
}

TEST_CASE("round trip through JSON") {
  for (auto const& name : monoids::builtin_names()) {
    auto const m    = *monoids::builtin(name);
    auto const spec = parse_monoid_json(to_json(m, Theta::constant(m.size(), m.identity())));
    CHECK(spec.monoid == m);
    CHECK(spec.monoid.name() == m.name());
    CHECK(spec.monoid.names() == m.names());
    CHECK(*spec.theta == Theta::constant(m.size(), m.identity()));
    CHECK_FALSE(parse_monoid_json(to_json(m)).theta.has_value());
  }
}

TEST_CASE("rejected monoid files") {
  CHECK_THROWS_AS(parse_monoid_json(std::string_view("{")), Error);
  CHECK_THROWS_AS(parse_monoid_json(std::string_view("[]")), Error);
  CHECK_THROWS_AS(parse_monoid_json(std::string_view(
                      R"({"name":"x","size":2,"identity":0,"table":[[0,1],[1]]})")),
                  Error);
  CHECK_THROWS_AS(parse_monoid_json(std::string_view(
                      R"({"name":"x","size":2,"identity":0,"table":[[0,1],[1,7]]})")),
                  Error);
  CHECK_THROWS_AS(parse_monoid_json(std::string_view(
                      R"({"name":"x","size":2,"table":[[0,1],[1,0]]})")),
                  Error);
  CHECK_THROWS_AS(load_monoid_json(data("missing.json")), Error);

  try {
    load_monoid_json(data("nonassociative.json"));
    FAIL("accepted a non-associative table");
  } catch (InvalidMonoid const& e) {
    CHECK(e.violation().kind == MonoidViolation::Kind::associativity);
    CHECK(e.violation().x == 1);
    CHECK(e.violation().y == 1);
    CHECK(e.violation().z == 1);
  }

  try {
    load_monoid_json(data("chain_bad_theta.json"));
    FAIL("accepted theta outside the units");
  } catch (InvalidTheta const& e) {
    CHECK(e.violation().kind == ThetaViolation::Kind::not_unit);
  }
}

TEST_CASE("theta documents") {
  CHECK(parse_theta_json(nlohmann::json::parse("[0, 1]")) == Theta::identity(2));
  CHECK(parse_theta_json(nlohmann::json::parse(R"({"theta": [0, 0]})"))
        == Theta::constant(2, 0));
  CHECK_THROWS_AS(parse_theta_json(nlohmann::json::parse(R"({"map": [0]})")), Error);
  CHECK(load_theta_json(data("C2.json")) == Theta::identity(2));
}
