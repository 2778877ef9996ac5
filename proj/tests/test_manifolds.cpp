#include <doctest.h>

#include <stdexcept>

#include "dblpt/manifolds.hpp"

using namespace dblpt;

namespace {

std::vector<ManifoldSpec> sample_manifolds() {
  std::vector<ManifoldSpec> out;
  for (int a = 1; a <= 16; ++a) out.push_back({ManifoldSpec::Kind::RPProduct, {a}});
  for (int r = 1; r <= 4; ++r)
    for (int s = 1; s <= 4; ++s) out.push_back({ManifoldSpec::Kind::RPProduct, {1 << r, 1 << s}});
  for (int r = 1; r <= 4; ++r) out.push_back({ManifoldSpec::Kind::Dold, {r}});
  out.push_back({ManifoldSpec::Kind::Sphere, {5}});
  return out;
}

}  // namespace

TEST_CASE("tangent times normal class is 1") {
  for (const auto& m : sample_manifolds()) {
    const TruncRing ring = m.ring();
    CHECK_MESSAGE(ring.mul(total_tangent_sw(m), total_normal_sw(m)) == ring.one(), m.render());
  }
}

TEST_CASE("Dold manifold classes") {
  const ManifoldSpec v{ManifoldSpec::Kind::Dold, {2}};
  CHECK(v.dimension() == 5);
  CHECK(v.ring().render(total_normal_sw(v)) == "1 + d + c*d");
  for (int r = 2; r <= 4; ++r) {
    const ManifoldSpec d{ManifoldSpec::Kind::Dold, {r}};
    const TruncRing ring = d.ring();
    const auto wbar = total_normal_sw(d);
    CHECK(ring.component(wbar, 1).is_zero());
    CHECK(ring.component(wbar, 2) == ring.gen(1));
    const int q = 1 << (r - 1);
    Exponents cd{1, q - 1};
    CHECK(ring.component(wbar, (1 << r) - 1) == ring.monomial(cd));
    CHECK(sw_number(d, {2, (1 << r) - 1}));
  }
}

TEST_CASE("normal numbers of products of projective spaces") {
  const std::pair<int, int> cases[] = {{1, 1}, {2, 1}, {2, 2}, {3, 2}};
  for (auto [r, s] : cases) {
    const ManifoldSpec m{ManifoldSpec::Kind::RPProduct, {1 << r, 1 << s}};
    CHECK(sw_number(m, {2, (1 << r) + (1 << s) - 2}));
  }
  // RP^5 bounds, so every number vanishes.
  const ManifoldSpec rp5{ManifoldSpec::Kind::RPProduct, {5}};
  CHECK_FALSE(sw_number(rp5, {5}));
  CHECK_FALSE(sw_number(rp5, {2, 3}));
  // RP^2: wbar = 1 + a, so wbar_1^2 = 1 and wbar_2 = 0.
  const ManifoldSpec rp2{ManifoldSpec::Kind::RPProduct, {2}};
  CHECK(sw_number(rp2, {1, 1}));
  CHECK_FALSE(sw_number(rp2, {2}));
}

TEST_CASE("spheres have trivial classes") {
  const ManifoldSpec s{ManifoldSpec::Kind::Sphere, {5}};
  CHECK(total_normal_sw(s) == s.ring().one());
  CHECK_FALSE(sw_number(s, {2, 3}));
}

TEST_CASE("degree mismatch is rejected") {
  const ManifoldSpec v{ManifoldSpec::Kind::Dold, {2}};
  CHECK_THROWS_AS(sw_number(v, {2, 2}), std::invalid_argument);
}

TEST_CASE("manifold parsing") {
  CHECK(parse_manifold("RP(4)xRP(2)").params == std::vector<int>{4, 2});
  CHECK(parse_manifold(" RP( 4 ) x RP(2) ").render() == "RP(4)xRP(2)");
  CHECK(parse_manifold("Dold(r=3)").dimension() == 9);
  CHECK(parse_manifold("Sphere(7)").kind == ManifoldSpec::Kind::Sphere);
  CHECK_THROWS_AS(parse_manifold("CP(2)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifold("RP(0)"), std::invalid_argument);
  CHECK_THROWS_AS(parse_manifold("Dold(r=0)"), std::invalid_argument);
}

TEST_CASE("truncated ring arithmetic") {
  const TruncRing ring({{"a", 1, 3}});
  const auto a = ring.gen(0);
  CHECK(ring.pow(a, 3).is_zero());
  CHECK(ring.inverse(ring.one() + a) == ring.one() + a + ring.pow(a, 2));
  CHECK_THROWS_AS(ring.inverse(a), std::invalid_argument);
  CHECK_THROWS_AS(TruncRing({{"b", 0, 2}}), std::invalid_argument);
}
