#include <doctest.h>

#include <algorithm>
#include <random>

#include "dblpt/dpoint.hpp"
#include "dblpt/gf2.hpp"
#include "properties.hpp"
#include "reference.hpp"

using namespace dblpt;

namespace {

std::vector<QClass> as_classes(const std::vector<QMonomial>& ms) {
  std::vector<QClass> out;
  for (const auto& m : ms) out.push_back(q_class(m));
  return out;
}

}  // namespace

TEST_CASE("D2 basis is the four listed monomials") {
  for (int k = 2; k <= 10; ++k) {
    const auto basis = as_classes(d2_basis(k));
    REQUIRE(basis.size() == 4);
    CHECK(span_equal(basis, {ref::e13(k), ref::a(k), ref::b(k), ref::q(k)}));
  }
}

TEST_CASE("D2 basis agrees with a direct enumeration of height-2 monomials") {
  for (int k = 1; k <= 6; ++k) {
    const auto basis = as_classes(d2_basis(k));
    const auto direct = ref::enumerate_height_two(k);
    CHECK(basis.size() == direct.size());
    CHECK(span_equal(basis, direct));
  }
  const auto k1 = as_classes(d2_basis(1));
  CHECK(span_equal(k1, {ref::prod(EMonomial({1}), EMonomial({3})), ref::prod(EMonomial({2}), EMonomial({2})), ref::q(1)}));
}

TEST_CASE("named elements") {
  const D2Elements el = d2_elements(5);
  CHECK(q_class(el.e13) == ref::e13(5));
  CHECK(q_class(el.e22) == ref::a(5));
  CHECK(q_class(el.square) == ref::b(5));
  CHECK(q_class(el.q_top) == ref::q(5));
  CHECK_THROWS_AS(d2_elements(1), std::invalid_argument);
  CHECK_THROWS_AS(d2_closed_form(1), std::invalid_argument);
}

TEST_CASE("xi of Q^{k+2} e1^k follows the binomial sum and the residue table") {
  for (int k = 1; k <= 14; ++k) {
    CHECK_MESSAGE(xi_q_image(k) == ref::xi_q_binomial_sum(k), "k=" << k);
    CHECK_MESSAGE(xi_q_image(k) == ref::xi_q_table(k), "k=" << k);
  }
}

TEST_CASE("xi on the product basis elements") {
  for (int k = 2; k <= 14; ++k) {
    CHECK(xi_push(ref::e13(k), k) == MOClass(ref::odd_target(k)));
    CHECK(xi_push(ref::a(k), k) == MOClass(ref::even_target(k)));
    CHECK(xi_push(ref::b(k), k) == MOClass(ref::even_target(k)));
    CHECK(xi_push(ref::q(k), k) == ref::xi_q_table(k));
  }
  // Explicit small cases.
  CHECK(render(xi_push(ref::q(3), 3)) == "e[1,1,1,1,1,3] + e[1,1,1,1,2,2]");
  CHECK(xi_push(ref::q(4), 4).is_zero());
  CHECK(xi_push(ref::q(5), 5) == MOClass(e_pow({{1, 9}, {3, 1}})));
}

TEST_CASE("xi rejects classes outside dimension 2k+2") {
  CHECK_THROWS_AS(xi_push(ref::square(3), 3), DomainError);
  CHECK_THROWS_AS(xi_push(ref::qe(EMonomial({1, 1, 6})), 3), DomainError);
}

TEST_CASE("parity of the basis and of A + Q") {
  for (int k = 2; k <= 14; ++k) {
    CHECK(parity_decision(ref::e13(k), k) == Parity::Odd);
    CHECK(parity_decision(ref::a(k), k) == Parity::Even);
    CHECK(parity_decision(ref::b(k), k) == Parity::Even);
    const bool q_odd = k % 2 == 1;
    CHECK(parity_decision(ref::q(k), k) == (q_odd ? Parity::Odd : Parity::Even));
    if (k % 4 == 3) CHECK(parity_decision(ref::a(k) + ref::q(k), k) == Parity::Odd);
  }
  CHECK(odd_marker(3) == e_pow({{1, 5}, {3, 1}}));
  CHECK(std::string(to_string(Parity::Odd)) == "odd");
}

TEST_CASE("xi and parity are linear on random combinations") {
  std::mt19937 rng(props::kSeed);
  std::bernoulli_distribution coin(0.5);
  for (int k = 2; k <= 9; ++k) {
    const std::vector<QClass> basis{ref::e13(k), ref::a(k), ref::b(k), ref::q(k)};
    for (int trial = 0; trial < 12; ++trial) {
      QClass x, y;
      for (const auto& v : basis) {
        if (coin(rng)) x += v;
        if (coin(rng)) y += v;
      }
      CHECK(xi_push(x + y, k) == xi_push(x, k) + xi_push(y, k));
      const bool px = parity_decision(x, k) == Parity::Odd;
      const bool py = parity_decision(y, k) == Parity::Odd;
      CHECK((parity_decision(x + y, k) == Parity::Odd) == (px != py));
    }
  }
}
