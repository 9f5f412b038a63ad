#include "ecm/modp.hpp"

#include <doctest.h>

#include <random>

using namespace ecm;
using namespace ecm::modp;

TEST_CASE("field arithmetic") {
  const Field F(101);
  CHECK(F.mul(F.inv(37), 37) == 1);
  CHECK(F.reduce(Rat(1, 2)) == 51);
  CHECK(F.reduce(Int(-1)) == 100);
  CHECK_THROWS_AS(F.reduce(Rat(1, 101)), std::domain_error);
  CHECK(is_prime(101));
  CHECK_FALSE(is_prime(91));
}

TEST_CASE("polynomial factorization modulo p") {
  const Field F(5);
  std::mt19937_64 rng(1);
  // x^2 + 1 = (x - 2)(x - 3) over F_5
  auto fs = factor_squarefree(Poly{1, 0, 1}, F, rng);
  CHECK(fs.size() == 2);
  CHECK(count_factors_squarefree(Poly{1, 0, 1}, F) == 2);
  const Field G(7);
  CHECK(factor_squarefree(Poly{1, 0, 1}, G, rng).size() == 1);
  // (x + 1)^3 (x^2 + x + 1) over F_7
  Poly f = mul(mul(Poly{1, 1}, mul(Poly{1, 1}, Poly{1, 1}, G), G), Poly{1, 1, 1}, G);
  auto irr = irreducible_factors(f, G, rng);
  std::size_t product_degree = 0;
  for (const auto& g : irr) product_degree += static_cast<std::size_t>(degree(g));
  CHECK(product_degree <= 3);
  CHECK(!irr.empty());
}

TEST_CASE("gcd and xgcd") {
  const Field F(101);
  Poly a = mul(Poly{1, 1}, Poly{2, 1}, F), b = mul(Poly{1, 1}, Poly{3, 1}, F);
  CHECK(gcd(a, b, F) == Poly{1, 1});
  Poly s, t;
  Poly g = xgcd(a, b, s, t, F);
  CHECK(add(mul(s, a, F), mul(t, b, F), F) == g);
}

TEST_CASE("charpoly and kernels") {
  const Field F(101);
  ModMat m = ModMat::reduce(Mat{{1, 1}, {0, 1}}, F);
  CHECK(charpoly(m, F) == Poly{1, F.neg(2), 1});
  CHECK(evaluate(charpoly(m, F), m, F) == ModMat(2, 2));
  ModMat z = ModMat::reduce(Mat{{1, 2}, {2, 4}}, F);
  CHECK(rank(z, F) == 1);
  CHECK(left_kernel(z, F).size() == 1);
}

TEST_CASE("charpoly annihilates random matrices") {
  const Field F(103);
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<u64> d(0, 102);
  for (int trial = 0; trial < 20; ++trial) {
    ModMat m(6, 6);
    for (std::size_t i = 0; i < 6; ++i)
      for (std::size_t j = 0; j < 6; ++j) m(i, j) = d(rng);
    const Poly c = charpoly(m, F);
    CHECK(degree(c) == 6);
    CHECK(evaluate(c, m, F) == ModMat(6, 6));
  }
}
