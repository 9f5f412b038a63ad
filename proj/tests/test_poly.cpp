#include "ecm/poly.hpp"

#include "ecm/linalg.hpp"

#include <doctest.h>

#include <random>

using namespace ecm;

namespace {

IntPoly expand(const std::vector<std::pair<IntPoly, int>>& fs) {
  IntPoly out{1};
  for (const auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) out = out * f;
  return out;
}

std::vector<long> degrees(const std::vector<std::pair<IntPoly, int>>& fs) {
  std::vector<long> d;
  for (const auto& [f, m] : fs)
    for (int i = 0; i < m; ++i) d.push_back(f.degree());
  return d;
}

}  // namespace

TEST_CASE("basic polynomial arithmetic") {
  const IntPoly a{1, 1}, b{-1, 1};
  CHECK(a * b == IntPoly{-1, 0, 1});
  CHECK(a + b == IntPoly{0, 2});
  CHECK((a - a).is_zero());
  CHECK(IntPoly{2, 4, 6}.content() == 2);
  CHECK(IntPoly{-2, 0, -4}.primitive() == IntPoly{1, 0, 2});
  CHECK(IntPoly{1, 2, 3}.derivative() == IntPoly{2, 6});
  CHECK(to_string(IntPoly{-1, 0, 1}) == "x^2 - 1");
  auto q = divide_exact(IntPoly{-1, 0, 1}, a);
  REQUIRE(q);
  CHECK(*q == b);
  CHECK_FALSE(divide_exact(IntPoly{1, 0, 1}, a));
}

TEST_CASE("minimal polynomial") {
  CHECK(min_poly(Mat::identity(3)) == IntPoly{-1, 1});
  CHECK(min_poly(Mat{{0, -1}, {1, 0}}) == IntPoly{1, 0, 1});
  CHECK(min_poly(Mat{{1, 1}, {0, 1}}) == IntPoly{1, -2, 1});
  CHECK(min_poly(Mat{{Rat(1, 2), 0}, {0, 2}}) == IntPoly{2, -5, 2});
  const Mat m{{2, 1, 0}, {0, 2, 0}, {0, 0, 3}};
  const IntPoly f = min_poly(m);
  CHECK(f.degree() == 3);
  CHECK(evaluate(f, m).is_zero());
}

TEST_CASE("factorization over Q") {
  SUBCASE("irreducible quartic that splits modulo every prime") {
    auto fs = factor_squarefree_rational(IntPoly{1, 0, -10, 0, 1});
    REQUIRE(fs.size() == 1);
    CHECK(fs[0].first == IntPoly{1, 0, -10, 0, 1});
  }
  SUBCASE("cyclotomic product") {
    const IntPoly p = IntPoly{-1, 1} * IntPoly{1, 1, 1} * IntPoly{1, 0, 1} * IntPoly{1, 1, 1, 1, 1};
    auto fs = factor_squarefree_rational(p);
    CHECK(degrees(fs) == std::vector<long>{1, 2, 2, 4});
    CHECK(expand(fs) == p);
  }
  SUBCASE("repeated factors and content") {
    const IntPoly p = IntPoly{3} * IntPoly{-2, 1} * IntPoly{-2, 1} * IntPoly{1, 0, 1};
    auto fs = factor_squarefree_rational(p);
    REQUIRE(fs.size() == 2);
    CHECK(fs[0].first == IntPoly{-2, 1});
    CHECK(fs[0].second == 2);
    CHECK(fs[1].first == IntPoly{1, 0, 1});
  }
  SUBCASE("non-monic factors") {
    const IntPoly p = IntPoly{1, 3} * IntPoly{-5, 0, 2} * IntPoly{7, 1, 0, 4};
    auto fs = factor_squarefree_rational(p);
    CHECK(degrees(fs) == std::vector<long>{1, 2, 3});
    CHECK(expand(fs) == p);
  }
  SUBCASE("swinnerton-dyer type product") {
    const IntPoly sd{1, 0, -10, 0, 1};
    const IntPoly p = sd * IntPoly{-2, 0, 1} * IntPoly{-3, 0, 1};
    auto fs = factor_squarefree_rational(p);
    CHECK(degrees(fs) == std::vector<long>{2, 2, 4});
    CHECK(expand(fs) == p);
  }
  CHECK_THROWS_AS(factor_squarefree_rational(IntPoly{}), std::invalid_argument);
}

TEST_CASE("factorization reassembles random products") {
  std::mt19937_64 rng(11);
  std::uniform_int_distribution<long> c(-4, 4);
  for (int trial = 0; trial < 30; ++trial) {
    IntPoly p{1};
    for (int k = 0; k < 3; ++k) {
      std::vector<Int> co;
      for (int i = 0; i < 3; ++i) co.emplace_back(c(rng));
      co.emplace_back(1 + trial % 3);
      p = p * IntPoly(co);
    }
    auto fs = factor_squarefree_rational(p, static_cast<std::uint64_t>(trial));
    IntPoly e = expand(fs);
    CHECK(e == p.primitive());
    for (const auto& [f, m] : fs) {
      CHECK(f == f.primitive());
      CHECK(m >= 1);
      if (f.degree() >= 2)
        CHECK(factor_squarefree_rational(f).size() == 1);
    }
  }
}
