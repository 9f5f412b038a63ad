#include "ecm/linalg.hpp"

#include "support.hpp"

#include <doctest.h>

using namespace ecm;
using ecm::testing::random_mat;

TEST_CASE("rational parsing and printing") {
  CHECK(to_string(parse_rat("-6/4")) == "-3/2");
  CHECK(to_string(parse_rat("7")) == "7");
  CHECK(to_string(parse_rat("4/2")) == "2");
  CHECK_THROWS_AS(parse_rat("1/0"), std::invalid_argument);
  CHECK_THROWS_AS(parse_rat("x"), std::invalid_argument);
}

TEST_CASE("rref examples") {
  auto id = rref(Mat::identity(3));
  CHECK(id.form == Mat::identity(3));
  CHECK(id.rank == 3);

  auto z = rref(Mat(2, 5));
  CHECK(z.form == Mat(2, 5));
  CHECK(z.rank == 0);

  CHECK(rank(Mat{{1, 2}, {2, 4}}) == 1);
  CHECK(rref(Mat{{2, 4}, {1, 3}}).form == Mat::identity(2));
  CHECK(rref(Mat{{0, 3, 6}, {0, 1, 1}}).form == Mat{{0, 1, 0}, {0, 0, 1}});
}

TEST_CASE("kernel, image and fixed space use rows") {
  const Mat j{{1, 1}, {0, 1}};
  CHECK(fixed_space(j) == Subspace::span(Mat{{0, 1}}));
  CHECK(image(j - Mat::identity(2)) == Subspace::span(Mat{{0, 1}}));
  CHECK(fixed_space(Mat::identity(4)).is_full());
  CHECK_THROWS_AS(fixed_space(Mat(2, 3)), std::invalid_argument);
  CHECK(kernel(Mat{{1, 2}, {2, 4}}) == Subspace::span(Mat{{2, -1}}));
}

TEST_CASE("solve, intersect, sum, quotient") {
  const Mat a{{1, 2}, {3, 4}};
  const Mat b{{5}, {6}};
  auto x = solve_right(a, b);
  REQUIRE(x);
  CHECK(a * *x == b);
  CHECK_FALSE(solve_right(Mat{{1, 1}, {1, 1}}, Mat{{1}, {2}}));

  auto v = solve_left(a, Vec{Rat(1), Rat(0)});
  REQUIRE(v);
  CHECK(mul(*v, a) == Vec{Rat(1), Rat(0)});

  const Subspace e1 = Subspace::span(Mat{{1, 0, 0}});
  const Subspace e2 = Subspace::span(Mat{{0, 1, 0}});
  CHECK(intersect(e1, e2).is_zero());
  CHECK(sum(e1, Subspace::span(Mat{{1, 1, 0}})).dim() == 2);

  const Subspace full = Subspace::full(3);
  auto q = quotient_basis(full, e1);
  CHECK(q.complement.rows() == 2);
  CHECK(q.complement * q.projection == Mat::identity(2));
  CHECK(mul(Vec{Rat(1), Rat(0), Rat(0)}, q.projection) == Vec{Rat(0), Rat(0)});
  CHECK_THROWS_AS(quotient_basis(e1, e2), std::invalid_argument);
}

TEST_CASE("kronecker examples") {
  CHECK(kronecker(Mat::identity(2), Mat::identity(2)) == Mat::identity(4));
  const Mat k = kronecker(Mat{{1, 1}, {0, 1}}, Mat::identity(2));
  CHECK(k == Mat{{1, 0, 1, 0}, {0, 1, 0, 1}, {0, 0, 1, 0}, {0, 0, 0, 1}});
  CHECK(kronecker(Mat{{2}}, Mat{{1, 2}, {3, 4}}) == Mat{{2, 4}, {6, 8}});
}

TEST_CASE("subspace calculus properties on random matrices") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 40; ++trial) {
    std::uniform_int_distribution<int> dim(1, 6);
    const std::size_t r = static_cast<std::size_t>(dim(rng)), c = static_cast<std::size_t>(dim(rng));
    const Mat m = random_mat(r, c, rng, -2, 2);
    const auto once = rref(m);
    CHECK(rref(once.form).form == once.form);
    CHECK(rank(m) + kernel(m).dim() == r);
    CHECK(rank(m) + kernel(m.transpose()).dim() == c);

    const Subspace s1 = Subspace::span(random_mat(static_cast<std::size_t>(dim(rng)), c, rng, -2, 2));
    const Subspace s2 = Subspace::span(random_mat(static_cast<std::size_t>(dim(rng)), c, rng, -2, 2));
    CHECK(s1.dim() + s2.dim() == sum(s1, s2).dim() + intersect(s1, s2).dim());
    CHECK(sum(s1, s2).contains(s1));
    CHECK(s1.contains(intersect(s1, s2)));

    const Mat a = random_mat(2, 2, rng), b = random_mat(2, 3, rng), cc = random_mat(2, 2, rng),
              d = random_mat(3, 2, rng);
    CHECK(kronecker(a, b) * kronecker(cc, d) == kronecker(a * cc, b * d));
  }
}

TEST_CASE("spin and restriction") {
  const Mat g{{0, 1, 0}, {0, 0, 1}, {1, 0, 0}};
  const std::vector<Mat> gens{g};
  const Subspace ones = spin(std::vector<Vec>{Vec{Rat(1), Rat(1), Rat(1)}}, gens);
  CHECK(ones.dim() == 1);
  CHECK(restrict_action(ones, g) == Mat{{1}});
  CHECK(spin(std::vector<Vec>{Vec{Rat(1), Rat(0), Rat(0)}}, gens).is_full());
  CHECK_THROWS(restrict_action(Subspace::span(Mat{{1, 0, 0}}), g));
}

TEST_CASE("inverse and determinant") {
  const Mat m{{2, 1}, {7, 4}};
  CHECK(m * inverse(m) == Mat::identity(2));
  CHECK(determinant(m) == 1);
  CHECK_THROWS_AS(inverse(Mat{{1, 2}, {2, 4}}), std::domain_error);
  CHECK(power(m, -2) * power(m, 2) == Mat::identity(2));
}
