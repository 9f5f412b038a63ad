#pragma once

#include "ecm/matrix.hpp"

#include <cstdint>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace ecm {

/// Univariate polynomial over Z, coefficients lowest degree first. The
/// leading coefficient is nonzero unless the polynomial is zero (empty).
class IntPoly {
 public:
  IntPoly() = default;
  explicit IntPoly(std::vector<Int> coeffs);
  IntPoly(std::initializer_list<long> coeffs);

  const std::vector<Int>& coeffs() const { return c_; }
  long degree() const { return static_cast<long>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Int& leading() const { return c_.back(); }
  Int content() const;
  /// Divides by the content and makes the leading coefficient positive.
  IntPoly primitive() const;
  IntPoly derivative() const;

  friend bool operator==(const IntPoly&, const IntPoly&) = default;
  friend IntPoly operator*(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator+(const IntPoly& a, const IntPoly& b);
  friend IntPoly operator-(const IntPoly& a, const IntPoly& b);

 private:
  std::vector<Int> c_;
};

std::string to_string(const IntPoly& p);

/// Exact quotient a / b over Z if b divides a, else nothing.
std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b);

/// f(m) for a square matrix m.
Mat evaluate(const IntPoly& f, const Mat& m);

/// Minimal polynomial of a square matrix, scaled to a primitive integer
/// polynomial with positive leading coefficient.
IntPoly min_poly(const Mat& m);

/// Factorization over Q into irreducible primitive integer factors with
/// multiplicities (squarefree decomposition, then Zassenhaus: factor modulo a
/// small prime, Hensel-lift, recombine). The product of factor^multiplicity
/// equals p up to a rational scalar. Factors are sorted by degree.
/// Throws std::invalid_argument for the zero polynomial.
std::vector<std::pair<IntPoly, int>> factor_squarefree_rational(const IntPoly& p, std::uint64_t seed = 0);

}  // namespace ecm
