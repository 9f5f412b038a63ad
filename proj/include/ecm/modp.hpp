#pragma once

#include "ecm/matrix.hpp"

#include <cstddef>
#include <cstdint>
#include <random>
#include <span>
#include <vector>

/// Arithmetic over prime fields F_p with p < 2^32: dense polynomials and
/// matrices. Used by the Zassenhaus factorizer and the finite-field Meataxe.
namespace ecm::modp {

using u64 = std::uint64_t;

struct Field {
  u64 p;

  explicit Field(u64 prime);
  u64 add(u64 a, u64 b) const { u64 s = a + b; return s >= p ? s - p : s; }
  u64 sub(u64 a, u64 b) const { return a >= b ? a - b : a + p - b; }
  u64 neg(u64 a) const { return a == 0 ? 0 : p - a; }
  u64 mul(u64 a, u64 b) const { return (a * b) % p; }
  u64 pow(u64 a, u64 e) const;
  u64 inv(u64 a) const;
  /// Reduces a rational with denominator prime to p; throws std::domain_error
  /// when p divides the denominator.
  u64 reduce(const Rat& x) const;
  u64 reduce(const Int& x) const;
};

bool is_prime(u64 n);

// --- polynomials, coefficients lowest degree first, no trailing zeros -------

using Poly = std::vector<u64>;

inline long degree(const Poly& f) { return static_cast<long>(f.size()) - 1; }
void trim(Poly& f);
Poly add(const Poly& a, const Poly& b, const Field& F);
Poly sub(const Poly& a, const Poly& b, const Field& F);
Poly mul(const Poly& a, const Poly& b, const Field& F);
Poly scale(const Poly& a, u64 s, const Field& F);
/// a = q b + r with deg r < deg b; b nonzero.
void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F);
Poly rem(const Poly& a, const Poly& b, const Field& F);
Poly quo(const Poly& a, const Poly& b, const Field& F);
Poly monic(const Poly& a, const Field& F);
Poly gcd(Poly a, Poly b, const Field& F);
/// g = s a + t b, g monic.
Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t, const Field& F);
Poly derivative(const Poly& f, const Field& F);
Poly powmod(const Poly& base, u64 e, const Poly& mod, const Field& F);

/// Irreducible monic factors of a monic squarefree polynomial
/// (distinct-degree then Cantor-Zassenhaus equal-degree splitting).
std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::mt19937_64& rng);
/// Distinct irreducible monic factors of any nonzero polynomial.
std::vector<Poly> irreducible_factors(const Poly& f, const Field& F, std::mt19937_64& rng);
/// Number of irreducible factors of a monic squarefree polynomial, via the
/// distinct-degree split only.
std::size_t count_factors_squarefree(const Poly& f, const Field& F);

// --- matrices ----------------------------------------------------------------

class ModMat {
 public:
  ModMat() = default;
  ModMat(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols, 0) {}
  static ModMat identity(std::size_t n);
  static ModMat reduce(const Mat& m, const Field& F);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  u64& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  u64 operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }
  std::span<const u64> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }

  ModMat transpose() const;
  friend bool operator==(const ModMat&, const ModMat&) = default;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  std::vector<u64> data_;
};

using ModVec = std::vector<u64>;

ModMat mul(const ModMat& a, const ModMat& b, const Field& F);
ModVec mul(std::span<const u64> v, const ModMat& m, const Field& F);
ModMat add(const ModMat& a, const ModMat& b, const Field& F);
ModMat scale(const ModMat& a, u64 s, const Field& F);
/// Evaluates f at the square matrix m.
ModMat evaluate(const Poly& f, const ModMat& m, const Field& F);
/// Characteristic polynomial (monic) via reduction to Hessenberg form.
Poly charpoly(const ModMat& m, const Field& F);

/// Incremental RREF basis over F_p.
class ModEchelon {
 public:
  ModEchelon(std::size_t n, const Field& F) : n_(n), F_(F) {}
  std::size_t dim() const { return rows_.size(); }
  std::size_t ambient_dim() const { return n_; }
  ModVec reduce(std::span<const u64> v) const;
  bool insert(std::span<const u64> v);
  /// Rows in RREF order (sorted by pivot).
  const std::vector<ModVec>& rows() const { return rows_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  /// Coordinates of a vector of the span in the stored rows.
  ModVec coordinates(std::span<const u64> v) const;

 private:
  std::size_t n_;
  Field F_;
  std::vector<ModVec> rows_;
  std::vector<std::size_t> pivots_;
};

/// {v : v m = 0} as a list of basis rows.
std::vector<ModVec> left_kernel(const ModMat& m, const Field& F);
std::size_t rank(const ModMat& m, const Field& F);

/// Closure of the seeds under v -> v g.
ModEchelon spin(const std::vector<ModVec>& seeds, std::span<const ModMat> gens, const Field& F);

}  // namespace ecm::modp
