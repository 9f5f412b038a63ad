#pragma once

#include "ecm/matrix.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

namespace ecm {

struct RrefResult {
  Mat form;                         // reduced row-echelon form, same shape as input
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each of the first `rank` rows
};

/// Exact Gauss-Jordan reduction. Rows are normalized after clearing
/// denominators so the working entries stay integral until the final scaling.
RrefResult rref(const Mat& m);
std::size_t rank(const Mat& m);

/// A linear subspace of Q^n stored by its RREF basis (canonical form).
/// Two subspaces are equal exactly when their RREF bases are identical.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim);  // zero subspace

  /// Span of the rows of `generators`.
  static Subspace span(const Mat& generators);
  static Subspace span(std::size_t ambient_dim, const std::vector<Vec>& generators);
  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == ambient_; }

  /// dim() x ambient_dim() matrix in RREF.
  const Mat& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }

  bool contains(std::span<const Rat> v) const;
  bool contains(const Subspace& other) const;
  /// Coordinates of v in the RREF basis; v must lie in the subspace.
  Vec coordinates(std::span<const Rat> v) const;
  /// Image of the subspace under v -> v * m.
  Subspace image_under(const Mat& m) const;
  /// True when v * m stays in the subspace for every v in it.
  bool is_invariant(const Mat& m) const;

  friend bool operator==(const Subspace& a, const Subspace& b) = default;

 private:
  std::size_t ambient_ = 0;
  Mat basis_;
  std::vector<std::size_t> pivots_;
};

/// Incrementally maintained RREF basis. `reduce` returns the residue of a
/// vector modulo the current span; `insert` adds it when independent.
/// Optionally tracks, for each stored row, the combination of inserted
/// vectors it came from (used for dependency relations).
class EchelonBasis {
 public:
  explicit EchelonBasis(std::size_t ambient_dim, bool track_combinations = false);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }

  /// Residue of v; when tracking, `combo` receives the combination of inserted
  /// vectors (with v itself at index `inserted()`) equal to the residue.
  Vec reduce(std::span<const Rat> v, Vec* combo = nullptr) const;
  bool contains(std::span<const Rat> v) const;
  /// Inserts v if independent; returns whether the span grew.
  bool insert(std::span<const Rat> v);
  std::size_t inserted() const { return inserted_; }

  Subspace subspace() const;

 private:
  std::size_t ambient_;
  bool track_;
  std::size_t inserted_ = 0;
  std::vector<Vec> rows_;
  std::vector<std::size_t> pivots_;
  std::vector<Vec> combos_;
};

/// {v : v m = 0}.
Subspace kernel(const Mat& m);
/// {v m : v}, the row space of m.
Subspace image(const Mat& m);
/// {v : v m = v}; throws std::invalid_argument for non-square m.
Subspace fixed_space(const Mat& m);

/// Some X with a * X == b, or nothing when the system is inconsistent.
std::optional<Mat> solve_right(const Mat& a, const Mat& b);
/// Some x with x * a == b for a row vector b.
std::optional<Vec> solve_left(const Mat& a, std::span<const Rat> b);

Subspace intersect(const Subspace& s1, const Subspace& s2);
Subspace sum(const Subspace& s1, const Subspace& s2);

struct QuotientBasis {
  /// Rows: vectors of the ambient subspace completing `sub` to a basis of it.
  Mat complement;
  /// n x q matrix; for v in the ambient subspace, v * projection gives the
  /// coordinates of v + sub in the basis `complement` of the quotient.
  Mat projection;
};

/// Throws std::invalid_argument when sub is not contained in ambient.
QuotientBasis quotient_basis(const Subspace& ambient, const Subspace& sub);

/// (a ⊗ b)[(i,k),(j,l)] = a[i,j] * b[k,l]; row index i * rows(b) + k.
Mat kronecker(const Mat& a, const Mat& b);

/// Smallest subspace containing `seeds` and closed under v -> v g for all g.
Subspace spin(const std::vector<Vec>& seeds, std::span<const Mat> generators);
Subspace spin(const Subspace& seeds, std::span<const Mat> generators);

/// Matrix of the action v -> v g restricted to an invariant subspace,
/// in the subspace's RREF basis.
Mat restrict_action(const Subspace& invariant, const Mat& g);

}  // namespace ecm
