#pragma once

#include "ecm/rational.hpp"

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace ecm {

using Vec = std::vector<Rat>;

/// Dense row-major matrix over the rationals.
///
/// Vectors are rows and matrices act on them from the right: the image of v
/// under M is v * M. Every module in the library follows this convention.
class Mat {
 public:
  Mat() = default;
  Mat(std::size_t rows, std::size_t cols);
  Mat(std::initializer_list<std::initializer_list<Rat>> rows);

  static Mat identity(std::size_t n);
  static Mat zero(std::size_t rows, std::size_t cols) { return Mat(rows, cols); }
  static Mat from_rows(const std::vector<Vec>& rows, std::size_t cols);
  static Mat row_vector(const Vec& v);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool is_square() const { return rows_ == cols_; }
  bool empty() const { return rows_ == 0 || cols_ == 0; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::span<Rat> row(std::size_t i) { return {data_.data() + i * cols_, cols_}; }
  std::span<const Rat> row(std::size_t i) const { return {data_.data() + i * cols_, cols_}; }
  Vec row_vec(std::size_t i) const;
  std::span<const Rat> entries() const { return data_; }

  Mat transpose() const;
  Mat block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Mat& b);
  Mat select_rows(std::span<const std::size_t> idx) const;
  Mat select_cols(std::span<const std::size_t> idx) const;

  bool is_zero() const;
  bool is_identity() const;

  Mat& operator+=(const Mat& o);
  Mat& operator-=(const Mat& o);
  Mat& operator*=(const Rat& s);

  friend bool operator==(const Mat& a, const Mat& b) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

Mat operator+(Mat a, const Mat& b);
Mat operator-(Mat a, const Mat& b);
Mat operator-(Mat a);
Mat operator*(const Mat& a, const Mat& b);
Mat operator*(Mat a, const Rat& s);
Mat operator*(const Rat& s, Mat a);

/// v * m for a row vector v.
Vec mul(std::span<const Rat> v, const Mat& m);

/// Vertical concatenation; column counts must agree.
Mat vstack(const Mat& top, const Mat& bottom);

std::optional<Mat> try_inverse(const Mat& m);
/// Throws std::domain_error when m is singular or not square.
Mat inverse(const Mat& m);
/// m^e for any integer e; negative exponents invert.
Mat power(const Mat& m, long e);
/// Left-to-right product of a list of square matrices of size n.
Mat product(std::span<const Mat> ms, std::size_t n);
Rat determinant(const Mat& m);
Rat trace(const Mat& m);

/// Conjugation x^y = y^-1 x y.
Mat conj(const Mat& x, const Mat& y);
/// Group commutator [x, y] = x y x^-1 y^-1.
Mat commutator(const Mat& x, const Mat& y);

std::string to_string(const Mat& m);

}  // namespace ecm
