#pragma once

#include "ecm/braid_words.hpp"
#include "ecm/matrix.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace ecm {

/// (A_1, …, A_r, A, B) with A_1 ⋯ A_r [A, B] = 1, acting on row vectors.
struct MonodromyTuple {
  std::size_t rank = 0;
  std::vector<Mat> locals;
  Mat handle_a;
  Mat handle_b;

  std::size_t r() const { return locals.size(); }
  /// 1-based over locals then the handle pair.
  const Mat& generator(std::size_t k) const;
  std::vector<Mat> generators() const;

  static MonodromyTuple with_trivial_handle(std::vector<Mat> locals);
};

struct ValidationReport {
  bool ok = true;
  std::string failure;  // empty when ok
};

ValidationReport validate(const MonodromyTuple& t);
/// Throws std::invalid_argument with the failure text.
void require_valid(const MonodromyTuple& t);

/// r·n − Σ dim V^{A_i}. Throws std::domain_error when every local is the identity.
long euler_char(const MonodromyTuple& t);

long generic_rank_of_convolution(long rk1, long chi1, long rk2, long chi2);

/// Tuple of the pullback along x ↦ −x.
MonodromyTuple pullback_negation(const MonodromyTuple& t);

struct ConvolutionTuple {
  MonodromyTuple tuple;
  std::size_t p = 0, q = 0, n1 = 0, n2 = 0;
  Mat twist_alpha;  // 1 ⊗ C̃^{-1}
  Mat twist_beta;   // 1 ⊗ D̃^{-1}
};

/// Monodromy tuple of L_1 ⊗ L_2(−x) on the curve punctured at both singular sets.
ConvolutionTuple convolution_tuple(const MonodromyTuple& t1, const MonodromyTuple& t2);

/// Left-to-right product of the evaluated letters.
Mat evaluate_word(const MonodromyTuple& t, const GeneratorWord& w);

}  // namespace ecm
