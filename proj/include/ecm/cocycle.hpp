#pragma once

#include "ecm/braid_words.hpp"
#include "ecm/linalg.hpp"
#include "ecm/monodromy.hpp"

#include <cstddef>
#include <vector>

namespace ecm {

/// Evaluated cocycles (δ(γ_1), …, δ(γ_{r+2})) live in Q^{n(r+2)}; H is the
/// space of parabolic cocycles, E the coboundaries, W = H / E.
struct CocycleSpace {
  MonodromyTuple tuple;
  Subspace h;
  Subspace e;
  std::size_t w_dim = 0;
  Mat class_map;  // n(r+2) x w_dim: H-vector -> W-coordinates
  Mat section;    // w_dim x n(r+2): W-coordinates -> H-representative
};

CocycleSpace build_cocycle_space(const MonodromyTuple& t);

struct DeformationMatrix {
  Mat full;     // on the evaluation space
  Mat induced;  // on W
};

/// Matrix on the evaluation space sending δ to δ' with δ'(γ_i) = δ(d_i),
/// followed by componentwise right multiplication by `twist`.
Mat deformation_full_matrix(const MonodromyTuple& t, const TupleDeformation& d, const Mat& twist);

/// Throws std::logic_error when the full matrix fails to preserve H or E.
DeformationMatrix deformation_matrix(const CocycleSpace& space, const TupleDeformation& d, const Mat& twist);

struct ConvolutionMonodromy {
  ConvolutionTuple conv;
  CocycleSpace space;
  /// 19 local braids, then the inverses of the α̂ and β̂ matrices.
  std::vector<DeformationMatrix> matrices;

  std::vector<Mat> induced() const;
};

struct ConvolutionOptions {
  /// Local braid words; defaults to delta_words() (requires p = q = 7).
  std::vector<BraidWord> local_braids;
  bool parallel = true;
};

ConvolutionMonodromy convolution_monodromy(const MonodromyTuple& t1, const MonodromyTuple& t2,
                                           const ConvolutionOptions& options = {});

/// M_1 ⋯ M_k · [M_{k+1}, M_{k+2}] for the list produced above.
Mat elliptic_product(const std::vector<Mat>& induced);

}  // namespace ecm
