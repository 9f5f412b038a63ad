#include "ecm/cocycle.hpp"

#include <future>
#include <stdexcept>
#include <string>

namespace ecm {

CocycleSpace build_cocycle_space(const MonodromyTuple& t) {
  require_valid(t);
  const std::size_t n = t.rank, r = t.r(), big = n * (r + 2);
  const Mat id = Mat::identity(n);
  const Mat& a = t.handle_a;
  const Mat& b = t.handle_b;
  const Mat ba_inv = inverse(b) * inverse(a);

  // Parameters (u_1, …, u_r, v_{r+1}, v_{r+2}) with v_i = u_i (A_i − 1).
  Mat param_to_cocycle(big, big);
  for (std::size_t i = 0; i < r; ++i) param_to_cocycle.set_block(i * n, i * n, t.locals[i] - id);
  param_to_cocycle.set_block(r * n, r * n, id);
  param_to_cocycle.set_block((r + 1) * n, (r + 1) * n, id);

  // Σ v_i A_{i+1} ⋯ A_r + v_{r+1} (B − 1) B^{-1} A^{-1} + v_{r+2} (1 − A) B^{-1} A^{-1} = 0
  Mat relation(big, n);
  Mat suffix = id;
  for (std::size_t i = r; i-- > 0;) {
    relation.set_block(i * n, 0, (t.locals[i] - id) * suffix);
    suffix = t.locals[i] * suffix;
  }
  relation.set_block(r * n, 0, (b - id) * ba_inv);
  relation.set_block((r + 1) * n, 0, (id - a) * ba_inv);

  CocycleSpace s;
  s.tuple = t;
  const Subspace params = kernel(relation);
  s.h = image(params.basis() * param_to_cocycle);

  Mat coboundary(n, big);
  for (std::size_t k = 1; k <= r + 2; ++k) coboundary.set_block(0, (k - 1) * n, t.generator(k) - id);
  s.e = image(coboundary);

  QuotientBasis qb = quotient_basis(s.h, s.e);
  s.w_dim = s.h.dim() - s.e.dim();
  s.section = std::move(qb.complement);
  s.class_map = std::move(qb.projection);
  return s;
}

Mat deformation_full_matrix(const MonodromyTuple& t, const TupleDeformation& d, const Mat& twist) {
  const std::size_t n = t.rank, len = t.r() + 2;
  if (d.size() != len)
    throw std::invalid_argument("deformation has " + std::to_string(d.size()) + " components, expected " +
                                std::to_string(len));
  if (twist.rows() != n || twist.cols() != n) throw std::invalid_argument("twist has the wrong size");
  std::vector<Mat> gens = t.generators();
  std::vector<Mat> invs;
  invs.reserve(len);
  for (const auto& g : gens) invs.push_back(inverse(g));

  Mat full(n * len, n * len);
  for (std::size_t i = 0; i < len; ++i) {
    const GeneratorWord& w = d[i];
    for (const auto& l : w)
      if (l.index < 1 || static_cast<std::size_t>(l.index) > len || (l.exponent != 1 && l.exponent != -1))
        throw std::out_of_range("deformation letter out of range in component " + std::to_string(i + 1));
    // δ(g_1 ⋯ g_m) = Σ_j δ(g_j) ρ(g_{j+1} ⋯ g_m), with δ(g^{-1}) = −δ(g) ρ(g)^{-1}
    Mat suffix = Mat::identity(n);
    for (std::size_t j = w.size(); j-- > 0;) {
      const auto k = static_cast<std::size_t>(w[j].index - 1);
      if (w[j].exponent == 1) {
        Mat blk = full.block(k * n, i * n, n, n) + suffix;
        full.set_block(k * n, i * n, blk);
        suffix = gens[k] * suffix;
      } else {
        Mat blk = full.block(k * n, i * n, n, n) - invs[k] * suffix;
        full.set_block(k * n, i * n, blk);
        suffix = invs[k] * suffix;
      }
    }
  }
  if (!twist.is_identity())
    for (std::size_t i = 0; i < len; ++i) full.set_block(0, i * n, full.block(0, i * n, n * len, n) * twist);
  return full;
}

DeformationMatrix deformation_matrix(const CocycleSpace& space, const TupleDeformation& d, const Mat& twist) {
  DeformationMatrix out;
  out.full = deformation_full_matrix(space.tuple, d, twist);
  if (!(space.h.image_under(out.full) == space.h))
    throw std::logic_error("deformation does not preserve the cocycle space H");
  if (!(space.e.image_under(out.full) == space.e))
    throw std::logic_error("deformation does not preserve the coboundary space E");
  out.induced = space.section * out.full * space.class_map;
  return out;
}

std::vector<Mat> ConvolutionMonodromy::induced() const {
  std::vector<Mat> out;
  out.reserve(matrices.size());
  for (const auto& m : matrices) out.push_back(m.induced);
  return out;
}

ConvolutionMonodromy convolution_monodromy(const MonodromyTuple& t1, const MonodromyTuple& t2,
                                           const ConvolutionOptions& options) {
  ConvolutionMonodromy cm;
  cm.conv = convolution_tuple(t1, t2);
  const std::size_t p = cm.conv.p, q = cm.conv.q;
  std::vector<BraidWord> braids = options.local_braids;
  if (braids.empty()) {
    if (p != 7 || q != 7)
      throw std::invalid_argument("configuration mismatch: built-in braid words need 7 + 7 local points, got " +
                                  std::to_string(p) + " + " + std::to_string(q));
    braids = delta_words();
  }
  cm.space = build_cocycle_space(cm.conv.tuple);

  const TupleDeformation id = identity_deformation(p + q + 2);
  const Mat one = Mat::identity(cm.conv.tuple.rank);
  struct Job {
    TupleDeformation d;
    const Mat* twist;
  };
  std::vector<Job> jobs;
  for (const auto& w : braids) jobs.push_back({braid_action(w, id), &one});
  jobs.push_back({global_alpha_deformation(p, q), &cm.conv.twist_alpha});
  jobs.push_back({global_beta_deformation(p, q), &cm.conv.twist_beta});

  auto run = [&](const Job& j) { return deformation_matrix(cm.space, j.d, *j.twist); };
  if (options.parallel) {
    std::vector<std::future<DeformationMatrix>> fut;
    for (const auto& j : jobs) fut.push_back(std::async(std::launch::async, run, std::cref(j)));
    for (auto& f : fut) cm.matrices.push_back(f.get());
  } else {
    for (const auto& j : jobs) cm.matrices.push_back(run(j));
  }
  // the globals enter the elliptic product relation inverted
  for (std::size_t k = braids.size(); k < cm.matrices.size(); ++k) {
    auto& m = cm.matrices[k];
    m.induced = inverse(m.induced);
    auto full_inv = try_inverse(m.full);
    if (!full_inv) throw std::logic_error("global deformation matrix is singular on the evaluation space");
    m.full = std::move(*full_inv);
  }
  return cm;
}

Mat elliptic_product(const std::vector<Mat>& induced) {
  if (induced.size() < 2) throw std::invalid_argument("elliptic_product: need at least the two global matrices");
  const std::size_t k = induced.size() - 2;
  Mat prod = Mat::identity(induced.front().rows());
  for (std::size_t i = 0; i < k; ++i) prod = prod * induced[i];
  return prod * commutator(induced[k], induced[k + 1]);
}

}  // namespace ecm
