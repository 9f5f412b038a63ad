#include "ecm/monodromy.hpp"

#include "ecm/linalg.hpp"

#include <stdexcept>

namespace ecm {

const Mat& MonodromyTuple::generator(std::size_t k) const {
  if (k >= 1 && k <= locals.size()) return locals[k - 1];
  if (k == locals.size() + 1) return handle_a;
  if (k == locals.size() + 2) return handle_b;
  throw std::out_of_range("generator index " + std::to_string(k) + " outside 1.." + std::to_string(locals.size() + 2));
}

std::vector<Mat> MonodromyTuple::generators() const {
  std::vector<Mat> g = locals;
  g.push_back(handle_a);
  g.push_back(handle_b);
  return g;
}

MonodromyTuple MonodromyTuple::with_trivial_handle(std::vector<Mat> locals) {
  if (locals.empty()) throw std::invalid_argument("with_trivial_handle: no locals to infer the rank from");
  MonodromyTuple t;
  t.rank = locals.front().rows();
  t.locals = std::move(locals);
  t.handle_a = Mat::identity(t.rank);
  t.handle_b = Mat::identity(t.rank);
  return t;
}

ValidationReport validate(const MonodromyTuple& t) {
  const std::size_t n = t.rank;
  auto fail = [](std::string why) { return ValidationReport{false, std::move(why)}; };
  std::vector<Mat> inverses;
  for (std::size_t k = 1; k <= t.r() + 2; ++k) {
    const Mat& g = t.generator(k);
    if (g.rows() != n || g.cols() != n)
      return fail("generator " + std::to_string(k) + " is not " + std::to_string(n) + "x" + std::to_string(n));
    auto inv = try_inverse(g);
    if (!inv) return fail("generator " + std::to_string(k) + " is singular");
    inverses.push_back(std::move(*inv));
  }
  Mat prod = Mat::identity(n);
  for (const auto& a : t.locals) prod = prod * a;
  const Mat& ia = inverses[t.r()];
  const Mat& ib = inverses[t.r() + 1];
  prod = prod * t.handle_a * t.handle_b * ia * ib;
  if (!prod.is_identity()) return fail("product relation A_1...A_r[A,B] = 1 fails");
  return {};
}

void require_valid(const MonodromyTuple& t) {
  auto rep = validate(t);
  if (!rep.ok) throw std::invalid_argument("invalid monodromy tuple: " + rep.failure);
}

long euler_char(const MonodromyTuple& t) {
  long fixed = 0;
  bool all_trivial = true;
  for (const auto& a : t.locals) {
    if (!a.is_identity()) all_trivial = false;
    fixed += static_cast<long>(fixed_space(a).dim());
  }
  if (all_trivial) throw std::domain_error("negligible object: every local monodromy is trivial");
  return static_cast<long>(t.r() * t.rank) - fixed;
}

long generic_rank_of_convolution(long rk1, long chi1, long rk2, long chi2) { return rk1 * chi2 + chi1 * rk2; }

MonodromyTuple pullback_negation(const MonodromyTuple& t) {
  require_valid(t);
  const std::size_t r = t.r();
  MonodromyTuple out;
  out.rank = t.rank;
  // suffix = M_{i+1} ⋯ M_r while walking i downward
  Mat suffix = Mat::identity(t.rank);
  for (std::size_t i = r; i-- > 0;) {
    out.locals.push_back(conj(t.locals[i], suffix));
    suffix = t.locals[i] * suffix;
  }
  const Mat& total = suffix;  // M_1 ⋯ M_r
  out.handle_a = inverse(total) * inverse(t.handle_a);
  out.handle_b = inverse(t.handle_b) * total;
  return out;
}

ConvolutionTuple convolution_tuple(const MonodromyTuple& t1, const MonodromyTuple& t2) {
  require_valid(t1);
  require_valid(t2);
  const std::size_t n1 = t1.rank, n2 = t2.rank;
  const Mat i1 = Mat::identity(n1), i2 = Mat::identity(n2);
  MonodromyTuple neg = pullback_negation(t2);
  ConvolutionTuple c;
  c.p = t1.r();
  c.q = t2.r();
  c.n1 = n1;
  c.n2 = n2;
  c.tuple.rank = n1 * n2;
  for (const auto& a : t1.locals) c.tuple.locals.push_back(kronecker(a, i2));
  for (const auto& b : neg.locals) c.tuple.locals.push_back(kronecker(i1, b));
  // C̃ = B_q^{-1} ⋯ B_1^{-1} C^{-1} and D̃ = D^{-1} B_1 ⋯ B_q are the negated handle
  const Mat& ct = neg.handle_a;
  const Mat& dt = neg.handle_b;
  c.tuple.handle_a = kronecker(t1.handle_a, ct);
  c.tuple.handle_b = kronecker(t1.handle_b, dt);
  c.twist_alpha = kronecker(i1, inverse(ct));
  c.twist_beta = kronecker(i1, inverse(dt));
  require_valid(c.tuple);
  return c;
}

Mat evaluate_word(const MonodromyTuple& t, const GeneratorWord& w) {
  Mat out = Mat::identity(t.rank);
  for (const auto& l : w) {
    if (l.index < 1) throw std::out_of_range("evaluate_word: letter index must be positive");
    const Mat& g = t.generator(static_cast<std::size_t>(l.index));
    if (l.exponent == 1)
      out = out * g;
    else if (l.exponent == -1)
      out = out * inverse(g);
    else
      throw std::invalid_argument("evaluate_word: exponent must be +1 or -1");
  }
  return out;
}

}  // namespace ecm
