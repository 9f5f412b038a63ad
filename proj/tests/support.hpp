#pragma once

#include "ecm/braid_words.hpp"
#include "ecm/linalg.hpp"
#include "ecm/monodromy.hpp"

#include <random>
#include <vector>

namespace ecm::testing {

inline Mat random_mat(std::size_t r, std::size_t c, std::mt19937_64& rng, int lo = -3, int hi = 3) {
  std::uniform_int_distribution<int> d(lo, hi);
  Mat m(r, c);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < c; ++j) m(i, j) = d(rng);
  return m;
}

inline Mat random_invertible(std::size_t n, std::mt19937_64& rng) {
  while (true) {
    Mat m = random_mat(n, n, rng);
    if (try_inverse(m)) return m;
  }
}

/// Unimodular integer matrix: a product of elementary matrices.
inline Mat random_unimodular(std::size_t n, std::mt19937_64& rng, int steps = 6) {
  std::uniform_int_distribution<std::size_t> idx(0, n - 1);
  std::uniform_int_distribution<int> c(-2, 2);
  Mat m = Mat::identity(n);
  if (n < 2) return m;
  for (int s = 0; s < steps; ++s) {
    std::size_t i = idx(rng), j = idx(rng);
    if (i == j) continue;
    Mat e = Mat::identity(n);
    e(i, j) = c(rng);
    m = m * e;
  }
  return m;
}

/// Tuple with random locals A_1..A_{r-1} and handle; A_r closes the relation.
inline MonodromyTuple random_tuple(std::size_t n, std::size_t r, std::mt19937_64& rng) {
  MonodromyTuple t;
  t.rank = n;
  Mat prod = Mat::identity(n);
  for (std::size_t i = 0; i + 1 < r; ++i) {
    t.locals.push_back(random_invertible(n, rng));
    prod = prod * t.locals.back();
  }
  t.handle_a = random_invertible(n, rng);
  t.handle_b = random_invertible(n, rng);
  t.locals.push_back(inverse(prod) * inverse(commutator(t.handle_a, t.handle_b)));
  return t;
}

inline BraidWord random_braid(std::size_t strands, std::size_t length, std::mt19937_64& rng) {
  std::uniform_int_distribution<int> k(1, static_cast<int>(strands) - 1);
  std::bernoulli_distribution neg(0.5);
  BraidWord w;
  for (std::size_t i = 0; i < length; ++i) w.push_back(neg(rng) ? -k(rng) : k(rng));
  return w;
}

/// Evaluates a cocycle given by its values on the generators on a word,
/// letter by letter: δ(w g) = δ(w) ρ(g) + δ(g) and δ(g^{-1}) = −δ(g) ρ(g)^{-1}.
inline Vec cocycle_on_word(const MonodromyTuple& t, const Vec& values, const GeneratorWord& w) {
  const std::size_t n = t.rank;
  Vec acc(n);
  for (const auto& l : w) {
    const auto k = static_cast<std::size_t>(l.index - 1);
    const Mat& g = t.generator(k + 1);
    const Vec dk(values.begin() + static_cast<long>(k * n), values.begin() + static_cast<long>((k + 1) * n));
    if (l.exponent == 1) {
      acc = mul(acc, g);
      for (std::size_t j = 0; j < n; ++j) acc[j] += dk[j];
    } else {
      const Mat gi = inverse(g);
      acc = mul(acc, gi);
      const Vec c = mul(dk, gi);
      for (std::size_t j = 0; j < n; ++j) acc[j] -= c[j];
    }
  }
  return acc;
}

/// The deformed cocycle δ'(γ_i) = δ(d_i) · twist, computed from the definition.
inline Vec cocycle_oracle(const MonodromyTuple& t, const Vec& values, const TupleDeformation& d, const Mat& twist) {
  Vec out;
  for (const auto& w : d) {
    const Vec c = mul(cocycle_on_word(t, values, w), twist);
    out.insert(out.end(), c.begin(), c.end());
  }
  return out;
}

}  // namespace ecm::testing
