#include "ecm/braid_words.hpp"

#include <cstdlib>
#include <sstream>
#include <stdexcept>

namespace ecm {

GeneratorWord invert(const GeneratorWord& w) {
  GeneratorWord out(w.rbegin(), w.rend());
  for (auto& l : out) l.exponent = -l.exponent;
  return out;
}

GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b) {
  GeneratorWord out = a;
  out.insert(out.end(), b.begin(), b.end());
  return out;
}

GeneratorWord conjugate(const GeneratorWord& by, const GeneratorWord& w) {
  return concat(concat(invert(by), w), by);
}

GeneratorWord conjugate_inverse(const GeneratorWord& by, const GeneratorWord& w) {
  return concat(concat(by, w), invert(by));
}

GeneratorWord free_reduce(const GeneratorWord& w) {
  GeneratorWord out;
  out.reserve(w.size());
  for (const auto& l : w) {
    if (!out.empty() && out.back().index == l.index && out.back().exponent == -l.exponent)
      out.pop_back();
    else
      out.push_back(l);
  }
  return out;
}

TupleDeformation free_reduce(const TupleDeformation& t) {
  TupleDeformation out;
  out.reserve(t.size());
  for (const auto& w : t) out.push_back(free_reduce(w));
  return out;
}

TupleDeformation identity_deformation(std::size_t length) {
  TupleDeformation t(length);
  for (std::size_t i = 0; i < length; ++i) t[i] = {{static_cast<int>(i) + 1, 1}};
  return t;
}

TupleDeformation braid_step(int j, const TupleDeformation& t) {
  if (t.size() < 4) throw std::out_of_range("braid_step: need at least two local strands");
  const int strands = static_cast<int>(t.size()) - 2;
  const int k = std::abs(j);
  if (k < 1 || k > strands - 1)
    throw std::out_of_range("braid_step: index " + std::to_string(j) + " outside 1.." + std::to_string(strands - 1));
  TupleDeformation b = t;
  const auto a = static_cast<std::size_t>(k - 1);
  if (j > 0) {
    b[a] = t[a + 1];
    b[a + 1] = conjugate(t[a + 1], t[a]);
  } else {
    b[a] = conjugate_inverse(t[a], t[a + 1]);
    b[a + 1] = t[a];
  }
  return b;
}

TupleDeformation braid_action(const BraidWord& w, const TupleDeformation& t) {
  TupleDeformation out = t;
  for (int j : w) out = braid_step(j, out);
  return out;
}

BraidWord invert(const BraidWord& w) {
  BraidWord out(w.rbegin(), w.rend());
  for (auto& j : out) j = -j;
  return out;
}

namespace {

void check_pq(std::size_t p, std::size_t q) {
  if (p == 0 || q == 0) throw std::invalid_argument("global deformation needs p, q >= 1");
}

// α_{p+1} ⋯ α_{p+q}
GeneratorWord second_block(std::size_t p, std::size_t q) {
  GeneratorWord w;
  for (std::size_t j = 1; j <= q; ++j) w.push_back({static_cast<int>(p + j), 1});
  return w;
}

}  // namespace

TupleDeformation global_alpha_deformation(std::size_t p, std::size_t q) {
  check_pq(p, q);
  const int a = static_cast<int>(p + q + 1), b = a + 1;
  TupleDeformation t = identity_deformation(p + q + 2);
  const GeneratorWord s = second_block(p, q);
  const GeneratorWord alpha_inv{{a, -1}};
  for (std::size_t i = 0; i < p; ++i) t[i] = conjugate(s, t[i]);
  for (std::size_t j = p; j < p + q; ++j) t[j] = conjugate(alpha_inv, t[j]);
  t[p + q + 1] = concat(invert(s), {{b, 1}});
  return t;
}

TupleDeformation global_beta_deformation(std::size_t p, std::size_t q) {
  check_pq(p, q);
  const int a = static_cast<int>(p + q + 1), b = a + 1;
  TupleDeformation t = identity_deformation(p + q + 2);
  const GeneratorWord s = second_block(p, q);
  // β α_{p+q}^{-1} ⋯ α_{p+1}^{-1} β^{-1}
  const GeneratorWord by = concat(concat({{b, 1}}, invert(s)), {{b, -1}});
  const GeneratorWord beta_inv{{b, -1}};
  for (std::size_t i = 0; i < p; ++i) t[i] = conjugate(by, t[i]);
  for (std::size_t j = p; j < p + q; ++j) t[j] = conjugate(beta_inv, t[j]);
  t[p + q] = concat(s, {{a, 1}});
  return t;
}

const std::vector<BraidWord>& delta_words() {
  static const std::vector<BraidWord> words = {
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 7,
       10, 3, 5, 9, 11, 4, 6, 8, 10, 5, 9, 7, 6, 8, 7, 7, -8, -6, -7, -9, -5, -10, -8, -6, -4, -11, -9, -5, -3, -10,
       -7, -4, -12, -8, -6, -2, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8,
       -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 7,
       10, 3, 5, 9, 11, 4, 6, 8, 10, 5, 9, 7, 6, 6, 8, 8, -7, -9, -5, -10, -8, -6, -4, -11, -9, -5, -3, -10, -7, -4,
       -12, -8, -6, -2, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8, -6, -4,
       -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 7,
       10, 3, 5, 9, 11, 4, 6, 8, 10, 5, 9, 7, 7, -9, -5, -10, -8, -6, -4, -11, -9, -5, -3, -10, -7, -4, -12, -8, -6,
       -2, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7,
       -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 7,
       10, 3, 5, 9, 11, 4, 6, 8, 10, 5, 5, 9, 9, -10, -8, -6, -4, -11, -9, -5, -3, -10, -7, -4, -12, -8, -6, -2, -13,
       -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7, -8, -6,
       -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 7,
       10, 3, 5, 9, 11, 4, 4, 6, 6, 8, 8, 10, 10, -11, -9, -5, -3, -10, -7, -4, -12, -8, -6, -2, -13, -11, -9, -7, -5,
       -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 7,
       10, 3, 3, 5, 5, 9, 9, 11, 11, -10, -7, -4, -12, -8, -6, -2, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10,
       -7, -4, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 10,
       7, 7, -10, -4, -12, -8, -6, -2, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3,
       -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 6, 8, 12, 4, 4,
       10, 10, -12, -8, -6, -2, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8,
       -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 3, 5, 7, 9, 11, 13, 2, 2, 6, 6, 8, 8,
       12, 12, -13, -11, -9, -7, -5, -3, -1, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5,
       -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 6, 8, 12, 1, 1, 3, 3, 5, 5, 7, 7, 9, 9, 11, 11, 13,
       13, -12, -8, -6, -2, -10, -7, -4, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 4, 7, 10, 2, 2, 6, 6, 8, 8, 12, 12, -10, -7, -4, -11, -9, -5, -3,
       -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 7, 4, 4, 10, 10, -7, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7,
       -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 5, 9, 11, 7, 7, -11, -9, -5, -3, -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 6, 8, 10, 3, 3, 5, 5, 9, 9, 11, 11, -10, -8, -6, -4, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 9, 4, 4, 6, 6, 8, 8, 10, 10, -9, -5, -7, -8, -6, -7},
      {7, 6, 8, 7, 5, 5, 9, 9, -7, -8, -6, -7},
      {7, 6, 8, 7, 7, -8, -6, -7},
      {7, 6, 6, 8, 8, -7},
      {7, 7},
  };
  return words;
}

bool BraidRelationReport::all_pass() const {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

BraidRelationReport check_braid_relations(std::size_t strands, const BraidStepFn& step) {
  if (strands < 3) throw std::invalid_argument("check_braid_relations: need at least 3 strands");
  BraidStepFn s = step ? step : BraidStepFn([](int j, const TupleDeformation& t) { return braid_step(j, t); });
  auto act = [&](const BraidWord& w) {
    TupleDeformation t = identity_deformation(strands + 2);
    for (int j : w) t = s(j, t);
    return free_reduce(t);
  };
  BraidRelationReport report;
  report.strands = strands;
  const int n = static_cast<int>(strands);
  for (int i = 1; i + 1 <= n - 1; ++i)
    report.results.push_back({"B1", i, i + 1, act({i, i + 1, i}) == act({i + 1, i, i + 1})});
  for (int i = 1; i <= n - 1; ++i)
    for (int j = i + 2; j <= n - 1; ++j) report.results.push_back({"B2", i, j, act({i, j}) == act({j, i})});
  return report;
}

std::string to_string(const GeneratorWord& w) {
  std::ostringstream os;
  os << '[';
  for (std::size_t i = 0; i < w.size(); ++i) os << (i ? "," : "") << '[' << w[i].index << ',' << w[i].exponent << ']';
  os << ']';
  return os.str();
}

}  // namespace ecm
