#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace ecm {

/// γ_index^exponent; indices are 1-based over (α_1, …, α_r, α, β).
struct Letter {
  int index = 0;
  int exponent = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

using GeneratorWord = std::vector<Letter>;
/// Images of the r + 2 homotopy generators; the handle sits at the last two slots.
using TupleDeformation = std::vector<GeneratorWord>;
/// +k is β_k, −k is β_k^{-1}.
using BraidWord = std::vector<int>;

GeneratorWord invert(const GeneratorWord& w);
/// by^{-1} · w · by
GeneratorWord conjugate(const GeneratorWord& by, const GeneratorWord& w);
/// by · w · by^{-1}
GeneratorWord conjugate_inverse(const GeneratorWord& by, const GeneratorWord& w);
GeneratorWord concat(const GeneratorWord& a, const GeneratorWord& b);
/// Cancels adjacent inverse pairs until none remain.
GeneratorWord free_reduce(const GeneratorWord& w);
TupleDeformation free_reduce(const TupleDeformation& t);

/// (γ_1), …, (γ_length).
TupleDeformation identity_deformation(std::size_t length);

/// Throws std::out_of_range unless 1 <= |j| <= t.size() - 3, so the handle
/// slots are never touched.
TupleDeformation braid_step(int j, const TupleDeformation& t);
TupleDeformation braid_action(const BraidWord& w, const TupleDeformation& t);
BraidWord invert(const BraidWord& w);

/// Deformations by the global braids α̂ and β̂ for p + q local points.
TupleDeformation global_alpha_deformation(std::size_t p, std::size_t q);
TupleDeformation global_beta_deformation(std::size_t p, std::size_t q);

/// The 19 local braid words for the standard 7 + 7 configuration; index 0 is δ_1.
const std::vector<BraidWord>& delta_words();

struct RelationResult {
  std::string name;  // "B1" or "B2"
  int i = 0;
  int j = 0;
  bool pass = false;
};

struct BraidRelationReport {
  std::size_t strands = 0;
  std::vector<RelationResult> results;
  bool all_pass() const;
};

using BraidStepFn = std::function<TupleDeformation(int, const TupleDeformation&)>;

/// Checks β_iβ_{i+1}β_i = β_{i+1}β_iβ_{i+1} and β_iβ_j = β_jβ_i (|i − j| >= 2)
/// as deformation identities on n strands plus the handle. `step` replaces
/// braid_step (used to exercise a corrupted action).
BraidRelationReport check_braid_relations(std::size_t strands, const BraidStepFn& step = {});

std::string to_string(const GeneratorWord& w);

}  // namespace ecm
