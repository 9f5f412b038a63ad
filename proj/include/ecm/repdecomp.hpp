#pragma once

#include "ecm/linalg.hpp"
#include "ecm/modp.hpp"

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

namespace ecm {

/// A finitely generated group acting on Q^dim from the right.
struct Representation {
  std::size_t dim = 0;
  std::vector<Mat> generators;
  std::vector<std::string> labels;

  /// Checks sizes and invertibility; throws std::invalid_argument.
  static Representation from(std::vector<Mat> generators, std::size_t dim);
  /// Action on an invariant subspace, in its RREF basis.
  Representation restrict_to(const Subspace& invariant) const;
};

struct DecomposeOptions {
  std::uint64_t seed = 0;
  std::vector<std::uint64_t> primes{101, 103, 107};
  /// Random algebra elements tried per splitting attempt.
  std::size_t attempts = 25;
};

struct Constituent {
  std::size_t rank = 0;
  std::size_t multiplicity = 0;
  Subspace sub_basis;  // one copy, in ambient coordinates
  std::vector<Mat> restricted_generators;
  std::string certificate;  // "modular:p", "norton", "dimension-1" or "search-exhausted"
  std::size_t endomorphism_dim = 0;
};

struct SplitResult {
  std::optional<Subspace> subspace;  // proper, nonzero, invariant
  bool irreducible_certified = false;
  std::string certificate;
};

/// Searches for a proper invariant subspace: common fixed and cofixed
/// vectors, then kernels of irreducible factors of minimal polynomials of
/// random algebra elements, spun up to invariance (with the dual test).
SplitResult find_invariant_subspace(const Representation& r, const DecomposeOptions& options = {});
std::optional<Subspace> invariant_subspace(const Representation& r, const DecomposeOptions& options = {});

struct ModularVerdict {
  std::uint64_t prime = 0;
  bool irreducible = false;
};

/// Norton irreducibility test after reduction modulo each prime. Irreducible
/// modulo a prime implies irreducible over Q; the converse fails. Throws
/// std::domain_error when a prime divides a denominator.
std::vector<ModularVerdict> modular_irreducibility_witness(const Representation& r,
                                                           const std::vector<std::uint64_t>& primes,
                                                           std::uint64_t seed = 0);

/// Dimensions (sorted) of the composition factors of r modulo p.
std::vector<std::size_t> modular_composition_factors(const Representation& r, std::uint64_t prime,
                                                     std::uint64_t seed = 0);

/// Irreducible constituents with multiplicities of a semisimple
/// representation. Throws std::runtime_error when an invariant subspace has
/// no invariant complement.
std::vector<Constituent> decompose(const Representation& r, const DecomposeOptions& options = {});

/// Basis of {X : g1_i X = X g2_i for all i}, X of size dim1 x dim2.
std::vector<Mat> intertwiner_basis(const std::vector<Mat>& gens1, const std::vector<Mat>& gens2);
/// The same space, flattened row-major into Q^{dim1·dim2}.
Subspace intertwiner_space(const Representation& r1, const Representation& r2);

}  // namespace ecm
