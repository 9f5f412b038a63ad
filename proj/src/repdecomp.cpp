#include "ecm/repdecomp.hpp"

#include "ecm/poly.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace ecm {

Representation Representation::from(std::vector<Mat> generators, std::size_t dim) {
  for (std::size_t i = 0; i < generators.size(); ++i) {
    const Mat& g = generators[i];
    if (g.rows() != dim || g.cols() != dim)
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " has the wrong size");
    if (!try_inverse(g)) throw std::invalid_argument("generator " + std::to_string(i + 1) + " is singular");
  }
  Representation r;
  r.dim = dim;
  r.generators = std::move(generators);
  return r;
}

Representation Representation::restrict_to(const Subspace& invariant) const {
  Representation r;
  r.dim = invariant.dim();
  r.labels = labels;
  for (const auto& g : generators) r.generators.push_back(restrict_action(invariant, g));
  return r;
}

// --- intertwiners ---------------------------------------------------------------------

std::vector<Mat> intertwiner_basis(const std::vector<Mat>& gens1, const std::vector<Mat>& gens2) {
  if (gens1.size() != gens2.size()) throw std::invalid_argument("intertwiner: generator counts differ");
  if (gens1.empty()) throw std::invalid_argument("intertwiner: no generators");
  const std::size_t d1 = gens1.front().rows(), d2 = gens2.front().rows();
  if (d1 == 0 || d2 == 0) return {};

  // Spin a basis b_0, … of Q^{d1} from as few seeds as possible, remembering
  // how each vector arose; a homomorphism is then fixed by the seed images.
  struct Node {
    std::size_t parent;  // == index for seeds
    std::size_t gen;
  };
  std::vector<Vec> basis;
  std::vector<Node> nodes;
  std::vector<std::size_t> seeds;
  EchelonBasis ech(d1);
  for (std::size_t c = 0; c < d1 && ech.dim() < d1; ++c) {
    Vec e(d1);
    e[c] = 1;
    if (!ech.insert(e)) continue;
    seeds.push_back(basis.size());
    nodes.push_back({basis.size(), 0});
    basis.push_back(e);
    for (std::size_t head = basis.size() - 1; head < basis.size() && ech.dim() < d1; ++head)
      for (std::size_t g = 0; g < gens1.size(); ++g) {
        Vec w = mul(basis[head], gens1[g]);
        if (ech.insert(w)) {
          nodes.push_back({head, g});
          basis.push_back(std::move(w));
        }
      }
  }
  const std::size_t m = seeds.size(), u = m * d2;
  // φ(b_i) = x L_i for the unknown seed images x ∈ Q^u
  std::vector<Mat> lin(d1);
  std::size_t seed_no = 0;
  for (std::size_t i = 0; i < d1; ++i) {
    if (nodes[i].parent == i) {
      Mat l(u, d2);
      for (std::size_t k = 0; k < d2; ++k) l(seed_no * d2 + k, k) = 1;
      lin[i] = std::move(l);
      ++seed_no;
    } else {
      lin[i] = lin[nodes[i].parent] * gens2[nodes[i].gen];
    }
  }
  const Mat bmat = Mat::from_rows(basis, d1);
  const Mat binv = inverse(bmat);

  Mat sol = Mat::identity(u);  // rows span the admissible x
  std::vector<Mat> sl(d1);
  auto refresh = [&] {
    for (std::size_t i = 0; i < d1; ++i) sl[i] = sol * lin[i];
  };
  refresh();
  for (std::size_t g = 0; g < gens1.size() && sol.rows() > 0; ++g) {
    const Mat coords = bmat * gens1[g] * binv;  // b_i g = Σ_j coords(i, j) b_j
    for (std::size_t i = 0; i < d1 && sol.rows() > 0; ++i) {
      bool tree_edge = false;
      for (std::size_t c = 0; c < d1; ++c)
        if (nodes[c].parent == i && nodes[c].gen == g && c != i) tree_edge = true;
      if (tree_edge) continue;
      Mat t = sl[i] * gens2[g];
      for (std::size_t j = 0; j < d1; ++j) {
        const Rat& c = coords(i, j);
        if (sgn(c) != 0) t -= sl[j] * c;
      }
      if (t.is_zero()) continue;
      Subspace k = kernel(t);
      sol = k.basis() * sol;
      refresh();
    }
  }
  std::vector<Mat> out;
  for (std::size_t a = 0; a < sol.rows(); ++a) {
    Mat psi(d1, d2);
    for (std::size_t i = 0; i < d1; ++i) {
      Vec row = mul(sol.row(a), lin[i]);
      for (std::size_t k = 0; k < d2; ++k) psi(i, k) = row[k];
    }
    out.push_back(binv * psi);
  }
  return out;
}

Subspace intertwiner_space(const Representation& r1, const Representation& r2) {
  const std::size_t n = r1.dim * r2.dim;
  std::vector<Vec> flat;
  if (n > 0)
    for (const auto& x : intertwiner_basis(r1.generators, r2.generators))
      flat.emplace_back(x.entries().begin(), x.entries().end());
  return Subspace::span(n, flat);
}

// --- rational splitting -----------------------------------------------------------------

namespace {

Mat random_element(const std::vector<Mat>& gens, std::mt19937_64& rng, std::size_t attempt) {
  std::uniform_int_distribution<int> coef(-3, 3);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  Mat m(gens.front().rows(), gens.front().cols());
  for (const auto& g : gens) {
    int c = coef(rng);
    if (c != 0) m += g * Rat(c);
  }
  if (attempt % 2 == 1) m += gens[pick(rng)] * gens[pick(rng)];
  return m;
}

Subspace common_fixed(const std::vector<Mat>& gens, std::size_t d) {
  Subspace s = Subspace::full(d);
  for (const auto& g : gens) {
    s = intersect(s, fixed_space(g));
    if (s.is_zero()) break;
  }
  return s;
}

std::vector<Mat> transposes(const std::vector<Mat>& gens) {
  std::vector<Mat> t;
  for (const auto& g : gens) t.push_back(g.transpose());
  return t;
}

// {v : v w = 0 for every row w of `dual`}; invariant when `dual` is
// invariant under the transposed action.
Subspace annihilator(const Subspace& dual) { return kernel(dual.basis().transpose()); }

bool proper(const Subspace& s, std::size_t d) { return !s.is_zero() && s.dim() < d; }

}  // namespace

SplitResult find_invariant_subspace(const Representation& r, const DecomposeOptions& options) {
  const std::size_t d = r.dim;
  SplitResult res;
  if (d == 0) throw std::invalid_argument("find_invariant_subspace: zero-dimensional representation");
  if (d == 1) {
    res.irreducible_certified = true;
    res.certificate = "dimension-1";
    return res;
  }
  if (r.generators.empty()) {
    // every line is invariant
    Vec e(d);
    e[0] = 1;
    res.subspace = Subspace::span(d, {e});
    return res;
  }
  const auto& gens = r.generators;
  const std::vector<Mat> tgens = transposes(gens);

  if (Subspace fix = common_fixed(gens, d); proper(fix, d)) {
    res.subspace = fix;
    return res;
  }
  if (Subspace cofix = common_fixed(tgens, d); proper(cofix, d)) {
    res.subspace = annihilator(cofix);
    return res;
  }

  std::mt19937_64 rng(options.seed);
  for (std::size_t attempt = 0; attempt < options.attempts; ++attempt) {
    const Mat m = random_element(gens, rng, attempt);
    const IntPoly mp = min_poly(m);
    for (const auto& [f, mult] : factor_squarefree_rational(mp, rng())) {
      (void)mult;
      const Subspace k = kernel(evaluate(f, m));
      if (k.is_zero()) continue;
      std::vector<Vec> tries{k.basis().row_vec(0)};
      if (k.dim() > 1) {
        std::uniform_int_distribution<int> coef(-5, 5);
        Vec v(d);
        for (std::size_t i = 0; i < k.dim(); ++i) {
          Rat c(coef(rng));
          for (std::size_t j = 0; j < d; ++j) v[j] += c * k.basis()(i, j);
        }
        if (std::any_of(v.begin(), v.end(), [](const Rat& x) { return sgn(x) != 0; })) tries.push_back(v);
      }
      for (const auto& v : tries) {
        Subspace u = spin(std::vector<Vec>{v}, gens);
        if (u.dim() < d) {
          res.subspace = u;
          return res;
        }
      }
      if (k.dim() == static_cast<std::size_t>(f.degree())) {
        // Norton: the dual test decides irreducibility outright
        const Subspace kt = kernel(evaluate(f, m.transpose()));
        Subspace ut = spin(std::vector<Vec>{kt.basis().row_vec(0)}, tgens);
        if (ut.dim() < d) {
          res.subspace = annihilator(ut);
          return res;
        }
        res.irreducible_certified = true;
        res.certificate = "norton";
        return res;
      }
    }
  }
  res.certificate = "search-exhausted";
  return res;
}

// --- modular Meataxe ---------------------------------------------------------------------

namespace {

using modp::ModEchelon;
using modp::ModMat;
using modp::ModVec;
using modp::u64;

struct ModSplit {
  bool decided = false;
  bool irreducible = false;
  std::vector<ModVec> submodule;  // basis rows when reducible
};

ModMat random_mod_element(const std::vector<ModMat>& gens, const modp::Field& F, std::mt19937_64& rng,
                          std::size_t attempt) {
  std::uniform_int_distribution<u64> coef(0, F.p - 1);
  std::uniform_int_distribution<std::size_t> pick(0, gens.size() - 1);
  ModMat m(gens.front().rows(), gens.front().cols());
  for (const auto& g : gens) m = modp::add(m, modp::scale(g, coef(rng), F), F);
  if (attempt % 2 == 1) m = modp::add(m, modp::mul(gens[pick(rng)], gens[pick(rng)], F), F);
  return m;
}

std::vector<ModVec> mod_annihilator(const ModEchelon& dual, std::size_t d, const modp::Field& F) {
  ModMat cols(d, dual.dim());
  for (std::size_t j = 0; j < dual.dim(); ++j)
    for (std::size_t i = 0; i < d; ++i) cols(i, j) = dual.rows()[j][i];
  return modp::left_kernel(cols, F);
}

ModSplit mod_split(const std::vector<ModMat>& gens, std::size_t d, const modp::Field& F, std::mt19937_64& rng) {
  ModSplit out;
  if (d <= 1) {
    out.decided = out.irreducible = true;
    return out;
  }
  std::vector<ModMat> tgens;
  for (const auto& g : gens) tgens.push_back(g.transpose());
  for (std::size_t attempt = 0; attempt < 200; ++attempt) {
    const ModMat m = random_mod_element(gens, F, rng, attempt);
    auto factors = modp::irreducible_factors(modp::charpoly(m, F), F, rng);
    std::sort(factors.begin(), factors.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });
    for (const auto& f : factors) {
      auto null = modp::left_kernel(modp::evaluate(f, m, F), F);
      if (null.empty()) continue;
      ModEchelon u = modp::spin({null.front()}, gens, F);
      if (u.dim() < d) {
        out.decided = true;
        out.submodule = u.rows();
        return out;
      }
      if (static_cast<long>(null.size()) != modp::degree(f)) continue;
      auto tnull = modp::left_kernel(modp::evaluate(f, m.transpose(), F), F);
      ModEchelon ut = modp::spin({tnull.front()}, tgens, F);
      if (ut.dim() < d) {
        out.decided = true;
        out.submodule = mod_annihilator(ut, d, F);
        return out;
      }
      out.decided = out.irreducible = true;
      return out;
    }
  }
  return out;
}

std::vector<ModMat> reduce_all(const std::vector<Mat>& gens, const modp::Field& F) {
  std::vector<ModMat> out;
  for (const auto& g : gens) out.push_back(ModMat::reduce(g, F));
  return out;
}

void mod_factors_rec(const std::vector<ModMat>& gens, std::size_t d, const modp::Field& F, std::mt19937_64& rng,
                     std::vector<std::size_t>& out) {
  if (d == 0) return;
  ModSplit s = mod_split(gens, d, F, rng);
  if (!s.decided) throw std::runtime_error("modular Meataxe undecided in dimension " + std::to_string(d));
  if (s.irreducible) {
    out.push_back(d);
    return;
  }
  ModEchelon sub(d, F);
  for (const auto& v : s.submodule) sub.insert(v);
  const std::size_t k = sub.dim();
  std::vector<std::size_t> rest;
  {
    std::vector<bool> piv(d, false);
    for (auto p : sub.pivots()) piv[p] = true;
    for (std::size_t j = 0; j < d; ++j)
      if (!piv[j]) rest.push_back(j);
  }
  std::vector<ModMat> sg, qg;
  for (const auto& g : gens) {
    ModMat a(k, k), b(d - k, d - k);
    for (std::size_t i = 0; i < k; ++i) {
      ModVec img = modp::mul(sub.rows()[i], g, F);
      ModVec c = sub.coordinates(img);
      for (std::size_t j = 0; j < k; ++j) a(i, j) = c[j];
    }
    for (std::size_t i = 0; i < rest.size(); ++i) {
      ModVec img(g.row(rest[i]).begin(), g.row(rest[i]).end());
      ModVec red = sub.reduce(img);
      for (std::size_t j = 0; j < rest.size(); ++j) b(i, j) = red[rest[j]];
    }
    sg.push_back(std::move(a));
    qg.push_back(std::move(b));
  }
  mod_factors_rec(sg, k, F, rng, out);
  mod_factors_rec(qg, d - k, F, rng, out);
}

}  // namespace

std::vector<ModularVerdict> modular_irreducibility_witness(const Representation& r,
                                                           const std::vector<std::uint64_t>& primes,
                                                           std::uint64_t seed) {
  std::vector<ModularVerdict> out;
  for (auto p : primes) {
    modp::Field F(p);
    auto gens = reduce_all(r.generators, F);
    std::mt19937_64 rng(seed);
    ModSplit s = mod_split(gens, r.dim, F, rng);
    out.push_back({p, s.decided && s.irreducible});
  }
  return out;
}

std::vector<std::size_t> modular_composition_factors(const Representation& r, std::uint64_t prime,
                                                     std::uint64_t seed) {
  modp::Field F(prime);
  auto gens = reduce_all(r.generators, F);
  std::mt19937_64 rng(seed);
  std::vector<std::size_t> out;
  mod_factors_rec(gens, r.dim, F, rng, out);
  std::sort(out.begin(), out.end());
  return out;
}

// --- decomposition ------------------------------------------------------------------------

namespace {

/// An invariant complement of u, via a module projection onto u.
Subspace invariant_complement(const Representation& r, const Subspace& u) {
  const Representation ru = r.restrict_to(u);
  const std::vector<Mat> hom = intertwiner_basis(r.generators, ru.generators);
  const std::size_t k = u.dim();
  Mat a(hom.size(), k * k);
  for (std::size_t j = 0; j < hom.size(); ++j) {
    const Mat sp = u.basis() * hom[j];
    for (std::size_t e = 0; e < k * k; ++e) a(j, e) = sp.entries()[e];
  }
  const Mat id = Mat::identity(k);
  auto c = hom.empty() ? std::nullopt : solve_left(a, id.entries());
  if (!c) throw std::runtime_error("no invariant complement: the representation is not semisimple");
  Mat pi(r.dim, k);
  for (std::size_t j = 0; j < hom.size(); ++j)
    if (sgn((*c)[j]) != 0) pi += hom[j] * (*c)[j];
  return kernel(pi);
}

struct Leaf {
  Subspace sub;  // ambient coordinates
  std::string certificate;
};

void split_rec(const Representation& local, const Mat& embed, const DecomposeOptions& options, std::uint64_t& salt,
               std::vector<Leaf>& leaves) {
  DecomposeOptions o = options;
  o.seed = options.seed + salt++;
  SplitResult s = find_invariant_subspace(local, o);
  if (!s.subspace) {
    leaves.push_back({Subspace::span(embed), s.certificate});
    return;
  }
  const Subspace& u = *s.subspace;
  const Subspace c = invariant_complement(local, u);
  for (const Subspace* part : {&u, &c}) {
    split_rec(local.restrict_to(*part), part->basis() * embed, options, salt, leaves);
  }
}

}  // namespace

std::optional<Subspace> invariant_subspace(const Representation& r, const DecomposeOptions& options) {
  return find_invariant_subspace(r, options).subspace;
}

std::vector<Constituent> decompose(const Representation& r, const DecomposeOptions& options) {
  std::vector<Leaf> leaves;
  std::uint64_t salt = 0;
  if (r.dim == 0) return {};
  split_rec(r, Mat::identity(r.dim), options, salt, leaves);

  std::vector<Constituent> classes;
  for (auto& leaf : leaves) {
    Constituent c;
    c.rank = leaf.sub.dim();
    c.multiplicity = 1;
    for (const auto& g : r.generators) c.restricted_generators.push_back(restrict_action(leaf.sub, g));
    bool merged = false;
    for (auto& cls : classes) {
      if (cls.rank != c.rank) continue;
      if (!intertwiner_basis(c.restricted_generators, cls.restricted_generators).empty()) {
        ++cls.multiplicity;
        merged = true;
        break;
      }
    }
    if (merged) continue;
    c.sub_basis = leaf.sub;
    Representation rc;
    rc.dim = c.rank;
    rc.generators = c.restricted_generators;
    c.certificate = leaf.certificate;
    for (auto p : options.primes) {
      try {
        if (modular_irreducibility_witness(rc, {p}, options.seed).front().irreducible) {
          c.certificate = "modular:" + std::to_string(p);
          break;
        }
      } catch (const std::domain_error&) {
        // p divides a denominator of this basis; try the next prime
      }
    }
    c.endomorphism_dim = intertwiner_basis(c.restricted_generators, c.restricted_generators).size();
    classes.push_back(std::move(c));
  }
  std::stable_sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) { return a.rank < b.rank; });
  return classes;
}

}  // namespace ecm
