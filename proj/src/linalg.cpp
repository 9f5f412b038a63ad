#include "ecm/linalg.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecm {

namespace {

using IntRow = std::vector<Int>;

IntRow integral_row(std::span<const Rat> r) {
  Int l = 1;
  for (const auto& x : r)
    if (sgn(x) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den_mpz_t());
  IntRow out(r.size());
  for (std::size_t j = 0; j < r.size(); ++j) {
    if (sgn(r[j]) == 0) continue;
    out[j] = r[j].get_num() * (l / r[j].get_den());
  }
  return out;
}

void remove_content(IntRow& r) {
  Int g = 0;
  for (const auto& x : r) {
    if (sgn(x) == 0) continue;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    if (g == 1) return;
  }
  if (g > 1)
    for (auto& x : r)
      if (sgn(x) != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

// target <- p * target - f * source, with p the pivot of source and f the
// entry of target in the pivot column; then strip the content.
void eliminate(IntRow& target, const IntRow& source, std::size_t col) {
  if (sgn(target[col]) == 0) return;
  Int p = source[col];
  Int f = target[col];
  Int g;
  mpz_gcd(g.get_mpz_t(), p.get_mpz_t(), f.get_mpz_t());
  p /= g;
  f /= g;
  for (std::size_t j = 0; j < target.size(); ++j) {
    if (sgn(target[j]) == 0 && sgn(source[j]) == 0) continue;
    target[j] = p * target[j] - f * source[j];
  }
  remove_content(target);
}

}  // namespace

RrefResult rref(const Mat& m) {
  const std::size_t nr = m.rows(), nc = m.cols();
  std::vector<IntRow> a(nr);
  for (std::size_t i = 0; i < nr; ++i) {
    a[i] = integral_row(m.row(i));
    remove_content(a[i]);
  }
  RrefResult res;
  std::size_t r = 0;
  for (std::size_t c = 0; c < nc && r < nr; ++c) {
    // pick the pivot with the smallest magnitude to limit growth
    std::size_t best = nr;
    for (std::size_t i = r; i < nr; ++i) {
      if (sgn(a[i][c]) == 0) continue;
      if (best == nr || mpz_cmpabs(a[i][c].get_mpz_t(), a[best][c].get_mpz_t()) < 0) best = i;
    }
    if (best == nr) continue;
    std::swap(a[r], a[best]);
    for (std::size_t i = 0; i < nr; ++i)
      if (i != r) eliminate(a[i], a[r], c);
    res.pivots.push_back(c);
    ++r;
  }
  res.rank = r;
  res.form = Mat(nr, nc);
  for (std::size_t i = 0; i < r; ++i) {
    const Int& p = a[i][res.pivots[i]];
    for (std::size_t j = 0; j < nc; ++j) {
      if (sgn(a[i][j]) == 0) continue;
      Rat x(a[i][j], p);
      x.canonicalize();
      res.form(i, j) = x;
    }
  }
  return res;
}

std::size_t rank(const Mat& m) { return rref(m).rank; }

// ---------------------------------------------------------------------------

Subspace::Subspace(std::size_t ambient_dim) : ambient_(ambient_dim), basis_(0, ambient_dim) {}

Subspace Subspace::span(const Mat& generators) {
  Subspace s(generators.cols());
  if (generators.rows() == 0) return s;
  RrefResult r = rref(generators);
  s.basis_ = r.form.block(0, 0, r.rank, generators.cols());
  s.pivots_ = std::move(r.pivots);
  return s;
}

Subspace Subspace::span(std::size_t ambient_dim, const std::vector<Vec>& generators) {
  if (generators.empty()) return Subspace(ambient_dim);
  return span(Mat::from_rows(generators, ambient_dim));
}

Subspace Subspace::full(std::size_t ambient_dim) { return span(Mat::identity(ambient_dim)); }

Vec Subspace::coordinates(std::span<const Rat> v) const {
  Vec c(dim());
  for (std::size_t i = 0; i < dim(); ++i) c[i] = v[pivots_[i]];
  return c;
}

bool Subspace::contains(std::span<const Rat> v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  // v is in the span iff v - sum_i v[pivot_i] * b_i vanishes
  Vec residue(v.begin(), v.end());
  for (std::size_t i = 0; i < dim(); ++i) {
    Rat f = v[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(basis_(i, j)) != 0) residue[j] -= f * basis_(i, j);
  }
  return std::all_of(residue.begin(), residue.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (std::size_t i = 0; i < other.dim(); ++i)
    if (!contains(other.basis_.row(i))) return false;
  return true;
}

Subspace Subspace::image_under(const Mat& m) const {
  if (dim() == 0) return Subspace(m.cols());
  return span(basis_ * m);
}

bool Subspace::is_invariant(const Mat& m) const {
  for (std::size_t i = 0; i < dim(); ++i)
    if (!contains(mul(basis_.row(i), m))) return false;
  return true;
}

// ---------------------------------------------------------------------------

EchelonBasis::EchelonBasis(std::size_t ambient_dim, bool track_combinations)
    : ambient_(ambient_dim), track_(track_combinations) {}

Vec EchelonBasis::reduce(std::span<const Rat> v, Vec* combo) const {
  Vec r(v.begin(), v.end());
  if (combo) {
    combo->assign(inserted_ + 1, Rat(0));
    (*combo)[inserted_] = 1;
  }
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = r[pivots_[i]];
    if (sgn(f) == 0) continue;
    const Vec& row = rows_[i];
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(row[j]) != 0) r[j] -= f * row[j];
    if (combo && track_) {
      const Vec& c = combos_[i];
      for (std::size_t j = 0; j < c.size(); ++j)
        if (sgn(c[j]) != 0) (*combo)[j] -= f * c[j];
    }
  }
  return r;
}

bool EchelonBasis::contains(std::span<const Rat> v) const {
  Vec r = reduce(v);
  return std::all_of(r.begin(), r.end(), [](const Rat& x) { return sgn(x) == 0; });
}

bool EchelonBasis::insert(std::span<const Rat> v) {
  Vec combo;
  Vec r = reduce(v, track_ ? &combo : nullptr);
  ++inserted_;
  std::size_t p = 0;
  while (p < ambient_ && sgn(r[p]) == 0) ++p;
  if (p == ambient_) return false;
  Rat inv = 1 / r[p];
  for (auto& x : r) x *= inv;
  if (track_)
    for (auto& x : combo) x *= inv;
  // keep the stored rows fully reduced against the new pivot
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    Rat f = rows_[i][p];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j)
      if (sgn(r[j]) != 0) rows_[i][j] -= f * r[j];
    if (track_) {
      combos_[i].resize(inserted_);
      for (std::size_t j = 0; j < combo.size(); ++j)
        if (sgn(combo[j]) != 0) combos_[i][j] -= f * combo[j];
    }
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  if (track_) {
    combo.resize(inserted_);
    combos_.insert(combos_.begin() + pos, std::move(combo));
    for (auto& c : combos_) c.resize(inserted_);
  }
  return true;
}

Subspace EchelonBasis::subspace() const { return Subspace::span(ambient_, rows_); }

// ---------------------------------------------------------------------------

Subspace kernel(const Mat& m) {
  // v m = 0  <=>  m^T v^T = 0; read the null space off the RREF of m^T.
  const std::size_t n = m.rows();
  RrefResult r = rref(m.transpose());
  std::vector<bool> is_pivot(n, false);
  for (auto p : r.pivots) is_pivot[p] = true;
  std::vector<Vec> basis;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vec v(n);
    v[f] = 1;
    for (std::size_t i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.form(i, f);
    basis.push_back(std::move(v));
  }
  return Subspace::span(n, basis);
}

Subspace image(const Mat& m) { return Subspace::span(m); }

Subspace fixed_space(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("fixed_space requires a square matrix");
  return kernel(m - Mat::identity(m.rows()));
}

std::optional<Mat> solve_right(const Mat& a, const Mat& b) {
  if (a.rows() != b.rows()) throw std::invalid_argument("solve_right: row mismatch");
  const std::size_t n = a.cols(), k = b.cols();
  Mat aug(a.rows(), n + k);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, b);
  RrefResult r = rref(aug);
  for (std::size_t i = 0; i < r.rank; ++i)
    if (r.pivots[i] >= n) return std::nullopt;
  Mat x(n, k);
  for (std::size_t i = 0; i < r.rank; ++i)
    for (std::size_t j = 0; j < k; ++j) x(r.pivots[i], j) = r.form(i, n + j);
  return x;
}

std::optional<Vec> solve_left(const Mat& a, std::span<const Rat> b) {
  Mat bt(b.size(), 1);
  for (std::size_t i = 0; i < b.size(); ++i) bt(i, 0) = b[i];
  auto x = solve_right(a.transpose(), bt);
  if (!x) return std::nullopt;
  Vec out(x->rows());
  for (std::size_t i = 0; i < x->rows(); ++i) out[i] = (*x)(i, 0);
  return out;
}

Subspace sum(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("sum: ambient mismatch");
  return Subspace::span(vstack(s1.basis(), s2.basis()));
}

Subspace intersect(const Subspace& s1, const Subspace& s2) {
  if (s1.ambient_dim() != s2.ambient_dim()) throw std::invalid_argument("intersect: ambient mismatch");
  if (s1.is_zero() || s2.is_zero()) return Subspace(s1.ambient_dim());
  // x B1 = y B2  <=>  (x, -y) lies in the left kernel of [B1; B2]
  Subspace rel = kernel(vstack(s1.basis(), s2.basis()));
  std::vector<Vec> gens;
  for (std::size_t i = 0; i < rel.dim(); ++i) {
    auto coeff = rel.basis().row(i).subspan(0, s1.dim());
    gens.push_back(mul(coeff, s1.basis()));
  }
  return Subspace::span(s1.ambient_dim(), gens);
}

QuotientBasis quotient_basis(const Subspace& ambient, const Subspace& sub) {
  if (!ambient.contains(sub)) throw std::invalid_argument("quotient_basis: sub is not contained in ambient");
  const std::size_t n = ambient.ambient_dim();
  EchelonBasis eb(n);
  for (std::size_t i = 0; i < sub.dim(); ++i) eb.insert(sub.basis().row(i));
  std::vector<Vec> comp;
  for (std::size_t i = 0; i < ambient.dim(); ++i) {
    auto row = ambient.basis().row(i);
    if (eb.insert(row)) comp.emplace_back(row.begin(), row.end());
  }
  QuotientBasis q;
  q.complement = Mat::from_rows(comp, n);
  const std::size_t a = ambient.dim(), s = sub.dim(), k = comp.size();
  // T expresses [sub; complement] in the RREF basis of ambient
  Mat t(a, a);
  for (std::size_t i = 0; i < s; ++i) {
    Vec c = ambient.coordinates(sub.basis().row(i));
    for (std::size_t j = 0; j < a; ++j) t(i, j) = c[j];
  }
  for (std::size_t i = 0; i < k; ++i) {
    Vec c = ambient.coordinates(comp[i]);
    for (std::size_t j = 0; j < a; ++j) t(s + i, j) = c[j];
  }
  Mat tinv = inverse(t);
  q.projection = Mat(n, k);
  for (std::size_t i = 0; i < a; ++i)
    for (std::size_t j = 0; j < k; ++j) q.projection(ambient.pivots()[i], j) = tinv(i, s + j);
  return q;
}

Mat kronecker(const Mat& a, const Mat& b) {
  Mat k(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t p = 0; p < b.rows(); ++p)
        for (std::size_t q = 0; q < b.cols(); ++q)
          k(i * b.rows() + p, j * b.cols() + q) = a(i, j) * b(p, q);
    }
  return k;
}

Subspace spin(const std::vector<Vec>& seeds, std::span<const Mat> generators) {
  if (seeds.empty()) throw std::invalid_argument("spin: no seed vectors");
  const std::size_t n = seeds.front().size();
  EchelonBasis eb(n);
  std::vector<Vec> queue;
  for (const auto& s : seeds)
    if (eb.insert(s)) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size() && eb.dim() < n; ++head) {
    for (const auto& g : generators) {
      Vec w = mul(queue[head], g);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  }
  return eb.subspace();
}

Subspace spin(const Subspace& seeds, std::span<const Mat> generators) {
  if (seeds.is_zero()) return seeds;
  std::vector<Vec> rows;
  for (std::size_t i = 0; i < seeds.dim(); ++i) rows.push_back(seeds.basis().row_vec(i));
  return spin(rows, generators);
}

Mat restrict_action(const Subspace& invariant, const Mat& g) {
  const std::size_t k = invariant.dim();
  Mat r(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    Vec w = mul(invariant.basis().row(i), g);
    if (!invariant.contains(w)) throw std::invalid_argument("restrict_action: subspace is not invariant");
    Vec c = invariant.coordinates(w);
    for (std::size_t j = 0; j < k; ++j) r(i, j) = c[j];
  }
  return r;
}

}  // namespace ecm
