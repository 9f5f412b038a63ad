#include "ecm/modp.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecm::modp {

bool is_prime(u64 n) {
  if (n < 2) return false;
  for (u64 d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

Field::Field(u64 prime) : p(prime) {
  if (prime >= (u64{1} << 32) || !is_prime(prime)) throw std::invalid_argument("modulus must be a prime below 2^32");
}

u64 Field::pow(u64 a, u64 e) const {
  u64 r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

u64 Field::inv(u64 a) const {
  if (a % p == 0) throw std::domain_error("inverse of zero in F_p");
  return pow(a, p - 2);
}

u64 Field::reduce(const Int& x) const {
  Int r;
  mpz_fdiv_r_ui(r.get_mpz_t(), x.get_mpz_t(), p);
  return r.get_ui();
}

u64 Field::reduce(const Rat& x) const {
  u64 d = reduce(x.get_den());
  if (d == 0) throw std::domain_error("prime " + std::to_string(p) + " divides a denominator");
  return mul(reduce(x.get_num()), inv(d));
}

// --- polynomials ---------------------------------------------------------------

void trim(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly add(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.add(r[i], b[i]);
  trim(r);
  return r;
}

Poly sub(const Poly& a, const Poly& b, const Field& F) {
  Poly r(std::max(a.size(), b.size()), 0);
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] = F.sub(r[i], b[i]);
  trim(r);
  return r;
}

Poly mul(const Poly& a, const Poly& b, const Field& F) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(a[i], b[j]));
  }
  trim(r);
  return r;
}

Poly scale(const Poly& a, u64 s, const Field& F) {
  Poly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = F.mul(a[i], s);
  trim(r);
  return r;
}

void divmod(const Poly& a, const Poly& b, Poly& q, Poly& r, const Field& F) {
  if (b.empty()) throw std::domain_error("polynomial division by zero");
  r = a;
  trim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, 0);
  u64 lead_inv = F.inv(b.back());
  for (std::size_t k = r.size(); k-- >= b.size();) {
    u64 c = F.mul(r[k], lead_inv);
    q[k - (b.size() - 1)] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) {
      std::size_t idx = k - (b.size() - 1) + j;
      r[idx] = F.sub(r[idx], F.mul(c, b[j]));
    }
  }
  trim(q);
  trim(r);
}

Poly rem(const Poly& a, const Poly& b, const Field& F) {
  Poly q, r;
  divmod(a, b, q, r, F);
  return r;
}

Poly quo(const Poly& a, const Poly& b, const Field& F) {
  Poly q, r;
  divmod(a, b, q, r, F);
  return q;
}

Poly monic(const Poly& a, const Field& F) {
  if (a.empty()) return a;
  return scale(a, F.inv(a.back()), F);
}

Poly gcd(Poly a, Poly b, const Field& F) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    Poly r = rem(a, b, F);
    a = std::move(b);
    b = std::move(r);
  }
  return monic(a, F);
}

Poly xgcd(const Poly& a, const Poly& b, Poly& s, Poly& t, const Field& F) {
  Poly r0 = a, r1 = b, s0{1}, s1{}, t0{}, t1{1};
  trim(r0);
  trim(r1);
  while (!r1.empty()) {
    Poly q, r;
    divmod(r0, r1, q, r, F);
    Poly s2 = sub(s0, mul(q, s1, F), F);
    Poly t2 = sub(t0, mul(q, t1, F), F);
    r0 = std::move(r1);
    r1 = std::move(r);
    s0 = std::move(s1);
    s1 = std::move(s2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.empty()) {
    s = {};
    t = {};
    return r0;
  }
  u64 li = F.inv(r0.back());
  s = scale(s0, li, F);
  t = scale(t0, li, F);
  return scale(r0, li, F);
}

Poly derivative(const Poly& f, const Field& F) {
  if (f.size() <= 1) return {};
  Poly d(f.size() - 1);
  for (std::size_t i = 1; i < f.size(); ++i) d[i - 1] = F.mul(f[i], i % F.p);
  trim(d);
  return d;
}

Poly powmod(const Poly& base, u64 e, const Poly& mod, const Field& F) {
  Poly result{1};
  result = rem(result, mod, F);
  Poly b = rem(base, mod, F);
  while (e) {
    if (e & 1) result = rem(mul(result, b, F), mod, F);
    e >>= 1;
    if (e) b = rem(mul(b, b, F), mod, F);
  }
  return result;
}

namespace {

Poly random_poly(std::size_t below_degree, const Field& F, std::mt19937_64& rng) {
  std::uniform_int_distribution<u64> dist(0, F.p - 1);
  Poly a(below_degree);
  for (auto& c : a) c = dist(rng);
  trim(a);
  return a;
}

// Splits a product of distinct irreducibles of common degree d.
void equal_degree_split(const Poly& g, std::size_t d, const Field& F, std::mt19937_64& rng, std::vector<Poly>& out) {
  if (static_cast<std::size_t>(degree(g)) == d) {
    out.push_back(g);
    return;
  }
  while (true) {
    Poly a = random_poly(g.size() - 1, F, rng);
    if (degree(a) < 1) continue;
    Poly b;
    if (F.p == 2) {
      // trace map a + a^2 + ... + a^(2^(d-1))
      Poly term = a;
      b = a;
      for (std::size_t k = 1; k < d; ++k) {
        term = rem(mul(term, term, F), g, F);
        b = add(b, term, F);
      }
    } else {
      // a^((p^d - 1)/2) = (a * a^p * ... * a^(p^(d-1)))^((p-1)/2)
      Poly norm = a, frob = a;
      for (std::size_t k = 1; k < d; ++k) {
        frob = powmod(frob, F.p, g, F);
        norm = rem(mul(norm, frob, F), g, F);
      }
      b = sub(powmod(norm, (F.p - 1) / 2, g, F), Poly{1}, F);
    }
    Poly h = gcd(g, b, F);
    if (degree(h) > 0 && degree(h) < degree(g)) {
      equal_degree_split(h, d, F, rng, out);
      equal_degree_split(quo(g, h, F), d, F, rng, out);
      return;
    }
  }
}

template <typename Sink>
void distinct_degree(Poly f, const Field& F, Sink&& sink) {
  Poly x{0, 1};
  Poly h = x;
  for (std::size_t i = 1; degree(f) >= static_cast<long>(2 * i); ++i) {
    h = powmod(h, F.p, f, F);
    Poly g = gcd(sub(h, x, F), f, F);
    if (degree(g) > 0) {
      sink(g, i);
      f = quo(f, g, F);
      h = rem(h, f, F);
    }
  }
  if (degree(f) > 0) sink(f, static_cast<std::size_t>(degree(f)));
}

Poly pth_root(const Poly& f, const Field& F) {
  // f' == 0 means f(x) = g(x^p); over F_p the coefficients are their own p-th roots
  Poly g;
  for (std::size_t i = 0; i < f.size(); i += F.p) g.push_back(f[i]);
  trim(g);
  return g;
}

}  // namespace

std::vector<Poly> factor_squarefree(const Poly& f, const Field& F, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly m = monic(f, F);
  if (degree(m) < 1) return out;
  distinct_degree(m, F, [&](const Poly& g, std::size_t d) { equal_degree_split(g, d, F, rng, out); });
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

std::size_t count_factors_squarefree(const Poly& f, const Field& F) {
  std::size_t count = 0;
  Poly m = monic(f, F);
  if (degree(m) < 1) return 0;
  distinct_degree(m, F, [&](const Poly& g, std::size_t d) { count += static_cast<std::size_t>(degree(g)) / d; });
  return count;
}

std::vector<Poly> irreducible_factors(const Poly& f, const Field& F, std::mt19937_64& rng) {
  std::vector<Poly> out;
  Poly m = monic(f, F);
  if (degree(m) < 1) return out;
  Poly d = derivative(m, F);
  if (d.empty()) return irreducible_factors(pth_root(m, F), F, rng);
  Poly g = gcd(m, d, F);
  out = factor_squarefree(quo(m, g, F), F, rng);
  for (auto& h : irreducible_factors(g, F, rng))
    if (std::find(out.begin(), out.end(), h) == out.end()) out.push_back(std::move(h));
  std::sort(out.begin(), out.end(), [](const Poly& a, const Poly& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  return out;
}

// --- matrices --------------------------------------------------------------------

ModMat ModMat::identity(std::size_t n) {
  ModMat m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

ModMat ModMat::reduce(const Mat& m, const Field& F) {
  ModMat r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = F.reduce(m(i, j));
  return r;
}

ModMat ModMat::transpose() const {
  ModMat t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

ModMat mul(const ModMat& a, const ModMat& b, const Field& F) {
  if (a.cols() != b.rows()) throw std::invalid_argument("mod-p product: shape mismatch");
  ModMat c(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      u64 aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) c(i, j) = (c(i, j) + aik * b(k, j)) % F.p;
    }
  return c;
}

ModVec mul(std::span<const u64> v, const ModMat& m, const Field& F) {
  ModVec out(m.cols(), 0);
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] = (out[j] + v[k] * m(k, j)) % F.p;
  }
  return out;
}

ModMat add(const ModMat& a, const ModMat& b, const Field& F) {
  ModMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.add(a(i, j), b(i, j));
  return c;
}

ModMat scale(const ModMat& a, u64 s, const Field& F) {
  ModMat c(a.rows(), a.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) c(i, j) = F.mul(a(i, j), s);
  return c;
}

ModMat evaluate(const Poly& f, const ModMat& m, const Field& F) {
  const std::size_t n = m.rows();
  ModMat acc(n, n);
  for (std::size_t k = f.size(); k-- > 0;) {
    acc = mul(acc, m, F);
    for (std::size_t i = 0; i < n; ++i) acc(i, i) = F.add(acc(i, i), f[k]);
  }
  return acc;
}

Poly charpoly(const ModMat& m, const Field& F) {
  const std::size_t n = m.rows();
  ModMat h = m;
  // similarity reduction to upper Hessenberg form
  for (std::size_t j = 0; j + 2 < n; ++j) {
    std::size_t i = j + 1;
    while (i < n && h(i, j) == 0) ++i;
    if (i == n) continue;
    if (i != j + 1) {
      for (std::size_t c = 0; c < n; ++c) std::swap(h(i, c), h(j + 1, c));
      for (std::size_t r = 0; r < n; ++r) std::swap(h(r, i), h(r, j + 1));
    }
    u64 pinv = F.inv(h(j + 1, j));
    for (std::size_t k = j + 2; k < n; ++k) {
      u64 u = F.mul(h(k, j), pinv);
      if (u == 0) continue;
      for (std::size_t c = 0; c < n; ++c) h(k, c) = F.sub(h(k, c), F.mul(u, h(j + 1, c)));
      for (std::size_t r = 0; r < n; ++r) h(r, j + 1) = F.add(h(r, j + 1), F.mul(u, h(r, k)));
    }
  }
  // p_m = (x - h_mm) p_{m-1} - sum_i h_{m-i,m} prod(subdiagonal) p_{m-i-1}
  std::vector<Poly> ps(n + 1);
  ps[0] = {1};
  for (std::size_t mm = 1; mm <= n; ++mm) {
    Poly xm{F.neg(h(mm - 1, mm - 1)), 1};
    ps[mm] = mul(xm, ps[mm - 1], F);
    u64 t = 1;
    for (std::size_t i = 1; i < mm; ++i) {
      t = F.mul(t, h(mm - i, mm - i - 1));
      u64 c = F.mul(t, h(mm - i - 1, mm - 1));
      if (c == 0) continue;
      ps[mm] = sub(ps[mm], scale(ps[mm - i - 1], c, F), F);
    }
  }
  return ps[n];
}

ModVec ModEchelon::reduce(std::span<const u64> v) const {
  ModVec r(v.begin(), v.end());
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    u64 f = r[pivots_[i]];
    if (f == 0) continue;
    const ModVec& row = rows_[i];
    for (std::size_t j = 0; j < n_; ++j)
      if (row[j]) r[j] = F_.sub(r[j], F_.mul(f, row[j]));
  }
  return r;
}

bool ModEchelon::insert(std::span<const u64> v) {
  ModVec r = reduce(v);
  std::size_t p = 0;
  while (p < n_ && r[p] == 0) ++p;
  if (p == n_) return false;
  u64 inv = F_.inv(r[p]);
  for (auto& x : r) x = F_.mul(x, inv);
  for (auto& row : rows_) {
    u64 f = row[p];
    if (f == 0) continue;
    for (std::size_t j = 0; j < n_; ++j)
      if (r[j]) row[j] = F_.sub(row[j], F_.mul(f, r[j]));
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

ModVec ModEchelon::coordinates(std::span<const u64> v) const {
  ModVec c(rows_.size());
  for (std::size_t i = 0; i < rows_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

std::vector<ModVec> left_kernel(const ModMat& m, const Field& F) {
  // RREF of m^T, then read off the null space
  ModMat t = m.transpose();
  const std::size_t nr = t.rows(), nc = t.cols();
  ModEchelon eb(nc, F);
  for (std::size_t i = 0; i < nr; ++i) eb.insert(t.row(i));
  std::vector<bool> is_pivot(nc, false);
  for (auto p : eb.pivots()) is_pivot[p] = true;
  std::vector<ModVec> basis;
  for (std::size_t f = 0; f < nc; ++f) {
    if (is_pivot[f]) continue;
    ModVec v(nc, 0);
    v[f] = 1;
    for (std::size_t i = 0; i < eb.dim(); ++i) v[eb.pivots()[i]] = F.neg(eb.rows()[i][f]);
    basis.push_back(std::move(v));
  }
  return basis;
}

std::size_t rank(const ModMat& m, const Field& F) {
  ModEchelon eb(m.cols(), F);
  for (std::size_t i = 0; i < m.rows(); ++i) eb.insert(m.row(i));
  return eb.dim();
}

ModEchelon spin(const std::vector<ModVec>& seeds, std::span<const ModMat> gens, const Field& F) {
  const std::size_t n = seeds.empty() ? 0 : seeds.front().size();
  ModEchelon eb(n, F);
  std::vector<ModVec> queue;
  for (const auto& s : seeds)
    if (eb.insert(s)) queue.push_back(s);
  for (std::size_t head = 0; head < queue.size() && eb.dim() < n; ++head)
    for (const auto& g : gens) {
      ModVec w = mul(queue[head], g, F);
      if (eb.insert(w)) queue.push_back(std::move(w));
    }
  return eb;
}

}  // namespace ecm::modp
