#include "ecm/poly.hpp"

#include "ecm/linalg.hpp"
#include "ecm/modp.hpp"

#include <algorithm>
#include <numeric>
#include <random>
#include <sstream>
#include <stdexcept>

namespace ecm {

namespace {

void trim(std::vector<Int>& c) {
  while (!c.empty() && sgn(c.back()) == 0) c.pop_back();
}

}  // namespace

IntPoly::IntPoly(std::vector<Int> coeffs) : c_(std::move(coeffs)) { trim(c_); }

IntPoly::IntPoly(std::initializer_list<long> coeffs) {
  for (long x : coeffs) c_.emplace_back(x);
  trim(c_);
}

Int IntPoly::content() const {
  Int g = 0;
  for (const auto& x : c_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
  return g;
}

IntPoly IntPoly::primitive() const {
  if (c_.empty()) return *this;
  Int g = content();
  if (sgn(c_.back()) < 0) g = -g;
  std::vector<Int> out(c_.size());
  for (std::size_t i = 0; i < c_.size(); ++i) mpz_divexact(out[i].get_mpz_t(), c_[i].get_mpz_t(), g.get_mpz_t());
  return IntPoly(std::move(out));
}

IntPoly IntPoly::derivative() const {
  if (c_.size() <= 1) return {};
  std::vector<Int> d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return IntPoly(std::move(d));
}

IntPoly operator*(const IntPoly& a, const IntPoly& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Int> r(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
  return IntPoly(std::move(r));
}

IntPoly operator+(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] += b.c_[i];
  return IntPoly(std::move(r));
}

IntPoly operator-(const IntPoly& a, const IntPoly& b) {
  std::vector<Int> r(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) r[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) r[i] -= b.c_[i];
  return IntPoly(std::move(r));
}

std::string to_string(const IntPoly& p) {
  if (p.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (long k = p.degree(); k >= 0; --k) {
    const Int& c = p.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    Int a = abs(c);
    if (first) {
      if (sgn(c) < 0) os << '-';
    } else {
      os << (sgn(c) < 0 ? " - " : " + ");
    }
    first = false;
    if (a != 1 || k == 0) os << a.get_str();
    if (k >= 1) os << (a != 1 ? "*x" : "x");
    if (k >= 2) os << '^' << k;
  }
  return os.str();
}

std::optional<IntPoly> divide_exact(const IntPoly& a, const IntPoly& b) {
  if (b.is_zero()) throw std::domain_error("division by the zero polynomial");
  if (a.is_zero()) return IntPoly{};
  if (a.degree() < b.degree()) return std::nullopt;
  std::vector<Int> r = a.coeffs();
  std::vector<Int> q(static_cast<std::size_t>(a.degree() - b.degree() + 1));
  const auto& bc = b.coeffs();
  const Int& lb = b.leading();
  for (long k = a.degree() - b.degree(); k >= 0; --k) {
    Int& top = r[static_cast<std::size_t>(k + b.degree())];
    if (sgn(top) == 0) continue;
    if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t())) return std::nullopt;
    Int c;
    mpz_divexact(c.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
    q[static_cast<std::size_t>(k)] = c;
    for (std::size_t j = 0; j < bc.size(); ++j) r[static_cast<std::size_t>(k) + j] -= c * bc[j];
  }
  trim(r);
  if (!r.empty()) return std::nullopt;
  return IntPoly(std::move(q));
}

Mat evaluate(const IntPoly& f, const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("evaluate: matrix must be square");
  const std::size_t n = m.rows();
  Mat acc(n, n);
  for (long k = f.degree(); k >= 0; --k) {
    acc = acc * m;
    const Int& c = f.coeffs()[static_cast<std::size_t>(k)];
    if (sgn(c) == 0) continue;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c;
  }
  return acc;
}

// --- rational polynomial helpers ----------------------------------------------------

namespace {

using RatPoly = std::vector<Rat>;

void rtrim(RatPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

RatPoly rmonic(RatPoly p) {
  rtrim(p);
  if (p.empty()) return p;
  Rat l = p.back();
  for (auto& x : p) x /= l;
  return p;
}

RatPoly rmul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  rtrim(r);
  return r;
}

void rdivmod(const RatPoly& a, const RatPoly& b, RatPoly& q, RatPoly& r) {
  r = a;
  rtrim(r);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, Rat(0));
  for (std::size_t k = r.size(); k-- >= b.size();) {
    Rat c = r[k] / b.back();
    q[k - (b.size() - 1)] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k - (b.size() - 1) + j] -= c * b[j];
  }
  rtrim(q);
  rtrim(r);
}

RatPoly rgcd(RatPoly a, RatPoly b) {
  rtrim(a);
  rtrim(b);
  while (!b.empty()) {
    RatPoly q, r;
    rdivmod(a, b, q, r);
    a = std::move(b);
    b = rmonic(std::move(r));
  }
  return rmonic(a);
}

RatPoly to_rat(const IntPoly& p) {
  RatPoly r;
  for (const auto& c : p.coeffs()) r.emplace_back(c);
  return r;
}

IntPoly to_primitive_int(const RatPoly& p) {
  Int l = 1;
  for (const auto& c : p)
    if (sgn(c) != 0) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  std::vector<Int> out;
  for (const auto& c : p) out.push_back(c.get_num() * (l / c.get_den()));
  return IntPoly(std::move(out)).primitive();
}

RatPoly rquo(const RatPoly& a, const RatPoly& b) {
  RatPoly q, r;
  rdivmod(a, b, q, r);
  return q;
}

}  // namespace

IntPoly min_poly(const Mat& m) {
  if (!m.is_square()) throw std::invalid_argument("min_poly: matrix must be square");
  const std::size_t n = m.rows();
  if (n == 0) return IntPoly{1};
  RatPoly mu{Rat(1)};
  EchelonBasis covered(n);
  for (std::size_t i = 0; i < n && covered.dim() < n; ++i) {
    Vec e(n);
    e[i] = 1;
    if (covered.contains(e)) continue;
    // Krylov sequence e, e m, e m^2, ... until the first linear dependency
    EchelonBasis krylov(n, /*track_combinations=*/true);
    Vec w = e;
    RatPoly local;
    while (true) {
      Vec combo;
      Vec residue = krylov.reduce(w, &combo);
      if (std::all_of(residue.begin(), residue.end(), [](const Rat& x) { return sgn(x) == 0; })) {
        local = combo;
        break;
      }
      krylov.insert(w);
      covered.insert(w);
      w = mul(w, m);
    }
    // lcm(mu, local)
    RatPoly g = rgcd(mu, local);
    mu = rmonic(rmul(mu, rquo(local, g)));
  }
  return to_primitive_int(mu);
}

// --- factorization over Z -----------------------------------------------------------

namespace {

using modp::u64;
using ZPoly = std::vector<Int>;  // coefficients modulo some m, in [0, m)

void ztrim(ZPoly& p) {
  while (!p.empty() && sgn(p.back()) == 0) p.pop_back();
}

ZPoly zreduce(const ZPoly& a, const Int& m) {
  ZPoly r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) mpz_fdiv_r(r[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
  ztrim(r);
  return r;
}

ZPoly zmul(const ZPoly& a, const ZPoly& b, const Int& m) {
  if (a.empty() || b.empty()) return {};
  ZPoly r(a.size() + b.size() - 1);
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (sgn(a[i]) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  }
  return zreduce(r, m);
}

ZPoly zadd(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  return zreduce(r, m);
}

ZPoly zsub(const ZPoly& a, const ZPoly& b, const Int& m) {
  ZPoly r(std::max(a.size(), b.size()));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return zreduce(r, m);
}

// Division by a monic polynomial modulo m.
void zdivmod_monic(const ZPoly& a, const ZPoly& b, ZPoly& q, ZPoly& r, const Int& m) {
  r = zreduce(a, m);
  if (r.size() < b.size()) {
    q.clear();
    return;
  }
  q.assign(r.size() - b.size() + 1, Int(0));
  for (std::size_t k = r.size(); k-- >= b.size();) {
    Int c = r[k];
    mpz_fdiv_r(c.get_mpz_t(), c.get_mpz_t(), m.get_mpz_t());
    q[k - (b.size() - 1)] = c;
    if (sgn(c) == 0) continue;
    for (std::size_t j = 0; j < b.size(); ++j) r[k - (b.size() - 1) + j] -= c * b[j];
  }
  q = zreduce(q, m);
  r = zreduce(r, m);
}

ZPoly from_modp(const modp::Poly& p) {
  ZPoly r;
  for (auto c : p) r.emplace_back(static_cast<unsigned long>(c));
  ztrim(r);
  return r;
}

// One quadratic Hensel step: f = g h mod m, s g + t h = 1 mod m, h monic.
// Returns the same data modulo m^2.
void hensel_step(const ZPoly& f, ZPoly& g, ZPoly& h, ZPoly& s, ZPoly& t, const Int& m) {
  Int m2 = m * m;
  ZPoly e = zsub(zreduce(f, m2), zmul(g, h, m2), m2);
  ZPoly q, r;
  zdivmod_monic(zmul(s, e, m2), h, q, r, m2);
  ZPoly g2 = zadd(zadd(g, zmul(t, e, m2), m2), zmul(q, g, m2), m2);
  ZPoly h2 = zadd(h, r, m2);
  ZPoly b = zsub(zadd(zmul(s, g2, m2), zmul(t, h2, m2), m2), ZPoly{Int(1)}, m2);
  ZPoly c, d;
  zdivmod_monic(zmul(s, b, m2), h2, c, d, m2);
  ZPoly s2 = zsub(s, d, m2);
  ZPoly t2 = zsub(zsub(t, zmul(t, b, m2), m2), zmul(c, g2, m2), m2);
  g = std::move(g2);
  h = std::move(h2);
  s = std::move(s2);
  t = std::move(t2);
}

// Lifts f = lc * u_1 * ... * u_r (mod p, u_i monic) to the same shape modulo
// `modulus` = p^(2^k). Returns the lifted monic factors.
std::vector<ZPoly> hensel_lift(const IntPoly& f, const std::vector<modp::Poly>& factors, const modp::Field& F,
                               const Int& modulus) {
  std::vector<ZPoly> lifted;
  ZPoly rest = zreduce(f.coeffs(), modulus);
  for (std::size_t i = 0; i + 1 < factors.size(); ++i) {
    // split rest = g * h with h = u_i monic and g carrying the leading coefficient
    modp::Poly gbar{F.reduce(f.leading())};
    for (std::size_t j = i + 1; j < factors.size(); ++j) gbar = modp::mul(gbar, factors[j], F);
    modp::Poly sbar, tbar;
    modp::xgcd(gbar, factors[i], sbar, tbar, F);
    ZPoly g = from_modp(gbar), h = from_modp(factors[i]), s = from_modp(sbar), t = from_modp(tbar);
    Int m(static_cast<unsigned long>(F.p));
    while (m < modulus) {
      hensel_step(rest, g, h, s, t, m);
      m *= m;
    }
    lifted.push_back(zreduce(h, modulus));
    rest = zreduce(g, modulus);
  }
  // the last factor is rest / lc, made monic modulo the modulus
  Int lc_inv;
  Int lc = rest.empty() ? Int(1) : rest.back();
  if (mpz_invert(lc_inv.get_mpz_t(), lc.get_mpz_t(), modulus.get_mpz_t()) == 0)
    throw std::logic_error("Hensel lifting: leading coefficient not invertible");
  ZPoly last(rest.size());
  for (std::size_t k = 0; k < rest.size(); ++k) last[k] = rest[k] * lc_inv;
  lifted.push_back(zreduce(last, modulus));
  return lifted;
}

IntPoly symmetric(const ZPoly& a, const Int& m) {
  Int half = m / 2;
  std::vector<Int> c(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    mpz_fdiv_r(c[i].get_mpz_t(), a[i].get_mpz_t(), m.get_mpz_t());
    if (c[i] > half) c[i] -= m;
  }
  return IntPoly(std::move(c));
}

// Irreducible factors of a primitive squarefree polynomial of degree >= 1.
std::vector<IntPoly> zassenhaus(const IntPoly& f, std::mt19937_64& rng) {
  if (f.degree() <= 1) return {f};
  // choose among a few good primes the one with the fewest modular factors
  u64 best_p = 0;
  std::size_t best_count = 0;
  std::size_t tried = 0;
  for (u64 p = 3; tried < 6 && p < 100000; p += 2) {
    if (!modp::is_prime(p)) continue;
    modp::Field F(p);
    if (F.reduce(f.leading()) == 0) continue;
    modp::Poly fb;
    for (const auto& c : f.coeffs()) fb.push_back(F.reduce(c));
    modp::trim(fb);
    fb = modp::monic(fb, F);
    if (modp::degree(modp::gcd(fb, modp::derivative(fb, F), F)) != 0) continue;
    ++tried;
    std::size_t cnt = modp::count_factors_squarefree(fb, F);
    if (best_p == 0 || cnt < best_count) {
      best_p = p;
      best_count = cnt;
    }
    if (cnt == 1) break;
  }
  if (best_p == 0) throw std::runtime_error("factorization: no suitable prime found");
  if (best_count == 1) return {f};

  modp::Field F(best_p);
  modp::Poly fb;
  for (const auto& c : f.coeffs()) fb.push_back(F.reduce(c));
  modp::trim(fb);
  fb = modp::monic(fb, F);
  std::vector<modp::Poly> mod_factors = modp::factor_squarefree(fb, F, rng);

  // coefficient bound for factors: |lc| * 2^deg * (deg + 1) * max|c|, doubled
  Int maxc = 0;
  for (const auto& c : f.coeffs())
    if (abs(c) > maxc) maxc = abs(c);
  Int bound = abs(f.leading()) * maxc * static_cast<unsigned long>(f.degree() + 1);
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), static_cast<mp_bitcnt_t>(f.degree() + 1));
  Int modulus(static_cast<unsigned long>(best_p));
  while (modulus <= bound) modulus *= modulus;

  std::vector<ZPoly> lifted = hensel_lift(f, mod_factors, F, modulus);

  // recombination over subsets of increasing size
  std::vector<IntPoly> result;
  IntPoly rest = f;
  std::vector<std::size_t> live(lifted.size());
  std::iota(live.begin(), live.end(), 0);
  std::size_t s = 1;
  while (2 * s <= live.size()) {
    bool found = false;
    std::vector<std::size_t> pick(s);
    std::iota(pick.begin(), pick.end(), 0);
    while (true) {
      ZPoly g{abs(rest.leading())};
      for (auto k : pick) g = zmul(g, lifted[live[k]], modulus);
      IntPoly cand = symmetric(g, modulus).primitive();
      const Int& c0 = cand.coeffs().front();
      bool plausible = sgn(c0) == 0 || mpz_divisible_p(rest.coeffs().front().get_mpz_t(), c0.get_mpz_t());
      if (plausible) {
        if (auto q = divide_exact(rest, cand)) {
          result.push_back(cand);
          rest = q->primitive();
          std::vector<std::size_t> next;
          for (std::size_t k = 0; k < live.size(); ++k)
            if (std::find(pick.begin(), pick.end(), k) == pick.end()) next.push_back(live[k]);
          live = std::move(next);
          found = true;
          break;
        }
      }
      // next combination
      std::size_t i = s;
      while (i > 0 && pick[i - 1] == live.size() - s + (i - 1)) --i;
      if (i == 0) break;
      ++pick[i - 1];
      for (std::size_t j = i; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
    if (!found) ++s;
  }
  if (rest.degree() > 0) result.push_back(rest);
  return result;
}

}  // namespace

std::vector<std::pair<IntPoly, int>> factor_squarefree_rational(const IntPoly& p, std::uint64_t seed) {
  if (p.is_zero()) throw std::invalid_argument("cannot factor the zero polynomial");
  std::mt19937_64 rng(seed);
  std::vector<std::pair<IntPoly, int>> out;
  IntPoly f = p.primitive();
  if (f.degree() < 1) return out;
  // Yun's squarefree decomposition over Q
  RatPoly a = rmonic(to_rat(f));
  RatPoly b = rgcd(a, rmonic(to_rat(f.derivative())));
  RatPoly c = rquo(a, b);
  RatPoly d = [&] {
    RatPoly cd(c.size() > 1 ? c.size() - 1 : 0);
    for (std::size_t i = 1; i < c.size(); ++i) cd[i - 1] = c[i] * static_cast<long>(i);
    RatPoly ad(a.size() > 1 ? a.size() - 1 : 0);
    for (std::size_t i = 1; i < a.size(); ++i) ad[i - 1] = a[i] * static_cast<long>(i);
    RatPoly qb = rquo(ad, b);
    RatPoly r(std::max(qb.size(), cd.size()));
    for (std::size_t i = 0; i < qb.size(); ++i) r[i] += qb[i];
    for (std::size_t i = 0; i < cd.size(); ++i) r[i] -= cd[i];
    rtrim(r);
    return r;
  }();
  int mult = 1;
  while (c.size() > 1) {
    RatPoly g = rgcd(c, d);
    if (g.size() > 1) {
      for (auto& q : zassenhaus(to_primitive_int(g), rng)) out.emplace_back(q, mult);
    }
    RatPoly c_next = rquo(c, g);
    RatPoly cd(c_next.size() > 1 ? c_next.size() - 1 : 0);
    for (std::size_t i = 1; i < c_next.size(); ++i) cd[i - 1] = c_next[i] * static_cast<long>(i);
    RatPoly dq = rquo(d, g);
    RatPoly dn(std::max(dq.size(), cd.size()));
    for (std::size_t i = 0; i < dq.size(); ++i) dn[i] += dq[i];
    for (std::size_t i = 0; i < cd.size(); ++i) dn[i] -= cd[i];
    rtrim(dn);
    c = std::move(c_next);
    d = std::move(dn);
    ++mult;
  }
  std::stable_sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.first.degree() != y.first.degree() ? x.first.degree() < y.first.degree() : x.second < y.second;
  });
  return out;
}

}  // namespace ecm
