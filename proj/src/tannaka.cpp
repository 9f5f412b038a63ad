#include "ecm/tannaka.hpp"

#include "ecm/linalg.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <stdexcept>

namespace ecm {

namespace {

const Mat& upper_unipotent() {
  static const Mat m{{1, 1}, {0, 1}};
  return m;
}

bool has_invertible(const std::vector<Mat>& basis, Mat* witness = nullptr) {
  for (const auto& x : basis)
    if (x.is_square() && sgn(determinant(x)) != 0) {
      if (witness) *witness = x;
      return true;
    }
  if (basis.empty() || !basis.front().is_square()) return false;
  // a generic combination is invertible whenever some element of the span is
  for (long shift = 1; shift <= 4; ++shift) {
    Mat x(basis.front().rows(), basis.front().cols());
    for (std::size_t i = 0; i < basis.size(); ++i) x += basis[i] * Rat(static_cast<long>(i) * shift + 1);
    if (sgn(determinant(x)) != 0) {
      if (witness) *witness = x;
      return true;
    }
  }
  return false;
}

}  // namespace

void validate_quadruple(const SL2Quadruple& q) {
  for (std::size_t i = 0; i < 4; ++i) {
    const Mat& m = q.a[i];
    const std::string name = "A" + std::to_string(i + 1);
    if (m.rows() != 2 || m.cols() != 2) throw std::invalid_argument(name + " is not 2x2");
    if (determinant(m) != 1) throw std::invalid_argument(name + " does not have determinant 1");
    if (trace(m) != 2) throw std::invalid_argument(name + " is not unipotent (trace " + to_string(trace(m)) + ")");
    if (m.is_identity()) throw std::invalid_argument(name + " is trivial");
  }
  if (!(q.a[0] * q.a[1] * q.a[2] * q.a[3]).is_identity()) throw std::invalid_argument("A1 A2 A3 A4 != 1");
}

const std::vector<std::string>& family_cases() {
  static const std::vector<std::string> cases{"I", "II-i", "II-ii", "II-iii"};
  return cases;
}

Params default_params(const std::string& case_label) {
  if (case_label == "I" || case_label == "II-ii" || case_label == "II-iii") return {{"y", Rat(1)}};
  if (case_label == "II-i") return {{"a", Rat(2)}, {"b", Rat(1)}};
  if (case_label == "beauville") return {};
  throw std::invalid_argument("unknown case label '" + case_label + "'");
}

SL2Quadruple family_quadruple(const std::string& case_label, const Params& params) {
  Params p = default_params(case_label);
  if (case_label == "beauville") throw std::invalid_argument("the Beauville case has no parametrized quadruple");
  for (const auto& [k, v] : params) {
    if (!p.count(k)) throw std::invalid_argument("case " + case_label + " has no parameter '" + k + "'");
    p[k] = v;
  }
  SL2Quadruple q;
  q.a[0] = upper_unipotent();
  if (case_label == "II-i") {
    const Rat a = p.at("a"), b = p.at("b");
    if (a == 1) throw std::invalid_argument("case II-i requires a != 1");
    if (sgn(b) == 0) throw std::invalid_argument("case II-i requires b != 0");
    if (sgn(a + b) == 0) throw std::invalid_argument("case II-i requires a + b != 0");
    const Rat s = (a - 1) * (a - 1);
    q.a[1] = Mat{{1, 0}, {Rat(s / (b * (a + b))), 1}};
    q.a[2] = Mat{{a, b}, {Rat(-s / b), Rat(2 - a)}};
  } else {
    const Rat y = p.at("y");
    if (sgn(y) == 0) throw std::invalid_argument("case " + case_label + " requires y != 0");
    if (case_label == "I") {
      q.a[1] = Mat{{1, -1}, {0, 1}};
      q.a[2] = Mat{{1, 0}, {y, 1}};
    } else if (case_label == "II-ii") {
      q.a[1] = Mat{{1, 0}, {y, 1}};
      q.a[2] = Mat{{1, 0}, {Rat(-y), 1}};
    } else {
      q.a[1] = Mat{{1, 0}, {y, 1}};
      q.a[2] = Mat{{1, -1}, {0, 1}};
    }
  }
  q.a[3] = inverse(q.a[0] * q.a[1] * q.a[2]);
  validate_quadruple(q);
  return q;
}

SL2Quadruple beauville_quadruple() {
  SL2Quadruple q;
  q.a[0] = Mat{{1, 0}, {2, 1}};
  q.a[1] = Mat{{-19, -8}, {50, 21}};
  q.a[2] = Mat{{-7, -4}, {16, 9}};
  q.a[3] = Mat{{-3, -4}, {4, 5}};
  return q;
}

SevenPointSheaf seven_point_tuple(const SL2Quadruple& q, std::string case_label, Params params) {
  validate_quadruple(q);
  const auto& [a1, a2, a3, a4] = q.a;
  std::vector<Mat> locals{a4, conj(a3, a4), conj(a2, a3 * a4), a1 * a1, a2, a3, a4};
  for (std::size_t i = 0; i < locals.size(); ++i)
    if (locals[i].is_identity()) throw std::invalid_argument("local " + std::to_string(i + 1) + " is trivial");
  SevenPointSheaf s;
  s.tuple = MonodromyTuple::with_trivial_handle(std::move(locals));
  require_valid(s.tuple);
  s.source = q;
  s.case_label = std::move(case_label);
  s.parameters = std::move(params);
  return s;
}

SevenPointSheaf beauville_on_E_tuple() {
  SevenPointSheaf s;
  s.tuple = MonodromyTuple::with_trivial_handle({
      Mat{{-3, -4}, {4, 5}},
      Mat{{-23, -36}, {16, 25}},
      Mat{{-3, -8}, {2, 5}},
      Mat{{1, 0}, {4, 1}},
      Mat{{-19, -8}, {50, 21}},
      Mat{{-7, -4}, {16, 9}},
      Mat{{-3, -4}, {4, 5}},
  });
  require_valid(s.tuple);
  s.source = beauville_quadruple();
  s.case_label = "beauville";
  return s;
}

SevenPointSheaf make_seven_point_sheaf(const std::string& case_label, const Params& params) {
  if (case_label == "beauville") {
    if (!params.empty()) throw std::invalid_argument("the Beauville case takes no parameters");
    return beauville_on_E_tuple();
  }
  Params p = default_params(case_label);
  for (const auto& [k, v] : params) p[k] = v;
  return seven_point_tuple(family_quadruple(case_label, params), case_label, p);
}

// --- configuration combinatorics ------------------------------------------------------

std::string to_string(const ConfigPoint& p) {
  return "(" + std::to_string(p.m) + "," + std::to_string(p.n) + ")";
}

const std::vector<ConfigPoint>& seven_point_configuration() {
  static const std::vector<ConfigPoint> pts{{-1, -1}, {0, -1}, {-1, 0}, {0, 0}, {1, 0}, {0, 1}, {1, 1}};
  return pts;
}

std::vector<ConfigSum> configuration_sums() {
  const auto& pts = seven_point_configuration();
  std::map<ConfigPoint, std::vector<std::pair<int, int>>> sums;
  for (std::size_t s = 0; s < pts.size(); ++s)
    for (std::size_t t = 0; t < pts.size(); ++t)
      sums[{pts[s].m + pts[t].m, pts[s].n + pts[t].n}].emplace_back(static_cast<int>(s + 1), static_cast<int>(t + 1));
  std::vector<ConfigSum> out;
  for (auto& [p, pairs] : sums) out.push_back({p, std::move(pairs)});
  return out;
}

std::map<ConfigPoint, long> thom_sebastiani_prediction(const SevenPointSheaf& n) {
  const Mat id = Mat::identity(n.tuple.rank);
  std::vector<long> r;
  for (const auto& a : n.tuple.locals) r.push_back(static_cast<long>(rank(a - id)));
  std::map<ConfigPoint, long> out;
  for (const auto& cs : configuration_sums()) {
    long total = 0;
    for (auto [s, t] : cs.pairs) total += r.at(static_cast<std::size_t>(s - 1)) * r.at(static_cast<std::size_t>(t - 1));
    out[cs.point] = total;
  }
  return out;
}

namespace {

bool is_nilpotent(const Mat& m) {
  Mat p = m;
  for (std::size_t e = 1; e < m.rows(); e *= 2) p = p * p;
  return p.is_zero();
}

}  // namespace

ThomSebastianiReport check_thom_sebastiani(const SevenPointSheaf& n, const std::vector<Mat>& induced) {
  const std::size_t count = configuration_sums().size();
  if (induced.size() < count) throw std::invalid_argument("check_thom_sebastiani: too few local matrices");
  ThomSebastianiReport rep;
  const Mat id = Mat::identity(induced.front().rows());
  for (std::size_t k = 0; k < count; ++k) {
    const Mat d = induced[k] - id;
    rep.ranks.push_back(static_cast<long>(rank(d)));
    rep.unipotent.push_back(is_nilpotent(d));
  }
  std::vector<long> raw;
  for (const auto& [p, v] : thom_sebastiani_prediction(n)) {
    raw.push_back(v);
    if (p == ConfigPoint{0, 0}) {
      rep.predicted.push_back(v - 1);
      rep.origin_adjusted = true;
    } else {
      rep.predicted.push_back(v);
    }
  }
  rep.observed = rep.ranks;
  std::sort(rep.observed.begin(), rep.observed.end());
  std::sort(rep.predicted.begin(), rep.predicted.end());
  std::sort(raw.begin(), raw.end());
  std::vector<long> common;
  std::set_intersection(raw.begin(), raw.end(), rep.observed.begin(), rep.observed.end(), std::back_inserter(common));
  rep.exact_matches = common.size();
  const bool all_unipotent = std::all_of(rep.unipotent.begin(), rep.unipotent.end(), [](bool b) { return b; });
  rep.pass = all_unipotent && rep.predicted == rep.observed;
  if (!all_unipotent) rep.detail = "some local matrix is not unipotent";
  else if (rep.predicted != rep.observed) rep.detail = "rank multiset differs from the prediction";
  return rep;
}

// --- self-duality and translates -------------------------------------------------------

SelfDualityVerdict check_self_duality(const MonodromyTuple& t) {
  const MonodromyTuple neg = pullback_negation(t);
  std::vector<Mat> dual;
  for (const auto& g : t.generators()) dual.push_back(inverse(g).transpose());
  const auto basis = intertwiner_basis(neg.generators(), dual);
  SelfDualityVerdict v;
  v.intertwiner_dim = basis.size();
  Mat x;
  if (has_invertible(basis, &x)) {
    v.self_dual = true;
    v.intertwiner = x;
  }
  return v;
}

SelfDualityVerdict check_self_duality(const SevenPointSheaf& n) { return check_self_duality(n.tuple); }

TranslateVerdict check_not_translate(const SevenPointSheaf& n) {
  (void)n;  // the singular set is the generic configuration for every seven-point sheaf
  const auto& pts = seven_point_configuration();
  const std::set<ConfigPoint> s(pts.begin(), pts.end());
  std::set<ConfigPoint> candidates;
  for (const auto& x : pts) {
    candidates.insert(x);
    for (const auto& y : pts) candidates.insert({x.m - y.m, x.n - y.n});
  }
  candidates.erase({0, 0});
  TranslateVerdict v;
  v.candidates_checked = candidates.size();
  for (const auto& tau : candidates) {
    std::set<ConfigPoint> moved;
    for (const auto& x : s) moved.insert({x.m + tau.m, x.n + tau.n});
    if (moved == s) {
      v.status = TranslateStatus::fail;
      v.detail = "configuration is invariant under translation by " + to_string(tau);
      return v;
    }
  }
  v.detail = "no nonzero translation fixes the configuration";
  return v;
}

TranslateVerdict check_not_translate_torsion(long order, long a1, long a2) {
  if (order < 1) throw std::invalid_argument("group order must be positive");
  auto md = [order](long x) { return ((x % order) + order) % order; };
  std::vector<long> pts{md(-a1 - a2), md(-a2), md(-a1), 0, md(a1), md(a2), md(a1 + a2)};
  const std::set<long> s(pts.begin(), pts.end());
  TranslateVerdict v;
  if (s.size() < pts.size()) {
    v.status = TranslateStatus::excluded;
    v.detail = "singular points collide in Z/" + std::to_string(order);
    return v;
  }
  for (long tau = 1; tau < order; ++tau) {
    ++v.candidates_checked;
    std::set<long> moved;
    for (long x : s) moved.insert(md(x + tau));
    if (moved == s) {
      v.status = TranslateStatus::excluded;
      v.detail = "torsion configuration is invariant under translation by " + std::to_string(tau) + " in Z/" +
                 std::to_string(order);
      return v;
    }
  }
  v.detail = "no nonzero translation fixes the configuration";
  return v;
}

// --- the summand N -----------------------------------------------------------------------

namespace {

// Counts orderings σ with a simultaneous invertible intertwiner between
// (R_1, …, R_k) and (N_σ(1), …, N_σ(k)), pruning on partial lists.
std::size_t count_orderings(const std::vector<Mat>& r, const std::vector<Mat>& n, std::vector<Mat>& lhs,
                            std::vector<Mat>& rhs, std::vector<bool>& used) {
  if (lhs.size() == r.size()) return has_invertible(intertwiner_basis(lhs, rhs)) ? 1 : 0;
  std::size_t total = 0;
  for (std::size_t j = 0; j < n.size(); ++j) {
    if (used[j]) continue;
    lhs.push_back(r[lhs.size()]);
    rhs.push_back(n[j]);
    if (has_invertible(intertwiner_basis(lhs, rhs))) {
      used[j] = true;
      total += count_orderings(r, n, lhs, rhs, used);
      used[j] = false;
    }
    lhs.pop_back();
    rhs.pop_back();
  }
  return total;
}

}  // namespace

SummandNReport check_summand_n(const SevenPointSheaf& n, const std::vector<Constituent>& constituents,
                               bool search_orderings) {
  SummandNReport rep;
  const std::size_t locals = configuration_sums().size();
  for (std::size_t c = 0; c < constituents.size(); ++c) {
    if (constituents[c].rank != n.tuple.rank) continue;
    rep.found = true;
    rep.constituent_index = c;
    break;
  }
  if (!rep.found) return rep;
  const auto& gens = constituents[rep.constituent_index].restricted_generators;
  if (gens.size() < locals) throw std::invalid_argument("check_summand_n: too few generators");
  std::vector<Mat> nontrivial;
  for (std::size_t k = 0; k < locals; ++k)
    if (!gens[k].is_identity()) {
      rep.nontrivial_points.push_back(k + 1);
      nontrivial.push_back(gens[k]);
    }
  const Mat id = Mat::identity(n.tuple.rank);
  rep.all_unipotent_rank_one = std::all_of(nontrivial.begin(), nontrivial.end(), [&](const Mat& m) {
    return is_nilpotent(m - id) && rank(m - id) == 1;
  });
  rep.locals_conjugate = std::all_of(nontrivial.begin(), nontrivial.end(), [&](const Mat& m) {
    return std::any_of(n.tuple.locals.begin(), n.tuple.locals.end(),
                       [&](const Mat& a) { return has_invertible(intertwiner_basis({m}, {a})); });
  });
  if (search_orderings && nontrivial.size() == n.tuple.r()) {
    std::vector<Mat> lhs, rhs;
    std::vector<bool> used(n.tuple.r(), false);
    rep.simultaneous_orderings = count_orderings(nontrivial, n.tuple.locals, lhs, rhs, used);
  }
  rep.pass = rep.nontrivial_points.size() == n.tuple.r() && rep.all_unipotent_rank_one && rep.locals_conjugate;
  return rep;
}

// --- the G2 criterion ----------------------------------------------------------------------

long constituent_euler_char(const std::vector<Mat>& restricted, std::size_t local_count) {
  if (restricted.size() < local_count) throw std::invalid_argument("constituent_euler_char: too few generators");
  long chi = 0;
  for (std::size_t k = 0; k < local_count; ++k)
    chi += static_cast<long>(restricted[k].rows() - fixed_space(restricted[k]).dim());
  return chi;
}

G2Report verify_g2(const SevenPointSheaf& n, const DecomposeOptions& options) {
  G2Report rep;
  rep.case_label = n.case_label;
  rep.parameters = n.parameters;
  rep.seed = options.seed;
  auto fail = [&](std::string why) { rep.reasons.push_back(std::move(why)); };
  auto finish = [&] {
    rep.conclusion = rep.reasons.empty() ? "G2" : "inconclusive";
    return rep;
  };

  rep.euler_char = euler_char(n.tuple);
  if (rep.euler_char != 7) fail("Euler characteristic is " + std::to_string(rep.euler_char) + ", expected 7");
  rep.rank = static_cast<long>(n.tuple.rank);
  rep.rank_mod_14 = rep.rank % 14;
  if (rep.rank_mod_14 == 0) fail("rank is divisible by 14");
  rep.generic_rank = generic_rank_of_convolution(rep.rank, rep.euler_char, rep.rank, rep.euler_char);

  rep.self_dual = check_self_duality(n);
  if (!rep.self_dual.self_dual) fail("not self-dual");
  rep.translate = check_not_translate(n);
  if (rep.translate.status != TranslateStatus::pass) fail("translate check: " + rep.translate.detail);

  ConvolutionMonodromy cm;
  try {
    cm = convolution_monodromy(n.tuple, n.tuple);
  } catch (const std::logic_error& e) {
    fail(std::string("cocycle invariance: ") + e.what());
    return finish();
  }
  rep.cocycle_invariance = true;
  rep.w_dim = cm.space.w_dim;
  if (static_cast<long>(rep.w_dim) != rep.generic_rank)
    fail("W has dimension " + std::to_string(rep.w_dim) + ", expected " + std::to_string(rep.generic_rank));
  const std::vector<Mat> induced = cm.induced();
  rep.product_relation = elliptic_product(induced).is_identity();
  if (!rep.product_relation) fail("elliptic product relation fails");

  rep.constituents = decompose(Representation::from(induced, rep.w_dim), options);
  std::vector<std::size_t> ranks;
  for (const auto& c : rep.constituents) {
    for (std::size_t m = 0; m < c.multiplicity; ++m) ranks.push_back(c.rank);
    if (c.certificate == "search-exhausted") fail("constituent of rank " + std::to_string(c.rank) + " is uncertified");
    if (c.endomorphism_dim != 1)
      fail("constituent of rank " + std::to_string(c.rank) + " has endomorphism dimension " +
           std::to_string(c.endomorphism_dim));
  }
  std::sort(ranks.begin(), ranks.end());
  if (ranks != std::vector<std::size_t>{2, 8, 18}) fail("constituent ranks differ from {2, 8, 18}");

  rep.summand_n = check_summand_n(n, rep.constituents);
  if (!rep.summand_n.pass) fail("no constituent matches N");

  rep.thom_sebastiani = check_thom_sebastiani(n, induced);
  if (!rep.thom_sebastiani.pass) fail("Thom-Sebastiani: " + rep.thom_sebastiani.detail);
  if (rep.summand_n.found) {
    // match by value: which sum points can carry the nontrivial locals
    const auto pred = thom_sebastiani_prediction(n);
    std::vector<long> at_support, at_singular;
    for (auto k : rep.summand_n.nontrivial_points) at_support.push_back(rep.thom_sebastiani.ranks[k - 1]);
    for (const auto& p : seven_point_configuration())
      at_singular.push_back(pred.at(p) - (p == ConfigPoint{0, 0} ? 1 : 0));
    std::sort(at_support.begin(), at_support.end());
    std::sort(at_singular.begin(), at_singular.end());
    rep.summand_n.support_on_singular_set = at_support == at_singular;
  }

  long others = 0;
  for (std::size_t c = 0; c < rep.constituents.size(); ++c) {
    const long chi = constituent_euler_char(rep.constituents[c].restricted_generators);
    rep.constituent_chi.push_back(chi);
    if (!(rep.summand_n.found && c == rep.summand_n.constituent_index))
      others += chi * static_cast<long>(rep.constituents[c].multiplicity);
  }
  rep.chi_n2_plus_n3 = others;
  const long expected = rep.euler_char * rep.euler_char - rep.euler_char - 1;
  if (others != expected)
    fail("Euler characteristics of the other constituents sum to " + std::to_string(others) + ", expected " +
         std::to_string(expected));
  return finish();
}

}  // namespace ecm
