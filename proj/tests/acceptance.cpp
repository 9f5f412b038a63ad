// Acceptance run: one PASS/FAIL line per criterion, nonzero exit on any failure.

#include "ecm/braid_words.hpp"
#include "ecm/cocycle.hpp"
#include "ecm/linalg.hpp"
#include "ecm/repdecomp.hpp"
#include "ecm/tannaka.hpp"

#include "reference_words.hpp"
#include "support.hpp"

#include <chrono>
#include <exception>
#include <functional>
#include <iostream>
#include <map>
#include <sstream>
#include <string>
#include <vector>

using namespace ecm;

namespace {

const std::vector<std::string> kCases{"I", "II-i", "II-ii", "II-iii", "beauville"};

struct CaseData {
  SevenPointSheaf sheaf;
  ConvolutionMonodromy cm;
  Representation rep;
  std::vector<Constituent> constituents;
  G2Report report;
};

std::map<std::string, CaseData>& cases() {
  static std::map<std::string, CaseData> data;
  return data;
}

void load_cases() {
  for (const auto& c : kCases) {
    SevenPointSheaf n = make_seven_point_sheaf(c);
    ConvolutionMonodromy cm = convolution_monodromy(n.tuple, n.tuple);
    Representation rep = Representation::from(cm.induced(), cm.space.w_dim);
    std::vector<Constituent> cs = decompose(rep);
    G2Report report = verify_g2(n);
    cases().emplace(c, CaseData{std::move(n), std::move(cm), std::move(rep), std::move(cs), std::move(report)});
  }
}

int failures = 0;

void criterion(int k, const std::string& title, const std::function<bool(std::ostringstream&)>& body) {
  std::ostringstream detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail << "exception: " << e.what();
  }
  if (!ok) ++failures;
  std::cout << (ok ? "PASS" : "FAIL") << "  criterion " << k << ": " << title;
  if (!detail.str().empty()) std::cout << "  [" << detail.str() << "]";
  std::cout << std::endl;
}

bool one_criterion_euler(std::ostringstream& d) {
  bool ok = true;
  const auto t0 = std::chrono::steady_clock::now();
  for (const auto& c : kCases) {
    const long chi = euler_char(make_seven_point_sheaf(c).tuple);
    d << c << "=" << chi << " ";
    ok = ok && chi == 7;
  }
  const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  d << "time=" << secs << "s";
  return ok && secs < 1.0;
}

bool two_generic_rank(std::ostringstream& d) {
  bool ok = true;
  for (const auto& c : kCases) {
    const auto& cd = cases().at(c);
    const long expect = generic_rank_of_convolution(2, 7, 2, 7);
    d << c << "=" << cd.cm.space.w_dim << " ";
    ok = ok && expect == 28 && cd.cm.space.w_dim == 28;
  }
  return ok;
}

bool three_decomposition(std::ostringstream& d) {
  bool ok = true;
  for (const auto& c : kCases) {
    const auto& cd = cases().at(c);
    std::vector<std::size_t> ranks;
    bool mult_one = true;
    for (const auto& x : cd.constituents) {
      ranks.push_back(x.rank);
      mult_one = mult_one && x.multiplicity == 1;
    }
    const bool shape = ranks == std::vector<std::size_t>{2, 8, 18} && mult_one;
    const auto& n = cd.report.summand_n;
    const bool support = n.found && n.nontrivial_points.size() == 7 && n.all_unipotent_rank_one;
    d << c << ":" << (shape ? "{2,8,18}" : "bad-shape") << "/support=" << n.nontrivial_points.size() << " ";
    ok = ok && shape && support;
  }
  return ok;
}

bool four_product(std::ostringstream& d) {
  bool ok = true;
  for (const auto& c : kCases) {
    const bool p = elliptic_product(cases().at(c).cm.induced()).is_identity();
    d << c << "=" << (p ? "id" : "not-id") << " ";
    ok = ok && p;
  }
  return ok;
}

bool five_invariance(std::ostringstream& d) {
  bool ok = true;
  std::size_t checked = 0;
  for (const auto& c : kCases) {
    const auto& cd = cases().at(c);
    for (const auto& m : cd.cm.matrices) {
      ok = ok && cd.cm.space.h.image_under(m.full) == cd.cm.space.h;
      ok = ok && cd.cm.space.e.image_under(m.full) == cd.cm.space.e;
      ++checked;
    }
  }
  d << checked << " matrices";
  return ok && checked == 21 * kCases.size();
}

bool six_braids(std::ostringstream& d) {
  const BraidRelationReport r = check_braid_relations(14);
  const TupleDeformation id = identity_deformation(16);
  auto boundary = [](const TupleDeformation& t) {
    GeneratorWord w;
    for (std::size_t i = 0; i < 14; ++i) w = concat(w, t[i]);
    return free_reduce(w);
  };
  bool words = true;
  for (const auto& w : delta_words()) words = words && boundary(braid_action(w, id)) == boundary(id);
  const bool alpha = free_reduce(global_alpha_deformation(7, 7)) == free_reduce(testing::alpha_hat_reference());
  const bool beta = free_reduce(global_beta_deformation(7, 7)) == free_reduce(testing::beta_hat_reference());
  d << r.results.size() << " relations " << (r.all_pass() ? "ok" : "fail") << ", boundary " << (words ? "ok" : "fail")
    << ", globals " << (alpha && beta ? "ok" : "fail");
  return r.all_pass() && words && alpha && beta;
}

bool seven_thom_sebastiani(std::ostringstream& d) {
  bool ok = true;
  for (const auto& c : kCases) {
    const auto& cd = cases().at(c);
    const auto ts = check_thom_sebastiani(cd.sheaf, cd.cm.induced());
    d << c << "=" << (ts.pass ? "ok" : ts.detail) << " ";
    ok = ok && ts.pass && ts.origin_adjusted && ts.exact_matches == 18;
  }
  return ok;
}

bool eight_chi(std::ostringstream& d) {
  bool ok = true;
  for (const auto& c : kCases) {
    const auto& cd = cases().at(c);
    long chi = 0;
    for (const auto& x : cd.constituents)
      if (x.rank != 2) chi += constituent_euler_char(x.restricted_generators);
    d << c << "=" << chi << " ";
    ok = ok && chi == 41 && 7 + chi + 1 == 49;
  }
  return ok;
}

bool nine_oracles(std::ostringstream& d) {
  // Brute-force cocycle evaluation against the full deformation matrix.
  std::mt19937_64 rng(9);
  std::size_t agree = 0, total = 0;
  std::uniform_int_distribution<int> coin(-5, 5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + static_cast<std::size_t>(trial % 2);
    const std::size_t r = 2 + static_cast<std::size_t>(trial % 2 == 0 ? 1 : 0);
    const MonodromyTuple t = testing::random_tuple(n, r, rng);
    TupleDeformation def = trial % 5 == 0 ? global_beta_deformation(1, r - 1)
                                          : braid_action(testing::random_braid(r, 6, rng), identity_deformation(r + 2));
    const Mat full = deformation_full_matrix(t, def, Mat::identity(n));
    Vec x(n * (r + 2));
    for (auto& v : x) v = coin(rng);
    const Vec expect = testing::cocycle_oracle(t, x, def, Mat::identity(n));
    ++total;
    if (mul(x, full) == expect) ++agree;
  }
  d << "oracle " << agree << "/" << total;
  bool ok = agree == total && total >= 100;

  // Modular composition factors against the rational decomposition.
  for (const auto& c : kCases) {
    const auto& cd = cases().at(c);
    std::vector<std::size_t> rational;
    for (const auto& x : cd.constituents)
      for (std::size_t m = 0; m < x.multiplicity; ++m) rational.push_back(x.rank);
    for (std::uint64_t p : DecomposeOptions{}.primes) {
      const bool same = modular_composition_factors(cd.rep, p) == rational;
      if (!same) d << ", " << c << " mod " << p << " differs";
      ok = ok && same;
    }
  }
  if (ok) d << ", modular factors agree";
  return ok;
}

}  // namespace

int main() {
  try {
    load_cases();
  } catch (const std::exception& e) {
    std::cout << "FAIL  setup: " << e.what() << std::endl;
    return 1;
  }
  criterion(1, "Euler characteristic 7 for all cases", one_criterion_euler);
  criterion(2, "cocycle quotient has dimension 28", two_generic_rank);
  criterion(3, "constituents {2, 8, 18} with rank-2 support of size 7", three_decomposition);
  criterion(4, "elliptic product relation on W", four_product);
  criterion(5, "deformation matrices preserve H and E", five_invariance);
  criterion(6, "braid relations, boundary words, global deformations", six_braids);
  criterion(7, "local rank multiset matches the pair counts", seven_thom_sebastiani);
  criterion(8, "Euler characteristics of the large constituents sum to 41", eight_chi);
  criterion(9, "cocycle oracle and modular cross-checks", nine_oracles);
  return failures == 0 ? 0 : 1;
}
