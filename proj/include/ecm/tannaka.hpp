#pragma once

#include "ecm/cocycle.hpp"
#include "ecm/monodromy.hpp"
#include "ecm/repdecomp.hpp"

#include <array>
#include <compare>
#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace ecm {

/// A_1 A_2 A_3 A_4 = 1 in SL_2(Q), every A_i unipotent and nontrivial.
struct SL2Quadruple {
  std::array<Mat, 4> a;
};

/// Throws std::invalid_argument naming the violated condition.
void validate_quadruple(const SL2Quadruple& q);

using Params = std::map<std::string, Rat>;

/// The case labels with a parametrized quadruple.
const std::vector<std::string>& family_cases();
/// y = 1 for I, II-ii, II-iii; (a, b) = (2, 1) for II-i.
Params default_params(const std::string& case_label);
/// Missing parameters take their defaults; unknown names are rejected.
SL2Quadruple family_quadruple(const std::string& case_label, const Params& params = {});
SL2Quadruple beauville_quadruple();

struct SevenPointSheaf {
  MonodromyTuple tuple;
  SL2Quadruple source;
  std::string case_label = "custom";
  Params parameters;
};

/// (A_4, A_3^{A_4}, A_2^{A_3A_4}, A_1^2, A_2, A_3, A_4) with trivial handle.
SevenPointSheaf seven_point_tuple(const SL2Quadruple& q, std::string case_label = "custom", Params params = {});
/// The Beauville seven-point sheaf with its local matrices entered directly.
SevenPointSheaf beauville_on_E_tuple();
/// Family case or "beauville".
SevenPointSheaf make_seven_point_sheaf(const std::string& case_label, const Params& params = {});

/// m·a_1 + n·a_2 for generic a_1, a_2.
struct ConfigPoint {
  long m = 0;
  long n = 0;
  friend auto operator<=>(const ConfigPoint&, const ConfigPoint&) = default;
};

std::string to_string(const ConfigPoint& p);

/// The singular points in the order of the local monodromies:
/// −(a_1+a_2), −a_2, −a_1, 0, a_1, a_2, a_1+a_2.
const std::vector<ConfigPoint>& seven_point_configuration();

struct ConfigSum {
  ConfigPoint point;
  std::vector<std::pair<int, int>> pairs;  // 1-based ordered (s, t) with x_s + x_t = point
};

/// The 19 distinct sums x_s + x_t, sorted by point.
std::vector<ConfigSum> configuration_sums();

/// Σ rank(A_s − 1) rank(A_t − 1) over the pairs realizing each sum point.
std::map<ConfigPoint, long> thom_sebastiani_prediction(const SevenPointSheaf& n);

struct ThomSebastianiReport {
  std::vector<long> ranks;              // rank(M_k − 1), k = 1..19
  std::vector<bool> unipotent;          // (M_k − 1) nilpotent
  std::vector<long> predicted;          // sorted, origin reduced by one
  std::vector<long> observed;           // sorted ranks
  std::size_t exact_matches = 0;        // predictions realized without adjustment
  bool origin_adjusted = false;
  bool pass = false;
  std::string detail;
};

ThomSebastianiReport check_thom_sebastiani(const SevenPointSheaf& n, const std::vector<Mat>& induced);

struct SelfDualityVerdict {
  bool self_dual = false;
  std::size_t intertwiner_dim = 0;
  std::optional<Mat> intertwiner;  // invertible, when self-dual
};

/// Compares the pullback along x ↦ −x with the contragredient tuple.
SelfDualityVerdict check_self_duality(const MonodromyTuple& t);
SelfDualityVerdict check_self_duality(const SevenPointSheaf& n);

enum class TranslateStatus { pass, fail, excluded };

struct TranslateVerdict {
  TranslateStatus status = TranslateStatus::pass;
  std::size_t candidates_checked = 0;
  std::string detail;
};

/// No nonzero translation by an element of S or S − S fixes the generic
/// configuration S.
TranslateVerdict check_not_translate(const SevenPointSheaf& n);
/// The configuration with a_1, a_2 in Z/order; degenerate (torsion)
/// configurations are reported as excluded inputs.
TranslateVerdict check_not_translate_torsion(long order, long a1, long a2);

struct SummandNReport {
  bool found = false;
  std::size_t constituent_index = 0;
  std::vector<std::size_t> nontrivial_points;  // 1-based δ indices
  bool all_unipotent_rank_one = false;
  bool locals_conjugate = false;               // each nontrivial local matches some local of N
  std::size_t simultaneous_orderings = 0;      // informational
  /// The local ranks at the nontrivial points equal the predictions at the
  /// singular points of N itself (informational).
  bool support_on_singular_set = false;
  bool pass = false;
};

SummandNReport check_summand_n(const SevenPointSheaf& n, const std::vector<Constituent>& constituents,
                               bool search_orderings = true);

struct G2Report {
  std::string case_label;
  Params parameters;
  std::uint64_t seed = 0;
  long euler_char = 0;
  long generic_rank = 0;
  std::size_t w_dim = 0;
  long rank = 0;
  long rank_mod_14 = 0;
  SelfDualityVerdict self_dual;
  TranslateVerdict translate;
  bool cocycle_invariance = false;
  bool product_relation = false;
  std::vector<Constituent> constituents;
  SummandNReport summand_n;
  ThomSebastianiReport thom_sebastiani;
  std::vector<long> constituent_chi;  // per constituent, same order
  long chi_n2_plus_n3 = 0;
  std::vector<std::string> reasons;   // failed hypotheses
  std::string conclusion;             // "G2" or "inconclusive"
};

G2Report verify_g2(const SevenPointSheaf& n, const DecomposeOptions& options = {});

/// 19·rank − Σ_k dim fixed(M_k) over the first 19 restricted generators.
long constituent_euler_char(const std::vector<Mat>& restricted, std::size_t local_count = 19);

}  // namespace ecm
