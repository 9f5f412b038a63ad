#include "ecm/tannaka.hpp"

#include <doctest.h>

#include <algorithm>
#include <numeric>

using namespace ecm;

TEST_CASE("family quadruples") {
  const SL2Quadruple q = family_quadruple("I", {{"y", Rat(1)}});
  CHECK(q.a[0] == Mat{{1, 1}, {0, 1}});
  CHECK(q.a[1] == Mat{{1, -1}, {0, 1}});
  CHECK(q.a[2] == Mat{{1, 0}, {1, 1}});
  CHECK((q.a[0] * q.a[1] * q.a[2] * q.a[3]).is_identity());

  const SL2Quadruple q2 = family_quadruple("II-i");
  CHECK(q2.a[1] == Mat{{1, 0}, {Rat(1, 3), 1}});
  CHECK(q2.a[2] == Mat{{2, 1}, {-1, 0}});

  CHECK_THROWS_AS(family_quadruple("I", {{"y", Rat(0)}}), std::invalid_argument);
  CHECK_THROWS_AS(family_quadruple("II-i", {{"a", Rat(1)}, {"b", Rat(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(family_quadruple("II-i", {{"a", Rat(2)}, {"b", Rat(-2)}}), std::invalid_argument);
  CHECK_THROWS_AS(family_quadruple("I", {{"z", Rat(1)}}), std::invalid_argument);
  CHECK_THROWS_AS(family_quadruple("III"), std::invalid_argument);

  for (const auto& c : family_cases()) {
    CAPTURE(c);
    const SL2Quadruple f = family_quadruple(c);
    CHECK_NOTHROW(validate_quadruple(f));
    for (const auto& m : f.a) {
      CHECK(determinant(m) == 1);
      CHECK(trace(m) == 2);
      CHECK_FALSE(m.is_identity());
    }
  }
}

TEST_CASE("beauville data") {
  const SL2Quadruple b = beauville_quadruple();
  CHECK(b.a[0] == Mat{{1, 0}, {2, 1}});
  CHECK(b.a[1] == Mat{{-19, -8}, {50, 21}});
  CHECK(b.a[2] == Mat{{-7, -4}, {16, 9}});
  CHECK(b.a[3] == Mat{{-3, -4}, {4, 5}});
  const SevenPointSheaf on_e = beauville_on_E_tuple();
  const auto& l = on_e.tuple.locals;
  CHECK(std::find(l.begin(), l.end(), Mat{{-23, -36}, {16, 25}}) != l.end());
  CHECK(seven_point_tuple(b).tuple.locals == l);
}

TEST_CASE("seven-point tuples") {
  for (const auto& c : family_cases()) {
    const SevenPointSheaf n = make_seven_point_sheaf(c);
    CHECK(n.tuple.r() == 7);
    CHECK(validate(n.tuple).ok);
    CHECK(euler_char(n.tuple) == 7);
    const auto& a = n.source.a;
    CHECK(n.tuple.locals[0] == a[3]);
    CHECK(n.tuple.locals[1] == conj(a[2], a[3]));
    CHECK(n.tuple.locals[3] == a[0] * a[0]);
  }
  const auto other = make_seven_point_sheaf("II-ii", {{"y", Rat(-3, 2)}});
  CHECK(euler_char(other.tuple) == 7);
  CHECK_THROWS_AS(make_seven_point_sheaf("nope"), std::invalid_argument);
}

TEST_CASE("configuration sums") {
  const auto& cfg = seven_point_configuration();
  CHECK(cfg.size() == 7);
  const auto sums = configuration_sums();
  CHECK(sums.size() == 19);
  std::size_t pairs = 0;
  for (const auto& s : sums) {
    pairs += s.pairs.size();
    if (s.point == ConfigPoint{0, 0}) CHECK(s.pairs.size() == 7);
    if (s.point == ConfigPoint{2, 2}) {
      REQUIRE(s.pairs.size() == 1);
      CHECK(s.pairs[0] == std::pair<int, int>{7, 7});
    }
  }
  CHECK(pairs == 49);

  const auto pred = thom_sebastiani_prediction(make_seven_point_sheaf("I"));
  CHECK(pred.at(ConfigPoint{0, 0}) == 7);
  CHECK(pred.at(ConfigPoint{2, 2}) == 1);
  long total = 0;
  for (const auto& [pt, v] : pred) total += v;
  CHECK(total == 49);
}

TEST_CASE("self-duality") {
  for (const auto& c : family_cases()) CHECK(check_self_duality(make_seven_point_sheaf(c)).self_dual);
  const auto b = check_self_duality(beauville_on_E_tuple());
  CHECK(b.self_dual);
  REQUIRE(b.intertwiner);
  CHECK(determinant(*b.intertwiner) != 0);

  const Mat g1{{2, 0}, {0, 1}}, g2{{1, 1}, {0, 3}};
  const MonodromyTuple generic = MonodromyTuple::with_trivial_handle({g1, g2, inverse(g1 * g2)});
  const auto v = check_self_duality(generic);
  CHECK_FALSE(v.self_dual);
  CHECK_FALSE(v.intertwiner.has_value());
}

TEST_CASE("translation invariance") {
  const auto v = check_not_translate(make_seven_point_sheaf("I"));
  CHECK(v.status == TranslateStatus::pass);
  CHECK(v.candidates_checked > 0);
  CHECK(check_not_translate_torsion(7, 1, 2).status == TranslateStatus::excluded);
  CHECK(check_not_translate_torsion(101, 1, 5).status == TranslateStatus::pass);
}

TEST_CASE("constituent euler characteristic") {
  std::vector<Mat> gens(21, Mat::identity(3));
  gens[0] = Mat{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}};
  CHECK(constituent_euler_char(gens) == 1);
  CHECK(constituent_euler_char(std::vector<Mat>(21, Mat::identity(2))) == 0);
}

TEST_CASE("G2 report for the Beauville sheaf") {
  const G2Report r = verify_g2(beauville_on_E_tuple());
  CHECK(r.conclusion == "G2");
  CHECK(r.reasons.empty());
  CHECK(r.euler_char == 7);
  CHECK(r.generic_rank == 28);
  CHECK(r.w_dim == 28);
  CHECK(r.rank == 2);
  CHECK(r.rank_mod_14 == 2);
  CHECK(r.cocycle_invariance);
  CHECK(r.product_relation);
  REQUIRE(r.constituents.size() == 3);
  CHECK(r.constituents[0].rank == 2);
  CHECK(r.constituents[1].rank == 8);
  CHECK(r.constituents[2].rank == 18);
  for (const auto& c : r.constituents) {
    CHECK(c.multiplicity == 1);
    CHECK(c.endomorphism_dim == 1);
    CHECK(c.certificate.rfind("modular:", 0) == 0);
  }
  CHECK(r.chi_n2_plus_n3 == 41);
  CHECK(7 + r.chi_n2_plus_n3 + 1 == 49);

  const auto& n = r.summand_n;
  CHECK(n.found);
  CHECK(n.nontrivial_points.size() == 7);
  CHECK(n.all_unipotent_rank_one);
  CHECK(n.locals_conjugate);
  CHECK(n.pass);

  const auto& ts = r.thom_sebastiani;
  CHECK(ts.pass);
  CHECK(ts.origin_adjusted);
  CHECK(ts.exact_matches == 18);
  CHECK(std::all_of(ts.unipotent.begin(), ts.unipotent.end(), [](bool b) { return b; }));
  CHECK(std::accumulate(ts.ranks.begin(), ts.ranks.end(), 0L) == 48);
}

TEST_CASE("G2 report is inconclusive for a sheaf of the wrong shape") {
  SevenPointSheaf bad = beauville_on_E_tuple();
  const Mat g1{{2, 0}, {0, 1}}, g2{{1, 1}, {0, 3}};
  bad.tuple = MonodromyTuple::with_trivial_handle({g1, g2, inverse(g1 * g2)});
  const G2Report r = verify_g2(bad);
  CHECK(r.conclusion == "inconclusive");
  CHECK_FALSE(r.reasons.empty());
}
