#include "ecm/io.hpp"

#include <algorithm>
#include <stdexcept>

namespace ecm::io {

json to_json(const Rat& x) { return to_string(x); }

Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(j.get<long>());
  throw std::invalid_argument("rational must be a string \"p/q\" or an integer, got " + j.dump());
}

json to_json(const Mat& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (const auto& x : m.row(i)) row.push_back(to_json(x));
    rows.push_back(std::move(row));
  }
  return rows;
}

Mat mat_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix must be a nonempty array of rows");
  const std::size_t cols = j.front().is_array() ? j.front().size() : 0;
  if (cols == 0) throw std::invalid_argument("matrix rows must be nonempty arrays");
  Mat m(j.size(), cols);
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array() || j[i].size() != cols) throw std::invalid_argument("matrix rows have unequal lengths");
    for (std::size_t k = 0; k < cols; ++k) m(i, k) = rat_from_json(j[i][k]);
  }
  return m;
}

json to_json(const GeneratorWord& w) {
  json out = json::array();
  for (const auto& l : w) out.push_back({l.index, l.exponent});
  return out;
}

json to_json(const TupleDeformation& t) {
  json out = json::array();
  for (const auto& w : t) out.push_back(to_json(w));
  return out;
}

GeneratorWord word_from_json(const json& j) {
  GeneratorWord w;
  for (const auto& l : j) {
    if (!l.is_array() || l.size() != 2) throw std::invalid_argument("letter must be [index, exponent]");
    w.push_back({l[0].get<int>(), l[1].get<int>()});
  }
  return w;
}

TupleDeformation deformation_from_json(const json& j) {
  TupleDeformation t;
  for (const auto& w : j) t.push_back(word_from_json(w));
  return t;
}

json to_json(const MonodromyTuple& t) {
  json locals = json::array();
  for (const auto& a : t.locals) locals.push_back(to_json(a));
  return {{"rank", t.rank}, {"locals", locals}, {"handle", {to_json(t.handle_a), to_json(t.handle_b)}}};
}

MonodromyTuple tuple_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("tuple must be a JSON object");
  for (const char* key : {"rank", "locals", "handle"})
    if (!j.contains(key)) throw std::invalid_argument(std::string("tuple is missing \"") + key + "\"");
  MonodromyTuple t;
  t.rank = j.at("rank").get<std::size_t>();
  for (const auto& m : j.at("locals")) t.locals.push_back(mat_from_json(m));
  const auto& h = j.at("handle");
  if (!h.is_array() || h.size() != 2) throw std::invalid_argument("handle must hold exactly two matrices");
  t.handle_a = mat_from_json(h[0]);
  t.handle_b = mat_from_json(h[1]);
  require_valid(t);
  return t;
}

json convolution_bundle(const ConvolutionMonodromy& cm) {
  json mats = json::array();
  for (const auto& m : cm.matrices) mats.push_back(to_json(m.induced));
  return {{"w_dim", cm.space.w_dim}, {"matrices", mats}, {"convention", "globals-inverted"}};
}

std::vector<Mat> bundle_matrices(const json& j) {
  if (!j.is_object() || !j.contains("matrices")) throw std::invalid_argument("bundle is missing \"matrices\"");
  std::vector<Mat> out;
  for (const auto& m : j.at("matrices")) out.push_back(mat_from_json(m));
  return out;
}

json to_json(const Constituent& c) {
  return {{"rank", c.rank},
          {"multiplicity", c.multiplicity},
          {"certificate", c.certificate},
          {"endomorphism_dim", c.endomorphism_dim},
          {"sub_basis", to_json(c.sub_basis.basis())}};
}

json constituents_report(const std::vector<Constituent>& cs) {
  json out = json::array();
  for (const auto& c : cs) out.push_back(to_json(c));
  return out;
}

json to_json(const BraidRelationReport& r) {
  json results = json::array();
  for (const auto& x : r.results) results.push_back({{"relation", x.name}, {"i", x.i}, {"j", x.j}, {"pass", x.pass}});
  return {{"strands", r.strands}, {"all_pass", r.all_pass()}, {"results", results}};
}

namespace {

const char* status_name(TranslateStatus s) {
  switch (s) {
    case TranslateStatus::pass: return "pass";
    case TranslateStatus::fail: return "fail";
    case TranslateStatus::excluded: return "excluded";
  }
  return "unknown";
}

}  // namespace

json to_json(const G2Report& r) {
  json params = json::object();
  for (const auto& [k, v] : r.parameters) params[k] = to_json(v);
  json constituents = json::array();
  for (std::size_t i = 0; i < r.constituents.size(); ++i) {
    const auto& c = r.constituents[i];
    constituents.push_back({{"rank", c.rank},
                            {"multiplicity", c.multiplicity},
                            {"certificate", c.certificate},
                            {"endomorphism_dim", c.endomorphism_dim},
                            {"euler_char", i < r.constituent_chi.size() ? json(r.constituent_chi[i]) : json()}});
  }
  const auto& ts = r.thom_sebastiani;
  const auto& sn = r.summand_n;
  json self_dual = {{"pass", r.self_dual.self_dual}, {"intertwiner_dim", r.self_dual.intertwiner_dim}};
  if (r.self_dual.intertwiner) self_dual["intertwiner"] = to_json(*r.self_dual.intertwiner);
  return {
      {"case", r.case_label},
      {"parameters", params},
      {"seed", r.seed},
      {"euler_char", r.euler_char},
      {"rank", r.rank},
      {"rank_mod_14", r.rank_mod_14},
      {"generic_rank", r.generic_rank},
      {"w_dim", r.w_dim},
      {"self_dual", self_dual},
      {"translate_invariant",
       {{"status", status_name(r.translate.status)},
        {"candidates_checked", r.translate.candidates_checked},
        {"detail", r.translate.detail}}},
      {"cocycle_invariance", r.cocycle_invariance},
      {"product_relation", r.product_relation},
      {"constituents", constituents},
      {"summand_N",
       {{"pass", sn.pass},
        {"nontrivial_points", sn.nontrivial_points},
        {"all_unipotent_rank_one", sn.all_unipotent_rank_one},
        {"locals_conjugate", sn.locals_conjugate},
        {"simultaneous_orderings", sn.simultaneous_orderings},
        {"support_on_singular_set", sn.support_on_singular_set},
        {"certificate_level", "local-monodromy matching"}}},
      {"thom_sebastiani",
       {{"pass", ts.pass},
        {"ranks", ts.ranks},
        {"predicted", ts.predicted},
        {"observed", ts.observed},
        {"exact_matches", ts.exact_matches},
        {"origin_adjusted", ts.origin_adjusted},
        {"all_unipotent",
         std::all_of(ts.unipotent.begin(), ts.unipotent.end(), [](bool b) { return b; })}}},
      {"chi_bookkeeping",
       {{"chi_N2_plus_N3", r.chi_n2_plus_n3},
        {"tannakian_dim", r.euler_char * r.euler_char},
        {"delta0", 1}}},
      {"reasons", r.reasons},
      {"conclusion", r.conclusion},
  };
}

}  // namespace ecm::io
