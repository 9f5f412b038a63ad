// ecm: convolution monodromy and G2 verification for seven-point sheaves.

#include "ecm/io.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>

namespace {

using ecm::io::json;

constexpr int kExitFailed = 1;  // a verification did not pass
constexpr int kExitError = 2;   // bad input or internal error

struct Input {
  std::string case_label;
  std::vector<std::string> params;
  std::string tuple_file;
};

struct Common {
  std::string out;
  std::uint64_t seed = 0;
  std::string primes = "101,103,107";
};

ecm::Params parse_params(const std::vector<std::string>& raw) {
  ecm::Params p;
  for (const auto& kv : raw) {
    auto eq = kv.find('=');
    if (eq == std::string::npos || eq == 0) throw std::invalid_argument("--param expects k=v, got '" + kv + "'");
    p[kv.substr(0, eq)] = ecm::parse_rat(kv.substr(eq + 1));
  }
  return p;
}

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty()) continue;
    std::size_t used = 0;
    unsigned long long p = std::stoull(item, &used);
    if (used != item.size() || !ecm::modp::is_prime(p)) throw std::invalid_argument("not a prime: '" + item + "'");
    out.push_back(p);
  }
  if (out.empty()) throw std::invalid_argument("--primes needs at least one prime");
  return out;
}

json read_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::invalid_argument("cannot open " + path);
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw std::invalid_argument(path + ": " + e.what());
  }
}

void emit(const json& j, const std::string& out) {
  if (out.empty()) {
    std::cout << j.dump(2) << '\n';
    return;
  }
  std::ofstream f(out);
  if (!f) throw std::runtime_error("cannot write " + out);
  f << j.dump(2) << '\n';
}

/// The seven-point sheaf named by --case, or the raw tuple from --tuple.
ecm::SevenPointSheaf load_sheaf(const Input& in) {
  if (!in.tuple_file.empty()) {
    if (!in.case_label.empty()) throw std::invalid_argument("--case and --tuple are mutually exclusive");
    ecm::SevenPointSheaf s;
    s.tuple = ecm::io::tuple_from_json(read_json(in.tuple_file));
    s.case_label = "custom";
    return s;
  }
  const std::string label = in.case_label.empty() ? "I" : in.case_label;
  return ecm::make_seven_point_sheaf(label, parse_params(in.params));
}

void add_input(CLI::App* cmd, Input& in) {
  cmd->add_option("--case", in.case_label, "Seven-point case")
      ->check(CLI::IsMember({"I", "II-i", "II-ii", "II-iii", "beauville"}));
  cmd->add_option("--param", in.params, "Parameter override k=v (rational)");
  cmd->add_option("--tuple", in.tuple_file, "Monodromy tuple JSON file");
}

void add_common(CLI::App* cmd, Common& c) {
  cmd->add_option("--out", c.out, "Write the report here instead of stdout");
  cmd->add_option("--seed", c.seed, "Seed for randomized steps");
  cmd->add_option("--primes", c.primes, "Certificate primes, comma separated");
}

ecm::DecomposeOptions decompose_options(const Common& c) {
  ecm::DecomposeOptions o;
  o.seed = c.seed;
  o.primes = parse_primes(c.primes);
  return o;
}

int cmd_relations(const Input& in, const Common& c, std::size_t strands, int mutate) {
  json report;
  bool ok = true;
  auto braid = ecm::check_braid_relations(strands);
  report["braid_relations"] = ecm::io::to_json(braid);
  ok = ok && braid.all_pass();

  if (strands == 14) {
    std::vector<ecm::BraidWord> deltas = ecm::delta_words();
    if (mutate != 0) {
      if (mutate < 1 || mutate > static_cast<int>(deltas.size()))
        throw std::invalid_argument("--mutate-delta must lie in 1..19");
      deltas[static_cast<std::size_t>(mutate - 1)].pop_back();
      report["mutated_delta"] = mutate;
    }
    const auto id = ecm::identity_deformation(16);
    ecm::GeneratorWord boundary;
    for (int i = 1; i <= 14; ++i) boundary.push_back({i, 1});
    json words = json::array();
    for (std::size_t k = 0; k < deltas.size(); ++k) {
      auto t = ecm::braid_action(deltas[k], id);
      ecm::GeneratorWord prod;
      for (int i = 0; i < 14; ++i) prod = ecm::concat(prod, t[static_cast<std::size_t>(i)]);
      const bool preserved = ecm::free_reduce(prod) == boundary;
      const bool inverse_ok = ecm::free_reduce(ecm::braid_action(ecm::invert(deltas[k]), t)) == id;
      words.push_back({{"delta", k + 1}, {"boundary_preserved", preserved}, {"inverse_restores", inverse_ok}});
      ok = ok && preserved && inverse_ok;
    }
    report["delta_words"] = words;

    // matrix level: invariance of H and E and the elliptic product relation
    const ecm::SevenPointSheaf n = load_sheaf(in);
    json matrix;
    try {
      ecm::ConvolutionOptions opts;
      opts.local_braids = deltas;
      auto cm = ecm::convolution_monodromy(n.tuple, n.tuple, opts);
      const bool rel = ecm::elliptic_product(cm.induced()).is_identity();
      matrix = {{"cocycle_invariance", true}, {"product_relation", rel}};
      ok = ok && rel;
    } catch (const std::logic_error& e) {
      matrix = {{"cocycle_invariance", false}, {"error", e.what()}};
      ok = false;
    }
    report["matrix_relations"] = matrix;
  }
  report["pass"] = ok;
  emit(report, c.out);
  return ok ? 0 : kExitFailed;
}

int cmd_convolve(const Input& in, const Common& c) {
  const auto n = load_sheaf(in);
  emit(ecm::io::convolution_bundle(ecm::convolution_monodromy(n.tuple, n.tuple)), c.out);
  return 0;
}

int cmd_decompose(const Input& in, const Common& c, const std::string& bundle_file) {
  std::vector<ecm::Mat> mats;
  if (!bundle_file.empty()) {
    mats = ecm::io::bundle_matrices(read_json(bundle_file));
    if (mats.empty()) throw std::invalid_argument("bundle holds no matrices");
  } else {
    const auto n = load_sheaf(in);
    mats = ecm::convolution_monodromy(n.tuple, n.tuple).induced();
  }
  const std::size_t dim = mats.front().rows();
  const auto cs = ecm::decompose(ecm::Representation::from(std::move(mats), dim), decompose_options(c));
  emit({{"seed", c.seed}, {"constituents", ecm::io::constituents_report(cs)}}, c.out);
  return 0;
}

int cmd_g2(const Input& in, const Common& c) {
  const auto n = load_sheaf(in);
  const auto rep = ecm::verify_g2(n, decompose_options(c));
  emit(ecm::io::to_json(rep), c.out);
  return rep.conclusion == "G2" ? 0 : kExitFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Convolution monodromy on punctured elliptic curves"};
  app.require_subcommand(1);

  Input in;
  Common common;
  std::size_t strands = 14;
  int mutate = 0;
  std::string bundle;

  auto* rel = app.add_subcommand("relations", "Braid relations and the matrix-level product relation");
  add_input(rel, in);
  add_common(rel, common);
  rel->add_option("--strands", strands, "Strand count for the braid relations")->check(CLI::Range(3, 64));
  rel->add_option("--mutate-delta", mutate, "Corrupt the given local braid word (testing)");

  auto* conv = app.add_subcommand("convolve", "Monodromy matrices of the self-convolution");
  add_input(conv, in);
  add_common(conv, common);

  auto* dec = app.add_subcommand("decompose", "Irreducible constituents of the self-convolution");
  add_input(dec, in);
  add_common(dec, common);
  dec->add_option("--bundle", bundle, "Matrix bundle written by 'convolve'");

  auto* g2 = app.add_subcommand("g2", "Check the G2 criterion");
  add_input(g2, in);
  add_common(g2, common);

  CLI11_PARSE(app, argc, argv);

  try {
    if (rel->parsed()) return cmd_relations(in, common, strands, mutate);
    if (conv->parsed()) return cmd_convolve(in, common);
    if (dec->parsed()) return cmd_decompose(in, common, bundle);
    if (g2->parsed()) return cmd_g2(in, common);
  } catch (const std::exception& e) {
    json err = {{"error", e.what()}};
    std::cerr << err.dump() << '\n';
    return kExitError;
  }
  return kExitError;
}
