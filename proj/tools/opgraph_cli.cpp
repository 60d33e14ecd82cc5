// Command-line front end: analyze, generate, witness, bound, enumerate,
// verify and qn. Machine output is JSON (schema 1) or CSV; fractions are
// always exact "p/q" strings.

#include <cstdlib>
#include <fstream>
#include <iostream>

#include <CLI11.hpp>

#include "opgraph/bounds.hpp"
#include "opgraph/enumerate.hpp"
#include "opgraph/errors.hpp"
#include "opgraph/generators.hpp"
#include "opgraph/io.hpp"
#include "opgraph/witness.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInputError = 1;
constexpr int kExitNotOuterplanar = 2;

int default_workers() {
  if (const char* env = std::getenv("OPGRAPH_WORKERS")) {
    int w = std::atoi(env);
    if (w >= 1) return w;
  }
  return 1;
}

void print_json(const opg::Json& j) { std::cout << j.dump(2) << '\n'; }

struct AnalyzeArgs {
  std::string path;
  std::string embedding_path;
  std::string format = "json";
};

int run_analyze(const AnalyzeArgs& a) {
  opg::Graph g = opg::read_edge_list(a.path);
  opg::Analysis result = opg::analyze_graph(g, a.path);
  if (!a.embedding_path.empty()) {
    std::ifstream in(a.embedding_path);
    if (!in) throw opg::ParseError(0, "cannot open " + a.embedding_path);
    opg::EmbeddingCheck check = opg::verify_embedding(g, opg::parse_embedding(in));
    result.document["supplied_embedding"] = {{"accepted", check.accepted()}, {"reason", check.reason}};
  }
  if (a.format == "csv") {
    std::cout << "vertex,transmission,eccentricity\n";
    if (result.metrics_available) {
      const auto& m = result.document["metrics"];
      for (std::size_t v = 0; v < m["transmission"].size(); ++v) {
        std::cout << v << ',' << m["transmission"][v].get<long long>() << ',' << m["eccentricity"][v].get<int>()
                  << '\n';
      }
    }
  } else {
    print_json(result.document);
  }
  return result.status == opg::RecognitionStatus::kOuterplanar ? kExitOk : kExitNotOuterplanar;
}

struct GenerateArgs {
  std::string family;
  int n = 0;
  std::optional<int> q;
  std::string emit = "edges";
  bool nearest = false;
};

int run_generate(const GenerateArgs& a) {
  auto family = opg::parse_family(a.family);
  if (!family) throw opg::DomainError("unknown family '" + a.family + "'");
  int n = a.n;
  if (*family == opg::Family::kHnq && a.nearest && a.q) {
    auto m = opg::nearest_hnq_order(n, *a.q);
    if (!m) throw opg::DomainError("no valid hnq order at or below n=" + std::to_string(n));
    if (*m != n) std::cerr << "note: using n=" << *m << " (nearest valid order below " << n << ")\n";
    n = *m;
  }
  opg::GeneratedGraph gg = opg::generate(*family, n, a.q);
  if (a.emit == "json") {
    print_json(opg::generated_json(gg));
  } else if (a.emit == "embedding") {
    if (!gg.embedding) throw opg::DomainError(a.family + " graphs carry no outerplane embedding");
    opg::write_embedding(std::cout, *gg.embedding);
  } else {
    opg::write_edge_list(std::cout, gg.graph);
  }
  return kExitOk;
}

int run_witness(const std::string& kind, const std::string& path) {
  opg::Graph g = opg::read_edge_list(path);
  opg::WitnessCertificate cert = kind == "radius" ? opg::radius_witness(g) : opg::proximity_witness(g);
  print_json(opg::certificate_json(cert));
  return kExitOk;
}

int run_bound(const std::string& which, int n, std::optional<int> q, std::optional<int> diam) {
  if (which == "chordal") {
    if (!diam) throw opg::DomainError("chordal needs --diam");
    opg::RadiusInterval iv = opg::chordal_radius_interval(*diam);
    std::cout << iv.lo << ' ' << iv.hi << '\n';
    return kExitOk;
  }
  auto kind = opg::parse_bound_kind(which);
  if (!kind) throw opg::DomainError("unknown bound '" + which + "'");
  opg::BoundValue b = opg::evaluate_bound(*kind, n, q);
  std::cout << b.value.str() << ' ' << b.value.decimal(6) << '\n';
  return kExitOk;
}

struct EnumerateArgs {
  int n = 0;
  std::optional<int> max_face;
  bool mops = false;
  bool canonical = false;
  std::string out = "counts";
  int workers = 1;
};

int run_enumerate(const EnumerateArgs& a) {
  opg::EnumerateOptions opts;
  opts.max_face = a.max_face;
  opts.triangulations_only = a.mops;
  if (a.out == "graphs") {
    opts.up_to_symmetry = a.canonical;
    opg::for_each_dissection(a.n, opts, [](const opg::Dissection& d) {
      std::cout << d.max_face << '\t' << opg::format_chords(d.chords) << '\n';
    });
    return kExitOk;
  }
  const std::uint64_t labeled = opg::count_dissections(a.n, opts, a.workers);
  opts.up_to_symmetry = true;
  const std::uint64_t classes = opg::count_dissections(a.n, opts, a.workers);
  opg::Json j{{"schema", opg::kJsonSchemaVersion}, {"n", a.n}, {"mops", a.mops}, {"labeled", labeled},
              {"up_to_symmetry", classes}};
  j["max_face"] = a.max_face ? opg::Json(*a.max_face) : opg::Json(nullptr);
  print_json(j);
  return kExitOk;
}

struct VerifyArgs {
  int n = 0;
  int radius_cap = 14;
  std::optional<int> max_face;
  bool mops = false;
  bool labeled = false;
  int workers = 1;
  std::string format = "json";
  std::string csv_path;
};

int run_verify(const VerifyArgs& a) {
  opg::VerifyOptions opts;
  opts.enumeration.max_face = a.max_face;
  opts.enumeration.triangulations_only = a.mops;
  opts.enumeration.up_to_symmetry = !a.labeled;
  opts.radius_cap = a.radius_cap;
  opts.workers = a.workers;
  opg::VerificationSummary s = opg::verify_bounds_over(a.n, opts);
  if (!a.csv_path.empty()) {
    std::ofstream csv(a.csv_path);
    if (!csv) throw opg::ParseError(0, "cannot write " + a.csv_path);
    opg::write_extremal_csv(csv, s);
  }
  if (a.format == "csv") {
    opg::write_extremal_csv(std::cout, s);
  } else {
    print_json(opg::summary_json(s));
  }
  return s.all_clean() ? kExitOk : kExitNotOuterplanar;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Distance invariants and bound verification for 2-connected outerplanar graphs"};
  app.require_subcommand(1);
  const int workers_default = default_workers();

  AnalyzeArgs analyze;
  auto* cmd_analyze = app.add_subcommand("analyze", "Metrics, embedding and bound checks for an edge-list file");
  cmd_analyze->add_option("path", analyze.path, "Edge-list file")->required();
  cmd_analyze->add_option("--embedding", analyze.embedding_path, "Embedding file to check against the graph");
  cmd_analyze->add_option("--format", analyze.format)->check(CLI::IsMember({"json", "csv"}));

  GenerateArgs generate;
  auto* cmd_generate = app.add_subcommand("generate", "Emit a named graph family");
  cmd_generate->add_option("--family", generate.family)
      ->required()
      ->check(CLI::IsMember({"path", "cycle", "hnq", "hn3", "fan", "ladder"}));
  cmd_generate->add_option("--n", generate.n)->required();
  cmd_generate->add_option("--q", generate.q);
  cmd_generate->add_option("--emit", generate.emit)->check(CLI::IsMember({"edges", "embedding", "json"}));
  cmd_generate->add_flag("--nearest", generate.nearest, "Round n down to the nearest valid hnq order");

  std::string witness_kind = "proximity", witness_path;
  auto* cmd_witness = app.add_subcommand("witness", "Construct and certify a witness vertex");
  cmd_witness->add_option("--kind", witness_kind)->check(CLI::IsMember({"proximity", "radius"}));
  cmd_witness->add_option("path", witness_path, "Edge-list file")->required();

  std::string bound_which;
  int bound_n = 0;
  std::optional<int> bound_q, bound_diam;
  auto* cmd_bound = app.add_subcommand("bound", "Evaluate a closed-form bound exactly");
  cmd_bound->add_option("--which", bound_which)
      ->required()
      ->check(CLI::IsMember({"prox2c", "proxmop", "rho", "rad", "chordal"}));
  cmd_bound->add_option("--n", bound_n);
  cmd_bound->add_option("--q", bound_q);
  cmd_bound->add_option("--diam", bound_diam, "Diameter, for --which chordal");

  EnumerateArgs enumerate;
  enumerate.workers = workers_default;
  auto* cmd_enumerate = app.add_subcommand("enumerate", "Enumerate polygon dissections");
  cmd_enumerate->add_option("--n", enumerate.n)->required();
  cmd_enumerate->add_option("--max-face", enumerate.max_face);
  cmd_enumerate->add_flag("--mops", enumerate.mops, "Triangulations only");
  cmd_enumerate->add_flag("--canonical", enumerate.canonical, "One representative per dihedral class");
  cmd_enumerate->add_option("--out", enumerate.out)->check(CLI::IsMember({"counts", "graphs"}));
  cmd_enumerate->add_option("--workers", enumerate.workers)->check(CLI::PositiveNumber);

  VerifyArgs verify;
  verify.workers = workers_default;
  auto* cmd_verify = app.add_subcommand("verify", "Check every bound over all dissections of the n-gon");
  cmd_verify->add_option("--n", verify.n)->required();
  cmd_verify->add_option("--radius-cap", verify.radius_cap);
  cmd_verify->add_option("--max-face", verify.max_face);
  cmd_verify->add_flag("--mops", verify.mops, "Triangulations only");
  cmd_verify->add_flag("--labeled", verify.labeled, "Check every labeled dissection, not one per class");
  cmd_verify->add_option("--workers", verify.workers)->check(CLI::PositiveNumber);
  cmd_verify->add_option("--format", verify.format)->check(CLI::IsMember({"json", "csv"}));
  cmd_verify->add_option("--csv", verify.csv_path, "Also write extremal records as CSV to this file");

  int qn_n = 0, qn_workers = workers_default;
  auto* cmd_qn = app.add_subcommand("qn", "Exact q_n by exhaustive scan");
  cmd_qn->add_option("--n", qn_n)->required();
  cmd_qn->add_option("--workers", qn_workers)->check(CLI::PositiveNumber);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*cmd_analyze) return run_analyze(analyze);
    if (*cmd_generate) return run_generate(generate);
    if (*cmd_witness) return run_witness(witness_kind, witness_path);
    if (*cmd_bound) return run_bound(bound_which, bound_n, bound_q, bound_diam);
    if (*cmd_enumerate) return run_enumerate(enumerate);
    if (*cmd_verify) return run_verify(verify);
    if (*cmd_qn) {
      print_json(opg::qn_json(opg::estimate_qn(qn_n, qn_workers)));
      return kExitOk;
    }
  } catch (const opg::ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const opg::InvalidGraph& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitInputError;
  } catch (const opg::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitNotOuterplanar;
  }
  return kExitOk;
}
