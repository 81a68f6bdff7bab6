#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "clawtree/graph.hpp"
#include "clawtree/instances.hpp"
#include "clawtree/json.hpp"
#include "clawtree/oracle.hpp"
#include "clawtree/solver.hpp"

using namespace clawtree;
using nlohmann::json;

namespace {

enum Exit : int {
  kOk = 0,
  kFindings = 1,
  kCertificate = 2,
  kHypothesis = 3,
  kInput = 4,
  kAnomaly = 5,
};

// Errors go to stderr as a single line: "error <kind>: <message>".
int fail(int code, std::string_view kind, const std::string& message) {
  std::string flat = message;
  for (char& c : flat)
    if (c == '\n' || c == '\r') c = ' ';
  std::cerr << "error " << kind << ": " << flat << '\n';
  return code;
}

std::string vertex_list(const std::vector<Vertex>& vs) {
  std::ostringstream out;
  out << '{';
  for (std::size_t i = 0; i < vs.size(); ++i) out << (i ? "," : "") << vs[i];
  out << '}';
  return out.str();
}

void print_tree_text(const RootedTree& t) {
  std::cout << "root: " << t.root() << '\n' << "edges: " << to_string(t.edges()) << '\n';
  if (t.vertex_count() >= 2) {
    const auto cls = classify(t);
    std::cout << "leaves: " << vertex_list(cls.leaves) << '\n'
              << "branch: " << vertex_list(cls.branch) << '\n'
              << "leaves+branch: " << cls.leaves.size() + cls.branch.size() << '\n';
  }
}

void print_certificate_text(const Certificate& c) {
  std::cout << "mode: " << to_string(c.mode) << '\n'
            << "witness: " << vertex_list(c.witness) << '\n'
            << "root: " << c.root << '\n'
            << "edges without oblique neighbours: " << to_string(c.edges_no_oblique) << '\n'
            << "count: " << c.count << '\n'
            << "degree sum: " << c.degree_sum << " <= bound " << c.bound << '\n';
}

int report_solve(const SolveResult& res, bool as_json, const std::string& cert_out) {
  if (res.certificate && !cert_out.empty()) {
    std::ofstream f(cert_out);
    if (!f) return fail(kInput, "io", "cannot write " + cert_out);
    f << to_json(*res.certificate).dump(2) << '\n';
  }
  if (as_json) {
    std::cout << to_json(res).dump(2) << '\n';
  } else {
    std::cout << "status: " << to_string(res.status) << '\n';
    if (res.tree) print_tree_text(*res.tree);
    if (res.certificate) print_certificate_text(*res.certificate);
    std::cout << "iterations: " << res.stats.iterations << '\n';
    for (const auto& [tag, count] : res.stats.moves) std::cout << "  " << tag << ": " << count << '\n';
  }
  switch (res.status) {
    case SolveStatus::tree: return kOk;
    case SolveStatus::certificate: return kCertificate;
    case SolveStatus::anomaly: return fail(kAnomaly, "anomaly", res.anomaly);
  }
  return kAnomaly;
}

int solve_error(const SolveError& err, bool as_json) {
  if (as_json) {
    json out = {{"schema", kSchemaVersion}, {"status", "error"}, {"error", std::string(to_string(err.kind()))}};
    if (err.report) out["hypothesis"] = to_json(*err.report);
    std::cout << out.dump(2) << '\n';
  }
  const int code = err.kind() == SolveErrorKind::hypothesis_unsatisfied ? kHypothesis : kInput;
  return fail(code, to_string(err.kind()), err.what());
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Spanning trees with few leaves and branch vertices in claw-free graphs"};
  app.require_subcommand(1);

  std::string graph_path, cert_path, cert_out, spec_text, out_path = ".";
  std::size_t m = 0, n = 0, k = 0, budget = 300, n_max = 6, jobs = 1;
  std::uint64_t seed = 1;
  bool force = false, as_json = false, fallback = false, no_forced = false;

  auto* solve_cmd = app.add_subcommand("solve", "search for a tree with at most n leaves plus branch vertices");
  solve_cmd->add_option("--graph", graph_path, "edge-list file")->required();
  solve_cmd->add_option("--m", m)->required();
  solve_cmd->add_option("--n", n)->required();
  solve_cmd->add_flag("--force", force, "run even when the degree-sum condition fails");
  solve_cmd->add_flag("--json", as_json);
  solve_cmd->add_flag("--exchange-fallback", fallback, "take a generic improving exchange instead of stopping");
  solve_cmd->add_option("--cert-out", cert_out, "write an emitted certificate to this file");

  auto* branch_cmd = app.add_subcommand("branch", "search for a tree with at most k branch vertices");
  branch_cmd->add_option("--graph", graph_path)->required();
  branch_cmd->add_option("--k", k)->required()->check(CLI::PositiveNumber);
  branch_cmd->add_flag("--force", force);
  branch_cmd->add_flag("--json", as_json);
  branch_cmd->add_flag("--exchange-fallback", fallback);
  branch_cmd->add_option("--cert-out", cert_out);

  auto* check_cmd = app.add_subcommand("check", "evaluate the hypothesis for (m, n)");
  check_cmd->add_option("--graph", graph_path)->required();
  check_cmd->add_option("--m", m)->required();
  check_cmd->add_option("--n", n)->required();
  check_cmd->add_flag("--json", as_json);

  auto* oracle_cmd = app.add_subcommand("oracle", "exhaustive minima over all spanning trees");
  oracle_cmd->add_option("--graph", graph_path)->required();
  oracle_cmd->add_flag("--json", as_json);

  auto* gen_cmd = app.add_subcommand("gen", "write a generated graph, named by spec hash");
  gen_cmd->add_option("--spec", spec_text, "named:<c5|k4|net|4net|...>, random:N:E, line-random:N:E, line-spider:L:LEN")
      ->required();
  gen_cmd->add_option("--seed", seed);
  gen_cmd->add_option("--out", out_path, "output directory, or a file path");

  auto* audit_cmd = app.add_subcommand("audit", "check the theorem over the deterministic corpus (JSON lines)");
  audit_cmd->add_option("--corpus-budget", budget, "number of random line graphs");
  audit_cmd->add_option("--n-max", n_max)->check(CLI::Range(2, 64));
  audit_cmd->add_option("--seed", seed);
  audit_cmd->add_option("--jobs", jobs)->check(CLI::PositiveNumber);
  audit_cmd->add_flag("--no-forced", no_forced, "skip forced runs where the hypothesis fails");

  auto* verify_cmd = app.add_subcommand("verify-cert", "re-check a certificate file against a graph");
  verify_cmd->add_option("--graph", graph_path)->required();
  verify_cmd->add_option("--cert", cert_path)->required();
  verify_cmd->add_option("--m", m)->required();
  verify_cmd->add_option("--n", n)->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    return fail(kInput, "usage", e.what());
  }

  try {
    if (gen_cmd->parsed()) {
      const GeneratorSpec spec = parse_spec(spec_text, seed);
      const Graph g = generate(spec);
      std::filesystem::path target(out_path);
      if (std::filesystem::is_directory(target)) target /= spec.hash() + ".el";
      std::ofstream f(target);
      if (!f) return fail(kInput, "io", "cannot write " + target.string());
      f << "# " << spec.to_string() << " seed " << spec.seed << '\n' << write_graph(g);
      std::cout << target.string() << '\n';
      return kOk;
    }

    if (audit_cmd->parsed()) {
      const auto corpus = claw_free_corpus(budget, seed);
      AuditOptions opts;
      opts.n_max = n_max;
      opts.forced = !no_forced;
      opts.jobs = jobs;
      const AuditReport report = theorem_audit(corpus, opts);
      for (const AuditRecord& r : report.records) std::cout << to_json(r).dump() << '\n';
      std::cerr << "graphs " << corpus.size() << ", records " << report.records.size() << ", certificates "
                << report.certificates << ", skipped " << report.skipped << ", counterexamples "
                << report.counterexamples.size() << ", bad certificates " << report.bad_certificates.size()
                << '\n';
      for (const AuditRecord& r : report.counterexamples)
        fail(kFindings, "counterexample", to_json(r).dump());
      for (const AuditRecord& r : report.bad_certificates)
        fail(kFindings, "bad_certificate", to_json(r).dump());
      return report.counterexamples.empty() && report.bad_certificates.empty() ? kOk : kFindings;
    }

    const Graph g = read_graph_file(graph_path);

    if (check_cmd->parsed()) {
      const HypothesisReport rep = check_hypothesis(g, m, n);
      if (as_json) {
        std::cout << to_json(rep).dump(2) << '\n';
      } else {
        std::cout << "connected: " << rep.connected << '\n'
                  << "claw-free: " << rep.claw_free << '\n'
                  << "m <= ceil(2n/3): " << rep.m_constraint_ok << '\n'
                  << "sigma_" << m + 1 << ": " << to_string(rep.sigma_value) << '\n'
                  << "threshold: " << rep.threshold << '\n'
                  << "satisfied: " << rep.satisfied << '\n';
      }
      return rep.satisfied ? kOk : kHypothesis;
    }

    if (oracle_cmd->parsed()) {
      const OracleReport rep = oracle_report(g);
      if (as_json) {
        std::cout << to_json(rep).dump(2) << '\n';
      } else {
        std::cout << "spanning trees: " << rep.tree_count << '\n'
                  << "min leaves+branch: " << rep.min_leaf_plus_branch << " via "
                  << to_string(rep.min_leaf_plus_branch_tree.edges()) << '\n'
                  << "min branch: " << rep.min_branch << " via " << to_string(rep.min_branch_tree.edges()) << '\n';
      }
      return kOk;
    }

    if (verify_cmd->parsed()) {
      std::ifstream f(cert_path);
      if (!f) return fail(kInput, "io", "cannot read " + cert_path);
      json doc;
      try {
        doc = json::parse(f);
      } catch (const json::exception& e) {
        return fail(kInput, "json", e.what());
      }
      const Certificate cert = certificate_from_json(doc, g.vertex_count());
      const CertificateCheck check = verify_certificate(g, cert, m, n);
      if (check != CertificateCheck::ok) return fail(kFindings, "certificate_rejected", std::string(to_string(check)));
      std::cout << "ok: sigma_" << m + 1 << " <= " << cert.bound << '\n';
      return kOk;
    }

    SolverConfig cfg;
    cfg.force = force;
    cfg.exchange_fallback = fallback;
    try {
      const SolveResult res = solve_cmd->parsed() ? solve(g, m, n, cfg) : solve_branch_mode(g, k, cfg);
      return report_solve(res, as_json, cert_out);
    } catch (const SolveError& e) {
      return solve_error(e, as_json);
    }
  } catch (const ParseError& e) {
    return fail(kInput, "parse", std::string(to_string(e.kind())) + " at line " + std::to_string(e.line()));
  } catch (const JsonFormatError& e) {
    return fail(kInput, "certificate_format", e.what());
  } catch (const OracleLimit& e) {
    return fail(kInput, "limit", e.what());
  } catch (const std::exception& e) {
    return fail(kInput, "input", e.what());
  }
}
