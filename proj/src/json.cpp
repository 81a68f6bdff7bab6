#include "clawtree/json.hpp"

namespace clawtree {

using nlohmann::json;

json to_json(const Edge& e) { return json::array({e.u, e.v}); }

json to_json(std::span<const Edge> edges) {
  json out = json::array();
  for (const Edge& e : edges) out.push_back(to_json(e));
  return out;
}

json to_json(const RootedTree& t) {
  json parent = json::array();
  for (Vertex v = 0; v < t.vertex_count(); ++v) {
    if (auto p = t.parent(v))
      parent.push_back(*p);
    else
      parent.push_back(nullptr);
  }
  json out = {{"root", t.root()}, {"parent", parent}, {"edges", to_json(t.edges())}};
  if (t.vertex_count() >= 2) {
    const TreeClassification cls = classify(t);
    out["leaves"] = cls.leaves;
    out["branch"] = cls.branch;
  } else {
    out["leaves"] = json::array();
    out["branch"] = json::array();
  }
  return out;
}

json to_json(const Certificate& cert) {
  json parts = json::object();
  for (const auto& [name, edges] : cert.parts) parts[name] = to_json(edges);
  return {{"mode", std::string(to_string(cert.mode))},
          {"witness", cert.witness},
          {"root", cert.root},
          {"edges_no_oblique", to_json(cert.edges_no_oblique)},
          {"count", cert.count},
          {"degree_sum", cert.degree_sum},
          {"bound", cert.bound},
          {"tree_edges", to_json(cert.fixpoint_tree.edges())},
          {"parts", parts}};
}

json to_json(const SolveResult& result) {
  json moves = json::object();
  for (const auto& [tag, count] : result.stats.moves) moves[tag] = count;
  json out = {{"schema", kSchemaVersion},
              {"status", std::string(to_string(result.status))},
              {"stats", {{"iterations", result.stats.iterations}, {"moves", moves}}}};
  if (result.tree) out["tree"] = to_json(*result.tree);
  if (result.certificate) out["certificate"] = to_json(*result.certificate);
  if (result.status == SolveStatus::anomaly) out["anomaly"] = result.anomaly;
  return out;
}

json to_json(const SigmaValue& sigma) {
  if (sigma.value) return *sigma.value;
  return "infinity";
}

json to_json(const HypothesisReport& report) {
  json out = {{"schema", kSchemaVersion},
              {"connected", report.connected},
              {"claw_free", report.claw_free},
              {"m", report.m},
              {"n", report.n},
              {"m_constraint_ok", report.m_constraint_ok},
              {"sigma_k", report.m + 1},
              {"sigma_value", to_json(report.sigma_value)},
              {"threshold", report.threshold},
              {"satisfied", report.satisfied}};
  if (report.claw)
    out["claw"] = {{"center", report.claw->center},
                   {"leaves", json::array({report.claw->leaves[0], report.claw->leaves[1], report.claw->leaves[2]})}};
  return out;
}

json to_json(const OracleReport& report) {
  return {{"schema", kSchemaVersion},
          {"tree_count", report.tree_count},
          {"min_leaf_plus_branch", report.min_leaf_plus_branch},
          {"min_leaf_plus_branch_tree", to_json(report.min_leaf_plus_branch_tree)},
          {"min_branch", report.min_branch},
          {"min_branch_tree", to_json(report.min_branch_tree)}};
}

json to_json(const AuditRecord& record) {
  json out = {{"graph_id", record.graph_id},
              {"m", record.m},
              {"n", record.n},
              {"hypothesis", record.hypothesis},
              {"oracle_min", record.oracle_min},
              {"solver_status", record.solver_status},
              {"solver_value", nullptr}};
  if (record.solver_value) out["solver_value"] = *record.solver_value;
  if (!record.note.empty()) out["note"] = record.note;
  return out;
}

namespace {

Edge edge_from_json(const json& j, std::size_t nv) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number_unsigned() || !j[1].is_number_unsigned())
    throw JsonFormatError("edge must be a pair of vertex ids");
  const auto a = j[0].get<std::uint64_t>(), b = j[1].get<std::uint64_t>();
  if (a >= nv || b >= nv) throw JsonFormatError("edge endpoint out of range");
  return Edge(static_cast<Vertex>(a), static_cast<Vertex>(b));
}

std::vector<Edge> edges_from_json(const json& j, std::size_t nv) {
  if (!j.is_array()) throw JsonFormatError("expected an edge list");
  std::vector<Edge> out;
  for (const json& e : j) out.push_back(edge_from_json(e, nv));
  return out;
}

const json& field(const json& j, const char* name) {
  if (!j.contains(name)) throw JsonFormatError(std::string("certificate is missing \"") + name + "\"");
  return j.at(name);
}

}  // namespace

Certificate certificate_from_json(const json& j, std::size_t vertex_count) {
  if (!j.is_object()) throw JsonFormatError("certificate must be a JSON object");
  Certificate cert;
  try {
    const std::string mode = field(j, "mode").get<std::string>();
    if (mode == "case1")
      cert.mode = CertificateMode::case1;
    else if (mode == "case2")
      cert.mode = CertificateMode::case2;
    else
      throw JsonFormatError("unknown certificate mode '" + mode + "'");
    cert.witness = field(j, "witness").get<std::vector<Vertex>>();
    cert.root = field(j, "root").get<Vertex>();
    cert.edges_no_oblique = edges_from_json(field(j, "edges_no_oblique"), vertex_count);
    cert.count = field(j, "count").get<std::size_t>();
    cert.degree_sum = field(j, "degree_sum").get<std::uint64_t>();
    cert.bound = field(j, "bound").get<std::int64_t>();
    const auto tree_edges = edges_from_json(field(j, "tree_edges"), vertex_count);
    if (cert.root >= vertex_count) throw JsonFormatError("certificate root out of range");
    cert.fixpoint_tree = RootedTree::from_edges(vertex_count, tree_edges, cert.root);
    if (j.contains("parts"))
      for (const auto& [name, edges] : j.at("parts").items()) cert.parts[name] = edges_from_json(edges, vertex_count);
  } catch (const json::exception& err) {
    throw JsonFormatError(std::string("malformed certificate: ") + err.what());
  } catch (const TreeError& err) {
    throw JsonFormatError(std::string("certificate tree is invalid: ") + err.what());
  }
  return cert;
}

}  // namespace clawtree
