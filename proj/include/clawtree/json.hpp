#pragma once

#include <json.hpp>

#include "clawtree/graph.hpp"
#include "clawtree/oracle.hpp"
#include "clawtree/solver.hpp"
#include "clawtree/tree.hpp"

namespace clawtree {

inline constexpr int kSchemaVersion = 1;

nlohmann::json to_json(const Edge& e);
nlohmann::json to_json(std::span<const Edge> edges);
/// {"root", "parent" (null at the root), "edges", "leaves", "branch"}
nlohmann::json to_json(const RootedTree& t);
/// The certificate object alone; also the certificate file format.
nlohmann::json to_json(const Certificate& cert);
/// {"schema": 1, "status", "tree", "certificate", "anomaly", "stats"}
nlohmann::json to_json(const SolveResult& result);
nlohmann::json to_json(const HypothesisReport& report);
nlohmann::json to_json(const SigmaValue& sigma);
nlohmann::json to_json(const OracleReport& report);
nlohmann::json to_json(const AuditRecord& record);

class JsonFormatError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Parses a certificate object against a graph on `vertex_count` vertices.
/// Throws JsonFormatError on missing fields or a tree that is not a tree.
Certificate certificate_from_json(const nlohmann::json& j, std::size_t vertex_count);

}  // namespace clawtree
