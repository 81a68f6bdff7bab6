#include "clawtree/solver.hpp"

#include <algorithm>
#include <initializer_list>
#include <set>

#include "clawtree/oblique.hpp"

namespace clawtree {

std::string_view to_string(ClaimTag tag) {
  switch (tag) {
    case ClaimTag::claim2: return "claim2";
    case ClaimTag::claim3: return "claim3";
    case ClaimTag::claim4: return "claim4";
    case ClaimTag::claim5: return "claim5";
    case ClaimTag::claim6: return "claim6";
    case ClaimTag::claim7: return "claim7";
    case ClaimTag::claim8: return "claim8";
    case ClaimTag::claim9: return "claim9";
    case ClaimTag::claim10: return "claim10";
    case ClaimTag::ab_disjoint: return "ab-disjoint";
    case ClaimTag::cde_disjoint: return "cde-disjoint";
  }
  return "unknown";
}

std::string_view to_string(CertificateMode mode) {
  return mode == CertificateMode::case1 ? "case1" : "case2";
}

std::string_view to_string(CertificateCheck check) {
  switch (check) {
    case CertificateCheck::ok: return "ok";
    case CertificateCheck::tree_invalid: return "tree-invalid";
    case CertificateCheck::wrong_size: return "wrong-size";
    case CertificateCheck::vertex_out_of_range: return "vertex-out-of-range";
    case CertificateCheck::duplicate_vertex: return "duplicate-vertex";
    case CertificateCheck::not_independent: return "not-independent";
    case CertificateCheck::not_pseudoindependent: return "not-pseudoindependent";
    case CertificateCheck::witness_role: return "witness-role";
    case CertificateCheck::edge_not_in_tree: return "edge-not-in-tree";
    case CertificateCheck::edge_has_oblique_neighbor: return "edge-has-oblique-neighbor";
    case CertificateCheck::count_mismatch: return "count-mismatch";
    case CertificateCheck::count_too_small: return "count-too-small";
    case CertificateCheck::degree_sum_mismatch: return "degree-sum-mismatch";
    case CertificateCheck::bound_mismatch: return "bound-mismatch";
    case CertificateCheck::bound_exceeded: return "bound-exceeded";
  }
  return "unknown";
}

std::string_view to_string(SolveStatus status) {
  switch (status) {
    case SolveStatus::tree: return "tree";
    case SolveStatus::certificate: return "certificate";
    case SolveStatus::anomaly: return "anomaly";
  }
  return "unknown";
}

std::string_view to_string(SolveErrorKind kind) {
  switch (kind) {
    case SolveErrorKind::disconnected: return "disconnected";
    case SolveErrorKind::not_claw_free: return "not-claw-free";
    case SolveErrorKind::parameter_range: return "parameter-range";
    case SolveErrorKind::hypothesis_unsatisfied: return "hypothesis-unsatisfied";
  }
  return "unknown";
}

namespace {

std::string describe(std::span<const Vertex> vs) {
  std::string s = "{";
  for (std::size_t i = 0; i < vs.size(); ++i) s += (i ? "," : "") + std::to_string(vs[i]);
  return s + "}";
}

bool contains(std::span<const Vertex> sorted, Vertex v) {
  return std::binary_search(sorted.begin(), sorted.end(), v);
}

/// Scan state for one tree. Vertex names follow the case analysis: r is the
/// root, e_r / e_x the upper / lower endpoints of an edge, x the first
/// non-degree-2 vertex below e_x, and so on.
class Scanner {
 public:
  Scanner(const Graph& g, const RootedTree& t, std::size_t m, bool exchange_fallback = false)
      : g_(g), t_(t), m_(m), fallback_(exchange_fallback), cls_(classify(t)), key_(potential(t)), r_(t.root()) {
    is_leaf_.assign(t.vertex_count(), 0);
    for (Vertex l : cls_.leaves) is_leaf_[l] = 1;
    for (Vertex l : cls_.leaves) h_.push_back(l);
    for (Vertex b : cls_.of_degree(3))
      if (b != r_) h_.push_back(b);
    std::sort(h_.begin(), h_.end());
    m_set_.assign(h_.begin(), h_.begin() + static_cast<std::ptrdiff_t>(std::min(h_.size(), m + 1)));
  }

  bool case1() const { return cls_.of_degree(3).empty(); }

  std::optional<Violation> scan() { return case1() ? scan_case1() : scan_case2(); }

  Certificate certificate(std::size_t n) const;

 private:
  using Role = std::pair<Vertex, Vertex>;

  struct Candidate {
    std::vector<Edge> remove;
    std::vector<Edge> add;
    std::string rule;
  };

  // --- helpers -------------------------------------------------------------

  bool adj(Vertex a, Vertex b) const { return a != b && g_.adjacent(a, b); }
  Vertex up(Vertex v) const { return t_.parent(v).value_or(v); }
  /// Neighbour of a towards b; a itself when a == b, which later yields a
  /// rejected self-loop rather than an exception.
  Vertex step(Vertex a, Vertex b) const { return a == b ? a : toward(t_, a, b); }
  Vertex far(const Edge& e, Vertex v) const { return far_endpoint(t_, e, v); }
  bool oblique(Vertex v, const Edge& e) const { return is_oblique_neighbor(g_, t_, v, e); }
  std::size_t deg(Vertex v) const { return t_.degree(v); }
  /// Lower (child) endpoint of a tree edge.
  Vertex lower(const Edge& e) const { return t_.parent(e.v) == e.u ? e.v : e.u; }

  /// First tree neighbour of v outside `exclude`.
  std::optional<Vertex> other_neighbor(Vertex v, std::initializer_list<Vertex> exclude) const {
    for (Vertex w : t_.neighbors(v))
      if (std::find(exclude.begin(), exclude.end(), w) == exclude.end()) return w;
    return std::nullopt;
  }

  /// `set` in order with x and its partner y moved to the end: for the edge
  /// bx both are oblique neighbours by construction, so the others go first.
  static std::vector<Vertex> pair_last(std::span<const Vertex> set, Vertex x, Vertex y) {
    std::vector<Vertex> out;
    for (Vertex z : set)
      if (z != x && z != y) out.push_back(z);
    for (Vertex z : {y, x})
      if (contains(set, z)) out.push_back(z);
    return out;
  }

  /// Walk from a leaf to the nearest branch vertex; returns (branch, its neighbour towards the leaf).
  std::pair<Vertex, Vertex> nearest_branch(Vertex leaf) const {
    Vertex prev = leaf, cur = t_.neighbors(leaf)[0];
    while (deg(cur) == 2) {
      Vertex next = t_.neighbors(cur)[0] == prev ? t_.neighbors(cur)[1] : t_.neighbors(cur)[0];
      prev = cur;
      cur = next;
    }
    return {cur, prev};
  }

  /// First candidate that is a valid swap and lowers the potential. Throws
  /// SolverAnomaly when there is none: the guard fired without a repair.
  Violation repair(ClaimTag tag, std::vector<Vertex> context, std::optional<Edge> edge,
                   const std::vector<Candidate>& candidates) const {
    std::string tried;
    for (const Candidate& c : candidates) {
      Move mv = Move{c.remove, c.add, std::string(to_string(tag)), c.rule}.normalized();
      try {
        RootedTree next = apply_move(g_, t_, mv);
        if (potential(next) < key_) return Violation{tag, std::move(mv), false, std::move(context), edge, std::move(next)};
        tried += " [" + c.rule + ": no decrease]";
      } catch (const MoveError& err) {
        tried += " [" + c.rule + ": " + err.what() + "]";
      }
    }
    if (fallback_)
      if (auto v = improving_exchange(tag, context, edge)) return std::move(*v);
    throw SolverAnomaly(std::string(to_string(tag)) + " guard fired at " + describe(context) +
                        (edge ? " edge " + to_string(*edge) : std::string()) + " root " +
                        std::to_string(r_) + " key " + to_string(key_) + " but no repair applies:" +
                        (tried.empty() ? std::string(" no candidate") : tried));
  }

  /// First single edge exchange, tree edges then graph edges in canonical order, that lowers the potential.
  std::optional<Violation> improving_exchange(ClaimTag tag, const std::vector<Vertex>& context,
                                              std::optional<Edge> edge) const {
    const auto graph_edges = g_.edges();
    for (const Edge& out : t_.edges())
      for (const Edge& in : graph_edges) {
        if (t_.has_edge(in)) continue;
        Move mv{{out}, {in}, std::string(to_string(tag)), "exchange-fallback"};
        try {
          RootedTree next = apply_move(g_, t_, mv);
          if (potential(next) < key_) return Violation{tag, std::move(mv), true, context, edge, std::move(next)};
        } catch (const MoveError&) {
        }
      }
    return std::nullopt;
  }

  static Candidate swap(std::initializer_list<Edge> remove, std::initializer_list<Edge> add, std::string rule) {
    return Candidate{remove, add, std::move(rule)};
  }

  // --- leaf-set regime (no degree-3 branch vertex) ---------------------------

  std::optional<Violation> scan_case1() const;
  std::vector<Candidate> claim4_candidates(Vertex u, Vertex v, const Edge& e) const;

  // --- degree-3 regime --------------------------------------------------------

  std::optional<Violation> scan_case2() const;
  std::vector<Candidate> claim7_candidates(Vertex u, Vertex v) const;
  std::vector<Candidate> claim8_candidates(Vertex u, Vertex v, const Edge& e) const;
  std::vector<Candidate> claim8_prescribed(Vertex u, Vertex v, const Edge& e) const;
  std::vector<Candidate> claim10_candidates(Vertex b, Vertex b1, Vertex b2, Vertex z, Vertex s) const;
  void degree4_q_alternatives(std::vector<Candidate>& out, Vertex U, Vertex V, Vertex q, Vertex ex,
                              std::optional<Vertex> exx, bool u_is_branch3, bool u_is_leaf) const;

  /// Chosen adjacent-children pair per branch vertex (case1 B set).
  std::vector<std::pair<Edge, Vertex>> case1_pair_edges() const;
  /// C and D edges (case2), each with a partner child adjacent to its lower endpoint.
  std::vector<std::pair<Edge, Vertex>> case2_cd_edges(std::vector<Edge>& c, std::vector<Edge>& d) const;

  const Graph& g_;
  const RootedTree& t_;
  std::size_t m_;
  bool fallback_;
  TreeClassification cls_;
  PotentialKey key_;
  Vertex r_;
  std::vector<std::uint8_t> is_leaf_;
  std::vector<Vertex> h_;
  std::vector<Vertex> m_set_;
};

// ---------------------------------------------------------------------------
// Leaf-set regime

std::vector<Scanner::Candidate> Scanner::claim4_candidates(Vertex u, Vertex v, const Edge& e) const {
  std::vector<Candidate> out;
  const Vertex gu = far(e, u), gv = far(e, v);
  if (gu == gv) {
    // Both leaves see the same far endpoint a; the claw at a forces u or v onto c.
    const Vertex a = gu, c = e.other(a);
    const Vertex mid = median(t_, u, a, v);
    if (adj(u, c)) out.push_back(swap({e, Edge(mid, step(mid, u))}, {Edge(u, c), Edge(v, a)}, "claim4/same-far/u"));
    if (adj(v, c)) out.push_back(swap({e, Edge(mid, step(mid, v))}, {Edge(v, c), Edge(u, a)}, "claim4/same-far/v"));
  } else {
    // e lies on the u-v path; cut at the median s on u's or v's side.
    const Vertex s = median(t_, u, r_, v);
    const Vertex eu = gv, ev = gu;
    if (t_.on_path(s, eu, u))
      out.push_back(swap({e, Edge(s, step(s, u))}, {Edge(u, ev), Edge(v, eu)}, "claim4/on-path/u-side"));
    if (t_.on_path(s, ev, v))
      out.push_back(swap({e, Edge(s, step(s, v))}, {Edge(u, ev), Edge(v, eu)}, "claim4/on-path/v-side"));
  }
  return out;
}

std::vector<std::pair<Edge, Vertex>> Scanner::case1_pair_edges() const {
  std::vector<std::pair<Edge, Vertex>> out;
  for (Vertex b : cls_.branch) {
    auto kids = t_.children(b);
    bool found = false;
    for (std::size_t i = 0; i < kids.size() && !found; ++i)
      for (std::size_t j = i + 1; j < kids.size() && !found; ++j)
        if (adj(kids[i], kids[j])) {
          out.push_back({Edge(b, kids[i]), kids[j]});
          out.push_back({Edge(b, kids[j]), kids[i]});
          found = true;
        }
  }
  return out;
}

std::optional<Violation> Scanner::scan_case1() const {
  const auto& leaves = cls_.leaves;

  // claim2: edges to adjacent children have no oblique neighbour among the leaves.
  for (Vertex b : cls_.branch) {
    auto kids = t_.children(b);
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        if (!adj(kids[i], kids[j])) continue;
        for (auto [x, y] : {Role{kids[i], kids[j]}, Role{kids[j], kids[i]}}) {
          const Edge bx(b, x);
          for (Vertex z : pair_last(leaves, x, y)) {
            if (!oblique(z, bx)) continue;
            std::vector<Candidate> c;
            if (t_.is_ancestor(x, z))
              c.push_back(swap({bx, Edge(b, y)}, {Edge(b, z), Edge(x, y)}, "claim2/below"));
            else
              c.push_back(swap({bx}, {Edge(z, x)}, "claim2/elsewhere"));
            return repair(ClaimTag::claim2, {b, x, y, z}, bx, c);
          }
        }
      }
  }

  // claim3: leaves are independent.
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const Vertex u = leaves[i], v = leaves[j];
      if (!adj(u, v)) continue;
      std::vector<Candidate> c;
      for (auto [a, other] : {Role{u, v}, Role{v, u}}) {
        auto [b, towards] = nearest_branch(a);
        c.push_back(swap({Edge(b, towards)}, {Edge(a, other)}, "claim3/cut-at-branch"));
      }
      return repair(ClaimTag::claim3, {u, v}, std::nullopt, c);
    }

  // claim4: leaves are pseudoindependent.
  for (std::size_t i = 0; i < leaves.size(); ++i)
    for (std::size_t j = i + 1; j < leaves.size(); ++j) {
      const Vertex u = leaves[i], v = leaves[j];
      for (const Edge& e : t_.edges())
        if (oblique(u, e) && oblique(v, e))
          return repair(ClaimTag::claim4, {u, v}, e, claim4_candidates(u, v, e));
    }

  // A and B are disjoint: no leaf outside Q hangs off a chosen adjacent-children pair.
  const std::vector<Vertex> q(leaves.begin(),
                              leaves.begin() + static_cast<std::ptrdiff_t>(std::min(leaves.size(), m_ + 1)));
  for (const auto& [edge, partner] : case1_pair_edges()) {
    const Vertex child = lower(edge);
    if (!is_leaf_[child] || contains(q, child)) continue;
    const Vertex parent = edge.other(child);
    return repair(ClaimTag::ab_disjoint, {parent, child, partner}, edge,
                  {swap({Edge(parent, partner)}, {Edge(partner, child)}, "ab-disjoint/rehang")});
  }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// Degree-3 regime

std::vector<Scanner::Candidate> Scanner::claim7_candidates(Vertex u, Vertex v) const {
  std::vector<Candidate> out;
  const Vertex w = median(t_, r_, u, v);
  auto ancestor = [&](Vertex a, Vertex b) {
    // a is a degree-3 vertex on the root path of b; its other child joins a_b.
    const Vertex ab = step(a, b);
    if (auto star = other_neighbor(a, {up(a), ab}))
      out.push_back(swap({Edge(a, *star), Edge(a, ab)}, {Edge(*star, ab), Edge(a, b)}, "claim7/ancestor"));
  };
  if (w == u) {
    ancestor(u, v);
  } else if (w == v) {
    ancestor(v, u);
  } else {
    out.push_back(swap({Edge(w, step(w, u))}, {Edge(u, v)}, "claim7/split/u"));
    out.push_back(swap({Edge(w, step(w, v))}, {Edge(u, v)}, "claim7/split/v"));
  }
  return out;
}

void Scanner::degree4_q_alternatives(std::vector<Candidate>& out, Vertex U, Vertex V, Vertex q, Vertex ex,
                                     std::optional<Vertex> exx, bool u_is_branch3, bool u_is_leaf) const {
  // q has neighbours q_r (parent), q_x, q_v and one more, q*; q_v is adjacent to one of them.
  const Vertex qv = step(q, V), qr = up(q);
  // x lies below ex, so the path from q to x passes through ex.
  const Vertex qx = step(q, ex);
  const auto qstar = other_neighbor(q, {qv, qr, qx});
  std::vector<Edge> cut;
  if (exx) cut.push_back(Edge(ex, *exx));
  auto with_cut = [&](std::vector<Edge> remove, std::vector<Edge> add, std::string rule) {
    remove.insert(remove.end(), cut.begin(), cut.end());
    out.push_back(Candidate{std::move(remove), std::move(add), std::move(rule)});
  };
  std::vector<Edge> tail_v = {Edge(V, ex)};
  if (exx) tail_v.push_back(Edge(U, *exx));
  if (adj(qv, qr)) {
    auto add = tail_v;
    add.push_back(Edge(qv, qr));
    with_cut({Edge(q, qv), Edge(q, qr)}, add, "q4/qv-qr");
  }
  if (adj(qv, qx) && (!exx || u_is_branch3)) {
    std::vector<Edge> add = {Edge(qv, qx), Edge(U, ex)};
    if (exx) add.push_back(Edge(U, *exx));
    with_cut({Edge(q, qv), Edge(q, qx)}, add, "q4/qv-qx");
  }
  if (qstar && adj(qv, *qstar)) {
    auto add = tail_v;
    add.push_back(Edge(qv, *qstar));
    with_cut({Edge(q, qv), Edge(q, *qstar)}, add, "q4/qv-qstar");
  }
  if (exx && adj(qv, qx) && u_is_leaf) with_cut({Edge(q, qv)}, tail_v, "q4/qv-qx/leaf");
}

std::vector<Scanner::Candidate> Scanner::claim8_candidates(Vertex u, Vertex v, const Edge& e) const {
  std::vector<Candidate> out = claim8_prescribed(u, v, e);
  // Last resort: exchange e for the oblique edge of u or v. Always a
  // spanning tree. Needed when u or v is an endpoint of e, where the claw
  // argument degenerates, and when the root separates w from e and a
  // degree-3 u above q would gain the degree q loses.
  for (Vertex a : {u, v}) out.push_back(swap({e}, {Edge(a, far(e, a))}, "claim8/exchange"));
  return out;
}

std::vector<Scanner::Candidate> Scanner::claim8_prescribed(Vertex u, Vertex v, const Edge& e) const {
  std::vector<Candidate> out;
  const Vertex ex = lower(e), er = e.other(ex);
  Vertex x = ex;
  while (deg(x) == 2) x = t_.children(x)[0];
  const std::optional<Vertex> exx = ex == x ? std::nullopt : std::optional<Vertex>(t_.children(ex)[0]);
  const Vertex w = median(t_, u, v, r_);

  if (t_.on_path(e, u, v)) {
    auto ancestor = [&](Vertex a, Vertex b) {
      const Vertex ab = step(a, b);
      if (auto star = other_neighbor(a, {up(a), ab}))
        out.push_back(swap({Edge(a, ab), Edge(a, *star), e}, {Edge(a, far(e, a)), Edge(b, far(e, b)), Edge(*star, ab)},
                           "claim8/on-path/ancestor"));
    };
    if (w == u) {
      ancestor(u, v);
    } else if (w == v) {
      ancestor(v, u);
    } else {
      for (auto [a, b] : {Role{u, v}, Role{v, u}}) {
        const Vertex wa = step(w, a);
        if (e == Edge(w, wa))
          out.push_back(swap({e}, {Edge(b, wa)}, "claim8/on-path/split-at-w"));
        else
          out.push_back(swap({e, Edge(w, wa)}, {Edge(a, far(e, a)), Edge(b, far(e, b))}, "claim8/on-path/split"));
      }
    }
    return out;
  }

  const Vertex p = median(t_, x, u, r_), q = median(t_, x, v, r_);

  if (t_.on_path(r_, w, ex)) {
    // The root separates w from e; the far endpoint is e_x for the roled u.
    std::vector<Role> roles;
    if (p == r_) roles.push_back({u, v});
    if (q == r_) roles.push_back({v, u});
    for (auto [U, V] : roles) {
      const Vertex qV = U == u ? q : p;
      const Vertex rx = step(r_, x);
      if (adj(U, er)) {
        if (e == Edge(r_, rx))
          out.push_back(swap({e}, {Edge(V, ex)}, "claim8/root-between/u-er/direct"));
        else
          out.push_back(swap({e, Edge(r_, rx)}, {Edge(U, er), Edge(V, ex)}, "claim8/root-between/u-er"));
      }
      if (adj(V, er)) {
        if (!exx) {
          out.push_back(swap({Edge(r_, step(r_, U))}, {Edge(U, ex)}, "claim8/root-between/v-er/ex-is-x"));
        } else {
          if (adj(V, *exx))
            out.push_back(swap({Edge(ex, *exx), Edge(r_, step(r_, U))}, {Edge(U, ex), Edge(V, *exx)},
                               "claim8/root-between/v-er/v-exx"));
          if (adj(U, *exx)) {
            out.push_back(swap({Edge(ex, *exx), Edge(qV, step(qV, x))}, {Edge(V, ex), Edge(U, *exx)},
                               "claim8/root-between/v-er/u-exx"));
            // V itself sits on the r-x path; the swap above keeps its degree.
            // Fold its two children together instead, as in the w-above-e case.
            if (qV == V) {
              const Vertex vx = step(V, x);
              if (auto vstar = other_neighbor(V, {up(V), vx}))
                out.push_back(swap({Edge(ex, *exx), Edge(V, vx), Edge(V, *vstar)},
                                   {Edge(vx, *vstar), Edge(U, *exx), Edge(V, ex)}, "claim8/root-between/v-er/u-exx/q-is-v"));
            }
          }
        }
      }
    }
    return out;
  }

  if (t_.on_path(ex, r_, w)) {
    // e sits above w; both see e_r.
    if (w == u) {
      out.push_back(swap({Edge(u, step(u, v))}, {Edge(v, er)}, "claim8/e-above-w/u-above-v"));
    } else if (w == v) {
      out.push_back(swap({Edge(v, step(v, u))}, {Edge(u, er)}, "claim8/e-above-w/v-above-u"));
    } else {
      std::vector<Role> roles;
      if (adj(u, ex)) roles.push_back({u, v});
      if (adj(v, ex)) roles.push_back({v, u});
      for (auto [U, V] : roles) {
        const Vertex wu = step(w, U), wv = step(w, V);
        if (deg(w) == 3)
          out.push_back(swap({Edge(w, wu)}, {Edge(U, er)}, "claim8/e-above-w/w3"));
        else if (deg(w) == 4)
          out.push_back(swap({Edge(w, wu), Edge(w, wv)}, {Edge(U, er), Edge(V, er)}, "claim8/e-above-w/w4"));
        else
          out.push_back(swap({e, Edge(w, wu)}, {Edge(U, ex), Edge(V, er)}, "claim8/e-above-w/w5"));
      }
    }
    return out;
  }

  if (w != r_ && t_.on_path(w, r_, er)) {
    // w sits above e, strictly below the root.
    if (w == u || w == v) {
      const Vertex U = w, V = w == u ? v : u;
      const Vertex ux = step(U, x);
      const auto ustar = other_neighbor(U, {up(U), ux});
      if (!ustar) return out;
      if (!exx) {
        out.push_back(swap({Edge(U, *ustar), Edge(U, ux)}, {Edge(*ustar, ux), Edge(U, x)}, "claim8/w-above-e/w-end/ex-is-x"));
        return out;
      }
      if (adj(V, *exx))
        out.push_back(swap({Edge(ex, *exx), Edge(U, ux), Edge(U, *ustar)},
                           {Edge(ux, *ustar), Edge(V, *exx), Edge(U, ex)}, "claim8/w-above-e/w-end/v-exx"));
      if (adj(U, *exx)) {
        const Vertex qV = median(t_, x, V, r_);
        if (qV == V) {
          const Vertex vx = step(V, x);
          if (auto vstar = other_neighbor(V, {vx, up(V)}))
            out.push_back(swap({Edge(U, *ustar), Edge(U, ux), Edge(V, *vstar), Edge(V, vx)},
                               {Edge(*ustar, ux), Edge(*vstar, vx), Edge(U, ex), Edge(V, ex)}, "claim8/w-above-e/w-end/q-is-v"));
        } else if (qV == U) {
          const Vertex ur = up(U);
          if (adj(ur, *exx))
            out.push_back(swap({Edge(ex, *exx), Edge(U, *ustar)}, {Edge(ur, *exx), Edge(V, ex)}, "claim8/w-above-e/w-end/q-is-u/ur"));
          if (adj(ux, *exx))
            out.push_back(swap({Edge(ex, *exx), Edge(U, ux)}, {Edge(ux, *exx), Edge(V, ex)}, "claim8/w-above-e/w-end/q-is-u/ux"));
          // The configuration also admits u_r u_x in E(G); the same parent swap as claim 6 then applies.
          if (adj(ur, ux)) out.push_back(swap({Edge(U, ux)}, {Edge(ur, ux)}, "claim8/w-above-e/w-end/q-is-u/ur-ux"));
        } else if (deg(qV) != 4) {
          out.push_back(swap({Edge(qV, step(qV, V)), Edge(ex, *exx)}, {Edge(U, *exx), Edge(V, ex)}, "claim8/w-above-e/w-end/q"));
        } else {
          degree4_q_alternatives(out, U, V, qV, ex, exx, /*u_is_branch3=*/true, /*u_is_leaf=*/false);
        }
      }
      return out;
    }

    if (p == w && q == w) {
      std::vector<Role> roles;
      if (adj(u, er)) roles.push_back({u, v});
      if (adj(v, er)) roles.push_back({v, u});
      for (auto [U, V] : roles) {
        const Vertex wx = step(w, x);
        if (e == Edge(w, wx))
          out.push_back(swap({e}, {Edge(V, ex)}, "claim8/w-above-e/pq-w/direct"));
        else
          out.push_back(swap({e, Edge(w, wx)}, {Edge(U, er), Edge(V, ex)}, "claim8/w-above-e/pq-w"));
      }
      return out;
    }

    const Vertex U = p == w ? u : v, V = p == w ? v : u;
    const Vertex qV = p == w ? q : p;
    if (qV == V) {
      const Vertex vx = step(V, x);
      const auto vstar = other_neighbor(V, {vx, up(V)});
      if (!vstar) return out;
      if (!exx)
        out.push_back(swap({Edge(V, vx), Edge(V, *vstar)}, {Edge(V, ex), Edge(vx, *vstar)}, "claim8/w-above-e/q-is-v/ex-is-x"));
      else
        out.push_back(swap({Edge(w, step(w, x)), Edge(V, vx), Edge(V, *vstar)},
                           {Edge(*vstar, vx), Edge(U, ex), Edge(V, ex)}, "claim8/w-above-e/q-is-v"));
      return out;
    }
    const bool u_leaf = is_leaf_[U] != 0, u_b3 = deg(U) == 3;
    if (!exx) {
      if (deg(qV) != 4)
        out.push_back(swap({Edge(qV, step(qV, V))}, {Edge(V, ex)}, "claim8/w-above-e/q/ex-is-x"));
      else
        degree4_q_alternatives(out, U, V, qV, ex, std::nullopt, u_b3, u_leaf);
      return out;
    }
    if (adj(V, *exx))
      out.push_back(swap({Edge(ex, *exx), Edge(w, step(w, x))}, {Edge(U, ex), Edge(V, *exx)}, "claim8/w-above-e/v-exx"));
    if (adj(U, *exx)) {
      if (deg(qV) != 4)
        out.push_back(swap({Edge(ex, *exx), Edge(qV, step(qV, V))}, {Edge(V, ex), Edge(U, *exx)}, "claim8/w-above-e/u-exx"));
      else
        degree4_q_alternatives(out, U, V, qV, ex, exx, u_b3, u_leaf);
    }
    return out;
  }

  // e hangs off the r-w path at p == q.
  std::vector<Role> roles;
  if (adj(u, er)) roles.push_back({u, v});
  if (adj(v, er)) roles.push_back({v, u});
  for (auto [U, V] : roles) {
    const Vertex qx = step(p, x);
    if (e == Edge(p, qx))
      out.push_back(swap({e}, {Edge(U, ex)}, "claim8/off-path/direct"));
    else
      out.push_back(swap({e, Edge(p, qx)}, {Edge(U, er), Edge(V, ex)}, "claim8/off-path"));
  }
  return out;
}

std::vector<Scanner::Candidate> Scanner::claim10_candidates(Vertex b, Vertex b1, Vertex b2, Vertex z,
                                                            Vertex s) const {
  // z is an oblique neighbour of b-b1 and s of b-b2, both in M.
  std::vector<Candidate> out;
  const bool z_below = t_.is_ancestor(b1, z), s_below = t_.is_ancestor(b2, s);
  if (z_below) out.push_back(swap({Edge(b, b1), Edge(b, b2)}, {Edge(b, z), Edge(b1, b2)}, "claim10/fold"));
  if (s_below) out.push_back(swap({Edge(b, b1), Edge(b, b2)}, {Edge(b, s), Edge(b1, b2)}, "claim10/fold/sym"));
  if (deg(b) != 4) {
    if (!z_below) out.push_back(swap({Edge(b, b1)}, {Edge(z, b1)}, "claim10/reattach"));
    if (!s_below) out.push_back(swap({Edge(b, b2)}, {Edge(s, b2)}, "claim10/reattach/sym"));
    return out;
  }
  if (z_below || s_below) return out;
  if (z != s) {
    const bool b1_towards_s = t_.on_path(b1, s, b), b2_towards_z = t_.on_path(b2, z, b);
    if (!b1_towards_s && !b2_towards_z)
      out.push_back(swap({Edge(b, b1), Edge(b, b2)}, {Edge(z, b1), Edge(s, b2)}, "claim10/reattach/b4/cross"));
    if (b1_towards_s) out.push_back(swap({Edge(b, b2)}, {Edge(s, b2)}, "claim10/reattach/b4/s-below-b1"));
    if (b2_towards_z) out.push_back(swap({Edge(b, b1)}, {Edge(z, b1)}, "claim10/reattach/b4/z-below-b2"));
  } else if (t_.depth(b) >= t_.depth(z)) {
    out.push_back(swap({Edge(b, b1), Edge(b, b2)}, {Edge(z, b1), Edge(z, b2)}, "claim10/reattach/b4/same/shallow"));
  } else {
    out.push_back(swap({Edge(b, b1)}, {Edge(z, b1)}, "claim10/reattach/b4/same/deep"));
  }
  return out;
}

std::vector<std::pair<Edge, Vertex>> Scanner::case2_cd_edges(std::vector<Edge>& c, std::vector<Edge>& d) const {
  std::vector<std::pair<Edge, Vertex>> out;
  auto no_oblique_in_m = [&](const Edge& e) { return !has_oblique_neighbor_in(g_, t_, e, m_set_); };

  // Root: an adjacent pair among its three neighbours.
  auto rn = t_.neighbors(r_);
  bool root_done = false;
  for (std::size_t i = 0; i < rn.size() && !root_done; ++i)
    for (std::size_t j = i + 1; j < rn.size() && !root_done; ++j)
      if (adj(rn[i], rn[j])) {
        c.push_back(Edge(r_, rn[i]));
        c.push_back(Edge(r_, rn[j]));
        out.push_back({Edge(r_, rn[i]), rn[j]});
        out.push_back({Edge(r_, rn[j]), rn[i]});
        root_done = true;
      }
  if (!root_done) throw SolverAnomaly("root " + std::to_string(r_) + " has no adjacent pair of tree neighbours");

  for (Vertex b : cls_.branch) {
    if (b == r_) continue;
    const bool three = deg(b) == 3;
    if (three && contains(m_set_, b)) continue;
    auto kids = t_.children(b);
    bool done = false;
    for (Vertex kid : kids) {
      if (done) break;
      if (!no_oblique_in_m(Edge(b, kid))) continue;
      for (Vertex other : kids)
        if (other != kid && adj(kid, other)) {
          (three ? c : d).push_back(Edge(b, kid));
          out.push_back({Edge(b, kid), other});
          done = true;
          break;
        }
    }
    if (!done)
      throw SolverAnomaly("branch vertex " + std::to_string(b) +
                          " has no child edge free of oblique neighbours in M with an adjacent sibling");
  }
  return out;
}

std::optional<Violation> Scanner::scan_case2() const {
  // claim5: every child of a non-root branch vertex u is adjacent to another tree neighbour of u.
  for (Vertex u : cls_.branch) {
    if (u == r_) continue;
    for (Vertex a : t_.children(u)) {
      auto nb = t_.neighbors(u);
      if (std::any_of(nb.begin(), nb.end(), [&](Vertex b) { return adj(a, b); })) continue;
      const Vertex ur = up(u);
      Candidate c{{}, {}, "claim5/lift-siblings"};
      for (Vertex b : nb)
        if (b != a && b != ur) {
          c.remove.push_back(Edge(u, b));
          c.add.push_back(Edge(ur, b));
        }
      return repair(ClaimTag::claim5, {u, a}, std::nullopt, {c});
    }
  }

  // claim6: the two children of a non-root degree-3 vertex are adjacent.
  for (Vertex u : cls_.of_degree(3)) {
    if (u == r_) continue;
    auto kids = t_.children(u);
    const Vertex a = kids[0], b = kids[1];
    if (adj(a, b)) continue;
    const Vertex ur = up(u);
    std::vector<Candidate> c;
    if (adj(a, ur)) c.push_back(swap({Edge(a, u)}, {Edge(a, ur)}, "claim6/a"));
    if (adj(b, ur)) c.push_back(swap({Edge(b, u)}, {Edge(b, ur)}, "claim6/b"));
    return repair(ClaimTag::claim6, {u, a, b}, std::nullopt, c);
  }

  // claim7: H is independent.
  for (std::size_t i = 0; i < h_.size(); ++i)
    for (std::size_t j = i + 1; j < h_.size(); ++j)
      if (adj(h_[i], h_[j]))
        return repair(ClaimTag::claim7, {h_[i], h_[j]}, std::nullopt, claim7_candidates(h_[i], h_[j]));

  // claim8: H is pseudoindependent.
  for (std::size_t i = 0; i < h_.size(); ++i)
    for (std::size_t j = i + 1; j < h_.size(); ++j)
      for (const Edge& e : t_.edges())
        if (oblique(h_[i], e) && oblique(h_[j], e))
          return repair(ClaimTag::claim8, {h_[i], h_[j]}, e, claim8_candidates(h_[i], h_[j], e));

  // claim9: root edges towards adjacent neighbours have no oblique neighbour in H.
  auto rn = t_.neighbors(r_);
  for (std::size_t i = 0; i < rn.size(); ++i)
    for (std::size_t j = i + 1; j < rn.size(); ++j) {
      if (!adj(rn[i], rn[j])) continue;
      for (auto [x, y] : {Role{rn[i], rn[j]}, Role{rn[j], rn[i]}}) {
        const Edge rx(r_, x);
        for (Vertex z : pair_last(h_, x, y)) {
          if (!oblique(z, rx)) continue;
          std::vector<Candidate> c;
          if (t_.is_ancestor(x, z))
            c.push_back(swap({rx, Edge(r_, y)}, {Edge(r_, z), Edge(x, y)}, "claim9/below"));
          else
            c.push_back(swap({rx}, {Edge(z, x)}, "claim9/elsewhere"));
          return repair(ClaimTag::claim9, {r_, x, y, z}, rx, c);
        }
      }
    }

  // claim10: below a branch vertex outside M, one of two adjacent children's edges avoids M.
  for (Vertex b : cls_.branch) {
    if (b == r_ || contains(m_set_, b)) continue;
    auto kids = t_.children(b);
    for (std::size_t i = 0; i < kids.size(); ++i)
      for (std::size_t j = i + 1; j < kids.size(); ++j) {
        const Vertex b1 = kids[i], b2 = kids[j];
        if (!adj(b1, b2)) continue;
        std::vector<Vertex> zs, ss;
        for (Vertex z : m_set_) {
          if (oblique(z, Edge(b, b1))) zs.push_back(z);
          if (oblique(z, Edge(b, b2))) ss.push_back(z);
        }
        if (zs.empty() || ss.empty()) continue;
        std::vector<Candidate> c;
        for (Vertex z : zs)
          for (Vertex s : ss) {
            auto more = claim10_candidates(b, b1, b2, z, s);
            c.insert(c.end(), more.begin(), more.end());
          }
        return repair(ClaimTag::claim10, {b, b1, b2, zs.front(), ss.front()}, Edge(b, b1), c);
      }
  }

  // C, D and E are disjoint: no leaf outside M is the lower end of a chosen C or D edge.
  std::vector<Edge> c_edges, d_edges;
  for (const auto& [edge, partner] : case2_cd_edges(c_edges, d_edges)) {
    const Vertex child = lower(edge);
    if (!is_leaf_[child] || contains(m_set_, child)) continue;
    const Vertex parent = edge.other(child);
    return repair(ClaimTag::cde_disjoint, {parent, child, partner}, edge,
                  {swap({Edge(parent, partner)}, {Edge(partner, child)}, "cde-disjoint/rehang")});
  }
  return std::nullopt;
}

Certificate Scanner::certificate(std::size_t n) const {
  Certificate cert;
  cert.root = r_;
  cert.fixpoint_tree = t_;
  const std::size_t nv = t_.vertex_count();
  cert.bound = static_cast<std::int64_t>(nv) - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(m_) - 2;

  std::vector<Edge> parts_union;
  if (case1()) {
    cert.mode = CertificateMode::case1;
    if (cls_.leaves.size() < m_ + 1)
      throw SolverAnomaly("only " + std::to_string(cls_.leaves.size()) + " leaves for a witness of size " +
                          std::to_string(m_ + 1));
    cert.witness.assign(cls_.leaves.begin(), cls_.leaves.begin() + static_cast<std::ptrdiff_t>(m_ + 1));
    auto& a = cert.parts["A"];
    for (Vertex l : cls_.leaves)
      if (!contains(cert.witness, l)) a.push_back(Edge(l, up(l)));
    auto& b = cert.parts["B"];
    for (const auto& pe : case1_pair_edges()) b.push_back(pe.first);
    if (b.size() != 2 * cls_.branch.size())
      throw SolverAnomaly("some branch vertex lacks an adjacent pair of children");
  } else {
    cert.mode = CertificateMode::case2;
    if (m_set_.size() < m_ + 1)
      throw SolverAnomaly("|H| = " + std::to_string(h_.size()) + " is smaller than m+1");
    cert.witness = m_set_;
    std::vector<Edge> c, d;
    case2_cd_edges(c, d);
    cert.parts["C"] = c;
    cert.parts["D"] = d;
    auto& e = cert.parts["E"];
    for (Vertex l : cls_.leaves)
      if (!contains(m_set_, l)) e.push_back(Edge(l, up(l)));
  }

  for (auto& [name, edges] : cert.parts) {
    std::sort(edges.begin(), edges.end());
    parts_union.insert(parts_union.end(), edges.begin(), edges.end());
  }
  std::sort(parts_union.begin(), parts_union.end());
  if (std::adjacent_find(parts_union.begin(), parts_union.end()) != parts_union.end())
    throw SolverAnomaly("certificate edge sets are not pairwise disjoint");

  for (const Edge& e : t_.edges())
    if (!has_oblique_neighbor_in(g_, t_, e, cert.witness)) cert.edges_no_oblique.push_back(e);
  if (!std::includes(cert.edges_no_oblique.begin(), cert.edges_no_oblique.end(), parts_union.begin(),
                     parts_union.end()))
    throw SolverAnomaly("a materialised certificate edge has an oblique neighbour in the witness");
  cert.count = cert.edges_no_oblique.size();
  for (Vertex v : cert.witness) cert.degree_sum += g_.degree(v);
  return cert;
}

RootedTree canonically_rooted(const RootedTree& t) {
  const Vertex root = canonical_root(t);
  return root == t.root() ? t : t.rerooted(root);
}

}  // namespace

std::optional<Violation> find_violation(const Graph& g, const RootedTree& t, std::size_t m, std::size_t /*n*/,
                                        bool exchange_fallback) {
  const RootedTree rooted = canonically_rooted(t);
  if (rooted.vertex_count() < 3 || classify(rooted).branch.empty()) return std::nullopt;
  return Scanner(g, rooted, m, exchange_fallback).scan();
}

Certificate build_certificate(const Graph& g, const RootedTree& t, std::size_t m, std::size_t n) {
  const RootedTree rooted = canonically_rooted(t);
  if (rooted.vertex_count() < 2) throw std::invalid_argument("certificate needs at least two vertices");
  const TreeClassification cls = classify(rooted);
  if (cls.leaves.size() + cls.branch.size() <= n)
    throw std::invalid_argument("tree already has at most n leaves and branch vertices");
  Certificate cert = Scanner(g, rooted, m).certificate(n);
  const CertificateCheck check = verify_certificate(g, cert, m, n);
  if (check != CertificateCheck::ok)
    throw SolverAnomaly("certificate fails verification: " + std::string(to_string(check)));
  return cert;
}

CertificateCheck verify_certificate(const Graph& g, const Certificate& cert, std::size_t m, std::size_t n) {
  const RootedTree& t = cert.fixpoint_tree;
  const std::size_t nv = g.vertex_count();
  if (!spans(g, t) || t.vertex_count() < 2 || cert.root >= nv) return CertificateCheck::tree_invalid;
  if (cert.witness.size() != m + 1) return CertificateCheck::wrong_size;
  for (Vertex v : cert.witness)
    if (v >= nv) return CertificateCheck::vertex_out_of_range;
  std::vector<Vertex> sorted = cert.witness;
  std::sort(sorted.begin(), sorted.end());
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) return CertificateCheck::duplicate_vertex;
  for (std::size_t i = 0; i < sorted.size(); ++i)
    for (std::size_t j = i + 1; j < sorted.size(); ++j)
      if (g.adjacent(sorted[i], sorted[j])) return CertificateCheck::not_independent;
  if (!is_pseudoindependent(g, t, sorted)) return CertificateCheck::not_pseudoindependent;

  // Witness roles: leaves (case1), or leaves and degree-3 vertices other than a degree-3 root (case2).
  for (Vertex v : sorted) {
    const std::size_t d = t.degree(v);
    const bool role_ok = cert.mode == CertificateMode::case1
                             ? d == 1
                             : (d == 1 || (d == 3 && v != cert.root)) && t.degree(cert.root) == 3;
    if (!role_ok) return CertificateCheck::witness_role;
  }

  std::set<Edge> listed;
  for (const Edge& e : cert.edges_no_oblique) {
    if (!t.has_edge(e) || !listed.insert(e).second) return CertificateCheck::edge_not_in_tree;
    if (has_oblique_neighbor_in(g, t, e, sorted)) return CertificateCheck::edge_has_oblique_neighbor;
  }
  if (cert.count != listed.size()) return CertificateCheck::count_mismatch;
  if (static_cast<std::int64_t>(cert.count) < static_cast<std::int64_t>(n) + 1 - static_cast<std::int64_t>(m))
    return CertificateCheck::count_too_small;

  std::uint64_t sum = 0;
  for (Vertex v : sorted) sum += g.degree(v);
  if (sum != cert.degree_sum) return CertificateCheck::degree_sum_mismatch;
  const std::int64_t bound =
      static_cast<std::int64_t>(nv) - static_cast<std::int64_t>(n) + static_cast<std::int64_t>(m) - 2;
  if (cert.bound != bound) return CertificateCheck::bound_mismatch;
  // Pseudoindependence makes the oblique edge sets of the witness disjoint,
  // so their total size, the degree sum, fits in the remaining tree edges.
  if (static_cast<std::int64_t>(sum) > static_cast<std::int64_t>(t.edges().size() - cert.count) ||
      static_cast<std::int64_t>(sum) > bound)
    return CertificateCheck::bound_exceeded;
  return CertificateCheck::ok;
}

SolveResult solve(const Graph& g, std::size_t m, std::size_t n, const SolverConfig& cfg) {
  if (m < 1 || n < 2 || static_cast<std::int64_t>(m) > ceil_two_thirds(static_cast<std::int64_t>(n)))
    throw SolveError(SolveErrorKind::parameter_range,
                     "need m >= 1, n >= 2 and m <= ceil(2n/3); got m=" + std::to_string(m) +
                         " n=" + std::to_string(n));
  if (g.vertex_count() == 0) throw SolveError(SolveErrorKind::parameter_range, "empty graph");
  if (!is_connected(g)) throw SolveError(SolveErrorKind::disconnected, "graph is disconnected");
  if (auto claw = claw_witness(g)) {
    SolveError err(SolveErrorKind::not_claw_free,
                   "graph is not claw-free: center " + std::to_string(claw->center) + " leaves " +
                       std::to_string(claw->leaves[0]) + "," + std::to_string(claw->leaves[1]) + "," +
                       std::to_string(claw->leaves[2]));
    err.claw = claw;
    throw err;
  }
  if (!cfg.force) {
    HypothesisReport report = check_hypothesis(g, m, n);
    if (!report.satisfied) {
      SolveError err(SolveErrorKind::hypothesis_unsatisfied,
                     "sigma_" + std::to_string(m + 1) + " = " + to_string(report.sigma_value) + " < " +
                         std::to_string(report.threshold));
      err.report = report;
      throw err;
    }
  }

  SolveResult result;
  const std::size_t nv = g.vertex_count();
  RootedTree tree;
  if (cfg.initial_tree) {
    if (!spans(g, *cfg.initial_tree))
      throw SolveError(SolveErrorKind::parameter_range, "initial tree is not a spanning tree of the graph");
    tree = *cfg.initial_tree;
  } else {
    tree = dfs_spanning_tree(g, cfg.start_root < nv ? cfg.start_root : 0);
  }
  if (nv <= 2) {
    result.status = SolveStatus::tree;
    result.tree = tree;
    if (cfg.record_trace) result.trace.push_back(tree);
    return result;
  }
  tree = canonically_rooted(tree);
  if (cfg.record_trace) result.trace.push_back(tree);

  const std::size_t cap = cfg.iteration_cap.value_or(nv * nv * nv);
  while (true) {
    const TreeClassification cls = classify(tree);
    if (cls.leaves.size() + cls.branch.size() <= n) {
      result.status = SolveStatus::tree;
      result.tree = tree;
      return result;
    }
    if (result.stats.iterations >= cap) {
      result.status = SolveStatus::anomaly;
      result.anomaly = "iteration cap " + std::to_string(cap) + " reached";
      result.tree = tree;
      return result;
    }
    try {
      auto violation = find_violation(g, tree, m, n, cfg.exchange_fallback);
      if (!violation) {
        result.certificate = build_certificate(g, tree, m, n);
        result.status = SolveStatus::certificate;
        result.tree = tree;
        return result;
      }
      if (!(potential(violation->result) < potential(tree)))
        throw SolverAnomaly("accepted move does not lower the potential");
      tree = std::move(violation->result);
      ++result.stats.iterations;
      ++result.stats.moves[violation->fallback ? std::string("fallback") : violation->move.claim_tag];
      if (cfg.record_trace) result.trace.push_back(tree);
    } catch (const SolverAnomaly& err) {
      result.status = SolveStatus::anomaly;
      result.anomaly = err.what();
      result.tree = tree;
      return result;
    }
  }
}

SolveResult solve_branch_mode(const Graph& g, std::size_t k, const SolverConfig& cfg) {
  if (k < 1) throw SolveError(SolveErrorKind::parameter_range, "branch mode needs k >= 1");
  SolveResult result = solve(g, k + 3, 2 * k + 3, cfg);
  if (result.status == SolveStatus::tree && result.tree->vertex_count() >= 2 &&
      classify(*result.tree).branch.size() > k) {
    result.status = SolveStatus::anomaly;
    result.anomaly = "tree within the leaf+branch bound has more than k branch vertices";
  }
  return result;
}

}  // namespace clawtree
