#include "suq/growth.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <queue>
#include <set>

#include "suq/errors.hpp"

namespace suq {

GrowthContext make_growth_context(const Decomposition& d) {
  GrowthContext ctx;
  ctx.diagram = Diagram::build(d);
  ctx.moves = all_moves(ctx.diagram);
  return ctx;
}

std::vector<GuaranteedEdge> guaranteed_edges(const GrowthContext& ctx, const PointVec& gamma,
                                             const Window& w) {
  const CoordMap& map = ctx.diagram.map();
  std::vector<GuaranteedEdge> out;
  for (std::size_t m = 0; m < ctx.moves.size(); ++m) {
    const Move& p = ctx.moves[m];
    if (is_guaranteed_at(p, gamma)) {
      PointVec t = gamma;
      bool ok = true;
      for (int f = 0; f < map.size(); ++f) {
        t[f] += p.m[f];
        if (map.is_nat(f) && t[f] < 0) ok = false;
      }
      if (ok && w.contains(map, t)) out.push_back({static_cast<int>(m), true, std::move(t)});
    }
    {
      PointVec s = gamma;
      bool ok = true;
      for (int f = 0; f < map.size(); ++f) {
        s[f] -= p.m[f];
        if (map.is_nat(f) && s[f] < 0) ok = false;
      }
      if (ok && w.contains(map, s) && is_guaranteed_at(p, s))
        out.push_back({static_cast<int>(m), false, std::move(s)});
    }
  }
  return out;
}

GrowthGraph::GrowthGraph(const GrowthContext& ctx, const Window& w, ExecMode mode)
    : map_(&ctx.diagram.map()), w_(w) {
  w.validate();
  const CoordMap& map = *map_;
  const std::uint64_t total = w.point_count(map);
  adj_.assign(total, {});

  // Forward arcs only; each vertex row is written independently.
  auto fill_vertex = [&](std::uint64_t u) {
    const PointVec gamma = w.point_at(map, u);
    for (std::size_t m = 0; m < ctx.moves.size(); ++m) {
      const Move& p = ctx.moves[m];
      if (!is_guaranteed_at(p, gamma)) continue;
      PointVec t = gamma;
      bool ok = true;
      for (int f = 0; f < map.size() && ok; ++f) {
        t[f] += p.m[f];
        if (map.is_nat(f) && t[f] < 0) ok = false;
      }
      if (!ok || !w.contains(map, t)) continue;
      const std::uint64_t v = w.index_of(map, t);
      if (v == u) continue;  // zero move vector
      adj_[u].emplace_back(static_cast<std::uint32_t>(v), static_cast<int>(m));
    }
    return true;
  };
  all_over(total, mode, fill_vertex);

  // Symmetrize: the reverse application is guaranteed by the same bound.
  std::vector<std::vector<std::pair<std::uint32_t, int>>> back(total);
  for (std::uint64_t u = 0; u < total; ++u)
    for (const auto& [v, m] : adj_[u]) back[v].emplace_back(static_cast<std::uint32_t>(u), m);
  for (std::uint64_t u = 0; u < total; ++u) {
    auto& row = adj_[u];
    row.insert(row.end(), back[u].begin(), back[u].end());
    std::sort(row.begin(), row.end());
    row.erase(std::unique(row.begin(), row.end()), row.end());
  }
}

std::uint64_t GrowthGraph::edge_count() const {
  std::uint64_t n = 0;
  for (const auto& row : adj_) n += row.size();
  return n / 2;
}

namespace {

// Dinic on the vertex-split network.  Node 2v = v_in, 2v+1 = v_out.
class FlowNet {
 public:
  explicit FlowNet(std::size_t nodes) : head_(nodes, -1) {}

  int add_arc(int from, int to, int cap) {
    const int id = static_cast<int>(arcs_.size());
    arcs_.push_back({to, head_[from], cap});
    head_[from] = id;
    arcs_.push_back({from, head_[to], 0});
    head_[to] = id + 1;
    return id;
  }

  int max_flow(int s, int t) {
    int flow = 0;
    while (bfs(s, t)) {
      iter_ = head_;
      while (int f = dfs(s, t, 1 << 30)) flow += f;
    }
    return flow;
  }

  struct Arc {
    int to;
    int next;
    int cap;
  };
  const std::vector<Arc>& arcs() const { return arcs_; }
  int head(int v) const { return head_[v]; }

 private:
  bool bfs(int s, int t) {
    level_.assign(head_.size(), -1);
    std::queue<int> q;
    level_[s] = 0;
    q.push(s);
    while (!q.empty()) {
      const int u = q.front();
      q.pop();
      for (int e = head_[u]; e != -1; e = arcs_[e].next)
        if (arcs_[e].cap > 0 && level_[arcs_[e].to] < 0) {
          level_[arcs_[e].to] = level_[u] + 1;
          q.push(arcs_[e].to);
        }
    }
    return level_[t] >= 0;
  }

  int dfs(int u, int t, int f) {
    if (u == t) return f;
    for (int& e = iter_[u]; e != -1; e = arcs_[e].next) {
      Arc& a = arcs_[e];
      if (a.cap > 0 && level_[a.to] == level_[u] + 1) {
        const int d = dfs(a.to, t, std::min(f, a.cap));
        if (d > 0) {
          a.cap -= d;
          arcs_[e ^ 1].cap += d;
          return d;
        }
      }
    }
    level_[u] = -1;
    return 0;
  }

  std::vector<Arc> arcs_;
  std::vector<int> head_;
  std::vector<int> level_;
  std::vector<int> iter_;
};

}  // namespace

bool vertex_disjoint(const Ladder& l) {
  std::set<PointVec> seen;
  for (const auto& path : l.paths)
    for (const auto& [p, mid] : path.steps)
      if (!seen.insert(p).second) return false;
  return true;
}

DisjointPathResult disjoint_path_count(const GrowthGraph& g, const Partition& part) {
  const std::uint64_t n = g.vertex_count();
  const int S = static_cast<int>(2 * n);
  const int T = S + 1;
  FlowNet net(2 * n + 2);

  std::vector<char> in_plus(n);
  for (std::uint64_t v = 0; v < n; ++v) {
    in_plus[v] = part.plus(g.point(static_cast<std::uint32_t>(v))) ? 1 : 0;
    net.add_arc(static_cast<int>(2 * v), static_cast<int>(2 * v + 1), 1);
  }
  // arc id -> move id for the edge arcs, to label ladder steps later
  std::vector<std::pair<int, int>> edge_arcs;  // (arc id, move id)
  for (std::uint64_t v = 0; v < n; ++v)
    for (const auto& [u, m] : g.neighbors(static_cast<std::uint32_t>(v))) {
      const int id = net.add_arc(static_cast<int>(2 * v + 1), static_cast<int>(2 * u), 1);
      edge_arcs.emplace_back(id, m);
    }
  for (std::uint64_t v = 0; v < n; ++v) {
    if (in_plus[v]) net.add_arc(S, static_cast<int>(2 * v), 1);
    else net.add_arc(static_cast<int>(2 * v + 1), T, 1);
  }

  DisjointPathResult res;
  res.count = net.max_flow(S, T);

  // Decompose the integral flow into vertex-disjoint paths.  Forward unit
  // arcs carry net flow exactly when their capacity is drained to zero.
  const auto& arcs = net.arcs();
  std::vector<int> arc_move(arcs.size(), -1);
  for (const auto& [id, m] : edge_arcs) arc_move[id] = m;

  std::vector<char> used_arc(arcs.size(), 0);
  for (int e0 = net.head(S); e0 != -1; e0 = arcs[e0].next) {
    if ((e0 & 1) == 1 || arcs[e0].cap != 0) continue;
    LadderPath path;
    int node = arcs[e0].to;  // some v_in
    while (node != T) {
      const std::uint32_t v = static_cast<std::uint32_t>(node / 2);
      // v_in -> v_out
      int out_arc = -1, next = -1;
      for (int e = net.head(node); e != -1; e = arcs[e].next)
        if ((e & 1) == 0 && arcs[e].cap == 0 && !used_arc[e] && arcs[e].to == node + 1) {
          out_arc = e;
          break;
        }
      assert(out_arc != -1);
      used_arc[out_arc] = 1;
      // v_out -> (u_in or T)
      int chosen = -1;
      for (int e = net.head(node + 1); e != -1; e = arcs[e].next)
        if ((e & 1) == 0 && arcs[e].cap == 0 && !used_arc[e]) {
          chosen = e;
          break;
        }
      assert(chosen != -1);
      used_arc[chosen] = 1;
      next = arcs[chosen].to;
      path.steps.emplace_back(g.point(v), next == T ? -1 : arc_move[chosen]);
      node = next;
    }
    res.ladder.paths.push_back(std::move(path));
  }
  assert(static_cast<int>(res.ladder.paths.size()) == res.count);
  return res;
}

std::vector<ProbePoint> sign_determining_probe(const GrowthContext& ctx, const Partition& part,
                                               const std::vector<Window>& windows,
                                               ExecMode mode) {
  std::vector<ProbePoint> out;
  for (const Window& w : windows) {
    const GrowthGraph g(ctx, w, mode);
    out.push_back({w, disjoint_path_count(g, part).count});
  }
  return out;
}

Bdd3Result bdd3_sup(const Diagram& g, const Move& p, const DiracPtr& d, const Window& w,
                    ExecMode mode) {
  w.validate();
  const CoordMap& map = g.map();
  const Monomial wp = w_monomial_of(g, p);
  const std::uint64_t total = w.point_count(map);
  const double qu = [&] {
    double v = 1.0;
    for (int i = 0; i < p.up_edges; ++i) v *= w.q;
    return v;
  }();

  Bdd3Result res;
  res.combinatorial = max_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    PointVec t = gamma;
    for (int f = 0; f < map.size(); ++f) t[f] += p.m[f];
    if (!map.in_gamma(t) || !w.contains(map, t)) return 0.0;
    double qcw = 1.0;
    const long cw = c_weight(p, gamma);
    for (long i = 0; i < cw; ++i) qcw *= w.q;
    return std::abs(d->eval(t) - d->eval(gamma)) * qcw;
  });
  res.operator_route = max_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    auto hit = wp.apply_basis(map, gamma, w.q);
    if (!hit) return 0.0;
    const auto& [coeff, target] = *hit;
    if (!w.contains(map, target)) return 0.0;
    // [D, W_p] e_gamma = (d(target) - d(gamma)) * coeff * e_target
    return std::abs((d->eval(target) - d->eval(gamma)) * coeff) / qu;
  });
  return res;
}

CommutatorCertificate commutator_certificate(const GrowthContext& ctx, const DiracPtr& d,
                                             const Window& w, double c, ExecMode mode) {
  CommutatorCertificate cert;
  cert.bound = c;
  for (std::size_t m = 0; m < ctx.moves.size(); ++m) {
    const Bdd3Result r = bdd3_sup(ctx.diagram, ctx.moves[m], d, w, mode);
    if (r.combinatorial > c + 1e-9)
      cert.violations.push_back({static_cast<int>(m), r.combinatorial});
  }
  cert.pass = cert.violations.empty();
  return cert;
}

}  // namespace suq
