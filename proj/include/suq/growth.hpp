#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "suq/diagram.hpp"
#include "suq/dirac.hpp"
#include "suq/lattice.hpp"
#include "suq/operators.hpp"
#include "suq/parallel.hpp"

namespace suq {

// Full diagram plus the complete move list; move ids index this list.
struct GrowthContext {
  Diagram diagram;
  std::vector<Move> moves;
};

GrowthContext make_growth_context(const Decomposition& d);

// Edges guaranteed for every admissible eigenvalue pattern: moves applied at
// a point of vanishing c-weight.  The move bound there is c itself, so the
// pair is joined in G_c no matter which d realizes D.
struct GuaranteedEdge {
  int move_id = 0;
  bool forward = true;  // false: the move arrives at gamma from the target
  PointVec target;
};

std::vector<GuaranteedEdge> guaranteed_edges(const GrowthContext& ctx, const PointVec& gamma,
                                             const Window& w);

inline bool is_guaranteed_at(const Move& p, const PointVec& gamma) {
  return c_weight(p, gamma) == 0;
}

// Guaranteed-edge graph over every window point.  Vertices are indexed by the
// window's mixed-radix point index.
class GrowthGraph {
 public:
  GrowthGraph(const GrowthContext& ctx, const Window& w, ExecMode mode);

  const CoordMap& map() const { return *map_; }
  const Window& window() const { return w_; }
  std::uint64_t vertex_count() const { return adj_.size(); }
  const std::vector<std::pair<std::uint32_t, int>>& neighbors(std::uint32_t v) const {
    return adj_[v];
  }
  std::uint64_t edge_count() const;
  PointVec point(std::uint32_t v) const { return w_.point_at(*map_, v); }

 private:
  const CoordMap* map_;
  Window w_;
  std::vector<std::vector<std::pair<std::uint32_t, int>>> adj_;  // (neighbor, move id)
};

struct Partition {
  std::string name;
  std::function<bool(const PointVec&)> plus;
};

// One path of a ladder: lattice points joined by guaranteed edges; step move
// ids refer to the ladder's move table when present, otherwise to the
// GrowthContext move list (-1 on the terminal point).
struct LadderPath {
  std::vector<std::pair<PointVec, int>> steps;
};

struct Ladder {
  std::vector<LadderPath> paths;
  std::vector<Move> move_table;
};

bool vertex_disjoint(const Ladder& l);

// Maximum number of vertex-disjoint paths from the + class to the - class
// (unit vertex capacities via vertex splitting), with an extremal ladder.
struct DisjointPathResult {
  int count = 0;
  Ladder ladder;
};

DisjointPathResult disjoint_path_count(const GrowthGraph& g, const Partition& part);

// Path counts over a family of windows; a strictly growing curve certifies
// ladders at scale, a bounded one is consistent with a sign-determining
// partition.
struct ProbePoint {
  Window window;
  int count = 0;
};

std::vector<ProbePoint> sign_determining_probe(const GrowthContext& ctx, const Partition& part,
                                               const std::vector<Window>& windows, ExecMode mode);

// sup over the window of |d(gamma+m_p) - d(gamma)| * q^{c(gamma,p)}, computed
// combinatorially and through the operator route ||[D, W_p] e_gamma|| / q^{u(p)}.
// The two must agree to numerical precision.
struct Bdd3Result {
  double combinatorial = 0.0;
  double operator_route = 0.0;
};

Bdd3Result bdd3_sup(const Diagram& g, const Move& p, const DiracPtr& d, const Window& w,
                    ExecMode mode);

struct CommutatorViolation {
  int move_id = 0;
  double sup = 0.0;
};

struct CommutatorCertificate {
  bool pass = true;
  double bound = 0.0;
  std::vector<CommutatorViolation> violations;
};

// Checks bdd3_sup <= c for every move of the context on the window.
CommutatorCertificate commutator_certificate(const GrowthContext& ctx, const DiracPtr& d,
                                             const Window& w, double c, ExecMode mode);

}  // namespace suq
