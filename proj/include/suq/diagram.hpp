#pragma once

#include <cstdint>
#include <optional>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "suq/lattice.hpp"
#include "suq/weyl.hpp"

namespace suq {

// Edge types of the layered diagram.  In an elementary block for s_g the
// labelled horizontals sit at levels g ('-') and g+1 ('+'); the diagonals
// join g and g+1 and never carry a lattice shift.  In the Z column r the
// '+' arrow sits at level r and the '-' arrow at level r+1.
enum class EdgeKind : std::uint8_t {
  Identity,
  MinusHoriz,  // sqrt(1-q^{2N})  shift n -> n-1, kills n = 0
  PlusHoriz,   // sqrt(1-q^{2N+2}) shift n -> n+1
  UpDiag,      // -q^{N+1}, level v -> v+1
  DownDiag,    // q^{N},    level v -> v-1
  PlusZ,       // shift z -> z+1
  MinusZ,      // shift z -> z-1
};

// Block s_gen inside string k; removal always suppresses both labelled
// horizontals of the block.
struct BlockRef {
  int k = 0;
  int gen = 0;
  friend auto operator<=>(const BlockRef&, const BlockRef&) = default;
};

struct DiagramColumn {
  int k = 0;    // string index, 0 for the Z part
  int gen = 0;  // s_gen for blocks, column index r for the Z part
  bool zpart = false;
  int coord = -1;  // flat index of the coordinate this column acts on
};

class Diagram {
 public:
  Diagram() = default;
  static Diagram build(const Decomposition& d, const std::vector<BlockRef>& removed = {});
  Diagram with_removed(const std::vector<BlockRef>& more) const;

  const Decomposition& dec() const { return dec_; }
  const CoordMap& map() const { return map_; }
  int ell() const { return dec_.ell; }
  int levels() const { return dec_.ell + 1; }
  int columns() const { return static_cast<int>(cols_.size()); }
  int nat_columns() const { return nat_cols_; }
  const DiagramColumn& column(int c) const { return cols_[c]; }
  bool label_removed(int k, int gen) const { return removed_.count(BlockRef{k, gen}) > 0; }
  const std::set<BlockRef>& removed() const { return removed_; }

  // Outgoing edges of column c from level v, in enumeration order.
  void edges_from(int c, int level, std::vector<std::pair<EdgeKind, int>>& out) const;

 private:
  Decomposition dec_;
  CoordMap map_;
  std::vector<DiagramColumn> cols_;
  int nat_cols_ = 0;
  std::set<BlockRef> removed_;
};

// A move: a left-to-right path through the diagram.  seg[k] = (i_k, j_k) is
// the segment in string k (k = 0 is the Z part, where i_0 = j_0).  m is the
// lattice shift given by the labelled edges, diag the flat coordinates of
// the diagonal components.
struct Move {
  int from = 0;
  int to = 0;
  std::vector<EdgeKind> edges;               // one entry per column
  std::vector<std::pair<int, int>> seg;      // index 0..t by string
  PointVec m;
  std::vector<int> diag;                     // sorted flat coordinates
  int up_edges = 0;

  bool operator==(const Move& o) const { return edges == o.edges && from == o.from; }
};

// The shift prescription evaluated on a segment tuple alone; every realized
// edge path must agree with it.
PointVec move_vector_from_segments(const Diagram& g, const std::vector<std::pair<int, int>>& seg);

// All moves from left node i to right node j (the set P_ij), ordered
// lexicographically by edge choice.
std::vector<Move> enumerate_moves(const Diagram& g, int i, int j);

// Every move of the diagram, grouped by (i, j) with i, j ascending.
std::vector<Move> all_moves(const Diagram& g);

// The all-horizontal move at level r, if its labelled edges survive removal.
std::optional<Move> h_move(const Diagram& g, int r);

// c(gamma, p): sum of gamma over the diagonal components of p.
long c_weight(const Move& p, const PointVec& gamma);

// gamma + times * m_p; throws NegativeNCoordinate when an N coordinate of the
// endpoint would be negative.  Entries of m_p are 0/±1, so coordinates move
// monotonically and the endpoint check covers the whole segment.
PointVec apply_move(const CoordMap& map, const PointVec& gamma, const Move& p, long times);

struct MovetempWitness {
  int r = 0;
  int n = 0;
  int value_p = 0;
  int value_q = 0;
  bool dichotomy() const {
    return (value_p == 0 && (value_q == 1 || value_q == -1)) ||
           (value_q == 0 && (value_p == 1 || value_p == -1));
  }
};

// Witness coordinate for two distinct moves of the same P_ij: the largest
// string index where the move vectors differ, and the smallest coordinate in
// that string.  nullopt when the N rows agree everywhere.
std::optional<MovetempWitness> movetemp_witness(const Diagram& g, const Move& p, const Move& q);

// All segment tuples satisfying the move conditions with endpoints (i, j);
// used to cross-check against the edge-path enumeration on full diagrams.
std::vector<std::vector<std::pair<int, int>>> enumerate_segment_tuples(const Decomposition& d,
                                                                       int i, int j);

struct AxisConstants {
  int i_min = 0;
  int j_min = 0;
  int j_max = 0;
  int i_0 = 0;
};

// End level shared by every move whose j_min-th segment is (i_min, i_min) in
// the diagram with all |J_i| = 1 labels removed.
int derive_i0(const Decomposition& d);
AxisConstants axis_constants(const Decomposition& d);

std::string render_ascii(const Diagram& g);

}  // namespace suq
