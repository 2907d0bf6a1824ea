#pragma once

#include <optional>
#include <string>
#include <vector>

#include "suq/diagram.hpp"
#include "suq/growth.hpp"
#include "suq/lattice.hpp"

namespace suq {

// The free plane F: integer directions delta with delta(j,i) = -delta(0,i)
// for every string j containing generator i.  All H-move vectors lie in F,
// and F-cosets are determined by one value per level i (the (j_i, i)
// coordinate, falling back to (0,i) when no string contains i).
class FreePlane {
 public:
  explicit FreePlane(const Decomposition& d);

  const CoordMap& map() const { return map_; }
  const Decomposition& dec() const { return dec_; }
  bool contains_direction(const PointVec& delta) const;
  bool same_coset(const PointVec& a, const PointVec& b) const;
  // Basis direction for level i: +1 on every (j,i), -1 on (0,i).
  PointVec basis_direction(int i) const;

 private:
  Decomposition dec_;
  CoordMap map_;
};

// Smallest string index attaining min over j in J_i of gamma(j,i); 0 when no
// string contains i (the Z coordinate then plays the role of (j_i, i)).
int minimizer_j(const Decomposition& d, const CoordMap& map, const PointVec& gamma, int i);

// gamma lies on the complementary axis C: for every level i with J_i
// nonempty, some coordinate gamma(j,i) vanishes.
bool in_complementary_axis(const Decomposition& d, const CoordMap& map, const PointVec& gamma);

// C0 = gamma(j_min, i_min) + gamma(0, i_0);  C1 = gamma(j_max, i_min);
// C  = gamma(j_ell, ell) with the minimizing string j_ell.
struct AxisFunctionals {
  const Decomposition* dec = nullptr;
  const CoordMap* map = nullptr;
  AxisConstants ax;

  long c0(const PointVec& gamma) const;
  long c1(const PointVec& gamma) const;
  long c_top(const PointVec& gamma) const;
};

AxisFunctionals axis_functionals(const Decomposition& d, const CoordMap& map);

struct SweepStep {
  Move move;
  long times = 0;
  std::string tag;  // short label for table rows
};

// A composite path: start, applied steps, and the point after each step.
// Construction validates every application (N coordinates stay nonnegative).
struct SweepPath {
  PointVec start;
  std::vector<SweepStep> steps;
  std::vector<PointVec> trace;  // trace[i] = point after steps[0..i]

  const PointVec& end() const { return trace.empty() ? start : trace.back(); }
  long unit_length() const;
  void append(const CoordMap& map, const Move& p, long times, std::string tag = {});
};

SweepPath make_path(const PointVec& start);

// Worked-table layout: one column per coordinate, rows alternating between
// applied moves and the resulting points.
struct SweepTable {
  std::vector<std::string> coord_labels;
  struct Row {
    std::string label;
    bool is_move = false;
    std::vector<long> values;
  };
  std::vector<Row> rows;

  std::string render() const;
};

// Pure-Z move of the fully label-stripped diagram whose 0th segment is (v,v):
// shifts (0,v) by +1 and (0,v-1) by -1 and nothing else.
Move zero_segment_move(const Decomposition& d, int v);

// Sweep inside a free-plane coset: H-multiples that zero the (j_i, i)
// coordinates for i < ell while the (j_ell, ell) coordinate stays constant.
SweepPath sweep5(const Decomposition& d, const PointVec& base, const PointVec& start);

// Cumulative label-removal state driving the sweepout schedules.
class ReducedDiagramState {
 public:
  explicit ReducedDiagramState(const Decomposition& d);

  const Diagram& diagram() const { return cur_; }
  void remove_block(int k, int gen);
  void remove_singleton_labels();           // every block whose generator is unrepeated
  void remove_strings_above(int r);         // all labels in strings r+1..t
  void remove_string_tail(int r, int n);    // labels of s_i, i > n, inside string r

  // Move whose r-th segment is (n+1, max L_r + 1) in the current diagram.
  std::optional<Move> ascent_move(int r, int n) const;
  // Moves whose j-th segment is exactly (i, i).
  std::vector<Move> flat_segment_moves(int j, int i) const;

 private:
  Decomposition dec_;
  Diagram cur_;
};

// One schedule step: strips the labels above (r, n), applies the backwards
// ascent move delta(r,n) times (nullopt when the coordinate already
// vanishes), and strips the block's own labels.  Throws MoveNotFound when
// the coordinate is nonzero but the reduced diagram lost the move.
std::optional<SweepStep> algorithm_A(ReducedDiagramState& state, PointVec& delta, int r, int n);

struct SweepResult {
  SweepPath path;
  SweepTable table;
};

// Recursive sweepout: drives gamma to the distinguished axis point with
// (0, i_0) = C0(gamma) and every other coordinate zero; C0 is constant along
// the whole path.
SweepResult sweep4(const Decomposition& d, const PointVec& gamma);

// Variant preserving C1 = (j_max, i_min): clears every N coordinate outside
// C1's and then raises (0, i_0) by 3K.
SweepResult c1_escape(const Decomposition& d, const PointVec& gamma, long K);

// H_{ell+1}, H_ell, ..., H_{i_min+1}, each applied K+1 times; raises C1 by
// exactly K+1.
SweepPath coordinate_escape(const Decomposition& d, const PointVec& gamma, long K);

// Vertex-disjoint in-coset paths joining pairs with interleaved C-values
// (sweep legs glued by H-walks).
Ladder ladder_free_plane(const Decomposition& d, const PointVec& base,
                         const std::vector<std::pair<PointVec, PointVec>>& pairs);

// Escape ladder: from points of one coset with strictly increasing (j_i, i)
// coordinate, walk H_{ell+1} forward 2K+1 times each.
Ladder escape_ladder(const Decomposition& d, const std::vector<PointVec>& points, long K);

// n vertex-disjoint paths joining complementary-axis points with interleaved
// C0 values, built from sweepouts glued by the composite zero-segment move.
Ladder ladder_c0(const Decomposition& d, int n, const Window& w);

}  // namespace suq
