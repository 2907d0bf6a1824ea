#include "suq/sweep.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "suq/errors.hpp"

namespace suq {

FreePlane::FreePlane(const Decomposition& d) : dec_(d), map_(d) {}

bool FreePlane::contains_direction(const PointVec& delta) const {
  for (int i = 1; i <= dec_.ell; ++i) {
    const int zf = map_.index_of(0, i);
    for (int j : dec_.gen_strings(i))
      if (delta[map_.index_of(j, i)] != -delta[zf]) return false;
  }
  return true;
}

bool FreePlane::same_coset(const PointVec& a, const PointVec& b) const {
  PointVec delta(map_.size());
  for (int f = 0; f < map_.size(); ++f) delta[f] = b[f] - a[f];
  return contains_direction(delta);
}

PointVec FreePlane::basis_direction(int i) const {
  PointVec delta = map_.zero();
  delta[map_.index_of(0, i)] = -1;
  for (int j : dec_.gen_strings(i)) delta[map_.index_of(j, i)] = 1;
  return delta;
}

int minimizer_j(const Decomposition& d, const CoordMap& map, const PointVec& gamma, int i) {
  const auto js = d.gen_strings(i);
  if (js.empty()) return 0;
  int best = js.front();
  for (int j : js)
    if (gamma[map.index_of(j, i)] < gamma[map.index_of(best, i)]) best = j;
  return best;
}

bool in_complementary_axis(const Decomposition& d, const CoordMap& map, const PointVec& gamma) {
  for (int i = 1; i <= d.ell; ++i) {
    const auto js = d.gen_strings(i);
    if (js.empty()) continue;
    bool zero = false;
    for (int j : js)
      if (gamma[map.index_of(j, i)] == 0) {
        zero = true;
        break;
      }
    if (!zero) return false;
  }
  return true;
}

long AxisFunctionals::c0(const PointVec& gamma) const {
  return gamma[map->index_of(ax.j_min, ax.i_min)] + gamma[map->index_of(0, ax.i_0)];
}

long AxisFunctionals::c1(const PointVec& gamma) const {
  return gamma[map->index_of(ax.j_max, ax.i_min)];
}

long AxisFunctionals::c_top(const PointVec& gamma) const {
  const int j = minimizer_j(*dec, *map, gamma, dec->ell);
  return gamma[map->index_of(j, dec->ell)];
}

AxisFunctionals axis_functionals(const Decomposition& d, const CoordMap& map) {
  AxisFunctionals f;
  f.dec = &d;
  f.map = &map;
  f.ax = axis_constants(d);
  return f;
}

namespace {

long top_coordinate(const Decomposition& d, const CoordMap& map, const PointVec& gamma) {
  const int j = minimizer_j(d, map, gamma, d.ell);
  return gamma[map.index_of(j, d.ell)];
}

}  // namespace

long SweepPath::unit_length() const {
  long n = 0;
  for (const SweepStep& s : steps) n += s.times < 0 ? -s.times : s.times;
  return n;
}

void SweepPath::append(const CoordMap& map, const Move& p, long times, std::string tag) {
  const PointVec& cur = end();
  PointVec next = apply_move(map, cur, p, times);
  steps.push_back(SweepStep{p, times, std::move(tag)});
  trace.push_back(std::move(next));
}

SweepPath make_path(const PointVec& start) {
  SweepPath p;
  p.start = start;
  return p;
}

std::string SweepTable::render() const {
  std::size_t width = 6;
  for (const auto& l : coord_labels) width = std::max(width, l.size() + 1);
  std::size_t head = std::string("coordinate").size();
  for (const auto& r : rows) head = std::max(head, r.label.size());

  std::ostringstream os;
  auto pad = [&](const std::string& s, std::size_t w) {
    std::string out(w > s.size() ? w - s.size() : 0, ' ');
    return out + s;
  };
  os << pad("coordinate", head);
  for (const auto& l : coord_labels) os << pad(l, width);
  os << "\n";
  for (const auto& r : rows) {
    os << pad(r.label, head);
    for (long v : r.values) {
      std::string cell;
      if (r.is_move)
        cell = v > 0 ? "+" + std::to_string(v) : std::to_string(v);
      else
        cell = std::to_string(v);
      os << pad(cell, width);
    }
    os << "\n";
  }
  return os.str();
}

namespace {

void table_header(SweepTable& t, const CoordMap& map) {
  for (int f = 0; f < map.size(); ++f) t.coord_labels.push_back(map.label(f));
}

void table_point_row(SweepTable& t, const std::string& label, const PointVec& p) {
  SweepTable::Row r;
  r.label = label;
  r.is_move = false;
  r.values.assign(p.begin(), p.end());
  t.rows.push_back(std::move(r));
}

void table_move_row(SweepTable& t, const std::string& label, const Move& p) {
  SweepTable::Row r;
  r.label = label;
  r.is_move = true;
  r.values.assign(p.m.begin(), p.m.end());
  t.rows.push_back(std::move(r));
}

std::vector<BlockRef> singleton_blocks(const Decomposition& d) {
  std::vector<BlockRef> out;
  for (int k = 1; k <= d.t(); ++k)
    for (int g = d.string_at(k).lo; g <= d.string_at(k).hi; ++g)
      if (d.gen_strings(g).size() == 1) out.push_back(BlockRef{k, g});
  return out;
}

}  // namespace

Move zero_segment_move(const Decomposition& d, int v) {
  std::vector<BlockRef> all;
  for (int k = 1; k <= d.t(); ++k)
    for (int g = d.string_at(k).lo; g <= d.string_at(k).hi; ++g) all.push_back(BlockRef{k, g});
  const Diagram stripped = Diagram::build(d, all);
  std::vector<Move> found;
  for (const Move& p : all_moves(stripped))
    if (p.seg[0] == std::make_pair(v, v)) found.push_back(p);
  if (found.empty())
    throw MoveNotFound("no label-free move ends at level " + std::to_string(v));
  if (found.size() > 1)
    throw NonUniqueI0("label-free diagram has several moves ending at level " + std::to_string(v));
  return found.front();
}

SweepPath sweep5(const Decomposition& d, const PointVec& base, const PointVec& start) {
  const FreePlane plane(d);
  const CoordMap& map = plane.map();
  if (!plane.same_coset(base, start))
    throw CosetMismatch("sweep start does not lie on the base point's free plane");
  const Diagram full = Diagram::build(d);
  SweepPath path = make_path(start);
  const long c_before = top_coordinate(d, map, start);
  for (int v = d.ell - 1; v >= 1; --v) {
    const PointVec& cur = path.end();
    const auto js = d.gen_strings(v);
    long times;
    if (!js.empty()) {
      const int jv = minimizer_j(d, map, cur, v);
      times = cur[map.index_of(jv, v)];
    } else {
      times = -cur[map.index_of(0, v)];
    }
    if (times == 0) continue;
    auto h = h_move(full, v);
    assert(h.has_value());
    path.append(map, *h, times, "H_" + std::to_string(v));
  }
  // The (j_ell, ell) coordinate never moves.
  for (const PointVec& p : path.trace)
    if (top_coordinate(d, map, p) != c_before)
      throw std::logic_error("sweep violated constancy of the top coordinate");
  for (int i = 1; i < d.ell; ++i) {
    const int j = minimizer_j(d, map, path.end(), i);
    if (path.end()[map.index_of(j, i)] != 0)
      throw std::logic_error("sweep failed to clear coordinate level " + std::to_string(i));
  }
  return path;
}

ReducedDiagramState::ReducedDiagramState(const Decomposition& d)
    : dec_(d), cur_(Diagram::build(d)) {}

void ReducedDiagramState::remove_block(int k, int gen) {
  if (!cur_.label_removed(k, gen)) cur_ = cur_.with_removed({BlockRef{k, gen}});
}

void ReducedDiagramState::remove_singleton_labels() {
  cur_ = cur_.with_removed(singleton_blocks(dec_));
}

void ReducedDiagramState::remove_strings_above(int r) {
  std::vector<BlockRef> more;
  for (int k = r + 1; k <= dec_.t(); ++k)
    for (int g = dec_.string_at(k).lo; g <= dec_.string_at(k).hi; ++g)
      more.push_back(BlockRef{k, g});
  if (!more.empty()) cur_ = cur_.with_removed(more);
}

void ReducedDiagramState::remove_string_tail(int r, int n) {
  std::vector<BlockRef> more;
  for (int g = n + 1; g <= dec_.string_at(r).hi; ++g) more.push_back(BlockRef{r, g});
  if (!more.empty()) cur_ = cur_.with_removed(more);
}

std::optional<Move> ReducedDiagramState::ascent_move(int r, int n) const {
  const auto want = std::make_pair(n + 1, dec_.string_at(r).hi + 1);
  std::vector<Move> found;
  for (const Move& p : all_moves(cur_))
    if (p.seg[r] == want) found.push_back(p);
  if (found.empty()) return std::nullopt;
  if (found.size() > 1)
    throw MoveNotFound("ascent move at (" + std::to_string(r) + "," + std::to_string(n) +
                       ") is not unique in the reduced diagram");
  return found.front();
}

std::vector<Move> ReducedDiagramState::flat_segment_moves(int j, int i) const {
  std::vector<Move> found;
  for (const Move& p : all_moves(cur_))
    if (p.seg[j] == std::make_pair(i, i)) found.push_back(p);
  return found;
}

std::optional<SweepStep> algorithm_A(ReducedDiagramState& state, PointVec& delta, int r, int n) {
  const CoordMap map(state.diagram().dec());
  state.remove_strings_above(r);
  state.remove_string_tail(r, n);
  const long count = delta[map.index_of(r, n)];
  std::optional<SweepStep> step;
  if (count != 0) {
    auto mv = state.ascent_move(r, n);
    if (!mv)
      throw MoveNotFound("reduced diagram lost the move needed to clear (" + std::to_string(r) +
                         "," + std::to_string(n) + ")");
    delta = apply_move(map, delta, *mv, -count);
    step = SweepStep{*mv, -count, {}};
  }
  state.remove_block(r, n);
  return step;
}

namespace {

// Shared driver for the two sweepout schedules: one algorithm-A step plus
// the table rows it produces.
void run_A(ReducedDiagramState& state, SweepPath& path, SweepTable& table, int r, int n,
           int& move_no, const CoordMap& map) {
  PointVec cur = path.end();
  auto step = algorithm_A(state, cur, r, n);
  if (!step) return;
  ++move_no;
  const std::string tag = "m_" + std::to_string(move_no);
  table_move_row(table, "move " + tag, step->move);
  path.append(map, step->move, step->times, tag);
  table_point_row(table, "gamma_" + std::to_string(move_no), path.end());
}

}  // namespace

SweepResult sweep4(const Decomposition& d, const PointVec& gamma) {
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const AxisConstants ax = fn.ax;
  const long c0_start = fn.c0(gamma);

  ReducedDiagramState state(d);
  state.remove_singleton_labels();
  SweepResult res;
  res.path = make_path(gamma);
  table_header(res.table, map);
  table_point_row(res.table, "gamma", gamma);
  int move_no = 0;

  for (int r = d.t(); r >= 1; --r) {
    for (int n = d.string_at(r).hi; n >= d.string_at(r).lo; --n) {
      if (r == ax.j_min && n == ax.i_min) {
        const long count = res.path.end()[map.index_of(r, n)];
        const auto cands = state.flat_segment_moves(ax.j_min, ax.i_min);
        if (cands.empty())
          throw MoveNotFound("no move with flat segment (i_min,i_min) in string j_min");
        if (cands.size() > 1) throw NonUniqueI0("distinguished flat-segment move is not unique");
        if (count != 0) {
          ++move_no;
          const std::string tag = "m_" + std::to_string(move_no);
          table_move_row(res.table, "move " + tag, cands.front());
          res.path.append(map, cands.front(), count, tag);
          table_point_row(res.table, "gamma_" + std::to_string(move_no), res.path.end());
        }
      } else {
        run_A(state, res.path, res.table, r, n, move_no, map);
      }
    }
  }

  // Clear the Z coordinates above i_0 pushing the residue upward, then those
  // below i_0 pushing it down to level 1.
  for (int i = ax.i_0 + 1; i <= d.ell; ++i) {
    const long count = res.path.end()[map.index_of(0, i)];
    if (count == 0) continue;
    const Move mv = zero_segment_move(d, i + 1);
    ++move_no;
    const std::string tag = "m_" + std::to_string(move_no);
    table_move_row(res.table, "move " + tag, mv);
    res.path.append(map, mv, count, tag);
    table_point_row(res.table, "gamma_" + std::to_string(move_no), res.path.end());
  }
  for (int i = ax.i_0 - 1; i >= 1; --i) {
    const long count = res.path.end()[map.index_of(0, i)];
    if (count == 0) continue;
    const Move mv = zero_segment_move(d, i);
    ++move_no;
    const std::string tag = "m_" + std::to_string(move_no);
    table_move_row(res.table, "move " + tag, mv);
    res.path.append(map, mv, -count, tag);
    table_point_row(res.table, "gamma_" + std::to_string(move_no), res.path.end());
  }

  for (const PointVec& p : res.path.trace)
    if (fn.c0(p) != c0_start) throw std::logic_error("sweepout changed C0 along the path");
  const PointVec& end = res.path.end();
  for (int f = 0; f < map.size(); ++f) {
    const Coord c = map.coord(f);
    const long want = (c.k == 0 && c.i == ax.i_0) ? c0_start : 0;
    if (end[f] != want) throw std::logic_error("sweepout missed the distinguished axis point");
  }
  return res;
}

SweepResult c1_escape(const Decomposition& d, const PointVec& gamma, long K) {
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const AxisConstants ax = fn.ax;
  const long c1_start = fn.c1(gamma);

  ReducedDiagramState state(d);
  state.remove_singleton_labels();
  SweepResult res;
  res.path = make_path(gamma);
  table_header(res.table, map);
  table_point_row(res.table, "gamma", gamma);
  int move_no = 0;

  for (int r = d.t(); r > ax.j_max; --r)
    for (int n = d.string_at(r).hi; n >= d.string_at(r).lo; --n)
      run_A(state, res.path, res.table, r, n, move_no, map);
  for (int n = d.string_at(ax.j_max).hi; n >= ax.i_min + 1; --n)
    run_A(state, res.path, res.table, ax.j_max, n, move_no, map);
  for (int r = ax.j_max - 1; r >= 1; --r)
    for (int n = d.string_at(r).hi; n >= d.string_at(r).lo; --n)
      run_A(state, res.path, res.table, r, n, move_no, map);

  if (K != 0) {
    const Move mv = zero_segment_move(d, ax.i_0);
    ++move_no;
    const std::string tag = "m_" + std::to_string(move_no);
    table_move_row(res.table, "move " + tag, mv);
    res.path.append(map, mv, 3 * K, tag);
    table_point_row(res.table, "gamma_" + std::to_string(move_no), res.path.end());
  }

  for (const PointVec& p : res.path.trace)
    if (fn.c1(p) != c1_start) throw std::logic_error("escape changed C1 along the path");
  return res;
}

SweepPath coordinate_escape(const Decomposition& d, const PointVec& gamma, long K) {
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const Diagram full = Diagram::build(d);
  SweepPath path = make_path(gamma);
  for (int v = d.ell + 1; v >= fn.ax.i_min + 1; --v) {
    auto h = h_move(full, v);
    assert(h.has_value());
    path.append(map, *h, K + 1, "H_" + std::to_string(v));
  }
  if (fn.c1(path.end()) - fn.c1(gamma) != K + 1)
    throw std::logic_error("coordinate escape failed to raise C1 by K+1");
  return path;
}

namespace {

int table_move_id(std::vector<Move>& table, const Move& p) {
  for (std::size_t i = 0; i < table.size(); ++i)
    if (table[i] == p) return static_cast<int>(i);
  table.push_back(p);
  return static_cast<int>(table.size()) - 1;
}

// Expands a sweep path into unit applications so ladder disjointness is
// checked on every visited lattice point.  Revisits (the glued walks may
// climb back through a swept line) are cut out by loop erasure, leaving a
// simple path over a subset of the walk's vertices.
LadderPath unit_steps(const CoordMap& map, const SweepPath& path, std::vector<Move>& table) {
  LadderPath out;
  PointVec cur = path.start;
  for (const SweepStep& s : path.steps) {
    const int id = table_move_id(table, s.move);
    const long reps = s.times < 0 ? -s.times : s.times;
    const long dir = s.times < 0 ? -1 : 1;
    for (long k = 0; k < reps; ++k) {
      out.steps.emplace_back(cur, id);
      cur = apply_move(map, cur, s.move, dir);
    }
  }
  out.steps.emplace_back(cur, -1);

  LadderPath simple;
  std::map<PointVec, std::size_t> seen;
  for (const auto& step : out.steps) {
    const auto it = seen.find(step.first);
    if (it != seen.end()) {
      while (simple.steps.size() > it->second + 1) {
        seen.erase(simple.steps.back().first);
        simple.steps.pop_back();
      }
      simple.steps.back().second = step.second;
      continue;
    }
    seen.emplace(step.first, simple.steps.size());
    simple.steps.push_back(step);
  }
  return simple;
}

void extend(SweepPath& dst, const CoordMap& map, const SweepPath& src, bool reversed) {
  if (!reversed) {
    for (const SweepStep& s : src.steps) dst.append(map, s.move, s.times, s.tag);
  } else {
    for (auto it = src.steps.rbegin(); it != src.steps.rend(); ++it)
      dst.append(map, it->move, -it->times, it->tag);
  }
}

}  // namespace

Ladder ladder_free_plane(const Decomposition& d, const PointVec& base,
                         const std::vector<std::pair<PointVec, PointVec>>& pairs) {
  const FreePlane plane(d);
  const CoordMap& map = plane.map();
  const Diagram full = Diagram::build(d);
  Ladder ladder;
  for (const auto& [gamma_n, delta_n] : pairs) {
    if (!plane.same_coset(base, gamma_n) || !plane.same_coset(base, delta_n))
      throw CosetMismatch("ladder pair leaves the base free plane");
    const SweepPath pa = sweep5(d, base, gamma_n);
    const SweepPath pb = sweep5(d, base, delta_n);
    const long ca = top_coordinate(d, map, pa.end());
    const long cb = top_coordinate(d, map, pb.end());

    SweepPath full_path = make_path(gamma_n);
    extend(full_path, map, pa, false);
    const long diff = cb - ca;
    if (diff != 0) {
      // Climb from the lower end: H_1^{-D}, ..., H_ell^{-D} raises the top
      // coordinate by D while passing the bump up one level at a time; the
      // mirrored order walks downhill.
      if (diff > 0) {
        for (int v = 1; v <= d.ell; ++v) full_path.append(map, *h_move(full, v), -diff, "H");
      } else {
        for (int v = d.ell; v >= 1; --v) full_path.append(map, *h_move(full, v), -diff, "H");
      }
    }
    extend(full_path, map, pb, true);
    if (full_path.end() != delta_n) throw std::logic_error("free-plane ladder missed its target");
    ladder.paths.push_back(unit_steps(map, full_path, ladder.move_table));
  }
  return ladder;
}

Ladder escape_ladder(const Decomposition& d, const std::vector<PointVec>& points, long K) {
  const CoordMap map(d);
  const Diagram full = Diagram::build(d);
  const auto h = h_move(full, d.ell + 1);
  assert(h.has_value());
  Ladder ladder;
  for (const PointVec& p : points) {
    SweepPath path = make_path(p);
    path.append(map, *h, 2 * K + 1, "H_top");
    ladder.paths.push_back(unit_steps(map, path, ladder.move_table));
  }
  return ladder;
}

Ladder ladder_c0(const Decomposition& d, int n, const Window& w) {
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const AxisConstants ax = fn.ax;
  if (w.z_max < 2 * n || w.n_max < 1)
    throw WindowOverflow("C0 ladder with " + std::to_string(n) + " rungs needs z_max >= " +
                         std::to_string(2 * n) + " and n_max >= 1");
  Ladder ladder;
  for (int k = 1; k <= n; ++k) {
    PointVec gamma_k = map.zero();
    gamma_k[map.index_of(ax.j_min, ax.i_min)] = 1;
    gamma_k[map.index_of(0, ax.i_0)] = 2 * k - 2;  // C0 = 2k-1
    SweepResult swept = sweep4(d, gamma_k);
    SweepPath path = swept.path;
    // Composite join: the zero-segment moves at i_0, ..., 1 telescope to a
    // unit increment of (0, i_0).
    for (int i = ax.i_0; i >= 1; --i) path.append(map, zero_segment_move(d, i), 1, "join");
    PointVec target = map.zero();
    target[map.index_of(0, ax.i_0)] = 2 * k;
    if (path.end() != target) throw std::logic_error("C0 ladder rung missed its target");
    for (const PointVec& p : path.trace)
      if (!w.contains(map, p))
        throw WindowOverflow("C0 ladder rung leaves the window; enlarge z_max");
    ladder.paths.push_back(unit_steps(map, path, ladder.move_table));
  }
  return ladder;
}

}  // namespace suq
