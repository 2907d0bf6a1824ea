#include "suq/diagram.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>
#include <stdexcept>

#include "suq/errors.hpp"

namespace suq {

Diagram Diagram::build(const Decomposition& d, const std::vector<BlockRef>& removed) {
  Diagram g;
  g.dec_ = d;
  g.map_ = CoordMap(d);
  for (int k = d.t(); k >= 1; --k) {
    const Interval& s = d.string_at(k);
    for (int gen = s.lo; gen <= s.hi; ++gen) {
      DiagramColumn c;
      c.k = k;
      c.gen = gen;
      c.coord = g.map_.index_of(k, gen);
      g.cols_.push_back(c);
    }
  }
  g.nat_cols_ = static_cast<int>(g.cols_.size());
  for (int r = 1; r <= d.ell; ++r) {
    DiagramColumn c;
    c.k = 0;
    c.gen = r;
    c.zpart = true;
    c.coord = g.map_.index_of(0, r);
    g.cols_.push_back(c);
  }
  for (const BlockRef& b : removed) {
    if (b.k < 1 || b.k > d.t() || !d.string_at(b.k).contains(b.gen))
      throw ParseError("unknown labelled edge: string " + std::to_string(b.k) + ", s" +
                       std::to_string(b.gen));
    g.removed_.insert(b);
  }
  return g;
}

Diagram Diagram::with_removed(const std::vector<BlockRef>& more) const {
  Diagram g = *this;
  for (const BlockRef& b : more) {
    if (b.k < 1 || b.k > dec_.t() || !dec_.string_at(b.k).contains(b.gen))
      throw ParseError("unknown labelled edge: string " + std::to_string(b.k) + ", s" +
                       std::to_string(b.gen));
    g.removed_.insert(b);
  }
  return g;
}

void Diagram::edges_from(int c, int level, std::vector<std::pair<EdgeKind, int>>& out) const {
  out.clear();
  const DiagramColumn& col = cols_[c];
  if (col.zpart) {
    if (level == col.gen)
      out.emplace_back(EdgeKind::PlusZ, level);
    else if (level == col.gen + 1)
      out.emplace_back(EdgeKind::MinusZ, level);
    else
      out.emplace_back(EdgeKind::Identity, level);
    return;
  }
  const bool labels = !label_removed(col.k, col.gen);
  if (level == col.gen) {
    if (labels) out.emplace_back(EdgeKind::MinusHoriz, level);
    out.emplace_back(EdgeKind::UpDiag, level + 1);
  } else if (level == col.gen + 1) {
    if (labels) out.emplace_back(EdgeKind::PlusHoriz, level);
    out.emplace_back(EdgeKind::DownDiag, level - 1);
  } else {
    out.emplace_back(EdgeKind::Identity, level);
  }
}

PointVec move_vector_from_segments(const Diagram& g,
                                   const std::vector<std::pair<int, int>>& seg) {
  const Decomposition& d = g.dec();
  const CoordMap& map = g.map();
  PointVec m = map.zero();
  for (int k = 1; k <= d.t(); ++k) {
    const auto [ik, jk] = seg[k];
    if (jk >= ik) {
      if (d.string_at(k).contains(jk)) m[map.index_of(k, jk)] -= 1;
      if (d.string_at(k).contains(ik - 1)) m[map.index_of(k, ik - 1)] += 1;
    }
  }
  const int i0 = seg[0].first;
  if (i0 <= d.ell) m[map.index_of(0, i0)] += 1;
  if (i0 >= 2) m[map.index_of(0, i0 - 1)] -= 1;
  return m;
}

namespace {

Move finish_move(const Diagram& g, int from, const std::vector<EdgeKind>& edges,
                 const std::vector<int>& levels) {
  const Decomposition& d = g.dec();
  Move p;
  p.from = from;
  p.to = levels.back();
  p.edges = edges;
  p.seg.assign(d.t() + 1, {0, 0});
  int c = 0;
  for (int k = d.t(); k >= 1; --k) {
    const int width = d.string_at(k).size();
    p.seg[k] = {levels[c], levels[c + width]};
    c += width;
  }
  p.seg[0] = {levels[c], p.to};
  assert(levels[c] == p.to);
  p.m = move_vector_from_segments(g, p.seg);
  for (int k = 1; k <= d.t(); ++k) {
    const auto [ik, jk] = p.seg[k];
    if (ik < jk)
      for (int s = ik; s < jk; ++s) p.diag.push_back(g.map().index_of(k, s));
    else if (jk == ik - 1)
      p.diag.push_back(g.map().index_of(k, jk));
  }
  std::sort(p.diag.begin(), p.diag.end());
  for (EdgeKind e : edges)
    if (e == EdgeKind::UpDiag) ++p.up_edges;
  return p;
}

void dfs_moves(const Diagram& g, int c, std::vector<EdgeKind>& edges, std::vector<int>& levels,
               int target, std::vector<Move>& out) {
  if (c == g.columns()) {
    if (target == 0 || levels.back() == target)
      out.push_back(finish_move(g, levels.front(), edges, levels));
    return;
  }
  std::vector<std::pair<EdgeKind, int>> next;
  g.edges_from(c, levels.back(), next);
  for (const auto& [kind, lvl] : next) {
    edges.push_back(kind);
    levels.push_back(lvl);
    dfs_moves(g, c + 1, edges, levels, target, out);
    levels.pop_back();
    edges.pop_back();
  }
}

}  // namespace

std::vector<Move> enumerate_moves(const Diagram& g, int i, int j) {
  if (i < 1 || i > g.levels() || j < 1 || j > g.levels())
    throw std::invalid_argument("node level out of range");
  std::vector<Move> out;
  std::vector<EdgeKind> edges;
  std::vector<int> levels{i};
  dfs_moves(g, 0, edges, levels, j, out);
  return out;
}

std::vector<Move> all_moves(const Diagram& g) {
  std::vector<Move> out;
  for (int i = 1; i <= g.levels(); ++i) {
    std::vector<EdgeKind> edges;
    std::vector<int> levels{i};
    dfs_moves(g, 0, edges, levels, 0, out);
  }
  return out;
}

std::optional<Move> h_move(const Diagram& g, int r) {
  if (r < 1 || r > g.levels()) throw std::invalid_argument("H_r level out of range");
  std::vector<EdgeKind> edges;
  std::vector<int> levels{r};
  for (int c = 0; c < g.columns(); ++c) {
    const DiagramColumn& col = g.column(c);
    EdgeKind e = EdgeKind::Identity;
    if (col.zpart) {
      if (r == col.gen) e = EdgeKind::PlusZ;
      if (r == col.gen + 1) e = EdgeKind::MinusZ;
    } else if (r == col.gen) {
      if (g.label_removed(col.k, col.gen)) return std::nullopt;
      e = EdgeKind::MinusHoriz;
    } else if (r == col.gen + 1) {
      if (g.label_removed(col.k, col.gen)) return std::nullopt;
      e = EdgeKind::PlusHoriz;
    }
    edges.push_back(e);
    levels.push_back(r);
  }
  return finish_move(g, r, edges, levels);
}

long c_weight(const Move& p, const PointVec& gamma) {
  long w = 0;
  for (int f : p.diag) w += gamma[f];
  return w;
}

PointVec apply_move(const CoordMap& map, const PointVec& gamma, const Move& p, long times) {
  PointVec out = gamma;
  for (int f = 0; f < map.size(); ++f) out[f] += static_cast<int>(times) * p.m[f];
  if (!map.in_gamma(out))
    throw NegativeNCoordinate("move application leaves Gamma (negative N coordinate)");
  return out;
}

std::optional<MovetempWitness> movetemp_witness(const Diagram& g, const Move& p, const Move& q) {
  if (p == q) throw MovesEqual("movetemp witness needs two distinct moves");
  const Decomposition& d = g.dec();
  for (int k = d.t(); k >= 1; --k) {
    const Interval& s = d.string_at(k);
    for (int i = s.lo; i <= s.hi; ++i) {
      const int f = g.map().index_of(k, i);
      if (p.m[f] != q.m[f]) return MovetempWitness{k, i, p.m[f], q.m[f]};
    }
  }
  return std::nullopt;
}

namespace {

void tuples_rec(const Decomposition& d, int k, int entry, std::vector<std::pair<int, int>>& seg,
                int target, std::vector<std::vector<std::pair<int, int>>>& out) {
  if (k == 0) {
    seg[0] = {entry, entry};
    if (entry == target) out.push_back(seg);
    return;
  }
  const Interval& s = d.string_at(k);
  // Flat segment.
  seg[k] = {entry, entry};
  tuples_rec(d, k - 1, entry, seg, target, out);
  // One-step descent, permitted when the block below exists in this string.
  if (s.contains(entry - 1)) {
    seg[k] = {entry, entry - 1};
    tuples_rec(d, k - 1, entry - 1, seg, target, out);
  }
  // Ascents through consecutive blocks of the string.
  for (int j = entry + 1; j <= d.ell + 1; ++j) {
    if (!s.contains(j - 1)) break;
    seg[k] = {entry, j};
    tuples_rec(d, k - 1, j, seg, target, out);
  }
}

}  // namespace

std::vector<std::vector<std::pair<int, int>>> enumerate_segment_tuples(const Decomposition& d,
                                                                       int i, int j) {
  std::vector<std::vector<std::pair<int, int>>> out;
  std::vector<std::pair<int, int>> seg(d.t() + 1);
  tuples_rec(d, d.t(), i, seg, j, out);
  return out;
}

int derive_i0(const Decomposition& d) {
  const RepeatedGenerator rg = repeated_generator(d);
  std::vector<BlockRef> removed;
  for (int k = 1; k <= d.t(); ++k) {
    const Interval& s = d.string_at(k);
    for (int gen = s.lo; gen <= s.hi; ++gen)
      if (d.gen_strings(gen).size() == 1) removed.push_back(BlockRef{k, gen});
  }
  const Diagram g = Diagram::build(d, removed);
  std::optional<int> i0;
  for (const Move& p : all_moves(g)) {
    if (p.seg[rg.j_min] != std::make_pair(rg.i_min, rg.i_min)) continue;
    const int end = p.seg[0].first;
    if (!i0) {
      i0 = end;
    } else if (*i0 != end) {
      throw NonUniqueI0("moves with segment (i_min,i_min) in string j_min end at levels " +
                        std::to_string(*i0) + " and " + std::to_string(end));
    }
  }
  if (!i0)
    throw MoveNotFound("no move with segment (i_min,i_min) in string j_min survives reduction");
  if (*i0 > rg.i_min)
    throw NonUniqueI0("derived 0th segment lies above i_min");
  return *i0;
}

AxisConstants axis_constants(const Decomposition& d) {
  const RepeatedGenerator rg = repeated_generator(d);
  return AxisConstants{rg.i_min, rg.j_min, rg.j_max, derive_i0(d)};
}

std::string render_ascii(const Diagram& g) {
  const int levels = g.levels();
  const int width = 7;
  std::ostringstream os;
  os << "      ";
  for (int c = 0; c < g.columns(); ++c) {
    const DiagramColumn& col = g.column(c);
    std::string cap = col.zpart ? "z" + std::to_string(col.gen)
                                : "s" + std::to_string(col.gen) + "[" + std::to_string(col.k) + "]";
    cap.resize(width, ' ');
    os << " " << cap;
  }
  os << "\n";
  for (int v = levels; v >= 1; --v) {
    os << (v < 10 ? " " : "") << v << "  ";
    for (int c = 0; c < g.columns(); ++c) {
      const DiagramColumn& col = g.column(c);
      const char node = col.zpart ? 'o' : '*';
      std::string cell(width, '-');
      if (!col.zpart && !g.label_removed(col.k, col.gen)) {
        if (v == col.gen) cell[3] = '-', cell[2] = ' ', cell[4] = ' ';
        if (v == col.gen + 1) cell[3] = '+', cell[2] = ' ', cell[4] = ' ';
      } else if (!col.zpart) {
        if (v == col.gen || v == col.gen + 1) cell.assign(width, ' ');  // label removed
      }
      if (col.zpart) {
        if (v == col.gen) cell[3] = '+', cell[2] = ' ', cell[4] = ' ';
        if (v == col.gen + 1) cell[3] = '-', cell[2] = ' ', cell[4] = ' ';
      }
      os << node << cell;
    }
    const char last = g.columns() > 0 ? (g.column(g.columns() - 1).zpart ? 'o' : '*') : ' ';
    os << last << "  " << v << "\n";
    if (v > 1) {
      os << "    ";
      for (int c = 0; c < g.columns(); ++c) {
        const DiagramColumn& col = g.column(c);
        std::string cell(width + 1, ' ');
        if (!col.zpart && col.gen == v - 1) {
          cell[2] = '/';
          cell[5] = '\\';
        }
        os << cell;
      }
      os << "\n";
    }
  }
  return os.str();
}

}  // namespace suq
