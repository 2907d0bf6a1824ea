#include "suq/operators.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <stdexcept>

#include "suq/errors.hpp"

namespace suq {

namespace {

double qpow(double q, int n) {
  double v = 1.0;
  for (int i = 0; i < n; ++i) v *= q;
  return v;
}

}  // namespace

int factor_shift(FactorKind k) {
  switch (k) {
    case FactorKind::SqrtMinus:
    case FactorKind::BareMinus:
    case FactorKind::ZMinus:
      return -1;
    case FactorKind::SqrtPlus:
    case FactorKind::BarePlus:
    case FactorKind::ZPlus:
      return +1;
    default:
      return 0;
  }
}

FactorKind factor_adjoint(FactorKind k) {
  switch (k) {
    case FactorKind::SqrtMinus: return FactorKind::SqrtPlus;
    case FactorKind::SqrtPlus: return FactorKind::SqrtMinus;
    case FactorKind::BareMinus: return FactorKind::BarePlus;
    case FactorKind::BarePlus: return FactorKind::BareMinus;
    case FactorKind::ZMinus: return FactorKind::ZPlus;
    case FactorKind::ZPlus: return FactorKind::ZMinus;
    default: return k;  // diagonal q factors are self-adjoint
  }
}

std::optional<std::pair<double, PointVec>> Monomial::apply_basis(const CoordMap& map,
                                                                 const PointVec& gamma,
                                                                 double q) const {
  const double c = coeff(gamma, q);
  if (c == 0.0) return std::nullopt;
  PointVec target = gamma;
  for (int f = 0; f < map.size(); ++f) target[f] += delta[f];
  return std::make_pair(c, std::move(target));
}

double Monomial::coeff(const PointVec& gamma, double q) const {
  double c = 1.0;
  for (const Factor& f : factors) {
    const int n = gamma[f.coord];
    switch (f.kind) {
      case FactorKind::SqrtMinus:
        if (n == 0) return 0.0;
        c *= std::sqrt(1.0 - qpow(q, 2 * n));
        break;
      case FactorKind::SqrtPlus:
        c *= std::sqrt(1.0 - qpow(q, 2 * n + 2));
        break;
      case FactorKind::QDiagUp:
        c *= -qpow(q, n + 1);
        break;
      case FactorKind::QDiagDown:
        c *= qpow(q, n);
        break;
      case FactorKind::BareMinus:
        if (n == 0) return 0.0;
        break;
      case FactorKind::BarePlus:
      case FactorKind::ZMinus:
      case FactorKind::ZPlus:
        break;
    }
  }
  return c;
}

namespace {

Monomial monomial_impl(const Diagram& g, const Move& p, bool bare) {
  Monomial m;
  m.delta = g.map().zero();
  for (int c = 0; c < g.columns(); ++c) {
    const DiagramColumn& col = g.column(c);
    FactorKind kind;
    switch (p.edges[c]) {
      case EdgeKind::Identity: continue;
      case EdgeKind::MinusHoriz: kind = bare ? FactorKind::BareMinus : FactorKind::SqrtMinus; break;
      case EdgeKind::PlusHoriz: kind = bare ? FactorKind::BarePlus : FactorKind::SqrtPlus; break;
      case EdgeKind::UpDiag: kind = FactorKind::QDiagUp; break;
      case EdgeKind::DownDiag: kind = FactorKind::QDiagDown; break;
      case EdgeKind::PlusZ: kind = FactorKind::ZPlus; break;
      case EdgeKind::MinusZ: kind = FactorKind::ZMinus; break;
      default: continue;
    }
    m.factors.push_back(Factor{col.coord, kind});
    m.delta[col.coord] += factor_shift(kind);
  }
  assert(m.delta == p.m && "edge factors must reproduce the segment prescription");
  return m;
}

}  // namespace

Monomial monomial_of(const Diagram& g, const Move& p) { return monomial_impl(g, p, false); }
Monomial w_monomial_of(const Diagram& g, const Move& p) { return monomial_impl(g, p, true); }

Monomial adjoint(const CoordMap& map, const Monomial& m) {
  Monomial a;
  a.delta = map.zero();
  for (int f = 0; f < map.size(); ++f) a.delta[f] = -m.delta[f];
  a.factors.reserve(m.factors.size());
  for (auto it = m.factors.rbegin(); it != m.factors.rend(); ++it)
    a.factors.push_back(Factor{it->coord, factor_adjoint(it->kind)});
  return a;
}

OperatorSum entry_operator(const Diagram& g, int i, int j) {
  OperatorSum op;
  for (const Move& p : enumerate_moves(g, i, j)) op.terms.push_back(monomial_of(g, p));
  return op;
}

OperatorSum adjoint(const CoordMap& map, const OperatorSum& op) {
  OperatorSum a;
  a.terms.reserve(op.terms.size());
  for (const Monomial& m : op.terms) a.terms.push_back(adjoint(map, m));
  return a;
}

double StateVector::norm() const {
  double s = 0.0;
  for (const auto& [p, a] : amp) s += std::norm(a);
  return std::sqrt(s);
}

void StateVector::add(const PointVec& p, Amplitude a) {
  auto [it, fresh] = amp.emplace(p, a);
  if (!fresh) it->second += a;
}

StateVector basis_state(const PointVec& gamma) {
  StateVector v;
  v.amp.emplace(gamma, Amplitude{1.0, 0.0});
  return v;
}

StateVector apply(const CoordMap& map, const Monomial& m, const StateVector& v, const Window& w,
                  BoundaryLoss* loss) {
  StateVector out;
  for (const auto& [p, a] : v.amp) {
    auto hit = m.apply_basis(map, p, w.q);
    if (!hit) continue;
    const auto& [c, target] = *hit;
    if (!w.contains(map, target)) {
      if (loss) {
        loss->escaped.push_back(target);
        loss->lost_mass += std::norm(a * c);
      }
      continue;
    }
    out.add(target, a * c);
  }
  return out;
}

StateVector apply(const CoordMap& map, const OperatorSum& op, const StateVector& v,
                  const Window& w, BoundaryLoss* loss) {
  StateVector out;
  for (const Monomial& m : op.terms)
    for (const auto& [p, a] : v.amp) {
      auto hit = m.apply_basis(map, p, w.q);
      if (!hit) continue;
      const auto& [c, target] = *hit;
      if (!w.contains(map, target)) {
        if (loss) {
          loss->escaped.push_back(target);
          loss->lost_mass += std::norm(a * c);
        }
        continue;
      }
      out.add(target, a * c);
    }
  if (loss) {
    std::sort(loss->escaped.begin(), loss->escaped.end());
    loss->escaped.erase(std::unique(loss->escaped.begin(), loss->escaped.end()),
                        loss->escaped.end());
  }
  return out;
}

namespace {

double defect_norm(const StateVector& acc, const PointVec& gamma, bool subtract_identity) {
  double s = 0.0;
  bool seen = false;
  for (const auto& [p, a] : acc.amp) {
    Amplitude v = a;
    if (subtract_identity && p == gamma) {
      v -= 1.0;
      seen = true;
    }
    s += std::norm(v);
  }
  if (subtract_identity && !seen) s += 1.0;
  return std::sqrt(s);
}

struct EntryTable {
  std::vector<std::vector<OperatorSum>> op;   // [i-1][k-1]
  std::vector<std::vector<OperatorSum>> adj;  // [i-1][k-1]

  explicit EntryTable(const Diagram& g) {
    const int n = g.levels();
    op.assign(n, std::vector<OperatorSum>(n));
    adj.assign(n, std::vector<OperatorSum>(n));
    for (int i = 1; i <= n; ++i)
      for (int k = 1; k <= n; ++k) {
        op[i - 1][k - 1] = entry_operator(g, i, k);
        adj[i - 1][k - 1] = adjoint(g.map(), op[i - 1][k - 1]);
      }
  }
};

UnitarityDefect defect_with_table(const Diagram& g, const EntryTable& tab, int i, int j,
                                  const PointVec& gamma, const Window& w) {
  const CoordMap& map = g.map();
  const int n = g.levels();
  const StateVector e = basis_state(gamma);
  StateVector row, col;
  for (int k = 1; k <= n; ++k) {
    StateVector t = apply(map, tab.adj[j - 1][k - 1], e, w);
    t = apply(map, tab.op[i - 1][k - 1], t, w);
    for (const auto& [p, a] : t.amp) row.add(p, a);
    StateVector u = apply(map, tab.op[k - 1][j - 1], e, w);
    u = apply(map, tab.adj[k - 1][i - 1], u, w);
    for (const auto& [p, a] : u.amp) col.add(p, a);
  }
  const bool diag = (i == j);
  return UnitarityDefect{defect_norm(row, gamma, diag), defect_norm(col, gamma, diag)};
}

}  // namespace

UnitarityDefect unitarity_defect(const Diagram& g, int i, int j, const PointVec& gamma,
                                 const Window& w) {
  w.validate();
  if (!w.interior(g.map(), gamma))
    throw NotInterior("unitarity defect needs a window-interior point");
  const EntryTable tab(g);
  return defect_with_table(g, tab, i, j, gamma, w);
}

ScanResult unitarity_scan(const Diagram& g, const Window& w, ExecMode mode) {
  w.validate();
  const CoordMap& map = g.map();
  const EntryTable tab(g);
  const std::uint64_t total = w.point_count(map);
  const int n = g.levels();

  const double worst = max_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (!w.interior(map, gamma)) return 0.0;
    double local = 0.0;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const UnitarityDefect d = defect_with_table(g, tab, i, j, gamma, w);
        if (d.max() > local) local = d.max();
      }
    return local;
  });

  // Second pass pins the arg-max deterministically (first index attaining it).
  ScanResult res;
  res.max_defect = worst;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (!w.interior(map, gamma)) continue;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) {
        const UnitarityDefect d = defect_with_table(g, tab, i, j, gamma, w);
        if (d.max() >= worst) {
          res.argmax = gamma;
          res.i = i;
          res.j = j;
          return res;
        }
      }
  }
  return res;
}

bool mp_uniqueness(const Diagram& g, const Move& p, const Window& w, ExecMode mode) {
  w.validate();
  const CoordMap& map = g.map();
  const Monomial wp = w_monomial_of(g, p);
  // The image shift of W_p is the same for every basis vector; the scan
  // checks it against the prescription wherever the coefficient survives.
  const bool delta_matches = (wp.delta == p.m);
  std::vector<int> kill;
  for (const Factor& f : wp.factors)
    if (f.kind == FactorKind::BareMinus) kill.push_back(f.coord);

  const std::uint64_t total = w.point_count(map);
  const std::uint64_t bad = count_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (!w.interior(map, gamma)) return false;
    for (int f : kill)
      if (gamma[f] == 0) return false;  // annihilated: nothing to check
    return !delta_matches;
  });
  if (bad > 0) return false;
  // Some interior point must realize a nonzero matrix element.
  const std::uint64_t nonzero = count_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (!w.interior(map, gamma)) return false;
    for (int f : kill)
      if (gamma[f] == 0) return false;
    return true;
  });
  return nonzero > 0;
}

MpSuiteResult mp_uniqueness_suite(const Diagram& g, const std::vector<Move>& moves,
                                  const Window& w, ExecMode mode) {
  w.validate();
  const CoordMap& map = g.map();
  std::vector<char> delta_ok(moves.size(), 1);
  std::vector<std::vector<int>> kills(moves.size());
  for (std::size_t m = 0; m < moves.size(); ++m) {
    const Monomial wp = w_monomial_of(g, moves[m]);
    delta_ok[m] = (wp.delta == moves[m].m) ? 1 : 0;
    for (const Factor& f : wp.factors)
      if (f.kind == FactorKind::BareMinus) kills[m].push_back(f.coord);
  }
  const std::uint64_t total = w.point_count(map);
  // A (gamma, move) pair violates uniqueness when the matrix element survives
  // but the image shift disagrees with the prescription.
  const std::uint64_t violations = count_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (!w.interior(map, gamma)) return false;
    for (std::size_t m = 0; m < moves.size(); ++m) {
      bool alive = true;
      for (int f : kills[m])
        if (gamma[f] == 0) {
          alive = false;
          break;
        }
      if (alive && !delta_ok[m]) return true;
    }
    return false;
  });
  // Witness points where every move acts with a nonzero coefficient.
  const std::uint64_t all_alive = count_over(total, mode, [&](std::uint64_t idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (!w.interior(map, gamma)) return false;
    for (int f = 0; f < map.nat_count(); ++f)
      if (gamma[f] == 0) return false;
    return true;
  });

  MpSuiteResult res;
  res.ok = (violations == 0) && (all_alive > 0);
  res.violations = violations;
  res.witness_points = all_alive;
  if (!res.ok)
    for (std::size_t m = 0; m < moves.size(); ++m)
      if (!delta_ok[m]) res.failed_moves.push_back(static_cast<int>(m));
  return res;
}

StateVector phase_average(const CoordMap& map, const OperatorSum& op, int coord,
                          const StateVector& v, const Window& w) {
  StateVector out;
  for (int k = 0; k < 3; ++k) {
    const double angle = 2.0 * M_PI * k / 3.0;
    const Amplitude z = std::polar(1.0, angle);
    StateVector twisted;
    for (const auto& [p, a] : v.amp) twisted.add(p, a * std::pow(std::conj(z), p[coord]));
    StateVector moved = apply(map, op, twisted, w);
    for (const auto& [p, a] : moved.amp) out.add(p, a * std::pow(z, p[coord]) / 3.0);
  }
  return out;
}

StateVector phase_twist(const CoordMap& map, const std::vector<Amplitude>& z,
                        const StateVector& v) {
  StateVector out;
  const int nat = map.nat_count();
  for (const auto& [p, a] : v.amp) {
    Amplitude phase{1.0, 0.0};
    for (std::size_t i = 0; i < z.size(); ++i)
      phase *= std::pow(z[i], p[nat + static_cast<int>(i)]);
    out.add(p, a * phase);
  }
  return out;
}

}  // namespace suq
