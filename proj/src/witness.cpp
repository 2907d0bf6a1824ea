#include "suq/witness.hpp"

#include <algorithm>
#include <cassert>
#include <cmath>
#include <sstream>

#include "suq/errors.hpp"

namespace suq {

bool SignCandidate::member(const FreePlane& plane, const PointVec& gamma) const {
  for (const PointVec& base : coset_bases)
    if (plane.same_coset(base, gamma)) return true;
  return false;
}

StateVector project(const FreePlane& plane, const SignCandidate& cand, const StateVector& v) {
  StateVector out;
  for (const auto& [p, a] : v.amp)
    if (cand.member(plane, p)) out.add(p, a);
  return out;
}

WitnessOperator witness_operator(const Diagram& g) {
  const Decomposition& d = g.dec();
  if (d.t() < 1) throw std::invalid_argument("witness operator needs a nonempty word");
  const CoordMap& map = g.map();
  const int t = d.t();
  const int r = d.string_at(t).hi;

  auto paths = enumerate_moves(g, r + 1, r);
  if (paths.size() != 1)
    throw MultiplePaths("entry (" + std::to_string(r + 1) + "," + std::to_string(r) + ") has " +
                        std::to_string(paths.size()) + " contributing paths");
  WitnessOperator wo;
  wo.r = r;
  wo.move = paths.front();
  wo.monomial = monomial_of(g, wo.move);
  const bool side = t >= 2 && d.string_at(t - 1).contains(r - 1);
  wo.has_side_factor = side;

  // Factor pattern check: q^N on (t,r); S-type shifts on (0,r-1)/(0,r); the
  // sqrt-weighted raise on (t-1, r-1) exactly when that block exists.
  std::size_t expected = 2;  // QDiagDown + ZPlus(0,r)
  if (r >= 2) ++expected;
  if (side) ++expected;
  bool ok = wo.monomial.factors.size() == expected;
  for (const Factor& f : wo.monomial.factors) {
    const Coord c = map.coord(f.coord);
    if (c.k == t && c.i == r)
      ok = ok && f.kind == FactorKind::QDiagDown;
    else if (c.k == 0 && c.i == r)
      ok = ok && f.kind == FactorKind::ZPlus;
    else if (c.k == 0 && c.i == r - 1)
      ok = ok && f.kind == FactorKind::ZMinus;
    else if (side && c.k == t - 1 && c.i == r - 1)
      ok = ok && f.kind == FactorKind::SqrtPlus;
    else
      ok = false;
  }
  if (!ok) throw std::logic_error("witness operator factor pattern mismatch");
  return wo;
}

namespace {

// Iterated application of a monomial to a basis vector; the state stays a
// single weighted basis vector throughout.
std::pair<double, PointVec> power_apply(const CoordMap& map, const Monomial& m,
                                        const PointVec& gamma, int reps, const Window& w) {
  double coeff = 1.0;
  PointVec cur = gamma;
  for (int k = 0; k < reps; ++k) {
    auto hit = m.apply_basis(map, cur, w.q);
    if (!hit) return {0.0, cur};
    coeff *= hit->first;
    cur = hit->second;
    if (!w.contains(map, cur))
      throw WindowOverflow("witness power walks outside the window; enlarge z_max/n_max");
  }
  return {coeff, cur};
}

}  // namespace

NoncompactnessResult noncompactness_sequence(const Diagram& g, const SignCandidate& cand,
                                             int count, const Window& w) {
  w.validate();
  const Decomposition& d = g.dec();
  const CoordMap& map = g.map();
  const FreePlane plane(d);
  const WitnessOperator wo = witness_operator(g);
  const int t = d.t();
  const int r = wo.r;
  const int f_tr = map.index_of(t, r);
  const int f_0r = map.index_of(0, r);
  const int f_0rm1 = map.index_of(0, r - 1);

  NoncompactnessResult res;
  for (const PointVec& base : cand.coset_bases)
    res.shift_bound = std::max(res.shift_bound, std::abs(base[f_tr] + base[f_0r]));
  const int reps = 2 * res.shift_bound + 1;
  const Monomial wm = w_monomial_of(g, wo.move);

  const std::uint64_t total = w.point_count(map);
  for (std::uint64_t idx = 0; idx < total && static_cast<int>(res.samples.size()) < count;
       ++idx) {
    const PointVec gamma = w.point_at(map, idx);
    if (gamma[f_tr] != 0) continue;
    if (!cand.member(plane, gamma)) continue;

    CommutatorSample s;
    s.gamma = gamma;
    const auto [wc, wend] = power_apply(map, wm, gamma, reps, w);
    const auto [tc, tend] = power_apply(map, wo.monomial, gamma, reps, w);
    // gamma lies in the union, so [P, X] e_gamma = (P - I) X e_gamma.
    s.w_norm = cand.member(plane, wend) ? 0.0 : std::abs(wc);
    s.t_norm = cand.member(plane, tend) ? 0.0 : std::abs(tc);
    s.endpoint_ok = wend == tend && wend[f_0r] == gamma[f_0r] + reps &&
                    (f_0rm1 < 0 || wend[f_0rm1] == gamma[f_0rm1] - reps) &&
                    wend[f_tr] == gamma[f_tr] && !cand.member(plane, wend);
    res.samples.push_back(std::move(s));
  }
  if (static_cast<int>(res.samples.size()) < count)
    throw WindowOverflow("window holds only " + std::to_string(res.samples.size()) +
                         " eligible points; asked for " + std::to_string(count));
  return res;
}

namespace {

bool strictly_increasing(const std::vector<ProbePoint>& curve) {
  for (std::size_t i = 1; i < curve.size(); ++i)
    if (curve[i].count <= curve[i - 1].count) return false;
  return curve.size() >= 2;
}

}  // namespace

VerdictReport verdict(const Decomposition& d, const Window& w, int count, ExecMode mode) {
  VerdictReport rep;
  try {
    axis_constants(d);
  } catch (const NoRepeatedGenerator&) {
    rep.degenerate = true;
    rep.ok = true;
    rep.degenerate_reason =
        "no generator repeats in the reduced word: the representation factors through an "
        "SU_q(2)-type block and nontrivial equivariant signs are not ruled out here";
    rep.findings.push_back("degenerate case: " + rep.degenerate_reason);
    return rep;
  }

  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const GrowthContext ctx = make_growth_context(d);

  std::vector<Window> windows;
  for (int s = std::max(2, w.n_max - 2); s <= w.n_max; ++s) {
    Window wi = w;
    wi.n_max = s;
    wi.z_max = s;
    windows.push_back(wi);
  }

  Partition by_c0{"sign of C0", [fn](const PointVec& p) { return fn.c0(p) > 0; }};
  Partition by_c1{"sign of C1", [fn](const PointVec& p) { return fn.c1(p) > 0; }};
  rep.c0_curve = sign_determining_probe(ctx, by_c0, windows, mode);
  rep.c1_curve = sign_determining_probe(ctx, by_c1, windows, mode);
  if (strictly_increasing(rep.c0_curve))
    rep.findings.push_back("C0 partition: disjoint-path count grows with the window");
  else
    rep.discrepancies.push_back("C0 partition: expected a strictly growing ladder count");
  if (strictly_increasing(rep.c1_curve))
    rep.findings.push_back("C1 partition: disjoint-path count grows with the window");
  else
    rep.discrepancies.push_back("C1 partition: expected a strictly growing ladder count");

  // Free-plane dichotomy on a structured sample of window points.
  {
    const FreePlane plane(d);
    const std::uint64_t total = w.point_count(map);
    const std::uint64_t stride = std::max<std::uint64_t>(1, total / 7);
    std::vector<PointVec> sample;
    for (std::uint64_t idx = 0; idx < total && sample.size() < 8; idx += stride)
      sample.push_back(w.point_at(map, idx));
    bool dichotomy = true;
    for (std::size_t a = 0; a < sample.size() && dichotomy; ++a)
      for (std::size_t b = a + 1; b < sample.size() && dichotomy; ++b) {
        const bool same = plane.same_coset(sample[a], sample[b]);
        for (std::uint64_t idx = 0; idx < total; ++idx) {
          const PointVec p = w.point_at(map, idx);
          const bool ina = plane.same_coset(sample[a], p);
          const bool inb = plane.same_coset(sample[b], p);
          if (same ? (ina != inb) : (ina && inb)) {
            dichotomy = false;
            break;
          }
        }
      }
    if (dichotomy)
      rep.findings.push_back("free planes through sampled points are equal or disjoint");
    else
      rep.discrepancies.push_back("free-plane cosets failed the equal-or-disjoint dichotomy");
  }

  {
    const SignCandidate cand{{map.zero()}, true};
    rep.witness = noncompactness_sequence(ctx.diagram, cand, count, w);
    bool unit = true, endpoints = true;
    for (const CommutatorSample& s : rep.witness.samples) {
      unit = unit && std::abs(s.w_norm - 1.0) <= 1e-12;
      endpoints = endpoints && s.endpoint_ok;
    }
    if (unit)
      rep.findings.push_back("commutator against the candidate sign keeps unit norm on " +
                             std::to_string(rep.witness.samples.size()) + " basis vectors");
    else
      rep.discrepancies.push_back("witness commutator norms decayed; compactness not refuted");
    if (endpoints)
      rep.findings.push_back("witness endpoints leave the coset union with the exact shifts");
    else
      rep.discrepancies.push_back("witness endpoint identities failed");
  }

  rep.ok = rep.discrepancies.empty();
  return rep;
}

}  // namespace suq
