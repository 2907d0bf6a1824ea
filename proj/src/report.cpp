#include "suq/report.hpp"

namespace suq {

Json decomposition_json(const Decomposition& d) {
  Json strings = Json::array();
  for (int k = d.t(); k >= 1; --k) {
    Json s = Json::array();
    for (int i = d.string_at(k).lo; i <= d.string_at(k).hi; ++i) s.push_back(i);
    strings.push_back(std::move(s));
  }
  return Json{{"ell", d.ell}, {"strings", std::move(strings)}};
}

Json axis_json(const AxisConstants& ax, int t) {
  return Json{{"t", t},
              {"i_min", ax.i_min},
              {"j_min", ax.j_min},
              {"j_max", ax.j_max},
              {"i_0", ax.i_0}};
}

Json point_json(const CoordMap& map, const PointVec& p) {
  Json out = Json::array();
  for (int f = 0; f < map.size(); ++f)
    if (p[f] != 0) out.push_back(Json::array({map.coord(f).k, map.coord(f).i, p[f]}));
  return out;
}

Json move_json(const Diagram& g, const Move& p) {
  Json segs = Json::array();
  for (int k = static_cast<int>(p.seg.size()) - 1; k >= 0; --k)
    segs.push_back(Json::array({p.seg[k].first, p.seg[k].second}));
  Json diag = Json::array();
  for (int f : p.diag) diag.push_back(Json::array({g.map().coord(f).k, g.map().coord(f).i}));
  return Json{{"from", p.from},
              {"to", p.to},
              {"segments", std::move(segs)},
              {"m", point_json(g.map(), p.m)},
              {"diagonals", std::move(diag)}};
}

Json ladder_json(const CoordMap& map, const Ladder& l) {
  Json paths = Json::array();
  for (const LadderPath& path : l.paths) {
    Json steps = Json::array();
    for (const auto& [pt, mid] : path.steps)
      steps.push_back(Json{{"point", point_json(map, pt)}, {"move", mid}});
    paths.push_back(std::move(steps));
  }
  return Json{{"paths", std::move(paths)}, {"disjoint", vertex_disjoint(l)}};
}

Json table_json(const SweepTable& t) {
  Json rows = Json::array();
  for (const auto& r : t.rows)
    rows.push_back(Json{{"label", r.label}, {"move", r.is_move}, {"values", r.values}});
  return Json{{"coordinates", t.coord_labels}, {"rows", std::move(rows)}};
}

Json curve_json(const std::vector<ProbePoint>& curve) {
  Json out = Json::array();
  for (const ProbePoint& p : curve)
    out.push_back(Json{{"n_max", p.window.n_max}, {"z_max", p.window.z_max}, {"count", p.count}});
  return out;
}

Json loss_json(const CoordMap& map, const BoundaryLoss& loss) {
  Json pts = Json::array();
  for (const PointVec& p : loss.escaped) pts.push_back(point_json(map, p));
  return Json{{"escaped", std::move(pts)}, {"lost_mass", loss.lost_mass}};
}

Json state_json(const CoordMap& map, const StateVector& v) {
  Json out = Json::array();
  for (const auto& [p, a] : v.amp)
    out.push_back(
        Json{{"point", point_json(map, p)}, {"re", a.real()}, {"im", a.imag()}});
  return out;
}

Json verdict_json(const VerdictReport& rep, const CoordMap* map) {
  Json out;
  out["degenerate"] = rep.degenerate;
  if (rep.degenerate) out["reason"] = rep.degenerate_reason;
  out["ok"] = rep.ok;
  out["findings"] = rep.findings;
  out["discrepancies"] = rep.discrepancies;
  if (!rep.degenerate) {
    out["c0_curve"] = curve_json(rep.c0_curve);
    out["c1_curve"] = curve_json(rep.c1_curve);
    Json samples = Json::array();
    for (const CommutatorSample& s : rep.witness.samples)
      samples.push_back(Json{{"gamma", map ? point_json(*map, s.gamma) : Json::array()},
                             {"w_norm", s.w_norm},
                             {"t_norm", s.t_norm},
                             {"endpoint_ok", s.endpoint_ok}});
    out["witness"] = Json{{"shift_bound", rep.witness.shift_bound}, {"samples", samples}};
  }
  return out;
}

}  // namespace suq
