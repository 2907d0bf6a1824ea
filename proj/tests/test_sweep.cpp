#include <doctest.h>

#include <fstream>
#include <set>
#include <sstream>

#include "suq/errors.hpp"
#include "suq/sweep.hpp"
#include "suq/weyl.hpp"

using namespace suq;

namespace {

Decomposition dec_of(const std::string& word, int ell) {
  return decompose(WeylElement::from_word(ell, parse_word(word, ell)));
}

PointVec pt(const CoordMap& map, std::initializer_list<std::pair<std::pair<int, int>, int>> vals) {
  PointVec p = map.zero();
  for (const auto& [ki, v] : vals) p[map.index_of(ki.first, ki.second)] = v;
  return p;
}

std::set<int> argmin_strings(const Decomposition& d, const CoordMap& map, const PointVec& g,
                             int i) {
  std::set<int> out;
  const auto js = d.gen_strings(i);
  int best = g[map.index_of(js.front(), i)];
  for (int j : js) best = std::min(best, g[map.index_of(j, i)]);
  for (int j : js)
    if (g[map.index_of(j, i)] == best) out.insert(j);
  return out;
}

// Unit-step guarantee: applying p forward from x is a guaranteed edge when
// c(x, p) = 0; walking it backwards is guaranteed at the arrival point.
void check_guaranteed_steps(const CoordMap& map, const SweepPath& path) {
  PointVec cur = path.start;
  for (const SweepStep& s : path.steps) {
    const long reps = s.times < 0 ? -s.times : s.times;
    const long dir = s.times < 0 ? -1 : 1;
    for (long k = 0; k < reps; ++k) {
      const PointVec next = apply_move(map, cur, s.move, dir);
      const PointVec& base = dir > 0 ? cur : next;
      CHECK(c_weight(s.move, base) == 0);
      cur = next;
    }
  }
}

std::string golden_path(const char* name) {
  return std::string(SUQSIGN_GOLDEN_DIR) + "/" + name;
}

std::string slurp(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  REQUIRE_MESSAGE(in.good(), "missing golden file ", path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

}  // namespace

TEST_CASE("free plane membership and dichotomy") {
  const Decomposition d = dec_of("(s1 s2)(s1)", 2);
  const FreePlane plane(d);
  const CoordMap& map = plane.map();

  SUBCASE("basis directions and H-move vectors lie in the plane") {
    for (int i = 1; i <= d.ell; ++i) CHECK(plane.contains_direction(plane.basis_direction(i)));
    const Diagram full = Diagram::build(d);
    for (int r = 1; r <= d.ell + 1; ++r) {
      const auto h = h_move(full, r);
      REQUIRE(h.has_value());
      CHECK(plane.contains_direction(h->m));
    }
  }
  SUBCASE("a non-plane direction") {
    PointVec delta = map.zero();
    delta[map.index_of(1, 1)] = 1;  // (2,1) not raised with it
    CHECK(!plane.contains_direction(delta));
  }
  SUBCASE("cosets through window points are equal or disjoint") {
    const Window w{2, 2, 1, 0.5};
    std::vector<PointVec> sample;
    const std::uint64_t total = w.point_count(map);
    for (std::uint64_t idx = 0; idx < total; idx += total / 5) sample.push_back(w.point_at(map, idx));
    for (std::size_t a = 0; a < sample.size(); ++a)
      for (std::size_t b = a + 1; b < sample.size(); ++b) {
        const bool same = plane.same_coset(sample[a], sample[b]);
        for (std::uint64_t idx = 0; idx < total; idx += 7) {
          const PointVec p = w.point_at(map, idx);
          const bool ina = plane.same_coset(sample[a], p);
          const bool inb = plane.same_coset(sample[b], p);
          if (same) CHECK(ina == inb);
          else CHECK(!(ina && inb));
        }
      }
  }
}

TEST_CASE("minimizing string index") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);

  CHECK(minimizer_j(d, map, map.zero(), 2) == 2);  // ties break to the smallest
  CHECK(minimizer_j(d, map, pt(map, {{{2, 2}, 3}, {{4, 2}, 1}}), 2) == 4);
  // No string contains the generator: the Z coordinate stands in.
  const Decomposition d2 = dec_of("(s2)", 2);
  const CoordMap map2(d2);
  CHECK(minimizer_j(d2, map2, map2.zero(), 1) == 0);

  SUBCASE("the argmin set is constant along a coset") {
    const FreePlane plane(d);
    const PointVec gamma = pt(map, {{{2, 2}, 3}, {{4, 2}, 1}, {{4, 3}, 2}});
    PointVec shifted = gamma;
    const PointVec dir = plane.basis_direction(2);
    for (int f = 0; f < map.size(); ++f) shifted[f] += 2 * dir[f];
    for (int i = 1; i <= d.ell; ++i)
      if (!d.gen_strings(i).empty())
        CHECK(argmin_strings(d, map, gamma, i) == argmin_strings(d, map, shifted, i));
  }
}

TEST_CASE("complementary axis membership") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);
  CHECK(in_complementary_axis(d, map, map.zero()));
  PointVec ones = map.zero();
  for (int f = 0; f < map.nat_count(); ++f) ones[f] = 1;
  CHECK(!in_complementary_axis(d, map, ones));
  // Singleton coordinates are forced to zero on the axis.
  const Window w{2, 2, 1, 0.5};
  const std::uint64_t total = w.point_count(map);
  int seen = 0;
  for (std::uint64_t idx = 0; idx < total; idx += 97) {
    const PointVec p = w.point_at(map, idx);
    if (!in_complementary_axis(d, map, p)) continue;
    ++seen;
    CHECK(p[map.index_of(4, 4)] == 0);
    CHECK(p[map.index_of(1, 1)] == 0);
  }
  CHECK(seen > 0);
}

TEST_CASE("coset sweep toward the top axis") {
  const Decomposition d = dec_of("(s1 s2)(s1)", 2);
  const FreePlane plane(d);
  const CoordMap& map = plane.map();
  // Coset points of the origin: (1,1) = (2,1) = a, (2,2) = b, (0,1) = -a, (0,2) = -b.
  const PointVec base = map.zero();
  const PointVec start =
      pt(map, {{{1, 1}, 2}, {{2, 1}, 2}, {{2, 2}, 3}, {{0, 1}, -2}, {{0, 2}, -3}});

  SUBCASE("already at the target: empty path") {
    const PointVec axis = pt(map, {{{2, 2}, 3}, {{0, 2}, -3}});
    CHECK(sweep5(d, base, axis).steps.empty());
  }
  SUBCASE("one H_1 multiple clears the lower level") {
    const SweepPath path = sweep5(d, base, start);
    REQUIRE(path.steps.size() == 1);
    CHECK(path.steps[0].times == 2);
    CHECK(path.end() == pt(map, {{{2, 2}, 3}, {{0, 2}, -3}}));
    check_guaranteed_steps(map, path);
  }
  SUBCASE("coset mismatch is rejected") {
    CHECK_THROWS_AS(sweep5(d, base, pt(map, {{{1, 1}, 1}})), CosetMismatch);
  }
}

TEST_CASE("label-free moves with a prescribed end level") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);
  const Move m1 = zero_segment_move(d, 1);
  CHECK(m1.m == pt(map, {{{0, 1}, 1}}));
  const Move m3 = zero_segment_move(d, 3);
  CHECK(m3.m == pt(map, {{{0, 3}, 1}, {{0, 2}, -1}}));
  const Move m5 = zero_segment_move(d, 5);
  CHECK(m5.m == pt(map, {{{0, 4}, -1}}));
  for (const Move& p : {m1, m3, m5})
    for (int f = 0; f < map.nat_count(); ++f) CHECK(p.m[f] == 0);
}

TEST_CASE("ascent moves of the reduced diagrams") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);
  ReducedDiagramState state(d);
  state.remove_singleton_labels();
  state.remove_string_tail(4, 3);
  const auto m1 = state.ascent_move(4, 3);
  REQUIRE(m1.has_value());
  CHECK(m1->m == pt(map, {{{4, 3}, 1}, {{0, 4}, -1}}));
  state.remove_block(4, 3);
  state.remove_string_tail(4, 2);
  const auto m2 = state.ascent_move(4, 2);
  REQUIRE(m2.has_value());
  CHECK(m2->m == pt(map, {{{4, 2}, 1}, {{0, 4}, -1}}));
}

TEST_CASE("sweepout to the distinguished axis") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);

  SUBCASE("origin sweeps trivially") {
    const SweepResult r = sweep4(d, map.zero());
    CHECK(r.path.steps.empty());
    CHECK(r.path.end() == map.zero());
  }

  SUBCASE("instantiated table") {
    const int a = 2, b = -1;
    const PointVec gamma = pt(map, {{{4, 2}, 1},
                                    {{4, 3}, 2},
                                    {{4, 4}, 0},
                                    {{3, 3}, 1},
                                    {{2, 2}, a},
                                    {{1, 1}, 0},
                                    {{0, 1}, b},
                                    {{0, 2}, -1},
                                    {{0, 3}, 3},
                                    {{0, 4}, 0}});
    const SweepResult r = sweep4(d, gamma);

    // Seven effective moves, in the schedule order.
    REQUIRE(r.path.steps.size() == 7);
    CHECK(r.path.steps[0].move.m == pt(map, {{{4, 3}, 1}, {{0, 4}, -1}}));
    CHECK(r.path.steps[0].times == -2);
    CHECK(r.path.steps[1].move.m == pt(map, {{{4, 2}, 1}, {{0, 4}, -1}}));
    CHECK(r.path.steps[1].times == -1);
    CHECK(r.path.steps[2].move.m == pt(map, {{{3, 3}, 1}, {{0, 3}, -1}, {{0, 4}, 1}}));
    CHECK(r.path.steps[2].times == -1);
    // The distinguished move drops (2,2) and raises (0,1).
    CHECK(r.path.steps[3].move.m == pt(map, {{{2, 2}, -1}, {{0, 1}, 1}}));
    CHECK(r.path.steps[3].times == a);
    CHECK(r.path.steps[4].move.m == pt(map, {{{0, 3}, 1}, {{0, 2}, -1}}));
    CHECK(r.path.steps[5].move.m == pt(map, {{{0, 4}, 1}, {{0, 3}, -1}}));
    CHECK(r.path.steps[6].move.m == pt(map, {{{0, 4}, -1}}));

    // Zero pattern after each stage.
    CHECK(r.path.trace[0][map.index_of(4, 3)] == 0);
    CHECK(r.path.trace[1][map.index_of(4, 2)] == 0);
    CHECK(r.path.trace[2][map.index_of(3, 3)] == 0);
    CHECK(r.path.trace[3][map.index_of(2, 2)] == 0);
    CHECK(r.path.trace[3][map.index_of(0, 1)] == a + b);

    // Endpoint: everything zero except (0, i_0) = C0 = a + b.
    CHECK(r.path.end() == pt(map, {{{0, 1}, a + b}}));
    for (const PointVec& p : r.path.trace) CHECK(fn.c0(p) == a + b);
    check_guaranteed_steps(map, r.path);

    const std::string rendered = r.table.render();
    CHECK(rendered == slurp(golden_path("table1.txt")));
  }
}

TEST_CASE("escape preserving C1") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const int a = 1, b = -1;
  const long K = 2;
  const PointVec gamma = pt(map, {{{4, 2}, a},
                                  {{4, 3}, 2},
                                  {{3, 3}, 1},
                                  {{2, 2}, 1},
                                  {{0, 1}, b},
                                  {{0, 3}, 1},
                                  {{0, 4}, -2}});

  SUBCASE("instantiated table") {
    const SweepResult r = c1_escape(d, gamma, K);
    REQUIRE(r.path.steps.size() == 4);
    CHECK(r.path.steps[0].move.m == pt(map, {{{4, 3}, 1}, {{0, 4}, -1}}));
    CHECK(r.path.steps[1].move.m == pt(map, {{{3, 3}, 1}, {{0, 3}, -1}, {{0, 4}, 1}}));
    CHECK(r.path.steps[2].move.m == pt(map, {{{2, 2}, 1}, {{0, 2}, -1}, {{0, 3}, 1}}));
    CHECK(r.path.steps[3].move.m == pt(map, {{{0, 1}, 1}}));
    CHECK(r.path.steps[3].times == 3 * K);

    // After the first three moves the cleared coordinates vanish while
    // (4,2) = a survives; the final point gains (0,1) = b + 3K.
    const PointVec& after3 = r.path.trace[2];
    CHECK(after3[map.index_of(4, 3)] == 0);
    CHECK(after3[map.index_of(3, 3)] == 0);
    CHECK(after3[map.index_of(2, 2)] == 0);
    CHECK(after3[map.index_of(4, 2)] == a);
    CHECK(r.path.end()[map.index_of(0, 1)] == b + 3 * K);
    CHECK(r.path.end()[map.index_of(4, 2)] == a);
    for (const PointVec& p : r.path.trace) CHECK(fn.c1(p) == a);
    check_guaranteed_steps(map, r.path);

    CHECK(r.table.render() == slurp(golden_path("table2.txt")));
  }
  SUBCASE("K = 0 is a valid no-gain escape") {
    const SweepResult r = c1_escape(d, gamma, 0);
    CHECK(r.path.end()[map.index_of(0, 1)] == b);
    CHECK(fn.c1(r.path.end()) == a);
  }
}

TEST_CASE("coordinate escape raises C1 by exactly K+1") {
  const Decomposition d = dec_of("(s1 s2)(s1)", 2);
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);
  const PointVec gamma = pt(map, {{{2, 2}, 1}});

  SUBCASE("K = 0 applies each H move once") {
    const SweepPath path = coordinate_escape(d, gamma, 0);
    for (const SweepStep& s : path.steps) CHECK(s.times == 1);
    CHECK(fn.c1(path.end()) - fn.c1(gamma) == 1);
  }
  SUBCASE("K = 2 walks 3 * (ell + 1 - i_min) unit steps") {
    const SweepPath path = coordinate_escape(d, gamma, 2);
    CHECK(path.unit_length() == 3 * (d.ell + 1 - fn.ax.i_min));
    CHECK(fn.c1(path.end()) - fn.c1(gamma) == 3);
    check_guaranteed_steps(map, path);
  }
}

TEST_CASE("free plane ladders") {
  const Decomposition d = dec_of("(s1 s2)(s1)", 2);
  const FreePlane plane(d);
  const CoordMap& map = plane.map();
  const PointVec base = map.zero();
  auto coset_point = [&](int v1, int v2) {
    return pt(map,
              {{{1, 1}, v1}, {{2, 1}, v1}, {{2, 2}, v2}, {{0, 1}, -v1}, {{0, 2}, -v2}});
  };

  SUBCASE("empty input gives an empty ladder") {
    CHECK(ladder_free_plane(d, base, {}).paths.empty());
  }
  SUBCASE("single pair: the top coordinate stays between the endpoints") {
    const PointVec g1 = coset_point(2, 0);
    const PointVec d1 = coset_point(1, 3);
    const Ladder l = ladder_free_plane(d, base, {{g1, d1}});
    REQUIRE(l.paths.size() == 1);
    CHECK(l.paths[0].steps.front().first == g1);
    CHECK(l.paths[0].steps.back().first == d1);
    for (const auto& [p, mid] : l.paths[0].steps) {
      const long c = p[map.index_of(2, 2)];
      CHECK(c >= 0);
      CHECK(c <= 3);
    }
  }
  SUBCASE("two interleaved pairs stay vertex-disjoint") {
    const Ladder l = ladder_free_plane(
        d, base, {{coset_point(1, 0), coset_point(0, 1)}, {coset_point(1, 2), coset_point(0, 3)}});
    REQUIRE(l.paths.size() == 2);
    CHECK(vertex_disjoint(l));
  }
  SUBCASE("pairs off the plane are rejected") {
    CHECK_THROWS_AS(ladder_free_plane(d, base, {{pt(map, {{{1, 1}, 1}}), base}}), CosetMismatch);
  }
  SUBCASE("escape ladder walks H_{ell+1} from increasing coset points") {
    const Ladder l = escape_ladder(d, {coset_point(0, 0), coset_point(1, 1), coset_point(2, 2)}, 1);
    REQUIRE(l.paths.size() == 3);
    CHECK(vertex_disjoint(l));
    for (const LadderPath& path : l.paths) CHECK(path.steps.size() == 4);  // 2K+1 steps + end
  }
}

TEST_CASE("C0 ladders") {
  const Decomposition d = dec_of("(s1 s2)(s1)", 2);
  const CoordMap map(d);
  const AxisFunctionals fn = axis_functionals(d, map);

  SUBCASE("n = 0 is empty") { CHECK(ladder_c0(d, 0, Window{2, 2, 1, 0.5}).paths.empty()); }
  SUBCASE("a single rung has monotone C0 along the join") {
    const Ladder l = ladder_c0(d, 1, Window{2, 3, 1, 0.5});
    REQUIRE(l.paths.size() == 1);
    long prev = fn.c0(l.paths[0].steps.front().first);
    for (const auto& [p, mid] : l.paths[0].steps) {
      const long c = fn.c0(p);
      CHECK(c >= prev);
      prev = c;
    }
  }
  SUBCASE("three rungs are vertex-disjoint") {
    const Ladder l = ladder_c0(d, 3, Window{2, 6, 1, 0.5});
    REQUIRE(l.paths.size() == 3);
    CHECK(vertex_disjoint(l));
  }
  SUBCASE("a too-small window is reported with the required size") {
    CHECK_THROWS_AS(ladder_c0(d, 3, Window{2, 2, 1, 0.5}), WindowOverflow);
  }
}

TEST_CASE("algorithm A clears one coordinate and freezes everything above") {
  const Decomposition d = dec_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
  const CoordMap map(d);
  ReducedDiagramState state(d);
  state.remove_singleton_labels();
  PointVec delta = pt(map, {{{4, 3}, 2}, {{3, 3}, 1}, {{2, 2}, 2}});

  SUBCASE("zero coordinate is a no-op that still strips labels") {
    auto step = algorithm_A(state, delta, 4, 4);
    CHECK(!step.has_value());
    CHECK(state.diagram().label_removed(4, 4));
  }
  SUBCASE("nonzero coordinate emits the backwards ascent move") {
    algorithm_A(state, delta, 4, 4);
    auto step = algorithm_A(state, delta, 4, 3);
    REQUIRE(step.has_value());
    CHECK(step->times == -2);
    CHECK(step->move.m == pt(map, {{{4, 3}, 1}, {{0, 4}, -1}}));
    CHECK(delta[map.index_of(4, 3)] == 0);
    CHECK(delta[map.index_of(3, 3)] == 1);
  }
}

TEST_CASE("diagonal weights are nonnegative on Gamma") {
  const Decomposition d = dec_of("(s1 s2)(s1)", 2);
  const Diagram g = Diagram::build(d);
  const Window w{2, 2, 1, 0.5};
  const auto moves = all_moves(g);
  const std::uint64_t total = w.point_count(g.map());
  for (std::uint64_t idx = 0; idx < total; idx += 11) {
    const PointVec p = w.point_at(g.map(), idx);
    for (const Move& m : moves) CHECK(c_weight(m, p) >= 0);
  }
}
