#include <doctest.h>

#include <cmath>

#include "suq/errors.hpp"
#include "suq/weyl.hpp"
#include "suq/witness.hpp"

using namespace suq;

namespace {

Diagram diagram_of(const std::string& word, int ell) {
  return Diagram::build(decompose(WeylElement::from_word(ell, parse_word(word, ell))));
}

PointVec pt(const CoordMap& map, std::initializer_list<std::pair<std::pair<int, int>, int>> vals) {
  PointVec p = map.zero();
  for (const auto& [ki, v] : vals) p[map.index_of(ki.first, ki.second)] = v;
  return p;
}

}  // namespace

TEST_CASE("coset projection") {
  const Diagram g = diagram_of("(s1 s2)(s1)", 2);
  const CoordMap& map = g.map();
  const FreePlane plane(g.dec());
  const SignCandidate cand{{map.zero()}, true};

  const PointVec inside =
      pt(map, {{{1, 1}, 1}, {{2, 1}, 1}, {{2, 2}, 2}, {{0, 1}, -1}, {{0, 2}, -2}});
  const PointVec outside = pt(map, {{{1, 1}, 1}});

  SUBCASE("support inside passes through") {
    const StateVector v = basis_state(inside);
    CHECK(project(plane, cand, v) == v);
  }
  SUBCASE("support outside is annihilated") {
    CHECK(project(plane, cand, basis_state(outside)).amp.empty());
  }
  SUBCASE("mixed support restricts; projecting twice changes nothing") {
    StateVector v = basis_state(inside);
    v.add(outside, Amplitude{0.5, 0.5});
    const StateVector once = project(plane, cand, v);
    CHECK(once.amp.size() == 1);
    CHECK(once.amp.count(inside) == 1);
    CHECK(project(plane, cand, once) == once);
  }
}

TEST_CASE("witness entry operator is a single monomial with the expected factors") {
  SUBCASE("running example") {
    const Diagram g = diagram_of("(s2 s3 s4)(s3)(s2)(s1)", 4);
    const WitnessOperator wo = witness_operator(g);
    CHECK(wo.r == 4);
    CHECK(wo.has_side_factor);  // string 3 contains s_3
    const CoordMap& map = g.map();
    CHECK(wo.move.m == pt(map, {{{3, 3}, 1}, {{0, 3}, -1}, {{0, 4}, 1}}));
    CHECK(wo.move.seg[4] == std::pair{5, 4});
  }
  SUBCASE("one-letter word: q^N against the plain Z shift") {
    const Diagram g = diagram_of("(s1)", 1);
    const WitnessOperator wo = witness_operator(g);
    CHECK(wo.r == 1);
    CHECK(!wo.has_side_factor);
    REQUIRE(wo.monomial.factors.size() == 2);
    CHECK(wo.monomial.factors[0].kind == FactorKind::QDiagDown);
    CHECK(wo.monomial.factors[1].kind == FactorKind::ZPlus);
  }
  SUBCASE("the diagonal factor preserves the (t, r) coordinate") {
    const Diagram g = diagram_of("(s1 s2)(s1)", 2);
    const WitnessOperator wo = witness_operator(g);
    const CoordMap& map = g.map();
    CHECK(wo.move.m[map.index_of(2, 2)] == 0);
  }
}

TEST_CASE("non-compactness sequence") {
  const Diagram g = diagram_of("(s1 s2)(s1)", 2);
  const CoordMap& map = g.map();
  const Window w{8, 8, 1, 0.5};
  const SignCandidate cand{{map.zero()}, true};

  SUBCASE("count 0 gives an empty list") {
    CHECK(noncompactness_sequence(g, cand, 0, w).samples.empty());
  }
  SUBCASE("empty candidate is the trivial sign; the witness is vacuous") {
    const SignCandidate trivial{{}, false};
    CHECK(noncompactness_sequence(g, trivial, 0, w).samples.empty());
  }
  SUBCASE("five eligible points give unit W norms and sizable T norms") {
    const NoncompactnessResult res = noncompactness_sequence(g, cand, 5, w);
    CHECK(res.shift_bound == 0);
    REQUIRE(res.samples.size() == 5);
    for (const CommutatorSample& s : res.samples) {
      CHECK(std::abs(s.w_norm - 1.0) <= 1e-12);
      CHECK(s.t_norm >= 0.8);
      CHECK(s.t_norm <= 1.0);
      CHECK(s.endpoint_ok);
      CHECK(s.gamma[map.index_of(2, 2)] == 0);
    }
  }
  SUBCASE("an undersized window is reported") {
    CHECK_THROWS_AS(noncompactness_sequence(g, cand, 500, w), WindowOverflow);
  }
}

TEST_CASE("verdict") {
  SUBCASE("degenerate word routes to the SU_q(2)-type report") {
    const Decomposition d = decompose(WeylElement::from_word(1, {1}));
    const VerdictReport rep = verdict(d, Window{4, 4, 1, 0.5}, 3, ExecMode::Serial);
    CHECK(rep.degenerate);
    CHECK(rep.ok);
    CHECK(rep.degenerate_reason.find("SU_q(2)") != std::string::npos);
  }
  SUBCASE("the doubled word passes every desk-scale check") {
    const Decomposition d = decompose(WeylElement::from_word(2, parse_word("(s1 s2)(s1)")));
    const VerdictReport rep = verdict(d, Window{4, 4, 1, 0.5}, 4, ExecMode::Serial);
    CHECK(!rep.degenerate);
    CHECK(rep.ok);
    CHECK(rep.discrepancies.empty());
    REQUIRE(rep.c0_curve.size() == 3);
    CHECK(rep.c0_curve[0].count < rep.c0_curve[2].count);
    CHECK(rep.witness.samples.size() == 4);
  }
}

TEST_CASE("the coset projection is self-adjoint for the l2 pairing") {
  const Diagram g = diagram_of("(s1 s2)(s1)", 2);
  const CoordMap& map = g.map();
  const FreePlane plane(g.dec());
  const SignCandidate cand{{map.zero()}, true};
  StateVector v = basis_state(map.zero());
  v.add(pt(map, {{{1, 1}, 1}}), Amplitude{0.0, 1.0});
  StateVector u = basis_state(pt(map, {{{1, 1}, 1}}));
  u.add(map.zero(), Amplitude{0.5, -0.5});
  auto pairing = [](const StateVector& a, const StateVector& b) {
    Amplitude s{0.0, 0.0};
    for (const auto& [p, x] : a.amp) {
      auto it = b.amp.find(p);
      if (it != b.amp.end()) s += std::conj(x) * it->second;
    }
    return s;
  };
  const Amplitude lhs = pairing(project(plane, cand, v), u);
  const Amplitude rhs = pairing(v, project(plane, cand, u));
  CHECK(std::abs(lhs - rhs) < 1e-15);
}
