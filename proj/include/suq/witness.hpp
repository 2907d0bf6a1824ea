#pragma once

#include <string>
#include <vector>

#include "suq/operators.hpp"
#include "suq/sweep.hpp"

namespace suq {

// Candidate sign 2P - I or I - 2P with P the projection onto the span of the
// basis vectors indexed by a finite union of free-plane cosets.
struct SignCandidate {
  std::vector<PointVec> coset_bases;
  bool positive_orientation = true;  // true: 2P - I

  bool member(const FreePlane& plane, const PointVec& gamma) const;
};

// Amplitude-wise restriction to the coset union.
StateVector project(const FreePlane& plane, const SignCandidate& cand, const StateVector& v);

// T = pi_omega(u_{r+1,r}) with r = max L_t: must be a single monomial whose
// factor pattern is: q^N on (t,r), the Z shifts -1 on (0,r-1) and +1 on
// (0,r), plus the sqrt-weighted +1 shift on (t-1, r-1) exactly when string
// t-1 contains s_{r-1}.
struct WitnessOperator {
  int r = 0;
  Move move;
  Monomial monomial;
  bool has_side_factor = false;  // the (t-1, r-1) shift
};

WitnessOperator witness_operator(const Diagram& g);

struct CommutatorSample {
  PointVec gamma;
  double w_norm = 0.0;  // ||[P, W^{2n+1}] e_gamma||, exactly 1 for eligible gamma
  double t_norm = 0.0;  // ||[P, T^{2n+1}] e_gamma||
  bool endpoint_ok = false;
};

struct NoncompactnessResult {
  int shift_bound = 0;  // n with gamma(t,r)+gamma(0,r) in [-n,n] on the union
  std::vector<CommutatorSample> samples;
};

// `count` eligible points gamma in the coset union with gamma(t,r) = 0; for
// each, both commutator norms plus the exact endpoint identities
//   gamma'(0,r) = gamma(0,r) + 2n+1,
//   gamma'(0,r-1) = gamma(0,r-1) - (2n+1),
//   gamma'(t,r) = gamma(t,r).
NoncompactnessResult noncompactness_sequence(const Diagram& g, const SignCandidate& cand,
                                             int count, const Window& w);

struct VerdictReport {
  bool degenerate = false;
  std::string degenerate_reason;
  bool ok = true;
  std::vector<std::string> findings;
  std::vector<std::string> discrepancies;
  std::vector<ProbePoint> c0_curve;
  std::vector<ProbePoint> c1_curve;
  NoncompactnessResult witness;
};

// Bundles the desk-scale evidence: growing ladder curves for the C0 and C1
// partitions, the free-plane coset dichotomy, and a non-decaying commutator
// sequence against each candidate sign.
VerdictReport verdict(const Decomposition& d, const Window& w, int count, ExecMode mode);

}  // namespace suq
