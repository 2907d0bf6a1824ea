#pragma once

#include <complex>
#include <map>
#include <optional>
#include <vector>

#include "suq/diagram.hpp"
#include "suq/lattice.hpp"
#include "suq/parallel.hpp"

namespace suq {

// Per-coordinate factor of a monomial operator.  The Sqrt* kinds carry the
// sqrt(1-q^{2n}) weights of the labelled horizontals; Bare* are their pure
// shift replacements used by the W operators.  Shifts on N kill the basis
// vector at n = 0 exactly; Z shifts never do.
enum class FactorKind : std::uint8_t {
  SqrtMinus,  // sqrt(1-q^{2n}) e_{n-1}
  SqrtPlus,   // sqrt(1-q^{2n+2}) e_{n+1}
  QDiagUp,    // -q^{n+1} e_n
  QDiagDown,  // q^{n} e_n
  BareMinus,  // e_{n-1}, zero at n = 0
  BarePlus,   // e_{n+1}
  ZMinus,     // e_{z-1}
  ZPlus,      // e_{z+1}
};

int factor_shift(FactorKind k);
FactorKind factor_adjoint(FactorKind k);

struct Factor {
  int coord = 0;
  FactorKind kind = FactorKind::QDiagDown;
};

// Lazy operator e_gamma -> coeff(gamma) e_{gamma+delta}; coeff vanishes
// exactly when a minus shift on N hits 0.
struct Monomial {
  PointVec delta;
  std::vector<Factor> factors;

  // Coefficient at gamma, and the image point; nullopt when annihilated.
  std::optional<std::pair<double, PointVec>> apply_basis(const CoordMap& map,
                                                         const PointVec& gamma, double q) const;
  double coeff(const PointVec& gamma, double q) const;  // 0 when annihilated
};

Monomial monomial_of(const Diagram& g, const Move& p);    // T_p
Monomial w_monomial_of(const Diagram& g, const Move& p);  // W_p
Monomial adjoint(const CoordMap& map, const Monomial& m);

struct OperatorSum {
  std::vector<Monomial> terms;
};

// pi_omega(u_ij) = sum over P_ij of T_p.
OperatorSum entry_operator(const Diagram& g, int i, int j);
OperatorSum adjoint(const CoordMap& map, const OperatorSum& op);

using Amplitude = std::complex<double>;

// Finitely supported vector in l2(Gamma); ordered map keeps every report
// deterministic.
struct StateVector {
  std::map<PointVec, Amplitude> amp;

  double norm() const;
  void add(const PointVec& p, Amplitude a);
  bool operator==(const StateVector& o) const { return amp == o.amp; }
};

StateVector basis_state(const PointVec& gamma);

// Amplitudes landing outside the window are reported, never silently lost.
struct BoundaryLoss {
  std::vector<PointVec> escaped;
  double lost_mass = 0.0;  // sum of |amplitude|^2 over escaped targets

  bool clean() const { return escaped.empty(); }
};

StateVector apply(const CoordMap& map, const OperatorSum& op, const StateVector& v,
                  const Window& w, BoundaryLoss* loss = nullptr);
StateVector apply(const CoordMap& map, const Monomial& m, const StateVector& v, const Window& w,
                  BoundaryLoss* loss = nullptr);

struct UnitarityDefect {
  double row = 0.0;
  double col = 0.0;
  double max() const { return row > col ? row : col; }
};

// || sum_k u_ik u_jk^* e_gamma - delta_ij e_gamma || and the column version
// sum_k u_ki^* u_kj.  gamma must be window-interior.
UnitarityDefect unitarity_defect(const Diagram& g, int i, int j, const PointVec& gamma,
                                 const Window& w);

struct ScanResult {
  double max_defect = 0.0;
  PointVec argmax;
  int i = 0, j = 0;
};

// Max unitarity defect over all interior gamma and all (i, j).
ScanResult unitarity_scan(const Diagram& g, const Window& w, ExecMode mode);

// For every window gamma: W_p e_gamma nonzero implies the shift equals m_p.
// The shift of W_p is constant, so the scan verifies the factor-accumulated
// delta against the segment prescription and that some gamma survives.
bool mp_uniqueness(const Diagram& g, const Move& p, const Window& w, ExecMode mode);

struct MpSuiteResult {
  bool ok = false;
  std::uint64_t violations = 0;
  std::uint64_t witness_points = 0;
  std::vector<int> failed_moves;
};

// One window sweep covering every move at once.
MpSuiteResult mp_uniqueness_suite(const Diagram& g, const std::vector<Move>& moves,
                                  const Window& w, ExecMode mode);

// (1/3) sum over cube roots of unity z of U_z op U_z^* v, where
// U_z e_gamma = z^{gamma[coord]} e_gamma.  Annihilates terms shifting coord
// by ±1 and fixes terms that leave it alone.
StateVector phase_average(const CoordMap& map, const OperatorSum& op, int coord,
                          const StateVector& v, const Window& w);

// Diagonal phase twist of the chi family: multiplies e_gamma by
// prod_i z_i^{gamma(0,i)}.
StateVector phase_twist(const CoordMap& map, const std::vector<Amplitude>& z,
                        const StateVector& v);

}  // namespace suq
