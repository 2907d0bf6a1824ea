#pragma once

#include <memory>
#include <string>
#include <vector>

#include "suq/lattice.hpp"

namespace suq {

// Eigenvalue candidate d : Gamma -> R given by a small expression tree over
// the coordinates (integer linear combinations, absolute values, max, and a
// base-2 exponential for growth counterexamples).
class DiracExpr {
 public:
  virtual ~DiracExpr() = default;
  virtual double eval(const PointVec& p) const = 0;
  virtual std::string describe() const = 0;
};

using DiracPtr = std::shared_ptr<const DiracExpr>;

DiracPtr dirac_const(double c);
DiracPtr dirac_coord(const CoordMap& map, int k, int i);
DiracPtr dirac_abs(DiracPtr e);
DiracPtr dirac_max(DiracPtr a, DiracPtr b);
DiracPtr dirac_sum(std::vector<std::pair<double, DiracPtr>> terms);
DiracPtr dirac_exp2(DiracPtr e);  // 2^e

// sum of |gamma(k,i)| over every coordinate.
DiracPtr dirac_abs_sum(const CoordMap& map);

// CLI presets: "abs-sum", "const:<v>", "exp2:<k>,<i>", "coord:<k>,<i>".
DiracPtr parse_dirac(const CoordMap& map, const std::string& spec);

}  // namespace suq
