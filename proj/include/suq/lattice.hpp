#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "suq/weyl.hpp"

namespace suq {

// Coordinate label (k,i): k = string index (t..1 for the N part, 0 for the
// Z part), i = generator level.
struct Coord {
  int k = 0;
  int i = 0;
  friend bool operator==(const Coord&, const Coord&) = default;
};

// Lattice points and integer move vectors share this representation; the
// coordinate order is fixed by CoordMap.
using PointVec = std::vector<int>;

// Flat indexing of the coordinate set of Gamma = N^Lambda x Z^Lambda0.
// Canonical order: k descending (t first), i ascending within a string,
// then the Z coordinates (0,1),...,(0,ell).
class CoordMap {
 public:
  CoordMap() = default;
  explicit CoordMap(const Decomposition& d);

  int size() const { return static_cast<int>(coords_.size()); }
  int nat_count() const { return nat_count_; }
  bool is_nat(int flat) const { return flat < nat_count_; }
  const Coord& coord(int flat) const { return coords_[flat]; }
  const std::vector<Coord>& coords() const { return coords_; }

  // -1 when (k,i) is not a coordinate of Gamma.
  int index_of(int k, int i) const;

  PointVec zero() const { return PointVec(coords_.size(), 0); }
  bool in_gamma(const PointVec& p) const;  // N part nonnegative
  std::string label(int flat) const;

 private:
  std::vector<Coord> coords_;
  int nat_count_ = 0;
  int ell_ = 0;
  int t_ = 0;
};

// Finite verification window: 0 <= n <= n_max on each N coordinate,
// |z| <= z_max on each Z coordinate.  The N boundary at 0 is exact algebra;
// only the outer faces are a truncation.
struct Window {
  int n_max = 4;
  int z_max = 4;
  int margin = 1;
  double q = 0.5;

  void validate() const;
  bool contains(const CoordMap& m, const PointVec& p) const;
  // Margin-distance from the outer faces; the N floor at 0 is allowed.
  bool interior(const CoordMap& m, const PointVec& p) const;

  std::uint64_t point_count(const CoordMap& m) const;
  PointVec point_at(const CoordMap& m, std::uint64_t index) const;
  std::uint64_t index_of(const CoordMap& m, const PointVec& p) const;
};

}  // namespace suq
