#include "suq/lattice.hpp"

#include <cstdlib>
#include <stdexcept>

#include "suq/errors.hpp"

namespace suq {

CoordMap::CoordMap(const Decomposition& d) : ell_(d.ell), t_(d.t()) {
  for (int k = d.t(); k >= 1; --k)
    for (int i = d.string_at(k).lo; i <= d.string_at(k).hi; ++i) coords_.push_back(Coord{k, i});
  nat_count_ = static_cast<int>(coords_.size());
  for (int i = 1; i <= d.ell; ++i) coords_.push_back(Coord{0, i});
}

int CoordMap::index_of(int k, int i) const {
  if (k == 0) {
    if (i < 1 || i > ell_) return -1;
    return nat_count_ + (i - 1);
  }
  // Few strings; linear scan is fine and keeps the layout obvious.
  for (int f = 0; f < nat_count_; ++f)
    if (coords_[f].k == k && coords_[f].i == i) return f;
  return -1;
}

bool CoordMap::in_gamma(const PointVec& p) const {
  for (int f = 0; f < nat_count_; ++f)
    if (p[f] < 0) return false;
  return true;
}

std::string CoordMap::label(int flat) const {
  const Coord& c = coords_[flat];
  return "(" + std::to_string(c.k) + "," + std::to_string(c.i) + ")";
}

void Window::validate() const {
  if (margin < 1) throw std::invalid_argument("window margin must be >= 1");
  if (n_max < 2 * margin) throw std::invalid_argument("window needs n_max >= 2*margin");
  if (z_max < 2 * margin) throw std::invalid_argument("window needs z_max >= 2*margin");
  if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("q must lie in (0,1)");
}

bool Window::contains(const CoordMap& m, const PointVec& p) const {
  for (int f = 0; f < m.size(); ++f) {
    if (m.is_nat(f)) {
      if (p[f] < 0 || p[f] > n_max) return false;
    } else if (std::abs(p[f]) > z_max) {
      return false;
    }
  }
  return true;
}

bool Window::interior(const CoordMap& m, const PointVec& p) const {
  for (int f = 0; f < m.size(); ++f) {
    if (m.is_nat(f)) {
      if (p[f] < 0 || p[f] > n_max - margin) return false;
    } else if (std::abs(p[f]) > z_max - margin) {
      return false;
    }
  }
  return true;
}

std::uint64_t Window::point_count(const CoordMap& m) const {
  std::uint64_t n = 1;
  for (int f = 0; f < m.size(); ++f) n *= m.is_nat(f) ? (n_max + 1) : (2 * z_max + 1);
  return n;
}

PointVec Window::point_at(const CoordMap& m, std::uint64_t index) const {
  PointVec p(m.size());
  for (int f = m.size() - 1; f >= 0; --f) {
    const std::uint64_t radix = m.is_nat(f) ? (n_max + 1) : (2 * z_max + 1);
    const int digit = static_cast<int>(index % radix);
    index /= radix;
    p[f] = m.is_nat(f) ? digit : digit - z_max;
  }
  return p;
}

std::uint64_t Window::index_of(const CoordMap& m, const PointVec& p) const {
  std::uint64_t idx = 0;
  for (int f = 0; f < m.size(); ++f) {
    const std::uint64_t radix = m.is_nat(f) ? (n_max + 1) : (2 * z_max + 1);
    const int digit = m.is_nat(f) ? p[f] : p[f] + z_max;
    if (digit < 0 || static_cast<std::uint64_t>(digit) >= radix)
      throw WindowOverflow("point outside window in index_of");
    idx = idx * radix + static_cast<std::uint64_t>(digit);
  }
  return idx;
}

}  // namespace suq
