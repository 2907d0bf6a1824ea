#pragma once

// Independent reference computations used only by tests.

#include <utility>
#include <vector>

#include "suq/weyl.hpp"

namespace suq::oracle {

// Every interval-string configuration with strictly decreasing maxima,
// together with its group element.  The maxima run over subsets of
// {1,...,ell}; each chosen max m pairs with a start lo in [1, m].
struct StaircaseConfig {
  std::vector<Interval> strings;  // ascending string index (L_1 first)
  WeylElement element;
};

inline std::vector<StaircaseConfig> all_staircase_configs(int ell) {
  std::vector<StaircaseConfig> out;
  // rec(m): extend the configuration with maxima < m already fixed.
  std::vector<Interval> chosen;  // built with the largest max first
  auto rec = [&](auto&& self, int m) -> void {
    if (m == 0) {
      StaircaseConfig cfg;
      cfg.strings.assign(chosen.rbegin(), chosen.rend());
      Decomposition d;
      d.ell = ell;
      d.strings = cfg.strings;
      cfg.element = d.element();
      out.push_back(std::move(cfg));
      return;
    }
    self(self, m - 1);  // max m unused
    for (int lo = 1; lo <= m; ++lo) {
      chosen.push_back(Interval{lo, m});
      self(self, m - 1);
      chosen.pop_back();
    }
  };
  rec(rec, ell);
  return out;
}

// All elements of S_{ell+1} as images vectors.
inline std::vector<WeylElement> all_elements(int ell) {
  std::vector<WeylElement> out;
  WeylElement w = WeylElement::identity(ell);
  std::vector<int> idx(ell + 1);
  for (int i = 0; i <= ell; ++i) idx[i] = i + 1;
  do {
    w.perm = idx;
    out.push_back(w);
  } while (std::next_permutation(idx.begin(), idx.end()));
  return out;
}

}  // namespace suq::oracle
