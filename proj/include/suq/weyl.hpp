#pragma once

#include <optional>
#include <string>
#include <vector>

namespace suq {

// Element of the symmetric group S_{ell+1}, the Weyl group of su(ell+1).
// perm[x-1] = w(x) on {1,...,ell+1}.
struct WeylElement {
  int ell = 1;
  std::vector<int> perm;

  static WeylElement identity(int ell);
  static WeylElement transposition(int ell, int i);  // s_i = (i, i+1)
  static WeylElement from_word(int ell, const std::vector<int>& gens);

  int degree() const { return ell + 1; }
  int apply(int x) const { return perm[x - 1]; }
  WeylElement inverse() const;
  bool is_identity() const;

  friend bool operator==(const WeylElement&, const WeylElement&) = default;
};

// w * v acts as first v, then w.
WeylElement operator*(const WeylElement& w, const WeylElement& v);

int inversion_count(const WeylElement& w);

// Parses the two accepted word grammars:
//   "(s2 s3 s4)(s3)(s2)(s1)"  (parenthesized s-tokens, spaces optional)
//   "2 3 | 1"                 (bare indices, '|' acts as whitespace)
//   ""                        (identity)
// If ell is given, indices are validated against [1, ell]; otherwise callers
// usually take ell = max index.
std::vector<int> parse_word(const std::string& text, std::optional<int> ell = std::nullopt);

// Contiguous block {lo, lo+1, ..., hi} of generator indices.
struct Interval {
  int lo = 0;
  int hi = 0;

  bool contains(int i) const { return lo <= i && i <= hi; }
  int size() const { return hi - lo + 1; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

// Interval-string decomposition w = s_{L_t} s_{L_{t-1}} ... s_{L_1} with
// max L_r > max L_s for r > s.  Strings are stored ascending by index k,
// i.e. strings[k-1] = L_k, so strings.back() is the leftmost factor.
struct Decomposition {
  int ell = 1;
  std::vector<Interval> strings;

  int t() const { return static_cast<int>(strings.size()); }
  const Interval& string_at(int k) const { return strings[k - 1]; }

  // Strings containing generator i, ascending.
  std::vector<int> gen_strings(int i) const;

  int length() const;
  std::vector<int> word() const;  // flattened reduced word, leftmost first
  WeylElement element() const;
};

// Unique interval-string decomposition, computed greedily by peeling the
// staircase factor (s_k ... s_j) off the top for j = ell, ..., 1.
Decomposition decompose(const WeylElement& w);

// i_min: least generator index appearing in more than one string, together
// with the first and last strings containing it.  Throws NoRepeatedGenerator
// when every generator occurs at most once.
struct RepeatedGenerator {
  int i_min = 0;
  int j_min = 0;
  int j_max = 0;
};

RepeatedGenerator repeated_generator(const Decomposition& d);

}  // namespace suq
