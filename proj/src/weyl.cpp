#include "suq/weyl.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "suq/errors.hpp"

namespace suq {

WeylElement WeylElement::identity(int ell) {
  WeylElement w;
  w.ell = ell;
  w.perm.resize(ell + 1);
  std::iota(w.perm.begin(), w.perm.end(), 1);
  return w;
}

WeylElement WeylElement::transposition(int ell, int i) {
  if (i < 1 || i > ell) throw ParseError("generator index out of range: s" + std::to_string(i));
  WeylElement w = identity(ell);
  std::swap(w.perm[i - 1], w.perm[i]);
  return w;
}

WeylElement operator*(const WeylElement& w, const WeylElement& v) {
  WeylElement r = WeylElement::identity(w.ell);
  for (int x = 1; x <= w.degree(); ++x) r.perm[x - 1] = w.apply(v.apply(x));
  return r;
}

WeylElement WeylElement::from_word(int ell, const std::vector<int>& gens) {
  WeylElement w = identity(ell);
  for (int g : gens) w = w * transposition(ell, g);
  return w;
}

WeylElement WeylElement::inverse() const {
  WeylElement r = identity(ell);
  for (int x = 1; x <= degree(); ++x) r.perm[apply(x) - 1] = x;
  return r;
}

bool WeylElement::is_identity() const {
  for (int x = 1; x <= degree(); ++x)
    if (apply(x) != x) return false;
  return true;
}

int inversion_count(const WeylElement& w) {
  int n = 0;
  for (int a = 1; a <= w.degree(); ++a)
    for (int b = a + 1; b <= w.degree(); ++b)
      if (w.apply(a) > w.apply(b)) ++n;
  return n;
}

namespace {

void check_index(int i, std::optional<int> ell) {
  if (i < 1) throw ParseError("generator index must be >= 1, got " + std::to_string(i));
  if (ell && i > *ell)
    throw ParseError("generator index s" + std::to_string(i) + " out of range [1," +
                     std::to_string(*ell) + "]");
}

// "(s2 s3s4)(s1)" form: every token is 's' followed by digits.
std::vector<int> parse_paren_form(const std::string& text, std::optional<int> ell) {
  std::vector<int> out;
  std::size_t pos = 0;
  const auto n = text.size();
  while (pos < n) {
    while (pos < n && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos >= n) break;
    if (text[pos] != '(') throw ParseError("expected '(' at position " + std::to_string(pos));
    ++pos;
    bool any = false;
    while (pos < n && text[pos] != ')') {
      char c = text[pos];
      if (std::isspace(static_cast<unsigned char>(c))) {
        ++pos;
        continue;
      }
      if (c != 's' && c != 'S') throw ParseError(std::string("expected 's<i>' token, got '") + c + "'");
      ++pos;
      std::size_t start = pos;
      while (pos < n && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
      if (pos == start) throw ParseError("missing index after 's'");
      int idx = std::stoi(text.substr(start, pos - start));
      check_index(idx, ell);
      out.push_back(idx);
      any = true;
    }
    if (pos >= n) throw ParseError("unterminated '('");
    if (!any) throw ParseError("empty parenthesized string");
    ++pos;  // ')'
  }
  return out;
}

std::vector<int> parse_bare_form(const std::string& text, std::optional<int> ell) {
  std::vector<int> out;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), '|', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) {
    if (tok[0] == 's' || tok[0] == 'S') tok.erase(0, 1);
    std::size_t used = 0;
    int idx = 0;
    try {
      idx = std::stoi(tok, &used);
    } catch (const std::exception&) {
      throw ParseError("bad token '" + tok + "' in word");
    }
    if (used != tok.size()) throw ParseError("bad token '" + tok + "' in word");
    check_index(idx, ell);
    out.push_back(idx);
  }
  return out;
}

}  // namespace

std::vector<int> parse_word(const std::string& text, std::optional<int> ell) {
  const bool paren = text.find('(') != std::string::npos;
  if (paren) return parse_paren_form(text, ell);
  return parse_bare_form(text, ell);
}

std::vector<int> Decomposition::gen_strings(int i) const {
  std::vector<int> out;
  for (int k = 1; k <= t(); ++k)
    if (strings[k - 1].contains(i)) out.push_back(k);
  return out;
}

int Decomposition::length() const {
  int n = 0;
  for (const auto& s : strings) n += s.size();
  return n;
}

std::vector<int> Decomposition::word() const {
  std::vector<int> w;
  for (int k = t(); k >= 1; --k)
    for (int i = strings[k - 1].lo; i <= strings[k - 1].hi; ++i) w.push_back(i);
  return w;
}

WeylElement Decomposition::element() const {
  return WeylElement::from_word(ell, word());
}

Decomposition decompose(const WeylElement& w) {
  Decomposition d;
  d.ell = w.ell;
  WeylElement rest = w;
  std::vector<Interval> reversed;  // collected top string first
  for (int j = w.ell; j >= 1; --j) {
    int k = rest.apply(j + 1);
    if (k == j + 1) continue;  // staircase factor missing at this level
    reversed.push_back(Interval{k, j});
    // Peel (s_k ... s_j)^{-1} = s_j ... s_k off the left.
    WeylElement inv = WeylElement::identity(w.ell);
    for (int g = j; g >= k; --g) inv = inv * WeylElement::transposition(w.ell, g);
    rest = inv * rest;
  }
  if (!rest.is_identity())
    throw std::logic_error("staircase peeling did not terminate at the identity");
  d.strings.assign(reversed.rbegin(), reversed.rend());
  return d;
}

RepeatedGenerator repeated_generator(const Decomposition& d) {
  for (int i = 1; i <= d.ell; ++i) {
    auto js = d.gen_strings(i);
    if (js.size() > 1) return RepeatedGenerator{i, js.front(), js.back()};
  }
  throw NoRepeatedGenerator("every generator appears at most once; SU_q(2)-type case");
}

}  // namespace suq
