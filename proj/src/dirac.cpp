#include "suq/dirac.hpp"

#include <cmath>
#include <cstdlib>
#include <sstream>

#include "suq/errors.hpp"

namespace suq {

namespace {

struct ConstExpr final : DiracExpr {
  double c;
  explicit ConstExpr(double v) : c(v) {}
  double eval(const PointVec&) const override { return c; }
  std::string describe() const override {
    std::ostringstream os;
    os << c;
    return os.str();
  }
};

struct CoordExpr final : DiracExpr {
  int flat;
  std::string name;
  CoordExpr(int f, std::string n) : flat(f), name(std::move(n)) {}
  double eval(const PointVec& p) const override { return p[flat]; }
  std::string describe() const override { return name; }
};

struct AbsExpr final : DiracExpr {
  DiracPtr e;
  explicit AbsExpr(DiracPtr x) : e(std::move(x)) {}
  double eval(const PointVec& p) const override { return std::abs(e->eval(p)); }
  std::string describe() const override { return "|" + e->describe() + "|"; }
};

struct MaxExpr final : DiracExpr {
  DiracPtr a, b;
  MaxExpr(DiracPtr x, DiracPtr y) : a(std::move(x)), b(std::move(y)) {}
  double eval(const PointVec& p) const override { return std::max(a->eval(p), b->eval(p)); }
  std::string describe() const override {
    return "max(" + a->describe() + "," + b->describe() + ")";
  }
};

struct SumExpr final : DiracExpr {
  std::vector<std::pair<double, DiracPtr>> terms;
  explicit SumExpr(std::vector<std::pair<double, DiracPtr>> t) : terms(std::move(t)) {}
  double eval(const PointVec& p) const override {
    double s = 0.0;
    for (const auto& [w, e] : terms) s += w * e->eval(p);
    return s;
  }
  std::string describe() const override {
    std::ostringstream os;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      if (i) os << " + ";
      if (terms[i].first != 1.0) os << terms[i].first << "*";
      os << terms[i].second->describe();
    }
    return os.str();
  }
};

struct Exp2Expr final : DiracExpr {
  DiracPtr e;
  explicit Exp2Expr(DiracPtr x) : e(std::move(x)) {}
  double eval(const PointVec& p) const override { return std::exp2(e->eval(p)); }
  std::string describe() const override { return "2^(" + e->describe() + ")"; }
};

}  // namespace

DiracPtr dirac_const(double c) { return std::make_shared<ConstExpr>(c); }

DiracPtr dirac_coord(const CoordMap& map, int k, int i) {
  const int f = map.index_of(k, i);
  if (f < 0)
    throw ParseError("no coordinate (" + std::to_string(k) + "," + std::to_string(i) + ")");
  return std::make_shared<CoordExpr>(f, map.label(f));
}

DiracPtr dirac_abs(DiracPtr e) { return std::make_shared<AbsExpr>(std::move(e)); }
DiracPtr dirac_max(DiracPtr a, DiracPtr b) {
  return std::make_shared<MaxExpr>(std::move(a), std::move(b));
}
DiracPtr dirac_sum(std::vector<std::pair<double, DiracPtr>> terms) {
  return std::make_shared<SumExpr>(std::move(terms));
}
DiracPtr dirac_exp2(DiracPtr e) { return std::make_shared<Exp2Expr>(std::move(e)); }

DiracPtr dirac_abs_sum(const CoordMap& map) {
  std::vector<std::pair<double, DiracPtr>> terms;
  for (int f = 0; f < map.size(); ++f)
    terms.emplace_back(1.0, dirac_abs(std::make_shared<CoordExpr>(f, map.label(f))));
  return dirac_sum(std::move(terms));
}

DiracPtr parse_dirac(const CoordMap& map, const std::string& spec) {
  if (spec == "abs-sum" || spec.empty()) return dirac_abs_sum(map);
  const auto colon = spec.find(':');
  const std::string head = spec.substr(0, colon);
  const std::string rest = colon == std::string::npos ? "" : spec.substr(colon + 1);
  if (head == "const") return dirac_const(std::stod(rest));
  if (head == "coord" || head == "exp2") {
    const auto comma = rest.find(',');
    if (comma == std::string::npos) throw ParseError("expected '<k>,<i>' in dirac spec");
    const int k = std::stoi(rest.substr(0, comma));
    const int i = std::stoi(rest.substr(comma + 1));
    DiracPtr c = dirac_coord(map, k, i);
    return head == "exp2" ? dirac_exp2(std::move(c)) : c;
  }
  throw ParseError("unknown dirac spec '" + spec + "'");
}

}  // namespace suq
