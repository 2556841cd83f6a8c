#include "mitosis/okounkov.hpp"

#include <set>

namespace mitosis {

Poly4 Poly4::monomial(const Exponent& e, const Rational& c) {
  Poly4 p;
  p.add(e, c);
  return p;
}

void Poly4::add(const Exponent& e, const Rational& c) {
  if (sgn(c) == 0) return;
  auto [it, fresh] = terms_.emplace(e, c);
  if (fresh) return;
  it->second += c;
  if (sgn(it->second) == 0) terms_.erase(it);
}

Poly4 Poly4::operator+(const Poly4& o) const {
  Poly4 r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

Poly4 Poly4::operator-() const {
  Poly4 r;
  for (const auto& [e, c] : terms_) r.add(e, -c);
  return r;
}

Poly4 Poly4::operator-(const Poly4& o) const { return *this + (-o); }

Poly4 Poly4::operator*(const Poly4& o) const {
  Poly4 r;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      Exponent e;
      for (int k = 0; k < 4; ++k) e[k] = a[k] + b[k];
      r.add(e, ca * cb);
    }
  }
  return r;
}

std::string Poly4::to_string() const {
  if (terms_.empty()) return "0";
  static const char* vars = "xyzt";
  std::string s;
  for (const auto& [e, c] : terms_) {
    std::string mono;
    for (int k = 0; k < 4; ++k) {
      if (e[k] == 0) continue;
      mono += vars[k];
      if (e[k] > 1) mono += "^" + std::to_string(e[k]);
    }
    Rational a = abs(c);
    std::string coef = (a == 1 && !mono.empty()) ? "" : mitosis::to_string(a);
    if (!s.empty()) s += sgn(c) < 0 ? " - " : " + ";
    else if (sgn(c) < 0) s += "-";
    s += coef + mono;
  }
  return s;
}

Exponent lex_lowest_valuation(const Poly4& f) {
  if (f.is_zero()) throw ValuationError("valuation of the zero polynomial");
  return f.terms().begin()->first;
}

bool valuation_additivity_check(const Poly4& f, const Poly4& g) {
  Exponent a = lex_lowest_valuation(f), b = lex_lowest_valuation(g);
  Exponent sum;
  for (int k = 0; k < 4; ++k) sum[k] = a[k] + b[k];
  return lex_lowest_valuation(f * g) == sum;
}

std::vector<Poly4> section_basis_w1() {
  using P = Poly4;
  return {P::constant(1), -P::x(), P::y() + P::x() * P::z(), P::z()};
}

std::vector<Poly4> section_basis_w2() {
  using P = Poly4;
  P two = P::constant(2);
  return {P::constant(1), -(P::y() + two * P::x() * P::z() + P::x() * P::x() * P::t()),
          P::z() + P::x() * P::t(), P::y() * P::t() - P::z() * P::z(), P::t()};
}

std::vector<Exponent> valuation_points_rho() {
  std::set<Exponent> out;
  for (const auto& f : section_basis_w1()) {
    for (const auto& g : section_basis_w2()) out.insert(lex_lowest_valuation(f * g));
  }
  return {out.begin(), out.end()};
}

IntPoint to_int_point(const Exponent& e) { return {e[0], e[1], e[2], e[3]}; }

}  // namespace mitosis
