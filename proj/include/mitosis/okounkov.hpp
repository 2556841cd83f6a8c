#pragma once

// Lowest-term valuation on polynomials in (x, y, z, t) under the lex order,
// and the section bases of L_{w_1} and L_{w_2} on the open cell of Sp_4/B.

#include <array>
#include <map>
#include <string>
#include <vector>

#include "mitosis/geometry.hpp"

namespace mitosis {

using Exponent = std::array<int, 4>;

class Poly4 {
 public:
  Poly4() = default;
  static Poly4 monomial(const Exponent& e, const Rational& c = 1);
  static Poly4 constant(const Rational& c) { return monomial({0, 0, 0, 0}, c); }
  static Poly4 x() { return monomial({1, 0, 0, 0}); }
  static Poly4 y() { return monomial({0, 1, 0, 0}); }
  static Poly4 z() { return monomial({0, 0, 1, 0}); }
  static Poly4 t() { return monomial({0, 0, 0, 1}); }

  void add(const Exponent& e, const Rational& c);
  const std::map<Exponent, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  Poly4 operator+(const Poly4& o) const;
  Poly4 operator-(const Poly4& o) const;
  Poly4 operator-() const;
  Poly4 operator*(const Poly4& o) const;
  bool operator==(const Poly4& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::map<Exponent, Rational> terms_;  // std::array orders lexicographically
};

class ValuationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The exponent of the lowest term: lex-minimal, x first.
Exponent lex_lowest_valuation(const Poly4& f);
bool valuation_additivity_check(const Poly4& f, const Poly4& g);

/// <1, -x, y + xz, z>
std::vector<Poly4> section_basis_w1();
/// <1, -(y + 2xz + x^2 t), z + xt, yt - z^2, t>
std::vector<Poly4> section_basis_w2();

/// Valuations of all products f g with f, g running over the two bases.
std::vector<Exponent> valuation_points_rho();

IntPoint to_int_point(const Exponent& e);

}  // namespace mitosis
