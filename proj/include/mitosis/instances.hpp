#pragma once

// The concrete polytopes and cones: Gelfand-Zetlin, the symplectic DDO
// polytope, the adapted-string cone of Sp_2n and the Sp_4 Newton-Okounkov body.

#include <utility>
#include <vector>

#include "mitosis/parapolytope.hpp"
#include "mitosis/weyl.hpp"

namespace mitosis {

class InstanceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct GZSpec {
  std::vector<Rational> lambda;  // non-decreasing
  int n() const { return static_cast<int>(lambda.size()); }
};

// Triangle entry t^i_k (row i of the interlacing table, k-th from the left) is
// the coordinate x^i_{n-i-k+1}: each row is read right to left, so that x^i_1
// is the coordinate that moves along the edge of GZ through the lowest vertex.
int gz_coord(const Decomposition& dc, int n, int i, int k);
/// Index of the constraint t^i_k >= t^{i-1}_k.
int gz_lower_constraint(int n, int i, int k);
/// Index of the constraint t^i_k <= t^{i-1}_{k+1}.
int gz_upper_constraint(int n, int i, int k);

/// GZ_lambda - a_lambda (or GZ_lambda itself with shifted = false).
Parapolytope gz_polytope(const GZSpec& spec, bool shifted = true);
/// The GL_n weight (lambda_2-lambda_1) w_1 + ... + (lambda_n-lambda_{n-1}) w_{n-1}.
Weight gz_weight(const GZSpec& spec);
Point gz_lowest_vertex(const GZSpec& spec);

struct SpddoSpec {
  Rational l1, l2;
};

/// Facets of SP_lambda in constraint order: H1+..H4+ (through 0) then H1-..H4-.
enum Sp4Facet { H1p = 0, H2p, H3p, H4p, H1m, H2m, H3m, H4m };
Parapolytope sp4_ddo(const SpddoSpec& spec);
/// (l1, l2) in fundamental-weight coordinates, alpha_1 short.
Weight sp4_weight(const SpddoSpec& spec);

/// The chain of (*) for index i, bottom to top, as (k, l) labels of x^k_l.
std::vector<std::pair<int, int>> sp2n_chain(int n, int i);
/// The reduced word (s_n..s_2 s_1 s_2..s_n)...(s_2 s_1 s_2)(s_1).
std::vector<int> sp2n_word(int n);
/// The cone C_0; constraint for x^k_l is the one with x^k_l on the larger side.
Parapolytope sp2n_adapted_cone(int n);
int sp2n_constraint(const Parapolytope& cone, int k, int l);

/// Delta_v(X, L_lambda) in the valuation coordinates.
HPolytope sp4_no_body(const Rational& l1, const Rational& l2);
Point phi(const Point& y);
std::vector<std::vector<Rational>> phi_matrix();
Point phi_shift(const Rational& l1, const Rational& l2);

}  // namespace mitosis
