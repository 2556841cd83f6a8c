#pragma once

// Parapolytopes over a splitting R^d = R^{d_1} + ... + R^{d_r}. Polytope
// coordinates are the y-labels y_1..y_d; the coordinate x^i_j of summand i is
// y_k with y_{d-j'+1} = x^{i_{j'}}_{p_{j'}}, p_{j'} = #{k >= j' : i_k = i_{j'}}.
// Inside a fiber the box coordinates are x^i_1, ..., x^i_{d_i} in that order.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "mitosis/geometry.hpp"
#include "mitosis/paramitosis.hpp"
#include "mitosis/weyl.hpp"

namespace mitosis {

class ParapolytopeError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class Decomposition {
 public:
  Decomposition() = default;
  /// dims are the letter multiplicities of `word` (letters 1..rank).
  Decomposition(int rank, std::vector<int> word);

  int r() const { return static_cast<int>(dims_.size()); }
  int d() const { return static_cast<int>(word_.size()); }
  const std::vector<int>& dims() const { return dims_; }
  const std::vector<int>& word() const { return word_; }

  /// 0-based polytope coordinate (y_{k+1}) of x^i_j.
  int coord(int i, int j) const;
  /// (i, j) with y_{k+1} = x^i_j.
  std::pair<int, int> label(int k) const;
  /// Polytope coordinates of summand i, ordered by j.
  const std::vector<int>& summand(int i) const { return summands_[i - 1]; }
  std::string coord_name(int k) const;

 private:
  std::vector<int> dims_;
  std::vector<int> word_;
  std::vector<std::vector<int>> summands_;
  std::vector<std::pair<int, int>> labels_;
};

struct Parapolytope {
  HPolytope poly;
  Decomposition decomp;

  Parapolytope(HPolytope p, Decomposition dc);
  int dim() const { return poly.dim(); }
};

struct Fiber {
  Box box;                  // in coordinates x^i_1..x^i_{d_i}
  std::vector<int> coords;  // polytope coordinates of those
};

/// P meets c + R^{d_i} in c + Pi(mu, nu); nullopt when empty. The box is
/// certified against the constraint system; failure throws.
std::optional<Fiber> fiber(const Parapolytope& p, int i, const Point& c);
Point fiber_coords(const Fiber& f, const Point& x);
Point with_fiber_coords(const Fiber& f, Point base, const Point& z);

/// Fiber through c together with the face of it that Gamma cuts out.
struct FiberFace {
  Point c;
  Fiber fiber;
  BoxFace face;
};
FiberFace fiber_face(const Parapolytope& p, int i, const Face& g, const Point& c);
FiberFace fiber_face(const Parapolytope& p, int i, const Face& g);

std::vector<Face> mitosis_i(const Parapolytope& p, int i, const Face& g);
/// Same, computed from a caller-chosen point of the relative interior of g.
std::vector<Face> mitosis_i_at(const Parapolytope& p, int i, const Face& g, const Point& c);
bool is_L_i_reduced(const Parapolytope& p, int i, const Face& g);
std::vector<Face> l_class_i(const Parapolytope& p, int i, const Face& g);

/// 0 is a vertex (the apex for cones) and the polytope lies in the positive
/// octant.
bool has_origin_vertex(const Parapolytope& p);
/// Every axis fiber through 0 has dimension at most 1.
bool is_admissible(const Parapolytope& p);

/// Sample points used by the certificates: vertices, lattice points and face
/// barycenters (bounded), or face interior points (cones).
std::vector<Point> certificate_samples(const Parapolytope& p);
/// Fiber certification at every sample point and every summand.
bool certify_parapolytope(const Parapolytope& p);

/// sigma_i(mu_c) + sigma_i(nu_c) = (-w_0 lambda - p(c), alpha_i) at c.
bool balanced_at(const Parapolytope& p, const Weight& lambda, const RootDatum& rd, int i,
                 const Point& c);
bool is_balanced(const Parapolytope& p, const Weight& lambda, const RootDatum& rd);

/// sigma_i(x) and p(x) = sum_i sigma_i(x) alpha_i (p(x) must be integral).
Rational sigma(const Parapolytope& p, int i, const Point& x);
Weight p_map(const Parapolytope& p, const RootDatum& rd, const IntPoint& x);

/// All nonempty faces; for cones, enumerated through tight subsets.
std::vector<Face> all_faces(const HPolytope& p);

}  // namespace mitosis
