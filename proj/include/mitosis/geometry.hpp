#pragma once

// Exact rational polyhedral kernel.
//
// Polytopes are given by half-spaces a.x + b >= 0 over the rationals. A face is
// identified by its canonical tight set: the inclusion-maximal set of
// constraints vanishing identically on it. Everything here is brute force over
// constraint subsets, which is fine for the dimensions we care about (d <= 9).

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace mitosis {

using Rational = mpq_class;
using Point = std::vector<Rational>;
using IntPoint = std::vector<long long>;

class GeometryError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Set of constraint indices, at most 64 constraints per polytope.
class TightSet {
 public:
  static constexpr int kMaxConstraints = 64;

  TightSet() = default;
  explicit TightSet(std::uint64_t bits) : bits_(bits) {}
  static TightSet all(int count);
  static TightSet of(const std::vector<int>& indices);

  bool contains(int k) const { return (bits_ >> k) & 1u; }
  void insert(int k) { bits_ |= std::uint64_t{1} << k; }
  void erase(int k) { bits_ &= ~(std::uint64_t{1} << k); }
  bool empty() const { return bits_ == 0; }
  int size() const { return __builtin_popcountll(bits_); }
  std::uint64_t bits() const { return bits_; }
  std::vector<int> indices() const;

  bool is_subset_of(const TightSet& o) const { return (bits_ & ~o.bits_) == 0; }
  TightSet operator&(const TightSet& o) const { return TightSet(bits_ & o.bits_); }
  TightSet operator|(const TightSet& o) const { return TightSet(bits_ | o.bits_); }

  bool operator==(const TightSet& o) const { return bits_ == o.bits_; }
  bool operator!=(const TightSet& o) const { return bits_ != o.bits_; }
  /// Lexicographic on the sorted index lists.
  bool operator<(const TightSet& o) const;

 private:
  std::uint64_t bits_ = 0;
};

/// The constraint a.x + b >= 0.
struct Halfspace {
  std::vector<Rational> a;
  Rational b;

  Rational eval(const Point& x) const;
  /// a.r, the homogeneous part, used for recession directions.
  Rational eval_linear(const Point& r) const;
  bool operator==(const Halfspace& o) const { return a == o.a && b == o.b; }
};

namespace detail {
struct Generators;
struct GeneratorCache;
}  // namespace detail

class HPolytope {
 public:
  HPolytope(int dim, std::vector<Halfspace> halfspaces, bool cone = false);

  int dim() const { return dim_; }
  bool is_cone() const { return cone_; }
  int size() const { return static_cast<int>(halfspaces_.size()); }
  const std::vector<Halfspace>& halfspaces() const { return halfspaces_; }
  const Halfspace& operator[](int k) const { return halfspaces_[k]; }

  bool contains(const Point& x) const;
  /// Constraints vanishing at x.
  TightSet tight_at(const Point& x) const;

  // Vertices and recession rays, computed once and shared between copies.
  const detail::Generators& generators() const;

 private:
  int dim_;
  std::vector<Halfspace> halfspaces_;
  bool cone_;
  std::shared_ptr<detail::GeneratorCache> cache_;
};

namespace detail {
struct Generators {
  std::vector<Point> vertices;             // sorted lexicographically
  std::vector<TightSet> vertex_tight;      // tight set of each vertex
  std::vector<Point> rays;                 // extreme rays of the recession cone
  std::vector<TightSet> ray_tight;         // constraints with a.r == 0
};
}  // namespace detail

struct Face {
  TightSet tight;
  int dim = -1;

  bool is_empty() const { return dim < 0; }
  bool operator==(const Face& o) const { return tight == o.tight; }
  bool operator!=(const Face& o) const { return tight != o.tight; }
  bool operator<(const Face& o) const { return tight < o.tight; }
};

/// Canonical union of faces of one polytope: sorted, no member contained in
/// another.
class UnionOfFaces {
 public:
  UnionOfFaces() = default;
  explicit UnionOfFaces(std::vector<Face> faces);

  const std::vector<Face>& faces() const { return faces_; }
  bool empty() const { return faces_.empty(); }
  int size() const { return static_cast<int>(faces_.size()); }
  bool operator==(const UnionOfFaces& o) const { return faces_ == o.faces_; }

 private:
  std::vector<Face> faces_;
};

// -- linear algebra helpers ---------------------------------------------------

int rank(std::vector<std::vector<Rational>> rows, int cols);
/// Unique solution of rows.x = rhs, or empty if the system is singular.
bool solve_square(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs,
                  Point& out);
/// A nonzero kernel vector of a matrix of rank cols-1.
Point kernel_vector(std::vector<std::vector<Rational>> rows, int cols);

// -- polytope operations ------------------------------------------------------

std::vector<Point> vertices(const HPolytope& p);
std::vector<IntPoint> lattice_points(const HPolytope& p);
std::vector<Face> face_lattice(const HPolytope& p);

/// The face whose relative interior contains x.
Face minimal_face_containing(const HPolytope& p, const Point& x);
/// The smallest face on which every constraint in `t` is tight (canonicalized).
Face face_from_tight(const HPolytope& p, const TightSet& t);
/// Barycenter of the face's vertices plus the sum of its rays.
Point interior_point(const HPolytope& p, const Face& f);
std::vector<Point> face_vertices(const HPolytope& p, const Face& f);
int face_dimension(const HPolytope& p, const TightSet& t);

bool face_contains(const HPolytope& p, const Face& f, const Point& x);
/// f is a subset of g (both canonical faces of p).
bool face_subset(const Face& f, const Face& g);
/// Intersection of two faces, canonicalized (possibly empty).
Face face_meet(const HPolytope& p, const Face& f, const Face& g);

bool polytopes_equal(const HPolytope& p, const HPolytope& q);

/// The image {m.x + shift}; m must be invertible.
HPolytope affine_image(const HPolytope& p, const std::vector<std::vector<Rational>>& m,
                       const Point& shift);

/// Lattice points of the union of faces, each once, sorted.
std::vector<IntPoint> lattice_points(const HPolytope& p, const UnionOfFaces& u);

Point to_point(const IntPoint& x);
std::string to_string(const Rational& q);
Rational parse_rational(const std::string& s);

}  // namespace mitosis
