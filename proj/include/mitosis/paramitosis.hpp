#pragma once

// Mitosis on coordinate parallelepipeds mu_i <= x_i <= nu_i.
//
// A face of a box is a per-coordinate status. Coordinates with mu_i == nu_i are
// always Pinched and are ignored by every combinatorial rule below. Coordinate
// 0 may be unbounded above; this is how the fibers of a vertex cone look.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "mitosis/geometry.hpp"

namespace mitosis {

enum class Status { AtLow, AtHigh, Free, Pinched };

class Box {
 public:
  Box(std::vector<Rational> mu, std::vector<Rational> nu, bool first_unbounded = false);

  int n() const { return static_cast<int>(mu_.size()); }
  const std::vector<Rational>& mu() const { return mu_; }
  const std::vector<Rational>& nu() const { return nu_; }
  bool pinched(int i) const { return !unbounded(i) && mu_[i] == nu_[i]; }
  bool unbounded(int i) const { return i == 0 && first_unbounded_; }
  bool bounded() const { return !first_unbounded_; }
  bool integral() const;
  /// Number of non-pinched coordinates.
  int dim() const;

 private:
  std::vector<Rational> mu_, nu_;
  bool first_unbounded_;
};

struct BoxFace {
  std::vector<Status> status;

  int dim() const;
  bool operator==(const BoxFace& o) const { return status == o.status; }
  bool operator<(const BoxFace& o) const { return status < o.status; }
};

class ParamitosisError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Boundaries 0 <= j_0 < ... < j_m <= n splitting a face into a leading
/// all-AtHigh block, m essential-edge blocks and a trailing all-AtLow block.
/// Boundaries are canonical: each is 0 or a non-pinched coordinate (1-based).
using Partition = std::vector<int>;

/// Integer Laurent polynomial in one variable t.
class LaurentPoly {
 public:
  LaurentPoly() = default;
  static LaurentPoly monomial(long long exponent, long long coeff = 1);

  void add(long long exponent, long long coeff);
  long long coeff(long long exponent) const;
  const std::map<long long, long long>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  LaurentPoly operator+(const LaurentPoly& o) const;
  LaurentPoly operator-(const LaurentPoly& o) const;
  bool operator==(const LaurentPoly& o) const { return terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::map<long long, long long> terms_;
};

bool is_face_of(const Box& b, const BoxFace& g);
BoxFace low_vertex(const Box& b);
/// The face whose relative interior contains z (z must lie in the box).
BoxFace box_face_at(const Box& b, const Point& z);
/// Barycenter of a bounded face; for the unbounded coordinate a point strictly
/// above mu is used when Free.
Point box_face_interior(const Box& b, const BoxFace& g);
/// All vertices of a face (the unbounded coordinate is taken at mu).
std::vector<Point> box_face_vertices(const Box& b, const BoxFace& g);
std::vector<BoxFace> all_faces(const Box& b);

std::vector<BoxFace> essential_edges(const Box& b);
std::vector<BoxFace> paramitosis(const Box& b, const BoxFace& g);
std::optional<Partition> reduced_partition(const Box& b, const BoxFace& g);
std::vector<BoxFace> l_class(const Box& b, const BoxFace& g);

LaurentPoly t_operator(const Box& b, const LaurentPoly& f);
LaurentPoly chi(const Box& b, const std::vector<BoxFace>& faces);

/// Two-row table: row 1 marks x_i = mu_i, row 2 marks x_i = nu_i.
std::string render_box_face(const BoxFace& g);

}  // namespace mitosis
