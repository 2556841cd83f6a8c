#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <map>
#include <set>

#include "mitosis/geometry.hpp"
#include "test_support.hpp"

using namespace mitosis;
using mitosis::test::hs;
using mitosis::test::pt;

namespace {

HPolytope segment() { return HPolytope(1, {hs({1}, 0), hs({-1}, 1)}); }

// SP_rho written out directly, in y coordinates.
HPolytope sp_rho() {
  return HPolytope(4, {hs({1, 0, 0, 0}, 0), hs({-1, 0, 0, 0}, 1), hs({1, -1, 0, 0}, 1),
                       hs({0, 2, -1, 0}, 0), hs({0, 1, -1, 0}, 1), hs({0, 0, 0, 1}, 0),
                       hs({0, 0, 0, -1}, 1), hs({0, 0, 1, -2}, 0)});
}

// GZ pattern for lambda = (0,1,2) in coordinates (x11, x12, x21).
HPolytope gz012() {
  return HPolytope(3, {hs({1, 0, 0}, 0), hs({-1, 0, 0}, 1), hs({0, 1, 0}, -1), hs({0, -1, 0}, 2),
                       hs({-1, 0, 1}, 0), hs({0, 1, -1}, 0)});
}

// Affine dimension of a point set, computed from differences.
int affine_rank(const std::vector<Point>& pts) {
  if (pts.empty()) return -1;
  std::vector<std::vector<Rational>> rows;
  for (const auto& p : pts) {
    std::vector<Rational> r;
    for (std::size_t j = 0; j < p.size(); ++j) r.push_back(p[j] - pts[0][j]);
    rows.push_back(r);
  }
  return rank(rows, static_cast<int>(pts[0].size()));
}

// Every integer point in [-1, 10]^d that satisfies all constraints.
std::vector<IntPoint> naive_scan(const HPolytope& p) {
  std::vector<IntPoint> out;
  IntPoint x(p.dim(), -1);
  while (true) {
    if (p.contains(to_point(x))) out.push_back(x);
    int j = p.dim() - 1;
    while (j >= 0 && x[j] == 10) {
      x[j] = -1;
      --j;
    }
    if (j < 0) break;
    ++x[j];
  }
  return out;
}

}  // namespace

TEST_CASE("vertices of small polytopes") {
  auto sq = mitosis::test::unit_cube(2);
  std::vector<Point> expect{pt({0, 0}), pt({0, 1}), pt({1, 0}), pt({1, 1})};
  CHECK(vertices(sq) == expect);
  CHECK(vertices(sp_rho()).size() == 11);

  // GZ(0,1,2): x11 in {0,1}, x12 in {1,2}, x21 pinned to one of them.
  std::set<Point> oracle;
  for (int a : {0, 1}) {
    for (int b : {1, 2}) {
      for (int c : {a, b}) oracle.insert(pt({a, b, c}));
    }
  }
  auto v = vertices(gz012());
  CHECK(std::set<Point>(v.begin(), v.end()) == oracle);
  CHECK(v.size() == 7);
}

TEST_CASE("unbounded input is refused") {
  HPolytope half(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({0, -1}, 1)});
  CHECK_THROWS_WITH_AS(vertices(half), doctest::Contains("unbounded"), GeometryError);
  HPolytope cone(2, {hs({1, 0}, 0), hs({0, 1}, 0)}, true);
  CHECK_THROWS_AS(lattice_points(cone), GeometryError);
  CHECK_THROWS_AS(vertices(cone), GeometryError);
}

TEST_CASE("lattice points") {
  CHECK(lattice_points(mitosis::test::unit_cube(2)).size() == 4);
  CHECK(lattice_points(sp_rho()).size() == 16);

  int patterns = 0;
  for (int a = 0; a <= 1; ++a) {
    for (int b = 1; b <= 2; ++b) {
      for (int c = a; c <= b; ++c) ++patterns;
    }
  }
  CHECK(patterns == 8);
  CHECK(lattice_points(gz012()).size() == 8);
}

TEST_CASE("lattice points agree with a naive scan") {
  for (const auto& p : {sp_rho(), gz012(), mitosis::test::unit_cube(3), segment()}) {
    auto fast = lattice_points(p);
    CHECK(fast == naive_scan(p));
  }
  HPolytope tri(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-2, -3}, 7)});
  CHECK(lattice_points(tri) == naive_scan(tri));
}

TEST_CASE("face lattice") {
  CHECK(face_lattice(segment()).size() == 3);
  CHECK(face_lattice(mitosis::test::unit_cube(2)).size() == 9);

  auto faces = face_lattice(sp_rho());
  std::map<int, int> f;
  for (const auto& face : faces) {
    ++f[face.dim];
    CHECK(face.dim == affine_rank(face_vertices(sp_rho(), face)));
  }
  CHECK(f[0] == 11);
  CHECK(f[4] == 1);
  CHECK(f[0] - f[1] + f[2] - f[3] == 0);

  std::vector<Point> zero_dim;
  for (const auto& face : faces) {
    if (face.dim == 0) zero_dim.push_back(interior_point(sp_rho(), face));
  }
  std::sort(zero_dim.begin(), zero_dim.end());
  CHECK(zero_dim == vertices(sp_rho()));
}

TEST_CASE("minimal face and interior points") {
  auto sq = mitosis::test::unit_cube(2);
  Rational half(1, 2);
  auto whole = minimal_face_containing(sq, pt({half, half}));
  CHECK(whole.dim == 2);
  CHECK(whole.tight.empty());
  auto edge = minimal_face_containing(sq, pt({0, half}));
  CHECK(edge.dim == 1);
  CHECK(edge.tight.indices() == std::vector<int>{0});
  CHECK_THROWS_AS(minimal_face_containing(sq, pt({2, 0})), GeometryError);

  auto origin = minimal_face_containing(sp_rho(), pt({0, 0, 0, 0}));
  CHECK(origin.dim == 0);
  CHECK(interior_point(sp_rho(), origin) == pt({0, 0, 0, 0}));

  auto seg_face = minimal_face_containing(segment(), pt({half}));
  CHECK(interior_point(segment(), seg_face) == pt({half}));

  auto sp_edge = minimal_face_containing(sp_rho(), pt({half, 0, 0, 0}));
  CHECK(sp_edge.dim == 1);
  CHECK(interior_point(sp_rho(), sp_edge) == pt({half, 0, 0, 0}));
}

TEST_CASE("interior point round-trips through minimal_face_containing") {
  for (const auto& p : {sp_rho(), gz012(), mitosis::test::unit_cube(3)}) {
    for (const auto& f : face_lattice(p)) {
      CHECK(minimal_face_containing(p, interior_point(p, f)) == f);
    }
  }
}

TEST_CASE("faces are canonical") {
  // Square with the redundant constraint x + y <= 2, which is tight only at
  // (1,1): three different tight sets describe that vertex.
  HPolytope sq2(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, 1), hs({0, -1}, 1), hs({-1, -1}, 2)});
  Face a = face_from_tight(sq2, TightSet::of({2, 3}));
  CHECK(a == face_from_tight(sq2, TightSet::of({4})));
  CHECK(a == face_from_tight(sq2, TightSet::of({2, 4})));
  CHECK(a.tight == TightSet::of({2, 3, 4}));
  CHECK(a.dim == 0);
  auto p = sp_rho();
  for (const auto& f : face_lattice(p)) {
    CHECK(face_from_tight(p, f.tight) == f);
  }
  // A tight set that is not closed canonicalizes to its closure.
  Face c = face_from_tight(p, TightSet::of({5, 7}));
  CHECK(TightSet::of({5, 7}).is_subset_of(c.tight));
  CHECK(face_from_tight(p, c.tight) == c);
  Face empty = face_from_tight(p, TightSet::of({0, 1}));
  CHECK(empty.is_empty());
}

TEST_CASE("polytope equality") {
  auto sq = mitosis::test::unit_cube(2);
  CHECK(polytopes_equal(sq, sq));
  auto shifted = affine_image(sq, {{1, 0}, {0, 1}}, pt({1, 0}));
  CHECK_FALSE(polytopes_equal(sq, shifted));
  CHECK_THROWS_AS(polytopes_equal(sq, segment()), GeometryError);

  // Same square with redundant constraints and a different description.
  HPolytope sq2(2, {hs({1, 0}, 0), hs({0, 1}, 0), hs({-1, 0}, 1), hs({0, -1}, 1), hs({-1, -1}, 2)});
  auto flipped = affine_image(sq, {{-1, 0}, {0, 1}}, pt({1, 0}));
  std::vector<HPolytope> all{sq, sq2, flipped, shifted};
  for (const auto& a : all) {
    CHECK(polytopes_equal(a, a));
    for (const auto& b : all) {
      CHECK(polytopes_equal(a, b) == polytopes_equal(b, a));
      for (const auto& c : all) {
        if (polytopes_equal(a, b) && polytopes_equal(b, c)) CHECK(polytopes_equal(a, c));
      }
    }
  }
  CHECK(polytopes_equal(sq, sq2));
  CHECK(polytopes_equal(sq, flipped));
}

TEST_CASE("cones: rays and interior points") {
  HPolytope quadrant(2, {hs({1, 0}, 0), hs({0, 1}, 0)}, true);
  const auto& g = quadrant.generators();
  CHECK(g.vertices.size() == 1);
  CHECK(g.rays.size() == 2);
  Face whole = face_from_tight(quadrant, TightSet());
  CHECK(whole.dim == 2);
  auto c = interior_point(quadrant, whole);
  CHECK(minimal_face_containing(quadrant, c) == whole);
  Face axis = face_from_tight(quadrant, TightSet::of({0}));
  CHECK(axis.dim == 1);
  CHECK(minimal_face_containing(quadrant, interior_point(quadrant, axis)) == axis);
}

TEST_CASE("unions of faces are inclusion-reduced") {
  auto sq = mitosis::test::unit_cube(2);
  Face edge = face_from_tight(sq, TightSet::of({0}));
  Face corner = face_from_tight(sq, TightSet::of({0, 2}));
  UnionOfFaces u({corner, edge, edge});
  CHECK(u.size() == 1);
  CHECK(u.faces().front() == edge);
  CHECK(lattice_points(sq, u).size() == 2);
}

TEST_CASE("rational parsing") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(to_string(parse_rational("-6/4")) == "-3/2");
  CHECK(to_string(Rational(5)) == "5");
  CHECK_THROWS_AS(parse_rational("abc"), GeometryError);
  CHECK_THROWS_AS(parse_rational("1/0"), GeometryError);
}
