#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <set>

#include "mitosis/instances.hpp"
#include "mitosis/parapolytope.hpp"

using namespace mitosis;

namespace {

Face face_of(const Parapolytope& p, const std::vector<int>& tight) {
  return face_from_tight(p.poly, TightSet::of(tight));
}

std::set<Face> as_set(const std::vector<Face>& v) { return {v.begin(), v.end()}; }

Parapolytope sp(long a, long b) { return sp4_ddo({Rational(a), Rational(b)}); }
Parapolytope gz(std::vector<long> lam) {
  GZSpec s;
  for (long v : lam) s.lambda.push_back(Rational(v));
  return gz_polytope(s);
}

// Faces reachable from 0 by any chain of mitosis operations.
std::set<Face> chain_reachable(const Parapolytope& p) {
  Face zero = minimal_face_containing(p.poly, Point(p.dim(), Rational(0)));
  std::set<Face> seen{zero};
  std::vector<Face> queue{zero};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (int i = 1; i <= p.decomp.r(); ++i) {
      for (const auto& f : mitosis_i(p, i, queue[q])) {
        if (seen.insert(f).second) queue.push_back(f);
      }
    }
  }
  return seen;
}

}  // namespace

TEST_CASE("decomposition labels") {
  Decomposition gl3(2, {1, 2, 1});
  CHECK(gl3.dims() == std::vector<int>{2, 1});
  CHECK(gl3.coord(1, 1) == 0);
  CHECK(gl3.coord(2, 1) == 1);
  CHECK(gl3.coord(1, 2) == 2);

  Decomposition spd(2, {2, 1, 2, 1});
  CHECK(spd.coord(1, 1) == 0);
  CHECK(spd.coord(2, 1) == 1);
  CHECK(spd.coord(1, 2) == 2);
  CHECK(spd.coord(2, 2) == 3);
  CHECK(spd.coord_name(2) == "x^1_2");

  Decomposition gl4(3, {1, 2, 1, 3, 2, 1});
  std::vector<std::pair<int, int>> expect{{1, 1}, {2, 1}, {3, 1}, {1, 2}, {2, 2}, {1, 3}};
  for (int k = 0; k < 6; ++k) CHECK(gl4.label(k) == expect[k]);

  CHECK_THROWS_AS(Decomposition(2, {1, 1}), ParapolytopeError);
}

TEST_CASE("Gelfand-Zetlin polytopes") {
  auto seg = gz({0, 1});
  CHECK(vertices(seg.poly).size() == 2);
  CHECK(lattice_points(seg.poly).size() == 2);
  auto p = gz({0, 1, 2});
  CHECK(lattice_points(p.poly).size() == 8);
  CHECK(has_origin_vertex(p));
  GZSpec bad{{Rational(2), Rational(1)}};
  CHECK_THROWS_AS(gz_polytope(bad), InstanceError);

  // Unshifted form: the lowest vertex a_lambda is a vertex.
  GZSpec s{{Rational(0), Rational(2), Rational(5)}};
  auto raw = gz_polytope(s, false);
  auto a = gz_lowest_vertex(s);
  CHECK(minimal_face_containing(raw.poly, a).dim == 0);
  // a_lambda = (x^1 row = lambda_1, lambda_2; x^2 row = lambda_1)
  CHECK(a[raw.decomp.coord(2, 1)] == 0);

  // Pattern count oracle.
  for (const auto& lam : std::vector<std::vector<long>>{{0, 1, 2}, {0, 0, 3}, {1, 2, 4}, {0, 2, 2}}) {
    long long count = 0;
    for (long a1 = lam[0]; a1 <= lam[1]; ++a1) {
      for (long a2 = lam[1]; a2 <= lam[2]; ++a2) {
        for (long b = a1; b <= a2; ++b) ++count;
      }
    }
    CHECK(static_cast<long long>(lattice_points(gz(lam).poly).size()) == count);
  }
}

TEST_CASE("symplectic DDO polytope") {
  auto p = sp(1, 1);
  CHECK(vertices(p.poly).size() == 11);
  CHECK(lattice_points(p.poly).size() == 16);
  auto z = sp(0, 0);
  CHECK(vertices(z.poly).size() == 1);
  CHECK(lattice_points(z.poly).size() == 1);
  for (const auto& f : {H1p, H2p, H3p, H4p, H1m, H2m, H3m, H4m}) {
    CHECK(face_of(p, {f}).dim == 3);
  }
}

TEST_CASE("adapted-string cone") {
  auto c1 = sp2n_adapted_cone(1);
  CHECK(c1.poly.size() == 1);
  auto c3 = sp2n_adapted_cone(3);
  CHECK(c3.poly.size() == 9);
  CHECK(c3.decomp.dims() == std::vector<int>{3, 4, 2});
  CHECK(sp2n_chain(3, 3) == std::vector<std::pair<int, int>>{{3, 2}, {2, 4}, {1, 3}, {2, 3}, {3, 1}});
  for (int n = 1; n <= 3; ++n) {
    auto c = sp2n_adapted_cone(n);
    auto f0 = minimal_face_containing(c.poly, Point(c.dim(), Rational(0)));
    CHECK(f0.dim == 0);
    CHECK(f0.tight.size() == n * n);
    CHECK(has_origin_vertex(c));
    CHECK(is_admissible(c));
  }

  // C_0 for n = 2 is the tangent cone of SP_lambda at 0 under
  // x = (y1, y3, 2 y2, 2 y4) in the order (x^1_1, x^1_2, x^2_1, x^2_2).
  auto p = sp(1, 1);
  std::vector<Halfspace> tangent;
  for (int k : {H1p, H2p, H3p, H4p}) tangent.push_back(p.poly[k]);
  HPolytope tc(4, tangent, true);
  auto c2 = sp2n_adapted_cone(2);
  std::set<Point> mapped;
  for (const auto& r : tc.generators().rays) {
    Point x(4);
    x[c2.decomp.coord(1, 1)] = r[0];
    x[c2.decomp.coord(1, 2)] = r[2];
    x[c2.decomp.coord(2, 1)] = 2 * r[1];
    x[c2.decomp.coord(2, 2)] = 2 * r[3];
    Rational s = 0;
    for (auto& v : x) s = std::max(s, v);
    for (auto& v : x) {
      v /= s;
      v.canonicalize();
    }
    mapped.insert(x);
  }
  std::set<Point> rays;
  for (auto r : c2.poly.generators().rays) {
    Rational s = 0;
    for (auto& v : r) s = std::max(s, v);
    for (auto& v : r) {
      v /= s;
      v.canonicalize();
    }
    rays.insert(r);
  }
  CHECK(mapped == rays);
}

TEST_CASE("Newton-Okounkov body and phi") {
  auto m = phi_matrix();
  // Block triangular.
  Rational det = m[0][0] * m[1][1] * (m[2][2] * m[3][3] - m[2][3] * m[3][2]);
  CHECK(abs(det) == 1);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 3}, {0, 2}}) {
    auto nb = sp4_no_body(a, b);
    auto image = affine_image(nb, m, phi_shift(a, b));
    CHECK(polytopes_equal(image, sp(a, b).poly));
    std::set<Point> mapped;
    for (const auto& x : lattice_points(nb)) {
      Point y = phi(to_point(x));
      auto sh = phi_shift(a, b);
      for (int k = 0; k < 4; ++k) y[k] += sh[k];
      mapped.insert(y);
    }
    std::set<Point> direct;
    for (const auto& x : lattice_points(sp(a, b).poly)) direct.insert(to_point(x));
    CHECK(mapped == direct);
  }
  Point q{0, 0, 3, 0};
  CHECK(sp4_no_body(1, 1).contains(q));
  CHECK_FALSE(sp(1, 1).poly.contains(q));
}

TEST_CASE("Minkowski additivity of SP") {
  auto w1 = vertices(sp(1, 0).poly);
  auto w2 = vertices(sp(0, 1).poly);
  auto rho = sp(1, 1);
  std::set<Point> sums;
  for (const auto& a : w1) {
    for (const auto& b : w2) {
      Point s(4);
      for (int k = 0; k < 4; ++k) s[k] = a[k] + b[k];
      CHECK(rho.poly.contains(s));
      sums.insert(s);
    }
  }
  for (const auto& v : vertices(rho.poly)) CHECK(sums.count(v) == 1);
}

TEST_CASE("fibers") {
  auto p = sp(1, 1);
  Point zero(4, Rational(0));
  auto f = fiber(p, 1, zero);
  REQUIRE(f);
  CHECK(f->box.mu() == std::vector<Rational>{0, 0});
  CHECK(f->box.nu() == std::vector<Rational>{1, 0});
  CHECK_FALSE(fiber(p, 1, Point{0, 5, 0, 0}));

  // A triangle is not a parapolytope for the trivial splitting.
  HPolytope tri(2, {Halfspace{{1, 0}, 0}, Halfspace{{0, 1}, 0}, Halfspace{{-1, -1}, 1}});
  Parapolytope t(tri, Decomposition(1, {1, 1}));
  CHECK_THROWS_WITH_AS(fiber(t, 1, Point{0, 0}), doctest::Contains("not a parapolytope"),
                       ParapolytopeError);
  CHECK_FALSE(certify_parapolytope(t));

  // The cone has an unbounded first coordinate in every fiber.
  auto c = sp2n_adapted_cone(2);
  auto fc = fiber(c, 2, Point(4, Rational(0)));
  REQUIRE(fc);
  CHECK_FALSE(fc->box.bounded());
  CHECK(fc->box.dim() == 1);
}

TEST_CASE("certification, balance and admissibility") {
  for (const auto& lam : std::vector<std::vector<long>>{{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 1, 2}}) {
    auto p = gz(lam);
    GZSpec s;
    for (long v : lam) s.lambda.push_back(v);
    CHECK(certify_parapolytope(p));
    CHECK(is_balanced(p, gz_weight(s), RootDatum::gl(3)));
    CHECK(is_admissible(p));
  }
  {
    auto p = gz({0, 1, 2, 3});
    GZSpec s{{0, 1, 2, 3}};
    CHECK(certify_parapolytope(p));
    CHECK(is_balanced(p, gz_weight(s), RootDatum::gl(4)));
    CHECK(is_admissible(p));
  }
  auto rd = RootDatum::sp(2, SpConvention::ShortFirst);
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}, {1, 2}, {3, 2}}) {
    auto p = sp(a, b);
    CHECK(certify_parapolytope(p));
    CHECK(is_balanced(p, {a, b}, rd));
    CHECK(is_admissible(p));
  }
  // With the labels swapped the identity fails.
  CHECK_FALSE(is_balanced(sp(2, 1), {1, 2}, rd));

  // Unit square, GL_2 data, lambda = 0: at c = 0 the fiber sum is 1, not 0.
  HPolytope sq(2, {Halfspace{{1, 0}, 0}, Halfspace{{-1, 0}, 1}, Halfspace{{0, 1}, 0},
                   Halfspace{{0, -1}, 1}});
  Parapolytope cube(sq, Decomposition(2, {1, 2}));
  RootDatum gl2x2 = RootDatum::gl(3);
  CHECK_FALSE(is_balanced(cube, {0, 0, 0}, gl2x2));
  Parapolytope single(sq, Decomposition(1, {1, 1}));
  CHECK_FALSE(is_admissible(single));

  for (int n = 2; n <= 3; ++n) CHECK(certify_parapolytope(sp2n_adapted_cone(n)));
}

TEST_CASE("the Sp4 chains") {
  auto p = sp(1, 1);
  Face zero = face_of(p, {H1p, H2p, H3p, H4p});
  CHECK(zero.dim == 0);
  auto full = face_of(p, {});
  CHECK(full.dim == 4);

  // 0 -> M1 -> M2 -> M1 -> M2
  CHECK(as_set(mitosis_i(p, 1, zero)) == std::set<Face>{face_of(p, {H2p, H3p, H4p})});
  CHECK(as_set(mitosis_i(p, 2, face_of(p, {H2p, H3p, H4p}))) == std::set<Face>{face_of(p, {H3p, H4p})});
  CHECK(as_set(mitosis_i(p, 1, face_of(p, {H3p, H4p}))) == std::set<Face>{face_of(p, {H4p})});
  CHECK(as_set(mitosis_i(p, 2, face_of(p, {H4p}))) == std::set<Face>{full});

  // 0 -> M2 -> M1 -> M2 -> M1
  CHECK(as_set(mitosis_i(p, 2, zero)) == std::set<Face>{face_of(p, {H1p, H3p, H4p})});
  CHECK(as_set(mitosis_i(p, 1, face_of(p, {H1p, H3p, H4p}))) ==
        std::set<Face>{face_of(p, {H2p, H4p}), face_of(p, {H1p, H4p})});
  std::set<Face> step3;
  for (const auto& f : {face_of(p, {H2p, H4p}), face_of(p, {H1p, H4p})}) {
    for (const auto& g : mitosis_i(p, 2, f)) step3.insert(g);
  }
  CHECK(step3 == std::set<Face>{face_of(p, {H3p}), face_of(p, {H2p}), face_of(p, {H1p})});
  std::set<Face> step4;
  for (const auto& f : step3) {
    for (const auto& g : mitosis_i(p, 1, f)) step4.insert(g);
  }
  CHECK(step4 == std::set<Face>{full});
}

TEST_CASE("mitosis on parapolytopes: invariants") {
  std::vector<Parapolytope> ps{sp(1, 1), sp(2, 1), gz({0, 1, 2}), gz({0, 1, 3}), gz({0, 1, 2, 3})};
  for (const auto& p : ps) {
    for (const auto& g : all_faces(p.poly)) {
      Point c = interior_point(p.poly, g);
      auto verts = face_vertices(p.poly, g);
      Point c2 = c;
      for (int k = 0; k < p.dim(); ++k) {
        c2[k] = (c[k] * 2 + verts.front()[k]) / 3;
        c2[k].canonicalize();
      }
      for (int i = 1; i <= p.decomp.r(); ++i) {
        auto m = mitosis_i(p, i, g);
        if (g.dim > 0) CHECK(mitosis_i_at(p, i, g, c2) == m);
        for (const auto& f : m) {
          CHECK(f.dim == g.dim + 1);
          CHECK(mitosis_i(p, i, f).empty());
        }
      }
    }
  }
  Point zero(4, Rational(0));
  for (const auto& p : {sp(1, 1), sp(1, 2)}) {
    for (const auto& f : chain_reachable(p)) CHECK(face_contains(p.poly, f, zero));
  }
  auto g4 = gz({0, 1, 2, 3});
  for (const auto& f : chain_reachable(g4)) CHECK(face_contains(g4.poly, f, Point(6, Rational(0))));
}

TEST_CASE("L-classes on parapolytopes") {
  auto p = sp(1, 1);
  for (const auto& g : all_faces(p.poly)) {
    for (int i = 1; i <= 2; ++i) {
      if (!is_L_i_reduced(p, i, g)) {
        CHECK_THROWS(l_class_i(p, i, g));
        continue;
      }
      auto cls = l_class_i(p, i, g);
      CHECK(std::find(cls.begin(), cls.end(), g) != cls.end());
    }
  }
}
