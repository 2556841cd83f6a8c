#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "mitosis/pipedreams.hpp"
#include "test_support.hpp"

using namespace mitosis;

namespace {

using Skews = std::set<SkewPipeDream>;
using GLs = std::set<GLPipeDream>;

SkewPipeDream sk(int n, std::set<Cell> cells) { return SkewPipeDream(n, std::move(cells)); }
GLPipeDream gl(int n, std::set<Cell> cells) { return GLPipeDream(n, std::move(cells)); }

// The n = 3, i = 2 worked example.
const SkewPipeDream kD = sk(3, {{2, 2}, {4, 2}, {1, 3}, {2, 3}, {4, 3}, {5, 3}});
const SkewPipeDream kD2p = sk(3, {{3, 2}, {1, 3}, {3, 3}, {4, 3}, {5, 3}});
const SkewPipeDream kD2m = sk(3, {{4, 2}, {1, 3}, {3, 3}, {4, 3}, {5, 3}});
const SkewPipeDream kD3m = sk(3, {{2, 2}, {4, 2}, {1, 3}, {4, 3}, {5, 3}});

}  // namespace

TEST_CASE("cells of coordinates") {
  CHECK(skew_cell_of(1, 1, 3) == Cell{3, 1});
  CHECK(skew_cell_of(2, 2, 3) == Cell{2, 2});
  CHECK(skew_cell_of(3, 1, 3) == Cell{5, 3});
  CHECK(skew_cell_of(3, 2, 3) == Cell{1, 3});
  CHECK(skew_cell_of(2, 4, 3) == Cell{2, 3});
  CHECK(skew_cell_of(1, 3, 3) == Cell{3, 3});
  CHECK(skew_cell_of(2, 3, 3) == Cell{4, 3});
  CHECK(skew_cell_of(2, 1, 3) == Cell{4, 2});
  CHECK(skew_cell_of(2, 2, 2) == Cell{1, 2});
  CHECK(skew_cell_of(1, 2, 2) == Cell{2, 2});
  CHECK_THROWS_AS(skew_cell_of(3, 3, 3), PipeDreamError);
  CHECK_THROWS_AS(skew_cell_of(1, 4, 3), PipeDreamError);

  for (int n = 1; n <= 5; ++n) {
    std::set<Cell> image;
    for (int k = 1; k <= n; ++k) {
      const int dk = k == 1 ? n : 2 * (n - k + 1);
      for (int l = 1; l <= dk; ++l) {
        auto c = skew_cell_of(k, l, n);
        CHECK(SkewPipeDream::allowed(n, c.first, c.second));
        CHECK(skew_label_of(c, n) == std::make_pair(k, l));
        image.insert(c);
      }
    }
    CHECK(image.size() == static_cast<std::size_t>(n * n));
    CHECK(SkewPipeDream::full(n).crosses == image);
  }
  CHECK_THROWS_AS(sk(2, {{1, 1}}), PipeDreamError);
  CHECK_THROWS_AS(skew_label_of({3, 1}, 2), PipeDreamError);
}

TEST_CASE("faces of C_0 and skew pipe dreams") {
  auto cone = sp2n_adapted_cone(3);
  // {0 = x^1_1; 0 = x^2_2 = x^1_2; 0 = x^3_2; x^2_3 = x^3_1}
  std::vector<int> tight{sp2n_constraint(cone, 1, 1), sp2n_constraint(cone, 2, 2), sp2n_constraint(cone, 1, 2),
                         sp2n_constraint(cone, 3, 2), sp2n_constraint(cone, 3, 1)};
  auto g = face_from_tight(cone.poly, TightSet::of(tight));
  CHECK(face_to_skew(cone, g) == sk(3, {{3, 1}, {2, 2}, {3, 2}, {1, 3}, {5, 3}}));

  CHECK(skew_to_face(cone, sk(3, {})).dim == 9);
  CHECK(skew_to_face(cone, SkewPipeDream::full(3)).dim == 0);

  for (int n = 1; n <= 3; ++n) {
    auto c = sp2n_adapted_cone(n);
    auto faces = all_faces(c.poly);
    CHECK(faces.size() == (std::size_t{1} << (n * n)));
    std::set<SkewPipeDream> seen;
    for (const auto& f : faces) {
      auto d = face_to_skew(c, f);
      CHECK(skew_to_face(c, d) == f);
      CHECK(static_cast<int>(d.crosses.size()) == n * n - f.dim);
      seen.insert(d);
    }
    CHECK(seen.size() == faces.size());
  }
  CHECK_THROWS_AS(skew_to_face(cone, sk(2, {})), PipeDreamError);
}

TEST_CASE("the worked example") {
  CHECK(skew_mitosis(kD, 2) == Skews{kD2p, kD2m, kD3m});
  CHECK(render(kD) == test::read_golden("skew_n3_D.txt"));
  CHECK(render(kD2p) == test::read_golden("skew_n3_D2plus.txt"));
  CHECK(render(kD2m) == test::read_golden("skew_n3_D2minus.txt"));
  CHECK(render(kD3m) == test::read_golden("skew_n3_D3minus.txt"));
  auto cone = sp2n_adapted_cone(3);
  CHECK(skew_geometric_mitosis(cone, kD, 2) == Skews{kD2p, kD2m, kD3m});
}

TEST_CASE("Sp4 chains") {
  // Cells for n = 2: (2,1) is 0 = y1; column 2 from the top: 0 = y4, y4 = y3/2, y3 = 2y2.
  auto full = SkewPipeDream::full(2);
  auto a = skew_chain(full, {1, 2, 1, 2});
  CHECK(a[1] == Skews{sk(2, {{1, 2}, {2, 2}, {3, 2}})});
  CHECK(a[2] == Skews{sk(2, {{1, 2}, {2, 2}})});
  CHECK(a[3] == Skews{sk(2, {{1, 2}})});
  CHECK(a[4] == Skews{sk(2, {})});
  CHECK(render_chain(a, {1, 2, 1, 2}) == test::read_golden("sp4_chain_a.txt"));

  auto b = skew_chain(full, {2, 1, 2, 1});
  CHECK(b[1] == Skews{sk(2, {{2, 1}, {1, 2}, {2, 2}})});
  CHECK(b[2] == Skews{sk(2, {{1, 2}, {3, 2}}), sk(2, {{2, 1}, {1, 2}})});
  CHECK(b[3] == Skews{sk(2, {{2, 2}}), sk(2, {{3, 2}}), sk(2, {{2, 1}})});
  CHECK(b[4] == Skews{sk(2, {})});
  CHECK(render_chain(b, {2, 1, 2, 1}) == test::read_golden("sp4_chain_b.txt"));
}

TEST_CASE("skew mitosis: local structure") {
  auto cone = sp2n_adapted_cone(3);
  for (const auto& f : all_faces(cone.poly)) {
    auto d = face_to_skew(cone, f);
    for (int i = 1; i <= 3; ++i) {
      const std::set<int> rows{3 - i + 1, 3 + i - 1, 3 - i + 2, 3 + i};
      for (const auto& e : skew_mitosis(d, i)) {
        CHECK(e.crosses.size() + 1 == d.crosses.size());
        for (int r = 1; r <= 5; ++r) {
          if (rows.count(r)) continue;
          for (int c = 1; c <= 3; ++c) CHECK(e.has(r, c) == d.has(r, c));
        }
      }
    }
  }
  // At the vertex only the top cell of chain i can open up.
  for (int i = 1; i <= 3; ++i) {
    auto kids = skew_mitosis(SkewPipeDream::full(3), i);
    REQUIRE(kids.size() == 1);
    CHECK(!kids.begin()->has(3 + i - 1, i));
    CHECK(skew_mitosis(sk(3, {}), i).empty());
  }
  // Rows 2 and 4 without crosses to the right of start: nothing to do.
  CHECK(skew_mitosis(sk(3, {{3, 1}, {3, 2}, {3, 3}, {5, 3}}), 2).empty());
  CHECK_THROWS_AS(skew_mitosis(kD, 4), PipeDreamError);
}

TEST_CASE("skew correspondence with geometric mitosis") {
  auto r2 = check_skew_correspondence(2);
  CHECK_MESSAGE(r2.ok(), r2.witness);
  CHECK(r2.faces == 11);
  auto r3 = check_skew_correspondence(3);
  CHECK_MESSAGE(r3.ok(), r3.witness);
  CHECK(r3.faces > 100);
}

TEST_CASE("GL pipe dreams") {
  GZSpec spec{{Rational(0), Rational(1), Rational(2)}};
  auto gz = gz_polytope(spec);
  CHECK(gl_to_face(gz, GLPipeDream::full(3)).dim == 0);
  CHECK(gl_to_face(gz, gl(3, {})).dim == 3);
  CHECK(face_to_gl(gz, gl_to_face(gz, gl(3, {{1, 1}}))) == gl(3, {{1, 1}}));
  CHECK_THROWS_AS(gl(3, {{2, 1}}), PipeDreamError);

  // Faces away from a_lambda have no diagram.
  auto verts = vertices(gz.poly);
  CHECK_THROWS_AS(face_to_gl(gz, minimal_face_containing(gz.poly, verts.back())), PipeDreamError);

  auto a = gl_chain(GLPipeDream::full(3), {1, 2, 1});
  CHECK(a[1] == GLs{gl(3, {{1, 2}, {2, 2}})});
  CHECK(a[2] == GLs{gl(3, {{1, 2}})});
  CHECK(a[3] == GLs{gl(3, {})});
  CHECK(render_chain(a, {1, 2, 1}) == test::read_golden("gl3_chain_a.txt"));
  auto b = gl_chain(GLPipeDream::full(3), {2, 1, 2});
  CHECK(b[1] == GLs{gl(3, {{1, 1}, {1, 2}})});
  CHECK(b[2] == GLs{gl(3, {{1, 1}}), gl(3, {{2, 2}})});
  CHECK(b[3] == GLs{gl(3, {})});
  CHECK(render_chain(b, {2, 1, 2}) == test::read_golden("gl3_chain_b.txt"));
  CHECK(gl_to_face(gz, *b[3].begin()).dim == 3);
}

TEST_CASE("GL correspondence with geometric mitosis") {
  for (int n : {3, 4}) {
    auto r = check_gl_correspondence(n);
    CHECK_MESSAGE(r.ok(), r.witness);
    CHECK(r.checks == r.faces * (n - 1));
  }
}

TEST_CASE("SP_lambda faces through 0 follow the skew rule") {
  for (auto [a, b] : std::vector<std::pair<long, long>>{{1, 1}, {2, 1}}) {
    auto sp = sp4_ddo({a, b});
    auto zero = face_from_tight(sp.poly, TightSet::of({H1p, H2p, H3p, H4p}));
    CHECK(sp4_face_to_skew(sp, zero) == SkewPipeDream::full(2));
    std::set<SkewPipeDream> seen{SkewPipeDream::full(2)};
    std::vector<SkewPipeDream> todo{SkewPipeDream::full(2)};
    while (!todo.empty()) {
      auto d = todo.back();
      todo.pop_back();
      CHECK(sp4_face_to_skew(sp, sp4_skew_to_face(sp, d)) == d);
      for (int i = 1; i <= 2; ++i) {
        std::set<SkewPipeDream> geo;
        for (const auto& f : mitosis_i(sp, i, sp4_skew_to_face(sp, d))) geo.insert(sp4_face_to_skew(sp, f));
        CHECK(geo == skew_mitosis(d, i));
        for (const auto& e : geo) {
          if (seen.insert(e).second) todo.push_back(e);
        }
      }
    }
    CHECK(seen.size() == 11);
  }
  auto sp = sp4_ddo({1, 1});
  CHECK_THROWS_AS(sp4_face_to_skew(sp, face_from_tight(sp.poly, TightSet::of({H1m}))), PipeDreamError);
}
