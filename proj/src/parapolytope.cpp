#include "mitosis/parapolytope.hpp"

#include <algorithm>
#include <set>

namespace mitosis {

// -- Decomposition --------------------------------------------------------------

Decomposition::Decomposition(int rank, std::vector<int> word) : word_(std::move(word)) {
  dims_.assign(rank, 0);
  for (int i : word_) {
    if (i < 1 || i > rank) throw ParapolytopeError("word letter out of range");
    ++dims_[i - 1];
  }
  for (int i = 0; i < rank; ++i) {
    if (dims_[i] == 0) throw ParapolytopeError("summand " + std::to_string(i + 1) + " is empty");
  }
  const int d = static_cast<int>(word_.size());
  summands_.assign(rank, {});
  for (int i = 0; i < rank; ++i) summands_[i].assign(dims_[i], -1);
  labels_.assign(d, {0, 0});
  for (int j = 0; j < d; ++j) {
    const int i = word_[j];
    int pj = 0;
    for (int k = j; k < d; ++k) pj += word_[k] == i;
    const int y = d - 1 - j;
    labels_[y] = {i, pj};
    summands_[i - 1][pj - 1] = y;
  }
}

int Decomposition::coord(int i, int j) const {
  if (i < 1 || i > r() || j < 1 || j > dims_[i - 1]) throw ParapolytopeError("no coordinate x^i_j");
  return summands_[i - 1][j - 1];
}

std::pair<int, int> Decomposition::label(int k) const { return labels_.at(k); }

std::string Decomposition::coord_name(int k) const {
  auto [i, j] = label(k);
  return "x^" + std::to_string(i) + "_" + std::to_string(j);
}

Parapolytope::Parapolytope(HPolytope p, Decomposition dc) : poly(std::move(p)), decomp(std::move(dc)) {
  if (poly.dim() != decomp.d()) throw ParapolytopeError("decomposition does not match dimension");
}

// -- fibers -----------------------------------------------------------------------

namespace {

[[noreturn]] void not_para(const Point& c) {
  std::string s = "not a parapolytope at c = (";
  for (std::size_t k = 0; k < c.size(); ++k) s += (k ? ", " : "") + to_string(c[k]);
  throw ParapolytopeError(s + ")");
}

}  // namespace

Point fiber_coords(const Fiber& f, const Point& x) {
  Point z;
  for (int k : f.coords) z.push_back(x[k]);
  return z;
}

Point with_fiber_coords(const Fiber& f, Point base, const Point& z) {
  for (std::size_t j = 0; j < f.coords.size(); ++j) base[f.coords[j]] = z[j];
  return base;
}

std::optional<Fiber> fiber(const Parapolytope& p, int i, const Point& c) {
  if (i < 1 || i > p.decomp.r()) throw ParapolytopeError("summand index out of range");
  const auto& coords = p.decomp.summand(i);
  const int di = static_cast<int>(coords.size());
  std::vector<bool> inside(p.dim(), false);
  for (int k : coords) inside[k] = true;

  std::vector<Halfspace> hs;
  for (const auto& h : p.poly.halfspaces()) {
    Halfspace f{std::vector<Rational>(di, Rational(0)), h.b};
    bool constant = true;
    for (int k = 0; k < p.dim(); ++k) {
      if (inside[k]) continue;
      if (sgn(h.a[k]) != 0) f.b += h.a[k] * c[k];
    }
    for (int j = 0; j < di; ++j) {
      f.a[j] = h.a[coords[j]];
      if (sgn(f.a[j]) != 0) constant = false;
    }
    if (constant) {
      if (sgn(f.b) < 0) return std::nullopt;
      continue;
    }
    hs.push_back(std::move(f));
  }
  if (hs.empty()) not_para(c);

  std::vector<Rational> mu, nu;
  bool unbounded = false;
  try {
    HPolytope q(di, hs);
    const auto& g = q.generators();
    if (g.vertices.empty()) return std::nullopt;
    mu = nu = g.vertices[0];
    for (const auto& v : g.vertices) {
      for (int j = 0; j < di; ++j) {
        if (v[j] < mu[j]) mu[j] = v[j];
        if (v[j] > nu[j]) nu[j] = v[j];
      }
    }
    for (const auto& r : g.rays) {
      for (int j = 0; j < di; ++j) {
        if (sgn(r[j]) < 0 || (sgn(r[j]) > 0 && j != 0)) not_para(c);
      }
      unbounded = true;
    }
    if (unbounded) nu[0] = mu[0];
    Box box(mu, nu, unbounded);
    BoxFace full{std::vector<Status>(di, Status::Free)};
    for (int j = 0; j < di; ++j) {
      if (box.pinched(j)) full.status[j] = Status::Pinched;
    }
    for (const auto& v : box_face_vertices(box, full)) {
      if (!q.contains(v)) not_para(c);
    }
    if (unbounded) {
      for (const auto& h : hs) {
        if (sgn(h.a[0]) < 0) not_para(c);
      }
    }
  } catch (const GeometryError&) {
    not_para(c);
  }
  return Fiber{Box(mu, nu, unbounded), coords};
}

FiberFace fiber_face(const Parapolytope& p, int i, const Face& g, const Point& c) {
  if (minimal_face_containing(p.poly, c) != g) {
    throw ParapolytopeError("point is not in the relative interior of the face");
  }
  auto f = fiber(p, i, c);
  if (!f) throw ParapolytopeError("empty fiber through a point of the polytope");
  BoxFace bf = box_face_at(f->box, fiber_coords(*f, c));
  return FiberFace{c, std::move(*f), std::move(bf)};
}

FiberFace fiber_face(const Parapolytope& p, int i, const Face& g) {
  return fiber_face(p, i, g, interior_point(p.poly, g));
}

namespace {

std::vector<Face> lift(const Parapolytope& p, const FiberFace& ff, const std::vector<BoxFace>& faces) {
  std::set<Face> out;
  for (const auto& bf : faces) {
    Point x = with_fiber_coords(ff.fiber, ff.c, box_face_interior(ff.fiber.box, bf));
    out.insert(minimal_face_containing(p.poly, x));
  }
  return {out.begin(), out.end()};
}

}  // namespace

std::vector<Face> mitosis_i_at(const Parapolytope& p, int i, const Face& g, const Point& c) {
  auto ff = fiber_face(p, i, g, c);
  return lift(p, ff, paramitosis(ff.fiber.box, ff.face));
}

std::vector<Face> mitosis_i(const Parapolytope& p, int i, const Face& g) {
  return mitosis_i_at(p, i, g, interior_point(p.poly, g));
}

bool is_L_i_reduced(const Parapolytope& p, int i, const Face& g) {
  auto ff = fiber_face(p, i, g);
  return reduced_partition(ff.fiber.box, ff.face).has_value();
}

std::vector<Face> l_class_i(const Parapolytope& p, int i, const Face& g) {
  auto ff = fiber_face(p, i, g);
  return lift(p, ff, l_class(ff.fiber.box, ff.face));
}

// -- global properties -------------------------------------------------------------

std::vector<Face> all_faces(const HPolytope& p) {
  if (!p.is_cone()) {
    const auto& g = p.generators();
    if (g.rays.empty() || g.vertices.empty()) return face_lattice(p);
  }
  const auto& g = p.generators();
  std::set<TightSet> seen(g.vertex_tight.begin(), g.vertex_tight.end());
  std::vector<TightSet> queue(seen.begin(), seen.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    auto extend = [&](const TightSet& other) {
      TightSet t = queue[q] & other;
      if (seen.insert(t).second) queue.push_back(t);
    };
    for (const auto& vt : g.vertex_tight) extend(vt);
    for (const auto& rt : g.ray_tight) extend(rt);
  }
  std::vector<Face> faces;
  for (const auto& t : seen) faces.push_back(Face{t, face_dimension(p, t)});
  std::sort(faces.begin(), faces.end());
  return faces;
}

bool has_origin_vertex(const Parapolytope& p) {
  Point zero(p.dim(), Rational(0));
  if (!p.poly.contains(zero)) return false;
  if (minimal_face_containing(p.poly, zero).dim != 0) return false;
  const auto& g = p.poly.generators();
  for (const auto& v : g.vertices) {
    for (const auto& x : v) {
      if (sgn(x) < 0) return false;
    }
  }
  for (const auto& r : g.rays) {
    for (const auto& x : r) {
      if (sgn(x) < 0) return false;
    }
  }
  return true;
}

bool is_admissible(const Parapolytope& p) {
  if (!has_origin_vertex(p)) return false;
  Point zero(p.dim(), Rational(0));
  for (int i = 1; i <= p.decomp.r(); ++i) {
    auto f = fiber(p, i, zero);
    if (!f || f->box.dim() > 1) return false;
  }
  return true;
}

std::vector<Point> certificate_samples(const Parapolytope& p) {
  std::set<Point> out;
  for (const auto& f : all_faces(p.poly)) out.insert(interior_point(p.poly, f));
  if (!p.poly.is_cone()) {
    for (const auto& v : vertices(p.poly)) out.insert(v);
    for (const auto& x : lattice_points(p.poly)) out.insert(to_point(x));
  }
  return {out.begin(), out.end()};
}

bool certify_parapolytope(const Parapolytope& p) {
  try {
    for (const auto& c : certificate_samples(p)) {
      for (int i = 1; i <= p.decomp.r(); ++i) {
        if (!fiber(p, i, c)) return false;
      }
    }
  } catch (const ParapolytopeError&) {
    return false;
  }
  return true;
}

Rational sigma(const Parapolytope& p, int i, const Point& x) {
  Rational s = 0;
  for (int k : p.decomp.summand(i)) s += x[k];
  return s;
}

Weight p_map(const Parapolytope& p, const RootDatum& rd, const IntPoint& x) {
  if (rd.rank != p.decomp.r()) throw ParapolytopeError("root datum rank does not match decomposition");
  Weight out(rd.lattice_dim, 0);
  for (int i = 1; i <= rd.rank; ++i) {
    long long s = 0;
    for (int k : p.decomp.summand(i)) s += x[k];
    for (int a = 0; a < rd.lattice_dim; ++a) out[a] += s * rd.roots[i - 1][a];
  }
  return out;
}

bool balanced_at(const Parapolytope& p, const Weight& lambda, const RootDatum& rd, int i,
                 const Point& c) {
  auto f = fiber(p, i, c);
  if (!f) throw ParapolytopeError("empty fiber");
  if (!f->box.bounded()) return false;
  Rational lhs = 0;
  for (int j = 0; j < f->box.n(); ++j) lhs += f->box.mu()[j] + f->box.nu()[j];
  Weight top = act(longest_element(rd), lambda);
  for (auto& v : top) v = -v;
  Rational rhs = static_cast<long>(rd.pairing(top, i));
  for (int k = 1; k <= rd.rank; ++k) {
    if (k == i) continue;
    rhs -= sigma(p, k, c) * static_cast<long>(rd.cartan(k, i));
  }
  return lhs == rhs;
}

bool is_balanced(const Parapolytope& p, const Weight& lambda, const RootDatum& rd) {
  if (rd.rank != p.decomp.r()) throw ParapolytopeError("root datum rank does not match decomposition");
  for (const auto& c : certificate_samples(p)) {
    for (int i = 1; i <= rd.rank; ++i) {
      if (!balanced_at(p, lambda, rd, i, c)) return false;
    }
  }
  return true;
}

}  // namespace mitosis
