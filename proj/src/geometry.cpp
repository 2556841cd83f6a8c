#include "mitosis/geometry.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <mutex>
#include <numeric>
#include <set>

namespace mitosis {

namespace detail {
struct GeneratorCache {
  std::once_flag once;
  Generators data;
};
}  // namespace detail

namespace {

using Matrix = std::vector<std::vector<Rational>>;

// Calls fn on every k-subset of {0..n-1}, in lexicographic order.
void for_each_subset(int n, int k, const std::function<void(const std::vector<int>&)>& fn) {
  std::vector<int> idx(k);
  std::iota(idx.begin(), idx.end(), 0);
  if (k > n) return;
  while (true) {
    fn(idx);
    int i = k - 1;
    while (i >= 0 && idx[i] == n - k + i) --i;
    if (i < 0) return;
    ++idx[i];
    for (int j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
}

// Row echelon form in place; returns the rank.
int eliminate(Matrix& rows, int cols, std::vector<Rational>* rhs = nullptr) {
  int r = 0;
  const int n = static_cast<int>(rows.size());
  for (int c = 0; c < cols && r < n; ++c) {
    int piv = -1;
    for (int i = r; i < n; ++i) {
      if (sgn(rows[i][c]) != 0) {
        piv = i;
        break;
      }
    }
    if (piv < 0) continue;
    std::swap(rows[r], rows[piv]);
    if (rhs) std::swap((*rhs)[r], (*rhs)[piv]);
    for (int i = 0; i < n; ++i) {
      if (i == r || sgn(rows[i][c]) == 0) continue;
      Rational f = rows[i][c] / rows[r][c];
      for (int j = c; j < cols; ++j) rows[i][j] -= f * rows[r][j];
      if (rhs) (*rhs)[i] -= f * (*rhs)[r];
    }
    ++r;
  }
  return r;
}

bool lex_less(const Point& a, const Point& b) {
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// Scale so that the first nonzero entry has absolute value one.
void normalize_direction(Point& r) {
  for (const auto& v : r) {
    if (sgn(v) != 0) {
      Rational s = abs(v);
      for (auto& w : r) w /= s;
      return;
    }
  }
}

detail::Generators compute_generators(const HPolytope& p) {
  const int d = p.dim();
  const int m = p.size();
  const auto& hs = p.halfspaces();
  detail::Generators g;

  Matrix all;
  for (const auto& h : hs) all.push_back(h.a);
  if (rank(all, d) < d) {
    throw GeometryError("unbounded: constraint normals do not span the space");
  }

  std::vector<Point> verts;
  for_each_subset(m, d, [&](const std::vector<int>& idx) {
    Matrix rows;
    std::vector<Rational> rhs;
    for (int k : idx) {
      rows.push_back(hs[k].a);
      rhs.push_back(-hs[k].b);
    }
    Point x;
    if (solve_square(std::move(rows), std::move(rhs), x) && p.contains(x)) {
      verts.push_back(std::move(x));
    }
  });
  std::sort(verts.begin(), verts.end(), lex_less);
  verts.erase(std::unique(verts.begin(), verts.end()), verts.end());

  std::vector<Point> rays;
  for_each_subset(m, d - 1, [&](const std::vector<int>& idx) {
    Matrix rows;
    for (int k : idx) rows.push_back(hs[k].a);
    if (rank(rows, d) != d - 1) return;
    Point r = kernel_vector(rows, d);
    bool pos = true, neg = true;
    for (const auto& h : hs) {
      int s = sgn(h.eval_linear(r));
      if (s < 0) pos = false;
      if (s > 0) neg = false;
    }
    if (!pos && !neg) return;
    if (!pos) {
      for (auto& v : r) v = -v;
    }
    normalize_direction(r);
    rays.push_back(std::move(r));
  });
  std::sort(rays.begin(), rays.end(), lex_less);
  rays.erase(std::unique(rays.begin(), rays.end()), rays.end());

  g.vertices = std::move(verts);
  for (const auto& v : g.vertices) g.vertex_tight.push_back(p.tight_at(v));
  g.rays = std::move(rays);
  for (const auto& r : g.rays) {
    TightSet t;
    for (int k = 0; k < m; ++k) {
      if (sgn(hs[k].eval_linear(r)) == 0) t.insert(k);
    }
    g.ray_tight.push_back(t);
  }
  return g;
}

void require_bounded(const HPolytope& p, const char* what) {
  if (p.is_cone()) throw GeometryError(std::string("unbounded: ") + what + " refused on a cone");
  if (!p.generators().rays.empty() && !p.generators().vertices.empty()) {
    throw GeometryError(std::string("unbounded: ") + what + " needs a bounded polytope");
  }
}

// Integer-scaled constraint for fast lattice scanning.
struct IntConstraint {
  std::vector<long long> a;
  long long b;
  int last;  // last coordinate with nonzero coefficient (-1 if constant)
};

IntConstraint scale_to_integers(const Halfspace& h) {
  mpz_class l = h.b.get_den();
  for (const auto& v : h.a) l = lcm(l, mpz_class(v.get_den()));
  IntConstraint c;
  c.last = -1;
  for (std::size_t j = 0; j < h.a.size(); ++j) {
    mpz_class v = h.a[j].get_num() * (l / h.a[j].get_den());
    c.a.push_back(v.get_si());
    if (v != 0) c.last = static_cast<int>(j);
  }
  mpz_class bb = h.b.get_num() * (l / h.b.get_den());
  c.b = bb.get_si();
  return c;
}

}  // namespace

// -- TightSet -----------------------------------------------------------------

TightSet TightSet::all(int count) {
  if (count >= 64) return TightSet(~std::uint64_t{0});
  return TightSet((std::uint64_t{1} << count) - 1);
}

TightSet TightSet::of(const std::vector<int>& indices) {
  TightSet t;
  for (int k : indices) t.insert(k);
  return t;
}

std::vector<int> TightSet::indices() const {
  std::vector<int> out;
  for (int k = 0; k < 64; ++k) {
    if (contains(k)) out.push_back(k);
  }
  return out;
}

bool TightSet::operator<(const TightSet& o) const {
  auto a = indices();
  auto b = o.indices();
  return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

// -- Halfspace / HPolytope ----------------------------------------------------

Rational Halfspace::eval(const Point& x) const { return eval_linear(x) + b; }

Rational Halfspace::eval_linear(const Point& r) const {
  Rational s = 0;
  for (std::size_t j = 0; j < a.size(); ++j) {
    if (sgn(a[j]) != 0) s += a[j] * r[j];
  }
  return s;
}

HPolytope::HPolytope(int dim, std::vector<Halfspace> halfspaces, bool cone)
    : dim_(dim), cone_(cone), cache_(std::make_shared<detail::GeneratorCache>()) {
  if (dim <= 0) throw GeometryError("polytope dimension must be positive");
  for (auto& h : halfspaces) {
    if (static_cast<int>(h.a.size()) != dim) {
      throw GeometryError("halfspace has wrong number of coefficients");
    }
    for (auto& v : h.a) v.canonicalize();
    h.b.canonicalize();
    if (std::find(halfspaces_.begin(), halfspaces_.end(), h) == halfspaces_.end()) {
      halfspaces_.push_back(std::move(h));
    }
  }
  if (size() > TightSet::kMaxConstraints) throw GeometryError("too many constraints (max 64)");
}

bool HPolytope::contains(const Point& x) const {
  for (const auto& h : halfspaces_) {
    if (sgn(h.eval(x)) < 0) return false;
  }
  return true;
}

TightSet HPolytope::tight_at(const Point& x) const {
  TightSet t;
  for (int k = 0; k < size(); ++k) {
    if (sgn(halfspaces_[k].eval(x)) == 0) t.insert(k);
  }
  return t;
}

const detail::Generators& HPolytope::generators() const {
  std::call_once(cache_->once, [this] { cache_->data = compute_generators(*this); });
  return cache_->data;
}

// -- UnionOfFaces -------------------------------------------------------------

UnionOfFaces::UnionOfFaces(std::vector<Face> faces) {
  faces.erase(std::remove_if(faces.begin(), faces.end(), [](const Face& f) { return f.is_empty(); }),
              faces.end());
  std::sort(faces.begin(), faces.end());
  faces.erase(std::unique(faces.begin(), faces.end()), faces.end());
  for (const auto& f : faces) {
    bool covered = std::any_of(faces.begin(), faces.end(), [&](const Face& g) {
      return g != f && face_subset(f, g);
    });
    if (!covered) faces_.push_back(f);
  }
}

// -- linear algebra -----------------------------------------------------------

int rank(std::vector<std::vector<Rational>> rows, int cols) { return eliminate(rows, cols); }

bool solve_square(std::vector<std::vector<Rational>> rows, std::vector<Rational> rhs, Point& out) {
  const int n = static_cast<int>(rows.size());
  if (eliminate(rows, n, &rhs) < n) return false;
  out.assign(n, Rational(0));
  for (int i = 0; i < n; ++i) {
    out[i] = rhs[i] / rows[i][i];
    out[i].canonicalize();
  }
  return true;
}

Point kernel_vector(std::vector<std::vector<Rational>> rows, int cols) {
  int r = eliminate(rows, cols);
  // Pivot columns in order; the first non-pivot column is the free variable.
  std::vector<int> pivot_col(r, -1);
  std::vector<bool> is_pivot(cols, false);
  for (int i = 0; i < r; ++i) {
    for (int c = 0; c < cols; ++c) {
      if (sgn(rows[i][c]) != 0) {
        pivot_col[i] = c;
        is_pivot[c] = true;
        break;
      }
    }
  }
  int free_col = 0;
  while (free_col < cols && is_pivot[free_col]) ++free_col;
  if (free_col == cols) throw GeometryError("kernel is trivial");
  Point x(cols, Rational(0));
  x[free_col] = 1;
  for (int i = 0; i < r; ++i) {
    x[pivot_col[i]] = -rows[i][free_col] / rows[i][pivot_col[i]];
  }
  return x;
}

// -- polytope operations ------------------------------------------------------

std::vector<Point> vertices(const HPolytope& p) {
  require_bounded(p, "vertex enumeration");
  return p.generators().vertices;
}

std::vector<IntPoint> lattice_points(const HPolytope& p) {
  require_bounded(p, "lattice point enumeration");
  const auto& verts = p.generators().vertices;
  std::vector<IntPoint> out;
  if (verts.empty()) return out;
  const int d = p.dim();
  std::vector<long long> lo(d), hi(d);
  for (int j = 0; j < d; ++j) {
    Rational mn = verts[0][j], mx = verts[0][j];
    for (const auto& v : verts) {
      if (v[j] < mn) mn = v[j];
      if (v[j] > mx) mx = v[j];
    }
    mpz_class f, c;
    mpz_fdiv_q(f.get_mpz_t(), mn.get_num_mpz_t(), mn.get_den_mpz_t());
    mpz_cdiv_q(c.get_mpz_t(), mx.get_num_mpz_t(), mx.get_den_mpz_t());
    lo[j] = f.get_si();
    hi[j] = c.get_si();
  }
  std::vector<std::vector<IntConstraint>> by_last(d);
  for (const auto& h : p.halfspaces()) {
    IntConstraint c = scale_to_integers(h);
    if (c.last < 0) {
      if (c.b < 0) return out;
      continue;
    }
    by_last[c.last].push_back(std::move(c));
  }
  IntPoint x(d, 0);
  std::function<void(int)> scan = [&](int j) {
    if (j == d) {
      out.push_back(x);
      return;
    }
    for (long long v = lo[j]; v <= hi[j]; ++v) {
      x[j] = v;
      bool ok = true;
      for (const auto& c : by_last[j]) {
        long long s = c.b;
        for (int k = 0; k <= j; ++k) s += c.a[k] * x[k];
        if (s < 0) {
          ok = false;
          break;
        }
      }
      if (ok) scan(j + 1);
    }
  };
  scan(0);
  return out;
}

int face_dimension(const HPolytope& p, const TightSet& t) {
  Matrix rows;
  for (int k : t.indices()) rows.push_back(p[k].a);
  return p.dim() - rank(std::move(rows), p.dim());
}

std::vector<Face> face_lattice(const HPolytope& p) {
  require_bounded(p, "face lattice");
  const auto& g = p.generators();
  std::set<TightSet> seen(g.vertex_tight.begin(), g.vertex_tight.end());
  std::vector<TightSet> queue(seen.begin(), seen.end());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& vt : g.vertex_tight) {
      TightSet t = queue[q] & vt;
      if (seen.insert(t).second) queue.push_back(t);
    }
  }
  std::vector<Face> faces;
  for (const auto& t : seen) faces.push_back(Face{t, face_dimension(p, t)});
  std::sort(faces.begin(), faces.end());
  return faces;
}

Face minimal_face_containing(const HPolytope& p, const Point& x) {
  if (static_cast<int>(x.size()) != p.dim()) throw GeometryError("point has wrong dimension");
  if (!p.contains(x)) throw GeometryError("point is not in the polytope");
  TightSet t = p.tight_at(x);
  return Face{t, face_dimension(p, t)};
}

Face face_from_tight(const HPolytope& p, const TightSet& t) {
  const auto& g = p.generators();
  TightSet acc = TightSet::all(p.size());
  bool any = false;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (t.is_subset_of(g.vertex_tight[v])) {
      acc = acc & g.vertex_tight[v];
      any = true;
    }
  }
  if (!any) return Face{TightSet::all(p.size()), -1};
  for (std::size_t r = 0; r < g.rays.size(); ++r) {
    if (t.is_subset_of(g.ray_tight[r])) acc = acc & g.ray_tight[r];
  }
  return Face{acc, face_dimension(p, acc)};
}

std::vector<Point> face_vertices(const HPolytope& p, const Face& f) {
  const auto& g = p.generators();
  std::vector<Point> out;
  for (std::size_t v = 0; v < g.vertices.size(); ++v) {
    if (f.tight.is_subset_of(g.vertex_tight[v])) out.push_back(g.vertices[v]);
  }
  return out;
}

Point interior_point(const HPolytope& p, const Face& f) {
  if (f.is_empty()) throw GeometryError("empty face has no interior point");
  const auto& g = p.generators();
  auto verts = face_vertices(p, f);
  if (verts.empty()) throw GeometryError("face has no vertices");
  Point c(p.dim(), Rational(0));
  for (const auto& v : verts) {
    for (int j = 0; j < p.dim(); ++j) c[j] += v[j];
  }
  for (auto& v : c) v /= static_cast<long>(verts.size());
  for (std::size_t r = 0; r < g.rays.size(); ++r) {
    if (!f.tight.is_subset_of(g.ray_tight[r])) continue;
    for (int j = 0; j < p.dim(); ++j) c[j] += g.rays[r][j];
  }
  for (auto& v : c) v.canonicalize();
  return c;
}

bool face_contains(const HPolytope& p, const Face& f, const Point& x) {
  if (f.is_empty() || !p.contains(x)) return false;
  for (int k : f.tight.indices()) {
    if (sgn(p[k].eval(x)) != 0) return false;
  }
  return true;
}

bool face_subset(const Face& f, const Face& g) {
  if (f.is_empty()) return true;
  if (g.is_empty()) return false;
  return g.tight.is_subset_of(f.tight);
}

Face face_meet(const HPolytope& p, const Face& f, const Face& g) {
  if (f.is_empty() || g.is_empty()) return Face{TightSet::all(p.size()), -1};
  return face_from_tight(p, f.tight | g.tight);
}

bool polytopes_equal(const HPolytope& p, const HPolytope& q) {
  if (p.dim() != q.dim()) throw GeometryError("dimension mismatch");
  auto vp = vertices(p);
  auto vq = vertices(q);
  for (const auto& v : vp) {
    if (!q.contains(v)) return false;
  }
  for (const auto& v : vq) {
    if (!p.contains(v)) return false;
  }
  return vp.empty() == vq.empty();
}

HPolytope affine_image(const HPolytope& p, const std::vector<std::vector<Rational>>& m,
                       const Point& shift) {
  const int d = p.dim();
  // Inverse by solving m.x = e_j for every j.
  Matrix inv(d, std::vector<Rational>(d));
  for (int j = 0; j < d; ++j) {
    std::vector<Rational> e(d, Rational(0));
    e[j] = 1;
    Point col;
    if (!solve_square(m, e, col)) throw GeometryError("affine map is singular");
    for (int i = 0; i < d; ++i) inv[i][j] = col[i];
  }
  std::vector<Halfspace> hs;
  for (const auto& h : p.halfspaces()) {
    Halfspace n;
    n.a.assign(d, Rational(0));
    for (int j = 0; j < d; ++j) {
      for (int i = 0; i < d; ++i) n.a[j] += h.a[i] * inv[i][j];
    }
    n.b = h.b - n.eval_linear(shift);
    hs.push_back(std::move(n));
  }
  return HPolytope(d, std::move(hs), p.is_cone());
}

std::vector<IntPoint> lattice_points(const HPolytope& p, const UnionOfFaces& u) {
  std::vector<IntPoint> out;
  if (u.empty()) return out;
  for (const auto& x : lattice_points(p)) {
    Point q = to_point(x);
    for (const auto& f : u.faces()) {
      if (face_contains(p, f, q)) {
        out.push_back(x);
        break;
      }
    }
  }
  return out;
}

Point to_point(const IntPoint& x) {
  Point p;
  p.reserve(x.size());
  for (long long v : x) p.emplace_back(static_cast<long>(v));
  return p;
}

std::string to_string(const Rational& q) {
  Rational c = q;
  c.canonicalize();
  return c.get_str();
}

Rational parse_rational(const std::string& s) {
  Rational q;
  try {
    q = Rational(s, 10);
  } catch (const std::invalid_argument&) {
    throw GeometryError("not a rational number: '" + s + "'");
  }
  if (q.get_den() == 0) throw GeometryError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

}  // namespace mitosis
