#include "mitosis/pipedreams.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <sstream>

#include "mitosis/render.hpp"

namespace mitosis {

namespace {

template <class D>
void check_cells(const D& d, const char* what) {
  for (const auto& [r, c] : d.crosses) {
    if (!D::allowed(d.n, r, c)) {
      throw PipeDreamError(std::string(what) + ": cell (" + std::to_string(r) + "," + std::to_string(c) +
                           ") is not allowed");
    }
  }
}

void move_down(std::set<Cell>& cells, int row, int col) {
  cells.erase({row, col});
  cells.insert({row + 1, col});
}

template <class D>
std::string diff_string(const std::set<D>& a, const std::set<D>& b) {
  std::ostringstream os;
  os << "combinatorial {";
  for (const auto& d : a) os << " [" << cells_string(d.crosses) << "]";
  os << " } geometric {";
  for (const auto& d : b) os << " [" << cells_string(d.crosses) << "]";
  os << " }";
  return os.str();
}

template <class D, class ToFace, class Geometric, class Combinatorial>
CorrespondenceReport bfs_check(const D& start, int rank, ToFace to_face, Geometric geo, Combinatorial comb) {
  CorrespondenceReport rep;
  std::set<D> seen{start};
  std::deque<D> queue{start};
  while (!queue.empty()) {
    D d = queue.front();
    queue.pop_front();
    ++rep.faces;
    (void)to_face(d);
    for (int i = 1; i <= rank; ++i) {
      auto g = geo(d, i);
      auto c = comb(d, i);
      ++rep.checks;
      if (g != c && rep.witness.empty()) {
        rep.witness = "[" + cells_string(d.crosses) + "] i=" + std::to_string(i) + ": " + diff_string(c, g);
      }
      for (const auto& e : g) {
        if (seen.insert(e).second) queue.push_back(e);
      }
    }
  }
  return rep;
}

template <class D, class Step>
std::vector<std::set<D>> run_chain(const D& start, const std::vector<int>& steps, Step step) {
  std::vector<std::set<D>> stages{{start}};
  for (int i : steps) {
    std::set<D> next;
    for (const auto& d : stages.back()) {
      auto kids = step(d, i);
      next.insert(kids.begin(), kids.end());
    }
    stages.push_back(std::move(next));
  }
  return stages;
}

template <class D>
std::string render_stages(const std::vector<std::set<D>>& stages, const std::vector<int>& steps) {
  std::string out;
  for (std::size_t s = 0; s < stages.size(); ++s) {
    out += s == 0 ? "start\n" : "M_" + std::to_string(steps[s - 1]) + "\n";
    bool first = true;
    for (const auto& d : stages[s]) {
      if (!first) out += "\n";
      first = false;
      out += render(d);
    }
    if (stages[s].empty()) out += "(empty)\n";
  }
  return out;
}

}  // namespace

std::vector<std::set<SkewPipeDream>> skew_chain(const SkewPipeDream& start, const std::vector<int>& steps) {
  return run_chain(start, steps, [](const SkewPipeDream& d, int i) { return skew_mitosis(d, i); });
}

std::vector<std::set<GLPipeDream>> gl_chain(const GLPipeDream& start, const std::vector<int>& steps) {
  return run_chain(start, steps, [](const GLPipeDream& d, int i) { return gl_pipe_mitosis(d, i); });
}

std::string render_chain(const std::vector<std::set<SkewPipeDream>>& stages, const std::vector<int>& steps) {
  return render_stages(stages, steps);
}

std::string render_chain(const std::vector<std::set<GLPipeDream>>& stages, const std::vector<int>& steps) {
  return render_stages(stages, steps);
}

std::string cells_string(const std::set<Cell>& cells) {
  std::string s;
  for (const auto& [r, c] : cells) {
    if (!s.empty()) s += ' ';
    s += "(" + std::to_string(r) + "," + std::to_string(c) + ")";
  }
  return s;
}

// -- skew pipe dreams ---------------------------------------------------------

SkewPipeDream::SkewPipeDream(int n_, std::set<Cell> cells) : n(n_), crosses(std::move(cells)) {
  if (n < 1) throw PipeDreamError("skew pipe dream: n must be positive");
  check_cells(*this, "skew pipe dream");
}

SkewPipeDream SkewPipeDream::full(int n) {
  std::set<Cell> all;
  for (int r = 1; r <= 2 * n - 1; ++r) {
    for (int c = 1; c <= n; ++c) {
      if (allowed(n, r, c)) all.insert({r, c});
    }
  }
  return SkewPipeDream(n, std::move(all));
}

Cell skew_cell_of(int k, int l, int n) {
  const bool valid = k >= 1 && k <= n && l >= 1 && (k == 1 ? l <= n : l <= 2 * (n - k + 1));
  if (!valid) throw PipeDreamError("no coordinate x^" + std::to_string(k) + "_" + std::to_string(l));
  if (k == 1) return {n, l};
  if (l % 2 == 1) return {n + k - 1, k + (l - 1) / 2};
  return {n - k + 1, k + l / 2 - 1};
}

std::pair<int, int> skew_label_of(const Cell& cell, int n) {
  const auto [r, c] = cell;
  if (!SkewPipeDream::allowed(n, r, c)) throw PipeDreamError("cell outside the skew region");
  if (r == n) return {1, c};
  if (r > n) {
    const int k = r - n + 1;
    return {k, 2 * (c - k) + 1};
  }
  const int k = n - r + 1;
  return {k, 2 * (c - k + 1)};
}

SkewPipeDream face_to_skew(const Parapolytope& cone, const Face& g) {
  const int n = cone.decomp.r();
  std::set<Cell> cells;
  for (int idx : g.tight.indices()) {
    bool found = false;
    for (int r = 1; r <= 2 * n - 1 && !found; ++r) {
      for (int c = 1; c <= n && !found; ++c) {
        if (!SkewPipeDream::allowed(n, r, c)) continue;
        auto [k, l] = skew_label_of({r, c}, n);
        if (sp2n_constraint(cone, k, l) == idx) {
          cells.insert({r, c});
          found = true;
        }
      }
    }
    if (!found) throw PipeDreamError("constraint " + std::to_string(idx) + " is not in C_0");
  }
  return SkewPipeDream(n, std::move(cells));
}

Face skew_to_face(const Parapolytope& cone, const SkewPipeDream& d) {
  if (d.n != cone.decomp.r()) throw PipeDreamError("skew pipe dream size does not match the cone");
  check_cells(d, "skew pipe dream");
  std::vector<int> tight;
  for (const auto& cell : d.crosses) {
    auto [k, l] = skew_label_of(cell, d.n);
    tight.push_back(sp2n_constraint(cone, k, l));
  }
  return face_from_tight(cone.poly, TightSet::of(tight));
}

namespace {
const std::vector<std::pair<Sp4Facet, Cell>> kSp4Cells{
    {H1p, {2, 1}}, {H4p, {1, 2}}, {H3p, {2, 2}}, {H2p, {3, 2}}};
}  // namespace

SkewPipeDream sp4_face_to_skew(const Parapolytope& sp, const Face& g) {
  if (!g.tight.is_subset_of(sp.poly.tight_at(Point(4, Rational(0))))) {
    throw PipeDreamError("face does not contain 0");
  }
  std::set<Cell> cells;
  for (const auto& [f, cell] : kSp4Cells) {
    if (g.tight.contains(f)) cells.insert(cell);
  }
  return SkewPipeDream(2, std::move(cells));
}

Face sp4_skew_to_face(const Parapolytope& sp, const SkewPipeDream& d) {
  if (d.n != 2) throw PipeDreamError("SP_lambda diagrams have size 2");
  std::vector<int> tight;
  for (const auto& [f, cell] : kSp4Cells) {
    if (d.crosses.count(cell)) tight.push_back(f);
  }
  return face_from_tight(sp.poly, TightSet::of(tight));
}

std::set<SkewPipeDream> skew_mitosis(const SkewPipeDream& d, int i) {
  const int n = d.n;
  if (i < 1 || i > n) throw PipeDreamError("mitosis index out of range");
  const int lo = n - i + 1, hi = n + i - 1;
  auto rightmost_empty = [&](int row) {
    int s = i - 1;
    for (int c = i; c <= n; ++c) {
      if (!d.has(row, c)) s = c;
    }
    return s;
  };
  const int start = std::max(rightmost_empty(lo), rightmost_empty(hi) - 1);
  std::vector<int> jm, jp;
  for (int c = start + 1; c <= n; ++c) {
    if (d.has(lo, c) && !d.has(lo + 1, c)) jm.push_back(c);
    if (d.has(hi, c) && !d.has(hi + 1, c)) jp.push_back(c);
  }
  auto shift_right_of = [&](std::set<Cell>& cells, int p) {
    for (int c : jm) {
      if (c > p) move_down(cells, lo, c);
    }
    for (int c : jp) {
      if (c > p) move_down(cells, hi, c);
    }
  };
  std::set<SkewPipeDream> out;
  for (int p : jm) {
    auto cells = d.crosses;
    cells.erase({lo, p});
    shift_right_of(cells, p);
    out.insert(SkewPipeDream(n, std::move(cells)));
  }
  for (int p : jp) {
    auto cells = d.crosses;
    cells.erase({hi, p});
    shift_right_of(cells, p);
    if (i != 1 && std::find(jm.begin(), jm.end(), p) != jm.end()) move_down(cells, lo, p);
    out.insert(SkewPipeDream(n, std::move(cells)));
  }
  return out;
}

std::string render(const SkewPipeDream& d) {
  return render_grid(
      2 * d.n - 1, d.n, [&](int r, int c) { return SkewPipeDream::allowed(d.n, r, c); },
      [&](int r, int c) { return d.has(r, c); });
}

std::set<SkewPipeDream> skew_geometric_mitosis(const Parapolytope& cone, const SkewPipeDream& d, int i) {
  std::set<SkewPipeDream> out;
  for (const auto& f : mitosis_i(cone, i, skew_to_face(cone, d))) out.insert(face_to_skew(cone, f));
  return out;
}

CorrespondenceReport check_skew_correspondence(int n) {
  auto cone = sp2n_adapted_cone(n);
  return bfs_check(
      SkewPipeDream::full(n), n, [&](const SkewPipeDream& d) { return skew_to_face(cone, d); },
      [&](const SkewPipeDream& d, int i) { return skew_geometric_mitosis(cone, d, i); },
      [](const SkewPipeDream& d, int i) { return skew_mitosis(d, i); });
}

// -- GL pipe dreams -----------------------------------------------------------

GLPipeDream::GLPipeDream(int n_, std::set<Cell> cells) : n(n_), crosses(std::move(cells)) {
  if (n < 2) throw PipeDreamError("pipe dream: n must be at least 2");
  check_cells(*this, "pipe dream");
}

GLPipeDream GLPipeDream::full(int n) {
  std::set<Cell> all;
  for (int r = 1; r < n; ++r) {
    for (int c = r; c < n; ++c) all.insert({r, c});
  }
  return GLPipeDream(n, std::move(all));
}

GLPipeDream face_to_gl(const Parapolytope& gz, const Face& g) {
  const int n = gz.decomp.r() + 1;
  const Point origin(gz.dim(), Rational(0));
  if (!g.tight.is_subset_of(gz.poly.tight_at(origin))) {
    throw PipeDreamError("face does not contain the lowest vertex");
  }
  std::set<Cell> cells;
  for (int r = 1; r < n; ++r) {
    for (int c = r; c < n; ++c) {
      if (g.tight.contains(gz_lower_constraint(n, r, n - c))) cells.insert({r, c});
    }
  }
  GLPipeDream d(n, std::move(cells));
  if (gl_to_face(gz, d) != g) throw PipeDreamError("face is not encoded by lower constraints");
  return d;
}

Face gl_to_face(const Parapolytope& gz, const GLPipeDream& d) {
  if (d.n != gz.decomp.r() + 1) throw PipeDreamError("pipe dream size does not match the polytope");
  check_cells(d, "pipe dream");
  std::vector<int> tight;
  for (const auto& [r, c] : d.crosses) tight.push_back(gz_lower_constraint(d.n, r, d.n - c));
  return face_from_tight(gz.poly, TightSet::of(tight));
}

std::set<GLPipeDream> gl_pipe_mitosis(const GLPipeDream& d, int i) {
  const int n = d.n;
  if (i < 1 || i >= n) throw PipeDreamError("mitosis index out of range");
  int start = i - 1;
  for (int c = i; c < n; ++c) {
    if (!d.has(i, c)) start = c;
  }
  std::vector<int> j;
  for (int c = start + 1; c < n; ++c) {
    if (!d.has(i + 1, c)) j.push_back(c);
  }
  std::set<GLPipeDream> out;
  for (int p : j) {
    auto cells = d.crosses;
    cells.erase({i, p});
    for (int c : j) {
      if (c > p) move_down(cells, i, c);
    }
    out.insert(GLPipeDream(n, std::move(cells)));
  }
  return out;
}

std::string render(const GLPipeDream& d) {
  return render_grid(
      d.n - 1, d.n - 1, [&](int r, int c) { return GLPipeDream::allowed(d.n, r, c); },
      [&](int r, int c) { return d.has(r, c); });
}

std::set<GLPipeDream> gl_geometric_mitosis(const Parapolytope& gz, const GLPipeDream& d, int i) {
  std::set<GLPipeDream> out;
  for (const auto& f : mitosis_i(gz, i, gl_to_face(gz, d))) out.insert(face_to_gl(gz, f));
  return out;
}

CorrespondenceReport check_gl_correspondence(int n) {
  GZSpec spec;
  for (int k = 0; k < n; ++k) spec.lambda.push_back(Rational(k));
  auto gz = gz_polytope(spec);
  return bfs_check(
      GLPipeDream::full(n), n - 1, [&](const GLPipeDream& d) { return gl_to_face(gz, d); },
      [&](const GLPipeDream& d, int i) { return gl_geometric_mitosis(gz, d, i); },
      [](const GLPipeDream& d, int i) { return gl_pipe_mitosis(d, i); });
}

}  // namespace mitosis
