#include "mitosis/schubert.hpp"

#include <algorithm>
#include <set>

namespace mitosis {

namespace {

Weight lowest_weight(const RootDatum& rd, const Weight& lambda) {
  return act(longest_element(rd), lambda);
}

std::vector<Face> dedup(std::vector<Face> v) {
  std::sort(v.begin(), v.end());
  v.erase(std::unique(v.begin(), v.end()), v.end());
  return v;
}

std::string tight_string(const Face& f) {
  std::string s = "{";
  bool first = true;
  for (int k : f.tight.indices()) {
    s += (first ? "" : ",") + std::to_string(k);
    first = false;
  }
  return s + "}";
}

// The polytope cut out by a face, with the same decomposition.
Parapolytope face_polytope(const Parapolytope& p, const Face& f) {
  std::vector<Halfspace> hs = p.poly.halfspaces();
  for (int k : f.tight.indices()) {
    Halfspace neg = p.poly[k];
    for (auto& v : neg.a) v = -v;
    neg.b = -neg.b;
    hs.push_back(std::move(neg));
  }
  return Parapolytope(HPolytope(p.dim(), std::move(hs), p.poly.is_cone()), p.decomp);
}

bool union_meets_fiber(const std::vector<Parapolytope>& faces, int i, const Point& c) {
  for (const auto& fp : faces) {
    if (fiber(fp, i, c)) return true;
  }
  return false;
}

// Every point of `from` projects into pi_i of the union `to`, on samples.
bool projection_covered(const Parapolytope& p, int i, const std::vector<Face>& from,
                        const std::vector<Face>& to, std::string& witness) {
  std::vector<Parapolytope> targets;
  for (const auto& f : to) targets.push_back(face_polytope(p, f));
  std::set<Point> samples;
  for (const auto& f : from) samples.insert(interior_point(p.poly, f));
  if (!p.poly.is_cone() && !from.empty()) {
    for (const auto& x : lattice_points(p.poly, UnionOfFaces(from))) samples.insert(to_point(x));
  }
  for (const auto& c : samples) {
    if (!union_meets_fiber(targets, i, c)) {
      witness = "projection of a sample point is not covered";
      return false;
    }
  }
  return true;
}

// F_c is contained in Gamma for the fiber through c.
bool fiber_face_inside(const Parapolytope& p, const FiberFace& ff, const Face& gamma) {
  std::vector<Point> pts = box_face_vertices(ff.fiber.box, ff.face);
  pts.push_back(box_face_interior(ff.fiber.box, ff.face));
  for (const auto& z : pts) {
    if (!face_contains(p.poly, gamma, with_fiber_coords(ff.fiber, ff.c, z))) return false;
  }
  return true;
}

// A few points of the relative interior of f.
std::vector<Point> interior_samples(const HPolytope& p, const Face& f) {
  Point c = interior_point(p, f);
  std::vector<Point> out{c};
  for (const auto& v : face_vertices(p, f)) {
    Point x(c.size());
    for (std::size_t k = 0; k < c.size(); ++k) {
      x[k] = (c[k] * 3 + v[k]) / 4;
      x[k].canonicalize();
    }
    if (x != c) out.push_back(std::move(x));
  }
  return out;
}

}  // namespace

CharacterElement face_character(const Parapolytope& p, const UnionOfFaces& u, const Weight& lambda,
                                const RootDatum& rd) {
  Weight low = lowest_weight(rd, lambda);
  CharacterElement out;
  if (u.empty()) return out;
  for (const auto& x : lattice_points(p.poly, u)) {
    Weight w = p_map(p, rd, x);
    for (std::size_t a = 0; a < w.size(); ++a) w[a] += low[a];
    out.add(w, 1);
  }
  return out;
}

CharacterElement face_character(const Parapolytope& p, const std::vector<Face>& faces,
                                const Weight& lambda, const RootDatum& rd) {
  return face_character(p, UnionOfFaces(faces), lambda, rd);
}

std::vector<Face> mitosis_of_set(const Parapolytope& p, int i, const std::vector<Face>& s) {
  std::vector<Face> out;
  for (const auto& f : s) {
    for (const auto& g : mitosis_i(p, i, f)) out.push_back(g);
  }
  return dedup(std::move(out));
}

HypothesisReport check_theorem_hypotheses(const Parapolytope& p, int i, const std::vector<Face>& s) {
  HypothesisReport r;
  auto fail = [&r](bool& flag, const std::string& why) {
    if (flag && r.witness.empty()) r.witness = why;
    flag = false;
  };
  const Point zero(p.dim(), Rational(0));
  std::set<Face> members(s.begin(), s.end());

  for (const auto& f : s) {
    if (!face_contains(p.poly, f, zero)) fail(r.contains_zero, "(1) face " + tight_string(f) + " misses 0");
    if (!is_L_i_reduced(p, i, f)) {
      fail(r.l_class_closed, "(2) face " + tight_string(f) + " is not L-reduced");
      continue;
    }
    for (const auto& g : l_class_i(p, i, f)) {
      if (!members.count(g)) {
        fail(r.l_class_closed, "(2) L-class of " + tight_string(f) + " leaves S at " + tight_string(g));
      }
    }
  }

  std::vector<std::pair<Face, std::vector<Face>>> nonempty;
  std::vector<Face> produced;
  for (const auto& f : s) {
    auto m = mitosis_i(p, i, f);
    if (!m.empty()) nonempty.push_back({f, m});
    produced.insert(produced.end(), m.begin(), m.end());
  }
  for (const auto& f : s) {
    if (!mitosis_i(p, i, f).empty()) continue;
    bool found = false;
    for (const auto& c : interior_samples(p.poly, f)) {
      auto ff = fiber_face(p, i, f, c);
      for (const auto& [fp, m] : nonempty) {
        for (const auto& gamma : m) {
          if (fiber_face_inside(p, ff, gamma)) found = true;
        }
      }
      if (found) break;
    }
    if (!found) fail(r.empty_covered, "(3) face " + tight_string(f) + " has no covering mitosis face");
  }

  produced = dedup(std::move(produced));
  std::string why;
  if (!projection_covered(p, i, s, produced, why) || !projection_covered(p, i, produced, s, why)) {
    fail(r.projection_equal, "(4) " + why);
  }
  return r;
}

bool verify_demazure_step(const Parapolytope& p, const Weight& lambda, const RootDatum& rd, int i,
                          const std::vector<Face>& s) {
  auto lhs = demazure(rd, i, face_character(p, s, lambda, rd));
  return lhs == face_character(p, mitosis_of_set(p, i, s), lambda, rd);
}

bool MitosisChainResult::hypotheses_hold() const {
  return std::all_of(steps.begin(), steps.end(),
                     [](const ChainStep& s) { return s.report.all() && s.demazure_ok; });
}

MitosisChainResult mitosis_chain_for_word(const Parapolytope& p, const Weight& lambda,
                                          const RootDatum& rd, const std::vector<int>& word,
                                          bool check) {
  MitosisChainResult out;
  out.word = word;
  out.start = {minimal_face_containing(p.poly, Point(p.dim(), Rational(0)))};
  std::vector<Face> cur = out.start;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    ChainStep st;
    st.i = *it;
    if (check) {
      st.report = check_theorem_hypotheses(p, st.i, cur);
      st.demazure_ok = verify_demazure_step(p, lambda, rd, st.i, cur);
    }
    st.faces = mitosis_of_set(p, st.i, cur);
    cur = st.faces;
    out.steps.push_back(std::move(st));
  }
  out.sigma = UnionOfFaces(cur);
  return out;
}

MitosisChainResult mitosis_chain(const Parapolytope& p, const Weight& lambda, const RootDatum& rd,
                                 const WeylElement& w, bool check) {
  auto word = subword_reduced_word(rd, w, p.decomp.word());
  return mitosis_chain_for_word(p, lambda, rd, word, check);
}

// -- Sp_4 catalog ------------------------------------------------------------------

const Sp4Catalog& sp4_catalog() {
  static const Sp4Catalog cat{
      {{1}, {{H2p, H3p, H4p}}},
      {{2, 1}, {{H3p, H4p}}},
      {{1, 2, 1}, {{H4p}}},
      {{2}, {{H1p, H3p, H4p}}},
      {{1, 2}, {{H1p, H4p}, {H2p, H4p}}},
      {{2, 1, 2}, {{H1p}, {H2p}, {H3p}}},
  };
  return cat;
}

UnionOfFaces catalog_union(const Parapolytope& sp, const std::vector<std::vector<Sp4Facet>>& entry) {
  std::vector<Face> faces;
  for (const auto& meet : entry) {
    std::vector<int> idx(meet.begin(), meet.end());
    Face f = face_from_tight(sp.poly, TightSet::of(idx));
    if (!f.is_empty()) faces.push_back(f);
  }
  return UnionOfFaces(faces);
}

UnionOfFaces sp4_delta(const Parapolytope& sp, const WeylElement& w) {
  if (w.length() == 0) return UnionOfFaces({minimal_face_containing(sp.poly, Point(4, Rational(0)))});
  if (w.length() == 4) return UnionOfFaces({face_from_tight(sp.poly, TightSet())});
  auto it = sp4_catalog().find(w.word);
  if (it == sp4_catalog().end()) throw WeylError("not an Sp4 Weyl group element: " + word_string(w.word));
  return catalog_union(sp, it->second);
}

UnionOfFaces intersect(const HPolytope& p, const UnionOfFaces& a, const UnionOfFaces& b) {
  std::vector<Face> out;
  for (const auto& f : a.faces()) {
    for (const auto& g : b.faces()) {
      Face m = face_meet(p, f, g);
      if (!m.is_empty()) out.push_back(m);
    }
  }
  return UnionOfFaces(out);
}

UnionOfFaces unite(const UnionOfFaces& a, const UnionOfFaces& b) {
  std::vector<Face> all = a.faces();
  all.insert(all.end(), b.faces().begin(), b.faces().end());
  return UnionOfFaces(all);
}

bool sp4_intersection_identity(const SpddoSpec& spec, const Sp4Catalog& catalog) {
  auto sp = sp4_ddo(spec);
  auto get = [&](std::vector<int> w) { return catalog_union(sp, catalog.at(w)); };
  auto lhs = intersect(sp.poly, get({1, 2, 1}), get({2, 1, 2}));
  auto rhs = unite(get({1, 2}), get({2, 1}));
  if (!(lhs == rhs)) return false;
  return lattice_points(sp.poly, lhs) == lattice_points(sp.poly, rhs);
}

const std::vector<std::string>& sp4_facet_relations() {
  static const std::vector<std::string> rel{
      "[H1+] + [H2-] = [H1-]",
      "2[H2+] + [H3-] = [H2-]",
      "[H2+] + [H3-] = [H3+]",
      "2[H3+] + [H4-] = [H4+]",
      "Delta'(s1s2s1) = H2- u H3- u H4-",
      "Delta'(s2s1s2) = H1-",
  };
  return rel;
}

std::string facet_name(Sp4Facet f) {
  static const char* names[] = {"H1+", "H2+", "H3+", "H4+", "H1-", "H2-", "H3-", "H4-"};
  return names[f];
}

}  // namespace mitosis
