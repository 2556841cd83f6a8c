#include "mitosis/verify.hpp"

#include <chrono>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

#include "mitosis/instances.hpp"
#include "mitosis/okounkov.hpp"
#include "mitosis/paramitosis.hpp"
#include "mitosis/pipedreams.hpp"
#include "mitosis/schubert.hpp"

namespace mitosis {

namespace {

class Recorder {
 public:
  explicit Recorder(std::string suite) : start_(std::chrono::steady_clock::now()) { report_.suite = std::move(suite); }

  void add(int criterion, std::string name, bool passed, std::string detail = {}) {
    report_.cases.push_back({criterion, std::move(name), passed, std::move(detail)});
  }

  // Runs f, turning exceptions into failed cases.
  template <class F>
  void run(int criterion, const std::string& name, F f) {
    try {
      std::string detail;
      bool ok = f(detail);
      add(criterion, name, ok, detail);
    } catch (const std::exception& e) {
      add(criterion, name, false, std::string("exception: ") + e.what());
    }
  }

  SuiteReport finish() {
    report_.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    return std::move(report_);
  }

 private:
  SuiteReport report_;
  std::chrono::steady_clock::time_point start_;
};

std::vector<Box> boxes_012(int n) {
  std::vector<std::pair<int, int>> pairs;
  for (int a = 0; a <= 2; ++a) {
    for (int b = a; b <= 2; ++b) pairs.emplace_back(a, b);
  }
  std::vector<Box> out;
  std::vector<int> idx(n, 0);
  while (true) {
    std::vector<Rational> mu, nu;
    for (int i : idx) {
      mu.emplace_back(pairs[i].first);
      nu.emplace_back(pairs[i].second);
    }
    out.emplace_back(mu, nu);
    int j = n - 1;
    while (j >= 0 && idx[j] == static_cast<int>(pairs.size()) - 1) idx[j--] = 0;
    if (j < 0) break;
    ++idx[j];
  }
  return out;
}

std::string box_string(const Box& b) {
  std::string s = "mu=(";
  for (int i = 0; i < b.n(); ++i) s += (i ? "," : "") + to_string(b.mu()[i]);
  s += ") nu=(";
  for (int i = 0; i < b.n(); ++i) s += (i ? "," : "") + to_string(b.nu()[i]);
  return s + ")";
}

std::set<BoxFace> mitosis_of_class(const Box& b, const std::vector<BoxFace>& cls) {
  std::set<BoxFace> out;
  for (const auto& f : cls) {
    for (const auto& e : paramitosis(b, f)) out.insert(e);
  }
  return out;
}

bool contains_low_vertex(const BoxFace& g) {
  for (auto s : g.status) {
    if (s == Status::AtHigh) return false;
  }
  return true;
}

GZSpec gz_spec(const std::vector<long>& lam) {
  GZSpec s;
  for (long v : lam) s.lambda.emplace_back(v);
  return s;
}

std::string lambda_string(const std::vector<long>& lam) {
  std::string s = "(";
  for (long v : lam) s += (s.size() > 1 ? "," : "") + std::to_string(v);
  return s + ")";
}

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const std::vector<std::vector<long>> kGL3{{0, 1, 2}, {0, 1, 3}, {0, 2, 5}};
const std::vector<std::vector<long>> kGL4{{0, 1, 2, 3}};
const std::vector<std::pair<long, long>> kSp4{{1, 1}, {2, 1}, {1, 2}, {3, 2}};

}  // namespace

bool SuiteReport::passed() const {
  for (const auto& c : cases) {
    if (!c.passed) return false;
  }
  return true;
}

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"paramitosis", "balanced", "demazure", "okounkov", "skew"};
  return names;
}

SuiteReport run_suite(const std::string& name, const std::string& golden_dir) {
  if (name == "paramitosis") return verify_paramitosis();
  if (name == "balanced") return verify_balanced();
  if (name == "demazure") return verify_demazure();
  if (name == "okounkov") return verify_okounkov();
  if (name == "skew") return verify_skew(golden_dir);
  throw std::invalid_argument("unknown suite '" + name + "'");
}

SuiteReport verify_paramitosis(int max_n) {
  Recorder rec("paramitosis");
  for (int n = 1; n <= max_n; ++n) {
    const auto boxes = boxes_012(n);
    rec.run(1, "T identity on L-classes, n=" + std::to_string(n), [&](std::string& detail) {
      long checked = 0;
      for (const auto& b : boxes) {
        for (const auto& g : all_faces(b)) {
          if (!contains_low_vertex(g) || !reduced_partition(b, g)) continue;
          auto cls = l_class(b, g);
          auto image = mitosis_of_class(b, cls);
          auto lhs = t_operator(b, chi(b, cls));
          // An empty image means the class is terminal: its sum is T-invariant.
          auto rhs = image.empty() ? chi(b, cls) : chi(b, {image.begin(), image.end()});
          ++checked;
          if (lhs != rhs) {
            detail = box_string(b) + " face " + render_box_face(g);
            return false;
          }
        }
      }
      detail = std::to_string(boxes.size()) + " boxes, " + std::to_string(checked) + " reduced faces";
      return true;
    });
    rec.run(2, "M^2 = 0 and L-class closure, n=" + std::to_string(n), [&](std::string& detail) {
      long checked = 0;
      for (const auto& b : boxes) {
        for (const auto& g : all_faces(b)) {
          auto kids = paramitosis(b, g);
          for (const auto& e : kids) {
            if (!paramitosis(b, e).empty() || e.dim() != g.dim() + 1) {
              detail = box_string(b) + " M^2 != 0 at " + render_box_face(g);
              return false;
            }
          }
          if (!reduced_partition(b, g)) continue;
          auto image = mitosis_of_class(b, l_class(b, g));
          for (const auto& e : kids) {
            auto cls = l_class(b, e);
            if (std::set<BoxFace>(cls.begin(), cls.end()) != image) {
              detail = box_string(b) + " image of the class of " + render_box_face(g) + " is not one class";
              return false;
            }
          }
          ++checked;
        }
      }
      detail = std::to_string(checked) + " reduced faces";
      return true;
    });
  }
  return rec.finish();
}

SuiteReport verify_balanced() {
  Recorder rec("balanced");
  auto certify = [&](const std::string& name, const Parapolytope& p, const Weight& w, const RootDatum& rd) {
    rec.run(3, name + " parapolytope/balanced/admissible", [&](std::string& detail) {
      bool a = certify_parapolytope(p), b = is_balanced(p, w, rd), c = is_admissible(p);
      detail = std::string("parapolytope=") + (a ? "yes" : "no") + " balanced=" + (b ? "yes" : "no") +
               " admissible=" + (c ? "yes" : "no");
      return a && b && c;
    });
    rec.run(5, name + " dimension count", [&](std::string& detail) {
      long long chars = demazure_character(rd, longest_element(rd).word, w).coefficient_sum();
      long long dim = weyl_dim(rd, w);
      long long pts = static_cast<long long>(lattice_points(p.poly).size());
      detail = "character " + std::to_string(chars) + ", weyl_dim " + std::to_string(dim) + ", lattice points " +
               std::to_string(pts);
      return chars == dim && dim == pts;
    });
  };
  for (const auto& lam : kGL3) {
    auto s = gz_spec(lam);
    certify("GZ" + lambda_string(lam), gz_polytope(s), gz_weight(s), RootDatum::gl(3));
  }
  for (const auto& lam : kGL4) {
    auto s = gz_spec(lam);
    certify("GZ" + lambda_string(lam), gz_polytope(s), gz_weight(s), RootDatum::gl(4));
  }
  auto sprd = RootDatum::sp(2, SpConvention::ShortFirst);
  for (auto [a, b] : kSp4) {
    certify("SP(" + std::to_string(a) + "," + std::to_string(b) + ")", sp4_ddo({a, b}), {a, b}, sprd);
  }
  rec.run(5, "SP_rho has 16 lattice points and 11 vertices", [&](std::string& detail) {
    auto p = sp4_ddo({1, 1});
    auto pts = lattice_points(p.poly).size();
    auto vs = vertices(p.poly).size();
    detail = std::to_string(pts) + " points, " + std::to_string(vs) + " vertices";
    return pts == 16 && vs == 11;
  });
  return rec.finish();
}

SuiteReport verify_demazure() {
  Recorder rec("demazure");
  auto chains = [&](const std::string& name, const Parapolytope& p, const Weight& w, const RootDatum& rd) {
    rec.run(4, name + " all Weyl elements", [&](std::string& detail) {
      int count = 0;
      for (const auto& el : weyl_group(rd)) {
        auto res = mitosis_chain(p, w, rd, el);
        if (!res.hypotheses_hold()) {
          for (const auto& st : res.steps) {
            if (!st.report.all()) detail = "w=" + word_string(el.word) + ": " + st.report.witness;
          }
          return false;
        }
        if (face_character(p, res.sigma, w, rd) != demazure_character(rd, res.word, w)) {
          detail = "w=" + word_string(el.word) + ": character mismatch";
          return false;
        }
        ++count;
      }
      detail = std::to_string(count) + " elements match, hypotheses (1)-(4) hold";
      return true;
    });
  };
  for (const auto& lam : {kGL3[0], kGL3[1]}) {
    auto s = gz_spec(lam);
    chains("GL3 " + lambda_string(lam), gz_polytope(s), gz_weight(s), RootDatum::gl(3));
  }
  {
    auto s = gz_spec(kGL4[0]);
    chains("GL4 (0,1,2,3)", gz_polytope(s), gz_weight(s), RootDatum::gl(4));
  }
  auto rd = RootDatum::sp(2, SpConvention::ShortFirst);
  for (auto [a, b] : {kSp4[0], kSp4[1]}) {
    chains("Sp4 (" + std::to_string(a) + "," + std::to_string(b) + ")", sp4_ddo({a, b}), {a, b}, rd);
  }

  for (auto [a, b] : {kSp4[0], kSp4[1], kSp4[3]}) {
    const std::string tag = "(" + std::to_string(a) + "," + std::to_string(b) + ")";
    auto p = sp4_ddo({a, b});
    rec.run(7, "catalog lattice counts " + tag, [&](std::string& detail) {
      for (const auto& w : weyl_group(rd)) {
        auto word = subword_reduced_word(rd, w, {2, 1, 2, 1});
        auto pts = static_cast<long long>(lattice_points(p.poly, sp4_delta(p, w)).size());
        if (pts != demazure_character(rd, word, {a, b}).coefficient_sum()) {
          detail = "w=" + word_string(w.word);
          return false;
        }
      }
      return true;
    });
    rec.run(7, "intersection identity " + tag, [&](std::string&) { return sp4_intersection_identity({a, b}); });
    rec.run(7, "chains equal the catalog " + tag, [&](std::string& detail) {
      for (const auto& w : weyl_group(rd)) {
        if (mitosis_chain(p, {a, b}, rd, w, false).sigma != sp4_delta(p, w)) {
          detail = "w=" + word_string(w.word);
          return false;
        }
      }
      return true;
    });
  }
  return rec.finish();
}

SuiteReport verify_okounkov() {
  Recorder rec("okounkov");
  for (auto [a, b] : {kSp4[0], kSp4[1], kSp4[2], kSp4[3]}) {
    rec.run(6, "phi(Delta_v) + shift = SP at (" + std::to_string(a) + "," + std::to_string(b) + ")",
            [&](std::string&) {
              auto image = affine_image(sp4_no_body(a, b), phi_matrix(), phi_shift(a, b));
              return polytopes_equal(image, sp4_ddo({a, b}).poly);
            });
  }
  rec.run(6, "valuation points of rho", [&](std::string& detail) {
    const std::set<Exponent> expect{{0, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 2, 0}, {0, 0, 0, 1},
                                    {1, 0, 0, 0}, {1, 1, 0, 0}, {1, 0, 1, 0}, {1, 0, 2, 0}, {1, 0, 0, 1},
                                    {0, 2, 0, 0}, {0, 1, 1, 0}, {0, 1, 2, 0}, {0, 1, 0, 1}, {0, 0, 3, 0},
                                    {0, 0, 1, 1}};
    auto pts = valuation_points_rho();
    auto body = sp4_no_body(1, 1);
    auto vlist = vertices(body);
    std::set<Point> verts(vlist.begin(), vlist.end());
    int on_vertices = 0;
    for (const auto& e : pts) on_vertices += static_cast<int>(verts.count(to_point(to_int_point(e))));
    detail = std::to_string(pts.size()) + " points, " + std::to_string(on_vertices) + " vertices";
    return std::set<Exponent>(pts.begin(), pts.end()) == expect && pts.size() == 16 && on_vertices == 11;
  });
  rec.run(6, "valuation additivity", [&](std::string&) {
    for (const auto& f : section_basis_w1()) {
      for (const auto& g : section_basis_w2()) {
        if (!valuation_additivity_check(f, g)) return false;
      }
    }
    return true;
  });
  return rec.finish();
}

SuiteReport verify_skew(const std::string& golden_dir) {
  Recorder rec("skew");
  for (int n : {2, 3}) {
    rec.run(8, "skew correspondence n=" + std::to_string(n), [&](std::string& detail) {
      auto r = check_skew_correspondence(n);
      detail = std::to_string(r.faces) + " faces, " + std::to_string(r.checks) + " checks" +
               (r.ok() ? "" : "; " + r.witness);
      return r.ok();
    });
  }
  const SkewPipeDream d(3, {{2, 2}, {4, 2}, {1, 3}, {2, 3}, {4, 3}, {5, 3}});
  const SkewPipeDream d2p(3, {{3, 2}, {1, 3}, {3, 3}, {4, 3}, {5, 3}});
  const SkewPipeDream d2m(3, {{4, 2}, {1, 3}, {3, 3}, {4, 3}, {5, 3}});
  const SkewPipeDream d3m(3, {{2, 2}, {4, 2}, {1, 3}, {4, 3}, {5, 3}});
  rec.run(8, "worked example n=3, i=2", [&](std::string& detail) {
    bool ok = skew_mitosis(d, 2) == std::set<SkewPipeDream>{d2p, d2m, d3m};
    if (!golden_dir.empty()) {
      const std::vector<std::pair<std::string, const SkewPipeDream*>> files{{"skew_n3_D.txt", &d},
                                                                            {"skew_n3_D2plus.txt", &d2p},
                                                                            {"skew_n3_D2minus.txt", &d2m},
                                                                            {"skew_n3_D3minus.txt", &d3m}};
      for (const auto& [file, dp] : files) {
        if (render(*dp) != read_file(golden_dir + "/" + file)) {
          detail = file + " differs";
          ok = false;
        }
      }
    }
    return ok;
  });
  using Skews = std::set<SkewPipeDream>;
  auto s2 = [](std::set<Cell> c) { return SkewPipeDream(2, std::move(c)); };
  rec.run(8, "Sp4 chain tables", [&](std::string& detail) {
    auto full = SkewPipeDream::full(2);
    auto a = skew_chain(full, {1, 2, 1, 2});
    auto b = skew_chain(full, {2, 1, 2, 1});
    bool ok = a[1] == Skews{s2({{1, 2}, {2, 2}, {3, 2}})} && a[2] == Skews{s2({{1, 2}, {2, 2}})} &&
              a[3] == Skews{s2({{1, 2}})} && a[4] == Skews{s2({})} &&
              b[1] == Skews{s2({{2, 1}, {1, 2}, {2, 2}})} &&
              b[2] == Skews{s2({{1, 2}, {3, 2}}), s2({{2, 1}, {1, 2}})} &&
              b[3] == Skews{s2({{2, 2}}), s2({{3, 2}}), s2({{2, 1}})} && b[4] == Skews{s2({})};
    if (!golden_dir.empty()) {
      if (render_chain(a, {1, 2, 1, 2}) != read_file(golden_dir + "/sp4_chain_a.txt")) {
        detail = "sp4_chain_a.txt differs";
        ok = false;
      }
      if (render_chain(b, {2, 1, 2, 1}) != read_file(golden_dir + "/sp4_chain_b.txt")) {
        detail = "sp4_chain_b.txt differs";
        ok = false;
      }
    }
    return ok;
  });
  for (int n : {3, 4}) {
    rec.run(9, "GL pipe dreams vs geometric mitosis n=" + std::to_string(n), [&](std::string& detail) {
      auto r = check_gl_correspondence(n);
      detail = std::to_string(r.faces) + " faces, " + std::to_string(r.checks) + " checks" +
               (r.ok() ? "" : "; " + r.witness);
      return r.ok();
    });
  }
  using GLs = std::set<GLPipeDream>;
  auto g3 = [](std::set<Cell> c) { return GLPipeDream(3, std::move(c)); };
  rec.run(9, "GL3 chain tables", [&](std::string& detail) {
    auto a = gl_chain(GLPipeDream::full(3), {1, 2, 1});
    auto b = gl_chain(GLPipeDream::full(3), {2, 1, 2});
    bool ok = a[1] == GLs{g3({{1, 2}, {2, 2}})} && a[2] == GLs{g3({{1, 2}})} && a[3] == GLs{g3({})} &&
              b[1] == GLs{g3({{1, 1}, {1, 2}})} && b[2] == GLs{g3({{1, 1}}), g3({{2, 2}})} &&
              b[3] == GLs{g3({})};
    if (!golden_dir.empty()) {
      if (render_chain(a, {1, 2, 1}) != read_file(golden_dir + "/gl3_chain_a.txt")) {
        detail = "gl3_chain_a.txt differs";
        ok = false;
      }
      if (render_chain(b, {2, 1, 2}) != read_file(golden_dir + "/gl3_chain_b.txt")) {
        detail = "gl3_chain_b.txt differs";
        ok = false;
      }
    }
    return ok;
  });
  return rec.finish();
}

}  // namespace mitosis
