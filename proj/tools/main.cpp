// Command-line front end. Exit codes: 0 success, 1 a check failed, 2 usage or
// input error.

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>

#include "mitosis/instances.hpp"
#include "mitosis/okounkov.hpp"
#include "mitosis/pipedreams.hpp"
#include "mitosis/schubert.hpp"
#include "mitosis/verify.hpp"

using json = nlohmann::ordered_json;
using namespace mitosis;

namespace {

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string format = "ascii";
  std::string path;

  bool is_json() const { return format == "json"; }
  void emit(const std::string& text) const {
    if (path.empty()) {
      std::cout << text;
      return;
    }
    std::ofstream out(path);
    if (!out) throw UsageError("cannot write " + path);
    out << text;
  }
  void emit(const json& j) const { emit(j.dump(2) + "\n"); }
};

// -- parsing ------------------------------------------------------------------

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, sep)) out.push_back(item);
  return out;
}

std::vector<Rational> parse_lambda(const std::string& s) {
  std::vector<Rational> out;
  for (const auto& part : split(s, ',')) {
    try {
      out.push_back(parse_rational(part));
    } catch (const std::exception&) {
      throw UsageError("bad rational '" + part + "' in --lambda");
    }
    if (sgn(out.back()) < 0) throw UsageError("--lambda entries must be nonnegative");
  }
  if (out.empty()) throw UsageError("--lambda is empty");
  return out;
}

std::vector<int> parse_ops(const std::string& s) {
  std::vector<int> out;
  if (s.empty()) return out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t used = 0;
      int v = std::stoi(part, &used);
      if (used != part.size()) throw std::invalid_argument(part);
      out.push_back(v);
    } catch (const std::exception&) {
      throw UsageError("bad letter '" + part + "'");
    }
  }
  return out;
}

long long integral(const Rational& q, const char* what) {
  if (q.get_den() != 1) throw UsageError(std::string(what) + " must be integral");
  return q.get_num().get_si();
}

// An instance of the bounded families or the cone.
struct Instance {
  std::string name;
  std::optional<Parapolytope> poly;
  std::optional<RootDatum> rd;
  Weight weight;
  int gl_n = 0;  // > 0 for GZ
  bool sp4 = false;
  int cone_n = 0;  // > 0 for C_0
};

Instance make_instance(const std::string& group, const std::string& lambda, int n) {
  Instance in;
  in.name = group;
  if (group == "sp4") {
    auto lam = lambda.empty() ? std::vector<Rational>{1, 1} : parse_lambda(lambda);
    if (lam.size() != 2) throw UsageError("sp4 needs --lambda l1,l2");
    SpddoSpec spec{lam[0], lam[1]};
    in.poly = sp4_ddo(spec);
    in.rd = RootDatum::sp(2, SpConvention::ShortFirst);
    in.weight = {integral(lam[0], "lambda"), integral(lam[1], "lambda")};
    in.sp4 = true;
    return in;
  }
  if (group.rfind("gl", 0) == 0 && group.size() > 2) {
    int size = 0;
    try {
      size = std::stoi(group.substr(2));
    } catch (const std::exception&) {
      throw UsageError("unknown group '" + group + "'");
    }
    if (size < 2 || size > 6) throw UsageError("gl needs 2 <= n <= 6");
    GZSpec spec;
    if (lambda.empty()) {
      for (int k = 0; k < size; ++k) spec.lambda.emplace_back(k);
    } else {
      spec.lambda = parse_lambda(lambda);
    }
    if (spec.n() != size) throw UsageError(group + " needs " + std::to_string(size) + " lambda entries");
    try {
      in.poly = gz_polytope(spec);
      in.weight = gz_weight(spec);
    } catch (const InstanceError& e) {
      throw UsageError(e.what());
    }
    in.rd = RootDatum::gl(size);
    in.gl_n = size;
    return in;
  }
  if (group == "c0" || group == "cone-c0") {
    if (n < 1 || n > 4) throw UsageError("cone-c0 needs 1 <= --n <= 4");
    in.poly = sp2n_adapted_cone(n);
    in.cone_n = n;
    in.name = "cone-c0";
    return in;
  }
  throw UsageError("unknown instance '" + group + "'");
}

WeylElement parse_element(const RootDatum& rd, const std::string& s) {
  if (s == "w0") return longest_element(rd);
  if (s == "e" || s.empty()) return weyl_element(rd, {});
  std::vector<int> word;
  if (s[0] == 's') {
    for (const auto& part : split(s.substr(1), 's')) {
      if (part.empty()) throw UsageError("bad element '" + s + "'");
      word.push_back(parse_ops(part).front());
    }
  } else {
    word = parse_ops(s);
  }
  for (int i : word) {
    if (i < 1 || i > rd.rank) throw UsageError("letter " + std::to_string(i) + " out of range");
  }
  return weyl_element(rd, word);
}

// -- formatting ---------------------------------------------------------------

json rational_json(const Rational& q) { return to_string(q); }

json point_json(const Point& p) {
  json a = json::array();
  for (const auto& q : p) a.push_back(rational_json(q));
  return a;
}

std::string point_string(const Point& p) {
  std::string s = "(";
  for (std::size_t k = 0; k < p.size(); ++k) s += (k ? ", " : "") + to_string(p[k]);
  return s + ")";
}

// "a.y + b = 0" in the polytope coordinates y1..yd.
std::string equation_string(const Halfspace& h, const std::string& rel) {
  std::string s;
  for (std::size_t k = 0; k < h.a.size(); ++k) {
    const Rational& c = h.a[k];
    if (sgn(c) == 0) continue;
    Rational a = abs(c);
    std::string coef = a == 1 ? "" : to_string(a);
    if (s.empty()) s += sgn(c) < 0 ? "-" : "";
    else s += sgn(c) < 0 ? " - " : " + ";
    s += coef + "y" + std::to_string(k + 1);
  }
  if (sgn(h.b) != 0) s += (sgn(h.b) < 0 ? " - " : " + ") + to_string(abs(h.b));
  if (s.empty()) s = "0";
  return s + " " + rel + " 0";
}

json decomposition_json(const Decomposition& dc) {
  return json{{"dims", dc.dims()}, {"word", dc.word()}};
}

json character_json(const CharacterElement& c) {
  json a = json::array();
  for (const auto& [w, k] : c.terms()) a.push_back(json{{"weight", w}, {"coeff", k}});
  return a;
}

std::string face_label(const Instance& in, const Face& f) {
  std::string s = "dim " + std::to_string(f.dim) + ":";
  if (f.tight.empty()) return s + " whole";
  for (int k : f.tight.indices()) {
    s += " [";
    s += in.sp4 ? facet_name(static_cast<Sp4Facet>(k)) + " " : "";
    s += equation_string(in.poly->poly[k], "=") + "]";
  }
  return s;
}

json face_json(const Instance& in, const Face& f) {
  json eq = json::array();
  for (int k : f.tight.indices()) eq.push_back(equation_string(in.poly->poly[k], "="));
  return json{{"dim", f.dim}, {"tight", f.tight.indices()}, {"equations", eq}};
}

// Diagram for faces through the lowest vertex, when the instance has one.
std::optional<std::string> face_diagram(const Instance& in, const Face& f) {
  try {
    if (in.sp4) return render(sp4_face_to_skew(*in.poly, f));
    if (in.cone_n > 0) return render(face_to_skew(*in.poly, f));
    if (in.gl_n > 0) return render(face_to_gl(*in.poly, f));
  } catch (const PipeDreamError&) {
  }
  return std::nullopt;
}

json cells_json(const std::set<Cell>& cells) {
  json a = json::array();
  for (const auto& [r, c] : cells) a.push_back({r, c});
  return a;
}

// -- commands -----------------------------------------------------------------

int cmd_character(const Output& out, const std::string& group, const std::string& lambda, const std::string& w) {
  auto in = make_instance(group, lambda, 0);
  if (!in.rd) throw UsageError("character needs gl<n> or sp4");
  auto el = parse_element(*in.rd, w);
  auto res = mitosis_chain(*in.poly, in.weight, *in.rd, el);
  auto fc = face_character(*in.poly, res.sigma, in.weight, *in.rd);
  auto dc = demazure_character(*in.rd, res.word, in.weight);
  const long long count = static_cast<long long>(lattice_points(in.poly->poly, res.sigma).size());
  const bool match = fc == dc;
  if (out.is_json()) {
    json faces = json::array();
    for (const auto& f : res.sigma.faces()) faces.push_back(face_json(in, f));
    out.emit(json{{"w", word_string(el.word)},
                  {"word", in.poly->decomp.word()},
                  {"subword", res.word},
                  {"faces", faces},
                  {"lattice_count", count},
                  {"demazure_dim", dc.coefficient_sum()},
                  {"hypotheses", res.hypotheses_hold()},
                  {"match", match},
                  {"face_character", character_json(fc)},
                  {"demazure_character", character_json(dc)}});
  } else {
    std::ostringstream os;
    os << "w            " << word_string(el.word) << "\n";
    os << "subword      " << word_string(res.word) << " of " << word_string(in.poly->decomp.word()) << "\n";
    os << "faces        " << res.sigma.size() << "\n";
    for (const auto& f : res.sigma.faces()) os << "  " << face_label(in, f) << "\n";
    os << "faces char   " << fc.to_string() << "\n";
    os << "Demazure     " << dc.to_string() << "\n";
    os << "lattice      " << count << "\n";
    os << "dimension    " << dc.coefficient_sum() << "\n";
    os << "hypotheses   " << (res.hypotheses_hold() ? "hold" : "FAIL") << "\n";
    os << "match        " << (match ? "yes" : "NO") << "\n";
    out.emit(os.str());
  }
  return match ? 0 : 1;
}

int cmd_mitosis(const Output& out, const std::string& group, const std::string& lambda, int n,
                const std::string& ops) {
  auto in = make_instance(group, lambda, n);
  const auto letters = parse_ops(ops);
  for (int i : letters) {
    if (i < 1 || i > in.poly->decomp.r()) throw UsageError("letter " + std::to_string(i) + " out of range");
  }
  std::vector<Face> stage{minimal_face_containing(in.poly->poly, Point(in.poly->dim(), Rational(0)))};
  json stages = json::array();
  std::ostringstream os;
  auto record = [&](const std::string& head, const std::vector<Face>& faces) {
    json fs = json::array();
    os << head << " (" << faces.size() << (faces.size() == 1 ? " face)\n" : " faces)\n");
    for (const auto& f : faces) {
      auto fj = face_json(in, f);
      os << "  " << face_label(in, f) << "\n";
      if (auto d = face_diagram(in, f)) {
        fj["diagram"] = *d;
        std::istringstream lines(*d);
        for (std::string line; std::getline(lines, line);) os << "    " << line << "\n";
      }
      fs.push_back(fj);
    }
    stages.push_back(json{{"op", head == "start" ? json(nullptr) : json(std::stoi(head.substr(2)))}, {"faces", fs}});
  };
  record("start", stage);
  for (int i : letters) {
    stage = mitosis_of_set(*in.poly, i, stage);
    record("M_" + std::to_string(i), stage);
  }
  if (out.is_json()) {
    out.emit(json{{"instance", in.name}, {"ops", letters}, {"stages", stages}});
  } else {
    out.emit(os.str());
  }
  return 0;
}

int cmd_polytope(const Output& out, const std::string& kind, const std::string& lambda, const std::string& l1,
                 const std::string& l2, int n) {
  std::string lam = lambda;
  std::string group = kind;
  if (kind == "gz") {
    if (lambda.empty()) throw UsageError("gz needs --lambda");
    group = "gl" + std::to_string(parse_lambda(lambda).size());
  } else if (kind == "sp4" && lambda.empty()) {
    lam = (l1.empty() ? "1" : l1) + "," + (l2.empty() ? "1" : l2);
  } else if (kind != "sp4" && kind != "cone-c0") {
    throw UsageError("polytope kind must be gz, sp4 or cone-c0");
  }
  auto in = make_instance(group, lam, n);
  const auto& p = in.poly->poly;
  const auto& gens = p.generators();
  const bool certified = certify_parapolytope(*in.poly);
  std::optional<long long> points;
  if (!p.is_cone()) points = static_cast<long long>(lattice_points(p).size());
  if (out.is_json()) {
    json ineq = json::array(), verts = json::array(), rays = json::array();
    for (const auto& h : p.halfspaces()) {
      json a = json::array();
      for (const auto& q : h.a) a.push_back(rational_json(q));
      ineq.push_back(json{{"a", a}, {"b", rational_json(h.b)}});
    }
    for (const auto& v : gens.vertices) verts.push_back(point_json(v));
    for (const auto& r : gens.rays) rays.push_back(point_json(r));
    json j{{"kind", kind},
           {"dim", p.dim()},
           {"cone", p.is_cone()},
           {"decomposition", decomposition_json(in.poly->decomp)},
           {"inequalities", ineq},
           {"vertices", verts},
           {"rays", rays},
           {"parapolytope", certified}};
    j["lattice_points"] = points ? json(*points) : json(nullptr);
    out.emit(j);
  } else {
    std::ostringstream os;
    os << kind << " in R^" << p.dim() << (p.is_cone() ? " (cone)" : "") << "\n";
    os << "decomposition dims " << json(in.poly->decomp.dims()).dump() << " word "
       << word_string(in.poly->decomp.word()) << "\n";
    os << "coordinates";
    for (int k = 0; k < p.dim(); ++k) os << " y" << k + 1 << "=" << in.poly->decomp.coord_name(k);
    os << "\ninequalities (" << p.size() << ")\n";
    for (int k = 0; k < p.size(); ++k) {
      os << "  " << k << ": " << (in.sp4 ? facet_name(static_cast<Sp4Facet>(k)) + " " : "")
         << equation_string(p[k], ">=") << "\n";
    }
    os << "vertices (" << gens.vertices.size() << ")\n";
    for (const auto& v : gens.vertices) os << "  " << point_string(v) << "\n";
    if (!gens.rays.empty()) {
      os << "rays (" << gens.rays.size() << ")\n";
      for (const auto& r : gens.rays) os << "  " << point_string(r) << "\n";
    }
    if (points) os << "lattice points " << *points << "\n";
    os << "parapolytope " << (certified ? "yes" : "no") << "\n";
    out.emit(os.str());
  }
  return certified ? 0 : 1;
}

template <class D>
D diagram_from_json(const json& j, int n) {
  try {
    const int size = j.value("n", n);
    std::set<Cell> cells;
    for (const auto& c : j.at("crosses")) cells.insert({c.at(0).get<int>(), c.at(1).get<int>()});
    return D(size, std::move(cells));
  } catch (const json::exception& e) {
    throw UsageError(std::string("bad diagram JSON: ") + e.what());
  } catch (const PipeDreamError& e) {
    throw UsageError(e.what());
  }
}

template <class D>
int run_pipedream(const Output& out, const D& start, const std::vector<int>& ops,
                  const std::vector<std::set<D>>& stages) {
  if (out.is_json()) {
    json js = json::array();
    for (std::size_t s = 0; s < stages.size(); ++s) {
      json ds = json::array();
      for (const auto& d : stages[s]) ds.push_back(json{{"n", d.n}, {"crosses", cells_json(d.crosses)}});
      js.push_back(json{{"op", s == 0 ? json(nullptr) : json(ops[s - 1])}, {"diagrams", ds}});
    }
    out.emit(json{{"n", start.n}, {"ops", ops}, {"stages", js}});
  } else {
    out.emit(render_chain(stages, ops));
  }
  return 0;
}

int cmd_pipedream(const Output& out, const std::string& kind, int n, const std::string& ops,
                  const std::string& input) {
  const auto letters = parse_ops(ops);
  json j;
  if (!input.empty()) {
    std::ifstream f(input);
    if (!f) throw UsageError("cannot read " + input);
    try {
      j = json::parse(f);
    } catch (const json::exception& e) {
      throw UsageError(std::string("bad JSON: ") + e.what());
    }
  }
  if (kind == "skew") {
    if (input.empty() && n < 1) throw UsageError("skew needs --n or --input");
    auto start = input.empty() ? SkewPipeDream::full(n) : diagram_from_json<SkewPipeDream>(j, n);
    for (int i : letters) {
      if (i < 1 || i > start.n) throw UsageError("letter " + std::to_string(i) + " out of range");
    }
    return run_pipedream(out, start, letters, skew_chain(start, letters));
  }
  if (kind == "gl") {
    if (input.empty() && n < 2) throw UsageError("gl needs --n >= 2 or --input");
    auto start = input.empty() ? GLPipeDream::full(n) : diagram_from_json<GLPipeDream>(j, n);
    for (int i : letters) {
      if (i < 1 || i >= start.n) throw UsageError("letter " + std::to_string(i) + " out of range");
    }
    return run_pipedream(out, start, letters, gl_chain(start, letters));
  }
  throw UsageError("pipedream kind must be skew or gl");
}

std::string exponent_string(const Exponent& e) {
  return "(" + std::to_string(e[0]) + "," + std::to_string(e[1]) + "," + std::to_string(e[2]) + "," +
         std::to_string(e[3]) + ")";
}

int cmd_valuation(const Output& out, const std::string& what) {
  const auto b1 = section_basis_w1(), b2 = section_basis_w2();
  if (what == "bases") {
    json j = json::array();
    std::ostringstream os;
    for (const auto& [name, basis] : {std::pair{"w1", b1}, std::pair{"w2", b2}}) {
      json sec = json::array();
      os << name << "\n";
      for (const auto& f : basis) {
        sec.push_back(json{{"section", f.to_string()}, {"valuation", lex_lowest_valuation(f)}});
        os << "  " << f.to_string() << "  ->  " << exponent_string(lex_lowest_valuation(f)) << "\n";
      }
      j.push_back(json{{"weight", name}, {"sections", sec}});
    }
    out.is_json() ? out.emit(j) : out.emit(os.str());
    return 0;
  }
  if (what != "rho-points") throw UsageError("valuation target must be rho-points or bases");
  std::map<Exponent, std::vector<std::string>> products;
  for (const auto& f : b1) {
    for (const auto& g : b2) {
      products[lex_lowest_valuation(f * g)].push_back("(" + f.to_string() + ")(" + g.to_string() + ")");
    }
  }
  auto vlist = vertices(sp4_no_body(1, 1));
  std::set<Point> verts(vlist.begin(), vlist.end());
  json j = json::array();
  std::ostringstream os;
  int nv = 0;
  for (const auto& [e, prods] : products) {
    const bool vertex = verts.count(to_point(to_int_point(e))) > 0;
    nv += vertex;
    j.push_back(json{{"point", e}, {"vertex", vertex}, {"products", prods}});
    os << exponent_string(e) << (vertex ? " *" : "  ") << "  " << prods.front();
    if (prods.size() > 1) os << " (+" << prods.size() - 1 << " more)";
    os << "\n";
  }
  os << products.size() << " points, " << nv << " vertices (*)\n";
  out.is_json() ? out.emit(json{{"points", j}, {"count", products.size()}, {"vertices", nv}}) : out.emit(os.str());
  return 0;
}

int cmd_verify(const Output& out, const std::string& suite, const std::string& golden) {
  std::vector<std::string> names;
  if (suite == "all") {
    names = suite_names();
  } else if (std::find(suite_names().begin(), suite_names().end(), suite) != suite_names().end()) {
    names = {suite};
  } else {
    throw UsageError("unknown suite '" + suite + "'");
  }
  bool all = true;
  json js = json::array();
  std::ostringstream os;
  for (const auto& name : names) {
    auto rep = run_suite(name, golden);
    all = all && rep.passed();
    json cases = json::array();
    for (const auto& c : rep.cases) {
      cases.push_back(json{{"criterion", c.criterion}, {"name", c.name}, {"passed", c.passed}, {"detail", c.detail}});
      os << (c.passed ? "pass " : "FAIL ") << name << ": " << c.name << (c.detail.empty() ? "" : " (" + c.detail + ")")
         << "\n";
    }
    js.push_back(json{{"suite", name}, {"passed", rep.passed()}, {"cases", cases}});
  }
  os << (all ? "all passed\n" : "FAILURES\n");
  out.is_json() ? out.emit(json{{"passed", all}, {"suites", js}}) : out.emit(os.str());
  return all ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Geometric mitosis on parapolytopes: Demazure characters, Newton-Okounkov data, pipe dreams"};
  app.require_subcommand(1);
  app.fallthrough();
  Output out;
  app.add_option("--format", out.format, "Output format")->check(CLI::IsMember({"json", "ascii"}));
  app.add_option("--out", out.path, "Write output to this file");

  std::string group, lambda, w, ops, kind, l1, l2, input, what, suite, golden;
  int n = 0;

  auto* character = app.add_subcommand("character", "Face character of the mitosis chain vs the Demazure character");
  character->add_option("group", group, "gl3 | gl4 | sp4")->required();
  character->add_option("--lambda", lambda, "Comma-separated weight");
  character->add_option("--w", w, "Weyl element: e, w0, s2s1 or 2,1")->required();

  auto* mitosis = app.add_subcommand("mitosis", "Apply mitosis operators to the lowest vertex");
  mitosis->add_option("instance", group, "gl<n> | sp4 | cone-c0")->required();
  mitosis->add_option("--lambda", lambda, "Comma-separated weight");
  mitosis->add_option("--n", n, "Rank for cone-c0");
  mitosis->add_option("--ops", ops, "Operators in order of application, e.g. 2,1")->required();

  auto* polytope = app.add_subcommand("polytope", "Build an instance and print its data");
  polytope->add_option("kind", kind, "gz | sp4 | cone-c0")->required();
  polytope->add_option("--lambda", lambda, "Comma-separated lambda");
  polytope->add_option("--l1", l1, "Sp4 l1");
  polytope->add_option("--l2", l2, "Sp4 l2");
  polytope->add_option("--n", n, "Rank for cone-c0");

  auto* pipedream = app.add_subcommand("pipedream", "Combinatorial mitosis on pipe dreams");
  pipedream->add_option("kind", kind, "skew | gl")->required();
  pipedream->add_option("--n", n, "Size (default diagram: all crosses)");
  pipedream->add_option("--ops,--word", ops, "Operators in order of application");
  pipedream->add_option("--input", input, "Diagram as {\"n\":3,\"crosses\":[[i,j],...]}");
  pipedream->add_option("--render", out.format, "Alias of --format")->check(CLI::IsMember({"json", "ascii"}));

  auto* valuation = app.add_subcommand("valuation", "Lowest-term valuation data for Sp4");
  valuation->add_option("target", what, "rho-points | bases")->required();

  auto* verify = app.add_subcommand("verify", "Run a verification suite");
  verify->add_option("suite", suite, "paramitosis | balanced | demazure | okounkov | skew | all")->required();
  verify->add_option("--golden", golden, "Directory with golden ASCII files");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  try {
    if (*character) return cmd_character(out, group, lambda, w);
    if (*mitosis) return cmd_mitosis(out, group, lambda, n, ops);
    if (*polytope) return cmd_polytope(out, kind, lambda, l1, l2, n);
    if (*pipedream) return cmd_pipedream(out, kind, n, ops, input);
    if (*valuation) return cmd_valuation(out, what);
    if (*verify) return cmd_verify(out, suite, golden);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const WeylError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 2;
}
