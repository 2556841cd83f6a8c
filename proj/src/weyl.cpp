#include "mitosis/weyl.hpp"

#include <algorithm>
#include <gmpxx.h>
#include <mutex>
#include <set>
#include <sstream>

namespace mitosis {

namespace {

long long dot(const Weight& a, const Weight& b) {
  long long s = 0;
  for (std::size_t k = 0; k < a.size(); ++k) s += a[k] * b[k];
  return s;
}

Matrix identity(int m) {
  Matrix id(m, std::vector<long long>(m, 0));
  for (int k = 0; k < m; ++k) id[k][k] = 1;
  return id;
}

Matrix mul(const Matrix& a, const Matrix& b) {
  const std::size_t m = a.size();
  Matrix c(m, std::vector<long long>(m, 0));
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t k = 0; k < m; ++k) {
      if (a[i][k] == 0) continue;
      for (std::size_t j = 0; j < m; ++j) c[i][j] += a[i][k] * b[k][j];
    }
  }
  return c;
}

Weight apply(const Matrix& a, const Weight& v) {
  Weight out(a.size(), 0);
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = dot(a[i], v);
  return out;
}

Matrix reflection_matrix(const RootDatum& rd, int i) {
  Matrix m = identity(rd.lattice_dim);
  for (int col = 0; col < rd.lattice_dim; ++col) {
    Weight e(rd.lattice_dim, 0);
    e[col] = 1;
    Weight img = rd.reflect(i, e);
    for (int row = 0; row < rd.lattice_dim; ++row) m[row][col] = img[row];
  }
  return m;
}

const std::vector<WeylElement>& cached_group(const RootDatum& rd) {
  static std::mutex mu;
  static std::map<std::string, std::vector<WeylElement>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(rd.name);
  if (it != cache.end()) return it->second;

  std::vector<Matrix> gens;
  for (int i = 1; i <= rd.rank; ++i) gens.push_back(reflection_matrix(rd, i));
  std::vector<WeylElement> out{WeylElement{identity(rd.lattice_dim), {}}};
  std::set<Matrix> seen{out.front().matrix};
  // Breadth first, generators in increasing order: the first word found for an
  // element is its lexicographically least reduced word.
  for (std::size_t head = 0; head < out.size(); ++head) {
    for (int i = 1; i <= rd.rank; ++i) {
      Matrix m = mul(out[head].matrix, gens[i - 1]);
      if (!seen.insert(m).second) continue;
      auto word = out[head].word;
      word.push_back(i);
      out.push_back(WeylElement{std::move(m), std::move(word)});
    }
    if (out.size() > 100000) throw WeylError("Weyl group too large");
  }
  return cache.emplace(rd.name, std::move(out)).first->second;
}

}  // namespace

// -- root data ----------------------------------------------------------------

long long RootDatum::pairing(const Weight& chi, int i) const { return dot(coroots[i - 1], chi); }

Weight RootDatum::reflect(int i, const Weight& chi) const {
  long long k = pairing(chi, i);
  Weight out = chi;
  for (int c = 0; c < lattice_dim; ++c) out[c] -= k * roots[i - 1][c];
  return out;
}

bool RootDatum::dominant(const Weight& chi) const {
  for (int i = 1; i <= rank; ++i) {
    if (pairing(chi, i) < 0) return false;
  }
  return true;
}

RootDatum RootDatum::gl(int n) {
  if (n < 1) throw WeylError("GL_n needs n >= 1");
  RootDatum rd;
  rd.name = "GL" + std::to_string(n);
  rd.rank = n - 1;
  rd.lattice_dim = n;
  for (int i = 0; i + 1 < n; ++i) {
    Weight a(n, 0);
    a[i] = 1;
    a[i + 1] = -1;
    rd.roots.push_back(a);
    rd.coroots.push_back(a);
  }
  for (int k = 0; k < n; ++k) rd.rho.push_back(n - 1 - k);
  return rd;
}

RootDatum RootDatum::sp(int n, SpConvention conv) {
  if (n < 1) throw WeylError("Sp_2n needs n >= 1");
  // Fundamental-weight coordinates; Bourbaki labels have alpha_n long.
  auto bourbaki = [n](int j, int i) -> long long {  // (alpha_j, alpha_i)
    if (i == j) return 2;
    if (std::abs(i - j) != 1) return 0;
    if (j == n && i == n - 1) return -2;
    return -1;
  };
  auto label = [&](int i) { return conv == SpConvention::ShortFirst ? i : n + 1 - i; };
  RootDatum rd;
  rd.name = "Sp" + std::to_string(2 * n) + (conv == SpConvention::ShortFirst ? "-short" : "-long");
  rd.rank = n;
  rd.lattice_dim = n;
  for (int j = 1; j <= n; ++j) {
    Weight a(n, 0);
    for (int i = 1; i <= n; ++i) a[i - 1] = bourbaki(label(j), label(i));
    rd.roots.push_back(a);
    Weight e(n, 0);
    e[j - 1] = 1;
    rd.coroots.push_back(e);
  }
  rd.rho.assign(n, 1);
  return rd;
}

// -- Weyl group ---------------------------------------------------------------

std::vector<WeylElement> weyl_group(const RootDatum& rd) { return cached_group(rd); }

WeylElement longest_element(const RootDatum& rd) {
  const auto& g = cached_group(rd);
  return g.back();
}

Matrix word_matrix(const RootDatum& rd, const std::vector<int>& word) {
  Matrix m = identity(rd.lattice_dim);
  for (int i : word) {
    if (i < 1 || i > rd.rank) throw WeylError("reflection index out of range: " + std::to_string(i));
    m = mul(m, reflection_matrix(rd, i));
  }
  return m;
}

WeylElement weyl_element(const RootDatum& rd, const std::vector<int>& word) {
  Matrix m = word_matrix(rd, word);
  for (const auto& w : cached_group(rd)) {
    if (w.matrix == m) return w;
  }
  throw WeylError("internal: element not found in Weyl group");
}

Weight act(const WeylElement& w, const Weight& chi) { return apply(w.matrix, chi); }

WeylElement inverse(const RootDatum& rd, const WeylElement& w) {
  std::vector<int> rev(w.word.rbegin(), w.word.rend());
  return weyl_element(rd, rev);
}

WeylElement multiply(const RootDatum& rd, const WeylElement& a, const WeylElement& b) {
  auto word = a.word;
  word.insert(word.end(), b.word.begin(), b.word.end());
  return weyl_element(rd, word);
}

std::string word_string(const std::vector<int>& word) {
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i);
  return s;
}

// -- group algebra ------------------------------------------------------------

CharacterElement CharacterElement::monomial(const Weight& w, long long coeff) {
  CharacterElement c;
  c.add(w, coeff);
  return c;
}

void CharacterElement::add(const Weight& w, long long coeff) {
  if (coeff == 0) return;
  auto& c = terms_[w];
  c += coeff;
  if (c == 0) terms_.erase(w);
}

long long CharacterElement::coeff(const Weight& w) const {
  auto it = terms_.find(w);
  return it == terms_.end() ? 0 : it->second;
}

long long CharacterElement::coefficient_sum() const {
  long long s = 0;
  for (const auto& [w, c] : terms_) s += c;
  return s;
}

bool CharacterElement::nonnegative() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const auto& t) { return t.second > 0; });
}

CharacterElement CharacterElement::operator+(const CharacterElement& o) const {
  CharacterElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, c);
  return r;
}

CharacterElement CharacterElement::operator-(const CharacterElement& o) const {
  CharacterElement r = *this;
  for (const auto& [w, c] : o.terms_) r.add(w, -c);
  return r;
}

CharacterElement CharacterElement::operator*(const CharacterElement& o) const {
  CharacterElement r;
  for (const auto& [a, ca] : terms_) {
    for (const auto& [b, cb] : o.terms_) {
      Weight s = a;
      for (std::size_t k = 0; k < s.size(); ++k) s[k] += b[k];
      r.add(s, ca * cb);
    }
  }
  return r;
}

CharacterElement CharacterElement::shifted(const Weight& shift) const {
  CharacterElement r;
  for (const auto& [w, c] : terms_) {
    Weight s = w;
    for (std::size_t k = 0; k < s.size(); ++k) s[k] += shift[k];
    r.add(s, c);
  }
  return r;
}

std::string CharacterElement::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [w, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    if (a != 1) os << a << "*";
    os << "e(";
    for (std::size_t k = 0; k < w.size(); ++k) os << (k ? "," : "") << w[k];
    os << ")";
  }
  return os.str();
}

// -- Demazure operators -------------------------------------------------------

CharacterElement demazure(const RootDatum& rd, int i, const CharacterElement& f) {
  if (i < 1 || i > rd.rank) throw WeylError("reflection index out of range: " + std::to_string(i));
  const Weight& alpha = rd.roots[i - 1];
  CharacterElement out;
  for (const auto& [mu, c] : f.terms()) {
    const long long k = rd.pairing(mu, i);
    auto step = [&](long long j) {
      Weight w = mu;
      for (std::size_t t = 0; t < w.size(); ++t) w[t] += j * alpha[t];
      return w;
    };
    if (k <= 0) {
      for (long long j = 0; j <= -k; ++j) out.add(step(j), c);
    } else {
      for (long long j = 1; j <= k - 1; ++j) out.add(step(-j), -c);
    }
  }
  return out;
}

CharacterElement demazure_character(const RootDatum& rd, const std::vector<int>& word,
                                    const Weight& lambda) {
  if (weyl_element(rd, word).length() != static_cast<int>(word.size())) {
    throw WeylError("word is not reduced: " + word_string(word));
  }
  auto w0 = longest_element(rd);
  CharacterElement f = CharacterElement::monomial(act(w0, lambda));
  for (auto it = word.rbegin(); it != word.rend(); ++it) f = demazure(rd, *it, f);
  return f;
}

long long weyl_dim(const RootDatum& rd, const Weight& lambda) {
  if (!rd.dominant(lambda)) throw WeylError("weight is not dominant");
  // Positive coroots as linear forms chi -> (w^{-1} chi, alpha_i).
  std::set<Weight> forms;
  for (const auto& w : cached_group(rd)) {
    for (int i = 1; i <= rd.rank; ++i) {
      // row . chi = coroot_i . (w^{-1} chi)
      Weight row(rd.lattice_dim, 0);
      Matrix winv = inverse(rd, w).matrix;
      for (int c = 0; c < rd.lattice_dim; ++c) {
        for (int k = 0; k < rd.lattice_dim; ++k) row[c] += rd.coroots[i - 1][k] * winv[k][c];
      }
      if (dot(row, rd.rho) > 0) forms.insert(row);
    }
  }
  Weight shifted = lambda;
  for (int c = 0; c < rd.lattice_dim; ++c) shifted[c] += rd.rho[c];
  mpq_class d = 1;
  for (const auto& f : forms) {
    mpq_class q(static_cast<long>(dot(f, shifted)), static_cast<long>(dot(f, rd.rho)));
    q.canonicalize();
    d *= q;
  }
  if (d.get_den() != 1) throw WeylError("internal: non-integral Weyl dimension");
  return d.get_num().get_si();
}

// -- subwords -----------------------------------------------------------------

std::vector<std::vector<int>> all_compatible_subwords(const RootDatum& rd, const WeylElement& target,
                                                      const std::vector<int>& ambient) {
  auto w0 = longest_element(rd);
  auto u = multiply(rd, multiply(rd, w0, target), inverse(rd, w0));
  const int len = u.length();
  const int n = static_cast<int>(ambient.size());
  std::vector<std::vector<int>> out;
  if (len > n) return out;
  std::vector<int> pos(len);
  for (int k = 0; k < len; ++k) pos[k] = k;
  while (true) {
    std::vector<int> word;
    for (int p : pos) word.push_back(ambient[p]);
    if (word_matrix(rd, word) == u.matrix) out.push_back(pos);
    int k = len - 1;
    while (k >= 0 && pos[k] == n - len + k) --k;
    if (k < 0) break;
    ++pos[k];
    for (int t = k + 1; t < len; ++t) pos[t] = pos[t - 1] + 1;
  }
  return out;
}

std::vector<int> subword_reduced_word(const RootDatum& rd, const WeylElement& target,
                                      const std::vector<int>& ambient) {
  auto all = all_compatible_subwords(rd, target, ambient);
  if (all.empty()) throw WeylError("no compatible subword");
  std::vector<int> word;
  for (int p : all.front()) word.push_back(ambient[p]);
  return word;
}

}  // namespace mitosis
