#include "mitosis/instances.hpp"

namespace mitosis {

namespace {

std::vector<int> gz_word(int n) {
  std::vector<int> w;
  for (int m = 1; m < n; ++m) {
    for (int i = m; i >= 1; --i) w.push_back(i);
  }
  return w;
}

Halfspace make_halfspace(int d, std::vector<std::pair<int, Rational>> terms, Rational b) {
  Halfspace h{std::vector<Rational>(d, Rational(0)), std::move(b)};
  for (auto& [k, v] : terms) h.a[k] += v;
  return h;
}

// Position of (i, k) in the triangle enumeration used for constraint order.
int gz_entry_index(int n, int i, int k) {
  int idx = 0;
  for (int r = 1; r < i; ++r) idx += n - r;
  return idx + (k - 1);
}

}  // namespace

int gz_coord(const Decomposition& dc, int n, int i, int k) { return dc.coord(i, n - i - k + 1); }

int gz_lower_constraint(int n, int i, int k) { return 2 * gz_entry_index(n, i, k); }
int gz_upper_constraint(int n, int i, int k) { return 2 * gz_entry_index(n, i, k) + 1; }

Point gz_lowest_vertex(const GZSpec& spec) {
  const int n = spec.n();
  Decomposition dc(n - 1, gz_word(n));
  Point a(dc.d());
  for (int i = 1; i < n; ++i) {
    for (int k = 1; k <= n - i; ++k) a[gz_coord(dc, n, i, k)] = spec.lambda[k - 1];
  }
  return a;
}

Parapolytope gz_polytope(const GZSpec& spec, bool shifted) {
  const int n = spec.n();
  if (n < 2) throw InstanceError("GZ needs n >= 2");
  for (int k = 1; k < n; ++k) {
    if (spec.lambda[k] < spec.lambda[k - 1]) throw InstanceError("lambda must be non-decreasing");
  }
  Decomposition dc(n - 1, gz_word(n));
  const int d = dc.d();
  const auto& lam = spec.lambda;
  // Entry t^i_k = coordinate + offset, where offset is lambda_k when shifted.
  auto offset = [&](int k) { return shifted ? lam[k - 1] : Rational(0); };
  std::vector<Halfspace> hs;
  for (int i = 1; i < n; ++i) {
    for (int k = 1; k <= n - i; ++k) {
      const int x = gz_coord(dc, n, i, k);
      // t^i_k - t^{i-1}_k >= 0
      std::vector<std::pair<int, Rational>> lo{{x, 1}};
      Rational blo = offset(k);
      if (i == 1) {
        blo -= lam[k - 1];
      } else {
        lo.push_back({gz_coord(dc, n, i - 1, k), -1});
        blo -= offset(k);
      }
      hs.push_back(make_halfspace(d, lo, blo));
      // t^{i-1}_{k+1} - t^i_k >= 0
      std::vector<std::pair<int, Rational>> hi{{x, -1}};
      Rational bhi = -offset(k);
      if (i == 1) {
        bhi += lam[k];
      } else {
        hi.push_back({gz_coord(dc, n, i - 1, k + 1), 1});
        bhi += offset(k + 1);
      }
      hs.push_back(make_halfspace(d, hi, bhi));
    }
  }
  for (auto& h : hs) h.b.canonicalize();
  return Parapolytope(HPolytope(d, std::move(hs)), std::move(dc));
}

Weight gz_weight(const GZSpec& spec) {
  const int n = spec.n();
  Weight w(n);
  for (int k = 0; k < n; ++k) {
    Rational v = spec.lambda[n - 1] - spec.lambda[k];
    if (v.get_den() != 1) throw InstanceError("GZ weight needs integral lambda");
    w[k] = v.get_num().get_si();
  }
  return w;
}

Parapolytope sp4_ddo(const SpddoSpec& s) {
  if (s.l1 < 0 || s.l2 < 0) throw InstanceError("lambda must be dominant");
  std::vector<Halfspace> hs{
      make_halfspace(4, {{0, 1}}, 0),                    // H1+: y1 >= 0
      make_halfspace(4, {{1, 2}, {2, -1}}, 0),           // H2+: 2y2 >= y3
      make_halfspace(4, {{2, 1}, {3, -2}}, 0),           // H3+: y3 >= 2y4
      make_halfspace(4, {{3, 1}}, 0),                    // H4+: y4 >= 0
      make_halfspace(4, {{0, -1}}, s.l1),                // H1-: y1 <= l1
      make_halfspace(4, {{0, 1}, {1, -1}}, s.l2),        // H2-: y2 <= y1 + l2
      make_halfspace(4, {{1, 1}, {2, -1}}, s.l2),        // H3-: y3 <= y2 + l2
      make_halfspace(4, {{3, -1}}, s.l2),                // H4-: y4 <= l2
  };
  return Parapolytope(HPolytope(4, std::move(hs)), Decomposition(2, {2, 1, 2, 1}));
}

Weight sp4_weight(const SpddoSpec& s) {
  if (s.l1.get_den() != 1 || s.l2.get_den() != 1) throw InstanceError("weight must be integral");
  return {s.l1.get_num().get_si(), s.l2.get_num().get_si()};
}

std::vector<std::pair<int, int>> sp2n_chain(int n, int i) {
  if (i < 1 || i > n) throw InstanceError("chain index out of range");
  std::vector<std::pair<int, int>> c;
  if (i == 1) return {{1, 1}};
  for (int t = 0; t <= i - 2; ++t) c.push_back({i - t, 2 * t + 2});
  c.push_back({1, i});
  for (int t = i - 2; t >= 0; --t) c.push_back({i - t, 2 * t + 1});
  return c;
}

std::vector<int> sp2n_word(int n) {
  std::vector<int> w;
  for (int m = n; m >= 1; --m) {
    for (int k = m; k >= 2; --k) w.push_back(k);
    w.push_back(1);
    for (int k = 2; k <= m; ++k) w.push_back(k);
  }
  return w;
}

Parapolytope sp2n_adapted_cone(int n) {
  if (n < 1) throw InstanceError("n must be positive");
  Decomposition dc(n, sp2n_word(n));
  const int d = dc.d();
  std::vector<Halfspace> hs;
  for (int i = 1; i <= n; ++i) {
    auto chain = sp2n_chain(n, i);
    for (std::size_t t = 0; t < chain.size(); ++t) {
      std::vector<std::pair<int, Rational>> terms{{dc.coord(chain[t].first, chain[t].second), 1}};
      if (t > 0) terms.push_back({dc.coord(chain[t - 1].first, chain[t - 1].second), -1});
      hs.push_back(make_halfspace(d, terms, 0));
    }
  }
  return Parapolytope(HPolytope(d, std::move(hs), true), std::move(dc));
}

int sp2n_constraint(const Parapolytope& cone, int k, int l) {
  const int n = cone.decomp.r();
  int idx = 0;
  for (int i = 1; i <= n; ++i) {
    for (const auto& kl : sp2n_chain(n, i)) {
      if (kl == std::make_pair(k, l)) return idx;
      ++idx;
    }
  }
  throw InstanceError("no coordinate x^k_l in C_0");
}

HPolytope sp4_no_body(const Rational& l1, const Rational& l2) {
  std::vector<Halfspace> hs{
      make_halfspace(4, {{0, 1}}, 0),
      make_halfspace(4, {{1, 1}}, 0),
      make_halfspace(4, {{2, 1}}, 0),
      make_halfspace(4, {{3, 1}}, 0),
      make_halfspace(4, {{0, -1}}, l1),
      make_halfspace(4, {{0, -2}, {1, -2}, {2, -1}, {3, -2}}, 2 * (l1 + l2)),
      make_halfspace(4, {{0, -1}, {1, -1}, {2, -1}, {3, -2}}, l1 + 2 * l2),
      make_halfspace(4, {{3, -1}}, l2),
  };
  for (auto& h : hs) h.b.canonicalize();
  return HPolytope(4, std::move(hs));
}

std::vector<std::vector<Rational>> phi_matrix() {
  return {{-1, 0, 0, 0}, {-1, -1, 0, 0}, {0, 0, 1, 2}, {0, 0, 0, 1}};
}

Point phi(const Point& y) {
  auto m = phi_matrix();
  Point out(4, Rational(0));
  for (int r = 0; r < 4; ++r) {
    for (int c = 0; c < 4; ++c) out[r] += m[r][c] * y[c];
  }
  return out;
}

Point phi_shift(const Rational& l1, const Rational& l2) {
  Rational s = l1 + l2;
  s.canonicalize();
  return {l1, s, Rational(0), Rational(0)};
}

}  // namespace mitosis
