#include "mitosis/paramitosis.hpp"

#include <algorithm>
#include <set>
#include <sstream>

#include "mitosis/render.hpp"

namespace mitosis {

namespace {

bool is_integer(const Rational& q) { return q.get_den() == 1; }

long long to_ll(const Rational& q) { return q.get_num().get_si(); }

bool low_like(Status s) { return s == Status::AtLow || s == Status::Pinched; }

// Essential edges of the sub-box on coordinates [from, to), written into copies
// of `base`.
std::vector<BoxFace> edges_in_range(const Box& b, const BoxFace& base, int from, int to) {
  std::vector<BoxFace> out;
  for (int i = from; i < to; ++i) {
    if (b.pinched(i)) continue;
    BoxFace e = base;
    for (int j = from; j < to; ++j) {
      if (b.pinched(j)) {
        e.status[j] = Status::Pinched;
      } else if (j < i) {
        e.status[j] = Status::AtLow;
      } else if (j == i) {
        e.status[j] = Status::Free;
      } else {
        e.status[j] = Status::AtHigh;
      }
    }
    out.push_back(std::move(e));
  }
  return out;
}

}  // namespace

// -- Box ----------------------------------------------------------------------

Box::Box(std::vector<Rational> mu, std::vector<Rational> nu, bool first_unbounded)
    : mu_(std::move(mu)), nu_(std::move(nu)), first_unbounded_(first_unbounded) {
  if (mu_.size() != nu_.size()) throw ParamitosisError("mu and nu differ in length");
  if (first_unbounded_ && mu_.empty()) throw ParamitosisError("empty box cannot be unbounded");
  for (int i = 0; i < n(); ++i) {
    if (unbounded(i)) continue;
    if (mu_[i] > nu_[i]) throw ParamitosisError("box needs mu_i <= nu_i");
  }
}

bool Box::integral() const {
  for (int i = 0; i < n(); ++i) {
    if (!is_integer(mu_[i])) return false;
    if (!unbounded(i) && !is_integer(nu_[i])) return false;
  }
  return true;
}

int Box::dim() const {
  int d = 0;
  for (int i = 0; i < n(); ++i) d += pinched(i) ? 0 : 1;
  return d;
}

int BoxFace::dim() const {
  return static_cast<int>(std::count(status.begin(), status.end(), Status::Free));
}

// -- LaurentPoly --------------------------------------------------------------

LaurentPoly LaurentPoly::monomial(long long exponent, long long coeff) {
  LaurentPoly p;
  p.add(exponent, coeff);
  return p;
}

void LaurentPoly::add(long long exponent, long long coeff) {
  if (coeff == 0) return;
  auto& c = terms_[exponent];
  c += coeff;
  if (c == 0) terms_.erase(exponent);
}

long long LaurentPoly::coeff(long long exponent) const {
  auto it = terms_.find(exponent);
  return it == terms_.end() ? 0 : it->second;
}

LaurentPoly LaurentPoly::operator+(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, c);
  return r;
}

LaurentPoly LaurentPoly::operator-(const LaurentPoly& o) const {
  LaurentPoly r = *this;
  for (const auto& [e, c] : o.terms_) r.add(e, -c);
  return r;
}

std::string LaurentPoly::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    if (!first) os << (c < 0 ? " - " : " + ");
    else if (c < 0) os << "-";
    first = false;
    long long a = c < 0 ? -c : c;
    if (a != 1 || e == 0) os << a;
    if (e != 0) {
      os << "t";
      if (e != 1) os << "^" << e;
    }
  }
  return os.str();
}

// -- faces --------------------------------------------------------------------

bool is_face_of(const Box& b, const BoxFace& g) {
  if (static_cast<int>(g.status.size()) != b.n()) return false;
  for (int i = 0; i < b.n(); ++i) {
    Status s = g.status[i];
    if (b.pinched(i) != (s == Status::Pinched)) return false;
    if (b.unbounded(i) && s == Status::AtHigh) return false;
  }
  return true;
}

BoxFace low_vertex(const Box& b) {
  BoxFace g;
  for (int i = 0; i < b.n(); ++i) g.status.push_back(b.pinched(i) ? Status::Pinched : Status::AtLow);
  return g;
}

BoxFace box_face_at(const Box& b, const Point& z) {
  BoxFace g;
  for (int i = 0; i < b.n(); ++i) {
    if (b.pinched(i)) {
      g.status.push_back(Status::Pinched);
    } else if (z[i] == b.mu()[i]) {
      g.status.push_back(Status::AtLow);
    } else if (!b.unbounded(i) && z[i] == b.nu()[i]) {
      g.status.push_back(Status::AtHigh);
    } else {
      g.status.push_back(Status::Free);
    }
  }
  return g;
}

Point box_face_interior(const Box& b, const BoxFace& g) {
  Point z(b.n());
  for (int i = 0; i < b.n(); ++i) {
    switch (g.status[i]) {
      case Status::AtLow:
      case Status::Pinched:
        z[i] = b.mu()[i];
        break;
      case Status::AtHigh:
        z[i] = b.nu()[i];
        break;
      case Status::Free:
        z[i] = b.unbounded(i) ? Rational(b.mu()[i] + 1) : Rational((b.mu()[i] + b.nu()[i]) / 2);
        break;
    }
  }
  return z;
}

std::vector<Point> box_face_vertices(const Box& b, const BoxFace& g) {
  std::vector<Point> out{Point(b.n())};
  for (int i = 0; i < b.n(); ++i) {
    std::vector<Rational> vals;
    switch (g.status[i]) {
      case Status::AtLow:
      case Status::Pinched:
        vals = {b.mu()[i]};
        break;
      case Status::AtHigh:
        vals = {b.nu()[i]};
        break;
      case Status::Free:
        if (b.unbounded(i)) vals = {b.mu()[i]};
        else vals = {b.mu()[i], b.nu()[i]};
        break;
    }
    std::vector<Point> next;
    for (const auto& p : out) {
      for (const auto& v : vals) {
        Point q = p;
        q[i] = v;
        next.push_back(std::move(q));
      }
    }
    out = std::move(next);
  }
  return out;
}

std::vector<BoxFace> all_faces(const Box& b) {
  std::vector<BoxFace> out{BoxFace{}};
  for (int i = 0; i < b.n(); ++i) {
    std::vector<Status> opts;
    if (b.pinched(i)) opts = {Status::Pinched};
    else if (b.unbounded(i)) opts = {Status::AtLow, Status::Free};
    else opts = {Status::AtLow, Status::AtHigh, Status::Free};
    std::vector<BoxFace> next;
    for (const auto& f : out) {
      for (Status s : opts) {
        BoxFace g = f;
        g.status.push_back(s);
        next.push_back(std::move(g));
      }
    }
    out = std::move(next);
  }
  return out;
}

// -- mitosis ------------------------------------------------------------------

std::vector<BoxFace> essential_edges(const Box& b) {
  return edges_in_range(b, low_vertex(b), 0, b.n());
}

std::vector<BoxFace> paramitosis(const Box& b, const BoxFace& g) {
  // k = last coordinate on which g is not pinned to mu (0-based), -1 if none.
  int k = -1;
  for (int i = 0; i < b.n(); ++i) {
    if (!low_like(g.status[i])) k = i;
  }
  bool has_room = false;
  for (int i = k + 1; i < b.n(); ++i) has_room = has_room || !b.pinched(i);
  if (!has_room) return {};
  return edges_in_range(b, g, k + 1, b.n());
}

std::optional<Partition> reduced_partition(const Box& b, const BoxFace& g) {
  // Between consecutive free coordinates the non-pinched statuses must read
  // AtHigh* AtLow*; each boundary sits after the last AtHigh of its segment.
  Partition j;
  int last_free = 0;      // 1-based index of the previous free coordinate, 0 at start
  int last_high = -1;     // last AtHigh in the current segment
  bool seen_low = false;  // an AtLow has appeared in the current segment
  for (int i = 0; i < b.n(); ++i) {
    Status s = g.status[i];
    if (s == Status::Pinched) continue;
    if (s == Status::AtHigh) {
      if (seen_low) return std::nullopt;
      last_high = i + 1;
    } else if (s == Status::AtLow) {
      seen_low = true;
    } else {
      j.push_back(last_high >= 0 ? last_high : last_free);
      last_free = i + 1;
      last_high = -1;
      seen_low = false;
    }
  }
  j.push_back(last_high >= 0 ? last_high : last_free);
  return j;
}

std::vector<BoxFace> l_class(const Box& b, const BoxFace& g) {
  auto part = reduced_partition(b, g);
  if (!part) throw ParamitosisError("not reduced");
  const Partition& j = *part;
  BoxFace base = g;
  for (int i = 0; i < b.n(); ++i) {
    if (b.pinched(i)) continue;
    if (i < j.front()) base.status[i] = Status::AtHigh;
    if (i >= j.back()) base.status[i] = Status::AtLow;
  }
  std::vector<BoxFace> out{base};
  for (std::size_t t = 1; t < j.size(); ++t) {
    std::vector<BoxFace> next;
    for (const auto& f : out) {
      auto edges = edges_in_range(b, f, j[t - 1], j[t]);
      next.insert(next.end(), edges.begin(), edges.end());
    }
    out = std::move(next);
  }
  std::sort(out.begin(), out.end());
  return out;
}

// -- exponential sums ---------------------------------------------------------

LaurentPoly t_operator(const Box& b, const LaurentPoly& f) {
  if (!b.bounded()) throw ParamitosisError("t_operator is undefined on an unbounded box");
  Rational two_c = 0;
  for (int i = 0; i < b.n(); ++i) two_c += b.mu()[i] + b.nu()[i];
  if (!is_integer(two_c)) throw ParamitosisError("t_operator needs an integral reflection center");
  const long long twice_center = to_ll(two_c);
  // g = f - t * s(f), then divide by (1 - t) through running sums.
  LaurentPoly g = f;
  for (const auto& [e, c] : f.terms()) g.add(twice_center - e + 1, -c);
  LaurentPoly h;
  if (g.is_zero()) return h;
  long long running = 0;
  const long long lo = g.terms().begin()->first;
  const long long hi = g.terms().rbegin()->first;
  for (long long e = lo; e <= hi; ++e) {
    running += g.coeff(e);
    h.add(e, running);
  }
  if (running != 0) throw ParamitosisError("internal: division by (1 - t) is not exact");
  return h;
}

LaurentPoly chi(const Box& b, const std::vector<BoxFace>& faces) {
  if (!b.bounded() || !b.integral()) throw ParamitosisError("chi needs a bounded integral box");
  std::set<IntPoint> points;
  for (const auto& g : faces) {
    std::vector<IntPoint> pts{IntPoint{}};
    for (int i = 0; i < b.n(); ++i) {
      long long lo = to_ll(b.mu()[i]), hi = to_ll(b.nu()[i]);
      if (g.status[i] == Status::AtHigh) lo = hi;
      else if (g.status[i] != Status::Free) hi = lo;
      std::vector<IntPoint> next;
      for (const auto& p : pts) {
        for (long long v = lo; v <= hi; ++v) {
          IntPoint q = p;
          q.push_back(v);
          next.push_back(std::move(q));
        }
      }
      pts = std::move(next);
    }
    points.insert(pts.begin(), pts.end());
  }
  LaurentPoly out;
  for (const auto& p : points) {
    long long s = 0;
    for (long long v : p) s += v;
    out.add(s, 1);
  }
  return out;
}

std::string render_box_face(const BoxFace& g) {
  const int n = static_cast<int>(g.status.size());
  return render_grid(
      2, n, [](int, int) { return true; },
      [&](int r, int c) {
        Status s = g.status[c - 1];
        if (s == Status::Pinched) return true;
        return r == 1 ? s == Status::AtLow : s == Status::AtHigh;
      });
}

}  // namespace mitosis
