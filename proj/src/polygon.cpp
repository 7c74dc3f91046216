#include "dnpoly/polygon.hpp"

#include <algorithm>
#include <stdexcept>

namespace dnpoly {

Rank::Rank(int n) : n_(n) {
  if (n < 4) throw std::invalid_argument("rank must satisfy n >= 4, got " + std::to_string(n));
}

const char* to_string(Color c) { return c == Color::Red ? "red" : "green"; }

bool strictly_between(int vertices, int u, int v, int w) {
  const int span = ((v - u) % vertices + vertices) % vertices;
  const int pos = ((w - u) % vertices + vertices) % vertices;
  return pos > 0 && pos < span;
}

bool arcs_cross(int vertices, Arc a, Arc b) {
  if (a.u == a.v || b.u == b.v) return false;
  if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v) return false;
  return strictly_between(vertices, a.u, a.v, b.u) != strictly_between(vertices, a.u, a.v, b.v);
}

bool is_edge(Rank rank, int u, int v) {
  const int d = rank.mod(v - u);
  return d == 1 || d == rank.vertices() - 1;
}

ArcElement ArcElement::pair(Rank rank, int a, int b) {
  const int n = rank.n();
  a = rank.mod(a);
  b = rank.mod(b);
  if (a == b) throw std::invalid_argument("pair of arcs needs distinct endpoints");
  if (rank.mod(b - a) == n) throw std::invalid_argument("chord is a diameter, not a pair of arcs");
  if (is_edge(rank, a, b)) throw std::invalid_argument("pairs of edges are not arc elements");
  // Representative: the orbit member containing the smallest of the four vertices.
  const int a2 = rank.mod(a + n);
  const int b2 = rank.mod(b + n);
  const int lo = std::min({a, b, a2, b2});
  int x = 0;
  int y = 0;
  if (lo == a || lo == b) {
    x = std::min(a, b);
    y = std::max(a, b);
  } else {
    x = std::min(a2, b2);
    y = std::max(a2, b2);
  }
  return ArcElement(Kind::Pair, n, x, y, Color::Red);
}

ArcElement ArcElement::diameter(Rank rank, int a, Color color) {
  const int n = rank.n();
  const int x = rank.mod(a) % n;
  return ArcElement(Kind::Diameter, n, x, x + n, color);
}

ArcElement ArcElement::from_chord(Rank rank, int a, int b, Color color_if_diameter) {
  if (rank.mod(b - a) == rank.n()) return diameter(rank, a, color_if_diameter);
  return pair(rank, a, b);
}

std::vector<Arc> ArcElement::arcs() const {
  if (is_diameter()) return {Arc{a_, b_}};
  const Rank r(n_);
  return {Arc{a_, b_}, Arc{r.mod(a_ + n_), r.mod(b_ + n_)}};
}

std::vector<Arc> ArcElement::oriented_arcs() const {
  std::vector<Arc> out;
  for (const Arc& arc : arcs()) {
    out.push_back(arc);
    out.push_back(Arc{arc.v, arc.u});
  }
  return out;
}

ArcElement ArcElement::rotated(int k) const {
  const Rank r(n_);
  if (is_diameter()) return diameter(r, a_ + k, color_);
  return pair(r, a_ + k, b_ + k);
}

ArcElement ArcElement::with_color(Color c) const {
  if (!is_diameter()) throw std::logic_error("only diameters carry a colour");
  return ArcElement(kind_, n_, a_, b_, c);
}

std::string ArcElement::to_string() const {
  std::string s = "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
  if (is_diameter()) s += color_ == Color::Red ? "_r" : "_g";
  return s;
}

EdgePair::EdgePair(Rank rank, int a) : n_(rank.n()), a_(rank.mod(a) % rank.n()) {}

int crossing_count(const ArcElement& e1, const ArcElement& e2) {
  if (e1.n() != e2.n()) throw std::invalid_argument("crossing_count: elements of different rank");
  const int m = 2 * e1.n();
  if (e1.is_diameter() && e2.is_diameter()) {
    if (e1.color() == e2.color()) return 0;
    return arcs_cross(m, e1.arcs()[0], e2.arcs()[0]) ? 1 : 0;
  }
  if (e1.is_diameter() || e2.is_diameter()) {
    const ArcElement& d = e1.is_diameter() ? e1 : e2;
    const ArcElement& p = e1.is_diameter() ? e2 : e1;
    return arcs_cross(m, d.arcs()[0], p.arcs()[0]) ? 1 : 0;
  }
  const Arc rep = e1.arcs()[0];
  int count = 0;
  for (const Arc& other : e2.arcs()) count += arcs_cross(m, rep, other) ? 1 : 0;
  return count;
}

Diagram::Diagram(Rank rank, std::initializer_list<ArcElement> elems) : rank_(rank) {
  for (const auto& e : elems) insert(e);
}

Diagram::Diagram(Rank rank, const std::vector<ArcElement>& elems) : rank_(rank) {
  for (const auto& e : elems) insert(e);
}

bool Diagram::insert(const ArcElement& e) {
  if (e.n() != rank_.n()) throw std::invalid_argument("element rank does not match diagram rank");
  return elements_.insert(e).second;
}

bool Diagram::is_subset_of(const Diagram& other) const {
  return std::includes(other.elements_.begin(), other.elements_.end(), elements_.begin(),
                       elements_.end());
}

bool Diagram::is_noncrossing() const {
  for (auto it = elements_.begin(); it != elements_.end(); ++it)
    for (auto jt = std::next(it); jt != elements_.end(); ++jt)
      if (crossing_count(*it, *jt) != 0) return false;
  return true;
}

std::vector<ArcElement> Diagram::diameters() const {
  std::vector<ArcElement> out;
  for (const auto& e : elements_)
    if (e.is_diameter()) out.push_back(e);
  return out;
}

Diagram set_union(const Diagram& x, const Diagram& y) {
  Diagram out = x;
  for (const auto& e : y) out.insert(e);
  return out;
}

Diagram set_intersection(const Diagram& x, const Diagram& y) {
  Diagram out(x.rank());
  for (const auto& e : x)
    if (y.contains(e)) out.insert(e);
  return out;
}

Diagram set_difference(const Diagram& x, const Diagram& y) {
  Diagram out(x.rank());
  for (const auto& e : x)
    if (!y.contains(e)) out.insert(e);
  return out;
}

std::vector<ArcElement> full_alphabet(Rank rank) {
  const int n = rank.n();
  std::vector<ArcElement> out;
  out.reserve(static_cast<std::size_t>(n) * n);
  for (int a = 0; a < 2 * n; ++a) {
    for (int b = a + 1; b < 2 * n; ++b) {
      if (b - a == n || is_edge(rank, a, b)) continue;
      const ArcElement e = ArcElement::pair(rank, a, b);
      if (e.a() == a && e.b() == b) out.push_back(e);
    }
  }
  for (int a = 0; a < n; ++a) {
    out.push_back(ArcElement::diameter(rank, a, Color::Red));
    out.push_back(ArcElement::diameter(rank, a, Color::Green));
  }
  std::sort(out.begin(), out.end());
  return out;
}

Diagram full_diagram(Rank rank) { return Diagram(rank, full_alphabet(rank)); }

Diagram nc(const Diagram& x) {
  Diagram out(x.rank());
  for (const auto& e : full_alphabet(x.rank())) {
    const bool free = std::none_of(x.begin(), x.end(),
                                   [&](const ArcElement& f) { return crossing_count(e, f) != 0; });
    if (free) out.insert(e);
  }
  return out;
}

Diagram rotate(const Diagram& x, int k) {
  Diagram out(x.rank());
  for (const auto& e : x) out.insert(e.rotated(k));
  return out;
}

}  // namespace dnpoly
