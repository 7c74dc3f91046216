#ifndef DNPOLY_POLYGON_HPP
#define DNPOLY_POLYGON_HPP

// Arc elements of the regular 2n-gon: pairs of arcs (pi-rotation orbits of
// non-diameter chords) and coloured diameters. Every vertex computation is
// taken modulo 2n.

#include <array>
#include <compare>
#include <cstdint>
#include <set>
#include <string>
#include <vector>

namespace dnpoly {

class Rank {
 public:
  explicit Rank(int n);

  int n() const { return n_; }
  int vertices() const { return 2 * n_; }
  int mod(int v) const {
    const int m = 2 * n_;
    return ((v % m) + m) % m;
  }
  int alphabet_size() const { return n_ * n_; }

  friend bool operator==(Rank, Rank) = default;

 private:
  int n_;
};

enum class Color : std::uint8_t { Red, Green };

inline Color other(Color c) { return c == Color::Red ? Color::Green : Color::Red; }
const char* to_string(Color c);

/// A single chord (u, v) between boundary vertices. Orientation is kept
/// because the hull axioms are stated for ordered representatives.
struct Arc {
  int u;
  int v;
  friend bool operator==(const Arc&, const Arc&) = default;
};

/// True iff u..v and x..y are four distinct vertices that interleave on the
/// boundary of a polygon with `vertices` corners.
bool arcs_cross(int vertices, Arc a, Arc b);

/// Position of w strictly inside the anticlockwise walk from u to v.
bool strictly_between(int vertices, int u, int v, int w);

class ArcElement {
 public:
  enum class Kind : std::uint8_t { Pair, Diameter };

  /// Orbit {(a,b),(a+n,b+n)}; throws for edges, diameters and a == b.
  static ArcElement pair(Rank rank, int a, int b);
  static ArcElement diameter(Rank rank, int a, Color color);
  /// Element whose representative chord is (a, b); a diameter chord needs a colour.
  static ArcElement from_chord(Rank rank, int a, int b, Color color_if_diameter);

  Kind kind() const { return kind_; }
  bool is_pair() const { return kind_ == Kind::Pair; }
  bool is_diameter() const { return kind_ == Kind::Diameter; }
  int n() const { return n_; }
  Rank rank() const { return Rank(n_); }
  int a() const { return a_; }
  int b() const { return b_; }
  /// Only meaningful for diameters.
  Color color() const { return color_; }

  /// The underlying chords: two for a pair, one for a diameter.
  std::vector<Arc> arcs() const;
  /// Both orientations of every chord.
  std::vector<Arc> oriented_arcs() const;

  ArcElement rotated(int k) const;
  ArcElement with_color(Color c) const;

  std::string to_string() const;

  friend auto operator<=>(const ArcElement&, const ArcElement&) = default;
  friend bool operator==(const ArcElement&, const ArcElement&) = default;

 private:
  ArcElement(Kind kind, int n, int a, int b, Color color)
      : kind_(kind), n_(n), a_(a), b_(b), color_(color) {}

  // Member order fixes the canonical alphabet order: pairs before diameters.
  Kind kind_;
  int n_;
  int a_;
  int b_;
  Color color_;
};

/// Orbit {(a,a+1),(a+n,a+n+1)} of boundary edges, canonical 0 <= a < n.
class EdgePair {
 public:
  EdgePair(Rank rank, int a);
  int a() const { return a_; }
  friend auto operator<=>(const EdgePair&, const EdgePair&) = default;

 private:
  int n_;
  int a_;
};

/// True iff chord (u,v) is a boundary edge.
bool is_edge(Rank rank, int u, int v);

/// Number of crossings in {0,1,2}; throws std::invalid_argument when the
/// ranks differ.
int crossing_count(const ArcElement& e1, const ArcElement& e2);

class Diagram {
 public:
  using Set = std::set<ArcElement>;

  explicit Diagram(Rank rank) : rank_(rank) {}
  Diagram(Rank rank, std::initializer_list<ArcElement> elems);
  Diagram(Rank rank, const std::vector<ArcElement>& elems);

  Rank rank() const { return rank_; }
  const Set& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }
  bool empty() const { return elements_.empty(); }
  bool contains(const ArcElement& e) const { return elements_.count(e) != 0; }

  /// Returns false if e was already present.
  bool insert(const ArcElement& e);
  bool erase(const ArcElement& e) { return elements_.erase(e) != 0; }

  bool is_subset_of(const Diagram& other) const;
  /// No two elements cross.
  bool is_noncrossing() const;
  std::vector<ArcElement> diameters() const;

  auto begin() const { return elements_.begin(); }
  auto end() const { return elements_.end(); }

  friend bool operator==(const Diagram& x, const Diagram& y) {
    return x.rank_ == y.rank_ && x.elements_ == y.elements_;
  }

 private:
  Rank rank_;
  Set elements_;
};

Diagram set_union(const Diagram& x, const Diagram& y);
Diagram set_intersection(const Diagram& x, const Diagram& y);
Diagram set_difference(const Diagram& x, const Diagram& y);

/// All n^2 elements in canonical order.
std::vector<ArcElement> full_alphabet(Rank rank);
Diagram full_diagram(Rank rank);

/// Elements crossing no element of x.
Diagram nc(const Diagram& x);

Diagram rotate(const Diagram& x, int k);

}  // namespace dnpoly

#endif  // DNPOLY_POLYGON_HPP
