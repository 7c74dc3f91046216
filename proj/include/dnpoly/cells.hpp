#ifndef DNPOLY_CELLS_HPP
#define DNPOLY_CELLS_HPP

// Cell decomposition of the 2n-gon cut out by a non-crossing diagram D.
// Some diameters are first replaced by pairs of radii through an extra
// centre vertex c; cells are then traced by always turning by the smallest
// clockwise angle. All angles are exact integers in units of pi/(2n).

#include <compare>
#include <string>
#include <variant>
#include <vector>

#include "dnpoly/polygon.hpp"

namespace dnpoly {

class CellVertex {
 public:
  static constexpr int kCenter = -1;

  constexpr explicit CellVertex(int v) : v_(v) {}
  static constexpr CellVertex center() { return CellVertex(kCenter); }

  bool is_center() const { return v_ == kCenter; }
  int boundary() const { return v_; }
  /// Sort key placing the centre after every boundary vertex.
  int key() const { return is_center() ? 1 << 20 : v_; }

  CellVertex rotated(Rank rank, int k) const {
    return is_center() ? *this : CellVertex(rank.mod(v_ + k));
  }
  std::string to_string() const { return is_center() ? "c" : std::to_string(v_); }

  friend bool operator==(CellVertex, CellVertex) = default;
  friend auto operator<=>(CellVertex x, CellVertex y) { return x.key() <=> y.key(); }

 private:
  int v_;
};

struct Chord {
  CellVertex u;
  CellVertex v;
};

/// Image of an arc element under the replacement map.
class ReplacedElement {
 public:
  enum class Kind : std::uint8_t { Pair, Diameter, Radii };

  static ReplacedElement of(const ArcElement& e);
  static ReplacedElement radii(Rank rank, int a, Color color);

  Kind kind() const { return kind_; }
  int a() const { return a_; }
  int b() const { return b_; }
  Color color() const { return color_; }
  int n() const { return n_; }

  std::vector<Chord> chords() const;
  std::string to_string() const;

  friend auto operator<=>(const ReplacedElement&, const ReplacedElement&) = default;
  friend bool operator==(const ReplacedElement&, const ReplacedElement&) = default;

 private:
  ReplacedElement(Kind k, int n, int a, int b, Color c) : kind_(k), n_(n), a_(a), b_(b), color_(c) {}
  Kind kind_;
  int n_;
  int a_;
  int b_;
  Color color_;
};

/// The replacement map r_D for a fixed non-crossing D, with its inverse.
class Replacement {
 public:
  explicit Replacement(const Diagram& d);

  ReplacedElement apply(const ArcElement& e) const;
  /// Throws std::invalid_argument if r is not in the image.
  ArcElement invert(const ReplacedElement& r) const;
  bool is_identity() const { return !has_diameters_; }

 private:
  Diagram d_;
  bool has_diameters_;
};

/// Clockwise angle from (prev, at) to (at, cand), in (0, 4n]. A zero rotation
/// counts as a full turn so it is never the minimum.
int angle_rank(Rank rank, CellVertex prev, CellVertex at, CellVertex cand);

/// Interior angle at every vertex of an anticlockwise polygon.
std::vector<int> interior_angles(Rank rank, const std::vector<CellVertex>& polygon);

struct Side {
  bool edge = false;
  /// Elements of r_D(D) realising the chord; two when both colours of one
  /// diameter lie in D.
  std::vector<ReplacedElement> elements;
};

struct CellPair {
  std::vector<CellVertex> cell;
  std::vector<CellVertex> partner;
  /// sides[i] is the chord (cell[i], cell[i+1]).
  std::vector<Side> sides;
  std::vector<Side> partner_sides;

  bool invariant() const { return cell == partner; }
  bool central() const;
  const std::vector<CellVertex>& member(int m) const { return m == 0 ? cell : partner; }
  const std::vector<Side>& member_sides(int m) const { return m == 0 ? sides : partner_sides; }
};

struct InD {};

struct CellLocation {
  std::size_t pair;
  int member;  // 0: CellPair::cell, 1: CellPair::partner
  int i;
  int j;
};

using Located = std::variant<InD, CellLocation>;

class CellDecomposition {
 public:
  /// Throws std::invalid_argument when d is not non-crossing.
  explicit CellDecomposition(const Diagram& d);

  Rank rank() const { return d_.rank(); }
  const Diagram& diagram() const { return d_; }
  const Replacement& replacement() const { return replacement_; }
  const std::vector<CellPair>& pairs() const { return pairs_; }

  /// Throws std::invalid_argument when e is not in nc(D).
  Located locate(const ArcElement& e) const;
  /// Number of cell pairs containing e as a diagonal (1 for e in nc(D)\D).
  int containing_pairs(const ArcElement& e) const;

  bool in_nc(const ArcElement& e) const;

 private:
  std::vector<CellLocation> find_diagonal(const ArcElement& e, bool first_only) const;

  Diagram d_;
  Replacement replacement_;
  std::vector<CellPair> pairs_;
};

inline CellDecomposition build_cells(const Diagram& d) { return CellDecomposition(d); }

}  // namespace dnpoly

#endif  // DNPOLY_CELLS_HPP
