#ifndef DNPOLY_PTOLEMY_HPP
#define DNPOLY_PTOLEMY_HPP

// Torsion parts of the cluster category of type D_n, decided two ways:
// through the hull axioms Pt1-Pt3 and through the fixed point X = nc(nc(X)).

#include <optional>
#include <vector>

#include "dnpoly/index.hpp"
#include "dnpoly/polygon.hpp"

namespace dnpoly {

enum class Axiom { Pt1, Pt2, Pt3 };
const char* to_string(Axiom a);

/// What the axioms demand of a diagram containing both witnesses, for one
/// choice of crossing representative arcs.
struct HullRequirement {
  Axiom axiom;
  Arc first;
  Arc second;
  std::vector<ArcElement> required;
};

/// Requirements triggered by the ordered pair (e1, e2). Empty when no
/// representatives cross or when the pair is two diameters of one colour.
std::vector<HullRequirement> hull_requirements(const ArcElement& e1, const ArcElement& e2);

struct PtolemyViolation {
  Axiom axiom;
  ArcElement first;
  ArcElement second;
  std::vector<ArcElement> missing;
};

struct PtolemyReport {
  bool ptolemy = true;
  std::optional<PtolemyViolation> violation;
  explicit operator bool() const { return ptolemy; }
};

PtolemyReport check_ptolemy(const Diagram& x);
inline bool is_ptolemy(const Diagram& x) { return check_ptolemy(x).ptolemy; }

/// The independent oracle: x == nc(nc(x)).
bool is_torsion_part(const Diagram& x);

/// Bitmask form of the axioms: for each ordered pair of alphabet positions the
/// union of everything the axioms require.
class PtolemyTable {
 public:
  explicit PtolemyTable(const DiagramIndex& index);

  bool is_ptolemy(Mask m) const {
    for (Mask rest = m; rest != 0; rest &= rest - 1) {
      const int p = std::countr_zero(rest);
      const Mask* row = &required_[static_cast<std::size_t>(p * size_)];
      for (Mask other = m & crossing_[static_cast<std::size_t>(p)]; other != 0; other &= other - 1)
        if ((row[std::countr_zero(other)] & ~m) != 0) return false;
    }
    return true;
  }

 private:
  int size_;
  std::vector<Mask> required_;
  std::vector<Mask> crossing_;
};

}  // namespace dnpoly

#endif  // DNPOLY_PTOLEMY_HPP
