#include "dnpoly/ptolemy.hpp"

#include <algorithm>
#include <cassert>
#include <stdexcept>

namespace dnpoly {

const char* to_string(Axiom a) {
  switch (a) {
    case Axiom::Pt1: return "Pt1";
    case Axiom::Pt2: return "Pt2";
    case Axiom::Pt3: return "Pt3";
  }
  return "?";
}

namespace {

void push_unique(std::vector<ArcElement>& v, const ArcElement& e) {
  if (std::find(v.begin(), v.end(), e) == v.end()) v.push_back(e);
}

// Hull of crossing arcs (i,j), (k,l): the four chords (i,k), (k,j), (j,l), (l,i).
std::array<Arc, 4> hull(Arc x, Arc y) {
  return {Arc{x.u, y.u}, Arc{y.u, x.v}, Arc{x.v, y.v}, Arc{y.v, x.u}};
}

}  // namespace

std::vector<HullRequirement> hull_requirements(const ArcElement& e1, const ArcElement& e2) {
  if (e1.n() != e2.n()) throw std::invalid_argument("hull_requirements: ranks differ");
  const Rank rank = e1.rank();
  const int n = rank.n();
  std::vector<HullRequirement> out;

  Axiom axiom{};
  if (e1.is_pair() && e2.is_pair()) {
    axiom = Axiom::Pt1;
  } else if (e1.is_diameter() && e2.is_diameter()) {
    if (e1.color() == e2.color()) return out;
    axiom = Axiom::Pt2;
  } else if (e1.is_diameter()) {
    axiom = Axiom::Pt3;
  } else {
    // Pair first, diameter second: covered by the reversed ordered pair.
    return out;
  }

  for (const Arc& x : e1.oriented_arcs()) {
    for (const Arc& y : e2.oriented_arcs()) {
      if (!arcs_cross(rank.vertices(), x, y)) continue;
      HullRequirement req{axiom, x, y, {}};
      for (const Arc& h : hull(x, y)) {
        if (is_edge(rank, h.u, h.v)) continue;
        const bool diameter_chord = rank.mod(h.v - h.u) == n;
        switch (axiom) {
          case Axiom::Pt1:
            if (diameter_chord) {
              push_unique(req.required, ArcElement::diameter(rank, h.u, Color::Red));
              push_unique(req.required, ArcElement::diameter(rank, h.u, Color::Green));
            } else {
              push_unique(req.required, ArcElement::pair(rank, h.u, h.v));
            }
            break;
          case Axiom::Pt2:
            if (diameter_chord) throw std::logic_error("Pt2 hull chord is a diameter");
            push_unique(req.required, ArcElement::pair(rank, h.u, h.v));
            break;
          case Axiom::Pt3: {
            if (diameter_chord) throw std::logic_error("Pt3 hull chord is a diameter");
            const ArcElement side = ArcElement::pair(rank, h.u, h.v);
            if (crossing_count(side, e2) == 0) push_unique(req.required, side);
            break;
          }
        }
      }
      if (axiom == Axiom::Pt3) {
        push_unique(req.required, ArcElement::diameter(rank, y.u, e1.color()));
        push_unique(req.required, ArcElement::diameter(rank, y.v, e1.color()));
      }
      out.push_back(std::move(req));
    }
  }
  return out;
}

PtolemyReport check_ptolemy(const Diagram& x) {
  for (const auto& e1 : x) {
    for (const auto& e2 : x) {
      if (e1 == e2) continue;
      for (const auto& req : hull_requirements(e1, e2)) {
        std::vector<ArcElement> missing;
        for (const auto& r : req.required)
          if (!x.contains(r)) missing.push_back(r);
        if (!missing.empty()) {
          std::sort(missing.begin(), missing.end());
          return PtolemyReport{false, PtolemyViolation{req.axiom, e1, e2, std::move(missing)}};
        }
      }
    }
  }
  return PtolemyReport{};
}

bool is_torsion_part(const Diagram& x) { return nc(nc(x)) == x; }

PtolemyTable::PtolemyTable(const DiagramIndex& index) : size_(index.size()) {
  const auto m = static_cast<std::size_t>(size_);
  required_.assign(m * m, 0);
  crossing_.assign(m, 0);
  for (int p = 0; p < size_; ++p) {
    for (int q = 0; q < size_; ++q) {
      if (p == q) continue;
      Mask need = 0;
      for (const auto& req : hull_requirements(index.element(p), index.element(q)))
        for (const auto& r : req.required) need |= Mask{1} << index.index_of(r);
      required_[static_cast<std::size_t>(p * size_ + q)] = need;
      if (need != 0) crossing_[static_cast<std::size_t>(p)] |= Mask{1} << q;
    }
  }
}

}  // namespace dnpoly
