#include "dnpoly/cells.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

namespace dnpoly {

ReplacedElement ReplacedElement::of(const ArcElement& e) {
  if (e.is_pair()) return ReplacedElement(Kind::Pair, e.n(), e.a(), e.b(), Color::Red);
  return ReplacedElement(Kind::Diameter, e.n(), e.a(), e.b(), e.color());
}

ReplacedElement ReplacedElement::radii(Rank rank, int a, Color color) {
  return ReplacedElement(Kind::Radii, rank.n(), rank.mod(a) % rank.n(), CellVertex::kCenter, color);
}

std::vector<Chord> ReplacedElement::chords() const {
  const Rank rank(n_);
  switch (kind_) {
    case Kind::Pair:
      return {Chord{CellVertex(a_), CellVertex(b_)},
              Chord{CellVertex(rank.mod(a_ + n_)), CellVertex(rank.mod(b_ + n_))}};
    case Kind::Diameter:
      return {Chord{CellVertex(a_), CellVertex(b_)}};
    case Kind::Radii:
      return {Chord{CellVertex(a_), CellVertex::center()},
              Chord{CellVertex(a_ + n_), CellVertex::center()}};
  }
  return {};
}

std::string ReplacedElement::to_string() const {
  switch (kind_) {
    case Kind::Pair:
      return "(" + std::to_string(a_) + "," + std::to_string(b_) + ")";
    case Kind::Diameter:
      return "(" + std::to_string(a_) + "," + std::to_string(b_) + (color_ == Color::Red ? ")_r" : ")_g");
    case Kind::Radii:
      return "(" + std::to_string(a_) + ",c" + (color_ == Color::Red ? ")_r" : ")_g");
  }
  return "?";
}

Replacement::Replacement(const Diagram& d) : d_(d), has_diameters_(!d.diameters().empty()) {
  if (!d.is_noncrossing()) throw std::invalid_argument("replacement map needs a non-crossing diagram");
}

ReplacedElement Replacement::apply(const ArcElement& e) const {
  if (e.rank() != d_.rank()) throw std::invalid_argument("replacement: rank mismatch");
  if (e.is_pair() || !has_diameters_) return ReplacedElement::of(e);
  if (d_.contains(e.with_color(other(e.color())))) return ReplacedElement::of(e);
  return ReplacedElement::radii(e.rank(), e.a(), e.color());
}

ArcElement Replacement::invert(const ReplacedElement& r) const {
  const Rank rank = d_.rank();
  ArcElement e = [&] {
    switch (r.kind()) {
      case ReplacedElement::Kind::Pair:
        return ArcElement::pair(rank, r.a(), r.b());
      case ReplacedElement::Kind::Diameter:
      case ReplacedElement::Kind::Radii:
        break;
    }
    return ArcElement::diameter(rank, r.a(), r.color());
  }();
  if (apply(e) != r) throw std::invalid_argument("not in the image of the replacement map: " + r.to_string());
  return e;
}

namespace {

// Direction of the ray from `at` towards `to`, in units of pi/(2n), mod 4n.
int direction(Rank rank, CellVertex at, CellVertex to) {
  const int n = rank.n();
  const int full = 4 * n;
  int d = 0;
  if (at.is_center()) {
    d = 2 * to.boundary();
  } else if (to.is_center()) {
    d = 2 * at.boundary() + 2 * n;
  } else {
    d = 2 * at.boundary() + rank.mod(to.boundary() - at.boundary()) + n;
  }
  return ((d % full) + full) % full;
}

std::vector<CellVertex> canonical_rotation(std::vector<CellVertex> poly) {
  const auto it = std::min_element(poly.begin(), poly.end());
  std::rotate(poly.begin(), it, poly.end());
  return poly;
}

struct ChordKey {
  int x;
  int y;
  friend auto operator<=>(const ChordKey&, const ChordKey&) = default;
};

ChordKey key_of(CellVertex u, CellVertex v) {
  return u.key() < v.key() ? ChordKey{u.key(), v.key()} : ChordKey{v.key(), u.key()};
}

}  // namespace

int angle_rank(Rank rank, CellVertex prev, CellVertex at, CellVertex cand) {
  if (prev == at || cand == at) throw std::invalid_argument("angle_rank: degenerate arc");
  if (at.is_center() && (prev.is_center() || cand.is_center()))
    throw std::invalid_argument("angle_rank: centre to centre");
  const int full = 4 * rank.n();
  const int r = ((direction(rank, at, prev) - direction(rank, at, cand)) % full + full) % full;
  return r == 0 ? full : r;
}

std::vector<int> interior_angles(Rank rank, const std::vector<CellVertex>& polygon) {
  const std::size_t k = polygon.size();
  std::vector<int> out(k);
  for (std::size_t i = 0; i < k; ++i)
    out[i] = angle_rank(rank, polygon[(i + k - 1) % k], polygon[i], polygon[(i + 1) % k]);
  return out;
}

bool CellPair::central() const {
  return invariant() ||
         std::any_of(cell.begin(), cell.end(), [](CellVertex v) { return v.is_center(); });
}

CellDecomposition::CellDecomposition(const Diagram& d) : d_(d), replacement_(d) {
  const Rank rank = d.rank();
  const int n = rank.n();

  // Side chords: r_D(D) plus all boundary edges.
  std::map<ChordKey, Side> sides;
  std::map<int, std::vector<CellVertex>> neighbours;
  auto add_side = [&](CellVertex u, CellVertex v) {
    auto& nu = neighbours[u.key()];
    if (std::find(nu.begin(), nu.end(), v) == nu.end()) nu.push_back(v);
    auto& nv = neighbours[v.key()];
    if (std::find(nv.begin(), nv.end(), u) == nv.end()) nv.push_back(u);
  };
  for (int y = 0; y < 2 * n; ++y) {
    const CellVertex u(y);
    const CellVertex v(rank.mod(y + 1));
    sides[key_of(u, v)].edge = true;
    add_side(u, v);
  }
  for (const auto& e : d) {
    const ReplacedElement r = replacement_.apply(e);
    for (const Chord& ch : r.chords()) {
      auto& side = sides[key_of(ch.u, ch.v)];
      if (std::find(side.elements.begin(), side.elements.end(), r) == side.elements.end())
        side.elements.push_back(r);
      add_side(ch.u, ch.v);
    }
  }

  auto vertex_of = [](int key) { return key == (1 << 20) ? CellVertex::center() : CellVertex(key); };

  auto trace = [&](CellVertex start, CellVertex second) {
    std::vector<CellVertex> seq{start, second};
    const std::size_t limit = static_cast<std::size_t>(2 * n + 2);
    while (true) {
      const CellVertex prev = seq[seq.size() - 2];
      const CellVertex at = seq.back();
      CellVertex best = prev;
      int best_rank = 4 * n + 1;
      for (CellVertex cand : neighbours.at(at.key())) {
        const int r = angle_rank(rank, prev, at, cand);
        if (r < best_rank) {
          best_rank = r;
          best = cand;
        } else if (r == best_rank) {
          throw std::logic_error("two side chords leave " + at.to_string() + " at the same angle");
        }
      }
      if (at == start && best == second) {
        seq.pop_back();
        return seq;
      }
      seq.push_back(best);
      if (seq.size() > limit + 1) throw std::logic_error("cell walk does not close");
    }
  };

  std::set<std::vector<CellVertex>> cells;
  auto seed = [&](CellVertex u, CellVertex v) {
    std::vector<CellVertex> c = canonical_rotation(trace(u, v));
    if (c.size() < 3) throw std::logic_error("degenerate cell");
    cells.insert(std::move(c));
  };
  for (int y = 0; y < 2 * n; ++y) seed(CellVertex(y), CellVertex(rank.mod(y + 1)));
  for (const auto& [key, side] : sides) {
    if (side.edge) continue;
    seed(vertex_of(key.x), vertex_of(key.y));
    seed(vertex_of(key.y), vertex_of(key.x));
  }

  auto sides_of = [&](const std::vector<CellVertex>& poly) {
    std::vector<Side> out;
    for (std::size_t i = 0; i < poly.size(); ++i)
      out.push_back(sides.at(key_of(poly[i], poly[(i + 1) % poly.size()])));
    return out;
  };

  std::set<std::vector<CellVertex>> seen;
  for (const auto& c : cells) {
    if (seen.count(c)) continue;
    std::vector<CellVertex> partner;
    for (CellVertex v : c) partner.push_back(v.rotated(rank, n));
    partner = canonical_rotation(partner);
    if (!cells.count(partner)) throw std::logic_error("cell without a pi-rotation partner");
    seen.insert(c);
    seen.insert(partner);

    const std::size_t k = c.size();
    for (std::size_t i = 0; i < k; ++i) {
      const CellVertex p = c[(i + k - 1) % k];
      const CellVertex q = c[(i + 1) % k];
      if (c[i].is_center() && !p.is_center() && !q.is_center() &&
          rank.mod(q.boundary() - p.boundary()) == 1)
        throw std::logic_error("cell has consecutive vertices v, c, v+1");
    }
    pairs_.push_back(CellPair{c, partner, sides_of(c), sides_of(partner)});
  }
}

bool CellDecomposition::in_nc(const ArcElement& e) const {
  return std::all_of(d_.begin(), d_.end(), [&](const ArcElement& f) { return crossing_count(e, f) == 0; });
}

std::vector<CellLocation> CellDecomposition::find_diagonal(const ArcElement& e, bool first_only) const {
  std::vector<CellLocation> out;
  const ReplacedElement r = replacement_.apply(e);
  for (std::size_t p = 0; p < pairs_.size(); ++p) {
    bool found_in_pair = false;
    const int members = pairs_[p].invariant() ? 1 : 2;
    for (int m = 0; m < members && !found_in_pair; ++m) {
      const auto& poly = pairs_[p].member(m);
      const int k = static_cast<int>(poly.size());
      for (const Chord& ch : r.chords()) {
        const auto iu = std::find(poly.begin(), poly.end(), ch.u);
        const auto iv = std::find(poly.begin(), poly.end(), ch.v);
        if (iu == poly.end() || iv == poly.end()) continue;
        const int i = static_cast<int>(iu - poly.begin());
        const int j = static_cast<int>(iv - poly.begin());
        const int gap = ((j - i) % k + k) % k;
        if (gap == 0 || gap == 1 || gap == k - 1) continue;
        out.push_back(CellLocation{p, m, i, j});
        found_in_pair = true;
        break;
      }
    }
    if (found_in_pair && first_only) return out;
  }
  return out;
}

Located CellDecomposition::locate(const ArcElement& e) const {
  if (!in_nc(e)) throw std::invalid_argument("locate: element " + e.to_string() + " is not in nc(D)");
  if (d_.contains(e)) return InD{};
  auto found = find_diagonal(e, true);
  if (found.empty()) throw std::logic_error("locate: no cell contains " + e.to_string());
  return found.front();
}

int CellDecomposition::containing_pairs(const ArcElement& e) const {
  return static_cast<int>(find_diagonal(e, false).size());
}

}  // namespace dnpoly
