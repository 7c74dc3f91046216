#include "dnpoly/mutation.hpp"

#include <stdexcept>

namespace dnpoly {

const char* to_string(Direction d) { return d == Direction::Plus ? "plus" : "minus"; }

namespace {

// Colour of a mutated diameter, by the diameters present in D.
Color mutated_color(const Diagram& d, const ArcElement& source, int chord) {
  const auto diams = d.diameters();
  if (diams.empty()) {
    if (!source.is_diameter()) throw std::logic_error("a pair of arcs mutated to a diameter with no diameters in D");
    return other(source.color());
  }
  if (diams.size() == 1) {
    const ArcElement& x = diams.front();
    return x.a() == chord ? other(x.color()) : x.color();
  }
  const Color c = diams.front().color();
  for (const auto& e : diams)
    if (e.color() != c) throw std::logic_error("mutation produced a diameter although D holds both colours");
  return c;
}

}  // namespace

ArcElement mutate_element(const CellDecomposition& cells, const ArcElement& e, Direction dir) {
  const Located where = cells.locate(e);
  if (std::holds_alternative<InD>(where)) return e;
  const auto& loc = std::get<CellLocation>(where);
  const Rank rank = cells.rank();
  const int n = rank.n();
  const auto& poly = cells.pairs()[loc.pair].member(loc.member);
  const int k = static_cast<int>(poly.size());
  const int step = dir == Direction::Plus ? 1 : -1;
  const CellVertex u = poly[static_cast<std::size_t>(((loc.i + step) % k + k) % k)];
  const CellVertex v = poly[static_cast<std::size_t>(((loc.j + step) % k + k) % k)];

  ArcElement result = [&] {
    if (u.is_center() || v.is_center()) {
      const int x = (u.is_center() ? v : u).boundary() % n;
      return ArcElement::diameter(rank, x, mutated_color(cells.diagram(), e, x));
    }
    if (rank.mod(v.boundary() - u.boundary()) == n) {
      const int x = u.boundary() % n;
      return ArcElement::diameter(rank, x, mutated_color(cells.diagram(), e, x));
    }
    if (is_edge(rank, u.boundary(), v.boundary()))
      throw std::logic_error("mutation rotated a diagonal onto an edge");
    return ArcElement::pair(rank, u.boundary(), v.boundary());
  }();

  // The rotated chord must be exactly the replacement of the result.
  const ReplacedElement r = cells.replacement().apply(result);
  bool matches = false;
  for (const Chord& ch : r.chords())
    matches = matches || (ch.u == u && ch.v == v) || (ch.u == v && ch.v == u);
  if (!matches) throw std::logic_error("mutation result " + result.to_string() + " disagrees with its replacement");
  return result;
}

ArcElement mutate_element(const Diagram& d, const ArcElement& e, Direction dir) {
  return mutate_element(CellDecomposition(d), e, dir);
}

Diagram mutate_diagram(const CellDecomposition& cells, const Diagram& x, Direction dir) {
  Diagram out(x.rank());
  for (const auto& e : x) {
    if (!cells.in_nc(e)) throw std::invalid_argument("mutate_diagram: " + e.to_string() + " is not in nc(D)");
    out.insert(mutate_element(cells, e, dir));
  }
  return out;
}

Diagram mutate_diagram(const Diagram& d, const Diagram& x, Direction dir) {
  return mutate_diagram(CellDecomposition(d), x, dir);
}

bool is_mutation_pair(const Diagram& d, const Diagram& x, const Diagram& x2) {
  const CellDecomposition cells(d);
  for (const auto* side : {&x, &x2})
    for (const auto& e : *side)
      if (!cells.in_nc(e)) throw std::invalid_argument("is_mutation_pair: diagram not inside nc(D)");
  if (!d.is_subset_of(x) || !d.is_subset_of(x2)) return false;
  return x2.is_subset_of(mutate_diagram(cells, x, Direction::Minus)) &&
         x.is_subset_of(mutate_diagram(cells, x2, Direction::Plus));
}

ArcElement shift(const ArcElement& e) {
  const ArcElement moved = e.rotated(-1);
  return moved.is_diameter() ? moved.with_color(other(moved.color())) : moved;
}

ArcElement unshift(const ArcElement& e) {
  const ArcElement moved = e.rotated(1);
  return moved.is_diameter() ? moved.with_color(other(moved.color())) : moved;
}

}  // namespace dnpoly
