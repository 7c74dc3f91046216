#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dnpoly/census.hpp"
#include "dnpoly/mutation.hpp"

using namespace dnpoly;

TEST_CASE("mutation with respect to the empty diagram") {
  const Rank r(4);
  const Diagram empty(r);
  CHECK(mutate_element(empty, ArcElement::pair(r, 0, 2), Direction::Plus) == ArcElement::pair(r, 1, 3));
  CHECK(mutate_element(empty, ArcElement::pair(r, 0, 2), Direction::Minus) == ArcElement::pair(r, 1, 7));
  CHECK(mutate_element(empty, ArcElement::diameter(r, 0, Color::Red), Direction::Plus) ==
        ArcElement::diameter(r, 1, Color::Green));

  const Diagram full = full_diagram(r);
  const Diagram image = mutate_diagram(empty, full, Direction::Plus);
  CHECK(image == full);
}

TEST_CASE("mutation with one red diameter") {
  const Rank r(4);
  const Diagram d(r, {ArcElement::diameter(r, 0, Color::Red)});
  const auto e = ArcElement::diameter(r, 1, Color::Red);
  CHECK(mutate_element(d, e, Direction::Minus) == ArcElement::diameter(r, 0, Color::Green));
  CHECK(mutate_element(d, e, Direction::Plus) == ArcElement::pair(r, 0, 2));
  CHECK(mutate_element(d, d.diameters().front(), Direction::Plus) == d.diameters().front());
}

TEST_CASE("mutation rejects bad input") {
  const Rank r(4);
  const Diagram d(r, {ArcElement::pair(r, 1, 3)});
  CHECK_THROWS_AS(mutate_element(d, ArcElement::pair(r, 0, 2), Direction::Plus), std::invalid_argument);
  CHECK_THROWS_AS(mutate_diagram(d, Diagram(r, {ArcElement::pair(r, 0, 2)}), Direction::Plus),
                  std::invalid_argument);
  const Diagram crossing(r, {ArcElement::pair(r, 1, 3), ArcElement::pair(r, 0, 2)});
  CHECK_THROWS_AS(mutate_element(crossing, ArcElement::pair(r, 0, 3), Direction::Plus), std::invalid_argument);
}

TEST_CASE("mutation pairs") {
  const Rank r(4);
  const Diagram d(r, {ArcElement::pair(r, 1, 3)});
  CHECK(is_mutation_pair(d, d, d));
  const Diagram x(r, {ArcElement::pair(r, 1, 3), ArcElement::pair(r, 0, 3)});
  CHECK(is_mutation_pair(d, x, mutate_diagram(d, x, Direction::Minus)));
  CHECK_FALSE(is_mutation_pair(d, x, x));
  const Diagram single(r, {ArcElement::pair(r, 0, 2)});
  CHECK_FALSE(is_mutation_pair(Diagram(r), single, single));
}

TEST_CASE("shift") {
  const Rank r(4);
  CHECK(shift(ArcElement::pair(r, 1, 3)) == ArcElement::pair(r, 0, 2));
  CHECK(shift(ArcElement::diameter(r, 1, Color::Green)) == ArcElement::diameter(r, 0, Color::Red));
  for (int n : {4, 5, 6}) {
    const Rank rank(n);
    const Diagram empty(rank);
    for (const auto& e : full_alphabet(rank)) {
      CHECK(shift(e) == mutate_element(empty, e, Direction::Minus));
      CHECK(unshift(shift(e)) == e);
      ArcElement x = e;
      for (int k = 0; k < 4 * n; ++k) x = shift(x);
      CHECK(x == e);
      if (e.is_diameter() && n % 2 == 0) {
        ArcElement y = e;
        for (int k = 0; k < 2 * n; ++k) y = shift(y);
        CHECK(y == e);
      }
    }
  }
}

TEST_CASE("mutations are inverse, fix D and change diameter colours") {
  for (int n : {4, 5}) {
    const DiagramIndex index{Rank(n)};
    for (Mask top : enumerate_maximal_noncrossing(index))
      for (Mask d = top;; d = (d - 1) & top) {
        const Diagram dd = index.to_diagram(d);
        const CellDecomposition cells(dd);
        for_each_bit(index.nc(d), [&](int p) {
          const ArcElement e = index.element(p);
          const ArcElement up = mutate_element(cells, e, Direction::Plus);
          const ArcElement down = mutate_element(cells, e, Direction::Minus);
          CHECK(mutate_element(cells, up, Direction::Minus) == e);
          CHECK(mutate_element(cells, down, Direction::Plus) == e);
          CHECK(cells.in_nc(up));
          if (dd.contains(e)) CHECK(up == e);
          if (!dd.contains(e)) CHECK(crossing_count(e, down) == 1);
          if (e.is_diameter() && down.is_diameter() && !dd.contains(e)) CHECK(e.color() != down.color());
        });
        if (d == 0) break;
      }
  }
}

TEST_CASE("mutation of Ptolemy diagrams stays Ptolemy") {
  const DiagramIndex index{Rank(4)};
  MutationCache cache(index);
  for (Mask x : enumerate_torsion_parts(index, CensusMethod::Closure)) {
    const Mask admissible = x & index.nc(x);
    for (Mask d = admissible;; d = (d - 1) & admissible) {
      const Mask up = cache.mutate(d, x, Direction::Plus);
      CHECK(index.is_torsion_part(up));
      CHECK(cache.mutate(d, up, Direction::Minus) == x);
      CHECK(index.to_diagram(up) == mutate_diagram(index.to_diagram(d), index.to_diagram(x), Direction::Plus));
      if (d == 0) break;
    }
  }
}
