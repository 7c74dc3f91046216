#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include "dnpoly/census.hpp"
#include "dnpoly/index.hpp"
#include "dnpoly/ptolemy.hpp"

using namespace dnpoly;

TEST_CASE("trivial torsion parts") {
  const Rank r(4);
  CHECK(is_ptolemy(Diagram(r)));
  CHECK(is_torsion_part(Diagram(r)));
  CHECK(is_ptolemy(full_diagram(r)));
  CHECK(is_torsion_part(full_diagram(r)));
  CHECK(is_torsion_part(Diagram(r, {ArcElement::pair(r, 0, 2)})));
  CHECK(is_ptolemy(Diagram(r, {ArcElement::pair(r, 0, 2)})));
}

TEST_CASE("two crossing short arcs miss their hull") {
  const Rank r(4);
  const Diagram x(r, {ArcElement::pair(r, 0, 2), ArcElement::pair(r, 1, 3)});
  const PtolemyReport report = check_ptolemy(x);
  REQUIRE_FALSE(report.ptolemy);
  REQUIRE(report.violation.has_value());
  CHECK(report.violation->axiom == Axiom::Pt1);
  CHECK(crossing_count(report.violation->first, report.violation->second) > 0);
  REQUIRE_FALSE(report.violation->missing.empty());
  // The closure adds exactly what is missing.
  CHECK(set_difference(nc(nc(x)), x) == Diagram(r, {ArcElement::pair(r, 0, 3)}));
  for (const auto& m : report.violation->missing) CHECK(nc(nc(x)).contains(m));
  CHECK_FALSE(is_torsion_part(x));
}

TEST_CASE("Pt2 and Pt3 examples") {
  const Rank r(4);
  const auto red0 = ArcElement::diameter(r, 0, Color::Red);
  const auto green1 = ArcElement::diameter(r, 1, Color::Green);
  const Diagram two(r, {red0, green1});
  const auto report = check_ptolemy(two);
  REQUIRE_FALSE(report.ptolemy);
  CHECK(report.violation->axiom == Axiom::Pt2);

  const Diagram mixed(r, {red0, ArcElement::pair(r, 1, 6)});
  const auto r3 = check_ptolemy(mixed);
  REQUIRE_FALSE(r3.ptolemy);
  CHECK(r3.violation->axiom == Axiom::Pt3);
  CHECK(is_ptolemy(nc(nc(mixed))));
}

TEST_CASE("Pt2 hull chords are never diameters") {
  const Rank r(5);
  for (const auto& x : full_alphabet(r))
    for (const auto& y : full_alphabet(r))
      for (const auto& req : hull_requirements(x, y))
        if (req.axiom == Axiom::Pt2)
          for (const auto& e : req.required) CHECK(e.is_pair());
}

TEST_CASE("axioms agree with the fixed point at n=4") {
  const DiagramIndex index{Rank(4)};
  const PtolemyTable table(index);
  int agree = 0;
  for (Mask m = 0; m <= index.full(); m += 7) {
    const Diagram x = index.to_diagram(m);
    CHECK(is_ptolemy(x) == is_torsion_part(x));
    CHECK(table.is_ptolemy(m) == index.is_torsion_part(m));
    ++agree;
  }
  CHECK(agree > 9000);
}

TEST_CASE("Ptolemy is rotation equivariant") {
  const DiagramIndex index{Rank(5)};
  for (Mask m : enumerate_torsion_parts(index, CensusMethod::Closure)) {
    const Diagram x = index.to_diagram(m);
    if (x.size() > 6) continue;
    for (int k : {1, 4, 5}) CHECK(is_ptolemy(rotate(x, k)));
  }
}

TEST_CASE("maximal non-crossing diagrams are Ptolemy") {
  for (int n : {4, 5}) {
    const DiagramIndex index{Rank(n)};
    for (Mask m : enumerate_maximal_noncrossing(index)) CHECK(is_ptolemy(index.to_diagram(m)));
  }
}

TEST_CASE("bitmask index") {
  const DiagramIndex index{Rank(4)};
  CHECK(index.size() == 16);
  CHECK(index.full() == 0xffff);
  for (int p = 0; p < index.size(); ++p) {
    CHECK(index.index_of(index.element(p)) == p);
    for (int q = 0; q < index.size(); ++q)
      CHECK(index.crossing_count(p, q) == crossing_count(index.element(p), index.element(q)));
  }
  const Diagram x(Rank(4), {ArcElement::pair(Rank(4), 0, 2), ArcElement::diameter(Rank(4), 1, Color::Red)});
  CHECK(index.to_diagram(index.to_mask(x)) == x);
  CHECK(index.to_diagram(index.nc(index.to_mask(x))) == nc(x));
  CHECK_THROWS_AS(DiagramIndex(Rank(9)), std::invalid_argument);
  CHECK_THROWS_AS(index.to_mask(Diagram(Rank(5))), std::invalid_argument);
}
