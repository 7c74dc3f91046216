#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <random>

#include "dnpoly/polygon.hpp"

using namespace dnpoly;

namespace {

Diagram random_diagram(Rank rank, std::mt19937& rng, double p) {
  std::bernoulli_distribution take(p);
  Diagram d(rank);
  for (const auto& e : full_alphabet(rank))
    if (take(rng)) d.insert(e);
  return d;
}

}  // namespace

TEST_CASE("rank below four is rejected") {
  CHECK_THROWS_AS(Rank(3), std::invalid_argument);
  CHECK_NOTHROW(Rank(4));
}

TEST_CASE("alphabet has n^2 elements") {
  const Rank four(4);
  const auto alpha = full_alphabet(four);
  CHECK(alpha.size() == 16);
  int pairs = 0;
  for (const auto& e : alpha) pairs += e.is_pair() ? 1 : 0;
  CHECK(pairs == 8);
  CHECK(full_alphabet(Rank(5)).size() == 25);
  for (int n = 4; n <= 10; ++n) CHECK(full_alphabet(Rank(n)).size() == static_cast<std::size_t>(n * n));

  const Diagram full = full_diagram(four);
  CHECK(full.contains(ArcElement::diameter(four, 0, Color::Red)));
  CHECK(full.contains(ArcElement::diameter(four, 0, Color::Green)));
  CHECK(ArcElement::diameter(four, 0, Color::Red) != ArcElement::diameter(four, 0, Color::Green));
}

TEST_CASE("canonical forms") {
  const Rank r(4);
  const ArcElement p = ArcElement::pair(r, 6, 4);
  CHECK(p.a() == 0);
  CHECK(p.b() == 2);
  CHECK(ArcElement::pair(r, 5, 2) == ArcElement::pair(r, 1, 6));
  CHECK(ArcElement::pair(r, 1, 6).a() == 1);
  CHECK(ArcElement::pair(r, 1, 6).b() == 6);
  CHECK(ArcElement::diameter(r, 5, Color::Green).a() == 1);
  CHECK(ArcElement::diameter(r, 5, Color::Green).b() == 5);

  CHECK_THROWS_AS(ArcElement::pair(r, 0, 1), std::invalid_argument);
  CHECK_THROWS_AS(ArcElement::pair(r, 7, 0), std::invalid_argument);
  CHECK_THROWS_AS(ArcElement::pair(r, 2, 2), std::invalid_argument);
  CHECK_THROWS_AS(ArcElement::pair(r, 0, 4), std::invalid_argument);
  CHECK(ArcElement::from_chord(r, 3, 7, Color::Red) == ArcElement::diameter(r, 3, Color::Red));
  CHECK(ArcElement::pair(r, 0, 2).to_string() == "(0,2)");
  CHECK(ArcElement::diameter(r, 0, Color::Red).to_string() == "(0,4)_r");
}

TEST_CASE("crossing count examples") {
  const Rank r(4);
  CHECK(crossing_count(ArcElement::pair(r, 0, 2), ArcElement::pair(r, 1, 3)) == 1);
  CHECK(crossing_count(ArcElement::pair(r, 0, 3), ArcElement::pair(r, 1, 6)) == 2);
  CHECK(crossing_count(ArcElement::diameter(r, 0, Color::Red), ArcElement::diameter(r, 1, Color::Red)) == 0);
  CHECK(crossing_count(ArcElement::diameter(r, 0, Color::Red), ArcElement::diameter(r, 1, Color::Green)) == 1);
  CHECK(crossing_count(ArcElement::diameter(r, 0, Color::Red), ArcElement::diameter(r, 0, Color::Green)) == 0);
  CHECK_THROWS_AS(crossing_count(ArcElement::pair(r, 0, 2), ArcElement::pair(Rank(5), 0, 2)),
                  std::invalid_argument);
}

TEST_CASE("crossing count properties") {
  for (int n = 4; n <= 6; ++n) {
    const Rank r(n);
    const auto alpha = full_alphabet(r);
    for (const auto& x : alpha) {
      CHECK(crossing_count(x, x) == 0);
      for (const auto& y : alpha) {
        const int c = crossing_count(x, y);
        CHECK(c == crossing_count(y, x));
        CHECK(c >= 0);
        CHECK(c <= (x.is_pair() && y.is_pair() ? 2 : 1));
        // Distinct diameter chords always cross.
        if (x.is_diameter() && y.is_diameter() && x.a() != y.a() && x.color() != y.color()) CHECK(c == 1);
      }
    }
  }
}

TEST_CASE("nc examples") {
  const Rank r(4);
  CHECK(nc(Diagram(r)) == full_diagram(r));
  CHECK(nc(full_diagram(r)).empty());
  const Diagram red0(r, {ArcElement::diameter(r, 0, Color::Red)});
  CHECK(nc(red0).contains(ArcElement::diameter(r, 1, Color::Red)));
  CHECK_FALSE(nc(red0).contains(ArcElement::diameter(r, 1, Color::Green)));
}

TEST_CASE("nc is a Galois connection and commutes with rotation") {
  std::mt19937 rng(7);
  for (int n : {4, 5, 6}) {
    const Rank r(n);
    for (int trial = 0; trial < 60; ++trial) {
      const Diagram x = random_diagram(r, rng, 0.15);
      const Diagram y = set_union(x, random_diagram(r, rng, 0.1));
      CHECK(nc(y).is_subset_of(nc(x)));
      CHECK(nc(x) == nc(nc(nc(x))));
      for (int k : {1, 3, n, 2 * n - 1}) CHECK(nc(rotate(x, k)) == rotate(nc(x), k));
    }
  }
}

TEST_CASE("rotation") {
  const Rank r(4);
  std::mt19937 rng(11);
  const Diagram x = random_diagram(r, rng, 0.4);
  CHECK(rotate(x, 0) == x);
  CHECK(rotate(x, 8) == x);
  CHECK(rotate(x, -3) == rotate(x, 5));
  CHECK(rotate(Diagram(r, {ArcElement::pair(r, 0, 2)}), 1) == Diagram(r, {ArcElement::pair(r, 1, 3)}));
  CHECK(ArcElement::diameter(r, 3, Color::Green).rotated(1) == ArcElement::diameter(r, 0, Color::Green));
}

TEST_CASE("diagram set operations") {
  const Rank r(4);
  const auto a = ArcElement::pair(r, 0, 2);
  const auto b = ArcElement::diameter(r, 1, Color::Red);
  Diagram x(r, {a});
  CHECK_FALSE(x.insert(a));
  CHECK(x.insert(b));
  CHECK(x.size() == 2);
  CHECK(set_intersection(x, Diagram(r, {b})) == Diagram(r, {b}));
  CHECK(set_difference(x, Diagram(r, {b})) == Diagram(r, {a}));
  CHECK_THROWS_AS(x.insert(ArcElement::pair(Rank(5), 0, 2)), std::invalid_argument);
  CHECK(x.diameters() == std::vector<ArcElement>{b});
  CHECK(Diagram(r, {a, ArcElement::pair(r, 0, 3)}).is_noncrossing());
  CHECK_FALSE(Diagram(r, {a, ArcElement::pair(r, 1, 3)}).is_noncrossing());
}
