#include <doctest.h>

#include <algorithm>
#include <stdexcept>

#include <cstdlib>
#include <set>

#include "dnpoly/census.hpp"
#include "dnpoly/ptolemy.hpp"

using namespace dnpoly;

TEST_CASE("census counts") {
  const DiagramIndex i4{Rank(4)};
  const auto parts = enumerate_torsion_parts(i4, CensusMethod::Exhaustive, 2);
  CHECK(parts.size() == 500);
  CHECK(enumerate_torsion_parts(i4, CensusMethod::Closure) == parts);
  CHECK(std::is_sorted(parts.begin(), parts.end()));
  CHECK(parts.front() == 0);
  CHECK(parts.back() == i4.full());

  const auto maximal = enumerate_maximal_noncrossing(i4);
  CHECK(maximal.size() == 50);
  CHECK(enumerate_maximal_noncrossing(i4, CensusMethod::Exhaustive, 3) == maximal);
  const std::set<Mask> all(parts.begin(), parts.end());
  for (Mask m : maximal) {
    CHECK(all.count(m) == 1);
    CHECK(is_maximal_noncrossing(i4, m));
    CHECK(m == i4.nc(m));
  }

  const DiagramIndex i5{Rank(5)};
  CHECK(enumerate_maximal_noncrossing(i5).size() == 182);
}

TEST_CASE("census results do not depend on the worker count") {
  const DiagramIndex index{Rank(4)};
  const auto one = enumerate_torsion_parts(index, CensusMethod::Exhaustive, 1);
  const auto many = enumerate_torsion_parts(index, CensusMethod::Exhaustive, 7);
  CHECK(one == many);
}

TEST_CASE("census agrees with the axiom checker") {
  const DiagramIndex index{Rank(4)};
  const auto parts = enumerate_torsion_parts(index, CensusMethod::Closure);
  const std::set<Mask> all(parts.begin(), parts.end());
  for (Mask m = 0; m < (Mask{1} << 16); m += 97) CHECK(is_ptolemy(index.to_diagram(m)) == (all.count(m) == 1));
}

TEST_CASE("resource guards") {
  const DiagramIndex i6{Rank(6)};
  CHECK_THROWS_AS(enumerate_torsion_parts(i6, CensusMethod::Exhaustive), std::invalid_argument);
  const DiagramIndex i7{Rank(7)};
  CHECK_THROWS_AS(enumerate_maximal_noncrossing(i7), std::invalid_argument);
}

TEST_CASE("worker count from the environment") {
  setenv("DNPOLY_WORKERS", "3", 1);
  CHECK(worker_count() == 3);
  setenv("DNPOLY_WORKERS", "junk", 1);
  CHECK(worker_count() >= 1);
  unsetenv("DNPOLY_WORKERS");
  CHECK(worker_count() >= 1);
}

TEST_CASE("mutation graph") {
  const DiagramIndex index{Rank(4)};

  SUBCASE("empty seed is isolated") {
    const auto g = build_mutation_graph(index, {0});
    CHECK(g.nodes == std::vector<Mask>{0});
    for (const auto& e : g.edges) CHECK(e.x2 == 0);
  }

  SUBCASE("maximal diagrams form one component") {
    const auto g = build_mutation_graph(index, {enumerate_maximal_noncrossing(index).front()});
    CHECK(g.nodes.size() == 50);
    CHECK(component_count(g) == 1);
  }

  SUBCASE("full graph invariants") {
    const auto g = build_full_mutation_graph(index);
    CHECK(g.nodes.size() == 500);
    const std::set<GraphEdge> edges(g.edges.begin(), g.edges.end());
    CHECK(edges.size() == g.edges.size());
    for (const auto& e : g.edges) {
      CHECK(index.is_torsion_part(e.x2));
      CHECK(edges.count(GraphEdge{e.x2, e.d, reverse(e.dir), e.x}) == 1);
      CHECK((e.d & ~e.x) == 0);
      if (e.d == e.x) CHECK(e.x2 == e.x);
    }
    std::set<Mask> nodes(g.nodes.begin(), g.nodes.end());
    for (Mask m : g.nodes) CHECK(nodes.count(index.to_mask(rotate(index.to_diagram(m), 1))) == 1);
  }

  SUBCASE("bad seed") {
    const Rank r(4);
    const Mask bad = index.to_mask(Diagram(r, {ArcElement::pair(r, 0, 2), ArcElement::pair(r, 1, 3)}));
    CHECK_THROWS_AS(build_mutation_graph(index, {bad}), std::invalid_argument);
  }
}
