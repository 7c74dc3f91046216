#include "dnpoly/census.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <deque>
#include <numeric>
#include <set>
#include <stdexcept>
#include <thread>
#include <unordered_set>

#include "dnpoly/cells.hpp"
#include "dnpoly/ptolemy.hpp"

namespace dnpoly {

int worker_count() {
  if (const char* env = std::getenv("DNPOLY_WORKERS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<int>(std::min(v, 1024L));
  }
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : static_cast<int>(hw);
}

namespace {

// Every mask satisfying keep(m), in ascending order, scanned in parallel.
template <typename Keep>
std::vector<Mask> scan(const DiagramIndex& index, int workers, Keep keep) {
  if (index.rank().n() > kMaxExhaustiveRank)
    throw std::invalid_argument("exhaustive enumeration is limited to n <= " +
                                std::to_string(kMaxExhaustiveRank));
  const Mask total = index.full() + 1;
  workers = std::max(1, workers);
  // More chunks than workers keeps the tail short; output order is chunk order.
  const Mask chunks = std::min<Mask>(total, static_cast<Mask>(workers) * 16);
  std::vector<std::vector<Mask>> found(static_cast<std::size_t>(chunks));
  std::atomic<Mask> next{0};
  auto run = [&] {
    for (Mask c = next++; c < chunks; c = next++) {
      const Mask lo = total / chunks * c + std::min(c, total % chunks);
      const Mask hi = lo + total / chunks + (c < total % chunks ? 1 : 0);
      auto& out = found[static_cast<std::size_t>(c)];
      for (Mask m = lo; m < hi; ++m)
        if (keep(m)) out.push_back(m);
    }
  };
  std::vector<std::thread> pool;
  for (int w = 1; w < workers; ++w) pool.emplace_back(run);
  run();
  for (auto& t : pool) t.join();

  std::vector<Mask> out;
  for (const auto& part : found) out.insert(out.end(), part.begin(), part.end());
  return out;
}

// Torsion parts are exactly the intersections of the sets nc({e}); the empty
// intersection is the whole alphabet.
std::vector<Mask> closure(const DiagramIndex& index) {
  if (index.rank().n() > kMaxMaximalRank)
    throw std::invalid_argument("closure enumeration is limited to n <= " +
                                std::to_string(kMaxMaximalRank));
  std::vector<Mask> generators;
  for (int p = 0; p < index.size(); ++p) generators.push_back(index.nc(Mask{1} << p));
  std::sort(generators.begin(), generators.end());
  generators.erase(std::unique(generators.begin(), generators.end()), generators.end());

  std::unordered_set<Mask> seen{index.full()};
  std::vector<Mask> frontier{index.full()};
  while (!frontier.empty()) {
    std::vector<Mask> next;
    for (Mask s : frontier)
      for (Mask g : generators)
        if (seen.insert(s & g).second) next.push_back(s & g);
    frontier = std::move(next);
  }
  std::vector<Mask> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Mask> enumerate_torsion_parts(const DiagramIndex& index, CensusMethod method, int workers) {
  if (method == CensusMethod::Closure) return closure(index);
  return scan(index, workers, [&](Mask m) { return index.is_torsion_part(m); });
}

bool is_maximal_noncrossing(const DiagramIndex& index, Mask m) {
  return index.is_noncrossing(m) && (index.nc(m) & ~m) == 0;
}

std::vector<Mask> enumerate_maximal_noncrossing(const DiagramIndex& index, CensusMethod method, int workers) {
  if (method == CensusMethod::Exhaustive)
    return scan(index, workers, [&](Mask m) { return is_maximal_noncrossing(index, m); });
  if (index.rank().n() > kMaxMaximalRank)
    throw std::invalid_argument("maximal enumeration is limited to n <= " +
                                std::to_string(kMaxMaximalRank));
  // Bron-Kerbosch with pivoting on the compatibility graph.
  std::vector<Mask> compatible(static_cast<std::size_t>(index.size()));
  Mask usable = 0;
  for (int p = 0; p < index.size(); ++p) {
    compatible[static_cast<std::size_t>(p)] = index.full() & ~index.crossing(p) & ~(Mask{1} << p);
    if ((index.crossing(p) >> p & 1) == 0) usable |= Mask{1} << p;
  }
  std::vector<Mask> out;
  auto expand = [&](auto&& self, Mask r, Mask p, Mask x) -> void {
    if (p == 0) {
      if (x == 0) out.push_back(r);
      return;
    }
    const int pivot = std::countr_zero(p | x);
    for (Mask cand = p & ~compatible[static_cast<std::size_t>(pivot)]; cand != 0; cand &= cand - 1) {
      const int v = std::countr_zero(cand);
      const Mask bit = Mask{1} << v;
      const Mask nb = compatible[static_cast<std::size_t>(v)];
      self(self, r | bit, p & nb, x & nb);
      p &= ~bit;
      x |= bit;
    }
  };
  expand(expand, 0, usable, 0);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Mask> run_census(const DiagramIndex& index, CensusKind kind, CensusMethod method, int workers) {
  return kind == CensusKind::Ptolemy ? enumerate_torsion_parts(index, method, workers)
                                     : enumerate_maximal_noncrossing(index, method, workers);
}

const MutationCache::Table& MutationCache::table(Mask d) {
  std::lock_guard<std::mutex> guard(lock_);
  auto& slot = tables_[d];
  if (!slot) {
    auto t = std::make_unique<Table>();
    t->plus.assign(static_cast<std::size_t>(index_.size()), -1);
    t->minus.assign(static_cast<std::size_t>(index_.size()), -1);
    const CellDecomposition cells(index_.to_diagram(d));
    for_each_bit(index_.nc(d), [&](int p) {
      t->plus[static_cast<std::size_t>(p)] =
          index_.index_of(mutate_element(cells, index_.element(p), Direction::Plus));
      t->minus[static_cast<std::size_t>(p)] =
          index_.index_of(mutate_element(cells, index_.element(p), Direction::Minus));
    });
    slot = std::move(t);
  }
  return *slot;
}

Mask MutationCache::mutate(Mask d, Mask x, Direction dir) {
  const Table& t = table(d);
  const auto& map = dir == Direction::Plus ? t.plus : t.minus;
  Mask out = 0;
  for_each_bit(x, [&](int p) {
    const int q = map[static_cast<std::size_t>(p)];
    if (q < 0) throw std::invalid_argument("mutate: diagram is not inside nc(D)");
    out |= Mask{1} << q;
  });
  return out;
}

MutationGraph build_mutation_graph(const DiagramIndex& index, const std::vector<Mask>& seeds) {
  const PtolemyTable ptolemy(index);
  MutationCache cache(index);
  std::set<Mask> nodes;
  std::deque<Mask> frontier;
  for (Mask s : seeds) {
    if ((s & ~index.full()) != 0 || !ptolemy.is_ptolemy(s))
      throw std::invalid_argument("graph seed is not a Ptolemy diagram");
    if (nodes.insert(s).second) frontier.push_back(s);
  }

  MutationGraph g;
  while (!frontier.empty()) {
    const Mask x = frontier.front();
    frontier.pop_front();
    const Mask admissible = x & index.nc(x);
    // All submasks of the admissible set, the empty one included.
    for (Mask d = admissible;; d = (d - 1) & admissible) {
      for (Direction dir : {Direction::Plus, Direction::Minus}) {
        const Mask x2 = cache.mutate(d, x, dir);
        if (!ptolemy.is_ptolemy(x2)) throw std::logic_error("mutation left the Ptolemy diagrams");
        g.edges.push_back(GraphEdge{x, d, dir, x2});
        if (nodes.insert(x2).second) frontier.push_back(x2);
      }
      if (d == 0) break;
    }
  }
  g.nodes.assign(nodes.begin(), nodes.end());
  std::sort(g.edges.begin(), g.edges.end());
  return g;
}

MutationGraph build_full_mutation_graph(const DiagramIndex& index) {
  return build_mutation_graph(index, enumerate_torsion_parts(index, CensusMethod::Closure));
}

int component_count(const MutationGraph& g) {
  std::map<Mask, std::size_t> id;
  for (std::size_t i = 0; i < g.nodes.size(); ++i) id.emplace(g.nodes[i], i);
  std::vector<std::size_t> parent(g.nodes.size());
  std::iota(parent.begin(), parent.end(), 0);
  auto find = [&](std::size_t v) {
    while (parent[v] != v) v = parent[v] = parent[parent[v]];
    return v;
  };
  int components = static_cast<int>(g.nodes.size());
  for (const auto& e : g.edges) {
    const auto a = find(id.at(e.x));
    const auto b = find(id.at(e.x2));
    if (a != b) {
      parent[a] = b;
      --components;
    }
  }
  return components;
}

}  // namespace dnpoly
