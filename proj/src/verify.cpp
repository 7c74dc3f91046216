#include "dnpoly/verify.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <map>
#include <memory>
#include <random>
#include <set>
#include <sstream>
#include <stdexcept>

#include "dnpoly/ar_bridge.hpp"
#include "dnpoly/census.hpp"
#include "dnpoly/io.hpp"
#include "dnpoly/mutation.hpp"
#include "dnpoly/ptolemy.hpp"

namespace dnpoly {

namespace {

struct Outcome {
  bool held = true;
  std::ostringstream detail;

  // Records the first failure only; later ones are counted by the caller.
  void fail(const std::string& what) {
    if (held) detail << "FIRST FAILURE: " << what << "; ";
    held = false;
  }
};

using Check = std::function<void(Outcome&, const VerifyOptions&)>;

struct Criterion {
  const char* name;
  double budget;
  Check check;
};

std::string show(const Diagram& d) {
  std::string s = "{";
  for (const auto& e : d) s += (s.size() > 1 ? " " : "") + e.to_string();
  return s + "}";
}

std::vector<Mask> noncrossing_masks(const DiagramIndex& index) {
  std::set<Mask> all;
  for (Mask top : enumerate_maximal_noncrossing(index))
    for (Mask d = top;; d = (d - 1) & top) {
      all.insert(d);
      if (d == 0) break;
    }
  return {all.begin(), all.end()};
}

long long binomial(int n, int k) {
  long long r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void alphabet_size(Outcome& o, const VerifyOptions&) {
  for (int n = 4; n <= 10; ++n) {
    const Rank rank(n);
    const auto alpha = full_alphabet(rank);
    const std::set<ArcElement> distinct(alpha.begin(), alpha.end());
    if (alpha.size() != static_cast<std::size_t>(n * n) || distinct.size() != alpha.size())
      o.fail("n=" + std::to_string(n) + " has " + std::to_string(alpha.size()) + " elements");
  }
  o.detail << "n=4..10 give n^2 distinct elements";
}

void classification(Outcome& o, const VerifyOptions& opts) {
  {
    const DiagramIndex index{Rank(4)};
    const PtolemyTable table(index);
    std::size_t torsion = 0;
    std::size_t bad = 0;
    for (Mask m = 0; m <= index.full(); ++m) {
      const Diagram x = index.to_diagram(m);
      const bool axioms = table.is_ptolemy(m);
      const bool literal = is_ptolemy(x);
      const bool fixed = index.is_torsion_part(m);
      const bool brute = is_torsion_part(x);
      torsion += fixed ? 1 : 0;
      if (axioms != fixed || literal != fixed || brute != fixed) {
        if (bad++ == 0) o.fail("n=4 " + show(x));
      }
    }
    o.detail << "n=4: 65536 diagrams, " << torsion << " torsion parts, " << bad << " disagreements; ";
  }
  std::mt19937_64 rng(opts.seed);
  for (int n : {5, 6}) {
    const DiagramIndex index{Rank(n)};
    const PtolemyTable table(index);
    std::size_t positive = 0;
    std::size_t bad = 0;
    for (std::size_t s = 0; s < kRandomDiagrams; ++s) {
      const Mask m = rng() & index.full();
      const bool fixed = index.is_torsion_part(m);
      positive += fixed ? 1 : 0;
      if (table.is_ptolemy(m) != fixed && bad++ == 0) o.fail("n=" + std::to_string(n) + " " + show(index.to_diagram(m)));
    }
    // Uniform masks are almost never torsion parts, so every torsion part is
    // also run through the axioms.
    const auto parts = enumerate_torsion_parts(index, CensusMethod::Closure);
    for (Mask m : parts)
      if (!table.is_ptolemy(m) && bad++ == 0) o.fail("torsion part fails axioms " + show(index.to_diagram(m)));
    o.detail << "n=" << n << ": " << kRandomDiagrams << " random (" << positive << " torsion) + " << parts.size()
             << " torsion parts, " << bad << " disagreements; ";
  }
}

void maximal_counts(Outcome& o, const VerifyOptions& opts) {
  for (int n : {4, 5, 6}) {
    const DiagramIndex index{Rank(n)};
    const PtolemyTable table(index);
    const long long expected = (3LL * n - 2) * binomial(2 * n - 2, n - 1) / n;
    const auto grown = enumerate_maximal_noncrossing(index, CensusMethod::Closure);
    o.detail << "n=" << n << ": formula " << expected << ", clique search " << grown.size();
    if (static_cast<long long>(grown.size()) != expected) o.fail("clique count at n=" + std::to_string(n));
    if (n <= kMaxExhaustiveRank) {
      const auto scanned = enumerate_maximal_noncrossing(index, CensusMethod::Exhaustive, opts.workers);
      o.detail << ", exhaustive " << scanned.size();
      if (scanned != grown) o.fail("exhaustive and clique search differ at n=" + std::to_string(n));
    }
    o.detail << "; ";
    for (Mask m : grown)
      if (!table.is_ptolemy(m)) o.fail("maximal diagram not Ptolemy " + show(index.to_diagram(m)));
  }
}

// Runs body once for every non-crossing D of rank n.
template <typename F>
std::size_t sweep(int n, F&& body) {
  const DiagramIndex index{Rank(n)};
  std::size_t count = 0;
  for (Mask d : noncrossing_masks(index)) {
    const Diagram dd = index.to_diagram(d);
    const CellDecomposition cells(dd);
    body(index, d, dd, cells);
    ++count;
  }
  return count;
}

void bijectivity(Outcome& o, const VerifyOptions&) {
  std::size_t pairs = 0;
  const auto ds = sweep(4, [&](const DiagramIndex& index, Mask d, const Diagram& dd, const CellDecomposition& cells) {
    for_each_bit(index.nc(d), [&](int p) {
      const ArcElement e = index.element(p);
      ++pairs;
      const ArcElement up = mutate_element(cells, e, Direction::Plus);
      const ArcElement down = mutate_element(cells, e, Direction::Minus);
      if (!cells.in_nc(up) || !cells.in_nc(down)) o.fail("image outside nc(D) for " + e.to_string() + " in " + show(dd));
      if (mutate_element(cells, up, Direction::Minus) != e || mutate_element(cells, down, Direction::Plus) != e)
        o.fail("not inverse at " + e.to_string() + " in " + show(dd));
      if (dd.contains(e) && (up != e || down != e)) o.fail("D not fixed in " + show(dd));
    });
  });
  o.detail << ds << " non-crossing D, " << pairs << " (D,e) pairs";
}

void color_change(Outcome& o, const VerifyOptions&) {
  std::size_t flips = 0;
  sweep(4, [&](const DiagramIndex& index, Mask d, const Diagram& dd, const CellDecomposition& cells) {
    for_each_bit(index.nc(d) & ~d, [&](int p) {
      const ArcElement e = index.element(p);
      if (!e.is_diameter()) return;
      for (Direction dir : {Direction::Plus, Direction::Minus}) {
        const ArcElement f = mutate_element(cells, e, dir);
        if (!f.is_diameter()) {
          if (cells.replacement().apply(e).kind() != ReplacedElement::Kind::Radii)
            o.fail("diameter split without radii: " + e.to_string() + " in " + show(dd));
          continue;
        }
        ++flips;
        if (f.color() == e.color()) o.fail(e.to_string() + " -> " + f.to_string() + " in " + show(dd));
      }
    });
  });
  o.detail << flips << " diameter-to-diameter mutations, all change colour";
}

void cell_partition(Outcome& o, const VerifyOptions&) {
  std::size_t cells_seen = 0;
  std::size_t located = 0;
  sweep(4, [&](const DiagramIndex& index, Mask d, const Diagram& dd, const CellDecomposition& cells) {
    const Rank rank = index.rank();
    bool invariant = false;
    for (const CellPair& pair : cells.pairs()) {
      invariant = invariant || pair.invariant();
      for (int m = 0; m < 2; ++m) {
        ++cells_seen;
        for (int a : interior_angles(rank, pair.member(m)))
          if (a > rank.vertices()) o.fail("reflex angle in a cell of " + show(dd));
      }
    }
    if (invariant != dd.diameters().empty()) o.fail("invariant-cell criterion for " + show(dd));
    for_each_bit(index.nc(d) & ~d, [&](int p) {
      ++located;
      if (cells.containing_pairs(index.element(p)) != 1)
        o.fail(index.element(p).to_string() + " not in exactly one cell pair of " + show(dd));
    });
  });
  o.detail << cells_seen << " cells convex, " << located << " diagonals each in one cell pair";
}

void ext_dimension(Outcome& o, const VerifyOptions& opts) {
  std::size_t exhaustive = 0;
  sweep(4, [&](const DiagramIndex& index, Mask d, const Diagram& dd, const CellDecomposition& cells) {
    for_each_bit(index.nc(d) & ~d, [&](int p) {
      ++exhaustive;
      const ArcElement e = index.element(p);
      if (crossing_count(e, mutate_element(cells, e, Direction::Minus)) != 1)
        o.fail(e.to_string() + " in " + show(dd));
    });
  });

  const DiagramIndex index{Rank(5)};
  const auto ds = noncrossing_masks(index);
  std::map<Mask, std::unique_ptr<CellDecomposition>> cache;
  std::mt19937_64 rng(opts.seed ^ 0x7);
  std::uniform_int_distribution<std::size_t> pick_d(0, ds.size() - 1);
  std::size_t sampled = 0;
  while (sampled < kSampledPairs) {
    const Mask d = ds[pick_d(rng)];
    const Mask free = index.nc(d) & ~d;
    if (free == 0) continue;
    std::vector<int> bits;
    for_each_bit(free, [&](int p) { bits.push_back(p); });
    const ArcElement e = index.element(bits[std::uniform_int_distribution<std::size_t>(0, bits.size() - 1)(rng)]);
    auto& slot = cache[d];
    if (!slot) slot = std::make_unique<CellDecomposition>(index.to_diagram(d));
    if (crossing_count(e, mutate_element(*slot, e, Direction::Minus)) != 1)
      o.fail("n=5 " + e.to_string() + " in " + show(index.to_diagram(d)));
    ++sampled;
  }
  o.detail << "n=4: " << exhaustive << " pairs exhaustive; n=5: " << sampled << " sampled pairs over "
           << cache.size() << " distinct D";
}

void triangles(Outcome& o, const VerifyOptions&) {
  for (int n : {4, 5}) {
    std::size_t instances = 0;
    std::size_t compared = 0;
    sweep(n, [&](const DiagramIndex& index, Mask d, const Diagram& dd, const CellDecomposition& cells) {
      for_each_bit(index.nc(d) & ~d, [&](int p) {
        const ArcElement e = index.element(p);
        ++instances;
        const MutationTriangle t = mutation_triangle(cells, e);
        std::vector<ArcElement> cell_side;
        for (const auto& s : t.summands) {
          if (!s) continue;
          if (!dd.contains(*s)) o.fail("summand " + s->to_string() + " outside D for " + e.to_string());
          cell_side.push_back(*s);
        }
        std::sort(cell_side.begin(), cell_side.end());
        const auto frames = frame_middle_term(cells, e);
        if (!frames) return;
        ++compared;
        if (*frames != cell_side) o.fail("frames disagree for " + e.to_string() + " in " + show(dd));
      });
    });
    // Weaker check on all module pairs: summands cross neither end.
    const Rank rank(n);
    std::size_t module_pairs = 0;
    const auto alpha = full_alphabet(rank);
    for (const auto& x : alpha)
      for (const auto& y : alpha) {
        const auto vx = module_vertex(rank, x);
        const auto vy = module_vertex(rank, y);
        if (!vx || !vy || vx->i >= vy->i || crossing_count(x, y) != 1) continue;
        ++module_pairs;
        for (const ArVertex& v : middle_term(rank, *vy, *vx)) {
          const ArcElement z = b_map(rank, v);
          if (crossing_count(z, x) != 0 || crossing_count(z, y) != 0)
            o.fail("middle summand " + z.to_string() + " crosses an end");
        }
      }
    o.detail << "n=" << n << ": " << instances << " triangles, " << compared << " frame comparisons, "
             << module_pairs << " module pairs; ";
  }
}

void ptolemy_closure(Outcome& o, const VerifyOptions&) {
  const DiagramIndex index{Rank(4)};
  const PtolemyTable table(index);
  MutationCache cache(index);
  std::size_t checked = 0;
  std::size_t ptolemy = 0;
  for (Mask x = 0; x <= index.full(); ++x) {
    if (!table.is_ptolemy(x)) continue;
    ++ptolemy;
    const Mask admissible = x & index.nc(x);
    for (Mask d = admissible;; d = (d - 1) & admissible) {
      for (Direction dir : {Direction::Plus, Direction::Minus}) {
        const Mask x2 = cache.mutate(d, x, dir);
        ++checked;
        if (!table.is_ptolemy(x2) || !index.is_torsion_part(x2))
          o.fail("mutation of " + show(index.to_diagram(x)) + " by " + show(index.to_diagram(d)));
        if ((d & ~(x2 & index.nc(x2))) != 0 || cache.mutate(d, x2, reverse(dir)) != x)
          o.fail("no reverse edge for " + show(index.to_diagram(x)));
      }
      if (d == 0) break;
    }
  }
  o.detail << ptolemy << " Ptolemy diagrams, " << checked << " mutations, all Ptolemy with reverse edges";
}

void shift_consistency(Outcome& o, const VerifyOptions&) {
  for (int n = 4; n <= 6; ++n) {
    const Rank rank(n);
    const Diagram empty(rank);
    const CellDecomposition cells(empty);
    for (const auto& e : full_alphabet(rank)) {
      if (mutate_element(cells, e, Direction::Minus) != shift(e)) o.fail("mu^- of " + e.to_string());
      if (b_map(rank, to_cluster(rank, sigma(rank, b_inv(rank, e)))) != shift(e))
        o.fail("AR shift of " + e.to_string());
    }
  }
  std::size_t round_trips = 0;
  for (int n = 4; n <= 8; ++n) {
    const Rank rank(n);
    std::set<ArcElement> image;
    for (int i = 0; i < n; ++i) {
      for (int j = i + 2; j <= i + n - 1; ++j) {
        const ArVertex v = ArVertex::plain(i, j);
        if (b_inv(rank, b_map(rank, v)) != v) o.fail("b round trip at " + v.to_string());
        image.insert(b_map(rank, v));
        ++round_trips;
      }
      for (Sign s : {Sign::Plus, Sign::Minus}) {
        const ArVertex v = ArVertex::diameter(i, n, s);
        if (b_inv(rank, b_map(rank, v)) != v) o.fail("b round trip at " + v.to_string());
        image.insert(b_map(rank, v));
        ++round_trips;
      }
    }
    for (const auto& e : full_alphabet(rank))
      if (b_map(rank, b_inv(rank, e)) != e) o.fail("b^-1 round trip at " + e.to_string());
    if (image.size() != static_cast<std::size_t>(n * n)) o.fail("b not onto at n=" + std::to_string(n));
  }
  struct Example {
    int n;
    const char* from;
    const char* to;
  };
  for (const Example& ex : {Example{4, "[0,2]", "[4,6]"}, Example{4, "[0,4]+", "[4,8]+"},
                            Example{5, "[0,5]+", "[5,10]-"}, Example{5, "[1,6]-", "[6,11]+"},
                            Example{6, "[0,6]-", "[6,12]-"}}) {
    const ArVertex got = tau_inv_sigma(Rank(ex.n), parse_ar_vertex(ex.from));
    if (got.to_string() != ex.to)
      o.fail(std::string("tau^-1 Sigma ") + ex.from + " gave " + got.to_string());
  }
  o.detail << "mu^-_0 = shift at n=4..6; " << round_trips << " b round trips at n=4..8; 5 tau^-1 Sigma examples";
}

void determinism(Outcome& o, const VerifyOptions& opts) {
  const DiagramIndex index{Rank(4)};
  const std::string serial = census_jsonl(index, run_census(index, CensusKind::Ptolemy, CensusMethod::Exhaustive, 1));
  const std::string parallel =
      census_jsonl(index, run_census(index, CensusKind::Ptolemy, CensusMethod::Exhaustive, opts.workers));
  const std::string lattice = census_jsonl(index, run_census(index, CensusKind::Ptolemy, CensusMethod::Closure));
  const auto lines = static_cast<std::size_t>(std::count(serial.begin(), serial.end(), '\n'));
  if (serial != parallel) o.fail("serial and parallel runs differ");
  if (serial != lattice) o.fail("exhaustive and closure outputs differ");
  if (lines != kTorsionPartsN4) o.fail("n=4 count " + std::to_string(lines));
  const DiagramIndex five{Rank(5)};
  const auto n5 = enumerate_torsion_parts(five, CensusMethod::Exhaustive, opts.workers);
  if (n5.size() != kTorsionPartsN5) o.fail("n=5 count " + std::to_string(n5.size()));
  o.detail << "n=4: " << lines << " records, " << serial.size() << " bytes identical across runs; n=5: " << n5.size();
}

const std::vector<Criterion>& criteria() {
  static const std::vector<Criterion> all{
      {"alphabet size", 1.0, alphabet_size},
      {"classification equivalence", 60.0, classification},
      {"maximal non-crossing counts", 120.0, maximal_counts},
      {"mutation bijectivity", 120.0, bijectivity},
      {"colour change", 120.0, color_change},
      {"cell partition and convexity", 120.0, cell_partition},
      {"ext dimension", 120.0, ext_dimension},
      {"triangle middle terms", 300.0, triangles},
      {"Ptolemy closure under mutation", 600.0, ptolemy_closure},
      {"shift consistency", 30.0, shift_consistency},
      {"census determinism", 60.0, determinism},
  };
  return all;
}

}  // namespace

std::vector<int> parse_suite(const std::string& text) {
  std::vector<int> out;
  if (text == "all") {
    for (int i = 1; i <= kCriterionCount; ++i) out.push_back(i);
    return out;
  }
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int id = 0;
    try {
      id = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (used == 0 || used != item.size() || id < 1 || id > kCriterionCount)
      throw std::invalid_argument("suite must be \"all\" or numbers 1.." + std::to_string(kCriterionCount) +
                                  ", got \"" + item + "\"");
    out.push_back(id);
  }
  if (out.empty()) throw std::invalid_argument("empty suite");
  return out;
}

CriterionResult run_criterion(int id, const VerifyOptions& opts) {
  if (id < 1 || id > kCriterionCount) throw std::invalid_argument("no criterion " + std::to_string(id));
  const Criterion& c = criteria()[static_cast<std::size_t>(id - 1)];
  VerifyOptions resolved = opts;
  if (resolved.workers <= 0) resolved.workers = worker_count();

  Outcome o;
  const auto start = std::chrono::steady_clock::now();
  try {
    c.check(o, resolved);
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return CriterionResult{id, c.name, o.held, seconds, c.budget, o.detail.str()};
}

std::string format_result(const CriterionResult& r) {
  char timing[64];
  std::snprintf(timing, sizeof timing, "%.2f s / %.0f s", r.seconds, r.budget_seconds);
  std::string line = std::string(r.passed() ? "PASS" : "FAIL") + "  C" + std::to_string(r.id) + " " + r.name +
                     " (" + timing + ")";
  if (r.held && !r.passed()) line += " over budget";
  return line + ": " + r.detail;
}

}  // namespace dnpoly
