#ifndef DNPOLY_CENSUS_HPP
#define DNPOLY_CENSUS_HPP

// Enumeration of torsion parts and maximal non-crossing diagrams over the
// bitmask index, and the graph of diagram mutations between Ptolemy diagrams.

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <vector>

#include "dnpoly/index.hpp"
#include "dnpoly/mutation.hpp"

namespace dnpoly {

enum class CensusMethod { Exhaustive, Closure };

/// DNPOLY_WORKERS if set to a positive integer, else hardware concurrency.
int worker_count();

/// Largest rank the exhaustive sweep accepts (2^{n^2} masks).
inline constexpr int kMaxExhaustiveRank = 5;
inline constexpr int kMaxMaximalRank = 6;

/// Every X with X == nc(nc(X)), ascending by mask. Throws std::invalid_argument
/// beyond the resource guard of the chosen method.
std::vector<Mask> enumerate_torsion_parts(const DiagramIndex& index, CensusMethod method,
                                          int workers = worker_count());

/// All inclusion-maximal pairwise non-crossing diagrams, ascending by mask.
/// Exhaustive scans every mask; Closure grows cliques of compatible elements.
std::vector<Mask> enumerate_maximal_noncrossing(const DiagramIndex& index,
                                                CensusMethod method = CensusMethod::Closure,
                                                int workers = worker_count());

bool is_maximal_noncrossing(const DiagramIndex& index, Mask m);

enum class CensusKind { Ptolemy, Maximal };

std::vector<Mask> run_census(const DiagramIndex& index, CensusKind kind, CensusMethod method,
                             int workers = worker_count());

/// Mutation of masks inside nc(D), with one cached permutation per D.
class MutationCache {
 public:
  explicit MutationCache(const DiagramIndex& index) : index_(index) {}

  /// Element-wise image of x; x must lie in nc(d).
  Mask mutate(Mask d, Mask x, Direction dir);

 private:
  struct Table {
    std::vector<int> plus;
    std::vector<int> minus;
  };
  const Table& table(Mask d);

  const DiagramIndex& index_;
  std::mutex lock_;
  std::map<Mask, std::unique_ptr<Table>> tables_;
};

struct GraphEdge {
  Mask x;
  Mask d;
  Direction dir;
  Mask x2;
  friend auto operator<=>(const GraphEdge&, const GraphEdge&) = default;
};

struct MutationGraph {
  std::vector<Mask> nodes;
  std::vector<GraphEdge> edges;
};

/// Closure of the seeds under mu_D and mu^-_D for every D inside X and nc(X).
/// Throws std::invalid_argument if a seed fails the hull axioms.
MutationGraph build_mutation_graph(const DiagramIndex& index, const std::vector<Mask>& seeds);

/// Every Ptolemy diagram as a seed.
MutationGraph build_full_mutation_graph(const DiagramIndex& index);

/// Connected components of the nodes, edges taken as undirected.
int component_count(const MutationGraph& g);

}  // namespace dnpoly

#endif  // DNPOLY_CENSUS_HPP
