#ifndef DNPOLY_AR_BRIDGE_HPP
#define DNPOLY_AR_BRIDGE_HPP

// Auslander-Reiten quiver coordinates [i,j] and [i,i+n]_+/- for the derived
// category, the cluster category and mod kD_n, the bijection b onto arc
// elements, starting/ending frames, and the triangle middle terms they
// predict. This is an oracle for the polygon model and never consults cells
// except through the public mutation entry points.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dnpoly/cells.hpp"
#include "dnpoly/polygon.hpp"

namespace dnpoly {

enum class ArContext { Derived, Cluster, Module };
enum class Sign : std::uint8_t { None, Plus, Minus };

inline Sign flip(Sign s) {
  return s == Sign::Plus ? Sign::Minus : (s == Sign::Minus ? Sign::Plus : Sign::None);
}

struct ArVertex {
  int i = 0;
  int j = 0;
  Sign sign = Sign::None;

  static ArVertex plain(int i, int j) { return ArVertex{i, j, Sign::None}; }
  static ArVertex diameter(int i, int n, Sign s) { return ArVertex{i, i + n, s}; }

  bool is_signed() const { return sign != Sign::None; }
  /// "[0,4]+", "[1,3]".
  std::string to_string() const;

  friend auto operator<=>(const ArVertex&, const ArVertex&) = default;
};

/// Parses the to_string form; throws std::invalid_argument.
ArVertex parse_ar_vertex(const std::string& text);

/// Coordinate constraints: i+2 <= j <= i+n-1 for plain vertices, j = i+n with
/// a sign otherwise; first coordinate in [0,n-1] (cluster) or [0,n-2] (module).
bool is_valid(Rank rank, const ArVertex& v, ArContext ctx);

using FrameSet = std::set<ArVertex>;

/// b: AR(C_{D_n})_0 -> arc elements. Throws for vertices outside the cluster region.
ArcElement b_map(Rank rank, const ArVertex& v);
ArVertex b_inv(Rank rank, const ArcElement& e);

/// The vertex of mod kD_n inducing e, if e is not a shifted projective.
std::optional<ArVertex> module_vertex(Rank rank, const ArcElement& e);

/// tau^{-1} Sigma on the derived category, and its inverse.
ArVertex tau_inv_sigma(Rank rank, const ArVertex& v);
ArVertex sigma_inv_tau(Rank rank, const ArVertex& v);
/// The shift Sigma = tau o (tau^{-1} Sigma) on the derived category.
ArVertex sigma(Rank rank, const ArVertex& v);
/// Representative of the tau^{-1}Sigma-orbit with first coordinate in [0,n-1].
ArVertex to_cluster(Rank rank, const ArVertex& v);

FrameSet starting_frame(Rank rank, const ArVertex& v);
FrameSet ending_frame(Rank rank, const ArVertex& v);

/// Middle term of the non-split extension 0 -> M_target -> E -> M_source -> 0,
/// i.e. F_s(target) cap F_e(source). Throws unless b(source), b(target) cross once.
FrameSet middle_term(Rank rank, const ArVertex& source, const ArVertex& target);

/// x -> summands -> mu_D^-(x) -> Sigma x. A nullopt summand is the zero object
/// contributed by an edge side.
struct MutationTriangle {
  ArcElement first;
  std::vector<std::optional<ArcElement>> summands;
  ArcElement third;
};

/// Throws std::invalid_argument unless e is in nc(D)\D.
MutationTriangle mutation_triangle(const CellDecomposition& cells, const ArcElement& e);
MutationTriangle mutation_triangle(const Diagram& d, const ArcElement& e);

/// Frame-side middle term of the same triangle, computed after shifting so that
/// e comes from a projective module. nullopt when the shifted third term is a
/// shifted projective (no module short exact sequence).
std::optional<std::vector<ArcElement>> frame_middle_term(const CellDecomposition& cells,
                                                         const ArcElement& e);

}  // namespace dnpoly

#endif  // DNPOLY_AR_BRIDGE_HPP
