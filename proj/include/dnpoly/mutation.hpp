#ifndef DNPOLY_MUTATION_HPP
#define DNPOLY_MUTATION_HPP

#include "dnpoly/cells.hpp"
#include "dnpoly/polygon.hpp"

namespace dnpoly {

/// Plus rotates every cell diagonal one step anticlockwise (mu_D), Minus one
/// step clockwise (mu_D^-).
enum class Direction { Plus, Minus };

inline Direction reverse(Direction d) { return d == Direction::Plus ? Direction::Minus : Direction::Plus; }
const char* to_string(Direction d);

ArcElement mutate_element(const CellDecomposition& cells, const ArcElement& e, Direction dir);
ArcElement mutate_element(const Diagram& d, const ArcElement& e, Direction dir);

/// Element-wise image. Throws std::invalid_argument unless x is a subset of nc(D).
Diagram mutate_diagram(const CellDecomposition& cells, const Diagram& x, Direction dir);
Diagram mutate_diagram(const Diagram& d, const Diagram& x, Direction dir);

/// D <= x2 <= mu_D^-(x) and D <= x <= mu_D(x2).
bool is_mutation_pair(const Diagram& d, const Diagram& x, const Diagram& x2);

/// The suspension: vertices shifted by -1, diameter colours swapped.
ArcElement shift(const ArcElement& e);
/// Inverse of shift.
ArcElement unshift(const ArcElement& e);

}  // namespace dnpoly

#endif  // DNPOLY_MUTATION_HPP
