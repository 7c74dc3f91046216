#ifndef DNPOLY_INDEX_HPP
#define DNPOLY_INDEX_HPP

#include <bit>
#include <cstdint>
#include <map>
#include <vector>

#include "dnpoly/polygon.hpp"

namespace dnpoly {

using Mask = std::uint64_t;

/// Fixed total order on the alphabet of one rank, diagrams as bitmasks of
/// width n^2 (so n <= 8). Bit p stands for alphabet()[p].
class DiagramIndex {
 public:
  static constexpr int kMaxRank = 8;

  explicit DiagramIndex(Rank rank);

  Rank rank() const { return rank_; }
  int size() const { return static_cast<int>(alphabet_.size()); }
  const std::vector<ArcElement>& alphabet() const { return alphabet_; }
  const ArcElement& element(int p) const { return alphabet_[static_cast<std::size_t>(p)]; }
  int index_of(const ArcElement& e) const;

  Mask full() const { return full_; }
  Mask crossing(int p) const { return cross_[static_cast<std::size_t>(p)]; }
  int crossing_count(int p, int q) const {
    return counts_[static_cast<std::size_t>(p * size() + q)];
  }

  Mask to_mask(const Diagram& d) const;
  Diagram to_diagram(Mask m) const;

  Mask nc(Mask m) const {
    Mask out = full_;
    while (m != 0) {
      out &= ~cross_[static_cast<std::size_t>(std::countr_zero(m))];
      m &= m - 1;
    }
    return out;
  }
  bool is_torsion_part(Mask m) const { return nc(nc(m)) == m; }
  bool is_noncrossing(Mask m) const {
    for (Mask rest = m; rest != 0; rest &= rest - 1)
      if ((cross_[static_cast<std::size_t>(std::countr_zero(rest))] & m) != 0) return false;
    return true;
  }

 private:
  Rank rank_;
  std::vector<ArcElement> alphabet_;
  std::map<ArcElement, int> position_;
  std::vector<Mask> cross_;
  std::vector<int> counts_;
  Mask full_ = 0;
};

template <typename F>
void for_each_bit(Mask m, F&& f) {
  while (m != 0) {
    f(std::countr_zero(m));
    m &= m - 1;
  }
}

}  // namespace dnpoly

#endif  // DNPOLY_INDEX_HPP
