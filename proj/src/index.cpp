#include "dnpoly/index.hpp"

#include <stdexcept>

namespace dnpoly {

DiagramIndex::DiagramIndex(Rank rank) : rank_(rank), alphabet_(full_alphabet(rank)) {
  if (rank.n() > kMaxRank)
    throw std::invalid_argument("bitmask index supports n <= 8, got n = " +
                                std::to_string(rank.n()));
  const int m = size();
  full_ = m == 64 ? ~Mask{0} : ((Mask{1} << m) - 1);
  cross_.assign(static_cast<std::size_t>(m), 0);
  counts_.assign(static_cast<std::size_t>(m * m), 0);
  for (int p = 0; p < m; ++p) {
    position_.emplace(alphabet_[static_cast<std::size_t>(p)], p);
    for (int q = 0; q < m; ++q) {
      const int c = dnpoly::crossing_count(element(p), element(q));
      counts_[static_cast<std::size_t>(p * m + q)] = c;
      if (c != 0) cross_[static_cast<std::size_t>(p)] |= Mask{1} << q;
    }
  }
}

int DiagramIndex::index_of(const ArcElement& e) const {
  const auto it = position_.find(e);
  if (it == position_.end()) throw std::invalid_argument("element not in alphabet: " + e.to_string());
  return it->second;
}

Mask DiagramIndex::to_mask(const Diagram& d) const {
  if (d.rank() != rank_) throw std::invalid_argument("diagram rank does not match index");
  Mask m = 0;
  for (const auto& e : d) m |= Mask{1} << index_of(e);
  return m;
}

Diagram DiagramIndex::to_diagram(Mask m) const {
  Diagram d(rank_);
  for_each_bit(m, [&](int p) { d.insert(element(p)); });
  return d;
}

}  // namespace dnpoly
