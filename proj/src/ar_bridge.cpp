#include "dnpoly/ar_bridge.hpp"

#include <algorithm>
#include <regex>
#include <stdexcept>

#include "dnpoly/mutation.hpp"

namespace dnpoly {

std::string ArVertex::to_string() const {
  std::string s = "[" + std::to_string(i) + "," + std::to_string(j) + "]";
  if (sign == Sign::Plus) s += "+";
  if (sign == Sign::Minus) s += "-";
  return s;
}

ArVertex parse_ar_vertex(const std::string& text) {
  static const std::regex pattern(R"(\s*\[\s*(-?\d+)\s*,\s*(-?\d+)\s*\]\s*([+-]?)\s*)");
  std::smatch m;
  if (!std::regex_match(text, m, pattern)) throw std::invalid_argument("malformed AR vertex: " + text);
  ArVertex v{std::stoi(m[1]), std::stoi(m[2]), Sign::None};
  if (m[3] == "+") v.sign = Sign::Plus;
  if (m[3] == "-") v.sign = Sign::Minus;
  return v;
}

bool is_valid(Rank rank, const ArVertex& v, ArContext ctx) {
  const int n = rank.n();
  const bool shape = v.is_signed() ? v.j == v.i + n : (v.i + 2 <= v.j && v.j <= v.i + n - 1);
  if (!shape) return false;
  switch (ctx) {
    case ArContext::Derived: return true;
    case ArContext::Cluster: return 0 <= v.i && v.i <= n - 1;
    case ArContext::Module: return 0 <= v.i && v.i <= n - 2;
  }
  return false;
}

ArcElement b_map(Rank rank, const ArVertex& v) {
  if (!is_valid(rank, v, ArContext::Cluster))
    throw std::invalid_argument("b_map: not a cluster-category vertex: " + v.to_string());
  if (!v.is_signed()) return ArcElement::pair(rank, v.i, v.j);
  const bool even = v.i % 2 == 0;
  const bool plus = v.sign == Sign::Plus;
  const Color c = (even == plus) ? Color::Green : Color::Red;
  return ArcElement::diameter(rank, v.i, c);
}

ArVertex b_inv(Rank rank, const ArcElement& e) {
  const int n = rank.n();
  if (e.is_diameter()) {
    const bool even = e.a() % 2 == 0;
    const bool green = e.color() == Color::Green;
    return ArVertex::diameter(e.a(), n, even == green ? Sign::Plus : Sign::Minus);
  }
  // The chord start from which the other end is fewer than n steps anticlockwise.
  for (const Arc& arc : e.arcs()) {
    for (const auto& [s, t] : {std::pair{arc.u, arc.v}, std::pair{arc.v, arc.u}}) {
      const int len = rank.mod(t - s);
      if (s < n && len < n) return ArVertex::plain(s, s + len);
    }
  }
  throw std::logic_error("b_inv: no representative in the cluster region");
}

std::optional<ArVertex> module_vertex(Rank rank, const ArcElement& e) {
  const ArVertex v = b_inv(rank, e);
  if (is_valid(rank, v, ArContext::Module)) return v;
  return std::nullopt;
}

ArVertex tau_inv_sigma(Rank rank, const ArVertex& v) {
  const int n = rank.n();
  ArVertex out{v.i + n, v.j + n, v.sign};
  if (v.is_signed() && n % 2 == 1) out.sign = flip(v.sign);
  return out;
}

ArVertex sigma_inv_tau(Rank rank, const ArVertex& v) {
  const int n = rank.n();
  ArVertex out{v.i - n, v.j - n, v.sign};
  if (v.is_signed() && n % 2 == 1) out.sign = flip(v.sign);
  return out;
}

ArVertex sigma(Rank rank, const ArVertex& v) {
  ArVertex out = tau_inv_sigma(rank, v);
  out.i -= 1;
  out.j -= 1;
  return out;
}

ArVertex to_cluster(Rank rank, const ArVertex& v) {
  const int n = rank.n();
  ArVertex out = v;
  while (out.i < 0) out = tau_inv_sigma(rank, out);
  while (out.i > n - 1) out = sigma_inv_tau(rank, out);
  return out;
}

namespace {

void add_if_module(Rank rank, FrameSet& out, const ArVertex& v) {
  if (is_valid(rank, v, ArContext::Module)) out.insert(v);
}

void require_module(Rank rank, const ArVertex& v) {
  if (!is_valid(rank, v, ArContext::Module))
    throw std::invalid_argument("frame: vertex outside mod kD_n: " + v.to_string());
}

}  // namespace

FrameSet starting_frame(Rank rank, const ArVertex& v) {
  require_module(rank, v);
  const int n = rank.n();
  const int i = v.i;
  const int j = v.j;
  FrameSet out;
  if (!v.is_signed()) {
    for (int k = j; k <= i + n - 1; ++k) add_if_module(rank, out, ArVertex::plain(i, k));
    add_if_module(rank, out, ArVertex::diameter(i, n, Sign::Plus));
    add_if_module(rank, out, ArVertex::diameter(i, n, Sign::Minus));
    for (int k = i; k <= j - 2; ++k) add_if_module(rank, out, ArVertex::plain(k, j));
    for (int k = j; k <= i + n - 2; ++k) add_if_module(rank, out, ArVertex::plain(k, i + n));
    return out;
  }
  for (int k = i + 1; k <= i + n - 2; ++k) add_if_module(rank, out, ArVertex::plain(k, i + n));
  for (int k = i; k <= n - 2; ++k)
    add_if_module(rank, out, ArVertex::diameter(k, n, (k - i) % 2 == 0 ? v.sign : flip(v.sign)));
  return out;
}

FrameSet ending_frame(Rank rank, const ArVertex& v) {
  require_module(rank, v);
  const int n = rank.n();
  const int i = v.i;
  const int j = v.j;
  FrameSet out;
  if (!v.is_signed()) {
    for (int k = i + 2; k <= j; ++k) add_if_module(rank, out, ArVertex::plain(i, k));
    for (int k = j - n + 1; k <= i; ++k) add_if_module(rank, out, ArVertex::plain(k, j));
    add_if_module(rank, out, ArVertex::diameter(j - n, n, Sign::Plus));
    add_if_module(rank, out, ArVertex::diameter(j - n, n, Sign::Minus));
    for (int k = j - n + 2; k <= i; ++k) add_if_module(rank, out, ArVertex::plain(j - n, k));
    return out;
  }
  for (int k = i + 2; k < i + n; ++k) add_if_module(rank, out, ArVertex::plain(i, k));
  for (int k = 0; k <= i; ++k)
    add_if_module(rank, out, ArVertex::diameter(k, n, (i - k) % 2 == 0 ? v.sign : flip(v.sign)));
  return out;
}

FrameSet middle_term(Rank rank, const ArVertex& source, const ArVertex& target) {
  const int ext = crossing_count(b_map(rank, source), b_map(rank, target));
  if (ext != 1)
    throw std::invalid_argument("middle_term: Ext dimension is " + std::to_string(ext) + ", not 1");
  const FrameSet fs = starting_frame(rank, target);
  const FrameSet fe = ending_frame(rank, source);
  FrameSet out;
  std::set_intersection(fs.begin(), fs.end(), fe.begin(), fe.end(), std::inserter(out, out.end()));
  return out;
}

MutationTriangle mutation_triangle(const CellDecomposition& cells, const ArcElement& e) {
  const Located where = cells.locate(e);
  if (std::holds_alternative<InD>(where))
    throw std::invalid_argument("mutation_triangle: " + e.to_string() + " lies in D");
  const auto& loc = std::get<CellLocation>(where);
  const auto& sides = cells.pairs()[loc.pair].member_sides(loc.member);
  const int k = static_cast<int>(sides.size());

  MutationTriangle tri{e, {}, mutate_element(cells, e, Direction::Minus)};
  // Sides (d_{i-1}, d_i) and (d_{j-1}, d_j). A diameter mutated to a diameter
  // has a single indecomposable middle term: the radius side is dropped, and a
  // side repeated by the pi-rotation counts once.
  const Side& first = sides[static_cast<std::size_t>(((loc.i - 1) % k + k) % k)];
  const Side& second = sides[static_cast<std::size_t>(((loc.j - 1) % k + k) % k)];
  std::vector<const Side*> used{&first, &second};
  if (e.is_diameter() && tri.third.is_diameter()) {
    auto radius = [](const Side* s) {
      return !s->edge && s->elements.front().kind() == ReplacedElement::Kind::Radii;
    };
    std::erase_if(used, radius);
    if (used.size() == 2 && !first.edge && first.elements == second.elements) used.pop_back();
  }
  for (const Side* sp : used) {
    const Side& side = *sp;
    if (side.edge) {
      tri.summands.emplace_back(std::nullopt);
      continue;
    }
    for (const auto& r : side.elements) tri.summands.emplace_back(cells.replacement().invert(r));
  }
  return tri;
}

MutationTriangle mutation_triangle(const Diagram& d, const ArcElement& e) {
  return mutation_triangle(CellDecomposition(d), e);
}

std::optional<std::vector<ArcElement>> frame_middle_term(const CellDecomposition& cells,
                                                         const ArcElement& e) {
  const Rank rank = cells.rank();
  const ArcElement third = mutate_element(cells, e, Direction::Minus);
  const int steps = b_inv(rank, e).i;
  ArcElement x = e;
  ArcElement y = third;
  for (int s = 0; s < steps; ++s) {
    x = shift(x);
    y = shift(y);
  }
  const ArVertex source = b_inv(rank, y);
  const ArVertex target = b_inv(rank, x);
  if (target.i != 0) throw std::logic_error("frame_middle_term: shift did not reach a projective");
  if (!is_valid(rank, source, ArContext::Module)) return std::nullopt;

  std::vector<ArcElement> out;
  for (const ArVertex& v : middle_term(rank, source, target)) {
    ArcElement m = b_map(rank, v);
    for (int s = 0; s < steps; ++s) m = unshift(m);
    out.push_back(m);
  }
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace dnpoly
