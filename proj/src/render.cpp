#include "dnpoly/render.hpp"

#include <cmath>
#include <cstdio>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include "dnpoly/cells.hpp"

namespace dnpoly {

namespace {

struct Point {
  double x;
  double y;
};

// Two decimals, never "-0.00".
std::string num(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", v);
  std::string s(buf);
  if (s == "-0.00") s = "0.00";
  return s;
}

class Canvas {
 public:
  Canvas(Rank rank, int size) : rank_(rank), size_(size), radius_(size * 0.40), centre_(size / 2.0) {}

  // Vertex 0 at the bottom, labels increasing anticlockwise on screen.
  Point vertex(int k) const {
    const double t = -std::numbers::pi / 2 + std::numbers::pi * k / rank_.n();
    return Point{centre_ + radius_ * std::cos(t), centre_ - radius_ * std::sin(t)};
  }
  Point label(int k) const {
    const double t = -std::numbers::pi / 2 + std::numbers::pi * k / rank_.n();
    const double r = radius_ + size_ * 0.05;
    return Point{centre_ + r * std::cos(t), centre_ - r * std::sin(t)};
  }
  Point at(CellVertex v) const { return v.is_center() ? Point{centre_, centre_} : vertex(v.boundary()); }
  int size() const { return size_; }

 private:
  Rank rank_;
  int size_;
  double radius_;
  double centre_;
};

const char* kShades[] = {"#f9e79f", "#aed6f1", "#f5b7b1", "#a9dfbf", "#d7bde2", "#fad7a0", "#a3e4d7", "#d5dbdb"};

void line(std::ostringstream& os, Point a, Point b, const std::string& stroke, double width) {
  os << "  <line x1=\"" << num(a.x) << "\" y1=\"" << num(a.y) << "\" x2=\"" << num(b.x) << "\" y2=\""
     << num(b.y) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << num(width)
     << "\" stroke-linecap=\"round\"/>\n";
}

void zigzag(std::ostringstream& os, Point a, Point b, const RenderStyle& style, int size, double width) {
  const double dx = b.x - a.x;
  const double dy = b.y - a.y;
  const double len = std::hypot(dx, dy);
  const double nx = -dy / len;
  const double ny = dx / len;
  const double amp = style.zigzag_amplitude * size;
  os << "  <polyline fill=\"none\" stroke=\"" << style.green_stroke << "\" stroke-width=\"" << num(width)
     << "\" stroke-linejoin=\"round\" points=\"";
  const int steps = 2 * style.zigzag_teeth;
  for (int s = 0; s <= steps; ++s) {
    const double t = static_cast<double>(s) / steps;
    const double off = (s == 0 || s == steps) ? 0.0 : (s % 2 == 1 ? amp : -amp);
    if (s != 0) os << ' ';
    os << num(a.x + t * dx + off * nx) << ',' << num(a.y + t * dy + off * ny);
  }
  os << "\"/>\n";
}

void element(std::ostringstream& os, const Canvas& cv, const ArcElement& e, const RenderStyle& style,
             bool thick) {
  const double w = thick ? style.thick : style.thin;
  for (const Arc& arc : e.arcs()) {
    const Point a = cv.vertex(arc.u);
    const Point b = cv.vertex(arc.v);
    if (e.is_pair()) {
      line(os, a, b, style.pair_stroke, w);
    } else if (e.color() == Color::Red) {
      line(os, a, b, style.red_stroke, w);
    } else {
      zigzag(os, a, b, style, cv.size(), w);
    }
  }
}

}  // namespace

std::string render_svg(const RenderSpec& spec) {
  const Rank rank = spec.diagram.rank();
  if (spec.highlight && spec.highlight->rank() != rank)
    throw std::invalid_argument("render: highlight has a different rank");
  if (spec.size < 64) throw std::invalid_argument("render: canvas smaller than 64 pixels");
  const Canvas cv(rank, spec.size);
  const RenderStyle& style = spec.style;
  const Diagram highlight = spec.highlight.value_or(Diagram(rank));

  std::ostringstream os;
  os << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
     << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << spec.size << "\" height=\"" << spec.size
     << "\" viewBox=\"0 0 " << spec.size << ' ' << spec.size << "\">\n"
     << "  <rect width=\"100%\" height=\"100%\" fill=\"#ffffff\"/>\n";

  if (spec.shade_cells) {
    const CellDecomposition cells(highlight);
    std::size_t colour = 0;
    for (const CellPair& pair : cells.pairs()) {
      const char* fill = kShades[colour++ % std::size(kShades)];
      for (int m = 0; m < (pair.invariant() ? 1 : 2); ++m) {
        os << "  <polygon fill=\"" << fill << "\" fill-opacity=\"0.6\" stroke=\"none\" points=\"";
        bool first = true;
        for (CellVertex v : pair.member(m)) {
          const Point p = cv.at(v);
          os << (first ? "" : " ") << num(p.x) << ',' << num(p.y);
          first = false;
        }
        os << "\"/>\n";
      }
    }
  }

  os << "  <polygon fill=\"none\" stroke=\"" << style.outline_stroke << "\" stroke-width=\"1\" points=\"";
  for (int k = 0; k < rank.vertices(); ++k) {
    const Point p = cv.vertex(k);
    os << (k == 0 ? "" : " ") << num(p.x) << ',' << num(p.y);
  }
  os << "\"/>\n";

  for (const auto& e : spec.diagram)
    if (!highlight.contains(e)) element(os, cv, e, style, false);
  for (const auto& e : highlight) element(os, cv, e, style, true);

  for (int k = 0; k < rank.vertices(); ++k) {
    const Point p = cv.vertex(k);
    const Point l = cv.label(k);
    os << "  <circle cx=\"" << num(p.x) << "\" cy=\"" << num(p.y) << "\" r=\"3\" fill=\"#000000\"/>\n"
       << "  <text x=\"" << num(l.x) << "\" y=\"" << num(l.y)
       << "\" font-family=\"sans-serif\" font-size=\"14\" text-anchor=\"middle\" dominant-baseline=\"middle\">"
       << k << "</text>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dnpoly
