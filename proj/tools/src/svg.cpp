#include "svg.hpp"

#include <cmath>
#include <iomanip>
#include <set>
#include <sstream>

#include "cprk/model.hpp"

namespace cprk::tool {
namespace {

constexpr double kCanvas = 600.0;
constexpr double kCenter = 300.0;
constexpr double kRadius = 240.0;
constexpr double kPi = 3.14159265358979323846;

struct Point {
  double x;
  double y;
};

/// Position index around the circle to canvas coordinates; the first position
/// sits at the top and the rest follow clockwise.
Point at_position(double position, double total, double radius) {
  const double angle = 2.0 * kPi * position / total - kPi / 2.0;
  return {kCenter + radius * std::cos(angle), kCenter + radius * std::sin(angle)};
}

}  // namespace

std::string render_svg(const CompleteBipartiteSpec& spec, const ArcProfile& witness,
                       std::int64_t K, std::int64_t crossings) {
  const CircularDrawing drawing = profile_to_drawing(spec, witness);
  const double total = static_cast<double>(drawing.order.size());

  std::ostringstream out;
  out << std::fixed << std::setprecision(2);
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\""
      << kCanvas << "\" height=\"" << kCanvas << "\" viewBox=\"0 0 " << kCanvas
      << " " << kCanvas << "\">\n";
  out << "  <text x=\"" << kCenter << "\" y=\"30\" text-anchor=\"middle\" "
         "font-family=\"sans-serif\" font-size=\"16\">K_{"
      << spec.m << "," << spec.n << "}, K=" << K << " arcs, " << crossings
      << " crossings</text>\n";
  out << "  <circle cx=\"" << kCenter << "\" cy=\"" << kCenter << "\" r=\""
      << kRadius << "\" fill=\"none\" stroke=\"#cccccc\" stroke-width=\"1\"/>\n";

  // Arc boundaries as tick marks, halfway between neighboring positions.
  // Consecutive empty arcs share a boundary; draw it once.
  std::set<std::int32_t> tick_positions;
  for (const ArcSegment& arc : drawing.arcs) tick_positions.insert(arc.first);
  for (const std::int32_t first : tick_positions) {
    const Point inner = at_position(first - 0.5, total, kRadius - 12.0);
    const Point outer = at_position(first - 0.5, total, kRadius + 12.0);
    out << "  <path d=\"M " << inner.x << " " << inner.y << " L " << outer.x
        << " " << outer.y << "\" stroke=\"#999999\" stroke-width=\"2\"/>\n";
  }

  // Chords: one <line> per edge of K_{m,n}.
  std::vector<Point> position_of(drawing.order.size());
  for (std::size_t pos = 0; pos < drawing.order.size(); ++pos) {
    position_of[static_cast<std::size_t>(drawing.order[pos].id)] =
        at_position(static_cast<double>(pos), total, kRadius);
  }
  for (std::int64_t u = 0; u < spec.m; ++u) {
    for (std::int64_t v = spec.m; v < spec.m + spec.n; ++v) {
      const Point a = position_of[static_cast<std::size_t>(u)];
      const Point b = position_of[static_cast<std::size_t>(v)];
      out << "  <line x1=\"" << a.x << "\" y1=\"" << a.y << "\" x2=\"" << b.x
          << "\" y2=\"" << b.y
          << "\" stroke=\"#3366aa\" stroke-width=\"1\" stroke-opacity=\"0.65\"/>\n";
    }
  }

  for (const Vertex& vertex : drawing.order) {
    const Point c = position_of[static_cast<std::size_t>(vertex.id)];
    out << "  <circle cx=\"" << c.x << "\" cy=\"" << c.y << "\" r=\"6\" fill=\""
        << (vertex.color == Color::Pink ? "#e75480" : "#222222")
        << "\" stroke=\"#ffffff\" stroke-width=\"1.5\"/>\n";
  }
  out << "</svg>\n";
  return out.str();
}

}  // namespace cprk::tool
