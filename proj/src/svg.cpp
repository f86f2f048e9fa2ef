#include <cmath>
#include <numbers>
#include <sstream>

#include "cat3/io.hpp"

namespace cat3 {

namespace {

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '&': out += "&amp;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

}  // namespace

std::string export_disk_svg(const SimplicialComplex& k, const DiskDiagram& d) {
  const DiskValidation v = validate_disk(d, &k);
  if (!v.nonsingular) throw Error(Errc::SingularDisk, "only nonsingular disks can be drawn");

  constexpr double size = 400.0, center = size / 2, radius = 160.0;
  const std::size_t n = d.vertex_count();
  std::vector<double> x(n, center), y(n, center);
  std::vector<bool> fixed(n, false);
  const auto& walk = d.boundary();
  for (std::size_t i = 0; i < walk.size(); ++i) {
    // Clockwise on screen: y grows downward.
    const double angle = -std::numbers::pi / 2 + 2 * std::numbers::pi * static_cast<double>(i) / static_cast<double>(walk.size());
    const auto u = static_cast<std::size_t>(walk[i]);
    x[u] = center + radius * std::cos(angle);
    y[u] = center + radius * std::sin(angle);
    fixed[u] = true;
  }
  std::vector<std::vector<DiskVertex>> nbrs(n);
  for (const auto& [a, b] : d.edges()) {
    nbrs[static_cast<std::size_t>(a)].push_back(b);
    nbrs[static_cast<std::size_t>(b)].push_back(a);
  }
  // Tutte: each interior vertex at the barycenter of its neighbours.
  for (int iter = 0; iter < 10000; ++iter) {
    double moved = 0.0;
    for (std::size_t u = 0; u < n; ++u) {
      if (fixed[u] || nbrs[u].empty()) continue;
      double sx = 0.0, sy = 0.0;
      for (DiskVertex w : nbrs[u]) {
        sx += x[static_cast<std::size_t>(w)];
        sy += y[static_cast<std::size_t>(w)];
      }
      const double nx = sx / static_cast<double>(nbrs[u].size()), ny = sy / static_cast<double>(nbrs[u].size());
      moved = std::max(moved, std::abs(nx - x[u]) + std::abs(ny - y[u]));
      x[u] = nx;
      y[u] = ny;
    }
    if (moved < 1e-9) break;
  }

  std::ostringstream out;
  out.setf(std::ios::fixed);
  out.precision(2);
  auto pt = [&](DiskVertex u) -> std::string {
    std::ostringstream s;
    s.setf(std::ios::fixed);
    s.precision(2);
    s << x[static_cast<std::size_t>(u)] << ',' << y[static_cast<std::size_t>(u)];
    return s.str();
  };
  out << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
      << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << ' ' << size << "\">\n";
  out << "<g class=\"faces\" fill=\"#dde8f4\" stroke=\"#5b7a99\" stroke-width=\"1\">\n";
  for (const auto& t : d.triangles())
    out << "<polygon points=\"" << pt(t[0]) << ' ' << pt(t[1]) << ' ' << pt(t[2]) << "\"/>\n";
  out << "</g>\n<polygon class=\"boundary\" fill=\"none\" stroke=\"#c0392b\" stroke-width=\"3\" points=\"";
  for (std::size_t i = 0; i < walk.size(); ++i) out << (i ? " " : "") << pt(walk[i]);
  out << "\"/>\n<g class=\"vertices\" font-family=\"sans-serif\" font-size=\"12\">\n";
  for (std::size_t u = 0; u < n; ++u) {
    const auto id = static_cast<DiskVertex>(u);
    out << "<circle cx=\"" << x[u] << "\" cy=\"" << y[u] << "\" r=\"4\" fill=\""
        << (fixed[u] ? "#c0392b" : "#2c3e50") << "\"/>\n";
    out << "<text x=\"" << x[u] + 6 << "\" y=\"" << y[u] - 6 << "\">" << escape(k.name(d.label(id))) << "</text>\n";
  }
  out << "</g>\n</svg>\n";
  return out.str();
}

}  // namespace cat3
