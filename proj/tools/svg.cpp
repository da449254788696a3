#include "fullerene/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

namespace fullerene {

FlatPentagon flat_pentagon(const std::vector<double>& lengths, const std::vector<double>& angles) {
    const std::size_t n = lengths.size();
    if (n < 3 || angles.size() != n) throw std::invalid_argument("flat_pentagon: need matching lengths and angles");
    std::vector<std::array<double, 2>> edges(n);
    double heading = 0.0;
    double gx = 0, gy = 0;
    for (std::size_t i = 0; i < n; ++i) {
        edges[i] = {lengths[i] * std::cos(heading), lengths[i] * std::sin(heading)};
        gx += edges[i][0];
        gy += edges[i][1];
        // Exterior turn at the far end of edge i.
        heading += (180.0 - angles[(i + 1) % n]) * std::numbers::pi / 180.0;
    }
    FlatPentagon out;
    out.closure_gap = std::hypot(gx, gy);
    // The smallest change of the edge vectors (in the least-squares sense)
    // that closes the walk removes gap / n from each of them.
    double x = 0, y = 0;
    for (std::size_t i = 0; i < n; ++i) {
        out.vertices.push_back({x, y});
        x += edges[i][0] - gx / static_cast<double>(n);
        y += edges[i][1] - gy / static_cast<double>(n);
    }
    return out;
}

namespace {

std::string num(double v, int digits = 2) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.*f", digits, v);
    return buf;
}

}  // namespace

std::string render_svg(const FaceGeometryReport& report) {
    const std::size_t n = report.lengths.size();
    if (n < 3 || report.angles.size() != n || report.labels.size() != n) {
        throw std::invalid_argument("render_svg: incomplete report");
    }
    FlatPentagon flat = flat_pentagon(report.lengths, report.angles);

    double minx = 1e300, miny = 1e300, maxx = -1e300, maxy = -1e300;
    for (const auto& v : flat.vertices) {
        minx = std::min(minx, v[0]);
        maxx = std::max(maxx, v[0]);
        miny = std::min(miny, v[1]);
        maxy = std::max(maxy, v[1]);
    }
    const double size = 400, margin = 60;
    const double scale = (size - 2 * margin) / std::max(maxx - minx, maxy - miny);
    double cx = 0, cy = 0;
    std::vector<std::array<double, 2>> pts;
    for (const auto& v : flat.vertices) {
        // SVG y grows downwards.
        pts.push_back({margin + (v[0] - minx) * scale, size - margin - (v[1] - miny) * scale});
        cx += pts.back()[0] / static_cast<double>(n);
        cy += pts.back()[1] / static_cast<double>(n);
    }

    std::ostringstream s;
    s << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << size << "\" height=\"" << size
      << "\" viewBox=\"0 0 " << size << " " << size << "\">\n"
      << "<desc>Flat approximation of a non-planar pentagonal face: chord lengths and 3D interior angles, "
         "closure gap " << num(flat.closure_gap, 6) << " spread evenly over the edges.</desc>\n"
      << "<polygon fill=\"#f4f0e0\" stroke=\"black\" stroke-width=\"2\" points=\"";
    for (std::size_t i = 0; i < n; ++i) s << (i ? " " : "") << num(pts[i][0]) << "," << num(pts[i][1]);
    s << "\"/>\n";
    s << "<g font-family=\"sans-serif\" font-size=\"13\" text-anchor=\"middle\">\n";
    auto outward = [&](double x, double y, double d) {
        const double dx = x - cx, dy = y - cy;
        const double len = std::max(std::hypot(dx, dy), 1e-9);
        return std::array<double, 2>{x + dx / len * d, y + dy / len * d};
    };
    for (std::size_t i = 0; i < n; ++i) {
        const auto l = outward(pts[i][0], pts[i][1], 22);
        s << "<text x=\"" << num(l[0]) << "\" y=\"" << num(l[1]) << "\">A" << report.labels[i] << "</text>\n";
        const auto a = outward(pts[i][0], pts[i][1], -26);
        s << "<text x=\"" << num(a[0]) << "\" y=\"" << num(a[1]) << "\" fill=\"#804000\">"
          << num(report.angles[i], 1) << "°</text>\n";
        const std::size_t j = (i + 1) % n;
        const auto m = outward((pts[i][0] + pts[j][0]) / 2, (pts[i][1] + pts[j][1]) / 2, 16);
        s << "<text x=\"" << num(m[0]) << "\" y=\"" << num(m[1]) << "\" fill=\"#204080\">"
          << num(report.lengths[i], 3) << "</text>\n";
    }
    s << "</g>\n</svg>\n";
    return s.str();
}

void emit_svg(const FaceGeometryReport& report, const std::string& path) {
    const std::string svg = render_svg(report);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << svg;
    if (!out) throw std::runtime_error("write to '" + path + "' failed");
}

}  // namespace fullerene
