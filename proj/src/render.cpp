#include "hpfold/render.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <map>
#include <vector>

namespace hpfold::render {

namespace {

constexpr double kSqrt3Half = 0.8660254037844386;

struct Xy {
    double x, y;
};

Xy to_cartesian(Point p) { return {p.u + p.v / 2.0, p.v * kSqrt3Half}; }

std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    return buf;
}

} // namespace

std::string to_svg(const HpSequence& seq, const Conformation& conf) {
    const int n = conf.n();
    const double scale = 40.0;
    const double margin = 30.0;

    double minx = 0, maxx = 0, miny = 0, maxy = 0;
    std::vector<Xy> pts(static_cast<std::size_t>(n));
    for (int k = 0; k < n; ++k) {
        pts[static_cast<std::size_t>(k)] = to_cartesian(conf.points[static_cast<std::size_t>(k)]);
        minx = std::min(minx, pts[static_cast<std::size_t>(k)].x);
        maxx = std::max(maxx, pts[static_cast<std::size_t>(k)].x);
        miny = std::min(miny, pts[static_cast<std::size_t>(k)].y);
        maxy = std::max(maxy, pts[static_cast<std::size_t>(k)].y);
    }
    const double w = (maxx - minx) * scale + 2 * margin;
    const double h = (maxy - miny) * scale + 2 * margin;
    // y grows upward on the lattice, downward in SVG
    const auto sx = [&](double x) { return (x - minx) * scale + margin; };
    const auto sy = [&](double y) { return (maxy - y) * scale + margin; };

    std::string svg;
    svg += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    svg += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(w) + "\" height=\"" + num(h) +
           "\" viewBox=\"0 0 " + num(w) + " " + num(h) + "\">\n";

    for (const auto& [i, j] : hh_contacts(seq, conf)) {
        const Xy a = pts[static_cast<std::size_t>(i - 1)];
        const Xy b = pts[static_cast<std::size_t>(j - 1)];
        svg += "  <line class=\"contact\" x1=\"" + num(sx(a.x)) + "\" y1=\"" + num(sy(a.y)) +
               "\" x2=\"" + num(sx(b.x)) + "\" y2=\"" + num(sy(b.y)) +
               "\" stroke=\"#888888\" stroke-width=\"2\" stroke-dasharray=\"6,4\"/>\n";
    }

    for (int k = 0; k + 1 < n; ++k) {
        const Xy a = pts[static_cast<std::size_t>(k)];
        const Xy b = pts[static_cast<std::size_t>(k + 1)];
        svg += "  <line class=\"backbone\" x1=\"" + num(sx(a.x)) + "\" y1=\"" + num(sy(a.y)) +
               "\" x2=\"" + num(sx(b.x)) + "\" y2=\"" + num(sy(b.y)) +
               "\" stroke=\"#1f4e9c\" stroke-width=\"3\"/>\n";
    }

    for (int k = 0; k < n; ++k) {
        const Xy a = pts[static_cast<std::size_t>(k)];
        const char* fill = seq.is_h(static_cast<std::size_t>(k)) ? "#d62728" : "#2ca02c";
        svg += "  <circle cx=\"" + num(sx(a.x)) + "\" cy=\"" + num(sy(a.y)) +
               "\" r=\"9\" fill=\"" + std::string(fill) + "\" stroke=\"#222222\"/>\n";
        svg += "  <text x=\"" + num(sx(a.x)) + "\" y=\"" + num(sy(a.y) - 12) +
               "\" font-size=\"10\" text-anchor=\"middle\">" + std::to_string(k + 1) + "</text>\n";
    }

    svg += "</svg>\n";
    return svg;
}

std::string to_ascii(const HpSequence& seq, const Conformation& conf) {
    const int n = conf.n();
    // Half-column grid keeps the 60-degree geometry legible: column = 2u + v.
    std::map<std::pair<int, int>, int> at; // (row, col) -> rank0
    int minr = std::numeric_limits<int>::max(), maxr = std::numeric_limits<int>::min();
    int minc = minr, maxc = maxr;
    for (int k = 0; k < n; ++k) {
        const Point p = conf.points[static_cast<std::size_t>(k)];
        const int row = -p.v;
        const int col = 2 * p.u + p.v;
        at[{row, col}] = k;
        minr = std::min(minr, row);
        maxr = std::max(maxr, row);
        minc = std::min(minc, col);
        maxc = std::max(maxc, col);
    }
    std::string out;
    for (int r = minr; r <= maxr; ++r) {
        std::string line;
        for (int c = minc; c <= maxc; ++c) {
            const auto it = at.find({r, c});
            line += it == at.end() ? '.' : (seq.is_h(static_cast<std::size_t>(it->second)) ? 'H' : 'P');
            line += ' ';
        }
        while (!line.empty() && line.back() == ' ') line.pop_back();
        out += line;
        out += '\n';
    }
    out += "ranks:";
    for (int k = 0; k < n; ++k) {
        const Point p = conf.points[static_cast<std::size_t>(k)];
        out += " " + std::to_string(k + 1) + "@(" + std::to_string(p.u) + "," + std::to_string(p.v) + ")";
    }
    out += '\n';
    return out;
}

} // namespace hpfold::render
