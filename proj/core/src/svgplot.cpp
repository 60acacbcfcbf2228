#include "hatom/svgplot.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <stdexcept>

namespace hatom::io {

namespace {

std::string num(double v, const char* spec = "%.6g") {
    char buf[48];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

double nice_step(double range) {
    if (range <= 0.0) return 1.0;
    const double raw = range / 5.0;
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    const double r = raw / mag;
    double s = 10.0;
    if (r <= 1.0) s = 1.0;
    else if (r <= 2.0) s = 2.0;
    else if (r <= 5.0) s = 5.0;
    return s * mag;
}

const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                          "#ff7f0e", "#8c564b", "#17becf", "#7f7f7f"};

struct Frame {
    double x0, x1, y0, y1;      // data range
    double px0, px1, py0, py1;  // pixel box (py0 = top)
    double sx(double x) const { return px0 + (x - x0) / (x1 - x0) * (px1 - px0); }
    double sy(double y) const { return py1 - (y - y0) / (y1 - y0) * (py1 - py0); }
};

void axes(std::string& svg, const Frame& f, const std::string& x_label,
          const std::string& y_label, const std::string& title) {
    svg += "<rect x='" + num(f.px0) + "' y='" + num(f.py0) + "' width='" +
           num(f.px1 - f.px0) + "' height='" + num(f.py1 - f.py0) +
           "' fill='none' stroke='black' stroke-width='1'/>\n";
    const double xs = nice_step(f.x1 - f.x0);
    for (double t = std::ceil(f.x0 / xs) * xs; t <= f.x1 + 1e-12 * xs; t += xs) {
        const double px = f.sx(t);
        svg += "<line x1='" + num(px) + "' y1='" + num(f.py1) + "' x2='" + num(px) + "' y2='" +
               num(f.py1 + 5) + "' stroke='black'/>\n";
        svg += "<text x='" + num(px) + "' y='" + num(f.py1 + 20) +
               "' font-size='11' text-anchor='middle'>" + num(t) + "</text>\n";
    }
    const double ys = nice_step(f.y1 - f.y0);
    for (double t = std::ceil(f.y0 / ys) * ys; t <= f.y1 + 1e-12 * ys; t += ys) {
        const double py = f.sy(t);
        svg += "<line x1='" + num(f.px0 - 5) + "' y1='" + num(py) + "' x2='" + num(f.px0) +
               "' y2='" + num(py) + "' stroke='black'/>\n";
        svg += "<text x='" + num(f.px0 - 8) + "' y='" + num(py + 4) +
               "' font-size='11' text-anchor='end'>" + num(t) + "</text>\n";
    }
    svg += "<text x='" + num(0.5 * (f.px0 + f.px1)) + "' y='" + num(f.py1 + 40) +
           "' font-size='13' text-anchor='middle'>" + x_label + "</text>\n";
    svg += "<text x='20' y='" + num(0.5 * (f.py0 + f.py1)) +
           "' font-size='13' text-anchor='middle' transform='rotate(-90 20 " +
           num(0.5 * (f.py0 + f.py1)) + ")'>" + y_label + "</text>\n";
    svg += "<text x='" + num(0.5 * (f.px0 + f.px1)) + "' y='28' font-size='15' "
           "text-anchor='middle'>" + title + "</text>\n";
}

// small perceptual ramp (dark blue -> green -> yellow)
void colormap(double v, int* r, int* g, int* b) {
    static const int stops[7][3] = {{68, 1, 84},   {70, 50, 127},  {54, 92, 141}, {39, 127, 142},
                                    {31, 161, 135}, {74, 194, 109}, {253, 231, 37}};
    v = std::clamp(v, 0.0, 1.0);
    const double f = v * 6.0;
    const int i = std::min(5, static_cast<int>(f));
    const double u = f - i;
    *r = static_cast<int>(std::lround(stops[i][0] + u * (stops[i + 1][0] - stops[i][0])));
    *g = static_cast<int>(std::lround(stops[i][1] + u * (stops[i + 1][1] - stops[i][1])));
    *b = static_cast<int>(std::lround(stops[i][2] + u * (stops[i + 1][2] - stops[i][2])));
}

std::string hex_color(double v) {
    int r, g, b;
    colormap(v, &r, &g, &b);
    char buf[8];
    std::snprintf(buf, sizeof(buf), "#%02x%02x%02x", r, g, b);
    return buf;
}

} // namespace

std::string timeseries_svg(const std::string& title, const std::string& x_label,
                           const std::string& y_label, const std::vector<Series>& series) {
    bool any = false;
    for (const auto& s : series) {
        if (s.x.size() != s.y.size()) throw std::invalid_argument("timeseries_svg: ragged series");
        if (!s.x.empty()) any = true;
    }
    if (series.empty() || !any) throw std::invalid_argument("timeseries_svg: empty series rejected");

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    for (const auto& s : series) {
        for (double v : s.x) { x0 = std::min(x0, v); x1 = std::max(x1, v); }
        for (double v : s.y) { y0 = std::min(y0, v); y1 = std::max(y1, v); }
    }
    if (x1 <= x0) { x0 -= 0.5; x1 += 0.5; }
    if (y1 <= y0) {
        const double pad = std::max(1.0, std::abs(y0)) * 0.1;
        y0 -= pad;
        y1 += pad;
    } else {
        const double pad = 0.05 * (y1 - y0);
        y0 -= pad;
        y1 += pad;
    }

    Frame f{x0, x1, y0, y1, 80, 700, 45, 500};
    std::string svg = "<svg xmlns='http://www.w3.org/2000/svg' width='880' height='560' "
                      "viewBox='0 0 880 560'>\n<rect width='880' height='560' fill='white'/>\n";
    axes(svg, f, x_label, y_label, title);
    for (std::size_t si = 0; si < series.size(); ++si) {
        const auto& s = series[si];
        if (s.x.empty()) continue;
        const char* color = kPalette[si % 8];
        svg += "<polyline fill='none' stroke='";
        svg += color;
        svg += "' stroke-width='1.4' points='";
        for (std::size_t i = 0; i < s.x.size(); ++i) {
            svg += num(f.sx(s.x[i]), "%.2f");
            svg += ",";
            svg += num(f.sy(s.y[i]), "%.2f");
            if (i + 1 < s.x.size()) svg += " ";
        }
        svg += "'/>\n";
        const double ly = 60.0 + 18.0 * si;
        svg += "<line x1='715' y1='" + num(ly - 4) + "' x2='745' y2='" + num(ly - 4) +
               "' stroke='" + color + "' stroke-width='2'/>\n";
        svg += "<text x='750' y='" + num(ly) + "' font-size='12'>" + s.label + "</text>\n";
    }
    svg += "</svg>\n";
    return svg;
}

std::string heatmap_svg(const std::string& title, const PlanarDensity& density, int max_cells) {
    const int n = density.grid.n;
    if (n <= 0 || density.values.empty()) {
        throw std::invalid_argument("heatmap_svg: empty density rejected");
    }
    const int block = std::max(1, (n + max_cells - 1) / max_cells);
    const int m = (n + block - 1) / block;

    std::vector<double> cells(static_cast<std::size_t>(m) * m, 0.0);
    double vmax = 0.0;
    for (int by = 0; by < m; ++by) {
        for (int bx = 0; bx < m; ++bx) {
            double acc = 0.0;
            int cnt = 0;
            for (int iy = by * block; iy < std::min(n, (by + 1) * block); ++iy)
                for (int ix = bx * block; ix < std::min(n, (bx + 1) * block); ++ix) {
                    acc += density.values[static_cast<std::size_t>(iy) * n + ix];
                    ++cnt;
                }
            const double v = acc / cnt;
            cells[static_cast<std::size_t>(by) * m + bx] = v;
            vmax = std::max(vmax, v);
        }
    }
    if (vmax <= 0.0) vmax = 1.0;

    const double box = 460.0;
    const double px0 = 90.0, py0 = 50.0;
    const double cell = box / m;
    std::string svg = "<svg xmlns='http://www.w3.org/2000/svg' width='700' height='580' "
                      "viewBox='0 0 700 580'>\n<rect width='700' height='580' fill='white'/>\n";
    svg += "<text x='" + num(px0 + box / 2) + "' y='30' font-size='15' text-anchor='middle'>" +
           title + "</text>\n";
    for (int by = 0; by < m; ++by) {
        for (int bx = 0; bx < m; ++bx) {
            const double v = cells[static_cast<std::size_t>(by) * m + bx] / vmax;
            // row 0 is the smallest y; SVG y axis points down
            const double x = px0 + bx * cell;
            const double y = py0 + (m - 1 - by) * cell;
            svg += "<rect x='" + num(x, "%.2f") + "' y='" + num(y, "%.2f") + "' width='" +
                   num(cell + 0.5, "%.2f") + "' height='" + num(cell + 0.5, "%.2f") + "' fill='" +
                   hex_color(v) + "'/>\n";
        }
    }
    svg += "<rect x='" + num(px0) + "' y='" + num(py0) + "' width='" + num(box) + "' height='" +
           num(box) + "' fill='none' stroke='black'/>\n";
    const double hw = density.grid.half_width;
    svg += "<text x='" + num(px0) + "' y='" + num(py0 + box + 20) + "' font-size='11' "
           "text-anchor='middle'>" + num(-hw) + "</text>\n";
    svg += "<text x='" + num(px0 + box) + "' y='" + num(py0 + box + 20) + "' font-size='11' "
           "text-anchor='middle'>" + num(hw) + "</text>\n";
    svg += "<text x='" + num(px0 + box / 2) + "' y='" + num(py0 + box + 38) +
           "' font-size='13' text-anchor='middle'>x [a0]</text>\n";
    svg += "<text x='30' y='" + num(py0 + box / 2) + "' font-size='13' text-anchor='middle' "
           "transform='rotate(-90 30 " + num(py0 + box / 2) + ")'>y [a0]</text>\n";

    // colorbar
    const double cbx = px0 + box + 30.0;
    for (int i = 0; i < 64; ++i) {
        const double v = (i + 0.5) / 64.0;
        const double y = py0 + box * (1.0 - (i + 1.0) / 64.0);
        svg += "<rect x='" + num(cbx) + "' y='" + num(y, "%.2f") + "' width='20' height='" +
               num(box / 64.0 + 0.5, "%.2f") + "' fill='" + hex_color(v) + "'/>\n";
    }
    svg += "<rect x='" + num(cbx) + "' y='" + num(py0) + "' width='20' height='" + num(box) +
           "' fill='none' stroke='black'/>\n";
    svg += "<text x='" + num(cbx + 26) + "' y='" + num(py0 + 10) + "' font-size='11'>" +
           num(vmax, "%.3g") + "</text>\n";
    svg += "<text x='" + num(cbx + 26) + "' y='" + num(py0 + box) + "' font-size='11'>0</text>\n";
    svg += "</svg>\n";
    return svg;
}

void write_svg(const std::string& path, const std::string& svg) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw std::runtime_error("cannot open for writing: " + path);
    f << svg;
    if (!f) throw std::runtime_error("write failed: " + path);
}

} // namespace hatom::io
