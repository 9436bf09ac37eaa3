#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include "kaclab/harness.hpp"

namespace kaclab {

namespace {

constexpr double kW = 960.0, kH = 600.0;
constexpr double kLeft = 90.0, kRight = 30.0, kTop = 50.0, kBottom = 70.0;

std::string fmt(const char* spec, double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), spec, v);
    return buf;
}

struct Series {
    std::vector<double> x;
    std::vector<double> y;  // already log10-transformed when log scale is on
    std::vector<bool> shown;
};

std::vector<double> linear_ticks(double lo, double hi, int target) {
    const double raw = (hi - lo) / std::max(1, target);
    const double mag = std::pow(10.0, std::floor(std::log10(raw)));
    double step = mag;
    const double frac = raw / mag;
    if (frac > 5.0)
        step = 10.0 * mag;
    else if (frac > 2.0)
        step = 5.0 * mag;
    else if (frac > 1.0)
        step = 2.0 * mag;
    std::vector<double> ticks;
    double t = std::ceil(lo / step) * step;
    for (; t <= hi + step * 1e-9; t += step) ticks.push_back(t == 0.0 ? 0.0 : t);
    return ticks;
}

}  // namespace

std::string render_svg(const std::vector<SweepRecord>& records, const std::string& x_axis,
                       const std::string& y_axis, bool log_y) {
    if (records.empty()) throw std::invalid_argument("render_svg: no records");
    if (x_axis != "a" && x_axis != "b")
        throw std::invalid_argument("render_svg: x axis must be 'a' or 'b'");
    if (y_axis != "rel_error" && y_axis != "max_imag")
        throw std::invalid_argument("render_svg: y axis must be 'rel_error' or 'max_imag'");

    const auto& first = records.front();
    for (const auto& r : records) {
        if (r.n != first.n || r.solver != first.solver || r.balance != first.balance)
            throw std::invalid_argument(
                "render_svg: records mix n, solver, or balance settings");
    }
    std::vector<std::pair<double, double>> pts;
    pts.reserve(records.size());
    std::set<double> seen;
    for (const auto& r : records) {
        const double x = x_axis == "a" ? r.a : r.b;
        if (!seen.insert(x).second)
            throw std::invalid_argument("render_svg: duplicate x value " + fmt("%g", x));
        pts.emplace_back(x, y_axis == "rel_error" ? r.rel_error : r.max_imag);
    }
    std::sort(pts.begin(), pts.end());

    bool any_positive = false;
    for (const auto& p : pts)
        if (std::isfinite(p.second) && p.second > 0.0) any_positive = true;
    const bool use_log = log_y && any_positive;
    const bool log_fallback = log_y && !any_positive;

    Series s;
    int omitted = 0;
    for (const auto& p : pts) {
        s.x.push_back(p.first);
        double y = p.second;
        bool ok = std::isfinite(y);
        if (use_log) {
            ok = ok && y > 0.0;
            y = ok ? std::log10(y) : 0.0;
        }
        s.y.push_back(y);
        s.shown.push_back(ok);
        if (!ok) ++omitted;
    }

    double xmin = s.x.front(), xmax = s.x.back();
    if (xmin == xmax) {
        xmin -= 1.0;
        xmax += 1.0;
    }
    double ymin = 0.0, ymax = 0.0;
    bool have_y = false;
    for (std::size_t i = 0; i < s.y.size(); ++i) {
        if (!s.shown[i]) continue;
        if (!have_y) {
            ymin = ymax = s.y[i];
            have_y = true;
        } else {
            ymin = std::min(ymin, s.y[i]);
            ymax = std::max(ymax, s.y[i]);
        }
    }
    if (!have_y) {
        ymin = 0.0;
        ymax = 1.0;
    } else if (ymin == ymax) {
        if (use_log) {
            ymin -= 1.0;
            ymax += 1.0;
        } else {
            const double pad = std::max(1.0, std::fabs(ymin) * 0.1);
            ymin -= pad;
            ymax += pad;
        }
    }

    const double plot_w = kW - kLeft - kRight;
    const double plot_h = kH - kTop - kBottom;
    auto px = [&](double x) { return kLeft + (x - xmin) / (xmax - xmin) * plot_w; };
    auto py = [&](double y) { return kH - kBottom - (y - ymin) / (ymax - ymin) * plot_h; };

    std::ostringstream svg;
    svg << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << kW
        << "\" height=\"" << kH << "\" viewBox=\"0 0 " << kW << ' ' << kH << "\">\n";
    svg << "<rect x=\"0\" y=\"0\" width=\"" << kW << "\" height=\"" << kH
        << "\" fill=\"#ffffff\"/>\n";

    const std::string title = y_axis + " vs " + x_axis + "  (n=" + std::to_string(first.n) +
                              ", solver=" + solver_name(first.solver) +
                              ", balance=" + (first.balance ? "1" : "0") + ")";
    svg << "<text x=\"" << kW / 2 << "\" y=\"28\" text-anchor=\"middle\" "
        << "font-family=\"sans-serif\" font-size=\"16\" fill=\"#222\">" << title
        << "</text>\n";

    // Vertical ticks: decade lines on a log scale if at least two integer
    // decades fall in range, evenly spaced values otherwise.
    std::vector<std::pair<double, std::string>> yticks;
    if (use_log) {
        const int d0 = static_cast<int>(std::ceil(ymin - 1e-9));
        const int d1 = static_cast<int>(std::floor(ymax + 1e-9));
        if (d1 - d0 >= 1) {
            const int stride = std::max(1, (d1 - d0) / 10 + ((d1 - d0) % 10 ? 1 : 0));
            for (int d = d0; d <= d1; d += stride)
                yticks.emplace_back(static_cast<double>(d), fmt("%g", std::pow(10.0, d)));
        } else {
            for (int i = 0; i <= 5; ++i) {
                const double t = ymin + (ymax - ymin) * i / 5.0;
                yticks.emplace_back(t, fmt("%.3g", std::pow(10.0, t)));
            }
        }
    } else {
        for (double t : linear_ticks(ymin, ymax, 6)) yticks.emplace_back(t, fmt("%g", t));
    }
    for (const auto& [ty, label] : yticks) {
        const double yy = py(ty);
        svg << "<line x1=\"" << kLeft << "\" y1=\"" << yy << "\" x2=\"" << kW - kRight
            << "\" y2=\"" << yy << "\" stroke=\"#dddddd\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << kLeft - 8 << "\" y=\"" << yy + 4
            << "\" text-anchor=\"end\" font-family=\"sans-serif\" font-size=\"12\" "
            << "fill=\"#444\">" << label << "</text>\n";
    }
    for (double t : linear_ticks(xmin, xmax, 8)) {
        const double xx = px(t);
        svg << "<line x1=\"" << xx << "\" y1=\"" << kTop << "\" x2=\"" << xx << "\" y2=\""
            << kH - kBottom << "\" stroke=\"#eeeeee\" stroke-width=\"1\"/>\n";
        svg << "<text x=\"" << xx << "\" y=\"" << kH - kBottom + 20
            << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"12\" "
            << "fill=\"#444\">" << fmt("%g", t) << "</text>\n";
    }

    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kH - kBottom << "\" x2=\"" << kW - kRight
        << "\" y2=\"" << kH - kBottom << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";
    svg << "<line x1=\"" << kLeft << "\" y1=\"" << kTop << "\" x2=\"" << kLeft << "\" y2=\""
        << kH - kBottom << "\" stroke=\"#333333\" stroke-width=\"1.5\"/>\n";

    svg << "<text x=\"" << kLeft + plot_w / 2 << "\" y=\"" << kH - 18
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "fill=\"#222\">" << x_axis << "</text>\n";
    svg << "<text x=\"22\" y=\"" << kTop + plot_h / 2
        << "\" text-anchor=\"middle\" font-family=\"sans-serif\" font-size=\"14\" "
        << "fill=\"#222\" transform=\"rotate(-90 22 " << kTop + plot_h / 2 << ")\">"
        << y_axis << (use_log ? " (log scale)" : "") << "</text>\n";

    // Polyline broken at omitted points.
    std::string path;
    bool open = false;
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!s.shown[i]) {
            open = false;
            continue;
        }
        path += open ? " L " : " M ";
        path += fmt("%.2f", px(s.x[i])) + " " + fmt("%.2f", py(s.y[i]));
        open = true;
    }
    if (!path.empty())
        svg << "<path d=\"" << path
            << "\" fill=\"none\" stroke=\"#1f6feb\" stroke-width=\"1.5\"/>\n";
    for (std::size_t i = 0; i < s.x.size(); ++i) {
        if (!s.shown[i]) continue;
        svg << "<circle cx=\"" << fmt("%.2f", px(s.x[i])) << "\" cy=\""
            << fmt("%.2f", py(s.y[i])) << "\" r=\"2.5\" fill=\"#1f6feb\"/>\n";
    }

    double note_y = kTop + 16;
    if (log_fallback) {
        svg << "<text x=\"" << kLeft + 10 << "\" y=\"" << note_y
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#b35900\">"
            << "log scale requested but no positive values; linear scale shown"
            << "</text>\n";
        note_y += 16;
    }
    if (omitted > 0) {
        svg << "<text x=\"" << kLeft + 10 << "\" y=\"" << note_y
            << "\" font-family=\"sans-serif\" font-size=\"12\" fill=\"#777\">"
            << omitted << (omitted == 1 ? " point" : " points")
            << " omitted (not finite" << (use_log ? " or not positive" : "") << ")"
            << "</text>\n";
    }
    svg << "</svg>\n";
    return svg.str();
}

void render_svg(const std::vector<SweepRecord>& records, const std::string& x_axis,
                const std::string& y_axis, bool log_y, const std::string& path) {
    const std::string body = render_svg(records, x_axis, y_axis, log_y);
    std::ofstream out(path);
    if (!out) throw std::runtime_error("render_svg: cannot open " + path);
    out << body;
    if (!out.flush()) throw std::runtime_error("render_svg: write failed for " + path);
}

}  // namespace kaclab
