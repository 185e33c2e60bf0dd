// Copyright 2026 The DQES Workbench Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "dqes/format.hpp"
#include "dqes/landscape.hpp"
#include "dqes/optimizer.hpp"

namespace dqes::svg {

// Basis colors by index; 0 (computational) blue, 1 (Hadamard) orange.
inline constexpr std::array<const char*, 9> kBasisPalette{
    "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b", "#e377c2", "#7f7f7f", "#bcbd22"};

inline const char* basis_color(int basis) { return kBasisPalette[static_cast<std::size_t>(basis) % kBasisPalette.size()]; }

namespace detail {

struct Frame {
    double width = 800, height = 500, left = 70, right = 20, top = 40, bottom = 50;
    double x0, x1, y0, y1;

    double px(double x) const { return left + (x - x0) / (x1 - x0) * (width - left - right); }
    double py(double y) const { return height - bottom - (y - y0) / (y1 - y0) * (height - top - bottom); }
};

inline void pad_range(double& lo, double& hi) {
    if (!(hi > lo)) {
        lo -= 0.5;
        hi += 0.5;
    } else {
        double pad = 0.05 * (hi - lo);
        lo -= pad;
        hi += pad;
    }
}

inline std::string num(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f", v);
    return buf;
}

inline std::string escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '<') out += "&lt;";
        else if (c == '>') out += "&gt;";
        else if (c == '&') out += "&amp;";
        else out += c;
    }
    return out;
}

inline std::string open(const Frame& f, const std::string& title, const std::string& xlabel,
                        const std::string& ylabel) {
    std::string s = "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    s += "<!-- dqes " + std::string(kToolVersion) + " -->\n";
    s += "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" + num(f.width) + "\" height=\"" + num(f.height) +
         "\" font-family=\"sans-serif\" font-size=\"12\">\n";
    s += "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n";
    s += "<text x=\"" + num(f.width / 2) + "\" y=\"22\" text-anchor=\"middle\" font-size=\"15\">" + escape(title) +
         "</text>\n";
    // axes
    s += "<line x1=\"" + num(f.left) + "\" y1=\"" + num(f.height - f.bottom) + "\" x2=\"" + num(f.width - f.right) +
         "\" y2=\"" + num(f.height - f.bottom) + "\" stroke=\"black\"/>\n";
    s += "<line x1=\"" + num(f.left) + "\" y1=\"" + num(f.top) + "\" x2=\"" + num(f.left) + "\" y2=\"" +
         num(f.height - f.bottom) + "\" stroke=\"black\"/>\n";
    for (int t = 0; t <= 4; ++t) {
        double yv = f.y0 + (f.y1 - f.y0) * t / 4.0;
        s += "<text x=\"" + num(f.left - 6) + "\" y=\"" + num(f.py(yv) + 4) + "\" text-anchor=\"end\">" +
             format_g12(std::round(yv * 1e4) / 1e4) + "</text>\n";
        double xv = f.x0 + (f.x1 - f.x0) * t / 4.0;
        s += "<text x=\"" + num(f.px(xv)) + "\" y=\"" + num(f.height - f.bottom + 16) + "\" text-anchor=\"middle\">" +
             format_g12(std::round(xv)) + "</text>\n";
    }
    s += "<text x=\"" + num(f.width / 2) + "\" y=\"" + num(f.height - 10) + "\" text-anchor=\"middle\">" +
         escape(xlabel) + "</text>\n";
    s += "<text x=\"16\" y=\"" + num(f.height / 2) + "\" text-anchor=\"middle\" transform=\"rotate(-90 16 " +
         num(f.height / 2) + ")\">" + escape(ylabel) + "</text>\n";
    return s;
}

}  // namespace detail

/// Scatter of energy against enumeration index, one color group per basis.
inline std::string landscape_plot(const LandscapeReport& report, const std::string& title) {
    detail::Frame f;
    f.x0 = 0;
    f.x1 = std::max<double>(1.0, static_cast<double>(report.records.size()) - 1.0);
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& r : report.records) {
        lo = std::min(lo, r.energy);
        hi = std::max(hi, r.energy);
    }
    if (report.records.empty()) lo = hi = 0.0;
    detail::pad_range(lo, hi);
    f.y0 = lo;
    f.y1 = hi;
    std::string s = detail::open(f, title, "state index", "energy");
    const int bases = (1 << report.k) + 1;
    for (int b = 0; b < bases; ++b) {
        s += "<g class=\"basis\" data-basis=\"" + std::to_string(b) + "\" fill=\"" + basis_color(b) + "\">\n";
        for (std::size_t i = 0; i < report.records.size(); ++i) {
            const auto& r = report.records[i];
            if (r.spec.basis_index != b) continue;
            s += "<circle cx=\"" + detail::num(f.px(static_cast<double>(i))) + "\" cy=\"" +
                 detail::num(f.py(r.energy)) + "\" r=\"3\"/>\n";
        }
        s += "</g>\n";
        s += "<rect x=\"" + detail::num(f.width - f.right - 110) + "\" y=\"" + detail::num(f.top + 14.0 * b) +
             "\" width=\"10\" height=\"10\" fill=\"" + basis_color(b) + "\"/>";
        s += "<text x=\"" + detail::num(f.width - f.right - 95) + "\" y=\"" + detail::num(f.top + 14.0 * b + 9) +
             "\">basis " + std::to_string(b) + "</text>\n";
    }
    return s + "</svg>\n";
}

/// Energy curves, one polyline per trace.
inline std::string trace_plot(const std::vector<OptimizationTrace>& traces, const std::vector<std::string>& labels,
                              const std::string& title) {
    detail::Frame f;
    f.x0 = 1;
    f.x1 = 2;
    double lo = std::numeric_limits<double>::infinity(), hi = -lo;
    for (const auto& t : traces) {
        f.x1 = std::max(f.x1, static_cast<double>(t.entries.size()));
        for (const auto& e : t.entries) {
            if (!std::isfinite(e.energy)) continue;
            lo = std::min(lo, e.energy);
            hi = std::max(hi, e.energy);
        }
    }
    if (!std::isfinite(lo)) lo = hi = 0.0;
    detail::pad_range(lo, hi);
    f.y0 = lo;
    f.y1 = hi;
    std::string s = detail::open(f, title, "evaluation", "energy");
    for (std::size_t k = 0; k < traces.size(); ++k) {
        const char* color = basis_color(static_cast<int>(k));
        s += "<polyline fill=\"none\" stroke=\"" + std::string(color) + "\" stroke-width=\"1.5\" points=\"";
        for (const auto& e : traces[k].entries) {
            if (!std::isfinite(e.energy)) continue;
            s += detail::num(f.px(e.eval)) + "," + detail::num(f.py(e.energy)) + " ";
        }
        s += "\"/>\n";
        std::string label = k < labels.size() ? labels[k] : "run " + std::to_string(k + 1);
        s += "<text x=\"" + detail::num(f.width - f.right - 220) + "\" y=\"" + detail::num(f.top + 14.0 * k + 9) +
             "\" fill=\"" + color + "\">" + detail::escape(label) + "</text>\n";
    }
    return s + "</svg>\n";
}

}  // namespace dqes::svg
