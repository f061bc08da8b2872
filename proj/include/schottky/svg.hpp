#pragma once

// SVG 1.1 emission: one <circle> outline per pairing circle and one
// 0.5px dot per limit point, viewport auto-fit with a 5% margin.

#include <algorithm>
#include <cstdio>
#include <string>
#include <vector>

#include "schottky/assembly.hpp"

namespace schottky {

namespace detail {

inline std::string svg_num(double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.6g", x);
    return buf;
}

} // namespace detail

inline std::vector<Disc> pairing_discs(const GroupAssembly& a) {
    std::vector<Disc> out;
    std::function<void(const BasicGroup&)> collect = [&](const BasicGroup& f) {
        if (f.pairing) {
            out.push_back(f.pairing->d1);
            out.push_back(f.pairing->d2);
        }
        if (f.sub)
            for (const BasicGroup& sub : *f.sub) collect(sub);
    };
    for (const BasicGroup& f : a.factors) collect(f);
    for (const GroupAssembly::HnnPairing& h : a.hnn) {
        out.push_back(h.d1);
        out.push_back(h.d2);
    }
    return out;
}

inline std::string render_svg(const GroupAssembly& a, const std::vector<LimitPoint>& limit) {
    std::vector<Disc> circles = pairing_discs(a);

    double x0 = 1e300, x1 = -1e300, y0 = 1e300, y1 = -1e300;
    auto grow = [&](double x, double y) {
        x0 = std::min(x0, x);
        x1 = std::max(x1, x);
        y0 = std::min(y0, y);
        y1 = std::max(y1, y);
    };
    std::vector<EuclideanCircle> euclid;
    for (const Disc& d : circles) {
        EuclideanCircle e = to_euclidean(d);
        euclid.push_back(e);
        if (e.is_line) {
            grow(e.line_point.real(), e.line_point.imag());
            continue;
        }
        grow(e.center.real() - e.radius, e.center.imag() - e.radius);
        grow(e.center.real() + e.radius, e.center.imag() + e.radius);
    }
    for (const LimitPoint& p : limit)
        if (auto z = p.point.finite()) grow(z->real(), z->imag());
    if (x0 > x1) { // nothing to draw
        x0 = y0 = -1;
        x1 = y1 = 1;
    }
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    x0 -= 0.05 * w;
    x1 += 0.05 * w;
    y0 -= 0.05 * h;
    y1 += 0.05 * h;
    w = x1 - x0;
    h = y1 - y0;
    const double scale = 512.0 / std::max(w, h);

    auto X = [&](double x) { return (x - x0) * scale; };
    auto Y = [&](double y) { return (y1 - y) * scale; }; // flip to SVG orientation

    std::string out;
    out += "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    out += "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
           detail::svg_num(w * scale) + "\" height=\"" + detail::svg_num(h * scale) + "\">\n";
    for (const EuclideanCircle& e : euclid) {
        if (e.is_line) {
            Complex p0 = e.line_point - 4.0 * std::max(w, h) * e.line_dir;
            Complex p1 = e.line_point + 4.0 * std::max(w, h) * e.line_dir;
            out += "  <line x1=\"" + detail::svg_num(X(p0.real())) + "\" y1=\"" +
                   detail::svg_num(Y(p0.imag())) + "\" x2=\"" + detail::svg_num(X(p1.real())) +
                   "\" y2=\"" + detail::svg_num(Y(p1.imag())) +
                   "\" stroke=\"#335\" stroke-width=\"1\" fill=\"none\"/>\n";
            continue;
        }
        out += "  <circle cx=\"" + detail::svg_num(X(e.center.real())) + "\" cy=\"" +
               detail::svg_num(Y(e.center.imag())) + "\" r=\"" +
               detail::svg_num(e.radius * scale) +
               "\" stroke=\"#335\" stroke-width=\"1\" fill=\"none\"/>\n";
    }
    for (const LimitPoint& p : limit) {
        auto z = p.point.finite();
        if (!z) continue;
        out += "  <circle cx=\"" + detail::svg_num(X(z->real())) + "\" cy=\"" +
               detail::svg_num(Y(z->imag())) + "\" r=\"0.25\" fill=\"#a22\"/>\n";
    }
    out += "</svg>\n";
    return out;
}

} // namespace schottky
