#pragma once

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "kin2d/geom_core.hpp"

namespace kin2d {

struct Style {
    std::string stroke = "#1f4e9c";
    double width = 1.5;
    std::string fill = "none";
    bool dashed = false;
};

struct PolylineLayer {
    std::vector<cplx> points; // non-finite entries split the line
    Style style;
    bool closed = false;
};

struct CircleLayer {
    Circle circle;
    Style style;
};

struct VectorLayer {
    cplx from{}, to{};
    Style style;
};

struct PointLayer {
    cplx at{};
    std::string label;
    std::string color = "#c0392b";
};

struct Annotation {
    cplx at{};
    std::string text;
};

struct FigureSpec {
    std::vector<PolylineLayer> curves;
    std::vector<CircleLayer> circles;
    std::vector<VectorLayer> vectors;
    std::vector<PointLayer> points;
    std::vector<Annotation> notes;
    bool auto_viewport = true;
    double xmin = 0, xmax = 1, ymin = 0, ymax = 1;
    int pixels = 800;
};

namespace detail {

inline std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.3f", v);
    std::string s = buf;
    return s == "-0.000" ? "0.000" : s;
}

inline std::string xml_escape(const std::string& s) {
    std::string o;
    for (char c : s) {
        switch (c) {
        case '<': o += "&lt;"; break;
        case '>': o += "&gt;"; break;
        case '&': o += "&amp;"; break;
        case '"': o += "&quot;"; break;
        default: o += c;
        }
    }
    return o;
}

inline std::string style_attr(const Style& s, double scale_width) {
    std::string o = "fill=\"" + s.fill + "\" stroke=\"" + s.stroke + "\" stroke-width=\"" + fmt(s.width * scale_width) + "\"";
    if (s.dashed) o += " stroke-dasharray=\"6 4\"";
    return o;
}

} // namespace detail

// fits the viewport to all finite geometry with 5% padding
inline void fit_viewport(FigureSpec& f) {
    double x0 = INFINITY, x1 = -INFINITY, y0 = INFINITY, y1 = -INFINITY;
    auto add = [&](cplx z) {
        if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) return;
        x0 = std::min(x0, z.real());
        x1 = std::max(x1, z.real());
        y0 = std::min(y0, z.imag());
        y1 = std::max(y1, z.imag());
    };
    for (auto& c : f.curves)
        for (auto& p : c.points) add(p);
    for (auto& c : f.circles) {
        add(c.circle.center + cplx(c.circle.radius, c.circle.radius));
        add(c.circle.center - cplx(c.circle.radius, c.circle.radius));
    }
    for (auto& v : f.vectors) {
        add(v.from);
        add(v.to);
    }
    for (auto& p : f.points) add(p.at);
    for (auto& a : f.notes) add(a.at);
    if (!(x0 <= x1)) {
        x0 = y0 = -1;
        x1 = y1 = 1;
    }
    double w = std::max(x1 - x0, 1e-9), h = std::max(y1 - y0, 1e-9);
    double pad = 0.05 * std::max(w, h);
    f.xmin = x0 - pad;
    f.xmax = x1 + pad;
    f.ymin = y0 - pad;
    f.ymax = y1 + pad;
}

inline std::string svg_string(FigureSpec f) {
    using detail::fmt;
    if (f.auto_viewport) fit_viewport(f);
    double w = f.xmax - f.xmin, h = f.ymax - f.ymin;
    double s = f.pixels / std::max(w, h);
    double W = w * s, H = h * s;
    auto X = [&](cplx z) { return fmt((z.real() - f.xmin) * s); };
    auto Y = [&](cplx z) { return fmt((f.ymax - z.imag()) * s); };
    std::ostringstream o;
    o << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n";
    o << "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" << fmt(W) << "\" height=\"" << fmt(H)
      << "\" viewBox=\"0 0 " << fmt(W) << " " << fmt(H) << "\">\n";
    o << "<rect x=\"0\" y=\"0\" width=\"" << fmt(W) << "\" height=\"" << fmt(H) << "\" fill=\"white\"/>\n";
    // axes through the origin when visible
    if (f.ymin < 0 && f.ymax > 0)
        o << "<line x1=\"0.000\" y1=\"" << Y(0.0) << "\" x2=\"" << fmt(W) << "\" y2=\"" << Y(0.0)
          << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    if (f.xmin < 0 && f.xmax > 0)
        o << "<line x1=\"" << X(0.0) << "\" y1=\"0.000\" x2=\"" << X(0.0) << "\" y2=\"" << fmt(H)
          << "\" stroke=\"#bbbbbb\" stroke-width=\"0.5\"/>\n";
    for (auto& c : f.circles)
        o << "<circle cx=\"" << X(c.circle.center) << "\" cy=\"" << Y(c.circle.center) << "\" r=\""
          << fmt(c.circle.radius * s) << "\" " << detail::style_attr(c.style, 1.0) << "/>\n";
    for (auto& c : f.curves) {
        std::vector<std::vector<cplx>> runs(1);
        for (auto& p : c.points) {
            if (std::isfinite(p.real()) && std::isfinite(p.imag())) runs.back().push_back(p);
            else if (!runs.back().empty()) runs.emplace_back();
        }
        bool whole = runs.size() == 1 && c.closed;
        for (auto& r : runs) {
            if (r.size() < 2) continue;
            o << "<path d=\"";
            for (std::size_t i = 0; i < r.size(); ++i) o << (i ? " L" : "M") << X(r[i]) << " " << Y(r[i]);
            if (whole) o << " Z";
            o << "\" " << detail::style_attr(c.style, 1.0) << "/>\n";
        }
    }
    for (auto& v : f.vectors) {
        cplx d = v.to - v.from;
        double len = std::abs(d);
        o << "<line x1=\"" << X(v.from) << "\" y1=\"" << Y(v.from) << "\" x2=\"" << X(v.to) << "\" y2=\"" << Y(v.to)
          << "\" " << detail::style_attr(v.style, 1.0) << "/>\n";
        if (len > 0) {
            cplx u = d / len;
            double head = 0.04 * std::max(w, h);
            cplx a = v.to - head * u * expi(0.4), b = v.to - head * u * expi(-0.4);
            o << "<path d=\"M" << X(v.to) << " " << Y(v.to) << " L" << X(a) << " " << Y(a) << " L" << X(b) << " "
              << Y(b) << " Z\" fill=\"" << v.style.stroke << "\" stroke=\"none\"/>\n";
        }
    }
    for (auto& p : f.points) {
        o << "<circle cx=\"" << X(p.at) << "\" cy=\"" << Y(p.at) << "\" r=\"3.000\" fill=\"" << p.color
          << "\" stroke=\"none\"/>\n";
        if (!p.label.empty())
            o << "<text x=\"" << fmt((p.at.real() - f.xmin) * s + 5) << "\" y=\"" << fmt((f.ymax - p.at.imag()) * s - 5)
              << "\" font-family=\"sans-serif\" font-size=\"12\">" << detail::xml_escape(p.label) << "</text>\n";
    }
    for (auto& a : f.notes)
        o << "<text x=\"" << X(a.at) << "\" y=\"" << Y(a.at) << "\" font-family=\"sans-serif\" font-size=\"12\">"
          << detail::xml_escape(a.text) << "</text>\n";
    o << "</svg>\n";
    return o.str();
}

inline void render_svg(const FigureSpec& f, const std::string& path) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << svg_string(f);
    if (!out) throw std::runtime_error("write failed: " + path);
}

} // namespace kin2d
