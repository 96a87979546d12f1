#pragma once

#include <cstdio>
#include <fstream>
#include <functional>
#include <map>
#include <sstream>
#include <string>
#include <vector>

#include "kin2d/motion.hpp"
#include "kin2d/svg.hpp"

namespace kin2d::cli {

inline std::string num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.15g", v);
    std::string s = buf;
    return s == "-0" ? "0" : s;
}

inline std::string num(cplx z) { return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i"; }

class Report {
public:
    void section(const std::string& title) {
        if (!lines_.empty()) lines_.push_back("");
        lines_.push_back("[" + title + "]");
    }
    void text(const std::string& s) { lines_.push_back(s); }
    void value(const std::string& key, double v) { lines_.push_back(key + " = " + num(v)); }
    void value(const std::string& key, cplx z) { lines_.push_back(key + " = " + num(z)); }
    void count(const std::string& key, std::size_t n) { lines_.push_back(key + " = " + std::to_string(n)); }
    void flag(const std::string& key, bool b) { lines_.push_back(key + " = " + (b ? "true" : "false")); }
    void angle(const std::string& key, double radians) {
        lines_.push_back(key + " = " + num(deg(radians)) + " deg (" + num(radians) + " rad)");
    }
    void circle(const std::string& key, const Circle& c) {
        lines_.push_back(key + " = center " + num(c.center) + ", radius " + num(c.radius));
    }
    std::string str() const {
        std::string o;
        for (auto& l : lines_) o += l + "\n";
        return o;
    }

private:
    std::vector<std::string> lines_;
};

struct Table {
    std::vector<std::string> header;
    std::vector<std::vector<double>> rows;

    std::string str() const {
        std::string o;
        for (std::size_t i = 0; i < header.size(); ++i) o += (i ? "," : "") + header[i];
        o += "\n";
        for (auto& r : rows) {
            for (std::size_t i = 0; i < r.size(); ++i) o += (i ? "," : "") + num(r[i]);
            o += "\n";
        }
        return o;
    }
};

struct Artifact {
    Report report;
    Table table;
    FigureSpec figure;
};

struct Settings {
    int samples = 0;  // 0: command default
    double tol = 0.0; // 0: library default
    QuadratureOptions quad() const {
        QuadratureOptions q;
        if (tol > 0) q.tol = tol;
        return q;
    }
    int samples_or(int fallback) const { return samples > 0 ? samples : fallback; }
};

inline std::vector<cplx> polyline(const std::function<cplx(double)>& f, double t0, double t1, int n) {
    std::vector<cplx> pts;
    for (int i = 0; i <= n; ++i) {
        double t = t0 + (t1 - t0) * i / n;
        try {
            pts.push_back(f(t));
        } catch (const Error&) {
            pts.push_back(cplx(NAN, NAN));
        }
    }
    return pts;
}

inline Style stroke(const std::string& color, double width = 1.5, bool dashed = false) {
    Style s;
    s.stroke = color;
    s.width = width;
    s.dashed = dashed;
    return s;
}

inline void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path);
    out << content;
    if (!out) throw std::runtime_error("write failed: " + path);
}

using ReproFn = std::function<Artifact(const Settings&)>;

struct ReproEntry {
    std::string name;
    std::string description;
    ReproFn run;
};

const std::vector<ReproEntry>& repro_registry();

// shared building blocks (repro.cpp)
void add_curve(FigureSpec& f, const ParametricCurve& c, const std::string& color, int n = 1440, bool dashed = false);
void motion_report(Report& r, const kin2d::FrameState& st);
Artifact run_scenario_file(const std::string& path, const Settings& s);
std::vector<std::string> scenario_outputs(const std::string& path);

} // namespace kin2d::cli
