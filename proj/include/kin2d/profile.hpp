#pragma once

#include <cmath>
#include <vector>

#include "kin2d/linkage.hpp"

namespace kin2d {

struct PnProfile {
    double R = 1.0;
    double e = 0.0;
    int n = 3;

    double k() const { return (n * n - 1) * e; }
};

// z = e^{i phi}(R - e cos n phi + i n e sin n phi), z' = i e^{i phi}(R + (n^2-1) e cos n phi)
inline CJet pn_point(const PnProfile& p, double phi) {
    const double n = p.n, c = std::cos(n * phi), s = std::sin(n * phi);
    const cplx E = expi(phi);
    const double f = p.R + p.k() * c, f1 = -p.k() * n * s, f2 = -p.k() * n * n * c;
    return {E * cplx(p.R - p.e * c, n * p.e * s), I * E * f, E * cplx(-f, f1), E * cplx(-2.0 * f1, f2 - f)};
}

inline ParametricCurve pn_curve(const PnProfile& p) {
    ParametricCurve c;
    c.z = [p](double t) { return pn_point(p, t)[0]; };
    c.d1 = [p](double t) { return pn_point(p, t)[1]; };
    c.d2 = [p](double t) { return pn_point(p, t)[2]; };
    c.d3 = [p](double t) { return pn_point(p, t)[3]; };
    c.closed = true;
    return c;
}

inline double pn_support(const PnProfile& p, double phi) { return p.R - p.e * std::cos(p.n * phi); }

inline double pn_width(const PnProfile& p, double phi) { return pn_support(p, phi) + pn_support(p, phi + pi); }

struct ProfileMetrics {
    double area = 0.0;   // loop-signed
    double length = 0.0; // 2 pi R, valid for PnG profiles
    bool constant_width = false;
    double width = 0.0; // constant width, or the width at phi = 0 otherwise
};

inline ProfileMetrics profile_metrics(const PnProfile& p) {
    ProfileMetrics m;
    m.area = pi * p.R * p.R - 0.5 * pi * (p.n * p.n - 1) * p.e * p.e;
    m.length = 2 * pi * p.R;
    m.constant_width = p.n % 2 == 1 || p.e == 0.0;
    m.width = m.constant_width ? 2 * p.R : 2 * pn_support(p, 0.0);
    return m;
}

enum class ProfileValidity { smooth, cusps, self_intersecting };

inline const char* validity_name(ProfileValidity v) {
    switch (v) {
    case ProfileValidity::smooth: return "PnG smooth";
    case ProfileValidity::cusps: return "PnG with cusps";
    default: return "self-intersecting";
    }
}

inline ProfileValidity validity_check(const PnProfile& p, double rel_tol = 1e-12) {
    double k = p.k();
    if (std::abs(p.R - k) <= rel_tol * p.R) return ProfileValidity::cusps;
    return p.R > k ? ProfileValidity::smooth : ProfileValidity::self_intersecting;
}

struct GeneratorBars {
    double l2 = 0, l3 = 0, l4 = 0;
    double rho1 = NAN, rho2 = 0, rho3 = NAN, rho4 = 0;
};

inline GeneratorBars generator_bars(const PnProfile& p) {
    GeneratorBars g;
    g.l2 = p.R;
    g.l3 = (p.n + 1) * p.e / 2;
    g.l4 = (p.n - 1) * p.e / 2;
    if (p.n > 1) {
        g.rho3 = p.R / (p.n - 1);
        g.rho1 = p.n * g.rho3;
    }
    g.rho4 = g.l3;
    g.rho2 = 2 * g.l3;
    return g;
}

// bar vectors l2 e^{i phi}, l3 e^{i(pi - (n-1) phi)}, l4 e^{i(n+1) phi}
inline std::array<cplx, 3> bar_vectors(const PnProfile& p, double phi) {
    auto g = generator_bars(p);
    return {g.l2 * expi(phi), g.l3 * expi(pi - (p.n - 1) * phi), g.l4 * expi((p.n + 1) * phi)};
}

inline cplx bar_sum(const PnProfile& p, double phi) {
    auto b = bar_vectors(p, phi);
    return b[0] + b[1] + b[2];
}

// R + r - e cos(n phi) + i n e sin(n phi)
inline ParametricCurve tool_ellipse_path(const PnProfile& p, double r) {
    if (r < 0) throw DomainError("tool radius must be non-negative");
    ParametricCurve c;
    const double n = p.n, e = p.e, c0 = p.R + r;
    c.z = [=](double t) { return cplx(c0 - e * std::cos(n * t), n * e * std::sin(n * t)); };
    c.d1 = [=](double t) { return cplx(n * e * std::sin(n * t), n * n * e * std::cos(n * t)); };
    c.d2 = [=](double t) { return cplx(n * n * e * std::cos(n * t), -n * n * n * e * std::sin(n * t)); };
    c.d3 = [=](double t) { return cplx(-n * n * n * e * std::sin(n * t), -n * n * n * n * e * std::cos(n * t)); };
    c.closed = true;
    return c;
}

struct CncPoint {
    double f = 0; // contact parameter on the profile
    double x = 0; // tool centre abscissa
    double x_shifted = 0;
};

// tool centre on the offset z - i r T, projected onto the feed axis at cam angle phi
inline CncPoint cnc_linear_toolpath(const PnProfile& p, double r, double phi, double guess = NAN) {
    if (!(r > 0)) throw DomainError("tool radius must be positive");
    auto offset = [&](double s) {
        CJet z = pn_point(p, s);
        return z[0] - I * r * z[1] / std::abs(z[1]);
    };
    auto g = [&](double s) { return (offset(s) * expi(-phi)).imag(); };
    double s0 = std::isnan(guess) ? phi : guess;
    CncPoint o;
    try {
        o.f = find_root_near(g, s0, 1e-3);
    } catch (const NoBracket&) {
        throw NoConvergence("cnc contact solve");
    }
    o.x = (offset(o.f) * expi(-phi)).real();
    o.x_shifted = o.x - p.R - r;
    return o;
}

// warm-started sweep over phi
inline std::vector<CncPoint> cnc_sweep(const PnProfile& p, double r, const std::vector<double>& phis) {
    std::vector<CncPoint> out;
    double prev_f = NAN, prev_phi = NAN;
    for (double phi : phis) {
        double guess = std::isnan(prev_f) ? phi : prev_f + (phi - prev_phi);
        out.push_back(cnc_linear_toolpath(p, r, phi, guess));
        prev_f = out.back().f;
        prev_phi = phi;
    }
    return out;
}

struct ReuleauxComparison {
    double profile_area = 0, reuleaux_area = 0;
    bool profile_larger = false;
};

inline double reuleaux_area(double R) { return pi * R * R - (2 * std::sqrt(3.0) - pi) * R * R; }

inline ReuleauxComparison reuleaux_compare(const PnProfile& p) {
    if (p.n % 2 == 0) throw DomainError("Reuleaux comparison needs odd n");
    ReuleauxComparison c;
    c.profile_area = profile_metrics(p).area;
    c.reuleaux_area = reuleaux_area(p.R);
    c.profile_larger = c.profile_area > c.reuleaux_area;
    return c;
}

// eccentricity at which the Pn area equals the Reuleaux area of the same width
inline double equal_area_eccentricity(double R, int n) {
    return std::sqrt(2 * (2 * std::sqrt(3.0) - pi) * R * R / (pi * (n * n - 1)));
}

// Pn curve clipped by the circle of radius r1 about the origin
struct PnCProfile {
    PnProfile base;
    double r1 = 0;
    std::vector<double> blend_params; // |z| = r1
    bool blended = false;             // false when the circle misses the curve
};

inline PnCProfile pnc_profile(const PnProfile& p, double r1, int samples = 4096) {
    PnCProfile out{p, r1, {}, false};
    ParametricCurve c = pn_curve(p);
    out.blend_params = sampled_roots(c, [&](double t) { return std::abs(c(t)) - r1; }, samples);
    out.blended = !out.blend_params.empty();
    return out;
}

inline cplx pnc_point(const PnCProfile& q, double phi) {
    cplx z = pn_point(q.base, phi)[0];
    if (q.blended && std::abs(z) > q.r1) return q.r1 * z / std::abs(z);
    return z;
}

// loop-signed areas of a self-intersecting Pn curve
inline LoopAreaReport profile_loops(const PnProfile& p, int samples = 2048) {
    ParametricCurve c = pn_curve(p);
    return loop_areas(c, self_intersections(c, samples));
}

} // namespace kin2d
