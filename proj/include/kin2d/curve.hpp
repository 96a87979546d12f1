#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <optional>
#include <vector>

#include "kin2d/geom_core.hpp"
#include "kin2d/numerics.hpp"

namespace kin2d {

using CurveFn = std::function<cplx(double)>;

// Central difference of given order with one Richardson step.
inline cplx fd_derivative(const CurveFn& f, double t, int order, double h = 0.0) {
    if (h == 0.0) h = (order == 1 ? 1e-4 : order == 2 ? 2e-3 : 1e-2) * std::max(1.0, std::abs(t));
    auto D = [&](double s) -> cplx {
        switch (order) {
        case 1: return (f(t + s) - f(t - s)) / (2 * s);
        case 2: return (f(t + s) - 2.0 * f(t) + f(t - s)) / (s * s);
        default: return (f(t + 2 * s) - 2.0 * f(t + s) + 2.0 * f(t - s) - f(t - 2 * s)) / (2 * s * s * s);
        }
    };
    return (4.0 * D(0.5 * h) - D(h)) / 3.0;
}

struct ParametricCurve {
    CurveFn z;
    CurveFn d1, d2, d3; // optional analytic derivatives
    double t0 = 0.0, t1 = 2 * pi;
    bool closed = false;
    Knots knots;

    cplx operator()(double t) const { return z(t); }

    // k-th derivative; missing evaluators fall back to differences of the highest available one
    cplx der(double t, int k) const {
        if (k == 0) return z(t);
        const CurveFn* a[3] = {&d1, &d2, &d3};
        if (*a[k - 1]) return (*a[k - 1])(t);
        for (int j = k - 1; j >= 1; --j)
            if (*a[j - 1]) return fd_derivative(*a[j - 1], t, k - j);
        return fd_derivative(z, t, k);
    }

    // true when every derivative up to order k is analytic
    bool analytic(int k) const {
        const CurveFn* a[3] = {&d1, &d2, &d3};
        for (int j = 0; j < k; ++j)
            if (!*a[j]) return false;
        return true;
    }

    ParametricCurve reversed() const {
        ParametricCurve c = *this;
        double s = t0 + t1;
        auto zz = z;
        c.z = [zz, s](double t) { return zz(s - t); };
        c.d1 = d1 ? CurveFn([f = d1, s](double t) { return -f(s - t); }) : CurveFn{};
        c.d2 = d2 ? CurveFn([f = d2, s](double t) { return f(s - t); }) : CurveFn{};
        c.d3 = d3 ? CurveFn([f = d3, s](double t) { return -f(s - t); }) : CurveFn{};
        c.knots.clear();
        for (double k : knots) c.knots.push_back(s - k);
        std::sort(c.knots.begin(), c.knots.end());
        return c;
    }
};

inline ParametricCurve circle_curve(double R, cplx center = 0.0) {
    ParametricCurve c;
    c.z = [=](double t) { return center + R * expi(t); };
    c.d1 = [=](double t) { return I * R * expi(t); };
    c.d2 = [=](double t) { return -R * expi(t); };
    c.d3 = [=](double t) { return -I * R * expi(t); };
    c.closed = true;
    return c;
}

inline ParametricCurve ellipse_curve(double a, double b) {
    ParametricCurve c;
    c.z = [=](double t) { return cplx(a * std::cos(t), b * std::sin(t)); };
    c.d1 = [=](double t) { return cplx(-a * std::sin(t), b * std::cos(t)); };
    c.d2 = [=](double t) { return cplx(-a * std::cos(t), -b * std::sin(t)); };
    c.d3 = [=](double t) { return cplx(a * std::sin(t), -b * std::cos(t)); };
    c.closed = true;
    return c;
}

// a cos t + i (a/2) sin 2t
inline ParametricCurve gerono_curve(double a = 1.0) {
    ParametricCurve c;
    c.z = [=](double t) { return cplx(a * std::cos(t), 0.5 * a * std::sin(2 * t)); };
    c.d1 = [=](double t) { return cplx(-a * std::sin(t), a * std::cos(2 * t)); };
    c.d2 = [=](double t) { return cplx(-a * std::cos(t), -2 * a * std::sin(2 * t)); };
    c.d3 = [=](double t) { return cplx(a * std::sin(t), -4 * a * std::cos(2 * t)); };
    c.closed = true;
    return c;
}

// e^{it} - e^{2it}
inline ParametricCurve limacon_curve() {
    ParametricCurve c;
    c.z = [](double t) { return expi(t) - expi(2 * t); };
    c.d1 = [](double t) { return I * expi(t) - 2.0 * I * expi(2 * t); };
    c.d2 = [](double t) { return -expi(t) + 4.0 * expi(2 * t); };
    c.d3 = [](double t) { return -I * expi(t) + 8.0 * I * expi(2 * t); };
    c.closed = true;
    return c;
}

// ------------------------------------------------------------------ metrics

inline double enclosed_area(const ParametricCurve& c, QuadratureOptions opt = {}) {
    if (!c.closed) throw NotClosed();
    return 0.5 * integrate([&](double t) { return quasi_vector_product(c(t), c.der(t, 1)); }, c.t0, c.t1,
                           c.knots, opt);
}

inline double partial_area(const ParametricCurve& c, double a, double b, QuadratureOptions opt = {}) {
    return 0.5 * integrate([&](double t) { return quasi_vector_product(c(t), c.der(t, 1)); }, a, b, c.knots,
                           opt);
}

inline double arc_length(const ParametricCurve& c, double a, double b, QuadratureOptions opt = {}) {
    return integrate([&](double t) { return std::abs(c.der(t, 1)); }, a, b, c.knots, opt);
}

inline double arc_length(const ParametricCurve& c, QuadratureOptions opt = {}) {
    return arc_length(c, c.t0, c.t1, opt);
}

// --------------------------------------------------------------- curvature

struct OsculatingCircle {
    cplx center{};
    double radius = 0.0;
    double curvature = 0.0;
};

struct CurvatureInfo {
    double kappa = 0.0;
    std::optional<OsculatingCircle> osc; // empty where kappa == 0
};

inline double regular_speed(const ParametricCurve& c, double t, cplx d1) {
    double sp = std::abs(d1);
    double scale = std::max(1.0, std::abs(c(t)));
    if (sp <= 1e-12 * scale) throw SingularPoint();
    return sp;
}

inline CurvatureInfo curvature(const ParametricCurve& c, double t) {
    cplx d1 = c.der(t, 1), d2 = c.der(t, 2);
    double sp = regular_speed(c, t, d1);
    CurvatureInfo out;
    out.kappa = quasi_vector_product(d1, d2) / (sp * sp * sp);
    if (out.kappa != 0.0) {
        OsculatingCircle o;
        o.curvature = out.kappa;
        o.radius = 1.0 / std::abs(out.kappa);
        o.center = c(t) + (I / out.kappa) * d1 / sp;
        out.osc = o;
    }
    return out;
}

inline double kappa(const ParametricCurve& c, double t) { return curvature(c, t).kappa; }

// numerator |z'|^2 [z',z'''] - 3 [z',z''] <z',z''>
inline double kappa_prime_numerator(const ParametricCurve& c, double t) {
    cplx d1 = c.der(t, 1), d2 = c.der(t, 2), d3 = c.der(t, 3);
    return std::norm(d1) * quasi_vector_product(d1, d3) -
           3.0 * quasi_vector_product(d1, d2) * scalar_product(d1, d2);
}

inline double kappa_prime(const ParametricCurve& c, double t) {
    double sp = regular_speed(c, t, c.der(t, 1));
    return kappa_prime_numerator(c, t) / std::pow(sp, 5);
}

// ------------------------------------------------- evolute, involute, offset

struct CurveSample {
    cplx z{};
    bool singular = false;
};

inline CurveSample evolute_sample(const ParametricCurve& c, double t) {
    try {
        auto ci = curvature(c, t);
        if (!ci.osc) return {cplx(NAN, NAN), true};
        return {ci.osc->center, false};
    } catch (const SingularPoint&) {
        return {cplx(NAN, NAN), true};
    }
}

inline ParametricCurve evolute(const ParametricCurve& c) {
    ParametricCurve e;
    e.z = [c](double t) {
        auto ci = curvature(c, t);
        if (!ci.osc) throw SingularPoint("evolute: zero curvature");
        return ci.osc->center;
    };
    e.t0 = c.t0;
    e.t1 = c.t1;
    e.closed = c.closed;
    e.knots = c.knots;
    return e;
}

// z(t) - T(t) * integral_a^t |z'|
inline ParametricCurve involute(const ParametricCurve& c, double a) {
    ParametricCurve v;
    auto s = [c, a](double t) { return arc_length(c, a, t); };
    v.z = [c, s](double t) {
        cplx d1 = c.der(t, 1);
        return c(t) - d1 / std::abs(d1) * s(t);
    };
    // z_a' = -kappa |z'| i T s
    v.d1 = [c, s](double t) {
        cplx d1 = c.der(t, 1), d2 = c.der(t, 2);
        double sp = std::abs(d1);
        double w = quasi_vector_product(d1, d2) / (sp * sp); // kappa |z'|
        return -I * w * (d1 / sp) * s(t);
    };
    if (c.analytic(3)) {
        v.d2 = [c, s](double t) {
            cplx d1 = c.der(t, 1), d2 = c.der(t, 2), d3 = c.der(t, 3);
            double n = std::norm(d1), sp = std::sqrt(n);
            double q = quasi_vector_product(d1, d2);
            double w = q / n;
            double wp = (quasi_vector_product(d1, d3) * n - 2.0 * q * scalar_product(d1, d2)) / (n * n);
            cplx T = d1 / sp;
            return -I * s(t) * (wp * T + w * w * I * T) - I * w * T * sp;
        };
    }
    v.t0 = c.t0;
    v.t1 = c.t1;
    v.knots = c.knots;
    return v;
}

// z + i lambda T ; z' (1 - lambda kappa)
inline ParametricCurve parallel_curve(const ParametricCurve& c, double lambda) {
    ParametricCurve p;
    p.z = [c, lambda](double t) {
        cplx d1 = c.der(t, 1);
        return c(t) + I * lambda * d1 / regular_speed(c, t, d1);
    };
    p.d1 = [c, lambda](double t) { return c.der(t, 1) * (1.0 - lambda * kappa(c, t)); };
    if (c.analytic(3)) {
        p.d2 = [c, lambda](double t) {
            return c.der(t, 2) * (1.0 - lambda * kappa(c, t)) - lambda * kappa_prime(c, t) * c.der(t, 1);
        };
    }
    p.t0 = c.t0;
    p.t1 = c.t1;
    p.closed = c.closed;
    p.knots = c.knots;
    return p;
}

// unit tangent and its derivative, for the Frenet check
inline cplx unit_tangent(const ParametricCurve& c, double t) {
    cplx d1 = c.der(t, 1);
    return d1 / std::abs(d1);
}

// ----------------------------------------------------------- sampled search

inline std::vector<double> sample_params(const ParametricCurve& c, int n, bool offset = true) {
    std::vector<double> ts(n);
    double h = (c.t1 - c.t0) / (c.closed ? n : n - 1);
    for (int i = 0; i < n; ++i) ts[i] = c.t0 + (i + (offset && c.closed ? 0.5 : 0.0)) * h;
    return ts;
}

// roots of g by sign changes on the sample grid, cyclic for closed curves
template <class G>
std::vector<double> sampled_roots(const ParametricCurve& c, G&& g, int n) {
    auto ts = sample_params(c, n);
    std::vector<double> v(n);
    for (int i = 0; i < n; ++i) v[i] = g(ts[i]);
    std::vector<double> roots;
    int m = c.closed ? n : n - 1;
    double period = c.t1 - c.t0;
    for (int i = 0; i < m; ++i) {
        int j = (i + 1) % n;
        double a = ts[i], b = (j == 0) ? ts[0] + period : ts[j];
        if (v[i] == 0.0) {
            roots.push_back(a);
            continue;
        }
        if (v[i] * v[j] < 0.0) {
            double r = find_root_1d([&](double t) { return g(t); }, a, b);
            if (c.closed && r >= c.t1) r -= period;
            roots.push_back(r);
        }
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

struct CriticalPoints {
    std::vector<double> vertices;
    std::vector<double> inflections;
};

inline CriticalPoints critical_points(const ParametricCurve& c, int samples = 2048) {
    CriticalPoints out;
    out.vertices = sampled_roots(c, [&](double t) { return kappa_prime_numerator(c, t); }, samples);
    out.inflections = sampled_roots(c, [&](double t) { return quasi_vector_product(c.der(t, 1), c.der(t, 2)); },
                                    samples);
    return out;
}

struct Crossing {
    double ta = 0.0, tb = 0.0;
    cplx point{};
};

inline std::vector<Crossing> self_intersections(const ParametricCurve& c, int samples = 2048) {
    std::vector<Crossing> out;
    if (!c.closed) throw NotClosed();
    int n = samples;
    double period = c.t1 - c.t0;
    double h = period / n;
    std::vector<cplx> p(n + 1);
    for (int i = 0; i <= n; ++i) p[i] = c(c.t0 + i * h);
    double scale = 0.0;
    for (auto& q : p) scale = std::max(scale, std::abs(q));
    for (int i = 0; i < n; ++i) {
        cplx a0 = p[i], a1 = p[i + 1];
        double axlo = std::min(a0.real(), a1.real()), axhi = std::max(a0.real(), a1.real());
        double aylo = std::min(a0.imag(), a1.imag()), ayhi = std::max(a0.imag(), a1.imag());
        for (int j = i + 2; j < n; ++j) {
            if (i == 0 && j == n - 1) continue;
            cplx b0 = p[j], b1 = p[j + 1];
            if (std::max(b0.real(), b1.real()) < axlo || std::min(b0.real(), b1.real()) > axhi) continue;
            if (std::max(b0.imag(), b1.imag()) < aylo || std::min(b0.imag(), b1.imag()) > ayhi) continue;
            cplx da = a1 - a0, db = b1 - b0;
            double den = quasi_vector_product(da, db);
            if (den == 0.0) continue;
            double s = quasi_vector_product(b0 - a0, db) / den;
            double u = quasi_vector_product(b0 - a0, da) / den;
            if (s < 0.0 || s >= 1.0 || u < 0.0 || u >= 1.0) continue;
            Vec2 g{c.t0 + (i + s) * h, c.t0 + (j + u) * h};
            try {
                Vec2 r = find_root_2d(
                    [&](const Vec2& x) {
                        cplx d = c(x[0]) - c(x[1]);
                        return Vec2{d.real(), d.imag()};
                    },
                    g, {1e-12 * std::max(1.0, scale), 200});
                double ta = r[0], tb = r[1];
                auto wrap = [&](double t) { return t - period * std::floor((t - c.t0) / period); };
                ta = wrap(ta);
                tb = wrap(tb);
                if (ta > tb) std::swap(ta, tb);
                if (std::abs(tb - ta) < 1e-6 || std::abs(tb - ta - period) < 1e-6) continue;
                bool dup = false;
                for (auto& q : out)
                    if (std::abs(q.ta - ta) < 1e-7 && std::abs(q.tb - tb) < 1e-7) dup = true;
                if (!dup) out.push_back({ta, tb, c(ta)});
            } catch (const Error&) {
            }
        }
    }
    std::sort(out.begin(), out.end(), [](const Crossing& x, const Crossing& y) { return x.ta < y.ta; });
    return out;
}

struct PolylinePoint {
    double t;
    cplx z;
    double kappa;
};

inline std::vector<PolylinePoint> sample_polyline(const ParametricCurve& c, int n) {
    std::vector<PolylinePoint> out;
    for (int i = 0; i <= n; ++i) {
        double t = c.t0 + (c.t1 - c.t0) * i / n;
        double k = NAN;
        try {
            k = kappa(c, t);
        } catch (const SingularPoint&) {
        }
        out.push_back({t, c(t), k});
    }
    return out;
}

} // namespace kin2d
