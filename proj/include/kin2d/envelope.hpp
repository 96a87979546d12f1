#pragma once

#include <cmath>
#include <functional>
#include <vector>

#include "kin2d/curve.hpp"

namespace kin2d {

using FamilyFn = std::function<cplx(double, double)>;

// z(t, lambda); when affine, z = base(t) + lambda * dir(t)
struct CurveFamily {
    FamilyFn z;
    FamilyFn z_t, z_l; // optional analytic partials
    double lambda_lo = -1e3, lambda_hi = 1e3;
    bool affine = false;
    CurveFn base, base_d1, dir, dir_d1;

    cplx dt(double t, double l) const {
        if (z_t) return z_t(t, l);
        double h = 1e-5 * std::max(1.0, std::abs(t));
        return (z(t + h, l) - z(t - h, l)) / (2 * h);
    }
    cplx dl(double t, double l) const {
        if (z_l) return z_l(t, l);
        double h = 1e-5 * std::max(1.0, std::abs(l));
        return (z(t, l + h) - z(t, l - h)) / (2 * h);
    }
    double bracket(double t, double l) const { return quasi_vector_product(dt(t, l), dl(t, l)); }
};

inline CurveFamily affine_family(CurveFn base, CurveFn base_d1, CurveFn dir, CurveFn dir_d1) {
    CurveFamily f;
    f.affine = true;
    f.base = base;
    f.base_d1 = base_d1;
    f.dir = dir;
    f.dir_d1 = dir_d1;
    f.z = [base, dir](double t, double l) { return base(t) + l * dir(t); };
    f.z_t = [base_d1, dir_d1](double t, double l) { return base_d1(t) + l * dir_d1(t); };
    f.z_l = [dir](double t, double) { return dir(t); };
    return f;
}

struct EnvelopeOptions {
    int lambda_samples = 256;
    std::function<double(double)> lambda_seed; // picks among several roots
};

// all roots of the envelope condition [z_t, z_l] = 0 at parameter t
inline std::vector<double> envelope_parameters(const CurveFamily& f, double t, int samples = 256) {
    if (f.affine) {
        // [p' + l q', q] = 0
        double den = quasi_vector_product(f.dir_d1(t), f.dir(t));
        double num = quasi_vector_product(f.base_d1(t), f.dir(t));
        double sc = std::abs(f.dir_d1(t)) * std::abs(f.dir(t));
        if (std::abs(den) <= 1e-14 * std::max(sc, 1e-300)) return {};
        return {-num / den};
    }
    std::vector<double> out;
    double h = (f.lambda_hi - f.lambda_lo) / samples;
    double prev = f.bracket(t, f.lambda_lo);
    for (int i = 1; i <= samples; ++i) {
        double l = f.lambda_lo + i * h;
        double v = f.bracket(t, l);
        if (prev * v < 0.0) out.push_back(find_root_1d([&](double x) { return f.bracket(t, x); }, l - h, l));
        else if (v == 0.0) out.push_back(l);
        prev = v;
    }
    return out;
}

inline double envelope_lambda(const CurveFamily& f, double t, const EnvelopeOptions& opt = {}) {
    auto ls = envelope_parameters(f, t, opt.lambda_samples);
    if (ls.empty()) throw NoEnvelopePoint("no envelope point at t = " + std::to_string(t));
    if (ls.size() == 1 || !opt.lambda_seed) return ls.front();
    double seed = opt.lambda_seed(t), best = ls.front();
    for (double l : ls)
        if (std::abs(l - seed) < std::abs(best - seed)) best = l;
    return best;
}

inline ParametricCurve envelope_general(const CurveFamily& f, double t0, double t1, bool closed,
                                        EnvelopeOptions opt = {}) {
    ParametricCurve c;
    c.z = [f, opt](double t) { return f.z(t, envelope_lambda(f, t, opt)); };
    c.t0 = t0;
    c.t1 = t1;
    c.closed = closed;
    return c;
}

struct EnvelopeTracePoint {
    double t, lambda;
    cplx z;
    bool branch_switch;
};

// continuation along t, seeding each solve with the previous lambda
inline std::vector<EnvelopeTracePoint> trace_envelope(const CurveFamily& f, const std::vector<double>& ts,
                                                      int samples = 256) {
    std::vector<EnvelopeTracePoint> out;
    double prev = NAN;
    for (double t : ts) {
        auto ls = envelope_parameters(f, t, samples);
        if (ls.empty()) throw NoEnvelopePoint("no envelope point at t = " + std::to_string(t));
        double l = ls.front();
        bool sw = false;
        if (!std::isnan(prev)) {
            for (double x : ls)
                if (std::abs(x - prev) < std::abs(l - prev)) l = x;
            sw = ls.size() > 1 && std::abs(l - prev) > 0.1 * (f.lambda_hi - f.lambda_lo) / samples * 8;
        }
        out.push_back({t, l, f.z(t, l), sw});
        prev = l;
    }
    return out;
}

// ------------------------------------------------------------ support form

struct SupportFunction {
    std::function<Jet(double)> a; // a, a', a'', a'''
    Knots knots;
};

// (a + i a') e^{i phi}
inline ParametricCurve envelope_from_support(const SupportFunction& s) {
    ParametricCurve c;
    auto a = s.a;
    c.z = [a](double p) {
        Jet j = a(p);
        return cplx(j[0], j[1]) * expi(p);
    };
    c.d1 = [a](double p) {
        Jet j = a(p);
        return I * (j[0] + j[2]) * expi(p);
    };
    c.d2 = [a](double p) {
        Jet j = a(p);
        return (I * (j[1] + j[3]) - (j[0] + j[2])) * expi(p);
    };
    c.closed = true;
    c.knots = s.knots;
    return c;
}

// line of the family with normal angle phi: (a + i lambda) e^{i phi}
inline CurveFamily support_line_family(const SupportFunction& s) {
    auto a = s.a;
    return affine_family([a](double p) { return a(p)[0] * expi(p); },
                         [a](double p) {
                             Jet j = a(p);
                             return (j[1] + I * j[0]) * expi(p);
                         },
                         [](double p) { return I * expi(p); }, [](double p) { return -expi(p); });
}

inline double support_of_convex(const ParametricCurve& c, double phi, int samples = 720) {
    cplx e = expi(phi);
    double h = (c.t1 - c.t0) / samples;
    int best = 0;
    double bv = -INFINITY;
    for (int i = 0; i < samples; ++i) {
        double v = scalar_product(c(c.t0 + i * h), e);
        if (v > bv) {
            bv = v;
            best = i;
        }
    }
    auto g = [&](double t) { return scalar_product(c.der(t, 1), e); };
    double a = c.t0 + (best - 1) * h, b = c.t0 + (best + 1) * h;
    try {
        double t = find_root_1d(g, a, b);
        return std::max(bv, scalar_product(c(t), e));
    } catch (const NoBracket&) {
        return bv;
    }
}

} // namespace kin2d
