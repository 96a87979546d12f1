#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <functional>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/special_functions/beta.hpp>
#include <boost/math/tools/roots.hpp>
#include <boost/math/tools/toms748_solve.hpp>

#include "kin2d/errors.hpp"
#include "kin2d/geom_core.hpp"

namespace kin2d {

// value and first three derivatives
using Jet = std::array<double, 4>;
using CJet = std::array<cplx, 4>;
using Knots = std::vector<double>;

// ---------------------------------------------------------------- quadrature

struct QuadratureOptions {
    double tol = 1e-12;      // relative to the L1 norm of the integrand
    unsigned max_depth = 18;
};

// Adaptive Gauss-Kronrod (15/61 points), split at the knots inside (a, b).
template <class F>
double integrate(F&& f, double a, double b, const Knots& knots = {}, QuadratureOptions opt = {}) {
    if (b < a) return -integrate(f, b, a, knots, opt);
    if (a == b) return 0.0;
    std::vector<double> pts{a};
    for (double k : knots)
        if (k > a && k < b) pts.push_back(k);
    std::sort(pts.begin() + 1, pts.end());
    pts.push_back(b);
    double sum = 0.0;
    for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
        double lo = pts[i], hi = pts[i + 1];
        if (hi - lo <= 0.0) continue;
        double err = 0.0, l1 = 0.0;
        double v = boost::math::quadrature::gauss_kronrod<double, 61>::integrate(
            [&](double t) { return f(t); }, lo, hi, opt.max_depth, opt.tol, &err, &l1);
        if (!std::isfinite(v)) throw NoConvergence("integrate: non-finite result");
        if (err > std::max(opt.tol, 1e-15) * std::max(l1, 1.0) * 1e3)
            throw NoConvergence("integrate: error estimate " + std::to_string(err));
        sum += v;
    }
    return sum;
}

// ------------------------------------------------------------- root finding

struct RootOptions {
    double tol = 1e-12;
    std::uintmax_t max_iter = 200;
};

template <class F>
double find_root_1d(F&& f, double lo, double hi, RootOptions opt = {}) {
    double flo = f(lo), fhi = f(hi);
    if (flo == 0.0) return lo;
    if (fhi == 0.0) return hi;
    if (!(flo * fhi < 0.0)) throw NoBracket();
    std::uintmax_t it = opt.max_iter;
    auto stop = [&](double x, double y) {
        return std::abs(y - x) <= opt.tol * std::max(1.0, std::abs(x));
    };
    auto r = boost::math::tools::toms748_solve([&](double x) { return f(x); }, lo, hi, flo, fhi,
                                               stop, it);
    if (it >= opt.max_iter && !stop(r.first, r.second)) throw NoConvergence("find_root_1d");
    return 0.5 * (r.first + r.second);
}

// Expand a bracket around a guess by doubling steps, then solve.
template <class F>
double find_root_near(F&& f, double guess, double step, RootOptions opt = {}, int max_expand = 40) {
    double f0 = f(guess);
    if (f0 == 0.0) return guess;
    for (int k = 0; k < max_expand; ++k, step *= 1.6) {
        double a = guess - step, b = guess + step;
        double fa = f(a), fb = f(b);
        if (fa * f0 <= 0.0) return find_root_1d(f, a, guess, opt);
        if (fb * f0 <= 0.0) return find_root_1d(f, guess, b, opt);
    }
    throw NoBracket("find_root_near");
}

using Vec2 = std::array<double, 2>;

// Damped Newton with a central-difference Jacobian and step halving.
template <class F>
Vec2 find_root_2d(F&& F2, Vec2 x, RootOptions opt = {}) {
    auto norm = [](const Vec2& v) { return std::hypot(v[0], v[1]); };
    Vec2 fx = F2(x);
    for (std::uintmax_t it = 0; it < opt.max_iter; ++it) {
        double r = norm(fx);
        if (r < opt.tol) return x;
        double J[2][2];
        for (int j = 0; j < 2; ++j) {
            double h = 1e-7 * std::max(1.0, std::abs(x[j]));
            Vec2 xp = x, xm = x;
            xp[j] += h;
            xm[j] -= h;
            Vec2 fp = F2(xp), fm = F2(xm);
            J[0][j] = (fp[0] - fm[0]) / (2 * h);
            J[1][j] = (fp[1] - fm[1]) / (2 * h);
        }
        double det = J[0][0] * J[1][1] - J[0][1] * J[1][0];
        double scale = std::max({std::abs(J[0][0]), std::abs(J[0][1]), std::abs(J[1][0]), std::abs(J[1][1])});
        if (!(std::abs(det) > 1e-14 * scale * scale)) throw SingularJacobian();
        Vec2 dx{-(J[1][1] * fx[0] - J[0][1] * fx[1]) / det, -(-J[1][0] * fx[0] + J[0][0] * fx[1]) / det};
        double lam = 1.0;
        Vec2 xn{}, fn{};
        bool accepted = false;
        for (int k = 0; k < 30; ++k, lam *= 0.5) {
            xn = {x[0] + lam * dx[0], x[1] + lam * dx[1]};
            fn = F2(xn);
            if (norm(fn) < r) {
                accepted = true;
                break;
            }
        }
        double stepn = lam * norm(dx);
        if (!accepted) {
            // no decrease possible: at the floating point floor
            if (r < std::sqrt(opt.tol)) return x;
            throw NoConvergence("find_root_2d: line search failed");
        }
        x = xn;
        fx = fn;
        if (stepn <= 4 * std::numeric_limits<double>::epsilon() * (1.0 + norm(x))) {
            if (norm(fx) < std::sqrt(opt.tol)) return x;
        }
    }
    if (norm(fx) < opt.tol) return x;
    throw NoConvergence("find_root_2d");
}

// ------------------------------------------------------- special functions

inline double reg_inc_beta(double x, double p, double q) {
    if (!(x >= 0.0 && x <= 1.0) || !(p > 0.0) || !(q > 0.0)) throw DomainError("reg_inc_beta");
    return boost::math::ibeta(p, q, x);
}

// ------------------------------------------------------------ fd validation

// Max relative error of a claimed derivative against central differences.
template <class F, class DF>
double fd_check(F&& f, DF&& df, const std::vector<double>& samples) {
    const double eps = std::numeric_limits<double>::epsilon();
    double worst = 0.0;
    for (double t : samples) {
        double h = std::cbrt(eps) * std::max(1.0, std::abs(t));
        auto cd = (f(t + h) - f(t - h)) / (2.0 * h);
        auto d = df(t);
        double scale = std::max(1.0, std::abs(d));
        worst = std::max(worst, std::abs(d - cd) / scale);
    }
    return worst;
}

// ------------------------------------------------------------- motion laws

enum class SegmentKind { dwell, rise_beta, return_sine, hump_sine };

struct Segment {
    SegmentKind kind = SegmentKind::dwell;
    double span = 0.0;      // radians
    double amplitude = 0.0; // change of level (rise/return) or peak (hump)
    double a = 0.0;         // shape exponent
    double b = 0.0;         // second beta exponent (rise_beta only)

    static Segment dwell(double span) { return {SegmentKind::dwell, span, 0.0, 0.0, 0.0}; }
    static Segment rise(double span, double amp, double a, double b) {
        return {SegmentKind::rise_beta, span, amp, a, b};
    }
    static Segment ret(double span, double amp, double a) {
        return {SegmentKind::return_sine, span, amp, a, 0.0};
    }
    static Segment hump(double span, double amp, double m) {
        return {SegmentKind::hump_sine, span, amp, m, 0.0};
    }
};

namespace detail {

// c * x^k, zero when c == 0 regardless of k
inline double term(double c, double x, double k) {
    if (c == 0.0) return 0.0;
    return c * std::pow(x, k);
}

// f_{a,b}(x) = I(x; a+1, b+1) and its x-derivatives
inline Jet beta_rise(double x, double a, double b) {
    x = std::clamp(x, 0.0, 1.0);
    double B = boost::math::beta(a + 1.0, b + 1.0);
    double y = 1.0 - x;
    Jet j{};
    j[0] = boost::math::ibeta(a + 1.0, b + 1.0, x);
    j[1] = term(1.0, x, a) * term(1.0, y, b) / B;
    j[2] = (term(a, x, a - 1) * term(1.0, y, b) - term(1.0, x, a) * term(b, y, b - 1)) / B;
    j[3] = (term(a * (a - 1), x, a - 2) * term(1.0, y, b) - 2.0 * term(a, x, a - 1) * term(b, y, b - 1) +
            term(1.0, x, a) * term(b * (b - 1), y, b - 2)) / B;
    return j;
}

// derivatives of h(x) = sin^m(pi x) for x in [0, 1]
inline Jet sine_power(double x, double m) {
    double s = std::max(0.0, std::sin(pi * x)), c = std::cos(pi * x);
    Jet j{};
    j[0] = term(1.0, s, m);
    j[1] = m * pi * term(1.0, s, m - 1) * c;
    j[2] = m * pi * pi * (term(m - 1, s, m - 2) * c * c - term(1.0, s, m));
    j[3] = m * pi * pi * pi * (term((m - 1) * (m - 2), s, m - 3) * c * c * c - term(3 * m - 2, s, m - 1) * c);
    return j;
}

// g_a(x) = I(sin^2(pi x / 2); p, p), p = (a+1)/2; g' = C sin^a(pi x)
inline Jet sine_return(double x, double a) {
    x = std::clamp(x, 0.0, 1.0);
    double p = 0.5 * (a + 1.0);
    double C = pi / (std::pow(2.0, a) * boost::math::beta(p, p));
    double s = std::sin(0.5 * pi * x);
    Jet h = sine_power(x, a);
    return {boost::math::ibeta(p, p, s * s), C * h[0], C * h[1], C * h[2]};
}

} // namespace detail

// 2 pi periodic piecewise law built from consecutive segments starting at level 0.
class MotionLaw {
public:
    MotionLaw() = default;

    explicit MotionLaw(std::vector<Segment> segs) : segs_(std::move(segs)) {
        double t = 0.0, level = 0.0;
        for (const auto& s : segs_) {
            if (!(s.span > 0.0)) throw BadPartition("segment span must be positive");
            starts_.push_back(t);
            levels_.push_back(level);
            t += s.span;
            if (s.kind == SegmentKind::rise_beta) level += s.amplitude;
            if (s.kind == SegmentKind::return_sine) level -= s.amplitude;
        }
        if (segs_.empty() || std::abs(t - 2.0 * pi) > 1e-9) throw BadPartition("spans must sum to 2 pi");
        if (std::abs(level) > 1e-12 * std::max(1.0, max_amplitude())) throw BadPartition("law does not close");
        for (std::size_t i = 1; i < starts_.size(); ++i) knots_.push_back(starts_[i]);
    }

    Jet jet(double phi) const {
        double t = phi - 2.0 * pi * std::floor(phi / (2.0 * pi));
        std::size_t i = segs_.size() - 1;
        for (std::size_t k = 0; k + 1 < segs_.size(); ++k)
            if (t < starts_[k + 1]) {
                i = k;
                break;
            }
        const Segment& s = segs_[i];
        double u = (t - starts_[i]) / s.span;
        Jet h{};
        double amp = s.amplitude;
        switch (s.kind) {
        case SegmentKind::dwell: break;
        case SegmentKind::rise_beta: h = detail::beta_rise(u, s.a, s.b); break;
        case SegmentKind::return_sine: h = detail::sine_return(u, s.a); amp = -amp; break;
        case SegmentKind::hump_sine: h = detail::sine_power(std::clamp(u, 0.0, 1.0), s.a); break;
        }
        Jet out{levels_[i], 0.0, 0.0, 0.0};
        double sc = 1.0;
        for (int k = 0; k < 4; ++k) {
            out[k] += amp * h[k] * sc;
            sc /= s.span;
        }
        return out;
    }

    double operator()(double phi, int order = 0) const { return jet(phi)[order]; }
    const Knots& knots() const { return knots_; }
    const std::vector<Segment>& segments() const { return segs_; }
    double start(std::size_t i) const { return starts_[i]; }

private:
    double max_amplitude() const {
        double m = 0.0;
        for (const auto& s : segs_) m = std::max(m, std::abs(s.amplitude));
        return m;
    }
    std::vector<Segment> segs_;
    std::vector<double> starts_, levels_;
    Knots knots_;
};

inline MotionLaw make_motion_law(std::vector<Segment> segments) { return MotionLaw(std::move(segments)); }

// dwell-rise-dwell-return-dwell law used by the cam examples
inline MotionLaw standard_cam_law(double amplitude) {
    return make_motion_law({Segment::rise(5 * pi / 6, amplitude, 3, 2), Segment::dwell(pi / 3),
                            Segment::ret(2 * pi / 3, amplitude, 3), Segment::dwell(pi / 6)});
}

} // namespace kin2d
