#pragma once

#include <array>
#include <cmath>
#include <optional>
#include <string>

#include "kin2d/linkage.hpp"

namespace kin2d {

// Instantaneous state of a moving frame: origin jet, angle jet, e^{i theta} jet.
struct FrameState {
    CJet o{};
    Jet th{};
    CJet eps{};
};

inline FrameState frame_state(const PlanarMotion& m, double phi) {
    FrameState s;
    s.o = m.origin(phi);
    s.th = m.angle(phi);
    s.eps = unit_jet(s.th[0], s.th[1], s.th[2], s.th[3]);
    return s;
}

inline void require_rotation(const FrameState& s) {
    if (std::abs(s.th[1]) < 1e-10) throw PoleAtInfinity();
}

// z_Omega - (eps / eps^(n)) z_Omega^(n)
inline cplx pole(const FrameState& s, int n) {
    require_rotation(s);
    if (n < 1 || n > 3) throw DomainError("pole order must be 1, 2 or 3");
    if (std::abs(s.eps[n]) < 1e-10) throw PoleAtInfinity();
    return s.o[0] - s.eps[0] / s.eps[n] * s.o[n];
}
inline cplx pole(const PlanarMotion& m, double phi, int n) { return pole(frame_state(m, phi), n); }

struct Centrodes {
    cplx fixed{};
    cplx moving{};
};

inline Centrodes centrodes(const PlanarMotion& m, double phi) {
    auto s = frame_state(m, phi);
    require_rotation(s);
    cplx w = I * s.o[1] / s.th[1];
    return {s.o[0] + w, w * std::conj(s.eps[0])};
}

// u = ((theta'' + i theta'^2) / theta') (z_P2 - z_P1)
inline cplx pole_velocity(const FrameState& s) {
    cplx p1 = pole(s, 1), p2 = pole(s, 2);
    return (s.th[2] + I * s.th[1] * s.th[1]) / s.th[1] * (p2 - p1);
}
inline cplx pole_velocity(const PlanarMotion& m, double phi) { return pole_velocity(frame_state(m, phi)); }

// (eps''/eps - 2 eps''^2/eps'^2)(z_P2 - z_P1) + (eps'''/eps')(z_P3 - z_P1)
inline cplx pole_acceleration(const FrameState& s) {
    cplx p1 = pole(s, 1), p2 = pole(s, 2), p3 = pole(s, 3);
    const CJet& e = s.eps;
    return (e[2] / e[0] - 2.0 * e[2] * e[2] / (e[1] * e[1])) * (p2 - p1) + e[3] / e[1] * (p3 - p1);
}
inline cplx pole_acceleration(const PlanarMotion& m, double phi) { return pole_acceleration(frame_state(m, phi)); }

// parameter change phi = f(t): second pole with f', f''
inline cplx reparametrized_pole2(const FrameState& s, double f1, double f2) {
    const double t1 = s.th[1], t2 = s.th[2];
    return s.o[0] - (s.o[2] * f1 * f1 + s.o[1] * f2) / (I * (t2 * f1 * f1 + t1 * f2) - t1 * t1 * f1 * f1);
}

enum class CircleKind { inflection, stationary, zero_normal_jerk, zero_tangential_jerk };

inline const char* circle_name(CircleKind k) {
    switch (k) {
    case CircleKind::inflection: return "k1 inflection";
    case CircleKind::stationary: return "k2 stationary";
    case CircleKind::zero_normal_jerk: return "k3 zero-normal-jerk";
    default: return "k4 zero-tangential-jerk";
    }
}

struct CircleReport {
    CircleKind kind{};
    bool defined = false;
    Circle circle{};
};

inline std::array<CircleReport, 4> characteristic_circles(const FrameState& s) {
    std::array<CircleReport, 4> out{};
    for (int k = 0; k < 4; ++k) out[k].kind = static_cast<CircleKind>(k);
    const double t1 = s.th[1], t2 = s.th[2], t3 = s.th[3];
    cplx p1 = pole(s, 1);
    cplx u = pole_velocity(s);
    out[0].defined = true;
    out[0].circle = {p1 - 0.5 * I * u / t1, std::abs(u) / (2.0 * std::abs(t1))};
    if (std::abs(t2) > 1e-12) {
        out[1].defined = true;
        out[1].circle = {p1 + 0.5 * (t1 / t2) * u, 0.5 * std::abs(t1 / t2) * std::abs(u)};
    }
    const double num = std::pow(t1, 6) + 9 * t1 * t1 * t2 * t2 - 2 * std::pow(t1, 3) * t3 + t3 * t3;
    if (std::abs(t2) > 1e-12 && std::abs(s.eps[3]) > 1e-10) {
        cplx p3 = pole(s, 3);
        cplx d = p1 - p3;
        out[2].defined = true;
        out[2].circle = {0.5 * (p1 + p3 + I * ((t3 - t1 * t1 * t1) / (3 * t1 * t2)) * d),
                         std::sqrt(num / (36 * t1 * t1 * t2 * t2)) * std::abs(d)};
        double q = t3 - t1 * t1 * t1;
        if (std::abs(q) > 1e-12) {
            out[3].defined = true;
            out[3].circle = {0.5 * (p1 + p3 - I * (3 * t1 * t2 / q) * d), std::sqrt(num / (4 * q * q)) * std::abs(d)};
        }
    }
    return out;
}
inline std::array<CircleReport, 4> characteristic_circles(const PlanarMotion& m, double phi) {
    return characteristic_circles(frame_state(m, phi));
}

// F(z) = [z - z_P1, (theta'' + i theta'^2)(z - z_P2)], zero on the inflection circle
inline double inflection_residual(const FrameState& s, cplx z) {
    return quasi_vector_product(z - pole(s, 1), (s.th[2] + I * s.th[1] * s.th[1]) * (z - pole(s, 2)));
}

// [eps'(z - z_P1), eps'''(z - z_P3)], zero on the zero-normal-jerk circle
inline double zero_normal_jerk_residual(const FrameState& s, cplx z) {
    return quasi_vector_product(s.eps[1] * (z - pole(s, 1)), s.eps[3] * (z - pole(s, 3)));
}

// G(z), zero on the cubic of stationary curvature
inline double cubic_residual(const FrameState& s, cplx z) {
    require_rotation(s);
    cplx a = s.eps[1] * (z - pole(s, 1));
    cplx b = s.eps[2] * (z - pole(s, 2));
    cplx c = s.eps[3] * (z - pole(s, 3));
    return 3.0 * quasi_vector_product(a, b) * scalar_product(a, b) -
           s.th[1] * s.th[1] * std::norm(z - pole(s, 1)) * quasi_vector_product(a, c);
}
inline double cubic_residual(const PlanarMotion& m, double phi, cplx z) {
    return cubic_residual(frame_state(m, phi), z);
}

// second point of k1 and k3 via the radical line: z_U = 2 z_S - z_P1
inline cplx balls_point(const FrameState& s) {
    auto cs = characteristic_circles(s);
    if (!cs[2].defined) throw Undefined("zero-normal-jerk circle undefined");
    cplx z1 = cs[0].circle.center, z3 = cs[2].circle.center;
    double r1 = cs[0].circle.radius, r3 = cs[2].circle.radius;
    cplx d = std::conj(z1 - z3);
    if (std::abs(d) < 1e-12 * std::max(1.0, std::abs(z1))) throw Undefined("circles are concentric");
    cplx zs = (std::norm(z1) - std::norm(z3) - r1 * r1 + r3 * r3 + std::conj(z1) * z3 - z1 * std::conj(z3)) /
              (2.0 * d);
    return 2.0 * zs - pole(s, 1);
}
inline cplx balls_point(const PlanarMotion& m, double phi) { return balls_point(frame_state(m, phi)); }

// Circle-circle intersection of k1 and k3, the point farther from P1.
inline std::optional<cplx> balls_point_by_intersection(const FrameState& s) {
    auto cs = characteristic_circles(s);
    if (!cs[2].defined) return std::nullopt;
    cplx c1 = cs[0].circle.center, c3 = cs[2].circle.center;
    double r1 = cs[0].circle.radius, r3 = cs[2].circle.radius;
    double d = std::abs(c3 - c1);
    if (d == 0.0) return std::nullopt;
    double a = (r1 * r1 - r3 * r3 + d * d) / (2 * d);
    double h2 = r1 * r1 - a * a;
    if (h2 < 0) h2 = 0;
    cplx e = (c3 - c1) / d;
    cplx m = c1 + a * e, p = m + std::sqrt(h2) * I * e, q = m - std::sqrt(h2) * I * e;
    cplx p1 = pole(s, 1);
    return std::abs(p - p1) > std::abs(q - p1) ? p : q;
}

// trajectory of the frame point zeta: z = z_Omega + zeta eps
inline CJet frame_point_jet(const FrameState& s, cplx zeta) {
    CJet z{};
    for (int k = 0; k < 4; ++k) z[k] = s.o[k] + zeta * s.eps[k];
    return z;
}

inline ParametricCurve frame_point_curve(const PlanarMotion& m, cplx zeta, double t0 = 0, double t1 = 2 * pi) {
    ParametricCurve c;
    c.z = [m, zeta](double p) { return frame_point_jet(frame_state(m, p), zeta)[0]; };
    c.d1 = [m, zeta](double p) { return frame_point_jet(frame_state(m, p), zeta)[1]; };
    c.d2 = [m, zeta](double p) { return frame_point_jet(frame_state(m, p), zeta)[2]; };
    c.d3 = [m, zeta](double p) { return frame_point_jet(frame_state(m, p), zeta)[3]; };
    c.t0 = t0;
    c.t1 = t1;
    return c;
}

// frame coordinates of a fixed-plane point at this instant
inline cplx to_frame(const FrameState& s, cplx z) { return (z - s.o[0]) * std::conj(s.eps[0]); }

} // namespace kin2d
