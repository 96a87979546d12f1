#pragma once

#include <cmath>
#include <complex>
#include <numbers>

#include "kin2d/errors.hpp"

namespace kin2d {

using cplx = std::complex<double>;

inline constexpr double pi = std::numbers::pi;
inline constexpr cplx I{0.0, 1.0};

inline cplx expi(double a) { return {std::cos(a), std::sin(a)}; }
inline double deg(double rad) { return rad * 180.0 / pi; }
inline double rad(double deg) { return deg * pi / 180.0; }

// <z1,z2> = x1 x2 + y1 y2
inline double scalar_product(cplx z1, cplx z2) {
    return z1.real() * z2.real() + z1.imag() * z2.imag();
}

// [z1,z2] = x1 y2 - y1 x2 = Im(conj(z1) z2)
inline double quasi_vector_product(cplx z1, cplx z2) {
    return z1.real() * z2.imag() - z1.imag() * z2.real();
}

// nested form [z1,[z2,z3]] with the inner real value promoted to s + 0i
inline double nested_qvp(cplx z1, cplx z2, cplx z3) {
    return quasi_vector_product(z1, cplx(quasi_vector_product(z2, z3), 0.0));
}

// principal value in (-pi, pi]
inline double normalize_angle(double a) {
    double r = std::remainder(a, 2.0 * pi);
    if (r <= -pi) r += 2.0 * pi;
    return r;
}

// oriented angle from z1 to z2 in (-pi, pi]
inline double oriented_angle(cplx z1, cplx z2) {
    return normalize_angle(std::atan2(quasi_vector_product(z1, z2), scalar_product(z1, z2)));
}

// unoriented angle in [0, pi]
inline double angle_between(cplx z1, cplx z2) {
    return std::abs(oriented_angle(z1, z2));
}

struct Line {
    double a = 0.0;     // signed support distance
    double phi = 0.0;   // normal angle, (-pi, pi]
    cplx point{};       // foot of the perpendicular from the origin
    cplx dir{0.0, 1.0}; // unit direction, i e^{i phi}

    static Line from_support(double a, double phi) {
        Line g;
        g.a = a;
        g.phi = normalize_angle(phi);
        g.dir = I * expi(g.phi);
        g.point = a * expi(g.phi);
        return g;
    }

    static Line through(cplx p, cplx direction) {
        double len = std::abs(direction);
        if (!(len > 0.0)) throw DomainError("Line: zero direction");
        cplx t = direction / len;
        cplx n = -I * t;
        return from_support(scalar_product(p, n), std::arg(n));
    }

    // line equation [z, t] = c
    double qvp_constant() const { return quasi_vector_product(point, dir); }
};

inline cplx intersect_lines(const Line& g1, const Line& g2, double tol = 1e-12) {
    double den = quasi_vector_product(g1.dir, g2.dir);
    if (std::abs(den) <= tol * std::abs(g1.dir) * std::abs(g2.dir)) throw ParallelLines();
    double c1 = g1.qvp_constant(), c2 = g2.qvp_constant();
    return (c2 * g1.dir - c1 * g2.dir) / den;
}

// d = <z, e^{i phi}> - a
inline double point_line_distance(cplx z, const Line& g) {
    return scalar_product(z, expi(g.phi)) - g.a;
}

struct Circle {
    cplx center{};
    double radius = 0.0;
};

// triangle (0, z1, z2)
inline Circle circumcircle(cplx z1, cplx z2, double tol = 1e-12) {
    double q = quasi_vector_product(z1, z2);
    if (std::abs(q) <= tol * std::abs(z1) * std::abs(z2)) throw DegenerateTriangle();
    cplx c = I * (z1 * std::norm(z2) - z2 * std::norm(z1)) / (2.0 * q);
    return {c, std::abs(c)};
}

inline Circle incircle(cplx z1, cplx z2, double tol = 1e-12) {
    double q = quasi_vector_product(z1, z2);
    if (std::abs(q) <= tol * std::abs(z1) * std::abs(z2)) throw DegenerateTriangle();
    double a1 = std::abs(z1), a2 = std::abs(z2), a3 = std::abs(z2 - z1);
    double s = a1 + a2 + a3;
    return {(z1 * a2 + z2 * a1) / s, std::abs(q) / s};
}

// Residuals of the two inscribed-angle circle equations over chord z1 z2.
inline double inscribed_angle_residual_c1(cplx z, cplx z1, cplx z2, double gamma) {
    return quasi_vector_product((z - z1) * expi(gamma), z - z2);
}
inline double inscribed_angle_residual_c2(cplx z, cplx z1, cplx z2, double gamma) {
    return quasi_vector_product(z - z1, (z - z2) * expi(gamma));
}

} // namespace kin2d
