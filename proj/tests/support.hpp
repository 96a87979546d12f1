#pragma once

#include <random>
#include <vector>

#include "kin2d/geom_core.hpp"

namespace kin2d::test {

// fixed-seed source so failures are reproducible
class Rng {
public:
    explicit Rng(unsigned long long seed = 20240611ULL) : gen_(seed) {}
    double uniform(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(gen_); }
    cplx point(double r = 10.0) { return {uniform(-r, r), uniform(-r, r)}; }

private:
    std::mt19937_64 gen_;
};

// parameters on (t0, t1), kept away from the ends and from every knot by `margin`
inline std::vector<double> interior(double t0, double t1, int n, const std::vector<double>& knots = {},
                                    double margin = 1e-3) {
    std::vector<double> out;
    for (int i = 0; i < n; ++i) {
        double t = t0 + (t1 - t0) * (i + 0.5) / n;
        bool near = t - t0 < margin || t1 - t < margin;
        for (double k : knots) near = near || std::abs(t - k) < margin;
        if (!near) out.push_back(t);
    }
    return out;
}

inline double rel(double got, double want) { return std::abs(got - want) / std::max(1.0, std::abs(want)); }

} // namespace kin2d::test
