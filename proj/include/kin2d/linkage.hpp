#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <vector>

#include "kin2d/curve.hpp"

namespace kin2d {

struct DyadSolution {
    cplx unit{};       // e^{i phi1}
    double phi1 = 0.0; // arg(unit)
    double d1 = NAN, d2 = NAN, d3 = NAN;
    bool singular = false; // stretched or folded: derivatives undefined
};

// Joint angle of bar l1 (from A) in the triangle A-C-B with |AC| = l1, |BC| = l2.
inline DyadSolution solve_dyad(double l1, double l2, const CJet& zA, const CJet& zB, int branch) {
    if (!(l1 > 0.0 && l2 > 0.0)) throw DomainError("dyad lengths must be positive");
    const double s = branch >= 0 ? 1.0 : -1.0;
    const double k = 2.0 * l1, l1sq = l1 * l1;
    cplx h = k * (zB[0] - zA[0]), h1 = k * (zB[1] - zA[1]), h2 = k * (zB[2] - zA[2]), h3 = k * (zB[3] - zA[3]);
    double hh = std::norm(h);
    double c = l2 * l2 - l1sq - hh / (4.0 * l1sq);
    double disc = hh - c * c;
    if (disc < 0.0) {
        if (disc < -1e-12 * std::max(hh, 1.0)) throw Unassemblable();
        disc = 0.0;
    }
    double c1 = -scalar_product(h, h1) / (2.0 * l1sq);
    double c2 = -(scalar_product(h1, h1) + scalar_product(h, h2)) / (2.0 * l1sq);
    double c3 = -(3.0 * scalar_product(h1, h2) + scalar_product(h, h3)) / (2.0 * l1sq);

    DyadSolution r;
    r.unit = cplx(-c, s * std::sqrt(disc)) / std::conj(h);
    r.unit /= std::abs(r.unit);
    r.phi1 = std::arg(r.unit);
    const cplx e = r.unit;
    double den = quasi_vector_product(h, e);
    if (std::abs(den) < 1e-9 * std::sqrt(hh)) {
        r.singular = true;
        return r;
    }
    double p1 = (scalar_product(h1, e) + c1) / den;
    double p2 = (scalar_product(h2 - p1 * p1 * h, e) - 2.0 * p1 * quasi_vector_product(h1, e) + c2) / den;
    double p3 = (scalar_product(h3 - 3.0 * p1 * p1 * h1 - 3.0 * p1 * p2 * h, e) -
                 quasi_vector_product(3.0 * p1 * h2 + 3.0 * p2 * h1 - p1 * p1 * p1 * h, e) + c3) /
                den;
    r.d1 = p1;
    r.d2 = p2;
    r.d3 = p3;
    return r;
}

// Law-of-cosines form: (zAB/|zAB|)(k +- i sqrt(1-k^2))
inline cplx dyad_unit_cosine_form(double l1, double l2, cplx zA, cplx zB, int branch) {
    cplx ab = zB - zA;
    double d = std::abs(ab);
    double k = (l1 * l1 - l2 * l2 + d * d) / (2.0 * l1 * d);
    if (std::abs(k) > 1.0 + 1e-12) throw Unassemblable();
    k = std::clamp(k, -1.0, 1.0);
    return ab / d * cplx(k, (branch >= 0 ? 1.0 : -1.0) * std::sqrt(1.0 - k * k));
}

inline const DyadSolution& require_regular(const DyadSolution& s) {
    if (s.singular) throw StretchedSingular();
    return s;
}

// derivatives of e^{i theta} from the angle jet
inline CJet unit_jet(double th, double t1, double t2, double t3) {
    cplx e = expi(th);
    return {e, I * t1 * e, (I * t2 - t1 * t1) * e, (I * (t3 - t1 * t1 * t1) - 3.0 * t1 * t2) * e};
}

inline CJet crank_jet(cplx pivot, double length, double phi) {
    CJet j = unit_jet(phi, 1.0, 0.0, 0.0);
    return {pivot + length * j[0], length * j[1], length * j[2], length * j[3]};
}

// ------------------------------------------------------------- five-bar

using AngleFn = std::function<Jet(double)>;

inline AngleFn affine_angle(double slope, double offset) {
    return [=](double p) { return Jet{slope * p + offset, slope, 0.0, 0.0}; };
}

struct FiveBarConfig {
    double l1 = 0, l2 = 0, l3 = 0, l4 = 0, l5 = 0, l6 = 0;
    double phi1 = 0; // frame bar angle
    double delta = 0; // coupler point offset angle on bar 3
    AngleFn psi;      // angle of bar 5 as function of crank angle
    int branch = 1;
};

struct CouplerState {
    CJet zK{};
    DyadSolution dyad;
};

inline CouplerState fivebar_state(const FiveBarConfig& cfg, double phi) {
    CJet zA = crank_jet(0.0, cfg.l2, phi);
    Jet ps = cfg.psi(phi);
    CJet w = unit_jet(ps[0], ps[1], ps[2], ps[3]);
    CJet zB{cfg.l1 * expi(cfg.phi1) + cfg.l5 * w[0], cfg.l5 * w[1], cfg.l5 * w[2], cfg.l5 * w[3]};
    CouplerState st;
    st.dyad = require_regular(solve_dyad(cfg.l3, cfg.l4, zA, zB, cfg.branch));
    CJet e3 = unit_jet(st.dyad.phi1, st.dyad.d1, st.dyad.d2, st.dyad.d3);
    cplx off = cfg.l6 * expi(cfg.delta);
    for (int k = 0; k < 4; ++k) st.zK[k] = zA[k] + off * e3[k];
    return st;
}

inline CJet fivebar_coupler(const FiveBarConfig& cfg, double phi) { return fivebar_state(cfg, phi).zK; }

inline ParametricCurve fivebar_curve(const FiveBarConfig& cfg) {
    ParametricCurve c;
    c.z = [cfg](double p) { return fivebar_coupler(cfg, p)[0]; };
    c.d1 = [cfg](double p) { return fivebar_coupler(cfg, p)[1]; };
    c.d2 = [cfg](double p) { return fivebar_coupler(cfg, p)[2]; };
    c.d3 = [cfg](double p) { return fivebar_coupler(cfg, p)[3]; };
    c.closed = true;
    return c;
}

struct LoopArea {
    std::vector<std::pair<double, double>> pieces; // parameter intervals
    double area = 0.0;
};

struct LoopAreaReport {
    double signed_total = 0.0;
    std::vector<LoopArea> loops;
    double absolute_total = 0.0;
    bool complete = true; // false when crossings interleave
};

// Peels innermost crossing intervals one at a time; the remainder is the last loop.
inline LoopAreaReport loop_areas(const ParametricCurve& c, const std::vector<Crossing>& crossings,
                                 QuadratureOptions opt = {}) {
    LoopAreaReport rep;
    rep.signed_total = enclosed_area(c, opt);
    std::vector<Crossing> active = crossings;
    std::vector<std::pair<double, double>> removed;
    auto inside = [](double t, double a, double b) { return t > a && t < b; };
    auto pieces_of = [&](double a, double b) {
        std::vector<std::pair<double, double>> rm;
        for (auto& r : removed)
            if (r.first >= a && r.second <= b) rm.push_back(r);
        std::sort(rm.begin(), rm.end());
        std::vector<std::pair<double, double>> out;
        double cur = a;
        for (auto& r : rm) {
            if (r.first < cur) continue;
            if (r.first > cur) out.push_back({cur, r.first});
            cur = r.second;
        }
        if (cur < b) out.push_back({cur, b});
        return out;
    };
    auto area_of = [&](const std::vector<std::pair<double, double>>& ps) {
        double s = 0.0;
        for (auto& p : ps) s += partial_area(c, p.first, p.second, opt);
        return s;
    };
    while (!active.empty()) {
        std::size_t pick = active.size();
        for (std::size_t i = 0; i < active.size() && pick == active.size(); ++i) {
            bool empty = true;
            for (std::size_t j = 0; j < active.size(); ++j)
                if (j != i && (inside(active[j].ta, active[i].ta, active[i].tb) ||
                               inside(active[j].tb, active[i].ta, active[i].tb)))
                    empty = false;
            if (empty) pick = i;
        }
        if (pick == active.size()) {
            rep.complete = false;
            break;
        }
        LoopArea l;
        l.pieces = pieces_of(active[pick].ta, active[pick].tb);
        l.area = area_of(l.pieces);
        rep.loops.push_back(l);
        removed.push_back({active[pick].ta, active[pick].tb});
        active.erase(active.begin() + static_cast<std::ptrdiff_t>(pick));
    }
    LoopArea rest;
    rest.pieces = pieces_of(c.t0, c.t1);
    rest.area = area_of(rest.pieces);
    rep.loops.push_back(rest);
    for (auto& l : rep.loops) rep.absolute_total += std::abs(l.area);
    return rep;
}

inline LoopAreaReport coupler_loop_areas(const FiveBarConfig& cfg, const std::vector<Crossing>& crossings,
                                         QuadratureOptions opt = {}) {
    return loop_areas(fivebar_curve(cfg), crossings, opt);
}

// ------------------------------------------------------------- four-bar

// moving frame: origin z_Omega(phi) and angle theta(phi), each with three derivatives
struct PlanarMotion {
    std::function<CJet(double)> origin;
    std::function<Jet(double)> angle;
};

// crank pivot A0, crank |A0A|, coupler |AB|, rocker |B0B|, rocker pivot B0
struct FourBarConfig {
    cplx crank_pivot{};
    double crank = 0, coupler = 0, rocker = 0;
    cplx rocker_pivot{};
    int branch = 1;
};

// coupler AB as moving plane; origin at the crank tip A
inline PlanarMotion fourbar_motion(const FourBarConfig& cfg) {
    PlanarMotion m;
    m.origin = [cfg](double p) { return crank_jet(cfg.crank_pivot, cfg.crank, p); };
    m.angle = [cfg](double p) {
        CJet zB{cfg.rocker_pivot, 0.0, 0.0, 0.0};
        auto s = require_regular(solve_dyad(cfg.coupler, cfg.rocker, crank_jet(cfg.crank_pivot, cfg.crank, p), zB,
                                            cfg.branch));
        return Jet{s.phi1, s.d1, s.d2, s.d3};
    };
    return m;
}

} // namespace kin2d
