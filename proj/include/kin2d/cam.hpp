#pragma once

#include <algorithm>
#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include <boost/math/tools/minima.hpp>

#include "kin2d/curve.hpp"
#include "kin2d/envelope.hpp"
#include "kin2d/linkage.hpp"

namespace kin2d {

// Jet of Z(phi) e^{-i phi} from the jet of Z (general Leibniz rule).
inline CJet rotate_back(const CJet& Z, double phi) {
    static const double binom[4][4] = {{1, 0, 0, 0}, {1, 1, 0, 0}, {1, 2, 1, 0}, {1, 3, 3, 1}};
    const cplx w = expi(-phi);
    CJet out{};
    for (int k = 0; k < 4; ++k) {
        cplx s = 0.0;
        cplx f = 1.0;
        for (int j = k; j >= 0; --j) {
            s += binom[k][j] * Z[j] * f;
            f *= -I;
        }
        out[k] = s * w;
    }
    return out;
}

// e^{i(psi0 + psi)} and its derivatives
inline CJet follower_unit(double psi0, const Jet& ps) { return unit_jet(psi0 + ps[0], ps[1], ps[2], ps[3]); }

// roots of g on the interior of each non-dwell segment of a law
template <class G>
std::vector<double> law_segment_roots(const MotionLaw& law, G&& g, int per_segment = 400) {
    std::vector<double> out;
    const auto& segs = law.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].kind == SegmentKind::dwell) continue;
        double a = law.start(i), h = segs[i].span / per_segment;
        double pa = a + 1e-9 * h, va = g(pa);
        for (int k = 1; k <= per_segment; ++k) {
            double pb = a + k * h - (k == per_segment ? 1e-9 * h : 0.0), vb = g(pb);
            if (va * vb < 0.0) out.push_back(find_root_1d(g, pa, pb));
            pa = pb;
            va = vb;
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

// ===================================================== translating flat face

struct TranslatingFlatFaceCam {
    double r0 = 0.0;
    MotionLaw r;

    Jet support(double phi) const {
        Jet j = r.jet(phi);
        j[0] += r0;
        return j;
    }
};

struct TffPoint {
    cplx z{}, d1{}, d2{};
    cplx contact{}; // follower-frame contact point p - i p'
};

inline TffPoint tff_contour(const TranslatingFlatFaceCam& cam, double phi) {
    Jet p = cam.support(phi);
    cplx w = expi(-phi);
    TffPoint o;
    o.contact = cplx(p[0], -p[1]);
    o.z = o.contact * w;
    o.d1 = -I * (p[0] + p[2]) * w;
    o.d2 = (-I * (p[1] + p[3]) - (p[0] + p[2])) * w;
    return o;
}

inline ParametricCurve tff_curve(const TranslatingFlatFaceCam& cam) {
    ParametricCurve c;
    c.z = [cam](double p) { return tff_contour(cam, p).z; };
    c.d1 = [cam](double p) { return tff_contour(cam, p).d1; };
    c.d2 = [cam](double p) { return tff_contour(cam, p).d2; };
    c.closed = true;
    c.knots = cam.r.knots();
    return c;
}

// line family of the follower face in cam coordinates: (p + i lambda) e^{-i phi}
inline CurveFamily tff_line_family(const TranslatingFlatFaceCam& cam) {
    return affine_family([cam](double p) { return cam.support(p)[0] * expi(-p); },
                         [cam](double p) {
                             Jet j = cam.support(p);
                             return (j[1] - I * j[0]) * expi(-p);
                         },
                         [](double p) { return I * expi(-p); }, [](double p) { return expi(-p); });
}

inline double tff_radius_of_curvature(const TranslatingFlatFaceCam& cam, double phi) {
    Jet p = cam.support(phi);
    return p[0] + p[2];
}

inline double tff_kappa(const TranslatingFlatFaceCam& cam, double phi) {
    return -1.0 / tff_radius_of_curvature(cam, phi);
}

struct Extremum {
    double at = NAN;
    double value = NAN;
};

struct TffMetrics {
    double perimeter = 0.0;
    double signed_area = 0.0;
    double abs_area = 0.0;
    Extremum rho_min, rho_max;
    std::vector<double> dwell_radii;
};

inline TffMetrics tff_metrics(const TranslatingFlatFaceCam& cam, QuadratureOptions opt = {}) {
    TffMetrics m;
    const Knots& kn = cam.r.knots();
    m.perimeter = integrate([&](double t) { return cam.support(t)[0]; }, 0.0, 2 * pi, kn, opt);
    m.signed_area = -0.5 * integrate(
                               [&](double t) {
                                   Jet p = cam.support(t);
                                   return p[0] * p[0] - p[1] * p[1];
                               },
                               0.0, 2 * pi, kn, opt);
    m.abs_area = std::abs(m.signed_area);
    std::vector<Extremum> cand;
    for (double t : law_segment_roots(cam.r, [&](double t) {
             Jet j = cam.r.jet(t);
             return j[1] + j[3];
         }))
        cand.push_back({t, tff_radius_of_curvature(cam, t)});
    const auto& segs = cam.r.segments();
    for (std::size_t i = 0; i < segs.size(); ++i) {
        if (segs[i].kind != SegmentKind::dwell) continue;
        double mid = cam.r.start(i) + 0.5 * segs[i].span;
        double v = tff_radius_of_curvature(cam, mid);
        m.dwell_radii.push_back(v);
        cand.push_back({mid, v});
    }
    for (auto& c : cand) {
        if (std::isnan(m.rho_min.value) || c.value < m.rho_min.value) m.rho_min = c;
        if (std::isnan(m.rho_max.value) || c.value > m.rho_max.value) m.rho_max = c;
    }
    return m;
}

// base radius -(r + r'') at which each local minimum of r + r'' touches zero
inline std::vector<Extremum> tff_cusp_thresholds(const MotionLaw& r) {
    auto g = [&](double t) {
        Jet j = r.jet(t);
        return j[1] + j[3];
    };
    std::vector<Extremum> out;
    for (double t : law_segment_roots(r, g)) {
        double h = 1e-6;
        if (!(g(t - h) < 0.0 && g(t + h) > 0.0)) continue;
        Jet j = r.jet(t);
        out.push_back({t, -(j[0] + j[2])});
    }
    return out;
}

// smallest base radius without undercut (global minimum of r + r'')
inline Extremum tff_cusp_threshold(const MotionLaw& r) {
    Extremum best{0.0, 0.0};
    for (auto& e : tff_cusp_thresholds(r))
        if (e.value > best.value) best = e;
    return best;
}

enum class UndercutKind { convex, cusps, loop };

inline const char* undercut_name(UndercutKind k) {
    switch (k) {
    case UndercutKind::convex: return "convex";
    case UndercutKind::cusps: return "cusps";
    default: return "loop";
    }
}

struct UndercutReport {
    UndercutKind kind = UndercutKind::convex;
    std::vector<double> cusps;
    std::vector<Crossing> loops;
};

inline UndercutReport tff_undercut(const TranslatingFlatFaceCam& cam, int samples = 2048) {
    UndercutReport rep;
    auto rho = [&](double t) { return tff_radius_of_curvature(cam, t); };
    double scale = std::max(1.0, cam.r0);
    // sign changes of rho inside moving segments
    rep.cusps = law_segment_roots(cam.r, rho);
    // touching zeros: local extrema of rho with |rho| ~ 0
    for (double t : law_segment_roots(cam.r, [&](double t) {
             Jet j = cam.r.jet(t);
             return j[1] + j[3];
         }))
        if (std::abs(rho(t)) < 1e-7 * scale) {
            bool dup = false;
            for (double c : rep.cusps)
                if (std::abs(c - t) < 1e-6) dup = true;
            if (!dup) rep.cusps.push_back(t);
        }
    std::sort(rep.cusps.begin(), rep.cusps.end());
    if (!rep.cusps.empty()) {
        rep.kind = UndercutKind::cusps;
        rep.loops = self_intersections(tff_curve(cam), samples);
        if (!rep.loops.empty()) rep.kind = UndercutKind::loop;
    }
    return rep;
}

// transfer function after undercut: on [phi_a, phi_b] the face rides on the corner z_K(phi_a)
inline std::function<double(double)> tff_reduced_transfer(const TranslatingFlatFaceCam& cam, const Crossing& loop) {
    cplx corner = tff_contour(cam, loop.ta).z;
    return [cam, corner, a = loop.ta, b = loop.tb](double phi) {
        double t = phi - 2 * pi * std::floor(phi / (2 * pi));
        if (t >= a && t <= b) return (corner * expi(phi)).real() - cam.r0;
        return cam.r(phi);
    };
}

// ======================================================= swinging flat face

struct SwingingFlatFaceCam {
    cplx zB0{};
    double psi0 = 0.0;
    double a = 0.0;
    MotionLaw psi;
};

struct SffPoint {
    CJet z{};
    double lambda = 0, lambda1 = 0, lambda2 = 0;
    double kappa = NAN;
};

inline SffPoint sff_contour(const SwingingFlatFaceCam& cam, double phi, double tol = 1e-10) {
    Jet ps = cam.psi.jet(phi);
    double D = 1.0 - ps[1], D1 = -ps[2], D2 = -ps[3];
    if (std::abs(D) <= tol) throw FollowerSingular();
    CJet E = follower_unit(cam.psi0, ps);
    double N = quasi_vector_product(cam.zB0, E[0]);
    double Sp = scalar_product(cam.zB0, E[0]);
    double N1 = ps[1] * Sp;
    double N2 = ps[2] * Sp - ps[1] * ps[1] * N;
    SffPoint o;
    o.lambda = N / D;
    o.lambda1 = (N1 * D - N * D1) / (D * D);
    o.lambda2 = (N2 - 2.0 * o.lambda1 * D1 - o.lambda * D2) / D;
    cplx q = cplx(cam.a, o.lambda);
    // face point in fixed coordinates: zB0 + (a + i lambda) E
    CJet Z{cam.zB0 + q * E[0], I * o.lambda1 * E[0] + q * E[1],
           I * o.lambda2 * E[0] + 2.0 * I * o.lambda1 * E[1] + q * E[2], 0.0};
    o.z = rotate_back(Z, phi);
    double sp = std::abs(o.z[1]);
    if (sp > 0.0) o.kappa = quasi_vector_product(o.z[1], o.z[2]) / (sp * sp * sp);
    return o;
}

inline ParametricCurve sff_curve(const SwingingFlatFaceCam& cam) {
    ParametricCurve c;
    c.z = [cam](double p) { return sff_contour(cam, p).z[0]; };
    c.d1 = [cam](double p) { return sff_contour(cam, p).z[1]; };
    c.d2 = [cam](double p) { return sff_contour(cam, p).z[2]; };
    c.closed = true;
    c.knots = cam.psi.knots();
    return c;
}

// integral of kappa |z'| over one turn
inline double total_curvature(const ParametricCurve& c, QuadratureOptions opt = {}) {
    return integrate(
        [&](double t) {
            cplx d1 = c.der(t, 1), d2 = c.der(t, 2);
            return quasi_vector_product(d1, d2) / std::norm(d1);
        },
        c.t0, c.t1, c.knots, opt);
}

// ====================================================================== roller

struct RollerCam {
    cplx zB0{};
    double psi0 = 0.0;
    double l = 0.0;
    double rho = 0.0;
    MotionLaw psi;
};

// roller center in fixed coordinates
inline CJet roller_center_fixed(const RollerCam& cam, double phi) {
    CJet E = follower_unit(cam.psi0, cam.psi.jet(phi));
    return {cam.zB0 + cam.l * E[0], cam.l * E[1], cam.l * E[2], cam.l * E[3]};
}

struct RollerPoint {
    CJet zB{};
    cplx zK{};
    double kappa_B = NAN, kappa_K = NAN;
};

inline RollerPoint roller_curves(const RollerCam& cam, double phi) {
    RollerPoint o;
    o.zB = rotate_back(roller_center_fixed(cam, phi), phi);
    double sp = std::abs(o.zB[1]);
    if (sp <= 1e-12 * std::max(1.0, std::abs(o.zB[0]))) throw SingularPoint("roller center curve cusp");
    o.kappa_B = quasi_vector_product(o.zB[1], o.zB[2]) / (sp * sp * sp);
    o.zK = o.zB[0] - I * cam.rho * o.zB[1] / sp;
    double den = 1.0 + cam.rho * o.kappa_B;
    o.kappa_K = den == 0.0 ? INFINITY : o.kappa_B / den;
    return o;
}

inline ParametricCurve roller_center_curve(const RollerCam& cam) {
    ParametricCurve c;
    c.z = [cam](double p) { return rotate_back(roller_center_fixed(cam, p), p)[0]; };
    c.d1 = [cam](double p) { return rotate_back(roller_center_fixed(cam, p), p)[1]; };
    c.d2 = [cam](double p) { return rotate_back(roller_center_fixed(cam, p), p)[2]; };
    c.d3 = [cam](double p) { return rotate_back(roller_center_fixed(cam, p), p)[3]; };
    c.closed = true;
    c.knots = cam.psi.knots();
    return c;
}

inline ParametricCurve roller_contour_curve(const RollerCam& cam) {
    return parallel_curve(roller_center_curve(cam), -cam.rho);
}

struct RollerMetrics {
    double L_B = 0, L_K = 0, A_B = 0, A_K = 0;
    double L_K_identity = 0, A_K_identity = 0;
    double kappa_B_min = 0;
    bool identities_apply = false; // kappa_B >= -1/rho everywhere (sampled)
};

inline RollerMetrics roller_metrics(const RollerCam& cam, QuadratureOptions opt = {}, int samples = 4096) {
    RollerMetrics m;
    ParametricCurve cb = roller_center_curve(cam);
    const Knots& kn = cb.knots;
    m.L_B = arc_length(cb, opt);
    m.A_B = enclosed_area(cb, opt);
    auto kB = [&](double t) {
        cplx d1 = cb.der(t, 1), d2 = cb.der(t, 2);
        return quasi_vector_product(d1, d2) / std::pow(std::abs(d1), 3);
    };
    m.L_K = integrate([&](double t) { return std::abs(1.0 + cam.rho * kB(t)) * std::abs(cb.der(t, 1)); }, 0.0,
                      2 * pi, kn, opt);
    m.A_K = enclosed_area(roller_contour_curve(cam), opt);
    m.L_K_identity = m.L_B - 2 * pi * cam.rho;
    m.A_K_identity = m.A_B + cam.rho * m.L_B - pi * cam.rho * cam.rho;
    m.kappa_B_min = INFINITY;
    for (int i = 0; i < samples; ++i) m.kappa_B_min = std::min(m.kappa_B_min, kB(2 * pi * (i + 0.5) / samples));
    m.identities_apply = m.kappa_B_min >= -1.0 / cam.rho;
    return m;
}

// real form: arccos[(l(psi'-1) - xB0 cos(psi0+psi) - yB0 sin(psi0+psi)) / |z_B'|]
inline double transmission_angle(const RollerCam& cam, double phi) {
    Jet ps = cam.psi.jet(phi);
    CJet zB = rotate_back(roller_center_fixed(cam, phi), phi);
    double sp = std::abs(zB[1]);
    if (sp <= 1e-12) throw SingularPoint("transmission angle undefined");
    double g = cam.psi0 + ps[0];
    double c = (cam.l * (ps[1] - 1.0) - cam.zB0.real() * std::cos(g) - cam.zB0.imag() * std::sin(g)) / sp;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// complex form: arccos <i e^{i(psi0+psi)}, z_B' e^{i phi}> / |z_B'|
inline double transmission_angle_complex(const RollerCam& cam, double phi) {
    Jet ps = cam.psi.jet(phi);
    CJet zB = rotate_back(roller_center_fixed(cam, phi), phi);
    double sp = std::abs(zB[1]);
    if (sp <= 1e-12) throw SingularPoint("transmission angle undefined");
    double c = scalar_product(I * expi(cam.psi0 + ps[0]), zB[1] * expi(phi)) / sp;
    return std::acos(std::clamp(c, -1.0, 1.0));
}

// sampled arg-extremum of f on [0, 2 pi) polished by Brent
template <class F>
Extremum periodic_extremum(F&& f, bool maximize, int samples = 3600) {
    const double s = maximize ? -1.0 : 1.0;
    const double h = 2 * pi / samples;
    int best = 0;
    double bv = INFINITY;
    for (int i = 0; i < samples; ++i) {
        double v = s * f(i * h);
        if (v < bv) {
            bv = v;
            best = i;
        }
    }
    auto r = boost::math::tools::brent_find_minima([&](double t) { return s * f(t); }, (best - 1) * h,
                                                   (best + 1) * h, 50);
    if (r.second > bv) return {best * h, s * bv};
    double at = r.first - 2 * pi * std::floor(r.first / (2 * pi));
    return {at, s * r.second};
}

inline Extremum max_transmission_angle(const RollerCam& cam) {
    return periodic_extremum([&](double t) { return transmission_angle(cam, t); }, true);
}
inline Extremum min_transmission_angle(const RollerCam& cam) {
    return periodic_extremum([&](double t) { return transmission_angle(cam, t); }, false);
}

// ================================================================ A0 regions

struct FollowerSpec {
    cplx zB0{};
    double psi0 = 0.0;
    double l = 0.0;
    MotionLaw psi;
};

// point of C_{s mu} at phi, s = +1 or -1
inline cplx a0_envelope_point(const FollowerSpec& f, double mu, int s, double phi) {
    Jet ps = f.psi.jet(phi);
    double sm = s * mu;
    double lam = -f.l * ((1.0 - ps[1]) * std::cos(sm) + ps[2] / ps[1] * std::sin(sm));
    return f.zB0 + (f.l * (1.0 - ps[1]) + lam * expi(sm)) * expi(f.psi0 + ps[0]);
}

// line g_{s mu, phi}: through zB + i zB' with direction e^{i(psi0 + psi + s mu)}
inline Line a0_family_line(const FollowerSpec& f, double mu, int s, double phi) {
    Jet ps = f.psi.jet(phi);
    cplx p = f.zB0 + f.l * (1.0 - ps[1]) * expi(f.psi0 + ps[0]);
    return Line::through(p, expi(f.psi0 + ps[0] + s * mu));
}

struct EnvelopeBranch {
    int sign = 1;
    double t0 = 0, t1 = 0; // segment interval (open)
    std::vector<std::pair<double, cplx>> samples;
};

struct A0Candidate {
    double phi_plus = 0, phi_minus = 0;
    cplx point{};
    double mu_min = 0, mu_max = 0;
    bool admissible = false;
    bool p_cam = false; // |A0 B| decreases while follower and cam turn alike
    double max_radius = NAN;
};

struct A0Options {
    int samples_per_segment = 1500;
    double radius_limit = 0.0; // default 4 l
    double rho = 10.0;         // roller radius for the max-radius report
    double admissible_tol = 1e-6;
    bool mirror = false;       // negative cam rotation: P and F swap roles
};

struct A0Report {
    std::vector<EnvelopeBranch> branches;
    std::vector<A0Candidate> candidates;
};

inline RollerCam cam_about(const FollowerSpec& f, cplx A0, double rho) {
    return {f.zB0 - A0, f.psi0, f.l, rho, f.psi};
}

inline A0Report a0_regions(const FollowerSpec& f, double mu, A0Options opt = {}) {
    A0Report rep;
    const double lim = opt.radius_limit > 0 ? opt.radius_limit : 4.0 * f.l + std::abs(f.zB0);
    const auto& segs = f.psi.segments();
    for (int s : {+1, -1})
        for (std::size_t i = 0; i < segs.size(); ++i) {
            if (segs[i].kind == SegmentKind::dwell) continue;
            EnvelopeBranch b;
            b.sign = s;
            b.t0 = f.psi.start(i);
            b.t1 = b.t0 + segs[i].span;
            int n = opt.samples_per_segment;
            for (int k = 1; k < n; ++k) {
                double t = b.t0 + segs[i].span * k / n;
                if (std::abs(f.psi(t, 1)) < 1e-8) continue;
                b.samples.push_back({t, a0_envelope_point(f, mu, s, t)});
            }
            rep.branches.push_back(std::move(b));
        }

    auto F = [&](const Vec2& x) {
        cplx d = a0_envelope_point(f, mu, +1, x[0]) - a0_envelope_point(f, mu, -1, x[1]);
        return Vec2{d.real(), d.imag()};
    };
    for (const auto& bp : rep.branches) {
        if (bp.sign != 1) continue;
        for (const auto& bm : rep.branches) {
            if (bm.sign != -1) continue;
            for (std::size_t i = 0; i + 1 < bp.samples.size(); ++i) {
                cplx a0 = bp.samples[i].second, a1 = bp.samples[i + 1].second;
                if (std::abs(a0) > lim || std::abs(a1) > lim) continue;
                for (std::size_t j = 0; j + 1 < bm.samples.size(); ++j) {
                    cplx b0 = bm.samples[j].second, b1 = bm.samples[j + 1].second;
                    if (std::abs(b0) > lim || std::abs(b1) > lim) continue;
                    cplx da = a1 - a0, db = b1 - b0;
                    double den = quasi_vector_product(da, db);
                    if (den == 0.0) continue;
                    double u = quasi_vector_product(b0 - a0, db) / den;
                    double v = quasi_vector_product(b0 - a0, da) / den;
                    if (u < 0 || u >= 1 || v < 0 || v >= 1) continue;
                    Vec2 g{bp.samples[i].first + u * (bp.samples[i + 1].first - bp.samples[i].first),
                           bm.samples[j].first + v * (bm.samples[j + 1].first - bm.samples[j].first)};
                    try {
                        Vec2 x = find_root_2d(F, g, {1e-11 * std::max(1.0, f.l), 200});
                        A0Candidate c;
                        c.phi_plus = x[0];
                        c.phi_minus = x[1];
                        c.point = a0_envelope_point(f, mu, +1, x[0]);
                        bool dup = false;
                        for (auto& q : rep.candidates)
                            if (std::abs(q.point - c.point) < 1e-8 * std::max(1.0, f.l)) dup = true;
                        if (!dup) rep.candidates.push_back(c);
                    } catch (const Error&) {
                    }
                }
            }
        }
    }

    for (auto& c : rep.candidates) {
        RollerCam rc = cam_about(f, c.point, opt.rho);
        c.mu_min = min_transmission_angle(rc).value;
        c.mu_max = max_transmission_angle(rc).value;
        c.admissible = c.mu_min >= mu - opt.admissible_tol && c.mu_max <= pi - mu + opt.admissible_tol;
        // d|B - A0|^2/dphi sampled in the middle of the first moving segment, where psi' != 0
        double tm = NAN;
        for (std::size_t i = 0; i < segs.size() && std::isnan(tm); ++i)
            if (segs[i].kind != SegmentKind::dwell) tm = f.psi.start(i) + 0.5 * segs[i].span;
        Jet ps = f.psi.jet(tm);
        CJet E = follower_unit(f.psi0, ps);
        cplx zB = f.zB0 + f.l * E[0];
        double rate = scalar_product(zB - c.point, f.l * E[1]);
        bool same_dir_closing = (ps[1] > 0) == (rate < 0);
        c.p_cam = opt.mirror ? !same_dir_closing : same_dir_closing;
        c.max_radius = periodic_extremum([&](double t) { return std::abs(roller_curves(rc, t).zK); }, true).value;
    }
    return rep;
}

} // namespace kin2d
