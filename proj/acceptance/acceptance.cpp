// Recomputes every acceptance criterion and prints one PASS/FAIL line per criterion.
// Exit status is 0 iff the set of failing criteria equals the --expect-fail set (empty by default).

#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>

#include "kin2d/envelope.hpp"
#include "kin2d/presets.hpp"

using namespace kin2d;

namespace {

class Criterion {
public:
    Criterion(int id, std::string title) : id_(id), title_(std::move(title)) {}

    void check(bool ok, const std::string& what) {
        ++clauses_;
        if (!ok) fails_.push_back(what);
    }
    void near(const std::string& what, double got, double want, double tol) {
        check(std::abs(got - want) <= tol, what + " = " + num(got) + " (want " + num(want) + " +/- " + num(tol) + ")");
    }
    void near(const std::string& what, cplx got, cplx want, double tol) {
        check(std::abs(got - want) <= tol,
              what + " = " + num(got) + " (want " + num(want) + ", |diff| " + num(std::abs(got - want)) + ")");
    }
    void below(const std::string& what, double got, double bound) {
        check(got < bound, what + " = " + num(got) + " (bound " + num(bound) + ")");
    }
    void count(const std::string& what, std::size_t got, std::size_t want) {
        check(got == want, what + " = " + std::to_string(got) + " (want " + std::to_string(want) + ")");
    }
    // exceptions inside a criterion fail that criterion only
    void run(const std::function<void(Criterion&)>& body) {
        try {
            body(*this);
        } catch (const std::exception& e) {
            check(false, std::string("exception: ") + e.what());
        }
    }

    bool passed() const { return fails_.empty(); }
    int id() const { return id_; }

    void print() const {
        std::cout << "criterion " << id_ << ": " << (passed() ? "PASS" : "FAIL") << "  " << title_ << " ("
                  << clauses_ - fails_.size() << "/" << clauses_ << " clauses)\n";
        for (auto& f : fails_) std::cout << "    failed: " << f << "\n";
    }

    static std::string num(double v) {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.15g", v);
        return buf;
    }
    static std::string num(cplx z) {
        return num(z.real()) + (z.imag() < 0 ? " - " : " + ") + num(std::abs(z.imag())) + "i";
    }

private:
    int id_;
    std::string title_;
    int clauses_ = 0;
    std::vector<std::string> fails_;
};

using Ts = std::vector<double>;

Ts midpoints(double t0, double t1, int n, const std::vector<double>& knots = {}) {
    Ts out;
    for (int i = 0; i < n; ++i) {
        double t = t0 + (t1 - t0) * (i + 0.5) / n;
        bool near = false;
        for (double k : knots) near = near || std::abs(t - k) < 1e-3;
        if (!near) out.push_back(t);
    }
    return out;
}

double curve_fd(const ParametricCurve& c, int orders, const Ts& ts) {
    double w = 0;
    for (int k = 0; k < orders; ++k) {
        if (!c.analytic(k + 1)) break;
        w = std::max(w, fd_check([&](double t) { return c.der(t, k); }, [&](double t) { return c.der(t, k + 1); }, ts));
    }
    return w;
}

void gerono(Criterion& c) {
    auto g = gerono_curve(1.0);
    c.below("|signed area|", std::abs(enclosed_area(g)), 1e-10);
    c.near("right loop area", partial_area(g, -pi / 2, pi / 2), 2.0 / 3.0, 1e-10);
    c.near("length", arc_length(g), 6.09722347010491604643, 1e-9);
}

void ellipse(Criterion& c) {
    const double a = 3, b = 2, k = a * a - b * b;
    auto e = ellipse_curve(a, b);
    e.closed = true;
    auto cp = critical_points(e);
    c.count("vertices", cp.vertices.size(), 4);
    double rmin = INFINITY, rmax = 0;
    for (double t : cp.vertices) {
        rmin = std::min(rmin, 1.0 / kappa(e, t));
        rmax = std::max(rmax, 1.0 / kappa(e, t));
    }
    c.near("min curvature radius", rmin, 4.0 / 9.0 * 3.0, 1e-10);
    c.near("max curvature radius", rmax, 3.0 / 2.0 * 3.0, 1e-10);
    auto ev = evolute(e);
    double dev = 0;
    for (int i = 0; i <= 3600; ++i) {
        double t = 2 * pi * i / 3600;
        dev = std::max(dev, std::abs(ev(t) - cplx(k / a * std::pow(std::cos(t), 3), -k / b * std::pow(std::sin(t), 3))));
    }
    c.below("evolute deviation", dev, 1e-10);
}

void identities(Criterion& c) {
    std::mt19937_64 gen(20240611ULL);
    std::uniform_real_distribution<double> u(-10, 10);
    auto pt = [&] { return cplx(u(gen), u(gen)); };
    auto sp = [](cplx a, cplx b) { return scalar_product(a, b); };
    auto qvp = [](cplx a, cplx b) { return quasi_vector_product(a, b); };
    const int n = 10000;
    double rot = 0, mul = 0, lag = 0, bc = 0, gg = 0, jg = 0, prod = 0;
    for (int k = 0; k < n; ++k) {
        cplx z1 = pt(), z2 = pt(), z3 = pt(), z4 = pt();
        double s2 = std::abs(z1) * std::abs(z2), s3 = s2 * std::abs(z3), s4 = s3 * std::abs(z4);
        cplx e = expi(u(gen));
        rot = std::max({rot, std::abs(sp(z1 * e, z2 * e) - sp(z1, z2)) / s2, std::abs(qvp(z1 * e, z2 * e) - qvp(z1, z2)) / s2});
        mul = std::max({mul, std::abs(sp(I * z1, z2) - qvp(z1, z2)) / s2, std::abs(qvp(I * z1, z2) + sp(z1, z2)) / s2,
                        std::abs(std::conj(z1) * z2 - cplx(sp(z1, z2), qvp(z1, z2))) / s2});
        lag = std::max(lag, std::abs(qvp(z1, z2) * qvp(z1, z2) + sp(z1, z2) * sp(z1, z2) - s2 * s2) / (s2 * s2));
        bc = std::max(bc, std::abs(qvp(z1, z2) * qvp(z3, z4) - (sp(z1, z3) * sp(z2, z4) - sp(z1, z4) * sp(z2, z3))) / s4);
        gg = std::max(gg, std::abs(z1 * qvp(z2, z3) - (I * z2 * sp(z3, z1) - I * z3 * sp(z1, z2))) / s3);
        jg = std::max(jg, std::abs(z1 * qvp(z2, z3) + z2 * qvp(z3, z1) + z3 * qvp(z1, z2)) / s3);
        // product rules on linear motions z(t) = z + w t: the products are quadratic in t,
        // so the unit-step central difference is exact
        cplx w1 = z3, w2 = z4;
        double t = u(gen) / 10;
        auto f_sp = [&](double s) { return sp(z1 + w1 * s, z2 + w2 * s); };
        auto f_q = [&](double s) { return qvp(z1 + w1 * s, z2 + w2 * s); };
        double d_sp = sp(w1, z2 + w2 * t) + sp(z1 + w1 * t, w2);
        double d_q = qvp(w1, z2 + w2 * t) + qvp(z1 + w1 * t, w2);
        double scale = (std::abs(z1) + std::abs(w1)) * (std::abs(z2) + std::abs(w2));
        prod = std::max({prod, std::abs((f_sp(t + 1) - f_sp(t - 1)) / 2 - d_sp) / scale,
                         std::abs((f_q(t + 1) - f_q(t - 1)) / 2 - d_q) / scale});
    }
    c.below("rotation invariance", rot, 1e-10);
    c.below("multiplication rules", mul, 1e-10);
    c.below("Lagrange", lag, 1e-10);
    c.below("Binet-Cauchy", bc, 1e-10);
    c.below("Grassmann-Goessner", gg, 1e-10);
    c.below("Jacobi-Goessner", jg, 1e-10);
    c.below("product rules", prod, 1e-10);
}

void dyad(Criterion& c) {
    double phi = pi / 2;
    auto s = solve_dyad(std::sqrt(2.0), 2.0, crank_jet(0.0, 1.0, phi), CJet{cplx(3, 2), 0.0, 0.0, 0.0}, 1);
    c.near("e^{i theta}", s.unit, cplx(1, 1) / std::sqrt(2.0), 1e-10);
    c.near("theta'", s.d1, -1.0, 1e-10);
    c.near("theta''", s.d2, -1.5, 1e-10);
    c.near("theta'''", s.d3, -39.0 / 4.0, 1e-10);
    c.near("cosine form", dyad_unit_cosine_form(std::sqrt(2.0), 2.0, expi(phi), cplx(3, 2), 1), s.unit, 1e-12);
}

void fivebar(Criterion& c) {
    auto cur = fivebar_curve(presets::fivebar());
    c.near("arc length", arc_length(cur), 289.414489645, 1e-5);
    auto xs = self_intersections(cur);
    c.count("self-intersections", xs.size(), 3);
    const double want[3][2] = {{12.18109598202294059, 60.79145803836321748},
                               {171.21734636777756458, 330.79977628841437926},
                               {197.44955305572769338, 322.29595150395381415}};
    for (std::size_t i = 0; i < std::min<std::size_t>(3, xs.size()); ++i) {
        c.near("crossing " + std::to_string(i + 1) + " first (deg)", deg(xs[i].ta), want[i][0], 1e-4);
        c.near("crossing " + std::to_string(i + 1) + " second (deg)", deg(xs[i].tb), want[i][1], 1e-4);
    }
    auto loops = loop_areas(cur, xs);
    c.check(loops.complete, "loop decomposition complete");
    c.near("signed area", loops.signed_total, 984.03111500882125140, 1e-6);
    c.near("absolute total", loops.absolute_total, 1039.94097285931976352, 1e-6);
    std::vector<double> got;
    for (auto& l : loops.loops) got.push_back(l.area);
    std::sort(got.begin(), got.end());
    const std::vector<double> ref{-21.73689201894431442, -6.21803690630494164, 232.53267867845424667,
                                  779.45336525561626079};
    c.count("loops", got.size(), ref.size());
    for (std::size_t i = 0; i < std::min(got.size(), ref.size()); ++i)
        c.near("loop area " + std::to_string(i + 1), got[i], ref[i], 1e-6);
    c.count("inflections", critical_points(cur).inflections.size(), 4);
}

void circles(Criterion& c, const std::string& tag, const std::array<CircleReport, 4>& cs, int from,
             const std::vector<std::pair<cplx, double>>& want, double tol) {
    for (std::size_t i = 0; i < want.size(); ++i) {
        auto& r = cs[from + i];
        std::string name = tag + "k" + std::to_string(from + i + 1);
        c.check(r.defined, name + " defined");
        c.near(name + " center", r.circle.center, want[i].first, tol);
        c.near(name + " radius", r.circle.radius, want[i].second, tol);
    }
}

void motion_unit(Criterion& c) {
    auto s = frame_state(fourbar_motion(presets::fourbar_unit()), pi / 2);
    c.near("P1", pole(s, 1), cplx(0, 2), 1e-9);
    c.near("P2", pole(s, 2), cplx(-6.0 / 13, 9.0 / 13), 1e-9);
    c.near("P3", pole(s, 3), cplx(72.0 / 1549, 1409.0 / 1549), 1e-9);
    circles(c, "", characteristic_circles(s), 0,
            {{cplx(0.75, 1), 1.25},
             {cplx(-2.0 / 3, 1.5), 5.0 / 6},
             {cplx(13.0 / 12, 1.5), std::sqrt(205.0) / 12},
             {cplx(-9.0 / 35, 101.0 / 70), 3.0 / 14 * std::sqrt(41.0 / 5)}},
            1e-9);
    cplx U(51.0 / 26, 9.0 / 13);
    c.near("Ball's point", balls_point(s), U, 1e-9);

    Jet g = presets::fourbar_unit_rocker_angle(pi / 2);
    c.near("reparametrized P2", reparametrized_pole2(s, 1.0 / g[1], -g[2] / std::pow(g[1], 3)), cplx(1.1, 2.2), 1e-9);
    auto r = frame_state(fourbar_motion(presets::fourbar_unit_relabeled()), pi);
    c.near("relabeled P1", pole(r, 1), cplx(0, 2), 1e-9);
    c.near("relabeled P2", pole(r, 2), cplx(1.1, 2.2), 1e-9);
    circles(c, "relabeled ", characteristic_circles(r), 0,
            {{cplx(0.75, 1), 1.25},
             {cplx(0.5, 19.0 / 8), 5.0 / 8},
             {cplx(0.5, 5.0 / 8), std::sqrt(137.0) / 8},
             {cplx(33.0 / 65, 142.0 / 65), 3 * std::sqrt(137.0) / 65}},
            1e-9);
    c.near("relabeled Ball's point", balls_point(r), U, 1e-9);
}

void motion_large(Criterion& c) {
    auto s = frame_state(fourbar_motion(presets::fourbar_large()), rad(345));
    const double tol = 5e-4;
    c.near("theta (deg)", deg(s.th[0]), 55.2569, tol);
    c.near("theta'", s.th[1], -0.264825, tol);
    c.near("theta''", s.th[2], -0.259041, tol);
    c.near("theta'''", s.th[3], 0.568709, tol);
    c.near("P1", pole(s, 1), cplx(55.3600, -14.8337), tol);
    c.near("P2", pole(s, 2), cplx(11.4748, 41.6089), tol);
    c.near("P3", pole(s, 3), cplx(27.5188, -13.9759), tol);
    c.near("u", pole_velocity(s), cplx(-27.9792, 66.8317), tol);
    auto cs = characteristic_circles(s);
    circles(c, "", cs, 0, {{cplx(-70.8208, -67.6595), 136.792}}, tol);
    circles(c, "", cs, 2, {{cplx(42.6633, 25.3195), 42.1127}}, tol);
    cplx U = balls_point(s);
    c.near("Ball's point", U, cplx(5.7919, 45.6660), tol);
    c.near("Ball's point in the moving plane", to_frame(s, U), cplx(36.7715, 32.5603), tol);
}

void flat_cam(Criterion& c) {
    auto cam = presets::flat_face_cam();
    auto m = tff_metrics(cam);
    c.near("perimeter", m.perimeter, 549 * pi / 7, 1e-9);
    c.near("|area|", m.abs_area, 4262.65, 0.01);
    c.near("rho min", m.rho_min.value, 10.7168, 1e-3);
    c.near("rho min at", m.rho_min.at, 4.32691, 1e-3);
    c.near("rho max", m.rho_max.value, 67.2832, 1e-3);
    c.near("rho max at", m.rho_max.at, 5.09787, 1e-3);
    c.check(!m.dwell_radii.empty(), "dwell radius present");
    if (!m.dwell_radii.empty()) c.near("dwell radius", m.dwell_radii.front(), 48.0, 1e-10);
}

void undercut(Criterion& c) {
    auto law = presets::flat_face_cam().r;
    auto th = tff_cusp_thresholds(law);
    c.check(!th.empty(), "threshold found");
    if (th.empty()) return;
    c.near("cusp threshold r0", th.front().value, 4.4022287, 1e-5);
    c.near("threshold angle", th.front().at, 2.17476, 1e-4);
    auto u = tff_undercut({th.front().value, law});
    bool c1 = false, c2 = false;
    for (double t : u.cusps) {
        c1 = c1 || std::abs(t - 4.04221) <= 1e-3;
        c2 = c2 || std::abs(t - 4.59237) <= 1e-3;
    }
    c.check(c1, "cusp at 4.04221");
    c.check(c2, "cusp at 4.59237");
    c.count("loops", u.loops.size(), 1);
    if (u.loops.empty()) return;
    c.near("loop first parameter", u.loops[0].ta, 3.78000, 1e-3);
    c.near("loop second parameter", u.loops[0].tb, 4.82395, 1e-3);
    c.near("loop point", u.loops[0].point, cplx(-18.0484, 13.2662), 1e-3);
}

void swing_cam(Criterion& c) {
    auto cam = presets::swinging_cam();
    c.near("psi(230 deg) (deg)", deg(cam.psi(rad(230))), 6.88725, 1e-4);
    c.near("total curvature", total_curvature(sff_curve(cam)), -2 * pi, 1e-8);
}

void roller(Criterion& c) {
    auto cam = presets::roller_cam();
    auto m = roller_metrics(cam);
    c.near("L_B", m.L_B, 367.5036483978, 1e-6);
    c.near("L_K", m.L_K, m.L_B - 2 * pi * cam.rho, 1e-6);
    c.near("A_B", m.A_B, -10589.1488, 1e-3);
    c.near("A_K", m.A_K, m.A_B + cam.rho * m.L_B - pi * cam.rho * cam.rho, 1e-3);
    auto mx = max_transmission_angle(cam);
    c.near("max transmission angle (deg)", deg(mx.value), 129.1068, 1e-3);
    c.near("at cam angle (deg)", deg(mx.at), 274.4098, 1e-3);
}

void a0(Criterion& c) {
    auto rep = a0_regions(presets::a0_follower(), rad(50));
    std::vector<A0Candidate> ok;
    for (auto& k : rep.candidates)
        if (k.admissible) ok.push_back(k);
    c.count("admissible intersections", ok.size(), 2);
    const std::pair<cplx, double> want[2] = {{cplx(-68.4388, -5.3116), 55.1931}, {cplx(-9.34509, 67.8047), 53.1475}};
    for (auto& [z, r] : want) {
        const A0Candidate* best = nullptr;
        for (auto& k : ok)
            if (!best || std::abs(k.point - z) < std::abs(best->point - z)) best = &k;
        c.check(best != nullptr, "candidate near " + Criterion::num(z));
        if (!best) continue;
        c.near("intersection", best->point, z, 1e-3);
        c.near("max radius", best->max_radius, r, 1e-3);
    }
}

void profiles(Criterion& c) {
    const std::vector<PnProfile> smooth{{1.0, 0.072, 3}, {1.0, 0.1, 3}, {2.0, 0.05, 4}, {1.0, 0.03, 5}, {9.0, 0.5, 3}};
    double area = 0, length = 0, width = 0, orth = 0;
    for (auto& p : smooth) {
        auto cur = pn_curve(p);
        double closed = pi * p.R * p.R - 0.5 * pi * (p.n * p.n - 1) * p.e * p.e;
        area = std::max(area, std::abs(enclosed_area(cur) - closed));
        length = std::max(length, std::abs(arc_length(cur) - 2 * pi * p.R));
        for (double t : midpoints(0, 2 * pi, 720)) {
            if (p.n % 2) width = std::max(width, std::abs(pn_width(p, t) - 2 * p.R));
            CJet z = pn_point(p, t);
            orth = std::max(orth, std::abs(scalar_product(z[1], expi(t))) / std::abs(z[1]));
        }
    }
    c.below("area vs quadrature", area, 1e-8);
    c.below("length vs quadrature", length, 1e-8);
    c.below("constant-width residual", width, 1e-12);
    c.below("tangent orthogonality", orth, 1e-12);

    auto rb = presets::rabinowitz();
    auto g = generator_bars(rb);
    c.check(g.l2 == 9.0 && g.l3 == 2.0 && g.l4 == 1.0, "Rabinowitz bars (9, 2, 1)");
    double dec = 0;
    for (double t : midpoints(0, 2 * pi, 360))
        dec = std::max(dec, std::abs(bar_sum(rb, t) - (9.0 * expi(t) + 2.0 * expi(pi - 2 * t) + expi(4 * t))));
    c.below("decomposition residual", dec, 1e-12);

    Ts phis;
    for (int i = 0; i <= 72; ++i) phis.push_back(2 * pi * i / 72 / 3);
    double prev = INFINITY;
    bool mono = true;
    for (double r : {0.5, 1.0, 2.0, 4.0, 8.0, 16.0, 32.0, 64.0, 256.0, 1024.0, 4096.0}) {
        auto sw = cnc_sweep(rb, r, phis);
        double gap = 0;
        for (std::size_t i = 0; i < phis.size(); ++i)
            gap = std::max(gap, std::abs(sw[i].x_shifted + rb.e * std::cos(rb.n * phis[i])));
        mono = mono && gap < prev;
        prev = gap;
    }
    c.check(mono, "CNC gap decreases monotonically in r");
    c.below("CNC gap at r = 4096", prev, 1.2e-3);
}

int nesting_violations(const ParametricCurve& cur, double a, double b, int pairs) {
    std::mt19937_64 gen(77);
    std::uniform_real_distribution<double> u(a, b);
    int bad = 0;
    for (int k = 0; k < pairs; ++k) {
        double s = u(gen), t = u(gen);
        if (std::abs(s - t) < 1e-3) {
            --k;
            continue;
        }
        auto o1 = *curvature(cur, s).osc, o2 = *curvature(cur, t).osc;
        if (!(std::abs(o1.center - o2.center) < std::abs(o1.radius - o2.radius))) ++bad;
    }
    return bad;
}

void properties(Criterion& c) {
    ParametricCurve inv;
    inv.z = [](double t) { return expi(t) - I * t * expi(t); };
    inv.d1 = [](double t) { return t * expi(t); };
    inv.d2 = [](double t) { return expi(t) + I * t * expi(t); };
    c.count("nesting violations, ellipse quarter-arc", nesting_violations(ellipse_curve(3, 2), 0.01, pi / 2 - 0.01, 1000), 0);
    c.count("nesting violations, circle involute", nesting_violations(inv, 0.2, 6.0, 1000), 0);

    double ei = 0;
    for (auto& [cur, a] : std::vector<std::pair<ParametricCurve, double>>{{ellipse_curve(3, 2), 0.0}, {circle_curve(1.5), 0.3}}) {
        auto iv = involute(cur, a);
        for (double t : midpoints(a + 0.2, a + 2.5, 40)) ei = std::max(ei, std::abs(curvature(iv, t).osc->center - cur(t)));
    }
    c.below("evolute(involute) deviation", ei, 1e-8);

    // tangency of family lines to their envelopes
    double tang = 0;
    auto tangency = [&](const CurveFamily& f, const ParametricCurve& env, const Ts& ts, double scale) {
        for (double t : ts) {
            double l = envelope_lambda(f, t);
            cplx d = f.dl(t, l) / std::abs(f.dl(t, l));
            cplx tv = env.der(t, 1);
            tang = std::max({tang, std::abs(quasi_vector_product(d, env(t) - f.z(t, 0.0))) / scale,
                             std::abs(quasi_vector_product(d, tv / std::abs(tv)))});
        }
    };
    auto flat = presets::flat_face_cam();
    tangency(tff_line_family(flat), tff_curve(flat), midpoints(0, 2 * pi, 400, flat.r.knots()), flat.r0);
    SupportFunction ell{[](double p) {
                            const double a = 3, b = 2, d = b * b - a * a;
                            double cs = std::cos(p), sn = std::sin(p), h = std::sqrt(a * a * cs * cs + b * b * sn * sn);
                            double q1 = 2 * d * sn * cs, q2 = 2 * d * (cs * cs - sn * sn), q3 = -8 * d * sn * cs;
                            double h1 = q1 / (2 * h), h2 = (q2 - 2 * h1 * h1) / (2 * h), h3 = (q3 - 6 * h1 * h2) / (2 * h);
                            return Jet{h, h1, h2, h3};
                        },
                        {}};
    tangency(support_line_family(ell), envelope_from_support(ell), midpoints(0, 2 * pi, 400), 1.0);
    c.below("envelope tangency", tang, 1e-9);

    // analytic derivatives against finite differences
    double fd = 0;
    auto full = midpoints(0, 2 * pi, 200);
    for (auto& cur : {circle_curve(2.0, cplx(1, -1)), ellipse_curve(3, 2), gerono_curve(1.0), limacon_curve(),
                      fivebar_curve(presets::fivebar()), pn_curve(presets::p3g()), envelope_from_support(ell)})
        fd = std::max(fd, curve_fd(cur, 3, full));
    fd = std::max(fd, curve_fd(involute(ellipse_curve(3, 2), 0.0), 3, midpoints(0.3, 3.0, 60)));
    fd = std::max(fd, curve_fd(parallel_curve(ellipse_curve(3, 2), 0.4), 3, full));
    fd = std::max(fd, curve_fd(tff_curve(flat), 2, midpoints(0, 2 * pi, 400, flat.r.knots())));
    auto sw = presets::swinging_cam();
    fd = std::max(fd, curve_fd(sff_curve(sw), 2, midpoints(0, 2 * pi, 300, sw.psi.knots())));
    auto ro = presets::roller_cam();
    fd = std::max(fd, curve_fd(roller_center_curve(ro), 3, midpoints(0, 2 * pi, 300, ro.psi.knots())));
    fd = std::max(fd, curve_fd(frame_point_curve(fourbar_motion(presets::fourbar_large()), cplx(10, 5)), 3,
                               midpoints(0, 2 * pi, 120)));
    for (auto* law : {&flat.r, &sw.psi, &ro.psi})
        for (int k = 0; k < 3; ++k)
            fd = std::max(fd, fd_check([&](double t) { return (*law)(t, k); }, [&](double t) { return (*law)(t, k + 1); },
                                       midpoints(0, 2 * pi, 400, law->knots())));
    // dyad angle jets over the assembly range; the angle itself is unwrapped near a reference
    auto angle = [](double t) { return presets::fourbar_unit_rocker_angle(t); };
    auto unwrapped = [&](double t) {
        double v = angle(t)[0];
        return v - 2 * pi * std::round((v - angle(1.5)[0]) / (2 * pi));
    };
    auto assembly = midpoints(-0.4, 1.6, 60);
    fd = std::max(fd, fd_check(unwrapped, [&](double t) { return angle(t)[1]; }, assembly));
    for (int k = 1; k < 3; ++k)
        fd = std::max(fd, fd_check([&](double t) { return angle(t)[k]; }, [&](double t) { return angle(t)[k + 1]; }, assembly));
    c.below("worst fd_check", fd, 1e-5);
}

} // namespace

int main(int argc, char** argv) {
    std::set<int> expected;
    for (int i = 1; i < argc; ++i) {
        std::string a = argv[i];
        if (a == "--expect-fail" && i + 1 < argc) {
            std::stringstream ss(argv[++i]);
            for (std::string tok; std::getline(ss, tok, ',');) expected.insert(std::stoi(tok));
        } else {
            std::cerr << "usage: acceptance [--expect-fail N[,M...]]\n";
            return 2;
        }
    }

    const std::vector<std::pair<std::string, std::function<void(Criterion&)>>> all{
        {"Gerono lemniscate", gerono},
        {"ellipse curvature radii, evolute, vertices", ellipse},
        {"complex-vector identities", identities},
        {"dyad at quarter turn", dyad},
        {"five-bar coupler curve", fivebar},
        {"unit four-bar poles and circles, relabeled drive", motion_unit},
        {"four-bar at 345 deg", motion_large},
        {"translating flat-face cam", flat_cam},
        {"undercut threshold, cusps and loop", undercut},
        {"swinging flat-face cam", swing_cam},
        {"roller cam", roller},
        {"A0 regions at mu = 50 deg", a0},
        {"polygon profiles", profiles},
        {"property suites", properties},
    };

    std::set<int> failed;
    for (std::size_t i = 0; i < all.size(); ++i) {
        Criterion c(static_cast<int>(i + 1), all[i].first);
        c.run(all[i].second);
        c.print();
        if (!c.passed()) failed.insert(c.id());
    }
    std::cout << (all.size() - failed.size()) << "/" << all.size() << " criteria pass\n";
    if (!expected.empty()) {
        std::cout << "expected failures:";
        for (int e : expected) std::cout << " " << e;
        std::cout << (failed == expected ? " (matched)\n" : " (mismatch)\n");
    }
    return failed == expected ? 0 : 1;
}
