#include <algorithm>
#include <cmath>

#include "artifact.hpp"
#include "kin2d/presets.hpp"

namespace kin2d::cli {

void add_curve(FigureSpec& f, const ParametricCurve& c, const std::string& color, int n, bool dashed) {
    PolylineLayer l;
    l.points = polyline([&](double t) { return c(t); }, c.t0, c.t1, n);
    l.style = stroke(color, 1.5, dashed);
    l.closed = c.closed;
    f.curves.push_back(l);
}

void motion_report(Report& r, const FrameState& st) {
    r.angle("theta", st.th[0]);
    r.value("theta'", st.th[1]);
    r.value("theta''", st.th[2]);
    r.value("theta'''", st.th[3]);
    r.value("e^{i theta}", st.eps[0]);
    for (int n = 1; n <= 3; ++n) r.value("pole P" + std::to_string(n), pole(st, n));
    r.value("pole velocity u", pole_velocity(st));
    r.value("pole acceleration", pole_acceleration(st));
    for (auto& c : characteristic_circles(st)) {
        if (c.defined) r.circle(circle_name(c.kind), c.circle);
        else r.text(std::string(circle_name(c.kind)) + " = undefined");
    }
    try {
        cplx u = balls_point(st);
        r.value("Ball's point", u);
        r.value("Ball's point in moving frame", to_frame(st, u));
    } catch (const Error& e) {
        r.text(std::string("Ball's point = undefined (") + e.what() + ")");
    }
}

namespace {

void curve_rows(Table& t, const ParametricCurve& c, int n) {
    t.header = {"t", "x", "y", "kappa"};
    for (auto& p : sample_polyline(c, n)) t.rows.push_back({p.t, p.z.real(), p.z.imag(), p.kappa});
}


Artifact gerono(const Settings& s) {
    Artifact a;
    auto c = gerono_curve(1.0);
    auto q = s.quad();
    a.report.section("Gerono lemniscate a = 1");
    a.report.value("signed area", enclosed_area(c, q));
    a.report.value("right loop area", partial_area(c, -pi / 2, pi / 2, q));
    a.report.value("left loop area", partial_area(c, pi / 2, 3 * pi / 2, q));
    a.report.value("length", arc_length(c, q));
    curve_rows(a.table, c, s.samples_or(360));
    add_curve(a.figure, c, "#1f4e9c");
    return a;
}

Artifact ellipse(const Settings& s) {
    Artifact a;
    const double A = 3, B = 2;
    auto c = ellipse_curve(A, B);
    auto cp = critical_points(c);
    a.report.section("Ellipse a = 3, b = 2");
    double rmin = INFINITY, rmax = 0;
    for (double t : cp.vertices) {
        double r = 1.0 / std::abs(kappa(c, t));
        rmin = std::min(rmin, r);
        rmax = std::max(rmax, r);
        a.report.angle("vertex", t);
    }
    a.report.count("vertices", cp.vertices.size());
    a.report.value("min radius of curvature", rmin);
    a.report.value("max radius of curvature", rmax);
    auto ev = evolute(c);
    auto closed_form = [&](double t) {
        double k = A * A - B * B;
        return cplx(k / A * std::pow(std::cos(t), 3), -k / B * std::pow(std::sin(t), 3));
    };
    double dev = 0;
    int n = s.samples_or(720);
    a.table.header = {"t", "x", "y", "evolute_x", "evolute_y"};
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        cplx e = ev(t);
        dev = std::max(dev, std::abs(e - closed_form(t)));
        a.table.rows.push_back({t, c(t).real(), c(t).imag(), e.real(), e.imag()});
    }
    a.report.value("max evolute deviation from closed form", dev);
    add_curve(a.figure, c, "#1f4e9c");
    add_curve(a.figure, ev, "#c0392b", 1440);
    for (double t : cp.vertices) {
        auto o = curvature(c, t).osc;
        if (o) a.figure.circles.push_back({{o->center, o->radius}, stroke("#27ae60", 0.8, true)});
    }
    return a;
}

Artifact fivebar(const Settings& s) {
    Artifact a;
    auto cfg = presets::fivebar();
    auto c = fivebar_curve(cfg);
    auto q = s.quad();
    auto xs = self_intersections(c, 2048);
    auto loops = loop_areas(c, xs, q);
    auto cp = critical_points(c);
    a.report.section("Five-bar coupler curve");
    a.report.value("arc length", arc_length(c, q));
    a.report.value("signed area", loops.signed_total);
    a.report.count("self-intersections", xs.size());
    for (std::size_t i = 0; i < xs.size(); ++i) {
        a.report.angle("crossing " + std::to_string(i + 1) + " phi_a", xs[i].ta);
        a.report.angle("crossing " + std::to_string(i + 1) + " phi_b", xs[i].tb);
        a.report.value("crossing " + std::to_string(i + 1) + " point", xs[i].point);
    }
    for (std::size_t i = 0; i < loops.loops.size(); ++i)
        a.report.value("loop " + std::to_string(i + 1) + " area", loops.loops[i].area);
    a.report.value("absolute loop total", loops.absolute_total);
    a.report.count("inflection points", cp.inflections.size());
    for (double t : cp.inflections) a.report.angle("inflection", t);
    curve_rows(a.table, c, s.samples_or(360));
    add_curve(a.figure, c, "#1f4e9c");
    for (auto& x : xs) a.figure.points.push_back({x.point, "", "#c0392b"});
    for (double t : cp.inflections) a.figure.points.push_back({c(t), "", "#27ae60"});
    return a;
}

void motion_figure(FigureSpec& f, const FrameState& st, const FourBarConfig& cfg) {
    const char* colors[4] = {"#c0392b", "#27ae60", "#8e44ad", "#d35400"};
    for (auto& c : characteristic_circles(st))
        if (c.defined) f.circles.push_back({c.circle, stroke(colors[static_cast<int>(c.kind)], 1.0)});
    cplx A = st.o[0];
    cplx B = A + cfg.coupler * st.eps[0];
    Style bar = stroke("#333333", 2.5);
    f.vectors.push_back({cfg.crank_pivot, A, bar});
    f.vectors.push_back({A, B, bar});
    f.vectors.push_back({cfg.rocker_pivot, B, bar});
    for (int n = 1; n <= 3; ++n) f.points.push_back({pole(st, n), "P" + std::to_string(n), "#1f4e9c"});
    try {
        f.points.push_back({balls_point(st), "U", "#c0392b"});
    } catch (const Error&) {
    }
}

Artifact fourbar_bresse(const Settings& s) {
    Artifact a;
    auto cfg = presets::fourbar_unit();
    auto m = fourbar_motion(cfg);
    double phi = pi / 2;
    auto st = frame_state(m, phi);
    a.report.section("Four-bar, unit crank, phi = 90 deg");
    motion_report(a.report, st);
    cplx cf = dyad_unit_cosine_form(cfg.coupler, cfg.rocker, st.o[0], cfg.rocker_pivot, cfg.branch);
    a.report.value("closed-form difference |e - e_cos|", std::abs(cf - st.eps[0]));
    try {
        auto alt = balls_point_by_intersection(st);
        if (alt) a.report.value("Ball's point by circle intersection", *alt);
    } catch (const Error&) {
    }

    Jet g = presets::fourbar_unit_rocker_angle(phi);
    double f1 = 1.0 / g[1], f2 = -g[2] / std::pow(g[1], 3);
    a.report.section("Same motion parametrized by the rocker angle");
    a.report.angle("rocker angle", g[0]);
    a.report.value("rocker angle'", g[1]);
    a.report.value("rocker angle''", g[2]);
    a.report.value("reparametrized pole P2", reparametrized_pole2(st, f1, f2));

    auto cfg2 = presets::fourbar_unit_relabeled();
    auto st2 = frame_state(fourbar_motion(cfg2), pi);
    a.report.section("Relabeled drive, phi = 180 deg");
    motion_report(a.report, st2);

    int n = s.samples_or(360);
    a.table.header = {"phi", "P1_x", "P1_y", "moving_centrode_x", "moving_centrode_y"};
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        try {
            auto cd = centrodes(m, t);
            a.table.rows.push_back({t, cd.fixed.real(), cd.fixed.imag(), cd.moving.real(), cd.moving.imag()});
        } catch (const Error&) {
        }
    }
    motion_figure(a.figure, st, cfg);
    return a;
}

Artifact fourbar_large(const Settings& s) {
    Artifact a;
    auto cfg = presets::fourbar_large();
    auto m = fourbar_motion(cfg);
    auto st = frame_state(m, rad(345));
    a.report.section("Four-bar, crank 12, phi = 345 deg");
    motion_report(a.report, st);
    int n = s.samples_or(360);
    a.table.header = {"phi", "theta", "theta1", "theta2", "theta3"};
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        try {
            Jet th = m.angle(t);
            a.table.rows.push_back({t, th[0], th[1], th[2], th[3]});
        } catch (const Error&) {
        }
    }
    motion_figure(a.figure, st, cfg);
    return a;
}

Artifact cam_flat(const Settings& s) {
    Artifact a;
    auto cam = presets::flat_face_cam();
    auto m = tff_metrics(cam, s.quad());
    a.report.section("Translating flat-face follower, r0 = 30");
    a.report.value("p(60 deg)", cam.support(pi / 3)[0]);
    a.report.value("perimeter", m.perimeter);
    a.report.value("signed area", m.signed_area);
    a.report.value("|area|", m.abs_area);
    a.report.value("min radius of curvature", m.rho_min.value);
    a.report.angle("  at", m.rho_min.at);
    a.report.value("max radius of curvature", m.rho_max.value);
    a.report.angle("  at", m.rho_max.at);
    for (double d : m.dwell_radii) a.report.value("dwell radius of curvature", d);
    a.report.text(std::string("undercut = ") + undercut_name(tff_undercut(cam).kind));
    auto c = tff_curve(cam);
    int n = s.samples_or(360);
    a.table.header = {"phi", "x", "y", "rho"};
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        a.table.rows.push_back({t, c(t).real(), c(t).imag(), tff_radius_of_curvature(cam, t)});
    }
    add_curve(a.figure, c, "#1f4e9c");
    a.figure.circles.push_back({{0.0, cam.r0}, stroke("#999999", 1.0, true)});
    double phi = pi / 3;
    double p = cam.support(phi)[0];
    a.figure.vectors.push_back({(p - 40.0 * I) * expi(-phi), (p + 40.0 * I) * expi(-phi), stroke("#c0392b", 1.5)});
    a.figure.points.push_back({tff_contour(cam, phi).z, "K", "#c0392b"});
    return a;
}

Artifact cam_undercut(const Settings& s) {
    Artifact a;
    auto law = presets::flat_face_cam().r;
    auto th = tff_cusp_thresholds(law);
    a.report.section("Undercut of the translating flat-face cam");
    for (auto& e : th) {
        a.report.value("cusp threshold r0", e.value);
        a.report.angle("  at local minimum of rho", e.at);
    }
    auto glob = tff_cusp_threshold(law);
    a.report.value("undercut-free bound r0", glob.value);
    TranslatingFlatFaceCam cam{th.front().value, law};
    auto u = tff_undercut(cam, 2048);
    a.report.value("cam r0", cam.r0);
    a.report.text(std::string("classification = ") + undercut_name(u.kind));
    for (double t : u.cusps) a.report.angle("cusp", t);
    for (auto& l : u.loops) {
        a.report.angle("self-intersection phi_a", l.ta);
        a.report.angle("self-intersection phi_b", l.tb);
        a.report.value("self-intersection point", l.point);
    }
    auto c = tff_curve(cam);
    int n = s.samples_or(360);
    a.table.header = {"phi", "x", "y", "r", "r_reduced"};
    std::function<double(double)> red = [&](double t) { return law(t); };
    if (!u.loops.empty()) red = tff_reduced_transfer(cam, u.loops.front());
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        a.table.rows.push_back({t, c(t).real(), c(t).imag(), law(t), red(t)});
    }
    add_curve(a.figure, c, "#1f4e9c", 2880);
    for (auto& l : u.loops) a.figure.points.push_back({l.point, "", "#c0392b"});
    for (double t : u.cusps) a.figure.points.push_back({c(t), "", "#27ae60"});
    return a;
}

Artifact cam_swing(const Settings& s) {
    Artifact a;
    auto cam = presets::swinging_cam();
    auto c = sff_curve(cam);
    a.report.section("Swinging flat-face follower");
    a.report.angle("psi(230 deg)", cam.psi(rad(230)));
    auto p = sff_contour(cam, rad(230));
    a.report.value("z_K(230 deg)", p.z[0]);
    a.report.value("lambda(230 deg)", p.lambda);
    a.report.value("total curvature", total_curvature(c, s.quad()));
    a.report.value("total curvature + 2 pi", total_curvature(c, s.quad()) + 2 * pi);
    int n = s.samples_or(360);
    a.table.header = {"phi", "x", "y", "lambda", "kappa"};
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        auto q = sff_contour(cam, t);
        a.table.rows.push_back({t, q.z[0].real(), q.z[0].imag(), q.lambda, q.kappa});
    }
    add_curve(a.figure, c, "#1f4e9c");
    a.figure.points.push_back({cam.zB0 * expi(-rad(230)), "B0", "#c0392b"});
    return a;
}

Artifact cam_roller(const Settings& s) {
    Artifact a;
    auto cam = presets::roller_cam();
    auto m = roller_metrics(cam, s.quad());
    auto mx = max_transmission_angle(cam);
    auto mn = min_transmission_angle(cam);
    a.report.section("Pivoted roller follower");
    a.report.value("L_B", m.L_B);
    a.report.value("L_K", m.L_K);
    a.report.value("L_B - 2 pi rho", m.L_K_identity);
    a.report.value("A_B", m.A_B);
    a.report.value("A_K", m.A_K);
    a.report.value("A_B + rho L_B - pi rho^2", m.A_K_identity);
    a.report.value("min kappa_B", m.kappa_B_min);
    a.report.flag("identities apply", m.identities_apply);
    a.report.angle("max transmission angle", mx.value);
    a.report.angle("  at", mx.at);
    a.report.angle("min transmission angle", mn.value);
    a.report.angle("  at", mn.at);
    int n = s.samples_or(360);
    a.table.header = {"phi", "zB_x", "zB_y", "zK_x", "zK_y", "kappa_B", "kappa_K", "mu_deg"};
    for (int i = 0; i <= n; ++i) {
        double t = 2 * pi * i / n;
        auto p = roller_curves(cam, t);
        a.table.rows.push_back({t, p.zB[0].real(), p.zB[0].imag(), p.zK.real(), p.zK.imag(), p.kappa_B, p.kappa_K,
                                deg(transmission_angle(cam, t))});
    }
    add_curve(a.figure, roller_center_curve(cam), "#999999", 1440, true);
    add_curve(a.figure, roller_contour_curve(cam), "#1f4e9c");
    auto p = roller_curves(cam, rad(265));
    a.figure.circles.push_back({{p.zB[0], cam.rho}, stroke("#c0392b", 1.0)});
    return a;
}

Artifact a0(const Settings& s) {
    Artifact a;
    auto f = presets::a0_follower();
    double mu = rad(50);
    auto rep = a0_regions(f, mu);
    a.report.section("A0 regions, mu = 50 deg");
    for (auto& c : rep.candidates) {
        a.report.value("intersection", c.point);
        a.report.angle("  phi on C+mu", c.phi_plus);
        a.report.angle("  phi on C-mu", c.phi_minus);
        a.report.angle("  min transmission angle", c.mu_min);
        a.report.angle("  max transmission angle", c.mu_max);
        a.report.flag("  admissible", c.admissible);
        a.report.text(std::string("  type = ") + (c.p_cam ? "P-cam" : "F-cam"));
        a.report.value("  max cam radius (rho = 10)", c.max_radius);
    }
    a.table.header = {"sign", "phi", "x", "y"};
    for (auto& b : rep.branches) {
        PolylineLayer l;
        l.style = stroke(b.sign > 0 ? "#27ae60" : "#1f4e9c");
        const double lim = 4 * f.l;
        for (auto& p : b.samples) {
            a.table.rows.push_back({double(b.sign), p.first, p.second.real(), p.second.imag()});
            l.points.push_back(std::abs(p.second) < lim ? p.second : cplx(NAN, NAN));
        }
        a.figure.curves.push_back(l);
    }
    (void)s;
    for (auto& c : rep.candidates)
        if (c.admissible) a.figure.points.push_back({c.point, c.p_cam ? "P" : "F", "#c0392b"});
    a.figure.points.push_back({f.zB0, "B0", "#333333"});
    return a;
}

Artifact profiles(const Settings& s) {
    Artifact a;
    auto q = s.quad();
    Report& r = a.report;
    auto p3 = presets::p3g();
    auto m = profile_metrics(p3);
    auto c = pn_curve(p3);
    r.section("P3G profile R = 1, e = 0.072");
    r.text(std::string("validity = ") + validity_name(validity_check(p3)));
    r.value("area (closed form)", m.area);
    r.value("area (quadrature)", enclosed_area(c, q));
    r.value("length (closed form)", m.length);
    r.value("length (quadrature)", arc_length(c, q));
    r.value("constant width", m.width);

    PnProfile big{1.0, 0.25, 3};
    r.section("P3 curve R = 1, e = 1/4");
    r.text(std::string("validity = ") + validity_name(validity_check(big)));
    r.value("area (closed form)", profile_metrics(big).area);
    r.value("area (quadrature)", enclosed_area(pn_curve(big), q));
    auto loops = profile_loops(big);
    for (auto& l : loops.loops) r.value("loop area", l.area);

    auto rab = presets::rabinowitz();
    auto g = generator_bars(rab);
    r.section("Rabinowitz curve R = 9, e = 1, n = 3");
    r.value("l2", g.l2);
    r.value("l3", g.l3);
    r.value("l4", g.l4);
    double dev = 0;
    for (int i = 0; i < 360; ++i) {
        double t = 2 * pi * i / 360;
        cplx ref = 9.0 * expi(t) + 2.0 * expi(pi - 2 * t) + expi(4 * t);
        dev = std::max(dev, std::abs(pn_point(rab, t)[0] - ref));
    }
    r.value("max deviation from 9e^{it} + 2e^{i(pi-2t)} + e^{4it}", dev);

    auto p4 = presets::p4_generator();
    auto g4 = generator_bars(p4);
    r.section("P4 curve R = 1, e = 0.25");
    r.value("l3", g4.l3);
    r.value("l4", g4.l4);
    r.value("rho1", g4.rho1);
    r.value("rho2", g4.rho2);
    r.value("rho3", g4.rho3);
    r.value("rho4", g4.rho4);
    auto pc = pnc_profile(p4, 0.914);
    r.flag("r1 = 0.914 meets the curve", pc.blended);
    for (double t : pc.blend_params) r.angle("blend point", t);

    r.section("Reuleaux comparison R = 1, e = 1/8, n = 3");
    auto rc = reuleaux_compare({1.0, 0.125, 3});
    r.value("profile area", rc.profile_area);
    r.value("Reuleaux triangle area", rc.reuleaux_area);
    r.flag("profile larger", rc.profile_larger);
    r.value("equal-area eccentricity", equal_area_eccentricity(1.0, 3));

    r.section("Linear CNC motion, Rabinowitz curve");
    int n = s.samples_or(72);
    std::vector<double> phis;
    for (int i = 0; i <= n; ++i) phis.push_back(2 * pi * i / n / 3);
    auto t1 = cnc_sweep(rab, 1.0, phis);
    auto t12 = cnc_sweep(rab, 12.0, phis);
    a.table.header = {"phi", "f_1", "x_shift_1", "f_12", "x_shift_12", "x_shift_inf"};
    double gap1 = 0, gap12 = 0;
    for (std::size_t i = 0; i < phis.size(); ++i) {
        double inf = -rab.e * std::cos(rab.n * phis[i]);
        gap1 = std::max(gap1, std::abs(t1[i].x_shifted - inf));
        gap12 = std::max(gap12, std::abs(t12[i].x_shifted - inf));
        a.table.rows.push_back({phis[i], t1[i].f, t1[i].x_shifted, t12[i].f, t12[i].x_shifted, inf});
    }
    r.value("max |x_1 - x_inf|", gap1);
    r.value("max |x_12 - x_inf|", gap12);

    add_curve(a.figure, c, "#1f4e9c");
    add_curve(a.figure, pn_curve(big), "#999999", 1440, true);
    PolylineLayer ell;
    auto tp = tool_ellipse_path(p3, 0.2);
    ell.points = polyline([&](double t) { return tp(t); }, 0, 2 * pi, 720);
    ell.style = stroke("#c0392b", 1.0);
    ell.closed = true;
    a.figure.curves.push_back(ell);
    return a;
}

} // namespace

const std::vector<ReproEntry>& repro_registry() {
    static const std::vector<ReproEntry> reg = {
        {"gerono", "Gerono lemniscate: area, loop area, length", gerono},
        {"ellipse", "ellipse curvature radii, evolute, vertices", ellipse},
        {"fivebar", "five-bar coupler curve: length, area, loops, inflections", fivebar},
        {"fourbar-bresse", "four-bar poles, Bresse and jerk circles, Ball's point", fourbar_bresse},
        {"fourbar-large", "four-bar motion analysis at 345 deg", fourbar_large},
        {"cam-flat", "translating flat-face cam metrics", cam_flat},
        {"cam-undercut", "undercut threshold, cusps and loop", cam_undercut},
        {"cam-swing", "swinging flat-face cam", cam_swing},
        {"cam-roller", "roller cam lengths, areas, transmission angle", cam_roller},
        {"a0-regions", "hodograph A0 regions for mu = 50 deg", a0},
        {"profiles", "polygon profiles, Reuleaux comparison, CNC tool path", profiles},
    };
    return reg;
}

} // namespace kin2d::cli
