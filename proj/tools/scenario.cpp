#include <fstream>
#include <stdexcept>

#include <json.hpp>

#include "artifact.hpp"
#include "kin2d/cam.hpp"
#include "kin2d/profile.hpp"

namespace kin2d::cli {
namespace {

using json = nlohmann::json;

struct SchemaError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

const json& field(const json& o, const std::string& key, const std::string& where) {
    if (!o.is_object() || !o.contains(key)) throw SchemaError(where + ": missing field '" + key + "'");
    return o.at(key);
}

double number(const json& o, const std::string& key, const std::string& where) {
    const json& v = field(o, key, where);
    if (!v.is_number()) throw SchemaError(where + ": field '" + key + "' must be a number");
    return v.get<double>();
}

double number_or(const json& o, const std::string& key, double fallback, const std::string& where) {
    return o.contains(key) ? number(o, key, where) : fallback;
}

int integer(const json& o, const std::string& key, const std::string& where) {
    const json& v = field(o, key, where);
    if (!v.is_number_integer()) throw SchemaError(where + ": field '" + key + "' must be an integer");
    return v.get<int>();
}

double positive(const json& o, const std::string& key, const std::string& where) {
    double v = number(o, key, where);
    if (!(v > 0)) throw SchemaError(where + ": field '" + key + "' must be positive");
    return v;
}

cplx point(const json& o, const std::string& key, const std::string& where) {
    const json& v = field(o, key, where);
    if (!v.is_array() || v.size() != 2 || !v[0].is_number() || !v[1].is_number())
        throw SchemaError(where + ": field '" + key + "' must be [x, y]");
    return {v[0].get<double>(), v[1].get<double>()};
}

std::string text(const json& o, const std::string& key, const std::string& where) {
    const json& v = field(o, key, where);
    if (!v.is_string()) throw SchemaError(where + ": field '" + key + "' must be a string");
    return v.get<std::string>();
}

int branch(const json& o, const std::string& where) {
    int b = o.contains("branch") ? integer(o, "branch", where) : 1;
    if (b != 1 && b != -1) throw SchemaError(where + ": branch must be 1 or -1");
    return b;
}

// amplitude in length units, or amplitude_deg for angular followers
MotionLaw law(const json& o, const std::string& where) {
    const json& segs = field(o, "law", where);
    if (!segs.is_array() || segs.empty()) throw SchemaError(where + ": 'law' must be a non-empty array");
    std::vector<Segment> out;
    for (std::size_t i = 0; i < segs.size(); ++i) {
        std::string w = where + ".law[" + std::to_string(i) + "]";
        const json& s = segs[i];
        std::string type = text(s, "type", w);
        double span = rad(positive(s, "span_deg", w));
        auto amp = [&] {
            if (s.contains("amplitude_deg")) return rad(number(s, "amplitude_deg", w));
            return number(s, "amplitude", w);
        };
        if (type == "dwell") out.push_back(Segment::dwell(span));
        else if (type == "rise") out.push_back(Segment::rise(span, amp(), positive(s, "a", w), positive(s, "b", w)));
        else if (type == "return") out.push_back(Segment::ret(span, amp(), positive(s, "a", w)));
        else if (type == "hump") out.push_back(Segment::hump(span, amp(), positive(s, "m", w)));
        else throw SchemaError(w + ": unknown segment type '" + type + "'");
    }
    return make_motion_law(out);
}

struct Sweep {
    double from = 0, to = 2 * pi;
    int samples = 361;
    std::vector<double> params() const {
        std::vector<double> v;
        for (int i = 0; i < samples; ++i) v.push_back(samples == 1 ? from : from + (to - from) * i / (samples - 1));
        return v;
    }
};

Sweep sweep_spec(const json& sc, const Settings& s) {
    Sweep sw;
    if (sc.contains("sweep")) {
        const json& o = sc.at("sweep");
        sw.from = rad(number_or(o, "from_deg", 0, "sweep"));
        sw.to = rad(number_or(o, "to_deg", 360, "sweep"));
        if (o.contains("samples")) sw.samples = integer(o, "samples", "sweep");
    }
    if (s.samples > 0) sw.samples = s.samples;
    if (sw.samples < 1) throw SchemaError("sweep: samples must be >= 1");
    return sw;
}

void curve_report(Artifact& a, const ParametricCurve& c, const Settings& s, const Sweep& sw) {
    auto q = s.quad();
    a.report.value("length", arc_length(c, q));
    if (c.closed) {
        a.report.value("signed area", enclosed_area(c, q));
        auto xs = self_intersections(c, 2048);
        a.report.count("self-intersections", xs.size());
        for (auto& x : xs) {
            a.report.angle("crossing t_a", x.ta);
            a.report.angle("crossing t_b", x.tb);
            a.report.value("crossing point", x.point);
        }
        if (!xs.empty()) {
            auto loops = loop_areas(c, xs, q);
            for (auto& l : loops.loops) a.report.value("loop area", l.area);
            a.report.value("absolute loop total", loops.absolute_total);
        }
    }
    auto cp = critical_points(c);
    a.report.count("vertices", cp.vertices.size());
    a.report.count("inflection points", cp.inflections.size());
    a.table.header = {"t", "x", "y", "kappa"};
    for (double t : sw.params()) {
        double k = NAN;
        try {
            k = kappa(c, t);
        } catch (const Error&) {
        }
        a.table.rows.push_back({t, c(t).real(), c(t).imag(), k});
    }
    add_curve(a.figure, c, "#1f4e9c");
}

Artifact curve_scenario(const json& p, const Settings& s, const Sweep& sw) {
    Artifact a;
    std::string shape = text(p, "shape", "params");
    ParametricCurve c;
    if (shape == "circle") c = circle_curve(positive(p, "R", "params"));
    else if (shape == "ellipse") c = ellipse_curve(positive(p, "a", "params"), positive(p, "b", "params"));
    else if (shape == "gerono") c = gerono_curve(number_or(p, "a", 1.0, "params"));
    else if (shape == "limacon") c = limacon_curve();
    else if (shape == "pn")
        c = pn_curve({positive(p, "R", "params"), number(p, "e", "params"), integer(p, "n", "params")});
    else throw SchemaError("params: unknown shape '" + shape + "'");
    a.report.section("curve " + shape);
    curve_report(a, c, s, sw);
    return a;
}

FourBarConfig fourbar_config(const json& p, const std::string& w) {
    return {p.contains("crank_pivot") ? point(p, "crank_pivot", w) : cplx(0.0),
            positive(p, "crank", w),
            positive(p, "coupler", w),
            positive(p, "rocker", w),
            point(p, "rocker_pivot", w),
            branch(p, w)};
}

Artifact linkage_scenario(const json& p, const Settings& s, const Sweep& sw) {
    Artifact a;
    std::string type = text(p, "type", "params");
    if (type == "fivebar") {
        FiveBarConfig c;
        c.l1 = positive(p, "l1", "params");
        c.l2 = positive(p, "l2", "params");
        c.l3 = positive(p, "l3", "params");
        c.l4 = positive(p, "l4", "params");
        c.l5 = positive(p, "l5", "params");
        c.l6 = number(p, "l6", "params");
        c.phi1 = rad(number(p, "phi1_deg", "params"));
        c.delta = rad(number(p, "delta_deg", "params"));
        c.psi = affine_angle(number(p, "psi_slope", "params"), rad(number(p, "psi_offset_deg", "params")));
        c.branch = branch(p, "params");
        a.report.section("five-bar coupler curve");
        curve_report(a, fivebar_curve(c), s, sw);
    } else if (type == "fourbar") {
        auto cfg = fourbar_config(p, "params");
        cplx zeta = p.contains("coupler_point") ? point(p, "coupler_point", "params") : cplx(cfg.coupler, 0.0);
        auto c = frame_point_curve(fourbar_motion(cfg), zeta);
        c.closed = true;
        a.report.section("four-bar coupler curve");
        curve_report(a, c, s, sw);
    } else {
        throw SchemaError("params: unknown linkage type '" + type + "'");
    }
    return a;
}

Artifact motion_scenario(const json& p, const Settings&, const Sweep& sw) {
    Artifact a;
    auto cfg = fourbar_config(field(p, "linkage", "params"), "params.linkage");
    auto m = fourbar_motion(cfg);
    double phi = rad(number(p, "phi_deg", "params"));
    auto st = frame_state(m, phi);
    a.report.section("four-bar motion");
    a.report.angle("phi", phi);
    motion_report(a.report, st);
    a.table.header = {"phi", "P1_x", "P1_y", "moving_centrode_x", "moving_centrode_y"};
    for (double t : sw.params()) {
        try {
            auto cd = centrodes(m, t);
            a.table.rows.push_back({t, cd.fixed.real(), cd.fixed.imag(), cd.moving.real(), cd.moving.imag()});
        } catch (const Error&) {
        }
    }
    const char* colors[4] = {"#c0392b", "#27ae60", "#8e44ad", "#d35400"};
    for (auto& c : characteristic_circles(st))
        if (c.defined) a.figure.circles.push_back({c.circle, stroke(colors[static_cast<int>(c.kind)], 1.0)});
    for (int n = 1; n <= 3; ++n) a.figure.points.push_back({pole(st, n), "P" + std::to_string(n), "#1f4e9c"});
    return a;
}

Artifact cam_scenario(const json& p, const Settings& s, const Sweep& sw) {
    Artifact a;
    std::string follower = text(p, "follower", "params");
    auto q = s.quad();
    if (follower == "translating_flat") {
        TranslatingFlatFaceCam cam{positive(p, "r0", "params"), law(p, "params")};
        auto m = tff_metrics(cam, q);
        auto u = tff_undercut(cam);
        a.report.section("translating flat-face cam");
        a.report.value("perimeter", m.perimeter);
        a.report.value("signed area", m.signed_area);
        a.report.value("|area|", m.abs_area);
        a.report.value("min radius of curvature", m.rho_min.value);
        a.report.angle("  at", m.rho_min.at);
        a.report.value("max radius of curvature", m.rho_max.value);
        a.report.angle("  at", m.rho_max.at);
        a.report.text(std::string("undercut = ") + undercut_name(u.kind));
        for (double t : u.cusps) a.report.angle("cusp", t);
        for (auto& l : u.loops) a.report.value("self-intersection point", l.point);
        a.table.header = {"phi", "x", "y", "rho"};
        for (double t : sw.params()) {
            cplx z = tff_contour(cam, t).z;
            a.table.rows.push_back({t, z.real(), z.imag(), tff_radius_of_curvature(cam, t)});
        }
        add_curve(a.figure, tff_curve(cam), "#1f4e9c");
        a.figure.circles.push_back({{0.0, cam.r0}, stroke("#999999", 1.0, true)});
    } else if (follower == "swinging_flat") {
        SwingingFlatFaceCam cam{point(p, "zB0", "params"), rad(number(p, "psi0_deg", "params")),
                                number(p, "a", "params"), law(p, "params")};
        auto c = sff_curve(cam);
        a.report.section("swinging flat-face cam");
        a.report.value("total curvature", total_curvature(c, q));
        a.report.value("signed area", enclosed_area(c, q));
        a.table.header = {"phi", "x", "y", "lambda", "kappa"};
        for (double t : sw.params()) {
            auto r = sff_contour(cam, t);
            a.table.rows.push_back({t, r.z[0].real(), r.z[0].imag(), r.lambda, r.kappa});
        }
        add_curve(a.figure, c, "#1f4e9c");
    } else if (follower == "roller") {
        RollerCam cam{point(p, "zB0", "params"), rad(number(p, "psi0_deg", "params")), positive(p, "l", "params"),
                      positive(p, "rho", "params"), law(p, "params")};
        double mu = p.contains("mu_min_deg") ? rad(number(p, "mu_min_deg", "params")) : NAN;
        bool mirror = p.contains("negative_rotation") && field(p, "negative_rotation", "params").get<bool>();
        auto m = roller_metrics(cam, q);
        auto mx = max_transmission_angle(cam), mn = min_transmission_angle(cam);
        a.report.section("roller cam");
        a.report.value("L_B", m.L_B);
        a.report.value("L_K", m.L_K);
        a.report.value("A_B", m.A_B);
        a.report.value("A_K", m.A_K);
        a.report.flag("identities apply", m.identities_apply);
        a.report.angle("max transmission angle", mx.value);
        a.report.angle("  at", mx.at);
        a.report.angle("min transmission angle", mn.value);
        a.report.angle("  at", mn.at);
        if (!std::isnan(mu)) {
            A0Options opt;
            opt.rho = cam.rho;
            opt.mirror = mirror;
            auto rep = a0_regions({cam.zB0, cam.psi0, cam.l, cam.psi}, mu, opt);
            a.report.section("A0 regions");
            for (auto& c : rep.candidates) {
                a.report.value("intersection", c.point);
                a.report.flag("  admissible", c.admissible);
                a.report.text(std::string("  type = ") + (c.p_cam ? "P-cam" : "F-cam"));
                a.report.value("  max cam radius", c.max_radius);
            }
        }
        a.table.header = {"phi", "zK_x", "zK_y", "kappa_B", "kappa_K", "mu_deg"};
        for (double t : sw.params()) {
            auto r = roller_curves(cam, t);
            a.table.rows.push_back({t, r.zK.real(), r.zK.imag(), r.kappa_B, r.kappa_K, deg(transmission_angle(cam, t))});
        }
        add_curve(a.figure, roller_center_curve(cam), "#999999", 1440, true);
        add_curve(a.figure, roller_contour_curve(cam), "#1f4e9c");
    } else {
        throw SchemaError("params: unknown follower '" + follower + "'");
    }
    return a;
}

Artifact profile_scenario(const json& p, const Settings& s, const Sweep& sw) {
    Artifact a;
    PnProfile pr{positive(p, "R", "params"), number(p, "e", "params"), integer(p, "n", "params")};
    if (pr.e < 0 || pr.n < 1) throw SchemaError("params: need e >= 0 and n >= 1");
    const bool tool = p.contains("tool_radius");
    const double r = tool ? positive(p, "tool_radius", "params") : 0.0;
    const double r1 = p.contains("r1") ? positive(p, "r1", "params") : 0.0;
    auto m = profile_metrics(pr);
    auto g = generator_bars(pr);
    a.report.section("P" + std::to_string(pr.n) + " profile");
    a.report.text(std::string("validity = ") + validity_name(validity_check(pr)));
    a.report.value("area", m.area);
    a.report.value("area (quadrature)", enclosed_area(pn_curve(pr), s.quad()));
    a.report.value("length (valid profiles)", m.length);
    a.report.flag("constant width", m.constant_width);
    a.report.value("width", m.width);
    a.report.value("l2", g.l2);
    a.report.value("l3", g.l3);
    a.report.value("l4", g.l4);
    if (pr.n % 2 == 1) {
        auto rc = reuleaux_compare(pr);
        a.report.value("Reuleaux triangle area", rc.reuleaux_area);
        a.report.flag("profile larger", rc.profile_larger);
    }
    if (r1 > 0) {
        auto pc = pnc_profile(pr, r1);
        a.report.flag("circle meets curve", pc.blended);
        for (double t : pc.blend_params) a.report.angle("blend point", t);
    }
    a.table.header = {"phi", "x", "y", "support"};
    if (tool) a.table.header.push_back("x_shift");
    auto ps = sw.params();
    std::vector<CncPoint> cnc;
    if (tool) cnc = cnc_sweep(pr, r, ps);
    for (std::size_t i = 0; i < ps.size(); ++i) {
        cplx z = pn_point(pr, ps[i])[0];
        std::vector<double> row{ps[i], z.real(), z.imag(), pn_support(pr, ps[i])};
        if (tool) row.push_back(cnc[i].x_shifted);
        a.table.rows.push_back(row);
    }
    add_curve(a.figure, pn_curve(pr), "#1f4e9c");
    return a;
}

} // namespace

Artifact run_scenario_file(const std::string& path, const Settings& s) {
    std::ifstream in(path);
    if (!in) throw std::runtime_error("cannot read scenario " + path);
    json sc;
    try {
        sc = json::parse(in);
    } catch (const json::parse_error& e) {
        throw SchemaError(std::string("invalid JSON: ") + e.what());
    }
    std::string kind = text(sc, "kind", "scenario");
    const json& params = field(sc, "params", "scenario");
    if (!params.is_object()) throw SchemaError("scenario: 'params' must be an object");
    Sweep sw = sweep_spec(sc, s);
    if (kind == "curve") return curve_scenario(params, s, sw);
    if (kind == "linkage") return linkage_scenario(params, s, sw);
    if (kind == "motion") return motion_scenario(params, s, sw);
    if (kind == "cam") return cam_scenario(params, s, sw);
    if (kind == "profile") return profile_scenario(params, s, sw);
    throw SchemaError("scenario: unknown kind '" + kind + "'");
}

std::vector<std::string> scenario_outputs(const std::string& path) {
    std::ifstream in(path);
    json sc = json::parse(in, nullptr, false);
    std::vector<std::string> out;
    if (sc.is_object() && sc.contains("outputs") && sc["outputs"].is_array())
        for (auto& v : sc["outputs"])
            if (v.is_string()) out.push_back(v.get<std::string>());
    return out;
}

} // namespace kin2d::cli
