#pragma once

// Reference configurations shared by the CLI, tests and acceptance checks.

#include "kin2d/cam.hpp"
#include "kin2d/motion.hpp"
#include "kin2d/profile.hpp"

namespace kin2d::presets {

inline FiveBarConfig fivebar() {
    FiveBarConfig c;
    c.l1 = 50;
    c.l2 = 20;
    c.l3 = 60;
    c.l4 = 40;
    c.l5 = 20;
    c.l6 = 60;
    c.phi1 = rad(5);
    c.delta = rad(35);
    c.psi = affine_angle(-2.0, -pi / 3);
    c.branch = 1;
    return c;
}

// unit crank at the origin, coupler sqrt 2, rocker 2 about 3 + 2i
inline FourBarConfig fourbar_unit() { return {0.0, 1.0, std::sqrt(2.0), 2.0, cplx(3, 2), 1}; }

// same mechanism driven from the other side: crank 2 about 3 + 2i, coupler sqrt 2, rocker 1 about 0
inline FourBarConfig fourbar_unit_relabeled() { return {cplx(3, 2), 2.0, std::sqrt(2.0), 1.0, 0.0, -1}; }

inline FourBarConfig fourbar_large() { return {0.0, 12.0, 50.0, 35.0, 50.0 * expi(rad(5)), 1}; }

// angle of the rocker B0 -> B of fourbar_unit as a function of the crank angle
inline Jet fourbar_unit_rocker_angle(double phi) {
    auto c = fourbar_unit();
    CJet zB0{c.rocker_pivot, 0.0, 0.0, 0.0};
    auto s = require_regular(solve_dyad(c.rocker, c.coupler, zB0, crank_jet(c.crank_pivot, c.crank, phi), -1));
    return {s.phi1, s.d1, s.d2, s.d3};
}

inline TranslatingFlatFaceCam flat_face_cam(double r0 = 30.0) { return {r0, standard_cam_law(18.0)}; }

inline SwingingFlatFaceCam swinging_cam() {
    return {cplx(2, 2), rad(70), 3.0, make_motion_law({Segment::dwell(pi), Segment::hump(pi, pi / 9, 4)})};
}

inline RollerCam roller_cam() { return {cplx(70, 15), rad(120), 50.0, 10.0, standard_cam_law(rad(40))}; }

inline FollowerSpec a0_follower() { return {0.0, rad(120), 50.0, standard_cam_law(rad(40))}; }

inline PnProfile p3g() { return {1.0, 0.072, 3}; }
inline PnProfile rabinowitz() { return {9.0, 1.0, 3}; }
inline PnProfile p4_generator() { return {1.0, 0.25, 4}; }

} // namespace kin2d::presets
