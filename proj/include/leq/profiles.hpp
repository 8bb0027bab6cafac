#pragma once

// Invariant profiles of equable lattice quadrilaterals: the tangential pair
// (sigma, tau) with delta, incenter and Newton-line coordinate lambda, and the
// extangential pair (Sigma, T) with exradius, excenter and lambda_e, plus the
// exact identity cross-check suite.

#include "geometry.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leq {

struct RationalPoint {
    ExactRational x, y;
    bool operator==(const RationalPoint& o) const { return x == o.x && y == o.y; }
    bool is_lattice() const { return is_integer(x) && is_integer(y); }
};

inline RationalPoint swap_xy(const RationalPoint& p) { return {p.y, p.x}; }

enum class Delta { Plus, Minus, Cyclic };

struct TangentialProfile {
    ExactRational sigma, tau;
    Delta delta = Delta::Plus;
    RationalPoint incenter;
    std::optional<ExactRational> lambda;  // 1/sigma; absent for a rhombus
    // Second (sigma, tau) labeling for the rhombus, where the choice of
    // longest diagonal is ambiguous.
    std::optional<std::pair<ExactRational, ExactRational>> rhombus_alt;
    SideLengths sides;      // in the profiled labeling
    bool kite = false;
    bool rhombus = false;
    LatticeQuad labeled;    // the labeling the profile was computed in
    bool reflected = false; // labeled quad lives in the y=x reflected frame
};

struct ExtangentialProfile {
    ExactInt Sigma, T;
    ExactRational exradius;
    RationalPoint excenter;
    ExactRational lambda_e;
    // Derived quantities of the side variables x = a+b, y = a-c, z = c-b.
    ExactInt x, y, z, Sigma_prime;
    ExactRational k, h;
    SideLengths sides;
    bool kite = false;
    LatticeQuad labeled;
    bool reflected = false;
};

namespace detail {

inline bool admissible_profile_labeling(const LatticeQuad& q) {
    SignedAreas ar = q.signed_areas();
    return ar.twoKO > 0 && ar.twoKA > 0 && ar.twoKC > 0;
}

// Picks the labeling a profile is computed in: the caller's own labeling when
// it already satisfies `accept`, otherwise the first admissible relabeling
// (unreflected rotations first) that does.
template <typename Pred>
inline Labeling profile_labeling(const LatticeQuad& q, Pred&& accept, const char* what) {
    if (admissible_profile_labeling(q) && accept(q)) return {q, false};
    for (const Labeling& cand : admissible_labelings(q.points()))
        if (accept(cand.quad)) return cand;
    throw std::invalid_argument(std::string(what) + ": no admissible labeling");
}

inline RationalPoint rational_point(const LatticePoint& p) {
    return {ExactRational(p.x), ExactRational(p.y)};
}

} // namespace detail

// Incenter from the bisector equations at O: the point at signed distance
// r = 2 from the lines OA and OC is I = O + (r/2) (a (C-O) + d (A-O)) / K_O.
inline RationalPoint tangential_incenter(const LatticeQuad& q, const SideLengths& s) {
    ExactInt twoKO = q.signed_areas().twoKO;
    return {q.O.x + ExactRational(2 * (s.a * (q.C.x - q.O.x) + s.d * (q.A.x - q.O.x)), twoKO),
            q.O.y + ExactRational(2 * (s.a * (q.C.y - q.O.y) + s.d * (q.A.y - q.O.y)), twoKO)};
}

inline TangentialProfile tangential_profile(const LatticeQuad& input) {
    Labeling lab = detail::profile_labeling(
        input,
        [](const LatticeQuad& q) {
            ShapeClass sc = classify(q);
            return sc.tangential && sc.equable;
        },
        "tangential_profile");
    const LatticeQuad& q = lab.quad;
    ShapeClass sc = classify(q);
    if (!sc.tangential || !sc.equable)
        throw std::invalid_argument("tangential_profile: quad is not an equable tangential LEQ");
    const SideLengths& s = *sc.sides;
    const SignedAreas& ar = sc.areas;

    TangentialProfile out;
    out.sides = s;
    out.kite = sc.kite;
    out.rhombus = s.a == s.b && s.b == s.c && s.c == s.d;
    out.labeled = q;
    out.reflected = lab.reflected;

    ExactInt radicand = s.a * s.b * s.c * s.d - 4 * (s.a + s.c) * (s.a + s.c);
    CircumcirclePosition pos = b_in_circumcircle(q);
    out.delta = pos.on_circle ? Delta::Cyclic : (pos.inside ? Delta::Plus : Delta::Minus);
    if (radicand == 0) out.delta = Delta::Cyclic;

    if (out.rhombus) {
        // 8 sigma, 8 tau = a^2 +- sqrt(a^4 - 16 a^2); the +- assignment depends
        // on which diagonal is called OB, so both labelings are reported.
        auto root = isqrt(s.a * s.a * s.a * s.a - 16 * s.a * s.a);
        if (!root) throw std::logic_error("tangential_profile: rhombus radicand not a square");
        out.sigma = ExactRational(s.a * s.a + *root, 8);
        out.tau = ExactRational(s.a * s.a - *root, 8);
        out.rhombus_alt = std::make_pair(out.tau, out.sigma);
        out.lambda = std::nullopt;
    } else if (out.kite) {
        // Square-root form of the defining formulas; radicand is a perfect
        // square for every equable tangential quad.
        auto root = isqrt(radicand);
        if (!root) throw std::logic_error("tangential_profile: radicand not a perfect square");
        ExactInt dl = (out.delta == Delta::Minus) ? -1 : 1;
        out.sigma = ExactRational(s.a * s.d + s.b * s.c + 2 * dl * *root,
                                  16 + (s.a - s.b) * (s.a - s.b));
        out.tau = ExactRational(s.a * s.b + s.c * s.d - 2 * dl * *root,
                                16 + (s.a - s.d) * (s.a - s.d));
        out.lambda = 1 / out.sigma;
    } else {
        // Integer-exact quotient formulas (a != b and a != d off the kites).
        out.sigma = make_rational(ar.twoKO - 2 * (s.a + s.c), 2 * (s.a - s.b));
        out.tau = make_rational(ar.twoKA - 2 * (s.a + s.c), 2 * (s.a - s.d));
        out.lambda = 1 / out.sigma;
    }

    out.incenter = tangential_incenter(q, s);
    if (lab.reflected) out.incenter = swap_xy(out.incenter);
    return out;
}

inline ExtangentialProfile extangential_profile(const LatticeQuad& input) {
    Labeling lab = detail::profile_labeling(
        input,
        [](const LatticeQuad& q) {
            ShapeClass sc = classify(q);
            if (!sc.extangential || !sc.equable) return false;
            const auto& s = *sc.sides;
            return s.a + s.b == s.c + s.d && s.a > s.c;
        },
        "extangential_profile");
    const LatticeQuad& q = lab.quad;
    ShapeClass sc = classify(q);
    const SideLengths& s = *sc.sides;
    const SignedAreas& ar = sc.areas;

    ExtangentialProfile out;
    out.sides = s;
    out.kite = sc.kite;
    out.labeled = q;
    out.reflected = lab.reflected;

    ExactInt x = s.a + s.b, y = s.a - s.c, z = s.c - s.b;
    ExactInt sig2 = sc.q2 - (s.a - s.d) * (s.a - s.d);
    ExactInt t2 = x * x - sc.p2;
    if (sig2 % 2 != 0 || t2 % 2 != 0)
        throw std::logic_error("extangential_profile: Sigma/T not integral");
    out.Sigma = sig2 / 2;
    out.T = t2 / 2;

    // Cross-check against the quotient forms where they are defined.
    if (8 * (ar.twoKO - 2 * x) != out.Sigma * 2 * y)
        throw std::logic_error("extangential_profile: Sigma quotient-form mismatch");
    if (s.a != s.d) {
        if (8 * x * (2 * x - ar.twoKA) != out.T * 2 * y * (s.a - s.d))
            throw std::logic_error("extangential_profile: T quotient-form mismatch");
    }

    out.exradius = ExactRational(2 * x, y);
    out.excenter = {q.O.x + out.exradius * ExactRational(s.a * (q.C.x - q.O.x) + s.d * (q.A.x - q.O.x), ar.twoKO),
                    q.O.y + out.exradius * ExactRational(s.a * (q.C.y - q.O.y) + s.d * (q.A.y - q.O.y), ar.twoKO)};
    if (lab.reflected) out.excenter = swap_xy(out.excenter);
    out.lambda_e = make_rational(out.T, out.T - out.Sigma);
    out.x = x;
    out.y = y;
    out.z = z;
    out.Sigma_prime = out.T - out.Sigma;
    out.k = ExactRational(8 * x * x, out.T);
    out.h = ExactRational(x, y);
    return out;
}

// Affine coordinate lambda of a center I on the Newton line, defined by
// I = lambda M_A + (1 - lambda) M_O with M_A = (A+C)/2, M_O = (O+B)/2,
// all in the frame of `q`.
inline ExactRational newton_coordinate_of(const LatticeQuad& q, const RationalPoint& center) {
    RationalPoint ma{ExactRational(q.A.x + q.C.x, 2), ExactRational(q.A.y + q.C.y, 2)};
    RationalPoint mo{ExactRational(q.O.x + q.B.x, 2), ExactRational(q.O.y + q.B.y, 2)};
    ExactRational dx = ma.x - mo.x, dy = ma.y - mo.y;
    if (dx == 0 && dy == 0)
        throw std::invalid_argument("newton_coordinate_of: parallelogram (coincident midpoints)");
    ExactRational lambda = (dx != 0) ? (center.x - mo.x) / dx : (center.y - mo.y) / dy;
    if (mo.x + lambda * dx != center.x || mo.y + lambda * dy != center.y)
        throw std::logic_error("newton_coordinate_of: center is off the Newton line");
    return lambda;
}

// Newton-line coordinate of the incenter (tangential, kites included) or of
// the excenter (pure extangential) of an equable quad.
inline ExactRational newton_line_coordinate(const LatticeQuad& input) {
    ShapeClass sc = classify(input);
    if (sc.sides && has_parallel_sides(input))
        throw std::invalid_argument("newton_line_coordinate: parallelogram rejected");
    if (sc.tangential) {
        TangentialProfile p = tangential_profile(input);
        RationalPoint center = p.reflected ? swap_xy(p.incenter) : p.incenter;
        return newton_coordinate_of(p.labeled, center);
    }
    ExtangentialProfile p = extangential_profile(input);
    RationalPoint center = p.reflected ? swap_xy(p.excenter) : p.excenter;
    return newton_coordinate_of(p.labeled, center);
}

struct IdentityReport {
    std::vector<std::pair<std::string, bool>> checks;
    void add(std::string name, bool ok) { checks.emplace_back(std::move(name), ok); }
    bool all_ok() const {
        for (const auto& [_, ok] : checks)
            if (!ok) return false;
        return true;
    }
    std::vector<std::string> failures() const {
        std::vector<std::string> out;
        for (const auto& [name, ok] : checks)
            if (!ok) out.push_back(name);
        return out;
    }
};

// Exact verification of every cross-identity the profiled quad should obey.
inline IdentityReport check_identities(const LatticeQuad& input) {
    IdentityReport rep;
    ShapeClass sc0 = classify(input);
    if (!sc0.sides || !sc0.equable) {
        rep.add("equable_with_integer_sides", false);
        return rep;
    }

    if (sc0.tangential) {
        TangentialProfile p = tangential_profile(input);
        const LatticeQuad& q = p.labeled;
        const SideLengths& s = p.sides;
        SignedAreas ar = q.signed_areas();
        ExactRational KO(ar.twoKO, 2), KA(ar.twoKA, 2), KB(ar.twoKB, 2), KC(ar.twoKC, 2);
        const ExactRational &sg = p.sigma, &tu = p.tau;

        rep.add("tan.sum_law", sg + tu == sg * tu);
        rep.add("tan.area_KO", KO == s.a + s.c + (s.a - s.b) * sg);
        rep.add("tan.area_KA", KA == s.a + s.c + (s.b - s.c) * tu);
        rep.add("tan.famcor",
                (KA - (s.a + s.b)) * (KO - (s.a + s.d)) == s.b * s.d - s.a * s.c);
        rep.add("tan.college_x",
                ar.twoKO * (q.B.x - q.O.x) == ar.twoKC * (q.A.x - q.O.x) + ar.twoKA * (q.C.x - q.O.x));
        rep.add("tan.college_y",
                ar.twoKO * (q.B.y - q.O.y) == ar.twoKC * (q.A.y - q.O.y) + ar.twoKA * (q.C.y - q.O.y));
        rep.add("tan.eight_sigma_integer", is_integer(8 * sg));
        rep.add("tan.eight_tau_integer", is_integer(8 * tu));
        rep.add("tan.steqn_sigma",
                16 * sg * sg + ((s.d - s.c) * sg + (s.a + s.c)) * ((s.d - s.c) * sg + (s.a + s.c)) ==
                    4 * s.a * s.d * sg);
        rep.add("tan.steqn_tau",
                16 * tu * tu + ((s.b - s.c) * tu + (s.a + s.c)) * ((s.b - s.c) * tu + (s.a + s.c)) ==
                    4 * s.a * s.b * tu);
        ExactInt radicand = s.a * s.b * s.c * s.d - 4 * (s.a + s.c) * (s.a + s.c);
        rep.add("tan.radicand_square", is_perfect_square(radicand));
        ExactRational dev = (16 + (s.a - s.b) * (s.a - s.b)) * sg - (s.a * s.d + s.b * s.c);
        rep.add("tan.sqrt_form_sigma", dev * dev == 4 * radicand);
        dev = (16 + (s.a - s.d) * (s.a - s.d)) * tu - (s.a * s.b + s.c * s.d);
        rep.add("tan.sqrt_form_tau", dev * dev == 4 * radicand);
        if (!p.kite) {
            ExactInt p2 = norm2(q.B - q.O), q2 = norm2(q.C - q.A);
            rep.add("tan.p_squared",
                    ExactRational(p2) == 8 * (KA - KC) / ExactRational(s.a - s.d) +
                                             (s.a - s.b) * (s.a - s.b));
            rep.add("tan.q_squared",
                    ExactRational(q2) == 8 * (KO - KB) / ExactRational(s.a - s.b) +
                                             (s.a - s.d) * (s.a - s.d));
        }
        if (p.lambda) {
            rep.add("tan.lambda_inverse_sigma", *p.lambda == 1 / sg);
            if (!has_parallel_sides(q)) {
                RationalPoint center = p.reflected ? swap_xy(p.incenter) : p.incenter;
                ExactRational nl = newton_coordinate_of(q, center);
                rep.add("tan.lambda_newton", nl == *p.lambda);
                rep.add("tan.incenter_between_midpoints", nl >= 0 && nl <= 1);
            }
        }
    }

    if (sc0.extangential) {
        ExtangentialProfile p = extangential_profile(input);
        const LatticeQuad& q = p.labeled;
        const SideLengths& s = p.sides;
        SignedAreas ar = q.signed_areas();
        ExactRational KO(ar.twoKO, 2), KA(ar.twoKA, 2), KB(ar.twoKB, 2), KC(ar.twoKC, 2);
        const ExactInt &S = p.Sigma, &T = p.T, &x = p.x, &y = p.y, &z = p.z;

        rep.add("ext.exsum_a", S * T * y * y == 8 * x * x * (T - S));
        rep.add("ext.exsum_b",
                2 * S * T == x * x * (S - 8) - (s.b - s.c) * (s.b - s.c) * T);
        rep.add("ext.sigma_divides", (8 * x * x) % S == 0);
        rep.add("ext.t_divides", (8 * x * x) % T == 0);
        rep.add("ext.nondegenerate", S * (T - S) != 8 * T);
        rep.add("ext.positivity", S > 8 && S < T && 2 * T < x * x);
        rep.add("ext.lambda_e_quotient", p.lambda_e == make_rational(T, T - S));
        rep.add("ext.lambda_e_times_sigma",
                p.lambda_e * S == 2 * p.exradius * p.exradius);
        rep.add("ext.lambda_e_newton_form",
                p.lambda_e * (KO - x) == (p.exradius / 2) * x);
        rep.add("ext.area_KO", KO == x + ExactRational(y * S, 8));
        rep.add("ext.area_KA",
                KA == x - ExactRational(y * (s.a - s.d) * T, 8 * x));
        rep.add("ext.identity_prop",
                (KA - (p.exradius / 2) * (s.a - s.b)) * (KO - (p.exradius / 2) * (s.a + s.d)) ==
                    (p.exradius * p.exradius / 4) * (s.a * s.c - s.b * s.d));
        rep.add("ext.non_self_intersecting", (s.c - s.b) * T < (s.a - s.b) * S);
        bool concave = ar.twoKB < 0;
        rep.add("ext.concavity_criterion", concave == (S * y > 8 * x));
        rep.add("ext.sigma_quadratic",
                (16 + y * y) * S * S - 16 * (s.a * s.d + s.b * s.c) * S + 64 * x * x == 0);
        rep.add("ext.t_quadratic",
                (16 * x * x + y * y * (s.a - s.d) * (s.a - s.d)) * T * T -
                        16 * x * x * (s.a * s.b + s.c * s.d) * T + 64 * x * x * x * x == 0);
        if (!p.kite) {
            ExactInt p2 = norm2(q.B - q.O), q2 = norm2(q.C - q.A);
            rep.add("ext.p_squared",
                    ExactRational(p2) ==
                        ExactRational(8 * x, 1) * (KA - KC) / ExactRational(y * (s.a - s.d)) +
                            x * x);
            rep.add("ext.q_squared",
                    ExactRational(q2) == 8 * (KO - KB) / ExactRational(y) +
                                             (s.a - s.d) * (s.a - s.d));
            // Hypotheses of the structure theorem on (y, z, k).
            bool k_ok = is_integer(p.k);
            rep.add("ext.k_integer", k_ok);
            if (k_ok) {
                ExactInt k = rat_num(p.k);
                rep.add("ext.k_gt_16", k > 16);
                rep.add("ext.k_gt_yz", k > y * z);
                rep.add("ext.sigma_from_k", S * (k - 16) == 8 * (z * z + k));
                rep.add("ext.sigma_prime_from_k", p.Sigma_prime * k == y * y * S);
                rep.add("ext.x_from_k", 8 * x * x == k * (S + p.Sigma_prime));
            }
        }
    }

    if (!sc0.tangential && !sc0.extangential) rep.add("classified", false);
    return rep;
}

} // namespace leq
