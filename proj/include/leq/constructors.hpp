#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "leq/geometry.hpp"
#include "leq/numkernel.hpp"
#include "leq/pell.hpp"
#include "leq/profiles.hpp"

namespace leq {

// One solution of the quadrilateral-generating diophantine equation
// (2x)^2 + u^2 = v^2 - (v - ((x-1)/2) c)^2 with x in {2,3,5,9}.
struct DioSolutionGen {
    int x = 2;
    ExactInt u = 0;
    ExactInt v = 0;
    ExactInt c = 0;
};

inline ExactInt gen_offset(const DioSolutionGen& s) {
    // (x-1)c/2; integral because c is even when x = 2 and x is odd otherwise.
    return ExactInt(s.x - 1) * s.c / 2;
}

inline bool gen_equation_holds(const DioSolutionGen& s) {
    ExactInt g = gen_offset(s);
    return ExactInt(4 * s.x * s.x) + s.u * s.u == s.v * s.v - (s.v - g) * (s.v - g);
}

inline bool gen_side_conditions_hold(const DioSolutionGen& s) {
    if (s.c <= 0 || s.v <= 0) return false;
    if ((s.u + s.v) % s.x != 0) return false;
    if (s.x == 2 && s.c % 2 != 0) return false;
    if (s.x == 3 && s.c % 3 == 0) return false;
    return gen_equation_holds(s);
}

enum class GenCase { I, II };

// Sides derived from a solution: case I gives (sigma, tau) = (x/(x-1), x)
// with b = (v+u)/x; case II gives (x, x/(x-1)) with d = (v+u)/x. Nullopt if
// any derived side is nonpositive.
inline std::optional<SideLengths> gen_derived_sides(GenCase which, const DioSolutionGen& s) {
    ExactInt a = s.v - s.u, c = s.c, b, d;
    if (which == GenCase::I) {
        b = (s.v + s.u) / s.x;
        d = a + c - b;
    } else {
        d = (s.v + s.u) / s.x;
        b = a + c - d;
    }
    if (a <= 0 || b <= 0 || d <= 0) return std::nullopt;
    return SideLengths{a, b, c, d};
}

// Conditions (i)-(iii) of the converse construction, cross-multiplied so the
// case II value tau = x/(x-1) needs no rationals.
inline bool gen_conditions_hold(GenCase which, int x, const SideLengths& s) {
    ExactInt tn = x;
    ExactInt td = (which == GenCase::I) ? ExactInt(1) : ExactInt(x - 1);
    ExactInt diff = s.c - s.b;
    if (diff < 0) diff = -diff;
    if (!(diff * tn < (s.a + s.c) * td)) return false;
    if (!((s.a + s.d) * tn > (s.a + s.c) * td)) return false;
    if ((s.b + s.c) * tn == (s.a + s.c) * td) return false;
    return true;
}

struct ConstructedTangential {
    LatticeQuad quad;
    SideLengths sides;
    ExactRational sigma;
    ExactRational tau;
    bool exceptional = false;
};

namespace detail {

inline bool all_divisible(const DioSolutionGen& s, int m) {
    return s.u % m == 0 && s.v % m == 0 && s.c % m == 0;
}

// Scaled-down exceptional inputs exist exactly when the solution shares the
// obstruction factor: all of u,v,c divisible by 5 (x=5), or divisible by 3
// but not all by 9 (x=9).
inline bool is_exceptional(const DioSolutionGen& s) {
    if (s.x == 5) return all_divisible(s, 5);
    if (s.x == 9) return all_divisible(s, 3) && !all_divisible(s, 9);
    return false;
}

inline std::optional<LatticePoint> point_div(const LatticePoint& p, const ExactInt& m) {
    if (p.x % m != 0 || p.y % m != 0) return std::nullopt;
    return LatticePoint{p.x / m, p.y / m};
}

inline LatticePoint to_point(const GaussianInt& g) { return {g.re, g.im}; }

// Given the declared sides, try to assemble a simple CCW lattice quad from
// candidate vertices; nullopt when the vertices are non-integral or the
// sides disagree.
inline std::optional<LatticeQuad> try_quad(const std::optional<LatticePoint>& A,
                                           const std::optional<LatticePoint>& B,
                                           const std::optional<LatticePoint>& C,
                                           const SideLengths& declared) {
    if (!A || !B || !C) return std::nullopt;
    auto q = LatticeQuad::make({0, 0}, *A, *B, *C);
    if (!q) {
        // The decomposition fixes the shape but not the orientation; a
        // clockwise assembly is repaired by reflecting in y = x.
        q = LatticeQuad::make({0, 0}, swap_xy(*A), swap_xy(*B), swap_xy(*C));
        if (!q) return std::nullopt;
        auto s2 = side_lengths(*q);
        if (!s2 || !(*s2 == declared)) return std::nullopt;
        return q;
    }
    auto s = side_lengths(*q);
    if (!s || !(*s == declared)) return std::nullopt;
    return q;
}

} // namespace detail

// Realizes a solution of the generating equation as a tangential lattice
// quadrilateral with incircle radius 2. Case I produces (sigma, tau) =
// (x/(x-1), x); case II produces (x, x/(x-1)). Vertices come from a
// Pythagorean-quadruple decomposition, with dedicated branches when the
// decomposition lemma's gcd hypothesis fails at x = 5 or x = 9.
inline ConstructedTangential construct_tangential(GenCase which, const DioSolutionGen& s) {
    if (s.x != 2 && s.x != 3 && s.x != 5 && s.x != 9)
        throw std::invalid_argument("construct_tangential: x must be one of 2,3,5,9");
    if (!gen_side_conditions_hold(s))
        throw std::invalid_argument("construct_tangential: solution fails the generating equation or side conditions");
    if (which == GenCase::II && s.x == 2)
        throw std::invalid_argument("construct_tangential: case II requires x in {3,5,9}");

    const ExactInt t = s.x;
    auto sides = gen_derived_sides(which, s);
    if (!sides)
        throw std::invalid_argument("construct_tangential: nonpositive derived side");
    if (!gen_conditions_hold(which, s.x, *sides))
        throw std::invalid_argument("construct_tangential: conditions (i)-(iii) fail");

    const SideLengths declared = *sides;
    const bool exceptional = detail::is_exceptional(s);
    const ExactInt g = gen_offset(s);

    std::optional<LatticeQuad> found;
    auto attempt = [&](const ExactInt& qz, const ExactInt& qw, const ExactInt& qu, const ExactInt& qv,
                       auto&& build) {
        for (const QuadrupleDecomposition& dec : pythagorean_quadruple_decompose_all(qz, qw, qu, qv)) {
            GaussianInt z{dec.p, dec.q};
            GaussianInt w{dec.m, dec.n};
            if (auto q = build(z, w)) {
                found = q;
                return true;
            }
        }
        return false;
    };

    if (which == GenCase::I) {
        if (!exceptional) {
            attempt(-2 * t, s.v - g, s.u, s.v, [&](const GaussianInt& z, const GaussianInt& w) {
                GaussianInt A = z.square();
                GaussianInt W2 = w.square();
                GaussianInt TZ = z * ExactInt(t) - w;
                auto pa = detail::to_point(A);
                auto pb = detail::point_div(detail::to_point(W2), t);
                auto pc = detail::point_div(detail::to_point(TZ.square()), t * (t - 1));
                if (!pb || !pc) return std::optional<LatticeQuad>{};
                return detail::try_quad(pa, LatticePoint{pa.x - pb->x, pa.y - pb->y}, *pc, declared);
            });
        } else if (s.x == 5) {
            ExactInt u5 = s.u / 5, v5 = s.v / 5, c5 = s.c / 5;
            attempt(-2, v5 - 2 * c5, u5, v5, [&](const GaussianInt& z, const GaussianInt& w) {
                GaussianInt A = z.square() * ExactInt(5);
                GaussianInt B = A - w.square();
                GaussianInt FZ = z * ExactInt(5) - w;
                auto pc = detail::point_div(detail::to_point(FZ.square()), 4);
                if (!pc) return std::optional<LatticeQuad>{};
                return detail::try_quad(detail::to_point(A), detail::to_point(B), *pc, declared);
            });
        } else {
            ExactInt u3 = s.u / 3, v3 = s.v / 3, c3 = s.c / 3;
            attempt(-6, v3 - 4 * c3, u3, v3, [&](const GaussianInt& z, const GaussianInt& w) {
                GaussianInt A = z.square() * ExactInt(3);
                GaussianInt NZ = z * ExactInt(9) - w;
                auto pb = detail::point_div(detail::to_point(w.square()), 3);
                auto pc = detail::point_div(detail::to_point(NZ.square()), 24);
                if (!pb || !pc) return std::optional<LatticeQuad>{};
                auto pa = detail::to_point(A);
                return detail::try_quad(pa, LatticePoint{pa.x - pb->x, pa.y - pb->y}, *pc, declared);
            });
        }
    } else {
        if (!exceptional) {
            attempt(2 * t, s.v - g, s.u, s.v, [&](const GaussianInt& z, const GaussianInt& y) {
                GaussianInt SZ = z * ExactInt(t) - y;
                auto pa = detail::to_point(z.square());
                auto pbdef = detail::point_div(detail::to_point(SZ.square()), t * (t - 1));
                auto pc = detail::point_div(detail::to_point(y.square()), t);
                if (!pbdef || !pc) return std::optional<LatticeQuad>{};
                return detail::try_quad(pa, LatticePoint{pa.x - pbdef->x, pa.y - pbdef->y}, *pc, declared);
            });
        } else if (s.x == 5) {
            ExactInt u5 = s.u / 5, v5 = s.v / 5;
            attempt(2, (s.v - 2 * s.c) / 5, u5, v5, [&](const GaussianInt& z, const GaussianInt& y) {
                GaussianInt A = z.square() * ExactInt(5);
                GaussianInt C = y.square();
                GaussianInt ZY = z - y;
                auto pb = detail::point_div(detail::to_point(ZY.square() * ExactInt(5)), 4);
                if (!pb) return std::optional<LatticeQuad>{};
                auto c0 = detail::to_point(C);
                return detail::try_quad(detail::to_point(A),
                                        LatticePoint{c0.x - pb->x, c0.y - pb->y}, c0, declared);
            });
        } else {
            attempt(6, (s.v - 4 * s.c) / 3, s.u / 3, s.v / 3, [&](const GaussianInt& z, const GaussianInt& y) {
                GaussianInt A = z.square() * ExactInt(3);
                GaussianInt ZY = z - y;
                auto pc = detail::point_div(detail::to_point(y.square()), 3);
                auto pb = detail::point_div(detail::to_point(ZY.square() * ExactInt(3)), 8);
                if (!pc || !pb) return std::optional<LatticeQuad>{};
                return detail::try_quad(detail::to_point(A),
                                        LatticePoint{pc->x - pb->x, pc->y - pb->y}, *pc, declared);
            });
        }
    }

    if (!found)
        throw std::runtime_error("construct_tangential: no Pythagorean-quadruple decomposition realizes the sides");

    ConstructedTangential out{*found, declared, {}, {}, exceptional};
    if (which == GenCase::I) {
        out.sigma = ExactRational(t, t - 1);
        out.tau = ExactRational(t);
    } else {
        out.sigma = ExactRational(t);
        out.tau = ExactRational(t, t - 1);
    }
    return out;
}

enum class FamilyId {
    K1,
    K2,
    K3,
    K4,
    NestedTangential,
    Extan918,
    Extan4550,
    Tau3c1,
    Tau3c2,
    Sigma9,
};

struct FamilyMember {
    LatticeQuad quad;
    SideLengths sides;
    std::optional<RationalPoint> incenter;
    std::optional<ExactRational> lambda;
};

namespace detail {

inline LatticeQuad family_quad(const LatticePoint& A, const LatticePoint& B, const LatticePoint& C) {
    auto q = LatticeQuad::make({0, 0}, A, B, C);
    if (!q) throw std::runtime_error("generate_family: vertex recurrence produced an invalid quadrilateral");
    return *q;
}

inline FamilyMember make_member(const LatticePoint& A, const LatticePoint& B, const LatticePoint& C,
                                std::optional<RationalPoint> incenter, std::optional<ExactRational> lambda) {
    LatticeQuad q = family_quad(A, B, C);
    auto s = side_lengths(q);
    if (!s) throw std::runtime_error("generate_family: member has non-integral sides");
    return {q, *s, std::move(incenter), std::move(lambda)};
}

inline LatticePoint gaussian_swap(const LatticePoint& p) { return {p.y, p.x}; }

} // namespace detail

// Emits the first `count` members of one of the ten infinite families of
// equable lattice quadrilaterals: the four kite families (Pell equations
// n^2-5i^2=4, n^2-5i^2=1, n^2-2i^2=1, i^2-2n^2=-1), the nested tangential
// family over u^2-3v^2=1, the two extangential vertex families, and three
// parametric tangential side families realized through the diophantine
// constructor. Kite and nested members carry closed-form incenters and
// Newton coordinates.
inline std::vector<FamilyMember> generate_family(FamilyId id, std::size_t count) {
    std::vector<FamilyMember> out;
    out.reserve(count);
    switch (id) {
    case FamilyId::K1: {
        for (const PellSolution& p : pell_solutions({5, 4}, count)) {
            const ExactInt n = p.x, i = p.y;
            ExactInt h = (n + 5 * i) / 2;
            LatticePoint M{2 * h, h};
            LatticePoint A{M.x + 2, M.y - 4};
            LatticePoint B{2 * n, n};
            LatticePoint C{2 * M.x - A.x, 2 * M.y - A.y};
            ExactInt j = (n + i) / 2;
            out.push_back(detail::make_member(A, B, C, RationalPoint{2 * j, j}, ExactRational(1, 5)));
        }
        break;
    }
    case FamilyId::K2: {
        for (const PellSolution& p : pell_solutions({5, 1}, count)) {
            const ExactInt n = p.x, i = p.y;
            ExactInt h = 2 * n + 5 * i;
            LatticePoint M{2 * h, h};
            LatticePoint A{M.x + 1, M.y - 2};
            LatticePoint B{8 * n, 4 * n};
            LatticePoint C{2 * M.x - A.x, 2 * M.y - A.y};
            ExactInt j = 2 * (n + 2 * i);
            out.push_back(detail::make_member(A, B, C, RationalPoint{2 * j, j}, ExactRational(4, 5)));
        }
        break;
    }
    case FamilyId::K3: {
        for (const PellSolution& p : pell_solutions({2, 1}, count)) {
            const ExactInt n = p.x, i = p.y;
            ExactInt h = n + 2 * i;
            LatticePoint M{2 * h, 2 * h};
            LatticePoint A{M.x + 2, M.y - 2};
            LatticePoint B{4 * n, 4 * n};
            LatticePoint C{2 * M.x - A.x, 2 * M.y - A.y};
            ExactInt j = 2 * (n + i);
            out.push_back(detail::make_member(A, B, C, RationalPoint{j, j}, ExactRational(1, 2)));
        }
        break;
    }
    case FamilyId::K4: {
        for (const PellSolution& p : pell_solutions({2, -1}, count)) {
            const ExactInt i = p.x, n = p.y;
            ExactInt h = 4 * n + 3 * i; // odd, so A below is integral
            LatticePoint A{(3 * h + 3) / 2, (3 * h - 3) / 2};
            LatticePoint B{12 * n, 12 * n};
            LatticePoint C{3 * h - A.x, 3 * h - A.y};
            ExactInt j = 2 * (3 * n + 2 * i);
            out.push_back(detail::make_member(A, B, C, RationalPoint{j, j}, ExactRational(8, 9)));
        }
        break;
    }
    case FamilyId::NestedTangential: {
        std::vector<PellSolution> sols = pell_solutions({3, 1}, count + 1);
        for (std::size_t k = 0; k + 1 < sols.size() && out.size() < count; ++k) {
            const ExactInt u0 = sols[k].x, v0 = sols[k].y;
            const ExactInt u1 = sols[k + 1].x, v1 = sols[k + 1].y;
            LatticePoint A{2 * u0 + 4, 6 * v0};
            LatticePoint B{8, 0};
            LatticePoint C{2 * u1 + 4, 6 * v1};
            out.push_back(detail::make_member(
                A, B, C, RationalPoint{A.x + 2 * v0, A.y + 2 * u0}, ExactRational(1, 3)));
        }
        break;
    }
    case FamilyId::Extan918: {
        std::vector<PellSolution> sols = pell_solutions({2, -1}, count + 1);
        for (std::size_t k = 1; k < sols.size() && out.size() < count; ++k) {
            const ExactInt u = sols[k].x, v = sols[k].y;
            ExactInt ra = 9 * u - 8 * v, rb = 3 * (u - v), rc = 11 * u - 12 * v;
            LatticePoint A{3 * (ra - 7) / 2, 3 * (ra + 7) / 2};
            LatticePoint B{6 * (rb - 2), 6 * (rb + 2)};
            LatticePoint C{3 * (rc - 7) / 2, 3 * (rc + 7) / 2};
            out.push_back(detail::make_member(A, B, C, std::nullopt, std::nullopt));
        }
        break;
    }
    case FamilyId::Extan4550: {
        LatticePoint za{5, 2}, zb{0, 1}, zd{1, 0};
        auto rec1 = [](const LatticePoint& z) { return LatticePoint{78 * z.x + 25 * z.y, 25 * z.x + 8 * z.y}; };
        auto rec2 = [](const LatticePoint& z) { return LatticePoint{68 * z.x + 35 * z.y, 35 * z.x + 18 * z.y}; };
        auto gsq = [](const LatticePoint& z) { return LatticePoint{z.x * z.x - z.y * z.y, 2 * z.x * z.y}; };
        for (std::size_t j = 1; j <= count; ++j) {
            LatticePoint a2 = gsq(za), b2 = gsq(zb), d2 = gsq(zd);
            // The coordinate swap rho applies once for each odd power.
            bool swap_ab = (j + 1) % 2 == 1;
            bool swap_d = j % 2 == 1;
            if (swap_ab) {
                a2 = detail::gaussian_swap(a2);
                b2 = detail::gaussian_swap(b2);
            }
            if (swap_d) d2 = detail::gaussian_swap(d2);
            LatticePoint A = a2;
            LatticePoint B{A.x + b2.x, A.y + b2.y};
            LatticePoint C{5 * d2.x, 5 * d2.y};
            out.push_back(detail::make_member(A, B, C, std::nullopt, std::nullopt));
            za = rec1(za);
            zb = rec1(zb);
            zd = rec2(zd);
        }
        break;
    }
    case FamilyId::Tau3c1: {
        for (std::size_t k = 1; k <= count; ++k) {
            ExactInt x = -ExactInt(k);
            DioSolutionGen sol{3, 6 * x - 1, 18 * x * x - 6 * x + 19, 1};
            ConstructedTangential ct = construct_tangential(GenCase::I, sol);
            out.push_back({ct.quad, ct.sides, std::nullopt, std::nullopt});
        }
        break;
    }
    case FamilyId::Tau3c2: {
        for (std::size_t k = 1; k <= count; ++k) {
            ExactInt x = -ExactInt(k) - 2;
            DioSolutionGen sol{3, 6 * x - 2, 9 * x * x - 6 * x + 11, 2};
            ConstructedTangential ct = construct_tangential(GenCase::I, sol);
            out.push_back({ct.quad, ct.sides, std::nullopt, std::nullopt});
        }
        break;
    }
    case FamilyId::Sigma9: {
        // k runs over the residues 0 and 6 mod 9, which are exactly the
        // values making u+v divisible by 9 for u = 4k+2, v = 2k^2+2k+43.
        ExactInt k = 0;
        int step = 6;
        for (std::size_t m = 1; m <= count; ++m) {
            DioSolutionGen sol{9, 4 * k + 2, 2 * k * k + 2 * k + 43, 1};
            ConstructedTangential ct = construct_tangential(GenCase::II, sol);
            out.push_back({ct.quad, ct.sides, std::nullopt, std::nullopt});
            k += step;
            step = 9 - step;
        }
        break;
    }
    }
    return out;
}

// Side 4-tuples of the extangential (Sigma,T) = (45,50) family, generated by
// the three-term recurrence X_{j+2} = 7398 X_{j+1} - X_j acting on each
// coordinate of the seed rows.
inline std::vector<std::array<ExactInt, 4>> extan4550_sides(std::size_t count) {
    std::vector<std::array<ExactInt, 4>> rows;
    std::array<ExactInt, 4> r1{29, 1, 25, 5};
    std::array<ExactInt, 4> r2{213481, 689, 184925, 29245};
    for (std::size_t j = 0; j < count; ++j) {
        if (j == 0) rows.push_back(r1);
        else if (j == 1) rows.push_back(r2);
        else {
            std::array<ExactInt, 4> next;
            for (int i = 0; i < 4; ++i) next[i] = 7398 * rows[j - 1][i] - rows[j - 2][i];
            rows.push_back(next);
        }
    }
    return rows;
}

// Finds every lattice quadrilateral (up to lattice symmetry, O at the
// origin) with the given side lengths, by assembling side vectors from the
// two-square representations of each squared length.
enum class RealizeConstraint { Any, Tangential, Extangential };

inline std::vector<LatticeQuad> realize_sides(const ExactInt& a, const ExactInt& b, const ExactInt& c,
                                              const ExactInt& d,
                                              RealizeConstraint constraint = RealizeConstraint::Any) {
    auto signed_vectors = [](const ExactInt& len) {
        std::vector<LatticePoint> vecs;
        for (const auto& [x, y] : two_square_reps(len * len)) {
            std::array<LatticePoint, 8> cands = {{{x, y}, {x, -y}, {-x, y}, {-x, -y},
                                                  {y, x}, {y, -x}, {-y, x}, {-y, -x}}};
            for (const auto& p : cands) {
                bool seen = false;
                for (const auto& q : vecs)
                    if (q == p) { seen = true; break; }
                if (!seen) vecs.push_back(p);
            }
        }
        return vecs;
    };
    std::vector<LatticePoint> va = signed_vectors(a), vb = signed_vectors(b), vd = signed_vectors(d);
    std::vector<LatticeQuad> found;
    std::vector<std::array<ExactInt, 8>> keys;
    const ExactInt c2 = c * c;
    for (const auto& A : va) {
        for (const auto& sb : vb) {
            LatticePoint B = A + sb;
            if (B == LatticePoint{0, 0}) continue;
            for (const auto& C : vd) {
                LatticePoint bc = C - B;
                if (bc.x * bc.x + bc.y * bc.y != c2) continue;
                auto q = LatticeQuad::make({0, 0}, A, B, C);
                if (!q) continue;
                auto s = side_lengths(*q);
                if (!s) continue;
                if (constraint != RealizeConstraint::Any) {
                    ShapeClass sc = classify(*q);
                    if (constraint == RealizeConstraint::Tangential && !sc.tangential) continue;
                    if (constraint == RealizeConstraint::Extangential && !sc.extangential) continue;
                }
                LatticeQuad canon = canonical_quad(*q);
                std::array<ExactInt, 8> key = detail::serialize_origin(canon);
                bool seen = false;
                for (const auto& k : keys)
                    if (k == key) { seen = true; break; }
                if (!seen) {
                    keys.push_back(key);
                    found.push_back(canon);
                }
            }
        }
    }
    // Deterministic order: sort by the canonical serialization.
    std::vector<std::size_t> idx(found.size());
    for (std::size_t i = 0; i < idx.size(); ++i) idx[i] = i;
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return keys[i] < keys[j]; });
    std::vector<LatticeQuad> out;
    out.reserve(found.size());
    for (std::size_t i : idx) out.push_back(found[i]);
    return out;
}

} // namespace leq
