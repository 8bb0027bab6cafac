#pragma once

// Exact lattice-quadrilateral representation and predicates: sides, doubled
// signed areas, tangential/extangential/kite/convexity classification,
// circumcircle position of B, and labeling normalization.

#include "numkernel.hpp"

#include <array>
#include <optional>
#include <stdexcept>
#include <vector>

namespace leq {

struct LatticePoint {
    ExactInt x, y;
    bool operator==(const LatticePoint& o) const { return x == o.x && y == o.y; }
    bool operator!=(const LatticePoint& o) const { return !(*this == o); }
    LatticePoint operator+(const LatticePoint& o) const { return {x + o.x, y + o.y}; }
    LatticePoint operator-(const LatticePoint& o) const { return {x - o.x, y - o.y}; }
};

inline ExactInt cross(const LatticePoint& u, const LatticePoint& v) { return u.x * v.y - u.y * v.x; }
inline ExactInt dot(const LatticePoint& u, const LatticePoint& v) { return u.x * v.x + u.y * v.y; }
inline ExactInt norm2(const LatticePoint& u) { return u.x * u.x + u.y * u.y; }
inline LatticePoint swap_xy(const LatticePoint& p) { return {p.y, p.x}; }

// Doubled signed areas of the corner triangles COA, OAB, ABC, BCO.
struct SignedAreas {
    ExactInt twoKO, twoKA, twoKB, twoKC;
    ExactInt twoK() const { return twoKA + twoKC; }
};

namespace detail {

inline int sgn(const ExactInt& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Proper or improper intersection of closed segments [p1,p2] and [p3,p4]
// that share no endpoint.
inline bool segments_intersect(const LatticePoint& p1, const LatticePoint& p2,
                               const LatticePoint& p3, const LatticePoint& p4) {
    auto orient = [](const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
        return sgn(cross(b - a, c - a));
    };
    int o1 = orient(p1, p2, p3), o2 = orient(p1, p2, p4);
    int o3 = orient(p3, p4, p1), o4 = orient(p3, p4, p2);
    if (o1 != o2 && o3 != o4) return true;
    auto on_segment = [](const LatticePoint& a, const LatticePoint& b, const LatticePoint& p) {
        if (cross(b - a, p - a) != 0) return false;
        return dot(p - a, p - b) <= 0;
    };
    return (o1 == 0 && on_segment(p1, p2, p3)) || (o2 == 0 && on_segment(p1, p2, p4)) ||
           (o3 == 0 && on_segment(p3, p4, p1)) || (o4 == 0 && on_segment(p3, p4, p2));
}

} // namespace detail

// A simple, positively oriented lattice quadrilateral O -> A -> B -> C.
// Validity: four distinct vertices, no three collinear, non-self-intersecting
// boundary, counterclockwise traversal. A reflex angle may sit at any single
// vertex; normalization relocates it to B.
class LatticeQuad {
public:
    LatticePoint O, A, B, C;

    static std::optional<LatticeQuad> make(const LatticePoint& O, const LatticePoint& A,
                                           const LatticePoint& B, const LatticePoint& C) {
        LatticeQuad q{O, A, B, C};
        if (!q.valid()) return std::nullopt;
        return q;
    }

    SignedAreas signed_areas() const {
        return {
            cross(O - C, A - C), // 2 K(COA)
            cross(A - O, B - O), // 2 K(OAB)
            cross(B - A, C - A), // 2 K(ABC)
            cross(C - B, O - B), // 2 K(BCO)
        };
    }

    std::array<LatticePoint, 4> points() const { return {O, A, B, C}; }

private:
    bool valid() const {
        const std::array<LatticePoint, 4> pts = points();
        for (int i = 0; i < 4; ++i)
            for (int j = i + 1; j < 4; ++j)
                if (pts[i] == pts[j]) return false;
        SignedAreas ar = signed_areas();
        if (ar.twoKO == 0 || ar.twoKA == 0 || ar.twoKB == 0 || ar.twoKC == 0) return false;
        if (ar.twoK() <= 0) return false; // clockwise or degenerate
        int negatives = (ar.twoKO < 0) + (ar.twoKA < 0) + (ar.twoKB < 0) + (ar.twoKC < 0);
        if (negatives > 1) return false;
        // Opposite sides must not meet.
        if (detail::segments_intersect(O, A, B, C)) return false;
        if (detail::segments_intersect(A, B, C, O)) return false;
        return true;
    }
};

struct SideLengths {
    ExactInt a, b, c, d; // |OA|, |AB|, |BC|, |CO|
    ExactInt perimeter() const { return a + b + c + d; }
    bool operator==(const SideLengths& o) const {
        return a == o.a && b == o.b && c == o.c && d == o.d;
    }
};

// Engaged iff all four squared side lengths are perfect squares.
inline std::optional<SideLengths> side_lengths(const LatticeQuad& q) {
    auto a = isqrt(norm2(q.A - q.O));
    auto b = isqrt(norm2(q.B - q.A));
    auto c = isqrt(norm2(q.C - q.B));
    auto d = isqrt(norm2(q.O - q.C));
    if (!a || !b || !c || !d) return std::nullopt;
    return SideLengths{*a, *b, *c, *d};
}

inline SignedAreas signed_areas(const LatticeQuad& q) { return q.signed_areas(); }

inline bool has_parallel_sides(const LatticeQuad& q) {
    return cross(q.A - q.O, q.C - q.B) == 0 || cross(q.B - q.A, q.O - q.C) == 0;
}

enum class QuadClass {
    ConvexTangential,
    ConcaveTangential,
    ConvexExtangential,
    ConcaveExtangential,
    Both,
    Neither,
};

struct ShapeClass {
    QuadClass cls = QuadClass::Neither;
    bool tangential = false;
    bool extangential = false;
    bool kite = false;
    bool equable = false;
    bool convex = false;
    bool reflex_at_B = false;
    bool needs_normalization = false; // reflex angle at a vertex other than B
    std::optional<SideLengths> sides;
    SignedAreas areas{};
    ExactInt p2, q2; // squared diagonals |OB|^2, |AC|^2
};

inline ShapeClass classify(const LatticeQuad& q) {
    ShapeClass out;
    out.areas = q.signed_areas();
    out.p2 = norm2(q.B - q.O);
    out.q2 = norm2(q.C - q.A);
    out.convex = out.areas.twoKO > 0 && out.areas.twoKA > 0 && out.areas.twoKB > 0 && out.areas.twoKC > 0;
    out.reflex_at_B = out.areas.twoKB < 0;
    out.needs_normalization = !out.convex && !out.reflex_at_B;
    out.sides = side_lengths(q);
    if (out.sides) {
        const auto& s = *out.sides;
        out.tangential = s.a + s.c == s.b + s.d;
        ExactInt lhs = s.a > s.c ? s.a - s.c : s.c - s.a;
        ExactInt rhs = s.b > s.d ? s.b - s.d : s.d - s.b;
        out.extangential = lhs == rhs && !has_parallel_sides(q);
        out.kite = (s.a == s.b && s.c == s.d) || (s.b == s.c && s.d == s.a);
        out.equable = out.areas.twoK() == 2 * s.perimeter();
    }
    if (out.tangential && out.extangential) out.cls = QuadClass::Both;
    else if (out.tangential)
        out.cls = out.convex ? QuadClass::ConvexTangential : QuadClass::ConcaveTangential;
    else if (out.extangential)
        out.cls = out.convex ? QuadClass::ConvexExtangential : QuadClass::ConcaveExtangential;
    else out.cls = QuadClass::Neither;
    return out;
}

struct CircumcirclePosition {
    bool inside = false;   // B strictly inside the circumcircle of OAC
    bool on_circle = false;
};

// Exact position of B relative to the circumcircle of triangle OAC, evaluated
// as p^2 * 2K_O vs |CO|^2 * 2K_A + |OA|^2 * 2K_C.
inline CircumcirclePosition b_in_circumcircle(const LatticeQuad& q) {
    SignedAreas ar = q.signed_areas();
    ExactInt p2 = norm2(q.B - q.O);
    ExactInt a2 = norm2(q.A - q.O);
    ExactInt d2 = norm2(q.O - q.C);
    ExactInt lhs = p2 * ar.twoKO;
    ExactInt rhs = d2 * ar.twoKA + a2 * ar.twoKC;
    CircumcirclePosition out;
    out.inside = lhs < rhs;
    out.on_circle = lhs == rhs;
    if (out.on_circle) out.inside = false;
    return out;
}

// A candidate relabeling of a quadrilateral: the four points in their new
// roles, plus whether the plane was reflected in y = x (needed to keep a
// reversed traversal counterclockwise).
struct Labeling {
    LatticeQuad quad;
    bool reflected = false;
};

namespace detail {

inline std::vector<Labeling> admissible_labelings(const std::array<LatticePoint, 4>& pts) {
    std::vector<Labeling> out;
    auto try_add = [&out](const std::array<LatticePoint, 4>& p, bool refl) {
        for (int k = 0; k < 4; ++k) {
            auto q = LatticeQuad::make(p[k], p[(k + 1) % 4], p[(k + 2) % 4], p[(k + 3) % 4]);
            if (!q) continue;
            SignedAreas ar = q->signed_areas();
            if (ar.twoKO > 0 && ar.twoKA > 0 && ar.twoKC > 0) out.push_back({*q, refl});
        }
    };
    try_add(pts, false);
    std::array<LatticePoint, 4> rev = {swap_xy(pts[0]), swap_xy(pts[3]), swap_xy(pts[2]), swap_xy(pts[1])};
    try_add(rev, true);
    return out;
}

inline bool sides_lex_less(const SideLengths& x, const SideLengths& y) {
    if (x.a != y.a) return x.a < y.a;
    if (x.b != y.b) return x.b < y.b;
    if (x.c != y.c) return x.c < y.c;
    return x.d < y.d;
}

inline std::array<ExactInt, 8> serialize_origin(const LatticeQuad& q) {
    LatticePoint o = q.O;
    return {0, 0, q.A.x - o.x, q.A.y - o.y, q.B.x - o.x, q.B.y - o.y, q.C.x - o.x, q.C.y - o.y};
}

// Recognizes the sigma = tau = 2 tangential profile from sides and areas
// alone, via the exact area linkages K_O = a+c+2(a-b), K_A = a+c+2(a-d).
inline bool is_two_two(const LatticeQuad& q, const SideLengths& s) {
    SignedAreas ar = q.signed_areas();
    return ar.twoKO == 2 * (s.a + s.c) + 4 * (s.a - s.b) &&
           ar.twoKA == 2 * (s.a + s.c) + 4 * (s.a - s.d);
}

} // namespace detail

// Relabels (and if necessary reflects in y = x) a quadrilateral so that the
// traversal is counterclockwise with any reflex angle at B; an extangential
// quad gets its excircle outside B (a+b = c+d with a > c) and a >= d; a
// tangential quad with sigma = tau = 2 gets a, c even and b <= d. Remaining
// ties break toward the lexicographically greatest (a,b,c,d), then the least
// vertex serialization.
inline std::optional<Labeling> normalize_labeling(const std::array<LatticePoint, 4>& pts) {
    std::vector<Labeling> cands = detail::admissible_labelings(pts);
    if (cands.empty()) return std::nullopt;

    auto restrict_to = [&cands](auto&& pred) {
        std::vector<Labeling> kept;
        for (const auto& c : cands)
            if (pred(c)) kept.push_back(c);
        if (!kept.empty()) cands = std::move(kept);
    };

    bool any_sides = false;
    for (const auto& c : cands)
        if (side_lengths(c.quad)) { any_sides = true; break; }

    if (any_sides) {
        restrict_to([](const Labeling& c) { return side_lengths(c.quad).has_value(); });
        bool any_extan = false;
        for (const auto& c : cands) {
            auto s = *side_lengths(c.quad);
            if (s.a + s.b == s.c + s.d && s.a > s.c && !has_parallel_sides(c.quad)) { any_extan = true; break; }
        }
        if (any_extan) {
            restrict_to([](const Labeling& c) {
                auto s = *side_lengths(c.quad);
                return s.a + s.b == s.c + s.d && s.a > s.c && !has_parallel_sides(c.quad);
            });
            restrict_to([](const Labeling& c) {
                auto s = *side_lengths(c.quad);
                return s.a >= s.d;
            });
        } else {
            bool any_two_two = false;
            for (const auto& c : cands) {
                auto s = *side_lengths(c.quad);
                if (s.a + s.c == s.b + s.d && detail::is_two_two(c.quad, s)) { any_two_two = true; break; }
            }
            if (any_two_two) {
                restrict_to([](const Labeling& c) {
                    auto s = *side_lengths(c.quad);
                    return s.a % 2 == 0 && s.c % 2 == 0;
                });
                restrict_to([](const Labeling& c) {
                    auto s = *side_lengths(c.quad);
                    return s.b <= s.d;
                });
            }
        }
    }

    const Labeling* best = &cands.front();
    for (const auto& c : cands) {
        if (&c == best) continue;
        if (any_sides) {
            auto sb = side_lengths(best->quad), sc = side_lengths(c.quad);
            if (sb && sc && *sb != *sc) {
                if (detail::sides_lex_less(*sb, *sc)) best = &c;
                continue;
            }
        }
        if (detail::serialize_origin(c.quad) < detail::serialize_origin(best->quad)) best = &c;
    }
    return *best;
}

inline std::optional<Labeling> normalize_labeling(const LatticeQuad& q) {
    return normalize_labeling(q.points());
}

inline LatticeQuad normalize(const LatticeQuad& q) {
    auto n = normalize_labeling(q);
    if (!n) throw std::runtime_error("normalize: no admissible labeling");
    return n->quad;
}

// Canonical representative of a quadrilateral under lattice symmetries:
// translations, the four rotations and four reflections of the square point
// group, and relabeling. Among all images that traverse counterclockwise
// with any reflex angle at B, the lexicographically greatest origin-based
// serialization wins, making dedup deterministic.
inline LatticeQuad canonical_quad(const LatticeQuad& q) {
    using Xform = LatticePoint (*)(const LatticePoint&);
    static constexpr std::array<std::pair<Xform, bool>, 8> xforms = {{
        {[](const LatticePoint& p) { return LatticePoint{p.x, p.y}; }, false},
        {[](const LatticePoint& p) { return LatticePoint{-p.y, p.x}; }, false},
        {[](const LatticePoint& p) { return LatticePoint{-p.x, -p.y}; }, false},
        {[](const LatticePoint& p) { return LatticePoint{p.y, -p.x}; }, false},
        {[](const LatticePoint& p) { return LatticePoint{p.y, p.x}; }, true},
        {[](const LatticePoint& p) { return LatticePoint{p.x, -p.y}; }, true},
        {[](const LatticePoint& p) { return LatticePoint{-p.x, p.y}; }, true},
        {[](const LatticePoint& p) { return LatticePoint{-p.y, -p.x}; }, true},
    }};
    std::optional<LatticeQuad> best;
    std::array<ExactInt, 8> best_key{};
    std::array<LatticePoint, 4> pts = q.points();
    for (const auto& [f, reverses] : xforms) {
        std::array<LatticePoint, 4> img;
        if (reverses) {
            img = {f(pts[0]), f(pts[3]), f(pts[2]), f(pts[1])};
        } else {
            img = {f(pts[0]), f(pts[1]), f(pts[2]), f(pts[3])};
        }
        for (int k = 0; k < 4; ++k) {
            auto cand = LatticeQuad::make(img[k], img[(k + 1) % 4], img[(k + 2) % 4], img[(k + 3) % 4]);
            if (!cand) continue;
            SignedAreas ar = cand->signed_areas();
            if (!(ar.twoKO > 0 && ar.twoKA > 0 && ar.twoKC > 0)) continue;
            std::array<ExactInt, 8> key = detail::serialize_origin(*cand);
            if (!best || key > best_key) {
                LatticePoint o = cand->O;
                best = *LatticeQuad::make({0, 0}, cand->A - o, cand->B - o, cand->C - o);
                best_key = key;
            }
        }
    }
    if (!best) throw std::runtime_error("canonical_quad: no admissible labeling");
    return *best;
}

inline std::array<ExactInt, 8> canonical_form(const LatticeQuad& q) {
    return detail::serialize_origin(canonical_quad(q));
}

} // namespace leq
