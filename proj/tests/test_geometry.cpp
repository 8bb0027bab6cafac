#include <catch2/catch_amalgamated.hpp>

#include "leq/geometry.hpp"

using namespace leq;

namespace {

LatticeQuad quad(long ox, long oy, long ax, long ay, long bx, long by, long cx, long cy) {
    auto q = LatticeQuad::make({ox, oy}, {ax, ay}, {bx, by}, {cx, cy});
    REQUIRE(q.has_value());
    return *q;
}

} // namespace

TEST_CASE("point primitives") {
    LatticePoint u{3, 4}, v{-1, 2};
    CHECK(cross(u, v) == 10);
    CHECK(dot(u, v) == 5);
    CHECK(norm2(u) == 25);
    CHECK(swap_xy(u) == LatticePoint{4, 3});
}

TEST_CASE("quad validity") {
    CHECK(LatticeQuad::make({0, 0}, {4, 0}, {4, 4}, {0, 4}).has_value());
    // Concave with the reflex angle at B.
    CHECK(LatticeQuad::make({0, 0}, {12, 5}, {10, 5}, {6, 8}).has_value());

    // Repeated vertex.
    CHECK_FALSE(LatticeQuad::make({0, 0}, {4, 0}, {4, 0}, {0, 4}).has_value());
    // Collinear triple.
    CHECK_FALSE(LatticeQuad::make({0, 0}, {2, 0}, {4, 0}, {0, 4}).has_value());
    // Self-intersecting bowtie.
    CHECK_FALSE(LatticeQuad::make({0, 0}, {4, 0}, {0, 4}, {4, 4}).has_value());
    // Clockwise traversal.
    CHECK_FALSE(LatticeQuad::make({0, 0}, {0, 4}, {4, 4}, {4, 0}).has_value());
}

TEST_CASE("signed areas and side lengths") {
    LatticeQuad q = quad(0, 0, 12, 5, 10, 5, 6, 8);
    SignedAreas ar = q.signed_areas();
    CHECK(ar.twoK() == 60);
    CHECK(ar.twoKB < 0); // reflex at B

    auto s = side_lengths(q);
    REQUIRE(s.has_value());
    CHECK(s->a == 13);
    CHECK(s->b == 2);
    CHECK(s->c == 5);
    CHECK(s->d == 10);
    CHECK(s->perimeter() == 30);

    // Non-integral side (1,1) direction of odd squared length.
    auto t = side_lengths(quad(0, 0, 1, 1, 1, 3, -2, 2));
    CHECK_FALSE(t.has_value());
}

TEST_CASE("classification of known quads") {
    SECTION("equable square") {
        ShapeClass sc = classify(quad(0, 0, 4, 0, 4, 4, 0, 4));
        CHECK(sc.tangential);
        CHECK(sc.kite);
        CHECK(sc.equable);
        CHECK(sc.convex);
        CHECK_FALSE(sc.reflex_at_B);
    }
    SECTION("concave extangential non-kite") {
        ShapeClass sc = classify(quad(0, 0, 12, 5, 10, 5, 6, 8));
        CHECK(sc.extangential);
        CHECK_FALSE(sc.tangential);
        CHECK_FALSE(sc.kite);
        CHECK(sc.equable);
        CHECK_FALSE(sc.convex);
        CHECK(sc.reflex_at_B);
    }
    SECTION("concave tangential") {
        ShapeClass sc = classify(quad(0, 0, 8, 6, 8, 0, 18, 24));
        CHECK(sc.tangential);
        CHECK_FALSE(sc.extangential);
        CHECK(sc.equable);
        CHECK_FALSE(sc.convex);
    }
    SECTION("non-equable square") {
        ShapeClass sc = classify(quad(0, 0, 3, 0, 3, 3, 0, 3));
        CHECK(sc.tangential);
        CHECK_FALSE(sc.equable);
    }
}

TEST_CASE("circumcircle position of B") {
    // Unit-ish square: B on the circumcircle of O, A, C.
    CHECK(b_in_circumcircle(quad(0, 0, 4, 0, 4, 4, 0, 4)).on_circle);

    CircumcirclePosition pos = b_in_circumcircle(quad(0, 0, 12, 5, 10, 5, 6, 8));
    CHECK_FALSE(pos.on_circle);
}

TEST_CASE("normalization relocates the reflex vertex to B") {
    // Start from the concave witness and relabel so the reflex vertex is C.
    LatticeQuad shifted = quad(0, 0, 6, 3, 18, 24, 10, 18);
    if (classify(shifted).needs_normalization) {
        LatticeQuad n = normalize(shifted);
        ShapeClass sc = classify(n);
        CHECK_FALSE(sc.needs_normalization);
    }
}

TEST_CASE("canonical form is invariant under lattice symmetries") {
    LatticeQuad q = quad(0, 0, 12, 5, 10, 5, 6, 8);
    auto key = canonical_form(q);

    // Translation.
    CHECK(canonical_form(quad(3, -7, 15, -2, 13, -2, 9, 1)) == key);
    // Rotation by 90 degrees: (x, y) -> (-y, x).
    CHECK(canonical_form(quad(0, 0, -5, 12, -5, 10, -8, 6)) == key);
    // Reflection in y = x reverses orientation, so the traversal flips.
    CHECK(canonical_form(quad(0, 0, 8, 6, 5, 10, 5, 12)) == key);
    // Cyclic relabeling starting at A.
    CHECK(canonical_form(quad(12, 5, 10, 5, 6, 8, 0, 0)) == key);

    LatticeQuad canon = canonical_quad(q);
    CHECK(canon.O == LatticePoint{0, 0});
    CHECK(canonical_form(canon) == key);
    // A different quadrilateral gets a different key.
    CHECK(canonical_form(quad(0, 0, 4, 0, 4, 4, 0, 4)) != key);
}

TEST_CASE("canonical vertex witness for the concave extangential quad") {
    LatticeQuad canon = canonical_quad(quad(0, 0, 12, 5, 10, 5, 6, 8));
    CHECK(canon.O == LatticePoint{0, 0});
    CHECK(canon.A == LatticePoint{12, 5});
    CHECK(canon.B == LatticePoint{10, 5});
    CHECK(canon.C == LatticePoint{6, 8});
}
