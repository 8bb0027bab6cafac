#include <catch2/catch_amalgamated.hpp>

#include "leq/constructors.hpp"
#include "leq/profiles.hpp"

using namespace leq;

namespace {

DioSolutionGen sol(int x, long u, long v, long c) { return {x, ExactInt(u), ExactInt(v), ExactInt(c)}; }

} // namespace

TEST_CASE("generating equation and side conditions") {
    CHECK(gen_equation_holds(sol(2, 2, 6, 4)));
    CHECK(gen_equation_holds(sol(3, 2, 7, 4)));
    CHECK(gen_equation_holds(sol(5, 10, 15, 5)));
    CHECK(gen_equation_holds(sol(9, 6, 21, 3)));
    CHECK(gen_equation_holds(sol(9, -14, 23, 5)));
    CHECK_FALSE(gen_equation_holds(sol(9, 1, 23, 5)));

    CHECK(gen_side_conditions_hold(sol(2, 2, 6, 4)));
    CHECK_FALSE(gen_side_conditions_hold(sol(2, 1, 9, 3))); // c odd for x = 2
    CHECK_FALSE(gen_side_conditions_hold(sol(3, 2, 7, 6))); // 3 | c for x = 3
}

TEST_CASE("derived sides of the classification survivors") {
    // tau = 2: (c,u,v) = (4,2,6), (2,1,9), (8,4,6).
    CHECK(*gen_derived_sides(GenCase::I, sol(2, 2, 6, 4)) == SideLengths{4, 4, 4, 4});
    CHECK(*gen_derived_sides(GenCase::I, sol(2, 1, 9, 2)) == SideLengths{8, 5, 2, 5});
    CHECK(*gen_derived_sides(GenCase::I, sol(2, 4, 6, 8)) == SideLengths{2, 5, 8, 5});
    // tau = 3: (c,v,u) = (4,7,2).
    CHECK(*gen_derived_sides(GenCase::I, sol(3, 2, 7, 4)) == SideLengths{5, 3, 4, 6});
    // tau = 5: (5,15,10).
    CHECK(*gen_derived_sides(GenCase::I, sol(5, 10, 15, 5)) == SideLengths{5, 5, 5, 5});
    // tau = 9: (3,21,6) and (5,23,-14).
    CHECK(*gen_derived_sides(GenCase::I, sol(9, 6, 21, 3)) == SideLengths{15, 3, 3, 15});
    CHECK(*gen_derived_sides(GenCase::I, sol(9, -14, 23, 5)) == SideLengths{37, 1, 5, 41});
}

TEST_CASE("constructor realizes the survivors with declared invariants") {
    struct Row {
        DioSolutionGen s;
        SideLengths sides;
        bool exceptional;
    };
    const Row rows[] = {
        {sol(2, 2, 6, 4), {4, 4, 4, 4}, false},
        {sol(2, 1, 9, 2), {8, 5, 2, 5}, false},
        {sol(3, 2, 7, 4), {5, 3, 4, 6}, false},
        {sol(5, 10, 15, 5), {5, 5, 5, 5}, true},
        {sol(9, 6, 21, 3), {15, 3, 3, 15}, true},
        {sol(9, -14, 23, 5), {37, 1, 5, 41}, false},
    };
    for (const Row& r : rows) {
        INFO("x=" << r.s.x << " u=" << r.s.u << " v=" << r.s.v << " c=" << r.s.c);
        ConstructedTangential ct = construct_tangential(GenCase::I, r.s);
        CHECK(ct.sides == r.sides);
        CHECK(ct.exceptional == r.exceptional);
        CHECK(ct.sigma == ExactRational(r.s.x, r.s.x - 1));
        CHECK(ct.tau == ExactRational(r.s.x));
        ShapeClass sc = classify(ct.quad);
        CHECK(sc.tangential);
        CHECK(sc.equable);
    }
}

TEST_CASE("exceptional constructions that cannot be reflected away") {
    ConstructedTangential a = construct_tangential(GenCase::I, sol(5, -50, 75, 10));
    CHECK(a.sides == SideLengths{125, 5, 10, 130});
    CHECK(a.exceptional);
    TangentialProfile pa = tangential_profile(a.quad);
    CHECK((pa.tau == 5 || pa.sigma == 5));

    ConstructedTangential b = construct_tangential(GenCase::I, sol(9, -114, 141, 15));
    CHECK(b.sides == SideLengths{255, 3, 15, 267});
    CHECK(b.exceptional);
    TangentialProfile pb = tangential_profile(b.quad);
    CHECK((pb.tau == 9 || pb.sigma == 9));
}

TEST_CASE("case II constructions") {
    // sigma = 9 family seed: u = 2, v = 43, c = 1.
    ConstructedTangential ct = construct_tangential(GenCase::II, sol(9, 2, 43, 1));
    CHECK(ct.sides == SideLengths{41, 37, 1, 5});
    CHECK(ct.sigma == 9);
    CHECK(ct.tau == ExactRational(9, 8));
    TangentialProfile p = tangential_profile(ct.quad);
    CHECK(p.sigma * p.tau == p.sigma + p.tau);
}

TEST_CASE("kite families carry closed-form incenters") {
    struct Golden {
        FamilyId id;
        ExactRational lambda;
        std::array<LatticePoint, 3> incenters;
    };
    const Golden goldens[] = {
        {FamilyId::K1, {1, 5}, {{{4, 2}, {10, 5}, {26, 13}}}},
        {FamilyId::K2, {4, 5}, {{{68, 34}, {1220, 610}, {21892, 10946}}}},
        {FamilyId::K3, {1, 2}, {{{10, 10}, {58, 58}, {338, 338}}}},
        {FamilyId::K4, {8, 9}, {{{10, 10}, {58, 58}, {338, 338}}}},
    };
    for (const Golden& g : goldens) {
        auto fam = generate_family(g.id, 3);
        REQUIRE(fam.size() == 3);
        for (std::size_t k = 0; k < 3; ++k) {
            INFO("family index " << k);
            const FamilyMember& m = fam[k];
            REQUIRE(m.incenter.has_value());
            REQUIRE(m.lambda.has_value());
            CHECK(*m.lambda == g.lambda);
            CHECK(m.incenter->x == g.incenters[k].x);
            CHECK(m.incenter->y == g.incenters[k].y);
            // The closed forms agree with the profile computed from scratch.
            TangentialProfile p = tangential_profile(m.quad);
            CHECK(p.kite);
            CHECK(p.incenter == *m.incenter);
            REQUIRE(p.lambda.has_value());
            CHECK(*p.lambda == *m.lambda);
        }
    }
}

TEST_CASE("nested tangential family matches its table") {
    auto fam = generate_family(FamilyId::NestedTangential, 4);
    REQUIRE(fam.size() == 4);
    const std::array<SideLengths, 4> sides = {{
        {10, 6, 26, 30},
        {30, 26, 102, 106},
        {106, 102, 386, 390},
        {390, 386, 1446, 1450},
    }};
    const std::array<std::array<LatticePoint, 3>, 4> pts = {{
        {{{8, 6}, {8, 0}, {18, 24}}},
        {{{18, 24}, {8, 0}, {56, 90}}},
        {{{56, 90}, {8, 0}, {198, 336}}},
        {{{198, 336}, {8, 0}, {728, 1254}}},
    }};
    for (std::size_t k = 0; k < 4; ++k) {
        INFO("member " << k + 1);
        CHECK(fam[k].sides == sides[k]);
        CHECK(fam[k].quad.A == pts[k][0]);
        CHECK(fam[k].quad.B == pts[k][1]);
        CHECK(fam[k].quad.C == pts[k][2]);
        REQUIRE(fam[k].lambda.has_value());
        CHECK(*fam[k].lambda == ExactRational(1, 3));
        TangentialProfile p = tangential_profile(fam[k].quad);
        CHECK(p.incenter == *fam[k].incenter);
    }
}

TEST_CASE("extangential (9,18) family matches its table") {
    auto fam = generate_family(FamilyId::Extan918, 4);
    REQUIRE(fam.size() == 4);
    const std::array<SideLengths, 4> sides = {{
        {51, 3, 15, 39},
        {291, 15, 87, 219},
        {1695, 87, 507, 1275},
        {9879, 507, 2955, 7431},
    }};
    for (std::size_t k = 0; k < 4; ++k) {
        INFO("member " << k + 1);
        CHECK(fam[k].sides == sides[k]);
        ExtangentialProfile p = extangential_profile(fam[k].quad);
        CHECK(p.Sigma == 9);
        CHECK(p.T == 18);
    }
}

TEST_CASE("extangential (45,50) family matches its tables") {
    auto fam = generate_family(FamilyId::Extan4550, 3);
    REQUIRE(fam.size() == 3);
    const std::array<std::array<LatticePoint, 3>, 3> pts = {{
        {{{21, 20}, {20, 20}, {0, 5}}},
        {{{124080, 173719}, {124480, 174280}, {16995, 23800}}},
        {{{ExactInt("1285155641"), ExactInt("917968320")},
          {ExactInt("1289303420"), ExactInt("920931020")},
          {ExactInt("176054900"), ExactInt("125753505")}}},
    }};
    for (std::size_t k = 0; k < 3; ++k) {
        INFO("member " << k + 1);
        CHECK(fam[k].quad.A == pts[k][0]);
        CHECK(fam[k].quad.B == pts[k][1]);
        CHECK(fam[k].quad.C == pts[k][2]);
        ExtangentialProfile p = extangential_profile(fam[k].quad);
        CHECK(p.Sigma == 45);
        CHECK(p.T == 50);
    }

    auto rows = extan4550_sides(3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0] == std::array<ExactInt, 4>{29, 1, 25, 5});
    CHECK(rows[1] == std::array<ExactInt, 4>{213481, 689, 184925, 29245});
    CHECK(rows[2] == std::array<ExactInt, 4>{ExactInt("1579332409"), ExactInt("5097221"),
                                             ExactInt("1368075125"), ExactInt("216354505")});
    // The side recurrence agrees with the vertex construction.
    for (std::size_t k = 0; k < 3; ++k) {
        CHECK(fam[k].sides == SideLengths{rows[k][0], rows[k][1], rows[k][2], rows[k][3]});
    }
}

TEST_CASE("parametric side families") {
    auto t1 = generate_family(FamilyId::Tau3c1, 2);
    REQUIRE(t1.size() == 2);
    CHECK(t1[0].sides == SideLengths{50, 12, 1, 39});
    CHECK(t1[1].sides == SideLengths{116, 30, 1, 87});

    auto t2 = generate_family(FamilyId::Tau3c2, 2);
    REQUIRE(t2.size() == 2);
    for (const auto& m : t2) {
        CHECK(m.sides.c == 2);
        TangentialProfile p = tangential_profile(m.quad);
        CHECK((p.tau == 3 || p.sigma == 3));
    }

    auto s9 = generate_family(FamilyId::Sigma9, 2);
    REQUIRE(s9.size() == 2);
    CHECK(s9[0].sides == SideLengths{41, 37, 1, 5});
    CHECK(s9[1].sides == SideLengths{101, 85, 1, 17});
    for (const auto& m : s9) {
        TangentialProfile p = tangential_profile(m.quad);
        CHECK((p.sigma == 9 || p.tau == 9));
    }
}

TEST_CASE("realize_sides recovers quads from side lengths") {
    auto found = realize_sides(13, 2, 5, 10, RealizeConstraint::Extangential);
    REQUIRE(found.size() >= 1);
    bool witness = false;
    for (const auto& q : found) {
        auto s = side_lengths(canonical_quad(q));
        REQUIRE(s.has_value());
        ExtangentialProfile p = extangential_profile(q);
        CHECK(p.Sigma == 18);
        CHECK(p.T == 50);
        LatticeQuad c = canonical_quad(q);
        if (c.A == LatticePoint{12, 5} && c.B == LatticePoint{10, 5} && c.C == LatticePoint{6, 8})
            witness = true;
    }
    CHECK(witness);

    // The unit answer is not tangential.
    CHECK(realize_sides(13, 2, 5, 10, RealizeConstraint::Tangential).empty());
}
