#include <catch2/catch_amalgamated.hpp>

#include "leq/numkernel.hpp"

using namespace leq;

TEST_CASE("integer square roots") {
    CHECK(isqrt_floor(ExactInt(0)) == 0);
    CHECK(isqrt_floor(ExactInt(8)) == 2);
    CHECK(isqrt_floor(ExactInt(9)) == 3);
    CHECK(isqrt_floor(ExactInt("152399025")) == 12345);
    CHECK_THROWS_AS(isqrt_floor(ExactInt(-1)), std::invalid_argument);

    CHECK(isqrt(ExactInt(144)) == ExactInt(12));
    CHECK_FALSE(isqrt(ExactInt(145)).has_value());
    CHECK(is_perfect_square(ExactInt("15241578750190521"))); // 123456789^2
    CHECK_FALSE(is_perfect_square(ExactInt(-4)));

    ExactInt big("123456789123456789123456789");
    ExactInt r = isqrt_floor(big);
    CHECK(r * r <= big);
    CHECK((r + 1) * (r + 1) > big);
}

TEST_CASE("make_rational normalizes the sign of the denominator") {
    CHECK(make_rational(ExactInt(-12), ExactInt(-8)) == ExactRational(3, 2));
    CHECK(make_rational(ExactInt(12), ExactInt(-8)) == ExactRational(-3, 2));
    CHECK(make_rational(ExactInt(0), ExactInt(-5)) == 0);
    CHECK_THROWS_AS(make_rational(ExactInt(1), ExactInt(0)), std::invalid_argument);
}

TEST_CASE("probable primality") {
    CHECK(is_probable_prime(ExactInt(2)));
    CHECK(is_probable_prime(ExactInt(41)));
    CHECK_FALSE(is_probable_prime(ExactInt(1)));
    CHECK_FALSE(is_probable_prime(ExactInt(561))); // Carmichael
    CHECK(is_probable_prime(ExactInt("63018038201")));
    CHECK(is_probable_prime(ExactInt("110095018941508669324502008759")));
    CHECK_FALSE(is_probable_prime(ExactInt("63018038201") * ExactInt("63018038201")));
}

TEST_CASE("bounded factorization") {
    // 2^5 * 3^2 * 7
    Factorization f = factorize(ExactInt(2016), 100);
    REQUIRE(f.complete());
    REQUIRE(f.factors.size() == 3);
    CHECK(f.factors[0] == std::pair<ExactInt, unsigned>(2, 5));
    CHECK(f.factors[1] == std::pair<ExactInt, unsigned>(3, 2));
    CHECK(f.factors[2] == std::pair<ExactInt, unsigned>(7, 1));

    // A prime cofactor beyond the trial bound is still certified.
    ExactInt p("63018038201");
    Factorization g = factorize(41 * p, 1000);
    REQUIRE(g.complete());
    REQUIRE(g.factors.size() == 2);
    CHECK(g.factors[0].first == 41);
    CHECK(g.factors[1].first == p);

    // Two large primes beyond the bound leave an incomplete cofactor.
    ExactInt q("104729");
    Factorization h = factorize(q * q + 2, 10); // some large-ish composite
    if (!h.complete()) CHECK(h.cofactor > 1);
}

TEST_CASE("squarefree decomposition and lattice preservers") {
    SquarefreeDecomposition d = squarefree_decompose(ExactInt(720), 1000);
    CHECK(d.f == 5);
    CHECK(d.s == 12);
    CHECK(d.f * d.s * d.s == 720);

    // A scaling factor is lattice-preserving when no prime divisor is
    // 1 mod 4, so its Gaussian divisors are forced to the trivial ones.
    CHECK(is_lattice_preserver(ExactInt(1), 1000));
    CHECK(is_lattice_preserver(ExactInt(2), 1000));
    CHECK(is_lattice_preserver(ExactInt(3), 1000));
    CHECK(is_lattice_preserver(ExactInt(49), 1000));
    CHECK_FALSE(is_lattice_preserver(ExactInt(5), 1000));
    CHECK_FALSE(is_lattice_preserver(ExactInt(25), 1000));
    CHECK_FALSE(is_lattice_preserver(ExactInt(65), 1000));
}

TEST_CASE("two-square representations") {
    auto reps = two_square_reps(ExactInt(25));
    // x >= y >= 0 representatives of x^2 + y^2 = 25: (5,0) and (4,3).
    REQUIRE(reps.size() == 2);
    CHECK(reps[0] == std::pair<ExactInt, ExactInt>(5, 0));
    CHECK(reps[1] == std::pair<ExactInt, ExactInt>(4, 3));

    CHECK(two_square_reps(ExactInt(3)).empty());
    CHECK(two_square_reps(ExactInt(21)).empty());

    auto reps169 = two_square_reps(ExactInt(169));
    REQUIRE(reps169.size() == 2);
    CHECK(reps169[0] == std::pair<ExactInt, ExactInt>(13, 0));
    CHECK(reps169[1] == std::pair<ExactInt, ExactInt>(12, 5));
}

TEST_CASE("gaussian integer arithmetic") {
    GaussianInt a{3, 1}, b{1, 2};
    GaussianInt p = a * b;
    CHECK(p == GaussianInt{1, 7});
    CHECK(a * ExactInt(2) == GaussianInt{6, 2});
    CHECK((a + b) == GaussianInt{4, 3});
    CHECK((a - b) == GaussianInt{2, -1});
}

TEST_CASE("pythagorean quadruple decomposition") {
    // v - u = p^2 + q^2, v + u = m^2 + n^2, w = pm + qn, z = pn - qm.
    ExactInt u = 4, v = 9, w = 8, z = 1; // (v-u, v+u) = (5, 13)
    REQUIRE(w * w + z * z == v * v - u * u);
    auto all = pythagorean_quadruple_decompose_all(z, w, u, v);
    REQUIRE_FALSE(all.empty());
    for (const auto& d : all) {
        CHECK(d.p * d.p + d.q * d.q == v - u);
        CHECK(d.m * d.m + d.n * d.n == v + u);
        CHECK(d.p * d.m + d.q * d.n == w);
        CHECK(d.p * d.n - d.q * d.m == z);
    }
}

TEST_CASE("modular exponentiation and the quartic character of two") {
    CHECK(powm(ExactInt(2), ExactInt(10), ExactInt(1000)) == 24);
    CHECK(powm(ExactInt(5), ExactInt(0), ExactInt(7)) == 1);

    // For p = 1 mod 8, 2 is a quartic residue iff 2^((p-1)/4) = 1 mod p.
    CHECK(quartic_residue_of_two(ExactInt(73)) == 1);   // 2 = 45^4 mod 73
    CHECK(quartic_residue_of_two(ExactInt(41)) == -1);
    CHECK(quartic_residue_of_two(ExactInt(113)) == 1);
    CHECK(quartic_residue_of_two(ExactInt(17)) == -1);
}
