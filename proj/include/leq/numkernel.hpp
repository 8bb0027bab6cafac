#pragma once

// Exact arbitrary-precision integer, rational and Gaussian-integer arithmetic,
// plus the number-theoretic primitives used throughout the library: integer
// square roots, factorization by trial division with primality certification,
// square-free decomposition, lattice-preserver tests, sums of two squares,
// Pythagorean-quadruple decomposition and quartic residues.

#include <boost/multiprecision/cpp_int.hpp>
#include <boost/multiprecision/integer.hpp>
#include <boost/multiprecision/miller_rabin.hpp>
#include <algorithm>
#include <cstdint>
#include <limits>
#include <cstdlib>
#include <optional>
#include <random>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace leq {

using ExactInt = boost::multiprecision::cpp_int;
using ExactRational = boost::multiprecision::cpp_rational;

inline ExactInt rat_num(const ExactRational& r) { return boost::multiprecision::numerator(r); }
inline ExactInt rat_den(const ExactRational& r) { return boost::multiprecision::denominator(r); }

inline bool is_integer(const ExactRational& r) { return rat_den(r) == 1; }

// Quotient of two integers as a reduced rational; the backing rational type
// rejects negative denominators, so the sign is moved to the numerator.
inline ExactRational make_rational(const ExactInt& num, const ExactInt& den) {
    if (den == 0) throw std::invalid_argument("make_rational: zero denominator");
    if (den < 0) return ExactRational(-num, -den);
    return ExactRational(num, den);
}

// Floor of the square root of a non-negative integer.
inline ExactInt isqrt_floor(const ExactInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt_floor: negative input");
    return boost::multiprecision::sqrt(n);
}

// Exact square root: engaged iff n is a perfect square.
inline std::optional<ExactInt> isqrt(const ExactInt& n) {
    if (n < 0) throw std::invalid_argument("isqrt: negative input");
    ExactInt r = boost::multiprecision::sqrt(n);
    if (r * r == n) return r;
    return std::nullopt;
}

inline bool is_perfect_square(const ExactInt& n) { return n >= 0 && isqrt(n).has_value(); }

inline bool is_probable_prime(const ExactInt& n) {
    if (n < 2) return false;
    static thread_local std::mt19937_64 rng(0x9e3779b97f4a7c15ULL);
    return boost::multiprecision::miller_rabin_test(n, 25, rng);
}

inline std::uint64_t default_trial_bound() {
    if (const char* env = std::getenv("LEQ_TRIAL_BOUND")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v >= 2) return static_cast<std::uint64_t>(v);
    }
    return 10'000'000ULL;
}

// Result of bounded factorization. `factors` are certified primes with
// multiplicity; `cofactor` is 1 when the factorization is complete, otherwise
// a leftover > 1 (prime-certified leftovers are moved into `factors`, so a
// non-trivial cofactor is always an unfactored composite).
struct Factorization {
    std::vector<std::pair<ExactInt, unsigned>> factors;
    ExactInt cofactor = 1;
    bool complete() const { return cofactor == 1; }
};

inline Factorization factorize(ExactInt n, std::uint64_t trial_bound = default_trial_bound()) {
    if (n <= 0) throw std::invalid_argument("factorize: input must be positive");
    Factorization out;
    ExactInt rem = n;
    if (rem == 1) return out;

    auto emit = [&out](const ExactInt& p, unsigned e) {
        if (e > 0) out.factors.emplace_back(p, e);
    };
    auto divide_out = [&rem](std::uint64_t p) {
        unsigned e = 0;
        while (boost::multiprecision::integer_modulus(rem, p) == 0) { rem /= p; ++e; }
        return e;
    };
    auto scan_limit = [&rem, trial_bound]() {
        ExactInt s = isqrt_floor(rem);
        return s < trial_bound ? static_cast<std::uint64_t>(s) : trial_bound;
    };

    for (std::uint64_t sp : {2ULL, 3ULL})
        if (sp <= trial_bound) emit(sp, divide_out(sp));

    std::uint64_t p = 5;
    while (rem > 1) {
        if (is_probable_prime(rem)) { emit(rem, 1); return out; }
        std::uint64_t limit = scan_limit();
        bool found = false;
        while (p <= limit) {
            if (boost::multiprecision::integer_modulus(rem, p) == 0) {
                emit(p, divide_out(p));
                found = true;
                break;
            }
            p += (p % 6 == 1) ? 4 : 2;
        }
        if (!found) {
            // Exhausted the scan: rem is prime if the scan passed sqrt(rem).
            if (ExactInt(p) * p > rem || is_probable_prime(rem)) emit(rem, 1);
            else out.cofactor = rem;
            return out;
        }
    }
    return out;
}

struct SquarefreeDecomposition {
    ExactInt f; // square-free part
    ExactInt s; // n = f * s^2
};

inline SquarefreeDecomposition squarefree_decompose(const ExactInt& n,
                                                    std::uint64_t trial_bound = default_trial_bound()) {
    if (n < 1) throw std::invalid_argument("squarefree_decompose: input must be >= 1");
    Factorization fac = factorize(n, trial_bound);
    if (!fac.complete())
        throw std::runtime_error("squarefree_decompose: incomplete factorization of " + n.str());
    SquarefreeDecomposition out{1, 1};
    for (const auto& [p, e] : fac.factors) {
        if (e % 2 == 1) out.f *= p;
        for (unsigned i = 0; i < e / 2; ++i) out.s *= p;
    }
    return out;
}

// k preserves the lattice iff it has no prime factor congruent to 1 mod 4.
inline bool is_lattice_preserver(const ExactInt& k,
                                 std::uint64_t trial_bound = default_trial_bound()) {
    if (k < 1) throw std::invalid_argument("is_lattice_preserver: input must be >= 1");
    Factorization fac = factorize(k, trial_bound);
    if (!fac.complete())
        throw std::runtime_error("is_lattice_preserver: incomplete factorization of " + k.str());
    for (const auto& [p, e] : fac.factors)
        if (p % 4 == 1) return false;
    return true;
}

// All (x, y) with x >= y >= 0 and x^2 + y^2 = n, emitted in decreasing x
// (equivalently increasing y).
inline std::vector<std::pair<ExactInt, ExactInt>> two_square_reps(const ExactInt& n) {
    if (n < 0) throw std::invalid_argument("two_square_reps: negative input");
    std::vector<std::pair<ExactInt, ExactInt>> out;
    for (ExactInt y = 0; 2 * y * y <= n; ++y) {
        if (auto x = isqrt(n - y * y); x && *x >= y) out.emplace_back(*x, y);
    }
    return out;
}

struct GaussianInt {
    ExactInt re, im;

    GaussianInt(ExactInt r = 0, ExactInt i = 0) : re(std::move(r)), im(std::move(i)) {}

    GaussianInt operator+(const GaussianInt& o) const { return {re + o.re, im + o.im}; }
    GaussianInt operator-(const GaussianInt& o) const { return {re - o.re, im - o.im}; }
    GaussianInt operator*(const GaussianInt& o) const {
        return {re * o.re - im * o.im, re * o.im + im * o.re};
    }
    GaussianInt operator*(const ExactInt& k) const { return {re * k, im * k}; }
    GaussianInt conj() const { return {re, -im}; }
    GaussianInt square() const { return *this * *this; }
    ExactInt norm() const { return re * re + im * im; }
    bool operator==(const GaussianInt& o) const { return re == o.re && im == o.im; }

    // Exact division by an integer; engaged iff both components divide.
    std::optional<GaussianInt> div_exact(const ExactInt& k) const {
        if (k == 0 || re % k != 0 || im % k != 0) return std::nullopt;
        return GaussianInt{re / k, im / k};
    }
};

struct QuadrupleDecomposition {
    ExactInt p, q, m, n;
};

namespace detail {

inline std::vector<std::pair<ExactInt, ExactInt>> signed_variants(const ExactInt& x, const ExactInt& y) {
    std::vector<std::pair<ExactInt, ExactInt>> v = {
        {x, y}, {x, -y}, {-x, y}, {-x, -y}, {y, x}, {y, -x}, {-y, x}, {-y, -x}};
    std::vector<std::pair<ExactInt, ExactInt>> out;
    for (auto& e : v)
        if (std::find(out.begin(), out.end(), e) == out.end()) out.push_back(e);
    return out;
}

} // namespace detail

// All decompositions of the Pythagorean quadruple z^2 + w^2 + u^2 = v^2 into
// (p, q, m, n) with v-u = p^2+q^2, v+u = m^2+n^2, w = pm+qn, z = pn-qm,
// in deterministic order (unsigned reps of v-u in two_square_reps order, then
// the fixed sign/swap order of (p, q); (m, n) is solved linearly).
inline std::vector<QuadrupleDecomposition> pythagorean_quadruple_decompose_all(
    const ExactInt& z, const ExactInt& w, const ExactInt& u, const ExactInt& v) {
    if (z * z + w * w + u * u != v * v)
        throw std::invalid_argument("pythagorean_quadruple_decompose: not a Pythagorean quadruple");
    std::vector<QuadrupleDecomposition> out;
    ExactInt vu = v - u, vpu = v + u;
    if (vu < 0 || vpu < 0) return out;
    if (vu == 0) {
        if (w != 0 || z != 0) return out;
        for (const auto& [m, n] : two_square_reps(vpu))
            for (const auto& [mm, nn] : detail::signed_variants(m, n))
                out.push_back({0, 0, mm, nn});
        return out;
    }
    for (const auto& [x, y] : two_square_reps(vu)) {
        for (const auto& [p, q] : detail::signed_variants(x, y)) {
            // pm + qn = w and -qm + pn = z; determinant p^2+q^2 = v-u > 0.
            ExactInt mn_num = p * w - q * z;
            ExactInt nn_num = q * w + p * z;
            if (mn_num % vu != 0 || nn_num % vu != 0) continue;
            ExactInt m = mn_num / vu, n = nn_num / vu;
            if (m * m + n * n != vpu) continue;
            out.push_back({p, q, m, n});
        }
    }
    return out;
}

inline std::optional<QuadrupleDecomposition> pythagorean_quadruple_decompose(
    const ExactInt& z, const ExactInt& w, const ExactInt& u, const ExactInt& v) {
    auto all = pythagorean_quadruple_decompose_all(z, w, u, v);
    if (all.empty()) return std::nullopt;
    return all.front();
}

inline ExactInt powm(ExactInt base, ExactInt exp, const ExactInt& mod) {
    return boost::multiprecision::powm(base, exp, mod);
}

// Sign of 2^((p-1)/4) mod p for a prime p with p congruent to 1 mod 8.
inline int quartic_residue_of_two(const ExactInt& p) {
    if (p % 8 != 1) throw std::invalid_argument("quartic_residue_of_two: p must be 1 mod 8");
    if (!is_probable_prime(p)) throw std::invalid_argument("quartic_residue_of_two: p must be prime");
    ExactInt r = powm(2, (p - 1) / 4, p);
    if (r == 1) return +1;
    if (r == p - 1) return -1;
    throw std::logic_error("quartic_residue_of_two: unexpected residue (input not prime?)");
}

} // namespace leq
