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

// One term of the screening chain: mu_0 = 1, mu_1 = 199,
// mu_i = 198 mu_{i-1} - mu_{i-2}; m = 7 mu is the subsequence of solutions
// of m^2 = 2n^2 - 1 divisible by 7, and M = m^2 - 8 is the quantity whose
// prime divisors must all be 1 mod 8 for a solution to exist.
struct MuTerm {
    std::size_t i = 0;
    ExactInt mu = 1;
    ExactInt m = 7;
    ExactInt M = 41;
};

inline std::vector<MuTerm> mu_sequence(std::size_t upto) {
    std::vector<MuTerm> out;
    ExactInt prev = 1, cur = 199;
    for (std::size_t i = 0; i <= upto; ++i) {
        ExactInt mu = (i == 0) ? prev : cur;
        if (i >= 2) {
            ExactInt next = 198 * cur - prev;
            prev = cur;
            cur = next;
            mu = cur;
        }
        MuTerm t;
        t.i = i;
        t.mu = mu;
        t.m = 7 * mu;
        t.M = t.m * t.m - 8;
        out.push_back(t);
    }
    return out;
}

struct ScreenVerdict {
    enum class Kind { BadFactor, AllFactorsGood, Unknown };
    Kind kind = Kind::Unknown;
    ExactInt bad_prime = 0;                // set for BadFactor
    std::vector<ExactInt> good_primes;     // set for AllFactorsGood
    ExactInt unfactored_cofactor = 1;      // set for Unknown
};

// Factor M far enough to decide: BadFactor as soon as a certified prime
// divisor congruent to 7 mod 8 appears (smallest first), AllFactorsGood when
// M factors completely into primes congruent to 1 mod 8, Unknown otherwise.
inline ScreenVerdict screen_M(const MuTerm& term, const ExactInt& trial_bound) {
    if (trial_bound < 2) throw std::invalid_argument("screen_M: trial_bound must be >= 2");
    Factorization f = factorize(term.M, trial_bound.convert_to<std::uint64_t>());
    ScreenVerdict v;
    for (const auto& [p, e] : f.factors) {
        if (p % 8 == 7) {
            v.kind = ScreenVerdict::Kind::BadFactor;
            v.bad_prime = p;
            return v;
        }
    }
    if (!f.complete()) {
        v.kind = ScreenVerdict::Kind::Unknown;
        v.unfactored_cofactor = f.cofactor;
        return v;
    }
    for (const auto& [p, e] : f.factors) {
        if (p % 8 != 1) { // 2, or primes 3/5 mod 8, never occur for these M
            v.kind = ScreenVerdict::Kind::Unknown;
            v.unfactored_cofactor = term.M;
            return v;
        }
        for (unsigned k = 0; k < e; ++k) v.good_primes.push_back(p);
    }
    v.kind = ScreenVerdict::Kind::AllFactorsGood;
    return v;
}

enum class MollinResult { NoSolutionByOddPeriod, Inconclusive };

// 2MY^2 = X^2 + 2 has no solution when the continued fraction of sqrt(2M)
// has odd period length. The expansion is attempted up to a step cap since
// the period can be astronomically long for large M.
inline MollinResult mollin_test(const ExactInt& M, std::size_t max_steps = 1000000) {
    ExactInt two_m = 2 * M;
    if (is_perfect_square(two_m)) throw std::invalid_argument("mollin_test: 2M must not be a square");
    auto cf = cf_sqrt_capped(two_m, max_steps);
    if (!cf) return MollinResult::Inconclusive;
    return (cf->period.size() % 2 == 1) ? MollinResult::NoSolutionByOddPeriod : MollinResult::Inconclusive;
}

enum class WeiResult { NoSolutionByQuarticProduct, Inconclusive };

// Wei's criterion: for M a product of distinct primes all congruent to
// 1 mod 8, a solution of 2MY^2 = X^2 + 2 forces the product of the quartic
// residue symbols (2/p)_4 to be +1; a product of -1 excludes solutions.
inline WeiResult wei_test(const std::vector<ExactInt>& primes) {
    if (primes.empty()) throw std::invalid_argument("wei_test: empty prime list");
    for (std::size_t i = 0; i < primes.size(); ++i) {
        const ExactInt& p = primes[i];
        if (p % 8 != 1 || !is_probable_prime(p))
            throw std::invalid_argument("wei_test: list member is not a prime congruent to 1 mod 8");
        for (std::size_t j = i + 1; j < primes.size(); ++j)
            if (primes[j] == p) throw std::invalid_argument("wei_test: repeated prime");
    }
    int product = 1;
    for (const ExactInt& p : primes) product *= quartic_residue_of_two(p);
    return (product == -1) ? WeiResult::NoSolutionByQuarticProduct : WeiResult::Inconclusive;
}

enum class SideBranch { CaseB, CaseC }; // case (b): m^2+1 = 10n^2; case (c): m^2+1 = 2n^2

// Side lengths of the hypothetical extangential LEQ attached to a solution
// (m, n, Y, Z): a = (fmn/2 + 2)Y + 2mZ and cyclic variants, where f is 10
// for case (b) and 2 for case (c).
inline SideLengths case_sides(SideBranch branch, const ExactInt& m, const ExactInt& n, const ExactInt& Y,
                              const ExactInt& Z) {
    const int f = (branch == SideBranch::CaseB) ? 10 : 2;
    if (m * m + 1 != f * n * n)
        throw std::invalid_argument("case_sides: m^2 + 1 != f n^2");
    ExactInt half_f = f / 2;
    if ((half_f * m * m - 8) * Y * Y != half_f + 8 * Z * Z)
        throw std::invalid_argument("case_sides: (f/2 m^2 - 8) Y^2 != f/2 + 8 Z^2");
    ExactInt k = half_f * m * n;
    SideLengths s{(k + 2) * Y + 2 * m * Z, (k - 2) * Y - 2 * m * Z,
                  (k - 2) * Y + 2 * m * Z, (k + 2) * Y - 2 * m * Z};
    if (s.a + s.b != s.c + s.d) throw std::runtime_error("case_sides: extangential sum identity failed");
    if (branch == SideBranch::CaseB && m == 3) {
        // Bridge to the (45,50) Pell form: W = 111Y + 52Z must satisfy
        // W^2 - 74 c^2 = -25.
        ExactInt W = 111 * Y + 52 * Z;
        if (W * W - 74 * s.c * s.c != -25)
            throw std::runtime_error("case_sides: W-bridge identity failed for m = 3");
    }
    return s;
}

// Lower bound 2 sqrt(2) m^2 < 2(a+b) on the perimeter of any case (c) LEQ,
// computed exactly as floor(sqrt(8 m^4)).
inline ExactInt perimeter_lower_bound_case_c(const ExactInt& m) {
    if (m <= 0) throw std::invalid_argument("perimeter_lower_bound_case_c: m must be positive");
    return isqrt_floor(8 * m * m * m * m);
}

struct PipelineStage {
    MuTerm term;
    ScreenVerdict screen;
    std::optional<WeiResult> wei;
    std::optional<MollinResult> mollin;
    bool excluded = false;
    std::string reason;
};

// Screening pipeline for one index: factor-based screen first; if all prime
// factors are 1 mod 8, escalate to Wei's quartic criterion and then the
// Mollin odd-period test.
inline PipelineStage run_pipeline_stage(const MuTerm& term, const ExactInt& trial_bound,
                                        std::size_t cf_step_cap = 1000000) {
    PipelineStage st;
    st.term = term;
    st.screen = screen_M(term, trial_bound);
    switch (st.screen.kind) {
    case ScreenVerdict::Kind::BadFactor:
        st.excluded = true;
        st.reason = "prime divisor " + st.screen.bad_prime.str() + " is 7 mod 8";
        return st;
    case ScreenVerdict::Kind::Unknown:
        st.reason = "incomplete factorization";
        return st;
    case ScreenVerdict::Kind::AllFactorsGood:
        break;
    }
    st.wei = wei_test(st.screen.good_primes);
    if (*st.wei == WeiResult::NoSolutionByQuarticProduct) {
        st.excluded = true;
        st.reason = "quartic residue product is -1";
        return st;
    }
    st.mollin = mollin_test(term.M, cf_step_cap);
    if (*st.mollin == MollinResult::NoSolutionByOddPeriod) {
        st.excluded = true;
        st.reason = "sqrt(2M) has odd continued-fraction period";
        return st;
    }
    st.reason = "all tests inconclusive";
    return st;
}

inline std::vector<PipelineStage> run_pipeline(std::size_t upto, const ExactInt& trial_bound,
                                               std::size_t cf_step_cap = 1000000) {
    std::vector<PipelineStage> out;
    for (const MuTerm& t : mu_sequence(upto)) out.push_back(run_pipeline_stage(t, trial_bound, cf_step_cap));
    return out;
}

// Stated prime divisors, 7 mod 8, covering indices 7..155 of the chain: the
// r-th entry of stated_divisor_indices selects a member of stated_primes
// dividing M_{r+6}.
inline const std::vector<ExactInt>& stated_primes() {
    static const std::vector<ExactInt> P = {
        ExactInt(23), ExactInt(47), ExactInt(71), ExactInt(79), ExactInt(103), ExactInt(167),
        ExactInt(191), ExactInt(223), ExactInt(239), ExactInt(263), ExactInt(311), ExactInt(359),
        ExactInt(431), ExactInt(479), ExactInt(607), ExactInt(719), ExactInt(887), ExactInt(983),
        ExactInt(1031), ExactInt(1103), ExactInt(1279), ExactInt(1399), ExactInt(1487), ExactInt(1511),
        ExactInt(1823), ExactInt(1879), ExactInt(2671), ExactInt(2767), ExactInt(3271), ExactInt(3559),
        ExactInt(4903), ExactInt(4943), ExactInt(6823), ExactInt(7583), ExactInt(8231), ExactInt(23447),
        ExactInt(39551), ExactInt(53527), ExactInt(72559), ExactInt(153511), ExactInt(167911),
        ExactInt(255511), ExactInt(625111), ExactInt(869951), ExactInt(1471271), ExactInt(2593399),
        ExactInt(10808983), ExactInt(13980671), ExactInt(39556927), ExactInt(108732031),
        ExactInt(125448527), ExactInt(160812623), ExactInt(209110079), ExactInt(627025159),
        ExactInt(9707524087LL), ExactInt(181155438071LL), ExactInt(291814585319LL),
        ExactInt(3072313317767LL), ExactInt(15238519898992991LL), ExactInt(39834495682679591LL),
        ExactInt("15327739968951498750119"), ExactInt("110095018941508669324502008759")};
    return P;
}

inline const std::vector<int>& stated_divisor_indices() {
    static const std::vector<int> R = {
        40, 9, 1, 4, 21, 1, 6, 5, 4, 15, 19, 55, 2, 1, 10, 9, 1, 48, 11, 2, 50, 4, 9, 8, 1, 41, 9, 1,
        13, 4, 34, 22, 14, 9, 4, 1, 9, 59, 1, 61, 9, 5, 2, 9, 56, 26, 1, 4, 43, 1, 9, 32, 16, 46, 9, 4, 33,
        1, 2, 58, 1, 9, 6, 5, 9, 2, 17, 27, 1, 28, 54, 1, 7, 4, 18, 5, 49, 15, 9, 1, 5, 2, 1, 29, 20, 9, 4, 37,
        2, 6, 1, 30, 5, 1, 4, 36, 9, 5, 44, 4, 60, 1, 10, 3, 1, 62, 9, 4, 39, 5, 8, 2, 1, 9, 5, 1, 23, 9, 24,
        51, 4, 57, 11, 1, 9, 4, 1, 2, 38, 31, 35, 5, 42, 4, 1, 52, 53, 1, 3, 45, 47, 9, 12, 5, 25, 1, 4, 8, 1};
    return R;
}

struct StatedDivisorReport {
    std::size_t checked = 0;
    std::vector<std::size_t> failures; // chain indices whose stated prime does not divide M
};

// Verifies that for each index 7..155 the stated prime divides M exactly and
// is 7 mod 8 (primality of the large entries is probabilistic).
inline StatedDivisorReport verify_stated_divisors() {
    StatedDivisorReport rep;
    const auto& P = stated_primes();
    const auto& R = stated_divisor_indices();
    std::vector<MuTerm> terms = mu_sequence(6 + R.size());
    for (std::size_t r = 0; r < R.size(); ++r) {
        std::size_t chain_index = r + 7;
        const ExactInt& p = P.at(static_cast<std::size_t>(R[r]) - 1);
        ++rep.checked;
        if (p % 8 != 7 || terms[chain_index].M % p != 0 || !is_probable_prime(p))
            rep.failures.push_back(chain_index);
    }
    return rep;
}

struct GiantReport {
    bool sides_from_formula = false;
    bool side_lengths_match = false;
    bool extangential_sum = false;
    bool dets_positive = false;
    bool equable = false;
    bool sigma_t_match = false;
    std::size_t perimeter_digits = 0;
    bool ok() const {
        return sides_from_formula && side_lengths_match && extangential_sum && dets_positive && equable &&
               sigma_t_match && perimeter_digits == 28;
    }
};

// Exact verification of the 28-digit-perimeter extangential LEQ attached to
// m = 117, n = 37 in the m^2 + 1 = 10 n^2 family.
inline GiantReport verify_giant_example() {
    const ExactInt m = 117, n = 37;
    const ExactInt Y("34884218483995340806373");
    const ExactInt Z("3226483779786979759026161");
    const ExactInt a("1510135881993200406047678005");
    const ExactInt b("1936178957897460209165");
    const ExactInt c("1509996345119264424684452513");
    const ExactInt d("141473052893878823434657");
    const LatticePoint A{ExactInt("640848245491383541211578005"), ExactInt("1367415046112187810865469000")};
    const LatticePoint B{ExactInt("640849067137238673279485480"), ExactInt("1367416799305572965277883040")};
    const LatticePoint C{ExactInt("60036158873125939312368"), ExactInt("128102631990427959679265")};

    GiantReport rep;
    SideLengths s = case_sides(SideBranch::CaseB, m, n, Y, Z);
    rep.sides_from_formula = (s.a == a && s.b == b && s.c == c && s.d == d);

    LatticePoint Sa = A;
    LatticePoint Sb = B - A;
    LatticePoint Sc = B - C;
    LatticePoint Sd = C;
    rep.side_lengths_match = (norm2(Sa) == a * a && norm2(Sb) == b * b && norm2(Sc) == c * c && norm2(Sd) == d * d);
    rep.extangential_sum = (a + b == c + d);
    ExactInt det_ab = cross(Sa, Sb);
    ExactInt det_cd = cross(Sc, Sd);
    rep.dets_positive = (det_ab > 0 && det_cd > 0);
    ExactInt perimeter = a + b + c + d;
    rep.equable = (2 * perimeter == det_ab + det_cd);
    rep.perimeter_digits = perimeter.str().size();

    auto q = LatticeQuad::make({0, 0}, A, B, C);
    if (q) {
        ExtangentialProfile ep = extangential_profile(*q);
        rep.sigma_t_match = (ep.Sigma == 5 * m * m && ep.T == 5 * m * m + 5);
    }
    return rep;
}

} // namespace leq
