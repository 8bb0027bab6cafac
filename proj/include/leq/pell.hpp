#pragma once

// Continued-fraction expansion of square roots and solution streams for the
// generalized Pell equation x^2 - D y^2 = N.

#include "numkernel.hpp"

#include <algorithm>
#include <cstdint>
#include <optional>
#include <set>
#include <stdexcept>
#include <vector>

namespace leq {

struct ContinuedFraction {
    ExactInt a0;
    std::vector<ExactInt> period; // minimal period of the expansion of sqrt(D)
};

// Canonical periodic continued fraction of sqrt(D) for non-square D > 0.
// The expansion [a0; m1, m2, ...] is computed with the standard recurrence
// m' = d*a - m, d' = (D - m'^2)/d, a' = (a0 + m')/d'; the period ends exactly
// when d returns to 1. `max_steps` caps the period search; disengaged result
// means the cap was hit.
inline std::optional<ContinuedFraction> cf_sqrt_capped(const ExactInt& D, std::uint64_t max_steps) {
    if (D <= 0) throw std::invalid_argument("cf_sqrt: D must be positive");
    ExactInt a0 = isqrt_floor(D);
    if (a0 * a0 == D) throw std::invalid_argument("cf_sqrt: D must not be a perfect square");
    ContinuedFraction out{a0, {}};
    ExactInt m = 0, d = 1, a = a0;
    for (std::uint64_t step = 0; step < max_steps; ++step) {
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        out.period.push_back(a);
        if (d == 1) return out;
    }
    return std::nullopt;
}

inline ContinuedFraction cf_sqrt(const ExactInt& D) {
    auto cf = cf_sqrt_capped(D, 10'000'000ULL);
    if (!cf) throw std::runtime_error("cf_sqrt: period longer than step cap");
    return *cf;
}

struct PellSpec {
    ExactInt D; // non-square > 0
    ExactInt N; // right-hand side
};

struct PellSolution {
    ExactInt x, y;
};

// Fundamental solution of x^2 - D y^2 = 1 via continued-fraction convergents.
inline PellSolution pell_fundamental_unit(const ExactInt& D) {
    ExactInt a0 = isqrt_floor(D);
    if (a0 * a0 == D) throw std::invalid_argument("pell_fundamental_unit: D is a perfect square");
    // Convergent recurrence p_k = a_k p_{k-1} + p_{k-2}, likewise q_k.
    ExactInt m = 0, d = 1, a = a0;
    ExactInt p_prev = 1, p_cur = a0, q_prev = 0, q_cur = 1;
    for (std::uint64_t step = 0; step < 10'000'000ULL; ++step) {
        if (p_cur * p_cur - D * q_cur * q_cur == 1) return {p_cur, q_cur};
        m = d * a - m;
        d = (D - m * m) / d;
        a = (a0 + m) / d;
        ExactInt p_next = a * p_cur + p_prev;
        ExactInt q_next = a * q_cur + q_prev;
        p_prev = p_cur; p_cur = p_next;
        q_prev = q_cur; q_cur = q_next;
    }
    throw std::runtime_error("pell_fundamental_unit: convergent cap exceeded");
}

// First `count` positive solutions of x^2 - D y^2 = N in increasing x.
// Class representatives are found by direct search over 0 < y up to
// y1 * (floor(sqrt(|N|)) + 1), a safe overbound of the classical bound on
// fundamental solutions; the stream is then closed under multiplication by
// the fundamental unit of x^2 - D y^2 = 1 and merged.
inline std::vector<PellSolution> pell_solutions(const PellSpec& spec, std::size_t count) {
    if (count == 0) throw std::invalid_argument("pell_solutions: count must be >= 1");
    const ExactInt& D = spec.D;
    const ExactInt& N = spec.N;
    if (N == 0) throw std::invalid_argument("pell_solutions: N must be nonzero");
    PellSolution unit = pell_fundamental_unit(D);

    ExactInt y_bound = unit.y * (isqrt_floor(boost::multiprecision::abs(N)) + 1);
    std::set<std::pair<ExactInt, ExactInt>> seeds;
    for (ExactInt y = 1; y <= y_bound; ++y) {
        ExactInt x2 = N + D * y * y;
        if (x2 <= 0) continue;
        if (auto x = isqrt(x2); x && *x > 0) seeds.insert({*x, y});
    }
    if (seeds.empty()) return {};

    // Each seed generates a strictly increasing chain under the unit action;
    // merge the chains until the first `count` solutions are pinned (every
    // chain head exceeds the current count-th smallest x).
    std::set<std::pair<ExactInt, ExactInt>> merged(seeds);
    std::vector<std::pair<ExactInt, ExactInt>> frontier(seeds.begin(), seeds.end());
    while (true) {
        if (merged.size() >= count) {
            const ExactInt& xk = std::next(merged.begin(), count - 1)->first;
            if (std::all_of(frontier.begin(), frontier.end(),
                            [&](const auto& s) { return s.first > xk; }))
                break;
        }
        for (auto& [x, y] : frontier) {
            ExactInt nx = x * unit.x + D * y * unit.y;
            ExactInt ny = x * unit.y + y * unit.x;
            merged.insert({nx, ny});
            x = nx;
            y = ny;
        }
    }
    std::vector<PellSolution> out;
    for (const auto& [x, y] : merged) {
        if (out.size() == count) break;
        out.push_back({x, y});
    }
    return out;
}

} // namespace leq
