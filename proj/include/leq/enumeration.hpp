#pragma once

#include <algorithm>
#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "leq/constructors.hpp"
#include "leq/geometry.hpp"
#include "leq/numkernel.hpp"
#include "leq/profiles.hpp"

namespace leq {

enum class Provenance { BruteForce, Diophantine, Family };

inline const char* provenance_name(Provenance p) {
    switch (p) {
    case Provenance::BruteForce: return "brute-force";
    case Provenance::Diophantine: return "diophantine";
    case Provenance::Family: return "family";
    }
    return "unknown";
}

struct CatalogEntry {
    LatticeQuad quad; // canonical representative, O at the origin
    SideLengths sides;
    ShapeClass shape;
    std::optional<TangentialProfile> tangential;
    std::optional<ExtangentialProfile> extangential;
    Provenance provenance = Provenance::BruteForce;

    std::array<ExactInt, 8> key() const { return detail::serialize_origin(quad); }
};

inline CatalogEntry make_catalog_entry(const LatticeQuad& q, Provenance prov) {
    LatticeQuad canon = canonical_quad(q);
    ShapeClass shape = classify(canon);
    auto s = side_lengths(canon);
    if (!s) throw std::invalid_argument("make_catalog_entry: non-integral sides");
    CatalogEntry e{canon, *s, shape, std::nullopt, std::nullopt, prov};
    if (shape.equable && shape.tangential) e.tangential = tangential_profile(canon);
    if (shape.equable && shape.extangential) e.extangential = extangential_profile(canon);
    return e;
}

// One solution of the generating equation together with which construction
// cases it can feed.
struct GenSolution {
    DioSolutionGen sol;
    bool case1_viable = false;
    bool case2_viable = false;
};

// All solutions of (2x)^2 + u^2 = v^2 - (v - ((x-1)/2)c)^2 with
// 0 < c <= c_max, 0 < v <= v_max, u+v divisible by x, and the parity and
// divisibility side conditions; each tagged with case I / case II viability
// (derived sides positive and conditions (i)-(iii) satisfied).
inline std::vector<GenSolution> enumerate_gen_solutions(int x, const ExactInt& c_max, const ExactInt& v_max) {
    if (x != 2 && x != 3 && x != 5 && x != 9)
        throw std::invalid_argument("enumerate_gen_solutions: x must be one of 2,3,5,9");
    if (c_max < 1 || v_max < 1) throw std::invalid_argument("enumerate_gen_solutions: bounds must be >= 1");
    std::vector<GenSolution> out;
    for (ExactInt c = 1; c <= c_max; ++c) {
        if (x == 2 && c % 2 != 0) continue;
        if (x == 3 && c % 3 == 0) continue;
        ExactInt g = ExactInt(x - 1) * c / 2;
        for (ExactInt v = 1; v <= v_max; ++v) {
            ExactInt rhs = v * v - (v - g) * (v - g) - ExactInt(4 * x * x);
            if (rhs < 0) continue;
            auto root = isqrt(rhs);
            if (!root) continue;
            std::vector<ExactInt> us = {*root};
            if (*root != 0) us.push_back(-*root);
            for (const ExactInt& u : us) {
                if ((u + v) % x != 0) continue;
                DioSolutionGen sol{x, u, v, c};
                GenSolution gs{sol, false, false};
                if (auto s1 = gen_derived_sides(GenCase::I, sol))
                    gs.case1_viable = gen_conditions_hold(GenCase::I, x, *s1);
                if (x != 2) {
                    if (auto s2 = gen_derived_sides(GenCase::II, sol))
                        gs.case2_viable = gen_conditions_hold(GenCase::II, x, *s2);
                }
                out.push_back(gs);
            }
        }
    }
    return out;
}

struct ConvexTangentialReport {
    std::vector<CatalogEntry> entries;
    // Candidate (c,v) pair tallies for x = 2, 3, 5, 9 under the finite
    // bounds of the classification proof.
    std::array<std::size_t, 4> pair_tallies{};
};

// Reproduces the classification of convex tangential equable lattice
// quadrilaterals by the finite diophantine case split: for each tau in
// {2,3,5,9}, sweep the finitely many (c,v) with c(v-g) below the proof
// bound, solve the generating equation for u within its window, apply the
// labeling conventions (b <= d and a,c even for tau=2, b minimal otherwise)
// and the convexity condition, and realize survivors as lattice quads.
// Exactly six canonical entries must remain.
inline ConvexTangentialReport classify_convex_tangential() {
    static constexpr std::array<int, 4> taus = {2, 3, 5, 9};
    static constexpr std::array<int, 4> bounds = {16, 18, 25, 41}; // on c(v-g)
    ConvexTangentialReport rep;
    std::map<std::array<ExactInt, 8>, CatalogEntry> dedup;
    for (std::size_t ix = 0; ix < taus.size(); ++ix) {
        const int x = taus[ix];
        const int bound = bounds[ix];
        for (ExactInt c = 1; c <= bound; ++c) {
            if (x == 2 && c % 2 != 0) continue;
            ExactInt g = ExactInt(x - 1) * c / 2;
            ExactInt kmax = bound / c;
            for (ExactInt k = 1; k <= kmax; ++k) {
                ExactInt v = g + k;
                ++rep.pair_tallies[ix];
                ExactInt rhs = g * (2 * v - g) - ExactInt(4 * x * x);
                if (rhs < 0) continue;
                auto root = isqrt(rhs);
                if (!root) continue;
                std::vector<ExactInt> us = {*root};
                if (*root != 0) us.push_back(-*root);
                for (const ExactInt& u : us) {
                    if (!(-g < u && u <= g)) continue; // window from the proof
                    if ((u + v) % x != 0) continue;
                    DioSolutionGen sol{x, u, v, c};
                    if (!gen_side_conditions_hold(sol)) continue;
                    auto sides = gen_derived_sides(GenCase::I, sol);
                    if (!sides || !gen_conditions_hold(GenCase::I, x, *sides)) continue;
                    if (x == 2) {
                        if (sides->a % 2 != 0 || sides->c % 2 != 0) continue;
                        if (!(sides->b <= sides->d)) continue;
                    } else {
                        ExactInt mn = std::min(std::min(sides->a, sides->b), std::min(sides->c, sides->d));
                        if (sides->b != mn) continue;
                    }
                    // Convexity: (b+c) tau > a+c.
                    if (!((sides->b + sides->c) * x > sides->a + sides->c)) continue;
                    ConstructedTangential ct = construct_tangential(GenCase::I, sol);
                    CatalogEntry entry = make_catalog_entry(ct.quad, Provenance::Diophantine);
                    dedup.emplace(entry.key(), std::move(entry));
                }
            }
        }
    }
    for (auto& [key, entry] : dedup) rep.entries.push_back(std::move(entry));
    return rep;
}

struct SearchBounds {
    std::int64_t perimeter_max = 30;
    std::optional<bool> tangential;
    std::optional<bool> extangential;
    std::optional<bool> convex;
    std::optional<bool> kite;
    std::int64_t safety_cap = 100;
    unsigned workers = 0; // 0 = hardware concurrency
};

namespace detail {

struct BruteVec {
    std::int64_t x, y;
};

inline std::vector<std::vector<BruteVec>> vectors_by_length(std::int64_t max_len, bool octant_only) {
    std::vector<std::vector<BruteVec>> table(static_cast<std::size_t>(max_len) + 1);
    for (std::int64_t len = 1; len <= max_len; ++len) {
        for (const auto& [bx, by] : two_square_reps(ExactInt(len) * len)) {
            std::int64_t x = bx.convert_to<std::int64_t>();
            std::int64_t y = by.convert_to<std::int64_t>();
            if (octant_only) {
                // x >= y >= 0 representatives; every quad has a symmetric
                // image whose first side vector lies in this octant.
                table[static_cast<std::size_t>(len)].push_back({x, y});
            } else {
                std::array<BruteVec, 8> cands = {{{x, y}, {x, -y}, {-x, y}, {-x, -y},
                                                  {y, x}, {y, -x}, {-y, x}, {-y, -x}}};
                for (const auto& cand : cands) {
                    auto& row = table[static_cast<std::size_t>(len)];
                    bool seen = false;
                    for (const auto& e : row)
                        if (e.x == cand.x && e.y == cand.y) { seen = true; break; }
                    if (!seen) row.push_back(cand);
                }
            }
        }
    }
    return table;
}

} // namespace detail

// Exhaustive search for equable lattice quadrilaterals with perimeter at
// most bounds.perimeter_max, up to lattice symmetry. Side vectors are drawn
// from the two-square representations of each admissible squared length;
// equability (doubled shoelace area = 2 * perimeter) prunes candidates
// before the exact validity pipeline runs.
inline std::vector<CatalogEntry> brute_force_search(const SearchBounds& bounds) {
    const std::int64_t P = bounds.perimeter_max;
    if (P < 12) throw std::invalid_argument("brute_force_search: perimeter_max must be >= 12");
    if (P > bounds.safety_cap) throw std::invalid_argument("brute_force_search: perimeter_max exceeds safety cap");

    const auto all_vecs = detail::vectors_by_length(P, false);
    const auto oct_vecs = detail::vectors_by_length(P, true);

    // Perfect-square lookup for squared distances up to (2P)^2 + (2P)^2.
    const std::int64_t max_sq = 8 * P * P + 1;
    std::vector<std::int32_t> root_of(static_cast<std::size_t>(max_sq) + 1, -1);
    for (std::int64_t r = 0; r * r <= max_sq; ++r) root_of[static_cast<std::size_t>(r * r)] = static_cast<std::int32_t>(r);

    // Flatten the outer (a, A) loop for partitioning across workers.
    std::vector<std::pair<std::int64_t, detail::BruteVec>> outer;
    for (std::int64_t a = 1; a <= P - 3; ++a)
        for (const auto& A : oct_vecs[static_cast<std::size_t>(a)]) outer.emplace_back(a, A);

    unsigned workers = bounds.workers ? bounds.workers : std::max(1u, std::thread::hardware_concurrency());
    if (workers > 8) workers = 8;
    if (outer.size() < workers) workers = static_cast<unsigned>(outer.empty() ? 1 : outer.size());

    std::vector<std::vector<LatticeQuad>> hits(workers);
    auto run = [&](unsigned w) {
        for (std::size_t oi = w; oi < outer.size(); oi += workers) {
            const std::int64_t a = outer[oi].first;
            const detail::BruteVec A = outer[oi].second;
            for (std::int64_t b = 1; a + b <= P - 2; ++b) {
                for (const auto& vb : all_vecs[static_cast<std::size_t>(b)]) {
                    const std::int64_t Bx = A.x + vb.x, By = A.y + vb.y;
                    if (Bx == 0 && By == 0) continue;
                    const std::int64_t crossAB = A.x * By - Bx * A.y;
                    const std::int64_t dmax = P - 1 - a - b;
                    for (std::int64_t d = 1; d <= dmax; ++d) {
                        for (const auto& C : all_vecs[static_cast<std::size_t>(d)]) {
                            const std::int64_t ex = C.x - Bx, ey = C.y - By;
                            const std::int64_t n = ex * ex + ey * ey;
                            const std::int32_t c = root_of[static_cast<std::size_t>(n)];
                            if (c <= 0 || a + b + c + d > P) continue;
                            // Doubled shoelace area of O,A,B,C; equability
                            // for a simple CCW polygon means it equals twice
                            // the perimeter.
                            const std::int64_t S = crossAB + Bx * C.y - C.x * By;
                            if (S != 2 * (a + b + c + d)) continue;
                            auto q = LatticeQuad::make({0, 0}, {A.x, A.y}, {Bx, By}, {C.x, C.y});
                            if (q) hits[w].push_back(*q);
                        }
                    }
                }
            }
        }
    };
    if (workers == 1) {
        run(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < workers; ++w) pool.emplace_back(run, w);
        for (auto& th : pool) th.join();
    }

    std::map<std::array<ExactInt, 8>, CatalogEntry> dedup;
    for (const auto& worker_hits : hits) {
        for (const auto& q : worker_hits) {
            CatalogEntry entry = make_catalog_entry(q, Provenance::BruteForce);
            if (bounds.tangential && entry.shape.tangential != *bounds.tangential) continue;
            if (bounds.extangential && entry.shape.extangential != *bounds.extangential) continue;
            if (bounds.convex && entry.shape.convex != *bounds.convex) continue;
            if (bounds.kite && entry.shape.kite != *bounds.kite) continue;
            dedup.emplace(entry.key(), entry);
        }
    }
    std::vector<CatalogEntry> out;
    out.reserve(dedup.size());
    for (auto& [key, entry] : dedup) out.push_back(std::move(entry));
    std::sort(out.begin(), out.end(), [](const CatalogEntry& l, const CatalogEntry& r) {
        ExactInt pl = l.sides.perimeter(), pr = r.sides.perimeter();
        if (pl != pr) return pl < pr;
        return l.key() < r.key();
    });
    return out;
}

struct CatalogViolation {
    std::size_t entry_index;
    std::string what;
};

struct CatalogReport {
    std::vector<CatalogViolation> violations;
    std::size_t entries_checked = 0;
    bool ok() const { return violations.empty(); }
};

namespace detail {

inline bool seven_value_pair(const ExactRational& s, const ExactRational& t) {
    auto is = [](const ExactRational& r, long n, long d) { return r == ExactRational(n, d); };
    return (is(s, 9, 1) && is(t, 9, 8)) || (is(s, 9, 8) && is(t, 9, 1)) ||
           (is(s, 5, 1) && is(t, 5, 4)) || (is(s, 5, 4) && is(t, 5, 1)) ||
           (is(s, 3, 1) && is(t, 3, 2)) || (is(s, 3, 2) && is(t, 3, 1)) ||
           (is(s, 2, 1) && is(t, 2, 1));
}

inline bool integral_incenter_class(const ExactRational& s, const ExactRational& t) {
    auto in_set = [](const ExactRational& r) {
        return r == ExactRational(2) || r == ExactRational(3) || r == ExactRational(5) ||
               r == ExactRational(5, 4) || r == ExactRational(3, 2);
    };
    return in_set(s) && in_set(t);
}

inline bool sigma_t_membership(const ExactInt& S, const ExactInt& T) {
    if (S == 9 && T == 18) return true;
    if (S == 18 && T == 50) return true;
    if (T == S + 1 && is_perfect_square(S)) return true;
    if (S % 5 == 0 && T == S + 5 && is_perfect_square(S / 5)) return true;
    return false;
}

} // namespace detail

// Aggregate verification over a catalog: every entry must pass the full
// identity suite; tangential entries must obey the seven-value law,
// sigma+tau = sigma*tau, and incenter integrality for the five integral
// classes; non-kite extangential entries must have (Sigma, T) in the allowed
// set {(9,18), (18,50)} union {(m^2, m^2+1)} union {(5m^2, 5m^2+5)}.
inline CatalogReport verify_catalog(const std::vector<CatalogEntry>& entries) {
    CatalogReport rep;
    rep.entries_checked = entries.size();
    for (std::size_t i = 0; i < entries.size(); ++i) {
        const CatalogEntry& e = entries[i];
        if (e.shape.tangential || e.shape.extangential) {
            IdentityReport idr = check_identities(e.quad);
            if (!idr.all_ok())
                for (const std::string& f : idr.failures())
                    rep.violations.push_back({i, "identity: " + f});
        }
        if (e.tangential) {
            const TangentialProfile& tp = *e.tangential;
            if (!detail::seven_value_pair(tp.sigma, tp.tau))
                rep.violations.push_back({i, "seven-value law violated"});
            if (tp.sigma + tp.tau != tp.sigma * tp.tau)
                rep.violations.push_back({i, "sigma+tau != sigma*tau"});
            if (detail::integral_incenter_class(tp.sigma, tp.tau) && !tp.incenter.is_lattice())
                rep.violations.push_back({i, "incenter not a lattice point"});
        }
        if (e.extangential && !e.shape.kite) {
            const ExtangentialProfile& ep = *e.extangential;
            if (!detail::sigma_t_membership(ep.Sigma, ep.T))
                rep.violations.push_back({i, "(Sigma,T) outside the allowed set"});
        }
    }
    return rep;
}

} // namespace leq
