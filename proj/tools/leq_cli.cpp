// Command-line surface for the lattice equable quadrilateral library:
// classification, enumeration, constructions, family generators, and the
// verification reports, all with exact arithmetic and JSON-lines output.

#include <cstdlib>
#include <exception>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "leq/constructors.hpp"
#include "leq/enumeration.hpp"
#include "leq/geometry.hpp"
#include "leq/numkernel.hpp"
#include "leq/openproblem.hpp"
#include "leq/pell.hpp"
#include "leq/profiles.hpp"

using json = nlohmann::ordered_json;

namespace {

json json_int(const leq::ExactInt& v) {
    static const leq::ExactInt lo = std::numeric_limits<std::int64_t>::min();
    static const leq::ExactInt hi = std::numeric_limits<std::int64_t>::max();
    if (v >= lo && v <= hi) return v.convert_to<std::int64_t>();
    return v.str();
}

std::string rat_str(const leq::ExactRational& r) {
    leq::ExactInt num = boost::multiprecision::numerator(r);
    leq::ExactInt den = boost::multiprecision::denominator(r);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

json point_json(const leq::RationalPoint& p) { return json::array({rat_str(p.x), rat_str(p.y)}); }

const char* class_name(const leq::ShapeClass& sc) {
    if (sc.tangential && sc.extangential) return "both";
    if (sc.tangential) return "tangential";
    if (sc.extangential) return "extangential";
    return "neither";
}

json record_json(const leq::CatalogEntry& e, const char* provenance) {
    json j;
    j["vertices"] = json::array({json::array({json_int(e.quad.O.x), json_int(e.quad.O.y)}),
                                 json::array({json_int(e.quad.A.x), json_int(e.quad.A.y)}),
                                 json::array({json_int(e.quad.B.x), json_int(e.quad.B.y)}),
                                 json::array({json_int(e.quad.C.x), json_int(e.quad.C.y)})});
    j["sides"] = json::array(
        {json_int(e.sides.a), json_int(e.sides.b), json_int(e.sides.c), json_int(e.sides.d)});
    j["class"] = class_name(e.shape);
    j["convex"] = e.shape.convex;
    j["kite"] = e.shape.kite;
    j["sigma"] = e.tangential ? json(rat_str(e.tangential->sigma)) : json(nullptr);
    j["tau"] = e.tangential ? json(rat_str(e.tangential->tau)) : json(nullptr);
    j["Sigma"] = e.extangential ? json_int(e.extangential->Sigma) : json(nullptr);
    j["T"] = e.extangential ? json_int(e.extangential->T) : json(nullptr);
    j["incenter"] = e.tangential ? point_json(e.tangential->incenter) : json(nullptr);
    j["excenter"] = e.extangential ? point_json(e.extangential->excenter) : json(nullptr);
    if (e.tangential && e.tangential->lambda)
        j["lambda"] = rat_str(*e.tangential->lambda);
    else if (e.extangential)
        j["lambda"] = rat_str(e.extangential->lambda_e);
    else
        j["lambda"] = nullptr;
    j["provenance"] = provenance;
    return j;
}

void emit(const json& j) { std::cout << j.dump() << "\n"; }

leq::ExactInt default_trial_bound() {
    if (const char* env = std::getenv("LEQ_TRIAL_BOUND")) return leq::ExactInt(env);
    return leq::ExactInt(10000000);
}

int cmd_classify(const std::vector<std::string>& coords) {
    std::array<leq::LatticePoint, 4> pts;
    for (int i = 0; i < 4; ++i) pts[i] = {leq::ExactInt(coords[2 * i]), leq::ExactInt(coords[2 * i + 1])};
    std::optional<leq::LatticeQuad> q = leq::LatticeQuad::make(pts[0], pts[1], pts[2], pts[3]);
    if (!q) {
        if (auto lab = leq::normalize_labeling(pts)) q = lab->quad;
    }
    if (!q) {
        std::cerr << "classify: the points do not form a simple quadrilateral with integral sides\n";
        return 2;
    }
    emit(record_json(leq::make_catalog_entry(*q, leq::Provenance::BruteForce), "classify"));
    return 0;
}

int cmd_enumerate(std::int64_t perimeter_max, const std::string& cls, bool convex, bool concave) {
    leq::SearchBounds b;
    b.perimeter_max = perimeter_max;
    b.safety_cap = 200;
    if (cls == "tangential") b.tangential = true;
    if (cls == "extangential") b.extangential = true;
    if (convex) b.convex = true;
    if (concave) b.convex = false;
    for (const auto& e : leq::brute_force_search(b)) emit(record_json(e, leq::provenance_name(e.provenance)));
    return 0;
}

int cmd_construct(const std::string& case_name, int x, const std::string& u, const std::string& v,
                  const std::string& c) {
    leq::GenCase which = (case_name == "I") ? leq::GenCase::I : leq::GenCase::II;
    leq::DioSolutionGen sol{x, leq::ExactInt(u), leq::ExactInt(v), leq::ExactInt(c)};
    leq::ConstructedTangential ct = leq::construct_tangential(which, sol);
    emit(record_json(leq::make_catalog_entry(ct.quad, leq::Provenance::Diophantine), "diophantine"));
    return 0;
}

int cmd_family(const std::string& id, std::size_t count) {
    static const std::map<std::string, leq::FamilyId> ids = {
        {"k1", leq::FamilyId::K1},
        {"k2", leq::FamilyId::K2},
        {"k3", leq::FamilyId::K3},
        {"k4", leq::FamilyId::K4},
        {"nested", leq::FamilyId::NestedTangential},
        {"extan918", leq::FamilyId::Extan918},
        {"extan4550", leq::FamilyId::Extan4550},
        {"tau3c1", leq::FamilyId::Tau3c1},
        {"tau3c2", leq::FamilyId::Tau3c2},
        {"sigma9", leq::FamilyId::Sigma9},
    };
    auto it = ids.find(id);
    if (it == ids.end()) {
        std::cerr << "family: unknown id '" << id << "'\n";
        return 2;
    }
    for (const auto& m : leq::generate_family(it->second, count))
        emit(record_json(leq::make_catalog_entry(m.quad, leq::Provenance::Family), "family"));
    return 0;
}

int cmd_realize(const std::vector<std::string>& sides, const std::string& cls) {
    leq::RealizeConstraint constraint = leq::RealizeConstraint::Any;
    if (cls == "tangential") constraint = leq::RealizeConstraint::Tangential;
    if (cls == "extangential") constraint = leq::RealizeConstraint::Extangential;
    auto quads = leq::realize_sides(leq::ExactInt(sides[0]), leq::ExactInt(sides[1]),
                                    leq::ExactInt(sides[2]), leq::ExactInt(sides[3]), constraint);
    for (const auto& q : quads) emit(record_json(leq::make_catalog_entry(q, leq::Provenance::BruteForce), "realize"));
    return 0;
}

std::string sides_str(const leq::SideLengths& s) {
    return "(" + s.a.str() + "," + s.b.str() + "," + s.c.str() + "," + s.d.str() + ")";
}

int cmd_verify_corollaries() {
    bool ok = true;

    leq::ConvexTangentialReport diop = leq::classify_convex_tangential();
    std::cout << "convex tangential (diophantine route): " << diop.entries.size() << " quadrilaterals\n";
    for (const auto& e : diop.entries) std::cout << "  sides " << sides_str(e.sides) << "\n";
    if (diop.entries.size() != 6) ok = false;

    leq::SearchBounds all84;
    all84.perimeter_max = 84;
    const auto catalog = leq::brute_force_search(all84);
    std::cout << "catalog at perimeter <= 84: " << catalog.size() << " entries\n";

    std::map<std::array<leq::ExactInt, 8>, const leq::CatalogEntry*> brute_convex_tan;
    for (const auto& e : catalog)
        if (e.shape.tangential && e.shape.convex) brute_convex_tan.emplace(e.key(), &e);
    std::cout << "convex tangential (exhaustive search): " << brute_convex_tan.size() << " quadrilaterals\n";
    if (brute_convex_tan.size() != diop.entries.size()) ok = false;
    for (const auto& e : diop.entries)
        if (!brute_convex_tan.count(e.key())) {
            std::cout << "  MISSING in search: " << sides_str(e.sides) << "\n";
            ok = false;
        }

    leq::SearchBounds concave30;
    concave30.perimeter_max = 30;
    concave30.extangential = true;
    concave30.convex = false;
    concave30.kite = false;
    auto witnesses = leq::brute_force_search(concave30);
    std::cout << "concave extangential non-kites at perimeter <= 30: " << witnesses.size() << "\n";
    if (witnesses.size() != 1) {
        ok = false;
    } else {
        const auto& w = witnesses.front();
        std::cout << "  sides " << sides_str(w.sides) << " vertices (" << w.quad.O.x << "," << w.quad.O.y
                  << "),(" << w.quad.A.x << "," << w.quad.A.y << "),(" << w.quad.B.x << "," << w.quad.B.y
                  << "),(" << w.quad.C.x << "," << w.quad.C.y << ")\n";
        if (!(w.sides == leq::SideLengths{13, 2, 5, 10})) ok = false;
    }

    leq::CatalogReport idrep = leq::verify_catalog(catalog);
    std::cout << "identity suite: " << idrep.entries_checked << " entries, " << idrep.violations.size()
              << " violations\n";
    for (const auto& v : idrep.violations) std::cout << "  entry " << v.entry_index << ": " << v.what << "\n";
    if (!idrep.ok()) ok = false;

    std::cout << (ok ? "verify-corollaries: PASS" : "verify-corollaries: FAIL") << "\n";
    return ok ? 0 : 1;
}

int cmd_open_problem(std::size_t upto, const leq::ExactInt& trial_bound) {
    for (const auto& st : leq::run_pipeline(upto, trial_bound)) {
        json j;
        j["i"] = static_cast<std::int64_t>(st.term.i);
        j["mu"] = json_int(st.term.mu);
        j["M"] = json_int(st.term.M);
        switch (st.screen.kind) {
        case leq::ScreenVerdict::Kind::BadFactor:
            j["screen"] = "bad-factor";
            j["bad_prime"] = json_int(st.screen.bad_prime);
            break;
        case leq::ScreenVerdict::Kind::AllFactorsGood: j["screen"] = "all-factors-good"; break;
        case leq::ScreenVerdict::Kind::Unknown: j["screen"] = "unknown"; break;
        }
        j["wei"] = st.wei ? json(*st.wei == leq::WeiResult::NoSolutionByQuarticProduct ? "no-solution"
                                                                                       : "inconclusive")
                          : json(nullptr);
        j["mollin"] = st.mollin ? json(*st.mollin == leq::MollinResult::NoSolutionByOddPeriod
                                           ? "no-solution"
                                           : "inconclusive")
                                : json(nullptr);
        j["excluded"] = st.excluded;
        j["reason"] = st.reason;
        emit(j);
    }
    return 0;
}

int cmd_verify_giant() {
    leq::GiantReport rep = leq::verify_giant_example();
    auto line = [](const char* what, bool pass) {
        std::cout << what << ": " << (pass ? "PASS" : "FAIL") << "\n";
    };
    line("sides from closed formulas", rep.sides_from_formula);
    line("vertex side lengths match", rep.side_lengths_match);
    line("extangential sum a+b = c+d", rep.extangential_sum);
    line("determinants positive", rep.dets_positive);
    line("equable (area = perimeter)", rep.equable);
    line("(Sigma, T) = (68445, 68450)", rep.sigma_t_match);
    std::cout << "perimeter digits: " << rep.perimeter_digits << "\n";
    std::cout << (rep.ok() ? "verify-giant: PASS" : "verify-giant: FAIL") << "\n";
    return rep.ok() ? 0 : 1;
}

int cmd_pell(const std::string& d, const std::string& n, std::size_t count) {
    leq::PellSpec spec{leq::ExactInt(d), leq::ExactInt(n)};
    for (const auto& s : leq::pell_solutions(spec, count)) std::cout << s.x.str() << " " << s.y.str() << "\n";
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"Lattice equable quadrilateral toolkit"};
    app.require_subcommand(1);

    std::vector<std::string> coords;
    auto* classify = app.add_subcommand("classify", "Classify one quadrilateral given 8 coordinates");
    classify->add_option("coords", coords, "x0 y0 x1 y1 x2 y2 x3 y3")->expected(8)->required();

    std::int64_t perimeter_max = 30;
    std::string enum_class;
    bool flag_convex = false, flag_concave = false;
    auto* enumerate = app.add_subcommand("enumerate", "Exhaustive equable catalog up to a perimeter bound");
    enumerate->add_option("--perimeter-max", perimeter_max, "Maximum perimeter")->required();
    enumerate->add_option("--class", enum_class, "tangential or extangential")
        ->check(CLI::IsMember({"tangential", "extangential"}));
    enumerate->add_flag("--convex", flag_convex, "Convex entries only");
    enumerate->add_flag("--concave", flag_concave, "Concave entries only");

    std::string case_name, opt_u, opt_v, opt_c;
    int opt_x = 2;
    auto* construct = app.add_subcommand("construct", "Tangential quad from a generating-equation solution");
    construct->add_option("--case", case_name, "I or II")->check(CLI::IsMember({"I", "II"}))->required();
    construct->add_option("--x", opt_x, "tau (case I) or sigma (case II), one of 2,3,5,9")
        ->check(CLI::IsMember({2, 3, 5, 9}))
        ->required();
    construct->add_option("--u", opt_u)->required();
    construct->add_option("--v", opt_v)->required();
    construct->add_option("--c", opt_c)->required();

    std::string family_id;
    std::size_t family_count = 4;
    auto* family = app.add_subcommand("family", "Members of a named infinite family");
    family->add_option("id", family_id, "k1 k2 k3 k4 nested extan918 extan4550 tau3c1 tau3c2 sigma9")
        ->required();
    family->add_option("--count", family_count, "Number of members");

    std::vector<std::string> realize_sides_args;
    std::string realize_class;
    auto* realize = app.add_subcommand("realize", "All lattice realizations of given side lengths");
    realize->add_option("sides", realize_sides_args, "a b c d")->expected(4)->required();
    realize->add_option("--class", realize_class, "tangential or extangential")
        ->check(CLI::IsMember({"tangential", "extangential"}));

    auto* verify_cor = app.add_subcommand("verify-corollaries", "Check the classification corollaries");

    std::size_t upto = 6;
    std::string trial_bound_str;
    auto* open_problem = app.add_subcommand("open-problem", "Screening pipeline over the mu chain");
    open_problem->add_option("--upto", upto, "Largest chain index")->required();
    open_problem->add_option("--trial-bound", trial_bound_str, "Trial factorization bound");

    auto* verify_giant = app.add_subcommand("verify-giant", "Verify the 28-digit-perimeter example");

    std::string pell_d, pell_n;
    std::size_t pell_count = 1;
    auto* pell = app.add_subcommand("pell", "Positive solutions of x^2 - D y^2 = N");
    pell->add_option("--d", pell_d)->required();
    pell->add_option("--n", pell_n)->required();
    pell->add_option("--count", pell_count)->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (classify->parsed()) return cmd_classify(coords);
        if (enumerate->parsed()) {
            if (flag_convex && flag_concave) {
                std::cerr << "enumerate: --convex and --concave are mutually exclusive\n";
                return 2;
            }
            return cmd_enumerate(perimeter_max, enum_class, flag_convex, flag_concave);
        }
        if (construct->parsed()) return cmd_construct(case_name, opt_x, opt_u, opt_v, opt_c);
        if (family->parsed()) return cmd_family(family_id, family_count);
        if (realize->parsed()) return cmd_realize(realize_sides_args, realize_class);
        if (verify_cor->parsed()) return cmd_verify_corollaries();
        if (open_problem->parsed()) {
            leq::ExactInt bound =
                trial_bound_str.empty() ? default_trial_bound() : leq::ExactInt(trial_bound_str);
            return cmd_open_problem(upto, bound);
        }
        if (verify_giant->parsed()) return cmd_verify_giant();
        if (pell->parsed()) return cmd_pell(pell_d, pell_n, pell_count);
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    return 2;
}
