// Acceptance gate: one PASS/FAIL line per criterion, with the runtime against its limit.
// Usage: acceptance [--only N] [--expect-fail N,M]
// The exit code is 0 when every failing criterion was listed in --expect-fail.
#include "dhb/error.hpp"
#include "dhb/report.hpp"
#include "helpers.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iomanip>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace dhb;

namespace {

struct Outcome {
    bool pass = true;
    std::vector<std::string> notes;  // printed under the verdict line

    void require(bool ok, const std::string& what) {
        if (!ok) {
            pass = false;
            notes.push_back("failed: " + what);
        }
    }
    void note(const std::string& s) { notes.push_back(s); }
};

template <class T>
std::string str(const T& v) {
    std::ostringstream os;
    os << v;
    return os.str();
}

std::string join_list(const std::vector<std::size_t>& v) {
    std::string s;
    for (std::size_t x : v) s += (s.empty() ? "" : ",") + std::to_string(x);
    return s;
}

bigint half_factorial(std::size_t n) {
    bigint f = 1;
    for (std::size_t i = 3; i <= n; ++i) f *= i;
    return f;
}

std::string run_command(const std::string& cmd) {
    std::string out;
    FILE* pipe = popen(cmd.c_str(), "r");
    if (!pipe) throw std::runtime_error("cannot run " + cmd);
    char buf[1 << 16];
    std::size_t got;
    while ((got = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, got);
    int status = pclose(pipe);
    if (status != 0) throw std::runtime_error(cmd + " exited with status " + std::to_string(status));
    return out;
}

const std::size_t least_degree_ref[14] = {294, 589, 394, 367, 396, 439, 510, 329, 540, 457, 430, 459, 432, 447};
const unsigned least_prime_ref[14] = {17, 43, 17, 17, 17, 43, 23, 17, 83, 17, 17, 17, 47, 23};
const std::map<int, std::size_t> small_degree = {{0, 252}, {1, 267}, {2, 352},  {3, 325},  {5, 397},  {7, 287},
                                                 {8, 246}, {9, 345}, {11, 375}, {12, 390}, {13, 405}};
const std::map<int, std::size_t> shortcut_degree = {{1, 547}, {6, 468}, {9, 415}, {10, 388}, {11, 417}};

// 1 ----------------------------------------------------------------------------------------
Outcome atlas_conformance() {
    Outcome o;
    AtlasReport r = validate_atlas();
    o.require(r.entries.size() == 14, "14 atlas entries");
    for (const char* f : {"degree", "t_parity", "fixed_points", "handles", "w_cycles", "genus", "group_order"})
        o.require(r.field_ok(f), std::string("field ") + f);
    o.require(group_order({basic_map(BasicMapId::A).x(), basic_map(BasicMapId::A).y()}) == 1092, "|<x,y>| = 1092 for A");

    bool bold_subset = true;
    std::size_t exact = 0;
    for (auto id : all_basic_maps) {
        CycleType found;
        for (const auto& u : useful_cycles(basic_map(id))) found.push_back(u.length);
        std::sort(found.begin(), found.end());
        const CycleType& ref = reference_row(id).useful_lengths;
        bold_subset = bold_subset && std::includes(found.begin(), found.end(), ref.begin(), ref.end());
        if (std::set<std::size_t>(found.begin(), found.end()) == std::set<std::size_t>(ref.begin(), ref.end())) ++exact;
    }
    o.note("reference useful lengths contained in the computed ones on all 14 maps: " +
           std::string(bold_subset ? "yes" : "no"));
    o.note("maps whose computed useful lengths equal the reference as a set: " + std::to_string(exact) + "/14");
    o.require(r.field_ok("useful"), "useful lengths equal the reference column on every map");
    return o;
}

// 2 ----------------------------------------------------------------------------------------
Outcome composition_laws() {
    Outcome o;
    Assembly g = eval_expr("G(1)G");
    o.require(w_cycles(g.map).type() == CycleType{1, 1, 1, 1, 2, 13, 13, 13, 13, 26}, "G(1)G w-cycles 1^4 2 13^4 26");
    Assembly lm = eval_expr("L(2)M");
    o.require(w_cycles(lm.map).type() == CycleType{1, 12, 14, 26, 42, 57, 58}, "L(2)M w-cycles");
    o.require(prime_set(lm.map) == std::set<unsigned>{2, 3, 7, 13, 19, 29}, "L(2)M prime set");

    std::mt19937_64 rng(2024);
    auto pick = [&](std::size_t size) { return std::uniform_int_distribution<std::size_t>(0, size - 1)(rng); };
    std::size_t joins = 0, self_joins = 0, bad = 0;
    for (int seq = 0; seq < 1000; ++seq) {
        HurwitzMap cur = basic_map(all_basic_maps[pick(14)]);
        int steps = 1 + static_cast<int>(pick(5));
        for (int s = 0; s < steps; ++s) {
            std::vector<int> kinds;
            for (int k = 1; k <= 3; ++k)
                if (!testing::symmetric_handles(cur, k).empty()) kinds.push_back(k);
            if (kinds.empty()) break;
            int k = kinds[pick(kinds.size())];
            auto hs = testing::symmetric_handles(cur, k);
            FixedPointVector v = fixed_point_vector(cur);
            long genus0 = genus(cur), th = tau(cur, cur.x()) / 2;
            if (hs.size() >= 2 && pick(4) == 0) {
                HurwitzMap r = self_join(cur, hs[0], hs[1]);
                bool ok = fixed_point_vector(r) == v - FixedPointVector{4, 0, 0} && genus(r) == genus0 + 1 &&
                          tau(r, r.x()) / 2 == th + 1 && r.degree() == cur.degree();
                bad += !ok;
                ++self_joins;
                cur = r;
            } else {
                std::vector<BasicMapId> partners;
                for (auto id : all_basic_maps)
                    if (!testing::symmetric_handles(basic_map(id), k).empty()) partners.push_back(id);
                const HurwitzMap& d2 = basic_map(partners[pick(partners.size())]);
                auto hs2 = testing::symmetric_handles(d2, k);
                Handle h = hs[pick(hs.size())], h2 = hs2[pick(hs2.size())];
                HurwitzMap r = k_compose(cur, h, d2, h2);
                bool ok = fixed_point_vector(r) == v + fixed_point_vector(d2) - FixedPointVector{4, 0, 0} &&
                          genus(r) == genus0 + genus(d2) && tau(r, r.x()) / 2 == th + tau(d2, d2.x()) / 2 + 1 &&
                          merge_law_check(cur, h, d2, h2, r).ok;
                bad += !ok;
                ++joins;
                cur = r;
            }
        }
    }
    o.note("1000 sequences: " + std::to_string(joins) + " joins, " + std::to_string(self_joins) + " self-joins");
    o.require(bad == 0, std::to_string(bad) + " joins broke an additivity law");
    return o;
}

// 3 ----------------------------------------------------------------------------------------
Outcome core_conformance() {
    Outcome o;
    for (int r = 0; r < 14; ++r) {
        const CoreRecipe& c = core_recipe(r);
        Assembly v = core_map(r);
        std::string tag = "r = " + std::to_string(r);
        o.require(v.degree() == c.degree, tag + ": degree");
        o.require(w_cycles(v.map).type() == c.w_cycles, tag + ": w cycle type");
        Handle h = attach_handle(v);
        o.require(w_cycles(v.map).length_at(h.b) == c.l, tag + ": l at the free handle");
        Assembly u = stock_U(3);
        Assembly j = join(u, stock_handle(u), v, h);
        o.require(w_cycles(j.map).length_at(static_cast<point>(u.degree() + h.b)) == c.l + 13, tag + ": l' = 13 + l");
    }
    return o;
}

// 4 ----------------------------------------------------------------------------------------
Outcome minimal_certificates() {
    Outcome o;
    json doc = json::parse(run_command(std::string(DHB_CLI_PATH) + " certify --all-minimal"));
    o.require(doc.at("pass") == true, "report pass flag");
    const json& certs = doc.at("result").at("certificates");
    o.require(certs.size() == 14, "14 certificates");
    std::vector<std::size_t> degrees;
    for (std::size_t r = 0; r < certs.size() && r < 14; ++r) {
        const json& c = certs[r];
        std::string tag = "r = " + std::to_string(r);
        degrees.push_back(c.at("plan").at("degree").get<std::size_t>());
        o.require(degrees.back() == least_degree_ref[r], tag + ": degree");
        o.require(c.at("plan").at("prime") == least_prime_ref[r], tag + ": certifying prime");
        o.require(c.at("jordan1").at("failures").empty() && c.at("jordan2").at("failures").empty(),
                  tag + ": all generation hypotheses");
        o.require(c.at("beauville").at("ok") == true, tag + ": beauville evidence");
        o.require(verify_certificate(c).empty(), tag + ": certificate re-verifies from its permutations");
    }
    o.note("degrees " + join_list(degrees));
    return o;
}

// 5 ----------------------------------------------------------------------------------------
Outcome small_cases() {
    Outcome o;
    for (const auto& [r, n] : small_degree) {
        DHBCertificate c = certify_dhb(make_plan(r, 0, Variant::small_n));
        o.require(c.ok() && c.plan.degree == n, "small case r = " + std::to_string(r) + " at n = " + std::to_string(n));
    }
    for (int r : {4, 6, 10}) {
        try {
            make_plan(r, 0, Variant::small_n);
            o.require(false, "small case r = " + std::to_string(r) + " must be rejected");
        } catch (const check_error& e) {
            std::string msg = e.what();
            o.require(msg.find("merged at the marker join") != std::string::npos && msg.find("divisible by the certifying prime") != std::string::npos,
                      "rejection reason for r = " + std::to_string(r));
            o.note(msg);
        }
    }
    for (const auto& [r, n] : shortcut_degree) {
        DHBCertificate c = certify_dhb(make_plan(r, 3, Variant::s3_shortcut));
        o.require(c.ok() && c.plan.degree == n, "shortcut r = " + std::to_string(r) + " at n = " + std::to_string(n));
    }
    return o;
}

// 6 ----------------------------------------------------------------------------------------
Outcome generation_oracle() {
    Outcome o;
    std::vector<Plan> plans;
    for (int r = 0; r < 14; ++r) plans.push_back(minimal_plan(r));
    for (const auto& [r, n] : small_degree) plans.push_back(make_plan(r, 0, Variant::small_n));
    for (const auto& [r, n] : shortcut_degree) plans.push_back(make_plan(r, 3, Variant::s3_shortcut));
    std::vector<std::size_t> checked;
    for (const Plan& p : plans) {
        if (p.degree > 400) continue;
        MapPair pair = build_pair(p);
        bigint target = half_factorial(p.degree);
        for (const Assembly* w : {&pair.w1, &pair.w2})
            o.require(group_order({w->map.x(), w->map.y()}) == target, "|<x,y>| = n!/2 at n = " + std::to_string(p.degree));
        checked.push_back(p.degree);
    }
    std::sort(checked.begin(), checked.end());
    o.note(std::to_string(checked.size()) + " pairs: n = " + join_list(checked));
    return o;
}

// 7 ----------------------------------------------------------------------------------------
Outcome least_degree() {
    Outcome o;
    MinDegreeResult r = min_degree_search();
    o.require(r.n == 168, "least degree 168 (got " + std::to_string(r.n) + ")");
    auto has = [&](SignatureTuple a, SignatureTuple b) {
        return std::any_of(r.witnesses.begin(), r.witnesses.end(), [&](const auto& w) {
            return (w.first == a && w.second == b) || (w.first == b && w.second == a);
        });
    };
    o.require(has({0, 4, 6, 0}, {0, 0, 0, 7}), "witness (0;4,6,0)/(0;0,0,7)");
    o.require(has({0, 8, 3, 0}, {0, 0, 0, 7}), "witness (0;8,3,0)/(0;0,0,7)");
    o.note(std::to_string(r.witnesses.size()) + " witness pairs");
    return o;
}

// 8 ----------------------------------------------------------------------------------------
Outcome double_cover() {
    Outcome o;
    std::map<std::string, int> branches;
    for (int r = 0; r < 14; ++r) {
        CoverCertificate c = certify_cover(minimal_plan(r));
        std::string tag = "r = " + std::to_string(r);
        o.require(c.ok(), tag + ": cover certificate");
        o.require(c.tau1 % 4 == 0 && c.tau2 % 4 == 0, tag + ": transposition counts divisible by 4");
        FixedPointVector expected = c.branch == "E+2A" ? FixedPointVector{8, 3, -7} : FixedPointVector{8, 6, -7};
        o.require(c.branch == "E+2A" || c.branch == "internal join", tag + ": known branch");
        o.require(c.v_difference == expected, tag + ": v-difference for branch " + c.branch);
        ++branches[c.branch];
    }
    o.require(half_tau(x_map(1).map) == 51, "tau/2 of the first marker map is 51");
    o.require(half_tau(x_map(2).map) == 52, "tau/2 of the second marker map is 52");
    for (const auto& [b, k] : branches) o.note(b + ": " + std::to_string(k) + " residues");
    return o;
}

// 9 ----------------------------------------------------------------------------------------
Outcome frobenius_oracle() {
    Outcome o;
    const std::set<unsigned> orders = {1, 2, 3, 5, 7};
    const HurwitzMap& a = basic_map(BasicMapId::A);
    std::size_t triples = 0;
    double worst = 0;
    for (const auto& name : bundled_table_names()) {
        CharacterTable t = bundled_table(name);
        double d = orthogonality_defect(t);
        worst = std::max(worst, d);
        o.require(d <= 1e-9, name + ": orthogonality within 1e-9");
        // The order-1092 table is checked inside the monodromy group of map A itself.
        std::vector<Perm> gens = t.order == 1092 ? std::vector<Perm>{a.x(), a.y()} : t.generators;
        FiniteGroup g(gens);
        o.require(bigint(g.size()) == t.order, name + ": group order");
        for (const auto& X : t.classes)
            for (const auto& Y : t.classes)
                for (const auto& Z : t.classes) {
                    if (!orders.count(X.order) || !orders.count(Y.order) || !orders.count(Z.order)) continue;
                    ++triples;
                    bigint f = frobenius_count(t, X.name, Y.name, Z.name);
                    bigint b = g.count(*X.rep, *Y.rep, *Z.rep);
                    o.require(f == b, name + " (" + X.name + "," + Y.name + "," + Z.name + "): " + str(f) + " vs " + str(b));
                }
    }
    o.note(std::to_string(triples) + " class triples; worst orthogonality defect " + str(worst));
    return o;
}

// 10 ---------------------------------------------------------------------------------------
Outcome linear_lift() {
    Outcome o;
    std::size_t done = 0;
    for (int r = 0; r < 14; ++r)
        for (unsigned p : {2u, 3u, 5u}) {
            std::string tag = "r = " + std::to_string(r) + ", p = " + std::to_string(p);
            try {
                LiftReport rep = lift_pair(minimal_plan(r), p, least_primitive_root(p));
                for (const LinearTriple* t : {&rep.triple1, &rep.triple2})
                    o.require(t->det_x == 1 && t->det_y == 1 && t->det_z == 1, tag + ": determinants");
                o.require(rep.dims.ok(), tag + ": distinct fixed-space dimensions at every position");
                ++done;
            } catch (const check_error& e) {
                o.require(false, tag + ": " + e.what());
            }
        }
    o.note(std::to_string(done) + " lifted pairs");
    return o;
}

// 11 ---------------------------------------------------------------------------------------
struct Invariants {
    FixedPointVector v;
    long genus, tau_x;
    CycleType w, useful;
    std::array<std::size_t, 3> handles;
    std::set<unsigned> primes;
    bool operator==(const Invariants&) const = default;
};

Invariants invariants(const HurwitzMap& m) {
    Invariants i{fixed_point_vector(m), genus(m), tau(m, m.x()), w_cycles(m).type(), {}, {}, prime_set(m)};
    for (const auto& u : useful_cycles(m)) i.useful.push_back(u.length);
    std::sort(i.useful.begin(), i.useful.end());
    for (int k = 1; k <= 3; ++k) i.handles[k - 1] = find_handles(m, k).size();
    return i;
}

Outcome property_suite() {
    Outcome o;
    std::size_t pairs = 0;
    for (std::size_t n = 1; n <= 7; ++n) {
        auto cls = testing::an_classes(n);
        std::vector<std::pair<Perm, int>> elems(cls.begin(), cls.end());
        for (const auto& [p, cp] : elems)
            for (const auto& [q, cq] : elems) {
                ++pairs;
                if (an_conjugate(p, q) != (cp == cq)) {
                    o.require(false, "an_conjugate " + to_cycles(p) + " vs " + to_cycles(q));
                    return o;
                }
            }
    }
    o.note(std::to_string(pairs) + " even pairs with n <= 7 agree with brute-force conjugacy");

    std::size_t joins = 0, lost = 0;
    JoinObserver obs = [&](const JoinEvent& ev) {
        ++joins;
        lost += !useful_persists(ev);
    };
    for (int r = 0; r < 14; ++r) {
        build_pair(minimal_plan(r), &obs);
        certify_cover(minimal_plan(r), &obs);
    }
    for (const auto& [r, n] : small_degree) build_pair(make_plan(r, 0, Variant::small_n), &obs);
    for (const auto& [r, n] : shortcut_degree) build_pair(make_plan(r, 3, Variant::s3_shortcut), &obs);
    o.require(lost == 0, std::to_string(lost) + " joins lost a useful cycle");
    o.note(std::to_string(joins) + " construction joins keep every useful cycle");

    std::mt19937_64 rng(77);
    std::vector<HurwitzMap> maps;
    for (auto id : all_basic_maps) maps.push_back(basic_map(id));
    for (int r : {0, 7, 8}) maps.push_back(build_pair(minimal_plan(r)).w1.map);
    std::size_t relabelings = 0;
    for (const HurwitzMap& m : maps) {
        Invariants base = invariants(m);
        for (int i = 0; i < 5; ++i) {
            HurwitzMap r = testing::relabel(m, testing::random_perm(m.degree(), rng));
            o.require(invariants(r) == base, "invariants change under relabeling (degree " + std::to_string(m.degree()) + ")");
            ++relabelings;
        }
    }
    const HurwitzMap& a = basic_map(BasicMapId::A);
    HurwitzMap ra = testing::relabel(a, testing::random_perm(a.degree(), rng));
    o.require(group_order({ra.x(), ra.y()}) == 1092, "group order of a relabeled A");
    o.note(std::to_string(relabelings) + " random relabelings preserve all invariants");
    return o;
}

struct Criterion {
    int id;
    const char* title;
    double limit_s;
    std::function<Outcome()> run;
};

std::set<int> parse_ids(const std::string& s) {
    std::set<int> ids;
    std::stringstream ss(s);
    std::string item;
    while (std::getline(ss, item, ',')) ids.insert(std::stoi(item));
    return ids;
}

}  // namespace

int main(int argc, char** argv) {
    std::set<int> only, expected_fail;
    for (int i = 1; i < argc; ++i) {
        std::string arg = argv[i];
        if ((arg == "--only" || arg == "--expect-fail") && i + 1 < argc)
            (arg == "--only" ? only : expected_fail) = parse_ids(argv[++i]);
        else {
            std::cerr << "usage: acceptance [--only N,..] [--expect-fail N,..]\n";
            return 2;
        }
    }

    const std::vector<Criterion> criteria = {
        {1, "atlas conformance", 1, atlas_conformance},
        {2, "composition laws", 10, composition_laws},
        {3, "core maps and stock join", 5, core_conformance},
        {4, "certificates at the least degrees (CLI)", 60, minimal_certificates},
        {5, "small cases, rejections, shortcuts", 60, small_cases},
        {6, "stabilizer-chain order n!/2", 120, generation_oracle},
        {7, "least degree 168", 1, least_degree},
        {8, "double-cover conditions", 60, double_cover},
        {9, "character formula vs enumeration", 120, frobenius_oracle},
        {10, "linear lift over F_2, F_3, F_5", 120, linear_lift},
        {11, "property suite", 120, property_suite},
    };

    std::vector<int> failed;
    for (const auto& c : criteria) {
        if (!only.empty() && !only.count(c.id)) continue;
        auto start = std::chrono::steady_clock::now();
        Outcome o;
        try {
            o = c.run();
        } catch (const std::exception& e) {
            o.require(false, std::string("exception: ") + e.what());
        }
        double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        o.require(secs < c.limit_s, "runtime limit " + str(c.limit_s) + " s");
        std::cout << "criterion " << std::setw(2) << c.id << ": " << (o.pass ? "PASS" : "FAIL") << "  " << c.title << "  ("
                  << std::fixed << std::setprecision(2) << secs << " s, limit " << std::setprecision(0) << c.limit_s
                  << " s)";
        if (!o.pass && expected_fail.count(c.id)) std::cout << "  [expected]";
        std::cout << "\n";
        for (const auto& n : o.notes) std::cout << "    " << n << "\n";
        std::cout.flush();
        if (!o.pass) failed.push_back(c.id);
    }

    bool unexpected = std::any_of(failed.begin(), failed.end(), [&](int id) { return !expected_fail.count(id); });
    for (int id : expected_fail)
        if (std::find(failed.begin(), failed.end(), id) == failed.end() && (only.empty() || only.count(id)))
            std::cout << "note: criterion " << id << " was expected to fail but passed\n";
    std::cout << (failed.empty() ? "all criteria pass" : std::to_string(failed.size()) + " criteria fail") << "\n";
    return unexpected ? 1 : 0;
}
