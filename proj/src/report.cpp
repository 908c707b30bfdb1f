#include "dhb/report.hpp"

#include "dhb/error.hpp"

#include <sstream>

namespace dhb {

namespace {

json cycle_type_json(const CycleType& ct) { return format_cycle_type(ct); }

}  // namespace

json to_json(const FixedPointVector& v) { return json::array({v.alpha, v.beta, v.gamma}); }

json to_json(const Plan& p) {
    return {{"r", p.r},           {"s", p.s},           {"variant", to_string(p.variant)},
            {"core_r", p.core_r}, {"stock_s", p.stock_s}, {"degree", p.degree},
            {"prime", p.prime}};
}

json to_json(const HurwitzMap& m) {
    return {{"degree", m.degree()}, {"x", to_cycles(m.x())}, {"y", to_cycles(m.y())}, {"t", to_cycles(m.t())}};
}

json summary_json(const HurwitzMap& m) {
    json handles = json::array();
    for (int k = 1; k <= 3; ++k) handles.push_back(find_handles(m, k).size());
    json primes = json::array();
    for (unsigned q : prime_set(m)) primes.push_back(q);
    return {{"degree", m.degree()},
            {"fixed_points", to_json(fixed_point_vector(m))},
            {"genus", genus(m)},
            {"w_cycles", cycle_type_json(w_cycles(m).type())},
            {"handles", handles},
            {"primes", primes}};
}

json to_json(const Assembly& a) {
    json parts = json::array();
    for (const auto& p : a.parts)
        parts.push_back({{"map", p.name}, {"offset", p.offset}, {"size", p.size}, {"role", p.role}});
    return {{"summary", summary_json(a.map)}, {"parts", parts}, {"map", to_json(a.map)}};
}

json to_json(const JordanCertificate& c) {
    json j{{"n", c.n},
           {"p", c.p},
           {"transitive", c.transitive},
           {"w_cycles", cycle_type_json(c.w_type)},
           {"failures", c.failures},
           {"ok", c.ok()}};
    if (c.cycle) j["cycle"] = *c.cycle;
    if (c.ok()) {
        j["x_witness"] = c.x_witness;
        j["y_witness"] = c.y_witness;
        j["conclusion"] = "<x,y> = A_" + std::to_string(c.n);
    }
    return j;
}

json to_json(const BeauvilleEvidence& e) {
    json pos = json::array();
    for (const auto& p : e.positions)
        pos.push_back({{"position", p.position},
                       {"type1", cycle_type_json(p.type1)},
                       {"type2", cycle_type_json(p.type2)},
                       {"method", p.method},
                       {"ok", p.ok}});
    return {{"positions", pos}, {"v1", to_json(e.v1)}, {"v2", to_json(e.v2)}, {"failures", e.failures}, {"ok", e.ok()}};
}

json to_json(const DHBCertificate& c) {
    return {{"schema", certificate_schema},
            {"kind", "dhb"},
            {"plan", to_json(c.plan)},
            {"w1", to_json(c.pair.w1)},
            {"w2", to_json(c.pair.w2)},
            {"jordan1", to_json(c.jordan1)},
            {"jordan2", to_json(c.jordan2)},
            {"beauville", to_json(c.beauville)},
            {"v_difference", to_json(c.v_difference)},
            {"ok", c.ok()}};
}

json to_json(const CoverCertificate& c) {
    return {{"schema", certificate_schema},
            {"kind", "cover"},
            {"plan", to_json(c.base.plan)},
            {"base", {{"degree", c.base.plan.degree}, {"ok", c.base.ok()}, {"v_difference", to_json(c.base.v_difference)}}},
            {"branch", c.branch},
            {"extra_g", c.extra_g},
            {"degree", c.degree},
            {"w1", to_json(c.pair.w1)},
            {"w2", to_json(c.pair.w2)},
            {"tau1", c.tau1},
            {"tau2", c.tau2},
            {"jordan1", to_json(c.jordan1)},
            {"jordan2", to_json(c.jordan2)},
            {"beauville", to_json(c.beauville)},
            {"v_difference", to_json(c.v_difference)},
            {"failures", c.failures},
            {"ok", c.ok()}};
}

json to_json(const MinDegreeResult& r, const SearchBounds& b) {
    auto sig = [](const SignatureTuple& s) {
        return json{{"g", s.g}, {"alpha", s.alpha}, {"beta", s.beta}, {"gamma", s.gamma}};
    };
    json w = json::array();
    for (const auto& [s1, s2] : r.witnesses) w.push_back(json::array({sig(s1), sig(s2)}));
    return {{"n", r.n},
            {"bounds", {{"g_max", b.g_max}, {"alpha_max", b.alpha_max}, {"beta_max", b.beta_max}, {"gamma_max", b.gamma_max}}},
            {"witnesses", w}};
}

json to_json(const AtlasReport& r) {
    json maps = json::array();
    for (const auto& e : r.entries) {
        json fields = json::array();
        for (const auto& f : e.fields)
            fields.push_back({{"field", f.field}, {"expected", f.expected}, {"observed", f.observed}, {"ok", f.ok}});
        maps.push_back({{"map", std::string(1, letter(e.id))}, {"fields", fields}, {"ok", e.ok()}});
    }
    return {{"maps", maps}, {"ok", r.ok()}};
}

json to_json(const LiftReport& r) {
    auto triple = [](const LinearTriple& t) {
        return json{{"points", {t.points.a, t.points.b, t.points.a2, t.points.b2}},
                    {"det", {{"x", t.det_x}, {"y", t.det_y}, {"z", t.det_z}}},
                    {"relations", {"x'^2 = 1", "x' xi = xi x'", "x^2 = 1", "y^3 = 1", "(xy)^7 = 1", "det = 1"}}};
    };
    json pos = json::array();
    for (const auto& d : r.dims.positions)
        pos.push_back({{"position", d.position}, {"dim1", d.dim1}, {"dim2", d.dim2}, {"ok", d.ok}});
    return {{"plan", to_json(r.plan)},
            {"p", r.p},
            {"t1", r.t1},
            {"degree", r.degree},
            {"triple1", triple(r.triple1)},
            {"triple2", triple(r.triple2)},
            {"fixed_space_dims", pos},
            {"cycle_counts",
             {{"xi1", r.dims.xi_cycles1}, {"xi2", r.dims.xi_cycles2}, {"xi_y1", r.dims.xiy_cycles1},
              {"xi_y2", r.dims.xiy_cycles2}}},
            {"failures", r.dims.failures},
            {"note", "relations and fixed-space dimensions only; generation of SL_n(p) is not certified"},
            {"ok", r.ok()}};
}

HurwitzMap map_from_json(const json& j) {
    try {
        std::size_t n = j.at("degree").get<std::size_t>();
        return HurwitzMap(parse_cycles(j.at("x").get<std::string>(), n), parse_cycles(j.at("y").get<std::string>(), n),
                          parse_cycles(j.at("t").get<std::string>(), n));
    } catch (const json::exception& e) {
        throw usage_error(std::string("malformed map in report: ") + e.what());
    }
}

std::vector<std::string> verify_certificate(const json& cert) {
    std::vector<std::string> problems;
    try {
        if (cert.value("schema", "") != certificate_schema) problems.push_back("unknown certificate schema");
        HurwitzMap m1 = map_from_json(cert.at("w1").at("map"));
        HurwitzMap m2 = map_from_json(cert.at("w2").at("map"));
        unsigned p = cert.at("plan").at("prime").get<unsigned>();
        auto check = [&](const char* key, const json& recomputed) {
            if (cert.at(key) != recomputed) problems.push_back(std::string(key) + " does not re-verify");
        };
        check("jordan1", to_json(jordan_certify(m1, p)));
        check("jordan2", to_json(jordan_certify(m2, p)));
        BeauvilleEvidence b = beauville_check(m1, m2);
        check("beauville", to_json(b));
        check("v_difference", to_json(b.v1 - b.v2));
        if (cert.at("kind") == "cover") {
            if (cert.at("tau1") != tau(m1, m1.x()) || cert.at("tau2") != tau(m2, m2.x()))
                problems.push_back("tau values do not re-verify");
            if (tau(m1, m1.x()) % 4 != 0 || tau(m2, m2.x()) % 4 != 0) problems.push_back("tau not divisible by 4");
        }
        bool ok = cert.at("ok").get<bool>();
        bool again = jordan_certify(m1, p).ok() && jordan_certify(m2, p).ok() && b.ok();
        if (ok && !again) problems.push_back("certificate claims success but the evidence fails");
    } catch (const json::exception& e) {
        problems.push_back(std::string("malformed certificate: ") + e.what());
    } catch (const std::exception& e) {
        problems.push_back(e.what());
    }
    return problems;
}

json make_report(const std::string& command, const json& input, const json& result, bool pass) {
    return {{"schema", report_schema}, {"command", command}, {"input", input}, {"result", result}, {"pass", pass}};
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

}  // namespace dhb
