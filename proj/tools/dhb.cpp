// dhb: construct and certify (2,3,7) generating pairs of alternating groups.
#include "dhb/error.hpp"
#include "dhb/report.hpp"

#include <CLI11.hpp>

#include <atomic>
#include <exception>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <optional>
#include <sstream>
#include <thread>

using namespace dhb;

namespace {

struct PlanArgs {
    std::optional<int> r, s;
    std::optional<std::string> variant;
    bool all_minimal = false;

    void add_to(CLI::App* app, bool allow_all) {
        app->add_option("--r", r, "residue n mod 14")->check(CLI::Range(0, 13));
        app->add_option("--s", s, "stock parameter (default 3, or 0 for small_n)");
        app->add_option("--variant", variant,
                        "standard, shifted, r1_special, r8_special, small_n or s3_shortcut (default: by residue)");
        if (allow_all) app->add_flag("--all-minimal", all_minimal, "every residue class with its smallest stock");
    }

    Plan plan() const {
        if (!r) throw usage_error("--r is required");
        Variant v = variant ? parse_variant(*variant) : default_variant(*r);
        int stock = s ? *s : (v == Variant::small_n ? 0 : 3);
        return make_plan(*r, stock, v);
    }

    std::vector<Plan> plans() const {
        if (all_minimal) {
            if (r || s || variant) throw usage_error("--all-minimal takes no --r, --s or --variant");
            std::vector<Plan> out;
            for (int i = 0; i < 14; ++i) out.push_back(minimal_plan(i));
            return out;
        }
        return {plan()};
    }

    json input() const {
        json j = json::object();
        if (all_minimal) j["all_minimal"] = true;
        if (r) j["r"] = *r;
        if (s) j["s"] = *s;
        if (variant) j["variant"] = *variant;
        return j;
    }
};

// Runs fn(i) for i < count on up to `jobs` threads; results keep index order.
std::vector<json> run_parallel(std::size_t count, unsigned jobs, const std::function<json(std::size_t)>& fn) {
    std::vector<json> out(count);
    std::vector<std::exception_ptr> errors(count);
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (std::size_t i; (i = next++) < count;) {
            try {
                out[i] = fn(i);
            } catch (...) {
                errors[i] = std::current_exception();
            }
        }
    };
    std::vector<std::thread> pool;
    for (unsigned t = 1; t < std::max(1u, jobs); ++t) pool.emplace_back(worker);
    worker();
    for (auto& t : pool) t.join();
    for (auto& e : errors)
        if (e) std::rethrow_exception(e);
    return out;
}

bool all_ok(const std::vector<json>& docs) {
    return std::all_of(docs.begin(), docs.end(), [](const json& d) { return d.at("ok").get<bool>(); });
}

void report_failures(const json& doc) {
    for (const char* key : {"jordan1", "jordan2", "beauville"})
        if (doc.contains(key))
            for (const auto& f : doc[key]["failures"]) std::cerr << "check failed: " << key << ": " << f.get<std::string>() << "\n";
    if (doc.contains("failures"))
        for (const auto& f : doc["failures"]) std::cerr << "check failed: " << f.get<std::string>() << "\n";
}

bool order_oracle(const HurwitzMap& m) {
    bigint half = 1;
    for (std::size_t i = 3; i <= m.degree(); ++i) half *= i;
    return group_order({m.x(), m.y()}) == half;
}

std::string read_file(const std::string& path) {
    std::ifstream f(path);
    if (!f) throw usage_error("cannot read '" + path + "'");
    std::stringstream ss;
    ss << f.rdbuf();
    return ss.str();
}

std::vector<std::string> split_commas(const std::string& s) {
    std::vector<std::string> out;
    std::stringstream ss(s);
    for (std::string item; std::getline(ss, item, ',');) out.push_back(item);
    return out;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Construct and certify doubly Hurwitz Beauville pairs for alternating groups"};
    app.require_subcommand(1);
    std::string out_path;
    unsigned jobs = 1;
    app.add_option("--out", out_path, "write the report to FILE instead of standard output");
    app.add_option("--jobs", jobs, "threads for independent plans")->check(CLI::Range(1u, 256u));

    auto* atlas = app.add_subcommand("atlas", "basic map atlas");
    atlas->require_subcommand(1);
    auto* atlas_validate = atlas->add_subcommand("validate", "recompute every reference column and compare");
    auto* atlas_export = atlas->add_subcommand("export", "write basic maps in the map file format");
    std::string export_map, export_dir;
    atlas_export->add_option("map", export_map, "map letter A..N (default: all, needs --dir)");
    atlas_export->add_option("--dir", export_dir, "directory for <letter>.map files");

    auto* compose_cmd = app.add_subcommand("compose", "evaluate a composition expression such as \"L(2)M\"");
    std::string expr;
    compose_cmd->add_option("expr", expr, "expression")->required();

    PlanArgs construct_args, certify_args, cover_args, lift_args;
    auto* construct_cmd = app.add_subcommand("construct", "build the two maps of a plan");
    construct_args.add_to(construct_cmd, false);

    auto* certify_cmd = app.add_subcommand("certify", "build and certify a pair");
    certify_args.add_to(certify_cmd, true);
    bool oracle = false;
    std::size_t oracle_cap = 400;
    certify_cmd->add_flag("--oracle", oracle, "also compute |<x,y>| by a stabilizer chain (n up to the cap)");
    certify_cmd->add_option("--oracle-cap", oracle_cap, "largest degree for the order oracle");

    auto* cover_cmd = app.add_subcommand("cover", "adjust a pair so both involutions lift to the double cover");
    cover_args.add_to(cover_cmd, true);

    auto* min_cmd = app.add_subcommand("min-degree", "least degree admitting two compatible signatures");
    SearchBounds bounds;
    std::optional<long> count_max;
    min_cmd->add_option("--g-max", bounds.g_max, "largest genus");
    min_cmd->add_option("--alpha-max", bounds.alpha_max, "largest fixed-point count of x");
    min_cmd->add_option("--beta-max", bounds.beta_max, "largest fixed-point count of y");
    min_cmd->add_option("--gamma-max", bounds.gamma_max, "largest fixed-point count of z");
    min_cmd->add_option("--count-max", count_max, "sets all three fixed-point bounds");

    auto* frob_cmd = app.add_subcommand("frobenius", "structure constant from a character table");
    std::string table_arg, classes_arg;
    bool brute = false;
    frob_cmd->add_option("--table", table_arg, "table file, or a bundled name (S3, S4, A4, A5, L2_13)")->required();
    frob_cmd->add_option("--classes", classes_arg, "X,Y,Z")->required();
    frob_cmd->add_flag("--brute", brute, "cross-check by enumerating the group");

    auto* lift_cmd = app.add_subcommand("lift", "lift a pair to SL_n(p) and compare fixed spaces");
    lift_args.add_to(lift_cmd, false);
    unsigned p = 0;
    std::optional<residue> t1;
    lift_cmd->add_option("--p", p, "prime")->required();
    lift_cmd->add_option("--t1", t1, "primitive root mod p (default: the least one)");

    auto* verify_cmd = app.add_subcommand("verify", "re-check a certify or cover report from its embedded maps");
    std::string verify_path;
    verify_cmd->add_option("report", verify_path, "report file")->required();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json report;
        std::string text_out;  // plain-text output (atlas export)
        if (*atlas_validate) {
            AtlasReport r = validate_atlas();
            report = make_report("atlas validate", json::object(), to_json(r), r.ok());
        } else if (*atlas_export) {
            if (!export_dir.empty()) {
                std::filesystem::create_directories(export_dir);
                for (auto id : all_basic_maps)
                    if (export_map.empty() || export_map[0] == letter(id)) {
                        std::ofstream f(export_dir + "/" + letter(id) + ".map");
                        f << write_map(basic_map(id));
                    }
                return 0;
            }
            if (export_map.size() != 1) throw usage_error("give one map letter or --dir");
            text_out = write_map(basic_map(basic_map_id(export_map[0])));
        } else if (*compose_cmd) {
            Expr e = parse_expr(expr);
            Assembly a = eval_expr(e);
            report = make_report("compose", {{"expr", expr}}, {{"expr", to_string(e)}, {"assembly", to_json(a)}}, true);
        } else if (*construct_cmd) {
            Plan plan = construct_args.plan();
            MapPair pair = build_pair(plan);
            report = make_report("construct", construct_args.input(),
                                 {{"plan", to_json(plan)}, {"w1", to_json(pair.w1)}, {"w2", to_json(pair.w2)}}, true);
        } else if (*certify_cmd) {
            auto plans = certify_args.plans();
            auto docs = run_parallel(plans.size(), jobs, [&](std::size_t i) {
                DHBCertificate c = certify_dhb(plans[i]);
                json d = to_json(c);
                if (oracle && c.plan.degree <= oracle_cap) {
                    bool o1 = order_oracle(c.pair.w1.map), o2 = order_oracle(c.pair.w2.map);
                    d["oracle"] = {{"order_is_half_factorial", {o1, o2}}};
                    if (!o1 || !o2) d["ok"] = false;
                }
                return d;
            });
            for (const auto& d : docs) report_failures(d);
            json input = certify_args.input();
            if (oracle) input["oracle_cap"] = oracle_cap;
            report = make_report("certify", input, {{"certificates", docs}}, all_ok(docs));
        } else if (*cover_cmd) {
            auto plans = cover_args.plans();
            auto docs = run_parallel(plans.size(), jobs, [&](std::size_t i) { return to_json(certify_cover(plans[i])); });
            for (const auto& d : docs) report_failures(d);
            report = make_report("cover", cover_args.input(), {{"certificates", docs}}, all_ok(docs));
        } else if (*min_cmd) {
            if (count_max) bounds.alpha_max = bounds.beta_max = bounds.gamma_max = *count_max;
            MinDegreeResult r = min_degree_search(bounds);
            report = make_report("min-degree", {{"g_max", bounds.g_max}, {"alpha_max", bounds.alpha_max},
                                                {"beta_max", bounds.beta_max}, {"gamma_max", bounds.gamma_max}},
                                 to_json(r, bounds), true);
        } else if (*frob_cmd) {
            auto names = bundled_table_names();
            CharacterTable t = std::find(names.begin(), names.end(), table_arg) != names.end()
                                   ? bundled_table(table_arg)
                                   : load_table(table_arg);
            auto cls = split_commas(classes_arg);
            if (cls.size() != 3) throw usage_error("--classes needs exactly three class names X,Y,Z");
            bigint n = frobenius_count(t, cls[0], cls[1], cls[2]);
            rational c = class_sum_coefficient(t, cls[0], cls[1], cls[2]);
            json res{{"group", t.group}, {"classes", cls}, {"count", n.str()}, {"class_sum_coefficient", c.str()}};
            bool pass = true;
            if (brute) {
                std::vector<Perm> reps;
                for (const auto& name : cls) {
                    const auto& ci = t.classes[t.class_index(name)];
                    if (!ci.rep) throw usage_error("table has no representative for class " + name);
                    reps.push_back(*ci.rep);
                }
                bigint b = brute_count(t.generators, reps[0], reps[1], reps[2]);
                res["brute_count"] = b.str();
                pass = b == n;
                if (!pass) std::cerr << "check failed: character formula " << n << " differs from enumeration " << b << "\n";
            }
            report = make_report("frobenius", {{"table", table_arg}, {"classes", classes_arg}}, res, pass);
        } else if (*lift_cmd) {
            Plan plan = lift_args.plan();
            residue t = t1 ? *t1 : least_primitive_root(p);
            LiftReport r = lift_pair(plan, p, t);
            json input = lift_args.input();
            input["p"] = p;
            if (t1) input["t1"] = *t1;
            for (const auto& f : r.dims.failures) std::cerr << "check failed: " << f << "\n";
            report = make_report("lift", input, to_json(r), r.ok());
        } else if (*verify_cmd) {
            json doc;
            try {
                doc = json::parse(read_file(verify_path));
            } catch (const json::parse_error& e) {
                throw parse_error(std::string("report is not JSON: ") + e.what(), e.byte);
            }
            if (doc.value("schema", "") != report_schema) throw usage_error("not a " + std::string(report_schema) + " document");
            json results = json::array();
            bool pass = true;
            for (const auto& cert : doc.at("result").at("certificates")) {
                auto problems = verify_certificate(cert);
                for (const auto& pr : problems) std::cerr << "check failed: " << pr << "\n";
                pass = pass && problems.empty() && cert.at("ok").get<bool>();
                results.push_back({{"plan", cert.at("plan")}, {"problems", problems}, {"ok", problems.empty()}});
            }
            report = make_report("verify", {{"report", verify_path}}, {{"certificates", results}}, pass);
        }

        std::string text = text_out.empty() ? dump(report) : text_out;
        if (out_path.empty()) {
            std::cout << text;
        } else {
            std::ofstream f(out_path);
            if (!f) throw usage_error("cannot write '" + out_path + "'");
            f << text;
        }
        return text_out.empty() && !report.at("pass").get<bool>() ? 1 : 0;
    } catch (const usage_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const check_error& e) {
        std::cerr << "check failed: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
}
