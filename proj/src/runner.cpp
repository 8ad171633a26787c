#include "symcoh/runner.hpp"

#include <iomanip>
#include <ostream>
#include <sstream>

namespace symcoh {

namespace {

Json checks_to_json(const VerifySummary& summary, bool timing) {
    Json arr = Json::array();
    for (const auto& c : summary.checks) {
        Json j;
        j["claim"] = c.claim;
        j["lhs_dim"] = c.lhs_dim;
        j["rhs_dim"] = c.rhs_dim;
        j["pass"] = c.pass;
        j["witnesses"] = c.witnesses;
        if (timing)
            j["timing_ms"] = c.timing_ms;
        else
            j["timing_ms"] = nullptr;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json dims_to_json(const std::vector<DimRow>& rows) {
    Json arr = Json::array();
    for (const auto& r : rows) {
        Json j;
        j["degree"] = r.degree;
        j["HH"] = r.hochschild;
        j["HHS"] = r.sym_hochschild;
        j["H"] = r.group;
        j["HS"] = r.sym_group;
        arr.push_back(std::move(j));
    }
    return arr;
}

Json config_echo(const RunConfig& cfg) {
    Json j;
    j["group"] = cfg.group;
    j["cocycle"] = cfg.cocycle;
    j["field"] = cfg.field;
    j["max_degree"] = cfg.max_degree;
    j["budget"] = cfg.budget;
    j["seed"] = cfg.seed;
    j["ses"] = cfg.ses.is_null() ? Json(nullptr) : cfg.ses;
    return j;
}

long ses_prime(const Json& ses) {
    if (!ses.is_object() || !ses.contains("p") || !ses.at("p").is_number_integer())
        throw ConfigError("ses spec must be {\"p\": odd prime}");
    return ses.at("p").get<long>();
}

// Runs one fully specified configuration (group present).
Json run_single(const RunConfig& cfg) {
    if (cfg.max_degree < 0) throw ConfigError("max degree must be nonnegative");
    if (cfg.budget <= 0) throw ConfigError("budget must be positive");

    FiniteGroup g = group_from_spec(cfg.group);
    Domain field = field_from_spec(cfg.field);

    bool want_connecting = false;
    long p = 0;
    if (!cfg.ses.is_null()) {
        p = ses_prime(cfg.ses);
        want_connecting = true;
    }

    std::string command = cfg.command;
    if (command == "verify") command += " " + cfg.verify_what;

    Json doc;
    doc["schema"] = "v1";
    doc["command"] = command;
    doc["config"] = config_echo(cfg);

    VerifySummary summary;

    auto with_main_instance = [&](auto&& fn) {
        TwoCocycle alpha = cocycle_from_spec(g, field, cfg.cocycle);
        Instance inst = make_instance(g, alpha, cfg.budget, cfg.seed);
        fn(inst);
    };

    // The connecting command fixes its own coefficients: the untwisted
    // algebra over F_p for the chosen sequence prime.
    auto run_connecting = [&]() {
        if (!want_connecting) throw ConfigError("verify connecting needs --ses {\"p\": odd prime}");
        std::string kind =
            cfg.cocycle.is_object() ? cfg.cocycle.value("kind", "trivial") : "trivial";
        if (kind != "trivial")
            throw ConfigError("connecting homomorphisms are defined for the trivial cocycle");
        TwoCocycle alpha = TwoCocycle::trivial(g, Domain::Fp(p));
        Instance inst = make_instance(g, alpha, cfg.budget, cfg.seed);
        summary.append(verify_connecting(inst, p, cfg.max_degree));
    };

    if (cfg.command == "cohomology") {
        with_main_instance(
            [&](const Instance& inst) { doc["dimensions"] = dims_to_json(cohomology_table(inst, cfg.max_degree)); });
    } else if (cfg.command == "verify" && cfg.verify_what == "connecting") {
        run_connecting();
    } else if (cfg.command == "verify" && cfg.verify_what != "all") {
        with_main_instance([&](const Instance& inst) {
            if (cfg.verify_what == "decomposition")
                summary.append(verify_decomposition(inst, cfg.max_degree));
            else if (cfg.verify_what == "action")
                summary.append(verify_action(inst, cfg.max_degree));
            else if (cfg.verify_what == "maps")
                summary.append(verify_maps(inst, cfg.max_degree));
            else if (cfg.verify_what == "embedding")
                summary.append(verify_embedding(inst, cfg.max_degree));
            else
                throw ConfigError("unknown verification '" + cfg.verify_what + "'");
        });
    } else {  // "all" or "verify all"
        with_main_instance([&](const Instance& inst) {
            doc["dimensions"] = dims_to_json(cohomology_table(inst, cfg.max_degree));
            summary.append(verify_action(inst, cfg.max_degree));
            summary.append(verify_maps(inst, cfg.max_degree));
            summary.append(verify_decomposition(inst, cfg.max_degree));
            summary.append(verify_embedding(inst, cfg.max_degree));
        });
        if (want_connecting) run_connecting();
    }

    doc["reports"] = checks_to_json(summary, cfg.timing);
    doc["pass"] = summary.all_pass();
    return doc;
}

// Groups of order <= 8 at degrees <= 2, plus the connecting checks at p = 3.
std::vector<RunConfig> bundled_suite(const RunConfig& base) {
    auto mk = [&base](Json group, Json field, Json cocycle, Json ses, int max_degree) {
        RunConfig c = base;
        c.command = "all";
        c.group = std::move(group);
        c.field = std::move(field);
        c.cocycle = std::move(cocycle);
        c.ses = std::move(ses);
        c.max_degree = max_degree;
        return c;
    };
    Json trivial = Json{{"kind", "trivial"}};
    std::vector<RunConfig> suite;
    suite.push_back(mk(Json{{"family", "cyclic"}, {"n", 2}}, Json{{"Fp", 2}}, trivial, nullptr, 2));
    suite.push_back(mk(Json{{"family", "cyclic"}, {"n", 3}}, Json{{"Fp", 3}}, trivial,
                       Json{{"p", 3}}, 2));
    suite.push_back(mk(Json{{"family", "cyclic"}, {"n", 4}}, Json{{"Fp", 2}}, trivial, nullptr, 2));
    suite.push_back(mk(Json{{"family", "klein"}}, Json{{"Fp", 5}},
                       Json{{"kind", "pairing"}, {"zeta", 4}}, nullptr, 2));
    suite.push_back(mk(Json{{"family", "symmetric"}, {"n", 3}}, Json{{"Fp", 7}}, trivial, nullptr, 2));
    suite.push_back(mk(Json{{"family", "symmetric"}, {"n", 3}}, Json{{"Fp", 3}}, trivial,
                       Json{{"p", 3}}, 1));
    suite.push_back(mk(Json{{"family", "dihedral"}, {"n", 4}}, Json{{"Fp", 2}}, trivial, nullptr, 2));
    suite.push_back(mk(Json{{"family", "quaternion8"}}, Json{{"Fp", 2}}, trivial, nullptr, 2));
    return suite;
}

void render_table(const Json& doc, std::ostream& out) {
    if (doc.contains("bundled")) {
        for (const auto& sub : doc.at("bundled")) render_table(sub, out);
        out << (doc.at("pass").get<bool>() ? "ALL PASS" : "FAILURES PRESENT") << "\n";
        return;
    }
    out << "== " << doc.at("command").get<std::string>();
    if (doc.contains("config")) out << " " << doc.at("config").at("group").dump();
    out << " over " << doc.at("config").at("field").dump() << " ==\n";
    if (doc.contains("dimensions")) {
        out << std::setw(8) << "degree" << std::setw(8) << "HH" << std::setw(8) << "HHS"
            << std::setw(8) << "H" << std::setw(8) << "HS" << "\n";
        for (const auto& row : doc.at("dimensions"))
            out << std::setw(8) << row.at("degree").get<long>() << std::setw(8)
                << row.at("HH").get<long>() << std::setw(8) << row.at("HHS").get<long>()
                << std::setw(8) << row.at("H").get<long>() << std::setw(8)
                << row.at("HS").get<long>() << "\n";
    }
    if (doc.contains("reports")) {
        for (const auto& r : doc.at("reports")) {
            out << (r.at("pass").get<bool>() ? "[pass] " : "[FAIL] ") << r.at("claim").get<std::string>()
                << " (lhs " << r.at("lhs_dim").get<long>() << ", rhs " << r.at("rhs_dim").get<long>()
                << ")\n";
            for (const auto& w : r.at("witnesses")) out << "        " << w.get<std::string>() << "\n";
        }
    }
}

}  // namespace

Json run_report(const RunConfig& cfg) {
    if (cfg.group.is_null()) {
        if (cfg.command != "all")
            throw ConfigError("--group is required for command '" + cfg.command + "'");
        Json doc;
        doc["schema"] = "v1";
        doc["command"] = "all";
        Json subs = Json::array();
        bool pass = true;
        for (const auto& sub : bundled_suite(cfg)) {
            Json d = run_single(sub);
            pass = pass && d.at("pass").get<bool>();
            subs.push_back(std::move(d));
        }
        doc["bundled"] = std::move(subs);
        doc["pass"] = pass;
        return doc;
    }
    return run_single(cfg);
}

int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
    try {
        Json doc = run_report(cfg);
        if (cfg.output == "table")
            render_table(doc, out);
        else
            out << doc.dump(2) << "\n";
        return doc.at("pass").get<bool>() ? 0 : 1;
    } catch (const TooLarge& e) {
        err << "too large: " << e.what() << "\n";
        return 3;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return 2;
    }
}

}  // namespace symcoh
