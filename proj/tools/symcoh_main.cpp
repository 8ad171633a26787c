#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "symcoh/runner.hpp"
#include "symcoh/sparse.hpp"

namespace {

symcoh::Json parse_json_flag(const std::string& text, const char* what) {
    try {
        return symcoh::Json::parse(text);
    } catch (const std::exception& e) {
        throw symcoh::ConfigError(std::string("bad JSON for ") + what + ": " + e.what());
    }
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact cohomology of twisted group algebras: compute dimensions and verify the "
                 "decomposition, symmetric-action, embedding and connecting-map identities"};
    app.require_subcommand(1);

    std::string group_text, cocycle_text = R"({"kind":"trivial"})", field_text = R"({"Fp":5})";
    std::string ses_text, output = "json";
    int max_degree = 2;
    long budget = symcoh::kDefaultBudget;
    unsigned long seed = 0;
    bool timing = false, parallel = false;

    auto add_common = [&](CLI::App* cmd) {
        cmd->add_option("--group", group_text, "group spec JSON");
        cmd->add_option("--cocycle", cocycle_text, "cocycle spec JSON");
        cmd->add_option("--field", field_text, "field spec JSON ({\"Fp\":p} or \"Q\")");
        cmd->add_option("--max-degree", max_degree, "largest cochain degree");
        cmd->add_option("--budget", budget, "basis-size budget");
        cmd->add_option("--ses", ses_text, "coefficient sequence spec {\"p\": odd prime}");
        cmd->add_option("--output", output, "json or table");
        cmd->add_option("--seed", seed, "seed for sampled spot checks");
        cmd->add_flag("--timing", timing, "include wall times in reports");
        cmd->add_flag("--parallel", parallel, "allow parallel elimination internally");
    };

    CLI::App* cohomology = app.add_subcommand("cohomology", "dimension table per degree");
    add_common(cohomology);

    std::string what;
    CLI::App* verify = app.add_subcommand("verify", "machine-check one family of identities");
    verify->add_option("what", what, "decomposition|action|maps|embedding|connecting|all")
        ->required();
    add_common(verify);

    CLI::App* all = app.add_subcommand(
        "all", "every check; without --group, the bundled regression suite");
    add_common(all);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    symcoh::set_parallel_elimination(parallel);

    symcoh::RunConfig cfg;
    cfg.max_degree = max_degree;
    cfg.budget = budget;
    cfg.seed = seed;
    cfg.output = output;
    cfg.timing = timing;

    try {
        if (!group_text.empty()) cfg.group = parse_json_flag(group_text, "--group");
        cfg.cocycle = parse_json_flag(cocycle_text, "--cocycle");
        cfg.field = parse_json_flag(field_text, "--field");
        if (!ses_text.empty()) cfg.ses = parse_json_flag(ses_text, "--ses");

        if (cohomology->parsed()) {
            cfg.command = "cohomology";
        } else if (verify->parsed()) {
            cfg.command = "verify";
            cfg.verify_what = what;
        } else {
            cfg.command = "all";
        }
    } catch (const symcoh::Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }

    return symcoh::run(cfg, std::cout, std::cerr);
}
