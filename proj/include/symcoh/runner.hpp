#pragma once

#include <iosfwd>

#include "symcoh/specs.hpp"
#include "symcoh/verify.hpp"

namespace symcoh {

// One CLI invocation, decoupled from flag parsing so it can be driven
// from tests.
struct RunConfig {
    std::string command = "cohomology";  // "cohomology" | "verify" | "all"
    std::string verify_what;             // decomposition|action|maps|embedding|connecting|all
    Json group;                          // null = bundled regression suite (command "all" only)
    Json cocycle = Json{{"kind", "trivial"}};
    Json field = Json{{"Fp", 5}};
    Json ses;  // {"p": odd prime} or null
    int max_degree = 2;
    long budget = kDefaultBudget;
    unsigned long seed = 0;
    std::string output = "json";  // "json" | "table"
    bool timing = false;
};

// Full report document; deterministic for a fixed config (timing fields
// are null unless cfg.timing is set).
Json run_report(const RunConfig& cfg);

// Executes, prints the report, returns the exit status:
// 0 pass, 1 verification failure, 2 config error, 3 budget exceeded.
int run(const RunConfig& cfg, std::ostream& out, std::ostream& err);

}  // namespace symcoh
