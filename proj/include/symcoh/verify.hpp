#pragma once

#include <functional>

#include "symcoh/connecting.hpp"
#include "symcoh/maps.hpp"

namespace symcoh {

struct CheckReport {
    std::string claim;
    long lhs_dim = 0;
    long rhs_dim = 0;
    bool pass = false;
    std::vector<std::string> witnesses;
    double timing_ms = 0.0;
};

struct VerifySummary {
    std::vector<CheckReport> checks;
    bool all_pass() const;
    void append(VerifySummary other);
};

// Everything the verification commands share for one (G, alpha) pair.
struct Instance {
    const FiniteGroup* g = nullptr;
    const TwoCocycle* alpha = nullptr;
    ClassData cd;
    std::vector<CentralizerContext> contexts;  // aligned with cd.reps
    long budget = kDefaultBudget;
    unsigned long seed = 0;

    const CentralizerContext& context_of(int x) const;
};

Instance make_instance(const FiniteGroup& g, const TwoCocycle& alpha,
                       long budget = kDefaultBudget, unsigned long seed = 0);

// Transposition-action identities (square, braid, distant commutation),
// the face-map interchange laws, d o d = 0 and the invariance of the
// symmetric subcomplex under the differential, for the Hochschild complex
// and the group complexes with conjugation and trivial coefficients.
VerifySummary verify_action(const Instance& inst, int max_degree);

// Additive centralizer decomposition: dim HH^n(k_a G) against the sum of
// the centralizer group cohomology dimensions; for abelian G also the
// cochain-level isomorphism witness.
VerifySummary verify_decomposition(const Instance& inst, int max_degree);

// Chain-map and equivariance laws of the comparison maps, the projection
// splitting pi o nu = id and the cross-term vanishing.
VerifySummary verify_maps(const Instance& inst, int max_degree);

// Embedding of the symmetric cohomology sum into symmetric Hochschild
// cohomology at the level of classes, with membership-test
// well-definedness witnesses.  Part a runs over central representatives
// for any cocycle; part b over all representatives when alpha is trivial.
VerifySummary verify_embedding(const Instance& inst, int max_degree);

// Connecting homomorphisms over Z/p -> Z/p^2 -> Z/p: well-definedness of
// the symmetric Bockstein on both sides and exact cochain-level
// commutation with the restriction maps; reports the induced image rank.
VerifySummary verify_connecting(const Instance& inst, long p, int max_degree);

struct DimRow {
    int degree = 0;
    long hochschild = 0;       // HH^n(k_a G)
    long sym_hochschild = 0;   // HHS^n(k_a G)
    long group = 0;            // H^n(G, k)
    long sym_group = 0;        // HS^n(G, k)
};

std::vector<DimRow> cohomology_table(const Instance& inst, int max_degree);

}  // namespace symcoh
