#pragma once

#include "symcoh/complexes.hpp"

namespace symcoh {

// Per-representative data shared by the comparison maps: the centralizer
// as a standalone group, the coset transversal, and the character by
// which C_G(x) acts on the line spanned by (x bar).
struct CentralizerContext {
    int x = 0;
    std::string x_label;
    Subgroup sub;
    Transversal trans;
    std::vector<Scalar> chi;  // indexed like sub.group

    GroupModule character_module() const;
    GroupModule trivial_module(const Domain& dom) const;
};

CentralizerContext centralizer_context(const FiniteGroup& g, const TwoCocycle& alpha,
                                       const ClassData& cd, int x);

// Cochain-level linear map between two of the explicit complexes.
struct ComparisonMap {
    std::string kind;  // "pi" | "nu_central" | "nu_general" | "conj_transport"
    int x = -1;
    int degree = 0;
    SparseMatrix matrix;
};

// Restriction-projection C^n(k_a G, k_a G) -> C^n(C_G(x), k (x bar)):
// evaluate on centralizer tuples, unwind the inputs on the right, read off
// the coefficient of (x bar).
ComparisonMap pi_map(const TwoCocycle& alpha, const CentralizerContext& ctx, int n,
                     long budget = kDefaultBudget);

// For central x: psi |-> psi(g_1,...,g_n) (g_1 bar) ... (g_n bar),
// C^n(G, k (x bar)) -> C^n(k_a G, k_a G).  NotCentral otherwise.
ComparisonMap nu_central_map(const TwoCocycle& alpha, const CentralizerContext& ctx, int n,
                             long budget = kDefaultBudget);

// Untwisted only (NotTrivialCocycle otherwise): the transversal sum
//   psi |-> sum_j psi(h_{j,1},...,h_{j,n}) x^-1 x_j g_1 ... g_n
// with the h_{j,i} produced by the coset walk.  C^n(C_G(x), kx) -> C^n(kG, kG).
ComparisonMap nu_general_map(const TwoCocycle& alpha, const CentralizerContext& ctx, int n,
                             long budget = kDefaultBudget);

// Invertible transport C^n(G, k_a G with conjugation action) -> C^n(k_a G, k_a G):
// psi |-> psi(g_1,...,g_n) (g_1 bar) ... (g_n bar).
ComparisonMap conjugation_transport(const TwoCocycle& alpha, int n, long budget = kDefaultBudget);

}  // namespace symcoh
