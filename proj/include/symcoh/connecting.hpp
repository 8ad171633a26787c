#pragma once

#include "symcoh/complexes.hpp"

namespace symcoh {

// The coefficient sequence 0 -> Z/p -> Z/p^2 -> Z/p -> 0 with the balanced
// set-theoretic section (residues lifted into (-p/2, p/2)), which is
// symmetric: lift(-a) = -lift(a).  Odd p only; for p = 2 the section
// would need 2*lift(1) = 0 in Z/4 with lift(1) odd, which is impossible.
struct SymmetricSES {
    long p = 0;
    Domain k1, k2, k3;  // Z/p, Z/p^2, Z/p

    Scalar inject(const Scalar& a) const;   // k1 -> k2, a |-> p*a
    Scalar project(const Scalar& b) const;  // k2 -> k3, reduction mod p
    Scalar lift(const Scalar& c) const;     // k3 -> k2, balanced section
    Scalar retract(const Scalar& b) const;  // Ker(project) -> k1; SectionUndefined otherwise
};

SymmetricSES make_ses(long p);  // EvenPrime for p = 2; validated exhaustively

// Coefficientwise extensions to cochain coordinate vectors.
SparseVec lift_vec(const SymmetricSES& ses, const SparseVec& v);
SparseVec retract_vec(const SymmetricSES& ses, const SparseVec& v);
SparseVec project_vec(const SymmetricSES& ses, const SparseVec& v);

// The induced sequences of G-modules: conjugation action on group algebras
// k_i G and, per representative x, trivial modules k_i x.  The section and
// retraction act coefficientwise, hence commute with both translations.
struct InducedSequences {
    SymmetricSES base;
    const FiniteGroup* g = nullptr;

    SparseVec lift(const SparseVec& v) const { return lift_vec(base, v); }
    SparseVec retract(const SparseVec& v) const { return retract_vec(base, v); }
    SparseVec project(const SparseVec& v) const { return project_vec(base, v); }
};

InducedSequences induce_over(const SymmetricSES& ses, const FiniteGroup& g);

// Connecting homomorphism in group cohomology with trivial coefficient
// modules:  beta(phi) = retract(d_{k2}(lift(phi))).  phi must be a cocycle
// over k3 (NotACocycle); with require_symmetric it must also be fixed by
// every transposition generator (NotSymmetric), and then so is the output.
SparseVec beta_group(const FiniteGroup& h, const SymmetricSES& ses, int n, const SparseVec& phi,
                     bool require_symmetric, long budget = kDefaultBudget);

// Connecting homomorphism in symmetric Hochschild cohomology of the group
// algebra: retract(delta_{k2 G}(lift(phi))) for a symmetric Hochschild
// cocycle phi over k3.
SparseVec bockstein_hochschild(const FiniteGroup& g, const SymmetricSES& ses, int n,
                               const SparseVec& phi, long budget = kDefaultBudget);

}  // namespace symcoh
