#include "symcoh/connecting.hpp"

namespace symcoh {

Scalar SymmetricSES::inject(const Scalar& a) const {
    if (!(a.domain() == k1)) throw DomainMismatch("inject expects a k1 scalar");
    return Scalar::from_int(k2, a.residue() * p);
}

Scalar SymmetricSES::project(const Scalar& b) const {
    if (!(b.domain() == k2)) throw DomainMismatch("project expects a k2 scalar");
    return Scalar::from_int(k3, b.residue() % p);
}

Scalar SymmetricSES::lift(const Scalar& c) const {
    if (!(c.domain() == k3)) throw DomainMismatch("lift expects a k3 scalar");
    long r = c.residue();
    long balanced = (r <= (p - 1) / 2) ? r : r - p;
    return Scalar::from_int(k2, balanced);
}

Scalar SymmetricSES::retract(const Scalar& b) const {
    if (!(b.domain() == k2)) throw DomainMismatch("retract expects a k2 scalar");
    if (b.residue() % p != 0)
        throw SectionUndefined("retract applied to " + b.str() + ", which is not a multiple of " +
                               std::to_string(p));
    return Scalar::from_int(k1, b.residue() / p);
}

SymmetricSES make_ses(long p) {
    if (p == 2)
        throw EvenPrime("p = 2 admits no symmetric section: lift(1) would need 2*lift(1) = 0 in Z/4 "
                        "while projecting to 1");
    SymmetricSES ses;
    ses.p = p;
    ses.k1 = Domain::Fp(p);
    ses.k2 = Domain::Zp2(p);
    ses.k3 = Domain::Fp(p);

    // exactness and section identities, checked over the whole of Z/p^2
    for (long r = 0; r < p; ++r) {
        Scalar c = Scalar::from_int(ses.k3, r);
        if (!(ses.project(ses.lift(c)) == c))
            throw SectionUndefined("lift is not a section at " + c.str());
        if (!(ses.lift(-c) == -ses.lift(c)))
            throw SectionUndefined("lift is not symmetric at " + c.str());
        Scalar a = Scalar::from_int(ses.k1, r);
        if (!(ses.retract(ses.inject(a)) == a))
            throw SectionUndefined("retract fails to invert inject at " + a.str());
    }
    for (long b = 0; b < p * p; ++b) {
        Scalar v = Scalar::from_int(ses.k2, b);
        bool in_kernel = ses.project(v).is_zero();
        bool in_image = b % p == 0;
        if (in_kernel != in_image) throw SectionUndefined("image of inject differs from kernel");
        if (in_kernel && !(ses.inject(ses.retract(v)) == v))
            throw SectionUndefined("inject fails to invert retract at " + v.str());
    }
    return ses;
}

SparseVec lift_vec(const SymmetricSES& ses, const SparseVec& v) {
    SparseVec out;
    out.terms.reserve(v.terms.size());
    for (const auto& [i, c] : v.terms) out.terms.push_back({i, ses.lift(c)});
    return out;
}

SparseVec retract_vec(const SymmetricSES& ses, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v.terms) {
        Scalar r = ses.retract(c);
        if (!r.is_zero()) out.terms.push_back({i, r});
    }
    return out;
}

SparseVec project_vec(const SymmetricSES& ses, const SparseVec& v) {
    SparseVec out;
    for (const auto& [i, c] : v.terms) {
        Scalar r = ses.project(c);
        if (!r.is_zero()) out.terms.push_back({i, r});
    }
    return out;
}

InducedSequences induce_over(const SymmetricSES& ses, const FiniteGroup& g) {
    return InducedSequences{ses, &g};
}

namespace {

void require_symmetric_cochain(const CochainComplex& cx, int n, const SparseVec& phi,
                               const char* what) {
    for (int i = 1; i <= n; ++i) {
        if (!(cx.sigma(n, i).apply(phi) == phi))
            throw NotSymmetric(std::string(what) + " is not fixed by transposition " +
                               std::to_string(i));
    }
}

}  // namespace

SparseVec beta_group(const FiniteGroup& h, const SymmetricSES& ses, int n, const SparseVec& phi,
                     bool require_symmetric, long budget) {
    GroupCohomologyComplex over_k3(GroupModule::trivial(h, ses.k3), budget);
    if (!over_k3.differential(n).apply(phi).empty())
        throw NotACocycle("beta expects a cocycle over k3");
    if (require_symmetric) require_symmetric_cochain(over_k3, n, phi, "beta input");

    GroupCohomologyComplex over_k2(GroupModule::trivial(h, ses.k2), budget);
    SparseVec mid = over_k2.differential(n).apply(lift_vec(ses, phi));
    return retract_vec(ses, mid);  // SectionUndefined if a coefficient escapes Ker(project)
}

SparseVec bockstein_hochschild(const FiniteGroup& g, const SymmetricSES& ses, int n,
                               const SparseVec& phi, long budget) {
    TwoCocycle triv_k3 = TwoCocycle::trivial(g, ses.k3);
    HochschildComplex over_k3(triv_k3, budget);
    if (!over_k3.differential(n).apply(phi).empty())
        throw NotACocycle("the connecting map expects a Hochschild cocycle over k3");
    require_symmetric_cochain(over_k3, n, phi, "connecting-map input");

    TwoCocycle triv_k2 = TwoCocycle::trivial(g, ses.k2);
    HochschildComplex over_k2(triv_k2, budget);
    SparseVec mid = over_k2.differential(n).apply(lift_vec(ses, phi));
    return retract_vec(ses, mid);
}

}  // namespace symcoh
