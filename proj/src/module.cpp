#include "symcoh/module.hpp"

namespace symcoh {

GroupModule GroupModule::trivial(const FiniteGroup& h, const Domain& dom) {
    GroupModule m;
    m.h_ = &h;
    m.dom_ = dom;
    m.dim_ = 1;
    m.action_.assign(h.order(), SparseMatrix::identity(dom, 1));
    m.name_ = "trivial(" + dom.str() + ")";
    return m;
}

GroupModule GroupModule::character(const FiniteGroup& h, std::vector<Scalar> chi, std::string name) {
    if (static_cast<int>(chi.size()) != h.order())
        throw DomainMismatch("character length differs from group order");
    GroupModule m;
    m.h_ = &h;
    m.dom_ = chi[0].domain();
    m.dim_ = 1;
    for (int g = 0; g < h.order(); ++g) {
        SparseMatrix a(m.dom_, 1, 1);
        a.add(0, 0, chi[g]);
        m.action_.push_back(std::move(a));
    }
    m.name_ = std::move(name);
    return m;
}

GroupModule GroupModule::conjugation(const FiniteGroup& g, const TwoCocycle& alpha) {
    GroupModule m;
    m.h_ = &g;
    m.dom_ = alpha.domain();
    m.dim_ = g.order();
    for (int u = 0; u < g.order(); ++u) {
        SparseMatrix a(m.dom_, g.order(), g.order());
        for (int y = 0; y < g.order(); ++y) {
            // (u bar)(y bar)(u bar)^-1, a monomial in the basis
            Monomial t = basis_mul_mono(alpha, u, Monomial{y, Scalar::one(m.dom_)});
            Monomial inv = basis_inverse(alpha, u);
            t = mono_mul(alpha, t, inv);
            a.add(t.g, y, t.c);
        }
        m.action_.push_back(std::move(a));
    }
    m.name_ = "conjugation(" + g.name() + ")";
    return m;
}

}  // namespace symcoh
