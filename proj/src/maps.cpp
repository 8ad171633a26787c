#include "symcoh/maps.hpp"

namespace symcoh {

GroupModule CentralizerContext::character_module() const {
    return GroupModule::character(sub.group, chi, "k(" + x_label + " bar)");
}

GroupModule CentralizerContext::trivial_module(const Domain& dom) const {
    return GroupModule::trivial(sub.group, dom);
}

CentralizerContext centralizer_context(const FiniteGroup& g, const TwoCocycle& alpha,
                                       const ClassData& cd, int x) {
    CentralizerContext ctx;
    ctx.x = x;
    ctx.x_label = g.label(x);
    ctx.trans = transversal(g, cd, x);  // NotARepresentative for a bad x
    ctx.sub = make_subgroup(g, cd.centralizers.at(x));
    ctx.chi = centralizer_character(g, alpha, ctx.sub, x);
    return ctx;
}

ComparisonMap pi_map(const TwoCocycle& alpha, const CentralizerContext& ctx, int n, long budget) {
    const FiniteGroup& g = alpha.group();
    const FiniteGroup& c = ctx.sub.group;
    int ord = g.order();
    HochschildComplex source(alpha, budget);
    TupleCodec ctuples{c.order(), n};
    TupleCodec gtuples{ord, n};

    ComparisonMap out;
    out.kind = "pi";
    out.x = ctx.x;
    out.degree = n;
    out.matrix = SparseMatrix(alpha.domain(), ctuples.size(), source.dim(n));

    long count = ctuples.size();
    for (long ti = 0; ti < count; ++ti) {
        std::vector<int> tc = ctuples.decode(ti);
        std::vector<int> th(n);
        for (int k = 0; k < n; ++k) th[k] = ctx.sub.to_parent[tc[k]];
        // unwind phi(h_1 x ... x h_n) by (h_n bar)^-1 ... (h_1 bar)^-1 and
        // keep the coefficient of (x bar); only the source fiber
        // y = x h_1 ... h_n survives
        Monomial acc{0, Scalar::one(alpha.domain())};
        int y = ctx.x;
        for (int k = 0; k < n; ++k) y = g.mul(y, th[k]);
        acc.g = y;
        for (int k = n - 1; k >= 0; --k) {
            Monomial hinv = basis_inverse(alpha, th[k]);
            acc = mono_mul(alpha, acc, hinv);
        }
        if (acc.g != ctx.x)
            throw Error("internal: unwinding did not return to the representative");
        long col = gtuples.encode(th) * ord + y;
        out.matrix.add(ti, col, acc.c);
    }
    return out;
}

ComparisonMap nu_central_map(const TwoCocycle& alpha, const CentralizerContext& ctx, int n,
                             long budget) {
    const FiniteGroup& g = alpha.group();
    if (ctx.sub.group.order() != g.order())
        throw NotCentral("nu is defined via the full group only for central x; x = " +
                         g.label(ctx.x) + " is not central");
    int ord = g.order();
    HochschildComplex target(alpha, budget);
    TupleCodec gtuples{ord, n};

    ComparisonMap out;
    out.kind = "nu_central";
    out.x = ctx.x;
    out.degree = n;
    out.matrix = SparseMatrix(alpha.domain(), target.dim(n), gtuples.size());

    long count = gtuples.size();
    for (long ti = 0; ti < count; ++ti) {
        std::vector<int> t = gtuples.decode(ti);
        // (x bar)(g_1 bar)...(g_n bar)
        Monomial acc{ctx.x, Scalar::one(alpha.domain())};
        for (int k = 0; k < n; ++k) acc = mono_mul_basis(alpha, acc, t[k]);
        out.matrix.add(ti * ord + acc.g, ti, acc.c);
    }
    return out;
}

ComparisonMap nu_general_map(const TwoCocycle& alpha, const CentralizerContext& ctx, int n,
                             long budget) {
    if (!alpha.is_trivial())
        throw NotTrivialCocycle("the transversal extension is defined for the trivial cocycle only");
    const FiniteGroup& g = alpha.group();
    const FiniteGroup& c = ctx.sub.group;
    int ord = g.order();
    HochschildComplex target(alpha, budget);
    TupleCodec gtuples{ord, n};
    TupleCodec ctuples{c.order(), n};
    Scalar one = Scalar::one(alpha.domain());

    ComparisonMap out;
    out.kind = "nu_general";
    out.x = ctx.x;
    out.degree = n;
    out.matrix = SparseMatrix(alpha.domain(), target.dim(n), ctuples.size());

    int ncosets = static_cast<int>(ctx.trans.gammas.size());
    long count = gtuples.size();
    for (long ui = 0; ui < count; ++ui) {
        std::vector<int> u = gtuples.decode(ui);
        for (int j = 0; j < ncosets; ++j) {
            std::vector<int> walk(n);
            int s = j;
            for (int k = 0; k < n; ++k) {
                auto [h, s2] = coset_walk(g, ctx.trans, s, u[k]);
                walk[k] = ctx.sub.from_parent[h];
                if (walk[k] < 0) throw Error("internal: coset walk left the centralizer");
                s = s2;
            }
            // x^-1 x_j g_1 ... g_n reduces to x_j g_1 ... g_n up to x x^-1
            int y = ctx.trans.conjugates[j];
            for (int k = 0; k < n; ++k) y = g.mul(y, u[k]);
            out.matrix.add(ui * ord + y, ctuples.encode(walk), one);
        }
    }
    return out;
}

ComparisonMap conjugation_transport(const TwoCocycle& alpha, int n, long budget) {
    const FiniteGroup& g = alpha.group();
    int ord = g.order();
    HochschildComplex target(alpha, budget);
    TupleCodec gtuples{ord, n};

    ComparisonMap out;
    out.kind = "conj_transport";
    out.degree = n;
    out.matrix = SparseMatrix(alpha.domain(), target.dim(n), target.dim(n));

    long count = gtuples.size();
    for (long ti = 0; ti < count; ++ti) {
        std::vector<int> t = gtuples.decode(ti);
        for (int y = 0; y < ord; ++y) {
            // (y bar)(g_1 bar)...(g_n bar)
            Monomial acc{y, Scalar::one(alpha.domain())};
            for (int k = 0; k < n; ++k) acc = mono_mul_basis(alpha, acc, t[k]);
            out.matrix.add(ti * ord + acc.g, ti * ord + y, acc.c);
        }
    }
    return out;
}

}  // namespace symcoh
