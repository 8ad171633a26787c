#include "symcoh/complexes.hpp"

#include <limits>

namespace symcoh {

namespace {

long pow_checked(long base, int exp, long limit) {
    long v = 1;
    for (int i = 0; i < exp; ++i) {
        if (base != 0 && v > limit / base)
            throw TooLarge("basis of size " + std::to_string(base) + "^" + std::to_string(exp) +
                           " exceeds the budget of " + std::to_string(limit));
        v *= base;
    }
    return v;
}

Scalar sign_scalar(const Domain& dom, bool negate) {
    return negate ? -Scalar::one(dom) : Scalar::one(dom);
}

}  // namespace

long TupleCodec::size() const { return pow_checked(radix, length, std::numeric_limits<long>::max() / 2); }

long TupleCodec::encode(const std::vector<int>& t) const {
    long idx = 0;
    for (int v : t) idx = idx * radix + v;
    return idx;
}

std::vector<int> TupleCodec::decode(long idx) const {
    std::vector<int> t(length);
    for (int i = length - 1; i >= 0; --i) {
        t[i] = static_cast<int>(idx % radix);
        idx /= radix;
    }
    return t;
}

Subspace CochainComplex::invariants(int n) const {
    if (n == 0) return Subspace::full_space(domain(), dim(0));
    std::vector<SparseMatrix> mats;
    mats.reserve(n);
    SparseMatrix id = SparseMatrix::identity(domain(), dim(n));
    for (int i = 1; i <= n; ++i) mats.push_back(sigma(n, i) - id);
    std::vector<const SparseMatrix*> ptrs;
    for (const auto& m : mats) ptrs.push_back(&m);
    return common_kernel(ptrs);
}

CohomologySpace CochainComplex::cohomology(int n, bool symmetric) const {
    CohomologySpace out;
    out.complex_name = name();
    out.degree = n;
    out.symmetric = symmetric;

    Subspace cocycles = kernel_of(differential(n));
    Subspace coboundaries = Subspace::zero_space(domain(), dim(n));
    if (!symmetric) {
        if (n > 0) coboundaries = image_of(differential(n - 1));
    } else {
        cocycles = cocycles.intersect(invariants(n));
        if (n > 0) {
            SparseMatrix d_prev = differential(n - 1);
            Subspace inv_prev = invariants(n - 1);
            std::vector<SparseVec> images;
            for (const auto& b : inv_prev.basis()) images.push_back(d_prev.apply(b));
            coboundaries = Subspace::span(domain(), dim(n), std::move(images));
        }
    }

    // coboundaries sit inside cocycles; representatives are the reductions
    // of the cocycle basis, which vanish on the coboundary pivot columns
    std::vector<SparseVec> reps;
    for (const auto& z : cocycles.basis()) {
        SparseVec r = coboundaries.reduce(z);
        if (!r.empty()) reps.push_back(std::move(r));
    }
    out.representatives = Subspace::span(domain(), dim(n), std::move(reps));
    out.dim = cocycles.dim() - coboundaries.dim();
    out.cocycles = std::move(cocycles);
    out.coboundaries = std::move(coboundaries);
    return out;
}

HochschildComplex::HochschildComplex(const TwoCocycle& alpha, long budget)
    : alpha_(&alpha), budget_(budget) {}

std::string HochschildComplex::name() const {
    return "HH(" + group().name() + (alpha_->is_trivial() ? "" : ",alpha") + ";" +
           domain().str() + ")";
}

TupleCodec HochschildComplex::codec(int n) const { return TupleCodec{group().order(), n}; }

long HochschildComplex::dim(int n) const {
    if (n < 0) throw IndexOutOfRange("negative degree");
    return pow_checked(group().order(), n + 1, budget_);
}

long HochschildComplex::index_of(const std::vector<int>& tuple, int y) const {
    return codec(static_cast<int>(tuple.size())).encode(tuple) * group().order() + y;
}

std::string HochschildComplex::basis_label(int n, long index) const {
    const FiniteGroup& g = group();
    int y = static_cast<int>(index % g.order());
    std::vector<int> t = codec(n).decode(index / g.order());
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + g.label(t[i]);
    s += "|" + g.label(y) + ")";
    return s;
}

void HochschildComplex::accumulate_face(SparseMatrix& m, int n, int j, bool negate) const {
    const FiniteGroup& g = group();
    const TwoCocycle& a = *alpha_;
    int ord = g.order();
    TupleCodec tgt = codec(n + 1);
    TupleCodec src = codec(n);
    Scalar sgn = sign_scalar(domain(), negate);
    long count = tgt.size();
    for (long ui = 0; ui < count; ++ui) {
        std::vector<int> u = tgt.decode(ui);
        if (j == 0) {
            std::vector<int> t(u.begin() + 1, u.end());
            long tbase = src.encode(t) * ord;
            long ubase = ui * ord;
            for (int y = 0; y < ord; ++y)
                m.add(ubase + g.mul(u[0], y), tbase + y, sgn * a.at(u[0], y));
        } else if (j <= n) {
            std::vector<int> t;
            t.reserve(n);
            for (int k = 0; k < j - 1; ++k) t.push_back(u[k]);
            t.push_back(g.mul(u[j - 1], u[j]));
            for (int k = j + 1; k <= n; ++k) t.push_back(u[k]);
            Scalar c = sgn * a.at(u[j - 1], u[j]);
            long tbase = src.encode(t) * ord;
            long ubase = ui * ord;
            for (int y = 0; y < ord; ++y) m.add(ubase + y, tbase + y, c);
        } else {  // j == n+1
            std::vector<int> t(u.begin(), u.end() - 1);
            long tbase = src.encode(t) * ord;
            long ubase = ui * ord;
            for (int y = 0; y < ord; ++y)
                m.add(ubase + g.mul(y, u[n]), tbase + y, sgn * a.at(y, u[n]));
        }
    }
}

SparseMatrix HochschildComplex::face_map(int n, int j) const {
    if (n < 0 || j < 0 || j > n + 1) throw IndexOutOfRange("face map index out of range");
    SparseMatrix m(domain(), dim(n + 1), dim(n));
    accumulate_face(m, n, j, false);
    return m;
}

SparseMatrix HochschildComplex::differential(int n) const {
    if (n < 0) throw IndexOutOfRange("negative degree");
    SparseMatrix m(domain(), dim(n + 1), dim(n));
    for (int j = 0; j <= n + 1; ++j) accumulate_face(m, n, j, j % 2 == 1);
    return m;
}

SparseMatrix HochschildComplex::sigma(int n, int i) const {
    if (n < 1 || i < 1 || i > n) throw IndexOutOfRange("transposition generator out of range");
    const FiniteGroup& g = group();
    const TwoCocycle& a = *alpha_;
    int ord = g.order();
    TupleCodec cdc = codec(n);
    SparseMatrix m(domain(), dim(n), dim(n));
    Scalar mone = -Scalar::one(domain());
    long count = cdc.size();
    for (long ui = 0; ui < count; ++ui) {
        std::vector<int> u = cdc.decode(ui);
        long ubase = ui * ord;
        if (n == 1) {
            // (sigma_1 phi)(g bar) = -(g bar) phi((g bar)^-1) (g bar)
            int gg = u[0];
            int gi = g.inv(gg);
            Scalar pre = mone * a.at(gg, gi).inverse();
            long tbase = static_cast<long>(gi) * ord;
            for (int y = 0; y < ord; ++y) {
                Monomial t = basis_mul_mono(a, gg, Monomial{y, pre});
                t = mono_mul_basis(a, t, gg);
                m.add(ubase + t.g, tbase + y, t.c);
            }
        } else if (i == 1) {
            // -(g1 bar) phi((g1 bar)^-1 x (g1 bar)(g2 bar) x g3 ... )
            int g1 = u[0], g2 = u[1];
            std::vector<int> t = u;
            t[0] = g.inv(g1);
            t[1] = g.mul(g1, g2);
            Scalar pre = mone * a.at(g1, g.inv(g1)).inverse() * a.at(g1, g2);
            long tbase = cdc.encode(t) * ord;
            for (int y = 0; y < ord; ++y)
                m.add(ubase + g.mul(g1, y), tbase + y, pre * a.at(g1, y));
        } else if (i < n) {
            // -phi(... x (g_{i-1} g_i bar) x (g_i bar)^-1 x (g_i g_{i+1} bar) x ...)
            int gm = u[i - 2], gi_ = u[i - 1], gp = u[i];
            std::vector<int> t = u;
            t[i - 2] = g.mul(gm, gi_);
            t[i - 1] = g.inv(gi_);
            t[i] = g.mul(gi_, gp);
            Scalar pre = mone * a.at(gm, gi_) * a.at(gi_, g.inv(gi_)).inverse() * a.at(gi_, gp);
            long tbase = cdc.encode(t) * ord;
            for (int y = 0; y < ord; ++y) m.add(ubase + y, tbase + y, pre);
        } else {
            // -phi(... x (g_{n-1} g_n bar) x (g_n bar)^-1) (g_n bar)
            int gm = u[n - 2], gn = u[n - 1];
            std::vector<int> t = u;
            t[n - 2] = g.mul(gm, gn);
            t[n - 1] = g.inv(gn);
            Scalar pre = mone * a.at(gm, gn) * a.at(gn, g.inv(gn)).inverse();
            long tbase = cdc.encode(t) * ord;
            for (int y = 0; y < ord; ++y)
                m.add(ubase + g.mul(y, gn), tbase + y, pre * a.at(y, gn));
        }
    }
    return m;
}

GroupCohomologyComplex::GroupCohomologyComplex(GroupModule module, long budget)
    : module_(std::move(module)), budget_(budget) {}

std::string GroupCohomologyComplex::name() const {
    return "H(" + group().name() + "," + module_.name() + ")";
}

TupleCodec GroupCohomologyComplex::codec(int n) const { return TupleCodec{group().order(), n}; }

long GroupCohomologyComplex::dim(int n) const {
    if (n < 0) throw IndexOutOfRange("negative degree");
    long tuples = pow_checked(group().order(), n, budget_);
    if (tuples > budget_ / module_.dim())
        throw TooLarge("cochain basis exceeds the budget");
    return tuples * module_.dim();
}

long GroupCohomologyComplex::index_of(const std::vector<int>& tuple, long fiber) const {
    return codec(static_cast<int>(tuple.size())).encode(tuple) * module_.dim() + fiber;
}

std::string GroupCohomologyComplex::basis_label(int n, long index) const {
    const FiniteGroup& g = group();
    long d = module_.dim();
    long fib = index % d;
    std::vector<int> t = codec(n).decode(index / d);
    std::string s = "(";
    for (int i = 0; i < n; ++i) s += (i ? "," : "") + g.label(t[i]);
    if (d > 1) s += "|" + g.label(static_cast<int>(fib));
    s += ")";
    return s;
}

void GroupCohomologyComplex::accumulate_face(SparseMatrix& m, int n, int j, bool negate) const {
    const FiniteGroup& g = group();
    long d = module_.dim();
    TupleCodec tgt = codec(n + 1);
    TupleCodec src = codec(n);
    Scalar sgn = sign_scalar(domain(), negate);
    long count = tgt.size();
    for (long ui = 0; ui < count; ++ui) {
        std::vector<int> u = tgt.decode(ui);
        long ubase = ui * d;
        if (j == 0) {
            std::vector<int> t(u.begin() + 1, u.end());
            long tbase = src.encode(t) * d;
            const SparseMatrix& act = module_.action(u[0]);
            for (long mr = 0; mr < d; ++mr)
                for (const auto& [mc, c] : act.row(mr).terms)
                    m.add(ubase + mr, tbase + mc, sgn * c);
        } else if (j <= n) {
            std::vector<int> t;
            t.reserve(n);
            for (int k = 0; k < j - 1; ++k) t.push_back(u[k]);
            t.push_back(g.mul(u[j - 1], u[j]));
            for (int k = j + 1; k <= n; ++k) t.push_back(u[k]);
            long tbase = src.encode(t) * d;
            for (long f = 0; f < d; ++f) m.add(ubase + f, tbase + f, sgn);
        } else {
            std::vector<int> t(u.begin(), u.end() - 1);
            long tbase = src.encode(t) * d;
            for (long f = 0; f < d; ++f) m.add(ubase + f, tbase + f, sgn);
        }
    }
}

SparseMatrix GroupCohomologyComplex::face_map(int n, int j) const {
    if (n < 0 || j < 0 || j > n + 1) throw IndexOutOfRange("face map index out of range");
    SparseMatrix m(domain(), dim(n + 1), dim(n));
    accumulate_face(m, n, j, false);
    return m;
}

SparseMatrix GroupCohomologyComplex::differential(int n) const {
    if (n < 0) throw IndexOutOfRange("negative degree");
    SparseMatrix m(domain(), dim(n + 1), dim(n));
    for (int j = 0; j <= n + 1; ++j) accumulate_face(m, n, j, j % 2 == 1);
    return m;
}

SparseMatrix GroupCohomologyComplex::sigma(int n, int i) const {
    if (n < 1 || i < 1 || i > n) throw IndexOutOfRange("transposition generator out of range");
    const FiniteGroup& g = group();
    long d = module_.dim();
    TupleCodec cdc = codec(n);
    SparseMatrix m(domain(), dim(n), dim(n));
    Scalar mone = -Scalar::one(domain());
    long count = cdc.size();
    for (long ui = 0; ui < count; ++ui) {
        std::vector<int> u = cdc.decode(ui);
        long ubase = ui * d;
        if (i == 1) {
            // (sigma_1 psi)(g1,...) = -g1 psi(g1^-1, g1 g2, g3, ...)
            std::vector<int> t = u;
            t[0] = g.inv(u[0]);
            if (n > 1) t[1] = g.mul(u[0], u[1]);
            long tbase = cdc.encode(t) * d;
            const SparseMatrix& act = module_.action(u[0]);
            for (long mr = 0; mr < d; ++mr)
                for (const auto& [mc, c] : act.row(mr).terms)
                    m.add(ubase + mr, tbase + mc, mone * c);
        } else {
            std::vector<int> t = u;
            if (i < n) {
                t[i - 2] = g.mul(u[i - 2], u[i - 1]);
                t[i - 1] = g.inv(u[i - 1]);
                t[i] = g.mul(u[i - 1], u[i]);
            } else {
                t[n - 2] = g.mul(u[n - 2], u[n - 1]);
                t[n - 1] = g.inv(u[n - 1]);
            }
            long tbase = cdc.encode(t) * d;
            for (long f = 0; f < d; ++f) m.add(ubase + f, tbase + f, mone);
        }
    }
    return m;
}

}  // namespace symcoh
