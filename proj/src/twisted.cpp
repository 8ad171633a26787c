#include "symcoh/twisted.hpp"

#include <cmath>

namespace symcoh {

TwoCocycle TwoCocycle::trivial(const FiniteGroup& g, const Domain& dom) {
    TwoCocycle a;
    a.g_ = &g;
    a.dom_ = dom;
    a.table_.assign(static_cast<size_t>(g.order()) * g.order(), Scalar::one(dom));
    a.validate();
    return a;
}

TwoCocycle TwoCocycle::pairing(const FiniteGroup& g, const Scalar& zeta) {
    int ord = g.order();
    int n = static_cast<int>(std::lround(std::sqrt(static_cast<double>(ord))));
    if (n * n != ord)
        throw WrongGroupShape("pairing cocycle needs |G| = n^2, got order " + std::to_string(ord));
    // indices must decompose as i = a*n + b with componentwise addition mod n
    for (int a1 = 0; a1 < n; ++a1)
        for (int b1 = 0; b1 < n; ++b1)
            for (int a2 = 0; a2 < n; ++a2)
                for (int b2 = 0; b2 < n; ++b2) {
                    int lhs = g.mul(a1 * n + b1, a2 * n + b2);
                    int rhs = ((a1 + a2) % n) * n + (b1 + b2) % n;
                    if (lhs != rhs)
                        throw WrongGroupShape("group is not Z/" + std::to_string(n) + " x Z/" +
                                              std::to_string(n) + " in the index decomposition");
                }
    if (!zeta.is_unit() || !(zeta.pow(n) == Scalar::one(zeta.domain())))
        throw BadRoot("zeta = " + zeta.str() + " is not an n-th root of unity for n = " +
                      std::to_string(n));
    TwoCocycle a;
    a.g_ = &g;
    a.dom_ = zeta.domain();
    a.table_.resize(static_cast<size_t>(ord) * ord);
    for (int i = 0; i < ord; ++i)
        for (int j = 0; j < ord; ++j) {
            long e = static_cast<long>(i % n) * (j / n);  // b1 * a2
            a.table_[static_cast<size_t>(i) * ord + j] = zeta.pow(e);
        }
    a.validate();
    return a;
}

TwoCocycle TwoCocycle::from_table(const FiniteGroup& g, const Domain& dom,
                                  std::vector<std::vector<Scalar>> values) {
    int ord = g.order();
    if (static_cast<int>(values.size()) != ord)
        throw NotACocycle("cocycle table must have |G| rows");
    TwoCocycle a;
    a.g_ = &g;
    a.dom_ = dom;
    a.table_.reserve(static_cast<size_t>(ord) * ord);
    for (int i = 0; i < ord; ++i) {
        if (static_cast<int>(values[i].size()) != ord)
            throw NotACocycle("cocycle table row " + std::to_string(i) + " has wrong length");
        for (int j = 0; j < ord; ++j) {
            if (!(values[i][j].domain() == dom))
                throw DomainMismatch("cocycle entry domain differs from declared domain");
            if (!values[i][j].is_unit())
                throw NotACocycle("cocycle value at (" + std::to_string(i) + "," + std::to_string(j) +
                                  ") is not a unit");
            a.table_.push_back(values[i][j]);
        }
    }
    a.validate();
    return a;
}

void TwoCocycle::validate() const {
    const FiniteGroup& g = *g_;
    int n = g.order();
    Scalar one = Scalar::one(dom_);
    for (int x = 0; x < n; ++x) {
        if (!(at(x, 0) == one) || !(at(0, x) == one))
            throw NotACocycle("normalization fails at element " + g.label(x));
        if (!(at(x, g.inv(x)) == at(g.inv(x), x)))
            throw NotACocycle("alpha(x,x^-1) != alpha(x^-1,x) at x = " + g.label(x));
    }
    for (int x = 0; x < n; ++x)
        for (int y = 0; y < n; ++y)
            for (int z = 0; z < n; ++z) {
                Scalar lhs = at(x, g.mul(y, z)) * at(y, z);
                Scalar rhs = at(g.mul(x, y), z) * at(x, y);
                if (!(lhs == rhs))
                    throw NotACocycle("cocycle identity fails at triple (" + g.label(x) + "," +
                                      g.label(y) + "," + g.label(z) + ")");
            }
}

bool TwoCocycle::is_trivial() const {
    Scalar one = Scalar::one(dom_);
    for (const auto& v : table_)
        if (!(v == one)) return false;
    return true;
}

std::vector<std::vector<Scalar>> TwoCocycle::table_under(const std::vector<int>& perm) const {
    int n = g_->order();
    std::vector<std::vector<Scalar>> out(n, std::vector<Scalar>(n, Scalar::zero(dom_)));
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) out[i][j] = at(perm[i], perm[j]);
    return out;
}

Monomial mono_mul(const TwoCocycle& a, const Monomial& m1, const Monomial& m2) {
    return {a.group().mul(m1.g, m2.g), m1.c * m2.c * a.at(m1.g, m2.g)};
}

Monomial mono_mul_basis(const TwoCocycle& a, const Monomial& m, int g) {
    return {a.group().mul(m.g, g), m.c * a.at(m.g, g)};
}

Monomial basis_mul_mono(const TwoCocycle& a, int g, const Monomial& m) {
    return {a.group().mul(g, m.g), m.c * a.at(g, m.g)};
}

AlgebraElement twisted_product(const TwoCocycle& a, const AlgebraElement& u, const AlgebraElement& v) {
    const Domain& dom = a.domain();
    int n = a.group().order();
    for (const auto& [i, c] : u.terms)
        if (i >= n || !(c.domain() == dom)) throw DomainMismatch("left factor incompatible with algebra");
    for (const auto& [i, c] : v.terms)
        if (i >= n || !(c.domain() == dom)) throw DomainMismatch("right factor incompatible with algebra");
    AlgebraElement out;
    for (const auto& [g, cg] : u.terms)
        for (const auto& [h, ch] : v.terms)
            out.add_term(a.group().mul(g, h), cg * ch * a.at(g, h));
    return out;
}

Monomial basis_inverse(const TwoCocycle& a, int g) {
    int gi = a.group().inv(g);
    return {gi, a.at(g, gi).inverse()};
}

AlgebraElement basis_inverse_element(const TwoCocycle& a, int g) {
    Monomial m = basis_inverse(a, g);
    return sv_unit(m.g, m.c);
}

std::vector<Scalar> centralizer_character(const FiniteGroup& g, const TwoCocycle& a,
                                          const Subgroup& sub, int x) {
    int n = sub.group.order();
    std::vector<Scalar> chi;
    chi.reserve(n);
    for (int i = 0; i < n; ++i) {
        int h = sub.to_parent[i];
        if (g.mul(h, x) != g.mul(x, h))
            throw NotARepresentative("element " + g.label(h) + " is outside C_G(" + g.label(x) + ")");
        chi.push_back(a.at(h, x) * a.at(x, h).inverse());
    }
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (!(chi[sub.group.mul(i, j)] == chi[i] * chi[j]))
                throw NotMultiplicative("character fails at (" + sub.group.label(i) + "," +
                                        sub.group.label(j) + ") over x = " + g.label(x));
    if (!(chi[0] == Scalar::one(a.domain())))
        throw NotMultiplicative("character does not send 1 to 1");
    return chi;
}

}  // namespace symcoh
