#pragma once

#include "symcoh/group.hpp"
#include "symcoh/sparse.hpp"

namespace symcoh {

// Element of a (twisted) group algebra: sparse coefficient vector indexed
// by group elements.
using AlgebraElement = SparseVec;

// Normalized 2-cocycle alpha: G x G -> k^x, stored as a full table of
// unit scalars.  Construction checks the cocycle identity
//   alpha(x,yz) alpha(y,z) = alpha(xy,z) alpha(x,y)
// over all triples, the normalization alpha(x,1) = alpha(1,x) = 1, and
// alpha(x,x^-1) = alpha(x^-1,x).
class TwoCocycle {
  public:
    static TwoCocycle trivial(const FiniteGroup& g, const Domain& dom);
    // alpha((a,b),(c,d)) = zeta^(b*c) on Z/n x Z/n; requires zeta^n = 1.
    static TwoCocycle pairing(const FiniteGroup& g, const Scalar& zeta);
    static TwoCocycle from_table(const FiniteGroup& g, const Domain& dom,
                                 std::vector<std::vector<Scalar>> values);

    const FiniteGroup& group() const { return *g_; }
    const Domain& domain() const { return dom_; }
    const Scalar& at(int g, int h) const { return table_[static_cast<size_t>(g) * g_->order() + h]; }
    bool is_trivial() const;

    // alpha-transported table for another isomorphic labeling:
    // values'[i][j] = alpha(perm[i], perm[j])
    std::vector<std::vector<Scalar>> table_under(const std::vector<int>& perm) const;

  private:
    const FiniteGroup* g_ = nullptr;
    Domain dom_ = Domain::Q();
    std::vector<Scalar> table_;

    void validate() const;  // NotACocycle with the first violating triple
};

// Basis monomial c * (g bar) of the twisted algebra.
struct Monomial {
    int g = 0;
    Scalar c;
};

// (c1 g1) * (c2 g2) = c1 c2 alpha(g1,g2) (g1 g2)
Monomial mono_mul(const TwoCocycle& a, const Monomial& m1, const Monomial& m2);
Monomial mono_mul_basis(const TwoCocycle& a, const Monomial& m, int g);   // m * (g bar)
Monomial basis_mul_mono(const TwoCocycle& a, int g, const Monomial& m);   // (g bar) * m

// Bilinear extension of (g bar)(h bar) = alpha(g,h) (gh bar).
AlgebraElement twisted_product(const TwoCocycle& a, const AlgebraElement& u, const AlgebraElement& v);

// (g bar)^-1 = alpha(g,g^-1)^-1 (g^-1 bar)
Monomial basis_inverse(const TwoCocycle& a, int g);
AlgebraElement basis_inverse_element(const TwoCocycle& a, int g);

// Character chi(h) = alpha(h,x) alpha(x,h)^-1 of C_G(x), the action of the
// centralizer on the line spanned by (x bar).  Indexed like `sub.group`.
// Multiplicativity is verified exhaustively (NotMultiplicative otherwise).
std::vector<Scalar> centralizer_character(const FiniteGroup& g, const TwoCocycle& a,
                                          const Subgroup& sub, int x);

}  // namespace symcoh
