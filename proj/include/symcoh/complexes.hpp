#pragma once

#include <string>
#include <vector>

#include "symcoh/module.hpp"
#include "symcoh/subspace.hpp"
#include "symcoh/twisted.hpp"

namespace symcoh {

inline constexpr long kDefaultBudget = 100'000'000;

// Mixed-radix codec for tuples (g_1,...,g_len): the first coordinate is
// the most significant digit.
struct TupleCodec {
    long radix = 1;
    int length = 0;

    long size() const;
    long encode(const std::vector<int>& t) const;
    std::vector<int> decode(long idx) const;
};

struct CohomologySpace {
    std::string complex_name;
    int degree = 0;
    bool symmetric = false;
    long dim = 0;
    Subspace cocycles;         // Ker d^n (intersected with invariants when symmetric)
    Subspace coboundaries;     // Im d^{n-1} (of the invariant subcomplex when symmetric)
    Subspace representatives;  // canonical complement of coboundaries inside cocycles

    bool is_cocycle(const SparseVec& v) const { return cocycles.contains(v); }
    bool is_coboundary(const SparseVec& v) const { return coboundaries.contains(v); }
};

// Common surface of the bar-type cochain complexes: explicit bases,
// differentials and transposition generators as sparse matrices.
class CochainComplex {
  public:
    virtual ~CochainComplex() = default;

    virtual const Domain& domain() const = 0;
    virtual std::string name() const = 0;
    virtual long dim(int n) const = 0;  // TooLarge past the budget
    // d_j : C^n -> C^{n+1}, 0 <= j <= n+1
    virtual SparseMatrix face_map(int n, int j) const = 0;
    // alternating sum of the face maps
    virtual SparseMatrix differential(int n) const = 0;
    // action of the transposition (i,i+1), 1 <= i <= n
    virtual SparseMatrix sigma(int n, int i) const = 0;
    virtual std::string basis_label(int n, long index) const = 0;

    // invariant subcomplex in degree n: all transposition generators fix it
    Subspace invariants(int n) const;
    CohomologySpace cohomology(int n, bool symmetric) const;
};

// Hochschild complex of the twisted group algebra with coefficients in
// itself: C^n has basis pairs (input tuple in G^n, output basis element y),
// coordinate = coefficient of (y bar) in phi(g_1 bar x ... x g_n bar).
class HochschildComplex : public CochainComplex {
  public:
    HochschildComplex(const TwoCocycle& alpha, long budget = kDefaultBudget);

    const Domain& domain() const override { return alpha_->domain(); }
    std::string name() const override;
    long dim(int n) const override;
    SparseMatrix face_map(int n, int j) const override;
    SparseMatrix differential(int n) const override;
    SparseMatrix sigma(int n, int i) const override;
    std::string basis_label(int n, long index) const override;

    const FiniteGroup& group() const { return alpha_->group(); }
    const TwoCocycle& cocycle() const { return *alpha_; }
    long index_of(const std::vector<int>& tuple, int y) const;

  private:
    const TwoCocycle* alpha_;
    long budget_;

    TupleCodec codec(int n) const;
    void accumulate_face(SparseMatrix& m, int n, int j, bool negate) const;
};

// Group cohomology complex C^n(H, A) = Maps(H^n, A) for a module A given
// by explicit action matrices.
class GroupCohomologyComplex : public CochainComplex {
  public:
    GroupCohomologyComplex(GroupModule module, long budget = kDefaultBudget);

    const Domain& domain() const override { return module_.domain(); }
    std::string name() const override;
    long dim(int n) const override;
    SparseMatrix face_map(int n, int j) const override;
    SparseMatrix differential(int n) const override;
    SparseMatrix sigma(int n, int i) const override;
    std::string basis_label(int n, long index) const override;

    const FiniteGroup& group() const { return module_.group(); }
    const GroupModule& module() const { return module_; }
    long index_of(const std::vector<int>& tuple, long fiber) const;

  private:
    GroupModule module_;
    long budget_;

    TupleCodec codec(int n) const;
    void accumulate_face(SparseMatrix& m, int n, int j, bool negate) const;
};

}  // namespace symcoh
