#pragma once

#include "symcoh/sparse.hpp"

namespace symcoh {

// Linear subspace of k^ambient, stored as a reduced-echelon basis so a
// subspace has exactly one representation and equality is structural.
class Subspace {
  public:
    Subspace() = default;
    static Subspace zero_space(const Domain& dom, long ambient);
    static Subspace full_space(const Domain& dom, long ambient);
    static Subspace span(const Domain& dom, long ambient, std::vector<SparseVec> vecs);

    long dim() const { return ech_.rank(); }
    long ambient_dim() const { return ambient_; }
    const Domain& domain() const { return dom_; }
    const std::vector<SparseVec>& basis() const { return ech_.rows; }
    const std::vector<long>& pivots() const { return ech_.pivots; }

    SparseVec reduce(SparseVec v) const { return ech_.reduce(std::move(v)); }
    bool contains(const SparseVec& v) const;
    bool contains(const Subspace& other) const;  // AmbientMismatch

    Subspace intersect(const Subspace& other) const;      // AmbientMismatch
    long quotient_dim(const Subspace& sub) const;         // NotASubspace
    Subspace sum(const Subspace& other) const;

    bool operator==(const Subspace& o) const;

  private:
    Domain dom_ = Domain::Q();
    long ambient_ = 0;
    Echelon ech_;
};

struct RankKernelImage {
    long rank = 0;
    Subspace kernel;  // subspace of k^cols
    Subspace image;   // subspace of k^rows
};

// Exact rank / null space / column space over a field (NonFieldScalars
// otherwise).
RankKernelImage rank_kernel_image(const SparseMatrix& m);
Subspace kernel_of(const SparseMatrix& m);
Subspace image_of(const SparseMatrix& m);
long rank_of(const SparseMatrix& m);

// Null space of the stacked matrix [m1; m2; ...]: vectors killed by all.
Subspace common_kernel(const std::vector<const SparseMatrix*>& ms);

}  // namespace symcoh
