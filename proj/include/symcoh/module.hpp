#pragma once

#include "symcoh/group.hpp"
#include "symcoh/sparse.hpp"
#include "symcoh/twisted.hpp"

namespace symcoh {

// Left module over a finite group, given by one action matrix per group
// element on a chosen basis.  Covers the three coefficient systems used
// by the cochain complexes: the trivial module, the rank-one centralizer
// character module, and the conjugation module on a (twisted) group
// algebra.
class GroupModule {
  public:
    static GroupModule trivial(const FiniteGroup& h, const Domain& dom);
    static GroupModule character(const FiniteGroup& h, std::vector<Scalar> chi, std::string name);
    // g acts on (y bar) as (g bar)(y bar)(g bar)^-1
    static GroupModule conjugation(const FiniteGroup& g, const TwoCocycle& alpha);

    const FiniteGroup& group() const { return *h_; }
    const Domain& domain() const { return dom_; }
    long dim() const { return dim_; }
    const SparseMatrix& action(int g) const { return action_[g]; }
    const std::string& name() const { return name_; }

  private:
    const FiniteGroup* h_ = nullptr;
    Domain dom_ = Domain::Q();
    long dim_ = 0;
    std::vector<SparseMatrix> action_;
    std::string name_;
};

}  // namespace symcoh
