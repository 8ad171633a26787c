#pragma once

#include <map>
#include <string>
#include <vector>

#include "symcoh/errors.hpp"

namespace symcoh {

// Finite group on elements 0..order-1 given by its multiplication table.
// Element 0 is always the identity; the table is validated exhaustively
// at construction.
class FiniteGroup {
  public:
    static FiniteGroup from_table(std::vector<std::vector<int>> mul,
                                  std::vector<std::string> labels = {},
                                  std::string name = "table");
    static FiniteGroup cyclic(int n);
    static FiniteGroup dihedral(int n);     // order 2n
    static FiniteGroup symmetric(int n);    // order n!, n <= 5
    static FiniteGroup klein();             // Z/2 x Z/2, element 2a+b = (a,b)
    static FiniteGroup quaternion8();
    static FiniteGroup product(const FiniteGroup& a, const FiniteGroup& b);

    int order() const { return order_; }
    int identity() const { return 0; }
    int mul(int a, int b) const { return mul_[a][b]; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(inv(g), x), g); }  // g^-1 x g
    bool is_abelian() const;
    std::vector<int> center() const;

    const std::string& label(int g) const { return labels_[g]; }
    const std::string& name() const { return name_; }

  private:
    int order_ = 0;
    std::vector<std::vector<int>> mul_;
    std::vector<int> inv_;
    std::vector<std::string> labels_;
    std::string name_;
};

// Conjugacy classes with a fixed system of representatives: identity
// first, the rest ordered by (class size, smallest member); each class is
// represented by its smallest member.
struct ClassData {
    std::vector<int> reps;
    std::vector<int> class_of;                      // element -> its representative
    std::map<int, std::vector<int>> class_members;  // rep -> sorted class
    std::map<int, std::vector<int>> centralizers;   // rep -> sorted subgroup C_G(x)
};

ClassData class_data(const FiniteGroup& g);

std::vector<int> centralizer_of(const FiniteGroup& g, int x);

// Right coset decomposition G = U_j C_G(x) gamma_j with gamma_0 = 1,
// found by a greedy scan in element order.  conjugates[j] enumerates the
// class of x as gamma_j^-1 x gamma_j without repetition.
struct Transversal {
    int x = 0;
    std::vector<int> gammas;
    std::vector<int> conjugates;
    std::vector<int> coset_of;     // element -> coset index j
    std::vector<int> centralizer;  // sorted
};

Transversal transversal(const FiniteGroup& g, const ClassData& cd, int x);

// Solve gamma_j * g = h * gamma_s with h in C_G(x); returns (h, s).
std::pair<int, int> coset_walk(const FiniteGroup& g, const Transversal& t, int j, int elem);

// A subgroup re-indexed as a standalone group, with maps to and from the
// parent indexing.
struct Subgroup {
    FiniteGroup group;
    std::vector<int> to_parent;
    std::vector<int> from_parent;  // -1 outside the subgroup
};

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements);

// Relabeled copy: perm must fix 0; element i of the result corresponds to
// perm[i] of the original.
FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm);

}  // namespace symcoh
