#include <doctest.h>

#include <algorithm>
#include <set>

#include "symcoh/group.hpp"

using namespace symcoh;

namespace {

// independent class count: orbit partition under conjugation, straight
// from the table
int brute_force_class_count(const FiniteGroup& g) {
    std::set<std::set<int>> classes;
    for (int x = 0; x < g.order(); ++x) {
        std::set<int> cls;
        for (int h = 0; h < g.order(); ++h) cls.insert(g.conj(h, x));
        classes.insert(cls);
    }
    return static_cast<int>(classes.size());
}

}  // namespace

TEST_CASE("cyclic groups are abelian of the right order") {
    FiniteGroup c6 = FiniteGroup::cyclic(6);
    CHECK(c6.order() == 6);
    CHECK(c6.is_abelian());
    CHECK(c6.inv(1) == 5);
}

TEST_CASE("symmetric group on three letters") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    CHECK(s3.order() == 6);
    CHECK(!s3.is_abelian());
    CHECK(brute_force_class_count(s3) == 3);

    ClassData cd = class_data(s3);
    REQUIRE(cd.reps.size() == 3);
    CHECK(cd.reps[0] == 0);
    std::multiset<size_t> cent_orders;
    for (int x : cd.reps) cent_orders.insert(cd.centralizers.at(x).size());
    CHECK(cent_orders == std::multiset<size_t>{6, 2, 3});
    for (int x : cd.reps)
        CHECK(cd.class_members.at(x).size() * cd.centralizers.at(x).size() ==
              static_cast<size_t>(s3.order()));
}

TEST_CASE("bad tables are rejected with the violating triple") {
    std::vector<std::vector<int>> t = {{0, 1}, {1, 1}};  // 1*1 = 1 breaks inverses
    CHECK_THROWS_AS(FiniteGroup::from_table(t), NotAGroup);
    std::vector<std::vector<int>> nonassoc = {
        {0, 1, 2}, {1, 2, 0}, {2, 1, 0}};  // latin square, not associative
    CHECK_THROWS_AS(FiniteGroup::from_table(nonassoc), NotAGroup);
    std::vector<std::vector<int>> shifted = {{1, 0}, {0, 1}};  // identity not at 0
    CHECK_THROWS_AS(FiniteGroup::from_table(shifted), NotAGroup);
}

TEST_CASE("klein four group is its own center") {
    FiniteGroup v4 = FiniteGroup::klein();
    CHECK(v4.order() == 4);
    CHECK(v4.is_abelian());
    ClassData cd = class_data(v4);
    CHECK(cd.reps.size() == 4);
    CHECK(v4.center().size() == 4);
}

TEST_CASE("quaternion group has five classes and center of order two") {
    FiniteGroup q8 = FiniteGroup::quaternion8();
    CHECK(q8.order() == 8);
    CHECK(brute_force_class_count(q8) == 5);
    ClassData cd = class_data(q8);
    CHECK(cd.reps.size() == 5);
    CHECK(q8.center().size() == 2);
    // central elements represent their own classes
    for (int z : q8.center())
        CHECK(std::find(cd.reps.begin(), cd.reps.end(), z) != cd.reps.end());
}

TEST_CASE("dihedral group relations hold") {
    FiniteGroup d4 = FiniteGroup::dihedral(4);
    CHECK(d4.order() == 8);
    int r = 1, s = 4;  // encoding: b*n + a
    int rs = d4.mul(r, s);
    CHECK(d4.mul(s, r) == d4.mul(d4.inv(r), s));  // s r = r^-1 s
    CHECK(d4.mul(rs, rs) == 0);                   // reflections are involutions
}

TEST_CASE("products multiply componentwise") {
    FiniteGroup z2z3 = FiniteGroup::product(FiniteGroup::cyclic(2), FiniteGroup::cyclic(3));
    CHECK(z2z3.order() == 6);
    CHECK(z2z3.is_abelian());
    CHECK(z2z3.mul(1, 1) == 2);  // (0,1)+(0,1) = (0,2)
    CHECK(z2z3.mul(3, 3) == 0);  // (1,0)+(1,0) = (0,0)
}

TEST_CASE("transversal of the identity is a single coset") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    ClassData cd = class_data(s3);
    Transversal t = transversal(s3, cd, 0);
    CHECK(t.gammas == std::vector<int>{0});
    CHECK(t.conjugates == std::vector<int>{0});
}

TEST_CASE("transversals exist only for chosen representatives") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    ClassData cd = class_data(s3);
    int non_rep = -1;
    for (int e = 0; e < s3.order(); ++e)
        if (cd.class_of[e] != e) non_rep = e;
    REQUIRE(non_rep >= 0);
    CHECK_THROWS_AS(transversal(s3, cd, non_rep), NotARepresentative);
}

TEST_CASE("transversal of a transposition class in S3") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    ClassData cd = class_data(s3);
    // the transposition class representative has centralizer of order 2
    int x = -1;
    for (int r : cd.reps)
        if (cd.centralizers.at(r).size() == 2) x = r;
    REQUIRE(x >= 0);
    Transversal t = transversal(s3, cd, x);
    CHECK(t.gammas.size() == 3);
    CHECK(t.gammas[0] == 0);
    std::set<int> conj(t.conjugates.begin(), t.conjugates.end());
    std::set<int> cls(cd.class_members.at(x).begin(), cd.class_members.at(x).end());
    CHECK(conj == cls);  // all conjugates, no repetition

    // cosets partition the group
    std::vector<int> count(t.gammas.size(), 0);
    for (int e = 0; e < s3.order(); ++e) count[t.coset_of[e]]++;
    for (int c : count) CHECK(c == 2);
}

TEST_CASE("coset walk solves gamma_j g = h gamma_s") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    ClassData cd = class_data(s3);
    for (int x : cd.reps) {
        Transversal t = transversal(s3, cd, x);
        const std::vector<int>& cent = t.centralizer;
        for (size_t j = 0; j < t.gammas.size(); ++j) {
            for (int g = 0; g < s3.order(); ++g) {
                auto [h, s] = coset_walk(s3, t, static_cast<int>(j), g);
                CHECK(std::binary_search(cent.begin(), cent.end(), h));
                CHECK(s3.mul(t.gammas[j], g) == s3.mul(h, t.gammas[s]));
            }
            // identity keeps the coset
            auto [h0, s0] = coset_walk(s3, t, static_cast<int>(j), 0);
            CHECK(h0 == 0);
            CHECK(s0 == static_cast<int>(j));
        }
        // gamma_0 = 1: walking an element of the centralizer stays in coset 0
        for (int h : cent) {
            auto [hh, ss] = coset_walk(s3, t, 0, h);
            CHECK(hh == h);
            CHECK(ss == 0);
        }
        // j -> s is a permutation for fixed g, and conjugates transform as
        // x_{s} = g^-1 x_j g
        for (int g = 0; g < s3.order(); ++g) {
            std::set<int> hit;
            for (size_t j = 0; j < t.gammas.size(); ++j) {
                auto [h, s] = coset_walk(s3, t, static_cast<int>(j), g);
                hit.insert(s);
                CHECK(t.conjugates[s] == s3.conj(g, t.conjugates[j]));
            }
            CHECK(hit.size() == t.gammas.size());
        }
    }
}

TEST_CASE("subgroups inherit structure through the index maps") {
    FiniteGroup s3 = FiniteGroup::symmetric(3);
    ClassData cd = class_data(s3);
    int x = -1;
    for (int r : cd.reps)
        if (cd.centralizers.at(r).size() == 3) x = r;
    REQUIRE(x >= 0);
    Subgroup c = make_subgroup(s3, cd.centralizers.at(x));
    CHECK(c.group.order() == 3);
    CHECK(c.group.is_abelian());
    for (int i = 0; i < 3; ++i) CHECK(c.from_parent[c.to_parent[i]] == i);
    CHECK_THROWS_AS(make_subgroup(s3, std::vector<int>{0, 3}), NotAGroup);  // 3 is a 3-cycle
}

TEST_CASE("relabeling produces an isomorphic group") {
    FiniteGroup q8 = FiniteGroup::quaternion8();
    std::vector<int> perm = {0, 3, 5, 1, 7, 2, 6, 4};
    FiniteGroup q8p = relabel(q8, perm);
    CHECK(q8p.order() == 8);
    ClassData a = class_data(q8), b = class_data(q8p);
    CHECK(a.reps.size() == b.reps.size());
    CHECK(q8p.center().size() == q8.center().size());
}
