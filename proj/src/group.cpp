#include "symcoh/group.hpp"

#include <algorithm>
#include <numeric>

namespace symcoh {

namespace {

std::string triple_str(int a, int b, int c) {
    return "(" + std::to_string(a) + "," + std::to_string(b) + "," + std::to_string(c) + ")";
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> mul,
                                    std::vector<std::string> labels, std::string name) {
    FiniteGroup g;
    int n = static_cast<int>(mul.size());
    if (n == 0) throw NotAGroup("empty multiplication table");
    for (const auto& row : mul)
        if (static_cast<int>(row.size()) != n) throw NotAGroup("multiplication table is not square");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            if (mul[i][j] < 0 || mul[i][j] >= n)
                throw NotAGroup("table entry out of range at (" + std::to_string(i) + "," +
                                std::to_string(j) + ")");
    for (int i = 0; i < n; ++i)
        if (mul[0][i] != i || mul[i][0] != i)
            throw NotAGroup("element 0 is not a two-sided identity (fails at " + std::to_string(i) + ")");
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            for (int k = 0; k < n; ++k)
                if (mul[mul[i][j]][k] != mul[i][mul[j][k]])
                    throw NotAGroup("associativity fails at triple " + triple_str(i, j, k));

    g.inv_.assign(n, -1);
    for (int i = 0; i < n; ++i) {
        for (int j = 0; j < n; ++j) {
            if (mul[i][j] == 0 && mul[j][i] == 0) {
                g.inv_[i] = j;
                break;
            }
        }
        if (g.inv_[i] < 0) throw NotAGroup("element " + std::to_string(i) + " has no inverse");
    }

    g.order_ = n;
    g.mul_ = std::move(mul);
    if (labels.empty()) {
        for (int i = 0; i < n; ++i) g.labels_.push_back("g" + std::to_string(i));
    } else {
        if (static_cast<int>(labels.size()) != n) throw NotAGroup("label count differs from order");
        g.labels_ = std::move(labels);
    }
    g.name_ = std::move(name);
    return g;
}

FiniteGroup FiniteGroup::cyclic(int n) {
    if (n < 1) throw NotAGroup("cyclic group needs n >= 1");
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels;
    for (int i = 0; i < n; ++i) {
        labels.push_back(std::to_string(i));
        for (int j = 0; j < n; ++j) mul[i][j] = (i + j) % n;
    }
    return from_table(std::move(mul), std::move(labels), "C" + std::to_string(n));
}

FiniteGroup FiniteGroup::klein() {
    std::vector<std::vector<int>> mul(4, std::vector<int>(4));
    std::vector<std::string> labels;
    for (int i = 0; i < 4; ++i) {
        labels.push_back("(" + std::to_string(i / 2) + "," + std::to_string(i % 2) + ")");
        for (int j = 0; j < 4; ++j) mul[i][j] = i ^ j;
    }
    return from_table(std::move(mul), std::move(labels), "V4");
}

FiniteGroup FiniteGroup::dihedral(int n) {
    if (n < 1) throw NotAGroup("dihedral group needs n >= 1");
    int ord = 2 * n;
    // element b*n + a stands for r^a s^b; s r^a = r^{-a} s
    auto enc = [n](int a, int b) { return b * n + a; };
    std::vector<std::vector<int>> mul(ord, std::vector<int>(ord));
    std::vector<std::string> labels(ord);
    for (int b = 0; b < 2; ++b)
        for (int a = 0; a < n; ++a) {
            std::string l = a ? "r" + std::to_string(a) : "";
            if (b) l += "s";
            if (l.empty()) l = "e";
            labels[enc(a, b)] = l;
        }
    for (int b1 = 0; b1 < 2; ++b1)
        for (int a1 = 0; a1 < n; ++a1)
            for (int b2 = 0; b2 < 2; ++b2)
                for (int a2 = 0; a2 < n; ++a2) {
                    int a = b1 ? (a1 - a2 + n) % n : (a1 + a2) % n;
                    mul[enc(a1, b1)][enc(a2, b2)] = enc(a, b1 ^ b2);
                }
    return from_table(std::move(mul), std::move(labels), "D" + std::to_string(n));
}

FiniteGroup FiniteGroup::symmetric(int n) {
    if (n < 1 || n > 5) throw NotAGroup("symmetric group supported for 1 <= n <= 5");
    std::vector<std::vector<int>> perms;
    std::vector<int> p(n);
    std::iota(p.begin(), p.end(), 0);
    do {
        perms.push_back(p);
    } while (std::next_permutation(p.begin(), p.end()));  // identity is lexicographically first

    std::map<std::vector<int>, int> index;
    for (size_t i = 0; i < perms.size(); ++i) index[perms[i]] = static_cast<int>(i);

    int ord = static_cast<int>(perms.size());
    std::vector<std::vector<int>> mul(ord, std::vector<int>(ord));
    std::vector<std::string> labels(ord);
    for (int i = 0; i < ord; ++i) {
        std::string l;
        for (int k = 0; k < n; ++k) l += std::to_string(perms[i][k]);
        labels[i] = l;
        for (int j = 0; j < ord; ++j) {
            std::vector<int> comp(n);
            for (int k = 0; k < n; ++k) comp[k] = perms[i][perms[j][k]];
            mul[i][j] = index[comp];
        }
    }
    return from_table(std::move(mul), std::move(labels), "S" + std::to_string(n));
}

FiniteGroup FiniteGroup::quaternion8() {
    // element 2u + s: unit u in {1,i,j,k}, sign s in {+,-}
    static const int unit_mul[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int sign_mul[4][4] = {{1, 1, 1, 1}, {1, -1, 1, -1}, {1, -1, -1, 1}, {1, 1, -1, -1}};
    static const char* names[8] = {"1", "-1", "i", "-i", "j", "-j", "k", "-k"};
    std::vector<std::vector<int>> mul(8, std::vector<int>(8));
    for (int a = 0; a < 8; ++a)
        for (int b = 0; b < 8; ++b) {
            int ua = a / 2, sa = a % 2 ? -1 : 1;
            int ub = b / 2, sb = b % 2 ? -1 : 1;
            int u = unit_mul[ua][ub];
            int s = sa * sb * sign_mul[ua][ub];
            mul[a][b] = 2 * u + (s < 0 ? 1 : 0);
        }
    std::vector<std::string> labels(names, names + 8);
    return from_table(std::move(mul), std::move(labels), "Q8");
}

FiniteGroup FiniteGroup::product(const FiniteGroup& a, const FiniteGroup& b) {
    int na = a.order(), nb = b.order();
    int ord = na * nb;
    std::vector<std::vector<int>> mul(ord, std::vector<int>(ord));
    std::vector<std::string> labels(ord);
    auto enc = [nb](int x, int y) { return x * nb + y; };
    for (int x1 = 0; x1 < na; ++x1)
        for (int y1 = 0; y1 < nb; ++y1) {
            labels[enc(x1, y1)] = "(" + a.label(x1) + "," + b.label(y1) + ")";
            for (int x2 = 0; x2 < na; ++x2)
                for (int y2 = 0; y2 < nb; ++y2)
                    mul[enc(x1, y1)][enc(x2, y2)] = enc(a.mul(x1, x2), b.mul(y1, y2));
        }
    return from_table(std::move(mul), std::move(labels), a.name() + "x" + b.name());
}

bool FiniteGroup::is_abelian() const {
    for (int i = 0; i < order_; ++i)
        for (int j = i + 1; j < order_; ++j)
            if (mul_[i][j] != mul_[j][i]) return false;
    return true;
}

std::vector<int> FiniteGroup::center() const {
    std::vector<int> z;
    for (int x = 0; x < order_; ++x) {
        bool central = true;
        for (int g = 0; g < order_ && central; ++g) central = mul_[x][g] == mul_[g][x];
        if (central) z.push_back(x);
    }
    return z;
}

std::vector<int> centralizer_of(const FiniteGroup& g, int x) {
    std::vector<int> c;
    for (int h = 0; h < g.order(); ++h)
        if (g.mul(h, x) == g.mul(x, h)) c.push_back(h);
    return c;
}

ClassData class_data(const FiniteGroup& g) {
    ClassData cd;
    int n = g.order();
    cd.class_of.assign(n, -1);
    std::vector<std::vector<int>> classes;
    for (int x = 0; x < n; ++x) {
        if (cd.class_of[x] >= 0) continue;
        std::vector<int> cls;
        std::vector<bool> seen(n, false);
        for (int h = 0; h < n; ++h) {
            int y = g.conj(h, x);
            if (!seen[y]) {
                seen[y] = true;
                cls.push_back(y);
            }
        }
        std::sort(cls.begin(), cls.end());
        int rep = cls.front();  // smallest member represents the class
        for (int y : cls) cd.class_of[y] = rep;
        classes.push_back(std::move(cls));
    }
    std::sort(classes.begin(), classes.end(), [](const auto& a, const auto& b) {
        if (a.front() == 0) return true;
        if (b.front() == 0) return false;
        if (a.size() != b.size()) return a.size() < b.size();
        return a.front() < b.front();
    });
    for (auto& cls : classes) {
        int rep = cls.front();
        cd.reps.push_back(rep);
        cd.centralizers[rep] = centralizer_of(g, rep);
        cd.class_members[rep] = std::move(cls);
    }
    return cd;
}

Transversal transversal(const FiniteGroup& g, const ClassData& cd, int x) {
    if (std::find(cd.reps.begin(), cd.reps.end(), x) == cd.reps.end())
        throw NotARepresentative(std::to_string(x) + " is not a chosen class representative");
    Transversal t;
    t.x = x;
    t.centralizer = cd.centralizers.at(x);
    t.coset_of.assign(g.order(), -1);
    for (int e = 0; e < g.order(); ++e) {
        if (t.coset_of[e] >= 0) continue;
        int j = static_cast<int>(t.gammas.size());
        t.gammas.push_back(e);  // gamma_0 = 1 because the scan starts at 0
        for (int h : t.centralizer) t.coset_of[g.mul(h, e)] = j;
        t.conjugates.push_back(g.conj(e, x));
    }
    return t;
}

std::pair<int, int> coset_walk(const FiniteGroup& g, const Transversal& t, int j, int elem) {
    if (j < 0 || j >= static_cast<int>(t.gammas.size()))
        throw IndexOutOfRange("coset index " + std::to_string(j) + " out of range");
    int w = g.mul(t.gammas[j], elem);
    int s = t.coset_of[w];
    int h = g.mul(w, g.inv(t.gammas[s]));
    return {h, s};
}

Subgroup make_subgroup(const FiniteGroup& g, const std::vector<int>& elements) {
    Subgroup s;
    std::vector<int> elems = elements;
    std::sort(elems.begin(), elems.end());
    int n = static_cast<int>(elems.size());
    if (n == 0 || elems[0] != 0) throw NotAGroup("subgroup must contain the identity");
    s.from_parent.assign(g.order(), -1);
    for (int i = 0; i < n; ++i) s.from_parent[elems[i]] = i;
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = g.label(elems[i]);
        for (int j = 0; j < n; ++j) {
            int p = g.mul(elems[i], elems[j]);
            if (s.from_parent[p] < 0) throw NotAGroup("subset not closed under multiplication");
            mul[i][j] = s.from_parent[p];
        }
    }
    s.to_parent = std::move(elems);
    s.group = FiniteGroup::from_table(std::move(mul), std::move(labels), g.name() + "-sub");
    return s;
}

FiniteGroup relabel(const FiniteGroup& g, const std::vector<int>& perm) {
    int n = g.order();
    if (static_cast<int>(perm.size()) != n || perm[0] != 0)
        throw NotAGroup("relabeling must be a permutation fixing 0");
    std::vector<int> inv_perm(n, -1);
    for (int i = 0; i < n; ++i) {
        if (perm[i] < 0 || perm[i] >= n || inv_perm[perm[i]] >= 0)
            throw NotAGroup("relabeling must be a permutation fixing 0");
        inv_perm[perm[i]] = i;
    }
    std::vector<std::vector<int>> mul(n, std::vector<int>(n));
    std::vector<std::string> labels(n);
    for (int i = 0; i < n; ++i) {
        labels[i] = g.label(perm[i]);
        for (int j = 0; j < n; ++j) mul[i][j] = inv_perm[g.mul(perm[i], perm[j])];
    }
    return FiniteGroup::from_table(std::move(mul), std::move(labels), g.name() + "-relabeled");
}

}  // namespace symcoh
