#pragma once

#include <algorithm>
#include <array>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "chopf/common.hpp"

namespace chopf {

/// Finite group given by its full multiplication table. Everything here is
/// deliberately naive enumeration: this class is the independent oracle the
/// Hopf-side computations are tested against, so it must not share any code
/// with them.
class FiniteGroup {
public:
    FiniteGroup(std::vector<std::vector<int>> table, std::vector<std::string> names,
                std::string groupName = "G")
        : table_(std::move(table)), names_(std::move(names)), name_(std::move(groupName)) {
        n_ = static_cast<int>(table_.size());
        if (n_ < 1 || n_ > kMaxOrder) throw ChopfError("oracle group order out of range (<= 24)");
        if (names_.size() != static_cast<size_t>(n_)) throw ChopfError("group names length mismatch");
        for (const auto& row : table_) {
            if (row.size() != static_cast<size_t>(n_)) throw ChopfError("group table not square");
            for (int v : row)
                if (v < 0 || v >= n_) throw ChopfError("group table entry out of range");
        }
        validateAxioms();
    }

    static constexpr int kMaxOrder = 24;

    int order() const { return n_; }
    int mul(int a, int b) const { return table_[a][b]; }
    int identity() const { return id_; }
    int inv(int a) const { return inv_[a]; }
    int conj(int g, int x) const { return mul(mul(g, x), inv(g)); }
    const std::string& name(int a) const { return names_[a]; }
    const std::string& groupName() const { return name_; }
    const std::vector<std::string>& names() const { return names_; }

    std::optional<int> elementByName(const std::string& s) const {
        for (int i = 0; i < n_; ++i)
            if (names_[i] == s) return i;
        return std::nullopt;
    }

    using Sub = std::vector<int>;  // sorted element list, always contains identity

    Sub closure(std::vector<int> gens) const {
        std::set<int> have{id_};
        std::vector<int> work(have.begin(), have.end());
        for (int g : gens)
            if (!have.count(g)) { have.insert(g); work.push_back(g); }
        bool grew = true;
        while (grew) {
            grew = false;
            std::vector<int> cur(have.begin(), have.end());
            for (int a : cur)
                for (int b : cur) {
                    int c = mul(a, b);
                    if (!have.count(c)) { have.insert(c); grew = true; }
                }
        }
        return Sub(have.begin(), have.end());
    }

    /// All subgroups, by saturating one-generator extensions of known
    /// subgroups. Deterministic order: by size, then lexicographic.
    std::vector<Sub> allSubgroups() const {
        std::set<Sub> found;
        found.insert(Sub{id_});
        bool grew = true;
        while (grew) {
            grew = false;
            auto snapshot = found;
            for (const auto& H : snapshot)
                for (int g = 0; g < n_; ++g) {
                    auto gens = H;
                    gens.push_back(g);
                    auto K = closure(gens);
                    if (found.insert(K).second) grew = true;
                }
        }
        std::vector<Sub> out(found.begin(), found.end());
        std::sort(out.begin(), out.end(), [](const Sub& a, const Sub& b) {
            if (a.size() != b.size()) return a.size() < b.size();
            return a < b;
        });
        return out;
    }

    bool isSubgroup(const Sub& H) const {
        std::set<int> s(H.begin(), H.end());
        if (!s.count(id_)) return false;
        for (int a : H)
            for (int b : H)
                if (!s.count(mul(a, b))) return false;
        return true;
    }

    bool isNormal(const Sub& H) const {
        std::set<int> s(H.begin(), H.end());
        for (int g = 0; g < n_; ++g)
            for (int x : H)
                if (!s.count(conj(g, x))) return false;
        return true;
    }

    std::vector<Sub> normalSubgroups() const {
        std::vector<Sub> out;
        for (const auto& H : allSubgroups())
            if (isNormal(H)) out.push_back(H);
        return out;
    }

    /// [N, M]: closure of all n m n^{-1} m^{-1}.
    Sub commutatorSubgroup(const Sub& N, const Sub& M) const {
        std::vector<int> gens;
        for (int a : N)
            for (int b : M) gens.push_back(mul(mul(a, b), mul(inv_[a], inv_[b])));
        return closure(gens);
    }

    Sub wholeGroup() const {
        Sub out(n_);
        for (int i = 0; i < n_; ++i) out[i] = i;
        return out;
    }

    /// Lower central series by enumeration; nullopt when not nilpotent.
    std::optional<int> nilpotencyClass() const {
        Sub cur = wholeGroup();
        int c = 0;
        while (cur.size() > 1) {
            Sub next = commutatorSubgroup(wholeGroup(), cur);
            if (next == cur) return std::nullopt;
            cur = next;
            ++c;
        }
        return c;
    }

    Sub productSet(const Sub& H, const Sub& K) const {
        std::set<int> s;
        for (int a : H)
            for (int b : K) s.insert(mul(a, b));
        return Sub(s.begin(), s.end());
    }

    Sub intersectSub(const Sub& H, const Sub& K) const {
        std::set<int> k(K.begin(), K.end());
        Sub out;
        for (int a : H)
            if (k.count(a)) out.push_back(a);
        return out;
    }

    std::string subName(const Sub& H) const {
        std::string s = "{";
        for (size_t i = 0; i < H.size(); ++i) s += (i ? "," : "") + names_[H[i]];
        return s + "}";
    }

private:
    void validateAxioms() {
        id_ = -1;
        for (int e = 0; e < n_; ++e) {
            bool ok = true;
            for (int a = 0; a < n_; ++a)
                if (mul(e, a) != a || mul(a, e) != a) { ok = false; break; }
            if (ok) { id_ = e; break; }
        }
        if (id_ < 0) throw ChopfError("group table has no identity");
        inv_.assign(n_, -1);
        for (int a = 0; a < n_; ++a) {
            for (int b = 0; b < n_; ++b)
                if (mul(a, b) == id_ && mul(b, a) == id_) { inv_[a] = b; break; }
            if (inv_[a] < 0) throw ChopfError("group table not invertible at " + names_[a]);
        }
        for (int a = 0; a < n_; ++a)
            for (int b = 0; b < n_; ++b)
                for (int c = 0; c < n_; ++c)
                    if (mul(mul(a, b), c) != mul(a, mul(b, c)))
                        throw ChopfError("group table not associative");
    }

    std::vector<std::vector<int>> table_;
    std::vector<std::string> names_;
    std::string name_;
    int n_ = 0;
    int id_ = 0;
    std::vector<int> inv_;
};

/// A subgroup repackaged as a standalone group (element order preserved).
inline FiniteGroup subgroupGroup(const FiniteGroup& G, const FiniteGroup::Sub& H,
                                 const std::string& name = "") {
    if (!G.isSubgroup(H)) throw ChopfError("subgroupGroup: not a subgroup");
    std::map<int, int> pos;
    for (size_t i = 0; i < H.size(); ++i) pos[H[i]] = static_cast<int>(i);
    int m = static_cast<int>(H.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        names[i] = G.name(H[i]);
        for (int j = 0; j < m; ++j) table[i][j] = pos.at(G.mul(H[i], H[j]));
    }
    return FiniteGroup(std::move(table), std::move(names),
                       name.empty() ? "sub(" + G.groupName() + ")" : name);
}

struct GroupQuotient {
    FiniteGroup group;
    std::vector<int> cosetOf;  // element -> coset index
};

inline GroupQuotient quotientGroup(const FiniteGroup& G, const FiniteGroup::Sub& N) {
    if (!G.isNormal(N)) throw ChopfError("oracle: quotient by a non-normal subgroup");
    int n = G.order();
    std::vector<int> cosetOf(n, -1);
    std::vector<int> reps;
    for (int g = 0; g < n; ++g) {
        if (cosetOf[g] >= 0) continue;
        int c = static_cast<int>(reps.size());
        reps.push_back(g);
        for (int x : N) cosetOf[G.mul(g, x)] = c;
    }
    int m = static_cast<int>(reps.size());
    std::vector<std::vector<int>> table(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int i = 0; i < m; ++i) {
        names[i] = "[" + G.name(reps[i]) + "]";
        for (int j = 0; j < m; ++j) table[i][j] = cosetOf[G.mul(reps[i], reps[j])];
    }
    return {FiniteGroup(std::move(table), std::move(names), G.groupName() + "/N"), std::move(cosetOf)};
}

inline FiniteGroup cyclicGroup(int n, const std::string& name = "") {
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    for (int a = 0; a < n; ++a) {
        names[a] = "g" + std::to_string(a);
        for (int b = 0; b < n; ++b) t[a][b] = (a + b) % n;
    }
    names[0] = "e";
    return FiniteGroup(std::move(t), std::move(names), name.empty() ? "Z" + std::to_string(n) : name);
}

inline FiniteGroup productGroup(const FiniteGroup& A, const FiniteGroup& B) {
    int n = A.order() * B.order();
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    std::vector<std::string> names(n);
    auto enc = [&](int a, int b) { return a * B.order() + b; };
    for (int a = 0; a < A.order(); ++a)
        for (int b = 0; b < B.order(); ++b) {
            names[enc(a, b)] = "(" + A.name(a) + "," + B.name(b) + ")";
            for (int c = 0; c < A.order(); ++c)
                for (int d = 0; d < B.order(); ++d)
                    t[enc(a, b)][enc(c, d)] = enc(A.mul(a, c), B.mul(b, d));
        }
    return FiniteGroup(std::move(t), std::move(names), A.groupName() + "x" + B.groupName());
}

/// Dihedral group of order 2n, elements r^k and s r^k with s r s = r^{-1}.
inline FiniteGroup dihedralGroup(int n) {
    int m = 2 * n;
    auto enc = [&](int flip, int rot) { return flip * n + rot; };
    std::vector<std::vector<int>> t(m, std::vector<int>(m));
    std::vector<std::string> names(m);
    for (int f = 0; f < 2; ++f)
        for (int r = 0; r < n; ++r) {
            std::string nm = f ? "s" : "";
            if (r) nm += (r == 1) ? "r" : "r" + std::to_string(r);
            if (nm.empty()) nm = "e";
            names[enc(f, r)] = nm;
            // (s^f r^a)(s^g r^b) = s^{f+g} r^{(-1)^g a + b}
            for (int g = 0; g < 2; ++g)
                for (int b = 0; b < n; ++b) {
                    int rot = ((g ? n - r : r) + b) % n;
                    t[enc(f, r)][enc(g, b)] = enc((f + g) % 2, rot);
                }
        }
    return FiniteGroup(std::move(t), std::move(names), "D" + std::to_string(n));
}

/// Symmetric group on 3 letters with cycle-notation names.
inline FiniteGroup symmetricGroup3() {
    // one-line notation over {1,2,3}
    std::vector<std::array<int, 3>> perms = {
        {1, 2, 3}, {2, 1, 3}, {3, 2, 1}, {1, 3, 2}, {2, 3, 1}, {3, 1, 2}};
    std::vector<std::string> names = {"e", "(12)", "(13)", "(23)", "(123)", "(132)"};
    auto indexOf = [&](const std::array<int, 3>& p) {
        for (size_t i = 0; i < perms.size(); ++i)
            if (perms[i] == p) return static_cast<int>(i);
        throw ChopfError("S3 permutation lookup failed");
    };
    int n = 6;
    std::vector<std::vector<int>> t(n, std::vector<int>(n));
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b) {
            std::array<int, 3> c{};
            for (int i = 0; i < 3; ++i) c[i] = perms[a][perms[b][i] - 1];  // a after b
            t[a][b] = indexOf(c);
        }
    return FiniteGroup(std::move(t), std::move(names), "S3");
}

/// Quaternion group {1,-1,i,-i,j,-j,k,-k}.
inline FiniteGroup quaternionGroup8() {
    // unit index 0..3 = 1,i,j,k; element = unit + 4*sign
    auto enc = [](int sign, int unit) { return sign * 4 + unit; };
    // i*j=k etc., u*u=-1 for u in {i,j,k}
    static const int unitProd[4][4] = {{0, 1, 2, 3}, {1, 0, 3, 2}, {2, 3, 0, 1}, {3, 2, 1, 0}};
    static const int signProd[4][4] = {{+1, +1, +1, +1},
                                       {+1, -1, +1, -1},
                                       {+1, -1, -1, +1},
                                       {+1, +1, -1, -1}};
    std::vector<std::vector<int>> t(8, std::vector<int>(8));
    std::vector<std::string> names = {"1", "i", "j", "k", "-1", "-i", "-j", "-k"};
    for (int s1 = 0; s1 < 2; ++s1)
        for (int u1 = 0; u1 < 4; ++u1)
            for (int s2 = 0; s2 < 2; ++s2)
                for (int u2 = 0; u2 < 4; ++u2) {
                    int sign = (s1 + s2) % 2;
                    if (signProd[u1][u2] < 0) sign = 1 - sign;
                    t[enc(s1, u1)][enc(s2, u2)] = enc(sign, unitProd[u1][u2]);
                }
    return FiniteGroup(std::move(t), std::move(names), "Q8");
}

}  // namespace chopf
