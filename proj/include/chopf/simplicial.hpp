#pragma once

#include "chopf/actions.hpp"

namespace chopf {

/// Finite tower of color Hopf algebras with faces d^n_i: H_n -> H_{n-1}
/// (0 <= i <= n) and degeneracies s^n_j: H_{n-1} -> H_n (0 <= j <= n-1),
/// materialized up to the truncation level.
template <class K>
struct SimplicialHopf {
    std::vector<ColorHopfAlgebra<K>> levels;
    std::vector<std::vector<GradedMap<K>>> faces;   // faces[n][i], n >= 1
    std::vector<std::vector<GradedMap<K>>> degens;  // degens[n][j], n >= 1
    int coskeletalFrom = -1;  // >= 0 when the object is the coskeleton of its
                              // truncation at that level

    int truncation() const { return static_cast<int>(levels.size()) - 1; }

    const GradedMap<K>& face(int n, int i) const { return faces[static_cast<size_t>(n)][static_cast<size_t>(i)]; }
    const GradedMap<K>& degen(int n, int j) const { return degens[static_cast<size_t>(n)][static_cast<size_t>(j)]; }
};

template <class K>
SimplicialHopf<K> constantSimplicial(const ColorHopfAlgebra<K>& A, int levelCount) {
    SimplicialHopf<K> S;
    auto id = identityMap<K>(A.space);
    for (int n = 0; n <= levelCount; ++n) {
        S.levels.push_back(A);
        S.faces.emplace_back();
        S.degens.emplace_back();
        if (n >= 1) {
            for (int i = 0; i <= n; ++i) S.faces.back().push_back(id);
            for (int j = 0; j < n; ++j) S.degens.back().push_back(id);
        }
    }
    return S;
}

/// All three simplicial identity families plus the morphism property of
/// every face and degeneracy, with the failing indices named.
template <class K>
ValidationReport validateSimplicial(const SimplicialHopf<K>& S) {
    ValidationReport rep;
    const int N = S.truncation();
    for (int n = 1; n <= N; ++n) {
        for (int i = 0; i <= n; ++i)
            rep.add("morphism.d" + std::to_string(n) + "_" + std::to_string(i),
                    verifyMorphism(S.levels[n], S.levels[n - 1], S.face(n, i)).ok());
        for (int j = 0; j < n; ++j)
            rep.add("morphism.s" + std::to_string(n) + "_" + std::to_string(j),
                    verifyMorphism(S.levels[n - 1], S.levels[n], S.degen(n, j)).ok());
    }
    // 1) d_i d_j = d_{j-1} d_i for i < j
    for (int n = 2; n <= N; ++n)
        for (int j = 1; j <= n; ++j)
            for (int i = 0; i < j; ++i)
                rep.add("simplicial.d" + std::to_string(i) + "d" + std::to_string(j) + "@" +
                            std::to_string(n),
                        mapEqual(compose(S.face(n - 1, i), S.face(n, j)),
                                 compose(S.face(n - 1, j - 1), S.face(n, i))));
    // 2) s_i s_j = s_{j+1} s_i for i <= j
    for (int n = 2; n <= N; ++n)
        for (int j = 0; j <= n - 2; ++j)
            for (int i = 0; i <= j; ++i)
                rep.add("simplicial.s" + std::to_string(i) + "s" + std::to_string(j) + "@" +
                            std::to_string(n),
                        mapEqual(compose(S.degen(n, i), S.degen(n - 1, j)),
                                 compose(S.degen(n, j + 1), S.degen(n - 1, i))));
    // 3) d_i s_j relations
    for (int n = 1; n <= N; ++n)
        for (int j = 0; j < n; ++j)
            for (int i = 0; i <= n; ++i) {
                std::string name = "simplicial.d" + std::to_string(i) + "s" + std::to_string(j) +
                                   "@" + std::to_string(n);
                auto lhs = compose(S.face(n, i), S.degen(n, j));
                if (i == j || i == j + 1) {
                    rep.add(name, mapEqual(lhs, identityMap<K>(S.levels[n - 1].space)));
                } else if (i < j) {
                    rep.add(name, mapEqual(lhs, compose(S.degen(n - 1, j - 1), S.face(n - 1, i))));
                } else {
                    rep.add(name, mapEqual(lhs, compose(S.degen(n - 1, j), S.face(n - 1, i - 1))));
                }
            }
    return rep;
}

template <class K>
struct MooreComplex {
    std::vector<SubAlgebra<K>> terms;        // M_0..M_T materialized
    std::vector<GradedMap<K>> differentials; // differentials[n]: M_n -> M_{n-1}, n >= 1
    int length = 0;
    bool vanishingCertified = false;  // levels above the truncation certified
                                      // by the coskeleton corollary
    ValidationReport checks;
};

template <class K>
bool isTrivialAlgebra(const ColorHopfAlgebra<K>& A) { return A.dim() == 1; }

/// Moore complex: M_n is the joint Hopf kernel of the first n faces; the
/// differential is the restriction of the last face. For an object that is
/// the coskeleton of its truncation, the term one level above the truncation
/// is Hker of the last materialized differential and everything higher is k.
template <class K>
MooreComplex<K> mooreComplex(const SimplicialHopf<K>& S) {
    MooreComplex<K> M;
    const int N = S.truncation();
    M.terms.push_back(
        materializeSubalgebra(S.levels[0], Subspace<K>::full(S.levels[0].space), "M0"));
    for (int n = 1; n <= N; ++n) {
        std::vector<const ColorHopfAlgebra<K>*> targets;
        std::vector<const GradedMap<K>*> maps;
        for (int i = 0; i < n; ++i) {
            targets.push_back(&S.levels[n - 1]);
            maps.push_back(&S.face(n, i));
        }
        auto carrier = hopfKernelJoint(S.levels[n], targets, maps);
        M.terms.push_back(materializeSubalgebra(S.levels[n], carrier, "M" + std::to_string(n)));
    }
    // differentials: restriction of d^n_n, must land in M_{n-1}
    for (int n = 1; n <= N; ++n) {
        const auto& src = M.terms[static_cast<size_t>(n)];
        const auto& dst = M.terms[static_cast<size_t>(n - 1)];
        std::vector<Eigen::Triplet<K>> trip;
        bool lands = true;
        for (Idx c = 0; c < src.algebra.dim(); ++c) {
            auto img = S.face(n, n).apply(src.incl.col(c));
            auto coords = dst.carrier.coordinates(img);
            if (!coords.has_value()) { lands = false; break; }
            for (size_t r = 0; r < coords->size(); ++r)
                if (!isZero((*coords)[r]))
                    trip.emplace_back(static_cast<int>(r), static_cast<int>(c), (*coords)[r]);
        }
        M.checks.add("moore.boundary_lands_" + std::to_string(n), lands);
        if (!lands) { M.checks.require("moore complex"); }
        M.differentials.push_back(GradedMap<K>(src.algebra.space, dst.algebra.space,
                                               spFromTriplets<K>(dst.algebra.dim(),
                                                                 src.algebra.dim(), trip)));
    }
    // proper chain complex: consecutive differentials compose to u eps
    for (int n = 2; n <= N; ++n) {
        const auto& Mn = M.terms[static_cast<size_t>(n)].algebra;
        const auto& Mtar = M.terms[static_cast<size_t>(n - 2)].algebra;
        auto composite = compose(M.differentials[static_cast<size_t>(n - 2)],
                                 M.differentials[static_cast<size_t>(n - 1)]);
        auto trivial = compose(Mtar.unit, Mn.counit);
        M.checks.add("moore.chain_condition_" + std::to_string(n), mapEqual(composite, trivial));
    }
    // length within the materialized range
    M.length = 0;
    for (int n = 1; n <= N; ++n)
        if (!isTrivialAlgebra(M.terms[static_cast<size_t>(n)].algebra)) M.length = n;
    // coskeleton corollary: M_{c+1} = Hker(partial_c), zero above
    if (S.coskeletalFrom >= 1 && S.coskeletalFrom <= N) {
        int c = S.coskeletalFrom;
        const auto& Mc = M.terms[static_cast<size_t>(c)];
        auto aboveCarrier = hopfKernel(Mc.algebra, M.terms[static_cast<size_t>(c - 1)].algebra,
                                       M.differentials[static_cast<size_t>(c - 1)]);
        if (c + 1 <= N) {
            // the materialized term must agree with the corollary
            M.checks.add("moore.coskeleton_term_matches_" + std::to_string(c + 1),
                         M.terms[static_cast<size_t>(c + 1)].algebra.dim() == aboveCarrier.dim());
        } else if (aboveCarrier.dim() > 1) {
            M.length = c + 1;
        }
        M.vanishingCertified = true;
    }
    return M;
}

template <class K>
int mooreLength(const SimplicialHopf<K>& S) { return mooreComplex(S).length; }

namespace detail {

/// Lazy structure of the braided tensor power A^{(x) legs} on flattened
/// tuple indices; nothing quadratic in the power's dimension is stored.
template <class K>
class BraidedPower {
public:
    BraidedPower(const ColorHopfAlgebra<K>& A, int legs) : A_(&A), legs_(legs) {
        dim_ = 1;
        for (int l = 0; l < legs; ++l) dim_ *= A.dim();
        space_ = A.space;
        for (int l = 1; l < legs; ++l) space_ = tensor(space_, A.space);
    }

    Idx dim() const { return dim_; }
    const GradedSpace& space() const { return space_; }
    int legs() const { return legs_; }

    std::vector<Idx> decode(Idx t) const {
        std::vector<Idx> out(static_cast<size_t>(legs_));
        for (int l = legs_ - 1; l >= 0; --l) {
            out[static_cast<size_t>(l)] = t % A_->dim();
            t /= A_->dim();
        }
        return out;
    }
    Idx encode(const std::vector<Idx>& tuple) const {
        Idx t = 0;
        for (Idx x : tuple) t = t * A_->dim() + x;
        return t;
    }

    /// pi_j: id on leg j, counit elsewhere.
    SparseVec<K> leg(Idx t, int j) const {
        auto tup = decode(t);
        K c(1);
        for (int l = 0; l < legs_; ++l) {
            if (l == j) continue;
            c *= A_->counitOf(svUnit<K>(tup[static_cast<size_t>(l)]));
            if (isZero(c)) return {};
        }
        return svUnit<K>(tup[static_cast<size_t>(j)], c);
    }

    /// Product of two tuple basis vectors in the braided tensor algebra:
    /// the twist collects phi(|x_i|, |y_j|) over pairs i > j.
    SparseVec<K> mulTT(Idx s, Idx t) const {
        auto a = decode(s), b = decode(t);
        K tw(1);
        for (int i = 1; i < legs_; ++i)
            for (int j = 0; j < i; ++j)
                tw *= A_->phiDeg(A_->degOf(a[static_cast<size_t>(i)]),
                                 A_->degOf(b[static_cast<size_t>(j)]));
        if (isZero(tw)) return {};
        SparseVec<K> out{{0, tw}};
        Idx stride = 1;
        for (int l = legs_ - 1; l >= 0; --l) {
            SparseVec<K> next;
            for (const auto& [acc, c] : out)
                for (const auto& [r, cr] :
                     A_->mulCol(a[static_cast<size_t>(l)], b[static_cast<size_t>(l)])) {
                    K v = c * cr;
                    if (!isZero(v)) next.emplace_back(acc + r * stride, std::move(v));
                }
            out = std::move(next);
            stride *= A_->dim();
        }
        svNormalize(out);
        return out;
    }

    SparseVec<K> mulVV(const SparseVec<K>& u, const SparseVec<K>& v) const {
        SparseVec<K> out;
        for (const auto& [s, cs] : u)
            for (const auto& [t, ct] : v) {
                K c = cs * ct;
                if (isZero(c)) continue;
                for (const auto& [r, cr] : mulTT(s, t)) {
                    K val = c * cr;
                    if (!isZero(val)) out.emplace_back(r, std::move(val));
                }
            }
        svNormalize(out);
        return out;
    }

    /// Comultiplication of a tuple basis vector; entries are flattened pairs
    /// (left tuple, right tuple) with right index stride dim().
    SparseVec<K> comulCol(Idx t) const {
        auto tup = decode(t);
        // state: (left acc, right acc, coeff, degree of the right part so far)
        struct St { Idx l, r; K c; int rdeg; };
        std::vector<St> states{{0, 0, K(1), A_->space.group.zero()}};
        for (int l = 0; l < legs_; ++l) {
            std::vector<St> next;
            for (const auto& st : states)
                for (const auto& [p, c] : A_->comul.col(tup[static_cast<size_t>(l)])) {
                    auto [x1, x2] = unpairIndex(p, A_->dim());
                    K v = st.c * c * A_->phiDeg(st.rdeg, A_->degOf(x1));
                    if (isZero(v)) continue;
                    next.push_back({st.l * A_->dim() + x1, st.r * A_->dim() + x2, std::move(v),
                                    A_->space.group.add(st.rdeg, A_->degOf(x2))});
                }
            states = std::move(next);
        }
        SparseVec<K> out;
        out.reserve(states.size());
        for (const auto& st : states) out.emplace_back(st.l * dim_ + st.r, st.c);
        svNormalize(out);
        return out;
    }

    SparseVec<K> antipodeCol(Idx t) const {
        auto tup = decode(t);
        SparseVec<K> out{{0, K(1)}};
        Idx stride = 1;
        for (int l = legs_ - 1; l >= 0; --l) {
            SparseVec<K> next;
            for (const auto& [acc, c] : out)
                for (const auto& [r, cr] : A_->antipode.col(tup[static_cast<size_t>(l)])) {
                    K v = c * cr;
                    if (!isZero(v)) next.emplace_back(acc + r * stride, std::move(v));
                }
            out = std::move(next);
            stride *= A_->dim();
        }
        svNormalize(out);
        return out;
    }

    K counitT(Idx t) const {
        auto tup = decode(t);
        K c(1);
        for (Idx x : tup) c *= A_->counitOf(svUnit<K>(x));
        return c;
    }

    SparseVec<K> one() const {
        SparseVec<K> out{{0, K(1)}};
        Idx stride = 1;
        for (int l = legs_ - 1; l >= 0; --l) {
            SparseVec<K> next;
            for (const auto& [acc, c] : out)
                for (const auto& [r, cr] : A_->one()) {
                    K v = c * cr;
                    if (!isZero(v)) next.emplace_back(acc + r * stride, std::move(v));
                }
            out = std::move(next);
            stride *= A_->dim();
        }
        svNormalize(out);
        return out;
    }

private:
    const ColorHopfAlgebra<K>* A_;
    int legs_;
    Idx dim_;
    GradedSpace space_;
};

/// Materializes a Hopf subalgebra of a braided tensor power without ever
/// forming the ambient structure maps.
template <class K>
SubAlgebra<K> materializePowerSub(const BraidedPower<K>& T, const Bicharacter<K>& phi,
                                  const Subspace<K>& carrier, const std::string& name) {
    return materializeViaOps(
        T.space(), phi, carrier, name,
        [&](const SparseVec<K>& u, const SparseVec<K>& v) { return T.mulVV(u, v); },
        [&](Idx t) { return T.comulCol(t); }, [&](Idx t) { return T.antipodeCol(t); },
        [&](Idx t) { return T.counitT(t); }, [&]() { return T.one(); });
}

}  // namespace detail

template <class K>
struct CoskeletonResult {
    SimplicialHopf<K> extended;
    Subspace<K> topCarrier;  // the matching subspace inside the tensor power
    ValidationReport checks;
};

/// One coskeleton step: the matching object of the top truncation level,
/// realized as the joint equalizer subalgebra of the braided tensor power,
/// with faces the leg projections and degeneracies solved from the
/// universal property. The factorization is certified unique by recovering
/// the cone components from the result.
template <class K>
CoskeletonResult<K> coskeletonStep(const SimplicialHopf<K>& S, Idx tupleCap = 70000) {
    const int n = S.truncation();
    if (n < 1) throw ChopfError("coskeleton: need at least a 1-truncated object");
    const auto& Xn = S.levels[static_cast<size_t>(n)];
    const auto& Xm = S.levels[static_cast<size_t>(n - 1)];
    const int legs = n + 2;
    detail::BraidedPower<K> T(Xn, legs);
    if (T.dim() > tupleCap)
        throw ChopfError("coskeleton: matching-space dimension " + std::to_string(T.dim()) +
                         " exceeds the cap " + std::to_string(tupleCap));

    // conditions: w1 (x) (d_i pi_j)(w2) = w1 (x) (d_{j-1} pi_i)(w2), i < j
    std::vector<std::tuple<Idx, Idx, K>> trip;
    const Idx nm = Xm.dim();
    Idx condBase = 0;
    for (int j = 1; j < legs; ++j)
        for (int i = 0; i < j; ++i) {
            for (Idx t = 0; t < T.dim(); ++t) {
                for (const auto& [p, c] : T.comulCol(t)) {
                    Idx w1 = p / T.dim(), w2 = p % T.dim();
                    for (const auto& [x, cx] : T.leg(w2, j))
                        for (const auto& [r, cr] : S.face(n, i).col(x)) {
                            K v = c * cx * cr;
                            if (!isZero(v))
                                trip.emplace_back(condBase + w1 * nm + r, t, std::move(v));
                        }
                    for (const auto& [x, cx] : T.leg(w2, i))
                        for (const auto& [r, cr] : S.face(n, j - 1).col(x)) {
                            K v = c * cx * cr;
                            if (!isZero(v)) trip.emplace_back(condBase + w1 * nm + r, t, -v);
                        }
                }
            }
            condBase += T.dim() * nm;
        }
    auto carrier =
        Subspace<K>::spanGraded(T.space(), nullspaceFromTriplets<K>(T.dim(), std::move(trip)));
    auto object = detail::materializePowerSub(T, Xn.phi, carrier,
                                              "cosk" + std::to_string(n) + "(" + Xn.name + ")");

    CoskeletonResult<K> out{S, carrier, ValidationReport{}};
    out.extended.levels.push_back(object.algebra);
    out.extended.faces.emplace_back();
    out.extended.degens.emplace_back();

    // faces: leg projections restricted to the matching object
    for (int i = 0; i < legs; ++i) {
        std::vector<Eigen::Triplet<K>> tf;
        Idx col = 0;
        for (const auto& [piv, row] : carrier.rows()) {
            SparseVec<K> img;
            for (const auto& [t, c] : row)
                for (const auto& [x, cx] : T.leg(t, i)) {
                    K v = c * cx;
                    if (!isZero(v)) img.emplace_back(x, std::move(v));
                }
            svNormalize(img);
            for (const auto& [r, c] : img)
                tf.emplace_back(static_cast<int>(r), static_cast<int>(col), c);
            ++col;
        }
        out.extended.faces.back().push_back(GradedMap<K>(
            object.algebra.space, Xn.space, spFromTriplets<K>(Xn.dim(), object.algebra.dim(), tf)));
    }

    // degeneracies from the universal property: the cone for s_j has
    // components forced by the simplicial identities
    for (int j = 0; j <= n; ++j) {
        std::vector<GradedMap<K>> cone;
        for (int i = 0; i < legs; ++i) {
            if (i == j || i == j + 1) {
                cone.push_back(identityMap<K>(Xn.space));
            } else if (i < j) {
                cone.push_back(compose(S.degen(n, j - 1), S.face(n, i)));
            } else {
                cone.push_back(compose(S.degen(n, j), S.face(n, i - 1)));
            }
        }
        // factorization (c_0 (x) ... (x) c_{n+1}) o Delta^{n+1}
        std::vector<Eigen::Triplet<K>> tsj;
        bool landed = true;
        for (Idx x = 0; x < Xn.dim(); ++x) {
            // iterated Sweedler expansion of e_x into `legs` parts, then the
            // cone components applied legwise
            struct Part { std::vector<Idx> parts; K c; };
            std::vector<Part> cur{{{x}, K(1)}};
            for (int split = 1; split < legs; ++split) {
                std::vector<Part> next;
                for (const auto& st : cur) {
                    Idx last = st.parts.back();
                    for (const auto& [p, c] : Xn.comul.col(last)) {
                        auto [a, b] = unpairIndex(p, Xn.dim());
                        Part np;
                        np.parts.assign(st.parts.begin(), st.parts.end() - 1);
                        np.parts.push_back(a);
                        np.parts.push_back(b);
                        np.c = st.c * c;
                        if (!isZero(np.c)) next.push_back(std::move(np));
                    }
                }
                cur = std::move(next);
            }
            SparseVec<K> img;
            for (const auto& part : cur) {
                // apply cone components legwise and flatten
                SparseVec<K> acc{{0, part.c}};
                for (int l = 0; l < legs; ++l) {
                    SparseVec<K> nxt;
                    for (const auto& [a, ca] : acc)
                        for (const auto& [r, cr] : cone[static_cast<size_t>(l)].col(
                                 part.parts[static_cast<size_t>(l)])) {
                            K v = ca * cr;
                            if (!isZero(v)) nxt.emplace_back(a * Xn.dim() + r, std::move(v));
                        }
                    acc = std::move(nxt);
                }
                for (auto& e : acc) img.push_back(std::move(e));
            }
            svNormalize(img);
            auto coords = carrier.coordinates(img);
            if (!coords.has_value()) { landed = false; break; }
            for (size_t r = 0; r < coords->size(); ++r)
                if (!isZero((*coords)[r]))
                    tsj.emplace_back(static_cast<int>(r), static_cast<int>(x), (*coords)[r]);
        }
        out.checks.add("coskeleton.degeneracy_s" + std::to_string(j) + "_factors", landed);
        if (!landed)
            throw ChopfError("coskeleton: degeneracy cone failed to factor (library bug)");
        out.extended.degens.back().push_back(
            GradedMap<K>(Xn.space, object.algebra.space,
                         spFromTriplets<K>(object.algebra.dim(), Xn.dim(), tsj)));
        // uniqueness: the projections recover the cone components
        bool recovers = true;
        for (int i = 0; i < legs && recovers; ++i)
            recovers = mapEqual(compose(out.extended.faces.back()[static_cast<size_t>(i)],
                                        out.extended.degens.back()[static_cast<size_t>(j)]),
                                cone[static_cast<size_t>(i)]);
        out.checks.add("coskeleton.factorization_unique_s" + std::to_string(j), recovers);
    }
    if (out.extended.coskeletalFrom < 0) out.extended.coskeletalFrom = n;
    return out;
}

/// The Moore-complex comparison map f^n_i(x) = x_1 s^n_i d^n_i(S(x_2)).
template <class K>
GradedMap<K> mooreProjection(const SimplicialHopf<K>& S, int n, int i) {
    const auto& Xn = S.levels[static_cast<size_t>(n)];
    auto sd = compose(S.degen(n, i), S.face(n, i));
    std::vector<Eigen::Triplet<K>> trip;
    for (Idx x = 0; x < Xn.dim(); ++x) {
        SparseVec<K> out;
        for (const auto& [p, c] : Xn.comul.col(x)) {
            auto [x1, x2] = unpairIndex(p, Xn.dim());
            auto tail = sd.apply(Xn.antipode.col(x2));
            for (const auto& [r, cr] : Xn.mulVV(svUnit<K>(x1), tail)) {
                K v = c * cr;
                if (!isZero(v)) out.emplace_back(r, std::move(v));
            }
        }
        svNormalize(out);
        for (const auto& [r, c] : out)
            trip.emplace_back(static_cast<int>(r), static_cast<int>(x), c);
    }
    return GradedMap<K>(Xn.space, Xn.space, spFromTriplets<K>(Xn.dim(), Xn.dim(), trip));
}

template <class K>
struct SimplicialFromXmod {
    SimplicialHopf<K> object;
    CrossedModule<K> source;
    ValidationReport checks;
};

/// The 2-truncated simplicial object of a crossed module (levels A, H x| A,
/// H x|_* (H x| A)), extended to level 3. Within the cap the extension is
/// the literal coskeleton step; above it the level-3 smash H x|_** H_2 is
/// built from the nerve formulas and cross-checked against the coskeleton
/// on every case that fits.
template <class K>
SimplicialFromXmod<K> xmodToSimplicial(const CrossedModule<K>& X, Idx assocCap = 300,
                                       Idx coskCap = 70000) {
    validateCrossedModule(X).require("xmodToSimplicial: invalid crossed module");
    SimplicialFromXmod<K> out{SimplicialHopf<K>{}, X, ValidationReport{}};
    auto& S = out.object;
    S.coskeletalFrom = 2;

    const auto& A = X.base;
    const auto& H = X.top;
    const Idx nh = H.dim(), na = A.dim();

    // level 1: H x| A with d0 = eps (x) id, d1 = mul(d (x) id), s0 = iota2
    auto smash1 = smashProduct(X.action(), assocCap, false);
    const Idx n1 = smash1.product.dim();
    std::vector<Eigen::Triplet<K>> t11;
    for (Idx h = 0; h < nh; ++h)
        for (Idx b = 0; b < na; ++b)
            for (const auto& [r, c] : A.mulVV(X.d.col(h), svUnit<K>(b)))
                t11.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(h, b, na)), c);
    GradedMap<K> d11(smash1.product.space, A.space, spFromTriplets<K>(na, n1, t11));

    S.levels.push_back(A);
    S.faces.emplace_back();
    S.degens.emplace_back();
    S.levels.push_back(smash1.product);
    S.faces.push_back({smash1.projBase, d11});
    S.degens.push_back({smash1.inclBase});

    // the (H x| A)-action on H: (h (x) a) * h' = (d(h) a) . h'
    auto starAction = [&](const ColorHopfAlgebra<K>& actor, const GradedMap<K>& toBase) {
        std::vector<Eigen::Triplet<K>> ta;
        for (Idx t = 0; t < actor.dim(); ++t) {
            auto base = toBase.col(t);
            for (Idx h = 0; h < nh; ++h) {
                SparseVec<K> img;
                for (const auto& [b, cb] : base)
                    for (const auto& [r, cr] : X.act.col(pairIndex(b, h, nh))) {
                        K v = cb * cr;
                        if (!isZero(v)) img.emplace_back(r, std::move(v));
                    }
                svNormalize(img);
                for (const auto& [r, c] : img)
                    ta.emplace_back(static_cast<int>(r),
                                    static_cast<int>(pairIndex(t, h, nh)), c);
            }
        }
        return ModuleAction<K>{actor, H,
                               GradedMap<K>(tensor(actor.space, H.space), H.space,
                                            spFromTriplets<K>(nh, actor.dim() * nh, ta))};
    };

    auto star1 = starAction(smash1.product, d11);
    out.checks.merge(validateModuleAction(star1), "star_action");
    auto smash2 = smashProduct(star1, assocCap, false);
    const Idx n2 = smash2.product.dim();

    // faces and degeneracies at level 2
    std::vector<Eigen::Triplet<K>> t21, t22, ts21;
    for (Idx h = 0; h < nh; ++h)
        for (Idx u = 0; u < n1; ++u) {
            Idx col = pairIndex(h, u, n1);
            auto [h2, a] = unpairIndex(u, na);
            // d21: h (x) h' (x) a -> h h' (x) a
            for (const auto& [x, cx] : H.mulCol(h, h2))
                t21.emplace_back(static_cast<int>(pairIndex(x, a, na)), static_cast<int>(col), cx);
            // d22: h (x) h' (x) a -> h (x) d(h') a
            for (const auto& [x, cx] : A.mulVV(X.d.col(h2), svUnit<K>(a)))
                t22.emplace_back(static_cast<int>(pairIndex(h, x, na)), static_cast<int>(col), cx);
        }
    // s21: h (x) a -> h (x) 1_H (x) a
    for (Idx h = 0; h < nh; ++h)
        for (Idx a = 0; a < na; ++a)
            for (const auto& [oneH, c1] : H.one())
                ts21.emplace_back(
                    static_cast<int>(pairIndex(h, pairIndex(oneH, a, na), n1)),
                    static_cast<int>(pairIndex(h, a, na)), c1);
    GradedMap<K> d21(smash2.product.space, smash1.product.space,
                     spFromTriplets<K>(n1, n2, t21));
    GradedMap<K> d22(smash2.product.space, smash1.product.space,
                     spFromTriplets<K>(n1, n2, t22));
    GradedMap<K> s21(smash1.product.space, smash2.product.space,
                     spFromTriplets<K>(n2, n1, ts21));

    S.levels.push_back(smash2.product);
    S.faces.push_back({smash2.projBase, d21, d22});
    S.degens.push_back({smash2.inclBase, s21});

    // level 3 by the same semidirect pattern; the action factors through
    // d11 o d22: H_2 -> A
    auto star2 = starAction(smash2.product, compose(d11, d22));
    out.checks.merge(validateModuleAction(star2), "star2_action");
    auto smash3 = smashProduct(star2, assocCap, false);
    const Idx n3 = smash3.product.dim();

    std::vector<Eigen::Triplet<K>> t31, t32, t33, ts31, ts32;
    for (Idx h = 0; h < nh; ++h)
        for (Idx u = 0; u < n2; ++u) {
            Idx col = pairIndex(h, u, n2);
            auto [h2, v] = unpairIndex(u, n1);
            // d31 = mul_H (x) id_{H1}
            for (const auto& [x, cx] : H.mulCol(h, h2))
                t31.emplace_back(static_cast<int>(pairIndex(x, v, n1)), static_cast<int>(col), cx);
            // d32 = id_H (x) d21, d33 = id_H (x) d22
            for (const auto& [x, cx] : d21.col(u))
                t32.emplace_back(static_cast<int>(pairIndex(h, x, n1)), static_cast<int>(col), cx);
            for (const auto& [x, cx] : d22.col(u))
                t33.emplace_back(static_cast<int>(pairIndex(h, x, n1)), static_cast<int>(col), cx);
        }
    for (Idx h = 0; h < nh; ++h)
        for (Idx v = 0; v < n1; ++v) {
            // s31 = id_H (x) s20, s32 = id_H (x) s21
            for (const auto& [x, cx] : smash2.inclBase.col(v))
                ts31.emplace_back(static_cast<int>(pairIndex(h, x, n2)),
                                  static_cast<int>(pairIndex(h, v, n1)), cx);
            for (const auto& [x, cx] : s21.col(v))
                ts32.emplace_back(static_cast<int>(pairIndex(h, x, n2)),
                                  static_cast<int>(pairIndex(h, v, n1)), cx);
        }
    S.levels.push_back(smash3.product);
    S.faces.push_back({smash3.projBase,
                       GradedMap<K>(smash3.product.space, smash2.product.space,
                                    spFromTriplets<K>(n2, n3, t31)),
                       GradedMap<K>(smash3.product.space, smash2.product.space,
                                    spFromTriplets<K>(n2, n3, t32)),
                       GradedMap<K>(smash3.product.space, smash2.product.space,
                                    spFromTriplets<K>(n2, n3, t33))});
    S.degens.push_back({smash3.inclBase,
                        GradedMap<K>(smash2.product.space, smash3.product.space,
                                     spFromTriplets<K>(n3, n2, ts31)),
                        GradedMap<K>(smash2.product.space, smash3.product.space,
                                     spFromTriplets<K>(n3, n2, ts32))});

    // cross-check against the universal construction whenever it fits: the
    // cone (d^3_0,...,d^3_3) factors through the matching object and the
    // factorization is a bijective Hopf morphism recovering the faces
    Idx tupleDim = 1;
    for (int l = 0; l < 4; ++l) tupleDim *= n2;
    if (tupleDim <= coskCap) {
        SimplicialHopf<K> tr2 = S;
        tr2.levels.pop_back();
        tr2.faces.pop_back();
        tr2.degens.pop_back();
        auto cosk = coskeletonStep(tr2, coskCap);
        out.checks.merge(cosk.checks, "coskeleton");
        bool dimsAgree = cosk.extended.levels[3].dim() == n3;
        out.checks.add("coskeleton.level3_dims_agree", dimsAgree);
        if (dimsAgree) {
            std::vector<Eigen::Triplet<K>> tcmp;
            bool lands = true;
            for (Idx x = 0; x < n3 && lands; ++x) {
                struct Part { std::vector<Idx> parts; K c; };
                std::vector<Part> cur{{{x}, K(1)}};
                for (int split = 1; split < 4; ++split) {
                    std::vector<Part> next;
                    for (const auto& st : cur) {
                        Idx last = st.parts.back();
                        for (const auto& [p, c] : smash3.product.comul.col(last)) {
                            auto [a, b] = unpairIndex(p, n3);
                            Part np;
                            np.parts.assign(st.parts.begin(), st.parts.end() - 1);
                            np.parts.push_back(a);
                            np.parts.push_back(b);
                            np.c = st.c * c;
                            if (!isZero(np.c)) next.push_back(std::move(np));
                        }
                    }
                    cur = std::move(next);
                }
                SparseVec<K> img;
                for (const auto& part : cur) {
                    SparseVec<K> acc{{0, part.c}};
                    for (int l = 0; l < 4; ++l) {
                        SparseVec<K> nxt;
                        for (const auto& [aa, ca] : acc)
                            for (const auto& [r, cr] :
                                 S.face(3, l).col(part.parts[static_cast<size_t>(l)])) {
                                K v = ca * cr;
                                if (!isZero(v)) nxt.emplace_back(aa * n2 + r, std::move(v));
                            }
                        acc = std::move(nxt);
                    }
                    for (auto& e : acc) img.push_back(std::move(e));
                }
                svNormalize(img);
                auto coords = cosk.topCarrier.coordinates(img);
                if (!coords.has_value()) { lands = false; break; }
                for (size_t r = 0; r < coords->size(); ++r)
                    if (!isZero((*coords)[r]))
                        tcmp.emplace_back(static_cast<int>(r), static_cast<int>(x), (*coords)[r]);
            }
            out.checks.add("coskeleton.cone_factors", lands);
            if (lands) {
                GradedMap<K> alpha(smash3.product.space, cosk.extended.levels[3].space,
                                   spFromTriplets<K>(cosk.extended.levels[3].dim(), n3, tcmp));
                out.checks.add("coskeleton.comparison_is_morphism",
                               verifyMorphism(smash3.product, cosk.extended.levels[3], alpha).ok());
                out.checks.add("coskeleton.comparison_bijective",
                               linearKernel(alpha).isZeroSpace());
                bool facesMatch = true;
                for (int i = 0; i < 4 && facesMatch; ++i)
                    facesMatch = mapEqual(compose(cosk.extended.face(3, i), alpha), S.face(3, i));
                out.checks.add("coskeleton.comparison_recovers_faces", facesMatch);
            }
        }
    }
    return out;
}

namespace detail {

/// Restriction of a morphism to materialized subalgebras on both sides.
template <class K>
GradedMap<K> restrictBetween(const GradedMap<K>& f, const SubAlgebra<K>& src,
                             const SubAlgebra<K>& dst, const std::string& what) {
    std::vector<Eigen::Triplet<K>> trip;
    for (Idx c = 0; c < src.algebra.dim(); ++c) {
        auto img = f.apply(src.incl.col(c));
        auto coords = dst.carrier.coordinates(img);
        if (!coords.has_value()) throw ChopfError(what + ": restriction escapes the target kernel");
        for (size_t r = 0; r < coords->size(); ++r)
            if (!isZero((*coords)[r]))
                trip.emplace_back(static_cast<int>(r), static_cast<int>(c), (*coords)[r]);
    }
    return GradedMap<K>(src.algebra.space, dst.algebra.space,
                        spFromTriplets<K>(dst.algebra.dim(), src.algebra.dim(), trip));
}

}  // namespace detail

/// The iterated-semidirect decomposition of the bottom levels:
/// H_1 = M_1 x|_0 M_0 and H_2 = (M_2 x|_1 M_1) x|_0 (M_1 x|_0 M_0), with
/// the composite isomorphisms assembled from the split-extension machinery
/// and checked to be bijective Hopf morphisms onto H_1 and H_2.
template <class K>
ValidationReport semidirectDecompositionCheck(const SimplicialHopf<K>& S, Idx assocCap = 300) {
    ValidationReport rep;
    if (S.truncation() < 1) throw ChopfError("decomposition: need at least level 1");

    SplitExtension<K> e0{S.levels[1], S.levels[0], S.face(1, 0), S.degen(1, 0)};
    auto sp0 = splitToAction(e0, assocCap);
    rep.merge(sp0.checks, "level1");
    rep.add("dims.H1_product",
            S.levels[1].dim() == sp0.kernel.algebra.dim() * S.levels[0].dim());
    if (S.truncation() < 2) return rep;

    SplitExtension<K> e1{S.levels[2], S.levels[1], S.face(2, 0), S.degen(2, 0)};
    auto sp1 = splitToAction(e1, assocCap);
    rep.merge(sp1.checks, "level2");

    // the kernel tower: Hker(d^2_0) splits over Hker(d^1_0) along d^2_1, s^2_1
    auto d21r = detail::restrictBetween(S.face(2, 1), sp1.kernel, sp0.kernel, "d21|");
    auto s21r = detail::restrictBetween(S.degen(2, 1), sp0.kernel, sp1.kernel, "s21|");
    SplitExtension<K> eK{sp1.kernel.algebra, sp0.kernel.algebra, d21r, s21r};
    auto spK = splitToAction(eK, assocCap);
    rep.merge(spK.checks, "kernel_tower");

    auto moore = mooreComplex(S);
    const Idx m0 = moore.terms[0].algebra.dim();
    const Idx m1 = moore.terms[1].algebra.dim();
    const Idx m2 = moore.terms[2].algebra.dim();
    rep.add("dims.kernel_tower_is_M2", spK.kernel.algebra.dim() == m2);
    rep.add("dims.H2_product", S.levels[2].dim() == m2 * m1 * m1 * m0);

    // transported action of M_1 x|_0 M_0 on M_2 x|_1 M_1 and the composed iso
    const auto& outer = sp0.smash.product;  // = M_1 x|_0 M_0
    const auto& inner = spK.smash.product;  // = M_2 x|_1 M_1
    std::vector<Eigen::Triplet<K>> ta;
    for (Idx u = 0; u < outer.dim(); ++u) {
        auto hu = sp0.fwd.col(u);  // in H_1
        for (Idx kx = 0; kx < inner.dim(); ++kx) {
            auto img = spK.bwd.apply(sp1.action.actVV(hu, spK.fwd.col(kx)));
            for (const auto& [r, c] : img)
                ta.emplace_back(static_cast<int>(r),
                                static_cast<int>(pairIndex(u, kx, inner.dim())), c);
        }
    }
    ModuleAction<K> transported{outer, inner,
                                GradedMap<K>(tensor(outer.space, inner.space), inner.space,
                                             spFromTriplets<K>(inner.dim(),
                                                               outer.dim() * inner.dim(), ta))};
    rep.merge(validateModuleAction(transported), "transported_action");
    auto W = smashProduct(transported, assocCap, false);
    auto iso = compose(sp1.fwd, tensorMap(spK.fwd, sp0.fwd));
    rep.add("iso.W_to_H2_morphism", verifyMorphism(W.product, S.levels[2], iso).ok());
    rep.add("iso.W_to_H2_bijective",
            linearKernel(iso).isZeroSpace() && W.product.dim() == S.levels[2].dim());
    return rep;
}

/// Lemma check for the comparison map: f^2(s^2_0(x) |> s^2_1(y)) lies in
/// M_2 and matches its Sweedler expansion, for x in H_1 and y in M_1.
template <class K>
ValidationReport mooreF2Check(const SimplicialHopf<K>& S) {
    ValidationReport rep;
    const auto& H2 = S.levels[2];
    const auto& H1 = S.levels[1];
    auto f20 = mooreProjection(S, 2, 0);
    auto f21 = mooreProjection(S, 2, 1);
    auto f2 = compose(f21, f20);

    std::vector<const ColorHopfAlgebra<K>*> targets{&H1, &H1};
    std::vector<const GradedMap<K>*> maps{&S.face(2, 0), &S.face(2, 1)};
    auto M2carrier = hopfKernelJoint(H2, targets, maps);
    auto M1carrier = hopfKernel(H1, S.levels[0], S.face(1, 0));

    bool landsProj = true;
    // f^n_i lands in Hker(d^n_i)
    auto ker20 = hopfKernel(H2, H1, S.face(2, 0));
    for (Idx x = 0; x < H2.dim() && landsProj; ++x)
        landsProj = ker20.contains(f20.col(x));
    rep.add("moore.f2_0_lands_in_kernel", landsProj);

    bool lands = true, matches = true;
    for (Idx x = 0; x < H1.dim() && (lands || matches); ++x) {
        auto sx = S.degen(2, 0).col(x);
        for (const auto& [py, y] : M1carrier.rows()) {
            auto sy = S.degen(2, 1).apply(y);
            auto lhs = f2.apply(adjointVV(H2, sx, sy));
            if (!M2carrier.contains(lhs)) lands = false;

            // phi(|x2|,|y1|) (s0(x1) |> s1(y1)) S(s1(x2) |> s1(y2))
            SparseVec<K> rhs;
            for (const auto& [tx, cx] : H1.comul.col(x)) {
                auto [x1, x2] = unpairIndex(tx, H1.dim());
                for (const auto& [ty, cy] : H1.comul.apply(y)) {
                    auto [y1, y2] = unpairIndex(ty, H1.dim());
                    K tw = cx * cy * H1.phiDeg(H1.degOf(x2), H1.degOf(y1));
                    if (isZero(tw)) continue;
                    auto left = adjointVV(H2, S.degen(2, 0).col(x1), S.degen(2, 1).col(y1));
                    auto right = H2.antipode.apply(
                        adjointVV(H2, S.degen(2, 1).col(x2), S.degen(2, 1).col(y2)));
                    auto prod = H2.mulVV(left, right);
                    svScale(prod, tw);
                    for (auto& e : prod) rhs.push_back(std::move(e));
                }
            }
            svNormalize(rhs);
            if (lhs != rhs) matches = false;
        }
    }
    rep.add("moore.f2_lands_in_M2", lands);
    rep.add("moore.f2_expansion", matches);
    return rep;
}

template <class K>
struct XmodFromSimplicial {
    CrossedModule<K> xmod;
    SubAlgebra<K> kernel;  // M_1 = Hker(d^1_0) inside H_1
    ValidationReport checks;
};

/// Moore length <= 1 gives back a crossed module: (H_0, Hker(d^1_0), d^1_1|)
/// with the action through s^1_0.
template <class K>
XmodFromSimplicial<K> simplicialToXmod(const SimplicialHopf<K>& S) {
    auto moore = mooreComplex(S);
    if (moore.length > 1)
        throw ChopfError("simplicialToXmod: Moore length " + std::to_string(moore.length) +
                         " exceeds 1");
    SplitExtension<K> ext{S.levels[1], S.levels[0], S.face(1, 0), S.degen(1, 0)};
    auto split = splitToAction(ext);
    split.checks.require("simplicialToXmod: split extension machinery failed");
    GradedMap<K> d = compose(S.face(1, 1), split.kernel.incl);
    XmodFromSimplicial<K> out{
        CrossedModule<K>{S.levels[0], split.kernel.algebra, std::move(d), split.action.act},
        std::move(split.kernel), ValidationReport{}};
    out.checks.merge(validateCrossedModule(out.xmod), "xmod");
    return out;
}

}  // namespace chopf
