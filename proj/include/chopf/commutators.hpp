#pragma once

#include "chopf/hopf_ops.hpp"

namespace chopf {

/// The four compatibility laws of the adjoint action: module structure,
/// antipode, multiplicativity and comultiplicativity.
template <class K>
ValidationReport adjointLawsCheck(const ColorHopfAlgebra<K>& A) {
    ValidationReport rep;
    const Idx n = A.dim();

    {
        // xi(1 (x) a) = a
        bool ok = true;
        std::string w;
        auto one = A.one();
        for (Idx a = 0; a < n && ok; ++a) {
            if (adjointVV(A, one, svUnit<K>(a)) != svUnit<K>(a)) {
                ok = false;
                w = "xi(1 (x) " + A.label(a) + ") != " + A.label(a);
            }
        }
        rep.add("adjoint.unit_law", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < n && ok; ++a)
            for (Idx b = 0; b < n && ok; ++b)
                for (Idx c = 0; c < n && ok; ++c) {
                    auto lhs = adjointVV(A, svUnit<K>(a), adjointCol(A, b, c));
                    auto rhs = adjointVV(A, A.mulCol(a, b), svUnit<K>(c));
                    if (lhs != rhs) {
                        ok = false;
                        w = "xi(a (x) xi(b (x) c)) != xi(ab (x) c) at (" + A.label(a) + ", " +
                            A.label(b) + ", " + A.label(c) + ")";
                    }
                }
        rep.add("adjoint.module_law", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < n && ok; ++a)
            for (Idx b = 0; b < n && ok; ++b) {
                auto lhs = A.antipode.apply(adjointCol(A, a, b));
                auto rhs = adjointVV(A, svUnit<K>(a), A.antipode.col(b));
                if (lhs != rhs) {
                    ok = false;
                    w = "S(a|>b) != a|>S(b) at (" + A.label(a) + ", " + A.label(b) + ")";
                }
            }
        rep.add("adjoint.antipode_law", ok, w);
    }
    {
        // a |> bc = phi(|a2|,|b|) (a1 |> b)(a2 |> c)
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < n && ok; ++a)
            for (Idx b = 0; b < n && ok; ++b)
                for (Idx c = 0; c < n && ok; ++c) {
                    auto lhs = adjointVV(A, svUnit<K>(a), A.mulCol(b, c));
                    SparseVec<K> rhs;
                    for (const auto& [t, ct] : A.comul.col(a)) {
                        auto [a1, a2] = unpairIndex(t, n);
                        K tw = ct * A.phiDeg(A.degOf(a2), A.degOf(b));
                        if (isZero(tw)) continue;
                        auto prod = A.mulVV(adjointCol(A, a1, b), adjointCol(A, a2, c));
                        svScale(prod, tw);
                        for (auto& e : prod) rhs.push_back(std::move(e));
                    }
                    svNormalize(rhs);
                    if (lhs != rhs) {
                        ok = false;
                        w = "a |> bc law fails at (" + A.label(a) + ", " + A.label(b) + ", " +
                            A.label(c) + ")";
                    }
                }
        rep.add("adjoint.multiplicative_law", ok, w);
    }
    {
        // Delta(a |> b) = phi(|a2|,|b1|) (a1 |> b1) (x) (a2 |> b2) and
        // eps(a |> b) = eps(a) eps(b)
        bool ok = true, okEps = true;
        std::string w, wEps;
        for (Idx a = 0; a < n && (ok || okEps); ++a)
            for (Idx b = 0; b < n && (ok || okEps); ++b) {
                auto act = adjointCol(A, a, b);
                if (ok) {
                    auto lhs = A.comul.apply(act);
                    SparseVec<K> rhs;
                    for (const auto& [ta, ca] : A.comul.col(a)) {
                        auto [a1, a2] = unpairIndex(ta, n);
                        for (const auto& [tb, cb] : A.comul.col(b)) {
                            auto [b1, b2] = unpairIndex(tb, n);
                            K tw = ca * cb * A.phiDeg(A.degOf(a2), A.degOf(b1));
                            if (isZero(tw)) continue;
                            for (const auto& [x, cx] : adjointCol(A, a1, b1))
                                for (const auto& [y, cy] : adjointCol(A, a2, b2)) {
                                    K v = tw * cx * cy;
                                    if (!isZero(v))
                                        rhs.emplace_back(pairIndex(x, y, n), std::move(v));
                                }
                        }
                    }
                    svNormalize(rhs);
                    if (lhs != rhs) {
                        ok = false;
                        w = "Delta(a|>b) law fails at (" + A.label(a) + ", " + A.label(b) + ")";
                    }
                }
                if (okEps &&
                    !(A.counitOf(act) == A.counitOf(svUnit<K>(a)) * A.counitOf(svUnit<K>(b)))) {
                    okEps = false;
                    wEps = "eps(a|>b) != eps(a)eps(b) at (" + A.label(a) + ", " + A.label(b) + ")";
                }
            }
        rep.add("adjoint.comultiplicative_law", ok, w);
        rep.add("adjoint.counit_law", okEps, wEps);
    }
    return rep;
}

/// f(a |> b) = f(a) |> f(b) for a Hopf morphism f.
template <class K>
ValidationReport adjointNaturality(const ColorHopfAlgebra<K>& A, const ColorHopfAlgebra<K>& B,
                                   const GradedMap<K>& f) {
    ValidationReport rep;
    bool ok = true;
    std::string w;
    for (Idx a = 0; a < A.dim() && ok; ++a)
        for (Idx b = 0; b < A.dim() && ok; ++b) {
            auto lhs = f.apply(adjointCol(A, a, b));
            auto rhs = adjointVV(B, f.col(a), f.col(b));
            if (lhs != rhs) {
                ok = false;
                w = "f(a|>b) != f(a)|>f(b) at (" + A.label(a) + ", " + A.label(b) + ")";
            }
        }
    rep.add("adjoint.naturality", ok, w);
    return rep;
}

struct NormalityResult {
    bool normal = true;
    std::string witness;
};

/// X is normal iff xi_A(a (x) x) lands in X for all a in A, x in X.
template <class K>
NormalityResult isNormal(const ColorHopfAlgebra<K>& A, const Subspace<K>& X) {
    for (Idx a = 0; a < A.dim(); ++a)
        for (const auto& [p, row] : X.rows())
            if (!X.contains(adjointVV(A, svUnit<K>(a), row)))
                return {false, "(" + A.label(a) + ", " + formatVec(A.space, row) + ")"};
    return {true, ""};
}

/// [x, y] = phi(|x2|,|y1|) x1 y1 S(x2) S(y2) on sparse arguments.
template <class K>
SparseVec<K> commutatorElement(const ColorHopfAlgebra<K>& A, const SparseVec<K>& x,
                               const SparseVec<K>& y) {
    const Idx n = A.dim();
    SparseVec<K> out;
    for (const auto& [i, ci] : x)
        for (const auto& [j, cj] : y) {
            for (const auto& [ta, ca] : A.comul.col(i)) {
                auto [x1, x2] = unpairIndex(ta, n);
                for (const auto& [tb, cb] : A.comul.col(j)) {
                    auto [y1, y2] = unpairIndex(tb, n);
                    K tw = ci * cj * ca * cb * A.phiDeg(A.degOf(x2), A.degOf(y1));
                    if (isZero(tw)) continue;
                    auto sx = A.antipode.col(x2);
                    auto sy = A.antipode.col(y2);
                    auto prod = A.mulVV(A.mulVV(A.mulVV(svUnit<K>(x1), svUnit<K>(y1)), sx), sy);
                    svScale(prod, tw);
                    for (auto& e : prod) out.push_back(std::move(e));
                }
            }
        }
    svNormalize(out);
    return out;
}

/// [X, Y]: the graded subalgebra generated by the commutator elements of
/// basis pairs. The proposition's claims (comul-closed, antipode-closed,
/// normal) are asserted, not assumed.
template <class K>
Subspace<K> commutatorSubalgebra(const ColorHopfAlgebra<K>& A, const Subspace<K>& X,
                                 const Subspace<K>& Y, bool requireNormalInputs = true) {
    if (requireNormalInputs) {
        auto nx = isNormal(A, X);
        if (!nx.normal) throw ChopfError("commutator: X is not normal; witness " + nx.witness);
        auto ny = isNormal(A, Y);
        if (!ny.normal) throw ChopfError("commutator: Y is not normal; witness " + ny.witness);
    }
    std::vector<SparseVec<K>> gens;
    for (const auto& [px, xr] : X.rows())
        for (const auto& [py, yr] : Y.rows()) gens.push_back(commutatorElement(A, xr, yr));
    auto C = subalgebraClosure(A, gens, ClosureMode::Algebra);
    isHopfSubalgebra(A, C).require("commutator: [X,Y] failed the Hopf-subalgebra invariants");
    auto nc = isNormal(A, C);
    if (!nc.normal)
        throw ChopfError("commutator: [X,Y] failed normality; witness " + nc.witness);
    return C;
}

template <class K>
struct HuqResult {
    bool commute = false;
    bool cond1 = false, cond2 = false, cond3 = false, cond4 = false;
    std::string witness;
    std::optional<HopfMorphism<K>> pairing;  // p: X (x) Y -> A when they commute
};

/// The four equivalent commuting conditions, evaluated independently.
/// Disagreement among them is a library bug, reported as a hard failure.
template <class K>
HuqResult<K> huqCommute(const ColorHopfAlgebra<K>& A, const Subspace<K>& X, const Subspace<K>& Y) {
    HuqResult<K> res;
    std::string w2, w3, w4;
    res.cond2 = res.cond3 = res.cond4 = true;
    for (const auto& [px, xr] : X.rows())
        for (const auto& [py, yr] : Y.rows()) {
            int dx = A.space.degree(px), dy = A.space.degree(py);
            if (res.cond2) {
                auto rhs = A.mulVV(yr, xr);
                svScale(rhs, A.phiDeg(dx, dy));
                if (A.mulVV(xr, yr) != rhs) {
                    res.cond2 = false;
                    w2 = "(" + formatVec(A.space, xr) + ", " + formatVec(A.space, yr) + ")";
                }
            }
            if (res.cond3) {
                auto target = A.one();
                K eps = A.counitOf(xr) * A.counitOf(yr);
                svScale(target, eps);
                if (commutatorElement(A, xr, yr) != target) res.cond3 = false;
            }
            if (res.cond4) {
                auto target = yr;
                svScale(target, A.counitOf(xr));
                if (adjointVV(A, xr, yr) != target) res.cond4 = false;
            }
        }

    // condition 1: p = m(i (x) j) is a morphism of color Hopf algebras
    auto MX = materializeSubalgebra(A, X, "X");
    auto MY = materializeSubalgebra(A, Y, "Y");
    auto T = hopfTensorProduct(MX.algebra, MY.algebra);
    std::vector<Eigen::Triplet<K>> trip;
    const Idx dy = MY.algebra.dim();
    for (Idx i = 0; i < MX.algebra.dim(); ++i)
        for (Idx j = 0; j < dy; ++j)
            for (const auto& [r, c] : A.mulVV(MX.incl.col(i), MY.incl.col(j)))
                trip.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(i, j, dy)), c);
    GradedMap<K> p(T.product.space, A.space,
                   spFromTriplets<K>(A.dim(), T.product.dim(), trip));
    res.cond1 = verifyMorphism(T.product, A, p).ok();

    if (res.cond1 != res.cond2 || res.cond2 != res.cond3 || res.cond3 != res.cond4)
        throw ChopfError("huq: the four equivalent conditions disagree (library bug)");
    res.commute = res.cond1;
    res.witness = res.commute ? "" : (!w2.empty() ? w2 : (!w3.empty() ? w3 : w4));
    if (res.commute)
        res.pairing = HopfMorphism<K>{T.product, A, std::move(p)};
    return res;
}

template <class K>
Subspace<K> spanOfGroupElements(const ColorHopfAlgebra<K>& A, const FiniteGroup::Sub& H) {
    std::vector<SparseVec<K>> gens;
    for (int h : H) gens.push_back(svUnit<K>(h));
    return Subspace<K>::spanGraded(A.space, gens);
}

template <class K>
Subspace<K> imageSubspace(const GradedMap<K>& f, const Subspace<K>& X) {
    std::vector<SparseVec<K>> gens;
    for (const auto& [p, r] : X.rows()) gens.push_back(f.apply(r));
    return Subspace<K>::spanGraded(f.dst, gens);
}

/// Oracle-certified minimality of the Huq commutator on a group algebra:
/// enumerate all normal subgroups Z, check that the images of X=kN, Y=kM
/// commute in A/A(kZ)+ exactly when [N,M] <= Z, and that [X,Y] = k[N,M]
/// is the minimal such subalgebra.
template <class K>
ValidationReport certifyHuqMinimality(const FiniteGroup& Gamma, const ColorHopfAlgebra<K>& A,
                                      const FiniteGroup::Sub& N, const FiniteGroup::Sub& M) {
    if (A.dim() != Gamma.order())
        throw ChopfError("huq minimality is oracle-certified only for group algebras");
    ValidationReport rep;
    auto X = spanOfGroupElements(A, N);
    auto Y = spanOfGroupElements(A, M);
    auto hopfComm = commutatorSubalgebra(A, X, Y);
    auto oracleComm = Gamma.commutatorSubgroup(N, M);
    rep.add("huq.matches_oracle_commutator",
            hopfComm == spanOfGroupElements(A, oracleComm),
            "[kN,kM] != k[N,M] for " + Gamma.subName(N) + ", " + Gamma.subName(M));

    std::set<int> nm(oracleComm.begin(), oracleComm.end());
    bool equivalenceOk = true, minimalOk = false;
    size_t minimalOrder = static_cast<size_t>(Gamma.order()) + 1;
    FiniteGroup::Sub minimalZ;
    for (const auto& Z : Gamma.normalSubgroups()) {
        auto q = quotientByNormal(A, spanOfGroupElements(A, Z));
        auto commute =
            huqCommute(q.algebra, imageSubspace(q.projection, X), imageSubspace(q.projection, Y));
        bool contains = std::includes(Z.begin(), Z.end(), oracleComm.begin(), oracleComm.end());
        if (commute.commute != contains) equivalenceOk = false;
        if (commute.commute && Z.size() < minimalOrder) {
            minimalOrder = Z.size();
            minimalZ = Z;
        }
    }
    minimalOk = (minimalZ == oracleComm);
    rep.add("huq.commutes_iff_contains_commutator", equivalenceOk);
    rep.add("huq.minimal_normal_is_commutator", minimalOk,
            "minimal commuting normal subgroup is " + Gamma.subName(minimalZ));
    return rep;
}

/// [X,Y] <= Hker(f) whenever the images of X and Y commute under f; the
/// inclusion half of minimality, checkable beyond the group-algebra regime.
template <class K>
ValidationReport huqInclusionCheck(const ColorHopfAlgebra<K>& A, const ColorHopfAlgebra<K>& B,
                                   const GradedMap<K>& f, const Subspace<K>& X,
                                   const Subspace<K>& Y) {
    ValidationReport rep;
    auto commute = huqCommute(B, imageSubspace(f, X), imageSubspace(f, Y));
    if (!commute.commute) {
        rep.add("huq.images_commute_under_f", false, commute.witness);
        return rep;
    }
    rep.add("huq.images_commute_under_f", true);
    auto comm = commutatorSubalgebra(A, X, Y);
    auto ker = hopfKernel(A, B, f);
    rep.add("huq.commutator_inside_kernel", ker.containsSub(comm));
    return rep;
}

template <class K>
struct NilpotencySeries {
    std::vector<Subspace<K>> terms;  // X_0 = A, X_{n+1} = [A, X_n]
    std::optional<int> classOf;      // least n with X_n = k
    bool stabilized = false;         // proper stabilization above k
};

template <class K>
bool isUnitSubspace(const ColorHopfAlgebra<K>& A, const Subspace<K>& X) {
    return X.dim() == 1 && X.contains(A.one());
}

/// Iterates gamma_A until k, stabilization, or the bound. Stabilization
/// strictly above k proves non-nilpotence in finite dimension.
template <class K>
NilpotencySeries<K> nilpotency(const ColorHopfAlgebra<K>& A, int bound = 16) {
    if (bound < 1) throw ChopfError("nilpotency: bound must be >= 1");
    NilpotencySeries<K> out;
    auto whole = Subspace<K>::full(A.space);
    out.terms.push_back(whole);
    if (isUnitSubspace(A, whole)) {
        out.classOf = 0;
        return out;
    }
    for (int n = 1; n <= bound; ++n) {
        auto next = commutatorSubalgebra(A, whole, out.terms.back(), false);
        if (next == out.terms.back()) {
            out.terms.push_back(std::move(next));
            out.stabilized = true;
            return out;
        }
        out.terms.push_back(std::move(next));
        if (isUnitSubspace(A, out.terms.back())) {
            out.classOf = n;
            return out;
        }
    }
    return out;
}

template <class K>
struct HallResult {
    ValidationReport hypotheses;
    bool hypothesesOk = false;
    bool boundEvaluated = false;
    bool boundSatisfied = false;
    int c = -1, d = -1, classE = -1;
    long long bound = -1;
};

/// Hall criterion: p: E -> B surjective, B nilpotent of class d, N normal
/// nilpotent of class c with Hker(p) <= [N,N]; then E is nilpotent of class
/// at most c(c+1)/2 (d-1) + c.
template <class K>
HallResult<K> hallCheck(const ColorHopfAlgebra<K>& E, const ColorHopfAlgebra<K>& B,
                        const GradedMap<K>& p, const Subspace<K>& N, int nilBound = 16) {
    HallResult<K> res;
    res.hypotheses.add("hall.p_surjective", linearImage(p).dim() == B.dim());
    auto nn = isNormal(E, N);
    res.hypotheses.add("hall.N_normal", nn.normal, nn.witness);
    if (!res.hypotheses.ok()) return res;

    auto NN = commutatorSubalgebra(E, N, N);
    auto ker = hopfKernel(E, B, p);
    res.hypotheses.add("hall.kernel_inside_[N,N]", NN.containsSub(ker));

    auto matN = materializeSubalgebra(E, N, "N");
    auto serN = nilpotency(matN.algebra, nilBound);
    res.hypotheses.add("hall.N_nilpotent", serN.classOf.has_value());
    auto serB = nilpotency(B, nilBound);
    res.hypotheses.add("hall.B_nilpotent", serB.classOf.has_value());
    res.hypothesesOk = res.hypotheses.ok();
    if (!res.hypothesesOk) return res;

    res.c = *serN.classOf;
    res.d = *serB.classOf;
    res.bound = static_cast<long long>(res.c) * (res.c + 1) / 2 * (res.d - 1) + res.c;
    auto serE = nilpotency(E, nilBound);
    res.boundEvaluated = true;
    res.classE = serE.classOf.value_or(-1);
    res.boundSatisfied = serE.classOf.has_value() && res.classE <= res.bound;
    return res;
}

/// KM for K normal in the host subalgebra: checked equal to MK, a Hopf
/// subalgebra, and the supremum of K and M.
template <class K>
Subspace<K> joinSubalgebras(const ColorHopfAlgebra<K>& A, const Subspace<K>& host,
                            const Subspace<K>& Knorm, const Subspace<K>& M) {
    if (!host.containsSub(Knorm) || !host.containsSub(M))
        throw ChopfError("join: host must contain both subalgebras");
    // normality of K inside the host
    for (const auto& [p, u] : host.rows())
        for (const auto& [pk, krow] : Knorm.rows())
            if (!Knorm.contains(adjointVV(A, u, krow)))
                throw ChopfError("join: K is not normal in the host; witness (" +
                                 formatVec(A.space, u) + ", " + formatVec(A.space, krow) + ")");
    Subspace<K> KM(A.space), MK(A.space);
    for (const auto& [pk, krow] : Knorm.rows())
        for (const auto& [pm, mrow] : M.rows()) {
            KM.insertGraded(A.mulVV(krow, mrow));
            MK.insertGraded(A.mulVV(mrow, krow));
        }
    if (!(KM == MK)) throw ChopfError("join: KM != MK as subspaces (expected equal)");
    isHopfSubalgebra(A, KM).require("join: KM is not a Hopf subalgebra");
    std::vector<SparseVec<K>> gens;
    for (const auto& [p, r] : Knorm.rows()) gens.push_back(r);
    for (const auto& [p, r] : M.rows()) gens.push_back(r);
    if (!(KM == subalgebraClosure(A, gens, ClosureMode::Hopf)))
        throw ChopfError("join: KM is not the supremum of K and M");
    return KM;
}

template <class K>
struct ZassenhausResult {
    QuotientResult<K> left, middle, right;     // the three quotients
    GradedMap<K> isoLeft, isoRight;            // middle -> left, middle -> right
    ValidationReport checks;
};

namespace detail {

/// Re-expresses a subspace of the ambient algebra inside a materialized
/// subalgebra's coordinates.
template <class K>
Subspace<K> restrictTo(const SubAlgebra<K>& sub, const Subspace<K>& S) {
    std::vector<SparseVec<K>> gens;
    for (const auto& [p, row] : S.rows()) {
        auto coords = sub.carrier.coordinates(row);
        if (!coords.has_value())
            throw ChopfError("zassenhaus: subspace escapes its enclosing subalgebra");
        SparseVec<K> v;
        for (size_t i = 0; i < coords->size(); ++i)
            if (!isZero((*coords)[i])) v.emplace_back(static_cast<Idx>(i), (*coords)[i]);
        gens.push_back(std::move(v));
    }
    return Subspace<K>::spanGraded(sub.algebra.space, gens);
}

/// The map induced on quotients by an inclusion of subalgebras composed
/// with a projection: q_target o (coordinates in target) o section_source.
template <class K>
GradedMap<K> inducedOnQuotients(const SubAlgebra<K>& src, const QuotientResult<K>& qsrc,
                                const SubAlgebra<K>& dst, const QuotientResult<K>& qdst,
                                ValidationReport& checks, const std::string& tag) {
    // ambient-level map: src -> dst coordinates
    std::vector<Eigen::Triplet<K>> trip;
    for (Idx i = 0; i < src.algebra.dim(); ++i) {
        auto inAmbient = src.incl.col(i);
        auto coords = dst.carrier.coordinates(inAmbient);
        if (!coords.has_value())
            throw ChopfError("zassenhaus: inclusion does not factor through " + tag);
        for (size_t r = 0; r < coords->size(); ++r)
            if (!isZero((*coords)[r]))
                trip.emplace_back(static_cast<int>(r), static_cast<int>(i), (*coords)[r]);
    }
    GradedMap<K> toDst(src.algebra.space, dst.algebra.space,
                       spFromTriplets<K>(dst.algebra.dim(), src.algebra.dim(), trip));
    GradedMap<K> full = compose(qdst.projection, toDst);
    // well-definedness: the source ideal must map into the target ideal
    bool wellDefined = true;
    std::string witness;
    for (const auto& [p, row] : qsrc.ideal.rows())
        if (!full.apply(row).empty()) {
            wellDefined = false;
            witness = "coset of " + formatVec(src.algebra.space, row) + " is not killed";
            break;
        }
    checks.add(tag + ".well_defined", wellDefined, witness);
    return compose(full, qsrc.section);
}

}  // namespace detail

/// The three Zassenhaus quotients and the canonical induced isomorphisms
/// between them, each checked to be a well-defined bijective Hopf morphism.
template <class K>
ZassenhausResult<K> zassenhausVerify(const ColorHopfAlgebra<K>& A, const Subspace<K>& U,
                                     const Subspace<K>& V, const Subspace<K>& Kn,
                                     const Subspace<K>& L) {
    isHopfSubalgebra(A, U).require("zassenhaus: U");
    isHopfSubalgebra(A, V).require("zassenhaus: V");
    isHopfSubalgebra(A, Kn).require("zassenhaus: K");
    isHopfSubalgebra(A, L).require("zassenhaus: L");
    if (!U.containsSub(Kn)) throw ChopfError("zassenhaus: K must lie inside U");
    if (!V.containsSub(L)) throw ChopfError("zassenhaus: L must lie inside V");

    auto UiV = U.intersect(V);
    // numerators: K(U meet V) inside U, U meet V itself, L(U meet V) inside V
    auto NL = joinSubalgebras(A, U, Kn, UiV);
    auto NR = joinSubalgebras(A, V, L, UiV);
    // denominator generators
    auto LiU = L.intersect(U);
    auto KiV = Kn.intersect(V);
    auto DL = joinSubalgebras(A, U, Kn, LiU);          // K(L meet U)
    auto DR = joinSubalgebras(A, V, L, KiV);           // L(K meet V)
    auto DM = joinSubalgebras(A, UiV, KiV, LiU);       // (K meet V)(L meet U), K meet V normal in U meet V

    auto ML = materializeSubalgebra(A, NL, "K(UmV)");
    auto MM = materializeSubalgebra(A, UiV, "UmV");
    auto MR = materializeSubalgebra(A, NR, "L(UmV)");

    ZassenhausResult<K> res{
        quotientByNormal(ML.algebra, detail::restrictTo(ML, DL)),
        quotientByNormal(MM.algebra, detail::restrictTo(MM, DM)),
        quotientByNormal(MR.algebra, detail::restrictTo(MR, DR)),
        GradedMap<K>(), GradedMap<K>(), ValidationReport{}};

    res.isoLeft = detail::inducedOnQuotients(MM, res.middle, ML, res.left, res.checks,
                                             "zassenhaus.left");
    res.isoRight = detail::inducedOnQuotients(MM, res.middle, MR, res.right, res.checks,
                                              "zassenhaus.right");

    res.checks.add("zassenhaus.left_morphism",
                   verifyMorphism(res.middle.algebra, res.left.algebra, res.isoLeft).ok());
    res.checks.add("zassenhaus.right_morphism",
                   verifyMorphism(res.middle.algebra, res.right.algebra, res.isoRight).ok());
    res.checks.add("zassenhaus.left_bijective",
                   linearKernel(res.isoLeft).isZeroSpace() &&
                       res.left.algebra.dim() == res.middle.algebra.dim());
    res.checks.add("zassenhaus.right_bijective",
                   linearKernel(res.isoRight).isZeroSpace() &&
                       res.right.algebra.dim() == res.middle.algebra.dim());

    auto dimsL = Subspace<K>::full(res.left.algebra.space).dimsPerDegree();
    auto dimsM = Subspace<K>::full(res.middle.algebra.space).dimsPerDegree();
    auto dimsR = Subspace<K>::full(res.right.algebra.space).dimsPerDegree();
    res.checks.add("zassenhaus.per_degree_dims_agree", dimsL == dimsM && dimsM == dimsR);
    return res;
}

}  // namespace chopf
