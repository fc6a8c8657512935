#pragma once

#include "chopf/commutators.hpp"

namespace chopf {

/// Module color Hopf algebra: an actor A, a carrier H and an action map
/// A (x) H -> H subject to the six identities of validateModuleAction.
template <class K>
struct ModuleAction {
    ColorHopfAlgebra<K> actor;
    ColorHopfAlgebra<K> carrier;
    GradedMap<K> act;  // actor (x) carrier -> carrier

    SparseVec<K> actCol(Idx a, Idx h) const { return act.col(pairIndex(a, h, carrier.dim())); }

    SparseVec<K> actVV(const SparseVec<K>& a, const SparseVec<K>& h) const {
        SparseVec<K> out;
        for (const auto& [i, ci] : a)
            for (const auto& [j, cj] : h) {
                K c = ci * cj;
                if (isZero(c)) continue;
                for (const auto& [r, cr] : actCol(i, j)) {
                    K v = c * cr;
                    if (!isZero(v)) out.emplace_back(r, std::move(v));
                }
            }
        svNormalize(out);
        return out;
    }
};

template <class K>
ValidationReport validateModuleAction(const ModuleAction<K>& M) {
    const auto& A = M.actor;
    const auto& H = M.carrier;
    if (A.space.group != H.space.group || !(A.phi == H.phi))
        throw ChopfError("module action: actor and carrier do not share (G, phi)");
    if (!M.act.src.sameAs(tensor(A.space, H.space)) || !M.act.dst.sameAs(H.space))
        throw ChopfError("module action: map shape mismatch");
    ValidationReport rep;
    const Idx na = A.dim(), nh = H.dim();

    {
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < na && ok; ++a)
            for (Idx b = 0; b < na && ok; ++b)
                for (Idx h = 0; h < nh && ok; ++h)
                    if (M.actVV(A.mulCol(a, b), svUnit<K>(h)) !=
                        M.actVV(svUnit<K>(a), M.actCol(b, h))) {
                        ok = false;
                        w = "(ab).h != a.(b.h) at (" + A.label(a) + ", " + A.label(b) + ", " +
                            H.label(h) + ")";
                    }
        rep.add("action.associative", ok, w);
    }
    {
        bool ok = true;
        std::string w;
        for (Idx h = 0; h < nh && ok; ++h)
            if (M.actVV(A.one(), svUnit<K>(h)) != svUnit<K>(h)) {
                ok = false;
                w = "1.h != h at " + H.label(h);
            }
        rep.add("action.unital", ok, w);
    }
    {
        bool okUnit = true, okEps = true;
        std::string wU, wE;
        for (Idx a = 0; a < na; ++a) {
            auto aDotOne = M.actVV(svUnit<K>(a), H.one());
            auto target = H.one();
            svScale(target, A.counitOf(svUnit<K>(a)));
            if (okUnit && aDotOne != target) { okUnit = false; wU = "at " + A.label(a); }
            for (Idx h = 0; h < nh && okEps; ++h) {
                K lhs = H.counitOf(M.actCol(a, h));
                K rhs = A.counitOf(svUnit<K>(a)) * H.counitOf(svUnit<K>(h));
                if (!(lhs == rhs)) { okEps = false; wE = "at (" + A.label(a) + ", " + H.label(h) + ")"; }
            }
        }
        rep.add("action.preserves_unit", okUnit, wU);
        rep.add("action.preserves_counit", okEps, wE);
    }
    {
        // Delta(a.h) = phi(|a2|,|h1|) (a1.h1) (x) (a2.h2)
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < na && ok; ++a)
            for (Idx h = 0; h < nh && ok; ++h) {
                auto lhs = H.comul.apply(M.actCol(a, h));
                SparseVec<K> rhs;
                for (const auto& [ta, ca] : A.comul.col(a)) {
                    auto [a1, a2] = unpairIndex(ta, na);
                    for (const auto& [th, ch] : H.comul.col(h)) {
                        auto [h1, h2] = unpairIndex(th, nh);
                        K tw = ca * ch * A.phiDeg(A.degOf(a2), H.degOf(h1));
                        if (isZero(tw)) continue;
                        for (const auto& [x, cx] : M.actCol(a1, h1))
                            for (const auto& [y, cy] : M.actCol(a2, h2)) {
                                K v = tw * cx * cy;
                                if (!isZero(v)) rhs.emplace_back(pairIndex(x, y, nh), std::move(v));
                            }
                    }
                }
                svNormalize(rhs);
                if (lhs != rhs) { ok = false; w = "at (" + A.label(a) + ", " + H.label(h) + ")"; }
            }
        rep.add("action.comodule_compatible", ok, w);
    }
    {
        // a.(h h') = phi(|a2|,|h|) (a1.h)(a2.h')
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < na && ok; ++a)
            for (Idx h = 0; h < nh && ok; ++h)
                for (Idx h2 = 0; h2 < nh && ok; ++h2) {
                    auto lhs = M.actVV(svUnit<K>(a), H.mulCol(h, h2));
                    SparseVec<K> rhs;
                    for (const auto& [ta, ca] : A.comul.col(a)) {
                        auto [a1, a2] = unpairIndex(ta, na);
                        K tw = ca * A.phiDeg(A.degOf(a2), H.degOf(h));
                        if (isZero(tw)) continue;
                        auto prod = H.mulVV(M.actCol(a1, h), M.actCol(a2, h2));
                        svScale(prod, tw);
                        for (auto& e : prod) rhs.push_back(std::move(e));
                    }
                    svNormalize(rhs);
                    if (lhs != rhs) {
                        ok = false;
                        w = "at (" + A.label(a) + ", " + H.label(h) + ", " + H.label(h2) + ")";
                    }
                }
        rep.add("action.algebra_compatible", ok, w);
    }
    return rep;
}

template <class K>
ModuleAction<K> trivialAction(const ColorHopfAlgebra<K>& A, const ColorHopfAlgebra<K>& H) {
    std::vector<Eigen::Triplet<K>> trip;
    for (Idx a = 0; a < A.dim(); ++a) {
        K e = A.counitOf(svUnit<K>(a));
        if (isZero(e)) continue;
        for (Idx h = 0; h < H.dim(); ++h)
            trip.emplace_back(static_cast<int>(h), static_cast<int>(pairIndex(a, h, H.dim())), e);
    }
    return ModuleAction<K>{A, H,
                           GradedMap<K>(tensor(A.space, H.space), H.space,
                                        spFromTriplets<K>(H.dim(), A.dim() * H.dim(), trip))};
}

/// A acting on itself by the adjoint action.
template <class K>
ModuleAction<K> adjointSelfAction(const ColorHopfAlgebra<K>& A) {
    return ModuleAction<K>{A, A, adjointMap(A)};
}

/// Conjugation of a subgroup Q on a normal subgroup N inside Gamma, as an
/// action of kQ on kN.
template <class K>
ModuleAction<K> conjugationAction(const FiniteGroup& Gamma, const FiniteGroup::Sub& Q,
                                  const FiniteGroup::Sub& N) {
    if (!Gamma.isNormal(N)) throw ChopfError("conjugation action: N must be normal");
    std::string qName = Q.size() == static_cast<size_t>(Gamma.order())
                            ? Gamma.groupName()
                            : Gamma.groupName() + "sub" + std::to_string(Q.size());
    auto actor = buildGroupAlgebra<K>(subgroupGroup(Gamma, Q, qName));
    auto carrier = buildGroupAlgebra<K>(
        subgroupGroup(Gamma, N, Gamma.groupName() + "nrm" + std::to_string(N.size())));
    std::map<int, int> posN;
    for (size_t i = 0; i < N.size(); ++i) posN[N[i]] = static_cast<int>(i);
    std::vector<Eigen::Triplet<K>> trip;
    for (size_t qi = 0; qi < Q.size(); ++qi)
        for (size_t ni = 0; ni < N.size(); ++ni) {
            int img = Gamma.conj(Q[qi], N[ni]);
            trip.emplace_back(posN.at(img),
                              static_cast<int>(pairIndex(static_cast<Idx>(qi),
                                                         static_cast<Idx>(ni), carrier.dim())),
                              K(1));
        }
    GradedMap<K> act(tensor(actor.space, carrier.space), carrier.space,
                     spFromTriplets<K>(carrier.dim(), actor.dim() * carrier.dim(), trip));
    return ModuleAction<K>{std::move(actor), std::move(carrier), std::move(act)};
}

template <class K>
struct SmashResult {
    ColorHopfAlgebra<K> product;  // H x| A on the tensor space H (x) A
    GradedMap<K> projBase;        // p2 = eps (x) id
    GradedMap<K> inclBase;        // iota2: a -> 1 (x) a
    GradedMap<K> inclTop;         // h -> h (x) 1
    ValidationReport verified;
};

/// Semidirect (smash) product H x| A. Its axioms are re-verified by
/// verifyHopf, never trusted.
template <class K>
SmashResult<K> smashProduct(const ModuleAction<K>& M, Idx assocCap = 300,
                            bool requireValidAction = true) {
    if (requireValidAction)
        validateModuleAction(M).require("smash product: invalid module action");
    const auto& A = M.actor;
    const auto& H = M.carrier;
    const Idx na = A.dim(), nh = H.dim(), n = nh * na;
    GradedSpace sp = tensor(H.space, A.space);
    GradedSpace TT = tensor(sp, sp), k = unitSpace(sp.group);

    std::vector<Eigen::Triplet<K>> tm, tu, tc, te, ts;
    // (h (x) a)(h' (x) a') = phi(|a2|,|h'|) h (a1 . h') (x) a2 a'
    for (Idx i = 0; i < nh; ++i)
        for (Idx j = 0; j < na; ++j)
            for (Idx i2 = 0; i2 < nh; ++i2)
                for (Idx j2 = 0; j2 < na; ++j2) {
                    Idx col = pairIndex(pairIndex(i, j, na), pairIndex(i2, j2, na), n);
                    SparseVec<K> val;
                    for (const auto& [ta, ca] : A.comul.col(j)) {
                        auto [a1, a2] = unpairIndex(ta, na);
                        K tw = ca * A.phiDeg(A.degOf(a2), H.degOf(i2));
                        if (isZero(tw)) continue;
                        auto hPart = H.mulVV(svUnit<K>(i), M.actCol(a1, i2));
                        for (const auto& [x, cx] : hPart)
                            for (const auto& [y, cy] : A.mulCol(a2, j2)) {
                                K v = tw * cx * cy;
                                if (!isZero(v)) val.emplace_back(pairIndex(x, y, na), std::move(v));
                            }
                    }
                    svNormalize(val);
                    for (const auto& [r, c] : val)
                        tm.emplace_back(static_cast<int>(r), static_cast<int>(col), c);
                }
    for (const auto& [i, ci] : H.one())
        for (const auto& [j, cj] : A.one())
            tu.emplace_back(static_cast<int>(pairIndex(i, j, na)), 0, ci * cj);
    // Delta(h (x) a) = phi(|h2|,|a1|) (h1 (x) a1) (x) (h2 (x) a2)
    for (Idx i = 0; i < nh; ++i)
        for (Idx j = 0; j < na; ++j) {
            for (const auto& [th, ch] : H.comul.col(i)) {
                auto [h1, h2] = unpairIndex(th, nh);
                for (const auto& [ta, ca] : A.comul.col(j)) {
                    auto [a1, a2] = unpairIndex(ta, na);
                    K v = ch * ca * A.phiDeg(H.degOf(h2), A.degOf(a1));
                    if (isZero(v)) continue;
                    tc.emplace_back(
                        static_cast<int>(pairIndex(pairIndex(h1, a1, na), pairIndex(h2, a2, na), n)),
                        static_cast<int>(pairIndex(i, j, na)), std::move(v));
                }
            }
            K e = H.counitOf(svUnit<K>(i)) * A.counitOf(svUnit<K>(j));
            if (!isZero(e)) te.emplace_back(0, static_cast<int>(pairIndex(i, j, na)), std::move(e));
            // S(h (x) a) = phi(|h|,|a1|) (S(a1) . S(h)) (x) S(a2)
            SparseVec<K> sval;
            for (const auto& [ta, ca] : A.comul.col(j)) {
                auto [a1, a2] = unpairIndex(ta, na);
                K tw = ca * A.phiDeg(H.degOf(i), A.degOf(a1));
                if (isZero(tw)) continue;
                auto hPart = M.actVV(A.antipode.col(a1), H.antipode.col(i));
                for (const auto& [x, cx] : hPart)
                    for (const auto& [y, cy] : A.antipode.col(a2)) {
                        K v = tw * cx * cy;
                        if (!isZero(v)) sval.emplace_back(pairIndex(x, y, na), std::move(v));
                    }
            }
            svNormalize(sval);
            for (const auto& [r, c] : sval)
                ts.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(i, j, na)), c);
        }

    ColorHopfAlgebra<K> P(
        H.name + "x|" + A.name, sp, A.phi,
        GradedMap<K>(TT, sp, spFromTriplets<K>(n, n * n, tm)),
        GradedMap<K>(k, sp, spFromTriplets<K>(n, 1, tu)),
        GradedMap<K>(sp, TT, spFromTriplets<K>(n * n, n, tc)),
        GradedMap<K>(sp, k, spFromTriplets<K>(1, n, te)),
        GradedMap<K>(sp, sp, spFromTriplets<K>(n, n, ts)));

    std::vector<Eigen::Triplet<K>> tp, ti, th;
    for (Idx i = 0; i < nh; ++i) {
        K e = H.counitOf(svUnit<K>(i));
        if (isZero(e)) continue;
        for (Idx j = 0; j < na; ++j)
            tp.emplace_back(static_cast<int>(j), static_cast<int>(pairIndex(i, j, na)), e);
    }
    for (Idx j = 0; j < na; ++j)
        for (const auto& [i, ci] : H.one())
            ti.emplace_back(static_cast<int>(pairIndex(i, j, na)), static_cast<int>(j), ci);
    for (Idx i = 0; i < nh; ++i)
        for (const auto& [j, cj] : A.one())
            th.emplace_back(static_cast<int>(pairIndex(i, j, na)), static_cast<int>(i), cj);

    SmashResult<K> out{std::move(P),
                       GradedMap<K>(sp, A.space, spFromTriplets<K>(na, n, tp)),
                       GradedMap<K>(A.space, sp, spFromTriplets<K>(n, na, ti)),
                       GradedMap<K>(H.space, sp, spFromTriplets<K>(n, nh, th)),
                       ValidationReport{}};
    out.verified = verifyHopf(out.product, assocCap);
    out.verified.require("smash product failed the Hopf axioms");
    return out;
}

template <class K>
struct SplitExtension {
    ColorHopfAlgebra<K> total;  // H
    ColorHopfAlgebra<K> base;   // A
    GradedMap<K> proj;          // p: H -> A
    GradedMap<K> sect;          // i: A -> H, p o i = id
};

template <class K>
ValidationReport validateSplitExtension(const SplitExtension<K>& E) {
    ValidationReport rep;
    rep.merge(verifyMorphism(E.total, E.base, E.proj), "proj");
    rep.merge(verifyMorphism(E.base, E.total, E.sect), "sect");
    rep.add("splitting", mapEqual(compose(E.proj, E.sect), identityMap<K>(E.base.space)));
    return rep;
}

template <class K>
struct SplitToActionResult {
    SubAlgebra<K> kernel;       // Hker(p) materialized
    ModuleAction<K> action;     // base acting on the kernel
    SmashResult<K> smash;       // Hker(p) x| A
    GradedMap<K> fwd;           // f: Hker(p) x| A -> H, k (x) a -> k i(a)
    GradedMap<K> bwd;           // g: H -> Hker(p) x| A
    ValidationReport checks;
};

/// The split-extension side of the equivalence: the action
/// a . k = phi(|a2|,|k|) i(a1) k i(S(a2)) on Hker(p), and the mutually
/// inverse morphisms f, g between Hker(p) x| A and H.
template <class K>
SplitToActionResult<K> splitToAction(const SplitExtension<K>& E, Idx assocCap = 300) {
    validateSplitExtension(E).require("split extension invalid");
    const auto& H = E.total;
    const auto& A = E.base;
    auto kernelSub = hopfKernel(H, A, E.proj);
    auto kernel = materializeSubalgebra(H, kernelSub, "Hker(" + H.name + "->" + A.name + ")");
    const Idx nk = kernel.algebra.dim(), na = A.dim();

    // a . k = xi_H(i(a) (x) k) restricted to the kernel
    std::vector<Eigen::Triplet<K>> ta;
    for (Idx a = 0; a < na; ++a) {
        auto ia = E.sect.col(a);
        for (Idx kx = 0; kx < nk; ++kx) {
            auto img = adjointVV(H, ia, kernel.incl.col(kx));
            auto coords = kernel.carrier.coordinates(img);
            if (!coords.has_value())
                throw ChopfError("split extension: the action leaves the kernel (library bug)");
            for (size_t r = 0; r < coords->size(); ++r)
                if (!isZero((*coords)[r]))
                    ta.emplace_back(static_cast<int>(r),
                                    static_cast<int>(pairIndex(a, kx, nk)), (*coords)[r]);
        }
    }
    ModuleAction<K> action{A, kernel.algebra,
                           GradedMap<K>(tensor(A.space, kernel.algebra.space),
                                        kernel.algebra.space,
                                        spFromTriplets<K>(nk, na * nk, ta))};
    auto smash = smashProduct(action, assocCap);

    // f(k (x) a) = k i(a)
    std::vector<Eigen::Triplet<K>> tf;
    for (Idx kx = 0; kx < nk; ++kx)
        for (Idx a = 0; a < na; ++a)
            for (const auto& [r, c] : H.mulVV(kernel.incl.col(kx), E.sect.col(a)))
                tf.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(kx, a, na)), c);
    GradedMap<K> fwd(smash.product.space, H.space, spFromTriplets<K>(H.dim(), nk * na, tf));

    // g(h) = h1 i(p(S(h2))) (x) p(h3). Only the full Sweedler sum lands in
    // the kernel leg, so accumulate in H (x) A first and re-express per
    // A-slice afterwards.
    std::vector<Eigen::Triplet<K>> tg;
    for (Idx h = 0; h < H.dim(); ++h) {
        SparseVec<K> inHA;
        for (const auto& [t, c] : H.comul.col(h)) {
            auto [h1, h23] = unpairIndex(t, H.dim());
            for (const auto& [t2, c2] : H.comul.col(h23)) {
                auto [h2, h3] = unpairIndex(t2, H.dim());
                auto mid = E.sect.apply(E.proj.apply(H.antipode.col(h2)));
                auto left = H.mulVV(svUnit<K>(h1), mid);
                for (const auto& [x, cx] : left)
                    for (const auto& [pa, ca] : E.proj.col(h3)) {
                        K v = c * c2 * cx * ca;
                        if (!isZero(v)) inHA.emplace_back(pairIndex(x, pa, na), std::move(v));
                    }
            }
        }
        svNormalize(inHA);
        std::map<Idx, SparseVec<K>> slices;  // A-basis index -> H-component
        for (const auto& [t, c] : inHA) {
            auto [x, a] = unpairIndex(t, na);
            slices[a].emplace_back(x, c);
        }
        for (const auto& [a, slice] : slices) {
            auto coords = kernel.carrier.coordinates(slice);
            if (!coords.has_value())
                throw ChopfError("split extension: g does not land in the kernel leg");
            for (size_t r = 0; r < coords->size(); ++r)
                if (!isZero((*coords)[r]))
                    tg.emplace_back(static_cast<int>(pairIndex(static_cast<Idx>(r), a, na)),
                                    static_cast<int>(h), (*coords)[r]);
        }
    }
    GradedMap<K> bwd(H.space, smash.product.space, spFromTriplets<K>(nk * na, H.dim(), tg));

    SplitToActionResult<K> res{std::move(kernel), std::move(action), std::move(smash),
                               std::move(fwd), std::move(bwd), ValidationReport{}};
    res.checks.merge(validateModuleAction(res.action), "action");
    res.checks.add("equivalence.f_morphism",
                   verifyMorphism(res.smash.product, H, res.fwd).ok());
    res.checks.add("equivalence.fg_identity",
                   mapEqual(compose(res.fwd, res.bwd), identityMap<K>(H.space)));
    res.checks.add("equivalence.gf_identity",
                   mapEqual(compose(res.bwd, res.fwd), identityMap<K>(res.smash.product.space)));
    return res;
}

/// Crossed module (A, H, d, .): d equivariant (cm1) and Peiffer-type (cm2).
template <class K>
struct CrossedModule {
    ColorHopfAlgebra<K> base;  // A
    ColorHopfAlgebra<K> top;   // H
    GradedMap<K> d;            // H -> A
    GradedMap<K> act;          // A (x) H -> H

    ModuleAction<K> action() const { return ModuleAction<K>{base, top, act}; }
};

template <class K>
ValidationReport validateCrossedModule(const CrossedModule<K>& X) {
    ValidationReport rep;
    rep.merge(validateModuleAction(X.action()), "action");
    rep.merge(verifyMorphism(X.top, X.base, X.d), "d");
    if (!rep.ok()) return rep;
    ModuleAction<K> M{X.base, X.top, X.act};
    const Idx na = X.base.dim(), nh = X.top.dim();
    {
        // (cm1) d(a . h) = xi_A(a (x) d(h))
        bool ok = true;
        std::string w;
        for (Idx a = 0; a < na && ok; ++a)
            for (Idx h = 0; h < nh && ok; ++h)
                if (X.d.apply(M.actCol(a, h)) !=
                    adjointVV(X.base, svUnit<K>(a), X.d.col(h))) {
                    ok = false;
                    w = "at (" + X.base.label(a) + ", " + X.top.label(h) + ")";
                }
        rep.add("cm1.equivariance", ok, w);
    }
    {
        // (cm2) d(g) . h = xi_H(g (x) h)
        bool ok = true;
        std::string w;
        for (Idx g = 0; g < nh && ok; ++g)
            for (Idx h = 0; h < nh && ok; ++h)
                if (M.actVV(X.d.col(g), svUnit<K>(h)) != adjointCol(X.top, g, h)) {
                    ok = false;
                    w = "at (" + X.top.label(g) + ", " + X.top.label(h) + ")";
                }
        rep.add("cm2.peiffer", ok, w);
    }
    return rep;
}

/// (A, A, id, xi): the adjoint self-action crossed module.
template <class K>
CrossedModule<K> adjointCrossedModule(const ColorHopfAlgebra<K>& A) {
    return CrossedModule<K>{A, A, identityMap<K>(A.space), adjointMap(A)};
}

/// (k Gamma, k N, inclusion, conjugation) for N normal in Gamma.
template <class K>
CrossedModule<K> conjugationCrossedModule(const FiniteGroup& Gamma, const FiniteGroup::Sub& N) {
    auto act = conjugationAction<K>(Gamma, Gamma.wholeGroup(), N);
    std::vector<Eigen::Triplet<K>> td;
    for (size_t i = 0; i < N.size(); ++i)
        td.emplace_back(N[i], static_cast<int>(i), K(1));
    GradedMap<K> d(act.carrier.space, act.actor.space,
                   spFromTriplets<K>(act.actor.dim(), act.carrier.dim(), td));
    return CrossedModule<K>{act.actor, act.carrier, std::move(d), std::move(act.act)};
}

template <class K>
struct ReflexiveGraph {
    ColorHopfAlgebra<K> arrows;   // A1
    ColorHopfAlgebra<K> objects;  // A0
    GradedMap<K> src;             // p (source)
    GradedMap<K> tgt;             // gamma (target)
    GradedMap<K> unit;            // i, with p i = gamma i = id
};

template <class K>
ValidationReport validateReflexiveGraph(const ReflexiveGraph<K>& G) {
    ValidationReport rep;
    rep.merge(verifyMorphism(G.arrows, G.objects, G.src), "src");
    rep.merge(verifyMorphism(G.arrows, G.objects, G.tgt), "tgt");
    rep.merge(verifyMorphism(G.objects, G.arrows, G.unit), "unit");
    rep.add("reflexive.src_unit", mapEqual(compose(G.src, G.unit), identityMap<K>(G.objects.space)));
    rep.add("reflexive.tgt_unit", mapEqual(compose(G.tgt, G.unit), identityMap<K>(G.objects.space)));
    return rep;
}

struct MultiplicativityResult {
    bool multiplicative = true;
    std::string witness;
};

/// Criterion (5): the graph carries a (necessarily unique) groupoid
/// structure iff Hker(src) and Hker(tgt) phi-commute elementwise.
template <class K>
MultiplicativityResult isMultiplicative(const ReflexiveGraph<K>& G) {
    auto kerS = hopfKernel(G.arrows, G.objects, G.src);
    auto kerT = hopfKernel(G.arrows, G.objects, G.tgt);
    for (const auto& [px, xr] : kerS.rows())
        for (const auto& [py, yr] : kerT.rows()) {
            auto rhs = G.arrows.mulVV(yr, xr);
            svScale(rhs, G.arrows.phiDeg(G.arrows.space.degree(px), G.arrows.space.degree(py)));
            if (G.arrows.mulVV(xr, yr) != rhs)
                return {false, "kernel pair (" + formatVec(G.arrows.space, xr) + ", " +
                                   formatVec(G.arrows.space, yr) + ")"};
        }
    return {true, ""};
}

template <class K>
struct RmgFromXmod {
    ReflexiveGraph<K> graph;
    SmashResult<K> smash;          // arrows = H x| A
    Subspace<K> pullbackCarrier;   // (A1 x_{A0} A1) inside A1 (x) A1
    GradedMap<K> composition;      // m on the ambient A1 (x) A1, restricted below
    ValidationReport checks;
};

/// The functor from crossed modules to reflexive-multiplicative graphs:
/// arrows H x| A, source eps (x) id, target m(d (x) id), unit iota2, with
/// the composition m(x (x) b (x) x' (x) b') = x eps(b) x' (x) b'.
template <class K>
RmgFromXmod<K> xmodToRmg(const CrossedModule<K>& X, Idx assocCap = 300) {
    validateCrossedModule(X).require("xmodToRmg: invalid crossed module");
    auto smash = smashProduct(X.action(), assocCap, false);
    const auto& A1 = smash.product;
    const Idx nh = X.top.dim(), na = X.base.dim(), n = A1.dim();

    // p1(h (x) b) = d(h) b
    std::vector<Eigen::Triplet<K>> t1;
    for (Idx h = 0; h < nh; ++h)
        for (Idx b = 0; b < na; ++b)
            for (const auto& [r, c] : X.base.mulVV(X.d.col(h), svUnit<K>(b)))
                t1.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(h, b, na)), c);
    GradedMap<K> p1(A1.space, X.base.space, spFromTriplets<K>(na, n, t1));

    ReflexiveGraph<K> graph{A1, X.base, smash.projBase, std::move(p1), smash.inclBase};
    ValidationReport checks;
    checks.merge(validateReflexiveGraph(graph), "graph");

    // pullback of (src, tgt) and the composition on it
    auto P = pullback(A1, A1, X.base, graph.src, graph.tgt);

    // m = (mul_H (x) id_A) o (id_H (x) eps_A (x) id_H (x) id_A) on A1 (x) A1
    std::vector<Eigen::Triplet<K>> tcomp;
    for (Idx i = 0; i < nh; ++i)
        for (Idx j = 0; j < na; ++j) {
            K eb = X.base.counitOf(svUnit<K>(j));
            if (isZero(eb)) continue;
            for (Idx i2 = 0; i2 < nh; ++i2)
                for (Idx j2 = 0; j2 < na; ++j2) {
                    Idx col = pairIndex(pairIndex(i, j, na), pairIndex(i2, j2, na), n);
                    for (const auto& [x, cx] : X.top.mulCol(i, i2)) {
                        K v = eb * cx;
                        if (!isZero(v))
                            tcomp.emplace_back(static_cast<int>(pairIndex(x, j2, na)),
                                               static_cast<int>(col), std::move(v));
                    }
                }
        }
    GradedMap<K> composition(tensor(A1.space, A1.space), A1.space,
                             spFromTriplets<K>(n, n * n, tcomp));

    // unit laws m(id, i src) = id = m(i tgt, id), both factoring through the
    // pullback carrier
    {
        bool leftOk = true, rightOk = true, landOk = true;
        for (Idx t = 0; t < n && (leftOk || rightOk); ++t) {
            SparseVec<K> coneL, coneR;
            for (const auto& [tt, c] : A1.comul.col(t)) {
                auto [x1, x2] = unpairIndex(tt, n);
                for (const auto& [u, cu] : graph.unit.apply(graph.src.col(x2)))
                    coneL.emplace_back(pairIndex(x1, u, n), c * cu);
                for (const auto& [u, cu] : graph.unit.apply(graph.tgt.col(x1)))
                    coneR.emplace_back(pairIndex(u, x2, n), c * cu);
            }
            svNormalize(coneL);
            svNormalize(coneR);
            if (!P.carrier.contains(coneL) || !P.carrier.contains(coneR)) landOk = false;
            if (composition.apply(coneL) != svUnit<K>(t)) leftOk = false;
            if (composition.apply(coneR) != svUnit<K>(t)) rightOk = false;
        }
        checks.add("multiplication.unit_sections_land_in_pullback", landOk);
        checks.add("multiplication.left_unit_law", leftOk);
        checks.add("multiplication.right_unit_law", rightOk);
    }
    return RmgFromXmod<K>{std::move(graph), std::move(smash), std::move(P.carrier),
                          std::move(composition), std::move(checks)};
}

template <class K>
struct XmodFromRmg {
    CrossedModule<K> xmod;
    SubAlgebra<K> kernel;  // Hker(src) inside the arrows
    ValidationReport checks;
};

/// The inverse functor: requires the multiplicativity criterion, then takes
/// d = tgt restricted to Hker(src) with the conjugation action through the
/// unit section.
template <class K>
XmodFromRmg<K> rmgToXmod(const ReflexiveGraph<K>& G) {
    validateReflexiveGraph(G).require("rmgToXmod: invalid reflexive graph");
    auto mult = isMultiplicative(G);
    if (!mult.multiplicative)
        throw ChopfError("rmgToXmod: graph is not multiplicative; witness " + mult.witness);

    SplitExtension<K> E{G.arrows, G.objects, G.src, G.unit};
    auto split = splitToAction(E);
    split.checks.require("rmgToXmod: split extension machinery failed");

    GradedMap<K> d = compose(G.tgt, split.kernel.incl);
    XmodFromRmg<K> out{CrossedModule<K>{G.objects, split.kernel.algebra, std::move(d),
                                        split.action.act},
                       std::move(split.kernel), ValidationReport{}};
    out.checks.merge(validateCrossedModule(out.xmod), "xmod");
    return out;
}

}  // namespace chopf
