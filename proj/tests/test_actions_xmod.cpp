#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/actions.hpp"

using namespace chopf;

namespace {

FiniteGroup::Sub byNames(const FiniteGroup& G, const std::vector<std::string>& names) {
    FiniteGroup::Sub out;
    for (const auto& n : names) {
        auto e = G.elementByName(n);
        REQUIRE(e.has_value());
        out.push_back(*e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

}  // namespace

TEST_CASE("module action validation") {
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));

    CHECK(validateModuleAction(trivialAction(kz2, ks3)).ok());
    CHECK(validateModuleAction(adjointSelfAction(ks3)).ok());

    // conjugation of <(12)> on A3 inside S3
    auto s3 = symmetricGroup3();
    auto conj = conjugationAction<Rational>(s3, byNames(s3, {"e", "(12)"}),
                                            byNames(s3, {"e", "(123)", "(132)"}));
    CHECK(validateModuleAction(conj).ok());

    // a broken action: act(a (x) h) = eps(a) eps(h) 1 is not unital
    auto bad = trivialAction(kz2, ks3);
    std::vector<Eigen::Triplet<Rational>> tb;
    for (Idx a = 0; a < 2; ++a)
        for (Idx h = 0; h < 6; ++h)
            tb.emplace_back(0, static_cast<int>(pairIndex(a, h, 6)), Rational(1));
    bad.act = GradedMap<Rational>(bad.act.src, bad.act.dst, spFromTriplets<Rational>(6, 12, tb));
    CHECK_FALSE(validateModuleAction(bad).ok());
}

TEST_CASE("smash product with trivial action is the braided tensor product") {
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    auto lambda1 = buildSuperExterior<Rational>(1);
    auto kz2s = buildGroupAlgebra<Rational>(cyclicGroup(2), lambda1.space.group, lambda1.phi,
                                            {0, 0});
    auto smash = smashProduct(trivialAction(kz2s, lambda1));
    auto tens = hopfTensorProduct(lambda1, kz2s);
    CHECK(mapEqual(smash.product.mul, tens.product.mul));
    CHECK(mapEqual(smash.product.comul, tens.product.comul));
    CHECK(mapEqual(smash.product.antipode, tens.product.antipode));
    CHECK(smash.product.dim() == lambda1.dim() * kz2s.dim());
    (void)kz2;
}

TEST_CASE("kZ3 smash kZ2 with conjugation is kS3") {
    auto s3 = symmetricGroup3();
    auto conj = conjugationAction<Rational>(s3, byNames(s3, {"e", "(12)"}),
                                            byNames(s3, {"e", "(123)", "(132)"}));
    auto smash = smashProduct(conj);
    CHECK(smash.product.dim() == 6);
    CHECK(smash.verified.ok());

    // group-like matching: (n (x) q) -> n q in S3
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto N = byNames(s3, {"e", "(123)", "(132)"});
    auto Q = byNames(s3, {"e", "(12)"});
    std::vector<Eigen::Triplet<Rational>> trip;
    for (size_t ni = 0; ni < N.size(); ++ni)
        for (size_t qi = 0; qi < Q.size(); ++qi)
            trip.emplace_back(s3.mul(N[ni], Q[qi]),
                              static_cast<int>(pairIndex(static_cast<Idx>(ni),
                                                         static_cast<Idx>(qi), 2)),
                              Rational(1));
    GradedMap<Rational> iso(smash.product.space, ks3.space, spFromTriplets<Rational>(6, 6, trip));
    CHECK(verifyMorphism(smash.product, ks3, iso).ok());
    CHECK(linearKernel(iso).isZeroSpace());
}

TEST_CASE("split extension recovers the module action") {
    auto s3 = symmetricGroup3();
    auto conj = conjugationAction<Rational>(s3, byNames(s3, {"e", "(12)"}),
                                            byNames(s3, {"e", "(123)", "(132)"}));
    auto smash = smashProduct(conj);

    SplitExtension<Rational> ext{smash.product, conj.actor, smash.projBase, smash.inclBase};
    auto split = splitToAction(ext);
    CHECK(split.checks.ok());
    CHECK(split.kernel.algebra.dim() == conj.carrier.dim());

    // Hker(p2) = H (x) k1: transporting along h -> h (x) 1 recovers the action
    const Idx nh = conj.carrier.dim();
    for (Idx a = 0; a < conj.actor.dim(); ++a)
        for (Idx h = 0; h < nh; ++h) {
            auto embedded = split.kernel.carrier.coordinates(smash.inclTop.col(h));
            REQUIRE(embedded.has_value());
            SparseVec<Rational> hv;
            for (size_t r = 0; r < embedded->size(); ++r)
                if ((*embedded)[r] != 0) hv.emplace_back(static_cast<Idx>(r), (*embedded)[r]);
            auto lhs = split.kernel.incl.apply(split.action.actVV(svUnit<Rational>(a), hv));
            auto rhs = smash.inclTop.apply(conj.actCol(a, h));
            CHECK(lhs == rhs);
        }
}

TEST_CASE("degenerate split extension: H = A, p = i = id") {
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    SplitExtension<Rational> ext{kz2, kz2, identityMap<Rational>(kz2.space),
                                 identityMap<Rational>(kz2.space)};
    auto split = splitToAction(ext);
    CHECK(split.checks.ok());
    CHECK(split.kernel.algebra.dim() == 1);
    CHECK(split.smash.product.dim() == 2);
}

TEST_CASE("kS3 split over kZ2 by the transposition section") {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));

    std::vector<Eigen::Triplet<Rational>> tp, ti;
    for (int g = 0; g < 6; ++g) tp.emplace_back(s3.name(g).size() == 4 ? 1 : 0, g, Rational(1));
    ti.emplace_back(*s3.elementByName("e"), 0, Rational(1));
    ti.emplace_back(*s3.elementByName("(12)"), 1, Rational(1));
    SplitExtension<Rational> ext{ks3, kz2,
                                 GradedMap<Rational>(ks3.space, kz2.space,
                                                     spFromTriplets<Rational>(2, 6, tp)),
                                 GradedMap<Rational>(kz2.space, ks3.space,
                                                     spFromTriplets<Rational>(6, 2, ti))};
    auto split = splitToAction(ext);
    CHECK(split.checks.ok());
    CHECK(split.kernel.algebra.dim() == 3);

    // the action of the odd group-like is conjugation by (12) on A3
    auto c123 = split.kernel.carrier.coordinates(
        svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(123)"))));
    REQUIRE(c123.has_value());
    SparseVec<Rational> v123;
    for (size_t r = 0; r < c123->size(); ++r)
        if ((*c123)[r] != 0) v123.emplace_back(static_cast<Idx>(r), (*c123)[r]);
    auto moved = split.kernel.incl.apply(split.action.actVV(svUnit<Rational>(1), v123));
    CHECK(moved == svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(132)"))));
}

TEST_CASE("crossed module validation") {
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    CHECK(validateCrossedModule(adjointCrossedModule(ks3)).ok());

    auto s3 = symmetricGroup3();
    auto a3 = byNames(s3, {"e", "(123)", "(132)"});
    CHECK(validateCrossedModule(conjugationCrossedModule<Rational>(s3, a3)).ok());

    auto d4 = dihedralGroup(4);
    CHECK(validateCrossedModule(conjugationCrossedModule<Rational>(d4, byNames(d4, {"e", "r2"})))
              .ok());

    // trivial d with an abelian top still satisfies (cm2): conjugation
    // inside kA3 is trivial, so this remains a valid crossed module
    auto Xab = conjugationCrossedModule<Rational>(s3, a3);
    std::vector<Eigen::Triplet<Rational>> tda;
    for (Idx h = 0; h < Xab.top.dim(); ++h) {
        Rational e = Xab.top.counitOf(svUnit<Rational>(h));
        if (e != 0) tda.emplace_back(s3.identity(), static_cast<int>(h), e);
    }
    Xab.d = GradedMap<Rational>(Xab.top.space, Xab.base.space, spFromTriplets<Rational>(6, 3, tda));
    CHECK(validateCrossedModule(Xab).ok());

    // with a nonabelian top the trivial d breaks the Peiffer condition
    auto X = adjointCrossedModule(ks3);
    std::vector<Eigen::Triplet<Rational>> td;
    for (Idx h = 0; h < X.top.dim(); ++h) {
        Rational e = X.top.counitOf(svUnit<Rational>(h));
        if (e != 0) td.emplace_back(s3.identity(), static_cast<int>(h), e);
    }
    X.d = GradedMap<Rational>(X.top.space, X.base.space, spFromTriplets<Rational>(6, 6, td));
    auto rep = validateCrossedModule(X);
    CHECK_FALSE(rep.ok());
    bool cm2failed = false;
    for (const auto& c : rep.checks())
        if (!c.ok) {
            CHECK(c.name.find("cm2") != std::string::npos);
            cm2failed = true;
        }
    CHECK(cm2failed);
}

TEST_CASE("crossed module to reflexive-multiplicative graph") {
    auto s3 = symmetricGroup3();
    auto X = conjugationCrossedModule<Rational>(s3, byNames(s3, {"e", "(123)", "(132)"}));
    auto rmg = xmodToRmg(X);
    CHECK(rmg.checks.ok());
    CHECK(rmg.graph.arrows.dim() == 18);

    // p1 on group-likes: p1(n (x) b) = n b
    auto N = byNames(s3, {"e", "(123)", "(132)"});
    for (size_t ni = 0; ni < N.size(); ++ni)
        for (int b = 0; b < 6; ++b) {
            auto img = rmg.graph.tgt.col(pairIndex(static_cast<Idx>(ni), b, 6));
            REQUIRE(img.size() == 1);
            CHECK(img[0].first == s3.mul(N[ni], b));
        }

    CHECK(isMultiplicative(rmg.graph).multiplicative);

    // the adjoint self-action instance: arrows A x| A
    auto kz3 = buildGroupAlgebra<Rational>(cyclicGroup(3));
    auto selfRmg = xmodToRmg(adjointCrossedModule(kz3));
    CHECK(selfRmg.checks.ok());
    CHECK(selfRmg.graph.arrows.dim() == 9);
    CHECK(isMultiplicative(selfRmg.graph).multiplicative);
}

TEST_CASE("corrupting cm1 breaks the multiplicativity of the target map") {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto N = byNames(s3, {"e", "(123)", "(132)"});
    auto kn = buildGroupAlgebra<Rational>(subgroupGroup(s3, N, "A3"));

    // trivial action with d = inclusion violates (cm1); p1 = m(d (x) id) on
    // the resulting smash fails to be an algebra map
    ModuleAction<Rational> triv = trivialAction(ks3, kn);
    CHECK_FALSE(validateCrossedModule(CrossedModule<Rational>{
                    ks3, kn,
                    GradedMap<Rational>(kn.space, ks3.space,
                                        [&] {
                                            std::vector<Eigen::Triplet<Rational>> td;
                                            for (size_t i = 0; i < N.size(); ++i)
                                                td.emplace_back(N[i], static_cast<int>(i),
                                                                Rational(1));
                                            return spFromTriplets<Rational>(6, 3, td);
                                        }()),
                    triv.act})
                    .ok());
    auto smash = smashProduct(triv);
    std::vector<Eigen::Triplet<Rational>> t1;
    for (size_t h = 0; h < N.size(); ++h)
        for (int b = 0; b < 6; ++b)
            t1.emplace_back(s3.mul(N[h], b),
                            static_cast<int>(pairIndex(static_cast<Idx>(h), b, 6)), Rational(1));
    GradedMap<Rational> p1(smash.product.space, ks3.space, spFromTriplets<Rational>(6, 18, t1));
    CHECK_FALSE(verifyMorphism(smash.product, ks3, p1).ok());
}

TEST_CASE("multiplicativity criterion: positive and negative instances") {
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());

    // diagonal graph on kS3 (x) kS3: kernels sit in separate tensor legs
    auto T = hopfTensorProduct(ks3, ks3);
    std::vector<Eigen::Triplet<Rational>> tdiag;
    for (int g = 0; g < 6; ++g)
        tdiag.emplace_back(static_cast<int>(pairIndex(g, g, 6)), g, Rational(1));
    GradedMap<Rational> diag(ks3.space, T.product.space, spFromTriplets<Rational>(36, 6, tdiag));
    ReflexiveGraph<Rational> graph{T.product, ks3, T.projLeft, T.projRight, diag};
    CHECK(validateReflexiveGraph(graph).ok());
    CHECK(isMultiplicative(graph).multiplicative);

    // collapsing kS3 to the point: kernels are all of kS3, which does not
    // commute with itself
    auto kk = trivialHopfAlgebra<Rational>(ks3.space.group, ks3.phi);
    ReflexiveGraph<Rational> bad{ks3, kk, ks3.counit, ks3.counit, ks3.unit};
    CHECK(validateReflexiveGraph(bad).ok());
    auto res = isMultiplicative(bad);
    CHECK_FALSE(res.multiplicative);
    CHECK_FALSE(res.witness.empty());
    CHECK_THROWS_AS(rmgToXmod(bad), ChopfError);

    // identity graph: kernels are k, trivially multiplicative
    ReflexiveGraph<Rational> idGraph{ks3, ks3, identityMap<Rational>(ks3.space),
                                     identityMap<Rational>(ks3.space),
                                     identityMap<Rational>(ks3.space)};
    CHECK(isMultiplicative(idGraph).multiplicative);
    auto idX = rmgToXmod(idGraph);
    CHECK(idX.checks.ok());
    CHECK(idX.xmod.top.dim() == 1);
}

TEST_CASE("round trip: crossed module -> graph -> crossed module") {
    auto s3 = symmetricGroup3();
    for (auto X : {conjugationCrossedModule<Rational>(s3, byNames(s3, {"e", "(123)", "(132)"})),
                   adjointCrossedModule(buildGroupAlgebra<Rational>(cyclicGroup(3)))}) {
        auto rmg = xmodToRmg(X);
        REQUIRE(rmg.checks.ok());
        auto back = rmgToXmod(rmg.graph);
        REQUIRE(back.checks.ok());

        // alpha: Hker(p2) -> H is the first-leg projection, a bijective Hopf
        // morphism compatible with d and the actions
        auto projTop = [&] {
            std::vector<Eigen::Triplet<Rational>> tp;
            const Idx nh = X.top.dim(), na = X.base.dim();
            for (Idx i = 0; i < nh; ++i)
                for (Idx j = 0; j < na; ++j) {
                    Rational e = X.base.counitOf(svUnit<Rational>(j));
                    if (e != 0)
                        tp.emplace_back(static_cast<int>(i),
                                        static_cast<int>(pairIndex(i, j, na)), e);
                }
            return GradedMap<Rational>(rmg.graph.arrows.space, X.top.space,
                                       spFromTriplets<Rational>(nh, nh * na, tp));
        }();
        GradedMap<Rational> alpha = compose(projTop, back.kernel.incl);
        CHECK(verifyMorphism(back.xmod.top, X.top, alpha).ok());
        CHECK(linearKernel(alpha).isZeroSpace());
        CHECK(back.xmod.top.dim() == X.top.dim());
        // d' = d o alpha and alpha intertwines the actions
        CHECK(mapEqual(back.xmod.d, compose(X.d, alpha)));
        for (Idx a = 0; a < X.base.dim(); ++a)
            for (Idx kk = 0; kk < back.xmod.top.dim(); ++kk) {
                auto lhs = alpha.apply(back.xmod.act.col(pairIndex(a, kk, back.xmod.top.dim())));
                auto rhs = X.act.apply(svTensor(svUnit<Rational>(a), alpha.col(kk), X.top.dim()));
                CHECK(lhs == rhs);
            }
    }
}

TEST_CASE("round trip: graph -> crossed module -> graph") {
    auto s3 = symmetricGroup3();
    auto X = conjugationCrossedModule<Rational>(s3, byNames(s3, {"e", "(123)", "(132)"}));
    auto rmg = xmodToRmg(X);
    REQUIRE(rmg.checks.ok());

    // F(graph), then G of it; phi: Hker(p) x| A0 -> A1, k (x) a -> k i(a)
    SplitExtension<Rational> ext{rmg.graph.arrows, rmg.graph.objects, rmg.graph.src,
                                 rmg.graph.unit};
    auto split = splitToAction(ext);
    REQUIRE(split.checks.ok());
    auto back = rmgToXmod(rmg.graph);
    REQUIRE(back.checks.ok());
    auto rmg2 = xmodToRmg(back.xmod);
    REQUIRE(rmg2.checks.ok());

    const auto& phiMap = split.fwd;  // rmg2.arrows == split.smash.product by construction
    CHECK(mapEqual(rmg2.smash.product.mul, split.smash.product.mul));
    CHECK(verifyMorphism(rmg2.graph.arrows, rmg.graph.arrows, phiMap).ok());
    CHECK(linearKernel(phiMap).isZeroSpace());
    CHECK(mapEqual(compose(rmg.graph.src, phiMap), rmg2.graph.src));
    CHECK(mapEqual(compose(rmg.graph.tgt, phiMap), rmg2.graph.tgt));
    CHECK(mapEqual(compose(phiMap, rmg2.graph.unit), rmg.graph.unit));
}
