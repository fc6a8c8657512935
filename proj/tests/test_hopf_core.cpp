#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/hopf_ops.hpp"

using namespace chopf;

namespace {

GradedMap<Rational> mapOnBasis(const GradedSpace& src, const GradedSpace& dst,
                               const std::vector<std::pair<int, Rational>>& images) {
    std::vector<Eigen::Triplet<Rational>> trip;
    for (Idx j = 0; j < src.dim(); ++j)
        trip.emplace_back(images[static_cast<size_t>(j)].first, static_cast<int>(j),
                          images[static_cast<size_t>(j)].second);
    return GradedMap<Rational>(src, dst, spFromTriplets<Rational>(dst.dim(), src.dim(), trip));
}

bool failedCheck(const ValidationReport& rep, const std::string& needle) {
    for (const auto& c : rep.checks())
        if (!c.ok && c.name.find(needle) != std::string::npos) return true;
    return false;
}

}  // namespace

TEST_CASE("group algebras pass the axiom verifier") {
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    CHECK(kz2.dim() == 2);
    CHECK(verifyHopf(kz2).ok());

    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    CHECK(ks3.dim() == 6);
    CHECK(verifyHopf(ks3).ok());

    auto kq8 = buildGroupAlgebra<Rational>(quaternionGroup8());
    CHECK(verifyHopf(kq8).ok());
}

TEST_CASE("group-likes are forced into degree zero") {
    GradingGroup z3({3});
    auto phi = trivialBicharacter<Rational>(z3);
    CHECK_THROWS_WITH_AS(buildGroupAlgebra<Rational>(cyclicGroup(3), z3, phi, {0, 1, 2}),
                         doctest::Contains("counit cannot be graded"), ChopfError);
}

TEST_CASE("truncated polynomial algebra over GF(7), graded by Z3") {
    auto A = buildTruncatedPolynomial(7, 3);
    CHECK(A.dim() == 7);
    CHECK(verifyHopf(A).ok());
    CHECK(A.space.degree(1) == 1);
    CHECK(A.space.degree(5) == 2);
    // x is primitive
    SparseVec<Fp> expect{{pairIndex(0, 1, 7), Fp(1, 7)}, {pairIndex(1, 0, 7), Fp(1, 7)}};
    CHECK(A.comul.col(1) == expect);
    // x^3 * x^4 = 0 by truncation
    CHECK(A.mulCol(3, 4).empty());
}

TEST_CASE("super line algebra verifies; a broken antipode is caught with witness v") {
    auto lambda1 = buildSuperExterior<Rational>(1);
    CHECK(lambda1.dim() == 2);
    CHECK(verifyHopf(lambda1).ok());

    // mutate S(v) = +v
    auto broken = lambda1;
    std::vector<Eigen::Triplet<Rational>> ts{{0, 0, Rational(1)}, {1, 1, Rational(1)}};
    broken.antipode = GradedMap<Rational>(broken.space, broken.space,
                                          spFromTriplets<Rational>(2, 2, ts));
    auto rep = verifyHopf(broken);
    CHECK_FALSE(rep.ok());
    CHECK(failedCheck(rep, "antipode"));
    bool witnessNamesV = false;
    for (const auto& c : rep.checks())
        if (!c.ok && c.witness.find("v1") != std::string::npos) witnessNamesV = true;
    CHECK(witnessNamesV);
}

TEST_CASE("exterior algebra on two generators: Koszul sign in even degree") {
    auto lambda2 = buildSuperExterior<Rational>(2);
    CHECK(lambda2.dim() == 4);
    CHECK(verifyHopf(lambda2).ok());

    // v1 v2 = -v2 v1, both products carry even degree
    auto v1v2 = lambda2.mulCol(1, 2);
    auto v2v1 = lambda2.mulCol(2, 1);
    REQUIRE(v1v2.size() == 1);
    REQUIRE(v2v1.size() == 1);
    CHECK(v1v2[0].second == -v2v1[0].second);
    CHECK(lambda2.degOf(v1v2[0].first) == 0);
    // v_i^2 = 0
    CHECK(lambda2.mulCol(1, 1).empty());

    CHECK(buildSuperExterior<Rational>(0).dim() == 1);
    CHECK_THROWS_AS(buildSuperExterior<Rational>(5), ChopfError);
}

TEST_CASE("graded group algebra is rejected when the phi-twist is nontrivial on group-likes") {
    GradingGroup z2({2});
    auto super = superBicharacter<Rational>();
    // Z4 graded by Z2 via reduction mod 2
    CHECK_THROWS_WITH_AS(
        buildGroupAlgebra<Rational>(cyclicGroup(4), z2, super, {0, 1, 0, 1}),
        doctest::Contains("phi-twist is nontrivial"), ChopfError);
    // non-homomorphic grading
    CHECK_THROWS_WITH_AS(buildGroupAlgebra<Rational>(cyclicGroup(4), z2, super, {0, 1, 1, 0}),
                         doctest::Contains("not a homomorphism"), ChopfError);
    // trivial grading into Z2 with the super phi is fine
    CHECK(verifyHopf(buildGroupAlgebra<Rational>(cyclicGroup(4), z2, super, {0, 0, 0, 0})).ok());
}

TEST_CASE("morphism verifier") {
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    CHECK(verifyMorphism(ks3, ks3, identityMap<Rational>(ks3.space)).ok());

    // counit into the zero object k
    auto kk = trivialHopfAlgebra<Rational>(ks3.space.group, ks3.phi);
    CHECK(verifyMorphism(ks3, kk, ks3.counit).ok());

    // g -> 2g on kZ2 is not a morphism
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    auto twice = mapOnBasis(kz2.space, kz2.space, {{0, Rational(2)}, {1, Rational(2)}});
    auto rep = verifyMorphism(kz2, kz2, twice);
    CHECK_FALSE(rep.ok());
    CHECK(failedCheck(rep, "unital"));
    CHECK(failedCheck(rep, "comultiplicative"));
}

TEST_CASE("antipode identities on the verified zoo members") {
    for (auto A : {buildGroupAlgebra<Rational>(symmetricGroup3()), buildSuperExterior<Rational>(2)}) {
        REQUIRE(verifyHopf(A).ok());
        // Delta S = (S (x) S) Delta and S m = m (S (x) S) c as matrix identities
        auto c = braiding(A.space, A.space, A.phi);
        auto SS = tensorMap(A.antipode, A.antipode);
        CHECK(mapEqual(compose(A.comul, A.antipode), compose(SS, A.comul)));
        CHECK(mapEqual(compose(A.antipode, A.mul), compose(A.mul, compose(SS, c))));
        // S^2 = id holds on these cocommutative examples
        CHECK(mapEqual(compose(A.antipode, A.antipode), identityMap<Rational>(A.space)));
    }
}

TEST_CASE("braided tensor product: dims, iso with kZ6, projections") {
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    auto kz3 = buildGroupAlgebra<Rational>(cyclicGroup(3));
    auto T = hopfTensorProduct(kz2, kz3);
    CHECK(T.product.dim() == 6);
    CHECK(verifyHopf(T.product).ok());

    // CRT isomorphism onto kZ6: (a, b) -> 3a + 4b mod 6
    auto kz6 = buildGroupAlgebra<Rational>(cyclicGroup(6));
    std::vector<Eigen::Triplet<Rational>> trip;
    for (int a = 0; a < 2; ++a)
        for (int b = 0; b < 3; ++b)
            trip.emplace_back((3 * a + 4 * b) % 6, static_cast<int>(pairIndex(a, b, 3)),
                              Rational(1));
    GradedMap<Rational> iso(T.product.space, kz6.space, spFromTriplets<Rational>(6, 6, trip));
    CHECK(verifyMorphism(T.product, kz6, iso).ok());
    CHECK(linearKernel(iso).isZeroSpace());

    CHECK(mapEqual(compose(T.projLeft, T.inclLeft), identityMap<Rational>(kz2.space)));
    CHECK(mapEqual(compose(T.projRight, T.inclRight), identityMap<Rational>(kz3.space)));
    CHECK(verifyMorphism(kz2, T.product, T.inclLeft).ok());
    CHECK(verifyMorphism(T.product, kz3, T.projRight).ok());
}

TEST_CASE("hopf kernel: counit, sign map") {
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto kk = trivialHopfAlgebra<Rational>(ks3.space.group, ks3.phi);
    CHECK(hopfKernel(ks3, kk, ks3.counit).dim() == ks3.dim());

    // sign: S3 -> Z2
    auto s3 = symmetricGroup3();
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    std::vector<Eigen::Triplet<Rational>> trip;
    for (int g = 0; g < 6; ++g) {
        bool odd = s3.name(g).size() == 4;  // "(12)", "(13)", "(23)"
        trip.emplace_back(odd ? 1 : 0, g, Rational(1));
    }
    GradedMap<Rational> sign(ks3.space, kz2.space, spFromTriplets<Rational>(2, 6, trip));
    REQUIRE(verifyMorphism(ks3, kz2, sign).ok());
    auto ker = hopfKernel(ks3, kz2, sign);
    CHECK(ker.dim() == 3);
    CHECK(isHopfSubalgebra(ks3, ker).ok());
    CHECK(ker.contains(svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(123)")))));
    CHECK_FALSE(ker.contains(svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(12)")))));
}

TEST_CASE("subalgebra closure") {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());

    auto unitOnly = subalgebraClosure<Rational>(ks3, {}, ClosureMode::Hopf);
    CHECK(unitOnly.dim() == 1);

    // hopf closure of a group-like gives the cyclic subgroup algebra
    auto c3 = subalgebraClosure<Rational>(
        ks3, {svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(123)")))}, ClosureMode::Hopf);
    CHECK(c3.dim() == 3);
    CHECK(isHopfSubalgebra(ks3, c3).ok());

    // algebra closure of v in Lambda(1): span{1, v}
    auto lambda1 = buildSuperExterior<Rational>(1);
    auto all = subalgebraClosure<Rational>(lambda1, {svUnit<Rational>(1)}, ClosureMode::Algebra);
    CHECK(all.dim() == 2);
}

TEST_CASE("materialized subalgebra carries an induced Hopf structure") {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto a3 = subalgebraClosure<Rational>(
        ks3, {svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(123)")))}, ClosureMode::Hopf);
    auto sub = materializeSubalgebra(ks3, a3, "kA3");
    CHECK(sub.algebra.dim() == 3);
    CHECK(verifyHopf(sub.algebra).ok());
    CHECK(verifyMorphism(sub.algebra, ks3, sub.incl).ok());
}

TEST_CASE("quotient by a normal Hopf subalgebra") {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());

    // B = k: quotient isomorphic to A
    auto unitSub = subalgebraClosure<Rational>(ks3, {}, ClosureMode::Hopf);
    auto q0 = quotientByNormal(ks3, unitSub);
    CHECK(q0.algebra.dim() == 6);
    CHECK(verifyHopf(q0.algebra).ok());
    CHECK(verifyMorphism(ks3, q0.algebra, q0.projection).ok());

    // B = kA3: quotient is kZ2
    auto a3 = subalgebraClosure<Rational>(
        ks3, {svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(123)")))}, ClosureMode::Hopf);
    auto q1 = quotientByNormal(ks3, a3);
    CHECK(q1.algebra.dim() == 2);
    CHECK(verifyHopf(q1.algebra).ok());
    CHECK(verifyMorphism(ks3, q1.algebra, q1.projection).ok());
    CHECK(hopfKernel(ks3, q1.algebra, q1.projection) == a3);
    // Lagrange on the group-algebra pair
    CHECK(q1.algebra.dim() * a3.dim() == ks3.dim());

    // B = A: quotient is k
    auto whole = Subspace<Rational>::full(ks3.space);
    auto q2 = quotientByNormal(ks3, whole);
    CHECK(q2.algebra.dim() == 1);

    // non-normal B errors with a witness
    auto t12 = subalgebraClosure<Rational>(
        ks3, {svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(12)")))}, ClosureMode::Hopf);
    CHECK_THROWS_WITH_AS(quotientByNormal(ks3, t12), doctest::Contains("not normal"), ChopfError);
}

TEST_CASE("pullbacks") {
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    auto kk = trivialHopfAlgebra<Rational>(ks3.space.group, ks3.phi);

    // over C = k the condition is vacuous
    auto P0 = pullback(ks3, kz2, kk, ks3.counit, kz2.counit);
    CHECK(P0.carrier.dim() == 12);
    CHECK(verifyHopf(P0.object.algebra).ok());

    // f = g = id on a group algebra: diagonal group-likes
    auto P1 = pullback(kz2, kz2, kz2, identityMap<Rational>(kz2.space),
                       identityMap<Rational>(kz2.space));
    CHECK(P1.carrier.dim() == 2);
    CHECK(verifyMorphism(P1.object.algebra, kz2, P1.projLeft).ok());
    CHECK(mapEqual(compose(kz2.counit, P1.projLeft), compose(kz2.counit, P1.projRight)));

    // universal property: the canonical cone factorization lands in the
    // pullback and is recovered by the projections
    auto diag = pullbackFactorize(P1, kz2, identityMap<Rational>(kz2.space),
                                  identityMap<Rational>(kz2.space));
    CHECK(verifyMorphism(kz2, P1.object.algebra, diag).ok());
    CHECK(mapEqual(compose(P1.projLeft, diag), identityMap<Rational>(kz2.space)));
    CHECK(mapEqual(compose(P1.projRight, diag), identityMap<Rational>(kz2.space)));

    // codomain mismatch errors
    CHECK_THROWS_AS(pullback(ks3, kz2, kz2, ks3.counit, identityMap<Rational>(kz2.space)),
                    ChopfError);
}

TEST_CASE("equalizers") {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(s3);
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    std::vector<Eigen::Triplet<Rational>> tp, tt;
    for (int g = 0; g < 6; ++g) {
        tp.emplace_back(s3.name(g).size() == 4 ? 1 : 0, g, Rational(1));
        tt.emplace_back(0, g, Rational(1));  // the trivial morphism g -> e
    }
    GradedMap<Rational> sign(ks3.space, kz2.space, spFromTriplets<Rational>(2, 6, tp));
    GradedMap<Rational> triv(ks3.space, kz2.space, spFromTriplets<Rational>(2, 6, tt));

    // Eq(f, f) is everything
    CHECK(equalizer(ks3, kz2, sign, sign).dim() == 6);

    // Eq(sign, trivial) picks out the even group-likes: kA3
    auto eq = equalizer(ks3, kz2, sign, triv);
    CHECK(eq.dim() == 3);
    CHECK(eq.contains(svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(123)")))));
    CHECK_FALSE(eq.contains(svUnit<Rational>(static_cast<Idx>(*s3.elementByName("(12)")))));
    CHECK(isHopfSubalgebra(ks3, eq).ok());
}
