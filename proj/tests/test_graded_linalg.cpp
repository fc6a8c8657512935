#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/graded_map.hpp"
#include "chopf/subspace.hpp"

using namespace chopf;

namespace {

// deterministic small-rational generator for property checks
struct Rng {
    unsigned long long s = 88172645463325252ull;
    unsigned long long next() {
        s ^= s << 13; s ^= s >> 7; s ^= s << 17;
        return s;
    }
    int range(int lo, int hi) { return lo + static_cast<int>(next() % (hi - lo + 1)); }
    Rational rat() { return ratio(range(-3, 3), range(1, 2)); }
};

GradedMap<Rational> randomGradedMap(Rng& rng, const GradedSpace& src, const GradedSpace& dst) {
    std::vector<Eigen::Triplet<Rational>> trip;
    for (Idx j = 0; j < src.dim(); ++j)
        for (Idx i = 0; i < dst.dim(); ++i)
            if (dst.degree(i) == src.degree(j) && rng.range(0, 2) == 0) {
                Rational v = rng.rat();
                if (v != 0) trip.emplace_back(static_cast<int>(i), static_cast<int>(j), v);
            }
    auto m = spFromTriplets<Rational>(dst.dim(), src.dim(), trip);
    return GradedMap<Rational>(src, dst, std::move(m));
}

SparseVec<Rational> randomHomogeneous(Rng& rng, const GradedSpace& X, int deg) {
    SparseVec<Rational> v;
    for (Idx i = 0; i < X.dim(); ++i)
        if (X.degree(i) == deg && rng.range(0, 1) == 0) v.emplace_back(i, rng.rat());
    svNormalize(v);
    return v;
}

}  // namespace

TEST_CASE("tensor of graded spaces") {
    GradingGroup z2({2});
    GradedSpace X(z2, {0, 1}, {"a", "b"});
    GradedSpace Y(z2, {0, 0, 1});
    auto XY = tensor(X, Y);
    CHECK(XY.dim() == 6);

    auto XX = tensor(X, X);
    std::vector<int> expect{0, 1, 1, 0};
    CHECK(XX.deg == expect);
    CHECK(XX.label(1) == "a(x)b");

    auto id2 = tensorMap(identityMap<Rational>(X), identityMap<Rational>(Y));
    CHECK(mapEqual(id2, identityMap<Rational>(tensor(X, Y))));
}

TEST_CASE("graded map rejects entries off the degree blocks") {
    GradingGroup z2({2});
    GradedSpace X(z2, {0, 1});
    std::vector<Eigen::Triplet<Rational>> trip{{1, 0, Rational(1)}};
    auto m = spFromTriplets<Rational>(2, 2, trip);
    CHECK_THROWS_AS(GradedMap<Rational>(X, X, std::move(m)), ChopfError);
}

TEST_CASE("braiding specializations") {
    GradingGroup z2({2});
    GradedSpace X(z2, {0, 1}, {"x0", "x1"});

    auto cTriv = braiding(X, X, trivialBicharacter<Rational>(z2));
    // plain swap permutation
    for (Idx i = 0; i < 2; ++i)
        for (Idx j = 0; j < 2; ++j) {
            auto out = cTriv.apply(svUnit<Rational>(pairIndex(i, j, 2)));
            REQUIRE(out.size() == 1);
            CHECK(out[0].first == pairIndex(j, i, 2));
            CHECK(out[0].second == Rational(1));
        }

    auto cSuper = braiding(X, X, superBicharacter<Rational>());
    auto oddOdd = cSuper.apply(svUnit<Rational>(pairIndex(1, 1, 2)));
    REQUIRE(oddOdd.size() == 1);
    CHECK(oddOdd[0].second == Rational(-1));

    // c_{Y,X} after c_{X,Y} is the identity (symmetry)
    auto roundTrip = compose(braiding(X, X, superBicharacter<Rational>()), cSuper);
    CHECK(mapEqual(roundTrip, identityMap<Rational>(tensor(X, X))));
}

TEST_CASE("braiding naturality on random graded maps") {
    Rng rng;
    GradingGroup z2({2});
    GradedSpace X(z2, {0, 1, 0, 1}), Y(z2, {0, 0, 1});
    auto phi = superBicharacter<Rational>();
    for (int trial = 0; trial < 6; ++trial) {
        auto f = randomGradedMap(rng, X, X);
        auto g = randomGradedMap(rng, Y, Y);
        auto lhs = compose(braiding(X, Y, phi), tensorMap(f, g));
        auto rhs = compose(tensorMap(g, f), braiding(X, Y, phi));
        CHECK(mapEqual(lhs, rhs));
    }
}

TEST_CASE("kernel and image basics") {
    GradingGroup z2({2});
    GradedSpace L(z2, {0, 1}, {"1", "v"});

    CHECK(linearKernel(identityMap<Rational>(L)).isZeroSpace());

    // counit of the super line: eps(1)=1, eps(v)=0
    GradedSpace k = unitSpace(z2);
    std::vector<Eigen::Triplet<Rational>> trip{{0, 0, Rational(1)}};
    GradedMap<Rational> eps(L, k, spFromTriplets<Rational>(1, 2, trip));
    auto ker = linearKernel(eps);
    CHECK(ker.dim() == 1);
    CHECK(ker.contains(svUnit<Rational>(1)));
    CHECK_FALSE(ker.contains(svUnit<Rational>(0)));

    GradedMap<Rational> zero(L, L, SpMat<Rational>(2, 2));
    CHECK(linearImage(zero).isZeroSpace());
    CHECK(linearKernel(zero).dim() == 2);
}

TEST_CASE("solve is exact and reports inconsistency as none") {
    GradingGroup triv;
    GradedSpace X(triv, {0, 0}), Y(triv, {0, 0});
    std::vector<Eigen::Triplet<Rational>> trip{
        {0, 0, Rational(2)}, {0, 1, Rational(1)}, {1, 0, Rational(4)}, {1, 1, Rational(2)}};
    GradedMap<Rational> f(X, Y, spFromTriplets<Rational>(2, 2, trip));

    auto sol = solveLinear(f, SparseVec<Rational>{{0, Rational(1)}, {1, Rational(2)}});
    REQUIRE(sol.has_value());
    auto back = f.apply(*sol);
    CHECK(back == SparseVec<Rational>{{0, Rational(1)}, {1, Rational(2)}});

    auto none = solveLinear(f, SparseVec<Rational>{{0, Rational(1)}, {1, Rational(3)}});
    CHECK_FALSE(none.has_value());
}

TEST_CASE("subspace lattice: idempotence and complements") {
    GradingGroup triv;
    GradedSpace X(triv, {0, 0, 0, 0});
    auto U = Subspace<Rational>::spanGraded(
        X, {svUnit<Rational>(0), svUnit<Rational>(1)});
    CHECK(U.intersect(U) == U);
    CHECK(U.sum(U) == U);

    auto V = Subspace<Rational>::spanGraded(
        X, {svUnit<Rational>(2), svUnit<Rational>(3)});
    CHECK(U.intersect(V).isZeroSpace());
    CHECK(U.sum(V) == Subspace<Rational>::full(X));
    CHECK(Subspace<Rational>::full(X).containsSub(U));

    GradedSpace other(triv, {0, 0});
    auto W = Subspace<Rational>::full(other);
    CHECK_THROWS_AS(U.sum(W), ChopfError);
}

TEST_CASE("dimension formula on random subspaces") {
    Rng rng;
    GradingGroup z2({2});
    GradedSpace X(z2, {0, 0, 1, 1, 0, 1});
    for (int trial = 0; trial < 12; ++trial) {
        std::vector<SparseVec<Rational>> gu, gv;
        for (int i = 0; i < 3; ++i) {
            gu.push_back(randomHomogeneous(rng, X, rng.range(0, 1)));
            gv.push_back(randomHomogeneous(rng, X, rng.range(0, 1)));
        }
        auto U = Subspace<Rational>::spanGraded(X, gu);
        auto V = Subspace<Rational>::spanGraded(X, gv);
        CHECK(U.intersect(V).dim() + U.sum(V).dim() == U.dim() + V.dim());
        CHECK(U.sum(V).containsSub(U.intersect(V)));
    }
}

TEST_CASE("echelon canonicity decides equality") {
    GradingGroup triv;
    GradedSpace X(triv, {0, 0, 0});
    auto U = Subspace<Rational>::spanGraded(
        X, {{{0, Rational(1)}, {1, Rational(1)}}, {{1, Rational(2)}}});
    auto V = Subspace<Rational>::spanGraded(
        X, {{{0, Rational(3)}}, {{0, Rational(5)}, {1, Rational(-7)}}});
    CHECK(U == V);

    auto W = Subspace<Rational>::spanGraded(X, {{{0, Rational(1)}, {2, Rational(1)}}});
    CHECK(U != W.sum(U));

    // associativity of intersection holds exactly
    auto A = U, B = W.sum(U), C = Subspace<Rational>::full(X);
    CHECK(A.intersect(B).intersect(C) == A.intersect(B.intersect(C)));
}

TEST_CASE("coordinates solve in the echelon basis") {
    GradingGroup triv;
    GradedSpace X(triv, {0, 0, 0});
    auto U = Subspace<Rational>::spanGraded(
        X, {{{0, Rational(1)}, {2, Rational(1)}}, {{1, Rational(1)}}});
    SparseVec<Rational> v{{0, Rational(2)}, {1, Rational(-1)}, {2, Rational(2)}};
    auto coords = U.coordinates(v);
    REQUIRE(coords.has_value());
    CHECK((*coords)[0] == Rational(2));
    CHECK((*coords)[1] == Rational(-1));
    CHECK_FALSE(U.coordinates(svUnit<Rational>(2)).has_value());
}

TEST_CASE("prime field elimination") {
    GradingGroup triv;
    GradedSpace X(triv, {0, 0, 0});
    auto U = Subspace<Fp>::spanGraded(
        X, {{{0, Fp(2, 7)}, {1, Fp(3, 7)}}, {{1, Fp(5, 7)}, {2, Fp(1, 7)}}});
    CHECK(U.dim() == 2);
    // 2e0+3e1 + 2*(5e1+e2) = 2e0 + 6e1 + 2e2
    CHECK(U.contains(SparseVec<Fp>{{0, Fp(2, 7)}, {1, Fp(6, 7)}, {2, Fp(2, 7)}}));
    CHECK_FALSE(U.contains(svUnit<Fp>(0, Fp(1, 7))));
}
