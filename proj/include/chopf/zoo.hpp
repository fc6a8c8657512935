#pragma once

#include "chopf/simplicial.hpp"

namespace chopf {

/// Deterministic test corpus: the group algebras, the super exterior
/// algebras, the crossed modules and the split extensions that every
/// higher-level check runs against.
template <class K>
struct Zoo {
    struct NamedGroup {
        std::string name;
        FiniteGroup group;
    };
    std::vector<NamedGroup> groups;
    std::vector<ColorHopfAlgebra<K>> algebras;
    std::vector<CrossedModule<K>> xmods;
    std::vector<ModuleAction<K>> actions;
};

inline std::vector<FiniteGroup> zooGroups() {
    return {cyclicGroup(2),  cyclicGroup(3),
            cyclicGroup(4),  productGroup(cyclicGroup(2), cyclicGroup(2)),
            cyclicGroup(6),  symmetricGroup3(),
            dihedralGroup(4), quaternionGroup8()};
}

/// The rational corpus. Every member is expected to pass its validator;
/// the acceptance suite enforces that.
inline Zoo<Rational> standardZoo() {
    Zoo<Rational> zoo;
    for (auto& G : zooGroups()) {
        zoo.algebras.push_back(buildGroupAlgebra<Rational>(G));
        zoo.groups.push_back({G.groupName(), G});
    }
    zoo.algebras.push_back(buildSuperExterior<Rational>(1));
    zoo.algebras.push_back(buildSuperExterior<Rational>(2));
    // kZ4 regraded trivially into Z2 against the super bicharacter: a
    // nontrivial phi living over trivial degrees
    zoo.algebras.push_back(buildGroupAlgebra<Rational>(cyclicGroup(4), GradingGroup({2}),
                                                       superBicharacter<Rational>(),
                                                       {0, 0, 0, 0}));

    // crossed modules: adjoint self-actions and conjugation instances
    auto s3 = symmetricGroup3();
    auto d4 = dihedralGroup(4);
    auto q8 = quaternionGroup8();
    auto z4 = cyclicGroup(4);
    auto z6 = cyclicGroup(6);
    zoo.xmods.push_back(adjointCrossedModule(buildGroupAlgebra<Rational>(cyclicGroup(3))));
    zoo.xmods.push_back(adjointCrossedModule(buildSuperExterior<Rational>(1)));
    // the dim H * dim A = 36 boundary case
    zoo.xmods.push_back(adjointCrossedModule(buildGroupAlgebra<Rational>(s3)));
    zoo.xmods.push_back(conjugationCrossedModule<Rational>(s3, {0, 4, 5}));         // (kS3, kA3)
    zoo.xmods.push_back(conjugationCrossedModule<Rational>(d4, {0, 2}));            // (kD4, k<r2>)
    zoo.xmods.push_back(conjugationCrossedModule<Rational>(q8, {0, 4}));            // (kQ8, k<-1>)
    zoo.xmods.push_back(conjugationCrossedModule<Rational>(z4, {0, 2}));            // (kZ4, kZ2)
    zoo.xmods.push_back(conjugationCrossedModule<Rational>(z6, {0, 2, 4}));         // (kZ6, kZ3)

    // module actions beyond the crossed-module ones
    zoo.actions.push_back(conjugationAction<Rational>(s3, {0, 1}, {0, 4, 5}));  // <(12)> on A3
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    auto lambda1 = buildSuperExterior<Rational>(1);
    auto kz2super = buildGroupAlgebra<Rational>(cyclicGroup(2), GradingGroup({2}),
                                                superBicharacter<Rational>(), {0, 0});
    zoo.actions.push_back(trivialAction(kz2super, lambda1));
    zoo.actions.push_back(adjointSelfAction(buildGroupAlgebra<Rational>(s3)));
    (void)kz2;
    return zoo;
}

/// Stamps an explicit modulus onto every scalar of a GF(p) algebra so the
/// field is recoverable from any entry.
inline ColorHopfAlgebra<Fp> withModulus(ColorHopfAlgebra<Fp> A, long long p) {
    auto fix = [&](GradedMap<Fp>& f) {
        std::vector<Eigen::Triplet<Fp>> trip;
        for (int c = 0; c < f.mat.outerSize(); ++c)
            for (SpMat<Fp>::InnerIterator it(f.mat, c); it; ++it) {
                Fp v(it.value().v, p);
                if (!isZero(v)) trip.emplace_back(it.row(), it.col(), v);
            }
        f.mat = spFromTriplets<Fp>(f.mat.rows(), f.mat.cols(), trip);
    };
    fix(A.mul);
    fix(A.unit);
    fix(A.comul);
    fix(A.counit);
    fix(A.antipode);
    for (int g = 0; g < A.space.group.size(); ++g)
        for (int h = 0; h < A.space.group.size(); ++h)
            A.phi.table(g, h) = Fp(A.phi.table(g, h).v, p);
    return A;
}

/// Prime-field corpus members.
inline Zoo<Fp> gf7Zoo() {
    Zoo<Fp> zoo;
    zoo.algebras.push_back(withModulus(buildTruncatedPolynomial(7, 3), 7));
    {
        GradingGroup z3({3});
        zoo.algebras.push_back(withModulus(
            buildGroupAlgebra<Fp>(cyclicGroup(3), z3,
                                  makeBicharacter<Fp>(z3, [](int, int) { return Fp(1, 7); }),
                                  {0, 0, 0}),
            7));
    }
    auto X = adjointCrossedModule(zoo.algebras[1]);
    std::vector<Eigen::Triplet<Fp>> fixAct;
    for (int c = 0; c < X.act.mat.outerSize(); ++c)
        for (SpMat<Fp>::InnerIterator it(X.act.mat, c); it; ++it) {
            Fp v(it.value().v, 7);
            if (!isZero(v)) fixAct.emplace_back(it.row(), it.col(), v);
        }
    X.act.mat = spFromTriplets<Fp>(X.act.mat.rows(), X.act.mat.cols(), fixAct);
    zoo.xmods.push_back(std::move(X));
    return zoo;
}

/// The parity morphism kS3 -> kZ2 (group-likes to their signs).
inline HopfMorphism<Rational> signMorphism() {
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(s3);
    auto kz2 = buildGroupAlgebra<Rational>(cyclicGroup(2));
    std::vector<Eigen::Triplet<Rational>> trip;
    for (int g = 0; g < 6; ++g)
        trip.emplace_back(s3.name(g).size() == 4 ? 1 : 0, g, Rational(1));
    GradedMap<Rational> map(ks3.space, kz2.space, spFromTriplets<Rational>(2, 6, trip));
    return HopfMorphism<Rational>{std::move(ks3), std::move(kz2), std::move(map)};
}

/// The canonical surjection kD4 -> kD4 / k<r2>, the standard Hall-criterion
/// instance.
inline HopfMorphism<Rational> dihedralCollapse() {
    auto d4 = dihedralGroup(4);
    auto kd4 = buildGroupAlgebra<Rational>(d4);
    auto q = quotientByNormal(kd4, spanOfGroupElements(kd4, FiniteGroup::Sub{0, 2}));
    return HopfMorphism<Rational>{std::move(kd4), std::move(q.algebra), std::move(q.projection)};
}

/// The split extensions arising from every zoo action's smash product.
template <class K>
std::vector<SplitExtension<K>> zooSplitExtensions(const Zoo<K>& zoo, Idx assocCap = 300) {
    std::vector<SplitExtension<K>> out;
    auto add = [&](const ModuleAction<K>& M) {
        auto smash = smashProduct(M, assocCap);
        out.push_back(SplitExtension<K>{smash.product, M.actor, smash.projBase, smash.inclBase});
    };
    for (const auto& M : zoo.actions) add(M);
    for (const auto& X : zoo.xmods) add(X.action());
    return out;
}

}  // namespace chopf
