// Acceptance suite: one pass/fail line per criterion, nonzero exit when any
// criterion fails. Every check is exact; the wall-clock budgets are part of
// the criteria and enforced.

#include <chrono>
#include <iostream>
#include <sstream>

#include "chopf/io.hpp"
#include "chopf/zoo.hpp"

using namespace chopf;
using Clock = std::chrono::steady_clock;

namespace {

int failures = 0;

struct Criterion {
    std::string name;
    double budgetSeconds;
    bool ok = true;
    std::ostringstream notes;
    Clock::time_point start = Clock::now();

    Criterion(std::string n, double budget) : name(std::move(n)), budgetSeconds(budget) {}

    void expect(bool cond, const std::string& what) {
        if (!cond) {
            ok = false;
            notes << "    failed: " << what << "\n";
        }
    }
    void finish() {
        double secs = std::chrono::duration<double>(Clock::now() - start).count();
        bool inBudget = secs < budgetSeconds;
        bool pass = ok && inBudget;
        if (!pass) ++failures;
        std::cout << (pass ? "[PASS] " : "[FAIL] ") << name << "  (" << secs << "s, budget "
                  << budgetSeconds << "s)\n";
        if (!ok) std::cout << notes.str();
        if (!inBudget) std::cout << "    exceeded the runtime budget\n";
    }
};

template <class K>
int countMutationsRejected(const ColorHopfAlgebra<K>& A, int wanted, Criterion& c) {
    // single-entry structure-constant mutations, staying inside the degree
    // blocks so the verifier (not the constructor) must catch them
    int made = 0;
    auto tryMutation = [&](GradedMap<K> ColorHopfAlgebra<K>::*field, const char* what) {
        const GradedMap<K>& orig = A.*field;
        for (int col = 0; col < orig.mat.outerSize() && made < wanted; ++col)
            for (int row = 0; row < orig.mat.rows() && made < wanted; ++row) {
                if (orig.dst.degree(row) != orig.src.degree(col)) continue;
                auto mutated = A;
                SpMat<K> m = orig.mat;
                m.coeffRef(row, col) += K(1);
                m.prune([](const int&, const int&, const K& v) { return !isZero(v); });
                (mutated.*field).mat = std::move(m);
                auto rep = verifyHopf(mutated);
                c.expect(!rep.ok(), std::string("mutation of ") + what + " at (" +
                                        std::to_string(row) + "," + std::to_string(col) +
                                        ") was not rejected");
                bool witnessed = false;
                for (const auto& chk : rep.checks())
                    if (!chk.ok) witnessed = true;
                c.expect(witnessed, "mutation rejected without a failing check");
                ++made;
            }
    };
    tryMutation(&ColorHopfAlgebra<K>::mul, "mul");
    tryMutation(&ColorHopfAlgebra<K>::comul, "comul");
    tryMutation(&ColorHopfAlgebra<K>::antipode, "antipode");
    return made;
}

void criterion1() {
    Criterion c("criterion 1: axiom suite over the zoo + 20 mutation rejections", 5.0);
    auto zoo = standardZoo();
    for (const auto& A : zoo.algebras)
        c.expect(verifyHopf(A).ok(), "zoo algebra " + A.name + " failed verification");
    for (const auto& A : gf7Zoo().algebras)
        c.expect(verifyHopf(A).ok(), "gf7 algebra " + A.name + " failed verification");

    int made = 0;
    made += countMutationsRejected(buildSuperExterior<Rational>(1), 10, c);
    made += countMutationsRejected(buildGroupAlgebra<Rational>(cyclicGroup(4)), 10, c);
    c.expect(made == 20, "expected 20 mutations, made " + std::to_string(made));
    c.finish();
}

void criterion2() {
    Criterion c("criterion 2: commuting-lemma equivalence on subgroup-lattice pairs", 10.0);
    int pairs = 0;
    for (const auto& G : {symmetricGroup3(), dihedralGroup(4), quaternionGroup8()}) {
        auto A = buildGroupAlgebra<Rational>(G);
        auto subs = G.allSubgroups();
        for (const auto& H1 : subs)
            for (const auto& H2 : subs) {
                auto X = spanOfGroupElements(A, H1);
                auto Y = spanOfGroupElements(A, H2);
                // huqCommute itself hard-fails if the four conditions disagree
                auto res = huqCommute(A, X, Y);
                bool groupSide = true;
                for (int a : H1)
                    for (int b : H2)
                        if (G.mul(a, b) != G.mul(b, a)) groupSide = false;
                c.expect(res.commute == groupSide,
                         "huq disagrees with elementwise commutation in " + G.groupName());
                ++pairs;
            }
    }
    c.expect(pairs >= 40, "needed at least 40 pairs, got " + std::to_string(pairs));
    c.finish();
}

void criterion3() {
    Criterion c("criterion 3: commutator correctness against the group oracle", 30.0);
    for (const auto& G : zooGroups()) {
        auto A = buildGroupAlgebra<Rational>(G);
        auto normals = G.normalSubgroups();
        for (const auto& N : normals)
            for (const auto& M : normals) {
                auto X = spanOfGroupElements(A, N);
                auto Y = spanOfGroupElements(A, M);
                auto comm = commutatorSubalgebra(A, X, Y);
                c.expect(comm == spanOfGroupElements(A, G.commutatorSubgroup(N, M)),
                         "[kN,kM] != k[N,M] in " + G.groupName());
                c.expect(isHopfSubalgebra(A, comm).ok(), "closure failed in " + G.groupName());
                c.expect(isNormal(A, comm).normal, "normality failed in " + G.groupName());
                auto q = quotientByNormal(A, comm);
                auto res = huqCommute(q.algebra, imageSubspace(q.projection, X),
                                      imageSubspace(q.projection, Y));
                c.expect(res.commute, "images do not commute in the quotient");
            }
    }
    auto s3 = symmetricGroup3();
    c.expect(certifyHuqMinimality(s3, buildGroupAlgebra<Rational>(s3), s3.wholeGroup(),
                                  s3.wholeGroup())
                 .ok(),
             "minimality certification failed on kS3");
    auto d4 = dihedralGroup(4);
    c.expect(certifyHuqMinimality(d4, buildGroupAlgebra<Rational>(d4), d4.wholeGroup(),
                                  d4.wholeGroup())
                 .ok(),
             "minimality certification failed on kD4");
    c.finish();
}

template <class K>
void splitExtensionBattery(Criterion& c, const Zoo<K>& zoo) {
    for (const auto& ext : zooSplitExtensions(zoo)) {
        auto split = splitToAction(ext);
        c.expect(split.checks.ok(), "split-extension equivalence failed for " + ext.total.name);
    }
    // split_to_action after smash recovers the original action through
    // h -> h (x) 1
    for (const auto& M : zoo.actions) {
        auto smash = smashProduct(M);
        SplitExtension<K> ext{smash.product, M.actor, smash.projBase, smash.inclBase};
        auto split = splitToAction(ext);
        c.expect(split.checks.ok(), "recovered action invalid for " + smash.product.name);
        bool matches = true;
        for (Idx a = 0; a < M.actor.dim() && matches; ++a)
            for (Idx h = 0; h < M.carrier.dim() && matches; ++h) {
                auto embedded = split.kernel.carrier.coordinates(smash.inclTop.col(h));
                if (!embedded.has_value()) { matches = false; break; }
                SparseVec<K> hv;
                for (size_t r = 0; r < embedded->size(); ++r)
                    if (!isZero((*embedded)[r])) hv.emplace_back(static_cast<Idx>(r), (*embedded)[r]);
                auto lhs = split.kernel.incl.apply(split.action.actVV(svUnit<K>(a), hv));
                auto rhs = smash.inclTop.apply(M.actCol(a, h));
                matches = lhs == rhs;
            }
        c.expect(matches, "action not recovered up to the canonical identification for " +
                              smash.product.name);
    }
}

void criterion4() {
    Criterion c("criterion 4: split-extension equivalence over every zoo action", 10.0);
    auto zoo = standardZoo();
    splitExtensionBattery(c, zoo);
    auto gf7 = gf7Zoo();
    splitExtensionBattery(c, gf7);
    c.finish();
}

template <class K>
void xmodGraphRoundTrip(Criterion& c, const CrossedModule<K>& X) {
    auto rmg = xmodToRmg(X);
    c.expect(rmg.checks.ok(), "graph construction failed for " + X.top.name);
    c.expect(isMultiplicative(rmg.graph).multiplicative,
             "graph of " + X.top.name + " is not multiplicative");

    auto back = rmgToXmod(rmg.graph);
    c.expect(back.checks.ok(), "returned crossed module invalid for " + X.top.name);
    // F(G(X)) ~ X through the first tensor leg
    const Idx nh = X.top.dim(), na = X.base.dim();
    std::vector<Eigen::Triplet<K>> tp;
    for (Idx i = 0; i < nh; ++i)
        for (Idx j = 0; j < na; ++j) {
            K e = X.base.counitOf(svUnit<K>(j));
            if (!isZero(e))
                tp.emplace_back(static_cast<int>(i), static_cast<int>(pairIndex(i, j, na)), e);
        }
    GradedMap<K> projTop(rmg.graph.arrows.space, X.top.space,
                         spFromTriplets<K>(nh, nh * na, tp));
    auto alpha = compose(projTop, back.kernel.incl);
    c.expect(verifyMorphism(back.xmod.top, X.top, alpha).ok() &&
                 linearKernel(alpha).isZeroSpace() && back.xmod.top.dim() == X.top.dim(),
             "F(G(X)) iso failed for " + X.top.name);
    c.expect(mapEqual(back.xmod.d, compose(X.d, alpha)), "d not preserved for " + X.top.name);

    // G(F(graph)) ~ graph through k (x) a -> k i(a)
    SplitExtension<K> ext{rmg.graph.arrows, rmg.graph.objects, rmg.graph.src, rmg.graph.unit};
    auto split = splitToAction(ext);
    auto rmg2 = xmodToRmg(back.xmod);
    c.expect(rmg2.checks.ok(), "second graph construction failed");
    const auto& phiMap = split.fwd;
    c.expect(verifyMorphism(rmg2.graph.arrows, rmg.graph.arrows, phiMap).ok() &&
                 linearKernel(phiMap).isZeroSpace(),
             "G(F(graph)) iso not a bijective morphism for " + X.top.name);
    c.expect(mapEqual(compose(rmg.graph.src, phiMap), rmg2.graph.src) &&
                 mapEqual(compose(rmg.graph.tgt, phiMap), rmg2.graph.tgt) &&
                 mapEqual(compose(phiMap, rmg2.graph.unit), rmg.graph.unit),
             "G(F(graph)) iso does not intertwine the structure maps");
}

void criterion5() {
    Criterion c("criterion 5: crossed-module/graph round trips over the zoo", 10.0);
    for (const auto& X : standardZoo().xmods) xmodGraphRoundTrip(c, X);
    for (const auto& X : gf7Zoo().xmods) xmodGraphRoundTrip(c, X);
    c.finish();
}

template <class K>
void simplicialBattery(Criterion& c, const CrossedModule<K>& X, Idx coskCap) {
    auto built = xmodToSimplicial(X, 300, coskCap);
    c.expect(built.checks.ok(), "construction checks failed for " + X.top.name);
    const auto& S = built.object;
    c.expect(validateSimplicial(S).ok(), "simplicial identities failed for " + X.top.name);
    c.expect(S.levels[2].dim() == X.top.dim() * X.top.dim() * X.base.dim(),
             "dim H2 != (dim H)^2 dim A for " + X.top.name);

    auto M = mooreComplex(S);
    c.expect(M.checks.ok(), "moore complex checks failed for " + X.top.name);
    c.expect(M.terms[0].algebra.dim() == X.base.dim(), "M0 != A for " + X.top.name);
    c.expect(M.terms[1].algebra.dim() == X.top.dim(), "dim M1 != dim H for " + X.top.name);
    c.expect(M.terms[2].algebra.dim() == 1, "M2 != k for " + X.top.name);
    c.expect(M.terms[3].algebra.dim() == 1, "M3 != k for " + X.top.name);
    c.expect(M.length == 1 || (M.length == 0 && X.top.dim() == 1),
             "moore length != 1 for " + X.top.name);

    auto back = simplicialToXmod(S);
    c.expect(back.checks.ok(), "returned crossed module invalid for " + X.top.name);
    const Idx nh = X.top.dim(), na = X.base.dim();
    std::vector<Eigen::Triplet<K>> tp;
    for (Idx i = 0; i < nh; ++i)
        for (Idx j = 0; j < na; ++j) {
            K e = X.base.counitOf(svUnit<K>(j));
            if (!isZero(e))
                tp.emplace_back(static_cast<int>(i), static_cast<int>(pairIndex(i, j, na)), e);
        }
    GradedMap<K> projTop(S.levels[1].space, X.top.space, spFromTriplets<K>(nh, nh * na, tp));
    auto alpha = compose(projTop, back.kernel.incl);
    c.expect(verifyMorphism(back.xmod.top, X.top, alpha).ok() &&
                 linearKernel(alpha).isZeroSpace() && back.xmod.top.dim() == X.top.dim() &&
                 mapEqual(back.xmod.d, compose(X.d, alpha)),
             "simplicial round trip failed for " + X.top.name);
}

void criterion6() {
    Criterion c("criterion 6: simplicial/Moore data of every zoo crossed module", 60.0);
    for (const auto& X : standardZoo().xmods) {
        // the coskeleton cross-check runs whenever the matching space fits
        simplicialBattery(c, X, 70000);
    }
    for (const auto& X : gf7Zoo().xmods) simplicialBattery(c, X, 70000);
    c.finish();
}

void criterion7() {
    Criterion c("criterion 7: nilpotency classes and the Hall bound", 10.0);
    struct Expect { FiniteGroup g; int cls; };
    std::vector<Expect> table;
    table.push_back({cyclicGroup(2), 1});
    table.push_back({productGroup(cyclicGroup(2), cyclicGroup(2)), 1});
    table.push_back({cyclicGroup(6), 1});
    table.push_back({dihedralGroup(4), 2});
    table.push_back({quaternionGroup8(), 2});
    for (const auto& e : table) {
        auto series = nilpotency(buildGroupAlgebra<Rational>(e.g));
        c.expect(series.classOf.has_value() && *series.classOf == e.cls,
                 "class mismatch for " + e.g.groupName());
    }
    auto s3 = symmetricGroup3();
    auto ks3 = buildGroupAlgebra<Rational>(s3);
    auto series = nilpotency(ks3);
    c.expect(!series.classOf.has_value() && series.stabilized,
             "kS3 must stabilize without reaching k");
    c.expect(series.terms.back() == spanOfGroupElements(ks3, FiniteGroup::Sub{0, 4, 5}),
             "kS3 series must stabilize at kA3");

    auto d4 = dihedralGroup(4);
    auto kd4 = buildGroupAlgebra<Rational>(d4);
    auto q = quotientByNormal(kd4, spanOfGroupElements(kd4, FiniteGroup::Sub{0, 2}));
    auto hall = hallCheck(kd4, q.algebra, q.projection, Subspace<Rational>::full(kd4.space));
    c.expect(hall.hypothesesOk && hall.boundSatisfied && hall.c == 2 && hall.d == 1 &&
                 hall.bound == 2 && hall.classE == 2,
             "hall bound failed on the D4 extension");
    c.finish();
}

void criterion8() {
    Criterion c("criterion 8: zassenhaus quotients on the D4 and S3 configurations", 10.0);
    auto d4 = dihedralGroup(4);
    auto kd4 = buildGroupAlgebra<Rational>(d4);
    auto span = [&](std::vector<int> v) {
        std::sort(v.begin(), v.end());
        return spanOfGroupElements(kd4, v);
    };
    int e = d4.identity();
    int r = *d4.elementByName("r"), r2 = *d4.elementByName("r2"), r3 = *d4.elementByName("r3");
    int s = *d4.elementByName("s"), sr2 = *d4.elementByName("sr2");

    auto oracleOrders = [&](const FiniteGroup::Sub& U, const FiniteGroup::Sub& V,
                            const FiniteGroup::Sub& Kc, const FiniteGroup::Sub& L) {
        auto UiV = d4.intersectSub(U, V);
        return std::array<size_t, 3>{
            d4.productSet(Kc, UiV).size() / d4.productSet(Kc, d4.intersectSub(L, U)).size(),
            UiV.size() /
                d4.productSet(d4.intersectSub(Kc, V), d4.intersectSub(L, U)).size(),
            d4.productSet(L, UiV).size() / d4.productSet(L, d4.intersectSub(Kc, V)).size()};
    };

    {
        auto z = zassenhausVerify(kd4, span({e, r, r2, r3}), span({e, r2, s, sr2}),
                                  span({e, r2}), span({e, s}));
        c.expect(z.checks.ok(), "D4 configuration 1 failed");
        auto orders = oracleOrders({e, r, r2, r3}, {e, r2, s, sr2}, {e, r2}, {e, s});
        c.expect(static_cast<size_t>(z.left.algebra.dim()) == orders[0] &&
                     static_cast<size_t>(z.middle.algebra.dim()) == orders[1] &&
                     static_cast<size_t>(z.right.algebra.dim()) == orders[2],
                 "D4 configuration 1 dims disagree with the oracle");
    }
    {
        auto z = zassenhausVerify(kd4, Subspace<Rational>::full(kd4.space),
                                  span({e, r2, s, sr2}), span({e, r, r2, r3}), span({e}));
        c.expect(z.checks.ok(), "D4 configuration 2 failed");
        auto orders = oracleOrders(d4.wholeGroup(), {e, r2, s, sr2}, {e, r, r2, r3}, {e});
        c.expect(static_cast<size_t>(z.middle.algebra.dim()) == orders[1] &&
                     orders[1] == 2,
                 "D4 configuration 2 must have common quotient order 2");
    }
    {
        auto s3 = symmetricGroup3();
        auto ks3 = buildGroupAlgebra<Rational>(s3);
        auto a3 = spanOfGroupElements(ks3, FiniteGroup::Sub{0, 4, 5});
        auto unitSub = subalgebraClosure<Rational>(ks3, {}, ClosureMode::Hopf);
        auto z = zassenhausVerify(ks3, Subspace<Rational>::full(ks3.space), a3, a3, unitSub);
        c.expect(z.checks.ok(), "S3 configuration failed");
        c.expect(z.middle.algebra.dim() == 1, "S3 configuration must collapse");
    }
    c.finish();
}

std::string structuredRun() {
    std::ostringstream out;
    auto zoo = standardZoo();
    for (const auto& A : zoo.algebras) {
        out << io::dumpCanonical(io::algebraJson(A));
        out << io::dumpCanonical(io::reportJson(verifyHopf(A)));
    }
    for (const auto& A : gf7Zoo().algebras)
        out << io::dumpCanonical(io::reportJson(verifyHopf(A)));
    auto ks3 = buildGroupAlgebra<Rational>(symmetricGroup3());
    auto whole = Subspace<Rational>::full(ks3.space);
    auto comm = commutatorSubalgebra(ks3, whole, whole);
    for (const auto& [p, rrow] : comm.rows()) out << formatVec(ks3.space, rrow) << "\n";
    auto built = xmodToSimplicial(adjointCrossedModule(buildGroupAlgebra<Rational>(cyclicGroup(3))),
                                  300, 0);
    out << io::dumpCanonical(io::simplicialJson(built.object));
    auto M = mooreComplex(built.object);
    for (const auto& t : M.terms) out << t.algebra.dim() << "\n";
    return out.str();
}

void criterion9() {
    Criterion c("criterion 9: byte-identical structured reports across runs", 30.0);
    auto first = structuredRun();
    auto second = structuredRun();
    c.expect(first == second, "structured outputs differ between runs");
    c.expect(!first.empty(), "structured output is empty");
    c.finish();
}

}  // namespace

int main() {
    try {
        criterion1();
        criterion2();
        criterion3();
        criterion4();
        criterion5();
        criterion6();
        criterion7();
        criterion8();
        criterion9();
    } catch (const std::exception& e) {
        std::cout << "[FAIL] acceptance aborted: " << e.what() << "\n";
        return 1;
    }
    std::cout << (failures ? "ACCEPTANCE: FAIL (" + std::to_string(failures) + " criteria)\n"
                           : "ACCEPTANCE: PASS (9 criteria)\n");
    return failures ? 1 : 0;
}
