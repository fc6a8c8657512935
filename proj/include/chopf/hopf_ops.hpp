#pragma once

#include "chopf/hopf.hpp"

namespace chopf {

/// xi_A(a (x) b) = phi(|a2|,|b|) a1 b S(a2), as a sparse column evaluator.
template <class K>
SparseVec<K> adjointCol(const ColorHopfAlgebra<K>& A, Idx a, Idx b) {
    const Idx n = A.dim();
    SparseVec<K> out;
    for (const auto& [t, c] : A.comul.col(a)) {
        auto [a1, a2] = unpairIndex(t, n);
        K tw = c * A.phiDeg(A.degOf(a2), A.degOf(b));
        if (isZero(tw)) continue;
        for (const auto& [s, cs] : A.antipode.col(a2)) {
            K c2 = tw * cs;
            for (const auto& [x, cx] : A.mulCol(a1, b))
                for (const auto& [y, cy] : A.mulCol(x, s)) {
                    K v = c2 * cx * cy;
                    if (!isZero(v)) out.emplace_back(y, std::move(v));
                }
        }
    }
    svNormalize(out);
    return out;
}

template <class K>
SparseVec<K> adjointVV(const ColorHopfAlgebra<K>& A, const SparseVec<K>& a, const SparseVec<K>& b) {
    SparseVec<K> out;
    for (const auto& [i, ci] : a)
        for (const auto& [j, cj] : b) {
            K c = ci * cj;
            if (isZero(c)) continue;
            for (const auto& [x, cx] : adjointCol(A, i, j)) {
                K v = c * cx;
                if (!isZero(v)) out.emplace_back(x, std::move(v));
            }
        }
    svNormalize(out);
    return out;
}

/// xi_A as a graded map A (x) A -> A.
template <class K>
GradedMap<K> adjointMap(const ColorHopfAlgebra<K>& A) {
    const Idx n = A.dim();
    std::vector<Eigen::Triplet<K>> trip;
    for (Idx a = 0; a < n; ++a)
        for (Idx b = 0; b < n; ++b)
            for (const auto& [x, c] : adjointCol(A, a, b))
                trip.emplace_back(static_cast<int>(x), static_cast<int>(pairIndex(a, b, n)), c);
    return GradedMap<K>(tensor(A.space, A.space), A.space, spFromTriplets<K>(n, n * n, trip));
}

/// Hker(f) = { a : a1 (x) f(a2) = a (x) 1_B }, the kernel in the category.
template <class K>
Subspace<K> hopfKernel(const ColorHopfAlgebra<K>& A, const ColorHopfAlgebra<K>& B,
                       const GradedMap<K>& f) {
    if (!f.src.sameAs(A.space) || !f.dst.sameAs(B.space))
        throw ChopfError("hopf kernel: map shape mismatch");
    const Idx na = A.dim(), nb = B.dim();
    std::vector<std::tuple<Idx, Idx, K>> trip;
    auto oneB = B.one();
    for (Idx i = 0; i < na; ++i) {
        for (const auto& [t, c] : A.comul.col(i)) {
            auto [r1, r2] = unpairIndex(t, na);
            for (const auto& [s, cf] : f.col(r2)) {
                K v = c * cf;
                if (!isZero(v)) trip.emplace_back(pairIndex(r1, s, nb), i, std::move(v));
            }
        }
        for (const auto& [s, cu] : oneB) trip.emplace_back(pairIndex(i, s, nb), i, -cu);
    }
    return Subspace<K>::spanGraded(A.space, nullspaceFromTriplets<K>(na, std::move(trip)));
}

/// Joint Hopf kernel of several morphisms out of A (one linear system).
template <class K>
Subspace<K> hopfKernelJoint(const ColorHopfAlgebra<K>& A,
                            const std::vector<const ColorHopfAlgebra<K>*>& targets,
                            const std::vector<const GradedMap<K>*>& maps) {
    const Idx na = A.dim();
    std::vector<std::tuple<Idx, Idx, K>> trip;
    Idx rowBase = 0;
    for (size_t m = 0; m < maps.size(); ++m) {
        const auto& B = *targets[m];
        const auto& f = *maps[m];
        const Idx nb = B.dim();
        auto oneB = B.one();
        for (Idx i = 0; i < na; ++i) {
            for (const auto& [t, c] : A.comul.col(i)) {
                auto [r1, r2] = unpairIndex(t, na);
                for (const auto& [s, cf] : f.col(r2)) {
                    K v = c * cf;
                    if (!isZero(v)) trip.emplace_back(rowBase + pairIndex(r1, s, nb), i, std::move(v));
                }
            }
            for (const auto& [s, cu] : oneB) trip.emplace_back(rowBase + pairIndex(i, s, nb), i, -cu);
        }
        rowBase += na * nb;
    }
    return Subspace<K>::spanGraded(A.space, nullspaceFromTriplets<K>(na, std::move(trip)));
}

/// Coordinates of w on the pivot-pair basis of U (x) V inside
/// ambient (x) ambient. Since echelon rows are fully reduced, subtracting
/// the tensor of two rows clears exactly one pivot-pair entry and introduces
/// none, so a single worklist pass suffices. Returns nullopt when a residual
/// survives (w outside U (x) V).
template <class K>
std::optional<SparseVec<K>> tensorSquareCoordinates(const Subspace<K>& U, const Subspace<K>& V,
                                                    SparseVec<K> rest) {
    const Idx n = U.ambient().dim();
    std::map<Idx, Idx> posU, posV;
    std::vector<const SparseVec<K>*> rowsU, rowsV;
    for (const auto& [p, r] : U.rows()) {
        posU[p] = static_cast<Idx>(rowsU.size());
        rowsU.push_back(&r);
    }
    for (const auto& [p, r] : V.rows()) {
        posV[p] = static_cast<Idx>(rowsV.size());
        rowsV.push_back(&r);
    }
    const Idx dv = static_cast<Idx>(rowsV.size());
    SparseVec<K> out;
    size_t idx = 0;
    while (idx < rest.size()) {
        auto [a, b] = unpairIndex(rest[idx].first, n);
        auto ia = posU.find(a);
        auto ib = posV.find(b);
        if (ia == posU.end() || ib == posV.end()) {
            ++idx;
            continue;
        }
        K c = rest[idx].second;
        out.emplace_back(pairIndex(ia->second, ib->second, dv), c);
        K cc = -c;
        svAxpy(rest, cc,
               svTensor(*rowsU[static_cast<size_t>(ia->second)],
                        *rowsV[static_cast<size_t>(ib->second)], n));
        // entries before idx are non-pivot-pair and stay so; the cleared
        // entry shifts the tail left, so rescan from the same position
    }
    if (!rest.empty()) return std::nullopt;
    svNormalize(out);
    return out;
}

template <class K>
bool tensorSquareContains(const Subspace<K>& U, const Subspace<K>& V, const SparseVec<K>& w) {
    return tensorSquareCoordinates(U, V, w).has_value();
}

/// Color Hopf subalgebra invariants: contains 1, closed under mul, comul
/// and antipode.
template <class K>
ValidationReport isHopfSubalgebra(const ColorHopfAlgebra<K>& A, const Subspace<K>& X) {
    ValidationReport rep;
    rep.add("subalgebra.contains_unit", X.contains(A.one()));
    bool mulOk = true, comulOk = true, antOk = true;
    std::string wm, wc, wa;
    auto rows = X.basisRows();
    for (size_t i = 0; i < rows.size() && (mulOk || comulOk || antOk); ++i) {
        for (size_t j = 0; j < rows.size() && mulOk; ++j)
            if (!X.contains(A.mulVV(rows[i], rows[j]))) {
                mulOk = false;
                wm = "product of basis rows " + std::to_string(i) + "," + std::to_string(j);
            }
        if (comulOk && !tensorSquareContains(X, X, A.comul.apply(rows[i]))) {
            comulOk = false;
            wc = "comultiplication of basis row " + std::to_string(i);
        }
        if (antOk && !X.contains(A.antipode.apply(rows[i]))) {
            antOk = false;
            wa = "antipode of basis row " + std::to_string(i);
        }
    }
    rep.add("subalgebra.mul_closed", mulOk, wm);
    rep.add("subalgebra.comul_closed", comulOk, wc);
    rep.add("subalgebra.antipode_closed", antOk, wa);
    return rep;
}

enum class ClosureMode { Algebra, Hopf };

/// Smallest subspace containing 1 and the generators, closed under the
/// requested operations. Hopf mode also saturates under the antipode and
/// the tensor legs of the comultiplication; terminates because the
/// dimension strictly increases toward dim A.
template <class K>
Subspace<K> subalgebraClosure(const ColorHopfAlgebra<K>& A, std::vector<SparseVec<K>> gens,
                              ClosureMode mode) {
    Subspace<K> X(A.space);
    X.insertGraded(A.one());
    for (auto& g : gens) X.insertGraded(g);
    for (;;) {
        Idx before = X.dim();
        auto rows = X.basisRows();
        for (size_t i = 0; i < rows.size(); ++i)
            for (size_t j = 0; j < rows.size(); ++j) X.insertGraded(A.mulVV(rows[i], rows[j]));
        if (mode == ClosureMode::Hopf) {
            for (const auto& r : rows) {
                X.insertGraded(A.antipode.apply(r));
                // tensor legs of Delta(r), extracted by basis decomposition
                auto d = A.comul.apply(r);
                std::map<Idx, SparseVec<K>> left, right;
                for (const auto& [t, c] : d) {
                    auto [r1, r2] = unpairIndex(t, A.dim());
                    left[r2].emplace_back(r1, c);
                    right[r1].emplace_back(r2, c);
                }
                for (auto& [s, v] : left) X.insertGraded(v);
                for (auto& [s, v] : right) X.insertGraded(v);
            }
        }
        if (X.dim() == before) break;
    }
    return X;
}

/// A Hopf subalgebra materialized as a standalone algebra, with the
/// inclusion back into the ambient one.
template <class K>
struct SubAlgebra {
    ColorHopfAlgebra<K> algebra;
    GradedMap<K> incl;
    Subspace<K> carrier;
};

template <class K>
SubAlgebra<K> materializeSubalgebra(const ColorHopfAlgebra<K>& A, const Subspace<K>& X,
                                    const std::string& name) {
    auto sub = isHopfSubalgebra(A, X);
    sub.require(name + ": carrier is not a Hopf subalgebra");

    auto rows = X.basisRows();
    const Idx d = static_cast<Idx>(rows.size());
    std::vector<int> deg;
    std::vector<std::string> labels;
    std::vector<Idx> pivots;
    for (const auto& [p, r] : X.rows()) {
        deg.push_back(A.space.degree(p));
        labels.push_back(r.size() == 1 && r[0].second == K(1) ? A.label(p) : "<" + A.label(p) + ">");
        pivots.push_back(p);
    }
    GradedSpace sp(A.space.group, deg, labels);

    // Coefficients in the echelon basis are read off at pivot coordinates.
    auto coords = [&](const SparseVec<K>& v) {
        SparseVec<K> out;
        SparseVec<K> rest = v;
        for (Idx r = 0; r < d; ++r) {
            const K* c = svCoeff(rest, pivots[static_cast<size_t>(r)]);
            if (!c) continue;
            out.emplace_back(r, *c);
            K cc = -*c;
            svAxpy(rest, cc, rows[static_cast<size_t>(r)]);
        }
        if (!rest.empty())
            throw ChopfError(name + ": vector leaves the carrier; closure invariant broken");
        return out;
    };
    auto coords2 = [&](const SparseVec<K>& w) {
        auto res = tensorSquareCoordinates(X, X, w);
        if (!res.has_value())
            throw ChopfError(name + ": comultiplication leaves the carrier tensor square");
        return *res;
    };

    std::vector<Eigen::Triplet<K>> tm, tu, tc, te, ts;
    for (Idx i = 0; i < d; ++i) {
        for (Idx j = 0; j < d; ++j)
            for (const auto& [r, c] :
                 coords(A.mulVV(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)])))
                tm.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(i, j, d)), c);
        for (const auto& [t, c] : coords2(A.comul.apply(rows[static_cast<size_t>(i)])))
            tc.emplace_back(static_cast<int>(t), static_cast<int>(i), c);
        K e = A.counitOf(rows[static_cast<size_t>(i)]);
        if (!isZero(e)) te.emplace_back(0, static_cast<int>(i), e);
        for (const auto& [r, c] : coords(A.antipode.apply(rows[static_cast<size_t>(i)])))
            ts.emplace_back(static_cast<int>(r), static_cast<int>(i), c);
    }
    for (const auto& [r, c] : coords(A.one())) tu.emplace_back(static_cast<int>(r), 0, c);

    GradedSpace XX = tensor(sp, sp), k = unitSpace(sp.group);
    ColorHopfAlgebra<K> S(
        name, sp, A.phi, GradedMap<K>(XX, sp, spFromTriplets<K>(d, d * d, tm)),
        GradedMap<K>(k, sp, spFromTriplets<K>(d, 1, tu)),
        GradedMap<K>(sp, XX, spFromTriplets<K>(d * d, d, tc)),
        GradedMap<K>(sp, k, spFromTriplets<K>(1, d, te)),
        GradedMap<K>(sp, sp, spFromTriplets<K>(d, d, ts)));

    std::vector<Eigen::Triplet<K>> ti;
    for (Idx i = 0; i < d; ++i)
        for (const auto& [r, c] : rows[static_cast<size_t>(i)])
            ti.emplace_back(static_cast<int>(r), static_cast<int>(i), c);
    return SubAlgebra<K>{std::move(S), GradedMap<K>(sp, A.space, spFromTriplets<K>(A.dim(), d, ti)),
                         X};
}

/// Materializes a Hopf subalgebra of an ambient object given only callable
/// structure operations; the ambient structure maps are never formed. The
/// comultiplication callback returns flattened (left, right) pairs with
/// stride ambient.dim().
template <class K, class MulVV, class ComulCol, class AntipodeCol, class CounitT, class OneV>
SubAlgebra<K> materializeViaOps(const GradedSpace& ambientSpace, const Bicharacter<K>& phi,
                                const Subspace<K>& carrier, const std::string& name,
                                MulVV mulVV, ComulCol comulCol, AntipodeCol antipodeCol,
                                CounitT counitT, OneV oneV) {
    auto rows = carrier.basisRows();
    const Idx d = static_cast<Idx>(rows.size());
    const Idx N = ambientSpace.dim();
    std::vector<int> deg;
    std::vector<std::string> labels;
    for (const auto& [p, r] : carrier.rows()) {
        deg.push_back(ambientSpace.degree(p));
        labels.push_back(r.size() == 1 && r[0].second == K(1) ? ambientSpace.label(p)
                                                              : "<" + ambientSpace.label(p) + ">");
    }
    GradedSpace sp(ambientSpace.group, deg, labels);

    auto coords = [&](const SparseVec<K>& v) {
        auto c = carrier.coordinates(v);
        if (!c.has_value()) throw ChopfError(name + ": vector escapes the carrier");
        SparseVec<K> out;
        for (size_t i = 0; i < c->size(); ++i)
            if (!isZero((*c)[i])) out.emplace_back(static_cast<Idx>(i), (*c)[i]);
        return out;
    };
    auto coords2 = [&](const SparseVec<K>& w) {
        auto res = tensorSquareCoordinates(carrier, carrier, w);
        if (!res.has_value())
            throw ChopfError(name + ": comultiplication escapes the carrier tensor square");
        return *res;
    };

    std::vector<Eigen::Triplet<K>> tm, tu, tc, te, ts;
    for (Idx i = 0; i < d; ++i) {
        for (Idx j = 0; j < d; ++j)
            for (const auto& [r, c] :
                 coords(mulVV(rows[static_cast<size_t>(i)], rows[static_cast<size_t>(j)])))
                tm.emplace_back(static_cast<int>(r), static_cast<int>(pairIndex(i, j, d)), c);
        {
            SparseVec<K> dd;
            for (const auto& [t, c] : rows[static_cast<size_t>(i)])
                for (const auto& [p, cp] : comulCol(t)) {
                    K v = c * cp;
                    if (!isZero(v)) dd.emplace_back(p, std::move(v));
                }
            svNormalize(dd);
            for (const auto& [t, c] : coords2(dd))
                tc.emplace_back(static_cast<int>(t), static_cast<int>(i), c);
        }
        {
            K e(0);
            for (const auto& [t, c] : rows[static_cast<size_t>(i)]) e += c * counitT(t);
            if (!isZero(e)) te.emplace_back(0, static_cast<int>(i), e);
        }
        {
            SparseVec<K> sv;
            for (const auto& [t, c] : rows[static_cast<size_t>(i)])
                for (const auto& [r, cr] : antipodeCol(t)) {
                    K v = c * cr;
                    if (!isZero(v)) sv.emplace_back(r, std::move(v));
                }
            svNormalize(sv);
            for (const auto& [r, c] : coords(sv))
                ts.emplace_back(static_cast<int>(r), static_cast<int>(i), c);
        }
    }
    for (const auto& [r, c] : coords(oneV())) tu.emplace_back(static_cast<int>(r), 0, c);

    GradedSpace XX = tensor(sp, sp), k = unitSpace(sp.group);
    ColorHopfAlgebra<K> S(
        name, sp, phi, GradedMap<K>(XX, sp, spFromTriplets<K>(d, d * d, tm)),
        GradedMap<K>(k, sp, spFromTriplets<K>(d, 1, tu)),
        GradedMap<K>(sp, XX, spFromTriplets<K>(d * d, d, tc)),
        GradedMap<K>(sp, k, spFromTriplets<K>(1, d, te)),
        GradedMap<K>(sp, sp, spFromTriplets<K>(d, d, ts)));

    std::vector<Eigen::Triplet<K>> ti;
    for (Idx i = 0; i < d; ++i)
        for (const auto& [r, c] : rows[static_cast<size_t>(i)]) {
            if (r > static_cast<Idx>(std::numeric_limits<int>::max()))
                throw ChopfError(name + ": ambient index exceeds sparse-matrix range");
            ti.emplace_back(static_cast<int>(r), static_cast<int>(i), c);
        }
    SpMat<K> inclMat(N, d);
    inclMat.setFromTriplets(ti.begin(), ti.end());
    GradedMap<K> incl;
    incl.src = sp;
    incl.dst = ambientSpace;
    incl.mat = std::move(inclMat);
    return SubAlgebra<K>{std::move(S), std::move(incl), carrier};
}

/// Lazy structure of the braided tensor product A (x) B on flattened pair
/// indices; used where materializing the product's multiplication would be
/// quadratic in a large dimension.
template <class K>
struct TensorPairOps {
    const ColorHopfAlgebra<K>* A;
    const ColorHopfAlgebra<K>* B;

    Idx dim() const { return A->dim() * B->dim(); }

    SparseVec<K> mulTT(Idx s, Idx t) const {
        auto [i, j] = unpairIndex(s, B->dim());
        auto [i2, j2] = unpairIndex(t, B->dim());
        K tw = A->phiDeg(B->degOf(j), A->degOf(i2));
        SparseVec<K> out;
        if (isZero(tw)) return out;
        for (const auto& [x, cx] : A->mulCol(i, i2))
            for (const auto& [y, cy] : B->mulCol(j, j2)) {
                K v = tw * cx * cy;
                if (!isZero(v)) out.emplace_back(pairIndex(x, y, B->dim()), std::move(v));
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
    SparseVec<K> comulCol(Idx t) const {
        auto [i, j] = unpairIndex(t, B->dim());
        SparseVec<K> out;
        for (const auto& [ta, ca] : A->comul.col(i)) {
            auto [a1, a2] = unpairIndex(ta, A->dim());
            for (const auto& [tb, cb] : B->comul.col(j)) {
                auto [b1, b2] = unpairIndex(tb, B->dim());
                K v = ca * cb * A->phiDeg(A->degOf(a2), B->degOf(b1));
                if (!isZero(v))
                    out.emplace_back(
                        pairIndex(pairIndex(a1, b1, B->dim()), pairIndex(a2, b2, B->dim()), dim()),
                        std::move(v));
            }
        }
        svNormalize(out);
        return out;
    }
    SparseVec<K> antipodeCol(Idx t) const {
        auto [i, j] = unpairIndex(t, B->dim());
        SparseVec<K> out;
        for (const auto& [x, cx] : A->antipode.col(i))
            for (const auto& [y, cy] : B->antipode.col(j)) {
                K v = cx * cy;
                if (!isZero(v)) out.emplace_back(pairIndex(x, y, B->dim()), std::move(v));
            }
        svNormalize(out);
        return out;
    }
    K counitT(Idx t) const {
        auto [i, j] = unpairIndex(t, B->dim());
        return A->counitOf(svUnit<K>(i)) * B->counitOf(svUnit<K>(j));
    }
    SparseVec<K> one() const {
        SparseVec<K> out;
        for (const auto& [i, ci] : A->one())
            for (const auto& [j, cj] : B->one()) out.emplace_back(pairIndex(i, j, B->dim()), ci * cj);
        svNormalize(out);
        return out;
    }
};

template <class K>
struct QuotientResult {
    ColorHopfAlgebra<K> algebra;
    GradedMap<K> projection;  // q: A -> A/AB+
    GradedMap<K> section;     // coset representatives, q o section = id
    Subspace<K> ideal;        // A B+
    ValidationReport checks;
};

/// A / A B+ for a normal Hopf subalgebra B. The ideal, coideal and
/// antipode stability of A B+ are re-verified rather than trusted.
template <class K>
QuotientResult<K> quotientByNormal(const ColorHopfAlgebra<K>& A, const Subspace<K>& B) {
    isHopfSubalgebra(A, B).require("quotient: B is not a Hopf subalgebra");
    // normality: xi(a (x) b) stays in B
    for (Idx a = 0; a < A.dim(); ++a)
        for (const auto& [p, brow] : B.rows())
            if (!B.contains(adjointVV(A, svUnit<K>(a), brow)))
                throw ChopfError("quotient: B is not normal; witness (" + A.label(a) + ", " +
                                 formatVec(A.space, brow) + ")");

    ValidationReport checks;
    // B+ = B meet ker(eps)
    Subspace<K> Bplus = B.intersect(linearKernel(A.counit));
    // I = A . B+
    Subspace<K> I(A.space);
    for (Idx a = 0; a < A.dim(); ++a)
        for (const auto& [p, brow] : Bplus.rows()) I.insertGraded(A.mulVV(svUnit<K>(a), brow));

    bool right = true, coideal = true, sclosed = true;
    for (const auto& [p, irow] : I.rows()) {
        for (Idx a = 0; a < A.dim() && right; ++a)
            if (!I.contains(A.mulVV(irow, svUnit<K>(a)))) right = false;
        if (sclosed && !I.contains(A.antipode.apply(irow))) sclosed = false;
    }
    // Delta(I) in I (x) A + A (x) I
    {
        EchelonSet<K> coidealSpace;
        for (const auto& [p, irow] : I.rows())
            for (Idx j = 0; j < A.dim(); ++j) {
                coidealSpace.insert(svTensor(irow, svUnit<K>(j), A.dim()));
                coidealSpace.insert(svTensor(svUnit<K>(j), irow, A.dim()));
            }
        for (const auto& [p, irow] : I.rows())
            if (!coidealSpace.contains(A.comul.apply(irow))) { coideal = false; break; }
    }
    checks.add("quotient.two_sided_ideal", right);
    checks.add("quotient.coideal", coideal);
    checks.add("quotient.antipode_stable", sclosed);
    checks.require("quotient: A B+ is not a Hopf ideal");

    // canonical complement: non-pivot coordinates of I
    auto comp = I.complementCoords();
    const Idx d = static_cast<Idx>(comp.size());
    std::vector<int> deg;
    std::vector<std::string> labels;
    std::map<Idx, Idx> pos;
    for (Idx r = 0; r < d; ++r) {
        deg.push_back(A.space.degree(comp[static_cast<size_t>(r)]));
        labels.push_back("[" + A.label(comp[static_cast<size_t>(r)]) + "]");
        pos[comp[static_cast<size_t>(r)]] = r;
    }
    GradedSpace sp(A.space.group, deg, labels);

    auto project = [&](const SparseVec<K>& v) {
        SparseVec<K> out;
        for (const auto& [i, c] : I.reduce(v)) out.emplace_back(pos.at(i), c);
        return out;
    };

    std::vector<Eigen::Triplet<K>> tm, tu, tc, te, ts, tq, tsec;
    for (Idx r = 0; r < d; ++r) {
        Idx cr = comp[static_cast<size_t>(r)];
        tsec.emplace_back(static_cast<int>(cr), static_cast<int>(r), K(1));
        for (Idx s = 0; s < d; ++s)
            for (const auto& [x, c] : project(A.mulCol(cr, comp[static_cast<size_t>(s)])))
                tm.emplace_back(static_cast<int>(x), static_cast<int>(pairIndex(r, s, d)), c);
        {
            SparseVec<K> dd;
            for (const auto& [t, c] : A.comul.col(cr)) {
                auto [x, y] = unpairIndex(t, A.dim());
                for (const auto& [px, cx] : project(svUnit<K>(x)))
                    for (const auto& [py, cy] : project(svUnit<K>(y)))
                        dd.emplace_back(pairIndex(px, py, d), c * cx * cy);
            }
            svNormalize(dd);
            for (const auto& [t, c] : dd) tc.emplace_back(static_cast<int>(t), static_cast<int>(r), c);
        }
        K e = A.counitOf(svUnit<K>(cr));
        if (!isZero(e)) te.emplace_back(0, static_cast<int>(r), e);
        for (const auto& [x, c] : project(A.antipode.col(cr)))
            ts.emplace_back(static_cast<int>(x), static_cast<int>(r), c);
    }
    for (const auto& [x, c] : project(A.one())) tu.emplace_back(static_cast<int>(x), 0, c);
    for (Idx i = 0; i < A.dim(); ++i)
        for (const auto& [x, c] : project(svUnit<K>(i)))
            tq.emplace_back(static_cast<int>(x), static_cast<int>(i), c);

    GradedSpace QQ = tensor(sp, sp), k = unitSpace(sp.group);
    ColorHopfAlgebra<K> Q(
        A.name + "/I", sp, A.phi, GradedMap<K>(QQ, sp, spFromTriplets<K>(d, d * d, tm)),
        GradedMap<K>(k, sp, spFromTriplets<K>(d, 1, tu)),
        GradedMap<K>(sp, QQ, spFromTriplets<K>(d * d, d, tc)),
        GradedMap<K>(sp, k, spFromTriplets<K>(1, d, te)),
        GradedMap<K>(sp, sp, spFromTriplets<K>(d, d, ts)));

    GradedMap<K> q(A.space, sp, spFromTriplets<K>(d, A.dim(), tq));
    GradedMap<K> sec(sp, A.space, spFromTriplets<K>(A.dim(), d, tsec));
    return QuotientResult<K>{std::move(Q), std::move(q), std::move(sec), std::move(I),
                             std::move(checks)};
}

template <class K>
struct PullbackResult {
    Subspace<K> carrier;           // the pullback subspace of A (x) B
    SubAlgebra<K> object;          // materialized pullback
    GradedMap<K> projLeft;         // onto A
    GradedMap<K> projRight;        // onto B
};

/// A x_C B = { a (x) b : a1 (x) f(a2) (x) b = a (x) g(b1) (x) b2 }. The
/// ambient braided tensor product is accessed lazily; only the pullback
/// itself is materialized.
template <class K>
PullbackResult<K> pullback(const ColorHopfAlgebra<K>& A, const ColorHopfAlgebra<K>& B,
                           const ColorHopfAlgebra<K>& C, const GradedMap<K>& f,
                           const GradedMap<K>& g) {
    if (!f.src.sameAs(A.space) || !g.src.sameAs(B.space) || !f.dst.sameAs(C.space) ||
        !g.dst.sameAs(C.space))
        throw ChopfError("pullback: morphisms must share the codomain C");
    const Idx na = A.dim(), nb = B.dim(), nc = C.dim();
    // rows live in A (x) C (x) B
    std::vector<std::tuple<Idx, Idx, K>> trip;
    for (Idx i = 0; i < na; ++i)
        for (Idx j = 0; j < nb; ++j) {
            Idx colIdx = pairIndex(i, j, nb);
            for (const auto& [t, c] : A.comul.col(i)) {
                auto [a1, a2] = unpairIndex(t, na);
                for (const auto& [s, cf] : f.col(a2)) {
                    K v = c * cf;
                    if (!isZero(v))
                        trip.emplace_back((a1 * nc + s) * nb + j, colIdx, std::move(v));
                }
            }
            for (const auto& [t, c] : B.comul.col(j)) {
                auto [b1, b2] = unpairIndex(t, nb);
                for (const auto& [s, cg] : g.col(b1)) {
                    K v = c * cg;
                    if (!isZero(v))
                        trip.emplace_back((i * nc + s) * nb + b2, colIdx, -v);
                }
            }
        }
    GradedSpace ambientSpace = tensor(A.space, B.space);
    Subspace<K> carrier = Subspace<K>::spanGraded(
        ambientSpace, nullspaceFromTriplets<K>(na * nb, std::move(trip)));
    TensorPairOps<K> ops{&A, &B};
    auto object = materializeViaOps(
        ambientSpace, A.phi, carrier, A.name + " x_C " + B.name,
        [&](const SparseVec<K>& u, const SparseVec<K>& v) { return ops.mulVV(u, v); },
        [&](Idx t) { return ops.comulCol(t); }, [&](Idx t) { return ops.antipodeCol(t); },
        [&](Idx t) { return ops.counitT(t); }, [&]() { return ops.one(); });
    // projections: (id (x) eps) and (eps (x) id) restricted to the object
    std::vector<Eigen::Triplet<K>> tl, tr;
    Idx col = 0;
    for (const auto& [piv, row] : carrier.rows()) {
        SparseVec<K> left, right;
        for (const auto& [t, c] : row) {
            auto [i, j] = unpairIndex(t, nb);
            K eb = B.counitOf(svUnit<K>(j));
            if (!isZero(eb)) left.emplace_back(i, c * eb);
            K ea = A.counitOf(svUnit<K>(i));
            if (!isZero(ea)) right.emplace_back(j, c * ea);
        }
        svNormalize(left);
        svNormalize(right);
        for (const auto& [r, c] : left) tl.emplace_back(static_cast<int>(r), static_cast<int>(col), c);
        for (const auto& [r, c] : right) tr.emplace_back(static_cast<int>(r), static_cast<int>(col), c);
        ++col;
    }
    GradedMap<K> pA(object.algebra.space, A.space, spFromTriplets<K>(na, object.algebra.dim(), tl));
    GradedMap<K> pB(object.algebra.space, B.space, spFromTriplets<K>(nb, object.algebra.dim(), tr));
    return PullbackResult<K>{std::move(carrier), std::move(object), std::move(pA), std::move(pB)};
}

/// Equalizer Eq(f, g) = { a : a1 (x) f(a2) = a1 (x) g(a2) }, the one-legged
/// special case of the pullback condition.
template <class K>
Subspace<K> equalizer(const ColorHopfAlgebra<K>& A, const ColorHopfAlgebra<K>& B,
                      const GradedMap<K>& f, const GradedMap<K>& g) {
    if (!f.src.sameAs(A.space) || !g.src.sameAs(A.space) || !f.dst.sameAs(B.space) ||
        !g.dst.sameAs(B.space))
        throw ChopfError("equalizer: maps must be parallel");
    const Idx na = A.dim(), nb = B.dim();
    std::vector<std::tuple<Idx, Idx, K>> trip;
    for (Idx i = 0; i < na; ++i)
        for (const auto& [t, c] : A.comul.col(i)) {
            auto [a1, a2] = unpairIndex(t, na);
            for (const auto& [s, cf] : f.col(a2)) {
                K v = c * cf;
                if (!isZero(v)) trip.emplace_back(pairIndex(a1, s, nb), i, std::move(v));
            }
            for (const auto& [s, cg] : g.col(a2)) {
                K v = c * cg;
                if (!isZero(v)) trip.emplace_back(pairIndex(a1, s, nb), i, -v);
            }
        }
    return Subspace<K>::spanGraded(A.space, nullspaceFromTriplets<K>(na, std::move(trip)));
}

/// Canonical factorization of a cone (h, h2) through the pullback:
/// (h (x) h2) o Delta_H, landing in the carrier; any coalgebra morphism into
/// A (x) B with these components must coincide with it.
template <class K>
GradedMap<K> pullbackFactorize(const PullbackResult<K>& P, const ColorHopfAlgebra<K>& H,
                               const GradedMap<K>& h, const GradedMap<K>& h2) {
    const Idx nb = h2.dst.dim();
    std::vector<Eigen::Triplet<K>> trip;
    for (Idx i = 0; i < H.dim(); ++i) {
        SparseVec<K> v;
        for (const auto& [t, c] : H.comul.col(i)) {
            auto [r1, r2] = unpairIndex(t, H.dim());
            for (const auto& [x, cx] : h.col(r1))
                for (const auto& [y, cy] : h2.col(r2))
                    v.emplace_back(pairIndex(x, y, nb), c * cx * cy);
        }
        svNormalize(v);
        auto coords = P.object.carrier.coordinates(v);
        if (!coords.has_value())
            throw ChopfError("pullback: cone does not factor through the carrier at " + H.label(i));
        for (size_t r = 0; r < coords->size(); ++r)
            if (!isZero((*coords)[r]))
                trip.emplace_back(static_cast<int>(r), static_cast<int>(i), (*coords)[r]);
    }
    return GradedMap<K>(H.space, P.object.algebra.space,
                        spFromTriplets<K>(P.object.algebra.dim(), H.dim(), trip));
}

}  // namespace chopf
