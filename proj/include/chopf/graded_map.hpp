#pragma once

#include <Eigen/Sparse>

#include "chopf/bicharacter.hpp"
#include "chopf/graded_space.hpp"
#include "chopf/sparse.hpp"

namespace chopf {

template <class K>
using SpMat = Eigen::SparseMatrix<K, Eigen::ColMajor>;

/// Degree-preserving linear map between G-graded spaces.
/// Matrix is target.dim x source.dim; entries off the diagonal degree
/// blocks are rejected at construction.
template <class K>
struct GradedMap {
    GradedSpace src, dst;
    SpMat<K> mat;

    GradedMap() = default;

    GradedMap(GradedSpace s, GradedSpace d, SpMat<K> m, bool checkDegrees = true)
        : src(std::move(s)), dst(std::move(d)), mat(std::move(m)) {
        if (mat.rows() != dst.dim() || mat.cols() != src.dim())
            throw ChopfError("graded map: matrix shape does not match spaces");
        if (src.group != dst.group) throw ChopfError("graded map: grading groups differ");
        mat.makeCompressed();
        if (checkDegrees) {
            auto rep = degreeReport();
            rep.require("graded map");
        }
    }

    ValidationReport degreeReport() const {
        ValidationReport rep;
        bool ok = true;
        std::string w;
        for (int c = 0; c < mat.outerSize(); ++c)
            for (typename SpMat<K>::InnerIterator it(mat, c); it; ++it)
                if (!isZero(it.value()) && dst.degree(it.row()) != src.degree(it.col())) {
                    ok = false;
                    if (w.empty())
                        w = "entry (" + dst.label(it.row()) + ", " + src.label(it.col()) +
                            ") crosses degree blocks";
                }
        rep.add("degree_blocks", ok, w);
        return rep;
    }

    SparseVec<K> col(Idx j) const {
        SparseVec<K> out;
        for (typename SpMat<K>::InnerIterator it(mat, static_cast<int>(j)); it; ++it)
            if (!isZero(it.value())) out.emplace_back(it.row(), it.value());
        return out;
    }

    SparseVec<K> apply(const SparseVec<K>& v) const {
        SparseVec<K> out;
        for (const auto& [j, c] : v)
            for (typename SpMat<K>::InnerIterator it(mat, static_cast<int>(j)); it; ++it) {
                K val = c * it.value();
                if (!isZero(val)) out.emplace_back(it.row(), std::move(val));
            }
        svNormalize(out);
        return out;
    }
};

template <class K>
bool spEqual(const SpMat<K>& a, const SpMat<K>& b) {
    if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
    for (int c = 0; c < a.outerSize(); ++c) {
        typename SpMat<K>::InnerIterator ia(a, c), ib(b, c);
        while (ia || ib) {
            while (ia && isZero(ia.value())) ++ia;
            while (ib && isZero(ib.value())) ++ib;
            if (!ia && !ib) break;
            if (!ia || !ib) return false;
            if (ia.row() != ib.row() || !(ia.value() == ib.value())) return false;
            ++ia; ++ib;
        }
    }
    return true;
}

template <class K>
bool mapEqual(const GradedMap<K>& f, const GradedMap<K>& g) {
    return f.src.sameAs(g.src) && f.dst.sameAs(g.dst) && spEqual(f.mat, g.mat);
}

template <class K>
GradedMap<K> identityMap(const GradedSpace& X) {
    SpMat<K> m(X.dim(), X.dim());
    m.setIdentity();
    return GradedMap<K>(X, X, std::move(m), false);
}

/// g after f.
template <class K>
GradedMap<K> compose(const GradedMap<K>& g, const GradedMap<K>& f) {
    if (!g.src.sameAs(f.dst)) throw ChopfError("compose: middle spaces differ");
    SpMat<K> m = g.mat * f.mat;
    return GradedMap<K>(f.src, g.dst, std::move(m), false);
}

/// f (x) g acting componentwise on row-major pair bases.
template <class K>
GradedMap<K> tensorMap(const GradedMap<K>& f, const GradedMap<K>& g) {
    GradedSpace s = tensor(f.src, g.src), d = tensor(f.dst, g.dst);
    std::vector<Eigen::Triplet<K>> trip;
    trip.reserve(static_cast<size_t>(f.mat.nonZeros()) * static_cast<size_t>(g.mat.nonZeros()));
    for (int cf = 0; cf < f.mat.outerSize(); ++cf)
        for (typename SpMat<K>::InnerIterator itf(f.mat, cf); itf; ++itf)
            for (int cg = 0; cg < g.mat.outerSize(); ++cg)
                for (typename SpMat<K>::InnerIterator itg(g.mat, cg); itg; ++itg) {
                    K v = itf.value() * itg.value();
                    if (isZero(v)) continue;
                    trip.emplace_back(
                        static_cast<int>(pairIndex(itf.row(), itg.row(), g.dst.dim())),
                        static_cast<int>(pairIndex(cf, cg, g.src.dim())), std::move(v));
                }
    SpMat<K> m(d.dim(), s.dim());
    m.setFromTriplets(trip.begin(), trip.end());
    return GradedMap<K>(std::move(s), std::move(d), std::move(m), false);
}

/// Braiding c_{X,Y}: x (x) y -> phi(|x|,|y|) y (x) x.
template <class K>
GradedMap<K> braiding(const GradedSpace& X, const GradedSpace& Y, const Bicharacter<K>& phi) {
    if (X.group != Y.group || X.group != phi.group)
        throw ChopfError("braiding: grading groups differ");
    GradedSpace s = tensor(X, Y), d = tensor(Y, X);
    std::vector<Eigen::Triplet<K>> trip;
    trip.reserve(static_cast<size_t>(s.dim()));
    for (Idx i = 0; i < X.dim(); ++i)
        for (Idx j = 0; j < Y.dim(); ++j)
            trip.emplace_back(static_cast<int>(pairIndex(j, i, X.dim())),
                              static_cast<int>(pairIndex(i, j, Y.dim())),
                              phi(X.degree(i), Y.degree(j)));
    SpMat<K> m(d.dim(), s.dim());
    m.setFromTriplets(trip.begin(), trip.end());
    return GradedMap<K>(std::move(s), std::move(d), std::move(m), false);
}

/// Applies f to the left legs and g to the right legs of a vector living in
/// f.src (x) g.src, without materializing f (x) g.
template <class K>
SparseVec<K> applyTensor2(const GradedMap<K>& f, const GradedMap<K>& g, const SparseVec<K>& v) {
    SparseVec<K> out;
    for (const auto& [t, c] : v) {
        auto [i, j] = unpairIndex(t, g.src.dim());
        for (const auto& [r, cf] : f.col(i))
            for (const auto& [s, cg] : g.col(j)) {
                K val = c * cf * cg;
                if (!isZero(val)) out.emplace_back(pairIndex(r, s, g.dst.dim()), std::move(val));
            }
    }
    svNormalize(out);
    return out;
}

template <class K>
SpMat<K> spFromTriplets(Idx rows, Idx cols, std::vector<Eigen::Triplet<K>>& trip) {
    SpMat<K> m(rows, cols);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

template <class K>
std::string formatVec(const GradedSpace& X, const SparseVec<K>& v) {
    if (v.empty()) return "0";
    std::string out;
    for (size_t t = 0; t < v.size(); ++t) {
        if (t) out += " + ";
        out += scalarToString(v[t].second) + "*" + X.label(v[t].first);
    }
    return out;
}

}  // namespace chopf
