#pragma once

#include <limits>
#include <map>
#include <set>
#include <optional>
#include <tuple>

#include "chopf/graded_map.hpp"

namespace chopf {

/// Incremental fully-reduced row echelon form over Idx-indexed coordinates.
/// Pivot coefficients are 1 and pivot columns are cleared from every other
/// row, so the row set is canonical for the spanned subspace. A column
/// occupancy index keeps back-elimination proportional to the rows that
/// actually contain the new pivot; stale index entries are dropped lazily.
template <class K>
class EchelonSet {
public:
    /// Returns true when the row enlarged the span.
    bool insert(SparseVec<K> row) {
        svNormalize(row);
        while (!row.empty()) {
            auto it = rows_.find(row.front().first);
            if (it == rows_.end()) break;
            K c = -row.front().second;
            svAxpy(row, c, it->second);
        }
        if (row.empty()) return false;
        Idx lead = row.front().first;
        // Clear trailing entries sitting at existing pivots. Stored rows are
        // themselves fully reduced, so each elimination introduces only
        // non-pivot entries and the loop terminates.
        for (;;) {
            bool hit = false;
            for (size_t k = 1; k < row.size(); ++k) {
                auto it = rows_.find(row[k].first);
                if (it == rows_.end()) continue;
                K c = -row[k].second;
                svAxpy(row, c, it->second);
                hit = true;
                break;
            }
            if (!hit) break;
        }
        svScale(row, inverse(row.front().second));
        if (auto used = usedBy_.find(lead); used != usedBy_.end()) {
            for (Idx p : used->second) {
                auto rit = rows_.find(p);
                if (rit == rows_.end()) continue;
                const K* c = svCoeff(rit->second, lead);
                if (!c) continue;  // stale registration
                K cc = -*c;
                svAxpy(rit->second, cc, row);
                registerRow(p, rit->second);
            }
            usedBy_.erase(used);
        }
        registerRow(lead, row);
        rows_.emplace(lead, std::move(row));
        return true;
    }

    SparseVec<K> reduce(SparseVec<K> v) const {
        svNormalize(v);
        SparseVec<K> out;
        while (!v.empty()) {
            Idx lead = v.front().first;
            auto it = rows_.find(lead);
            if (it == rows_.end()) {
                out.push_back(v.front());
                v.erase(v.begin());
                continue;
            }
            K c = -v.front().second;
            svAxpy(v, c, it->second);
        }
        svNormalize(out);
        return out;
    }

    bool contains(const SparseVec<K>& v) const { return reduce(v).empty(); }

    Idx dim() const { return static_cast<Idx>(rows_.size()); }
    const std::map<Idx, SparseVec<K>>& rows() const { return rows_; }

private:
    void registerRow(Idx pivot, const SparseVec<K>& row) {
        for (const auto& [c, v] : row)
            if (c != pivot) usedBy_[c].insert(pivot);
    }

    std::map<Idx, SparseVec<K>> rows_;      // pivot index -> row
    std::map<Idx, std::set<Idx>> usedBy_;   // column -> pivots possibly using it
};

/// Graded subspace in canonical reduced row-echelon form. Every row is
/// homogeneous; rows of distinct degrees have disjoint supports, so plain
/// elimination preserves homogeneity.
template <class K>
class Subspace {
public:
    Subspace() = default;
    explicit Subspace(GradedSpace ambient) : ambient_(std::move(ambient)) {}

    static Subspace zero(const GradedSpace& X) { return Subspace(X); }

    static Subspace full(const GradedSpace& X) {
        Subspace s(X);
        for (Idx i = 0; i < X.dim(); ++i) s.ech_.insert(svUnit<K>(i));
        return s;
    }

    /// Span of the homogeneous components of the generators.
    static Subspace spanGraded(const GradedSpace& X, const std::vector<SparseVec<K>>& gens) {
        Subspace s(X);
        for (const auto& g : gens) s.insertGraded(g);
        return s;
    }

    /// Splits a generator into homogeneous parts and inserts each.
    bool insertGraded(const SparseVec<K>& gen) {
        std::map<int, SparseVec<K>> parts;
        for (const auto& [i, c] : gen) parts[ambient_.degree(i)].emplace_back(i, c);
        bool grew = false;
        for (auto& [d, part] : parts) grew |= ech_.insert(std::move(part));
        return grew;
    }

    const GradedSpace& ambient() const { return ambient_; }
    Idx dim() const { return ech_.dim(); }
    bool isZeroSpace() const { return dim() == 0; }

    bool contains(const SparseVec<K>& v) const { return ech_.contains(v); }
    SparseVec<K> reduce(SparseVec<K> v) const { return ech_.reduce(std::move(v)); }

    bool containsSub(const Subspace& other) const {
        for (const auto& [p, r] : other.rows())
            if (!contains(r)) return false;
        return true;
    }

    /// Coordinates of v in the echelon row basis; nullopt when v is outside.
    std::optional<std::vector<K>> coordinates(const SparseVec<K>& v) const {
        std::vector<K> coords;
        SparseVec<K> rest = v;
        svNormalize(rest);
        coords.reserve(rows().size());
        for (const auto& [p, r] : rows()) {
            const K* c = svCoeff(rest, p);
            coords.push_back(c ? *c : K(0));
            if (c) {
                K cc = -*c;
                svAxpy(rest, cc, r);
            }
        }
        if (!rest.empty()) return std::nullopt;
        return coords;
    }

    const std::map<Idx, SparseVec<K>>& rows() const { return ech_.rows(); }

    std::vector<SparseVec<K>> basisRows() const {
        std::vector<SparseVec<K>> out;
        out.reserve(rows().size());
        for (const auto& [p, r] : rows()) out.push_back(r);
        return out;
    }

    bool operator==(const Subspace& o) const {
        if (!ambient_.sameAs(o.ambient_) || dim() != o.dim()) return false;
        auto a = rows().begin();
        auto b = o.rows().begin();
        for (; a != rows().end(); ++a, ++b)
            if (a->first != b->first || a->second != b->second) return false;
        return true;
    }
    bool operator!=(const Subspace& o) const { return !(*this == o); }

    Subspace sum(const Subspace& other) const {
        requireSameAmbient(other);
        Subspace out = *this;
        for (const auto& [p, r] : other.rows()) out.ech_.insert(r);
        return out;
    }

    /// Zassenhaus block elimination on rows (u|u) and (v|0).
    Subspace intersect(const Subspace& other) const {
        requireSameAmbient(other);
        Idx n = ambient_.dim();
        EchelonSet<K> work;
        for (const auto& [p, r] : rows()) {
            SparseVec<K> row = r;
            for (const auto& [i, c] : r) row.emplace_back(i + n, c);
            work.insert(std::move(row));
        }
        for (const auto& [p, r] : other.rows()) work.insert(r);
        Subspace out(ambient_);
        for (const auto& [p, r] : work.rows()) {
            if (p < n) continue;  // left half nonzero
            SparseVec<K> v;
            for (const auto& [i, c] : r) v.emplace_back(i - n, c);
            out.insertGraded(v);
        }
        return out;
    }

    std::map<int, Idx> dimsPerDegree() const {
        std::map<int, Idx> out;
        for (const auto& [p, r] : rows()) out[ambient_.degree(p)]++;
        return out;
    }

    /// Non-pivot coordinates, ascending: the lexicographically smallest
    /// echelon complement of the subspace.
    std::vector<Idx> complementCoords() const {
        std::vector<Idx> out;
        auto it = rows().begin();
        for (Idx i = 0; i < ambient_.dim(); ++i) {
            if (it != rows().end() && it->first == i) {
                ++it;
                continue;
            }
            out.push_back(i);
        }
        return out;
    }

private:
    void requireSameAmbient(const Subspace& o) const {
        if (!ambient_.sameAs(o.ambient_)) throw ChopfError("subspace lattice: ambient spaces differ");
    }

    GradedSpace ambient_;
    EchelonSet<K> ech_;
};

/// Null space basis of the matrix whose entries are given as (row, col, val)
/// triplets; coordinates range over [0, numCols).
template <class K>
std::vector<SparseVec<K>> nullspaceFromTriplets(Idx numCols,
                                                std::vector<std::tuple<Idx, Idx, K>> trip) {
    std::sort(trip.begin(), trip.end(),
              [](const auto& a, const auto& b) { return std::get<0>(a) < std::get<0>(b); });
    EchelonSet<K> ech;
    for (size_t i = 0; i < trip.size();) {
        Idx r = std::get<0>(trip[i]);
        SparseVec<K> row;
        while (i < trip.size() && std::get<0>(trip[i]) == r) {
            row.emplace_back(std::get<1>(trip[i]), std::get<2>(trip[i]));
            ++i;
        }
        ech.insert(std::move(row));
    }
    // Pivot variables read off the fully reduced rows; one null vector per
    // free column.
    std::map<Idx, SparseVec<K>> byFree;
    for (const auto& [p, r] : ech.rows())
        for (const auto& [c, v] : r)
            if (c != p) byFree[c].emplace_back(p, -v);
    std::vector<SparseVec<K>> out;
    auto pivotIt = ech.rows().begin();
    for (Idx c = 0; c < numCols; ++c) {
        if (pivotIt != ech.rows().end() && pivotIt->first == c) {
            ++pivotIt;
            continue;
        }
        SparseVec<K> v = byFree.count(c) ? byFree[c] : SparseVec<K>{};
        v.emplace_back(c, K(1));
        svNormalize(v);
        out.push_back(std::move(v));
    }
    return out;
}

template <class K>
Subspace<K> linearKernel(const GradedMap<K>& f) {
    std::vector<std::tuple<Idx, Idx, K>> trip;
    trip.reserve(static_cast<size_t>(f.mat.nonZeros()));
    for (int c = 0; c < f.mat.outerSize(); ++c)
        for (typename SpMat<K>::InnerIterator it(f.mat, c); it; ++it)
            if (!isZero(it.value())) trip.emplace_back(it.row(), it.col(), it.value());
    return Subspace<K>::spanGraded(f.src, nullspaceFromTriplets<K>(f.src.dim(), std::move(trip)));
}

template <class K>
Subspace<K> linearImage(const GradedMap<K>& f) {
    std::vector<SparseVec<K>> cols;
    cols.reserve(static_cast<size_t>(f.src.dim()));
    for (Idx j = 0; j < f.src.dim(); ++j) cols.push_back(f.col(j));
    return Subspace<K>::spanGraded(f.dst, cols);
}

/// Exact solve f(x) = b; none when inconsistent. Canonical solution with
/// zeros at the free coordinates.
template <class K>
std::optional<SparseVec<K>> solveLinear(const GradedMap<K>& f, const SparseVec<K>& b) {
    Idx n = f.src.dim();
    std::vector<std::tuple<Idx, Idx, K>> trip;
    for (int c = 0; c < f.mat.outerSize(); ++c)
        for (typename SpMat<K>::InnerIterator it(f.mat, c); it; ++it)
            if (!isZero(it.value())) trip.emplace_back(it.row(), it.col(), it.value());
    for (const auto& [r, v] : b) trip.emplace_back(r, n, -v);
    auto nulls = nullspaceFromTriplets<K>(n + 1, std::move(trip));
    for (const auto& v : nulls) {
        const K* c = svCoeff(v, n);
        if (!c) continue;
        SparseVec<K> x;
        K inv = inverse(*c);
        for (const auto& [i, val] : v)
            if (i != n) x.emplace_back(i, val * inv);
        svNormalize(x);
        return x;
    }
    return std::nullopt;
}

}  // namespace chopf
