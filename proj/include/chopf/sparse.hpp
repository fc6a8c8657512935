#pragma once

#include <algorithm>
#include <utility>
#include <vector>

#include "chopf/common.hpp"
#include "chopf/scalar.hpp"

namespace chopf {

/// Sparse vector: (index, value) pairs, strictly increasing indices, no zeros.
template <class K>
using SparseVec = std::vector<std::pair<Idx, K>>;

template <class K>
SparseVec<K> svUnit(Idx i, K c = K(1)) {
    if (isZero(c)) return {};
    return {{i, std::move(c)}};
}

/// Sorts, merges duplicate indices and drops zeros.
template <class K>
void svNormalize(SparseVec<K>& v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) { return a.first < b.first; });
    size_t out = 0;
    for (size_t i = 0; i < v.size();) {
        Idx idx = v[i].first;
        K acc = std::move(v[i].second);
        size_t j = i + 1;
        while (j < v.size() && v[j].first == idx) acc += v[j++].second;
        if (!isZero(acc)) v[out++] = {idx, std::move(acc)};
        i = j;
    }
    v.resize(out);
}

/// y += c*x, both canonical; result canonical.
template <class K>
void svAxpy(SparseVec<K>& y, const K& c, const SparseVec<K>& x) {
    if (isZero(c) || x.empty()) return;
    SparseVec<K> out;
    out.reserve(y.size() + x.size());
    size_t i = 0, j = 0;
    while (i < y.size() || j < x.size()) {
        if (j == x.size() || (i < y.size() && y[i].first < x[j].first)) {
            out.push_back(std::move(y[i++]));
        } else if (i == y.size() || x[j].first < y[i].first) {
            K val = c * x[j].second;
            if (!isZero(val)) out.emplace_back(x[j].first, std::move(val));
            ++j;
        } else {
            K val = y[i].second + c * x[j].second;
            if (!isZero(val)) out.emplace_back(y[i].first, std::move(val));
            ++i; ++j;
        }
    }
    y = std::move(out);
}

template <class K>
void svScale(SparseVec<K>& v, const K& c) {
    if (isZero(c)) { v.clear(); return; }
    for (auto& [i, val] : v) val *= c;
}

template <class K>
SparseVec<K> svSub(const SparseVec<K>& a, const SparseVec<K>& b) {
    SparseVec<K> out = a;
    svAxpy(out, K(-1), b);
    return out;
}

template <class K>
const K* svCoeff(const SparseVec<K>& v, Idx i) {
    auto it = std::lower_bound(v.begin(), v.end(), i,
                               [](const auto& p, Idx x) { return p.first < x; });
    return (it != v.end() && it->first == i) ? &it->second : nullptr;
}

/// Tensor of coordinate vectors: (u (x) v)[(i,j)] = u_i v_j, row-major pairs.
template <class K>
SparseVec<K> svTensor(const SparseVec<K>& u, const SparseVec<K>& v, Idx dimRight) {
    SparseVec<K> out;
    out.reserve(u.size() * v.size());
    for (const auto& [i, cu] : u)
        for (const auto& [j, cv] : v) {
            K c = cu * cv;
            if (!isZero(c)) out.emplace_back(pairIndex(i, j, dimRight), std::move(c));
        }
    svNormalize(out);
    return out;
}

}  // namespace chopf
