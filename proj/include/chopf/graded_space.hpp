#pragma once

#include <string>
#include <vector>

#include "chopf/grading.hpp"

namespace chopf {

/// Finite-dimensional G-graded vector space: one degree per basis index.
struct GradedSpace {
    GradingGroup group;
    std::vector<int> deg;             // flat G-index per basis vector
    std::vector<std::string> labels;  // same length as deg

    GradedSpace() = default;
    GradedSpace(GradingGroup g, std::vector<int> degrees, std::vector<std::string> lbls = {})
        : group(std::move(g)), deg(std::move(degrees)), labels(std::move(lbls)) {
        for (int d : deg)
            if (d < 0 || d >= group.size()) throw ChopfError("basis degree outside grading group");
        if (labels.empty()) {
            labels.reserve(deg.size());
            for (size_t i = 0; i < deg.size(); ++i) labels.push_back("e" + std::to_string(i));
        }
        if (labels.size() != deg.size()) throw ChopfError("labels/degrees length mismatch");
    }

    Idx dim() const { return static_cast<Idx>(deg.size()); }

    const std::string& label(Idx i) const { return labels[static_cast<size_t>(i)]; }
    int degree(Idx i) const { return deg[static_cast<size_t>(i)]; }

    /// Spaces compare by grading data; labels are cosmetic.
    bool sameAs(const GradedSpace& o) const { return group == o.group && deg == o.deg; }

    /// Basis indices of the homogeneous component X_g.
    std::vector<Idx> component(int g) const {
        std::vector<Idx> out;
        for (Idx i = 0; i < dim(); ++i)
            if (deg[static_cast<size_t>(i)] == g) out.push_back(i);
        return out;
    }
};

/// The monoidal unit k: one basis vector of degree zero.
inline GradedSpace unitSpace(const GradingGroup& g) {
    return GradedSpace(g, {g.zero()}, {"1k"});
}

/// X tensor Y with basis pairs in row-major order; deg(i,j) = deg i + deg j.
inline GradedSpace tensor(const GradedSpace& X, const GradedSpace& Y) {
    if (X.group != Y.group) throw ChopfError("tensor: grading groups differ");
    std::vector<int> deg;
    std::vector<std::string> labels;
    deg.reserve(static_cast<size_t>(X.dim() * Y.dim()));
    labels.reserve(deg.capacity());
    for (Idx i = 0; i < X.dim(); ++i)
        for (Idx j = 0; j < Y.dim(); ++j) {
            deg.push_back(X.group.add(X.degree(i), Y.degree(j)));
            labels.push_back(X.label(i) + "(x)" + Y.label(j));
        }
    return GradedSpace(X.group, std::move(deg), std::move(labels));
}

}  // namespace chopf
