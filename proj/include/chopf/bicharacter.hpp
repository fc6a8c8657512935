#pragma once

#include <Eigen/Dense>
#include <functional>

#include "chopf/grading.hpp"
#include "chopf/scalar.hpp"

namespace chopf {

/// Bicharacter phi: G x G -> k\{0}, stored as a full table.
template <class K>
struct Bicharacter {
    GradingGroup group;
    Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic> table;

    Bicharacter() = default;
    Bicharacter(GradingGroup g, Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic> t)
        : group(std::move(g)), table(std::move(t)) {
        if (table.rows() != group.size() || table.cols() != group.size())
            throw ChopfError("bicharacter table has wrong shape");
    }

    const K& operator()(int g, int h) const {
        if (g < 0 || g >= group.size() || h < 0 || h >= group.size())
            throw ChopfError("bicharacter evaluated outside G x G");
        return table(g, h);
    }

    bool operator==(const Bicharacter& o) const {
        return group == o.group && table == o.table;
    }
};

template <class K>
Bicharacter<K> trivialBicharacter(const GradingGroup& g) {
    Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic> t(g.size(), g.size());
    t.setConstant(K(1));
    return Bicharacter<K>(g, std::move(t));
}

/// phi(g,h) = (-1)^{gh} on Z_2; the super braiding.
template <class K>
Bicharacter<K> superBicharacter() {
    GradingGroup z2({2});
    Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic> t(2, 2);
    t << K(1), K(1), K(1), K(-1);
    return Bicharacter<K>(z2, std::move(t));
}

template <class K>
Bicharacter<K> makeBicharacter(const GradingGroup& g, const std::function<K(int, int)>& f) {
    Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic> t(g.size(), g.size());
    for (int a = 0; a < g.size(); ++a)
        for (int b = 0; b < g.size(); ++b) t(a, b) = f(a, b);
    return Bicharacter<K>(g, std::move(t));
}

/// Checks multiplicativity in both arguments, symmetry phi(g,h)phi(h,g)=1
/// and nonvanishing; each violated law is reported with its witness triple.
template <class K>
ValidationReport validateBicharacter(const Bicharacter<K>& phi) {
    ValidationReport rep;
    const auto& G = phi.group;
    bool nonzero = true;
    std::string wZero;
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h)
            if (isZero(phi(g, h))) {
                nonzero = false;
                if (wZero.empty()) wZero = "phi" + G.elementName(g) + G.elementName(h) + " = 0";
            }
    rep.add("bichar.nonzero", nonzero, wZero);
    if (!nonzero) return rep;

    bool multL = true, multR = true, sym = true;
    std::string wL, wR, wS;
    for (int g = 0; g < G.size(); ++g)
        for (int h = 0; h < G.size(); ++h) {
            for (int l = 0; l < G.size(); ++l) {
                if (multL && phi(G.add(g, h), l) != phi(g, l) * phi(h, l)) {
                    multL = false;
                    wL = "witness (g,h,l) = " + G.elementName(g) + G.elementName(h) + G.elementName(l);
                }
                if (multR && phi(g, G.add(h, l)) != phi(g, h) * phi(g, l)) {
                    multR = false;
                    wR = "witness (g,h,l) = " + G.elementName(g) + G.elementName(h) + G.elementName(l);
                }
            }
            if (sym && phi(g, h) * phi(h, g) != K(1)) {
                sym = false;
                wS = "witness (g,h) = " + G.elementName(g) + G.elementName(h);
            }
        }
    rep.add("bichar.multiplicative_left", multL, wL);
    rep.add("bichar.multiplicative_right", multR, wR);
    rep.add("bichar.symmetric", sym, wS);
    return rep;
}

}  // namespace chopf
