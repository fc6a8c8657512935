#pragma once

#include <fstream>
#include <json.hpp>
#include <sstream>

#include "chopf/actions.hpp"
#include "chopf/simplicial.hpp"

namespace chopf {

using Json = nlohmann::json;

struct ParseError : ChopfError {
    explicit ParseError(const std::string& what) : ChopfError(what) {}
};

namespace io {

inline FieldSpec fieldFromJson(const Json& j) {
    if (!j.contains("field")) throw ParseError("algebra block: missing 'field'");
    std::string f = j.at("field").get<std::string>();
    if (f == "rational") return FieldSpec::rationals();
    if (f.rfind("gf:", 0) == 0) return FieldSpec::gf(std::stoll(f.substr(3)));
    throw ParseError("unknown field spec '" + f + "'");
}

template <class K>
std::string scalarJson(const K& v);
template <>
inline std::string scalarJson<Rational>(const Rational& v) { return scalarToString(v); }
template <>
inline std::string scalarJson<Fp>(const Fp& v) { return scalarToString(v); }

template <class K>
K scalarFromJson(const Json& j, const FieldSpec& field) {
    if (j.is_number_integer()) return parseScalar<K>(std::to_string(j.get<long long>()), field);
    if (j.is_string()) return parseScalar<K>(j.get<std::string>(), field);
    throw ParseError("scalar literal must be an integer or a 'p/q' string");
}

template <class K>
Json triplesJson(const SpMat<K>& m) {
    Json out = Json::array();
    std::vector<std::tuple<int, int, std::string>> trip;
    for (int c = 0; c < m.outerSize(); ++c)
        for (typename SpMat<K>::InnerIterator it(m, c); it; ++it)
            if (!isZero(it.value()))
                trip.emplace_back(static_cast<int>(it.row()), c, scalarJson<K>(it.value()));
    std::sort(trip.begin(), trip.end());
    for (const auto& [r, c, v] : trip) out.push_back(Json::array({r, c, v}));
    return out;
}

template <class K>
SpMat<K> triplesFromJson(const Json& j, Idx rows, Idx cols, const FieldSpec& field,
                         const std::string& what) {
    if (!j.is_array()) throw ParseError(what + ": expected a triple list");
    std::vector<Eigen::Triplet<K>> trip;
    for (const auto& t : j) {
        if (!t.is_array() || t.size() != 3)
            throw ParseError(what + ": each entry must be [row, col, scalar]");
        long long r = t[0].get<long long>(), c = t[1].get<long long>();
        if (r < 0 || r >= rows || c < 0 || c >= cols)
            throw ParseError(what + ": index (" + std::to_string(r) + "," + std::to_string(c) +
                             ") out of range");
        trip.emplace_back(static_cast<int>(r), static_cast<int>(c),
                          scalarFromJson<K>(t[2], field));
    }
    SpMat<K> m(rows, cols);
    m.setFromTriplets(trip.begin(), trip.end());
    return m;
}

template <class K>
FieldSpec fieldOfAlgebra(const ColorHopfAlgebra<K>& A);
template <>
inline FieldSpec fieldOfAlgebra<Rational>(const ColorHopfAlgebra<Rational>&) {
    return FieldSpec::rationals();
}
template <>
inline FieldSpec fieldOfAlgebra<Fp>(const ColorHopfAlgebra<Fp>& A) {
    for (int c = 0; c < A.unit.mat.outerSize(); ++c)
        for (SpMat<Fp>::InnerIterator it(A.unit.mat, c); it; ++it)
            if (it.value().p) return FieldSpec::gf(it.value().p);
    throw ChopfError("cannot infer GF(p) modulus from the algebra");
}

template <class K>
Json algebraJson(const ColorHopfAlgebra<K>& A) {
    Json j;
    j["kind"] = "color_hopf_algebra";
    j["name"] = A.name;
    j["field"] = fieldOfAlgebra(A).name();
    j["grading_orders"] = A.space.group.orders();
    Json bichar = Json::array();
    for (int g = 0; g < A.space.group.size(); ++g) {
        Json row = Json::array();
        for (int h = 0; h < A.space.group.size(); ++h) row.push_back(scalarJson<K>(A.phi(g, h)));
        bichar.push_back(row);
    }
    j["bicharacter"] = bichar;
    Json basis = Json::array();
    for (Idx i = 0; i < A.dim(); ++i)
        basis.push_back(Json{{"label", A.label(i)}, {"deg", A.space.group.tuple(A.degOf(i))}});
    j["basis"] = basis;
    j["maps"] = Json{{"mul", triplesJson(A.mul.mat)},
                     {"unit", triplesJson(A.unit.mat)},
                     {"comul", triplesJson(A.comul.mat)},
                     {"counit", triplesJson(A.counit.mat)},
                     {"antipode", triplesJson(A.antipode.mat)}};
    return j;
}

template <class K>
ColorHopfAlgebra<K> algebraFromJson(const Json& j) {
    if (j.value("kind", "") != "color_hopf_algebra")
        throw ParseError("expected kind 'color_hopf_algebra'");
    FieldSpec field = fieldFromJson(j);
    GradingGroup G(j.value("grading_orders", std::vector<int>{}));
    auto bj = j.at("bicharacter");
    if (!bj.is_array() || bj.size() != static_cast<size_t>(G.size()))
        throw ParseError("bicharacter table must have |G| rows");
    Eigen::Matrix<K, Eigen::Dynamic, Eigen::Dynamic> tbl(G.size(), G.size());
    for (int g = 0; g < G.size(); ++g) {
        if (bj[g].size() != static_cast<size_t>(G.size()))
            throw ParseError("bicharacter row " + std::to_string(g) + " has wrong length");
        for (int h = 0; h < G.size(); ++h) tbl(g, h) = scalarFromJson<K>(bj[g][h], field);
    }
    Bicharacter<K> phi(G, std::move(tbl));

    std::vector<int> deg;
    std::vector<std::string> labels;
    for (const auto& b : j.at("basis")) {
        labels.push_back(b.at("label").get<std::string>());
        deg.push_back(G.index(b.at("deg").get<std::vector<int>>()));
    }
    GradedSpace sp(G, std::move(deg), std::move(labels));
    Idx n = sp.dim();
    const auto& maps = j.at("maps");
    GradedSpace AA = tensor(sp, sp), k = unitSpace(G);
    return ColorHopfAlgebra<K>(
        j.value("name", "A"), sp, phi,
        GradedMap<K>(AA, sp, triplesFromJson<K>(maps.at("mul"), n, n * n, field, "mul")),
        GradedMap<K>(k, sp, triplesFromJson<K>(maps.at("unit"), n, 1, field, "unit")),
        GradedMap<K>(sp, AA, triplesFromJson<K>(maps.at("comul"), n * n, n, field, "comul")),
        GradedMap<K>(sp, k, triplesFromJson<K>(maps.at("counit"), 1, n, field, "counit")),
        GradedMap<K>(sp, sp, triplesFromJson<K>(maps.at("antipode"), n, n, field, "antipode")));
}

template <class K>
Json morphismJson(const ColorHopfAlgebra<K>& src, const ColorHopfAlgebra<K>& dst,
                  const GradedMap<K>& f) {
    return Json{{"kind", "morphism"},
                {"source", algebraJson(src)},
                {"target", algebraJson(dst)},
                {"map", triplesJson(f.mat)}};
}

template <class K>
struct MorphismFile {
    ColorHopfAlgebra<K> source, target;
    GradedMap<K> map;
};

template <class K>
MorphismFile<K> morphismFromJson(const Json& j) {
    if (j.value("kind", "") != "morphism") throw ParseError("expected kind 'morphism'");
    auto src = algebraFromJson<K>(j.at("source"));
    auto dst = algebraFromJson<K>(j.at("target"));
    FieldSpec field = fieldFromJson(j.at("source"));
    auto map = GradedMap<K>(src.space, dst.space,
                            triplesFromJson<K>(j.at("map"), dst.dim(), src.dim(), field, "map"));
    return MorphismFile<K>{std::move(src), std::move(dst), std::move(map)};
}

template <class K>
Json xmodJson(const CrossedModule<K>& X) {
    return Json{{"kind", "crossed_module"},
                {"base", algebraJson(X.base)},
                {"top", algebraJson(X.top)},
                {"d", triplesJson(X.d.mat)},
                {"action", triplesJson(X.act.mat)}};
}

template <class K>
CrossedModule<K> xmodFromJson(const Json& j) {
    if (j.value("kind", "") != "crossed_module") throw ParseError("expected kind 'crossed_module'");
    auto base = algebraFromJson<K>(j.at("base"));
    auto top = algebraFromJson<K>(j.at("top"));
    FieldSpec field = fieldFromJson(j.at("base"));
    GradedMap<K> d(top.space, base.space,
                   triplesFromJson<K>(j.at("d"), base.dim(), top.dim(), field, "d"));
    GradedMap<K> act(tensor(base.space, top.space), top.space,
                     triplesFromJson<K>(j.at("action"), top.dim(), base.dim() * top.dim(), field,
                                        "action"));
    return CrossedModule<K>{std::move(base), std::move(top), std::move(d), std::move(act)};
}

template <class K>
Json graphJson(const ReflexiveGraph<K>& G) {
    return Json{{"kind", "reflexive_graph"}, {"arrows", algebraJson(G.arrows)},
                {"objects", algebraJson(G.objects)}, {"src", triplesJson(G.src.mat)},
                {"tgt", triplesJson(G.tgt.mat)},     {"unit", triplesJson(G.unit.mat)}};
}

template <class K>
ReflexiveGraph<K> graphFromJson(const Json& j) {
    if (j.value("kind", "") != "reflexive_graph")
        throw ParseError("expected kind 'reflexive_graph'");
    auto arrows = algebraFromJson<K>(j.at("arrows"));
    auto objects = algebraFromJson<K>(j.at("objects"));
    FieldSpec field = fieldFromJson(j.at("arrows"));
    auto mk = [&](const char* key, const GradedSpace& s, const GradedSpace& d) {
        return GradedMap<K>(s, d, triplesFromJson<K>(j.at(key), d.dim(), s.dim(), field, key));
    };
    return ReflexiveGraph<K>{arrows, objects, mk("src", arrows.space, objects.space),
                             mk("tgt", arrows.space, objects.space),
                             mk("unit", objects.space, arrows.space)};
}

template <class K>
Json actionJson(const ModuleAction<K>& M) {
    return Json{{"kind", "module_action"},
                {"actor", algebraJson(M.actor)},
                {"carrier", algebraJson(M.carrier)},
                {"action", triplesJson(M.act.mat)}};
}

template <class K>
ModuleAction<K> actionFromJson(const Json& j) {
    if (j.value("kind", "") != "module_action") throw ParseError("expected kind 'module_action'");
    auto actor = algebraFromJson<K>(j.at("actor"));
    auto carrier = algebraFromJson<K>(j.at("carrier"));
    FieldSpec field = fieldFromJson(j.at("actor"));
    GradedMap<K> act(tensor(actor.space, carrier.space), carrier.space,
                     triplesFromJson<K>(j.at("action"), carrier.dim(),
                                        actor.dim() * carrier.dim(), field, "action"));
    return ModuleAction<K>{std::move(actor), std::move(carrier), std::move(act)};
}

template <class K>
Json simplicialJson(const SimplicialHopf<K>& S) {
    Json levels = Json::array(), faces = Json::array(), degens = Json::array();
    for (const auto& L : S.levels) levels.push_back(algebraJson(L));
    for (size_t n = 0; n < S.faces.size(); ++n) {
        Json fn = Json::array(), sn = Json::array();
        for (const auto& f : S.faces[n]) fn.push_back(triplesJson(f.mat));
        for (const auto& s : S.degens[n]) sn.push_back(triplesJson(s.mat));
        faces.push_back(fn);
        degens.push_back(sn);
    }
    return Json{{"kind", "simplicial"},
                {"levels", levels},
                {"faces", faces},
                {"degeneracies", degens},
                {"coskeletal_from", S.coskeletalFrom}};
}

template <class K>
SimplicialHopf<K> simplicialFromJson(const Json& j) {
    if (j.value("kind", "") != "simplicial") throw ParseError("expected kind 'simplicial'");
    SimplicialHopf<K> S;
    for (const auto& lj : j.at("levels")) S.levels.push_back(algebraFromJson<K>(lj));
    if (S.levels.empty()) throw ParseError("simplicial object needs at least one level");
    FieldSpec field = fieldFromJson(j.at("levels")[0]);
    const auto& fj = j.at("faces");
    const auto& sj = j.at("degeneracies");
    if (fj.size() != S.levels.size() || sj.size() != S.levels.size())
        throw ParseError("faces/degeneracies must list one block per level");
    for (size_t n = 0; n < S.levels.size(); ++n) {
        S.faces.emplace_back();
        S.degens.emplace_back();
        if (n == 0) {
            if (!fj[n].empty() || !sj[n].empty())
                throw ParseError("level 0 carries no faces or degeneracies");
            continue;
        }
        if (fj[n].size() != n + 1 || sj[n].size() != n)
            throw ParseError("level " + std::to_string(n) + " needs " + std::to_string(n + 1) +
                             " faces and " + std::to_string(n) + " degeneracies");
        for (size_t i = 0; i <= n; ++i)
            S.faces.back().push_back(GradedMap<K>(
                S.levels[n].space, S.levels[n - 1].space,
                triplesFromJson<K>(fj[n][i], S.levels[n - 1].dim(), S.levels[n].dim(), field,
                                   "face")));
        for (size_t i = 0; i < n; ++i)
            S.degens.back().push_back(GradedMap<K>(
                S.levels[n - 1].space, S.levels[n].space,
                triplesFromJson<K>(sj[n][i], S.levels[n].dim(), S.levels[n - 1].dim(), field,
                                   "degeneracy")));
    }
    S.coskeletalFrom = j.value("coskeletal_from", -1);
    return S;
}

inline Json reportJson(const ValidationReport& rep) {
    Json checks = Json::array();
    for (const auto& c : rep.checks()) {
        Json cj{{"name", c.name}, {"status", c.ok ? (c.skipped ? "skip" : "pass") : "fail"}};
        if (!c.witness.empty()) cj["witness"] = c.witness;
        checks.push_back(cj);
    }
    return Json{{"status", rep.ok() ? "pass" : "fail"}, {"checks", checks}};
}

inline Json loadJsonFile(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open '" + path + "'");
    Json j;
    try {
        in >> j;
    } catch (const std::exception& e) {
        throw ParseError("json parse error in '" + path + "': " + e.what());
    }
    return j;
}

inline void writeFile(const std::string& path, const std::string& content) {
    std::ofstream out(path);
    if (!out) throw ChopfError("cannot write '" + path + "'");
    out << content;
}

/// Canonical serialization used everywhere: sorted keys, fixed indent, so
/// identical inputs give byte-identical files.
inline std::string dumpCanonical(const Json& j) { return j.dump(1) + "\n"; }

}  // namespace io

}  // namespace chopf
