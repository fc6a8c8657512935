// chopf: exact computations with cocommutative color Hopf algebras.
//
// Exit codes: 0 all checks pass, 1 a check failed (witnesses in the report),
// 2 parse or usage errors.

#include <CLI11.hpp>
#include <chrono>
#include <iostream>

#include "chopf/commutators.hpp"
#include "chopf/io.hpp"
#include "chopf/zoo.hpp"

using namespace chopf;
using Json = nlohmann::json;

namespace {

struct Options {
    std::string out;
    std::string format = "text";
    std::string field = "auto";
    int level = 3;
    int bound = 16;
    long long coskCap = 70000;
    long long assocCap = 300;
};

void addCommon(CLI::App* cmd, Options& opt) {
    cmd->add_option("--out", opt.out, "write the structured report (or object) to this path");
    cmd->add_option("--format", opt.format, "report format: text|structured")
        ->check(CLI::IsMember({"text", "structured"}));
    cmd->add_option("--field", opt.field,
                    "expected base field (rational|gf:p); must match the input file");
    cmd->add_option("--level", opt.level, "simplicial truncation level (2 or 3)")
        ->check(CLI::Range(2, 3));
    cmd->add_option("--bound", opt.bound, "nilpotency search bound")->check(CLI::Range(1, 64));
    cmd->add_option("--cosk-cap", opt.coskCap, "matching-space dimension cap for the coskeleton");
    cmd->add_option("--assoc-cap", opt.assocCap,
                    "dimension cap for the exhaustive associativity sweep");
}

struct Report {
    Json j;
    std::string textBody;
    bool pass = true;
    bool objectWritten = false;  // --out already used for an object file

    Report() { j["checks"] = Json::array(); }

    void check(const ValidationReport& rep, const std::string& prefix = "") {
        Json arr = io::reportJson(rep)["checks"];
        for (auto& c : arr) {
            if (!prefix.empty()) c["name"] = prefix + "." + c["name"].get<std::string>();
            j["checks"].push_back(c);
        }
        if (!rep.ok()) pass = false;
        for (const auto& c : rep.checks()) {
            textBody += (c.ok ? (c.skipped ? "[skip] " : "[pass] ") : "[FAIL] ");
            textBody += (prefix.empty() ? "" : prefix + ".") + c.name;
            if (!c.witness.empty()) textBody += "  " + c.witness;
            textBody += "\n";
        }
    }
    void note(const std::string& key, const Json& value) {
        j["results"][key] = value;
        textBody += key + ": " + (value.is_string() ? value.get<std::string>() : value.dump()) +
                    "\n";
    }
};

template <class K>
std::map<std::string, Idx> dimsPerDegreeNamed(const ColorHopfAlgebra<K>& A) {
    std::map<std::string, Idx> out;
    for (Idx i = 0; i < A.dim(); ++i) out[A.space.group.elementName(A.degOf(i))]++;
    return out;
}

int finish(Report& rep, const std::string& command, const Options& opt,
           std::chrono::steady_clock::time_point started) {
    rep.j["command"] = command;
    rep.j["status"] = rep.pass ? "pass" : "fail";
    // timings stay out of the structured report so identical inputs produce
    // byte-identical documents
    std::string structured = io::dumpCanonical(rep.j);
    if (!opt.out.empty() && !rep.objectWritten) io::writeFile(opt.out, structured);
    if (opt.format == "structured") {
        std::cout << structured;
    } else {
        auto ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                      std::chrono::steady_clock::now() - started)
                      .count();
        std::cout << rep.textBody << "elapsed: " << ms << " ms\n"
                  << (rep.pass ? "RESULT: pass\n" : "RESULT: fail\n");
    }
    return rep.pass ? 0 : 1;
}

std::chrono::steady_clock::time_point runStart;

/// Parse a comma-separated basis-label list into the hopf closure of those
/// basis vectors; "*" is the whole algebra and "1" the unit subalgebra.
template <class K>
Subspace<K> subalgebraSpec(const ColorHopfAlgebra<K>& A, const std::string& spec) {
    if (spec == "*") return Subspace<K>::full(A.space);
    std::vector<SparseVec<K>> gens;
    if (spec != "1") {
        std::stringstream ss(spec);
        std::string label;
        while (std::getline(ss, label, ',')) {
            bool found = false;
            for (Idx i = 0; i < A.dim(); ++i)
                if (A.label(i) == label) {
                    gens.push_back(svUnit<K>(i));
                    found = true;
                    break;
                }
            if (!found) throw ParseError("no basis vector labelled '" + label + "'");
        }
    }
    return subalgebraClosure(A, gens, ClosureMode::Hopf);
}

template <class K>
int runVerify(const Json& jin, const Options& opt) {
    auto A = io::algebraFromJson<K>(jin);
    Report rep;
    rep.note("algebra", A.name);
    rep.note("dim", A.dim());
    rep.note("dims_per_degree", Json(dimsPerDegreeNamed(A)));
    rep.check(validateBicharacter(A.phi), "bichar");
    rep.check(verifyHopf(A, opt.assocCap));
    return finish(rep, "verify", opt, runStart);
}

template <class K>
int runKernel(const Json& jin, const Options& opt) {
    auto mf = io::morphismFromJson<K>(jin);
    Report rep;
    rep.check(verifyMorphism(mf.source, mf.target, mf.map), "morphism");
    auto ker = hopfKernel(mf.source, mf.target, mf.map);
    rep.check(isHopfSubalgebra(mf.source, ker), "kernel");
    auto nrm = isNormal(mf.source, ker);
    ValidationReport n;
    n.add("kernel.normal", nrm.normal, nrm.witness);
    rep.check(n);
    rep.note("kernel_dim", ker.dim());
    Json rows = Json::array();
    for (const auto& [p, r] : ker.rows()) rows.push_back(formatVec(mf.source.space, r));
    rep.note("kernel_basis", rows);
    return finish(rep, "kernel", opt, runStart);
}

template <class K>
int runQuotient(const Json& jin, const std::string& subSpec, const Options& opt) {
    auto A = io::algebraFromJson<K>(jin);
    auto B = subalgebraSpec(A, subSpec);
    auto q = quotientByNormal(A, B);
    Report rep;
    rep.check(q.checks, "ideal");
    rep.check(verifyHopf(q.algebra, opt.assocCap), "quotient");
    rep.check(verifyMorphism(A, q.algebra, q.projection), "projection");
    rep.note("subalgebra_dim", B.dim());
    rep.note("quotient_dim", q.algebra.dim());
    rep.note("dims_per_degree", Json(dimsPerDegreeNamed(q.algebra)));
    if (!opt.out.empty()) {
        io::writeFile(opt.out, io::dumpCanonical(io::algebraJson(q.algebra)));
        rep.objectWritten = true;
        rep.note("written", opt.out);
    }
    return finish(rep, "quotient", opt, runStart);
}

template <class K>
int runCommutator(const Json& jin, const std::string& xSpec, const std::string& ySpec,
                  const Options& opt) {
    auto A = io::algebraFromJson<K>(jin);
    auto X = subalgebraSpec(A, xSpec);
    auto Y = subalgebraSpec(A, ySpec);
    auto C = commutatorSubalgebra(A, X, Y);
    Report rep;
    rep.check(isHopfSubalgebra(A, C), "commutator");
    auto nrm = isNormal(A, C);
    ValidationReport n;
    n.add("commutator.normal", nrm.normal, nrm.witness);
    rep.check(n);
    auto q = quotientByNormal(A, C);
    auto commute = huqCommute(q.algebra, imageSubspace(q.projection, X),
                              imageSubspace(q.projection, Y));
    ValidationReport qc;
    qc.add("commutator.images_commute_in_quotient", commute.commute, commute.witness);
    rep.check(qc);
    rep.note("commutator_dim", C.dim());
    Json rows = Json::array();
    for (const auto& [p, r] : C.rows()) rows.push_back(formatVec(A.space, r));
    rep.note("commutator_basis", rows);
    return finish(rep, "commutator", opt, runStart);
}

template <class K>
int runHuq(const Json& jin, const std::string& xSpec, const std::string& ySpec,
           const Options& opt) {
    auto A = io::algebraFromJson<K>(jin);
    auto X = subalgebraSpec(A, xSpec);
    auto Y = subalgebraSpec(A, ySpec);
    auto res = huqCommute(A, X, Y);  // throws when the four conditions disagree
    Report rep;
    rep.note("commute", res.commute);
    rep.note("condition1_pairing_morphism", res.cond1);
    rep.note("condition2_phi_commutation", res.cond2);
    rep.note("condition3_commutator_trivial", res.cond3);
    rep.note("condition4_adjoint_trivial", res.cond4);
    if (!res.commute) rep.note("witness", res.witness);
    ValidationReport agree;
    agree.add("huq.conditions_agree", true);
    rep.check(agree);
    return finish(rep, "huq", opt, runStart);
}

template <class K>
int runNilpotency(const Json& jin, const Options& opt) {
    auto A = io::algebraFromJson<K>(jin);
    auto series = nilpotency(A, opt.bound);
    Report rep;
    Json dims = Json::array();
    for (const auto& t : series.terms) dims.push_back(t.dim());
    rep.note("series_dims", dims);
    if (series.classOf)
        rep.note("class", *series.classOf);
    else
        rep.note("class", series.stabilized ? "not nilpotent (series stabilized)"
                                            : "undecided within bound");
    return finish(rep, "nilpotency", opt, runStart);
}

template <class K>
int runHall(const Json& jin, const std::string& nSpec, const Options& opt) {
    auto mf = io::morphismFromJson<K>(jin);
    auto N = subalgebraSpec(mf.source, nSpec);
    auto res = hallCheck(mf.source, mf.target, mf.map, N, opt.bound);
    Report rep;
    rep.check(res.hypotheses, "hypotheses");
    if (res.boundEvaluated) {
        rep.note("c", res.c);
        rep.note("d", res.d);
        rep.note("class_E", res.classE);
        rep.note("bound", res.bound);
        ValidationReport b;
        b.add("hall.class_bound", res.boundSatisfied);
        rep.check(b);
    } else {
        rep.note("bound", "not evaluated (hypotheses unmet)");
    }
    return finish(rep, "hall", opt, runStart);
}

template <class K>
int runZassenhaus(const Json& jin, const std::string& uSpec, const std::string& vSpec,
                  const std::string& kSpec, const std::string& lSpec, const Options& opt) {
    auto A = io::algebraFromJson<K>(jin);
    auto res = zassenhausVerify(A, subalgebraSpec(A, uSpec), subalgebraSpec(A, vSpec),
                                subalgebraSpec(A, kSpec), subalgebraSpec(A, lSpec));
    Report rep;
    rep.check(res.checks);
    rep.note("left_dims", Json(dimsPerDegreeNamed(res.left.algebra)));
    rep.note("middle_dims", Json(dimsPerDegreeNamed(res.middle.algebra)));
    rep.note("right_dims", Json(dimsPerDegreeNamed(res.right.algebra)));
    return finish(rep, "zassenhaus", opt, runStart);
}

template <class K>
int runSmash(const Json& jin, const Options& opt) {
    auto M = io::actionFromJson<K>(jin);
    Report rep;
    rep.check(validateModuleAction(M), "action");
    if (!rep.pass) return finish(rep, "smash", opt, runStart);
    auto smash = smashProduct(M, opt.assocCap);
    rep.check(smash.verified, "product");
    rep.note("product_dim", smash.product.dim());
    if (!opt.out.empty()) {
        io::writeFile(opt.out, io::dumpCanonical(io::algebraJson(smash.product)));
        rep.objectWritten = true;
        rep.note("written", opt.out);
    }
    return finish(rep, "smash", opt, runStart);
}

template <class K>
int runXmodCheck(const Json& jin, const Options& opt) {
    auto X = io::xmodFromJson<K>(jin);
    Report rep;
    rep.check(validateCrossedModule(X));
    return finish(rep, "xmod-check", opt, runStart);
}

template <class K>
int runXmodToGraph(const Json& jin, const Options& opt) {
    auto X = io::xmodFromJson<K>(jin);
    auto rmg = xmodToRmg(X, opt.assocCap);
    Report rep;
    rep.check(rmg.checks);
    auto mult = isMultiplicative(rmg.graph);
    ValidationReport m;
    m.add("graph.multiplicative", mult.multiplicative, mult.witness);
    rep.check(m);
    rep.note("arrows_dim", rmg.graph.arrows.dim());
    if (!opt.out.empty()) {
        io::writeFile(opt.out, io::dumpCanonical(io::graphJson(rmg.graph)));
        rep.objectWritten = true;
        rep.note("written", opt.out);
    }
    return finish(rep, "xmod-to-graph", opt, runStart);
}

template <class K>
int runGraphToXmod(const Json& jin, const Options& opt) {
    auto G = io::graphFromJson<K>(jin);
    auto res = rmgToXmod(G);
    Report rep;
    rep.check(res.checks);
    rep.note("top_dim", res.xmod.top.dim());
    rep.note("base_dim", res.xmod.base.dim());
    if (!opt.out.empty()) {
        io::writeFile(opt.out, io::dumpCanonical(io::xmodJson(res.xmod)));
        rep.objectWritten = true;
        rep.note("written", opt.out);
    }
    return finish(rep, "graph-to-xmod", opt, runStart);
}

template <class K>
int runXmodToSimplicial(const Json& jin, const Options& opt) {
    auto X = io::xmodFromJson<K>(jin);
    auto built = xmodToSimplicial(X, opt.assocCap, opt.coskCap);
    Report rep;
    rep.check(built.checks);
    auto S = built.object;
    if (opt.level < S.truncation()) {
        S.levels.resize(static_cast<size_t>(opt.level) + 1);
        S.faces.resize(static_cast<size_t>(opt.level) + 1);
        S.degens.resize(static_cast<size_t>(opt.level) + 1);
    }
    rep.check(validateSimplicial(S), "simplicial");
    Json dims = Json::array();
    for (const auto& L : S.levels) dims.push_back(L.dim());
    rep.note("level_dims", dims);
    if (!opt.out.empty()) {
        io::writeFile(opt.out, io::dumpCanonical(io::simplicialJson(S)));
        rep.objectWritten = true;
        rep.note("written", opt.out);
    }
    return finish(rep, "xmod-to-simplicial", opt, runStart);
}

template <class K>
int runMoore(const Json& jin, const Options& opt) {
    auto S = io::simplicialFromJson<K>(jin);
    auto M = mooreComplex(S);
    Report rep;
    rep.check(M.checks, "moore");
    Json dims = Json::array();
    for (const auto& t : M.terms) dims.push_back(t.algebra.dim());
    rep.note("moore_dims", dims);
    rep.note("length", M.length);
    rep.note("vanishing_above_certified", M.vanishingCertified);
    return finish(rep, "moore", opt, runStart);
}

template <class K>
int runDecompose(const Json& jin, const Options& opt) {
    auto S = io::simplicialFromJson<K>(jin);
    Report rep;
    rep.check(semidirectDecompositionCheck(S, opt.assocCap));
    if (S.truncation() >= 2) rep.check(mooreF2Check(S), "f2");
    return finish(rep, "decompose", opt, runStart);
}

int runZooExport(const std::string& dir, const Options& opt) {
    Report rep;
    auto zoo = standardZoo();
    Json manifest;
    manifest["kind"] = "zoo_manifest";
    Json names = Json::array();
    auto save = [&](std::string name, const Json& j) {
        for (auto& ch : name)
            if (ch == '[' || ch == ']' || ch == '(' || ch == ')' || ch == '|') ch = '_';
        io::writeFile(dir + "/" + name, io::dumpCanonical(j));
        names.push_back(name);
    };
    for (const auto& A : zoo.algebras) save("algebra_" + A.name + ".json", io::algebraJson(A));
    int idx = 0;
    for (const auto& X : zoo.xmods) save("xmod_" + std::to_string(idx++) + ".json", io::xmodJson(X));
    idx = 0;
    for (const auto& M : zoo.actions) save("action_" + std::to_string(idx++) + ".json",
                                           io::actionJson(M));
    auto gf7 = gf7Zoo();
    idx = 0;
    for (const auto& A : gf7.algebras)
        save("algebra_gf7_" + std::to_string(idx++) + ".json", io::algebraJson(A));
    {
        auto sign = signMorphism();
        save("morphism_sign_s3.json", io::morphismJson(sign.src, sign.dst, sign.map));
        auto collapse = dihedralCollapse();
        save("morphism_d4_collapse.json", io::morphismJson(collapse.src, collapse.dst, collapse.map));
    }
    manifest["files"] = names;
    io::writeFile(dir + "/manifest.json", io::dumpCanonical(manifest));
    rep.note("exported", Json(names.size()));
    rep.note("directory", dir);
    return finish(rep, "zoo-export", opt, runStart);
}

bool isRationalFile(const Json& j) {
    const Json* block = &j;
    for (const char* key : {"source", "base", "arrows", "actor"})
        if (j.contains(key)) { block = &j.at(key); break; }
    if (j.contains("levels")) block = &j.at("levels").at(0);
    return io::fieldFromJson(*block).rational;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact computations with cocommutative color Hopf algebras"};
    app.require_subcommand(1);
    Options opt;

    std::string input, sub, xSpec = "*", ySpec = "*", uSpec, vSpec, kSpec, lSpec, nSpec = "*";
    std::string dir;

    auto* verify = app.add_subcommand("verify", "run the Hopf axiom verifier on an algebra file");
    verify->add_option("input", input)->required();
    addCommon(verify, opt);

    auto* kernel = app.add_subcommand("kernel", "Hopf kernel of a morphism file");
    kernel->add_option("input", input)->required();
    addCommon(kernel, opt);

    auto* quot = app.add_subcommand("quotient", "quotient by a normal Hopf subalgebra");
    quot->add_option("input", input)->required();
    quot->add_option("--sub", sub, "subalgebra: labels, '*' or '1'")->required();
    addCommon(quot, opt);

    auto* comm = app.add_subcommand("commutator", "Huq commutator of two subalgebras");
    comm->add_option("input", input)->required();
    comm->add_option("--x", xSpec);
    comm->add_option("--y", ySpec);
    addCommon(comm, opt);

    auto* huq = app.add_subcommand("huq", "the four equivalent commuting conditions");
    huq->add_option("input", input)->required();
    huq->add_option("--x", xSpec);
    huq->add_option("--y", ySpec);
    addCommon(huq, opt);

    auto* nil = app.add_subcommand("nilpotency", "iterated commutator series");
    nil->add_option("input", input)->required();
    addCommon(nil, opt);

    auto* hall = app.add_subcommand("hall", "Hall nilpotency bound on a surjection file");
    hall->add_option("input", input)->required();
    hall->add_option("--n", nSpec, "normal subalgebra N of the source");
    addCommon(hall, opt);

    auto* zass = app.add_subcommand("zassenhaus", "the three Zassenhaus quotients");
    zass->add_option("input", input)->required();
    zass->add_option("--u", uSpec)->required();
    zass->add_option("--v", vSpec)->required();
    zass->add_option("--k", kSpec)->required();
    zass->add_option("--l", lSpec)->required();
    addCommon(zass, opt);

    auto* smash = app.add_subcommand("smash", "smash product of a module action file");
    smash->add_option("input", input)->required();
    addCommon(smash, opt);

    auto* xc = app.add_subcommand("xmod-check", "validate a crossed module file");
    xc->add_option("input", input)->required();
    addCommon(xc, opt);

    auto* xg = app.add_subcommand("xmod-to-graph",
                                  "reflexive-multiplicative graph of a crossed module");
    xg->add_option("input", input)->required();
    addCommon(xg, opt);

    auto* gx = app.add_subcommand("graph-to-xmod", "crossed module of a multiplicative graph");
    gx->add_option("input", input)->required();
    addCommon(gx, opt);

    auto* xs = app.add_subcommand("xmod-to-simplicial", "simplicial object of a crossed module");
    xs->add_option("input", input)->required();
    addCommon(xs, opt);

    auto* moore = app.add_subcommand("moore", "Moore complex of a simplicial file");
    moore->add_option("input", input)->required();
    addCommon(moore, opt);

    auto* dec = app.add_subcommand("decompose", "iterated semidirect decomposition checks");
    dec->add_option("input", input)->required();
    addCommon(dec, opt);

    auto* zoo = app.add_subcommand("zoo-export", "write the whole corpus as definition files");
    zoo->add_option("dir", dir)->required();
    addCommon(zoo, opt);

    CLI11_PARSE(app, argc, argv);

    runStart = std::chrono::steady_clock::now();
    try {
        if (zoo->parsed()) return runZooExport(dir, opt);
        Json jin = io::loadJsonFile(input);
        bool rational = isRationalFile(jin);
        if (opt.field != "auto") {
            FieldSpec want = opt.field == "rational" ? FieldSpec::rationals()
                                                     : FieldSpec::gf(std::stoll(opt.field.substr(3)));
            if (want.rational != rational)
                throw ParseError("--field " + opt.field + " does not match the input file");
        }
        if (verify->parsed())
            return rational ? runVerify<Rational>(jin, opt) : runVerify<Fp>(jin, opt);
        if (kernel->parsed())
            return rational ? runKernel<Rational>(jin, opt) : runKernel<Fp>(jin, opt);
        if (quot->parsed())
            return rational ? runQuotient<Rational>(jin, sub, opt) : runQuotient<Fp>(jin, sub, opt);
        if (comm->parsed())
            return rational ? runCommutator<Rational>(jin, xSpec, ySpec, opt)
                            : runCommutator<Fp>(jin, xSpec, ySpec, opt);
        if (huq->parsed())
            return rational ? runHuq<Rational>(jin, xSpec, ySpec, opt)
                            : runHuq<Fp>(jin, xSpec, ySpec, opt);
        if (nil->parsed())
            return rational ? runNilpotency<Rational>(jin, opt) : runNilpotency<Fp>(jin, opt);
        if (hall->parsed())
            return rational ? runHall<Rational>(jin, nSpec, opt) : runHall<Fp>(jin, nSpec, opt);
        if (zass->parsed())
            return rational ? runZassenhaus<Rational>(jin, uSpec, vSpec, kSpec, lSpec, opt)
                            : runZassenhaus<Fp>(jin, uSpec, vSpec, kSpec, lSpec, opt);
        if (smash->parsed())
            return rational ? runSmash<Rational>(jin, opt) : runSmash<Fp>(jin, opt);
        if (xc->parsed())
            return rational ? runXmodCheck<Rational>(jin, opt) : runXmodCheck<Fp>(jin, opt);
        if (xg->parsed())
            return rational ? runXmodToGraph<Rational>(jin, opt) : runXmodToGraph<Fp>(jin, opt);
        if (gx->parsed())
            return rational ? runGraphToXmod<Rational>(jin, opt) : runGraphToXmod<Fp>(jin, opt);
        if (xs->parsed())
            return rational ? runXmodToSimplicial<Rational>(jin, opt)
                            : runXmodToSimplicial<Fp>(jin, opt);
        if (moore->parsed())
            return rational ? runMoore<Rational>(jin, opt) : runMoore<Fp>(jin, opt);
        if (dec->parsed())
            return rational ? runDecompose<Rational>(jin, opt) : runDecompose<Fp>(jin, opt);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const ChopfError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
