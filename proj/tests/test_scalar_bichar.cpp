#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "chopf/bicharacter.hpp"
#include "chopf/grading.hpp"
#include "chopf/scalar.hpp"

using namespace chopf;

TEST_CASE("rational parsing and exact arithmetic") {
    CHECK(parseRational("3/4") + parseRational("1/4") == Rational(1));
    CHECK(parseRational("2/4") == parseRational("1/2"));
    CHECK(parseRational("-7") == Rational(-7));
    CHECK(inverse(parseRational("3/5")) == parseRational("5/3"));
    CHECK_THROWS_AS(parseRational("x"), ChopfError);
    CHECK(scalarToString(parseRational("6/4")) == "3/2");
}

TEST_CASE("prime field arithmetic") {
    Fp a(3, 7), b(5, 7);
    CHECK(a + b == Fp(1, 7));
    CHECK(a * b == Fp(1, 7));
    CHECK(-a == Fp(4, 7));
    CHECK(inverse(Fp(3, 7)) == Fp(5, 7));
    CHECK(a / b == Fp(2, 7));

    // integer literals pick up the modulus on combination
    CHECK(Fp(10) + Fp(0, 7) == Fp(3, 7));
    CHECK(Fp(3, 7) * Fp(-1) == Fp(4, 7));

    CHECK_THROWS_AS(inverse(Fp(0, 7)), ChopfError);
    CHECK_THROWS_AS(Fp(1, 5) + Fp(1, 7), ChopfError);
    CHECK_THROWS_AS(FieldSpec::gf(2), ChopfError);   // characteristic 2 rejected
    CHECK_THROWS_AS(FieldSpec::gf(9), ChopfError);   // not prime
    CHECK(FieldSpec::gf(7).name() == "gf:7");
    CHECK(parseScalar<Fp>("-2/3", FieldSpec::gf(7)) == Fp(4, 7));
}

TEST_CASE("grading group encoding and axioms") {
    GradingGroup z6({2, 3});
    CHECK(z6.size() == 6);
    CHECK(z6.add(z6.index({1, 2}), z6.index({1, 2})) == z6.index({0, 1}));
    CHECK(z6.neg(z6.index({1, 1})) == z6.index({1, 2}));
    CHECK(z6.checkAxioms().ok());
    CHECK(GradingGroup::trivial().size() == 1);
    CHECK_THROWS_AS(GradingGroup({0}), ChopfError);
    CHECK_THROWS_AS(GradingGroup({65}), ChopfError);

    GradingGroup z2({2});
    CHECK(z2.checkAxioms().ok());
}

TEST_CASE("trivial and super bicharacters on Z2 are valid") {
    CHECK(validateBicharacter(trivialBicharacter<Rational>(GradingGroup({2}))).ok());
    auto super = superBicharacter<Rational>();
    CHECK(validateBicharacter(super).ok());
    CHECK(super(1, 1) == Rational(-1));
    CHECK(super(0, 1) == Rational(1));
}

TEST_CASE("broken table on Z2 is rejected with a multiplicativity witness") {
    GradingGroup z2({2});
    auto bad = makeBicharacter<Rational>(z2, [](int g, int h) {
        return (g == 1 && h == 1) ? Rational(2) : Rational(1);
    });
    auto rep = validateBicharacter(bad);
    CHECK_FALSE(rep.ok());
    bool multiplicativityFailed = false;
    for (const auto& c : rep.checks())
        if (!c.ok && c.name.find("multiplicative") != std::string::npos) multiplicativityFailed = true;
    CHECK(multiplicativityFailed);
}

TEST_CASE("omega-power pairing on Z3 over GF(7) evaluates but is not symmetric") {
    GradingGroup z3({3});
    // omega = 2 is a primitive cube root of 1 in GF(7)
    auto phi = makeBicharacter<Fp>(z3, [](int a, int b) {
        long long e = (a * b) % 3;
        long long v = 1;
        for (int k = 0; k < e; ++k) v = (v * 2) % 7;
        return Fp(v, 7);
    });
    CHECK(phi(1, 2) == Fp(4, 7));  // 2^2
    auto rep = validateBicharacter(phi);
    CHECK_FALSE(rep.ok());
    bool symFailed = false;
    for (const auto& c : rep.checks())
        if (!c.ok) {
            CHECK(c.name == "bichar.symmetric");
            symFailed = true;
        }
    CHECK(symFailed);
}

TEST_CASE("symplectic omega-pairing on Z3xZ3 over GF(7) is a valid symmetric bicharacter") {
    GradingGroup g({3, 3});
    auto pw = [](long long e) {
        e = ((e % 3) + 3) % 3;
        long long v = 1;
        for (int k = 0; k < e; ++k) v = (v * 2) % 7;
        return Fp(v, 7);
    };
    auto phi = makeBicharacter<Fp>(g, [&](int x, int y) {
        auto t = g.tuple(x), u = g.tuple(y);
        return pw(t[0] * u[1] - t[1] * u[0]);
    });
    CHECK(validateBicharacter(phi).ok());

    // properties forced by the laws
    for (int x = 0; x < g.size(); ++x)
        for (int y = 0; y < g.size(); ++y) {
            CHECK(phi(x, y) * phi(y, x) == Fp(1, 7));
            Fp pow(1, 7);
            for (int k = 0; k < g.size(); ++k) pow *= phi(x, y);
            CHECK(pow == Fp(1, 7));  // v^{|G|} = 1
        }
    for (int y = 0; y < g.size(); ++y) CHECK(phi(0, y) == Fp(1, 7));
}

TEST_CASE("bichar eval rejects out-of-range elements") {
    auto super = superBicharacter<Rational>();
    CHECK_THROWS_AS(super(2, 0), ChopfError);
    CHECK_THROWS_AS(super(0, -1), ChopfError);
}
