#pragma once

#include <gmpxx.h>

#include <Eigen/Core>
#include <string>

#include "chopf/common.hpp"

namespace chopf {

using Rational = mpq_class;

/// Element of a prime field GF(p).
///
/// A default-constructed value or one built from a bare integer literal has
/// p == 0 and acts as an unreduced integer; it picks up the modulus of the
/// first moduled operand it is combined with. Mixing two distinct nonzero
/// moduli is a logic error.
struct Fp {
    long long v = 0;
    long long p = 0;

    Fp() = default;
    Fp(long long x) : v(x) {}
    Fp(long long x, long long mod) : v(x), p(mod) { normalize(); }

    void normalize() {
        if (p) {
            v %= p;
            if (v < 0) v += p;
        }
    }

    static long long joinMod(long long a, long long b) {
        if (a && b && a != b) throw ChopfError("GF(p) modulus mismatch");
        return a ? a : b;
    }

    friend Fp operator+(const Fp& a, const Fp& b) { return Fp(a.v + b.v, joinMod(a.p, b.p)); }
    friend Fp operator-(const Fp& a, const Fp& b) { return Fp(a.v - b.v, joinMod(a.p, b.p)); }
    friend Fp operator*(const Fp& a, const Fp& b) { return Fp(a.v * b.v, joinMod(a.p, b.p)); }
    Fp operator-() const { return Fp(-v, p); }
    Fp& operator+=(const Fp& o) { return *this = *this + o; }
    Fp& operator-=(const Fp& o) { return *this = *this - o; }
    Fp& operator*=(const Fp& o) { return *this = *this * o; }

    friend bool operator==(const Fp& a, const Fp& b) {
        long long m = joinMod(a.p, b.p);
        if (!m) return a.v == b.v;
        long long x = a.v % m, y = b.v % m;
        if (x < 0) x += m;
        if (y < 0) y += m;
        return x == y;
    }
    friend bool operator!=(const Fp& a, const Fp& b) { return !(a == b); }

    friend Fp operator/(const Fp& a, const Fp& b);
    Fp& operator/=(const Fp& o) { return *this = *this / o; }
};

inline Fp inverse(const Fp& a) {
    if (!a.p) {
        if (a.v == 1 || a.v == -1) return a;
        throw ChopfError("cannot invert unreduced GF(p) literal " + std::to_string(a.v));
    }
    long long r0 = a.p, r1 = a.v % a.p, s0 = 0, s1 = 1;
    if (r1 < 0) r1 += a.p;
    if (r1 == 0) throw ChopfError("division by zero in GF(" + std::to_string(a.p) + ")");
    while (r1) {
        long long q = r0 / r1;
        long long r2 = r0 - q * r1, s2 = s0 - q * s1;
        r0 = r1; r1 = r2; s0 = s1; s1 = s2;
    }
    if (r0 != 1) throw ChopfError("modulus is not prime: gcd != 1");
    return Fp(s0, a.p);
}

inline Fp operator/(const Fp& a, const Fp& b) { return a * inverse(b); }

inline Rational inverse(const Rational& a) {
    if (a == 0) throw ChopfError("division by zero");
    return Rational(1) / a;
}

/// mpq_class(num, den) does not canonicalize; this does.
inline Rational ratio(long long num, long long den) {
    Rational q(static_cast<long>(num), static_cast<long>(den));
    q.canonicalize();
    return q;
}

template <class K>
bool isZero(const K& a) { return a == K(0); }

inline std::string scalarToString(const Rational& q) { return q.get_str(); }
inline std::string scalarToString(const Fp& a) {
    Fp c = a;
    c.normalize();
    return std::to_string(c.v);
}

/// Describes the base field of an algebra file: rationals or GF(p).
struct FieldSpec {
    bool rational = true;
    long long p = 0;

    static FieldSpec rationals() { return FieldSpec{}; }
    static FieldSpec gf(long long p) {
        if (p < 3) throw ChopfError("GF(p) requires an odd prime >= 3 (characteristic 2 is rejected)");
        for (long long d = 2; d * d <= p; ++d)
            if (p % d == 0) throw ChopfError("GF(p): " + std::to_string(p) + " is not prime");
        return FieldSpec{false, p};
    }
    std::string name() const { return rational ? "rational" : "gf:" + std::to_string(p); }
};

inline Rational parseRational(const std::string& s) {
    mpq_class q;
    if (q.set_str(s, 10) != 0) throw ChopfError("bad rational literal: '" + s + "'");
    q.canonicalize();
    return q;
}

template <class K>
K parseScalar(const std::string& s, const FieldSpec& field);

template <>
inline Rational parseScalar<Rational>(const std::string& s, const FieldSpec&) {
    return parseRational(s);
}

template <>
inline Fp parseScalar<Fp>(const std::string& s, const FieldSpec& field) {
    if (s.find('/') != std::string::npos) {
        auto cut = s.find('/');
        Fp num(std::stoll(s.substr(0, cut)), field.p);
        Fp den(std::stoll(s.substr(cut + 1)), field.p);
        return num / den;
    }
    return Fp(std::stoll(s), field.p);
}

template <class K>
FieldSpec fieldOf(const K&);
template <>
inline FieldSpec fieldOf<Rational>(const Rational&) { return FieldSpec::rationals(); }
template <>
inline FieldSpec fieldOf<Fp>(const Fp& a) { return a.p ? FieldSpec::gf(a.p) : FieldSpec::rationals(); }

}  // namespace chopf

namespace Eigen {

template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
    typedef mpq_class Real;
    typedef mpq_class NonInteger;
    typedef mpq_class Nested;
    static inline Real epsilon() { return 0; }
    static inline Real dummy_precision() { return 0; }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 0,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 6,
        AddCost = 150,
        MulCost = 100
    };
};

template <>
struct NumTraits<chopf::Fp> : GenericNumTraits<chopf::Fp> {
    typedef chopf::Fp Real;
    typedef chopf::Fp NonInteger;
    typedef chopf::Fp Nested;
    static inline Real epsilon() { return chopf::Fp(0); }
    static inline Real dummy_precision() { return chopf::Fp(0); }
    static inline int digits10() { return 0; }
    enum {
        IsInteger = 1,
        IsSigned = 1,
        IsComplex = 0,
        RequireInitialization = 1,
        ReadCost = 1,
        AddCost = 2,
        MulCost = 2
    };
};

}  // namespace Eigen
