// ring.hpp -- exact arithmetic in Z[w], w = exp(i pi/4), w^4 = -1, w^8 = 1.
//
// A RingAmplitude is c0 + c1*w + c2*w^2 + c3*w^3 with arbitrary-precision
// integer coefficients.  This ring contains i = w^2 and sqrt(2) = w - w^3,
// so every amplitude produced by H, P, CNOT and the Paulis (with the
// sqrt(2)-denominators tracked separately) stays exact.
#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <string>

#include <boost/multiprecision/cpp_int.hpp>

namespace dicke {

using BigInt = boost::multiprecision::cpp_int;

// element of Z[sqrt(2)]: a + b*sqrt(2).  |amplitude|^2 lands here.
struct Root2Int {
    BigInt a;
    BigInt b;
    bool operator==(const Root2Int&) const = default;
    double to_double() const;
};

struct RingAmplitude {
    std::array<BigInt, 4> c{};  // c[j] multiplies w^j

    RingAmplitude() = default;
    explicit RingAmplitude(long v) { c[0] = v; }
    static RingAmplitude zero() { return {}; }
    static RingAmplitude one() { return RingAmplitude(1); }
    // w^k for any integer k (k mod 8)
    static RingAmplitude omega(int k);

    bool is_zero() const { return c[0] == 0 && c[1] == 0 && c[2] == 0 && c[3] == 0; }
    bool operator==(const RingAmplitude&) const = default;

    RingAmplitude operator+(const RingAmplitude& o) const;
    RingAmplitude operator-(const RingAmplitude& o) const;
    RingAmplitude operator-() const;
    RingAmplitude operator*(const RingAmplitude& o) const;
    RingAmplitude& operator+=(const RingAmplitude& o);

    // multiply by w^k; the coefficient vector rotates with a sign (w^4 = -1)
    RingAmplitude mul_omega(int k) const;
    // complex conjugate: conj(w) = w^7 = -w^3
    RingAmplitude conj() const;

    // a * conj(a), always of the form p + q*sqrt(2) with p,q integers
    Root2Int abs2() const;

    // sqrt(2) = w - w^3 divides a iff a*(w - w^3) has all-even coefficients;
    // the quotient is that product halved.
    bool divisible_sqrt2() const;
    RingAmplitude div_sqrt2() const;

    std::complex<double> to_complex() const;

    // deterministic serialization used by canonical keys
    void append_key(std::string& out) const;
};

}  // namespace dicke
