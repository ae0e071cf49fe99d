#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "dicke/ring.hpp"

using namespace dicke;

namespace {

std::mt19937 rng(12345);

RingAmplitude random_amp(int span = 9) {
    std::uniform_int_distribution<int> d(-span, span);
    RingAmplitude a;
    for (int j = 0; j < 4; ++j) a.c[j] = d(rng);
    return a;
}

double cabs2(const std::complex<double>& z) { return std::norm(z); }

}  // namespace

TEST_CASE("omega powers") {
    RingAmplitude w = RingAmplitude::omega(1);
    RingAmplitude p = RingAmplitude::one();
    for (int k = 0; k < 16; ++k) {
        CHECK(p == RingAmplitude::omega(k));
        p = p * w;
    }
    CHECK(RingAmplitude::omega(4) == -RingAmplitude::one());
    CHECK(RingAmplitude::omega(8) == RingAmplitude::one());
    CHECK(RingAmplitude::omega(-1) == RingAmplitude::omega(7));
    // i = w^2
    std::complex<double> i = RingAmplitude::omega(2).to_complex();
    CHECK(std::abs(i.real()) < 1e-15);
    CHECK(i.imag() == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("mul_omega is multiplication by omega^k") {
    for (int t = 0; t < 50; ++t) {
        RingAmplitude a = random_amp();
        for (int k = 0; k < 8; ++k)
            CHECK(a.mul_omega(k) == a * RingAmplitude::omega(k));
    }
}

TEST_CASE("ring operations match complex arithmetic") {
    for (int t = 0; t < 100; ++t) {
        RingAmplitude a = random_amp(), b = random_amp();
        auto za = a.to_complex(), zb = b.to_complex();
        CHECK(std::abs((a + b).to_complex() - (za + zb)) < 1e-10);
        CHECK(std::abs((a - b).to_complex() - (za - zb)) < 1e-10);
        CHECK(std::abs((a * b).to_complex() - (za * zb)) < 1e-9);
        CHECK(std::abs((-a).to_complex() + za) < 1e-12);
        CHECK(std::abs(a.conj().to_complex() - std::conj(za)) < 1e-12);
    }
}

TEST_CASE("conjugation is an involution and a ring homomorphism") {
    for (int t = 0; t < 50; ++t) {
        RingAmplitude a = random_amp(), b = random_amp();
        CHECK(a.conj().conj() == a);
        CHECK((a * b).conj() == a.conj() * b.conj());
        CHECK((a + b).conj() == a.conj() + b.conj());
    }
}

TEST_CASE("abs2 is exact |a|^2 in Z[sqrt 2]") {
    for (int t = 0; t < 100; ++t) {
        RingAmplitude a = random_amp();
        Root2Int r = a.abs2();
        CHECK(r.to_double() == doctest::Approx(cabs2(a.to_complex())).epsilon(1e-12));
    }
    CHECK(RingAmplitude::omega(3).abs2() == Root2Int{1, 0});
    CHECK(RingAmplitude::zero().abs2() == Root2Int{0, 0});
}

TEST_CASE("sqrt2 element squares to 2") {
    RingAmplitude r2 = RingAmplitude::omega(1) - RingAmplitude::omega(3);
    CHECK(r2 * r2 == RingAmplitude(2));
    CHECK(r2.to_complex().real() == doctest::Approx(std::sqrt(2.0)).epsilon(1e-15));
}

TEST_CASE("sqrt2 divisibility round-trips") {
    RingAmplitude r2 = RingAmplitude::omega(1) - RingAmplitude::omega(3);
    for (int t = 0; t < 100; ++t) {
        RingAmplitude a = random_amp();
        RingAmplitude m = a * r2;
        CHECK(m.divisible_sqrt2());
        CHECK(m.div_sqrt2() == a);
    }
    // 1 is not divisible by sqrt 2
    CHECK_FALSE(RingAmplitude::one().divisible_sqrt2());
    CHECK_FALSE(RingAmplitude::omega(2).divisible_sqrt2());
}

TEST_CASE("key serialization separates distinct elements") {
    std::string k1, k2, k3;
    random_amp().append_key(k1);
    RingAmplitude a = random_amp(), b = a;
    k2.clear();
    a.append_key(k2);
    b.append_key(k3);
    CHECK(k2 == k3);
    RingAmplitude c = a + RingAmplitude::one();
    std::string k4;
    c.append_key(k4);
    CHECK(k2 != k4);
}
