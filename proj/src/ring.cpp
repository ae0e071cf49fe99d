#include "dicke/ring.hpp"

#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {
const double SQRT1_2 = 0.7071067811865475244;
}

double Root2Int::to_double() const {
    return a.convert_to<double>() + b.convert_to<double>() * 1.4142135623730950488;
}

RingAmplitude RingAmplitude::omega(int k) {
    return one().mul_omega(k);
}

RingAmplitude RingAmplitude::operator+(const RingAmplitude& o) const {
    RingAmplitude r;
    for (int j = 0; j < 4; ++j) r.c[j] = c[j] + o.c[j];
    return r;
}

RingAmplitude RingAmplitude::operator-(const RingAmplitude& o) const {
    RingAmplitude r;
    for (int j = 0; j < 4; ++j) r.c[j] = c[j] - o.c[j];
    return r;
}

RingAmplitude RingAmplitude::operator-() const {
    RingAmplitude r;
    for (int j = 0; j < 4; ++j) r.c[j] = -c[j];
    return r;
}

RingAmplitude& RingAmplitude::operator+=(const RingAmplitude& o) {
    for (int j = 0; j < 4; ++j) c[j] += o.c[j];
    return *this;
}

RingAmplitude RingAmplitude::operator*(const RingAmplitude& o) const {
    // w^(j+k) folds back with a sign flip once j+k >= 4
    RingAmplitude r;
    for (int j = 0; j < 4; ++j) {
        if (c[j] == 0) continue;
        for (int k = 0; k < 4; ++k) {
            if (o.c[k] == 0) continue;
            int e = j + k;
            if (e < 4)
                r.c[e] += c[j] * o.c[k];
            else
                r.c[e - 4] -= c[j] * o.c[k];
        }
    }
    return r;
}

RingAmplitude RingAmplitude::mul_omega(int k) const {
    k = ((k % 8) + 8) % 8;
    RingAmplitude r = *this;
    for (int s = 0; s < k; ++s) {
        // w * (c0 + c1 w + c2 w^2 + c3 w^3) = -c3 + c0 w + c1 w^2 + c2 w^3
        RingAmplitude t;
        t.c[0] = -r.c[3];
        t.c[1] = r.c[0];
        t.c[2] = r.c[1];
        t.c[3] = r.c[2];
        r = t;
    }
    return r;
}

RingAmplitude RingAmplitude::conj() const {
    RingAmplitude r;
    r.c[0] = c[0];
    r.c[1] = -c[3];
    r.c[2] = -c[2];
    r.c[3] = -c[1];
    return r;
}

Root2Int RingAmplitude::abs2() const {
    RingAmplitude p = (*this) * conj();
    // real elements of Z[w] have the shape a + b*(w - w^3)
    if (!(p.c[2] == 0 && p.c[1] == -p.c[3]))
        throw std::logic_error("abs2: product is not a real ring element");
    return Root2Int{p.c[0], p.c[1]};
}

bool RingAmplitude::divisible_sqrt2() const {
    RingAmplitude t = (*this) * (omega(1) - omega(3));
    for (int j = 0; j < 4; ++j)
        if (t.c[j] % 2 != 0) return false;
    return true;
}

RingAmplitude RingAmplitude::div_sqrt2() const {
    RingAmplitude t = (*this) * (omega(1) - omega(3));
    for (int j = 0; j < 4; ++j) {
        if (t.c[j] % 2 != 0) throw std::logic_error("div_sqrt2: not divisible");
        t.c[j] /= 2;
    }
    return t;
}

std::complex<double> RingAmplitude::to_complex() const {
    double c0 = c[0].convert_to<double>();
    double c1 = c[1].convert_to<double>();
    double c2 = c[2].convert_to<double>();
    double c3 = c[3].convert_to<double>();
    return {c0 + (c1 - c3) * SQRT1_2, c2 + (c1 + c3) * SQRT1_2};
}

void RingAmplitude::append_key(std::string& out) const {
    for (int j = 0; j < 4; ++j) {
        out += c[j].str();
        out += (j == 3) ? ';' : ',';
    }
}

}  // namespace dicke
