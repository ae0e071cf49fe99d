#include "dicke/eigen.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace dicke {

namespace {

double off_diagonal_norm(const std::vector<std::complex<double>>& a, int n) {
    double s = 0.0;
    for (int p = 0; p < n; ++p)
        for (int q = p + 1; q < n; ++q) s += std::norm(a[p * n + q]);
    return std::sqrt(2.0 * s);
}

}  // namespace

std::vector<double> hermitian_eigenvalues(std::vector<std::complex<double>> a, int n) {
    if (n <= 0) throw std::invalid_argument("hermitian_eigenvalues: n must be positive");
    if (a.size() != static_cast<std::size_t>(n) * n)
        throw std::invalid_argument("hermitian_eigenvalues: size mismatch");

    double frob = 0.0;
    for (const auto& v : a) frob += std::norm(v);
    frob = std::sqrt(frob);
    const double tol = 1e-12 * std::max(1.0, frob);
    const int max_sweeps = 100;

    int sweep = 0;
    while (off_diagonal_norm(a, n) > tol) {
        if (++sweep > max_sweeps)
            throw std::runtime_error("hermitian_eigenvalues: no convergence in 100 sweeps");
        for (int p = 0; p < n; ++p) {
            for (int q = p + 1; q < n; ++q) {
                std::complex<double> apq = a[p * n + q];
                double mag = std::abs(apq);
                if (mag == 0.0) continue;
                double app = a[p * n + p].real();
                double aqq = a[q * n + q].real();
                // zero a_pq with the unitary [[c, -s e^{i phi}], [s e^{-i phi}, c]]
                // where e^{i phi} = a_pq / |a_pq| and tan(theta) = t solves
                // t^2 + 2 tau t - 1 = 0, tau = (app - aqq) / (2 |a_pq|).
                std::complex<double> phase = apq / mag;
                double tau = (app - aqq) / (2.0 * mag);
                double t = (tau >= 0.0 ? 1.0 : -1.0) / (std::abs(tau) + std::sqrt(1.0 + tau * tau));
                double c = 1.0 / std::sqrt(1.0 + t * t);
                double s = t * c;

                for (int r = 0; r < n; ++r) {
                    std::complex<double> arp = a[r * n + p];
                    std::complex<double> arq = a[r * n + q];
                    a[r * n + p] = c * arp + s * std::conj(phase) * arq;
                    a[r * n + q] = -s * phase * arp + c * arq;
                }
                for (int r = 0; r < n; ++r) {
                    a[p * n + r] = std::conj(a[r * n + p]);
                    a[q * n + r] = std::conj(a[r * n + q]);
                }
                a[p * n + p] = {c * c * app + 2.0 * c * s * mag + s * s * aqq, 0.0};
                a[q * n + q] = {s * s * app - 2.0 * c * s * mag + c * c * aqq, 0.0};
                a[p * n + q] = 0.0;
                a[q * n + p] = 0.0;
            }
        }
    }

    std::vector<double> ev(n);
    for (int i = 0; i < n; ++i) ev[i] = a[i * n + i].real();
    std::sort(ev.rbegin(), ev.rend());
    return ev;
}

}  // namespace dicke
