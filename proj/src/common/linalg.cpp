#include "esbp/linalg.hpp"

#include <cmath>
#include <lapacke.h>
#include <random>
#include <stdexcept>
#include <string>

namespace esbp {

std::vector<double> sym_eigenvalues(std::vector<double> a, int n)
{
    if (a.size() != std::size_t(n) * n)
        throw std::invalid_argument("sym_eigenvalues: size mismatch");
    std::vector<double> w(n);
    if (n == 0)
        return w;
    // row-major upper == column-major lower
    int info = LAPACKE_dsyevd(LAPACK_COL_MAJOR, 'N', 'L', n, a.data(), n, w.data());
    if (info != 0)
        throw std::runtime_error("dsyevd failed, info " + std::to_string(info));
    return w;
}

bool positive_definite(std::vector<double> a, int n)
{
    if (a.size() != std::size_t(n) * n)
        throw std::invalid_argument("positive_definite: size mismatch");
    if (n == 0)
        return true;
    int info = LAPACKE_dpotrf(LAPACK_COL_MAJOR, 'L', n, a.data(), n);
    if (info < 0)
        throw std::runtime_error("dpotrf failed, info " + std::to_string(info));
    return info == 0;
}

double spectral_radius_estimate(const std::vector<double>& a, int n, int iters, unsigned seed)
{
    if (a.size() != std::size_t(n) * n)
        throw std::invalid_argument("spectral_radius_estimate: size mismatch");
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> x(n), y(n);
    for (auto& v : x)
        v = g(rng);
    double lam = 0;
    for (int it = 0; it < iters; ++it) {
        double nx = 0;
        for (double v : x)
            nx += v * v;
        nx = std::sqrt(nx);
        if (nx == 0)
            return 0;
        for (auto& v : x)
            v /= nx;
#pragma omp parallel for schedule(static)
        for (int i = 0; i < n; ++i) {
            const double* r = a.data() + std::size_t(i) * n;
            double s = 0;
            for (int j = 0; j < n; ++j)
                s += r[j] * x[j];
            y[i] = s;
        }
        double ny = 0;
        for (double v : y)
            ny += v * v;
        lam = std::sqrt(ny);
        x.swap(y);
    }
    return lam;
}

}
