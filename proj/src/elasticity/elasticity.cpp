#include "esbp/elasticity.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <random>

namespace esbp {

Tensor4 StiffnessField::at(int p) const
{
    Tensor4 c;
    for (int k = 0; k < 16; ++k)
        c[k] = C[k][p];
    return c;
}

void StiffnessField::set(int p, const Tensor4& c)
{
    for (int k = 0; k < 16; ++k)
        C[k][p] = c[k];
}

void StiffnessField::resize(int n)
{
    for (auto& v : C)
        v.assign(n, 0.0);
    rho.assign(n, 0.0);
}

Tensor4 TransformedStiffness::at(int p) const
{
    Tensor4 t;
    for (int k = 0; k < 16; ++k)
        t[k] = c[k][p];
    return t;
}

Tensor4 isotropic_stiffness(double lambda, double mu)
{
    if (mu < 0 || lambda + mu < 0)
        throw MaterialError("isotropic stiffness is not positive semidefinite");
    Tensor4 C{};
    auto d = [](int a, int b) { return a == b ? 1.0 : 0.0; };
    for (int I = 0; I < 2; ++I)
        for (int J = 0; J < 2; ++J)
            for (int K = 0; K < 2; ++K)
                for (int L = 0; L < 2; ++L)
                    C[cidx(I, J, K, L)] = lambda * d(I, J) * d(K, L) + mu * (d(I, K) * d(J, L) + d(I, L) * d(J, K));
    return C;
}

StiffnessField constant_field(const Tensor4& C, double rho, int n)
{
    StiffnessField f;
    f.resize(n);
    for (int p = 0; p < n; ++p) {
        f.set(p, C);
        f.rho[p] = rho;
    }
    return f;
}

Tensor4 mms_stiffness(double X1, double X2)
{
    Tensor4 C;
    for (int I = 1; I <= 2; ++I)
        for (int J = 1; J <= 2; ++J)
            for (int K = 1; K <= 2; ++K)
                for (int L = 1; L <= 2; ++L) {
                    double v;
                    if (I == K && J == L)
                        v = 8 + std::sin(I * X1 + J * X2) + 0.5 * std::sin(K * X1 - L * X2);
                    else
                        v = (std::sin(I * X1 + J * X2) + std::sin(K * X1 + L * X2)) / 8 +
                            (std::sin(I * X1 - J * X2) + std::sin(K * X1 - L * X2)) / 16;
                    C[cidx(I - 1, J - 1, K - 1, L - 1)] = v;
                }
    return C;
}

std::array<Tensor4, 2> mms_stiffness_grad(double X1, double X2)
{
    std::array<Tensor4, 2> G;
    for (int I = 1; I <= 2; ++I)
        for (int J = 1; J <= 2; ++J)
            for (int K = 1; K <= 2; ++K)
                for (int L = 1; L <= 2; ++L) {
                    double g1, g2;
                    if (I == K && J == L) {
                        double a = std::cos(I * X1 + J * X2), b = 0.5 * std::cos(K * X1 - L * X2);
                        g1 = I * a + K * b;
                        g2 = J * a - L * b;
                    } else {
                        double a = std::cos(I * X1 + J * X2) / 8, b = std::cos(K * X1 + L * X2) / 8;
                        double c = std::cos(I * X1 - J * X2) / 16, d = std::cos(K * X1 - L * X2) / 16;
                        g1 = I * a + K * b + I * c + K * d;
                        g2 = J * a + L * b - J * c - L * d;
                    }
                    G[0][cidx(I - 1, J - 1, K - 1, L - 1)] = g1;
                    G[1][cidx(I - 1, J - 1, K - 1, L - 1)] = g2;
                }
    return G;
}

double mms_density(double X1, double X2) { return 2 + std::sin((X1 + X2) / 2); }

StiffnessField mms_material(const std::vector<double>& X1, const std::vector<double>& X2)
{
    StiffnessField f;
    int n = int(X1.size());
    f.resize(n);
    for (int p = 0; p < n; ++p) {
        f.set(p, mms_stiffness(X1[p], X2[p]));
        f.rho[p] = mms_density(X1[p], X2[p]);
    }
    return f;
}

StiffnessField random_stiffness(std::uint64_t seed, int n)
{
    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    StiffnessField f;
    f.resize(n);
    for (int p = 0; p < n; ++p) {
        f.rho[p] = 1 + U(rng);
        // pairs (IJ) -> a = 2I + J; symmetric 4x4 in pair space
        Tensor4 C{};
        for (int a = 0; a < 4; ++a)
            for (int b = a; b < 4; ++b) {
                double v = U(rng) + (a == b ? 4.0 : 0.0);
                C[a * 4 + b] = C[b * 4 + a] = v;
            }
        f.set(p, C);
    }
    return f;
}

Tensor4 transform_point(const Tensor4& C, const std::array<double, 4>& F, double J)
{
    Tensor4 c{};
    for (int i = 0; i < 2; ++i)
        for (int j = 0; j < 2; ++j)
            for (int k = 0; k < 2; ++k)
                for (int l = 0; l < 2; ++l) {
                    double s = 0;
                    for (int I = 0; I < 2; ++I)
                        for (int K = 0; K < 2; ++K)
                            s += F[I * 2 + i] * C[cidx(I, j, K, l)] * F[K * 2 + k];
                    c[cidx(i, j, k, l)] = J * s;
                }
    return c;
}

TransformedStiffness transform_stiffness(const StiffnessField& C, const BlockMetrics& m)
{
    const int n = C.size();
    if (int(m.J.size()) != n)
        throw std::invalid_argument("transform_stiffness: size mismatch");
    TransformedStiffness t;
    for (auto& v : t.c)
        v.resize(n);
    t.varrho.resize(n);
    for (int p = 0; p < n; ++p) {
        if (!(m.J[p] > 0))
            throw MetricError("non-positive Jacobian", p % m.n1, p / m.n1);
        Tensor4 c = transform_point(C.at(p), {m.F11[p], m.F12[p], m.F21[p], m.F22[p]}, m.J[p]);
        for (int k = 0; k < 16; ++k)
            t.c[k][p] = c[k];
        t.varrho[p] = m.J[p] * C.rho[p];
    }
    return t;
}

bool major_symmetric(const Tensor4& c, double tol)
{
    for (int a = 0; a < 4; ++a)
        for (int b = 0; b < a; ++b)
            if (std::abs(c[a * 4 + b] - c[b * 4 + a]) > tol)
                return false;
    return true;
}

std::array<double, 2> christoffel_speeds(const Tensor4& C, double rho, Vec2 xi)
{
    if (!(rho > 0))
        throw MaterialError("non-positive density");
    double G[2][2];
    for (int J = 0; J < 2; ++J)
        for (int L = 0; L < 2; ++L) {
            double s = 0;
            for (int I = 0; I < 2; ++I)
                for (int K = 0; K < 2; ++K)
                    s += xi[I] * C[cidx(I, J, K, L)] * xi[K];
            G[J][L] = s / rho;
        }
    double a = G[0][0], d = G[1][1], b = 0.5 * (G[0][1] + G[1][0]);
    double mid = 0.5 * (a + d), rad = std::hypot(0.5 * (a - d), b);
    double lo = mid - rad, hi = mid + rad;
    double scale = std::max(std::abs(lo), std::abs(hi));
    if (lo < -1e-10 * std::max(scale, 1e-300))
        throw MaterialError("non-physical material: negative Christoffel eigenvalue");
    return {std::sqrt(std::max(lo, 0.0)), std::sqrt(std::max(hi, 0.0))};
}

double max_wave_speed_at(const TransformedStiffness& c, int p, int n_dirs)
{
    if (n_dirs < 8)
        throw std::invalid_argument("max_wave_speed: need at least 8 directions");
    Tensor4 cp = c.at(p);
    double v = 0;
    for (int k = 0; k < n_dirs; ++k) {
        double th = 2 * std::numbers::pi * k / n_dirs;
        v = std::max(v, christoffel_speeds(cp, c.varrho[p], {std::cos(th), std::sin(th)})[1]);
    }
    return v;
}

double max_wave_speed(const TransformedStiffness& c, int n_dirs)
{
    double v = 0;
    for (int p = 0; p < c.size(); ++p)
        v = std::max(v, max_wave_speed_at(c, p, n_dirs));
    return v;
}

std::vector<SlownessPoint> slowness_surface(const Tensor4& C, double rho, int n_dirs)
{
    if (n_dirs < 1)
        throw std::invalid_argument("slowness_surface: need at least one direction");
    std::vector<SlownessPoint> out;
    for (int branch = 0; branch < 2; ++branch)
        for (int k = 0; k < n_dirs; ++k) {
            double th = 2 * std::numbers::pi * k / n_dirs;
            Vec2 xi{std::cos(th), std::sin(th)};
            if (k * 4 % n_dirs == 0) {
                // exact axes
                int q = k * 4 / n_dirs;
                xi = q == 0 ? Vec2{1, 0} : q == 1 ? Vec2{0, 1} : q == 2 ? Vec2{-1, 0} : Vec2{0, -1};
            }
            double v = christoffel_speeds(C, rho, xi)[branch];
            if (!(v > 0))
                throw MaterialError("zero wave speed, slowness undefined");
            out.push_back({branch, th, xi[0] / v, xi[1] / v});
        }
    return out;
}

}
