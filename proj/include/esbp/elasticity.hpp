#pragma once

#include "esbp/mesh.hpp"

#include <array>
#include <cstdint>
#include <vector>

namespace esbp {

// C_{IJKL} with zero-based indices
constexpr int cidx(int I, int J, int K, int L) { return ((I * 2 + J) * 2 + K) * 2 + L; }

using Tensor4 = std::array<double, 16>;

// per-point stiffness, one array per component (structure of arrays)
struct StiffnessField {
    std::array<std::vector<double>, 16> C;
    std::vector<double> rho;
    int size() const { return int(rho.size()); }
    Tensor4 at(int p) const;
    void set(int p, const Tensor4& c);
    void resize(int n);
};

struct TransformedStiffness {
    std::array<std::vector<double>, 16> c;
    std::vector<double> varrho;
    int size() const { return int(varrho.size()); }
    Tensor4 at(int p) const;
};

struct MaterialError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Tensor4 isotropic_stiffness(double lambda, double mu);
StiffnessField constant_field(const Tensor4& C, double rho, int n);

// manufactured-solution material, pointwise
Tensor4 mms_stiffness(double X1, double X2);
double mms_density(double X1, double X2);
// d/dX_1 and d/dX_2 of mms_stiffness
std::array<Tensor4, 2> mms_stiffness_grad(double X1, double X2);
StiffnessField mms_material(const std::vector<double>& X1, const std::vector<double>& X2);

StiffnessField random_stiffness(std::uint64_t seed, int n);

TransformedStiffness transform_stiffness(const StiffnessField& C, const BlockMetrics& m);
Tensor4 transform_point(const Tensor4& C, const std::array<double, 4>& F, double J);

bool major_symmetric(const Tensor4& c, double tol);

// ascending speeds; symmetric part of the Christoffel matrix must be PSD
std::array<double, 2> christoffel_speeds(const Tensor4& C, double rho, Vec2 xi);
double max_wave_speed(const TransformedStiffness& c, int n_dirs = 360);
double max_wave_speed_at(const TransformedStiffness& c, int p, int n_dirs = 360);

struct SlownessPoint {
    int branch;  // 0 quasi-S, 1 quasi-P
    double angle, s1, s2;
};
std::vector<SlownessPoint> slowness_surface(const Tensor4& C, double rho, int n_dirs);

}
