#pragma once

#include "esbp/timestepper.hpp"

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace esbp {

enum class MMSVariant { Anisotropic, Isotropic };

struct MMSProblem {
    MMSVariant variant = MMSVariant::Anisotropic;
    double half_width = 1.0;
    double hole_radius = 0.3;
    double final_time = 1.0;
    double cfl = 0.5;
    double beta = 1.0;
};

// exact displacement, velocity, and gradient du_J/dX_I stored at I * 2 + J
Vec2 mms_displacement(double X1, double X2, double t);
Vec2 mms_velocity(double X1, double X2, double t);
std::array<double, 4> mms_displacement_grad(double X1, double X2, double t);

Tensor4 mms_problem_stiffness(MMSVariant v, double X1, double X2);
double mms_problem_density(MMSVariant v, double X1, double X2);

// closed-form f = rho u_tt - d_I C_IJKL d_K u_L
Vec2 mms_forcing(MMSVariant v, double X1, double X2, double t);
// isotropic lambda = mu = 1, rho = 1, by the (lambda + mu) grad div + mu laplacian route
Vec2 mms_forcing_isotropic(double X1, double X2, double t);
// physical traction n_I C_IJKL d_K u_L of the exact solution
Vec2 mms_traction(MMSVariant v, double X1, double X2, double n1, double n2, double t);

constexpr double mms_wavelength() { return 6.283185307179586 / 3.605551275463989; }

struct MMSSetup {
    std::unique_ptr<Domain> dom;
    std::unique_ptr<ElasticOperator> op;
    ForcingFn forcing;
    double ppwl = 0;
};

MMSSetup mms_setup(const MMSProblem& pb, int order, int h_inv, Stencil stencil);
void mms_fill(const Domain& dom, double t, State& s);

double l2_error(const Domain& dom, const std::vector<double>& numeric, const std::vector<double>& exact);

struct MMSResult {
    double error = 0;
    double dt = 0;
    int steps = 0;
    double ppwl = 0;
};

MMSResult run_mms(const MMSProblem& pb, int order, int h_inv, Stencil stencil);

struct ConvergenceRow {
    int order = 0;
    Stencil stencil = Stencil::Narrow;
    int h_inv = 0;
    double ppwl = 0;
    double error = 0;
    double rate = 0;  // NaN on the coarsest row
    bool failed = false;
    std::string message;
};

struct ConvergenceReport {
    std::vector<ConvergenceRow> rows;
    double average_rate(int order) const;
    double lsq_rate(int order) const;
};

ConvergenceReport run_convergence(const MMSProblem& pb, const std::vector<int>& orders,
                                  const std::vector<int>& resolutions, Stencil stencil);

void write_convergence_csv(const ConvergenceReport& r, const std::string& path);

enum class AuditBoundary { Traction, Displacement, Mixed };

struct AuditConfig {
    int order = 4;
    Stencil stencil = Stencil::Narrow;
    std::uint64_t seed = 7;
    int n = 36;
    bool reversed = false;
    AuditBoundary boundary = AuditBoundary::Mixed;
    double beta = 1.0;
    std::size_t cap = 40000;
    bool eigenvalues = true;
    // Cholesky of -A + 1e-10 rho I, rho a power-iteration lower bound of the spectral radius
    bool certificate = false;
};

struct AuditReport {
    AuditConfig config;
    std::size_t unknowns = 0;
    double asymmetry_rel = 0;
    double max_eig = 0;          // of hA
    double spectral_radius = 0;  // of hA
    double max_eig_scaled = 0;   // max_eig / spectral_radius
    std::vector<double> top_eigs;
    bool certified = false;
    double radius_lower = 0;
    double assemble_seconds = 0, eig_seconds = 0, cert_seconds = 0;
    bool symmetric() const { return asymmetry_rel <= 1e-13; }
    bool semidefinite() const
    {
        return (!config.eigenvalues || max_eig_scaled <= 1e-10) && (!config.certificate || certified);
    }
};

std::string to_string(AuditBoundary b);
std::string to_string(Stencil s);

AuditReport audit_self_adjointness(const AuditConfig& cfg);
void write_audit_csv(const std::vector<AuditReport>& r, const std::string& path);

}
