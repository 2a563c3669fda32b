#pragma once

#include "esbp/elasticity.hpp"
#include "esbp/mesh.hpp"

#include <functional>
#include <vector>

namespace esbp {

enum class Stencil { Narrow, Wide };

struct FacePoint {
    int block, face, t, p;
    double X1, X2, n1, n2, Jhat;
};

using FaceVector = std::function<Vec2(const FacePoint&, double)>;
using FaceMatrix = std::function<std::array<double, 4>(const FacePoint&)>;  // row-major, symmetric
// fills a global force-density field (same layout as u) at time t
using ForcingFn = std::function<void(double, std::vector<double>&)>;

struct FaceSat {
    double beta = 1;
    FaceVector g;  // traction data (Robin) or displacement data
    FaceMatrix U;  // Robin only
};

struct InterfaceData {
    double beta = 1;
    FaceVector V, Theta;  // evaluated at the points of side a
};

struct EnergyBreakdown {
    double kinetic = 0, strain = 0, remainder = 0, correction = 0, total = 0;
};

struct SatError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

class ElasticOperator {
public:
    ElasticOperator(const Domain& dom, const std::vector<StiffnessField>& C, Stencil stencil);

    const Domain& domain() const { return *dom_; }
    Stencil stencil() const { return stencil_; }
    const StiffnessField& physical(int b) const { return C_[b]; }
    const TransformedStiffness& material(int b) const { return c_[b]; }
    const std::vector<double>& weights(int b) const { return Hw_[b]; }

    void set_face(int b, int f, FaceSat sat);
    const FaceSat& face(int b, int f) const { return faces_[b][f]; }
    void set_interface(int k, InterfaceData d);
    const InterfaceData& interface(int k) const { return ifaces_[k]; }
    void set_beta(double beta);

    FacePoint face_point(int b, int f, int t) const;

    // z = A u, A the JH-weighted total operator (volume + SATs); data terms only if with_data
    void apply(const std::vector<double>& u, std::vector<double>& z, double t, bool with_data) const;
    // same thing, serial, straight from the 1D operators
    void apply_reference(const std::vector<double>& u, std::vector<double>& z, double t, bool with_data) const;
    // H-weighted volume part only: H sum_ik D_ik(c) u
    void apply_volume(const std::vector<double>& u, std::vector<double>& z) const;

    // acceleration; forcing is a physical force density
    void rhs(const std::vector<double>& u, std::vector<double>& acc, double t, const ForcingFn* forcing) const;

    // physical traction T u on a face, both components
    void traction(int b, int f, const std::vector<double>& u, std::vector<double>& t1, std::vector<double>& t2) const;
    // the SAT contribution of one boundary face to the acceleration density rho*u_tt (i.e. divided by JH)
    void face_sat(int b, int f, const std::vector<double>& u, std::vector<double>& out, double t) const;
    // both sides of an interface, same convention
    void interface_sat(int k, const std::vector<double>& u, std::vector<double>& out, double t) const;

    // divide each block entry by JH
    void scale_to_density(std::vector<double>& z) const;

    EnergyBreakdown energy(const std::vector<double>& u, const std::vector<double>& v) const;

    // G[b] holds D_k u_L at (k * 2 + L) * npts + p
    using Grad = std::vector<std::vector<double>>;
    void gradients(const std::vector<double>& u, Grad& G) const;
    void gradients_reference(const std::vector<double>& u, Grad& G) const;

private:
    struct Band {
        std::vector<int> lo, len, off;
        int nnz = 0;
    };
    struct BlockData {
        std::array<Band, 2> band;
        // narrow D2 weights per direction and (J, L)
        std::array<std::array<std::vector<double>, 4>, 2> w2;
    };

    struct Filter {
        int block = -1, face = -1, iface = -1;
    };
    double traction_hat(int b, int f, int t, const Grad& G, int J) const;
    void fluxes(int b, const Grad& G, std::vector<double>& flux) const;
    void add_transpose(int b, int f, const std::array<std::vector<double>, 4>& phi, std::vector<double>& z) const;
    void add_sats(const std::vector<double>& u, const Grad& G, std::vector<double>& z, double t, bool with_data,
                  const Filter& only) const;
    void volume_block(int b, const std::vector<double>& u, const Grad& G, std::vector<double>& z) const;
    void volume_block_reference(int b, const std::vector<double>& u, const Grad& G, std::vector<double>& z) const;

    const Domain* dom_;
    Stencil stencil_;
    std::vector<StiffnessField> C_;
    std::vector<TransformedStiffness> c_;
    std::vector<std::vector<double>> Hw_;
    std::vector<std::array<FaceSat, 4>> faces_;
    std::vector<InterfaceData> ifaces_;
    std::vector<BlockData> bd_;
};

struct DenseSystem {
    Dense A;
    std::vector<double> Hphys;  // JH per unknown
    std::vector<double> P;      // rho per unknown
};

struct SizeCapError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// the volume operator alone, as an acceleration density
std::vector<double> elastic_apply(const ElasticOperator& op, const std::vector<double>& u);

DenseSystem assemble_dense(const ElasticOperator& op, std::size_t cap = 40000);

}
