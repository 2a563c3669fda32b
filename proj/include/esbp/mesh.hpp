#pragma once

#include "esbp/sbp1d.hpp"

#include <array>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

namespace esbp {

using Vec2 = std::array<double, 2>;
using Curve = std::function<Vec2(double)>;

struct Mapping {
    std::string kind;
    std::function<Vec2(double, double)> eval;
    // optional analytic A_{iI} = dX_I/dx_i as {A11, A12, A21, A22}
    std::function<std::array<double, 4>(double, double)> grad;
};

Mapping identity_map();
Mapping affine_map(double a11, double a12, double a21, double a22, double b1, double b2);
Mapping annulus_map(double r0, double r1, double th0, double th1);
// left: x1 = 0 (parameter x2), right: x1 = 1, bottom: x2 = 0 (parameter x1), top: x2 = 1
Mapping transfinite_map(Curve left, Curve right, Curve bottom, Curve top);

struct BlockGrid {
    int n1 = 0, n2 = 0;
    double h1 = 0, h2 = 0;
    std::vector<double> X1, X2;  // p = i + n1 * j
    Mapping map;
    int npts() const { return n1 * n2; }
};

BlockGrid build_block(const Mapping& mapping, int n1, int n2);

// faces: 0 x1=0, 1 x1=1, 2 x2=0, 3 x2=1
inline int face_dir(int f) { return f / 2; }
inline double face_nu(int f) { return f % 2 ? 1.0 : -1.0; }
inline int face_count(int n1, int n2, int f) { return f < 2 ? n2 : n1; }
inline int face_node(int n1, int n2, int f, int t)
{
    switch (f) {
    case 0: return n1 * t;
    case 1: return n1 - 1 + n1 * t;
    case 2: return t;
    default: return t + n1 * (n2 - 1);
    }
}

struct FaceMetrics {
    std::vector<double> Jhat, n1, n2;
};

struct BlockMetrics {
    int n1 = 0, n2 = 0;
    std::vector<double> A11, A12, A21, A22;  // A_{iI} = d_i X_I
    std::vector<double> F11, F12, F21, F22;  // F_{Ii}
    std::vector<double> J;
    std::array<FaceMetrics, 4> faces;
};

struct MetricError : std::runtime_error {
    int i, j;
    MetricError(const std::string& what, int i_, int j_) : std::runtime_error(what), i(i_), j(j_) {}
};

BlockMetrics compute_metrics(const BlockGrid& block, const OperatorSet1D& op1, const OperatorSet1D& op2);
// metrics from the analytic gradient of the mapping
BlockMetrics analytic_metrics(const BlockGrid& block);

enum class FaceKind { Robin, Displacement, Interface };

struct FaceTag {
    FaceKind kind = FaceKind::Robin;
    std::string label;
};

struct InterfaceSpec {
    int block_a, face_a, block_b, face_b;
};

struct Interface {
    int a, fa, b, fb;
    bool reversed;
    int partner_index(int t, int n) const { return reversed ? n - 1 - t : t; }
};

struct Block {
    BlockGrid grid;
    OperatorSet1D op1, op2;
    BlockMetrics metrics;
    std::array<FaceTag, 4> tags;
    std::array<int, 4> iface{-1, -1, -1, -1};  // index into Domain::interfaces
    std::size_t offset = 0;                     // start of this block in a global field
    int npts() const { return grid.npts(); }
    const OperatorSet1D& op(int dir) const { return dir == 0 ? op1 : op2; }
    int n(int dir) const { return dir == 0 ? grid.n1 : grid.n2; }
};

struct Domain {
    int order = 0;
    bool fully_compatible = true;
    std::vector<Block> blocks;
    std::vector<Interface> interfaces;
    double diameter = 0;
    std::size_t size = 0;  // two components per point, all blocks
    double* comp(std::vector<double>& u, int b, int J) const { return u.data() + blocks[b].offset + J * blocks[b].npts(); }
    const double* comp(const std::vector<double>& u, int b, int J) const
    {
        return u.data() + blocks[b].offset + J * blocks[b].npts();
    }
};

struct DomainError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

Domain assemble_domain(std::vector<BlockGrid> grids, const std::vector<std::array<FaceTag, 4>>& tags,
                       const std::vector<InterfaceSpec>& interfaces, int order, bool fully_compatible = true,
                       bool exact_metrics = false);

struct MultiblockLayout {
    std::vector<BlockGrid> grids;
    std::vector<std::array<FaceTag, 4>> tags;
    std::vector<InterfaceSpec> interfaces;
};

// Square [-a, a]^2 with a circular hole of radius r0, four blocks; x1 runs from the hole outward.
MultiblockLayout ogrid(double half_width, double hole_radius, int n, FaceKind hole, FaceKind outer);
// Two curvilinear blocks side by side on a warped [0,2]x[0,1]; the second one optionally reversed.
MultiblockLayout two_block(int n1, int n2, double amplitude, bool reversed, FaceKind outer);

void write_nodes_csv(const Domain& dom, const std::string& path);

}
