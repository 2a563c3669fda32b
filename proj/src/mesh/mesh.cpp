#include "esbp/mesh.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <numbers>

namespace esbp {

Mapping identity_map()
{
    return {"identity", [](double x1, double x2) { return Vec2{x1, x2}; },
            [](double, double) { return std::array<double, 4>{1, 0, 0, 1}; }};
}

Mapping affine_map(double a11, double a12, double a21, double a22, double b1, double b2)
{
    // X_I = a_{I1} x1 + a_{I2} x2 + b_I
    return {"affine",
            [=](double x1, double x2) { return Vec2{a11 * x1 + a12 * x2 + b1, a21 * x1 + a22 * x2 + b2}; },
            [=](double, double) { return std::array<double, 4>{a11, a21, a12, a22}; }};
}

Mapping annulus_map(double r0, double r1, double th0, double th1)
{
    return {"annulus",
            [=](double x1, double x2) {
                double r = r0 + (r1 - r0) * x1, th = th0 + (th1 - th0) * x2;
                return Vec2{r * std::cos(th), r * std::sin(th)};
            },
            [=](double x1, double x2) {
                double r = r0 + (r1 - r0) * x1, th = th0 + (th1 - th0) * x2;
                double c = std::cos(th), s = std::sin(th);
                return std::array<double, 4>{(r1 - r0) * c, (r1 - r0) * s, -r * (th1 - th0) * s, r * (th1 - th0) * c};
            }};
}

Mapping transfinite_map(Curve left, Curve right, Curve bottom, Curve top)
{
    auto close = [](Vec2 a, Vec2 b) { return std::hypot(a[0] - b[0], a[1] - b[1]) <= 1e-12; };
    Vec2 c00 = bottom(0), c10 = bottom(1), c01 = top(0), c11 = top(1);
    if (!close(c00, left(0)) || !close(c10, right(0)) || !close(c01, left(1)) || !close(c11, right(1)))
        throw std::invalid_argument("transfinite_map: edge curves do not meet at the corners");
    Mapping m;
    m.kind = "transfinite";
    m.eval = [=](double x1, double x2) {
        Vec2 L = left(x2), R = right(x2), B = bottom(x1), T = top(x1), X;
        for (int I = 0; I < 2; ++I)
            X[I] = (1 - x1) * L[I] + x1 * R[I] + (1 - x2) * B[I] + x2 * T[I] -
                   ((1 - x1) * (1 - x2) * c00[I] + x1 * (1 - x2) * c10[I] + (1 - x1) * x2 * c01[I] +
                    x1 * x2 * c11[I]);
        // edges are reproduced exactly
        if (x1 == 0)
            return L;
        if (x1 == 1)
            return R;
        if (x2 == 0)
            return B;
        if (x2 == 1)
            return T;
        return X;
    };
    return m;
}

BlockGrid build_block(const Mapping& mapping, int n1, int n2)
{
    if (n1 < 2 || n2 < 2)
        throw std::invalid_argument("build_block: need at least two points per direction");
    BlockGrid g;
    g.n1 = n1;
    g.n2 = n2;
    g.h1 = 1.0 / (n1 - 1);
    g.h2 = 1.0 / (n2 - 1);
    g.map = mapping;
    g.X1.resize(n1 * n2);
    g.X2.resize(n1 * n2);
    for (int j = 0; j < n2; ++j)
        for (int i = 0; i < n1; ++i) {
            double x1 = i == n1 - 1 ? 1.0 : i * g.h1, x2 = j == n2 - 1 ? 1.0 : j * g.h2;
            Vec2 X = mapping.eval(x1, x2);
            if (!std::isfinite(X[0]) || !std::isfinite(X[1]))
                throw std::runtime_error("build_block: mapping evaluation failed at (" + std::to_string(i) + "," +
                                         std::to_string(j) + ")");
            g.X1[i + n1 * j] = X[0];
            g.X2[i + n1 * j] = X[1];
        }
    return g;
}

namespace {

void finish_metrics(BlockMetrics& m)
{
    const int n1 = m.n1, n2 = m.n2, np = n1 * n2;
    m.J.resize(np);
    m.F11.resize(np);
    m.F12.resize(np);
    m.F21.resize(np);
    m.F22.resize(np);
    for (int p = 0; p < np; ++p) {
        double J = m.A11[p] * m.A22[p] - m.A12[p] * m.A21[p];
        if (!(J > 0))
            throw MetricError("non-positive Jacobian " + std::to_string(J) + " at (" + std::to_string(p % n1) + "," +
                                  std::to_string(p / n1) + ")",
                              p % n1, p / n1);
        m.J[p] = J;
        m.F11[p] = m.A22[p] / J;
        m.F12[p] = -m.A12[p] / J;
        m.F21[p] = -m.A21[p] / J;
        m.F22[p] = m.A11[p] / J;
    }
    for (int f = 0; f < 4; ++f) {
        int nf = face_count(n1, n2, f);
        double nu = face_nu(f);
        auto& F = m.faces[f];
        F.Jhat.resize(nf);
        F.n1.resize(nf);
        F.n2.resize(nf);
        for (int t = 0; t < nf; ++t) {
            int p = face_node(n1, n2, f, t);
            // J F_{Ii} nu_i
            double v1, v2;
            if (face_dir(f) == 0) {
                v1 = nu * m.A22[p];
                v2 = -nu * m.A21[p];
            } else {
                v1 = -nu * m.A12[p];
                v2 = nu * m.A11[p];
            }
            double Jh = std::hypot(v1, v2);
            if (!(Jh > 0))
                throw MetricError("non-positive surface Jacobian on face " + std::to_string(f), p % n1, p / n1);
            F.Jhat[t] = Jh;
            F.n1[t] = v1 / Jh;
            F.n2[t] = v2 / Jh;
        }
    }
}

}

BlockMetrics compute_metrics(const BlockGrid& g, const OperatorSet1D& op1, const OperatorSet1D& op2)
{
    if (op1.n_points != g.n1 || op2.n_points != g.n2)
        throw std::invalid_argument("compute_metrics: operator size does not match the grid");
    BlockMetrics m;
    m.n1 = g.n1;
    m.n2 = g.n2;
    const int n1 = g.n1, n2 = g.n2, np = n1 * n2;
    m.A11.resize(np);
    m.A12.resize(np);
    m.A21.resize(np);
    m.A22.resize(np);
    for (int j = 0; j < n2; ++j) {
        apply_d1(op1, &g.X1[n1 * j], 1, &m.A11[n1 * j], 1);
        apply_d1(op1, &g.X2[n1 * j], 1, &m.A12[n1 * j], 1);
    }
    for (int i = 0; i < n1; ++i) {
        apply_d1(op2, &g.X1[i], n1, &m.A21[i], n1);
        apply_d1(op2, &g.X2[i], n1, &m.A22[i], n1);
    }
    finish_metrics(m);
    return m;
}

BlockMetrics analytic_metrics(const BlockGrid& g)
{
    if (!g.map.grad)
        throw std::invalid_argument("analytic_metrics: mapping has no analytic gradient");
    BlockMetrics m;
    m.n1 = g.n1;
    m.n2 = g.n2;
    const int np = g.npts();
    m.A11.resize(np);
    m.A12.resize(np);
    m.A21.resize(np);
    m.A22.resize(np);
    for (int j = 0; j < g.n2; ++j)
        for (int i = 0; i < g.n1; ++i) {
            int p = i + g.n1 * j;
            auto A = g.map.grad(i * g.h1, j * g.h2);
            m.A11[p] = A[0];
            m.A12[p] = A[1];
            m.A21[p] = A[2];
            m.A22[p] = A[3];
        }
    finish_metrics(m);
    return m;
}

Domain assemble_domain(std::vector<BlockGrid> grids, const std::vector<std::array<FaceTag, 4>>& tags,
                       const std::vector<InterfaceSpec>& interfaces, int order, bool fully_compatible,
                       bool exact_metrics)
{
    if (tags.size() != grids.size())
        throw DomainError("assemble_domain: one tag set per block required");
    Domain dom;
    dom.order = order;
    dom.fully_compatible = fully_compatible;
    double lo1 = 1e300, hi1 = -1e300, lo2 = 1e300, hi2 = -1e300;
    std::size_t off = 0;
    for (std::size_t b = 0; b < grids.size(); ++b) {
        Block blk;
        blk.grid = std::move(grids[b]);
        blk.op1 = build_operator_set(order, blk.grid.n1, blk.grid.h1, fully_compatible);
        blk.op2 = build_operator_set(order, blk.grid.n2, blk.grid.h2, fully_compatible);
        blk.metrics = exact_metrics ? analytic_metrics(blk.grid) : compute_metrics(blk.grid, blk.op1, blk.op2);
        blk.tags = tags[b];
        blk.offset = off;
        off += 2 * std::size_t(blk.npts());
        for (int p = 0; p < blk.npts(); ++p) {
            lo1 = std::min(lo1, blk.grid.X1[p]);
            hi1 = std::max(hi1, blk.grid.X1[p]);
            lo2 = std::min(lo2, blk.grid.X2[p]);
            hi2 = std::max(hi2, blk.grid.X2[p]);
        }
        dom.blocks.push_back(std::move(blk));
    }
    dom.size = off;
    dom.diameter = std::hypot(hi1 - lo1, hi2 - lo2);
    const double tol = 1e-10 * dom.diameter;

    auto face_name = [](int b, int f) { return "block " + std::to_string(b) + " face " + std::to_string(f); };
    for (const auto& s : interfaces) {
        for (auto [b, f] : {std::pair{s.block_a, s.face_a}, std::pair{s.block_b, s.face_b}}) {
            if (b < 0 || b >= int(dom.blocks.size()) || f < 0 || f > 3)
                throw DomainError("interface references a missing block/face");
            auto& blk = dom.blocks[b];
            if (blk.iface[f] >= 0)
                throw DomainError(face_name(b, f) + " is multiply tagged");
            if (blk.tags[f].kind != FaceKind::Interface)
                throw DomainError(face_name(b, f) + " is paired but tagged as a boundary");
            blk.iface[f] = int(dom.interfaces.size());
        }
        const Block& A = dom.blocks[s.block_a];
        const Block& B = dom.blocks[s.block_b];
        int na = face_count(A.grid.n1, A.grid.n2, s.face_a), nb = face_count(B.grid.n1, B.grid.n2, s.face_b);
        if (na != nb)
            throw DomainError("non-conforming interface: " + std::to_string(na) + " vs " + std::to_string(nb) +
                              " points");
        auto mismatch = [&](bool rev) {
            double e = 0;
            for (int t = 0; t < na; ++t) {
                int pa = face_node(A.grid.n1, A.grid.n2, s.face_a, t);
                int pb = face_node(B.grid.n1, B.grid.n2, s.face_b, rev ? na - 1 - t : t);
                e = std::max(e, std::hypot(A.grid.X1[pa] - B.grid.X1[pb], A.grid.X2[pa] - B.grid.X2[pb]));
            }
            return e;
        };
        bool rev;
        if (mismatch(false) <= tol)
            rev = false;
        else if (mismatch(true) <= tol)
            rev = true;
        else
            throw DomainError("non-conforming interface between " + face_name(s.block_a, s.face_a) + " and " +
                              face_name(s.block_b, s.face_b) + ": coordinates do not coincide");
        const auto& Ja = A.metrics.faces[s.face_a].Jhat;
        const auto& Jb = B.metrics.faces[s.face_b].Jhat;
        double jmax = *std::max_element(Ja.begin(), Ja.end());
        for (int t = 0; t < na; ++t)
            if (std::abs(Ja[t] - Jb[rev ? na - 1 - t : t]) > 1e-10 * jmax)
                throw DomainError("surface Jacobians disagree across interface");
        dom.interfaces.push_back({s.block_a, s.face_a, s.block_b, s.face_b, rev});
    }
    for (std::size_t b = 0; b < dom.blocks.size(); ++b)
        for (int f = 0; f < 4; ++f)
            if (dom.blocks[b].tags[f].kind == FaceKind::Interface && dom.blocks[b].iface[f] < 0)
                throw DomainError("dangling interface face: " + face_name(int(b), f));
    return dom;
}

MultiblockLayout ogrid(double a, double r0, int n, FaceKind hole, FaceKind outer)
{
    if (!(r0 > 0 && r0 < a))
        throw std::invalid_argument("ogrid: need 0 < hole radius < half width");
    MultiblockLayout L;
    const double pi = std::numbers::pi;
    for (int k = 0; k < 4; ++k) {
        double c = std::cos(k * pi / 2), s = std::sin(k * pi / 2);
        auto rot = [c, s](Vec2 v) { return Vec2{c * v[0] - s * v[1], s * v[0] + c * v[1]}; };
        Vec2 h0{r0 * std::cos(-pi / 4), r0 * std::sin(-pi / 4)}, h1{r0 * std::cos(pi / 4), r0 * std::sin(pi / 4)};
        Vec2 o0{a, -a}, o1{a, a};
        Curve left = [=](double x2) {
            double th = -pi / 4 + x2 * pi / 2;
            return rot(Vec2{r0 * std::cos(th), r0 * std::sin(th)});
        };
        Curve right = [=](double x2) { return rot(Vec2{a, -a + 2 * a * x2}); };
        Curve bottom = [=](double x1) { return rot(Vec2{h0[0] + x1 * (o0[0] - h0[0]), h0[1] + x1 * (o0[1] - h0[1])}); };
        Curve top = [=](double x1) { return rot(Vec2{h1[0] + x1 * (o1[0] - h1[0]), h1[1] + x1 * (o1[1] - h1[1])}); };
        L.grids.push_back(build_block(transfinite_map(left, right, bottom, top), n, n));
        std::array<FaceTag, 4> t;
        t[0] = {hole, "hole"};
        t[1] = {outer, "outer"};
        t[2] = {FaceKind::Interface, "interface"};
        t[3] = {FaceKind::Interface, "interface"};
        L.tags.push_back(t);
    }
    for (int k = 0; k < 4; ++k)
        L.interfaces.push_back({k, 3, (k + 1) % 4, 2});
    return L;
}

MultiblockLayout two_block(int n1, int n2, double amp, bool reversed, FaceKind outer)
{
    const double pi = std::numbers::pi;
    auto warp = [amp, pi](double s1, double s2) {
        return Vec2{s1 + amp * std::sin(pi * s1) * std::sin(pi * s2),
                    s2 + amp * std::sin(0.5 * pi * s1) * std::sin(2 * pi * s2) + 0.5 * amp * s1 * s2};
    };
    MultiblockLayout L;
    Mapping ma{"warp", [warp](double x1, double x2) { return warp(x1, x2); }, {}};
    Mapping mb;
    if (reversed)
        mb = {"warp", [warp](double x1, double x2) { return warp(2 - x1, 1 - x2); }, {}};
    else
        mb = {"warp", [warp](double x1, double x2) { return warp(1 + x1, x2); }, {}};
    L.grids.push_back(build_block(ma, n1, n2));
    L.grids.push_back(build_block(mb, n1, n2));
    std::array<FaceTag, 4> ta{FaceTag{outer, "outer"}, FaceTag{FaceKind::Interface, "interface"},
                              FaceTag{outer, "outer"}, FaceTag{outer, "outer"}};
    std::array<FaceTag, 4> tb = ta;
    tb[0] = {outer, "outer"};
    tb[1] = {outer, "outer"};
    tb[reversed ? 1 : 0] = {FaceKind::Interface, "interface"};
    L.tags = {ta, tb};
    L.interfaces.push_back({0, 1, 1, reversed ? 1 : 0});
    return L;
}

void write_nodes_csv(const Domain& dom, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    out.precision(17);
    out << "block,i,j,X1,X2,J\n";
    for (std::size_t b = 0; b < dom.blocks.size(); ++b) {
        const auto& blk = dom.blocks[b];
        for (int j = 0; j < blk.grid.n2; ++j)
            for (int i = 0; i < blk.grid.n1; ++i) {
                int p = i + blk.grid.n1 * j;
                out << b << ',' << i << ',' << j << ',' << blk.grid.X1[p] << ',' << blk.grid.X2[p] << ','
                    << blk.metrics.J[p] << '\n';
            }
    }
}

}
