#include "esbp/discretization.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <string>

namespace esbp {

namespace {

// out (+)= D_dir in on an n1 x n2 block, rows along x1 contiguous
void d1_dir(const OperatorSet1D& op, int dir, int n1, int n2, const double* in, double* out, bool add)
{
    if (dir == 0) {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n2; ++j) {
            const double* x = in + std::size_t(n1) * j;
            double* y = out + std::size_t(n1) * j;
            for (int i = 0; i < n1; ++i) {
                const double* c = &op.d1_val[op.d1_off[i]];
                const double* xs = x + op.d1_start[i];
                double acc = 0;
                for (int k = 0; k < op.d1_len[i]; ++k)
                    acc += c[k] * xs[k];
                y[i] = add ? y[i] + acc : acc;
            }
        }
    } else {
#pragma omp parallel for schedule(static)
        for (int j = 0; j < n2; ++j) {
            double* y = out + std::size_t(n1) * j;
            if (!add)
                std::fill(y, y + n1, 0.0);
            const double* c = &op.d1_val[op.d1_off[j]];
            for (int k = 0; k < op.d1_len[j]; ++k) {
                const double* x = in + std::size_t(n1) * (op.d1_start[j] + k);
                const double ck = c[k];
                for (int i = 0; i < n1; ++i)
                    y[i] += ck * x[i];
            }
        }
    }
}

}

ElasticOperator::ElasticOperator(const Domain& dom, const std::vector<StiffnessField>& C, Stencil stencil)
    : dom_(&dom), stencil_(stencil), C_(C)
{
    const int nb = int(dom.blocks.size());
    if (int(C.size()) != nb)
        throw std::invalid_argument("ElasticOperator: one stiffness field per block required");
    c_.resize(nb);
    Hw_.resize(nb);
    faces_.resize(nb);
    bd_.resize(nb);
    ifaces_.resize(dom.interfaces.size());
    for (int b = 0; b < nb; ++b) {
        const Block& blk = dom.blocks[b];
        if (C[b].size() != blk.npts())
            throw std::invalid_argument("ElasticOperator: stiffness field size mismatch in block " + std::to_string(b));
        c_[b] = transform_stiffness(C[b], blk.metrics);
        const int n1 = blk.grid.n1, n2 = blk.grid.n2;
        Hw_[b].resize(blk.npts());
        for (int j = 0; j < n2; ++j)
            for (int i = 0; i < n1; ++i)
                Hw_[b][i + n1 * j] = blk.op1.norm_weights[i] * blk.op2.norm_weights[j];

        if (stencil_ != Stencil::Narrow)
            continue;
        BlockData& d = bd_[b];
        for (int dir = 0; dir < 2; ++dir) {
            const OperatorSet1D& op = blk.op(dir);
            Band& B = d.band[dir];
            const int n = op.n();
            B.lo.resize(n);
            B.len.resize(n);
            B.off.resize(n);
            B.nnz = 0;
            for (int i = 0; i < n; ++i) {
                int lo = n, hi = -1;
                for (int k = op.d2_ptr[i]; k < op.d2_ptr[i + 1]; ++k) {
                    lo = std::min(lo, op.d2_ent[k].j);
                    hi = std::max(hi, op.d2_ent[k].j);
                }
                B.lo[i] = lo;
                B.len[i] = hi - lo + 1;
                B.off[i] = B.nnz;
                B.nnz += B.len[i];
            }
            const int nl = dir == 0 ? n2 : n1;  // number of lines
            for (int J = 0; J < 2; ++J)
                for (int L = 0; L < 2; ++L) {
                    const std::vector<double>& cf = c_[b].c[cidx(dir, J, dir, L)];
                    std::vector<double>& W = d.w2[dir][J * 2 + L];
                    W.assign(std::size_t(B.nnz) * nl, 0.0);
                    for (int line = 0; line < nl; ++line)
                        for (int i = 0; i < n; ++i)
                            for (int k = op.d2_ptr[i]; k < op.d2_ptr[i + 1]; ++k) {
                                const D2Entry& e = op.d2_ent[k];
                                int ps = dir == 0 ? e.s + n1 * line : line + n1 * e.s;
                                int slot = B.off[i] + e.j - B.lo[i];
                                std::size_t at = dir == 0 ? std::size_t(line) * B.nnz + slot
                                                          : std::size_t(slot) * n1 + line;
                                W[at] += e.c * cf[ps];
                            }
                }
        }
    }
}

void ElasticOperator::set_face(int b, int f, FaceSat sat)
{
    FaceKind k = dom_->blocks.at(b).tags.at(f).kind;
    if (k == FaceKind::Interface)
        throw SatError("set_face: face is an interface");
    if (k == FaceKind::Displacement && !(sat.beta >= 1))
        throw SatError("displacement penalty beta must be >= 1");
    faces_[b][f] = std::move(sat);
}

void ElasticOperator::set_interface(int k, InterfaceData d)
{
    if (!(d.beta >= 1))
        throw SatError("interface penalty beta must be >= 1");
    ifaces_.at(k) = std::move(d);
}

void ElasticOperator::set_beta(double beta)
{
    if (!(beta >= 1))
        throw SatError("penalty beta must be >= 1");
    for (auto& fs : faces_)
        for (auto& s : fs)
            s.beta = beta;
    for (auto& d : ifaces_)
        d.beta = beta;
}

FacePoint ElasticOperator::face_point(int b, int f, int t) const
{
    const Block& blk = dom_->blocks[b];
    int p = face_node(blk.grid.n1, blk.grid.n2, f, t);
    const FaceMetrics& fm = blk.metrics.faces[f];
    return {b, f, t, p, blk.grid.X1[p], blk.grid.X2[p], fm.n1[t], fm.n2[t], fm.Jhat[t]};
}

void ElasticOperator::gradients(const std::vector<double>& u, Grad& G) const
{
    G.resize(dom_->blocks.size());
    for (std::size_t b = 0; b < dom_->blocks.size(); ++b) {
        const Block& blk = dom_->blocks[b];
        const int np = blk.npts(), n1 = blk.grid.n1, n2 = blk.grid.n2;
        G[b].resize(4 * std::size_t(np));
        for (int k = 0; k < 2; ++k)
            for (int L = 0; L < 2; ++L)
                d1_dir(blk.op(k), k, n1, n2, dom_->comp(u, int(b), L), G[b].data() + (k * 2 + L) * std::size_t(np),
                       false);
    }
}

void ElasticOperator::gradients_reference(const std::vector<double>& u, Grad& G) const
{
    G.resize(dom_->blocks.size());
    for (std::size_t b = 0; b < dom_->blocks.size(); ++b) {
        const Block& blk = dom_->blocks[b];
        const int np = blk.npts(), n1 = blk.grid.n1, n2 = blk.grid.n2;
        G[b].resize(4 * std::size_t(np));
        for (int L = 0; L < 2; ++L) {
            const double* x = dom_->comp(u, int(b), L);
            double* g0 = G[b].data() + (0 * 2 + L) * std::size_t(np);
            double* g1 = G[b].data() + (1 * 2 + L) * std::size_t(np);
            for (int j = 0; j < n2; ++j)
                apply_d1(blk.op1, x + n1 * j, 1, g0 + n1 * j, 1);
            for (int i = 0; i < n1; ++i)
                apply_d1(blk.op2, x + i, n1, g1 + i, n1);
        }
    }
}

void ElasticOperator::fluxes(int b, const Grad& G, std::vector<double>& flux) const
{
    const int np = dom_->blocks[b].npts();
    const auto& c = c_[b].c;
    const double* g = G[b].data();
    flux.resize(4 * std::size_t(np));
    const bool narrow = stencil_ == Stencil::Narrow;
#pragma omp parallel for schedule(static)
    for (int p = 0; p < np; ++p)
        for (int i = 0; i < 2; ++i)
            for (int J = 0; J < 2; ++J) {
                double s = 0;
                for (int k = 0; k < 2; ++k) {
                    if (narrow && k == i)
                        continue;
                    for (int L = 0; L < 2; ++L)
                        s += c[cidx(i, J, k, L)][p] * g[(k * 2 + L) * std::size_t(np) + p];
                }
                flux[(i * 2 + J) * std::size_t(np) + p] = s;
            }
}

void ElasticOperator::volume_block(int b, const std::vector<double>& u, const Grad& G, std::vector<double>& z) const
{
    const Block& blk = dom_->blocks[b];
    const int np = blk.npts(), n1 = blk.grid.n1, n2 = blk.grid.n2;
    std::vector<double> flux;
    fluxes(b, G, flux);
    for (int J = 0; J < 2; ++J) {
        double* y = dom_->comp(z, b, J);
        d1_dir(blk.op1, 0, n1, n2, flux.data() + (0 * 2 + J) * std::size_t(np), y, false);
        d1_dir(blk.op2, 1, n1, n2, flux.data() + (1 * 2 + J) * std::size_t(np), y, true);
    }
    if (stencil_ == Stencil::Narrow) {
        const BlockData& d = bd_[b];
        for (int J = 0; J < 2; ++J) {
            double* y = dom_->comp(z, b, J);
            for (int L = 0; L < 2; ++L) {
                const double* x = dom_->comp(u, b, L);
                const Band& B0 = d.band[0];
                const double* W0 = d.w2[0][J * 2 + L].data();
#pragma omp parallel for schedule(static)
                for (int j = 0; j < n2; ++j) {
                    const double* w = W0 + std::size_t(j) * B0.nnz;
                    const double* xr = x + std::size_t(n1) * j;
                    for (int i = 0; i < n1; ++i) {
                        const double* wi = w + B0.off[i];
                        const double* xs = xr + B0.lo[i];
                        double acc = 0;
                        for (int k = 0; k < B0.len[i]; ++k)
                            acc += wi[k] * xs[k];
                        y[std::size_t(n1) * j + i] += acc;
                    }
                }
                const Band& B1 = d.band[1];
                const double* W1 = d.w2[1][J * 2 + L].data();
#pragma omp parallel for schedule(static)
                for (int j = 0; j < n2; ++j) {
                    double* yr = y + std::size_t(n1) * j;
                    for (int k = 0; k < B1.len[j]; ++k) {
                        const double* w = W1 + std::size_t(B1.off[j] + k) * n1;
                        const double* xr = x + std::size_t(n1) * (B1.lo[j] + k);
                        for (int i = 0; i < n1; ++i)
                            yr[i] += w[i] * xr[i];
                    }
                }
            }
        }
    }
    const double* H = Hw_[b].data();
    for (int J = 0; J < 2; ++J) {
        double* y = dom_->comp(z, b, J);
#pragma omp parallel for schedule(static)
        for (int p = 0; p < np; ++p)
            y[p] *= H[p];
    }
}

double ElasticOperator::traction_hat(int b, int f, int t, const Grad& G, int J) const
{
    const Block& blk = dom_->blocks[b];
    const int np = blk.npts();
    const int p = face_node(blk.grid.n1, blk.grid.n2, f, t), nd = face_dir(f);
    const auto& c = c_[b].c;
    double s = 0;
    for (int k = 0; k < 2; ++k)
        for (int L = 0; L < 2; ++L)
            s += c[cidx(nd, J, k, L)][p] * G[b][(k * 2 + L) * std::size_t(np) + p];
    return face_nu(f) * s;
}

void ElasticOperator::add_transpose(int b, int f, const std::array<std::vector<double>, 4>& phi,
                                    std::vector<double>& z) const
{
    // z_J += sum_k D_k^T phi_kJ, phi given on the face
    const Block& blk = dom_->blocks[b];
    const int n1 = blk.grid.n1, n2 = blk.grid.n2, nd = face_dir(f), td = 1 - nd;
    const int nf = face_count(n1, n2, f);
    const OperatorSet1D& opn = blk.op(nd);
    const OperatorSet1D& opt = blk.op(td);
    const int R = f % 2 ? opn.n() - 1 : 0;
    std::vector<double> tmp(nf);
    for (int J = 0; J < 2; ++J) {
        double* y = dom_->comp(z, b, J);
        const std::vector<double>& pn = phi[nd * 2 + J];
        const double* c = &opn.d1_val[opn.d1_off[R]];
        for (int t = 0; t < nf; ++t) {
            if (pn[t] == 0)
                continue;
            for (int k = 0; k < opn.d1_len[R]; ++k) {
                int i = opn.d1_start[R] + k;
                int p = nd == 0 ? i + n1 * t : t + n1 * i;
                y[p] += c[k] * pn[t];
            }
        }
        apply_d1t(opt, phi[td * 2 + J].data(), 1, tmp.data(), 1);
        for (int t = 0; t < nf; ++t)
            y[face_node(n1, n2, f, t)] += tmp[t];
    }
}

static void check_symmetric(const std::array<double, 4>& U)
{
    double s = std::max({std::abs(U[0]), std::abs(U[1]), std::abs(U[2]), std::abs(U[3])});
    if (std::abs(U[1] - U[2]) > 1e-12 * std::max(s, 1e-300))
        throw SatError("Robin matrix U must be symmetric");
}

void ElasticOperator::add_sats(const std::vector<double>& u, const Grad& G, std::vector<double>& z, double t,
                               bool with_data, const Filter& only) const
{
    const Domain& dom = *dom_;
    const double d = 2.0;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        const int n1 = blk.grid.n1, n2 = blk.grid.n2;
        for (int f = 0; f < 4; ++f) {
            const FaceKind kind = blk.tags[f].kind;
            if (kind == FaceKind::Interface)
                continue;
            if (only.iface >= 0 || (only.block >= 0 && (only.block != b || only.face != f)))
                continue;
            const FaceSat& sat = faces_[b][f];
            const int nd = face_dir(f), td = 1 - nd, nf = face_count(n1, n2, f);
            const double nu = face_nu(f);
            const auto& wt = blk.op(td).norm_weights;
            const auto& c = c_[b].c;
            const FaceMetrics& fm = blk.metrics.faces[f];
            if (kind == FaceKind::Robin) {
                for (int tt = 0; tt < nf; ++tt) {
                    const int p = face_node(n1, n2, f, tt);
                    double r[2] = {traction_hat(b, f, tt, G, 0), traction_hat(b, f, tt, G, 1)};
                    if (sat.U) {
                        auto U = sat.U(face_point(b, f, tt));
                        check_symmetric(U);
                        double u0 = dom.comp(u, b, 0)[p], u1 = dom.comp(u, b, 1)[p];
                        r[0] += fm.Jhat[tt] * (U[0] * u0 + U[1] * u1);
                        r[1] += fm.Jhat[tt] * (U[2] * u0 + U[3] * u1);
                    }
                    if (with_data && sat.g) {
                        Vec2 g = sat.g(face_point(b, f, tt), t);
                        r[0] -= fm.Jhat[tt] * g[0];
                        r[1] -= fm.Jhat[tt] * g[1];
                    }
                    for (int J = 0; J < 2; ++J)
                        dom.comp(z, b, J)[p] -= wt[tt] * r[J];
                }
            } else {
                const double pen = sat.beta * d / blk.op(nd).first_weight;
                std::array<std::vector<double>, 4> phi;
                for (auto& v : phi)
                    v.assign(nf, 0.0);
                for (int tt = 0; tt < nf; ++tt) {
                    const int p = face_node(n1, n2, f, tt);
                    double w[2] = {dom.comp(u, b, 0)[p], dom.comp(u, b, 1)[p]};
                    if (with_data && sat.g) {
                        Vec2 g = sat.g(face_point(b, f, tt), t);
                        w[0] -= g[0];
                        w[1] -= g[1];
                    }
                    for (int J = 0; J < 2; ++J) {
                        double s = 0;
                        for (int L = 0; L < 2; ++L)
                            s += c[cidx(nd, J, nd, L)][p] * w[L];
                        dom.comp(z, b, J)[p] -= wt[tt] * pen * s;
                        for (int k = 0; k < 2; ++k) {
                            double ph = 0;
                            for (int L = 0; L < 2; ++L)
                                ph += c[cidx(nd, L, k, J)][p] * w[L];
                            phi[k * 2 + J][tt] = nu * wt[tt] * ph;
                        }
                    }
                }
                add_transpose(b, f, phi, z);
            }
        }
    }

    for (int k = 0; k < int(dom.interfaces.size()); ++k) {
        if (only.block >= 0 || (only.iface >= 0 && only.iface != k))
            continue;
        const Interface& I = dom.interfaces[k];
        const InterfaceData& data = ifaces_[k];
        for (int side = 0; side < 2; ++side) {
            const int b = side == 0 ? I.a : I.b, f = side == 0 ? I.fa : I.fb;
            const int ob = side == 0 ? I.b : I.a, of = side == 0 ? I.fb : I.fa;
            const double sgn = side == 0 ? 1.0 : -1.0;
            const Block& blk = dom.blocks[b];
            const Block& oblk = dom.blocks[ob];
            const int n1 = blk.grid.n1, n2 = blk.grid.n2, nd = face_dir(f), td = 1 - nd;
            const int ond = face_dir(of);
            const int nf = face_count(n1, n2, f);
            const double nu = face_nu(f);
            const auto& wt = blk.op(td).norm_weights;
            const auto& c = c_[b].c;
            const auto& oc = c_[ob].c;
            const double h1 = blk.op(nd).first_weight, oh1 = oblk.op(ond).first_weight;
            const double pen = data.beta * d / 4;
            std::array<std::vector<double>, 4> phi;
            for (auto& v : phi)
                v.assign(nf, 0.0);
            for (int tt = 0; tt < nf; ++tt) {
                const int ot = I.partner_index(tt, nf);
                const int p = face_node(n1, n2, f, tt);
                const int op = face_node(oblk.grid.n1, oblk.grid.n2, of, ot);
                const double Jh = blk.metrics.faces[f].Jhat[tt];
                double w[2];
                for (int L = 0; L < 2; ++L)
                    w[L] = dom.comp(u, b, L)[p] - dom.comp(u, ob, L)[op];
                Vec2 Th{0, 0};
                if (with_data && (data.V || data.Theta)) {
                    FacePoint fa = side == 0 ? face_point(b, f, tt) : face_point(ob, of, ot);
                    if (data.V) {
                        Vec2 V = data.V(fa, t);
                        w[0] -= sgn * V[0];
                        w[1] -= sgn * V[1];
                    }
                    if (data.Theta)
                        Th = data.Theta(fa, t);
                }
                for (int J = 0; J < 2; ++J) {
                    double s = 0;
                    for (int L = 0; L < 2; ++L)
                        s += (c[cidx(nd, J, nd, L)][p] / h1 + oc[cidx(ond, J, ond, L)][op] / oh1) * w[L];
                    double tr = traction_hat(b, f, tt, G, J) + traction_hat(ob, of, ot, G, J) - Jh * Th[J];
                    dom.comp(z, b, J)[p] -= wt[tt] * (pen * s + 0.5 * tr);
                    for (int kk = 0; kk < 2; ++kk) {
                        double ph = 0;
                        for (int L = 0; L < 2; ++L)
                            ph += c[cidx(nd, L, kk, J)][p] * w[L];
                        phi[kk * 2 + J][tt] = 0.5 * nu * wt[tt] * ph;
                    }
                }
            }
            add_transpose(b, f, phi, z);
        }
    }
}

void ElasticOperator::apply_volume(const std::vector<double>& u, std::vector<double>& z) const
{
    if (u.size() != dom_->size)
        throw std::invalid_argument("apply_volume: shape mismatch");
    z.assign(u.size(), 0.0);
    Grad G;
    gradients(u, G);
    for (int b = 0; b < int(dom_->blocks.size()); ++b)
        volume_block(b, u, G, z);
}

void ElasticOperator::apply(const std::vector<double>& u, std::vector<double>& z, double t, bool with_data) const
{
    if (u.size() != dom_->size)
        throw std::invalid_argument("apply: shape mismatch");
    z.assign(u.size(), 0.0);
    Grad G;
    gradients(u, G);
    for (int b = 0; b < int(dom_->blocks.size()); ++b)
        volume_block(b, u, G, z);
    add_sats(u, G, z, t, with_data, {});
}

void ElasticOperator::rhs(const std::vector<double>& u, std::vector<double>& acc, double t,
                          const ForcingFn* forcing) const
{
    apply(u, acc, t, true);
    std::vector<double> f;
    if (forcing && *forcing) {
        f.assign(u.size(), 0.0);
        (*forcing)(t, f);
    }
    for (int b = 0; b < int(dom_->blocks.size()); ++b) {
        const int np = dom_->blocks[b].npts();
        const double* H = Hw_[b].data();
        const double* vr = c_[b].varrho.data();
        const double* rho = C_[b].rho.data();
        for (int J = 0; J < 2; ++J) {
            double* a = dom_->comp(acc, b, J);
            const double* fj = f.empty() ? nullptr : dom_->comp(f, b, J);
#pragma omp parallel for schedule(static)
            for (int p = 0; p < np; ++p) {
                a[p] /= H[p] * vr[p];
                if (fj)
                    a[p] += fj[p] / rho[p];
            }
        }
    }
}

void ElasticOperator::traction(int b, int f, const std::vector<double>& u, std::vector<double>& t1,
                               std::vector<double>& t2) const
{
    if (u.size() != dom_->size)
        throw std::invalid_argument("traction: shape mismatch");
    const Block& blk = dom_->blocks.at(b);
    const int nf = face_count(blk.grid.n1, blk.grid.n2, f);
    Grad G;
    gradients(u, G);
    t1.resize(nf);
    t2.resize(nf);
    for (int t = 0; t < nf; ++t) {
        double Jh = blk.metrics.faces[f].Jhat[t];
        t1[t] = traction_hat(b, f, t, G, 0) / Jh;
        t2[t] = traction_hat(b, f, t, G, 1) / Jh;
    }
}

void ElasticOperator::scale_to_density(std::vector<double>& z) const
{
    for (int b = 0; b < int(dom_->blocks.size()); ++b) {
        const Block& blk = dom_->blocks[b];
        for (int J = 0; J < 2; ++J) {
            double* y = dom_->comp(z, b, J);
            for (int p = 0; p < blk.npts(); ++p)
                y[p] /= Hw_[b][p] * blk.metrics.J[p];
        }
    }
}

void ElasticOperator::face_sat(int b, int f, const std::vector<double>& u, std::vector<double>& out, double t) const
{
    if (u.size() != dom_->size)
        throw std::invalid_argument("face_sat: shape mismatch");
    if (dom_->blocks.at(b).tags.at(f).kind == FaceKind::Interface)
        throw SatError("face_sat: face is an interface");
    Grad G;
    gradients(u, G);
    out.assign(u.size(), 0.0);
    Filter only;
    only.block = b;
    only.face = f;
    add_sats(u, G, out, t, true, only);
    scale_to_density(out);
}

void ElasticOperator::interface_sat(int k, const std::vector<double>& u, std::vector<double>& out, double t) const
{
    if (u.size() != dom_->size)
        throw std::invalid_argument("interface_sat: shape mismatch");
    Grad G;
    gradients(u, G);
    out.assign(u.size(), 0.0);
    Filter only;
    only.iface = k;
    add_sats(u, G, out, t, true, only);
    scale_to_density(out);
}

std::vector<double> elastic_apply(const ElasticOperator& op, const std::vector<double>& u)
{
    std::vector<double> z;
    op.apply_volume(u, z);
    op.scale_to_density(z);
    return z;
}

DenseSystem assemble_dense(const ElasticOperator& op, std::size_t cap)
{
    const Domain& dom = op.domain();
    const std::size_t n = dom.size;
    if (n > cap)
        throw SizeCapError("dense assembly of " + std::to_string(n) + " unknowns exceeds the cap of " +
                           std::to_string(cap));
    DenseSystem S;
    S.A = Dense(int(n), int(n));
    std::vector<double> e(n, 0.0), z;
    for (std::size_t j = 0; j < n; ++j) {
        e[j] = 1;
        op.apply(e, z, 0.0, false);
        e[j] = 0;
        for (std::size_t i = 0; i < n; ++i)
            S.A.a[i * n + j] = z[i];
    }
    S.Hphys.resize(n);
    S.P.resize(n);
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        for (int J = 0; J < 2; ++J)
            for (int p = 0; p < blk.npts(); ++p) {
                std::size_t g = blk.offset + J * std::size_t(blk.npts()) + p;
                S.Hphys[g] = op.weights(b)[p] * blk.metrics.J[p];
                S.P[g] = op.physical(b).rho[p];
            }
    }
    return S;
}

}
