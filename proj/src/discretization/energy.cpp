#include "esbp/discretization.hpp"

namespace esbp {

EnergyBreakdown ElasticOperator::energy(const std::vector<double>& u, const std::vector<double>& v) const
{
    const Domain& dom = *dom_;
    if (u.size() != dom.size || v.size() != dom.size)
        throw std::invalid_argument("energy: shape mismatch");
    EnergyBreakdown E;
    Grad G;
    gradients(u, G);
    std::vector<double> zv(u.size(), 0.0);
    for (int b = 0; b < int(dom.blocks.size()); ++b)
        volume_block(b, u, G, zv);

    double K = 0;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        const int np = blk.npts(), n1 = blk.grid.n1, n2 = blk.grid.n2;
        const auto& c = c_[b].c;
        const double* g = G[b].data();
        for (int J = 0; J < 2; ++J) {
            const double* vj = dom.comp(v, b, J);
            const double* uj = dom.comp(u, b, J);
            const double* zj = dom.comp(zv, b, J);
            for (int p = 0; p < np; ++p) {
                E.kinetic += 0.5 * Hw_[b][p] * c_[b].varrho[p] * vj[p] * vj[p];
                K -= uj[p] * zj[p];
            }
        }
        for (int p = 0; p < np; ++p) {
            double s = 0;
            for (int a = 0; a < 4; ++a)
                for (int e = 0; e < 4; ++e)
                    s += g[a * std::size_t(np) + p] * c[a * 4 + e][p] * g[e * std::size_t(np) + p];
            E.strain += 0.5 * Hw_[b][p] * s;
        }
        for (int f = 0; f < 4; ++f) {
            const auto& wt = blk.op(1 - face_dir(f)).norm_weights;
            for (int t = 0; t < face_count(n1, n2, f); ++t) {
                int p = face_node(n1, n2, f, t);
                for (int J = 0; J < 2; ++J)
                    K += wt[t] * dom.comp(u, b, J)[p] * traction_hat(b, f, t, G, J);
            }
        }
    }
    E.remainder = 0.5 * K - E.strain;

    const double d = 2.0;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        const int n1 = blk.grid.n1, n2 = blk.grid.n2;
        for (int f = 0; f < 4; ++f) {
            const FaceKind kind = blk.tags[f].kind;
            if (kind == FaceKind::Interface)
                continue;
            const int nd = face_dir(f);
            const auto& wt = blk.op(1 - nd).norm_weights;
            const FaceSat& sat = faces_[b][f];
            for (int t = 0; t < face_count(n1, n2, f); ++t) {
                int p = face_node(n1, n2, f, t);
                double uu[2] = {dom.comp(u, b, 0)[p], dom.comp(u, b, 1)[p]};
                if (kind == FaceKind::Robin) {
                    if (!sat.U)
                        continue;
                    auto U = sat.U(face_point(b, f, t));
                    double Jh = blk.metrics.faces[f].Jhat[t];
                    E.correction += 0.5 * wt[t] * Jh *
                                    (uu[0] * (U[0] * uu[0] + U[1] * uu[1]) + uu[1] * (U[2] * uu[0] + U[3] * uu[1]));
                } else {
                    const double pen = sat.beta * d / blk.op(nd).first_weight;
                    double s = 0;
                    for (int J = 0; J < 2; ++J) {
                        s -= uu[J] * traction_hat(b, f, t, G, J);
                        for (int L = 0; L < 2; ++L)
                            s += 0.5 * uu[J] * pen * c_[b].c[cidx(nd, J, nd, L)][p] * uu[L];
                    }
                    E.correction += wt[t] * s;
                }
            }
        }
    }
    for (int k = 0; k < int(dom.interfaces.size()); ++k) {
        const Interface& I = dom.interfaces[k];
        const Block& A = dom.blocks[I.a];
        const Block& B = dom.blocks[I.b];
        const int nd = face_dir(I.fa), ond = face_dir(I.fb);
        const int nf = face_count(A.grid.n1, A.grid.n2, I.fa);
        const auto& wt = A.op(1 - nd).norm_weights;
        const double h1 = A.op(nd).first_weight, oh1 = B.op(ond).first_weight;
        const double pen = ifaces_[k].beta * d / 4;
        for (int t = 0; t < nf; ++t) {
            const int ot = I.partner_index(t, nf);
            const int p = face_node(A.grid.n1, A.grid.n2, I.fa, t);
            const int op = face_node(B.grid.n1, B.grid.n2, I.fb, ot);
            double jump[2];
            for (int J = 0; J < 2; ++J)
                jump[J] = dom.comp(u, I.a, J)[p] - dom.comp(u, I.b, J)[op];
            double s = 0;
            for (int J = 0; J < 2; ++J) {
                for (int L = 0; L < 2; ++L)
                    s += 0.5 * jump[J] * pen *
                         (c_[I.a].c[cidx(nd, J, nd, L)][p] / h1 + c_[I.b].c[cidx(ond, J, ond, L)][op] / oh1) *
                         jump[L];
                s -= 0.5 * jump[J] * (traction_hat(I.a, I.fa, t, G, J) - traction_hat(I.b, I.fb, ot, G, J));
            }
            E.correction += wt[t] * s;
        }
    }
    E.total = E.kinetic + E.strain + E.remainder + E.correction;
    return E;
}

}
