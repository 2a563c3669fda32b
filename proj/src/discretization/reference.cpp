#include "esbp/discretization.hpp"

namespace esbp {

void ElasticOperator::volume_block_reference(int b, const std::vector<double>& u, const Grad& G,
                                             std::vector<double>& z) const
{
    const Block& blk = dom_->blocks[b];
    const int np = blk.npts(), n1 = blk.grid.n1, n2 = blk.grid.n2;
    const auto& c = c_[b].c;
    const double* g = G[b].data();
    const bool narrow = stencil_ == Stencil::Narrow;
    std::vector<double> flux(4 * std::size_t(np), 0.0);
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
    std::vector<double> line(std::max(n1, n2));
    for (int J = 0; J < 2; ++J) {
        double* y = dom_->comp(z, b, J);
        const double* f0 = flux.data() + (0 * 2 + J) * std::size_t(np);
        const double* f1 = flux.data() + (1 * 2 + J) * std::size_t(np);
        for (int j = 0; j < n2; ++j) {
            apply_d1(blk.op1, f0 + n1 * j, 1, line.data(), 1);
            for (int i = 0; i < n1; ++i)
                y[i + n1 * j] += line[i];
        }
        for (int i = 0; i < n1; ++i) {
            apply_d1(blk.op2, f1 + i, n1, line.data(), 1);
            for (int j = 0; j < n2; ++j)
                y[i + n1 * j] += line[j];
        }
        if (narrow)
            for (int L = 0; L < 2; ++L) {
                const double* x = dom_->comp(u, b, L);
                const double* b0 = c[cidx(0, J, 0, L)].data();
                const double* b1 = c[cidx(1, J, 1, L)].data();
                for (int j = 0; j < n2; ++j) {
                    apply_d2(blk.op1, b0 + n1 * j, 1, x + n1 * j, 1, line.data(), 1);
                    for (int i = 0; i < n1; ++i)
                        y[i + n1 * j] += line[i];
                }
                for (int i = 0; i < n1; ++i) {
                    apply_d2(blk.op2, b1 + i, n1, x + i, n1, line.data(), 1);
                    for (int j = 0; j < n2; ++j)
                        y[i + n1 * j] += line[j];
                }
            }
        for (int p = 0; p < np; ++p)
            y[p] *= Hw_[b][p];
    }
}

void ElasticOperator::apply_reference(const std::vector<double>& u, std::vector<double>& z, double t,
                                      bool with_data) const
{
    if (u.size() != dom_->size)
        throw std::invalid_argument("apply_reference: shape mismatch");
    z.assign(u.size(), 0.0);
    Grad G;
    gradients_reference(u, G);
    for (int b = 0; b < int(dom_->blocks.size()); ++b)
        volume_block_reference(b, u, G, z);
    add_sats(u, G, z, t, with_data, {});
}

}
