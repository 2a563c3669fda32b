#include "esbp/timestepper.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

namespace esbp {

State zero_state(const Domain& dom)
{
    State s;
    s.u.assign(dom.size, 0.0);
    s.v.assign(dom.size, 0.0);
    return s;
}

double estimate_dt(const ElasticOperator& op, double cfl, int n_dirs)
{
    if (!(cfl > 0))
        throw std::invalid_argument("cfl must be positive");
    const Domain& dom = op.domain();
    double dt = std::numeric_limits<double>::infinity();
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        const double h = std::min(blk.grid.h1, blk.grid.h2);
        const TransformedStiffness& c = op.material(b);
        double vmax = 0;
#pragma omp parallel for reduction(max : vmax)
        for (int p = 0; p < c.size(); ++p)
            vmax = std::max(vmax, max_wave_speed_at(c, p, n_dirs));
        if (!(vmax > 0))
            throw MaterialError("zero wave speed");
        dt = std::min(dt, cfl * h / vmax);
    }
    return dt;
}

Receiver locate_receiver(const Domain& dom, Vec2 X)
{
    Receiver r;
    double best = std::numeric_limits<double>::infinity();
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const BlockGrid& g = dom.blocks[b].grid;
        for (int p = 0; p < g.npts(); ++p) {
            double d = std::hypot(g.X1[p] - X[0], g.X2[p] - X[1]);
            if (d < best) {
                best = d;
                r = {b, p, g.X1[p], g.X2[p]};
            }
        }
    }
    return r;
}

namespace {

bool finite(const std::vector<double>& x)
{
    for (double v : x)
        if (!std::isfinite(v))
            return false;
    return true;
}

}

RunResult rk4_advance(const ElasticOperator& op, State& s, const ForcingFn* forcing, const RunOptions& opt)
{
    const Domain& dom = op.domain();
    if (s.u.size() != dom.size || s.v.size() != dom.size)
        throw std::invalid_argument("rk4_advance: state shape mismatch");
    if (!(opt.dt > 0) || opt.n_steps < 0)
        throw std::invalid_argument("rk4_advance: need dt > 0 and n_steps >= 0");
    RunResult res;
    res.receivers.resize(opt.receivers.size());
    auto record = [&](int step) {
        if (opt.energy_every > 0 && (step % opt.energy_every == 0 || step == opt.n_steps))
            res.energy.push_back({s.t, op.energy(s.u, s.v)});
        if (!opt.receivers.empty() && (step % std::max(opt.receiver_every, 1) == 0 || step == opt.n_steps))
            for (std::size_t r = 0; r < opt.receivers.size(); ++r) {
                const Receiver& rc = opt.receivers[r];
                const double* u1 = dom.comp(s.u, rc.block, 0);
                const double* u2 = dom.comp(s.u, rc.block, 1);
                const double* v1 = dom.comp(s.v, rc.block, 0);
                const double* v2 = dom.comp(s.v, rc.block, 1);
                res.receivers[r].push_back({s.t, u1[rc.node], u2[rc.node], v1[rc.node], v2[rc.node]});
            }
    };
    const std::size_t n = dom.size;
    const double dt = opt.dt;
    std::vector<double> ku[4], kv[4], ut(n), vt(n);
    record(0);
    for (int step = 1; step <= opt.n_steps; ++step) {
        const double t0 = s.t;
        const double c[4] = {0, 0.5, 0.5, 1};
        for (int st = 0; st < 4; ++st) {
            const std::vector<double>* u = &s.u;
            const std::vector<double>* v = &s.v;
            if (st > 0) {
                const double a = c[st] * dt;
                for (std::size_t i = 0; i < n; ++i) {
                    ut[i] = s.u[i] + a * ku[st - 1][i];
                    vt[i] = s.v[i] + a * kv[st - 1][i];
                }
                u = &ut;
                v = &vt;
            }
            ku[st] = *v;
            op.rhs(*u, kv[st], t0 + c[st] * dt, forcing);
        }
        for (std::size_t i = 0; i < n; ++i) {
            s.u[i] += dt / 6 * (ku[0][i] + 2 * ku[1][i] + 2 * ku[2][i] + ku[3][i]);
            s.v[i] += dt / 6 * (kv[0][i] + 2 * kv[1][i] + 2 * kv[2][i] + kv[3][i]);
        }
        s.t = t0 + dt;
        if (!finite(s.u) || !finite(s.v))
            throw InstabilityError("non-finite state at step " + std::to_string(step), step);
        record(step);
    }
    return res;
}

double ricker(double t, double alpha, double t0)
{
    if (!(alpha > 0))
        throw std::invalid_argument("ricker: peak frequency must be positive");
    const double a = std::numbers::pi * std::numbers::pi * alpha * alpha * (t - t0) * (t - t0);
    return (1 - 2 * a) * std::exp(-a);
}

PointWeights discrete_delta(const Domain& dom, Vec2 X0)
{
    const double tol = 1e-12;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        const BlockGrid& g = blk.grid;
        const int n1 = g.n1;
        for (int j = 0; j + 1 < g.n2; ++j)
            for (int i = 0; i + 1 < n1; ++i) {
                const int p[4] = {i + n1 * j, i + 1 + n1 * j, i + n1 * (j + 1), i + 1 + n1 * (j + 1)};
                double x[4], y[4];
                for (int k = 0; k < 4; ++k) {
                    x[k] = g.X1[p[k]];
                    y[k] = g.X2[p[k]];
                }
                double lo1 = *std::min_element(x, x + 4), hi1 = *std::max_element(x, x + 4);
                double lo2 = *std::min_element(y, y + 4), hi2 = *std::max_element(y, y + 4);
                double pad = 1e-9 * dom.diameter;
                if (X0[0] < lo1 - pad || X0[0] > hi1 + pad || X0[1] < lo2 - pad || X0[1] > hi2 + pad)
                    continue;
                // invert the bilinear cell map by Newton
                double s = 0.5, r = 0.5;
                bool ok = false;
                for (int it = 0; it < 50; ++it) {
                    double N[4] = {(1 - s) * (1 - r), s * (1 - r), (1 - s) * r, s * r};
                    double fx = -X0[0], fy = -X0[1];
                    for (int k = 0; k < 4; ++k) {
                        fx += N[k] * x[k];
                        fy += N[k] * y[k];
                    }
                    double xs = (1 - r) * (x[1] - x[0]) + r * (x[3] - x[2]);
                    double ys = (1 - r) * (y[1] - y[0]) + r * (y[3] - y[2]);
                    double xr = (1 - s) * (x[2] - x[0]) + s * (x[3] - x[1]);
                    double yr = (1 - s) * (y[2] - y[0]) + s * (y[3] - y[1]);
                    double det = xs * yr - xr * ys;
                    if (det == 0)
                        break;
                    double ds = (yr * fx - xr * fy) / det, dr = (-ys * fx + xs * fy) / det;
                    s -= ds;
                    r -= dr;
                    if (std::abs(ds) + std::abs(dr) < 1e-13) {
                        ok = true;
                        break;
                    }
                }
                if (!ok || s < -tol || s > 1 + tol || r < -tol || r > 1 + tol)
                    continue;
                s = std::clamp(s, 0.0, 1.0);
                r = std::clamp(r, 0.0, 1.0);
                if (s < tol)
                    s = 0;
                if (r < tol)
                    r = 0;
                if (s > 1 - tol)
                    s = 1;
                if (r > 1 - tol)
                    r = 1;
                double N[4] = {(1 - s) * (1 - r), s * (1 - r), (1 - s) * r, s * r};
                PointWeights pw;
                for (int k = 0; k < 4; ++k) {
                    if (N[k] == 0)
                        continue;
                    int ii = p[k] % n1, jj = p[k] / n1;
                    double JH = blk.metrics.J[p[k]] * blk.op1.norm_weights[ii] * blk.op2.norm_weights[jj];
                    pw.block.push_back(b);
                    pw.node.push_back(p[k]);
                    pw.w.push_back(N[k] / JH);
                }
                return pw;
            }
    }
    throw std::invalid_argument("discrete_delta: point outside the domain");
}

ForcingFn point_source(const Domain& dom, const PointWeights& delta, Vec2 fhat, double alpha, double t0)
{
    if (!(alpha > 0))
        throw std::invalid_argument("point_source: peak frequency must be positive");
    const Domain* d = &dom;
    return [d, delta, fhat, alpha, t0](double t, std::vector<double>& f) {
        double W = ricker(t, alpha, t0);
        for (std::size_t k = 0; k < delta.w.size(); ++k)
            for (int J = 0; J < 2; ++J)
                d->comp(f, delta.block[k], J)[delta.node[k]] += fhat[J] * W * delta.w[k];
    };
}

}
