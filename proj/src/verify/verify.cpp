#include "esbp/verify.hpp"

#include "esbp/io.hpp"
#include "esbp/linalg.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <limits>
#include <sstream>

namespace esbp {

namespace {

constexpr double kw[2][2] = {{2, 3}, {3, 2}};
constexpr double om[2] = {1, 2};

double phase(int L, double X1, double X2, double t) { return kw[L][0] * X1 + kw[L][1] * X2 - om[L] * t; }

// f_J = sum_L a_JL sin(psi_L) + b_JL cos(psi_L)
void forcing_coeffs(MMSVariant v, double X1, double X2, double a[2][2], double b[2][2])
{
    const Tensor4 C = mms_problem_stiffness(v, X1, X2);
    const double rho = mms_problem_density(v, X1, X2);
    std::array<Tensor4, 2> dC{};
    if (v == MMSVariant::Anisotropic)
        dC = mms_stiffness_grad(X1, X2);
    for (int J = 0; J < 2; ++J)
        for (int L = 0; L < 2; ++L) {
            double s = J == L ? -rho * om[L] * om[L] : 0.0, c = 0;
            for (int I = 0; I < 2; ++I)
                for (int K = 0; K < 2; ++K) {
                    s += C[cidx(I, J, K, L)] * kw[L][I] * kw[L][K];
                    c -= dC[I][cidx(I, J, K, L)] * kw[L][K];
                }
            a[J][L] = s;
            b[J][L] = c;
        }
}

}

Vec2 mms_displacement(double X1, double X2, double t)
{
    return {std::sin(phase(0, X1, X2, t)), std::sin(phase(1, X1, X2, t))};
}

Vec2 mms_velocity(double X1, double X2, double t)
{
    return {-om[0] * std::cos(phase(0, X1, X2, t)), -om[1] * std::cos(phase(1, X1, X2, t))};
}

std::array<double, 4> mms_displacement_grad(double X1, double X2, double t)
{
    std::array<double, 4> g;
    for (int L = 0; L < 2; ++L) {
        double c = std::cos(phase(L, X1, X2, t));
        for (int I = 0; I < 2; ++I)
            g[I * 2 + L] = kw[L][I] * c;
    }
    return g;
}

Tensor4 mms_problem_stiffness(MMSVariant v, double X1, double X2)
{
    return v == MMSVariant::Anisotropic ? mms_stiffness(X1, X2) : isotropic_stiffness(1, 1);
}

double mms_problem_density(MMSVariant v, double X1, double X2)
{
    return v == MMSVariant::Anisotropic ? mms_density(X1, X2) : 1.0;
}

Vec2 mms_forcing(MMSVariant v, double X1, double X2, double t)
{
    double a[2][2], b[2][2];
    forcing_coeffs(v, X1, X2, a, b);
    Vec2 f{0, 0};
    for (int L = 0; L < 2; ++L) {
        double ps = phase(L, X1, X2, t);
        for (int J = 0; J < 2; ++J)
            f[J] += a[J][L] * std::sin(ps) + b[J][L] * std::cos(ps);
    }
    return f;
}

Vec2 mms_forcing_isotropic(double X1, double X2, double t)
{
    const double lambda = 1, mu = 1, rho = 1;
    double s[2] = {std::sin(phase(0, X1, X2, t)), std::sin(phase(1, X1, X2, t))};
    Vec2 f;
    for (int J = 0; J < 2; ++J) {
        double utt = -om[J] * om[J] * s[J];
        double grad_div = -kw[0][J] * kw[0][0] * s[0] - kw[1][J] * kw[1][1] * s[1];
        double lap = -(kw[J][0] * kw[J][0] + kw[J][1] * kw[J][1]) * s[J];
        f[J] = rho * utt - (lambda + mu) * grad_div - mu * lap;
    }
    return f;
}

Vec2 mms_traction(MMSVariant v, double X1, double X2, double n1, double n2, double t)
{
    const Tensor4 C = mms_problem_stiffness(v, X1, X2);
    const auto g = mms_displacement_grad(X1, X2, t);
    const double n[2] = {n1, n2};
    Vec2 tr{0, 0};
    for (int J = 0; J < 2; ++J)
        for (int I = 0; I < 2; ++I)
            for (int K = 0; K < 2; ++K)
                for (int L = 0; L < 2; ++L)
                    tr[J] += n[I] * C[cidx(I, J, K, L)] * g[K * 2 + L];
    return tr;
}

MMSSetup mms_setup(const MMSProblem& pb, int order, int h_inv, Stencil stencil)
{
    if (h_inv < 1)
        throw std::invalid_argument("mms_setup: resolution must be positive");
    const MMSVariant var = pb.variant;
    const FaceKind hole = var == MMSVariant::Anisotropic ? FaceKind::Displacement : FaceKind::Robin;
    auto lay = ogrid(pb.half_width, pb.hole_radius, h_inv + 1, hole, FaceKind::Robin);
    MMSSetup S;
    S.dom = std::make_unique<Domain>(assemble_domain(lay.grids, lay.tags, lay.interfaces, order));
    const Domain& dom = *S.dom;
    std::vector<StiffnessField> C;
    for (const Block& blk : dom.blocks) {
        if (var == MMSVariant::Anisotropic)
            C.push_back(mms_material(blk.grid.X1, blk.grid.X2));
        else
            C.push_back(constant_field(isotropic_stiffness(1, 1), 1.0, blk.npts()));
    }
    S.op = std::make_unique<ElasticOperator>(dom, C, stencil);
    S.op->set_beta(pb.beta);
    for (int b = 0; b < int(dom.blocks.size()); ++b)
        for (int f = 0; f < 4; ++f) {
            FaceSat sat;
            sat.beta = pb.beta;
            switch (dom.blocks[b].tags[f].kind) {
            case FaceKind::Robin:
                sat.g = [var](const FacePoint& fp, double t) { return mms_traction(var, fp.X1, fp.X2, fp.n1, fp.n2, t); };
                S.op->set_face(b, f, sat);
                break;
            case FaceKind::Displacement:
                sat.g = [](const FacePoint& fp, double t) { return mms_displacement(fp.X1, fp.X2, t); };
                S.op->set_face(b, f, sat);
                break;
            case FaceKind::Interface:
                break;
            }
        }

    // f_J = sum_L P_JL cos(w_L t) + Q_JL sin(w_L t)
    auto P = std::make_shared<std::array<std::vector<double>, 2>>();
    auto Q = std::make_shared<std::array<std::vector<double>, 2>>();
    for (int L = 0; L < 2; ++L) {
        (*P)[L].assign(dom.size, 0.0);
        (*Q)[L].assign(dom.size, 0.0);
    }
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const BlockGrid& g = dom.blocks[b].grid;
        for (int p = 0; p < g.npts(); ++p) {
            double a[2][2], c[2][2];
            forcing_coeffs(var, g.X1[p], g.X2[p], a, c);
            for (int L = 0; L < 2; ++L) {
                double p0 = phase(L, g.X1[p], g.X2[p], 0), s0 = std::sin(p0), c0 = std::cos(p0);
                for (int J = 0; J < 2; ++J) {
                    dom.comp((*P)[L], b, J)[p] = a[J][L] * s0 + c[J][L] * c0;
                    dom.comp((*Q)[L], b, J)[p] = -a[J][L] * c0 + c[J][L] * s0;
                }
            }
        }
    }
    S.forcing = [P, Q](double t, std::vector<double>& f) {
        for (int L = 0; L < 2; ++L) {
            const double cw = std::cos(om[L] * t), sw = std::sin(om[L] * t);
            const double* pl = (*P)[L].data();
            const double* ql = (*Q)[L].data();
            for (std::size_t i = 0; i < f.size(); ++i)
                f[i] += pl[i] * cw + ql[i] * sw;
        }
    };

    double hmax = 0;
    for (const Block& blk : dom.blocks) {
        const BlockGrid& g = blk.grid;
        for (int j = 0; j < g.n2; ++j)
            for (int i = 0; i < g.n1; ++i) {
                int p = i + g.n1 * j;
                if (i + 1 < g.n1)
                    hmax = std::max(hmax, std::hypot(g.X1[p + 1] - g.X1[p], g.X2[p + 1] - g.X2[p]));
                if (j + 1 < g.n2)
                    hmax = std::max(hmax, std::hypot(g.X1[p + g.n1] - g.X1[p], g.X2[p + g.n1] - g.X2[p]));
            }
    }
    S.ppwl = mms_wavelength() / hmax;
    return S;
}

void mms_fill(const Domain& dom, double t, State& s)
{
    s.u.assign(dom.size, 0.0);
    s.v.assign(dom.size, 0.0);
    s.t = t;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const BlockGrid& g = dom.blocks[b].grid;
        for (int p = 0; p < g.npts(); ++p) {
            Vec2 u = mms_displacement(g.X1[p], g.X2[p], t), v = mms_velocity(g.X1[p], g.X2[p], t);
            for (int J = 0; J < 2; ++J) {
                dom.comp(s.u, b, J)[p] = u[J];
                dom.comp(s.v, b, J)[p] = v[J];
            }
        }
    }
}

double l2_error(const Domain& dom, const std::vector<double>& numeric, const std::vector<double>& exact)
{
    if (numeric.size() != dom.size || exact.size() != dom.size)
        throw std::invalid_argument("l2_error: shape mismatch");
    double s = 0;
    for (int b = 0; b < int(dom.blocks.size()); ++b) {
        const Block& blk = dom.blocks[b];
        const int n1 = blk.grid.n1;
        for (int J = 0; J < 2; ++J) {
            const double* x = dom.comp(numeric, b, J);
            const double* y = dom.comp(exact, b, J);
            for (int p = 0; p < blk.npts(); ++p) {
                double e = x[p] - y[p];
                s += blk.metrics.J[p] * blk.op1.norm_weights[p % n1] * blk.op2.norm_weights[p / n1] * e * e;
            }
        }
    }
    return std::sqrt(s);
}

MMSResult run_mms(const MMSProblem& pb, int order, int h_inv, Stencil stencil)
{
    MMSSetup S = mms_setup(pb, order, h_inv, stencil);
    const Domain& dom = *S.dom;
    State s;
    mms_fill(dom, 0.0, s);
    MMSResult r;
    r.ppwl = S.ppwl;
    double dt0 = estimate_dt(*S.op, pb.cfl);
    r.steps = std::max(1, int(std::ceil(pb.final_time / dt0 - 1e-12)));
    r.dt = pb.final_time / r.steps;
    RunOptions opt;
    opt.dt = r.dt;
    opt.n_steps = r.steps;
    rk4_advance(*S.op, s, &S.forcing, opt);
    State ex;
    mms_fill(dom, pb.final_time, ex);
    r.error = l2_error(dom, s.u, ex.u);
    return r;
}

double ConvergenceReport::average_rate(int order) const
{
    double s = 0;
    int n = 0;
    for (const auto& r : rows)
        if (r.order == order && std::isfinite(r.rate)) {
            s += r.rate;
            ++n;
        }
    return n ? s / n : std::numeric_limits<double>::quiet_NaN();
}

double ConvergenceReport::lsq_rate(int order) const
{
    std::vector<double> x, y;
    for (const auto& r : rows)
        if (r.order == order && !r.failed && r.error > 0) {
            x.push_back(std::log(1.0 / r.h_inv));
            y.push_back(std::log(r.error));
        }
    const std::size_t n = x.size();
    if (n < 2)
        return std::numeric_limits<double>::quiet_NaN();
    double mx = 0, my = 0;
    for (std::size_t i = 0; i < n; ++i) {
        mx += x[i] / n;
        my += y[i] / n;
    }
    double sxy = 0, sxx = 0;
    for (std::size_t i = 0; i < n; ++i) {
        sxy += (x[i] - mx) * (y[i] - my);
        sxx += (x[i] - mx) * (x[i] - mx);
    }
    return sxy / sxx;
}

ConvergenceReport run_convergence(const MMSProblem& pb, const std::vector<int>& orders,
                                  const std::vector<int>& resolutions, Stencil stencil)
{
    if (!std::is_sorted(resolutions.begin(), resolutions.end()))
        throw std::invalid_argument("run_convergence: resolutions must be ascending");
    ConvergenceReport rep;
    const double nan = std::numeric_limits<double>::quiet_NaN();
    for (int order : orders) {
        const ConvergenceRow* prev = nullptr;
        for (int h_inv : resolutions) {
            ConvergenceRow row;
            row.order = order;
            row.stencil = stencil;
            row.h_inv = h_inv;
            row.rate = nan;
            try {
                MMSResult r = run_mms(pb, order, h_inv, stencil);
                row.error = r.error;
                row.ppwl = r.ppwl;
            } catch (const InstabilityError& e) {
                row.failed = true;
                row.error = nan;
                row.message = e.what();
            }
            if (!row.failed && prev && !prev->failed)
                row.rate = std::log(prev->error / row.error) / std::log(double(h_inv) / prev->h_inv);
            rep.rows.push_back(row);
            prev = &rep.rows.back();
        }
    }
    return rep;
}

std::string to_string(Stencil s) { return s == Stencil::Narrow ? "narrow" : "wide"; }

std::string to_string(AuditBoundary b)
{
    switch (b) {
    case AuditBoundary::Traction: return "traction";
    case AuditBoundary::Displacement: return "displacement";
    default: return "mixed";
    }
}

void write_convergence_csv(const ConvergenceReport& r, const std::string& path)
{
    std::ostringstream os;
    os << "h_inv,ppwl,order,stencil,log10_error,rate\n";
    for (const auto& row : r.rows)
        os << row.h_inv << ',' << csv_number(row.ppwl) << ',' << row.order << ',' << to_string(row.stencil) << ','
           << csv_number(row.failed ? std::numeric_limits<double>::quiet_NaN() : std::log10(row.error)) << ','
           << csv_number(row.rate) << '\n';
    write_atomic(path, os.str());
}

AuditReport audit_self_adjointness(const AuditConfig& cfg)
{
    using clock = std::chrono::steady_clock;
    const FaceKind outer = cfg.boundary == AuditBoundary::Displacement ? FaceKind::Displacement : FaceKind::Robin;
    auto lay = two_block(cfg.n, cfg.n, 0.1, cfg.reversed, outer);
    if (cfg.boundary == AuditBoundary::Mixed) {
        lay.tags[0][0].kind = FaceKind::Displacement;
        lay.tags[1][2].kind = FaceKind::Displacement;
    }
    const std::size_t unknowns = 2 * std::size_t(cfg.n) * cfg.n * lay.grids.size();
    if (unknowns > cfg.cap)
        throw SizeCapError("audit grid has " + std::to_string(unknowns) + " unknowns, above the dense cap of " +
                           std::to_string(cfg.cap));
    Domain dom = assemble_domain(lay.grids, lay.tags, lay.interfaces, cfg.order);
    std::vector<StiffnessField> C;
    for (int b = 0; b < int(dom.blocks.size()); ++b)
        C.push_back(random_stiffness(cfg.seed * 1000 + b, dom.blocks[b].npts()));
    ElasticOperator op(dom, C, cfg.stencil);
    op.set_beta(cfg.beta);
    if (cfg.boundary == AuditBoundary::Mixed) {
        FaceSat sat;
        sat.U = [](const FacePoint& fp) {
            double a = 1 + fp.X1 * fp.X1, c = 0.5;
            return std::array<double, 4>{a, c, c, 2.0};
        };
        op.set_face(0, 3, sat);
    }

    AuditReport rep;
    rep.config = cfg;
    auto t0 = clock::now();
    DenseSystem S = assemble_dense(op, cfg.cap);
    rep.assemble_seconds = std::chrono::duration<double>(clock::now() - t0).count();
    rep.unknowns = S.A.rows;
    const int n = S.A.rows;
    double amax = 0, asym = 0;
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) {
            amax = std::max(amax, std::abs(S.A(i, j)));
            asym = std::max(asym, std::abs(S.A(i, j) - S.A(j, i)));
        }
    rep.asymmetry_rel = asym / amax;
    if (cfg.certificate) {
        auto t1 = clock::now();
        rep.radius_lower = spectral_radius_estimate(S.A.a, n);
        std::vector<double> B(S.A.a.size());
        const double shift = 1e-10 * rep.radius_lower;
        for (int i = 0; i < n; ++i)
            for (int j = i; j < n; ++j)
                B[std::size_t(i) * n + j] = -S.A(i, j) + (i == j ? shift : 0.0);
        rep.certified = positive_definite(std::move(B), n);
        rep.cert_seconds = std::chrono::duration<double>(clock::now() - t1).count();
    }
    if (cfg.eigenvalues) {
        double h = std::min(dom.blocks[0].grid.h1, dom.blocks[0].grid.h2);
        auto t1 = clock::now();
        std::vector<double> ev = sym_eigenvalues(std::move(S.A.a), n);
        rep.eig_seconds = std::chrono::duration<double>(clock::now() - t1).count();
        for (double& e : ev)
            e *= h;
        rep.max_eig = ev.back();
        rep.spectral_radius = std::max(std::abs(ev.front()), std::abs(ev.back()));
        rep.max_eig_scaled = rep.max_eig / rep.spectral_radius;
        for (int k = 0; k < std::min(n, 5); ++k)
            rep.top_eigs.push_back(ev[n - 1 - k]);
    } else {
        rep.max_eig = rep.spectral_radius = rep.max_eig_scaled = std::numeric_limits<double>::quiet_NaN();
    }
    return rep;
}

void write_audit_csv(const std::vector<AuditReport>& r, const std::string& path)
{
    std::ostringstream os;
    os << "order,stencil,asymmetry_rel,max_eig_scaled,spectral_radius\n";
    for (const auto& a : r)
        os << a.config.order << ',' << to_string(a.config.stencil) << ',' << csv_number(a.asymmetry_rel) << ','
           << csv_number(a.max_eig_scaled) << ',' << csv_number(a.spectral_radius) << '\n';
    write_atomic(path, os.str());
}

}
