#include "esbp/verify.hpp"

#include <doctest.h>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <numbers>
#include <random>
#include <string>

using namespace esbp;

namespace {

// sixth-order central difference
template <class F>
double cd6(F f, double x, double h)
{
    return (-f(x - 3 * h) + 9 * f(x - 2 * h) - 45 * f(x - h) + 45 * f(x + h) - 9 * f(x + 2 * h) + f(x + 3 * h)) /
           (60 * h);
}

// f = rho u_tt - d_I sigma_IJ with every derivative taken by differences of the closed-form displacement
Vec2 forcing_oracle(MMSVariant v, double X1, double X2, double t)
{
    const double h = 1e-2;
    auto du = [&](int K, int L, double y1, double y2) {
        auto g = [&](double s) { return mms_displacement(K == 0 ? s : y1, K == 1 ? s : y2, t)[L]; };
        return cd6(g, K == 0 ? y1 : y2, h);
    };
    auto sigma = [&](int I, int J, double y1, double y2) {
        Tensor4 C = mms_problem_stiffness(v, y1, y2);
        double s = 0;
        for (int K = 0; K < 2; ++K)
            for (int L = 0; L < 2; ++L)
                s += C[cidx(I, J, K, L)] * du(K, L, y1, y2);
        return s;
    };
    Vec2 f;
    for (int J = 0; J < 2; ++J) {
        auto ut = [&](double s) { return mms_velocity(X1, X2, s)[J]; };
        double div = cd6([&](double s) { return sigma(0, J, s, X2); }, X1, h) +
                     cd6([&](double s) { return sigma(1, J, X1, s); }, X2, h);
        f[J] = mms_problem_density(v, X1, X2) * cd6(ut, t, h) - div;
    }
    return f;
}

Domain unit_box(int n, Mapping m = identity_map())
{
    std::array<FaceTag, 4> tags;
    return assemble_domain({build_block(m, n, n)}, {tags}, {}, 4);
}

}

TEST_CASE("manufactured solution derivatives")
{
    std::mt19937 rng(11);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k = 0; k < 10; ++k) {
        double x = U(rng), y = U(rng), t = U(rng) + 1;
        auto g = mms_displacement_grad(x, y, t);
        for (int L = 0; L < 2; ++L) {
            CHECK(g[0 * 2 + L] == doctest::Approx(cd6([&](double s) { return mms_displacement(s, y, t)[L]; }, x, 1e-2)).epsilon(1e-8));
            CHECK(g[1 * 2 + L] == doctest::Approx(cd6([&](double s) { return mms_displacement(x, s, t)[L]; }, y, 1e-2)).epsilon(1e-8));
            CHECK(mms_velocity(x, y, t)[L] == doctest::Approx(cd6([&](double s) { return mms_displacement(x, y, s)[L]; }, t, 1e-2)).epsilon(1e-8));
        }
    }
}

TEST_CASE("closed-form forcing against a difference oracle")
{
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(-1, 1), T(0, 1);
    for (MMSVariant v : {MMSVariant::Anisotropic, MMSVariant::Isotropic})
        for (int k = 0; k < 20; ++k) {
            double x = U(rng), y = U(rng), t = T(rng);
            Vec2 f = mms_forcing(v, x, y, t), o = forcing_oracle(v, x, y, t);
            CHECK(std::abs(f[0] - o[0]) <= 1e-6);
            CHECK(std::abs(f[1] - o[1]) <= 1e-6);
        }
}

TEST_CASE("isotropic forcing two ways")
{
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int k = 0; k < 50; ++k) {
        double x = U(rng), y = U(rng), t = 2 * U(rng);
        Vec2 a = mms_forcing(MMSVariant::Isotropic, x, y, t), b = mms_forcing_isotropic(x, y, t);
        CHECK(std::abs(a[0] - b[0]) <= 1e-12);
        CHECK(std::abs(a[1] - b[1]) <= 1e-12);
    }
}

TEST_CASE("forcing is periodic in time")
{
    const double P = 2 * std::numbers::pi;
    for (double t : {0.0, 0.3, 0.9})
        for (MMSVariant v : {MMSVariant::Anisotropic, MMSVariant::Isotropic}) {
            Vec2 a = mms_forcing(v, 0.4, -0.7, t), b = mms_forcing(v, 0.4, -0.7, t + P);
            CHECK(std::abs(a[0] - b[0]) <= 1e-12);
            CHECK(std::abs(a[1] - b[1]) <= 1e-12);
        }
}

TEST_CASE("exact traction")
{
    Vec2 tr = mms_traction(MMSVariant::Isotropic, 0.2, 0.1, 0, 1, 0.5);
    auto g = mms_displacement_grad(0.2, 0.1, 0.5);
    // sigma_21 = mu (d2 u1 + d1 u2), sigma_22 = lambda div + 2 mu d2 u2
    CHECK(tr[0] == doctest::Approx(g[2] + g[1]));
    CHECK(tr[1] == doctest::Approx(g[0] + g[3] + 2 * g[3]));
}

TEST_CASE("quadrature-weighted l2 error")
{
    Domain d = unit_box(21);
    std::vector<double> a(d.size, 0.0), one(d.size, 0.0), both(d.size, 1.0);
    for (int p = 0; p < d.blocks[0].npts(); ++p)
        d.comp(one, 0, 0)[p] = 1;
    CHECK(l2_error(d, a, a) == 0);
    CHECK(l2_error(d, one, a) == doctest::Approx(1).epsilon(1e-14));
    CHECK(l2_error(d, both, a) == doctest::Approx(std::sqrt(2.0)).epsilon(1e-14));
    std::vector<double> three(d.size, 3.0);
    CHECK(l2_error(d, three, a) == doctest::Approx(3 * std::sqrt(2.0)).epsilon(1e-14));
    CHECK_THROWS_AS(l2_error(d, std::vector<double>(3), a), std::invalid_argument);

    // norm of the exact field against a fine trapezoid rule
    Domain s = unit_box(41, affine_map(1.5, 0.3, -0.2, 1.1, -0.4, 0.1));
    State ex;
    mms_fill(s, 0.3, ex);
    double got = l2_error(s, std::vector<double>(s.size, 0.0), ex.u);
    const int m = 2000;
    const double J = 1.5 * 1.1 + 0.3 * 0.2;
    double sum = 0;
    for (int j = 0; j <= m; ++j)
        for (int i = 0; i <= m; ++i) {
            double x = double(i) / m, y = double(j) / m;
            double w = (i == 0 || i == m ? 0.5 : 1.0) * (j == 0 || j == m ? 0.5 : 1.0);
            Vec2 u = mms_displacement(1.5 * x + 0.3 * y - 0.4, -0.2 * x + 1.1 * y + 0.1, 0.3);
            sum += w * (u[0] * u[0] + u[1] * u[1]);
        }
    double oracle = std::sqrt(sum * J / (double(m) * m));
    CHECK(got == doctest::Approx(oracle).epsilon(1e-3));
}

TEST_CASE("manufactured problem setup")
{
    MMSProblem pb;
    auto S = mms_setup(pb, 4, 20, Stencil::Narrow);
    CHECK(S.dom->blocks.size() == 4);
    CHECK(S.dom->blocks[0].grid.n1 == 21);
    auto S2 = mms_setup(pb, 4, 40, Stencil::Narrow);
    CHECK(S2.ppwl / S.ppwl == doctest::Approx(2).epsilon(0.05));
    CHECK_THROWS_AS(mms_setup(pb, 4, 0, Stencil::Narrow), std::invalid_argument);

    // the spatial residual at the exact solution shrinks under refinement
    double res[2];
    int hs[2] = {20, 40};
    for (int k = 0; k < 2; ++k) {
        auto M = mms_setup(pb, 4, hs[k], Stencil::Narrow);
        State s;
        mms_fill(*M.dom, 0.3, s);
        std::vector<double> acc, utt(M.dom->size);
        M.op->rhs(s.u, acc, 0.3, &M.forcing);
        for (std::size_t i = 0; i < s.u.size(); ++i)
            utt[i] = -s.u[i];
        // u_tt = -omega^2 u with omega = 1 for the first component and 2 for the second
        for (int b = 0; b < int(M.dom->blocks.size()); ++b)
            for (int p = 0; p < M.dom->blocks[b].npts(); ++p)
                M.dom->comp(utt, b, 1)[p] *= 4;
        res[k] = l2_error(*M.dom, acc, utt);
    }
    INFO("residuals " << res[0] << " " << res[1]);
    CHECK(res[1] < res[0] / 2);
}

TEST_CASE("error stays at truncation level over the run")
{
    MMSProblem pb;
    auto S = mms_setup(pb, 4, 20, Stencil::Narrow);
    State s;
    mms_fill(*S.dom, 0, s);
    double dt0 = estimate_dt(*S.op, pb.cfl);
    int per = int(std::ceil(0.1 / dt0));
    RunOptions o;
    o.dt = 0.1 / per;
    o.n_steps = per;
    std::vector<double> err;
    for (int seg = 0; seg < 10; ++seg) {
        rk4_advance(*S.op, s, &S.forcing, o);
        State ex;
        mms_fill(*S.dom, s.t, ex);
        err.push_back(l2_error(*S.dom, s.u, ex.u));
    }
    CHECK(s.t == doctest::Approx(1));
    for (double e : err)
        CHECK(e <= 3 * err.front());
}

TEST_CASE("short convergence sweep")
{
    MMSProblem pb;
    auto rep = run_convergence(pb, {2}, {20, 40}, Stencil::Narrow);
    REQUIRE(rep.rows.size() == 2);
    CHECK(std::isnan(rep.rows[0].rate));
    CHECK(rep.rows[1].error < rep.rows[0].error);
    CHECK(rep.average_rate(2) == doctest::Approx(rep.rows[1].rate));
    CHECK(rep.lsq_rate(2) == doctest::Approx(rep.rows[1].rate).epsilon(1e-10));
    CHECK(rep.rows[1].rate > 1.6);
    CHECK(rep.rows[1].rate < 2.4);
    CHECK_THROWS_AS(run_convergence(pb, {2}, {40, 20}, Stencil::Narrow), std::invalid_argument);

    auto dir = std::filesystem::temp_directory_path() / "esbp_test_verify";
    write_convergence_csv(rep, (dir / "c.csv").string());
    std::ifstream in(dir / "c.csv");
    std::string head, first;
    std::getline(in, head);
    std::getline(in, first);
    CHECK(head == "h_inv,ppwl,order,stencil,log10_error,rate");
    CHECK(first.rfind("20,", 0) == 0);
    CHECK(first.substr(first.size() - 4) == ",nan");
}

TEST_CASE("small self-adjointness audit")
{
    for (AuditBoundary bc : {AuditBoundary::Traction, AuditBoundary::Displacement, AuditBoundary::Mixed})
        for (Stencil st : {Stencil::Narrow, Stencil::Wide}) {
            AuditConfig c;
            c.order = 6;
            c.n = 14;
            c.boundary = bc;
            c.stencil = st;
            c.reversed = bc == AuditBoundary::Mixed;
            auto r = audit_self_adjointness(c);
            CHECK(r.unknowns == 2 * 14 * 14 * 2);
            CHECK(r.symmetric());
            CHECK(r.semidefinite());
            CHECK(r.spectral_radius > 0);
        }
    AuditConfig big;
    big.n = 120;
    CHECK_THROWS_AS(audit_self_adjointness(big), SizeCapError);

    AuditConfig c;
    c.n = 10;
    c.eigenvalues = false;
    auto r = audit_self_adjointness(c);
    auto dir = std::filesystem::temp_directory_path() / "esbp_test_verify";
    write_audit_csv({r}, (dir / "a.csv").string());
    std::ifstream in(dir / "a.csv");
    std::string head;
    std::getline(in, head);
    CHECK(head == "order,stencil,asymmetry_rel,max_eig_scaled,spectral_radius");
}
