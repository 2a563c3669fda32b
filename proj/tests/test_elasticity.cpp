#include "esbp/elasticity.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace esbp;

TEST_CASE("isotropic stiffness components")
{
    auto C = isotropic_stiffness(1, 1);
    CHECK(C[cidx(0, 0, 0, 0)] == 3);
    CHECK(C[cidx(0, 0, 1, 1)] == 1);
    CHECK(C[cidx(0, 1, 0, 1)] == 1);
    CHECK(C[cidx(0, 1, 1, 0)] == 1);
    for (double v : isotropic_stiffness(0, 0))
        CHECK(v == 0);
    auto D = isotropic_stiffness(1, 2);
    CHECK(D[cidx(0, 1, 0, 1)] == 2);
    CHECK(D[cidx(0, 0, 0, 0)] == 5);
    CHECK_THROWS_AS(isotropic_stiffness(1, -1), MaterialError);
    CHECK_THROWS_AS(isotropic_stiffness(-3, 1), MaterialError);
}

TEST_CASE("manufactured material")
{
    auto C = mms_stiffness(0, 0);
    CHECK(mms_density(0, 0) == 2);
    CHECK(C[cidx(0, 0, 0, 0)] == 8);
    CHECK(C[cidx(0, 1, 0, 1)] == 8);
    CHECK(C[cidx(0, 0, 1, 1)] == 0);
    std::mt19937 rng(5);
    std::uniform_real_distribution<double> U(-2, 2);
    for (int k = 0; k < 20; ++k) {
        double x = U(rng), y = U(rng);
        auto c = mms_stiffness(x, y);
        CHECK(major_symmetric(c, 1e-14));
        // semidefinite strain energy for random strains
        for (int s = 0; s < 5; ++s) {
            double S[4] = {U(rng), U(rng), U(rng), U(rng)};
            double e = 0;
            for (int a = 0; a < 4; ++a)
                for (int b = 0; b < 4; ++b)
                    e += S[a] * c[a * 4 + b] * S[b];
            CHECK(e >= 0);
        }
        // gradient against central differences
        const double h = 1e-5;
        auto g = mms_stiffness_grad(x, y);
        auto cp = mms_stiffness(x + h, y), cm = mms_stiffness(x - h, y);
        auto dp = mms_stiffness(x, y + h), dm = mms_stiffness(x, y - h);
        for (int a = 0; a < 16; ++a) {
            CHECK(g[0][a] == doctest::Approx((cp[a] - cm[a]) / (2 * h)).epsilon(1e-8));
            CHECK(g[1][a] == doctest::Approx((dp[a] - dm[a]) / (2 * h)).epsilon(1e-8));
        }
    }
}

TEST_CASE("random stiffness")
{
    auto a = random_stiffness(42, 50), b = random_stiffness(42, 50);
    for (int p = 0; p < 50; ++p) {
        auto c = a.at(p);
        CHECK(major_symmetric(c, 0.0));
        CHECK(c[cidx(0, 0, 0, 0)] >= 4);
        CHECK(c[cidx(0, 0, 0, 0)] <= 5);
        CHECK(a.rho[p] > 0);
        CHECK(c == b.at(p));
    }
}

TEST_CASE("transformed stiffness")
{
    BlockMetrics m;
    m.n1 = m.n2 = 1;
    m.J = {1};
    m.F11 = {1};
    m.F12 = {0};
    m.F21 = {0};
    m.F22 = {1};
    auto C = random_stiffness(3, 1);
    auto t = transform_stiffness(C, m);
    for (int k = 0; k < 16; ++k)
        CHECK(t.c[k][0] == C.C[k][0]);

    auto iso = isotropic_stiffness(1, 1);
    auto c2 = transform_point(iso, {0.5, 0, 0, 0.5}, 4);
    for (int k = 0; k < 16; ++k)
        CHECK(c2[k] == doctest::Approx(iso[k]));

    std::mt19937 rng(9);
    std::uniform_real_distribution<double> U(-1, 1);
    for (int s = 0; s < 10; ++s) {
        std::array<double, 4> F{1.5 + U(rng), U(rng), U(rng), 1.5 + U(rng)};
        double J = 1 / (F[0] * F[3] - F[1] * F[2]);
        auto c = transform_point(random_stiffness(s, 1).at(0), F, J);
        CHECK(major_symmetric(c, 1e-13 * std::abs(c[0])));
    }
    m.J = {-1};
    CHECK_THROWS_AS(transform_stiffness(C, m), MetricError);
}

TEST_CASE("Christoffel speeds")
{
    auto iso = isotropic_stiffness(1, 1);
    for (double th : {0.0, 0.3, 1.2, 2.9}) {
        auto v = christoffel_speeds(iso, 1, {std::cos(th), std::sin(th)});
        CHECK(std::abs(v[0] - 1) <= 1e-12);
        CHECK(std::abs(v[1] - std::sqrt(3.0)) <= 1e-12);
    }
    CHECK(christoffel_speeds(iso, 1, {1, 0}) == christoffel_speeds(iso, 1, {0, 1}));

    Tensor4 ortho{};
    ortho[cidx(0, 0, 0, 0)] = 4;
    ortho[cidx(1, 0, 1, 0)] = 1;
    ortho[cidx(1, 1, 1, 1)] = 4;
    ortho[cidx(0, 1, 0, 1)] = 1;
    auto v = christoffel_speeds(ortho, 1, {1, 0});
    CHECK(v[0] == doctest::Approx(1));
    CHECK(v[1] == doctest::Approx(2));

    Tensor4 bad{};
    bad[cidx(0, 0, 0, 0)] = -1;
    CHECK_THROWS_AS(christoffel_speeds(bad, 1, {1, 0}), MaterialError);
    CHECK_THROWS_AS(christoffel_speeds(iso, 0, {1, 0}), MaterialError);
}

TEST_CASE("maximum wave speed")
{
    BlockMetrics m;
    m.n1 = 1;
    m.n2 = 1;
    m.J = {1};
    m.F11 = {1};
    m.F12 = {0};
    m.F21 = {0};
    m.F22 = {1};
    auto t = transform_stiffness(constant_field(isotropic_stiffness(1, 1), 1, 1), m);
    for (int n : {8, 90, 360})
        CHECK(max_wave_speed(t, n) == doctest::Approx(std::sqrt(3.0)).epsilon(1e-12));
    CHECK_THROWS(max_wave_speed(t, 4));

    Tensor4 ortho{};
    ortho[cidx(0, 0, 0, 0)] = 4;
    ortho[cidx(1, 0, 1, 0)] = 1;
    ortho[cidx(1, 1, 1, 1)] = 1;
    ortho[cidx(0, 1, 0, 1)] = 1;
    auto to = transform_stiffness(constant_field(ortho, 1, 1), m);
    CHECK(max_wave_speed(to, 8) == doctest::Approx(2));

    StiffnessField mm;
    mm.resize(1);
    mm.set(0, mms_stiffness(0.3, -0.7));
    mm.rho[0] = mms_density(0.3, -0.7);
    auto tm = transform_stiffness(mm, m);
    CHECK(max_wave_speed(tm, 360) >= max_wave_speed(tm, 8));
}

TEST_CASE("slowness curves")
{
    auto iso = isotropic_stiffness(1, 1);
    auto pts = slowness_surface(iso, 1, 36);
    CHECK(pts.size() == 72);
    for (std::size_t k = 0; k < 36; ++k) {
        double rs = std::hypot(pts[k].s1, pts[k].s2), rp = std::hypot(pts[36 + k].s1, pts[36 + k].s2);
        CHECK(pts[k].branch == 0);
        CHECK(rs == doctest::Approx(1).epsilon(1e-12));
        CHECK(rp == doctest::Approx(1 / std::sqrt(3.0)).epsilon(1e-12));
        CHECK(rp < rs);
    }
    auto four = slowness_surface(iso, 1, 4);
    CHECK(four.size() == 8);
    CHECK(four[1].s1 == 0.0);
    CHECK(four[1].s2 == doctest::Approx(1));
}
