#include "esbp/linalg.hpp"
#include "esbp/sbp1d.hpp"

#include <doctest.h>

#include <cmath>
#include <random>

using namespace esbp;

namespace {

const CertCheck& find(const CertReport& r, const std::string& name)
{
    for (const auto& c : r.checks)
        if (c.name == name)
            return c;
    FAIL("missing check " << name);
    return r.checks.front();
}

std::vector<double> grid(int n, double h)
{
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i)
        x[i] = i * h;
    return x;
}

}

TEST_CASE("order 2 norm and boundary row")
{
    auto op = build_operator_set(2, 5, 0.25, false);
    const double w[] = {0.5, 1, 1, 1, 0.5};
    for (int i = 0; i < 5; ++i)
        CHECK(op.norm_weights[i] == doctest::Approx(0.25 * w[i]).epsilon(1e-15));
    CHECK(op.d1_at(0, 0) == doctest::Approx(-4.0));
    CHECK(op.d1_at(0, 1) == doctest::Approx(4.0));
    CHECK(op.d1_at(0, 2) == 0.0);
}

TEST_CASE("d1 annihilates constants and satisfies the SBP identity")
{
    for (int order : {2, 4, 6})
        for (int n : {min_points(order), 24, 57}) {
            auto op = build_operator_set(order, n, 1.0 / (n - 1), true);
            auto d = apply_d1(op, std::vector<double>(n, 1.0));
            for (double v : d)
                CHECK(std::abs(v) < 1e-11 * (n - 1));
            Dense D = dense_d1(op);
            double res = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    double v = op.norm_weights[i] * D(i, j) + D(j, i) * op.norm_weights[j];
                    if (i == 0 && j == 0)
                        v += 1;
                    if (i == n - 1 && j == n - 1)
                        v -= 1;
                    res = std::max(res, std::abs(v));
                }
            CHECK(res <= 1e-13);
        }
}

TEST_CASE("rejects bad arguments")
{
    CHECK_THROWS_AS(build_operator_set(3, 20, 0.1, false), std::invalid_argument);
    CHECK_THROWS_AS(build_operator_set(4, min_points(4) - 1, 0.1, false), std::invalid_argument);
    CHECK_THROWS_AS(build_operator_set(2, 10, 0.0, false), std::invalid_argument);
    auto op = build_operator_set(2, 10, 0.1, false);
    CHECK_THROWS_AS(apply_d2(op, std::vector<double>(9, 1.0), std::vector<double>(10, 1.0)), std::invalid_argument);
    CHECK_THROWS_AS(extract_remainder(op, std::vector<double>(11, 1.0)), std::invalid_argument);
}

TEST_CASE("narrow second derivative on simple data")
{
    const int n = 21;
    const double h = 1.0 / (n - 1);
    auto x = grid(n, h);
    auto op = build_operator_set(2, n, h, false);
    std::vector<double> one(n, 1.0), sq(n), lin(n), b(n);
    for (int i = 0; i < n; ++i) {
        sq[i] = x[i] * x[i];
        lin[i] = x[i];
        b[i] = 1 + x[i];
    }
    auto y = apply_d2(op, one, sq);
    for (int i = 1; i < n - 1; ++i)
        CHECK(y[i] == doctest::Approx(2.0).epsilon(1e-12));
    auto z = apply_d2(op, one, one);
    for (double v : z)
        CHECK(std::abs(v) < 1e-10);
    auto w = apply_d2(op, b, lin);
    for (int i = 1; i < n - 1; ++i)
        CHECK(w[i] == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("remainder symmetric and semidefinite")
{
    {
        auto op = build_operator_set(2, 6, 0.2, false);
        Dense R = extract_remainder(op, std::vector<double>(6, 1.0));
        double a = 0;
        for (int i = 0; i < 6; ++i)
            for (int j = 0; j < 6; ++j)
                a = std::max(a, std::abs(R(i, j) - R(j, i)));
        CHECK(a <= 1e-14);
    }
    std::mt19937 rng(3);
    std::uniform_real_distribution<double> U(0, 1);
    for (bool fc : {false, true}) {
        auto op = build_operator_set(4, 12, 1.0 / 11, fc);
        std::vector<double> b(12);
        for (auto& v : b)
            v = U(rng);
        Dense R = extract_remainder(op, b);
        auto ev = sym_eigenvalues(R.a, 12);
        double nrm = std::max(std::abs(ev.front()), std::abs(ev.back()));
        CHECK(ev.front() >= -1e-10 * nrm);
    }
}

TEST_CASE("remainder vanishes to order 2q on smooth data")
{
    for (int order : {2, 4, 6}) {
        std::vector<double> hs, vals;
        for (int n : {21, 41, 81}) {
            const double h = 1.0 / (n - 1);
            auto op = build_operator_set(order, n, h, false);
            Dense R = extract_remainder(op, std::vector<double>(n, 1.0));
            std::vector<double> u(n);
            for (int i = 0; i < n; ++i)
                u[i] = std::sin(4 * i * h);
            double s = 0;
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j)
                    s += u[i] * R(i, j) * u[j];
            hs.push_back(std::log(h));
            vals.push_back(std::log(std::abs(s)));
        }
        double slope = (vals[2] - vals[0]) / (hs[2] - hs[0]);
        CHECK(slope > order - 0.5);
    }
}

TEST_CASE("certification passes for every shipped operator set")
{
    for (int order : {2, 4, 6})
        for (int n : {12, 24})
            for (bool fc : {false, true}) {
                auto rep = certify_operator_set(build_operator_set(order, n, 1.0 / (n - 1), fc), 1, 20);
                CHECK_MESSAGE(rep.pass(), "order " << order << " n " << n << " fc " << fc);
                CHECK(find(rep, "sbp_identity").residual <= 1e-13);
            }
    auto rep = certify_operator_set(build_operator_set(4, 30, 1.0 / 29, true));
    CHECK(find(rep, "fully_compatible_rows").pass);
    CHECK(find(rep, "fully_compatible_rows").residual == 0.0);
}

TEST_CASE("certification detects a perturbed coefficient")
{
    auto op = build_operator_set(6, 24, 1.0 / 23, false);
    op.d1_val[op.d1_off[1] + 2] += 1e-3;
    auto rep = certify_operator_set(op);
    CHECK_FALSE(rep.pass());
    CHECK_FALSE(find(rep, "sbp_identity").pass);
}

TEST_CASE("fully compatible adaptation changes only the end rows")
{
    for (int order : {2, 4, 6}) {
        const int n = 30;
        std::vector<double> b(n);
        for (int i = 0; i < n; ++i)
            b[i] = 1 + 0.5 * std::sin(i * 0.3);
        Dense A = dense_d2(build_operator_set(order, n, 1.0 / (n - 1), false), b);
        Dense B = dense_d2(build_operator_set(order, n, 1.0 / (n - 1), true), b);
        for (int i = 1; i < n - 1; ++i)
            for (int j = 0; j < n; ++j)
                CHECK(A(i, j) == B(i, j));
    }
}
