#include "esbp/discretization.hpp"

#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <random>

using namespace esbp;

namespace {

Domain box(int n, int order, std::array<FaceKind, 4> kinds, Mapping m = identity_map())
{
    std::array<FaceTag, 4> tags;
    for (int f = 0; f < 4; ++f)
        tags[f].kind = kinds[f];
    return assemble_domain({build_block(m, n, n)}, {tags}, {}, order);
}

Domain bar(int n, int order, bool reversed, double amp, FaceKind outer = FaceKind::Robin)
{
    auto L = two_block(n, n, amp, reversed, outer);
    return assemble_domain(L.grids, L.tags, L.interfaces, order);
}

std::vector<StiffnessField> iso(const Domain& d, double lambda = 1, double mu = 1)
{
    std::vector<StiffnessField> C;
    for (auto& b : d.blocks)
        C.push_back(constant_field(isotropic_stiffness(lambda, mu), 1, b.npts()));
    return C;
}

std::vector<StiffnessField> rnd(const Domain& d, std::uint64_t seed)
{
    std::vector<StiffnessField> C;
    for (int b = 0; b < int(d.blocks.size()); ++b)
        C.push_back(random_stiffness(seed * 1000 + b, d.blocks[b].npts()));
    return C;
}

template <class F>
std::vector<double> field(const Domain& d, F fn)
{
    std::vector<double> u(d.size);
    for (int b = 0; b < int(d.blocks.size()); ++b) {
        const auto& g = d.blocks[b].grid;
        for (int p = 0; p < g.npts(); ++p) {
            Vec2 v = fn(g.X1[p], g.X2[p]);
            d.comp(u, b, 0)[p] = v[0];
            d.comp(u, b, 1)[p] = v[1];
        }
    }
    return u;
}

std::vector<double> random_vec(std::size_t n, unsigned seed)
{
    std::mt19937_64 rng(seed);
    std::normal_distribution<double> g;
    std::vector<double> u(n);
    for (auto& x : u)
        x = g(rng);
    return u;
}

double maxabs(const std::vector<double>& v)
{
    double m = 0;
    for (double x : v)
        m = std::max(m, std::abs(x));
    return m;
}

double maxdiff(const std::vector<double>& a, const std::vector<double>& b)
{
    double m = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

double dot(const std::vector<double>& a, const std::vector<double>& b)
{
    double s = 0;
    for (std::size_t i = 0; i < a.size(); ++i)
        s += a[i] * b[i];
    return s;
}

constexpr auto R = FaceKind::Robin;
constexpr auto D = FaceKind::Displacement;

}

TEST_CASE("volume operator annihilates constants")
{
    for (int order : {2, 4, 6})
        for (Stencil st : {Stencil::Narrow, Stencil::Wide}) {
            Domain d = bar(16, order, false, 0.1);
            ElasticOperator op(d, rnd(d, 3), st);
            auto u = field(d, [](double, double) { return Vec2{0.7, -1.3}; });
            CHECK(maxabs(elastic_apply(op, u)) <= 1e-9);
        }
}

TEST_CASE("volume operator annihilates linears with constant material")
{
    for (int order : {2, 4, 6})
        for (Stencil st : {Stencil::Narrow, Stencil::Wide}) {
            Domain d = box(18, order, {R, R, R, R}, affine_map(2, 0.3, -0.2, 1.5, 0.1, 0));
            std::vector<StiffnessField> C;
            C.push_back(random_stiffness(5, 1));
            C[0] = constant_field(C[0].at(0), 1, d.blocks[0].npts());
            ElasticOperator op(d, C, st);
            auto u = field(d, [](double x, double y) { return Vec2{1 + 2 * x - y, 0.5 * x + 3 * y}; });
            CHECK(maxabs(elastic_apply(op, u)) <= 1e-10);
        }
}

TEST_CASE("volume operator on sin(4 x1) converges in the interior")
{
    for (int order : {2, 4, 6}) {
        double err[2];
        int ns[2] = {41, 81};
        for (int k = 0; k < 2; ++k) {
            Domain d = box(ns[k], order, {R, R, R, R});
            ElasticOperator op(d, iso(d), Stencil::Narrow);
            auto u = field(d, [](double x, double) { return Vec2{std::sin(4 * x), 0}; });
            auto z = elastic_apply(op, u);
            const auto& g = d.blocks[0].grid;
            double e = 0;
            for (int p = 0; p < g.npts(); ++p)
                if (std::min({g.X1[p], 1 - g.X1[p], g.X2[p], 1 - g.X2[p]}) > 0.3) {
                    e = std::max(e, std::abs(d.comp(z, 0, 0)[p] + 48 * std::sin(4 * g.X1[p])));
                    e = std::max(e, std::abs(d.comp(z, 0, 1)[p]));
                }
            err[k] = e;
        }
        double slope = std::log(err[0] / err[1]) / std::log(80.0 / 40.0);
        INFO("order " << order << " errors " << err[0] << " " << err[1]);
        CHECK(slope >= order - 0.3);
    }
}

TEST_CASE("traction on a sheared field")
{
    Domain d = box(21, 4, {R, R, R, R});
    ElasticOperator op(d, iso(d), Stencil::Narrow);
    auto u = field(d, [](double, double y) { return Vec2{y, 0}; });
    std::vector<double> t1, t2;
    op.traction(0, 3, u, t1, t2);
    for (int t = 0; t < 21; ++t) {
        CHECK(t1[t] == doctest::Approx(1).epsilon(1e-12));
        CHECK(std::abs(t2[t]) <= 1e-12);
    }
    op.traction(0, 2, u, t1, t2);
    for (int t = 0; t < 21; ++t)
        CHECK(t1[t] == doctest::Approx(-1).epsilon(1e-12));
    auto c = field(d, [](double, double) { return Vec2{2, 5}; });
    op.traction(0, 1, c, t1, t2);
    CHECK(std::max(maxabs(t1), maxabs(t2)) <= 1e-12);
}

TEST_CASE("Robin SAT is a residual form")
{
    Domain d = box(17, 4, {R, R, R, R}, affine_map(1.2, 0.2, 0.1, 0.9, 0, 0));
    ElasticOperator op(d, rnd(d, 2), Stencil::Narrow);
    auto u = field(d, [](double x, double y) { return Vec2{std::sin(2 * x + y), std::cos(x - y)}; });
    std::vector<double> t1, t2, out;
    op.traction(0, 1, u, t1, t2);
    op.set_face(0, 1, {1, [&](const FacePoint& fp, double) { return Vec2{t1[fp.t], t2[fp.t]}; }, {}});
    op.face_sat(0, 1, u, out, 0);
    CHECK(maxabs(out) <= 1e-10);

    op.set_face(0, 1, {1, {}, [](const FacePoint&) { return std::array<double, 4>{2, 0.5, 0.5, 1}; }});
    op.face_sat(0, 1, std::vector<double>(d.size, 0.0), out, 0);
    CHECK(maxabs(out) == 0);

    op.set_face(0, 1, {1, {}, [](const FacePoint&) { return std::array<double, 4>{2, 0.5, 0.1, 1}; }});
    CHECK_THROWS_AS(op.face_sat(0, 1, u, out, 0), SatError);
}

TEST_CASE("displacement SAT")
{
    Domain d = box(17, 4, {D, R, D, R}, affine_map(1.2, 0.2, 0.1, 0.9, 0, 0));
    ElasticOperator op(d, rnd(d, 4), Stencil::Narrow);
    auto exact = [](double x, double y) { return Vec2{std::sin(2 * x + y), std::cos(x - y)}; };
    auto u = field(d, exact);
    std::vector<double> out;
    op.set_face(0, 0, {1, [&](const FacePoint& fp, double) { return exact(fp.X1, fp.X2); }, {}});
    op.face_sat(0, 0, u, out, 0);
    CHECK(maxabs(out) <= 1e-12);

    CHECK_THROWS_AS(op.set_face(0, 2, {0.5, {}, {}}), SatError);
    CHECK_THROWS_AS(op.set_beta(0.99), SatError);
    CHECK_THROWS_AS(op.set_face(0, 2, {0.0, {}, {}}), SatError);

    auto w = random_vec(d.size, 8);
    std::vector<double> s1, s2, s4;
    for (auto [beta, s] : {std::pair{1.0, &s1}, {2.0, &s2}, {4.0, &s4}}) {
        op.set_face(0, 2, {beta, {}, {}});
        op.face_sat(0, 2, w, *s, 0);
    }
    std::vector<double> z1(d.size), z2(d.size), t1(d.size), t2(d.size);
    for (std::size_t i = 0; i < d.size; ++i) {
        z1[i] = s2[i] - s1[i];
        z2[i] = (s4[i] - s2[i]) / 2;
        t1[i] = s1[i] - z1[i];
        t2[i] = s2[i] - 2 * z1[i];
    }
    CHECK(maxabs(z1) > 1);
    CHECK(maxdiff(z1, z2) <= 1e-12 * maxabs(z1));
    CHECK(maxdiff(t1, t2) <= 1e-12 * maxabs(z1));
    CHECK(maxabs(t1) > 0);

    // penalty grows like 1/h
    double zn[2];
    int ns[2] = {17, 33};
    for (int k = 0; k < 2; ++k) {
        Domain dk = box(ns[k], 4, {D, R, R, R});
        ElasticOperator ok(dk, iso(dk), Stencil::Narrow);
        auto one = field(dk, [](double, double) { return Vec2{1, 0}; });
        std::vector<double> a, b;
        ok.set_face(0, 0, {1, {}, {}});
        ok.face_sat(0, 0, one, a, 0);
        ok.set_face(0, 0, {2, {}, {}});
        ok.face_sat(0, 0, one, b, 0);
        const int mid = face_node(ns[k], ns[k], 0, ns[k] / 2);
        zn[k] = dk.comp(b, 0, 0)[mid] - dk.comp(a, 0, 0)[mid];
    }
    // JH-scaled entry carries 1/h1 from the penalty and 1/h1 from the inverse norm
    CHECK(zn[1] / zn[0] == doctest::Approx(4).epsilon(0.01));
}

TEST_CASE("interface SAT vanishes on linear fields")
{
    for (bool rev : {false, true})
        for (int order : {2, 4, 6}) {
            Domain d = bar(14, order, rev, 0.1);
            ElasticOperator op(d, iso(d, 2, 1), Stencil::Narrow);
            auto u = field(d, [](double x, double y) { return Vec2{0.3 + x - 2 * y, 1.5 * x + 0.5 * y}; });
            std::vector<double> out;
            op.interface_sat(0, u, out, 0);
            CHECK(maxabs(out) <= 1e-9);
            op.interface_sat(0, std::vector<double>(d.size, 0.0), out, 0);
            CHECK(maxabs(out) == 0);
            auto w = random_vec(d.size, 2);
            op.interface_sat(0, w, out, 0);
            CHECK(maxabs(out) > 1);
        }
    Domain d = bar(10, 4, false, 0.1);
    ElasticOperator op(d, iso(d), Stencil::Narrow);
    CHECK_THROWS_AS(op.set_interface(0, {0.5, {}, {}}), SatError);
}

TEST_CASE("dense assembly matches the matrix-free operator")
{
    for (Stencil st : {Stencil::Narrow, Stencil::Wide})
        for (bool rev : {false, true}) {
            auto L = two_block(10, 10, 0.1, rev, FaceKind::Robin);
            L.tags[0][0].kind = FaceKind::Displacement;
            L.tags[1][3].kind = FaceKind::Displacement;
            Domain d = assemble_domain(L.grids, L.tags, L.interfaces, 4);
            ElasticOperator op(d, rnd(d, 7), st);
            op.set_face(0, 2, {1, {}, [](const FacePoint&) { return std::array<double, 4>{1, 0.2, 0.2, 0.5}; }});
            auto S = assemble_dense(op);
            const int N = S.A.rows;
            REQUIRE(N == int(d.size));
            double amax = 0, asym = 0;
            for (int i = 0; i < N; ++i)
                for (int j = 0; j < N; ++j) {
                    amax = std::max(amax, std::abs(S.A(i, j)));
                    asym = std::max(asym, std::abs(S.A(i, j) - S.A(j, i)));
                }
            CHECK(asym <= 1e-13 * amax);
            for (unsigned s = 0; s < 20; ++s) {
                auto u = random_vec(d.size, 100 + s);
                std::vector<double> z, zr;
                op.apply(u, z, 0, false);
                std::vector<double> Au(N, 0.0);
                for (int i = 0; i < N; ++i)
                    for (int j = 0; j < N; ++j)
                        Au[i] += S.A(i, j) * u[j];
                CHECK(maxdiff(Au, z) <= 1e-12 * amax * N);
                op.apply_reference(u, zr, 0, false);
                CHECK(maxdiff(zr, z) <= 1e-12 * maxabs(z));
            }
            CHECK_THROWS_AS(assemble_dense(op, 100), SizeCapError);
        }
}

TEST_CASE("gradients agree with the reference kernel")
{
    Domain d = bar(13, 6, true, 0.1);
    ElasticOperator op(d, rnd(d, 1), Stencil::Narrow);
    auto u = random_vec(d.size, 4);
    ElasticOperator::Grad G, Gr;
    op.gradients(u, G);
    op.gradients_reference(u, Gr);
    for (std::size_t b = 0; b < G.size(); ++b)
        CHECK(maxdiff(G[b], Gr[b]) <= 1e-12 * maxabs(G[b]));
}

TEST_CASE("rhs is linear and vanishes at rest")
{
    Domain d = bar(12, 4, false, 0.1, FaceKind::Displacement);
    ElasticOperator op(d, rnd(d, 9), Stencil::Narrow);
    std::vector<double> a, b;
    op.rhs(std::vector<double>(d.size, 0.0), a, 0, nullptr);
    CHECK(maxabs(a) == 0);
    auto u = random_vec(d.size, 5);
    op.rhs(u, a, 0, nullptr);
    for (auto& x : u)
        x *= -2.5;
    op.rhs(u, b, 0, nullptr);
    for (auto& x : a)
        x *= -2.5;
    CHECK(maxdiff(a, b) <= 1e-12 * maxabs(a));
}

TEST_CASE("discrete energy")
{
    Domain d = bar(12, 4, false, 0.1);
    ElasticOperator op(d, rnd(d, 6), Stencil::Narrow);
    std::vector<double> zero(d.size, 0.0);
    auto E0 = op.energy(zero, zero);
    CHECK(E0.kinetic == 0);
    CHECK(E0.strain == 0);
    CHECK(E0.remainder == 0);
    CHECK(E0.correction == 0);
    CHECK(E0.total == 0);

    for (unsigned s = 0; s < 5; ++s) {
        auto u = random_vec(d.size, 20 + s), v = random_vec(d.size, 40 + s);
        auto E = op.energy(u, zero);
        double scale = E.strain + std::abs(E.remainder);
        CHECK(E.total >= 0);
        CHECK(E.remainder >= -1e-10 * scale);
        // total energy against the operator quadratic form
        auto Ev = op.energy(u, v);
        std::vector<double> z;
        op.apply(u, z, 0, false);
        double kin = 0;
        for (int b = 0; b < int(d.blocks.size()); ++b)
            for (int J = 0; J < 2; ++J)
                for (int p = 0; p < d.blocks[b].npts(); ++p) {
                    double vv = d.comp(v, b, J)[p];
                    kin += 0.5 * op.weights(b)[p] * op.material(b).varrho[p] * vv * vv;
                }
        CHECK(Ev.kinetic == doctest::Approx(kin).epsilon(1e-12));
        CHECK(Ev.total == doctest::Approx(kin - 0.5 * dot(u, z)).epsilon(1e-10));
    }

    // displacement faces with vanishing face values carry no correction
    Domain dd = box(15, 4, {D, D, D, D}, affine_map(1.1, 0.2, 0, 0.9, 0, 0));
    ElasticOperator od(dd, rnd(dd, 3), Stencil::Narrow);
    auto u = field(dd, [](double x, double y) {
        double s = std::sin(3.0 * x) * std::sin(2.0 * y) * x * y * (x + 0.2 * y - 1.3) * (0.9 * y - 1);
        return Vec2{s, 0.5 * s};
    });
    const auto& g = dd.blocks[0].grid;
    for (int f = 0; f < 4; ++f)
        for (int t = 0; t < 15; ++t) {
            int p = face_node(g.n1, g.n2, f, t);
            dd.comp(u, 0, 0)[p] = dd.comp(u, 0, 1)[p] = 0;
        }
    auto Ed = od.energy(u, std::vector<double>(dd.size, 0.0));
    CHECK(Ed.correction == 0);
    CHECK(Ed.total == Ed.kinetic + Ed.strain + Ed.remainder);
    CHECK(Ed.total >= 0);
}
