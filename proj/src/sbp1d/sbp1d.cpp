#include "esbp/sbp1d.hpp"
#include "esbp/linalg.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <random>
#include <stdexcept>

namespace esbp {

int min_points(int order)
{
    switch (order) {
    case 2: return 3;
    case 4: return 8;
    case 6: return 12;
    }
    throw std::invalid_argument("unsupported order " + std::to_string(order));
}

Family make_family(int order, int m, const double* H, const double* d1, int nd, const double* d1int,
                   const double* S, int nS, const double* d2, int r, int w, const double* d2int)
{
    Family f;
    f.order = order;
    f.q = order / 2;
    f.m = m;
    f.nd = nd;
    f.r = r;
    f.w = w;
    f.min_points = min_points(order);
    const int q = f.q, wi = 2 * q + 1;
    f.H.assign(H, H + m);
    f.d1.assign(d1, d1 + m * nd);
    f.d1int.assign(d1int, d1int + wi);
    f.S.assign(S, S + nS);
    f.d2.assign(d2, d2 + r * w * w);
    f.d2int.assign(d2int, d2int + wi * wi);

    auto hu = [&](int i) { return i < m ? H[i] : 1.0; };
    auto C = [&](int i, int j, int s) { return d2[(i * w + j) * w + s]; };

    f.Mint.assign(wi * wi, 0.0);
    for (int a = 0; a < wi; ++a)
        for (int b = 0; b < wi; ++b) {
            int dj = b - a, ds = q - a;
            if (std::abs(dj) <= q)
                f.Mint[a * wi + b] = -d2int[(dj + q) * wi + ds + q];
        }

    f.Mleft.assign(m, std::vector<double>(r * r, 0.0));
    for (int s = 0; s < m; ++s) {
        auto& M = f.Mleft[s];
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < w; ++j) {
                double v = -hu(i) * C(i, j, s);
                if (s == 0 && i == 0 && j < nS)
                    v -= S[j];
                if (j >= r) {
                    if (std::abs(v) > 1e-12)
                        throw std::logic_error("d2 table: closure block wider than expected");
                    continue;
                }
                M[i * r + j] = v;
            }
        for (int i = 0; i < r; ++i)
            for (int j = 0; j < i; ++j) {
                double a = M[i * r + j], b = M[j * r + i];
                if (std::abs(a - b) > 1e-12 * (1 + std::abs(a)))
                    throw std::logic_error("d2 table: closure block not symmetric");
                M[i * r + j] = M[j * r + i] = 0.5 * (a + b);
            }
    }

    // the closure rows must be recovered from the M_s blocks
    for (int i = 0; i < r; ++i)
        for (int j = 0; j < w; ++j)
            for (int s = 0; s < w; ++s) {
                double v = 0;
                if (s < m) {
                    if (j < r)
                        v += f.Mleft[s][i * r + j];
                } else {
                    int a = i - s + q, b = j - s + q;
                    if (a >= 0 && a < wi && b >= 0 && b < wi)
                        v += f.Mint[a * wi + b];
                }
                if (s == 0 && i == 0 && j < nS)
                    v += S[j];
                double ref = -hu(i) * C(i, j, s);
                if (std::abs(v - ref) > 1e-12 * (1 + std::abs(ref)))
                    throw std::logic_error("d2 table: inconsistent closure row");
            }
    return f;
}

double OperatorSet1D::d1_at(int i, int j) const
{
    int k = j - d1_start[i];
    return (k >= 0 && k < d1_len[i]) ? d1_val[d1_off[i] + k] : 0.0;
}

OperatorSet1D build_operator_set(int order, int n_points, double spacing, bool fully_compatible)
{
    const Family& f = tables::family(order);
    if (n_points < f.min_points)
        throw std::invalid_argument("n_points " + std::to_string(n_points) + " below minimum " +
                                    std::to_string(f.min_points) + " for order " + std::to_string(order));
    if (!(spacing > 0))
        throw std::invalid_argument("spacing must be positive");

    OperatorSet1D op;
    op.order = order;
    op.q = f.q;
    op.n_points = n_points;
    op.spacing = spacing;
    op.fully_compatible = fully_compatible;
    const int n = n_points, N = n - 1, m = f.m, q = f.q, h_r = f.r, wi = 2 * q + 1;
    const double h = spacing;

    std::vector<double> hu(n, 1.0);
    for (int i = 0; i < m; ++i) {
        hu[i] = f.H[i];
        hu[N - i] = f.H[i];
    }
    op.norm_weights.resize(n);
    for (int i = 0; i < n; ++i)
        op.norm_weights[i] = h * hu[i];
    op.first_weight = op.norm_weights[0];

    op.d1_start.resize(n);
    op.d1_len.resize(n);
    op.d1_off.resize(n);
    for (int i = 0; i < n; ++i) {
        op.d1_off[i] = int(op.d1_val.size());
        if (i < m) {
            op.d1_start[i] = 0;
            op.d1_len[i] = f.nd;
            for (int j = 0; j < f.nd; ++j)
                op.d1_val.push_back(f.d1[i * f.nd + j] / h);
        } else if (i > N - m) {
            int ii = N - i;
            op.d1_start[i] = N - f.nd + 1;
            op.d1_len[i] = f.nd;
            for (int j = f.nd - 1; j >= 0; --j)
                op.d1_val.push_back(-f.d1[ii * f.nd + j] / h);
        } else {
            op.d1_start[i] = i - q;
            op.d1_len[i] = wi;
            for (int k = 0; k < wi; ++k)
                op.d1_val.push_back(f.d1int[k] / h);
        }
    }

    // compatible boundary derivative first, replaced by the d1 rows if requested
    op.bd_len = std::max<int>(f.S.size(), f.nd);
    op.bd_left.assign(op.bd_len, 0.0);
    op.bd_right.assign(op.bd_len, 0.0);
    std::vector<double> S0(op.bd_len, 0.0), D0(op.bd_len, 0.0);
    for (std::size_t j = 0; j < f.S.size(); ++j)
        S0[j] = f.S[j];
    for (int j = 0; j < f.nd; ++j)
        D0[j] = f.d1[j];
    const std::vector<double>& Sh = fully_compatible ? D0 : S0;
    for (int j = 0; j < op.bd_len; ++j) {
        op.bd_left[j] = Sh[j] / h;
        op.bd_right[op.bd_len - 1 - j] = -Sh[j] / h;
    }

    std::vector<std::vector<D2Entry>> rows(n);
    auto add = [&](int i, int j, int s, double c) { rows[i].push_back({j, s, c}); };
    for (int s = 0; s < m; ++s) {
        const auto& M = f.Mleft[s];
        for (int i = 0; i < h_r; ++i)
            for (int j = 0; j < h_r; ++j) {
                double v = M[i * h_r + j];
                if (v == 0)
                    continue;
                add(i, j, s, -v / hu[i]);
                add(N - i, N - j, N - s, -v / hu[N - i]);
            }
    }
    for (int s = m; s <= N - m; ++s)
        for (int a = 0; a < wi; ++a)
            for (int b = 0; b < wi; ++b) {
                double v = f.Mint[a * wi + b];
                if (v != 0)
                    add(s - q + a, s - q + b, s, -v / hu[s - q + a]);
            }
    for (std::size_t j = 0; j < f.S.size(); ++j) {
        add(0, int(j), 0, -f.S[j] / hu[0]);
        add(N, N - int(j), N, -f.S[j] / hu[N]);
    }
    if (fully_compatible)
        for (int j = 0; j < op.bd_len; ++j) {
            double dS = S0[j] - D0[j];
            if (dS == 0)
                continue;
            add(0, j, 0, dS / hu[0]);
            add(N, N - j, N, dS / hu[N]);
        }

    const double ih2 = 1.0 / (h * h);
    op.d2_ptr.assign(n + 1, 0);
    for (int i = 0; i < n; ++i) {
        auto& e = rows[i];
        std::sort(e.begin(), e.end(), [](const D2Entry& x, const D2Entry& y) {
            return x.j != y.j ? x.j < y.j : x.s < y.s;
        });
        std::size_t k = 0;
        while (k < e.size()) {
            D2Entry acc = e[k++];
            while (k < e.size() && e[k].j == acc.j && e[k].s == acc.s)
                acc.c += e[k++].c;
            if (acc.c != 0) {
                acc.c *= ih2;
                op.d2_ent.push_back(acc);
            }
        }
        op.d2_ptr[i + 1] = int(op.d2_ent.size());
    }
    return op;
}

void apply_d1(const OperatorSet1D& op, const double* u, std::ptrdiff_t su, double* out, std::ptrdiff_t so)
{
    for (int i = 0; i < op.n_points; ++i) {
        const double* c = &op.d1_val[op.d1_off[i]];
        const double* x = u + op.d1_start[i] * su;
        double acc = 0;
        for (int k = 0; k < op.d1_len[i]; ++k)
            acc += c[k] * x[k * su];
        out[i * so] = acc;
    }
}

void apply_d1t(const OperatorSet1D& op, const double* u, std::ptrdiff_t su, double* out, std::ptrdiff_t so)
{
    for (int i = 0; i < op.n_points; ++i)
        out[i * so] = 0;
    for (int i = 0; i < op.n_points; ++i) {
        double ui = u[i * su];
        if (ui == 0)
            continue;
        const double* c = &op.d1_val[op.d1_off[i]];
        double* y = out + op.d1_start[i] * so;
        for (int k = 0; k < op.d1_len[i]; ++k)
            y[k * so] += c[k] * ui;
    }
}

void apply_d2(const OperatorSet1D& op, const double* b, std::ptrdiff_t sb, const double* u, std::ptrdiff_t su,
              double* out, std::ptrdiff_t so)
{
    for (int i = 0; i < op.n_points; ++i) {
        double acc = 0;
        for (int k = op.d2_ptr[i]; k < op.d2_ptr[i + 1]; ++k) {
            const D2Entry& e = op.d2_ent[k];
            acc += e.c * b[e.s * sb] * u[e.j * su];
        }
        out[i * so] = acc;
    }
}

std::vector<double> apply_d1(const OperatorSet1D& op, const std::vector<double>& u)
{
    if (int(u.size()) != op.n_points)
        throw std::invalid_argument("apply_d1: length mismatch");
    std::vector<double> out(u.size());
    apply_d1(op, u.data(), 1, out.data(), 1);
    return out;
}

std::vector<double> apply_d2(const OperatorSet1D& op, const std::vector<double>& b, const std::vector<double>& u)
{
    if (int(u.size()) != op.n_points || int(b.size()) != op.n_points)
        throw std::invalid_argument("apply_d2: length mismatch");
    std::vector<double> out(u.size());
    apply_d2(op, b.data(), 1, u.data(), 1, out.data(), 1);
    return out;
}

Dense dense_d1(const OperatorSet1D& op)
{
    Dense D(op.n_points, op.n_points);
    for (int i = 0; i < op.n_points; ++i)
        for (int k = 0; k < op.d1_len[i]; ++k)
            D(i, op.d1_start[i] + k) = op.d1_val[op.d1_off[i] + k];
    return D;
}

Dense dense_d2(const OperatorSet1D& op, const std::vector<double>& b)
{
    if (int(b.size()) != op.n_points)
        throw std::invalid_argument("dense_d2: length mismatch");
    Dense D(op.n_points, op.n_points);
    for (int i = 0; i < op.n_points; ++i)
        for (int k = op.d2_ptr[i]; k < op.d2_ptr[i + 1]; ++k) {
            const D2Entry& e = op.d2_ent[k];
            D(i, e.j) += e.c * b[e.s];
        }
    return D;
}

Dense dense_boundary_deriv(const OperatorSet1D& op)
{
    const int n = op.n_points;
    Dense S(n, n);
    for (int j = 0; j < op.bd_len; ++j) {
        S(0, j) = op.bd_left[j];
        S(n - 1, n - op.bd_len + j) = op.bd_right[j];
    }
    return S;
}

std::vector<double> e_left(const OperatorSet1D& op)
{
    std::vector<double> e(op.n_points, 0.0);
    e.front() = 1;
    return e;
}

std::vector<double> e_right(const OperatorSet1D& op)
{
    std::vector<double> e(op.n_points, 0.0);
    e.back() = 1;
    return e;
}

Dense extract_remainder(const OperatorSet1D& op, const std::vector<double>& b)
{
    const int n = op.n_points, N = n - 1;
    if (int(b.size()) != n)
        throw std::invalid_argument("extract_remainder: length mismatch");
    Dense D2 = dense_d2(op, b);
    Dense D = dense_d1(op);
    Dense S = dense_boundary_deriv(op);
    const auto& H = op.norm_weights;
    Dense R(n, n);
    for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j)
            R(i, j) = -H[i] * D2(i, j);
    // D^T H b D, using the band of D
    for (int k = 0; k < n; ++k) {
        double wk = H[k] * b[k];
        int s = op.d1_start[k], l = op.d1_len[k];
        for (int a = 0; a < l; ++a)
            for (int c = 0; c < l; ++c)
                R(s + a, s + c) -= D(k, s + a) * wk * D(k, s + c);
    }
    for (int j = 0; j < n; ++j) {
        R(0, j) -= b[0] * S(0, j);
        R(N, j) += b[N] * S(N, j);
    }
    return R;
}

bool CertReport::pass() const
{
    for (const auto& c : checks)
        if (!c.pass)
            return false;
    return !checks.empty();
}

namespace {

double max_abs(const Dense& m)
{
    double v = 0;
    for (double x : m.a)
        v = std::max(v, std::abs(x));
    return v;
}

double min_eig_rel(const Dense& R)
{
    auto ev = sym_eigenvalues(R.a, R.rows);
    double nrm = std::max(std::abs(ev.front()), std::abs(ev.back()));
    return nrm > 0 ? ev.front() / nrm : 0.0;
}

}

CertReport certify_operator_set(const OperatorSet1D& op, unsigned seed, int n_samples)
{
    CertReport rep;
    rep.order = op.order;
    rep.n_points = op.n_points;
    rep.fully_compatible = op.fully_compatible;
    const int n = op.n_points, N = n - 1, q = op.q;
    const double h = op.spacing;
    const auto& H = op.norm_weights;
    auto check = [&](std::string name, double res, double tol) {
        rep.checks.push_back({std::move(name), std::isfinite(res) && res <= tol, res, tol});
    };

    {
        double mn = *std::min_element(H.begin(), H.end());
        double asym = 0, sum = 0;
        for (int i = 0; i < n; ++i) {
            asym = std::max(asym, std::abs(H[i] - H[N - i]));
            sum += H[i];
        }
        check("norm_positive", mn > 0 ? 0.0 : 1.0, 0.0);
        check("norm_symmetric", asym, 1e-15 * N * h);
        check("norm_quadrature", std::abs(sum - N * h) / (N * h), 1e-14);
    }

    Dense D = dense_d1(op);
    {
        double res = 0;
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = H[i] * D(i, j) + D(j, i) * H[j];
                if (i == 0 && j == 0)
                    v += 1;
                if (i == N && j == N)
                    v -= 1;
                res = std::max(res, std::abs(v));
            }
        check("sbp_identity", res, 1e-13);
    }

    const int m = tables::family(op.order).m;
    {
        double bres = 0, ires = 0;
        for (int p = 0; p <= 2 * q; ++p) {
            std::vector<double> u(n);
            for (int i = 0; i < n; ++i)
                u[i] = std::pow(i * h, p);
            auto du = apply_d1(op, u);
            for (int i = 0; i < n; ++i) {
                double ex = p == 0 ? 0.0 : p * std::pow(i * h, p - 1);
                double e = std::abs(du[i] - ex) * h;
                bool closure = i < m || i > N - m;
                if (closure && p <= q)
                    bres = std::max(bres, e);
                if (!closure)
                    ires = std::max(ires, e);
            }
        }
        check("d1_accuracy_boundary", bres, 1e-12);
        check("d1_accuracy_interior", ires, 1e-12);
    }

    if (op.fully_compatible) {
        double res = 0;
        Dense S = dense_boundary_deriv(op);
        for (int j = 0; j < n; ++j) {
            res = std::max(res, std::abs(S(0, j) - D(0, j)));
            res = std::max(res, std::abs(S(N, j) - D(N, j)));
        }
        check("fully_compatible_rows", res, 0.0);
    }

    {
        // narrow interior bandwidth
        std::vector<double> one(n, 1.0);
        Dense D2 = dense_d2(op, one);
        const auto& f = tables::family(op.order);
        int wide = 0;
        for (int i = f.r; i <= N - f.r; ++i)
            for (int j = 0; j < n; ++j)
                if (D2(i, j) != 0 && std::abs(i - j) > q)
                    ++wide;
        check("d2_narrow_interior", wide, 0);
    }

    {
        // d2 accuracy on monomial pairs, only where the closures do not interact
        const auto& f = tables::family(op.order);
        if (n >= 2 * (f.r + 2 * q) + 1) {
            double bres = 0, ires = 0;
            for (int a = 0; a <= 2 * q; ++a)
                for (int c = 0; c + a <= 2 * q; ++c) {
                    std::vector<double> b(n), u(n);
                    for (int i = 0; i < n; ++i) {
                        b[i] = std::pow(i * h, a);
                        u[i] = std::pow(i * h, c);
                    }
                    auto r = apply_d2(op, b, u);
                    for (int i = 0; i < n; ++i) {
                        double x = i * h;
                        double ex = (c >= 1 && a + c >= 2) ? double(c) * (a + c - 1) * std::pow(x, a + c - 2) : 0.0;
                        double e = std::abs(r[i] - ex) * h * h;
                        bool closure = i < f.r || i > N - f.r;
                        bool end = i == 0 || i == N;
                        int deg = closure ? q + 1 : 2 * q;
                        if (end && op.fully_compatible && c > q)
                            continue;
                        if (a + c > deg)
                            continue;
                        (closure ? bres : ires) = std::max(closure ? bres : ires, e);
                    }
                }
            check("d2_accuracy_boundary", bres, 1e-11);
            check("d2_accuracy_interior", ires, 1e-11);
        }
    }

    std::mt19937_64 rng(seed);
    std::uniform_real_distribution<double> U(0.0, 1.0);
    {
        double asym = 0, eig = 0, recomp = 0;
        for (int t = 0; t < n_samples; ++t) {
            std::vector<double> b(n);
            for (auto& x : b)
                x = U(rng);
            Dense R = extract_remainder(op, b);
            double nr = max_abs(R);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < i; ++j)
                    asym = std::max(asym, std::abs(R(i, j) - R(j, i)) / nr);
            eig = std::min(eig, min_eig_rel(R));
        }
        check("remainder_symmetric", asym, 1e-14);
        check("remainder_psd", -eig, 1e-10);
        // recomposition with the boundary rows reproduces d2
        std::vector<double> b(n);
        for (auto& x : b)
            x = 0.5 + U(rng);
        Dense R = extract_remainder(op, b);
        Dense D2 = dense_d2(op, b);
        Dense S = dense_boundary_deriv(op);
        double scale = max_abs(D2);
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                double v = R(i, j);
                for (int k = 0; k < n; ++k)
                    v += D(k, i) * H[k] * b[k] * D(k, j);
                if (i == 0)
                    v += b[0] * S(0, j);
                if (i == N)
                    v -= b[N] * S(N, j);
                recomp = std::max(recomp, std::abs(-v / H[i] - D2(i, j)) / scale);
            }
        check("remainder_recomposition", recomp, 1e-13);
    }

    {
        // tensor version: sum_ij u_i^T R(S_ij) u_j >= 0 for pointwise PSD S
        double eig = 0;
        for (int t = 0; t < std::max(1, n_samples / 4); ++t) {
            std::vector<double> s11(n), s12(n), s22(n);
            for (int i = 0; i < n; ++i) {
                double a = U(rng) - 0.5, b = U(rng) - 0.5, c = U(rng) - 0.5, d = U(rng) - 0.5;
                s11[i] = a * a + b * b;
                s12[i] = a * c + b * d;
                s22[i] = c * c + d * d;
            }
            Dense R11 = extract_remainder(op, s11), R12 = extract_remainder(op, s12),
                  R22 = extract_remainder(op, s22);
            Dense B(2 * n, 2 * n);
            for (int i = 0; i < n; ++i)
                for (int j = 0; j < n; ++j) {
                    B(i, j) = R11(i, j);
                    B(i, n + j) = R12(i, j);
                    B(n + i, j) = R12(i, j);
                    B(n + i, n + j) = R22(i, j);
                }
            eig = std::min(eig, min_eig_rel(B));
        }
        check("remainder_tensor_psd", -eig, 1e-10);
    }

    {
        double worst = 0;
        for (int t = 0; t < n_samples; ++t) {
            double lhs = 0;
            std::vector<double> u(n);
            for (auto& x : u)
                x = 2 * U(rng) - 1;
            for (int i = 0; i < n; ++i)
                lhs += u[i] * H[i] * u[i];
            double rhs = op.first_weight * (u[0] * u[0] + u[N] * u[N]);
            worst = std::max(worst, (rhs - lhs) / std::max(lhs, 1e-300));
        }
        check("norm_borrowing", std::max(worst, 0.0), 0.0);
    }
    return rep;
}

void write_dense_csv(const Dense& m, const std::string& path)
{
    std::ofstream out(path);
    if (!out)
        throw std::runtime_error("cannot open " + path);
    char buf[32];
    for (int i = 0; i < m.rows; ++i) {
        for (int j = 0; j < m.cols; ++j) {
            std::snprintf(buf, sizeof buf, "%.17g", m(i, j));
            out << (j ? "," : "") << buf;
        }
        out << '\n';
    }
}

}
