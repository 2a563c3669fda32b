#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace esbp {

// Unit-spacing coefficient data of one operator family.
struct Family {
    int order = 0;
    int q = 0;
    int m = 0;   // d1 closure rows
    int nd = 0;  // d1 closure width
    int r = 0;   // d2 closure rows in the published table
    int w = 0;   // d2 closure width
    int min_points = 0;
    std::vector<double> H;      // m boundary weights
    std::vector<double> d1;     // m x nd
    std::vector<double> d1int;  // 2q+1
    std::vector<double> S;      // boundary derivative, left end
    std::vector<double> d2;     // r x w x w, [row][col][coef]
    std::vector<double> d2int;  // (2q+1)^2, [col offset][coef offset]
    // -H D2(b) = sum_s b_s M_s + e0 b0 S - (mirror); left closure M_s, s < m, as r x r
    std::vector<std::vector<double>> Mleft;
    std::vector<double> Mint;   // (2q+1)^2 block centred on s
};

Family make_family(int order, int m, const double* H, const double* d1, int nd, const double* d1int,
                   const double* S, int nS, const double* d2, int r, int w, const double* d2int);

namespace tables {
const Family& family(int order);
}

int min_points(int order);

struct D2Entry {
    int j;  // column of u
    int s;  // index of b
    double c;
};

struct OperatorSet1D {
    int order = 0;
    int q = 0;
    int n_points = 0;
    double spacing = 0;
    bool fully_compatible = false;
    std::vector<double> norm_weights;
    double first_weight = 0;

    // d1 rows: columns [d1_start[i], d1_start[i] + d1_len[i]), values at d1_off[i]
    std::vector<int> d1_start, d1_len, d1_off;
    std::vector<double> d1_val;

    // boundary derivative rows, stored over the first/last bd_len points
    int bd_len = 0;
    std::vector<double> bd_left, bd_right;

    // d2 rows as (j, s, c) triples, scaled by 1/h^2
    std::vector<int> d2_ptr;
    std::vector<D2Entry> d2_ent;

    int n() const { return n_points; }
    double d1_at(int i, int j) const;
};

OperatorSet1D build_operator_set(int order, int n_points, double spacing, bool fully_compatible);

// Strided kernels; the caller owns the output.
void apply_d1(const OperatorSet1D& op, const double* u, std::ptrdiff_t su, double* out, std::ptrdiff_t so);
void apply_d1t(const OperatorSet1D& op, const double* u, std::ptrdiff_t su, double* out, std::ptrdiff_t so);
void apply_d2(const OperatorSet1D& op, const double* b, std::ptrdiff_t sb, const double* u, std::ptrdiff_t su,
              double* out, std::ptrdiff_t so);

std::vector<double> apply_d1(const OperatorSet1D& op, const std::vector<double>& u);
std::vector<double> apply_d2(const OperatorSet1D& op, const std::vector<double>& b, const std::vector<double>& u);

// Row-major dense matrix.
struct Dense {
    int rows = 0, cols = 0;
    std::vector<double> a;
    Dense() = default;
    Dense(int r, int c) : rows(r), cols(c), a(std::size_t(r) * c, 0.0) {}
    double& operator()(int i, int j) { return a[std::size_t(i) * cols + j]; }
    double operator()(int i, int j) const { return a[std::size_t(i) * cols + j]; }
};

Dense dense_d1(const OperatorSet1D& op);
Dense dense_d2(const OperatorSet1D& op, const std::vector<double>& b);
Dense dense_boundary_deriv(const OperatorSet1D& op);
std::vector<double> e_left(const OperatorSet1D& op);
std::vector<double> e_right(const OperatorSet1D& op);

// R(b) = -H D2(b) - D^T H b D - e0 b0 S0 + eN bN SN
Dense extract_remainder(const OperatorSet1D& op, const std::vector<double>& b);

struct CertCheck {
    std::string name;
    bool pass = false;
    double residual = 0;
    double tol = 0;
};

struct CertReport {
    int order = 0;
    int n_points = 0;
    bool fully_compatible = false;
    std::vector<CertCheck> checks;
    bool pass() const;
};

CertReport certify_operator_set(const OperatorSet1D& op, unsigned seed = 1, int n_samples = 20);

void write_dense_csv(const Dense& m, const std::string& path);

}
