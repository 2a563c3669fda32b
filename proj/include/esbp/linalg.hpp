#pragma once

#include <vector>

namespace esbp {

// Eigenvalues (ascending) of a symmetric n x n row-major matrix; only the upper triangle is read.
std::vector<double> sym_eigenvalues(std::vector<double> a, int n);

// Cholesky succeeds; only the upper triangle is read
bool positive_definite(std::vector<double> a, int n);

// lower bound on the spectral radius of a symmetric matrix by power iteration
double spectral_radius_estimate(const std::vector<double>& a, int n, int iters = 30, unsigned seed = 1);

}
