#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "lambshift/subspace.hpp"

namespace lambshift {

/// Full spectrum of one coupling matrix, ascending, in units of g0.
/// Eigenvalues are symmetrized: lambda[i] == -lambda[dim-1-i] exactly, with an
/// exact 0 in the middle when dim is odd. Positive off-diagonals guarantee a
/// simple spectrum, so the entries are strictly increasing.
struct SpectrumSet {
    SubspaceIndex index;
    std::vector<double> eigenvalues;
    double pairing_tolerance = 1e-9;
};

/// All eigenvalues by Sturm-sequence bisection on the positive half, mirrored.
SpectrumSet eigenvalues(const CouplingMatrix& m);

/// Largest eigenvalue only (rank dim-1 bisection; 0 for dim 1).
double max_eigenvalue(const CouplingMatrix& m);

/// Number of eigenvalues of m strictly below x (scaled Sturm count).
std::int64_t sturm_count_below(const CouplingMatrix& m, double x);

/// Max row sum of |entries|; Perron-Frobenius upper bound on max |lambda|.
double gershgorin_bound(const CouplingMatrix& m);

/// Unit-norm eigenvector; sign fixed so the first nonzero component is positive.
struct EigenPair {
    double eigenvalue = 0.0;
    std::vector<double> vector;
};

/// Eigenvector for a given (already computed) eigenvalue via inverse iteration
/// with a pivoted tridiagonal solve from an all-ones start; at most 5 passes,
/// residual-checked each pass. lambda == 0 on odd dims uses the exact
/// null-vector recurrence (zero entries at even 1-indexed positions).
/// Throws std::runtime_error if the residual test never passes.
EigenPair eigenvector(const CouplingMatrix& m, double lambda);

/// det L(j,k): exactly 0 for odd dim; the alternating closed-form product
/// (-1)^((n+1)/2) * l_n^2 l_{n-2}^2 ... l_1^2 (n = dim-1) for even dim.
double determinant(const CouplingMatrix& m);

/// Sign and log-magnitude form of the determinant (overflow-safe at large dim).
struct LogDeterminant {
    int sign = 0;          // -1, 0, +1
    double log_abs = 0.0;  // meaningful only when sign != 0
};

LogDeterminant determinant_log(const CouplingMatrix& m);

/// det(L - x I) by the three-term recurrence
///   p_i = -x p_{i-1} - l_{i-1}^2 p_{i-2},  p_0 = 1.
/// Serves as the recurrence cross-check path for the determinant (x = 0) and
/// as the sign oracle the bisection counts agree with.
double char_poly_eval(const CouplingMatrix& m, double x);

}  // namespace lambshift
