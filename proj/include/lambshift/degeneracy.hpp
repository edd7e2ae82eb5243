#pragma once

#include <cstdint>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

namespace lambshift {

using BigInt = boost::multiprecision::cpp_int;

/// Number of disjoint angular-momentum-j subspaces in (C^2)^(tensor N),
/// d_j = N!(2j+1) / ((N/2-j)! (N/2+j+1)!), evaluated exactly as a difference
/// of binomials. Throws std::domain_error on a parity mismatch or 2j > N.
BigInt degeneracy(int n_spins, int twice_j);

/// ln d_j via lgamma; usable far beyond the exact-arithmetic range.
double degeneracy_log(int n_spins, int twice_j);

/// D_k = sum_{k'<=k} C(N,k'), the number of states with k excitations.
/// Equals 2^N once k >= N.
BigInt states_with_k_excitations(int n_spins, std::int64_t k);

/// ln D_k (log-sum-exp over the binomial terms).
double states_with_k_excitations_log(int n_spins, std::int64_t k);

/// Exact and log-domain degeneracies for every allowed j at fixed N.
/// The exact column is filled for n_spins <= 256 (log column always).
struct DegeneracyTable {
    struct Entry {
        int twice_j = 0;
        BigInt exact_count;   // 0 when not materialized
        double log_count = 0.0;
    };
    int n_spins = 0;
    bool has_exact = false;
    std::vector<Entry> entries;  // ascending twice_j
};

DegeneracyTable build_degeneracy_table(int n_spins);

/// Exact discrete argmax of d_j, returned as 2j. Unimodality of d_j makes a
/// single ratio-comparison climb sufficient; ties break toward smaller j.
int j_star_exact(int n_spins);

/// Continuous approximation sqrt(N)/2 - 1/2 + 1/(6 sqrt(N)); no rounding.
double j_star_asymptotic(int n_spins);

/// d_j / d_{j+1} computed as exp(log d_j - log d_{j+1}).
/// Requires both 2j and 2j+2 to be allowed for N.
double adjacent_ratio(int n_spins, int twice_j);

/// Smallest j window [j_min, j_max] (scanned upward in j) whose states carry
/// at least `mass` of the 2^N-dimensional spin space, weighting j by (2j+1) d_j.
struct SupportWindow {
    double mass = 0.0;
    int twice_j_max = 0;
};

SupportWindow strong_support(int n_spins, double mass);

/// max_j d_j / 2^N, evaluated in the log domain.
double max_degeneracy_fraction(int n_spins);

}  // namespace lambshift
