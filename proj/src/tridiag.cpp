#include "lambshift/tridiag.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>

namespace lambshift {

namespace {

constexpr double kMachEps = std::numeric_limits<double>::epsilon();

// Number of eigenvalues strictly below x: scaled Sturm recurrence on the
// hollow tridiagonal (Barth/Martin/Wilkinson bisect inner loop with zero
// diagonal). The pivot ratio form never over- or underflows for the matrix
// sizes handled here; an exactly zero pivot falls back to the standard
// |l|/eps substitute.
std::int64_t count_below(const std::vector<double>& l, const std::vector<double>& l2,
                         double x) {
    std::int64_t s = 0;
    double u = -x;
    if (u < 0.0) ++s;
    for (std::size_t i = 0; i < l.size(); ++i) {
        const double v = (u != 0.0) ? l2[i] / u : std::abs(l[i]) / kMachEps;
        u = -x - v;
        if (u < 0.0) ++s;
    }
    return s;
}

double max_row_sum(const std::vector<double>& l) {
    const std::size_t n1 = l.size();
    if (n1 == 0) return 0.0;
    double best = std::max(l.front(), l.back());
    for (std::size_t i = 0; i + 1 < n1; ++i) best = std::max(best, l[i] + l[i + 1]);
    return best;
}

// Bisection for the positive eigenvalues, ascending. Brackets for all ranks
// are refined together: every Sturm count at x sharpens the enclosure of the
// ranks it separates, so later eigenvalues start from tight intervals.
std::vector<double> positive_half(const CouplingMatrix& m) {
    const std::int64_t dim = m.dim;
    const std::int64_t npos = dim / 2;
    if (npos == 0) return {};

    const std::vector<double>& l = m.off_diag;
    std::vector<double> l2(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) l2[i] = l[i] * l[i];

    const double ub = max_row_sum(l) * (1.0 + 8.0 * kMachEps);
    const double floor_tol = 1e-15 * ub;

    const std::int64_t first = dim - npos;  // rank of the smallest positive eigenvalue
    std::vector<double> lower(static_cast<std::size_t>(npos), 0.0);
    std::vector<double> upper(static_cast<std::size_t>(npos), ub);
    std::vector<double> out(static_cast<std::size_t>(npos));

    double x0 = ub;
    for (std::int64_t rank = dim - 1; rank >= first; --rank) {
        const std::size_t slot = static_cast<std::size_t>(rank - first);
        double xu = 0.0;
        for (std::size_t i = 0; i <= slot; ++i) xu = std::max(xu, lower[i]);
        x0 = std::min(x0, upper[slot]);

        for (int iter = 0; iter < 200; ++iter) {
            if (x0 - xu <= 2.0 * kMachEps * (std::abs(xu) + std::abs(x0)) + floor_tol) break;
            const double x1 = 0.5 * (xu + x0);
            const std::int64_t s = count_below(l, l2, x1);
            if (s > rank) {
                x0 = x1;  // rank-th eigenvalue lies below x1
            } else {
                xu = x1;  // at or above x1
                if (s >= first && s <= rank) {
                    lower[static_cast<std::size_t>(s - first)] =
                        std::max(lower[static_cast<std::size_t>(s - first)], x1);
                }
                if (s - 1 >= first) {
                    upper[static_cast<std::size_t>(s - 1 - first)] =
                        std::min(upper[static_cast<std::size_t>(s - 1 - first)], x1);
                }
            }
        }
        const double value = 0.5 * (xu + x0);
        out[slot] = value;
        upper[slot] = value;
        x0 = value;
    }
    return out;
}

}  // namespace

double gershgorin_bound(const CouplingMatrix& m) { return max_row_sum(m.off_diag); }

std::int64_t sturm_count_below(const CouplingMatrix& m, double x) {
    std::vector<double> l2(m.off_diag.size());
    for (std::size_t i = 0; i < l2.size(); ++i) l2[i] = m.off_diag[i] * m.off_diag[i];
    return count_below(m.off_diag, l2, x);
}

SpectrumSet eigenvalues(const CouplingMatrix& m) {
    if (m.dim < 1) throw std::domain_error("coupling matrix must have dim >= 1");
    SpectrumSet s;
    s.index = m.index;
    const std::vector<double> pos = positive_half(m);
    s.eigenvalues.reserve(static_cast<std::size_t>(m.dim));
    // Mirror the positive half; an odd dimension forces one exact zero.
    for (auto it = pos.rbegin(); it != pos.rend(); ++it) s.eigenvalues.push_back(-*it);
    if (m.dim % 2 == 1) s.eigenvalues.push_back(0.0);
    s.eigenvalues.insert(s.eigenvalues.end(), pos.begin(), pos.end());
    return s;
}

double max_eigenvalue(const CouplingMatrix& m) {
    if (m.dim < 1) throw std::domain_error("coupling matrix must have dim >= 1");
    if (m.dim == 1) return 0.0;
    const std::vector<double>& l = m.off_diag;
    std::vector<double> l2(l.size());
    for (std::size_t i = 0; i < l.size(); ++i) l2[i] = l[i] * l[i];
    const double ub = max_row_sum(l) * (1.0 + 8.0 * kMachEps);
    const double floor_tol = 1e-15 * ub;
    double xu = 0.0, x0 = ub;
    const std::int64_t rank = m.dim - 1;
    for (int iter = 0; iter < 200; ++iter) {
        if (x0 - xu <= 2.0 * kMachEps * (std::abs(xu) + std::abs(x0)) + floor_tol) break;
        const double x1 = 0.5 * (xu + x0);
        if (count_below(l, l2, x1) > rank) x0 = x1;
        else xu = x1;
    }
    return 0.5 * (xu + x0);
}

double determinant(const CouplingMatrix& m) {
    if (m.dim < 1) throw std::domain_error("coupling matrix must have dim >= 1");
    if (m.dim % 2 == 1) return 0.0;
    double det = 1.0;
    for (std::int64_t alpha = 1; alpha < m.dim; alpha += 2) {
        const double l = m.off_diag[static_cast<std::size_t>(alpha - 1)];
        det *= -(l * l);
    }
    return det;
}

LogDeterminant determinant_log(const CouplingMatrix& m) {
    if (m.dim < 1) throw std::domain_error("coupling matrix must have dim >= 1");
    LogDeterminant r;
    if (m.dim % 2 == 1) return r;  // sign 0
    double log_abs = 0.0;
    int sign = 1;
    for (std::int64_t alpha = 1; alpha < m.dim; alpha += 2) {
        log_abs += 2.0 * std::log(m.off_diag[static_cast<std::size_t>(alpha - 1)]);
        sign = -sign;
    }
    r.sign = sign;
    r.log_abs = log_abs;
    return r;
}

double char_poly_eval(const CouplingMatrix& m, double x) {
    if (m.dim < 1) throw std::domain_error("coupling matrix must have dim >= 1");
    double prev2 = 1.0;   // p_0
    double prev = -x;     // p_1 (hollow diagonal)
    for (std::int64_t i = 2; i <= m.dim; ++i) {
        const double l = m.off_diag[static_cast<std::size_t>(i - 2)];
        const double p = -x * prev - l * l * prev2;
        prev2 = prev;
        prev = p;
    }
    return prev;
}

namespace {

// Null vector of the hollow tridiagonal at odd dim: the kernel recurrence
// l_{2i-1} v_{2i-1} + l_{2i} v_{2i+1} = 0 leaves even components exactly zero.
std::vector<double> exact_null_vector(const CouplingMatrix& m) {
    const std::size_t n = static_cast<std::size_t>(m.dim);
    std::vector<double> v(n, 0.0);
    v[0] = 1.0;
    for (std::size_t i = 2; i < n; i += 2)
        v[i] = -v[i - 2] * m.off_diag[i - 2] / m.off_diag[i - 1];
    double norm = 0.0;
    for (double c : v) norm += c * c;
    norm = std::sqrt(norm);
    for (double& c : v) c /= norm;
    return v;
}

// One pivoted-LU tridiagonal solve of (L - lambda I) w = rhs (dgttrf/dgtts2
// shape). Exactly singular pivots are nudged by eps * scale, the standard
// inverse-iteration safeguard.
std::vector<double> shifted_solve(const CouplingMatrix& m, double lambda,
                                  std::vector<double> rhs, double scale) {
    const std::size_t n = static_cast<std::size_t>(m.dim);
    std::vector<double> dl(m.off_diag), d(n, -lambda), du(m.off_diag);
    std::vector<double> du2(n > 2 ? n - 2 : 0, 0.0);
    std::vector<bool> swapped(n > 1 ? n - 1 : 0, false);
    const double tiny = kMachEps * std::max(scale, 1.0);

    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (std::abs(d[i]) >= std::abs(dl[i])) {
            if (std::abs(d[i]) < tiny) d[i] = (d[i] < 0.0 ? -tiny : tiny);
            const double fact = dl[i] / d[i];
            dl[i] = fact;
            d[i + 1] -= fact * du[i];
        } else {
            swapped[i] = true;
            const double fact = d[i] / dl[i];
            d[i] = dl[i];
            dl[i] = fact;
            const double tmp = du[i];
            du[i] = d[i + 1];
            d[i + 1] = tmp - fact * d[i + 1];
            if (i + 2 < n) {
                du2[i] = du[i + 1];
                du[i + 1] = -fact * du[i + 1];
            }
        }
    }
    if (std::abs(d[n - 1]) < tiny) d[n - 1] = (d[n - 1] < 0.0 ? -tiny : tiny);

    // Forward sweep.
    for (std::size_t i = 0; i + 1 < n; ++i) {
        if (swapped[i]) std::swap(rhs[i], rhs[i + 1]);
        rhs[i + 1] -= dl[i] * rhs[i];
    }
    // Back substitution.
    rhs[n - 1] /= d[n - 1];
    if (n >= 2) rhs[n - 2] = (rhs[n - 2] - du[n - 2] * rhs[n - 1]) / d[n - 2];
    for (std::size_t ii = 3; ii <= n; ++ii) {
        const std::size_t i = n - ii;
        rhs[i] = (rhs[i] - du[i] * rhs[i + 1] - du2[i] * rhs[i + 2]) / d[i];
    }
    return rhs;
}

}  // namespace

EigenPair eigenvector(const CouplingMatrix& m, double lambda) {
    if (m.dim < 1) throw std::domain_error("coupling matrix must have dim >= 1");
    EigenPair pair;
    pair.eigenvalue = lambda;
    const std::size_t n = static_cast<std::size_t>(m.dim);

    if (n == 1) {
        pair.vector = {1.0};
        return pair;
    }

    const double max_l = *std::max_element(m.off_diag.begin(), m.off_diag.end());
    const double tol = 1e-10 * std::max(1.0, std::abs(lambda)) * max_l;

    if (lambda == 0.0 && n % 2 == 1) {
        pair.vector = exact_null_vector(m);
        return pair;
    }

    std::vector<double> v(n, 1.0 / std::sqrt(static_cast<double>(n)));
    for (int iter = 0; iter < 5; ++iter) {
        std::vector<double> w = shifted_solve(m, lambda, v, max_l);
        double norm = 0.0;
        for (double c : w) norm += c * c;
        norm = std::sqrt(norm);
        for (double& c : w) c /= norm;
        v = std::move(w);

        double residual = 0.0;
        for (std::size_t i = 0; i < n; ++i) {
            double r = -lambda * v[i];
            if (i > 0) r += m.off_diag[i - 1] * v[i - 1];
            if (i + 1 < n) r += m.off_diag[i] * v[i + 1];
            residual = std::max(residual, std::abs(r));
        }
        if (residual <= tol) {
            const double vmax = std::abs(*std::max_element(
                v.begin(), v.end(), [](double a, double b) { return std::abs(a) < std::abs(b); }));
            for (double c : v) {
                if (std::abs(c) > 1e-12 * vmax) {
                    if (c < 0.0)
                        for (double& x : v) x = -x;
                    break;
                }
            }
            pair.vector = std::move(v);
            return pair;
        }
    }
    throw std::runtime_error("inverse iteration did not converge: shift too far from spectrum");
}

}  // namespace lambshift
