#pragma once

#include <vector>

#include "nucleus/operator.hpp"

namespace nucleus {

/// Singular values below rel_zero_tol * sigma_max are flushed to exactly 0,
/// separating numerical noise from genuine rank.
inline constexpr double rel_zero_tol = 1e-12;

/// Nonincreasing, nonnegative singular values of an operator; length
/// min(rows, cols). values[0] is the operator norm.
struct SingularSpectrum {
    Eigen::VectorXd values;

    Eigen::Index size() const { return values.size(); }
    double operator[](Eigen::Index k) const { return values[k]; }

    /// Number of values surviving the zero-flush.
    Eigen::Index rank() const;
};

SingularSpectrum singular_spectrum(const Operator& op);

/// Distances to the sets of rank-<=k operators, k = 0 .. min(rows,cols)-1.
/// In the Euclidean setting these are exactly the singular values shifted
/// by one: the k'th entry equals sigma_{k+1}.
std::vector<double> approximation_numbers(const Operator& op);

/// l^p norm of the approximation-number sequence, p > 0.
double rho_p(const Operator& op, double p);

} // namespace nucleus
