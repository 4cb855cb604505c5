#pragma once

#include <Eigen/Dense>

#include "nucleus/errors.hpp"

namespace nucleus {

enum class BoundKind { exact, interval };

/// Result of a (2 -> q) operator-norm computation. For kind == exact,
/// lower == upper == the norm. For kind == interval, lower is achieved by
/// `witness` (a unit vector) and upper is a proven analytic bound.
struct NormBound {
    double lower = 0.0;
    double upper = 0.0;
    BoundKind kind = BoundKind::exact;
    Eigen::VectorXd witness;
};

/// sup over unit alpha of || M alpha ||_q, the (2 -> q) norm of the K x d
/// matrix M whose rows are the vectors of interest. q in [1, inf].
///
/// Exact cases: q = 2 (spectral norm), q = inf (max row Euclidean norm),
/// q = 1 with K <= 20 (sign-pattern enumeration). Everything else returns
/// a certified interval: multi-start projected ascent below, interpolated
/// bound above.
NormBound two_to_q_norm(const Eigen::MatrixXd& m, double q);

/// Hard cap on enumerable sign patterns: 2^(K-1) vectors for K terms.
inline constexpr Eigen::Index sign_enum_max_terms = 20;

} // namespace nucleus
