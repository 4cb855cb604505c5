#pragma once

#include <Eigen/Dense>

#include <memory>
#include <mutex>

#include "nucleus/errors.hpp"

namespace nucleus {

/// Dense linear map between finite-dimensional Euclidean spaces.
///
/// The matrix is immutable after construction; the singular values are
/// computed lazily, at most once, and shared across copies. All entries
/// must be finite.
class Operator {
public:
    explicit Operator(Eigen::MatrixXd entries);

    Eigen::Index rows() const { return mat_.rows(); }
    Eigen::Index cols() const { return mat_.cols(); }
    const Eigen::MatrixXd& matrix() const { return mat_; }

    /// Raw singular values, nonincreasing, no zero-flush applied.
    const Eigen::VectorXd& raw_singular_values() const;

    bool is_zero() const;

private:
    Eigen::MatrixXd mat_;

    struct SpectrumCache {
        std::once_flag once;
        Eigen::VectorXd values;
    };
    std::shared_ptr<SpectrumCache> cache_;
};

/// Thin SVD with singular vectors; U is rows x r, V is cols x r with
/// r = min(rows, cols).
struct SvdResult {
    Eigen::MatrixXd u;
    Eigen::VectorXd sigma;
    Eigen::MatrixXd v;
};

SvdResult thin_svd(const Eigen::MatrixXd& m);

} // namespace nucleus
