#include "nucleus/operator.hpp"

#include <Eigen/SVD>

#include <cmath>

namespace nucleus {

Operator::Operator(Eigen::MatrixXd entries)
    : mat_(std::move(entries)), cache_(std::make_shared<SpectrumCache>()) {
    if (mat_.rows() < 1 || mat_.cols() < 1)
        throw invalid_input("operator must have at least one row and one column");
    if (!mat_.allFinite())
        throw invalid_input("operator entries must be finite");
}

bool Operator::is_zero() const {
    return mat_.isZero(0.0);
}

SvdResult thin_svd(const Eigen::MatrixXd& m) {
    // Jacobi is the most accurate option at small sizes; the
    // divide-and-conquer kernel takes over where Jacobi gets slow.
    if (std::min(m.rows(), m.cols()) <= 32) {
        Eigen::JacobiSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
        return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
    }
    Eigen::BDCSVD<Eigen::MatrixXd> svd(m, Eigen::ComputeThinU | Eigen::ComputeThinV);
    return {svd.matrixU(), svd.singularValues(), svd.matrixV()};
}

const Eigen::VectorXd& Operator::raw_singular_values() const {
    std::call_once(cache_->once, [this] {
        if (std::min(mat_.rows(), mat_.cols()) <= 32) {
            Eigen::JacobiSVD<Eigen::MatrixXd> svd(mat_);
            cache_->values = svd.singularValues();
        } else {
            Eigen::BDCSVD<Eigen::MatrixXd> svd(mat_);
            cache_->values = svd.singularValues();
        }
    });
    return cache_->values;
}

} // namespace nucleus
