#include "nucleus/spectrum.hpp"

#include <cmath>

#include "nucleus/detail/kahan.hpp"

namespace nucleus {

Eigen::Index SingularSpectrum::rank() const {
    Eigen::Index r = 0;
    while (r < values.size() && values[r] > 0.0) ++r;
    return r;
}

SingularSpectrum singular_spectrum(const Operator& op) {
    Eigen::VectorXd v = op.raw_singular_values();
    const double top = v.size() > 0 ? v[0] : 0.0;
    const double cutoff = rel_zero_tol * top;
    for (Eigen::Index i = 0; i < v.size(); ++i)
        if (v[i] < cutoff) v[i] = 0.0;
    return SingularSpectrum{std::move(v)};
}

std::vector<double> approximation_numbers(const Operator& op) {
    const SingularSpectrum s = singular_spectrum(op);
    return std::vector<double>(s.values.data(), s.values.data() + s.values.size());
}

double rho_p(const Operator& op, double p) {
    if (!(p > 0.0) || !std::isfinite(p))
        throw invalid_parameter("rho_p requires p > 0");
    const SingularSpectrum s = singular_spectrum(op);
    detail::KahanSum sum;
    for (Eigen::Index k = 0; k < s.size(); ++k)
        if (s[k] > 0.0) sum.add(std::pow(s[k], p));
    return sum.value() > 0.0 ? std::pow(sum.value(), 1.0 / p) : 0.0;
}

} // namespace nucleus
