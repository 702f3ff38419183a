#include "longmem/polynomial.hpp"

#include <Eigen/Dense>

#include <cmath>
#include <stdexcept>

namespace longmem {

Polynomial::Polynomial(std::vector<double> coeffs) : c_(std::move(coeffs)) {
    while (c_.size() > 1 && c_.back() == 0.0) c_.pop_back();
    if (c_.empty()) c_.push_back(0.0);
}

double Polynomial::operator()(double z) const {
    double s = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * z + c_[i];
    return s;
}

cplx Polynomial::operator()(cplx z) const {
    cplx s = 0.0;
    for (std::size_t i = c_.size(); i-- > 0;) s = s * z + c_[i];
    return s;
}

std::vector<cplx> Polynomial::roots() const {
    const int m = degree();
    if (m < 1) return {};
    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(m, m);
    for (int i = 0; i < m; ++i) companion(0, i) = -c_[m - 1 - i] / c_[m];
    for (int i = 1; i < m; ++i) companion(i, i - 1) = 1.0;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    std::vector<cplx> out;
    for (int i = 0; i < m; ++i) {
        cplx z = solver.eigenvalues()(i);
        for (int it = 0; it < 3; ++it) {
            cplx p = 0.0, dp = 0.0;
            for (std::size_t k = c_.size(); k-- > 0;) {
                dp = dp * z + p;
                p = p * z + c_[k];
            }
            if (std::abs(dp) == 0.0) break;
            z -= p / dp;
        }
        out.push_back(z);
    }
    return out;
}

}  // namespace longmem
