#pragma once

#include <complex>
#include <vector>

namespace longmem {

using cplx = std::complex<double>;

// Real polynomial c[0] + c[1] z + ... + c[m] z^m with trailing zeros trimmed.
class Polynomial {
public:
    Polynomial() : c_{1.0} {}
    explicit Polynomial(std::vector<double> coeffs);

    const std::vector<double>& coeffs() const { return c_; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }

    double operator()(double z) const;
    cplx operator()(cplx z) const;

    // Complex zeros (companion-matrix eigenvalues, Newton polished).
    std::vector<cplx> roots() const;

private:
    std::vector<double> c_;
};

}  // namespace longmem
