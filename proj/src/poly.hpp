#pragma once

#include <vector>

#include "matrix.hpp"

namespace lalpha {

/// Real-coefficient polynomial, stored ascending (coeffs()[k] multiplies x^k).
/// The zero polynomial has no coefficients and degree -1.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs_ascending);

    static RealPoly constant(double c);
    static RealPoly monomial(int degree, double coeff = 1.0);
    static RealPoly from_roots(const std::vector<double>& roots);  // monic

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    double coeff(int k) const;
    const std::vector<double>& coeffs() const { return c_; }
    std::vector<double> coeffs_descending() const;
    double leading() const { return c_.empty() ? 0.0 : c_.back(); }

    double evaluate(double x) const;  // Horner
    /// Sum_k |c_k| |x|^k: the natural scale of evaluate(x), used for
    /// backward-error style residual checks.
    double evaluation_magnitude(double x) const;

    RealPoly operator+(const RealPoly& other) const;
    RealPoly operator-(const RealPoly& other) const;
    RealPoly operator*(const RealPoly& other) const;
    RealPoly scaled(double s) const;

private:
    std::vector<double> c_;
    void trim();
};

/// Characteristic polynomial det(xI - m) via the Faddeev-LeVerrier trace
/// recurrence. Monic of degree m.rows(); adequate up to n ~ 20.
RealPoly char_poly(const DenseMatrix& m);
RealPoly char_poly(const SymMatrix& m);

} // namespace lalpha
