#include "poly.hpp"

#include <cmath>

#include "error.hpp"

namespace lalpha {

RealPoly::RealPoly(std::vector<double> coeffs_ascending) : c_(std::move(coeffs_ascending)) {
    trim();
}

void RealPoly::trim() {
    while (!c_.empty() && c_.back() == 0.0) c_.pop_back();
}

RealPoly RealPoly::constant(double c) {
    return c == 0.0 ? RealPoly() : RealPoly({c});
}

RealPoly RealPoly::monomial(int degree, double coeff) {
    if (degree < 0) fail(Errc::parameter_out_of_range, "monomial degree must be >= 0");
    if (coeff == 0.0) return RealPoly();
    std::vector<double> c(size_t(degree) + 1, 0.0);
    c.back() = coeff;
    return RealPoly(std::move(c));
}

RealPoly RealPoly::from_roots(const std::vector<double>& roots) {
    RealPoly p = constant(1.0);
    for (double r : roots) p = p * RealPoly({-r, 1.0});
    return p;
}

double RealPoly::coeff(int k) const {
    return (k >= 0 && k < static_cast<int>(c_.size())) ? c_[k] : 0.0;
}

std::vector<double> RealPoly::coeffs_descending() const {
    return {c_.rbegin(), c_.rend()};
}

double RealPoly::evaluate(double x) const {
    double r = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
    return r;
}

double RealPoly::evaluation_magnitude(double x) const {
    double r = 0.0;
    double ax = std::fabs(x);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * ax + std::fabs(*it);
    return r;
}

RealPoly RealPoly::operator+(const RealPoly& other) const {
    std::vector<double> c(std::max(c_.size(), other.c_.size()), 0.0);
    for (size_t i = 0; i < c_.size(); ++i) c[i] += c_[i];
    for (size_t i = 0; i < other.c_.size(); ++i) c[i] += other.c_[i];
    return RealPoly(std::move(c));
}

RealPoly RealPoly::operator-(const RealPoly& other) const {
    return *this + other.scaled(-1.0);
}

RealPoly RealPoly::operator*(const RealPoly& other) const {
    if (c_.empty() || other.c_.empty()) return RealPoly();
    std::vector<double> c(c_.size() + other.c_.size() - 1, 0.0);
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < other.c_.size(); ++j) c[i + j] += c_[i] * other.c_[j];
    return RealPoly(std::move(c));
}

RealPoly RealPoly::scaled(double s) const {
    std::vector<double> c(c_);
    for (double& x : c) x *= s;
    return RealPoly(std::move(c));
}

RealPoly char_poly(const DenseMatrix& m) {
    if (m.rows() != m.cols()) fail(Errc::size_mismatch, "char_poly requires a square matrix");
    const int n = m.rows();
    // coefficients of det(xI - M) = x^n + c[n-1] x^(n-1) + ... + c[0]
    std::vector<double> c(size_t(n) + 1, 0.0);
    c[n] = 1.0;
    DenseMatrix acc = DenseMatrix::identity(n);  // M_1 = I
    for (int k = 1; k <= n; ++k) {
        if (k > 1) {
            acc = m * acc;
            for (int i = 0; i < n; ++i) acc.at(i, i) += c[n - k + 1];
        }
        c[n - k] = -(m * acc).trace() / k;
    }
    return RealPoly(std::move(c));
}

RealPoly char_poly(const SymMatrix& m) {
    return char_poly(m.dense());
}

} // namespace lalpha
