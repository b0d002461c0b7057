#include "matrix.hpp"

#include <cmath>

#include "error.hpp"

namespace lalpha {

Alpha::Alpha(double v) : value(v) {
    if (!(v >= 0.0 && v <= 1.0))
        fail(Errc::alpha_out_of_range, "alpha=" + std::to_string(v) + " outside [0,1]");
}

DenseMatrix DenseMatrix::identity(int n) {
    DenseMatrix m(n, n);
    for (int i = 0; i < n; ++i) m.at(i, i) = 1.0;
    return m;
}

DenseMatrix DenseMatrix::transposed() const {
    DenseMatrix t(cols_, rows_);
    for (int i = 0; i < rows_; ++i)
        for (int j = 0; j < cols_; ++j) t.at(j, i) = at(i, j);
    return t;
}

double DenseMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < rows_ && i < cols_; ++i) s += at(i, i);
    return s;
}

double DenseMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : e_) s += x * x;
    return std::sqrt(s);
}

bool DenseMatrix::equals_exact(const DenseMatrix& other) const {
    return rows_ == other.rows_ && cols_ == other.cols_ && e_ == other.e_;
}

DenseMatrix& DenseMatrix::operator+=(const DenseMatrix& other) {
    if (rows_ != other.rows_ || cols_ != other.cols_)
        fail(Errc::size_mismatch, "matrix addition shape mismatch");
    for (size_t i = 0; i < e_.size(); ++i) e_[i] += other.e_[i];
    return *this;
}

DenseMatrix& DenseMatrix::operator*=(double s) {
    for (double& x : e_) x *= s;
    return *this;
}

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b) {
    a += b;
    return a;
}

DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b) {
    if (a.cols() != b.rows()) fail(Errc::size_mismatch, "matrix product shape mismatch");
    DenseMatrix c(a.rows(), b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int k = 0; k < a.cols(); ++k) {
            double aik = a.at(i, k);
            if (aik == 0.0) continue;
            for (int j = 0; j < b.cols(); ++j) c.at(i, j) += aik * b.at(k, j);
        }
    return c;
}

DenseMatrix operator*(double s, DenseMatrix a) {
    a *= s;
    return a;
}

DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b) {
    DenseMatrix k(a.rows() * b.rows(), a.cols() * b.cols());
    for (int i = 0; i < a.rows(); ++i)
        for (int j = 0; j < a.cols(); ++j) {
            double aij = a.at(i, j);
            for (int p = 0; p < b.rows(); ++p)
                for (int q = 0; q < b.cols(); ++q)
                    k.at(i * b.rows() + p, j * b.cols() + q) = aij * b.at(p, q);
        }
    return k;
}

DenseMatrix SymMatrix::dense() const {
    DenseMatrix m(n_, n_);
    for (int i = 0; i < n_; ++i)
        for (int j = 0; j < n_; ++j) m.at(i, j) = at(i, j);
    return m;
}

double SymMatrix::trace() const {
    double s = 0.0;
    for (int i = 0; i < n_; ++i) s += at(i, i);
    return s;
}

double SymMatrix::frobenius_norm() const {
    double s = 0.0;
    for (double x : e_) s += x * x;
    return std::sqrt(s);
}

SymMatrix SymMatrix::without_vertex(int v) const {
    if (v < 0 || v >= n_) fail(Errc::invalid_vertex, "submatrix vertex " + std::to_string(v));
    SymMatrix m(n_ - 1);
    for (int i = 0, ii = 0; i < n_; ++i) {
        if (i == v) continue;
        for (int j = 0, jj = 0; j < n_; ++j) {
            if (j == v) continue;
            m.set(ii, jj, at(i, j));
            ++jj;
        }
        ++ii;
    }
    return m;
}

SymMatrix adjacency_matrix(const Graph& g) {
    SymMatrix a(g.order());
    for (auto [u, v] : g.edges()) a.set(u, v, 1.0);
    return a;
}

SymMatrix degree_matrix(const Graph& g) {
    SymMatrix d(g.order());
    for (int v = 0; v < g.order(); ++v) d.set(v, v, double(g.degrees()[v]));
    return d;
}

SymMatrix l_alpha_matrix(const Graph& g, Alpha alpha) {
    SymMatrix m(g.order());
    for (int v = 0; v < g.order(); ++v) m.set(v, v, alpha.value * g.degrees()[v]);
    for (auto [u, v] : g.edges()) m.set(u, v, alpha.value - 1.0);
    return m;
}

SymMatrix a_alpha_matrix(const Graph& g, Alpha alpha) {
    SymMatrix m(g.order());
    for (int v = 0; v < g.order(); ++v) m.set(v, v, alpha.value * g.degrees()[v]);
    for (auto [u, v] : g.edges()) m.set(u, v, 1.0 - alpha.value);
    return m;
}

} // namespace lalpha
