#pragma once

#include <vector>

#include "graph.hpp"

namespace lalpha {

/// Convex combination parameter, validated to [0,1] on construction.
struct Alpha {
    double value;
    explicit Alpha(double v);
};

class DenseMatrix {
public:
    DenseMatrix() = default;
    DenseMatrix(int rows, int cols) : rows_(rows), cols_(cols), e_(size_t(rows) * cols, 0.0) {}
    static DenseMatrix identity(int n);

    int rows() const { return rows_; }
    int cols() const { return cols_; }
    double& at(int i, int j) { return e_[size_t(i) * cols_ + j]; }
    double at(int i, int j) const { return e_[size_t(i) * cols_ + j]; }
    const std::vector<double>& entries() const { return e_; }

    DenseMatrix transposed() const;
    double trace() const;
    double frobenius_norm() const;
    bool equals_exact(const DenseMatrix& other) const;

    DenseMatrix& operator+=(const DenseMatrix& other);
    DenseMatrix& operator*=(double s);

private:
    int rows_ = 0, cols_ = 0;
    std::vector<double> e_;
};

DenseMatrix operator+(DenseMatrix a, const DenseMatrix& b);
DenseMatrix operator*(const DenseMatrix& a, const DenseMatrix& b);
DenseMatrix operator*(double s, DenseMatrix a);

/// Kronecker product, block layout a(i,j)*b.
DenseMatrix kronecker(const DenseMatrix& a, const DenseMatrix& b);

/// Dense real symmetric matrix; set() writes both mirror entries so the
/// stored array is symmetric exactly.
class SymMatrix {
public:
    SymMatrix() = default;
    explicit SymMatrix(int n) : n_(n), e_(size_t(n) * n, 0.0) {}

    int dim() const { return n_; }
    double at(int i, int j) const { return e_[size_t(i) * n_ + j]; }
    void set(int i, int j, double v) {
        e_[size_t(i) * n_ + j] = v;
        e_[size_t(j) * n_ + i] = v;
    }
    const std::vector<double>& entries() const { return e_; }

    DenseMatrix dense() const;
    double trace() const;
    double frobenius_norm() const;

    /// Principal submatrix with row and column v removed.
    SymMatrix without_vertex(int v) const;

private:
    int n_ = 0;
    std::vector<double> e_;
};

SymMatrix adjacency_matrix(const Graph& g);
SymMatrix degree_matrix(const Graph& g);

/// alpha*D + (alpha-1)*A
SymMatrix l_alpha_matrix(const Graph& g, Alpha alpha);

/// alpha*D + (1-alpha)*A
SymMatrix a_alpha_matrix(const Graph& g, Alpha alpha);

} // namespace lalpha
