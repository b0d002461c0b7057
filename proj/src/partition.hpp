#pragma once

#include <vector>

#include "eigen.hpp"
#include "matrix.hpp"

namespace lalpha {

/// Ordered list of disjoint, nonempty vertex blocks covering 0..n-1.
class Partition {
public:
    Partition(int n, std::vector<std::vector<int>> blocks);

    static Partition singletons(int n);    // each vertex its own block
    static Partition single_block(int n);  // one block with every vertex

    int ground_size() const { return n_; }
    int block_count() const { return static_cast<int>(blocks_.size()); }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

private:
    int n_;
    std::vector<std::vector<int>> blocks_;
};

/// Block row-sum matrix c_{i,j}. The partition must be equitable for m:
/// within every block pair, all submatrix row sums agree to 1e-10 absolute.
/// Throws NotEquitable naming the violating block pair and rows.
DenseMatrix quotient_matrix(const SymMatrix& m, const Partition& p);

/// Eigenvalues of the quotient via similarity symmetrization: with
/// S = diag(sqrt(n_1),...,sqrt(n_k)), S M_q S^-1 is symmetric whenever m is,
/// so the symmetric eigensolver applies. Every returned value lies in the
/// spectrum of m.
Spectrum quotient_spectrum(const SymMatrix& m, const Partition& p);

} // namespace lalpha
