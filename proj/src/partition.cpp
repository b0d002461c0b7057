#include "partition.hpp"

#include <cmath>
#include <string>

#include "error.hpp"

namespace lalpha {

Partition::Partition(int n, std::vector<std::vector<int>> blocks)
    : n_(n), blocks_(std::move(blocks)) {
    if (n < 0) fail(Errc::parameter_out_of_range, "partition ground size must be >= 0");
    std::vector<char> seen(n, 0);
    int covered = 0;
    for (const auto& b : blocks_) {
        if (b.empty()) fail(Errc::parameter_out_of_range, "partition has an empty block");
        for (int v : b) {
            if (v < 0 || v >= n) fail(Errc::invalid_vertex, "partition vertex " + std::to_string(v));
            if (seen[v]) fail(Errc::parameter_out_of_range,
                              "partition blocks overlap at vertex " + std::to_string(v));
            seen[v] = 1;
            ++covered;
        }
    }
    if (covered != n) fail(Errc::parameter_out_of_range, "partition does not cover all vertices");
}

Partition Partition::singletons(int n) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(n);
    for (int v = 0; v < n; ++v) blocks.push_back({v});
    return Partition(n, std::move(blocks));
}

Partition Partition::single_block(int n) {
    std::vector<int> all(n);
    for (int v = 0; v < n; ++v) all[v] = v;
    return Partition(n, {all});
}

DenseMatrix quotient_matrix(const SymMatrix& m, const Partition& p) {
    if (m.dim() != p.ground_size())
        fail(Errc::size_mismatch, "partition ground size does not match matrix dimension");
    const double tol = 1e-10;
    const auto& blocks = p.blocks();
    const int k = p.block_count();
    DenseMatrix q(k, k);
    for (int i = 0; i < k; ++i)
        for (int j = 0; j < k; ++j) {
            double first = 0.0;
            bool have_first = false;
            for (int row : blocks[i]) {
                double sum = 0.0;
                for (int col : blocks[j]) sum += m.at(row, col);
                if (!have_first) {
                    first = sum;
                    have_first = true;
                } else if (std::fabs(sum - first) > tol) {
                    fail(Errc::not_equitable,
                         "block pair (" + std::to_string(i) + "," + std::to_string(j) +
                             "): row " + std::to_string(row) + " sums to " + std::to_string(sum) +
                             " but row " + std::to_string(blocks[i][0]) + " sums to " +
                             std::to_string(first));
                }
            }
            q.at(i, j) = first;
        }
    return q;
}

Spectrum quotient_spectrum(const SymMatrix& m, const Partition& p) {
    DenseMatrix q = quotient_matrix(m, p);
    const int k = p.block_count();
    std::vector<double> root(k);
    for (int i = 0; i < k; ++i) root[i] = std::sqrt(double(p.blocks()[i].size()));
    // (S q S^-1)_{ij} = q_{ij} sqrt(n_i / n_j); symmetrize to absorb roundoff.
    SymMatrix sym(k);
    for (int i = 0; i < k; ++i) {
        sym.set(i, i, q.at(i, i));
        for (int j = i + 1; j < k; ++j) {
            double a = q.at(i, j) * root[i] / root[j];
            double b = q.at(j, i) * root[j] / root[i];
            sym.set(i, j, 0.5 * (a + b));
        }
    }
    return eigen_sym(sym).spectrum;
}

} // namespace lalpha
