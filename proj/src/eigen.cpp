#include "eigen.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "error.hpp"

namespace lalpha {

Spectrum Spectrum::from_values(std::vector<double> values) {
    std::sort(values.begin(), values.end(), std::greater<>());
    Spectrum s;
    double group_sum = 0.0;
    int group_count = 0;
    double last = 0.0;
    auto close_group = [&] {
        if (group_count > 0) s.lines_.push_back({group_sum / group_count, group_count});
    };
    for (double v : values) {
        if (group_count > 0 && last - v <= grouping_tol * std::max(1.0, std::fabs(v))) {
            group_sum += v;
            ++group_count;
        } else {
            close_group();
            group_sum = v;
            group_count = 1;
        }
        last = v;
    }
    close_group();
    return s;
}

Spectrum Spectrum::from_lines(const std::vector<SpectralLine>& lines) {
    std::vector<double> vals;
    for (const auto& l : lines) {
        if (l.multiplicity < 0) fail(Errc::parameter_out_of_range, "negative multiplicity");
        vals.insert(vals.end(), size_t(l.multiplicity), l.value);
    }
    return from_values(std::move(vals));
}

int Spectrum::order() const {
    int n = 0;
    for (const auto& l : lines_) n += l.multiplicity;
    return n;
}

std::vector<double> Spectrum::expanded() const {
    std::vector<double> v;
    v.reserve(order());
    for (const auto& l : lines_) v.insert(v.end(), size_t(l.multiplicity), l.value);
    return v;
}

double Spectrum::min_value() const {
    if (lines_.empty()) fail(Errc::size_mismatch, "empty spectrum");
    return lines_.back().value;
}

double Spectrum::max_value() const {
    if (lines_.empty()) fail(Errc::size_mismatch, "empty spectrum");
    return lines_.front().value;
}

namespace {

double offdiag_norm(const std::vector<double>& a, int n) {
    double s = 0.0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) {
            double x = a[size_t(i) * n + j];
            s += 2.0 * x * x;
        }
    return std::sqrt(s);
}

} // namespace

EigenDecomposition eigen_sym(const SymMatrix& m, bool with_vectors) {
    const int n = m.dim();
    std::vector<double> a(m.entries());
    std::vector<double> q;
    if (with_vectors) {
        q.assign(size_t(n) * n, 0.0);
        for (int i = 0; i < n; ++i) q[size_t(i) * n + i] = 1.0;
    }
    auto A = [&](int i, int j) -> double& { return a[size_t(i) * n + j]; };

    const double scale = std::max(1.0, m.frobenius_norm());
    const double stop = 1e-13 * scale;
    const int max_sweeps = 100;

    bool converged = offdiag_norm(a, n) <= stop;
    for (int sweep = 0; sweep < max_sweeps && !converged; ++sweep) {
        for (int p = 0; p < n - 1; ++p) {
            for (int r = p + 1; r < n; ++r) {
                double apr = A(p, r);
                if (std::fabs(apr) < 1e-300) continue;
                double theta = (A(r, r) - A(p, p)) / (2.0 * apr);
                double t = (theta >= 0.0 ? 1.0 : -1.0) /
                           (std::fabs(theta) + std::sqrt(theta * theta + 1.0));
                double c = 1.0 / std::sqrt(t * t + 1.0);
                double s = t * c;
                double tau = s / (1.0 + c);

                double app = A(p, p), arr = A(r, r);
                A(p, p) = app - t * apr;
                A(r, r) = arr + t * apr;
                A(p, r) = A(r, p) = 0.0;
                for (int k = 0; k < n; ++k) {
                    if (k == p || k == r) continue;
                    double akp = A(k, p), akr = A(k, r);
                    A(k, p) = A(p, k) = akp - s * (akr + tau * akp);
                    A(k, r) = A(r, k) = akr + s * (akp - tau * akr);
                }
                if (with_vectors) {
                    for (int k = 0; k < n; ++k) {
                        double vkp = q[size_t(k) * n + p], vkr = q[size_t(k) * n + r];
                        q[size_t(k) * n + p] = vkp - s * (vkr + tau * vkp);
                        q[size_t(k) * n + r] = vkr + s * (vkp - tau * vkr);
                    }
                }
            }
        }
        converged = offdiag_norm(a, n) <= stop;
    }
    if (!converged)
        fail(Errc::convergence_failure, "Jacobi sweep cap exceeded at n=" + std::to_string(n));

    std::vector<int> idx(n);
    std::iota(idx.begin(), idx.end(), 0);
    std::stable_sort(idx.begin(), idx.end(),
                     [&](int i, int j) { return A(i, i) > A(j, j); });

    EigenDecomposition d;
    d.values.resize(n);
    for (int i = 0; i < n; ++i) d.values[i] = A(idx[i], idx[i]);
    if (with_vectors) {
        d.vectors = DenseMatrix(n, n);
        for (int col = 0; col < n; ++col)
            for (int row = 0; row < n; ++row) d.vectors.at(row, col) = q[size_t(row) * n + idx[col]];
    }
    d.spectrum = Spectrum::from_values(d.values);
    return d;
}

SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b, double tol) {
    if (a.order() != b.order())
        fail(Errc::size_mismatch, "spectrum orders differ: " + std::to_string(a.order()) +
                                      " vs " + std::to_string(b.order()));
    auto ea = a.expanded();
    auto eb = b.expanded();
    double max_dev = 0.0;
    for (size_t i = 0; i < ea.size(); ++i) {
        double dev = std::fabs(ea[i] - eb[i]) / std::max(1.0, std::fabs(ea[i]));
        max_dev = std::max(max_dev, dev);
    }
    return {max_dev <= tol, max_dev};
}

double membership_deviation(double value, const std::vector<double>& eigenvalues) {
    double best = std::numeric_limits<double>::infinity();
    for (double x : eigenvalues)
        best = std::min(best, std::fabs(value - x));
    return best / std::max(1.0, std::fabs(value));
}

int multiplicity_near(double value, const std::vector<double>& eigenvalues, double tol) {
    int count = 0;
    for (double x : eigenvalues)
        if (std::fabs(value - x) <= tol * std::max(1.0, std::fabs(value))) ++count;
    return count;
}

} // namespace lalpha
