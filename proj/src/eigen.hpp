#pragma once

#include <vector>

#include "matrix.hpp"

namespace lalpha {

struct SpectralLine {
    double value;
    int multiplicity;
};

/// Multiset of real eigenvalues, sorted descending, with close values merged
/// into multiplicity buckets (tolerance 1e-8 * max(1, |value|)).
class Spectrum {
public:
    static constexpr double grouping_tol = 1e-8;

    Spectrum() = default;
    static Spectrum from_values(std::vector<double> values);
    static Spectrum from_lines(const std::vector<SpectralLine>& lines);

    const std::vector<SpectralLine>& lines() const { return lines_; }
    int order() const;  // total multiplicity
    std::vector<double> expanded() const;  // descending, one entry per multiplicity
    double min_value() const;
    double max_value() const;

private:
    std::vector<SpectralLine> lines_;
};

struct EigenDecomposition {
    std::vector<double> values;  // descending, ungrouped
    DenseMatrix vectors;         // column i pairs with values[i]; empty unless requested
    Spectrum spectrum;           // grouped view of values
};

/// Cyclic Jacobi rotations on a private copy of m. Converges when the
/// off-diagonal Frobenius norm drops below 1e-13 * max(1, ||m||_F); throws
/// ConvergenceFailure past 100 sweeps (indicates a kernel bug).
EigenDecomposition eigen_sym(const SymMatrix& m, bool with_vectors = false);

struct SpectrumComparison {
    bool pass;
    double max_deviation;  // max |a_i - b_i| / max(1, |a_i|) over the expansion
};

/// Expands both spectra to full sorted vectors and compares elementwise.
/// Throws SizeMismatch when total multiplicities differ.
SpectrumComparison compare_spectra(const Spectrum& a, const Spectrum& b, double tol);

/// Distance from value to the nearest entry of eigenvalues, relative to
/// max(1, |value|). Infinity for an empty list.
double membership_deviation(double value, const std::vector<double>& eigenvalues);

/// Number of entries within tol * max(1, |value|) of value.
int multiplicity_near(double value, const std::vector<double>& eigenvalues, double tol);

} // namespace lalpha
