#pragma once

#include <string>
#include <vector>

#include "graph_spec.hpp"
#include "theorems.hpp"

namespace lalpha {

enum class CaseMode {
    full_spectrum,
    subset_membership,
    polynomial_identity,
    multiplicity_lower_bound,
};

const char* case_mode_name(CaseMode m);

/// One theorem-versus-oracle check over an alpha grid.
struct VerificationCase {
    std::string theorem;            // theorem identifier (see default_corpus)
    std::string g_spec;             // graph spec string, parsed per graph_spec.hpp
    std::string h_spec;             // second operand; empty for unary theorems
    std::vector<double> alpha_grid; // values in [0,1]
    double tolerance = 1e-8;
    CaseMode mode = CaseMode::full_spectrum;
    bool expect_negative = false;   // case passes when the check fails by > 1e-3
    int u = 0, v = 0;               // coalescence endpoints
};

struct AlphaResult {
    double alpha;
    bool pass;
    double deviation;
};

struct VerificationReport {
    enum class Status { pass, fail, skipped, expected_negative };
    VerificationCase vcase;
    Status status = Status::pass;
    std::string reason;                  // populated when skipped
    std::vector<AlphaResult> per_alpha;
    double max_deviation = 0.0;
    std::vector<std::string> notes;      // e.g. printed-formula discrepancies
};

const char* status_name(VerificationReport::Status s);

struct SuiteSummary {
    int total = 0;
    int pass = 0;
    int fail = 0;
    int skipped = 0;
    int expected_negative = 0;
    int unexpected_failures = 0;  // failures not marked expect_negative
};

struct SuiteResult {
    std::vector<VerificationReport> reports;
    SuiteSummary summary;
};

/// Uniform grid over [0,1] with the given number of points (>= 2), endpoints
/// included.
std::vector<double> make_alpha_grid(int points);

double default_tolerance(const std::string& theorem);
CaseMode default_mode(const std::string& theorem);

/// Builds a case with per-theorem default mode/grid/tolerance; grid_points
/// <= 0 and tol <= 0 select the defaults.
VerificationCase make_case(const std::string& theorem, const std::string& g_spec,
                           const std::string& h_spec, int grid_points, double tol);

VerificationReport run_case(const VerificationCase& c);

/// Runs cases in order and aggregates. Deterministic: same corpus, same
/// pass/fail pattern.
SuiteResult run_suite(const std::vector<VerificationCase>& corpus);

/// The default suite: every theorem over its desk-scale corpus.
std::vector<VerificationCase> default_corpus();

std::string suite_json(const SuiteResult& result);
std::string suite_table(const SuiteResult& result);

} // namespace lalpha
