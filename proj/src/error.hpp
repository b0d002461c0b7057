#pragma once

#include <stdexcept>
#include <string>

namespace lalpha {

enum class Errc {
    parameter_out_of_range,
    invalid_vertex,
    parse_error,
    alpha_out_of_range,
    alpha_boundary,
    not_regular,
    not_equitable,
    not_orthogonal,
    convergence_failure,
    degree_mismatch,
    size_mismatch,
    io_error,
};

const char* errc_name(Errc c);

class Error : public std::runtime_error {
public:
    Error(Errc code, const std::string& msg)
        : std::runtime_error(std::string(errc_name(code)) + ": " + msg), code_(code) {}

    Errc code() const { return code_; }

private:
    Errc code_;
};

[[noreturn]] inline void fail(Errc code, const std::string& msg) {
    throw Error(code, msg);
}

inline const char* errc_name(Errc c) {
    switch (c) {
        case Errc::parameter_out_of_range: return "ParameterOutOfRange";
        case Errc::invalid_vertex: return "InvalidVertex";
        case Errc::parse_error: return "ParseError";
        case Errc::alpha_out_of_range: return "AlphaOutOfRange";
        case Errc::alpha_boundary: return "AlphaBoundary";
        case Errc::not_regular: return "NotRegular";
        case Errc::not_equitable: return "NotEquitable";
        case Errc::not_orthogonal: return "NotOrthogonal";
        case Errc::convergence_failure: return "ConvergenceFailure";
        case Errc::degree_mismatch: return "DegreeMismatch";
        case Errc::size_mismatch: return "SizeMismatch";
        case Errc::io_error: return "IoError";
    }
    return "UnknownError";
}

} // namespace lalpha
