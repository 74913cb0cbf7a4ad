#pragma once

#include <cmath>
#include <stdexcept>
#include <string>
#include <vector>

namespace nns {

/// Dense real coordinate vector, a truncation of a sequence to its
/// first d coordinates. Results are exact for inputs supported on
/// those coordinates.
using Vector = std::vector<double>;

enum class ErrorCode {
    invalid_argument,
    dimension_mismatch,
    nonfinite_input,
    parse_error,
    numeric_breakdown,
    no_informative_pairs,
};

class Error : public std::runtime_error {
public:
    Error(ErrorCode code, const std::string& what)
        : std::runtime_error(what), code_(code) {}

    ErrorCode code() const { return code_; }

private:
    ErrorCode code_;
};

/// Parameters shared by every norm computation: n vectors in dimension d,
/// exponent p, and the tolerances used by threshold tests.
struct NormParams {
    int n = 2;
    double p = 2.0;
    int d = 2;
    double rel_tol = 1e-9;
    double abs_tol = 1e-12;

    void validate() const {
        if (n < 1)
            throw Error(ErrorCode::invalid_argument, "n must be >= 1");
        if (d < 1)
            throw Error(ErrorCode::invalid_argument, "d must be >= 1");
        if (n > d)
            throw Error(ErrorCode::invalid_argument,
                        "n exceeds ambient dimension d (need dim >= n)");
        if (!(p >= 1.0) || !std::isfinite(p))
            throw Error(ErrorCode::invalid_argument,
                        "exponent p must satisfy 1 <= p < inf");
        if (!(rel_tol > 0.0) || !(abs_tol > 0.0))
            throw Error(ErrorCode::invalid_argument, "tolerances must be positive");
    }
};

inline bool all_finite(const Vector& v) {
    for (double x : v)
        if (!std::isfinite(x)) return false;
    return true;
}

inline void require_finite(const Vector& v, const char* what) {
    if (!all_finite(v))
        throw Error(ErrorCode::nonfinite_input,
                    std::string(what) + " contains a non-finite entry");
}

inline void require_dim(const Vector& v, int d, const char* what) {
    if (static_cast<int>(v.size()) != d)
        throw Error(ErrorCode::dimension_mismatch,
                    std::string(what) + " has dimension " +
                        std::to_string(v.size()) + ", expected " + std::to_string(d));
}

} // namespace nns
