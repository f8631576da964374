#pragma once

#include <cstdio>
#include <stdexcept>
#include <string>

namespace resyn {

// Error taxonomy. The CLI maps these onto its stable exit codes:
// config/validation problems -> 2, file I/O -> 3, evaluator failures -> 4.
struct Error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct InvalidActionError : Error {
    using Error::Error;
};

struct ContractViolation : Error {
    using Error::Error;
};

struct ConfigError : Error {
    using Error::Error;
};

struct IoError : Error {
    using Error::Error;
};

struct EvalError : Error {
    using Error::Error;
};

struct Vec2 {
    double x = 0.0;
    double y = 0.0;
};

// Formats a double with 17 significant digits, which round-trips IEEE-754
// binary64 exactly. Used by every file emitter so reruns are byte-identical.
inline std::string format_double(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

}  // namespace resyn
