#pragma once

#include <stdexcept>

namespace lgdet {

// Error classes; the CLI maps each to a distinct exit code (see tools/lgdet_main.cpp).
struct ArgumentError : std::runtime_error { using std::runtime_error::runtime_error; };
struct FormatError : std::runtime_error { using std::runtime_error::runtime_error; };
struct ConfigError : std::runtime_error { using std::runtime_error::runtime_error; };
struct MissingInputError : std::runtime_error { using std::runtime_error::runtime_error; };
struct MetricUndefinedError : std::runtime_error { using std::runtime_error::runtime_error; };
struct DivergenceError : std::runtime_error { using std::runtime_error::runtime_error; };
struct InternalError : std::runtime_error { using std::runtime_error::runtime_error; };

}  // namespace lgdet
