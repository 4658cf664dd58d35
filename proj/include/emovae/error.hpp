#pragma once

#include <stdexcept>
#include <string>

namespace emovae {

// Error taxonomy. The CLI maps ParseError/ValidationError/ConfigError to
// exit code 2 (bad usage or bad input files) and everything else to 1.
struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct DimensionError : Error { using Error::Error; };   // shape mismatches
struct NumericError : Error { using Error::Error; };     // NaN/Inf, divergence
struct ParameterError : Error { using Error::Error; };   // bad argument values
struct TooShortError : Error { using Error::Error; };    // signal/sequence shorter than one unit
struct FormatError : Error { using Error::Error; };      // unsupported file encodings
struct IoError : Error { using Error::Error; };
struct ParseError : Error { using Error::Error; };       // malformed input files
struct ValidationError : Error { using Error::Error; };  // semantic input violations
struct ConfigError : Error { using Error::Error; };      // bad run configuration

}  // namespace emovae
