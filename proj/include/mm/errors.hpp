#pragma once

#include <stdexcept>
#include <string>

namespace mm {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// Metric determinant fell below the degeneracy tolerance.
struct DegenerateChartError : Error {
  using Error::Error;
};

/// Too few contiguous valid nodes to place a finite-difference stencil.
struct StencilError : Error {
  using Error::Error;
};

/// Bad key, value, or file in a run configuration.
struct ConfigError : Error {
  using Error::Error;
};

/// Evaluation requested inside an excluded singular region.
struct SingularityError : Error {
  using Error::Error;
};

/// Time step violated the stability bound, or a run blew up.
struct StabilityError : Error {
  using Error::Error;
};

}  // namespace mm
