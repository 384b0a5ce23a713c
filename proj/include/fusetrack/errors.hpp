#pragma once

#include <stdexcept>
#include <string>

namespace fusetrack {

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// camera_geometry
struct PointBehindCamera : Error {
  using Error::Error;
};
struct DegenerateBox : Error {
  using Error::Error;
};

// visual tracking
struct EmptyIntersection : Error {
  using Error::Error;
};
struct DimensionMismatch : Error {
  using Error::Error;
};
struct AllZeroResponse : Error {
  using Error::Error;
};

// ultrasonic model
struct SingularGram : Error {
  using Error::Error;
};
struct DegeneratePosterior : Error {
  using Error::Error;
};
struct UndefinedRange : Error {
  using Error::Error;
};

// fusion
struct TimeRegression : Error {
  using Error::Error;
};
struct SingularInnovation : Error {
  using Error::Error;
};
struct NonPositivePce : Error {
  using Error::Error;
};

// simulator / harness
struct ConfigError : Error {
  using Error::Error;
};
struct EmptyOverlap : Error {
  using Error::Error;
};
struct NoData : Error {
  using Error::Error;
};
struct IoError : Error {
  using Error::Error;
};

}  // namespace fusetrack
