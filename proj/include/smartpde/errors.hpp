#pragma once

#include <stdexcept>
#include <string>

namespace smartpde {

// Error taxonomy shared across the library. Each condition a caller can
// meaningfully react to gets its own type; everything else is a plain
// std::runtime_error from the site that detected it.

struct ShapeMismatch : std::runtime_error {
  explicit ShapeMismatch(const std::string& what) : std::runtime_error(what) {}
};

struct NotScalar : std::runtime_error {
  explicit NotScalar(const std::string& what) : std::runtime_error(what) {}
};

struct UnstableConfig : std::runtime_error {
  explicit UnstableConfig(const std::string& what) : std::runtime_error(what) {}
};

struct SingularSystem : std::runtime_error {
  explicit SingularSystem(const std::string& what) : std::runtime_error(what) {}
};

struct InsufficientData : std::runtime_error {
  explicit InsufficientData(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateRange : std::runtime_error {
  explicit DegenerateRange(const std::string& what) : std::runtime_error(what) {}
};

struct EmptyResult : std::runtime_error {
  explicit EmptyResult(const std::string& what) : std::runtime_error(what) {}
};

struct NonMonotoneMap : std::runtime_error {
  explicit NonMonotoneMap(const std::string& what) : std::runtime_error(what) {}
};

struct DivergedLoss : std::runtime_error {
  explicit DivergedLoss(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateTruth : std::runtime_error {
  explicit DegenerateTruth(const std::string& what) : std::runtime_error(what) {}
};

struct DegenerateBaseline : std::runtime_error {
  explicit DegenerateBaseline(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace smartpde
