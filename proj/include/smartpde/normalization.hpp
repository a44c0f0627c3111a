#pragma once

#include <cstddef>
#include <vector>

#include "smartpde/errors.hpp"

namespace smartpde::model {

struct Range {
  double min = 0.0;
  double max = 1.0;
  double width() const { return max - min; }
};

// Per-quantity min/max used to map every coordinate and target into [0, 1].
// Order matches the column layout of the batches they are applied to.
struct NormStats {
  std::vector<Range> coord;   // x (, y), t
  std::vector<Range> target;  // u (, v, p)
};

double normalize_value(double q, const Range& r);
double denormalize_value(double q, const Range& r);

// Column-wise over a row-major (n, dim) batch.
std::vector<double> normalize_batch(const std::vector<double>& q,
                                    const std::vector<Range>& ranges);
std::vector<double> denormalize_batch(const std::vector<double>& q,
                                      const std::vector<Range>& ranges);

}  // namespace smartpde::model
