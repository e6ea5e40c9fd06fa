#pragma once

#include <Eigen/Core>

#include "divl1/splits.hpp"
#include "divl1/subsets.hpp"

namespace divl1 {

// n points in m-dimensional space, one row per point. Also serves as the
// generator-facing point-set type.
struct PointConfiguration {
  Eigen::MatrixXd coords;  // n x m

  int n() const { return static_cast<int>(coords.rows()); }
  int dim() const { return static_cast<int>(coords.cols()); }
};

using PointSet = PointConfiguration;

// The L1 diversity of a subset of the points: sum over coordinates of the
// coordinate range within the subset. Zero on subsets of size <= 1.
double l1_diversity_value(const PointConfiguration& points, Subset a);

// Realizes a split weighting as points carrying the same L1 diversity:
// one coordinate per stored split with positive weight; point p gets
// coordinate value w_B if p is in B and 0 otherwise. The L1 diversity of
// the image equals eval_split_combination exactly (coordinates are summed
// in stored-split order).
PointConfiguration coordinates_from_weights(const SplitWeighting& w);

}  // namespace divl1
