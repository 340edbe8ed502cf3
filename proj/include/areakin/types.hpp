#pragma once

#include <Eigen/Dense>

namespace areakin {

/// Largest ambient dimension supported by the geometry code. Vectors and
/// small matrices live on the stack up to this size.
inline constexpr int kMaxDim = 8;

using Vec = Eigen::Matrix<double, Eigen::Dynamic, 1, Eigen::ColMajor, kMaxDim, 1>;
using Mat = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::ColMajor,
                          kMaxDim, kMaxDim>;

/// Incidence and degeneracy tolerance for polytope computations.
inline constexpr double kGeomEps = 1e-9;

}  // namespace areakin
