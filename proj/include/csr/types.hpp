// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <Eigen/Dense>

namespace csr {

using Vec = Eigen::ArrayXd;
using Index = Eigen::Index;

} // namespace csr
