#pragma once

#include <functional>

namespace mcqw {

// Adaptive Simpson on [a, b], started from 16 equal panels. Each panel is accepted when its Richardson
// error estimate is below its share of `tolerance` (halved per split);
// throws QuadratureFailure when a panel needs more than max_depth splits.
double adaptive_simpson(const std::function<double(double)>& f, double a, double b, double tolerance,
                        int max_depth);

}  // namespace mcqw
