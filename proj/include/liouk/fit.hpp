#pragma once

#include <vector>

namespace liouk {

// Least-squares slope of y against x. Requires >= 2 points with distinct x.
double lsq_slope(const std::vector<double>& x, const std::vector<double>& y);

// Convenience: slope of log(y) vs log(x); all entries must be positive.
double loglog_slope(const std::vector<double>& x, const std::vector<double>& y);

} // namespace liouk
