#include "liouk/fit.hpp"

#include <cmath>

#include "liouk/errors.hpp"

namespace liouk {

double lsq_slope(const std::vector<double>& x, const std::vector<double>& y) {
    const size_t n = x.size();
    if (n < 2 || y.size() != n) throw DegenerateFit("lsq_slope: need >= 2 matched points");
    double sx = 0, sy = 0, sxx = 0, sxy = 0;
    for (size_t i = 0; i < n; ++i) {
        sx += x[i];
        sy += y[i];
        sxx += x[i] * x[i];
        sxy += x[i] * y[i];
    }
    const double den = n * sxx - sx * sx;
    if (std::abs(den) < 1e-300) throw DegenerateFit("lsq_slope: degenerate abscissae");
    return (n * sxy - sx * sy) / den;
}

double loglog_slope(const std::vector<double>& x, const std::vector<double>& y) {
    std::vector<double> lx(x.size()), ly(y.size());
    for (size_t i = 0; i < x.size(); ++i) {
        if (x[i] <= 0.0 || y[i] <= 0.0)
            throw DegenerateFit("loglog_slope: nonpositive datum");
        lx[i] = std::log(x[i]);
        ly[i] = std::log(y[i]);
    }
    return lsq_slope(lx, ly);
}

} // namespace liouk
