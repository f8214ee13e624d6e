#include "liouk/bessel.hpp"

#include <cmath>

namespace liouk {

double bessel_j0_first_zero() {
    static const double z = [] {
        double lo = 2.0, hi = 3.0;  // J0(2) > 0 > J0(3)
        for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
            const double mid = 0.5 * (lo + hi);
            if (std::cyl_bessel_j(0.0, mid) > 0.0)
                lo = mid;
            else
                hi = mid;
        }
        return 0.5 * (lo + hi);
    }();
    return z;
}

} // namespace liouk
