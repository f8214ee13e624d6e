#pragma once

namespace liouk {

// First positive zero of the Bessel function J0, located by bisection on [2, 3].
double bessel_j0_first_zero();

} // namespace liouk
