#pragma once

#include <utility>

namespace rab {

/// Golden-section minimization of a unimodal scalar function on [a, b].
/// Returns the midpoint of the final bracket once its width is <= xtol.
template <class F>
double golden_section_min(F&& f, double a, double b, double xtol) {
    constexpr double invphi = 0.6180339887498949;  // (sqrt(5)-1)/2
    double x1 = b - invphi * (b - a);
    double x2 = a + invphi * (b - a);
    double f1 = f(x1);
    double f2 = f(x2);
    while (b - a > xtol) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - invphi * (b - a);
            f1 = f(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + invphi * (b - a);
            f2 = f(x2);
        }
    }
    return 0.5 * (a + b);
}

}  // namespace rab
