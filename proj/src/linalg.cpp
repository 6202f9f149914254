#include "mbl/linalg.hpp"

#include <cmath>
#include <cstdlib>
#include <utility>

namespace mbl {

double det_one_minus(Matrix a) {
    const std::size_t n = a.rows();
    // Form I - A in place.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) a(i, j) = (i == j ? 1.0 : 0.0) - a(i, j);

    double sign = 1.0;
    double logmag = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
        std::size_t piv = k;
        double best = std::fabs(a(k, k));
        for (std::size_t i = k + 1; i < n; ++i) {
            const double v = std::fabs(a(i, k));
            if (v > best) {
                best = v;
                piv = i;
            }
        }
        if (best == 0.0) return 0.0;
        if (piv != k) {
            for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(piv, j));
            sign = -sign;
        }
        const double d = a(k, k);
        if (d < 0.0) sign = -sign;
        logmag += std::log(std::fabs(d));
        const double inv = 1.0 / d;
        for (std::size_t i = k + 1; i < n; ++i) {
            const double f = a(i, k) * inv;
            if (f == 0.0) continue;
            a(i, k) = 0.0;
            for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
        }
    }
    return sign * std::exp(logmag);
}

}  // namespace mbl
