#ifndef MBL_QUADRATURE_HPP
#define MBL_QUADRATURE_HPP

#include <cstddef>
#include <vector>

namespace mbl {

struct QuadRule {
    std::vector<double> x;  // nodes
    std::vector<double> w;  // weights
};

// Gauss-Legendre rule on [-1, 1], nodes by Newton iteration on the
// Legendre recurrence. Results are cached per n.
const QuadRule& gauss_legendre(std::size_t n);

// Same rule mapped to [a, b].
QuadRule gauss_legendre(std::size_t n, double a, double b);

}  // namespace mbl

#endif
