#ifndef MBL_LPP_HPP
#define MBL_LPP_HPP

#include <cstdint>
#include <vector>

#include "mbl/fields.hpp"

namespace mbl {

enum class PathOrientation {
    DownLeft,   // monotone paths (1,1) -> (M,N), one coordinate +1 per step
    DownRight,  // monotone paths (M,1) -> (1,N), i -> i-1 or j -> j+1
};

enum class PathCombine {
    MaxSum,      // maximize the sum of weights along the path
    MinProduct,  // minimize the product of weights along the path
};

struct PathMode {
    PathOrientation orientation = PathOrientation::DownLeft;
    PathCombine combine = PathCombine::MaxSum;
};

namespace lpp {

// Dynamic-programming last-passage value over an M x N weight matrix
// (row-major, 1-based semantics as in the fields module). Both path
// endpoints' weights are included.
std::int64_t max_sum(const std::vector<std::int64_t>& w, long rows, long cols,
                     PathOrientation o);
double max_sum(const std::vector<double>& w, long rows, long cols,
               PathOrientation o);

// min-product computed in log space as a max-sum of -log(w); requires all
// weights positive.
double min_product(const std::vector<double>& w, long rows, long cols,
                   PathOrientation o);

std::int64_t lpp_value(const GeomField& f, PathMode mode);
double lpp_value(const PowField& f, PathMode mode);

// Exhaustive enumeration of every monotone path; M + N <= 18.
std::int64_t oracle_max_sum(const std::vector<std::int64_t>& w, long rows, long cols,
                            PathOrientation o);
double oracle_min_product(const std::vector<double>& w, long rows, long cols,
                          PathOrientation o);

std::int64_t lpp_oracle(const GeomField& f, PathMode mode);
double lpp_oracle(const PowField& f, PathMode mode);

}  // namespace lpp
}  // namespace mbl

#endif
