#include "mbl/lpp.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "mbl/errors.hpp"

namespace mbl {
namespace lpp {

namespace {

// Down-left recursion; down-right is the same DP on the row-reversed
// matrix, so a single audited kernel serves both orientations.
template <typename T>
T dp_max_sum(const std::vector<T>& w, long rows, long cols, PathOrientation o) {
    if (rows < 1 || cols < 1 || w.size() != static_cast<std::size_t>(rows) * cols)
        throw invalid_argument("empty or malformed weight field");
    const T neg = std::numeric_limits<T>::lowest();
    std::vector<T> g(static_cast<std::size_t>(cols), neg);
    for (long r = 0; r < rows; ++r) {
        const long i = (o == PathOrientation::DownLeft) ? r : rows - 1 - r;
        const T* row = w.data() + static_cast<std::size_t>(i) * cols;
        for (long j = 0; j < cols; ++j) {
            T best = g[j];  // from previous row, same column
            if (j > 0 && g[j - 1] > best) best = g[j - 1];
            if (best == neg) best = T(0);  // boundary: neutral element
            g[j] = best + row[j];
        }
    }
    return g[static_cast<std::size_t>(cols - 1)];
}

template <typename T, typename Op>
void enumerate_paths(const std::vector<T>& w, long rows, long cols, PathOrientation o,
                     Op&& visit) {
    if (rows < 1 || cols < 1) throw invalid_argument("empty weight field");
    if (rows + cols > 18) throw budget_error("oracle limited to M + N <= 18");
    auto at = [&](long i, long j) -> T {
        const long ri = (o == PathOrientation::DownLeft) ? i : rows - 1 - i;
        return w[static_cast<std::size_t>(ri) * cols + j];
    };
    std::vector<T> acc;
    acc.reserve(static_cast<std::size_t>(rows + cols));
    // Walk all monotone step sequences from (0,0) to (rows-1, cols-1).
    const long steps = rows + cols - 2;
    std::vector<int> choice(static_cast<std::size_t>(steps), 0);
    for (;;) {
        long i = 0, j = 0;
        bool ok = true;
        acc.clear();
        acc.push_back(at(0, 0));
        for (long s = 0; s < steps; ++s) {
            if (choice[static_cast<std::size_t>(s)] == 0)
                ++i;
            else
                ++j;
            if (i >= rows || j >= cols) {
                ok = false;
                break;
            }
            acc.push_back(at(i, j));
        }
        if (ok && i == rows - 1 && j == cols - 1) visit(acc);
        // Next binary choice vector.
        long s = steps - 1;
        while (s >= 0 && choice[static_cast<std::size_t>(s)] == 1)
            choice[static_cast<std::size_t>(s--)] = 0;
        if (s < 0) break;
        choice[static_cast<std::size_t>(s)] = 1;
    }
}

std::vector<std::int64_t> widen(const std::vector<std::int32_t>& v) {
    return std::vector<std::int64_t>(v.begin(), v.end());
}

}  // namespace

std::int64_t max_sum(const std::vector<std::int64_t>& w, long rows, long cols,
                     PathOrientation o) {
    return dp_max_sum(w, rows, cols, o);
}

double max_sum(const std::vector<double>& w, long rows, long cols, PathOrientation o) {
    return dp_max_sum(w, rows, cols, o);
}

double min_product(const std::vector<double>& w, long rows, long cols,
                   PathOrientation o) {
    std::vector<double> neglog(w.size());
    for (std::size_t k = 0; k < w.size(); ++k) {
        if (!(w[k] > 0.0))
            throw invalid_argument("min-product weights must be positive");
        neglog[k] = -std::log(w[k]);
    }
    return std::exp(-dp_max_sum(neglog, rows, cols, o));
}

std::int64_t lpp_value(const GeomField& f, PathMode mode) {
    if (mode.combine != PathCombine::MaxSum)
        throw invalid_argument("geometric fields use max-sum last passage");
    return max_sum(widen(f.entries), f.rows, f.cols, mode.orientation);
}

double lpp_value(const PowField& f, PathMode mode) {
    if (mode.combine != PathCombine::MinProduct)
        throw invalid_argument("power fields use min-product last passage");
    return min_product(f.entries, f.rows, f.cols, mode.orientation);
}

std::int64_t oracle_max_sum(const std::vector<std::int64_t>& w, long rows, long cols,
                            PathOrientation o) {
    std::int64_t best = std::numeric_limits<std::int64_t>::min();
    enumerate_paths(w, rows, cols, o, [&](const std::vector<std::int64_t>& path) {
        std::int64_t s = 0;
        for (auto v : path) s += v;
        best = std::max(best, s);
    });
    return best;
}

double oracle_min_product(const std::vector<double>& w, long rows, long cols,
                          PathOrientation o) {
    double best = std::numeric_limits<double>::infinity();
    enumerate_paths(w, rows, cols, o, [&](const std::vector<double>& path) {
        double s = 1.0;
        for (auto v : path) s *= v;
        best = std::min(best, s);
    });
    return best;
}

std::int64_t lpp_oracle(const GeomField& f, PathMode mode) {
    if (mode.combine != PathCombine::MaxSum)
        throw invalid_argument("geometric fields use max-sum last passage");
    return oracle_max_sum(widen(f.entries), f.rows, f.cols, mode.orientation);
}

double lpp_oracle(const PowField& f, PathMode mode) {
    if (mode.combine != PathCombine::MinProduct)
        throw invalid_argument("power fields use min-product last passage");
    return oracle_min_product(f.entries, f.rows, f.cols, mode.orientation);
}

}  // namespace lpp
}  // namespace mbl
