#include "mbl/fields.hpp"

#include <cmath>
#include <string>

#include "mbl/errors.hpp"

namespace mbl {

ModelParams::ModelParams(double a_, double q_, double eta_, double theta_,
                         double alpha_, long M_, long N_)
    : a(a_), q(q_), eta(eta_), theta(theta_), alpha(alpha_), M(M_), N(N_) {
    if (!(a >= 0.0 && a <= 1.0)) throw invalid_argument("a must lie in [0,1]");
    if (!(q >= 0.0 && q <= 1.0)) throw invalid_argument("q must lie in [0,1]");
    if (a == 1.0 && q == 1.0) throw invalid_argument("a and q may not both equal 1");
    if (!(eta >= 0.0) || !(theta >= 0.0) || !(alpha >= 0.0))
        throw invalid_argument("eta, theta, alpha must be >= 0");
    if (M != kInfiniteExtent && M <= 0) throw invalid_argument("M must be positive");
    if (N != kInfiniteExtent && N <= 0) throw invalid_argument("N must be positive");
    if (M != kInfiniteExtent && N != kInfiniteExtent && M > N)
        throw invalid_argument("M <= N required when both finite");
    if (M != kInfiniteExtent && N == kInfiniteExtent) {
        // fine: M finite, N infinite
    } else if (M == kInfiniteExtent && N != kInfiniteExtent) {
        throw invalid_argument("M = infinity with finite N violates M <= N");
    }
    Q = std::pow(q, eta);
    Qt = std::pow(q, theta);
}

namespace fields {

double geom_param(long i, long j, const ModelParams& p) {
    if (i < 1 || j < 1) throw invalid_argument("site indices are 1-based");
    const double u = p.a * std::pow(p.Q, static_cast<double>(i) - 0.5) *
                     std::pow(p.Qt, static_cast<double>(j) - 0.5);
    if (u >= 1.0)
        throw invalid_argument("geometric parameter at site (" + std::to_string(i) +
                               "," + std::to_string(j) + ") is not below 1");
    return u;
}

double pow_param(long i, long j, const ModelParams& p) {
    if (i < 1 || j < 1) throw invalid_argument("site indices are 1-based");
    const double beta = p.alpha + p.eta * (static_cast<double>(i) - 0.5) +
                        p.theta * (static_cast<double>(j) - 0.5);
    if (!(beta > 0.0))
        throw invalid_argument("power exponent must be positive; alpha, eta, theta "
                               "may not all be zero");
    return beta;
}

std::int64_t geom_draw(double u, const RandomSeed& seed, std::uint64_t key) {
    if (u <= 0.0) return 0;
    const double unit = rng::keyed_unit(seed, key);
    // Inverse CDF: k = floor(log(1-U) / log u). Exact and rejection-free.
    const double k = std::floor(std::log1p(-unit) / std::log(u));
    return static_cast<std::int64_t>(k);
}

double pow_draw(double beta, const RandomSeed& seed, std::uint64_t key) {
    const double unit = rng::keyed_unit(seed, key);
    return std::exp(std::log(unit) / beta);
}

namespace {

// Sum of u_ij over all sites outside the support {u_ij >= u_min},
// intersected with the (possibly infinite) M x N extent.
double discarded_mass(const ModelParams& p, double u_min) {
    const double lq = std::log(p.q);
    double total = 0.0;
    long i = 1;
    for (;; ++i) {
        if (!p.infinite_rows() && i > p.M) break;
        const double row_head = p.a * std::pow(p.Q, i - 0.5) * std::pow(p.Qt, 0.5);
        // Largest j with u_ij >= u_min.
        long jmax = 0;
        if (row_head >= u_min) {
            if (p.q == 0.0 || p.theta == 0.0) {
                jmax = p.infinite_cols() ? -1 : p.N;  // -1: whole infinite row
            } else {
                const double t = std::log(u_min / row_head) / (p.theta * lq);
                jmax = 1 + static_cast<long>(std::floor(t));
                if (!p.infinite_cols() && jmax > p.N) jmax = p.N;
            }
        }
        if (jmax == -1) continue;  // nothing discarded in this row
        // Tail of row i beyond jmax.
        if (p.infinite_cols()) {
            const double first = p.a * std::pow(p.Q, i - 0.5) *
                                 std::pow(p.Qt, static_cast<double>(jmax) + 0.5);
            total += first / (1.0 - p.Qt);
        } else if (jmax < p.N) {
            const double first = p.a * std::pow(p.Q, i - 0.5) *
                                 std::pow(p.Qt, static_cast<double>(jmax) + 0.5);
            total += first * (1.0 - std::pow(p.Qt, p.N - jmax)) / (1.0 - p.Qt);
        }
        if (jmax == 0 && p.infinite_rows()) {
            // All later rows are smaller still: add their full mass and stop.
            const double head = p.a * std::pow(p.Q, i + 0.5) * std::pow(p.Qt, 0.5);
            const double col_sum = p.infinite_cols()
                                       ? head / (1.0 - p.Qt)
                                       : head * (1.0 - std::pow(p.Qt, p.N)) / (1.0 - p.Qt);
            total += col_sum / (1.0 - p.Q);
            break;
        }
        if (jmax == 0 && !p.infinite_rows()) {
            // Remaining finite rows, all entirely discarded.
            for (long r = i + 1; r <= p.M; ++r) {
                const double head = p.a * std::pow(p.Q, r - 0.5) * std::pow(p.Qt, 0.5);
                total += p.infinite_cols()
                             ? head / (1.0 - p.Qt)
                             : head * (1.0 - std::pow(p.Qt, p.N)) / (1.0 - p.Qt);
            }
            break;
        }
    }
    return total;
}

}  // namespace

GeomSupport geom_support(const ModelParams& p, double tv_tol) {
    if (!(tv_tol > 0.0)) throw invalid_argument("tv_tol must be positive");
    GeomSupport s;
    s.truncated = p.infinite();
    if (!p.infinite()) {
        s.rows = p.M;
        s.cols = p.N;
        s.row_len.assign(static_cast<std::size_t>(p.M), p.N);
        s.u_min = 0.0;
        return s;
    }
    if (!(p.q < 1.0) || !(p.eta > 0.0) || !(p.theta > 0.0) ||
        !(geom_param(1, 1, p) < 1.0))
        throw numeric_error("tail sum of the infinite field does not converge");
    if (p.a == 0.0) {
        s.rows = s.cols = 1;
        s.row_len.assign(1, 1);
        s.u_min = 0.0;
        return s;
    }
    // Shrink u_min geometrically until the union bound clears tv_tol.
    double u_min = geom_param(1, 1, p);
    while (discarded_mass(p, u_min) >= tv_tol) {
        u_min *= 0.25;
        if (u_min < 1e-300)
            throw numeric_error("failed to meet tv_tol while truncating the field");
    }
    s.u_min = u_min;
    const double lq = std::log(p.q);
    for (long i = 1;; ++i) {
        if (!p.infinite_rows() && i > p.M) break;
        const double row_head = p.a * std::pow(p.Q, i - 0.5) * std::pow(p.Qt, 0.5);
        if (row_head < u_min) break;
        long jmax;
        const double t = std::log(u_min / row_head) / (p.theta * lq);
        jmax = 1 + static_cast<long>(std::floor(t));
        if (!p.infinite_cols() && jmax > p.N) jmax = p.N;
        s.row_len.push_back(jmax);
        if (jmax > s.cols) s.cols = jmax;
    }
    s.rows = static_cast<long>(s.row_len.size());
    if (s.rows == 0) {
        s.rows = s.cols = 1;
        s.row_len.assign(1, 1);
    }
    return s;
}

GeomField sample_geom_field(const ModelParams& p, const RandomSeed& seed,
                            double tv_tol) {
    const GeomSupport sup = geom_support(p, tv_tol);
    GeomField f;
    f.rows = sup.rows;
    f.cols = sup.cols;
    f.row_len = sup.row_len;
    f.tv_tol = tv_tol;
    f.truncated = sup.truncated;
    f.entries.assign(static_cast<std::size_t>(f.rows) * f.cols, 0);
    for (long i = 1; i <= f.rows; ++i) {
        const long len = sup.row_len[static_cast<std::size_t>(i - 1)];
        for (long j = 1; j <= len; ++j) {
            f.entries[static_cast<std::size_t>(i - 1) * f.cols + (j - 1)] =
                static_cast<std::int32_t>(geom_site(p, seed, i, j));
        }
    }
    return f;
}

PowField sample_pow_field(const ModelParams& p, const RandomSeed& seed) {
    if (p.infinite())
        throw invalid_argument("power fields require finite M and N");
    PowField f;
    f.rows = p.M;
    f.cols = p.N;
    f.entries.resize(static_cast<std::size_t>(p.M) * p.N);
    for (long i = 1; i <= p.M; ++i)
        for (long j = 1; j <= p.N; ++j)
            f.entries[static_cast<std::size_t>(i - 1) * f.cols + (j - 1)] =
                pow_site(p, seed, i, j);
    return f;
}

}  // namespace fields
}  // namespace mbl
