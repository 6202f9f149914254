#ifndef MBL_FIELDS_HPP
#define MBL_FIELDS_HPP

#include <cstdint>
#include <limits>
#include <vector>

#include "mbl/rng.hpp"

namespace mbl {

inline constexpr long kInfiniteExtent = -1;

// Model parameters (a, q, eta, theta, alpha, M, N) with the derived pair
// (Q, Qt) = (q^eta, q^theta). M = N = kInfiniteExtent means the infinite
// quadrant. Validated at construction:
//   0 <= a, q <= 1, not both 1; eta, theta, alpha >= 0; M <= N when finite.
struct ModelParams {
    double a = 0.0;
    double q = 0.0;
    double eta = 1.0;
    double theta = 1.0;
    double alpha = 0.0;
    long M = kInfiniteExtent;
    long N = kInfiniteExtent;
    double Q = 0.0;   // q^eta
    double Qt = 0.0;  // q^theta

    ModelParams() = default;
    ModelParams(double a_, double q_, double eta_, double theta_, double alpha_,
                long M_, long N_);

    bool infinite_rows() const { return M == kInfiniteExtent; }
    bool infinite_cols() const { return N == kInfiniteExtent; }
    bool infinite() const { return infinite_rows() || infinite_cols(); }
};

// Sampled field of geometric weights. For an infinite quadrant only the
// triangular region {u_ij >= u_min} is drawn; the union bound puts total
// variation distance to the true infinite field below tv_tol. Entries are
// stored in a rows x cols rectangle, zero outside the triangle.
struct GeomField {
    long rows = 0;
    long cols = 0;
    std::vector<long> row_len;        // sites drawn in row i (1-based i)
    std::vector<std::int32_t> entries;  // row-major rectangle
    double tv_tol = 0.0;
    bool truncated = false;

    std::int32_t operator()(long i, long j) const {  // 1-based
        return entries[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
    }
};

// Field of power-law weights, all entries in (0, 1), size M x N.
struct PowField {
    long rows = 0;
    long cols = 0;
    std::vector<double> entries;

    double operator()(long i, long j) const {  // 1-based
        return entries[static_cast<std::size_t>(i - 1) * cols + (j - 1)];
    }
};

namespace fields {

// Geometric success parameter u_ij = a Q^{i-1/2} Qt^{j-1/2}.
double geom_param(long i, long j, const ModelParams& p);

// Power exponent beta_ij = alpha + eta (i-1/2) + theta (j-1/2).
double pow_param(long i, long j, const ModelParams& p);

// One Geom(u) draw at a keyed site: P(X=k) = (1-u) u^k, via inverse CDF.
std::int64_t geom_draw(double u, const RandomSeed& seed, std::uint64_t key);

// One Pow(beta) draw: U^(1/beta) with U uniform on (0,1).
double pow_draw(double beta, const RandomSeed& seed, std::uint64_t key);

// Truncation plan for the (possibly infinite) geometric field: row count,
// per-row column counts, and the threshold actually used.
struct GeomSupport {
    long rows = 0;
    long cols = 0;              // longest row
    std::vector<long> row_len;  // row_len[i-1] sites in row i
    double u_min = 0.0;
    bool truncated = false;
};

// Chooses the triangular support {u_ij >= u_min} so that the first-moment
// sum over all discarded sites is < tv_tol (no-op for finite M, N).
GeomSupport geom_support(const ModelParams& p, double tv_tol);

// Value of the geometric field at one site, as a pure function of
// (params, seed, site). Sites outside the support are identically 0.
inline std::int64_t geom_site(const ModelParams& p, const RandomSeed& seed, long i,
                              long j) {
    return geom_draw(geom_param(i, j, p), seed,
                     rng::site_key(static_cast<std::uint32_t>(i),
                                   static_cast<std::uint32_t>(j)));
}

inline double pow_site(const ModelParams& p, const RandomSeed& seed, long i, long j) {
    return pow_draw(pow_param(i, j, p), seed,
                    rng::site_key(static_cast<std::uint32_t>(i),
                                  static_cast<std::uint32_t>(j)));
}

GeomField sample_geom_field(const ModelParams& p, const RandomSeed& seed,
                            double tv_tol = 1e-9);

PowField sample_pow_field(const ModelParams& p, const RandomSeed& seed);

}  // namespace fields
}  // namespace mbl

#endif
