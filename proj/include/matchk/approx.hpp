#pragma once

#include <cstdint>
#include <optional>

#include "matchk/matrix.hpp"

namespace matchk {

struct EstimateTarget {
    double eps = 0.1;    // relative error
    double delta = 0.1;  // failure probability
};

struct EstimateReport {
    double estimate = 0.0;
    double standard_error = 0.0;  // sample stddev / sqrt(samples)
    std::uint64_t samples = 0;
    std::uint64_t seed = 0;
    std::optional<EstimateTarget> target;
};

struct SamplerOptions {
    // Uniform proposal over admissible partners by default; the
    // weight-proportional variant samples partner j with probability
    // w_j / sum(w) and corrects by the total weight instead of the count.
    bool weight_proportional = false;
    // When set, overrides the sample count with a median-of-means schedule:
    // ceil(72/eps^2) samples per batch, 2*ceil(ln(1/delta))+1 batches.
    std::optional<EstimateTarget> target;
    std::uint64_t batch_size = 4096;
};

// Unbiased sequential importance sampling for the permanent: row by row,
// pick an unused column with positive entry; sample value is the product
// of picked entries times the correction factors, 0 when stuck.
// Deterministic for a fixed (seed, samples): batches derive independent
// streams from (seed, batch index) and merge in batch order.
EstimateReport estimate_permanent(const NonnegMatrix& b, std::uint64_t samples,
                                  std::uint64_t seed, const SamplerOptions& opts = {});

// Eq.-1 route: sample the permanent of B_k and divide the estimate and its
// error bar by (m-k)!(n-k)!.
EstimateReport estimate_perm_k(const NonnegMatrix& b, std::size_t k, std::uint64_t samples,
                               std::uint64_t seed, const SamplerOptions& opts = {});

// Sequential pairing sampler for the hafnian: repeatedly match the lowest
// unmatched vertex to an admissible partner.
EstimateReport estimate_hafnian(const SymZeroDiagMatrix& a, std::uint64_t samples,
                                std::uint64_t seed, const SamplerOptions& opts = {});

// Eq.-2 route: hafnian of A_k divided by (m-2k)!.
EstimateReport estimate_haf_k(const SymZeroDiagMatrix& a, std::size_t k, std::uint64_t samples,
                              std::uint64_t seed, const SamplerOptions& opts = {});

// Pointwise matching-polynomial estimate: 1 + sum_k x^k * estimate of
// perm_k, with the sample budget split across coefficients. x >= 0.
EstimateReport estimate_matching_poly_eval(const NonnegMatrix& b, double x,
                                           std::uint64_t samples, std::uint64_t seed,
                                           const SamplerOptions& opts = {});

// Exhaustive expectation of a single sampler draw, computed over all
// sampler paths in exact rational arithmetic (probability of each path
// times its estimate). Must equal the exact permanent / hafnian; used to
// audit unbiasedness.
Rational permanent_sampler_expectation(const NonnegMatrix& b,
                                       bool weight_proportional = false);
Rational hafnian_sampler_expectation(const SymZeroDiagMatrix& a,
                                     bool weight_proportional = false);

namespace detail {

// Stable seed->stream mapping (splitmix64); part of the reproducibility
// contract, do not change across releases.
struct SplitMix64 {
    std::uint64_t state;
    std::uint64_t next() {
        state += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // unbiased bounded draw by rejection
    std::uint64_t below(std::uint64_t n);
};

SplitMix64 stream_for_batch(std::uint64_t seed, std::uint64_t batch_index);

}  // namespace detail

}  // namespace matchk
