#include "matchk/approx.hpp"

#include <omp.h>

#include <algorithm>
#include <bit>
#include <cmath>
#include <functional>
#include <string>
#include <vector>

#include "matchk/reduction.hpp"

namespace matchk {

namespace detail {

std::uint64_t SplitMix64::below(std::uint64_t n) {
    // rejection keeps the draw exactly uniform
    std::uint64_t threshold = (0 - n) % n;  // 2^64 mod n
    for (;;) {
        std::uint64_t r = next();
        if (r >= threshold) return r % n;
    }
}

SplitMix64 stream_for_batch(std::uint64_t seed, std::uint64_t batch_index) {
    SplitMix64 mixer{seed ^ (0xA24BAED4963EE407ULL * (batch_index + 1))};
    return SplitMix64{mixer.next()};
}

}  // namespace detail

namespace {

using detail::SplitMix64;

// Draw an index proportional to integer weights; total > 0.
std::size_t weighted_pick(SplitMix64& rng, const std::vector<Integer>& weights,
                          const Integer& total) {
    // uniform integer in [0, total) from 64-bit words, by rejection
    std::size_t bits = mpz_sizeinbase(total.get_mpz_t(), 2);
    std::size_t words = (bits + 63) / 64;
    Integer r;
    for (;;) {
        r = 0;
        for (std::size_t w = 0; w < words; ++w) {
            mpz_mul_2exp(r.get_mpz_t(), r.get_mpz_t(), 64);
            r += Integer(static_cast<unsigned long>(rng.next() >> 32)) * 0x100000000UL +
                 static_cast<unsigned long>(rng.next() & 0xFFFFFFFFUL);
        }
        mpz_fdiv_r_2exp(r.get_mpz_t(), r.get_mpz_t(), bits);
        if (r < total) break;
    }
    Integer cum(0);
    for (std::size_t i = 0; i < weights.size(); ++i) {
        cum += weights[i];
        if (r < cum) return i;
    }
    return weights.size() - 1;  // unreachable
}

// Runs the per-draw sampler over batches with independent streams and a
// fixed merge order, so the report is reproducible for a given seed
// regardless of thread count.
EstimateReport run_batches(std::uint64_t samples, std::uint64_t seed,
                           const SamplerOptions& opts,
                           const std::function<double(SplitMix64&)>& draw) {
    if (samples == 0 && !opts.target) throw ArgumentError("sample count must be >= 1");
    std::uint64_t per_batch, batches;
    if (opts.target) {
        per_batch = static_cast<std::uint64_t>(
            std::ceil(72.0 / (opts.target->eps * opts.target->eps)));
        batches = 2 * static_cast<std::uint64_t>(std::ceil(std::log(1.0 / opts.target->delta))) + 1;
        samples = per_batch * batches;
    } else {
        per_batch = std::min<std::uint64_t>(opts.batch_size, samples);
        if (per_batch == 0) per_batch = 1;
        batches = (samples + per_batch - 1) / per_batch;
    }
    std::vector<double> batch_sum(batches, 0.0), batch_sumsq(batches, 0.0);
    std::vector<std::uint64_t> batch_count(batches, 0);
#pragma omp parallel for schedule(dynamic)
    for (std::int64_t c = 0; c < static_cast<std::int64_t>(batches); ++c) {
        std::uint64_t first = per_batch * c;
        std::uint64_t last = std::min<std::uint64_t>(first + per_batch, samples);
        if (opts.target) last = first + per_batch;
        SplitMix64 rng = detail::stream_for_batch(seed, static_cast<std::uint64_t>(c));
        double s = 0.0, s2 = 0.0;
        for (std::uint64_t i = first; i < last; ++i) {
            double v = draw(rng);
            s += v;
            s2 += v * v;
        }
        batch_sum[c] = s;
        batch_sumsq[c] = s2;
        batch_count[c] = last - first;
    }
    double sum = 0.0, sumsq = 0.0;
    std::uint64_t n = 0;
    for (std::size_t c = 0; c < batches; ++c) {
        sum += batch_sum[c];
        sumsq += batch_sumsq[c];
        n += batch_count[c];
    }
    EstimateReport report;
    report.samples = n;
    report.seed = seed;
    report.target = opts.target;
    double mean = sum / static_cast<double>(n);
    if (opts.target) {
        // median of batch means
        std::vector<double> means(batches);
        for (std::size_t c = 0; c < batches; ++c)
            means[c] = batch_sum[c] / static_cast<double>(batch_count[c]);
        std::sort(means.begin(), means.end());
        report.estimate = means[batches / 2];
    } else {
        report.estimate = mean;
    }
    if (n > 1) {
        double var = (sumsq - static_cast<double>(n) * mean * mean) / static_cast<double>(n - 1);
        report.standard_error = std::sqrt(std::max(0.0, var) / static_cast<double>(n));
    }
    return report;
}

struct ScaledEntries {
    std::vector<double> value;     // entry as double, row-major
    std::vector<Integer> integer;  // entry * common denominator
    double total_scale = 1.0;      // unused; denominators cancel in totals
};

ScaledEntries scale_entries(const std::vector<Rational>& entries) {
    ScaledEntries s;
    Integer denom(1);
    for (const auto& q : entries) mpz_lcm(denom.get_mpz_t(), denom.get_mpz_t(),
                                          q.get_den().get_mpz_t());
    for (const auto& q : entries) {
        s.value.push_back(q.get_d());
        Rational scaled = q * Rational(denom);
        s.integer.push_back(scaled.get_num());
    }
    s.total_scale = denom.get_d();
    return s;
}

}  // namespace

EstimateReport estimate_permanent(const NonnegMatrix& b, std::uint64_t samples,
                                  std::uint64_t seed, const SamplerOptions& opts) {
    if (!b.square()) throw DimensionError("estimate_permanent requires a square matrix");
    const std::size_t n = b.rows();
    if (n > 64) throw ResourceLimitError("sampler supports matrices up to 64x64");
    ScaledEntries sc = scale_entries(b.entries());
    auto draw = [&, n](SplitMix64& rng) -> double {
        std::uint64_t used = 0;
        double value = 1.0;
        std::vector<std::size_t> adm;
        std::vector<Integer> wts;
        for (std::size_t i = 0; i < n; ++i) {
            adm.clear();
            for (std::size_t j = 0; j < n; ++j)
                if (!(used & (std::uint64_t{1} << j)) && sc.value[i * n + j] > 0.0)
                    adm.push_back(j);
            if (adm.empty()) return 0.0;
            std::size_t pick;
            if (opts.weight_proportional) {
                wts.clear();
                Integer total(0);
                for (std::size_t j : adm) {
                    wts.push_back(sc.integer[i * n + j]);
                    total += wts.back();
                }
                pick = weighted_pick(rng, wts, total);
                value *= total.get_d() / sc.total_scale;  // importance weight = row total
            } else {
                pick = static_cast<std::size_t>(rng.below(adm.size()));
                value *= sc.value[i * n + adm[pick]] * static_cast<double>(adm.size());
            }
            used |= std::uint64_t{1} << adm[pick];
        }
        return value;
    };
    return run_batches(samples, seed, opts, draw);
}

EstimateReport estimate_perm_k(const NonnegMatrix& b, std::size_t k, std::uint64_t samples,
                               std::uint64_t seed, const SamplerOptions& opts) {
    NonnegMatrix bk = build_Bk(b, k);
    EstimateReport r = estimate_permanent(bk, samples, seed, opts);
    Integer divisor_z = factorial(b.rows() - k) * factorial(b.cols() - k);
    double divisor = divisor_z.get_d();
    r.estimate /= divisor;
    r.standard_error /= divisor;
    return r;
}

EstimateReport estimate_hafnian(const SymZeroDiagMatrix& a, std::uint64_t samples,
                                std::uint64_t seed, const SamplerOptions& opts) {
    const std::size_t n = a.order();
    if (n % 2 != 0) throw ParityError("estimate_hafnian requires even order");
    if (n > 64) throw ResourceLimitError("sampler supports orders up to 64");
    std::vector<Rational> full;
    full.reserve(n * n);
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = 0; j < n; ++j) full.push_back(a.at(i, j));
    ScaledEntries sc = scale_entries(full);
    auto draw = [&, n](SplitMix64& rng) -> double {
        std::uint64_t unmatched = (n == 64) ? ~std::uint64_t{0} : (std::uint64_t{1} << n) - 1;
        double value = 1.0;
        std::vector<std::size_t> adm;
        std::vector<Integer> wts;
        while (unmatched != 0) {
            std::size_t u = static_cast<std::size_t>(std::countr_zero(unmatched));
            std::uint64_t rest = unmatched & (unmatched - 1);
            adm.clear();
            for (std::uint64_t r = rest; r != 0; r &= r - 1) {
                std::size_t v = static_cast<std::size_t>(std::countr_zero(r));
                if (sc.value[u * n + v] > 0.0) adm.push_back(v);
            }
            if (adm.empty()) return 0.0;
            std::size_t pick;
            if (opts.weight_proportional) {
                wts.clear();
                Integer total(0);
                for (std::size_t v : adm) {
                    wts.push_back(sc.integer[u * n + v]);
                    total += wts.back();
                }
                pick = weighted_pick(rng, wts, total);
                value *= total.get_d() / sc.total_scale;
            } else {
                pick = static_cast<std::size_t>(rng.below(adm.size()));
                value *= sc.value[u * n + adm[pick]] * static_cast<double>(adm.size());
            }
            unmatched = rest & ~(std::uint64_t{1} << adm[pick]);
        }
        return value;
    };
    return run_batches(samples, seed, opts, draw);
}

EstimateReport estimate_haf_k(const SymZeroDiagMatrix& a, std::size_t k, std::uint64_t samples,
                              std::uint64_t seed, const SamplerOptions& opts) {
    SymZeroDiagMatrix ak = build_Ak(a, k);
    EstimateReport r = estimate_hafnian(ak, samples, seed, opts);
    double divisor = factorial(a.order() - 2 * k).get_d();
    r.estimate /= divisor;
    r.standard_error /= divisor;
    return r;
}

EstimateReport estimate_matching_poly_eval(const NonnegMatrix& b, double x,
                                           std::uint64_t samples, std::uint64_t seed,
                                           const SamplerOptions& opts) {
    if (x < 0.0) throw ArgumentError("matching polynomial estimation requires x >= 0");
    if (samples == 0 && !opts.target) throw ArgumentError("sample count must be >= 1");
    const std::size_t top = std::min(b.rows(), b.cols());
    EstimateReport report;
    report.estimate = 1.0;  // k = 0 term is exact
    report.seed = seed;
    report.target = opts.target;
    if (top == 0) return report;
    std::uint64_t per_coeff = std::max<std::uint64_t>(1, samples / top);
    double var = 0.0;
    for (std::size_t k = 1; k <= top; ++k) {
        std::uint64_t sub_seed =
            SplitMix64{seed ^ (0x9E3779B97F4A7C15ULL * static_cast<std::uint64_t>(k))}.next();
        EstimateReport rk = estimate_perm_k(b, k, per_coeff, sub_seed, opts);
        double xk = std::pow(x, static_cast<double>(k));
        report.estimate += xk * rk.estimate;
        var += (xk * rk.standard_error) * (xk * rk.standard_error);
        report.samples += rk.samples;
    }
    report.standard_error = std::sqrt(var);
    return report;
}

namespace {

Rational perm_expectation_rec(const NonnegMatrix& b, std::size_t row, std::uint64_t used,
                              bool weight_proportional) {
    const std::size_t n = b.rows();
    if (row == n) return Rational(1);
    std::vector<std::size_t> adm;
    for (std::size_t j = 0; j < n; ++j)
        if (!(used & (std::uint64_t{1} << j)) && sgn(b.at(row, j)) > 0) adm.push_back(j);
    if (adm.empty()) return Rational(0);  // stuck path: estimate 0
    Rational expectation(0);
    if (weight_proportional) {
        Rational total(0);
        for (std::size_t j : adm) total += b.at(row, j);
        for (std::size_t j : adm) {
            Rational prob = b.at(row, j) / total;
            Rational factor = total;  // importance weight for this choice
            expectation += prob * factor *
                           perm_expectation_rec(b, row + 1, used | (std::uint64_t{1} << j),
                                                weight_proportional);
        }
    } else {
        Rational prob(1, static_cast<unsigned long>(adm.size()));
        for (std::size_t j : adm) {
            Rational factor = b.at(row, j) * Rational(static_cast<long>(adm.size()));
            expectation += prob * factor *
                           perm_expectation_rec(b, row + 1, used | (std::uint64_t{1} << j),
                                                weight_proportional);
        }
    }
    return expectation;
}

Rational haf_expectation_rec(const SymZeroDiagMatrix& a, std::uint64_t unmatched,
                             bool weight_proportional) {
    if (unmatched == 0) return Rational(1);
    std::size_t u = 0;
    while (!(unmatched & (std::uint64_t{1} << u))) ++u;
    std::uint64_t rest = unmatched & (unmatched - 1);
    std::vector<std::size_t> adm;
    for (std::uint64_t r = rest; r != 0; r &= r - 1) {
        std::size_t v = 0;
        std::uint64_t low = r & (~r + 1);
        while (!(low & (std::uint64_t{1} << v))) ++v;
        if (sgn(a.at(u, v)) > 0) adm.push_back(v);
    }
    if (adm.empty()) return Rational(0);
    Rational expectation(0);
    if (weight_proportional) {
        Rational total(0);
        for (std::size_t v : adm) total += a.at(u, v);
        for (std::size_t v : adm) {
            Rational prob = a.at(u, v) / total;
            expectation += prob * total *
                           haf_expectation_rec(a, rest & ~(std::uint64_t{1} << v),
                                               weight_proportional);
        }
    } else {
        Rational prob(1, static_cast<unsigned long>(adm.size()));
        for (std::size_t v : adm) {
            Rational factor = a.at(u, v) * Rational(static_cast<long>(adm.size()));
            expectation += prob * factor *
                           haf_expectation_rec(a, rest & ~(std::uint64_t{1} << v),
                                               weight_proportional);
        }
    }
    return expectation;
}

}  // namespace

Rational permanent_sampler_expectation(const NonnegMatrix& b, bool weight_proportional) {
    if (!b.square()) throw DimensionError("sampler expectation requires a square matrix");
    if (b.rows() > 16) throw ResourceLimitError("sampler expectation is exhaustive; n <= 16");
    return perm_expectation_rec(b, 0, 0, weight_proportional);
}

Rational hafnian_sampler_expectation(const SymZeroDiagMatrix& a, bool weight_proportional) {
    if (a.order() % 2 != 0) throw ParityError("sampler expectation requires even order");
    if (a.order() > 16) throw ResourceLimitError("sampler expectation is exhaustive; order <= 16");
    if (a.order() == 0) return Rational(1);
    std::uint64_t mask = (std::uint64_t{1} << a.order()) - 1;
    return haf_expectation_rec(a, mask, weight_proportional);
}

}  // namespace matchk
