// Times the OpenMP Gray-code Ryser kernel against the serial reference and
// verifies that both produce the same exact value.

#include <omp.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>

#include "matchk/exact.hpp"

using namespace matchk;

namespace {

NonnegMatrix dense_matrix(std::size_t n, std::uint64_t seed) {
    std::uint64_t s = seed;
    auto next = [&] {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    };
    std::vector<Rational> e;
    e.reserve(n * n);
    for (std::size_t i = 0; i < n * n; ++i)
        e.push_back(Rational(static_cast<long>(1 + next() % 9)));
    return NonnegMatrix(n, n, std::move(e));
}

double seconds_since(std::chrono::steady_clock::time_point t0) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

}  // namespace

int main(int argc, char** argv) {
    std::size_t max_n = argc > 1 ? static_cast<std::size_t>(std::atoi(argv[1])) : 22;
    std::printf("threads: %d\n", omp_get_max_threads());
    std::printf("%4s %12s %12s %10s %s\n", "n", "serial (s)", "parallel (s)", "speedup",
                "match");
    for (std::size_t n = 14; n <= max_n; n += 2) {
        auto b = dense_matrix(n, 0xC0FFEE + n);
        auto t0 = std::chrono::steady_clock::now();
        Rational serial = permanent_serial(b);
        double ts = seconds_since(t0);
        t0 = std::chrono::steady_clock::now();
        Rational parallel = permanent(b);
        double tp = seconds_since(t0);
        std::printf("%4zu %12.3f %12.3f %9.2fx %s\n", n, ts, tp, ts / tp,
                    serial == parallel ? "yes" : "NO");
        if (serial != parallel) return 1;
    }
    return 0;
}
