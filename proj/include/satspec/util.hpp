#pragma once

#include <charconv>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace satspec {

/// Shortest round-trip decimal representation (std::to_chars). Used for all
/// CSV/JSON-adjacent text output so files are byte-stable across runs.
inline std::string fmt_double(double v) {
    char buf[32];
    auto res = std::to_chars(buf, buf + sizeof(buf), v);
    return std::string(buf, res.ptr);
}

/// FNV-1a over a byte string; used to stamp configs into output records.
inline std::uint64_t fnv1a64(std::string_view bytes) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (unsigned char c : bytes) {
        h ^= c;
        h *= 0x100000001b3ULL;
    }
    return h;
}

/// Runs fn(i) for i in [0, count) on `jobs` threads (0 = hardware count).
/// Tasks are claimed from a shared counter; callers that need deterministic
/// output must write results indexed by i.
void parallel_for(std::size_t count, int jobs, const std::function<void(std::size_t)>& fn);

/// Median of an unsorted copy; midpoint convention for even sizes.
double median(std::vector<double> values);

double mean(const std::vector<double>& values);

/// Standard error of the mean (sample stddev / sqrt(n)); 0 for n < 2.
double stderr_of_mean(const std::vector<double>& values);

} // namespace satspec
