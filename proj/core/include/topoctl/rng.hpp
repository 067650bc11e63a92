#pragma once

#include <cstdint>
#include <random>
#include <vector>

namespace topoctl {

// splitmix64; used as the seed-splitting hash so per-run seeds are a pure
// function of (master, axis_index, run_index).
inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

inline std::uint64_t derive_run_seed(std::uint64_t master,
                                     std::uint64_t axis_index,
                                     std::uint64_t run_index) {
    std::uint64_t h = splitmix64(master);
    h = splitmix64(h ^ (axis_index + 1));
    h = splitmix64(h ^ (run_index + 1));
    return h;
}

// mt19937_64 with hand-rolled mappers. std::uniform_*_distribution is not
// pinned by the standard, so results would differ across stdlibs; these
// mappers keep byte-identical outputs everywhere.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : eng_(seed) {}

    std::uint64_t next_u64() { return eng_(); }

    // uniform in [0, 1) with 53-bit resolution
    double uniform01() { return double(eng_() >> 11) * 0x1.0p-53; }

    double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

    // uniform integer in [lo, hi] via rejection sampling
    std::int64_t uniform_int(std::int64_t lo, std::int64_t hi) {
        const std::uint64_t span = std::uint64_t(hi - lo) + 1;
        const std::uint64_t limit = (~std::uint64_t(0) / span) * span;
        std::uint64_t x;
        do {
            x = eng_();
        } while (x >= limit);
        return lo + std::int64_t(x % span);
    }

    // n distinct integers from [lo, hi], partial Fisher-Yates; order is part
    // of the deterministic contract
    std::vector<int> distinct_ints(int lo, int hi, int n) {
        std::vector<int> pool;
        pool.reserve(hi - lo + 1);
        for (int v = lo; v <= hi; ++v) pool.push_back(v);
        std::vector<int> out;
        out.reserve(n);
        for (int i = 0; i < n; ++i) {
            const auto j = std::size_t(uniform_int(i, std::int64_t(pool.size()) - 1));
            std::swap(pool[i], pool[j]);
            out.push_back(pool[i]);
        }
        return out;
    }

private:
    std::mt19937_64 eng_;
};

}  // namespace topoctl
