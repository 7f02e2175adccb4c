#pragma once

#include <chrono>
#include <future>
#include <string>
#include <thread>
#include <vector>

#include "ctab/verify.hpp"

namespace ctab {

// All compositions of m, ordered by their gap mask; 2^(m-1) of them.
[[nodiscard]] inline std::vector<Composition> compositions_of(int m) {
    if (m < 1) throw std::invalid_argument("compositions_of: m must be positive");
    if (m > 14) throw std::invalid_argument("compositions_of: m capped at 14");
    std::vector<Composition> out;
    const std::uint32_t masks = std::uint32_t{1} << (m - 1);
    out.reserve(masks);
    for (std::uint32_t mask = 0; mask < masks; ++mask) {
        std::vector<int> parts;
        int run = 1;
        for (int i = 0; i + 1 < m; ++i) {
            if (mask & (std::uint32_t{1} << i)) {
                parts.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        parts.push_back(run);
        out.emplace_back(parts);
    }
    return out;
}

struct SweepOptions {
    int max_n = 8;
    int jobs = 0;  // 0 picks the hardware concurrency
    bool run_rank = false;
    int trials = 3;
    std::uint64_t prime = kDefaultPrime;
    std::uint64_t seed = kDefaultSeed;
};

struct SweepFailure {
    std::vector<int> composition;
    std::string detail;
};

struct SweepOutcome {
    int compositions = 0;
    std::vector<std::pair<int, int>> per_n;  // (n, compositions of n), ascending
    std::vector<SweepFailure> failures;      // in enumeration order
    double wall_ms = 0.0;
    [[nodiscard]] bool passed() const { return failures.empty(); }
};

// Checks every composition with n <= max_n; parallel over compositions,
// results merged back in enumeration order.
[[nodiscard]] inline SweepOutcome run_sweep(const SweepOptions& opts) {
    if (opts.max_n < 1 || opts.max_n > 14) throw std::invalid_argument("run_sweep: max_n must be in [1, 14]");
    const auto start = std::chrono::steady_clock::now();

    SweepOutcome outcome;
    std::vector<Composition> all;
    for (int m = 1; m <= opts.max_n; ++m) {
        auto batch = compositions_of(m);
        outcome.per_n.emplace_back(m, static_cast<int>(batch.size()));
        all.insert(all.end(), batch.begin(), batch.end());
    }
    outcome.compositions = static_cast<int>(all.size());

    VerifyOptions vopts;
    vopts.run_rank = opts.run_rank;
    vopts.trials = opts.trials;
    vopts.prime = opts.prime;
    vopts.seed = opts.seed;

    auto check_range = [&](size_t begin, size_t end) {
        std::vector<std::pair<size_t, std::string>> bad;
        for (size_t i = begin; i < end; ++i) {
            const auto result = run_verification(all[i], vopts);
            if (!result.summary.passed())
                bad.emplace_back(i, result.summary.detail.empty() ? "unspecified failure" : result.summary.detail);
        }
        return bad;
    };

    const unsigned hw = std::thread::hardware_concurrency();
    size_t workers = opts.jobs > 0 ? static_cast<size_t>(opts.jobs) : static_cast<size_t>(hw ? hw : 1);
    workers = std::min(workers, all.size() ? all.size() : size_t{1});

    std::vector<std::pair<size_t, std::string>> bad;
    if (workers <= 1) {
        bad = check_range(0, all.size());
    } else {
        std::vector<std::future<std::vector<std::pair<size_t, std::string>>>> futures;
        const size_t chunk = (all.size() + workers - 1) / workers;
        for (size_t begin = 0; begin < all.size(); begin += chunk)
            futures.push_back(std::async(std::launch::async, check_range, begin,
                                         std::min(begin + chunk, all.size())));
        for (auto& f : futures) {
            auto part = f.get();
            bad.insert(bad.end(), part.begin(), part.end());
        }
        std::sort(bad.begin(), bad.end());
    }
    for (const auto& [index, detail] : bad)
        outcome.failures.push_back(SweepFailure{all[index].parts(), detail});

    outcome.wall_ms =
        std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    return outcome;
}

}  // namespace ctab
