#pragma once

#include <algorithm>
#include <chrono>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "band_matrix.hpp"
#include "counting.hpp"
#include "inverse_core.hpp"

namespace hepta {

/// Scalar operations spent in each pipeline stage.
struct StageCounts {
    std::uint64_t seeds = 0;
    std::uint64_t dets = 0;
    std::uint64_t last_columns = 0;
    std::uint64_t back_substitution = 0;
    std::uint64_t determinant = 0;

    std::uint64_t linear_part() const noexcept { return seeds + dets + last_columns + determinant; }
    std::uint64_t total() const noexcept { return linear_part() + back_substitution; }
};

/// Runs invert() stage by stage over Counted<S>, tallying each stage.
template <Scalar S>
StageCounts count_stages(const HeptaBands<S>& h) {
    const HeptaBands<Counted<S>> hc = map_bands<Counted<S>>(h, [](const S& x) { return Counted<S>(x); });
    const PaddedBands<Counted<S>> p = pad(hc);
    StageCounts c;
    {
        OpCountScope scope;
        const auto seeds = seed_sequences(p);
        c.seeds = scope.count();
        OpCountScope s2;
        const auto dets = det_sequences(seeds);
        c.dets = s2.count();
        OpCountScope s3;
        const auto last = last_three_columns(dets);
        c.last_columns = s3.count();
        OpCountScope s4;
        const auto inv = back_substitute(p, last);
        c.back_substitution = s4.count();
        OpCountScope s5;
        (void)determinant(p, dets);
        c.determinant = s5.count();
    }
    return c;
}

/// Median wall time of `reps` calls to fn(), in seconds.
template <class F>
double median_seconds(F&& fn, int reps) {
    std::vector<double> t;
    t.reserve(static_cast<std::size_t>(std::max(reps, 1)));
    for (int r = 0; r < std::max(reps, 1); ++r) {
        const auto start = std::chrono::steady_clock::now();
        fn();
        const auto stop = std::chrono::steady_clock::now();
        t.push_back(std::chrono::duration<double>(stop - start).count());
    }
    std::sort(t.begin(), t.end());
    const std::size_t m = t.size() / 2;
    return t.size() % 2 == 1 ? t[m] : 0.5 * (t[m - 1] + t[m]);
}

}  // namespace hepta
