// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <thread>
#include <vector>

#include "csr/rng.hpp"
#include "csr/types.hpp"

namespace csr {

// Runs `count` independent replicates. Replicate k receives its own RNG
// substream derived from (seed, k) and writes its result to slot k, so the
// result vector is identical for any thread count. Aggregation is the
// caller's job and must run in index order.
template <class F>
std::vector<double> run_replicates(Index count, std::uint64_t seed, F&& body,
                                   unsigned threads = 1) {
    std::vector<double> out(static_cast<std::size_t>(count));
    if (threads <= 1) {
        for (Index k = 0; k < count; ++k) {
            Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k));
            out[static_cast<std::size_t>(k)] = body(k, rng);
        }
        return out;
    }
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) {
        pool.emplace_back([&, t] {
            for (Index k = static_cast<Index>(t); k < count;
                 k += static_cast<Index>(threads)) {
                Rng rng = Rng::substream(seed, static_cast<std::uint64_t>(k));
                out[static_cast<std::size_t>(k)] = body(k, rng);
            }
        });
    }
    for (auto& th : pool) th.join();
    return out;
}

// Neumaier compensated accumulation; call result() after the last add.
class CompensatedSum {
public:
    void add(double v) {
        const double t = sum_ + v;
        if (std::abs(sum_) >= std::abs(v))
            comp_ += (sum_ - t) + v;
        else
            comp_ += (v - t) + sum_;
        sum_ = t;
    }
    double result() const { return sum_ + comp_; }

private:
    double sum_ = 0.0;
    double comp_ = 0.0;
};

} // namespace csr
