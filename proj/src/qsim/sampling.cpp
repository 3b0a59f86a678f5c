// Copyright 2026 The unop Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "unop/qsim/sampling.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>
#include <thread>

namespace unop::qsim {

std::uint64_t splitmix64(std::uint64_t &state) {
    std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
}

namespace {

std::uint64_t chunk_seed(std::uint64_t master, std::uint64_t chunk) {
    std::uint64_t s = master ^ (chunk * 0xd1b54a32d192ed03ULL);
    splitmix64(s);
    return splitmix64(s);
}

// 53 random bits -> [0, 1). Avoids std::uniform_real_distribution, whose
// output differs between standard libraries.
double unit_interval(std::mt19937_64 &rng) { return static_cast<double>(rng() >> 11) * 0x1.0p-53; }

} // namespace

std::map<BasisIndex, std::uint64_t> sample_basis(const QuantumState &state, std::uint64_t shots, std::uint64_t seed,
                                                 unsigned threads) {
    if (shots == 0) {
        throw std::invalid_argument("sample: shots must be at least 1");
    }
    const std::vector<SupportEntry> entries = state.support(0.0);
    std::vector<double> cumulative(entries.size());
    double total = 0.0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
        total += std::norm(entries[i].amplitude);
        cumulative[i] = total;
    }
    if (entries.empty() || total <= 0.0) {
        throw std::invalid_argument("sample: state has no support");
    }

    const std::uint64_t chunks = (shots + kShotsPerChunk - 1) / kShotsPerChunk;
    // Integer tallies are summed, so assigning chunks to workers cannot change the totals.
    auto run_chunk = [&](std::uint64_t c, std::vector<std::uint64_t> &tally) {
        const std::uint64_t begin = c * kShotsPerChunk;
        const std::uint64_t count = std::min(kShotsPerChunk, shots - begin);
        std::mt19937_64 rng(chunk_seed(seed, c));
        for (std::uint64_t s = 0; s < count; ++s) {
            const double u = unit_interval(rng) * total;
            auto it = std::upper_bound(cumulative.begin(), cumulative.end(), u);
            if (it == cumulative.end()) {
                --it;
            }
            ++tally[static_cast<std::size_t>(it - cumulative.begin())];
        }
    };

    unsigned workers = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
    workers = static_cast<unsigned>(std::min<std::uint64_t>(workers, chunks));
    std::vector<std::vector<std::uint64_t>> tallies(workers, std::vector<std::uint64_t>(entries.size(), 0));
    if (workers == 1) {
        for (std::uint64_t c = 0; c < chunks; ++c) {
            run_chunk(c, tallies[0]);
        }
    } else {
        std::vector<std::jthread> pool;
        pool.reserve(workers);
        for (unsigned w = 0; w < workers; ++w) {
            pool.emplace_back([&, w] {
                for (std::uint64_t c = w; c < chunks; c += workers) {
                    run_chunk(c, tallies[w]);
                }
            });
        }
    }

    std::map<BasisIndex, std::uint64_t> counts;
    for (const auto &tally : tallies) {
        for (std::size_t i = 0; i < tally.size(); ++i) {
            if (tally[i] != 0) {
                counts[entries[i].index] += tally[i];
            }
        }
    }
    return counts;
}

ShotResult sample(const QuantumState &state, std::span<const ClassicalRegister> layout, std::uint64_t shots,
                  std::uint64_t seed, unsigned threads) {
    ShotResult result;
    result.total_shots = shots;
    for (const auto &reg : layout) {
        result.register_names.push_back(reg.name);
    }
    for (const auto &[index, n] : sample_basis(state, shots, seed, threads)) {
        result.counts[read_registers(index, layout)] += n;
    }
    return result;
}

} // namespace unop::qsim
