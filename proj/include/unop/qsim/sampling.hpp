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

#pragma once

#include "unop/qsim/state.hpp"

#include <cstdint>
#include <map>
#include <span>
#include <string>
#include <vector>

namespace unop::qsim {

/// SplitMix64 step; used to derive independent per-chunk generator seeds.
std::uint64_t splitmix64(std::uint64_t &state);

/// Shots are drawn in fixed-size chunks, each with its own derived stream, so
/// the result does not depend on how chunks are spread over threads.
inline constexpr std::uint64_t kShotsPerChunk = 1u << 16;

/// Counts per measured basis index. Deterministic for a fixed seed.
/// Throws std::invalid_argument if shots == 0.
std::map<BasisIndex, std::uint64_t> sample_basis(const QuantumState &state, std::uint64_t shots, std::uint64_t seed,
                                                 unsigned threads = 0);

struct ShotResult {
    std::vector<std::string> register_names;
    /// Register values (in register_names order) -> occurrences.
    std::map<std::vector<std::uint64_t>, std::uint64_t> counts;
    std::uint64_t total_shots = 0;
};

/// Terminal measurement of every register in `layout`. threads == 0 picks
/// std::thread::hardware_concurrency().
ShotResult sample(const QuantumState &state, std::span<const ClassicalRegister> layout, std::uint64_t shots,
                  std::uint64_t seed, unsigned threads = 0);

} // namespace unop::qsim
