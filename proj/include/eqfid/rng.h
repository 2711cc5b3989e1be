// Copyright 2026 The eqfid Authors
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

#ifndef EQFID_RNG_H
#define EQFID_RNG_H

#include <cstdint>

namespace eqfid {

/// SplitMix64 output mixer (Steele, Lea & Flood 2014).
constexpr std::uint64_t splitmix64_mix(std::uint64_t z) {
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
}

/// Independent random stream for one Monte Carlo trial. The starting state is a
/// pure function of (seed, trial index), so results do not depend on which
/// worker runs the trial or in what order.
class TrialStream {
   public:
    static constexpr std::uint64_t kGamma = 0x9E3779B97F4A7C15ULL;

    TrialStream(std::uint64_t seed, std::uint64_t trial_index)
        : state_(splitmix64_mix(seed + kGamma) ^ splitmix64_mix((trial_index + 1) * kGamma)) {
    }

    std::uint64_t next() {
        state_ += kGamma;
        return splitmix64_mix(state_);
    }

    /// Uniform on [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

   private:
    std::uint64_t state_;
};

}  // namespace eqfid

#endif
