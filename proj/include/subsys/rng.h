// Copyright 2026 The subsys Authors
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

#ifndef SUBSYS_RNG_H
#define SUBSYS_RNG_H

#include <array>
#include <cstdint>
#include <limits>

namespace subsys {

/// Philox4x32-10 block function (Salmon et al., SC'11): maps a 128-bit
/// counter and a 64-bit key to 128 pseudo-random bits.
std::array<uint32_t, 4> philox4x32_10(std::array<uint32_t, 4> counter, std::array<uint32_t, 2> key);

/// Counter-based random stream identified by (seed, stream_id).
///
/// Draw number t of a stream depends only on (seed, stream_id, t), so streams
/// can be handed to independent workers without changing results. Satisfies
/// UniformRandomBitGenerator.
class RandomStream {
   public:
    using result_type = uint64_t;

    RandomStream(uint64_t seed, uint64_t stream_id) : seed_(seed), stream_id_(stream_id) {
    }

    static constexpr result_type min() {
        return 0;
    }
    static constexpr result_type max() {
        return std::numeric_limits<result_type>::max();
    }

    result_type operator()() {
        if (buffered_ == 0) {
            refill();
        }
        return buffer_[--buffered_];
    }

    /// Uniform double in [0, 1) with 53 random bits.
    double uniform() {
        return static_cast<double>((*this)() >> 11) * 0x1.0p-53;
    }

    uint64_t seed() const {
        return seed_;
    }
    uint64_t stream_id() const {
        return stream_id_;
    }

   private:
    void refill();

    uint64_t seed_;
    uint64_t stream_id_;
    uint64_t block_ = 0;
    std::array<uint64_t, 2> buffer_{};
    int buffered_ = 0;
};

}  // namespace subsys

#endif
