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

#ifndef SUBSYS_BITS_H
#define SUBSYS_BITS_H

#include <bit>
#include <cstddef>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace subsys {

/// Fixed-length bit string packed into 64-bit words.
///
/// Bits past `size()` in the last word are always zero, so word-level
/// popcounts and comparisons never need masking.
class BitString {
   public:
    BitString() = default;
    explicit BitString(size_t num_bits) : num_bits_(num_bits), words_((num_bits + 63) / 64, 0) {
    }

    /// Parses a string of '0'/'1' characters; bit 0 is the first character.
    static BitString from_string(std::string_view text);
    static BitString ones(size_t num_bits);

    size_t size() const {
        return num_bits_;
    }
    size_t num_words() const {
        return words_.size();
    }
    const std::vector<uint64_t> &words() const {
        return words_;
    }

    bool operator[](size_t k) const {
        return (words_[k >> 6] >> (k & 63)) & 1;
    }
    void set(size_t k, bool value) {
        uint64_t mask = uint64_t{1} << (k & 63);
        if (value) {
            words_[k >> 6] |= mask;
        } else {
            words_[k >> 6] &= ~mask;
        }
    }
    void flip(size_t k) {
        words_[k >> 6] ^= uint64_t{1} << (k & 63);
    }

    size_t popcount() const;
    bool none() const;
    bool all() const;

    BitString &operator^=(const BitString &other);
    BitString &operator&=(const BitString &other);
    BitString &operator|=(const BitString &other);
    friend BitString operator^(BitString a, const BitString &b) {
        a ^= b;
        return a;
    }
    friend BitString operator&(BitString a, const BitString &b) {
        a &= b;
        return a;
    }
    friend BitString operator|(BitString a, const BitString &b) {
        a |= b;
        return a;
    }
    /// Complement restricted to the first `size()` bits.
    BitString operator~() const;

    bool operator==(const BitString &other) const = default;

    /// Calls `fn(k)` for every set bit k in increasing order.
    template <typename Fn>
    void for_each_set_bit(Fn &&fn) const {
        for (size_t w = 0; w < words_.size(); w++) {
            uint64_t v = words_[w];
            while (v) {
                size_t k = (w << 6) + static_cast<size_t>(std::countr_zero(v));
                fn(k);
                v &= v - 1;
            }
        }
    }

    std::string str() const;

   private:
    void clear_padding();

    size_t num_bits_ = 0;
    std::vector<uint64_t> words_;
};

/// Size of the intersection of two equal-length bit strings.
size_t popcount_and(const BitString &a, const BitString &b);

}  // namespace subsys

#endif
