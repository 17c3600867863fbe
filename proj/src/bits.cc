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

#include "subsys/bits.h"

#include <stdexcept>

namespace subsys {

BitString BitString::from_string(std::string_view text) {
    BitString result(text.size());
    for (size_t k = 0; k < text.size(); k++) {
        if (text[k] == '1') {
            result.set(k, true);
        } else if (text[k] != '0') {
            throw std::invalid_argument("bit string may only contain '0' and '1'");
        }
    }
    return result;
}

BitString BitString::ones(size_t num_bits) {
    BitString result(num_bits);
    for (auto &w : result.words_) {
        w = ~uint64_t{0};
    }
    result.clear_padding();
    return result;
}

size_t BitString::popcount() const {
    size_t total = 0;
    for (uint64_t w : words_) {
        total += static_cast<size_t>(std::popcount(w));
    }
    return total;
}

bool BitString::none() const {
    for (uint64_t w : words_) {
        if (w) {
            return false;
        }
    }
    return true;
}

bool BitString::all() const {
    return popcount() == num_bits_;
}

BitString &BitString::operator^=(const BitString &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit string length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] ^= other.words_[w];
    }
    return *this;
}

BitString &BitString::operator&=(const BitString &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit string length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] &= other.words_[w];
    }
    return *this;
}

BitString &BitString::operator|=(const BitString &other) {
    if (other.num_bits_ != num_bits_) {
        throw std::invalid_argument("bit string length mismatch");
    }
    for (size_t w = 0; w < words_.size(); w++) {
        words_[w] |= other.words_[w];
    }
    return *this;
}

BitString BitString::operator~() const {
    BitString result = *this;
    for (auto &w : result.words_) {
        w = ~w;
    }
    result.clear_padding();
    return result;
}

std::string BitString::str() const {
    std::string out(num_bits_, '0');
    for (size_t k = 0; k < num_bits_; k++) {
        if ((*this)[k]) {
            out[k] = '1';
        }
    }
    return out;
}

void BitString::clear_padding() {
    size_t tail = num_bits_ & 63;
    if (tail && !words_.empty()) {
        words_.back() &= (uint64_t{1} << tail) - 1;
    }
}

size_t popcount_and(const BitString &a, const BitString &b) {
    if (a.size() != b.size()) {
        throw std::invalid_argument("bit string length mismatch");
    }
    size_t total = 0;
    const auto &wa = a.words();
    const auto &wb = b.words();
    for (size_t w = 0; w < wa.size(); w++) {
        total += static_cast<size_t>(std::popcount(wa[w] & wb[w]));
    }
    return total;
}

}  // namespace subsys
