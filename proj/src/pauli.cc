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

#include "subsys/pauli.h"

#include <cctype>
#include <stdexcept>

#include "subsys/error.h"

namespace subsys {

namespace {

void require_same_size(const PauliOperator &p, const PauliOperator &q) {
    if (p.num_sites != q.num_sites) {
        throw std::invalid_argument(
            "Pauli operators act on different numbers of sites: " + std::to_string(p.num_sites) + " vs " +
            std::to_string(q.num_sites));
    }
}

}  // namespace

PauliOperator::PauliOperator(uint8_t phase_exp, BitString x_bits, BitString z_bits)
    : num_sites(x_bits.size()), phase_exp(phase_exp & 3), x(std::move(x_bits)), z(std::move(z_bits)) {
    if (z.size() != num_sites) {
        throw std::invalid_argument("X and Z bit arrays must have the same length");
    }
}

PauliOperator PauliOperator::single(size_t num_sites, size_t site, char pauli) {
    if (site >= num_sites) {
        throw std::invalid_argument("site index out of range");
    }
    PauliOperator result(num_sites);
    switch (pauli) {
        case 'I':
            break;
        case 'X':
            result.x.set(site, true);
            break;
        case 'Z':
            result.z.set(site, true);
            break;
        case 'Y':
            result.x.set(site, true);
            result.z.set(site, true);
            result.phase_exp = 1;
            break;
        default:
            throw ParseError(std::string("unknown Pauli '") + pauli + "'");
    }
    return result;
}

PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q);
    // Moving each Z of p past an X of q on the same site contributes a factor -1.
    size_t swaps = popcount_and(p.z, q.x);
    PauliOperator r;
    r.num_sites = p.num_sites;
    r.x = p.x ^ q.x;
    r.z = p.z ^ q.z;
    r.phase_exp = static_cast<uint8_t>((p.phase_exp + q.phase_exp + 2 * swaps) & 3);
    return r;
}

PauliOperator pauli_inverse(const PauliOperator &p) {
    // P(a,b)^2 = (-1)^{|a & b|}, so the inverse of i^k P is i^{-k} (-1)^{|a & b|} P.
    PauliOperator r = p;
    size_t ys = popcount_and(p.x, p.z);
    r.phase_exp = static_cast<uint8_t>((4 - p.phase_exp + 2 * ys) & 3);
    return r;
}

bool commutes(const PauliOperator &p, const PauliOperator &q) {
    require_same_size(p, q);
    return ((popcount_and(p.x, q.z) + popcount_and(p.z, q.x)) & 1) == 0;
}

bool is_hermitian(const PauliOperator &p) {
    // P(a,b)^dagger = (-1)^{|a & b|} P(a,b).
    return ((p.phase_exp + popcount_and(p.x, p.z)) & 1) == 0;
}

size_t weight(const PauliOperator &p) {
    return (p.x | p.z).popcount();
}

std::pair<uint8_t, size_t> parse_phase_prefix(std::string_view text) {
    size_t pos = 0;
    auto skip_space = [&] {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    };
    skip_space();
    uint8_t phase = 0;
    if (pos < text.size() && (text[pos] == '+' || text[pos] == '-')) {
        bool negative = text[pos] == '-';
        pos++;
        bool imaginary = false;
        if (pos < text.size() && text[pos] == 'i') {
            imaginary = true;
            pos++;
        } else if (pos < text.size() && text[pos] == '1') {
            pos++;
        }
        phase = static_cast<uint8_t>((imaginary ? 1 : 0) + (negative ? 2 : 0));
        skip_space();
    }
    return {phase, pos};
}

PauliOperator parse_pauli(std::string_view text) {
    auto [phase, pos] = parse_phase_prefix(text);
    std::string tokens;
    for (; pos < text.size(); pos++) {
        char c = text[pos];
        if (std::isspace(static_cast<unsigned char>(c))) {
            continue;
        }
        if (c != 'I' && c != 'X' && c != 'Y' && c != 'Z' && c != '_') {
            throw ParseError(std::string("unknown Pauli token '") + c + "' in \"" + std::string(text) + "\"");
        }
        tokens.push_back(c);
    }
    if (tokens.empty()) {
        throw ParseError("Pauli string has no site tokens");
    }

    PauliOperator result(tokens.size());
    size_t ys = 0;
    for (size_t k = 0; k < tokens.size(); k++) {
        char c = tokens[k];
        if (c == 'X' || c == 'Y') {
            result.x.set(k, true);
        }
        if (c == 'Z' || c == 'Y') {
            result.z.set(k, true);
        }
        ys += c == 'Y';
    }
    // Y = i * (XZ), one factor of i per Y.
    result.phase_exp = static_cast<uint8_t>((phase + ys) & 3);
    return result;
}

std::string format_pauli(const PauliOperator &p) {
    std::string body(p.num_sites, 'I');
    size_t ys = 0;
    for (size_t k = 0; k < p.num_sites; k++) {
        bool xb = p.x[k];
        bool zb = p.z[k];
        if (xb && zb) {
            body[k] = 'Y';
            ys++;
        } else if (xb) {
            body[k] = 'X';
        } else if (zb) {
            body[k] = 'Z';
        }
    }
    static constexpr const char *kPhaseText[4] = {"", "+i ", "-1 ", "-i "};
    uint8_t shown = static_cast<uint8_t>((p.phase_exp + 4 - (ys & 3)) & 3);
    return kPhaseText[shown] + body;
}

}  // namespace subsys
