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

#include "subsys/decoder.h"

#include <cmath>
#include <stdexcept>

#include "subsys/error.h"

namespace subsys {

Syndrome measure_syndrome(const CodeLayout &layout, const PauliOperator &error) {
    return syndrome_from_strings(error_strings(layout, error));
}

Syndrome measure_syndrome_by_commutation(const CodeLayout &layout, const PauliOperator &error) {
    if (error.num_sites != layout.num_sites) {
        throw std::invalid_argument("error size does not match the code");
    }
    Syndrome s{BitString(layout.n - 1), BitString(layout.n - 1)};
    for (size_t i = 0; i + 1 < layout.n; i++) {
        s.sx.set(i, !commutes(stabilizer_x(layout, i), error));
        s.sz.set(i, !commutes(stabilizer_z(layout, i), error));
    }
    return s;
}

BitString min_weight_codeword(const BitString &checks) {
    const size_t n = checks.size() + 1;
    BitString word(n);
    bool bit = false;
    for (size_t i = 1; i < n; i++) {
        bit ^= checks[i - 1];
        word.set(i, bit);
    }
    if (2 * word.popcount() > n) {
        word = ~word;
    }
    return word;
}

DecodeOutcome decode_syndrome(const CodeLayout &layout, const Syndrome &syndrome) {
    if (syndrome.sx.size() + 1 != layout.n || syndrome.sz.size() + 1 != layout.n) {
        throw std::invalid_argument("syndrome length must be n-1");
    }
    DecodeOutcome out;
    out.inferred_f = min_weight_codeword(syndrome.sx);
    out.inferred_e = min_weight_codeword(syndrome.sz);
    out.correction = PauliOperator(layout.num_sites);
    for (size_t i = 0; i < layout.n; i++) {
        if (out.inferred_f[i]) {
            size_t site = layout.dimension == 2 ? layout.site_index(i, 0) : layout.site_index(i, 0, 0);
            out.correction.z.set(site, true);
        }
        if (out.inferred_e[i]) {
            size_t site = layout.dimension == 2 ? layout.site_index(0, i) : layout.site_index(0, 0, i);
            out.correction.x.set(site, true);
        }
    }
    return out;
}

LogicalClass adjudicate(const CodeLayout &layout, const PauliOperator &error, const DecodeOutcome &outcome) {
    ErrorStrings err = error_strings(layout, error);
    ErrorStrings cor = error_strings(layout, outcome.correction);
    if (syndrome_from_strings(err) != syndrome_from_strings(cor)) {
        throw std::invalid_argument("decode outcome does not match the error's syndrome");
    }
    return classify(layout, pauli_mul(outcome.correction, error));
}

DecodeOutcome decode_error(const CodeLayout &layout, const PauliOperator &error) {
    DecodeOutcome out = decode_syndrome(layout, measure_syndrome(layout, error));
    out.residual_class = adjudicate(layout, error, out);
    return out;
}

double analytic_failure_prob(const CodeLayout &layout, double p_flip) {
    if (layout.n % 2 == 0) {
        throw Unsupported("closed-form failure probability needs odd n");
    }
    if (!(p_flip >= 0.0 && p_flip <= 1.0)) {
        throw std::invalid_argument("flip probability must lie in [0, 1]");
    }
    const size_t n = layout.n;
    const double m = static_cast<double>(layout.sites_per_string_entry());
    // Probability that one string entry (parity of m independent flips) is 1.
    const double q = 0.5 * (1.0 - std::pow(1.0 - 2.0 * p_flip, m));
    double total = 0.0;
    for (size_t k = (n + 1) / 2; k <= n; k++) {
        double binom = 1.0;
        for (size_t r = 1; r <= k; r++) {
            binom = binom * static_cast<double>(n - k + r) / static_cast<double>(r);
        }
        total += binom * std::pow(q, static_cast<double>(k)) * std::pow(1.0 - q, static_cast<double>(n - k));
    }
    return total;
}

}  // namespace subsys
