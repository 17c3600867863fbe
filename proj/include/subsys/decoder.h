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

#ifndef SUBSYS_DECODER_H
#define SUBSYS_DECODER_H

#include <optional>

#include "subsys/lattice_code.h"

namespace subsys {

/// Stabilizer outcomes computed from the error strings.
Syndrome measure_syndrome(const CodeLayout &layout, const PauliOperator &error);

/// Same outcomes computed by testing anticommutation with every stabilizer
/// generator. Slower; kept as an independent route.
Syndrome measure_syndrome_by_commutation(const CodeLayout &layout, const PauliOperator &error);

/// Minimum-weight n-bit repetition-code word whose adjacent XORs equal
/// `checks` (n-1 bits). On a weight tie the candidate starting with 0 wins.
BitString min_weight_codeword(const BitString &checks);

struct DecodeOutcome {
    PauliOperator correction;
    BitString inferred_e;
    BitString inferred_f;
    /// Filled in by adjudication.
    std::optional<LogicalClass> residual_class;
};

/// Builds the correction: Z on column 1 of each row (2D) / site (i,1,1) of
/// each yz-plane (3D) where the inferred f is 1, and X on row 1 of each
/// column (2D) / site (1,1,k) of each xy-plane (3D) where the inferred e is 1.
DecodeOutcome decode_syndrome(const CodeLayout &layout, const Syndrome &syndrome);

/// Class of correction * error. Gauge means the encoded qubit is restored.
/// Throws if the correction was not built from this error's syndrome.
LogicalClass adjudicate(const CodeLayout &layout, const PauliOperator &error, const DecodeOutcome &outcome);

/// Measure, decode and adjudicate in one step.
DecodeOutcome decode_error(const CodeLayout &layout, const PauliOperator &error);

/// Probability that independent flips with probability p_flip on every site
/// leave the decoded string in the wrong codeword. Requires odd n.
double analytic_failure_prob(const CodeLayout &layout, double p_flip);

}  // namespace subsys

#endif
