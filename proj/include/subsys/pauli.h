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

#ifndef SUBSYS_PAULI_H
#define SUBSYS_PAULI_H

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>

#include "subsys/bits.h"

namespace subsys {

/// An n-qubit Pauli operator i^phase_exp * prod_k X_k^{x_k} Z_k^{z_k}.
///
/// Each site's factor is ordered X then Z, so a site with both bits set
/// carries X*Z = -iY. A Hermitian Y on one site is therefore
/// (phase_exp=1, x=1, z=1).
struct PauliOperator {
    size_t num_sites = 0;
    uint8_t phase_exp = 0;
    BitString x;
    BitString z;

    PauliOperator() = default;
    explicit PauliOperator(size_t num_sites) : num_sites(num_sites), x(num_sites), z(num_sites) {
    }
    PauliOperator(uint8_t phase_exp, BitString x_bits, BitString z_bits);

    static PauliOperator identity(size_t num_sites) {
        return PauliOperator(num_sites);
    }
    /// Single-site X, Y (Hermitian), or Z. 'I' gives the identity.
    static PauliOperator single(size_t num_sites, size_t site, char pauli);

    bool is_identity() const {
        return phase_exp == 0 && x.none() && z.none();
    }
    /// True when the X and Z parts are empty, regardless of phase.
    bool is_scalar() const {
        return x.none() && z.none();
    }

    bool operator==(const PauliOperator &other) const = default;
};

/// Product p*q (p applied after q in matrix order, i.e. the matrix product).
PauliOperator pauli_mul(const PauliOperator &p, const PauliOperator &q);

/// The inverse of p, so that pauli_mul(p, pauli_inverse(p)) is the identity.
PauliOperator pauli_inverse(const PauliOperator &p);

bool commutes(const PauliOperator &p, const PauliOperator &q);

/// True when p equals its own adjoint.
bool is_hermitian(const PauliOperator &p);

/// Number of sites acted on non-trivially.
size_t weight(const PauliOperator &p);

/// Dense text form: optional phase ("+1", "-1", "+i", "-i") followed by one
/// of I/X/Y/Z per site. '_' is accepted as an alias for I. Whitespace between
/// the phase and the site tokens is ignored.
PauliOperator parse_pauli(std::string_view text);

/// Reads an optional leading phase token. Returns the phase exponent and the
/// offset just past the token (and any whitespace around it).
std::pair<uint8_t, size_t> parse_phase_prefix(std::string_view text);
std::string format_pauli(const PauliOperator &p);

}  // namespace subsys

#endif
