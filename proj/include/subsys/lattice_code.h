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

#ifndef SUBSYS_LATTICE_CODE_H
#define SUBSYS_LATTICE_CODE_H

#include <array>
#include <string>
#include <string_view>
#include <vector>

#include "subsys/bits.h"
#include "subsys/pauli.h"

namespace subsys {

/// Geometry of a 2D (n x n) or 3D (n x n x n) subsystem code.
///
/// Sites are indexed row-major in 2D, (row i, column j) -> i*n + j, and
/// x-major in 3D, (x i, y j, z k) -> (i*n + j)*n + k. Coordinates are
/// zero-based here; the text syntax uses one-based coordinates.
struct CodeLayout {
    int dimension = 2;
    size_t n = 0;
    size_t num_sites = 0;

    size_t site_index(size_t i, size_t j) const;
    size_t site_index(size_t i, size_t j, size_t k) const;
    /// Zero-based coordinates; the third entry is 0 in 2D.
    std::array<size_t, 3> coords(size_t site) const;

    /// Sites per parity row of the repetition code (n in 2D, n^2 in 3D).
    size_t sites_per_string_entry() const {
        return num_sites / n;
    }
    size_t num_stabilizer_generators() const {
        return 2 * (n - 1);
    }
    size_t num_gauge_generators() const;

    bool operator==(const CodeLayout &other) const = default;
};

/// Rejects n < 2, dimensions other than 2 and 3, and even n in 3D.
CodeLayout build_code(int dimension, size_t n);

enum class BondKind {
    kZZRow,     // 2D: Z(i,j) Z(i,j+1)
    kXXColumn,  // 2D: X(i,j) X(i+1,j)
    kXXAlongX,  // 3D: X(i,j,k) X(i+1,j,k)
    kXXAlongY,  // 3D: X(i,j,k) X(i,j+1,k)
    kZZAlongY,  // 3D: Z(i,j,k) Z(i,j+1,k)
    kZZAlongZ,  // 3D: Z(i,j,k) Z(i,j,k+1)
};

/// Short tag: "zz-row", "xx-col", "xx", "xy", "zy", "zz".
const char *bond_kind_name(BondKind kind);
bool bond_is_x_type(BondKind kind);

struct Bond {
    size_t site_a;
    size_t site_b;
    BondKind kind;
};

/// Nearest-neighbour gauge bonds. 2D order: ZZ row bonds, then XX column
/// bonds. 3D order: XX along x, XX along y, ZZ along y, ZZ along z.
std::vector<Bond> gauge_bonds(const CodeLayout &layout);
PauliOperator bond_operator(const CodeLayout &layout, const Bond &bond);

std::vector<PauliOperator> gauge_generators(const CodeLayout &layout);

/// X-type generator number `index` (0-based): X on rows index, index+1 (2D)
/// or on yz-planes index, index+1 (3D).
PauliOperator stabilizer_x(const CodeLayout &layout, size_t index);
/// Z-type generator number `index`: Z on columns index, index+1 (2D) or on
/// xy-planes index, index+1 (3D).
PauliOperator stabilizer_z(const CodeLayout &layout, size_t index);
/// All n-1 X-type generators followed by all n-1 Z-type generators.
std::vector<PauliOperator> stabilizer_generators(const CodeLayout &layout);

struct LogicalOperators {
    PauliOperator x;  // X on row 1 (2D) / yz-plane 1 (3D)
    PauliOperator z;  // Z on column 1 (2D) / xy-plane 1 (3D)
    PauliOperator y;  // i * x * z
};
LogicalOperators logical_operators(const CodeLayout &layout);

struct GaugeQubitPair {
    PauliOperator z;
    PauliOperator x;
};
/// The (n-1)^2 encoded Pauli pairs of the gauge subsystem (2D only).
std::vector<GaugeQubitPair> gauge_qubit_operators(const CodeLayout &layout);

/// Parities of the X part per column (2D) / xy-plane (3D), and of the Z part
/// per row (2D) / yz-plane (3D).
struct ErrorStrings {
    BitString e;
    BitString f;
    bool operator==(const ErrorStrings &other) const = default;
};
ErrorStrings error_strings(const CodeLayout &layout, const PauliOperator &p);

/// Stabilizer measurement outcomes as bits (1 means eigenvalue -1).
/// sx[i] = f_i xor f_{i+1}, sz[j] = e_j xor e_{j+1}.
struct Syndrome {
    BitString sx;
    BitString sz;
    bool is_trivial() const {
        return sx.none() && sz.none();
    }
    /// "sx|sz", for example "11|00".
    std::string str() const;
    bool operator==(const Syndrome &other) const = default;
};
Syndrome syndrome_from_strings(const ErrorStrings &strings);

enum class ClassTag { kGauge, kLogicalX, kLogicalY, kLogicalZ, kDetectable };
const char *class_tag_name(ClassTag tag);

struct LogicalClass {
    ClassTag tag = ClassTag::kGauge;
    Syndrome syndrome;
    bool operator==(const LogicalClass &other) const = default;
};

/// Residue of p modulo the gauge group, or Detectable when some stabilizer
/// generator anticommutes with p.
LogicalClass classify(const CodeLayout &layout, const PauliOperator &p);

struct PauliPair {
    PauliOperator control;
    PauliOperator target;
};
/// Conjugates control (x) target by a CNOT on every site pair.
PauliPair conjugate_transversal_cnot(const PauliOperator &control, const PauliOperator &target);

/// Reads either a dense token string ("XIZ...", see parse_pauli) of length
/// num_sites, or a list of clauses "P at (c1,c2[,c3])" / "P(c1,c2[,c3])" with
/// one-based coordinates, separated by commas or whitespace. Clauses on the
/// same site multiply.
PauliOperator parse_operator(const CodeLayout &layout, std::string_view text);

/// Clause form, e.g. "Z(2,1) X(1,3)", with a leading phase when it is not +1.
/// The identity formats as "I".
std::string format_sparse(const CodeLayout &layout, const PauliOperator &p);

}  // namespace subsys

#endif
