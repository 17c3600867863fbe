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

#ifndef SUBSYS_HAMILTONIAN_H
#define SUBSYS_HAMILTONIAN_H

#include <iosfwd>
#include <vector>

#include "subsys/lattice_code.h"

namespace subsys {

/// H = -lambda * sum over terms, every term a nearest-neighbour gauge bond.
struct HamiltonianSpec {
    CodeLayout layout;
    double lambda = 1.0;
    std::vector<Bond> terms;

    PauliOperator term_operator(size_t index) const {
        return bond_operator(layout, terms[index]);
    }
};

HamiltonianSpec build_hamiltonian(const CodeLayout &layout, double lambda);

/// Assumed ground-state expectation values of the four 3D bond families.
struct MeanFieldParams {
    double c_xx = 1.0;
    double c_xy = 1.0;
    double c_zy = 1.0;
    double c_zz = 1.0;

    /// Throws unless every coefficient is positive.
    void validate() const;
    double coefficient(BondKind kind) const;
};

/// Mean-field energy change caused by `error`: 2*lambda times the sum of c
/// over the bonds that anticommute with it. Open boundaries, so sites on
/// the surface have fewer bonds. 3D only.
double mean_field_delta_e(const HamiltonianSpec &spec, const PauliOperator &error, const MeanFieldParams &params);

/// Largest number of sites accepted by diagonalize_small.
constexpr size_t kMaxExactSites = 14;

struct EnergyLevel {
    double value;
    size_t multiplicity;
};

struct SectorEnergy {
    /// Stabilizer eigenvalues, +1 or -1, for the n-1 X-type and Z-type generators.
    std::vector<int> sx;
    std::vector<int> sz;
    double min_energy;
    std::vector<double> eigenvalues;
};

struct SectorReport {
    int lattice_dimension = 2;
    size_t n = 0;
    size_t hilbert_dimension = 0;
    double lambda = 0.0;
    /// Full spectrum, ascending, eigenvalues within 1e-8 relative merged.
    std::vector<EnergyLevel> levels;
    std::vector<SectorEnergy> sectors;
    double ground_energy = 0.0;
    size_t ground_multiplicity = 0;
    /// Indices into `sectors` whose minimum equals the ground energy.
    std::vector<size_t> ground_sectors;
    bool all_multiplicities_even = false;
    /// Union of the per-sector spectra matches the full spectrum.
    bool sectors_match_full_spectrum = false;
};

/// Dense exact diagonalization of the full Hamiltonian plus of each
/// stabilizer sector. Throws InfeasibleSize above kMaxExactSites sites.
SectorReport diagonalize_small(const HamiltonianSpec &spec);

/// Groups sorted eigenvalues whose gap is at most 1e-8 * max(1, |value|).
std::vector<EnergyLevel> cluster_levels(const std::vector<double> &sorted_values);

void write_sector_report_json(std::ostream &out, const SectorReport &report);

}  // namespace subsys

#endif
