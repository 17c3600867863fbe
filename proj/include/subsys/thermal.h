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

#ifndef SUBSYS_THERMAL_H
#define SUBSYS_THERMAL_H

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "subsys/bits.h"
#include "subsys/hamiltonian.h"
#include "subsys/lattice_code.h"
#include "subsys/rng.h"

namespace subsys {

/// Classical +-1 spins on an open-boundary rows x cols grid,
/// E = -sum over bonds of J s_u s_v, with one coupling for bonds along a row
/// (between columns c and c+1) and one for bonds along a column. A 1D chain
/// is a single row. Temperature is in energy units (k_B = 1).
class IsingConfig {
   public:
    IsingConfig(size_t rows, size_t cols, double j_row, double j_col, double temperature);

    /// All spins +1 on an L-chain (dimensionality 1) or an L x L square.
    static IsingConfig ordered(int dimensionality, size_t L, double J, double temperature);

    size_t rows() const {
        return rows_;
    }
    size_t cols() const {
        return cols_;
    }
    size_t num_spins() const {
        return spins_.size();
    }
    double temperature() const {
        return temperature_;
    }
    double j_row() const {
        return j_row_;
    }
    double j_col() const {
        return j_col_;
    }
    int spin(size_t site) const {
        return spins_[site];
    }
    const std::vector<int8_t> &spins() const {
        return spins_;
    }

    void set_spin(size_t site, int value);
    void negate_all();

    /// Energy maintained incrementally by flip().
    double tracked_energy() const {
        return tracked_energy_;
    }
    /// Energy recomputed from the spins.
    double energy() const;
    /// Energy change if `site` were flipped.
    double delta_e(size_t site) const;
    void flip(size_t site);

    /// Total magnetization divided by the number of spins.
    double magnetization() const;

   private:
    size_t rows_;
    size_t cols_;
    double j_row_;
    double j_col_;
    double temperature_;
    std::vector<int8_t> spins_;
    double tracked_energy_ = 0.0;
};

/// One sweep of num_spins() single-spin Metropolis attempts. Each attempt
/// picks a site uniformly at random (one 64-bit draw), then draws one
/// uniform and flips with probability min(1, exp(-dE/T)). Returns the
/// number of accepted flips.
///
/// Sites are not visited in a fixed order: with a fixed order the dE = 0
/// moves are deterministic and the 2x2 lattice never reaches some states.
size_t metropolis_sweep(IsingConfig &config, RandomStream &stream);

/// Magnetization per spin after each of `sweeps` sweeps, starting from all +1.
std::vector<double> simulate_ising_memory(
    int dimensionality, size_t L, double J, double temperature, size_t sweeps, uint64_t seed);

void write_ising_csv(
    std::ostream &out, int dimensionality, size_t L, double J, double temperature, const std::vector<double> &series);

/// X-error sector of the 3D code under mean-field energetics: n independent
/// yz-planes, spin (-1)^a where a is the X-error bit. Plane i holds sites
/// (i, j, k) at index j*n + k; y bonds couple with lambda*c_zy, z bonds
/// with lambda*c_zz.
struct MeanFieldCodeState {
    size_t n = 0;
    int encoded_value = 1;
    std::vector<IsingConfig> planes;

    /// No errors: every spin +1.
    static MeanFieldCodeState ordered(
        size_t n, const MeanFieldParams &params, double lambda, double temperature, int encoded_value);

    /// e_k = XOR over (i, j) of the error bit at (i, j, k).
    BitString plane_parities() const;
    /// The X error as an operator on the n^3-site code.
    PauliOperator error_operator() const;
    double energy() const;
};

/// Encoded value read out after syndrome adjustment: flipped when the
/// minimum-weight decoding of `parities` lands on the wrong codeword.
int decoded_value(const BitString &parities, int encoded_value);

struct OrderParameterSample {
    size_t sweep = 0;
    int decoded_value = 1;
    BitString parities;
};

struct MeanFieldRun {
    size_t n = 9;
    MeanFieldParams params;
    double lambda = 1.0;
    double temperature = 1.0;
    size_t equilibration_sweeps = 100;
    size_t num_samples = 1000;
    size_t sample_every = 1;
    uint64_t seed = 0;
    int encoded_value = 1;
};

/// Plane i is driven by RandomStream(seed, i); one sweep updates every plane.
std::vector<OrderParameterSample> simulate_meanfield_code(const MeanFieldRun &run);

struct OrderParameter {
    double mean = 0.0;
    double standard_error = 0.0;
};
/// Mean decoded value and its naive standard error.
OrderParameter summarize_order_parameter(const std::vector<OrderParameterSample> &samples);

struct BifurcationRecord {
    size_t n = 0;
    double lambda = 0.0;
    double c_zy = 0.0;
    double c_zz = 0.0;
    double temperature = 0.0;
    int encoded = 1;
    size_t samples = 0;
    double order_parameter = 0.0;
    double standard_error = 0.0;
    uint64_t seed = 0;
};

/// For each temperature, runs encoded +1 then -1 with the same seed.
/// `base` supplies everything except temperature and encoded value.
std::vector<BifurcationRecord> bifurcation_scan(const MeanFieldRun &base, const std::vector<double> &temperatures);

void write_bifurcation_csv(std::ostream &out, const std::vector<BifurcationRecord> &records);

}  // namespace subsys

#endif
