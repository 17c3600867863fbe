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

#ifndef SUBSYS_NOISE_MC_H
#define SUBSYS_NOISE_MC_H

#include <array>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subsys/lattice_code.h"
#include "subsys/rng.h"

namespace subsys {

enum class NoiseKind { kIndependentXZ, kDepolarizing };

struct NoiseModel {
    NoiseKind kind = NoiseKind::kIndependentXZ;
    double px = 0.0;
    double pz = 0.0;
    double p = 0.0;

    /// X part with probability px and Z part with probability pz, per site.
    static NoiseModel independent_xz(double px, double pz);
    /// X, Y and Z each with probability p/3, per site.
    static NoiseModel depolarizing(double p);

    /// Per-site probability that the sampled error has an X (resp. Z) part.
    double marginal_x() const;
    double marginal_z() const;
};

/// One iid draw per site. Consumes exactly two uniforms per site for
/// independent_xz and one for depolarizing. The global phase is left at 0.
PauliOperator sample_error(const NoiseModel &model, const CodeLayout &layout, RandomStream &stream);

struct TrialStats {
    uint64_t trials = 0;
    uint64_t seed = 0;
    /// Indexed by residual class: Gauge, LogicalX, LogicalY, LogicalZ.
    std::array<uint64_t, 4> counts{};
    double failure_rate = 0.0;
    double ci_low = 0.0;
    double ci_high = 0.0;

    uint64_t count(ClassTag tag) const;
    bool operator==(const TrialStats &other) const = default;
};

/// 95% Wilson score interval for `failures` out of `trials`.
std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials);

/// Samples, decodes and adjudicates `trials` errors. Trial t draws from
/// RandomStream(master_seed, t), so the result does not depend on `threads`.
/// threads == 0 picks the hardware concurrency.
TrialStats run_trials(
    const CodeLayout &layout, const NoiseModel &model, uint64_t trials, uint64_t master_seed, unsigned threads = 1);

/// How a scalar p of a threshold scan maps to a noise model.
enum class ScanNoise { kZ, kX, kXZ, kDepolarizing };
ScanNoise parse_scan_noise(const std::string &name);
NoiseModel scan_noise_model(ScanNoise noise, double p);

struct ScanRecord {
    int dimension = 2;
    size_t n = 0;
    double p_x = 0.0;
    double p_z = 0.0;
    TrialStats stats;
};

/// One record per (n, p), n-major. Every record runs with `master_seed`, so
/// any row can be reproduced on its own with run_trials.
std::vector<ScanRecord> threshold_scan(
    int dimension,
    const std::vector<size_t> &n_list,
    const std::vector<double> &p_list,
    uint64_t trials,
    uint64_t master_seed,
    ScanNoise noise = ScanNoise::kZ,
    unsigned threads = 1);

extern const char *const kThresholdCsvHeader;
void write_threshold_csv(std::ostream &out, const std::vector<ScanRecord> &records);

}  // namespace subsys

#endif
