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

#include "subsys/noise_mc.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>
#include <thread>
#include <tuple>

#include "subsys/decoder.h"
#include "subsys/format.h"

namespace subsys {

namespace {

void require_probability(double p, const char *name) {
    if (!(p >= 0.0 && p <= 1.0)) {
        throw std::invalid_argument(std::string(name) + " must lie in [0, 1]");
    }
}

size_t class_slot(ClassTag tag) {
    switch (tag) {
        case ClassTag::kGauge:
            return 0;
        case ClassTag::kLogicalX:
            return 1;
        case ClassTag::kLogicalY:
            return 2;
        case ClassTag::kLogicalZ:
            return 3;
        case ClassTag::kDetectable:
            break;
    }
    throw std::logic_error("adjudication returned a detectable residual");
}

}  // namespace

NoiseModel NoiseModel::independent_xz(double px, double pz) {
    require_probability(px, "px");
    require_probability(pz, "pz");
    NoiseModel m;
    m.kind = NoiseKind::kIndependentXZ;
    m.px = px;
    m.pz = pz;
    return m;
}

NoiseModel NoiseModel::depolarizing(double p) {
    require_probability(p, "p");
    NoiseModel m;
    m.kind = NoiseKind::kDepolarizing;
    m.p = p;
    return m;
}

double NoiseModel::marginal_x() const {
    return kind == NoiseKind::kIndependentXZ ? px : 2.0 * p / 3.0;
}

double NoiseModel::marginal_z() const {
    return kind == NoiseKind::kIndependentXZ ? pz : 2.0 * p / 3.0;
}

PauliOperator sample_error(const NoiseModel &model, const CodeLayout &layout, RandomStream &stream) {
    PauliOperator err(layout.num_sites);
    if (model.kind == NoiseKind::kIndependentXZ) {
        for (size_t s = 0; s < layout.num_sites; s++) {
            if (stream.uniform() < model.px) {
                err.x.set(s, true);
            }
            if (stream.uniform() < model.pz) {
                err.z.set(s, true);
            }
        }
        return err;
    }
    const double third = model.p / 3.0;
    for (size_t s = 0; s < layout.num_sites; s++) {
        double u = stream.uniform();
        if (u < third) {
            err.x.set(s, true);
        } else if (u < 2.0 * third) {
            err.x.set(s, true);
            err.z.set(s, true);
        } else if (u < model.p) {
            err.z.set(s, true);
        }
    }
    return err;
}

uint64_t TrialStats::count(ClassTag tag) const {
    return counts[class_slot(tag)];
}

std::pair<double, double> wilson_interval(uint64_t failures, uint64_t trials) {
    if (trials == 0) {
        return {0.0, 1.0};
    }
    constexpr double z = 1.959963984540054;
    const double n = static_cast<double>(trials);
    const double phat = static_cast<double>(failures) / n;
    const double denom = 1.0 + z * z / n;
    const double center = (phat + z * z / (2.0 * n)) / denom;
    const double half = z / denom * std::sqrt(phat * (1.0 - phat) / n + z * z / (4.0 * n * n));
    // Rounding can push an endpoint a hair past the estimate at 0 or 1.
    return {std::min(phat, std::max(0.0, center - half)), std::max(phat, std::min(1.0, center + half))};
}

TrialStats run_trials(
    const CodeLayout &layout, const NoiseModel &model, uint64_t trials, uint64_t master_seed, unsigned threads) {
    if (trials == 0) {
        throw std::invalid_argument("trials must be at least 1");
    }
    if (threads == 0) {
        threads = std::max(1u, std::thread::hardware_concurrency());
    }
    threads = static_cast<unsigned>(std::min<uint64_t>(threads, trials));

    std::vector<std::array<uint64_t, 4>> partial(threads);
    auto work = [&](unsigned worker) {
        uint64_t begin = trials * worker / threads;
        uint64_t end = trials * (worker + 1) / threads;
        auto &counts = partial[worker];
        counts.fill(0);
        for (uint64_t t = begin; t < end; t++) {
            RandomStream stream(master_seed, t);
            PauliOperator err = sample_error(model, layout, stream);
            DecodeOutcome outcome = decode_error(layout, err);
            counts[class_slot(outcome.residual_class->tag)]++;
        }
    };
    if (threads == 1) {
        work(0);
    } else {
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < threads; w++) {
            pool.emplace_back(work, w);
        }
        for (auto &t : pool) {
            t.join();
        }
    }

    TrialStats stats;
    stats.trials = trials;
    stats.seed = master_seed;
    for (const auto &c : partial) {
        for (size_t k = 0; k < 4; k++) {
            stats.counts[k] += c[k];
        }
    }
    uint64_t failures = trials - stats.counts[0];
    stats.failure_rate = static_cast<double>(failures) / static_cast<double>(trials);
    std::tie(stats.ci_low, stats.ci_high) = wilson_interval(failures, trials);
    return stats;
}

ScanNoise parse_scan_noise(const std::string &name) {
    if (name == "z") {
        return ScanNoise::kZ;
    }
    if (name == "x") {
        return ScanNoise::kX;
    }
    if (name == "xz") {
        return ScanNoise::kXZ;
    }
    if (name == "depolarizing") {
        return ScanNoise::kDepolarizing;
    }
    throw std::invalid_argument("unknown noise '" + name + "' (expected z, x, xz or depolarizing)");
}

NoiseModel scan_noise_model(ScanNoise noise, double p) {
    switch (noise) {
        case ScanNoise::kZ:
            return NoiseModel::independent_xz(0.0, p);
        case ScanNoise::kX:
            return NoiseModel::independent_xz(p, 0.0);
        case ScanNoise::kXZ:
            return NoiseModel::independent_xz(p, p);
        case ScanNoise::kDepolarizing:
            return NoiseModel::depolarizing(p);
    }
    throw std::invalid_argument("unknown noise kind");
}

std::vector<ScanRecord> threshold_scan(
    int dimension,
    const std::vector<size_t> &n_list,
    const std::vector<double> &p_list,
    uint64_t trials,
    uint64_t master_seed,
    ScanNoise noise,
    unsigned threads) {
    if (n_list.empty() || p_list.empty()) {
        throw std::invalid_argument("threshold scan needs at least one n and one p");
    }
    // Validate every size and probability before doing any work.
    std::vector<CodeLayout> layouts;
    for (size_t n : n_list) {
        layouts.push_back(build_code(dimension, n));
    }
    std::vector<NoiseModel> models;
    for (double p : p_list) {
        models.push_back(scan_noise_model(noise, p));
    }
    std::vector<ScanRecord> records;
    for (const auto &layout : layouts) {
        for (const auto &model : models) {
            ScanRecord rec;
            rec.dimension = dimension;
            rec.n = layout.n;
            rec.p_x = model.marginal_x();
            rec.p_z = model.marginal_z();
            rec.stats = run_trials(layout, model, trials, master_seed, threads);
            records.push_back(rec);
        }
    }
    return records;
}

const char *const kThresholdCsvHeader =
    "dimension,n,p_x,p_z,trials,seed,count_gauge,count_lx,count_ly,count_lz,failure_rate,ci_low,ci_high";

void write_threshold_csv(std::ostream &out, const std::vector<ScanRecord> &records) {
    out << kThresholdCsvHeader << '\n';
    for (const auto &r : records) {
        const auto &s = r.stats;
        out << r.dimension << ',' << r.n << ',' << format_number(r.p_x) << ',' << format_number(r.p_z) << ','
            << s.trials << ',' << s.seed << ',' << s.counts[0] << ',' << s.counts[1] << ',' << s.counts[2] << ','
            << s.counts[3] << ',' << format_number(s.failure_rate) << ',' << format_number(s.ci_low) << ','
            << format_number(s.ci_high) << '\n';
    }
}

}  // namespace subsys
