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

#include "subsys/thermal.h"

#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "subsys/decoder.h"
#include "subsys/format.h"

namespace subsys {

IsingConfig::IsingConfig(size_t rows, size_t cols, double j_row, double j_col, double temperature)
    : rows_(rows), cols_(cols), j_row_(j_row), j_col_(j_col), temperature_(temperature), spins_(rows * cols, 1) {
    if (rows == 0 || cols == 0) {
        throw std::invalid_argument("Ising lattice must have at least one spin");
    }
    if (!(temperature > 0.0)) {
        throw std::invalid_argument("temperature must be positive");
    }
    tracked_energy_ = energy();
}

IsingConfig IsingConfig::ordered(int dimensionality, size_t L, double J, double temperature) {
    if (dimensionality == 1) {
        return IsingConfig(1, L, J, J, temperature);
    }
    if (dimensionality == 2) {
        return IsingConfig(L, L, J, J, temperature);
    }
    throw std::invalid_argument("Ising dimensionality must be 1 or 2");
}

void IsingConfig::set_spin(size_t site, int value) {
    if (value != 1 && value != -1) {
        throw std::invalid_argument("spins must be +1 or -1");
    }
    spins_[site] = static_cast<int8_t>(value);
    tracked_energy_ = energy();
}

void IsingConfig::negate_all() {
    for (auto &s : spins_) {
        s = static_cast<int8_t>(-s);
    }
}

double IsingConfig::energy() const {
    double e = 0.0;
    for (size_t r = 0; r < rows_; r++) {
        for (size_t c = 0; c < cols_; c++) {
            int s = spins_[r * cols_ + c];
            if (c + 1 < cols_) {
                e -= j_row_ * s * spins_[r * cols_ + c + 1];
            }
            if (r + 1 < rows_) {
                e -= j_col_ * s * spins_[(r + 1) * cols_ + c];
            }
        }
    }
    return e;
}

double IsingConfig::delta_e(size_t site) const {
    const size_t r = site / cols_;
    const size_t c = site % cols_;
    double row_sum = 0.0;
    double col_sum = 0.0;
    if (c > 0) {
        row_sum += spins_[site - 1];
    }
    if (c + 1 < cols_) {
        row_sum += spins_[site + 1];
    }
    if (r > 0) {
        col_sum += spins_[site - cols_];
    }
    if (r + 1 < rows_) {
        col_sum += spins_[site + cols_];
    }
    return 2.0 * spins_[site] * (j_row_ * row_sum + j_col_ * col_sum);
}

void IsingConfig::flip(size_t site) {
    tracked_energy_ += delta_e(site);
    spins_[site] = static_cast<int8_t>(-spins_[site]);
}

double IsingConfig::magnetization() const {
    long total = 0;
    for (int8_t s : spins_) {
        total += s;
    }
    return static_cast<double>(total) / static_cast<double>(spins_.size());
}

size_t metropolis_sweep(IsingConfig &config, RandomStream &stream) {
    const double t = config.temperature();
    if (!(t > 0.0)) {
        throw std::invalid_argument("temperature must be positive");
    }
    const size_t n = config.num_spins();
    size_t accepted = 0;
    for (size_t attempt = 0; attempt < n; attempt++) {
        // Multiply-shift maps a 64-bit draw onto [0, n) without a division.
        size_t site = static_cast<size_t>((static_cast<unsigned __int128>(stream()) * n) >> 64);
        double de = config.delta_e(site);
        double u = stream.uniform();
        if (de <= 0.0 || u < std::exp(-de / t)) {
            config.flip(site);
            accepted++;
        }
    }
    return accepted;
}

std::vector<double> simulate_ising_memory(
    int dimensionality, size_t L, double J, double temperature, size_t sweeps, uint64_t seed) {
    IsingConfig config = IsingConfig::ordered(dimensionality, L, J, temperature);
    RandomStream stream(seed, 0);
    std::vector<double> series;
    series.reserve(sweeps);
    for (size_t s = 0; s < sweeps; s++) {
        metropolis_sweep(config, stream);
        series.push_back(config.magnetization());
    }
    return series;
}

void write_ising_csv(
    std::ostream &out, int dimensionality, size_t L, double J, double temperature, const std::vector<double> &series) {
    out << "dim,L,J,T,sweep,magnetization\n";
    const std::string prefix = std::to_string(dimensionality) + ',' + std::to_string(L) + ',' + format_number(J) +
                               ',' + format_number(temperature) + ',';
    for (size_t s = 0; s < series.size(); s++) {
        out << prefix << (s + 1) << ',' << format_number(series[s]) << '\n';
    }
}

MeanFieldCodeState MeanFieldCodeState::ordered(
    size_t n, const MeanFieldParams &params, double lambda, double temperature, int encoded_value) {
    if (n < 3 || n % 2 == 0) {
        throw std::invalid_argument("mean-field code needs odd n >= 3, got " + std::to_string(n));
    }
    if (encoded_value != 1 && encoded_value != -1) {
        throw std::invalid_argument("encoded value must be +1 or -1");
    }
    params.validate();
    MeanFieldCodeState state;
    state.n = n;
    state.encoded_value = encoded_value;
    // Rows of a plane are y (coupled by zy bonds), columns are z (zz bonds).
    for (size_t i = 0; i < n; i++) {
        state.planes.emplace_back(n, n, lambda * params.c_zz, lambda * params.c_zy, temperature);
    }
    return state;
}

BitString MeanFieldCodeState::plane_parities() const {
    BitString e(n);
    for (const auto &plane : planes) {
        for (size_t site = 0; site < plane.num_spins(); site++) {
            if (plane.spin(site) < 0) {
                e.flip(site % n);
            }
        }
    }
    return e;
}

PauliOperator MeanFieldCodeState::error_operator() const {
    PauliOperator err(n * n * n);
    for (size_t i = 0; i < planes.size(); i++) {
        for (size_t site = 0; site < planes[i].num_spins(); site++) {
            if (planes[i].spin(site) < 0) {
                err.x.set(i * n * n + site, true);
            }
        }
    }
    return err;
}

double MeanFieldCodeState::energy() const {
    double total = 0.0;
    for (const auto &plane : planes) {
        total += plane.energy();
    }
    return total;
}

int decoded_value(const BitString &parities, int encoded_value) {
    BitString checks(parities.size() - 1);
    for (size_t k = 0; k + 1 < parities.size(); k++) {
        checks.set(k, parities[k] != parities[k + 1]);
    }
    BitString residual = parities ^ min_weight_codeword(checks);
    return residual.none() ? encoded_value : -encoded_value;
}

std::vector<OrderParameterSample> simulate_meanfield_code(const MeanFieldRun &run) {
    if (run.sample_every == 0) {
        throw std::invalid_argument("sample_every must be at least 1");
    }
    MeanFieldCodeState state =
        MeanFieldCodeState::ordered(run.n, run.params, run.lambda, run.temperature, run.encoded_value);
    std::vector<RandomStream> streams;
    for (size_t i = 0; i < run.n; i++) {
        streams.emplace_back(run.seed, i);
    }
    size_t sweep = 0;
    auto advance = [&] {
        for (size_t i = 0; i < run.n; i++) {
            metropolis_sweep(state.planes[i], streams[i]);
        }
        sweep++;
    };
    for (size_t s = 0; s < run.equilibration_sweeps; s++) {
        advance();
    }
    std::vector<OrderParameterSample> samples;
    samples.reserve(run.num_samples);
    for (size_t k = 0; k < run.num_samples; k++) {
        for (size_t s = 0; s < run.sample_every; s++) {
            advance();
        }
        OrderParameterSample sample;
        sample.sweep = sweep;
        sample.parities = state.plane_parities();
        sample.decoded_value = decoded_value(sample.parities, run.encoded_value);
        samples.push_back(std::move(sample));
    }
    return samples;
}

OrderParameter summarize_order_parameter(const std::vector<OrderParameterSample> &samples) {
    OrderParameter out;
    if (samples.empty()) {
        return out;
    }
    const double count = static_cast<double>(samples.size());
    double sum = 0.0;
    for (const auto &s : samples) {
        sum += s.decoded_value;
    }
    out.mean = sum / count;
    // Decoded values are +-1, so the sample variance is 1 - mean^2.
    double variance = count > 1 ? (1.0 - out.mean * out.mean) * count / (count - 1.0) : 0.0;
    out.standard_error = std::sqrt(std::max(0.0, variance) / count);
    return out;
}

std::vector<BifurcationRecord> bifurcation_scan(const MeanFieldRun &base, const std::vector<double> &temperatures) {
    if (temperatures.empty()) {
        throw std::invalid_argument("bifurcation scan needs at least one temperature");
    }
    std::vector<BifurcationRecord> records;
    for (double t : temperatures) {
        for (int encoded : {1, -1}) {
            MeanFieldRun run = base;
            run.temperature = t;
            run.encoded_value = encoded;
            OrderParameter op = summarize_order_parameter(simulate_meanfield_code(run));
            BifurcationRecord rec;
            rec.n = run.n;
            rec.lambda = run.lambda;
            rec.c_zy = run.params.c_zy;
            rec.c_zz = run.params.c_zz;
            rec.temperature = t;
            rec.encoded = encoded;
            rec.samples = run.num_samples;
            rec.order_parameter = op.mean;
            rec.standard_error = op.standard_error;
            rec.seed = run.seed;
            records.push_back(rec);
        }
    }
    return records;
}

void write_bifurcation_csv(std::ostream &out, const std::vector<BifurcationRecord> &records) {
    out << "n,lambda,c_zy,c_zz,T,encoded,samples,order_parameter,stderr,seed\n";
    for (const auto &r : records) {
        out << r.n << ',' << format_number(r.lambda) << ',' << format_number(r.c_zy) << ',' << format_number(r.c_zz)
            << ',' << format_number(r.temperature) << ',' << r.encoded << ',' << r.samples << ','
            << format_number(r.order_parameter) << ',' << format_number(r.standard_error) << ',' << r.seed << '\n';
    }
}

}  // namespace subsys
