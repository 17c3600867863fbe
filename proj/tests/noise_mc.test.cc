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
#include <sstream>
#include <tuple>

#include "gtest/gtest.h"

#include "subsys/decoder.h"

using namespace subsys;

TEST(noise_mc, model_validation) {
    EXPECT_THROW(NoiseModel::independent_xz(-0.1, 0.0), std::invalid_argument);
    EXPECT_THROW(NoiseModel::independent_xz(0.0, 1.1), std::invalid_argument);
    EXPECT_THROW(NoiseModel::depolarizing(2.0), std::invalid_argument);
    EXPECT_DOUBLE_EQ(NoiseModel::depolarizing(0.3).marginal_x(), 0.2);
    EXPECT_DOUBLE_EQ(NoiseModel::depolarizing(0.3).marginal_z(), 0.2);
    EXPECT_DOUBLE_EQ(NoiseModel::independent_xz(0.1, 0.2).marginal_z(), 0.2);
}

TEST(noise_mc, independent_marginals) {
    CodeLayout l = build_code(2, 10);
    NoiseModel m = NoiseModel::independent_xz(0.2, 0.3);
    RandomStream s(5, 0);
    size_t nx = 0, nz = 0, nboth = 0, total = 0;
    for (int trial = 0; trial < 2000; trial++) {
        PauliOperator e = sample_error(m, l, s);
        EXPECT_EQ(e.phase_exp, 0);
        nx += e.x.popcount();
        nz += e.z.popcount();
        nboth += popcount_and(e.x, e.z);
        total += l.num_sites;
    }
    auto tol = [&](double p) {
        return 5 * std::sqrt(p * (1 - p) / total);
    };
    EXPECT_NEAR(double(nx) / total, 0.2, tol(0.2));
    EXPECT_NEAR(double(nz) / total, 0.3, tol(0.3));
    EXPECT_NEAR(double(nboth) / total, 0.06, tol(0.06));
}

TEST(noise_mc, depolarizing_marginals) {
    CodeLayout l = build_code(2, 10);
    NoiseModel m = NoiseModel::depolarizing(0.3);
    RandomStream s(6, 0);
    size_t counts[4] = {};
    size_t total = 0;
    for (int trial = 0; trial < 2000; trial++) {
        PauliOperator e = sample_error(m, l, s);
        for (size_t k = 0; k < l.num_sites; k++) {
            counts[e.x[k] + 2 * e.z[k]]++;
        }
        total += l.num_sites;
    }
    double tol = 5 * std::sqrt(0.1 * 0.9 / total);
    EXPECT_NEAR(double(counts[1]) / total, 0.1, tol);
    EXPECT_NEAR(double(counts[2]) / total, 0.1, tol);
    EXPECT_NEAR(double(counts[3]) / total, 0.1, tol);
}

TEST(noise_mc, wilson_interval_values) {
    auto [lo0, hi0] = wilson_interval(0, 10);
    EXPECT_DOUBLE_EQ(lo0, 0.0);
    EXPECT_NEAR(hi0, 0.2775327998628892, 1e-12);
    auto [lo5, hi5] = wilson_interval(5, 10);
    EXPECT_NEAR(lo5, 0.236593090512564, 1e-12);
    EXPECT_NEAR(hi5, 0.7634069094874361, 1e-12);
    auto [lo10, hi10] = wilson_interval(10, 10);
    EXPECT_NEAR(lo10, 0.7224672001371107, 1e-12);
    EXPECT_DOUBLE_EQ(hi10, 1.0);
    auto [lo, hi] = wilson_interval(15040, 100000);
    EXPECT_NEAR(lo, 0.1481978927826117, 1e-12);
    EXPECT_NEAR(hi, 0.15262896566570638, 1e-12);
}

TEST(noise_mc, result_does_not_depend_on_threads) {
    CodeLayout l = build_code(2, 5);
    NoiseModel m = NoiseModel::independent_xz(0.05, 0.1);
    TrialStats one = run_trials(l, m, 3001, 99, 1);
    TrialStats three = run_trials(l, m, 3001, 99, 3);
    TrialStats many = run_trials(l, m, 3001, 99, 0);
    EXPECT_EQ(one, three);
    EXPECT_EQ(one, many);
    EXPECT_EQ(one.trials, 3001u);
    EXPECT_EQ(one.seed, 99u);
    EXPECT_EQ(one.counts[0] + one.counts[1] + one.counts[2] + one.counts[3], 3001u);
    EXPECT_NE(run_trials(l, m, 3001, 100, 1), one);
}

TEST(noise_mc, z_noise_only_produces_logical_z) {
    CodeLayout l = build_code(2, 3);
    TrialStats s = run_trials(l, NoiseModel::independent_xz(0.0, 0.2), 5000, 1);
    EXPECT_EQ(s.count(ClassTag::kLogicalX), 0u);
    EXPECT_EQ(s.count(ClassTag::kLogicalY), 0u);
    EXPECT_GT(s.count(ClassTag::kLogicalZ), 0u);
}

TEST(noise_mc, agrees_with_closed_form) {
    for (auto [dim, n, p] : {std::tuple{2, 3, 0.1}, {2, 5, 0.05}, {3, 3, 0.02}}) {
        CodeLayout l = build_code(dim, n);
        const uint64_t trials = 20000;
        TrialStats s = run_trials(l, NoiseModel::independent_xz(0.0, p), trials, 2024);
        double expected = analytic_failure_prob(l, p);
        double sigma = std::sqrt(expected * (1 - expected) / trials);
        EXPECT_NEAR(s.failure_rate, expected, 4 * sigma) << dim << "D n=" << n;
        // X noise is decoded by the same repetition structure.
        TrialStats sx = run_trials(l, NoiseModel::independent_xz(p, 0.0), trials, 2025);
        EXPECT_NEAR(sx.failure_rate, expected, 4 * sigma);
        EXPECT_EQ(sx.count(ClassTag::kLogicalZ), 0u);
    }
}

TEST(noise_mc, scan_noise_mapping) {
    EXPECT_EQ(parse_scan_noise("depolarizing"), ScanNoise::kDepolarizing);
    EXPECT_THROW(parse_scan_noise("pink"), std::invalid_argument);
    NoiseModel xz = scan_noise_model(ScanNoise::kXZ, 0.1);
    EXPECT_DOUBLE_EQ(xz.px, 0.1);
    EXPECT_DOUBLE_EQ(xz.pz, 0.1);
    NoiseModel z = scan_noise_model(ScanNoise::kZ, 0.1);
    EXPECT_DOUBLE_EQ(z.px, 0.0);
}

TEST(noise_mc, threshold_csv) {
    auto records = threshold_scan(2, {3, 5}, {0.05, 0.1}, 500, 7);
    ASSERT_EQ(records.size(), 4u);
    EXPECT_EQ(records[1].n, 3u);
    EXPECT_DOUBLE_EQ(records[1].p_z, 0.1);
    EXPECT_EQ(records[2].n, 5u);
    // Each row reproduces on its own.
    EXPECT_EQ(records[3].stats, run_trials(build_code(2, 5), NoiseModel::independent_xz(0, 0.1), 500, 7));
    std::ostringstream a, b;
    write_threshold_csv(a, records);
    write_threshold_csv(b, threshold_scan(2, {3, 5}, {0.05, 0.1}, 500, 7, ScanNoise::kZ, 2));
    EXPECT_EQ(a.str(), b.str());
    std::string text = a.str();
    EXPECT_EQ(
        text.substr(0, text.find('\n')),
        "dimension,n,p_x,p_z,trials,seed,count_gauge,count_lx,count_ly,count_lz,failure_rate,ci_low,ci_high");
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 5);
    EXPECT_EQ(text.substr(text.find('\n') + 1, 15), "2,3,0,0.05,500,");
}
