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

#include "subsys/hamiltonian.h"

#include <algorithm>
#include <bit>
#include <cmath>
#include <random>
#include <set>
#include <sstream>

#include <Eigen/Dense>
#include "gtest/gtest.h"
#include "json.hpp"

#include "subsys/error.h"

using namespace subsys;

namespace {

// Dense matrix of a real Pauli operator (phase 0 or 2, no Y sites) built
// column by column from its action on computational basis states.
Eigen::MatrixXd real_matrix(const PauliOperator &p) {
    size_t dim = size_t{1} << p.num_sites;
    uint64_t xmask = 0, zmask = 0;
    for (size_t k = 0; k < p.num_sites; k++) {
        xmask |= uint64_t(p.x[k]) << k;
        zmask |= uint64_t(p.z[k]) << k;
    }
    EXPECT_EQ(xmask & zmask, 0u);
    double sign = p.phase_exp == 2 ? -1.0 : 1.0;
    Eigen::MatrixXd m = Eigen::MatrixXd::Zero(dim, dim);
    for (uint64_t b = 0; b < dim; b++) {
        double s = (std::popcount(zmask & b) & 1) ? -sign : sign;
        m(b ^ xmask, b) = s;
    }
    return m;
}

Eigen::MatrixXd hamiltonian_matrix(const HamiltonianSpec &spec) {
    size_t dim = size_t{1} << spec.layout.num_sites;
    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(dim, dim);
    for (size_t t = 0; t < spec.terms.size(); t++) {
        h -= spec.lambda * real_matrix(spec.term_operator(t));
    }
    return h;
}

// Bond-enumeration oracle for the mean-field energy: walk every
// nearest-neighbour pair of the n^3 lattice, decide the bond type from the
// direction, and count the ones that anticommute with the error.
double delta_e_oracle(size_t n, const PauliOperator &e, const MeanFieldParams &c, double lambda) {
    auto idx = [n](size_t i, size_t j, size_t k) {
        return (i * n + j) * n + k;
    };
    double total = 0.0;
    for (size_t i = 0; i < n; i++) {
        for (size_t j = 0; j < n; j++) {
            for (size_t k = 0; k < n; k++) {
                size_t a = idx(i, j, k);
                if (i + 1 < n && (e.z[a] != e.z[idx(i + 1, j, k)])) {
                    total += c.c_xx;
                }
                if (j + 1 < n) {
                    size_t b = idx(i, j + 1, k);
                    if (e.z[a] != e.z[b]) {
                        total += c.c_xy;
                    }
                    if (e.x[a] != e.x[b]) {
                        total += c.c_zy;
                    }
                }
                if (k + 1 < n && e.x[a] != e.x[idx(i, j, k + 1)]) {
                    total += c.c_zz;
                }
            }
        }
    }
    return 2 * lambda * total;
}

PauliOperator x_domain(const CodeLayout &l, size_t plane, const std::set<std::pair<size_t, size_t>> &cells) {
    PauliOperator e(l.num_sites);
    for (auto [j, k] : cells) {
        e.x.set(l.site_index(plane, j, k), true);
    }
    return e;
}

std::set<std::pair<size_t, size_t>> random_connected_domain(std::mt19937_64 &rng, size_t n, size_t size) {
    std::set<std::pair<size_t, size_t>> cells{{n / 2, n / 2}};
    while (cells.size() < size) {
        auto it = cells.begin();
        std::advance(it, rng() % cells.size());
        auto [j, k] = *it;
        int dir = rng() % 4;
        size_t nj = j + (dir == 0) - (dir == 1 && j > 0);
        size_t nk = k + (dir == 2) - (dir == 3 && k > 0);
        if (nj < n && nk < n) {
            cells.insert({nj, nk});
        }
    }
    return cells;
}

}  // namespace

TEST(hamiltonian, term_lists) {
    for (size_t n = 2; n <= 5; n++) {
        HamiltonianSpec spec = build_hamiltonian(build_code(2, n), 1.0);
        EXPECT_EQ(spec.terms.size(), 2 * n * (n - 1));
    }
    HamiltonianSpec spec3 = build_hamiltonian(build_code(3, 3), 0.5);
    EXPECT_EQ(spec3.terms.size(), 4u * 9 * 2);
    EXPECT_DOUBLE_EQ(spec3.lambda, 0.5);
    EXPECT_THROW(build_hamiltonian(build_code(2, 3), std::nan("")), std::invalid_argument);
}

TEST(hamiltonian, terms_commute_with_stabilizers) {
    for (int dim : {2, 3}) {
        for (size_t n = 2; n <= 7; n++) {
            if (dim == 3 && n % 2 == 0) {
                continue;
            }
            CodeLayout l = build_code(dim, n);
            HamiltonianSpec spec = build_hamiltonian(l, 1.0);
            for (const auto &s : stabilizer_generators(l)) {
                for (size_t t = 0; t < spec.terms.size(); t++) {
                    ASSERT_TRUE(commutes(spec.term_operator(t), s));
                }
            }
        }
    }
}

TEST(hamiltonian, matrix_commutes_with_stabilizers) {
    for (size_t n : {2, 3}) {
        CodeLayout l = build_code(2, n);
        Eigen::MatrixXd h = hamiltonian_matrix(build_hamiltonian(l, 1.0));
        for (const auto &s : stabilizer_generators(l)) {
            Eigen::MatrixXd sm = real_matrix(s);
            EXPECT_LT((h * sm - sm * h).norm(), 1e-12);
        }
    }
}

TEST(hamiltonian, two_by_two_spectrum) {
    SectorReport r = diagonalize_small(build_hamiltonian(build_code(2, 2), 1.0));
    EXPECT_EQ(r.hilbert_dimension, 16u);
    ASSERT_EQ(r.levels.size(), 5u);
    const double expected[5] = {-std::sqrt(8.0), -2.0, 0.0, 2.0, std::sqrt(8.0)};
    const size_t mult[5] = {2, 4, 4, 4, 2};
    for (int k = 0; k < 5; k++) {
        EXPECT_NEAR(r.levels[k].value, expected[k], 1e-10);
        EXPECT_EQ(r.levels[k].multiplicity, mult[k]);
    }
    EXPECT_TRUE(r.all_multiplicities_even);
    EXPECT_TRUE(r.sectors_match_full_spectrum);
    EXPECT_EQ(r.sectors.size(), 4u);
}

TEST(hamiltonian, three_by_three_spectrum) {
    CodeLayout l = build_code(2, 3);
    HamiltonianSpec spec = build_hamiltonian(l, 1.0);
    SectorReport r = diagonalize_small(spec);
    EXPECT_EQ(r.hilbert_dimension, 512u);
    EXPECT_NEAR(r.ground_energy, -7.79021303186, 1e-8);
    EXPECT_EQ(r.ground_multiplicity, 2u);
    EXPECT_NEAR(r.levels[1].value, -7.2726007, 1e-6);
    EXPECT_EQ(r.levels[1].multiplicity, 8u);
    EXPECT_NEAR(r.levels[2].value, -6.85192351, 1e-6);
    EXPECT_EQ(r.levels[2].multiplicity, 4u);
    EXPECT_TRUE(r.all_multiplicities_even);
    EXPECT_TRUE(r.sectors_match_full_spectrum);
    ASSERT_EQ(r.sectors.size(), 16u);
    size_t total = 0;
    for (const auto &s : r.sectors) {
        EXPECT_EQ(s.eigenvalues.size(), 32u);
        total += s.eigenvalues.size();
    }
    EXPECT_EQ(total, 512u);

    // The all +1 sector attains the ground energy.
    bool trivial_is_ground = false;
    for (size_t g : r.ground_sectors) {
        const auto &s = r.sectors[g];
        bool all_plus = std::all_of(s.sx.begin(), s.sx.end(), [](int v) { return v == 1; }) &&
                        std::all_of(s.sz.begin(), s.sz.end(), [](int v) { return v == 1; });
        trivial_is_ground = trivial_is_ground || all_plus;
    }
    EXPECT_TRUE(trivial_is_ground);

    // Independent matrix construction gives the same spectrum.
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(hamiltonian_matrix(spec), Eigen::EigenvaluesOnly);
    size_t k = 0;
    for (const auto &level : r.levels) {
        for (size_t m = 0; m < level.multiplicity; m++, k++) {
            ASSERT_NEAR(solver.eigenvalues()[k], level.value, 1e-9);
        }
    }
    EXPECT_EQ(k, 512u);
}

TEST(hamiltonian, spectrum_scales_with_lambda) {
    SectorReport a = diagonalize_small(build_hamiltonian(build_code(2, 3), 1.0));
    SectorReport b = diagonalize_small(build_hamiltonian(build_code(2, 3), 2.5));
    ASSERT_EQ(a.levels.size(), b.levels.size());
    for (size_t k = 0; k < a.levels.size(); k++) {
        EXPECT_NEAR(2.5 * a.levels[k].value, b.levels[k].value, 1e-9);
        EXPECT_EQ(a.levels[k].multiplicity, b.levels[k].multiplicity);
    }
}

TEST(hamiltonian, infeasible_sizes) {
    EXPECT_THROW(diagonalize_small(build_hamiltonian(build_code(2, 4), 1.0)), InfeasibleSize);
    EXPECT_THROW(diagonalize_small(build_hamiltonian(build_code(3, 3), 1.0)), InfeasibleSize);
}

TEST(hamiltonian, cluster_levels_tolerance) {
    auto levels = cluster_levels({-1.0, -1.0 + 1e-10, 0.5, 0.5 + 1e-6});
    ASSERT_EQ(levels.size(), 3u);
    EXPECT_EQ(levels[0].multiplicity, 2u);
    EXPECT_EQ(levels[1].multiplicity, 1u);
}

TEST(hamiltonian, sector_report_json_schema) {
    SectorReport r = diagonalize_small(build_hamiltonian(build_code(2, 2), 1.0));
    std::ostringstream out;
    write_sector_report_json(out, r);
    auto doc = nlohmann::json::parse(out.str());
    EXPECT_EQ(doc["n"], 2);
    EXPECT_EQ(doc["dimension"], 16);
    EXPECT_EQ(doc["lattice_dimension"], 2);
    ASSERT_TRUE(doc["eigenvalues"].is_array());
    EXPECT_EQ(doc["eigenvalues"].size(), 5u);
    EXPECT_TRUE(doc["eigenvalues"][0].contains("value"));
    EXPECT_TRUE(doc["eigenvalues"][0].contains("multiplicity"));
    EXPECT_EQ(doc["ground_multiplicity"], 2);
    EXPECT_TRUE(doc["ground_sector"].contains("sX"));
    EXPECT_TRUE(doc["ground_sector"].contains("sZ"));
    EXPECT_EQ(doc["all_multiplicities_even"], true);
}

TEST(hamiltonian, mean_field_worked_values) {
    CodeLayout l = build_code(3, 9);
    HamiltonianSpec spec = build_hamiltonian(l, 1.0);
    MeanFieldParams c;
    EXPECT_EQ(mean_field_delta_e(spec, PauliOperator(l.num_sites), c), 0.0);
    EXPECT_EQ(mean_field_delta_e(spec, parse_operator(l, "X(5,5,5)"), c), 8.0);
    EXPECT_EQ(mean_field_delta_e(spec, parse_operator(l, "X(5,5,5) X(5,6,5)"), c), 12.0);
    EXPECT_EQ(mean_field_delta_e(spec, parse_operator(l, "Z(5,5,5)"), c), 8.0);
    // Corner site has one bond in each direction.
    EXPECT_EQ(mean_field_delta_e(spec, parse_operator(l, "X(1,1,1)"), c), 4.0);
    MeanFieldParams weighted{1.0, 1.0, 2.0, 3.0};
    EXPECT_EQ(mean_field_delta_e(spec, parse_operator(l, "X(5,5,5)"), weighted), 20.0);
    HamiltonianSpec half = build_hamiltonian(l, 0.5);
    EXPECT_EQ(mean_field_delta_e(half, parse_operator(l, "X(5,5,5)"), c), 4.0);
    EXPECT_THROW(mean_field_delta_e(spec, parse_operator(l, "X(5,5,5)"), MeanFieldParams{1, 1, -1, 1}), std::invalid_argument);
    CodeLayout l2 = build_code(2, 3);
    EXPECT_THROW(
        mean_field_delta_e(build_hamiltonian(l2, 1.0), PauliOperator(l2.num_sites), c), std::invalid_argument);
}

TEST(hamiltonian, perimeter_law) {
    CodeLayout l = build_code(3, 9);
    for (double lambda : {1.0, 0.75}) {
        HamiltonianSpec spec = build_hamiltonian(l, lambda);
        for (size_t k = 1; k <= 4; k++) {
            std::set<std::pair<size_t, size_t>> cells;
            for (size_t a = 0; a < k; a++) {
                for (size_t b = 0; b < k; b++) {
                    cells.insert({2 + a, 2 + b});
                }
            }
            EXPECT_EQ(mean_field_delta_e(spec, x_domain(l, 4, cells), MeanFieldParams{}), 8.0 * lambda * k);
        }
    }
}

TEST(hamiltonian, random_domains_match_bond_oracle) {
    std::mt19937_64 rng(31);
    CodeLayout l = build_code(3, 11);
    HamiltonianSpec spec = build_hamiltonian(l, 1.3);
    MeanFieldParams c{0.9, 1.1, 0.7, 1.6};
    for (int trial = 0; trial < 50; trial++) {
        auto cells = random_connected_domain(rng, l.n, 1 + rng() % 15);
        PauliOperator e = x_domain(l, rng() % l.n, cells);
        ASSERT_NEAR(mean_field_delta_e(spec, e, c), delta_e_oracle(l.n, e, c, 1.3), 1e-12);
    }
    // Arbitrary errors, including Z and Y parts.
    CodeLayout small = build_code(3, 5);
    HamiltonianSpec small_spec = build_hamiltonian(small, 0.8);
    for (int trial = 0; trial < 50; trial++) {
        PauliOperator e(small.num_sites);
        for (size_t s = 0; s < small.num_sites; s++) {
            e.x.set(s, rng() % 5 == 0);
            e.z.set(s, rng() % 5 == 0);
        }
        ASSERT_NEAR(mean_field_delta_e(small_spec, e, c), delta_e_oracle(small.n, e, c, 0.8), 1e-12);
    }
}

TEST(hamiltonian, bulk_domains_are_translation_invariant) {
    std::mt19937_64 rng(32);
    CodeLayout l = build_code(3, 15);
    HamiltonianSpec spec = build_hamiltonian(l, 1.0);
    for (int trial = 0; trial < 20; trial++) {
        std::set<std::pair<size_t, size_t>> cells;
        for (auto [j, k] : random_connected_domain(rng, 7, 1 + rng() % 6)) {
            cells.insert({j + 1, k + 1});
        }
        double base = mean_field_delta_e(spec, x_domain(l, 7, cells), MeanFieldParams{});
        std::set<std::pair<size_t, size_t>> shifted;
        size_t dj = rng() % 6, dk = rng() % 6;
        for (auto [j, k] : cells) {
            shifted.insert({j + dj, k + dk});
        }
        ASSERT_EQ(mean_field_delta_e(spec, x_domain(l, rng() % 15, shifted), MeanFieldParams{}), base);
    }
}
