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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <ostream>
#include <stdexcept>

#include "json.hpp"
#include "subsys/error.h"

namespace subsys {

namespace {

uint64_t low_mask(const BitString &bits) {
    return bits.words().empty() ? 0 : bits.words()[0];
}

double level_tolerance(double value) {
    return 1e-8 * std::max(1.0, std::abs(value));
}

// Adds coeff * P to the dense matrix. P|b> = i^phase (-1)^{|z & b|} |b ^ x>.
void accumulate_pauli(Eigen::MatrixXd &h, const PauliOperator &p, double coeff) {
    if (p.phase_exp & 1) {
        throw std::logic_error("Hamiltonian term is not real");
    }
    const double sign = p.phase_exp == 2 ? -coeff : coeff;
    const uint64_t xm = low_mask(p.x);
    const uint64_t zm = low_mask(p.z);
    const uint64_t dim = static_cast<uint64_t>(h.rows());
    for (uint64_t b = 0; b < dim; b++) {
        double v = (std::popcount(zm & b) & 1) ? -sign : sign;
        h(static_cast<Eigen::Index>(b ^ xm), static_cast<Eigen::Index>(b)) += v;
    }
}

std::vector<int> signs_from_mask(uint64_t mask, size_t count) {
    std::vector<int> out(count);
    for (size_t i = 0; i < count; i++) {
        out[i] = ((mask >> i) & 1) ? -1 : 1;
    }
    return out;
}

}  // namespace

HamiltonianSpec build_hamiltonian(const CodeLayout &layout, double lambda) {
    if (!std::isfinite(lambda)) {
        throw std::invalid_argument("coupling must be finite");
    }
    return HamiltonianSpec{layout, lambda, gauge_bonds(layout)};
}

void MeanFieldParams::validate() const {
    if (!(c_xx > 0 && c_xy > 0 && c_zy > 0 && c_zz > 0)) {
        throw std::invalid_argument("mean-field bond expectations must all be positive");
    }
}

double MeanFieldParams::coefficient(BondKind kind) const {
    switch (kind) {
        case BondKind::kXXAlongX:
            return c_xx;
        case BondKind::kXXAlongY:
            return c_xy;
        case BondKind::kZZAlongY:
            return c_zy;
        case BondKind::kZZAlongZ:
            return c_zz;
        default:
            throw std::invalid_argument("mean-field coefficients are defined for 3D bonds only");
    }
}

double mean_field_delta_e(const HamiltonianSpec &spec, const PauliOperator &error, const MeanFieldParams &params) {
    if (spec.layout.dimension != 3) {
        throw std::invalid_argument("mean-field energetics are defined for the 3D Hamiltonian");
    }
    if (error.num_sites != spec.layout.num_sites) {
        throw std::invalid_argument("error size does not match the Hamiltonian");
    }
    params.validate();
    double total = 0.0;
    for (const auto &bond : spec.terms) {
        // A two-site XX (ZZ) bond anticommutes with the error when the error's
        // Z (X) part covers exactly one of its sites.
        const BitString &other = bond_is_x_type(bond.kind) ? error.z : error.x;
        if (other[bond.site_a] != other[bond.site_b]) {
            total += params.coefficient(bond.kind);
        }
    }
    return 2.0 * spec.lambda * total;
}

std::vector<EnergyLevel> cluster_levels(const std::vector<double> &sorted_values) {
    std::vector<EnergyLevel> levels;
    double last = 0.0;
    for (double v : sorted_values) {
        if (!levels.empty() && v - last <= level_tolerance(v)) {
            levels.back().multiplicity++;
        } else {
            levels.push_back({v, 1});
        }
        last = v;
    }
    return levels;
}

SectorReport diagonalize_small(const HamiltonianSpec &spec) {
    const CodeLayout &layout = spec.layout;
    if (layout.num_sites > kMaxExactSites) {
        throw InfeasibleSize(
            "exact diagonalization needs at most " + std::to_string(kMaxExactSites) + " sites (2^" +
            std::to_string(kMaxExactSites) + " states); this lattice has " + std::to_string(layout.num_sites));
    }
    const uint64_t dim = uint64_t{1} << layout.num_sites;
    const auto d = static_cast<Eigen::Index>(dim);

    Eigen::MatrixXd h = Eigen::MatrixXd::Zero(d, d);
    for (size_t t = 0; t < spec.terms.size(); t++) {
        accumulate_pauli(h, spec.term_operator(t), -spec.lambda);
    }

    SectorReport report;
    report.lattice_dimension = layout.dimension;
    report.n = layout.n;
    report.hilbert_dimension = dim;
    report.lambda = spec.lambda;

    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> full(h, Eigen::EigenvaluesOnly);
    if (full.info() != Eigen::Success) {
        throw std::runtime_error("eigen solver did not converge");
    }
    std::vector<double> full_values(full.eigenvalues().data(), full.eigenvalues().data() + d);
    std::sort(full_values.begin(), full_values.end());
    report.levels = cluster_levels(full_values);
    report.ground_energy = report.levels.front().value;
    report.ground_multiplicity = report.levels.front().multiplicity;
    report.all_multiplicities_even =
        std::all_of(report.levels.begin(), report.levels.end(), [](const EnergyLevel &l) {
            return l.multiplicity % 2 == 0;
        });

    // Each sector is spanned by vectors sum_g chi(g) |b ^ x(g)>, where g runs
    // over products of X-type generators and b over orbit representatives
    // with the requested Z-type eigenvalues.
    const size_t k = layout.n - 1;
    std::vector<uint64_t> x_masks;
    std::vector<uint64_t> z_masks;
    for (size_t i = 0; i < k; i++) {
        x_masks.push_back(low_mask(stabilizer_x(layout, i).x));
        z_masks.push_back(low_mask(stabilizer_z(layout, i).z));
    }
    const uint64_t group_size = uint64_t{1} << k;
    std::vector<uint64_t> group_masks(group_size, 0);
    for (uint64_t g = 0; g < group_size; g++) {
        for (size_t i = 0; i < k; i++) {
            if ((g >> i) & 1) {
                group_masks[g] ^= x_masks[i];
            }
        }
    }
    auto z_pattern = [&](uint64_t b) {
        uint64_t pattern = 0;
        for (size_t j = 0; j < k; j++) {
            pattern |= static_cast<uint64_t>(std::popcount(z_masks[j] & b) & 1) << j;
        }
        return pattern;
    };
    std::vector<std::vector<uint64_t>> reps_by_z(group_size);
    for (uint64_t b = 0; b < dim; b++) {
        bool is_rep = true;
        for (uint64_t g = 1; g < group_size && is_rep; g++) {
            is_rep = (b ^ group_masks[g]) > b;
        }
        if (is_rep) {
            reps_by_z[z_pattern(b)].push_back(b);
        }
    }

    std::vector<double> union_values;
    const double norm = 1.0 / std::sqrt(static_cast<double>(group_size));
    for (uint64_t sx_mask = 0; sx_mask < group_size; sx_mask++) {
        for (uint64_t sz_mask = 0; sz_mask < group_size; sz_mask++) {
            const auto &reps = reps_by_z[sz_mask];
            const auto sector_dim = static_cast<Eigen::Index>(reps.size());
            Eigen::MatrixXd basis = Eigen::MatrixXd::Zero(d, sector_dim);
            for (Eigen::Index c = 0; c < sector_dim; c++) {
                for (uint64_t g = 0; g < group_size; g++) {
                    double chi = (std::popcount(g & sx_mask) & 1) ? -norm : norm;
                    basis(static_cast<Eigen::Index>(reps[c] ^ group_masks[g]), c) = chi;
                }
            }
            Eigen::MatrixXd block = basis.transpose() * h * basis;
            Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver(block, Eigen::EigenvaluesOnly);
            SectorEnergy sector;
            sector.sx = signs_from_mask(sx_mask, k);
            sector.sz = signs_from_mask(sz_mask, k);
            sector.eigenvalues.assign(solver.eigenvalues().data(), solver.eigenvalues().data() + sector_dim);
            std::sort(sector.eigenvalues.begin(), sector.eigenvalues.end());
            sector.min_energy = sector.eigenvalues.front();
            union_values.insert(union_values.end(), sector.eigenvalues.begin(), sector.eigenvalues.end());
            report.sectors.push_back(std::move(sector));
        }
    }
    for (size_t s = 0; s < report.sectors.size(); s++) {
        double gap = report.sectors[s].min_energy - report.ground_energy;
        if (std::abs(gap) <= level_tolerance(report.ground_energy)) {
            report.ground_sectors.push_back(s);
        }
    }
    std::sort(union_values.begin(), union_values.end());
    report.sectors_match_full_spectrum = union_values.size() == full_values.size();
    for (size_t i = 0; report.sectors_match_full_spectrum && i < union_values.size(); i++) {
        report.sectors_match_full_spectrum = std::abs(union_values[i] - full_values[i]) <= level_tolerance(full_values[i]);
    }
    return report;
}

void write_sector_report_json(std::ostream &out, const SectorReport &report) {
    using nlohmann::ordered_json;
    ordered_json j;
    j["n"] = report.n;
    j["lattice_dimension"] = report.lattice_dimension;
    j["dimension"] = report.hilbert_dimension;
    j["lambda"] = report.lambda;
    j["eigenvalues"] = ordered_json::array();
    for (const auto &level : report.levels) {
        j["eigenvalues"].push_back({{"value", level.value}, {"multiplicity", level.multiplicity}});
    }
    j["ground_energy"] = report.ground_energy;
    j["ground_multiplicity"] = report.ground_multiplicity;
    auto sector_json = [&](const SectorEnergy &s) {
        return ordered_json{{"sX", s.sx}, {"sZ", s.sz}, {"min_energy", s.min_energy}};
    };
    j["ground_sector"] = report.ground_sectors.empty() ? ordered_json(nullptr)
                                                       : sector_json(report.sectors[report.ground_sectors.front()]);
    j["ground_sectors"] = ordered_json::array();
    for (size_t s : report.ground_sectors) {
        j["ground_sectors"].push_back(sector_json(report.sectors[s]));
    }
    j["all_multiplicities_even"] = report.all_multiplicities_even;
    j["sectors_match_full_spectrum"] = report.sectors_match_full_spectrum;
    j["sectors"] = ordered_json::array();
    for (const auto &s : report.sectors) {
        j["sectors"].push_back(sector_json(s));
    }
    out << j.dump(2) << '\n';
}

}  // namespace subsys
