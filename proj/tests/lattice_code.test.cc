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

#include "subsys/lattice_code.h"

#include <random>

#include "gtest/gtest.h"

#include "subsys/error.h"

using namespace subsys;

namespace {

PauliOperator random_pauli(std::mt19937_64 &rng, size_t n) {
    PauliOperator p(n);
    for (size_t k = 0; k < n; k++) {
        p.x.set(k, rng() & 1);
        p.z.set(k, rng() & 1);
    }
    p.phase_exp = static_cast<uint8_t>(rng() & 3);
    return p;
}

PauliOperator random_gauge_element(std::mt19937_64 &rng, const CodeLayout &layout) {
    PauliOperator g(layout.num_sites);
    for (const PauliOperator &gen : gauge_generators(layout)) {
        if (rng() & 1) {
            g = pauli_mul(g, gen);
        }
    }
    return g;
}

std::vector<CodeLayout> small_layouts() {
    std::vector<CodeLayout> out;
    for (size_t n = 2; n <= 7; n++) {
        out.push_back(build_code(2, n));
    }
    for (size_t n = 3; n <= 7; n += 2) {
        out.push_back(build_code(3, n));
    }
    return out;
}

}  // namespace

TEST(lattice_code, build_code_validation) {
    EXPECT_THROW(build_code(1, 3), std::invalid_argument);
    EXPECT_THROW(build_code(2, 1), std::invalid_argument);
    EXPECT_THROW(build_code(3, 4), std::invalid_argument);
    CodeLayout l3 = build_code(3, 3);
    EXPECT_EQ(l3.num_sites, 27u);
    EXPECT_EQ(l3.site_index(1, 2, 0), (1 * 3 + 2) * 3 + 0);
    EXPECT_EQ(l3.coords(l3.site_index(2, 0, 1)), (std::array<size_t, 3>{2, 0, 1}));
}

TEST(lattice_code, generator_counts) {
    for (size_t n = 2; n <= 6; n++) {
        CodeLayout l = build_code(2, n);
        EXPECT_EQ(l.num_sites, n * n);
        EXPECT_EQ(stabilizer_generators(l).size(), 2 * (n - 1));
        EXPECT_EQ(gauge_generators(l).size(), 2 * n * (n - 1));
        EXPECT_EQ(l.num_gauge_generators(), 2 * n * (n - 1));
    }
    for (size_t n = 3; n <= 7; n += 2) {
        CodeLayout l = build_code(3, n);
        EXPECT_EQ(stabilizer_generators(l).size(), 2 * (n - 1));
        EXPECT_EQ(gauge_generators(l).size(), 4 * n * n * (n - 1));
    }
    EXPECT_EQ(stabilizer_generators(build_code(2, 3)).size(), 4u);
}

TEST(lattice_code, bond_operators_have_weight_two) {
    for (const CodeLayout &l : small_layouts()) {
        for (const Bond &b : gauge_bonds(l)) {
            PauliOperator op = bond_operator(l, b);
            ASSERT_EQ(weight(op), 2u);
            ASSERT_EQ(op.x.none(), !bond_is_x_type(b.kind));
            ASSERT_TRUE(is_hermitian(op));
        }
    }
    CodeLayout l = build_code(2, 3);
    auto bonds = gauge_bonds(l);
    EXPECT_EQ(format_sparse(l, bond_operator(l, bonds.front())), "Z(1,1) Z(1,2)");
    EXPECT_EQ(format_sparse(l, bond_operator(l, bonds.back())), "X(2,3) X(3,3)");
}

TEST(lattice_code, stabilizers_are_products_of_gauge_bonds) {
    // S^X_i is the product of the XX column bonds between rows i and i+1;
    // S^Z_j the product of the ZZ row bonds between columns j and j+1.
    for (size_t n = 2; n <= 6; n++) {
        CodeLayout l = build_code(2, n);
        for (size_t i = 0; i + 1 < n; i++) {
            PauliOperator sx(l.num_sites), sz(l.num_sites);
            for (size_t j = 0; j < n; j++) {
                sx = pauli_mul(sx, bond_operator(l, {l.site_index(i, j), l.site_index(i + 1, j), BondKind::kXXColumn}));
                sz = pauli_mul(sz, bond_operator(l, {l.site_index(j, i), l.site_index(j, i + 1), BondKind::kZZRow}));
            }
            ASSERT_EQ(stabilizer_x(l, i), sx);
            ASSERT_EQ(stabilizer_z(l, i), sz);
        }
    }
    CodeLayout l = build_code(3, 3);
    EXPECT_EQ(weight(stabilizer_x(l, 0)), 18u);
    EXPECT_EQ(weight(stabilizer_z(l, 1)), 18u);
    EXPECT_EQ(classify(l, stabilizer_x(l, 1)).tag, ClassTag::kGauge);
}

TEST(lattice_code, algebraic_structure) {
    for (const CodeLayout &l : small_layouts()) {
        auto stabs = stabilizer_generators(l);
        auto gauge = gauge_generators(l);
        LogicalOperators logical = logical_operators(l);
        for (const auto &s : stabs) {
            ASSERT_TRUE(is_hermitian(s));
            for (const auto &t : stabs) {
                ASSERT_TRUE(commutes(s, t));
            }
            for (const auto &g : gauge) {
                ASSERT_TRUE(commutes(s, g));
            }
            ASSERT_TRUE(commutes(s, logical.x));
            ASSERT_TRUE(commutes(s, logical.y));
            ASSERT_TRUE(commutes(s, logical.z));
        }
        for (const auto &g : gauge) {
            ASSERT_TRUE(commutes(g, logical.x));
            ASSERT_TRUE(commutes(g, logical.z));
        }
        ASSERT_FALSE(commutes(logical.x, logical.z));
        PauliOperator xz = pauli_mul(logical.x, logical.z);
        PauliOperator zx = pauli_mul(logical.z, logical.x);
        ASSERT_EQ(xz.x, zx.x);
        ASSERT_EQ(xz.z, zx.z);
        ASSERT_EQ((xz.phase_exp + 2) % 4, zx.phase_exp);
        ASSERT_TRUE(is_hermitian(logical.y));
        ASSERT_EQ(weight(logical.x), l.sites_per_string_entry());
        ASSERT_EQ(weight(logical.z), l.sites_per_string_entry());
    }
}

TEST(lattice_code, logical_operator_supports) {
    CodeLayout l = build_code(2, 3);
    LogicalOperators logical = logical_operators(l);
    EXPECT_EQ(format_sparse(l, logical.x), "X(1,1) X(1,2) X(1,3)");
    EXPECT_EQ(format_sparse(l, logical.z), "Z(1,1) Z(2,1) Z(3,1)");
    EXPECT_EQ(logical.y, pauli_mul(PauliOperator(1, BitString(9), BitString(9)), pauli_mul(logical.x, logical.z)));
}

TEST(lattice_code, error_strings_are_a_homomorphism) {
    std::mt19937_64 rng(11);
    for (const CodeLayout &l : small_layouts()) {
        for (int trial = 0; trial < 30; trial++) {
            PauliOperator p = random_pauli(rng, l.num_sites);
            PauliOperator q = random_pauli(rng, l.num_sites);
            ErrorStrings sp = error_strings(l, p);
            ErrorStrings sq = error_strings(l, q);
            ErrorStrings spq = error_strings(l, pauli_mul(p, q));
            ASSERT_EQ(spq.e, sp.e ^ sq.e);
            ASSERT_EQ(spq.f, sp.f ^ sq.f);
        }
    }
}

TEST(lattice_code, error_strings_match_definition) {
    CodeLayout l = build_code(2, 3);
    // X at (1,2) and (3,2): column 2 parity cancels. Z at (2,1): row 2.
    PauliOperator p = parse_operator(l, "X at (1,2), X at (3,2), Z at (2,1), X(3,3)");
    ErrorStrings s = error_strings(l, p);
    EXPECT_EQ(s.e.str(), "001");
    EXPECT_EQ(s.f.str(), "010");
    CodeLayout l3 = build_code(3, 3);
    ErrorStrings s3 = error_strings(l3, parse_operator(l3, "X(2,3,1) Z(3,1,2)"));
    EXPECT_EQ(s3.e.str(), "100");
    EXPECT_EQ(s3.f.str(), "001");
}

TEST(lattice_code, classify_examples) {
    CodeLayout l = build_code(2, 3);
    LogicalOperators logical = logical_operators(l);
    EXPECT_EQ(classify(l, logical.x).tag, ClassTag::kLogicalX);
    EXPECT_EQ(classify(l, logical.z).tag, ClassTag::kLogicalZ);
    EXPECT_EQ(classify(l, logical.y).tag, ClassTag::kLogicalY);
    EXPECT_EQ(classify(l, PauliOperator(l.num_sites)).tag, ClassTag::kGauge);
    LogicalClass single = classify(l, parse_operator(l, "Z at (2,2)"));
    EXPECT_EQ(single.tag, ClassTag::kDetectable);
    EXPECT_EQ(single.syndrome.str(), "11|00");
    EXPECT_STREQ(class_tag_name(ClassTag::kLogicalY), "LogicalY");
    // Row 3 of X is equivalent to row 1 modulo gauge.
    EXPECT_EQ(classify(l, parse_operator(l, "X(3,1) X(3,2) X(3,3)")).tag, ClassTag::kLogicalX);
}

TEST(lattice_code, classify_matches_commutation_oracle) {
    // For an operator commuting with every stabilizer, its logical part is
    // read off from commutation with the logical operators: anticommuting
    // with Z-bar means an X-bar component and vice versa.
    std::mt19937_64 rng(12);
    for (const CodeLayout &l : small_layouts()) {
        auto stabs = stabilizer_generators(l);
        LogicalOperators logical = logical_operators(l);
        int undetectable = 0;
        for (int trial = 0; trial < 400 && undetectable < 40; trial++) {
            PauliOperator p = random_pauli(rng, l.num_sites);
            if (trial % 2 == 0) {
                // Force an undetectable operator.
                p = random_gauge_element(rng, l);
                if (rng() & 1) {
                    p = pauli_mul(p, logical.x);
                }
                if (rng() & 1) {
                    p = pauli_mul(p, logical.z);
                }
            }
            bool detected = false;
            for (const auto &s : stabs) {
                detected = detected || !commutes(s, p);
            }
            LogicalClass cls = classify(l, p);
            if (detected) {
                ASSERT_EQ(cls.tag, ClassTag::kDetectable);
                continue;
            }
            undetectable++;
            bool has_x = !commutes(p, logical.z);
            bool has_z = !commutes(p, logical.x);
            ClassTag expected = has_x && has_z ? ClassTag::kLogicalY
                                : has_x        ? ClassTag::kLogicalX
                                : has_z        ? ClassTag::kLogicalZ
                                               : ClassTag::kGauge;
            ASSERT_EQ(cls.tag, expected);
        }
    }
}

TEST(lattice_code, classify_is_gauge_invariant) {
    std::mt19937_64 rng(13);
    for (const CodeLayout &l : small_layouts()) {
        for (int trial = 0; trial < 20; trial++) {
            PauliOperator p = random_pauli(rng, l.num_sites);
            PauliOperator g = random_gauge_element(rng, l);
            ASSERT_EQ(classify(l, pauli_mul(g, p)), classify(l, p));
        }
    }
}

TEST(lattice_code, transversal_cnot) {
    for (size_t n : {3, 4}) {
        CodeLayout l = build_code(2, n);
        LogicalOperators logical = logical_operators(l);
        PauliOperator id(l.num_sites);
        PauliPair a = conjugate_transversal_cnot(logical.x, id);
        EXPECT_EQ(a.control, logical.x);
        EXPECT_EQ(a.target, logical.x);
        PauliPair b = conjugate_transversal_cnot(id, logical.z);
        EXPECT_EQ(b.control, logical.z);
        EXPECT_EQ(b.target, logical.z);
        PauliPair c = conjugate_transversal_cnot(logical.z, id);
        EXPECT_EQ(c.control, logical.z);
        EXPECT_TRUE(c.target.is_identity());
        // Gauge operators map to gauge operators on both blocks.
        for (const auto &g : gauge_generators(l)) {
            for (auto pair : {conjugate_transversal_cnot(g, id), conjugate_transversal_cnot(id, g)}) {
                EXPECT_EQ(classify(l, pair.control).tag, ClassTag::kGauge);
                EXPECT_EQ(classify(l, pair.target).tag, ClassTag::kGauge);
            }
        }
    }
}

TEST(lattice_code, gauge_qubit_operators) {
    for (size_t n : {2, 3, 4}) {
        CodeLayout l = build_code(2, n);
        auto pairs = gauge_qubit_operators(l);
        ASSERT_EQ(pairs.size(), (n - 1) * (n - 1));
        LogicalOperators logical = logical_operators(l);
        auto stabs = stabilizer_generators(l);
        for (size_t a = 0; a < pairs.size(); a++) {
            EXPECT_FALSE(commutes(pairs[a].z, pairs[a].x));
            for (size_t b = 0; b < pairs.size(); b++) {
                if (a != b) {
                    EXPECT_TRUE(commutes(pairs[a].z, pairs[b].x));
                    EXPECT_TRUE(commutes(pairs[a].x, pairs[b].x));
                    EXPECT_TRUE(commutes(pairs[a].z, pairs[b].z));
                }
            }
            for (const auto *op : {&pairs[a].z, &pairs[a].x}) {
                EXPECT_EQ(classify(l, *op).tag, ClassTag::kGauge);
                EXPECT_TRUE(commutes(*op, logical.x));
                EXPECT_TRUE(commutes(*op, logical.z));
                for (const auto &s : stabs) {
                    EXPECT_TRUE(commutes(*op, s));
                }
            }
        }
    }
    EXPECT_THROW(gauge_qubit_operators(build_code(3, 3)), Unsupported);
}

TEST(lattice_code, parse_operator_forms) {
    CodeLayout l = build_code(2, 3);
    PauliOperator z22 = PauliOperator::single(9, l.site_index(1, 1), 'Z');
    EXPECT_EQ(parse_operator(l, "Z at (2,2)"), z22);
    EXPECT_EQ(parse_operator(l, "Z(2,2)"), z22);
    EXPECT_EQ(parse_operator(l, "IIIIZIIII"), z22);
    EXPECT_EQ(
        parse_operator(l, "Z at (2,2) and X at (1,3)"),
        pauli_mul(z22, PauliOperator::single(9, l.site_index(0, 2), 'X')));
    // Z*X on one site is i*Y.
    PauliOperator zx = parse_operator(l, "Z(1,1); X(1,1)");
    EXPECT_EQ(zx, pauli_mul(PauliOperator(1, BitString(9), BitString(9)), PauliOperator::single(9, 0, 'Y')));
    CodeLayout l3 = build_code(3, 3);
    EXPECT_EQ(parse_operator(l3, "X at (1,2,3)"), PauliOperator::single(27, l3.site_index(0, 1, 2), 'X'));
    EXPECT_THROW(parse_operator(l, "Z at (4,1)"), ParseError);
    EXPECT_THROW(parse_operator(l, "Z at (0,1)"), ParseError);
    EXPECT_THROW(parse_operator(l, "Z at (1,1,1)"), ParseError);
    EXPECT_THROW(parse_operator(l, "Z at (1 1)"), ParseError);
    EXPECT_THROW(parse_operator(l, "IIZ"), ParseError);
    EXPECT_THROW(parse_operator(l, ""), ParseError);
}

TEST(lattice_code, sparse_format_round_trip) {
    std::mt19937_64 rng(14);
    for (const CodeLayout &l : {build_code(2, 4), build_code(3, 3)}) {
        EXPECT_EQ(format_sparse(l, PauliOperator(l.num_sites)), "I");
        for (int trial = 0; trial < 200; trial++) {
            PauliOperator p = random_pauli(rng, l.num_sites);
            std::string text = format_sparse(l, p);
            ASSERT_EQ(parse_operator(l, text), p) << text;
        }
    }
}
