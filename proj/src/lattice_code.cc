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

#include <cctype>
#include <stdexcept>

#include "subsys/error.h"

namespace subsys {

namespace {

void require_size(const CodeLayout &layout, const PauliOperator &p) {
    if (p.num_sites != layout.num_sites) {
        throw std::invalid_argument(
            "operator acts on " + std::to_string(p.num_sites) + " sites but the code has " +
            std::to_string(layout.num_sites));
    }
}

PauliOperator product_on(const CodeLayout &layout, const std::vector<size_t> &sites, char pauli) {
    PauliOperator result(layout.num_sites);
    for (size_t s : sites) {
        if (pauli == 'X') {
            result.x.set(s, true);
        } else {
            result.z.set(s, true);
        }
    }
    return result;
}

// Sites whose coordinate `axis` equals `value`.
std::vector<size_t> slab(const CodeLayout &layout, int axis, size_t value) {
    std::vector<size_t> sites;
    for (size_t s = 0; s < layout.num_sites; s++) {
        if (layout.coords(s)[axis] == value) {
            sites.push_back(s);
        }
    }
    return sites;
}

// Axis whose slabs carry the f string (rows / yz-planes) and the e string
// (columns / xy-planes).
int f_axis(const CodeLayout &) {
    return 0;
}
int e_axis(const CodeLayout &layout) {
    return layout.dimension == 2 ? 1 : 2;
}

}  // namespace

size_t CodeLayout::site_index(size_t i, size_t j) const {
    if (dimension != 2 || i >= n || j >= n) {
        throw std::invalid_argument("2D coordinates out of range");
    }
    return i * n + j;
}

size_t CodeLayout::site_index(size_t i, size_t j, size_t k) const {
    if (dimension != 3 || i >= n || j >= n || k >= n) {
        throw std::invalid_argument("3D coordinates out of range");
    }
    return (i * n + j) * n + k;
}

std::array<size_t, 3> CodeLayout::coords(size_t site) const {
    if (dimension == 2) {
        return {site / n, site % n, 0};
    }
    return {site / (n * n), (site / n) % n, site % n};
}

size_t CodeLayout::num_gauge_generators() const {
    return dimension == 2 ? 2 * n * (n - 1) : 4 * n * n * (n - 1);
}

CodeLayout build_code(int dimension, size_t n) {
    if (dimension != 2 && dimension != 3) {
        throw std::invalid_argument("dimension must be 2 or 3, got " + std::to_string(dimension));
    }
    if (n < 2) {
        throw std::invalid_argument("side length must be at least 2, got " + std::to_string(n));
    }
    if (dimension == 3 && n % 2 == 0) {
        throw std::invalid_argument(
            "3D codes need odd n so the logical planes overlap on an odd number of sites, got " +
            std::to_string(n));
    }
    CodeLayout layout;
    layout.dimension = dimension;
    layout.n = n;
    layout.num_sites = dimension == 2 ? n * n : n * n * n;
    return layout;
}

const char *bond_kind_name(BondKind kind) {
    switch (kind) {
        case BondKind::kZZRow:
            return "zz-row";
        case BondKind::kXXColumn:
            return "xx-col";
        case BondKind::kXXAlongX:
            return "xx";
        case BondKind::kXXAlongY:
            return "xy";
        case BondKind::kZZAlongY:
            return "zy";
        case BondKind::kZZAlongZ:
            return "zz";
    }
    return "?";
}

bool bond_is_x_type(BondKind kind) {
    return kind == BondKind::kXXColumn || kind == BondKind::kXXAlongX || kind == BondKind::kXXAlongY;
}

std::vector<Bond> gauge_bonds(const CodeLayout &layout) {
    const size_t n = layout.n;
    std::vector<Bond> bonds;
    bonds.reserve(layout.num_gauge_generators());
    if (layout.dimension == 2) {
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j + 1 < n; j++) {
                bonds.push_back({layout.site_index(i, j), layout.site_index(i, j + 1), BondKind::kZZRow});
            }
        }
        for (size_t i = 0; i < n; i++) {
            for (size_t j = 0; j + 1 < n; j++) {
                bonds.push_back({layout.site_index(j, i), layout.site_index(j + 1, i), BondKind::kXXColumn});
            }
        }
        return bonds;
    }
    auto push_along = [&](int axis, BondKind kind) {
        for (size_t s = 0; s < layout.num_sites; s++) {
            auto c = layout.coords(s);
            if (c[axis] + 1 < n) {
                c[axis]++;
                bonds.push_back({s, layout.site_index(c[0], c[1], c[2]), kind});
            }
        }
    };
    push_along(0, BondKind::kXXAlongX);
    push_along(1, BondKind::kXXAlongY);
    push_along(1, BondKind::kZZAlongY);
    push_along(2, BondKind::kZZAlongZ);
    return bonds;
}

PauliOperator bond_operator(const CodeLayout &layout, const Bond &bond) {
    return product_on(layout, {bond.site_a, bond.site_b}, bond_is_x_type(bond.kind) ? 'X' : 'Z');
}

std::vector<PauliOperator> gauge_generators(const CodeLayout &layout) {
    std::vector<PauliOperator> result;
    for (const auto &bond : gauge_bonds(layout)) {
        result.push_back(bond_operator(layout, bond));
    }
    return result;
}

PauliOperator stabilizer_x(const CodeLayout &layout, size_t index) {
    if (index + 1 >= layout.n) {
        throw std::invalid_argument("stabilizer index out of range");
    }
    auto sites = slab(layout, f_axis(layout), index);
    auto next = slab(layout, f_axis(layout), index + 1);
    sites.insert(sites.end(), next.begin(), next.end());
    return product_on(layout, sites, 'X');
}

PauliOperator stabilizer_z(const CodeLayout &layout, size_t index) {
    if (index + 1 >= layout.n) {
        throw std::invalid_argument("stabilizer index out of range");
    }
    auto sites = slab(layout, e_axis(layout), index);
    auto next = slab(layout, e_axis(layout), index + 1);
    sites.insert(sites.end(), next.begin(), next.end());
    return product_on(layout, sites, 'Z');
}

std::vector<PauliOperator> stabilizer_generators(const CodeLayout &layout) {
    std::vector<PauliOperator> result;
    for (size_t i = 0; i + 1 < layout.n; i++) {
        result.push_back(stabilizer_x(layout, i));
    }
    for (size_t j = 0; j + 1 < layout.n; j++) {
        result.push_back(stabilizer_z(layout, j));
    }
    return result;
}

LogicalOperators logical_operators(const CodeLayout &layout) {
    LogicalOperators ops;
    ops.x = product_on(layout, slab(layout, f_axis(layout), 0), 'X');
    ops.z = product_on(layout, slab(layout, e_axis(layout), 0), 'Z');
    ops.y = pauli_mul(ops.x, ops.z);
    ops.y.phase_exp = static_cast<uint8_t>((ops.y.phase_exp + 1) & 3);
    return ops;
}

std::vector<GaugeQubitPair> gauge_qubit_operators(const CodeLayout &layout) {
    if (layout.dimension != 2) {
        throw Unsupported("gauge-qubit operators are only defined for 2D codes");
    }
    const size_t n = layout.n;
    std::vector<GaugeQubitPair> pairs;
    for (size_t i = 0; i + 1 < n; i++) {
        for (size_t j = 0; j + 1 < n; j++) {
            GaugeQubitPair pair;
            pair.z = product_on(layout, {layout.site_index(i, j), layout.site_index(i, j + 1)}, 'Z');
            // Vertical X pairs between row i and the last row, on columns 0..j.
            std::vector<size_t> sites;
            for (size_t k = 0; k <= j; k++) {
                sites.push_back(layout.site_index(i, k));
                sites.push_back(layout.site_index(n - 1, k));
            }
            pair.x = product_on(layout, sites, 'X');
            pairs.push_back(std::move(pair));
        }
    }
    return pairs;
}

ErrorStrings error_strings(const CodeLayout &layout, const PauliOperator &p) {
    require_size(layout, p);
    ErrorStrings strings{BitString(layout.n), BitString(layout.n)};
    const size_t n = layout.n;
    const size_t per_slab = layout.sites_per_string_entry();
    // e is indexed by the last coordinate (site % n), f by the first (site / n^{d-1}).
    p.x.for_each_set_bit([&](size_t s) { strings.e.flip(s % n); });
    p.z.for_each_set_bit([&](size_t s) { strings.f.flip(s / per_slab); });
    return strings;
}

std::string Syndrome::str() const {
    return sx.str() + "|" + sz.str();
}

Syndrome syndrome_from_strings(const ErrorStrings &strings) {
    const size_t n = strings.e.size();
    Syndrome s{BitString(n - 1), BitString(n - 1)};
    for (size_t i = 0; i + 1 < n; i++) {
        s.sx.set(i, strings.f[i] != strings.f[i + 1]);
        s.sz.set(i, strings.e[i] != strings.e[i + 1]);
    }
    return s;
}

const char *class_tag_name(ClassTag tag) {
    switch (tag) {
        case ClassTag::kGauge:
            return "Gauge";
        case ClassTag::kLogicalX:
            return "LogicalX";
        case ClassTag::kLogicalY:
            return "LogicalY";
        case ClassTag::kLogicalZ:
            return "LogicalZ";
        case ClassTag::kDetectable:
            return "Detectable";
    }
    return "?";
}

LogicalClass classify(const CodeLayout &layout, const PauliOperator &p) {
    ErrorStrings strings = error_strings(layout, p);
    LogicalClass result;
    result.syndrome = syndrome_from_strings(strings);
    if (!result.syndrome.is_trivial()) {
        result.tag = ClassTag::kDetectable;
        return result;
    }
    // Zero syndrome forces both strings to be constant.
    bool x_flip = strings.e[0];
    bool z_flip = strings.f[0];
    if (x_flip && z_flip) {
        result.tag = ClassTag::kLogicalY;
    } else if (x_flip) {
        result.tag = ClassTag::kLogicalX;
    } else if (z_flip) {
        result.tag = ClassTag::kLogicalZ;
    } else {
        result.tag = ClassTag::kGauge;
    }
    return result;
}

PauliPair conjugate_transversal_cnot(const PauliOperator &control, const PauliOperator &target) {
    if (control.num_sites != target.num_sites) {
        throw std::invalid_argument("transversal CNOT needs two codes of the same size");
    }
    // X_c -> X_c X_t and Z_t -> Z_c Z_t. Reordering the images back into
    // X-then-Z form only commutes factors on different qubits, so phases stay.
    PauliPair out{control, target};
    out.control.z ^= target.z;
    out.target.x ^= control.x;
    return out;
}

namespace {

struct ClauseCursor {
    std::string_view text;
    size_t pos = 0;

    void skip_space() {
        while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) {
            pos++;
        }
    }
    void skip_separators() {
        while (pos < text.size() &&
               (std::isspace(static_cast<unsigned char>(text[pos])) || text[pos] == ',' || text[pos] == ';' ||
                text[pos] == '*')) {
            pos++;
        }
    }
    [[noreturn]] void fail(const std::string &what) const {
        throw ParseError(what + " at offset " + std::to_string(pos) + " in \"" + std::string(text) + "\"");
    }
    size_t read_number() {
        skip_space();
        size_t start = pos;
        size_t value = 0;
        while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
            value = value * 10 + static_cast<size_t>(text[pos] - '0');
            pos++;
        }
        if (pos == start) {
            fail("expected a coordinate");
        }
        return value;
    }
};

PauliOperator parse_clauses(const CodeLayout &layout, std::string_view text) {
    PauliOperator result(layout.num_sites);
    auto [phase, start] = parse_phase_prefix(text);
    result.phase_exp = phase;
    ClauseCursor cur{text, start};
    cur.skip_separators();
    if (cur.pos == text.size()) {
        cur.fail("empty operator");
    }
    while (cur.pos < text.size()) {
        char pauli = text[cur.pos];
        if (pauli != 'I' && pauli != 'X' && pauli != 'Y' && pauli != 'Z') {
            cur.fail(std::string("expected one of I, X, Y, Z but found '") + pauli + "'");
        }
        cur.pos++;
        cur.skip_space();
        if (text.substr(cur.pos, 2) == "at") {
            cur.pos += 2;
            cur.skip_space();
        }
        if (cur.pos >= text.size() || text[cur.pos] != '(') {
            cur.fail("expected '('");
        }
        cur.pos++;
        std::vector<size_t> coords;
        while (true) {
            coords.push_back(cur.read_number());
            cur.skip_space();
            if (cur.pos < text.size() && text[cur.pos] == ',') {
                cur.pos++;
                continue;
            }
            if (cur.pos < text.size() && text[cur.pos] == ')') {
                cur.pos++;
                break;
            }
            cur.fail("expected ',' or ')'");
        }
        if (coords.size() != static_cast<size_t>(layout.dimension)) {
            cur.fail("expected " + std::to_string(layout.dimension) + " coordinates");
        }
        for (size_t c : coords) {
            if (c < 1 || c > layout.n) {
                cur.fail("coordinate " + std::to_string(c) + " outside 1.." + std::to_string(layout.n));
            }
        }
        size_t site = layout.dimension == 2 ? layout.site_index(coords[0] - 1, coords[1] - 1)
                                            : layout.site_index(coords[0] - 1, coords[1] - 1, coords[2] - 1);
        result = pauli_mul(result, PauliOperator::single(layout.num_sites, site, pauli));
        cur.skip_separators();
        if (text.substr(cur.pos, 3) == "and") {
            cur.pos += 3;
            cur.skip_separators();
        }
    }
    return result;
}

}  // namespace

PauliOperator parse_operator(const CodeLayout &layout, std::string_view text) {
    if (text.find('(') != std::string_view::npos) {
        return parse_clauses(layout, text);
    }
    PauliOperator p = parse_pauli(text);
    if (p.num_sites != layout.num_sites) {
        throw ParseError(
            "operator has " + std::to_string(p.num_sites) + " site tokens but the code has " +
            std::to_string(layout.num_sites) + " sites");
    }
    return p;
}

std::string format_sparse(const CodeLayout &layout, const PauliOperator &p) {
    require_size(layout, p);
    std::string body;
    size_t ys = 0;
    for (size_t s = 0; s < p.num_sites; s++) {
        bool xb = p.x[s];
        bool zb = p.z[s];
        if (!xb && !zb) {
            continue;
        }
        char c = xb && zb ? 'Y' : xb ? 'X' : 'Z';
        ys += c == 'Y';
        auto co = layout.coords(s);
        if (!body.empty()) {
            body += ' ';
        }
        body += c;
        body += '(' + std::to_string(co[0] + 1) + ',' + std::to_string(co[1] + 1);
        if (layout.dimension == 3) {
            body += ',' + std::to_string(co[2] + 1);
        }
        body += ')';
    }
    if (body.empty()) {
        body = "I";
    }
    static constexpr const char *kPhaseText[4] = {"", "+i ", "-1 ", "-i "};
    uint8_t shown = static_cast<uint8_t>((p.phase_exp + 4 - (ys & 3)) & 3);
    return kPhaseText[shown] + body;
}

}  // namespace subsys
