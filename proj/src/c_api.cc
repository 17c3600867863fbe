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

#include "subsys/subsys.h"

#include <cstring>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "subsys/decoder.h"
#include "subsys/error.h"
#include "subsys/hamiltonian.h"
#include "subsys/lattice_code.h"
#include "subsys/noise_mc.h"
#include "subsys/pauli.h"
#include "subsys/thermal.h"

#ifndef SUBSYS_VERSION
#define SUBSYS_VERSION "0.0.0"
#endif

struct subsys_code {
    subsys::CodeLayout layout;
};

struct subsys_pauli {
    subsys::PauliOperator op;
};

struct subsys_decode_result {
    std::string syndrome;
    std::string inferred_e;
    std::string inferred_f;
    std::string correction;
    std::string correction_dense;
    subsys_class_tag residual;
};

struct subsys_scan {
    std::vector<subsys::ScanRecord> records;
    std::string csv;
};

struct subsys_spectrum {
    subsys::SectorReport report;
    std::string json;
};

struct subsys_ising_run {
    std::vector<double> series;
    std::string csv;
};

struct subsys_bifurcation {
    std::vector<subsys::BifurcationRecord> records;
    std::string csv;
};

namespace {

thread_local std::string last_error;

struct NullArgument : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

template <typename T>
void require(const T *ptr, const char *name) {
    if (ptr == nullptr) {
        throw NullArgument(std::string(name) + " must not be null");
    }
}

subsys_status fail(subsys_status status, const char *message) {
    last_error = message;
    return status;
}

template <typename Fn>
subsys_status guarded(Fn &&fn) {
    try {
        fn();
        return SUBSYS_OK;
    } catch (const subsys::ParseError &e) {
        return fail(SUBSYS_ERR_PARSE, e.what());
    } catch (const subsys::Unsupported &e) {
        return fail(SUBSYS_ERR_UNSUPPORTED, e.what());
    } catch (const subsys::InfeasibleSize &e) {
        return fail(SUBSYS_ERR_INFEASIBLE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(SUBSYS_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::exception &e) {
        return fail(SUBSYS_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(SUBSYS_ERR_INTERNAL, "unknown error");
    }
}

subsys_status write_string(const std::string &text, char *buffer, size_t capacity, size_t *length) {
    if (length != nullptr) {
        *length = text.size();
    }
    if (buffer == nullptr || capacity <= text.size()) {
        return fail(SUBSYS_ERR_BUFFER_TOO_SMALL, "output buffer too small");
    }
    std::memcpy(buffer, text.c_str(), text.size() + 1);
    return SUBSYS_OK;
}

subsys_class_tag to_c(subsys::ClassTag tag) {
    switch (tag) {
        case subsys::ClassTag::kGauge:
            return SUBSYS_CLASS_GAUGE;
        case subsys::ClassTag::kLogicalX:
            return SUBSYS_CLASS_LOGICAL_X;
        case subsys::ClassTag::kLogicalY:
            return SUBSYS_CLASS_LOGICAL_Y;
        case subsys::ClassTag::kLogicalZ:
            return SUBSYS_CLASS_LOGICAL_Z;
        case subsys::ClassTag::kDetectable:
            break;
    }
    return SUBSYS_CLASS_DETECTABLE;
}

subsys_trial_stats to_c(const subsys::TrialStats &s) {
    return subsys_trial_stats{
        s.trials, s.seed, s.counts[0], s.counts[1], s.counts[2], s.counts[3], s.failure_rate, s.ci_low, s.ci_high};
}

subsys::MeanFieldParams to_cpp(const subsys_mean_field_params &p) {
    subsys::MeanFieldParams out;
    out.c_xx = p.c_xx;
    out.c_xy = p.c_xy;
    out.c_zy = p.c_zy;
    out.c_zz = p.c_zz;
    return out;
}

subsys::MeanFieldRun to_cpp(const subsys_meanfield_run &r) {
    subsys::MeanFieldRun out;
    out.n = r.n;
    out.params = to_cpp(r.params);
    out.lambda = r.lambda;
    out.equilibration_sweeps = r.equilibration_sweeps;
    out.num_samples = r.num_samples;
    out.sample_every = r.sample_every;
    out.seed = r.seed;
    return out;
}

template <typename Handle, typename... Args>
Handle *make_handle(Args &&...args) {
    return new Handle{std::forward<Args>(args)...};
}

}  // namespace

extern "C" {

const char *subsys_version(void) {
    return SUBSYS_VERSION;
}

const char *subsys_last_error(void) {
    return last_error.c_str();
}

const char *subsys_status_name(subsys_status status) {
    switch (status) {
        case SUBSYS_OK:
            return "ok";
        case SUBSYS_ERR_INVALID_ARGUMENT:
            return "invalid argument";
        case SUBSYS_ERR_PARSE:
            return "parse error";
        case SUBSYS_ERR_UNSUPPORTED:
            return "unsupported";
        case SUBSYS_ERR_INFEASIBLE:
            return "infeasible size";
        case SUBSYS_ERR_BUFFER_TOO_SMALL:
            return "buffer too small";
        case SUBSYS_ERR_INTERNAL:
            return "internal error";
    }
    return "unknown status";
}

subsys_status subsys_code_create(int dimension, size_t n, subsys_code **out) {
    return guarded([&] {
        require(out, "out");
        *out = make_handle<subsys_code>(subsys::build_code(dimension, n));
    });
}

void subsys_code_destroy(subsys_code *code) {
    delete code;
}

subsys_status subsys_code_get_info(const subsys_code *code, subsys_code_info *out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        const auto &l = code->layout;
        *out = subsys_code_info{
            l.dimension, l.n, l.num_sites, l.num_stabilizer_generators(), l.num_gauge_generators()};
    });
}

subsys_status subsys_code_stabilizer(const subsys_code *code, size_t index, subsys_pauli **out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        const auto &l = code->layout;
        if (index >= l.num_stabilizer_generators()) {
            throw std::invalid_argument("stabilizer index out of range");
        }
        size_t k = l.n - 1;
        *out = make_handle<subsys_pauli>(
            index < k ? subsys::stabilizer_x(l, index) : subsys::stabilizer_z(l, index - k));
    });
}

subsys_status subsys_code_gauge_generator(const subsys_code *code, size_t index, subsys_pauli **out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        auto bonds = subsys::gauge_bonds(code->layout);
        if (index >= bonds.size()) {
            throw std::invalid_argument("gauge generator index out of range");
        }
        *out = make_handle<subsys_pauli>(subsys::bond_operator(code->layout, bonds[index]));
    });
}

subsys_status subsys_code_logical(const subsys_code *code, char which, subsys_pauli **out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        auto ops = subsys::logical_operators(code->layout);
        switch (which) {
            case 'X':
                *out = make_handle<subsys_pauli>(ops.x);
                break;
            case 'Y':
                *out = make_handle<subsys_pauli>(ops.y);
                break;
            case 'Z':
                *out = make_handle<subsys_pauli>(ops.z);
                break;
            default:
                throw std::invalid_argument("logical operator must be 'X', 'Y' or 'Z'");
        }
    });
}

subsys_status subsys_pauli_parse(const char *text, subsys_pauli **out) {
    return guarded([&] {
        require(text, "text");
        require(out, "out");
        *out = make_handle<subsys_pauli>(subsys::parse_pauli(text));
    });
}

subsys_status subsys_pauli_parse_for_code(const subsys_code *code, const char *text, subsys_pauli **out) {
    return guarded([&] {
        require(code, "code");
        require(text, "text");
        require(out, "out");
        *out = make_handle<subsys_pauli>(subsys::parse_operator(code->layout, text));
    });
}

void subsys_pauli_destroy(subsys_pauli *p) {
    delete p;
}

size_t subsys_pauli_num_sites(const subsys_pauli *p) {
    return p ? p->op.num_sites : 0;
}

size_t subsys_pauli_weight(const subsys_pauli *p) {
    return p ? subsys::weight(p->op) : 0;
}

subsys_status subsys_pauli_mul(const subsys_pauli *p, const subsys_pauli *q, subsys_pauli **out) {
    return guarded([&] {
        require(p, "p");
        require(q, "q");
        require(out, "out");
        *out = make_handle<subsys_pauli>(subsys::pauli_mul(p->op, q->op));
    });
}

subsys_status subsys_pauli_commutes(const subsys_pauli *p, const subsys_pauli *q, int *out) {
    return guarded([&] {
        require(p, "p");
        require(q, "q");
        require(out, "out");
        *out = subsys::commutes(p->op, q->op) ? 1 : 0;
    });
}

subsys_status subsys_pauli_format(const subsys_pauli *p, char *buffer, size_t capacity, size_t *length) {
    std::string text;
    subsys_status status = guarded([&] {
        require(p, "p");
        text = subsys::format_pauli(p->op);
    });
    return status != SUBSYS_OK ? status : write_string(text, buffer, capacity, length);
}

subsys_status subsys_pauli_format_sparse(
    const subsys_code *code, const subsys_pauli *p, char *buffer, size_t capacity, size_t *length) {
    std::string text;
    subsys_status status = guarded([&] {
        require(code, "code");
        require(p, "p");
        text = subsys::format_sparse(code->layout, p->op);
    });
    return status != SUBSYS_OK ? status : write_string(text, buffer, capacity, length);
}

const char *subsys_class_tag_name(subsys_class_tag tag) {
    switch (tag) {
        case SUBSYS_CLASS_GAUGE:
            return "Gauge";
        case SUBSYS_CLASS_LOGICAL_X:
            return "LogicalX";
        case SUBSYS_CLASS_LOGICAL_Y:
            return "LogicalY";
        case SUBSYS_CLASS_LOGICAL_Z:
            return "LogicalZ";
        case SUBSYS_CLASS_DETECTABLE:
            return "Detectable";
    }
    return "?";
}

subsys_status subsys_classify(
    const subsys_code *code,
    const subsys_pauli *p,
    subsys_class_tag *tag,
    char *syndrome_buffer,
    size_t capacity,
    size_t *length) {
    std::string syndrome;
    subsys_status status = guarded([&] {
        require(code, "code");
        require(p, "p");
        require(tag, "tag");
        auto cls = subsys::classify(code->layout, p->op);
        *tag = to_c(cls.tag);
        syndrome = cls.syndrome.str();
    });
    if (status != SUBSYS_OK || syndrome_buffer == nullptr) {
        if (length != nullptr && status == SUBSYS_OK) {
            *length = syndrome.size();
        }
        return status;
    }
    return write_string(syndrome, syndrome_buffer, capacity, length);
}

subsys_status subsys_decode(const subsys_code *code, const subsys_pauli *error, subsys_decode_result **out) {
    return guarded([&] {
        require(code, "code");
        require(error, "error");
        require(out, "out");
        const auto &l = code->layout;
        subsys::Syndrome syndrome = subsys::measure_syndrome(l, error->op);
        subsys::DecodeOutcome outcome = subsys::decode_syndrome(l, syndrome);
        subsys::LogicalClass residual = subsys::adjudicate(l, error->op, outcome);
        *out = make_handle<subsys_decode_result>(
            syndrome.str(),
            outcome.inferred_e.str(),
            outcome.inferred_f.str(),
            subsys::format_sparse(l, outcome.correction),
            subsys::format_pauli(outcome.correction),
            to_c(residual.tag));
    });
}

void subsys_decode_result_destroy(subsys_decode_result *result) {
    delete result;
}

const char *subsys_decode_result_syndrome(const subsys_decode_result *result) {
    return result ? result->syndrome.c_str() : nullptr;
}

const char *subsys_decode_result_inferred_e(const subsys_decode_result *result) {
    return result ? result->inferred_e.c_str() : nullptr;
}

const char *subsys_decode_result_inferred_f(const subsys_decode_result *result) {
    return result ? result->inferred_f.c_str() : nullptr;
}

const char *subsys_decode_result_correction(const subsys_decode_result *result) {
    return result ? result->correction.c_str() : nullptr;
}

const char *subsys_decode_result_correction_dense(const subsys_decode_result *result) {
    return result ? result->correction_dense.c_str() : nullptr;
}

subsys_class_tag subsys_decode_result_residual(const subsys_decode_result *result) {
    return result ? result->residual : SUBSYS_CLASS_DETECTABLE;
}

subsys_status subsys_analytic_failure_prob(const subsys_code *code, double p_flip, double *out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        *out = subsys::analytic_failure_prob(code->layout, p_flip);
    });
}

subsys_status subsys_run_trials(
    const subsys_code *code,
    const subsys_noise_model *model,
    uint64_t trials,
    uint64_t seed,
    unsigned threads,
    subsys_trial_stats *out) {
    return guarded([&] {
        require(code, "code");
        require(model, "model");
        require(out, "out");
        subsys::NoiseModel m;
        if (model->kind == SUBSYS_NOISE_INDEPENDENT_XZ) {
            m = subsys::NoiseModel::independent_xz(model->px, model->pz);
        } else if (model->kind == SUBSYS_NOISE_DEPOLARIZING) {
            m = subsys::NoiseModel::depolarizing(model->p);
        } else {
            throw std::invalid_argument("unknown noise kind");
        }
        *out = to_c(subsys::run_trials(code->layout, m, trials, seed, threads));
    });
}

subsys_status subsys_threshold_scan(
    int dimension,
    const size_t *n_list,
    size_t n_count,
    const double *p_list,
    size_t p_count,
    const char *noise,
    uint64_t trials,
    uint64_t seed,
    unsigned threads,
    subsys_scan **out) {
    return guarded([&] {
        require(n_list, "n_list");
        require(p_list, "p_list");
        require(out, "out");
        auto kind = subsys::parse_scan_noise(noise ? noise : "z");
        auto records = subsys::threshold_scan(
            dimension,
            std::vector<size_t>(n_list, n_list + n_count),
            std::vector<double>(p_list, p_list + p_count),
            trials,
            seed,
            kind,
            threads);
        std::ostringstream csv;
        subsys::write_threshold_csv(csv, records);
        *out = make_handle<subsys_scan>(std::move(records), csv.str());
    });
}

void subsys_scan_destroy(subsys_scan *scan) {
    delete scan;
}

size_t subsys_scan_size(const subsys_scan *scan) {
    return scan ? scan->records.size() : 0;
}

subsys_status subsys_scan_get(const subsys_scan *scan, size_t index, subsys_scan_record *out) {
    return guarded([&] {
        require(scan, "scan");
        require(out, "out");
        if (index >= scan->records.size()) {
            throw std::invalid_argument("scan record index out of range");
        }
        const auto &r = scan->records[index];
        *out = subsys_scan_record{r.dimension, r.n, r.p_x, r.p_z, to_c(r.stats)};
    });
}

const char *subsys_scan_csv(const subsys_scan *scan) {
    return scan ? scan->csv.c_str() : nullptr;
}

subsys_status subsys_diagonalize(const subsys_code *code, double lambda, subsys_spectrum **out) {
    return guarded([&] {
        require(code, "code");
        require(out, "out");
        auto report = subsys::diagonalize_small(subsys::build_hamiltonian(code->layout, lambda));
        std::ostringstream json;
        subsys::write_sector_report_json(json, report);
        *out = make_handle<subsys_spectrum>(std::move(report), json.str());
    });
}

void subsys_spectrum_destroy(subsys_spectrum *spectrum) {
    delete spectrum;
}

subsys_status subsys_spectrum_get_summary(const subsys_spectrum *spectrum, subsys_spectrum_summary *out) {
    return guarded([&] {
        require(spectrum, "spectrum");
        require(out, "out");
        const auto &r = spectrum->report;
        bool trivial = false;
        for (size_t s : r.ground_sectors) {
            bool all_plus = true;
            for (int v : r.sectors[s].sx) {
                all_plus = all_plus && v == 1;
            }
            for (int v : r.sectors[s].sz) {
                all_plus = all_plus && v == 1;
            }
            trivial = trivial || all_plus;
        }
        *out = subsys_spectrum_summary{
            r.hilbert_dimension,
            r.levels.size(),
            r.ground_energy,
            r.ground_multiplicity,
            r.all_multiplicities_even ? 1 : 0,
            r.sectors_match_full_spectrum ? 1 : 0,
            trivial ? 1 : 0};
    });
}

subsys_status subsys_spectrum_level(
    const subsys_spectrum *spectrum, size_t index, double *value, size_t *multiplicity) {
    return guarded([&] {
        require(spectrum, "spectrum");
        if (index >= spectrum->report.levels.size()) {
            throw std::invalid_argument("level index out of range");
        }
        const auto &level = spectrum->report.levels[index];
        if (value) {
            *value = level.value;
        }
        if (multiplicity) {
            *multiplicity = level.multiplicity;
        }
    });
}

const char *subsys_spectrum_json(const subsys_spectrum *spectrum) {
    return spectrum ? spectrum->json.c_str() : nullptr;
}

subsys_status subsys_mean_field_delta_e(
    const subsys_code *code,
    double lambda,
    const subsys_mean_field_params *params,
    const subsys_pauli *error,
    double *out) {
    return guarded([&] {
        require(code, "code");
        require(params, "params");
        require(error, "error");
        require(out, "out");
        auto spec = subsys::build_hamiltonian(code->layout, lambda);
        *out = subsys::mean_field_delta_e(spec, error->op, to_cpp(*params));
    });
}

subsys_status subsys_ising_simulate(
    int dimensionality, size_t L, double J, double T, size_t sweeps, uint64_t seed, subsys_ising_run **out) {
    return guarded([&] {
        require(out, "out");
        auto series = subsys::simulate_ising_memory(dimensionality, L, J, T, sweeps, seed);
        std::ostringstream csv;
        subsys::write_ising_csv(csv, dimensionality, L, J, T, series);
        *out = make_handle<subsys_ising_run>(std::move(series), csv.str());
    });
}

void subsys_ising_run_destroy(subsys_ising_run *run) {
    delete run;
}

size_t subsys_ising_run_length(const subsys_ising_run *run) {
    return run ? run->series.size() : 0;
}

const double *subsys_ising_run_magnetization(const subsys_ising_run *run) {
    return run ? run->series.data() : nullptr;
}

const char *subsys_ising_run_csv(const subsys_ising_run *run) {
    return run ? run->csv.c_str() : nullptr;
}

subsys_status subsys_meanfield_order_parameter(
    const subsys_meanfield_run *run, double T, int encoded_value, double *mean, double *standard_error) {
    return guarded([&] {
        require(run, "run");
        auto r = to_cpp(*run);
        r.temperature = T;
        r.encoded_value = encoded_value;
        auto op = subsys::summarize_order_parameter(subsys::simulate_meanfield_code(r));
        if (mean) {
            *mean = op.mean;
        }
        if (standard_error) {
            *standard_error = op.standard_error;
        }
    });
}

subsys_status subsys_bifurcation_scan(
    const subsys_meanfield_run *run, const double *temperatures, size_t count, subsys_bifurcation **out) {
    return guarded([&] {
        require(run, "run");
        require(temperatures, "temperatures");
        require(out, "out");
        auto records =
            subsys::bifurcation_scan(to_cpp(*run), std::vector<double>(temperatures, temperatures + count));
        std::ostringstream csv;
        subsys::write_bifurcation_csv(csv, records);
        *out = make_handle<subsys_bifurcation>(std::move(records), csv.str());
    });
}

void subsys_bifurcation_destroy(subsys_bifurcation *scan) {
    delete scan;
}

size_t subsys_bifurcation_size(const subsys_bifurcation *scan) {
    return scan ? scan->records.size() : 0;
}

subsys_status subsys_bifurcation_get(const subsys_bifurcation *scan, size_t index, subsys_bifurcation_record *out) {
    return guarded([&] {
        require(scan, "scan");
        require(out, "out");
        if (index >= scan->records.size()) {
            throw std::invalid_argument("record index out of range");
        }
        const auto &r = scan->records[index];
        *out = subsys_bifurcation_record{
            r.n, r.lambda, r.c_zy, r.c_zz, r.temperature, r.encoded, r.samples, r.order_parameter, r.standard_error,
            r.seed};
    });
}

const char *subsys_bifurcation_csv(const subsys_bifurcation *scan) {
    return scan ? scan->csv.c_str() : nullptr;
}

}  // extern "C"
