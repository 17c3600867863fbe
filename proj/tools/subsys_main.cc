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

// Command-line front end. Uses only the C interface in subsys/subsys.h.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "subsys/subsys.h"

namespace {

using json = nlohmann::ordered_json;

constexpr int kExitUsage = 2;
constexpr int kExitInfeasible = 3;
constexpr int kExitInternal = 1;

const char *const kErrorSyntaxHelp =
    "Error operators are either a dense token string with one of I,X,Y,Z (or _)\n"
    "per site in index order, e.g. \"IIIIZIIII\", or a list of clauses\n"
    "\"P at (row,col)\" / \"P(row,col)\" (three coordinates in 3D) with one-based\n"
    "coordinates, e.g. \"Z at (2,2), X at (1,3)\". An optional phase prefix\n"
    "(+i, -1, -i) may precede either form.";

struct CliFailure {
    int exit_code;
    std::string message;
};

void check(subsys_status status) {
    if (status == SUBSYS_OK) {
        return;
    }
    int code = kExitInternal;
    switch (status) {
        case SUBSYS_ERR_INVALID_ARGUMENT:
        case SUBSYS_ERR_PARSE:
        case SUBSYS_ERR_UNSUPPORTED:
            code = kExitUsage;
            break;
        case SUBSYS_ERR_INFEASIBLE:
            code = kExitInfeasible;
            break;
        default:
            break;
    }
    throw CliFailure{code, std::string(subsys_status_name(status)) + ": " + subsys_last_error()};
}

template <typename T, void (*Destroy)(T *)>
struct Deleter {
    void operator()(T *p) const {
        Destroy(p);
    }
};
using CodePtr = std::unique_ptr<subsys_code, Deleter<subsys_code, subsys_code_destroy>>;
using PauliPtr = std::unique_ptr<subsys_pauli, Deleter<subsys_pauli, subsys_pauli_destroy>>;
using DecodePtr = std::unique_ptr<subsys_decode_result, Deleter<subsys_decode_result, subsys_decode_result_destroy>>;
using ScanPtr = std::unique_ptr<subsys_scan, Deleter<subsys_scan, subsys_scan_destroy>>;
using SpectrumPtr = std::unique_ptr<subsys_spectrum, Deleter<subsys_spectrum, subsys_spectrum_destroy>>;
using IsingPtr = std::unique_ptr<subsys_ising_run, Deleter<subsys_ising_run, subsys_ising_run_destroy>>;
using BifurcationPtr = std::unique_ptr<subsys_bifurcation, Deleter<subsys_bifurcation, subsys_bifurcation_destroy>>;

CodePtr make_code(int dim, size_t n) {
    subsys_code *code = nullptr;
    check(subsys_code_create(dim, n, &code));
    return CodePtr(code);
}

PauliPtr parse_error(const subsys_code *code, const std::string &text) {
    subsys_pauli *p = nullptr;
    check(subsys_pauli_parse_for_code(code, text.c_str(), &p));
    return PauliPtr(p);
}

std::string sparse(const subsys_code *code, const subsys_pauli *p) {
    size_t length = 0;
    subsys_pauli_format_sparse(code, p, nullptr, 0, &length);
    std::string out(length + 1, '\0');
    check(subsys_pauli_format_sparse(code, p, out.data(), out.size(), &length));
    out.resize(length);
    return out;
}

std::string number(double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.12g", v);
    return buf;
}

/// Reads TOML/INI as usual, and also JSON: either a flat object of option
/// values or a run manifest (whose "params" object is used). Keys without a
/// section are attached to the subcommand being run.
class ConfigReader : public CLI::ConfigTOML {
   public:
    std::string default_section;

    std::vector<CLI::ConfigItem> from_config(std::istream &input) const override {
        std::string text((std::istreambuf_iterator<char>(input)), std::istreambuf_iterator<char>());
        size_t first = text.find_first_not_of(" \t\r\n");
        std::vector<CLI::ConfigItem> items;
        if (first != std::string::npos && text[first] == '{') {
            json doc;
            try {
                doc = json::parse(text);
            } catch (const json::exception &e) {
                throw CLI::ConversionError("config", std::string("invalid JSON config: ") + e.what());
            }
            std::string section = default_section;
            if (doc.contains("subcommand") && doc.contains("params")) {
                section = doc["subcommand"].get<std::string>();
                doc = doc["params"];
            }
            for (const auto &[key, value] : doc.items()) {
                CLI::ConfigItem item;
                item.parents = {section};
                item.name = key;
                auto to_text = [](const json &v) {
                    return v.is_string() ? v.get<std::string>() : v.dump();
                };
                if (value.is_array()) {
                    for (const auto &v : value) {
                        item.inputs.push_back(to_text(v));
                    }
                } else {
                    item.inputs.push_back(to_text(value));
                }
                items.push_back(std::move(item));
            }
            return items;
        }
        std::istringstream again(text);
        items = CLI::ConfigTOML::from_config(again);
        for (auto &item : items) {
            if (item.parents.empty() && !default_section.empty() && item.name != "config") {
                item.parents = {default_section};
            }
        }
        return items;
    }
};

/// Output destination plus manifest bookkeeping for one run.
struct Run {
    CLI::App *app = nullptr;
    std::string subcommand;
    std::string out;
    std::string name;
    bool as_json = false;
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    std::vector<std::string> outputs;

    /// Resolves the output path; `default_file` is used inside
    /// results/<subcommand>/<name>/ when --out is not given.
    std::string resolve(const std::string &default_name, const std::string &default_file) const {
        if (!out.empty()) {
            return out;
        }
        return "results/" + subcommand + "/" + (name.empty() ? default_name : name) + "/" + default_file;
    }

    void write_file(const std::string &path, const std::string &content) {
        std::filesystem::path p(path);
        if (p.has_parent_path()) {
            std::filesystem::create_directories(p.parent_path());
        }
        std::ofstream f(path, std::ios::binary);
        if (!f) {
            throw CliFailure{kExitUsage, "cannot open output file: " + path};
        }
        f << content;
        if (!f) {
            throw CliFailure{kExitInternal, "failed writing output file: " + path};
        }
        outputs.push_back(path);
    }

    json params() const {
        json out_params = json::object();
        for (const CLI::Option *opt : app->get_options()) {
            std::string key = opt->get_single_name();
            if (key.empty() || key == "help" || key == "config") {
                continue;
            }
            if (opt->count() > 0) {
                const auto &results = opt->results();
                if (opt->get_expected_max() > 1) {
                    out_params[key] = results;
                } else if (!results.empty()) {
                    out_params[key] = results.back();
                }
            } else if (!opt->get_default_str().empty()) {
                out_params[key] = opt->get_default_str();
            }
        }
        return out_params;
    }

    void write_manifest(const std::string &output_path, const json &extra = json::object()) {
        double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        json m;
        m["subcommand"] = subcommand;
        m["params"] = params();
        if (extra.contains("seed")) {
            m["seed"] = extra["seed"];
        } else {
            m["seed"] = nullptr;
        }
        m["version"] = subsys_version();
        m["outputs"] = outputs;
        m["duration_seconds"] = seconds;
        std::string path = output_path + ".manifest.json";
        std::filesystem::path p(path);
        if (p.has_parent_path()) {
            std::filesystem::create_directories(p.parent_path());
        }
        std::ofstream f(path, std::ios::binary);
        f << m.dump(2) << "\n";
    }

    /// Prints `text` to stdout, or writes it to --out with a manifest.
    void emit(const std::string &text, const json &extra = json::object()) {
        if (out.empty()) {
            std::cout << text;
            return;
        }
        write_file(out, text);
        write_manifest(out, extra);
    }
};

void add_common(CLI::App *sub, Run &run, bool with_json) {
    sub->add_option("--out", run.out, "Output file (manifest written to <out>.manifest.json)");
    if (with_json) {
        sub->add_flag("--json", run.as_json, "Emit JSON instead of text");
    }
}

std::string join_numbers(const std::vector<double> &values) {
    std::string s;
    for (size_t k = 0; k < values.size(); k++) {
        s += (k ? "-" : "") + number(values[k]);
    }
    return s;
}

template <typename T>
std::string join_ints(const std::vector<T> &values) {
    std::string s;
    for (size_t k = 0; k < values.size(); k++) {
        s += (k ? "-" : "") + std::to_string(values[k]);
    }
    return s;
}

// ---- subcommands ----

struct CodeArgs {
    int dim = 2;
    size_t n = 3;
};

void add_code_args(CLI::App *sub, CodeArgs &args) {
    sub->add_option("--dim", args.dim, "Lattice dimension (2 or 3)")->capture_default_str()->check(CLI::IsMember({2, 3}));
    sub->add_option("--n", args.n, "Linear size (odd in 3D)")->capture_default_str()->check(CLI::Range(2, 1 << 20));
}

void run_code_info(Run &run, const CodeArgs &args) {
    CodePtr code = make_code(args.dim, args.n);
    subsys_code_info info;
    check(subsys_code_get_info(code.get(), &info));
    json doc;
    doc["dimension"] = info.dimension;
    doc["n"] = info.n;
    doc["num_sites"] = info.num_sites;
    doc["num_stabilizer_generators"] = info.num_stabilizer_generators;
    doc["num_gauge_generators"] = info.num_gauge_generators;
    doc["parameters"] = "[" + std::to_string(info.num_sites) + "," + std::to_string(info.n) + ",1]";
    json logicals = json::object();
    for (char which : {'X', 'Z', 'Y'}) {
        subsys_pauli *p = nullptr;
        check(subsys_code_logical(code.get(), which, &p));
        PauliPtr holder(p);
        logicals[std::string(1, which)] = sparse(code.get(), p);
    }
    doc["logical_operators"] = logicals;
    std::ostringstream text;
    if (run.as_json) {
        text << doc.dump(2) << "\n";
    } else {
        text << "code: " << info.dimension << "D, n=" << info.n << ", " << doc["parameters"].get<std::string>()
             << "\n";
        text << "sites: " << info.num_sites << "\n";
        text << "stabilizer generators: " << info.num_stabilizer_generators << "\n";
        text << "gauge generators: " << info.num_gauge_generators << "\n";
        for (const auto &[k, v] : logicals.items()) {
            text << "logical " << k << ": " << v.get<std::string>() << "\n";
        }
    }
    run.emit(text.str());
}

void run_classify(Run &run, const CodeArgs &args, const std::string &error) {
    CodePtr code = make_code(args.dim, args.n);
    PauliPtr p = parse_error(code.get(), error);
    subsys_class_tag tag;
    char syndrome[4096];
    size_t length = 0;
    check(subsys_classify(code.get(), p.get(), &tag, syndrome, sizeof(syndrome), &length));
    std::ostringstream text;
    if (run.as_json) {
        json doc;
        doc["operator"] = sparse(code.get(), p.get());
        doc["syndrome"] = syndrome;
        doc["class"] = subsys_class_tag_name(tag);
        text << doc.dump(2) << "\n";
    } else {
        text << "operator: " << sparse(code.get(), p.get()) << "\n";
        text << "syndrome: " << syndrome << "\n";
        text << "class: " << subsys_class_tag_name(tag) << "\n";
    }
    run.emit(text.str());
}

void run_decode(Run &run, const CodeArgs &args, const std::string &error) {
    CodePtr code = make_code(args.dim, args.n);
    PauliPtr p = parse_error(code.get(), error);
    subsys_decode_result *raw = nullptr;
    check(subsys_decode(code.get(), p.get(), &raw));
    DecodePtr result(raw);
    std::ostringstream text;
    if (run.as_json) {
        json doc;
        doc["error"] = sparse(code.get(), p.get());
        doc["syndrome"] = subsys_decode_result_syndrome(raw);
        doc["inferred_e"] = subsys_decode_result_inferred_e(raw);
        doc["inferred_f"] = subsys_decode_result_inferred_f(raw);
        doc["correction"] = subsys_decode_result_correction(raw);
        doc["correction_dense"] = subsys_decode_result_correction_dense(raw);
        doc["residual"] = subsys_class_tag_name(subsys_decode_result_residual(raw));
        text << doc.dump(2) << "\n";
    } else {
        text << "error: " << sparse(code.get(), p.get()) << "\n";
        text << "syndrome: " << subsys_decode_result_syndrome(raw) << "\n";
        text << "inferred e: " << subsys_decode_result_inferred_e(raw) << "\n";
        text << "inferred f: " << subsys_decode_result_inferred_f(raw) << "\n";
        text << "correction: " << subsys_decode_result_correction(raw) << "\n";
        text << "residual: " << subsys_class_tag_name(subsys_decode_result_residual(raw)) << "\n";
    }
    run.emit(text.str());
}

struct ThresholdArgs {
    int dim = 2;
    std::vector<size_t> n_list;
    std::vector<double> p_list;
    uint64_t trials = 100000;
    uint64_t seed = 0;
    std::string noise = "z";
    unsigned threads = 0;
};

void run_threshold(Run &run, const ThresholdArgs &args) {
    subsys_scan *raw = nullptr;
    check(subsys_threshold_scan(
        args.dim,
        args.n_list.data(),
        args.n_list.size(),
        args.p_list.data(),
        args.p_list.size(),
        args.noise.c_str(),
        args.trials,
        args.seed,
        args.threads,
        &raw));
    ScanPtr scan(raw);
    std::string default_name = "dim" + std::to_string(args.dim) + "_n" + join_ints(args.n_list) + "_p" +
                               join_numbers(args.p_list) + "_" + args.noise + "_seed" + std::to_string(args.seed);
    std::string path = run.resolve(default_name, "threshold.csv");
    run.write_file(path, subsys_scan_csv(raw));
    run.write_manifest(path, json{{"seed", args.seed}});

    std::printf("%-4s %-4s %-10s %-10s %-14s %-33s %s\n", "dim", "n", "p_x", "p_z", "failure_rate", "95% CI", "analytic");
    for (size_t k = 0; k < subsys_scan_size(raw); k++) {
        subsys_scan_record r;
        check(subsys_scan_get(raw, k, &r));
        std::string analytic = "-";
        if (r.n % 2 == 1 && (r.p_x == 0.0 || r.p_z == 0.0)) {
            CodePtr code = make_code(r.dimension, r.n);
            double value = 0;
            check(subsys_analytic_failure_prob(code.get(), r.p_x == 0.0 ? r.p_z : r.p_x, &value));
            analytic = number(value);
        }
        std::printf(
            "%-4d %-4zu %-10s %-10s %-14s [%-15s, %-15s] %s\n",
            r.dimension,
            r.n,
            number(r.p_x).c_str(),
            number(r.p_z).c_str(),
            number(r.stats.failure_rate).c_str(),
            number(r.stats.ci_low).c_str(),
            number(r.stats.ci_high).c_str(),
            analytic.c_str());
    }
    std::cout << "wrote " << path << "\n";
}

struct DiagArgs {
    int dim = 2;
    size_t n = 2;
    double lambda = 1.0;
};

void run_diag(Run &run, const DiagArgs &args) {
    CodePtr code = make_code(args.dim, args.n);
    subsys_spectrum *raw = nullptr;
    check(subsys_diagonalize(code.get(), args.lambda, &raw));
    SpectrumPtr spectrum(raw);
    subsys_spectrum_summary summary;
    check(subsys_spectrum_get_summary(raw, &summary));
    std::string default_name = "dim" + std::to_string(args.dim) + "_n" + std::to_string(args.n) + "_lambda" +
                               number(args.lambda);
    std::string path = run.resolve(default_name, "diag.json");
    run.write_file(path, subsys_spectrum_json(raw));
    run.write_manifest(path);
    std::cout << "hilbert dimension: " << summary.hilbert_dimension << "\n";
    std::cout << "distinct levels: " << summary.num_levels << "\n";
    std::cout << "ground energy: " << number(summary.ground_energy) << " (multiplicity "
              << summary.ground_multiplicity << ")\n";
    std::cout << "all multiplicities even: " << (summary.all_multiplicities_even ? "yes" : "no") << "\n";
    std::cout << "ground state in all +1 sector: " << (summary.ground_in_trivial_sector ? "yes" : "no") << "\n";
    std::cout << "wrote " << path << "\n";
}

struct MeanFieldArgs {
    size_t n = 5;
    double lambda = 1.0;
    subsys_mean_field_params params{1.0, 1.0, 1.0, 1.0};
};

void add_mean_field_params(CLI::App *sub, subsys_mean_field_params &params, double &lambda) {
    sub->add_option("--lambda", lambda, "Overall coupling strength")->capture_default_str();
    sub->add_option("--c-xx", params.c_xx, "Mean-field value of XX bonds along x")->capture_default_str();
    sub->add_option("--c-xy", params.c_xy, "Mean-field value of XX bonds along y")->capture_default_str();
    sub->add_option("--c-zy", params.c_zy, "Mean-field value of ZZ bonds along y")->capture_default_str();
    sub->add_option("--c-zz", params.c_zz, "Mean-field value of ZZ bonds along z")->capture_default_str();
}

void run_meanfield(Run &run, const MeanFieldArgs &args, const std::string &error) {
    CodePtr code = make_code(3, args.n);
    PauliPtr p = parse_error(code.get(), error);
    double delta = 0;
    check(subsys_mean_field_delta_e(code.get(), args.lambda, &args.params, p.get(), &delta));
    std::ostringstream text;
    if (run.as_json) {
        json doc;
        doc["n"] = args.n;
        doc["error"] = sparse(code.get(), p.get());
        doc["lambda"] = args.lambda;
        doc["delta_e"] = delta;
        text << doc.dump(2) << "\n";
    } else {
        text << "error: " << sparse(code.get(), p.get()) << "\n";
        text << "delta_e: " << number(delta) << "\n";
    }
    run.emit(text.str());
}

struct IsingArgs {
    int dim = 2;
    size_t L = 32;
    double J = 1.0;
    double T = 1.5;
    size_t sweeps = 10000;
    uint64_t seed = 0;
};

void run_ising(Run &run, const IsingArgs &args) {
    subsys_ising_run *raw = nullptr;
    check(subsys_ising_simulate(args.dim, args.L, args.J, args.T, args.sweeps, args.seed, &raw));
    IsingPtr result(raw);
    std::string default_name = "dim" + std::to_string(args.dim) + "_L" + std::to_string(args.L) + "_T" +
                               number(args.T) + "_seed" + std::to_string(args.seed);
    std::string path = run.resolve(default_name, "ising.csv");
    run.write_file(path, subsys_ising_run_csv(raw));
    run.write_manifest(path, json{{"seed", args.seed}});
    size_t len = subsys_ising_run_length(raw);
    const double *m = subsys_ising_run_magnetization(raw);
    double sum = 0, abs_sum = 0;
    for (size_t k = 0; k < len; k++) {
        sum += m[k];
        abs_sum += std::fabs(m[k]);
    }
    if (len > 0) {
        std::cout << "mean m: " << number(sum / len) << "\n";
        std::cout << "mean |m|: " << number(abs_sum / len) << "\n";
        std::cout << "final m: " << number(m[len - 1]) << "\n";
    }
    std::cout << "wrote " << path << "\n";
}

struct BifurcationArgs {
    subsys_meanfield_run run{9, {1.0, 1.0, 1.0, 1.0}, 1.0, 100, 1000, 1, 0};
    std::vector<double> temperatures;
};

void run_bifurcation(Run &run, const BifurcationArgs &args) {
    subsys_bifurcation *raw = nullptr;
    check(subsys_bifurcation_scan(&args.run, args.temperatures.data(), args.temperatures.size(), &raw));
    BifurcationPtr scan(raw);
    std::string default_name =
        "n" + std::to_string(args.run.n) + "_T" + join_numbers(args.temperatures) + "_seed" + std::to_string(args.run.seed);
    std::string path = run.resolve(default_name, "bifurcation.csv");
    run.write_file(path, subsys_bifurcation_csv(raw));
    run.write_manifest(path, json{{"seed", args.run.seed}});
    std::printf("%-10s %-8s %-16s %s\n", "T", "encoded", "order_parameter", "stderr");
    for (size_t k = 0; k < subsys_bifurcation_size(raw); k++) {
        subsys_bifurcation_record r;
        check(subsys_bifurcation_get(raw, k, &r));
        std::printf(
            "%-10s %-8d %-16s %s\n",
            number(r.temperature).c_str(),
            r.encoded,
            number(r.order_parameter).c_str(),
            number(r.standard_error).c_str());
    }
    std::cout << "wrote " << path << "\n";
}

/// Returns the first argument naming a subcommand, used to attach
/// section-less config keys to it.
std::string find_subcommand(const CLI::App &app, int argc, char **argv) {
    for (int k = 1; k < argc; k++) {
        std::string a = argv[k];
        for (const CLI::App *sub : app.get_subcommands({})) {
            if (sub->get_name() == a) {
                return a;
            }
        }
    }
    return "";
}

}  // namespace

int main(int argc, char **argv) {
    CLI::App app{"Simulation tools for lattice subsystem codes and their Hamiltonians."};
    app.require_subcommand(1);
    app.footer(kErrorSyntaxHelp);
    auto reader = std::make_shared<ConfigReader>();
    app.config_formatter(reader);
    app.set_config(
        "--config",
        "",
        "Read option values from a TOML/INI file or a JSON object (a run manifest works too); flags win");
    app.set_version_flag("--version", std::string(subsys_version()));

    Run run;
    auto subcommand = [&](const char *name, const char *description) {
        CLI::App *sub = app.add_subcommand(name, description);
        sub->fallthrough();
        sub->footer(kErrorSyntaxHelp);
        return sub;
    };

    CodeArgs code_args;
    std::string error_text;

    CLI::App *code_info = subcommand("code-info", "Describe a code: sizes, generator counts, logical operators");
    add_code_args(code_info, code_args);
    add_common(code_info, run, true);

    CLI::App *classify = subcommand("classify", "Syndrome and logical class of a Pauli operator");
    add_code_args(classify, code_args);
    classify->add_option("--error", error_text, "Pauli operator (see syntax below)")->required();
    add_common(classify, run, true);

    CLI::App *decode = subcommand("decode", "Decode an error: syndrome, correction and residual class");
    add_code_args(decode, code_args);
    decode->add_option("--error", error_text, "Pauli error (see syntax below)")->required();
    add_common(decode, run, true);

    ThresholdArgs threshold_args;
    CLI::App *threshold = subcommand("threshold", "Monte-Carlo failure rate over a grid of n and p");
    threshold->add_option("--dim", threshold_args.dim, "Lattice dimension (2 or 3)")
        ->capture_default_str()
        ->check(CLI::IsMember({2, 3}));
    threshold->add_option("--n", threshold_args.n_list, "Comma-separated sizes")->required()->delimiter(',');
    threshold->add_option("--p", threshold_args.p_list, "Comma-separated error rates")
        ->required()
        ->delimiter(',')
        ->check(CLI::Range(0.0, 1.0));
    threshold->add_option("--trials", threshold_args.trials, "Trials per point")->capture_default_str()->check(CLI::PositiveNumber);
    threshold->add_option("--seed", threshold_args.seed, "Master seed")->required();
    threshold->add_option("--noise", threshold_args.noise, "Noise: z, x, xz (both at p) or depolarizing")
        ->capture_default_str()
        ->check(CLI::IsMember({"z", "x", "xz", "depolarizing"}));
    threshold->add_option("--threads", threshold_args.threads, "Worker threads, 0 = all cores (results do not change)")
        ->capture_default_str();
    threshold->add_option("--name", run.name, "Run name for the default output directory");
    add_common(threshold, run, false);

    DiagArgs diag_args;
    CLI::App *diag = subcommand("diag", "Exact diagonalization of the 2D Hamiltonian, resolved by stabilizer sector");
    diag->add_option("--dim", diag_args.dim, "Lattice dimension")->capture_default_str()->check(CLI::IsMember({2, 3}));
    diag->add_option("--n", diag_args.n, "Linear size")->capture_default_str()->check(CLI::Range(2, 1 << 20));
    diag->add_option("--lambda", diag_args.lambda, "Coupling strength")->capture_default_str();
    diag->add_option("--name", run.name, "Run name for the default output directory");
    add_common(diag, run, false);

    MeanFieldArgs mf_args;
    CLI::App *meanfield = subcommand("meanfield", "Mean-field energy cost of an error in the 3D code");
    meanfield->add_option("--n", mf_args.n, "Linear size (odd)")->capture_default_str()->check(CLI::Range(3, 1 << 20));
    meanfield->add_option("--error", error_text, "Pauli error (see syntax below)")->required();
    add_mean_field_params(meanfield, mf_args.params, mf_args.lambda);
    add_common(meanfield, run, true);

    IsingArgs ising_args;
    CLI::App *ising = subcommand("ising", "Metropolis magnetization series of a 1D or 2D Ising memory");
    ising->add_option("--dim", ising_args.dim, "1 or 2")->capture_default_str()->check(CLI::IsMember({1, 2}));
    ising->add_option("--L", ising_args.L, "Side length")->capture_default_str()->check(CLI::PositiveNumber);
    ising->add_option("--J", ising_args.J, "Coupling")->capture_default_str();
    ising->add_option("--T", ising_args.T, "Temperature")->capture_default_str()->check(CLI::PositiveNumber);
    ising->add_option("--sweeps", ising_args.sweeps, "Number of sweeps")->capture_default_str();
    ising->add_option("--seed", ising_args.seed, "Seed")->required();
    ising->add_option("--name", run.name, "Run name for the default output directory");
    add_common(ising, run, false);

    BifurcationArgs bif_args;
    CLI::App *bifurcation = subcommand("bifurcation", "Order parameter of the mean-field code versus temperature");
    bifurcation->add_option("--n", bif_args.run.n, "Linear size (odd)")->capture_default_str()->check(CLI::Range(3, 1 << 20));
    add_mean_field_params(bifurcation, bif_args.run.params, bif_args.run.lambda);
    bifurcation->add_option("--T", bif_args.temperatures, "Comma-separated temperatures")
        ->required()
        ->delimiter(',')
        ->check(CLI::PositiveNumber);
    bifurcation->add_option("--equilibration", bif_args.run.equilibration_sweeps, "Sweeps before sampling")
        ->capture_default_str();
    bifurcation->add_option("--samples", bif_args.run.num_samples, "Samples per run")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bifurcation->add_option("--sample-every", bif_args.run.sample_every, "Sweeps between samples")
        ->capture_default_str()
        ->check(CLI::PositiveNumber);
    bifurcation->add_option("--seed", bif_args.run.seed, "Seed")->required();
    bifurcation->add_option("--name", run.name, "Run name for the default output directory");
    add_common(bifurcation, run, false);

    reader->default_section = find_subcommand(app, argc, argv);

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        int code = app.exit(e);
        return code == 0 ? 0 : kExitUsage;
    }

    try {
        CLI::App *chosen = app.get_subcommands().front();
        run.app = chosen;
        run.subcommand = chosen->get_name();
        if (chosen == code_info) {
            run_code_info(run, code_args);
        } else if (chosen == classify) {
            run_classify(run, code_args, error_text);
        } else if (chosen == decode) {
            run_decode(run, code_args, error_text);
        } else if (chosen == threshold) {
            run_threshold(run, threshold_args);
        } else if (chosen == diag) {
            run_diag(run, diag_args);
        } else if (chosen == meanfield) {
            run_meanfield(run, mf_args, error_text);
        } else if (chosen == ising) {
            run_ising(run, ising_args);
        } else if (chosen == bifurcation) {
            run_bifurcation(run, bif_args);
        }
    } catch (const CliFailure &e) {
        std::cerr << "error: " << e.message << "\n";
        return e.exit_code;
    } catch (const std::exception &e) {
        std::cerr << "error: " << e.what() << "\n";
        return kExitInternal;
    }
    return 0;
}
