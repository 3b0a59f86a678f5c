// Copyright 2026 The unop Authors
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

// unop: command-line front end over the C API.
//
//   unop unadd  --bits N --value S [--mode exact|sample] [--shots K] [--seed X]
//   unop unmul  --bits N --value P [...]
//   unop verify [--shots K] [--seed X] [--tamper ROW,COL]
//   unop bench  [--min-bits A] [--max-bits B] [--backend dense|sparse|both]
//
// Exit status: 0 success, 1 verification mismatch or failed check, 2 usage error.

#include "output.hpp"
#include "unop/unop.h"

#include "CLI11.hpp"
#include "json.hpp"

#include <chrono>
#include <cstdio>
#include <iostream>
#include <map>
#include <memory>
#include <stdexcept>
#include <optional>
#include <string>
#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>
#include <vector>

namespace {

using nlohmann::json;
using unop::cli::format_double;
using unop::cli::Format;
using unop::cli::Report;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

struct RunConfig {
    std::uint32_t bits = 0;
    std::uint64_t value = 0;
    std::string mode = "exact";
    std::uint64_t shots = 100000;
    std::uint64_t seed = 0;
    std::string backend = "sparse";
    std::string format = "json";
    bool timing = false;
    bool summary_only = false;
};

struct UsageError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct LibraryError : std::runtime_error {
    unop_status status;
    LibraryError(unop_status s, const std::string &what) : std::runtime_error(what), status(s) {}
};

void check(unop_status status) {
    if (status != UNOP_OK) {
        throw LibraryError(status, unop_last_error());
    }
}

Format parse_format(const std::string &f) {
    if (f == "csv") {
        return Format::csv;
    }
    if (f == "table") {
        return Format::table;
    }
    return Format::json;
}

unop_run_options to_options(const RunConfig &cfg) {
    unop_run_options opts;
    unop_run_options_init(&opts);
    opts.backend = cfg.backend == "dense" ? UNOP_BACKEND_DENSE : UNOP_BACKEND_SPARSE;
    if (cfg.mode == "sample") {
        if (cfg.shots == 0) {
            throw UsageError("--shots must be at least 1 in sample mode");
        }
        opts.mode = UNOP_MODE_SAMPLE;
        opts.shots = cfg.shots;
        opts.seed = cfg.seed;
    }
    return opts;
}

json config_json(const std::string &command, const RunConfig &cfg) {
    const bool sampled = cfg.mode == "sample";
    return json{{"command", command},
                {"bits", cfg.bits},
                {"value", cfg.value},
                {"mode", cfg.mode},
                {"shots", sampled ? json(cfg.shots) : json(nullptr)},
                {"seed", sampled ? json(cfg.seed) : json(nullptr)},
                {"backend", cfg.backend},
                {"format", cfg.format}};
}

json timing_json(bool enabled, std::chrono::steady_clock::time_point start) {
    if (!enabled) {
        return nullptr;
    }
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
}

bool verdict_ok(unop_verdict v) { return v == UNOP_VERDICT_MATCH || v == UNOP_VERDICT_SOUND; }

int cmd_unadd(const RunConfig &cfg) {
    if (cfg.bits == 0 || cfg.bits > 31 || (cfg.value >> cfg.bits) != 0) {
        throw UsageError("--value must satisfy 0 <= value < 2^bits with 1 <= bits <= 31");
    }
    const auto opts = to_options(cfg);
    const auto start = std::chrono::steady_clock::now();
    unop_unadd_result *raw = nullptr;
    check(unop_unadd(cfg.bits, cfg.value, &opts, &raw));
    std::unique_ptr<unop_unadd_result, decltype(&unop_unadd_result_free)> result(raw, unop_unadd_result_free);

    const bool sampled = opts.mode == UNOP_MODE_SAMPLE;
    const std::size_t n = unop_unadd_result_size(result.get());
    const unop_verdict verdict = unop_unadd_result_verdict(result.get());
    const std::uint64_t expected = unop_unadd_result_expected_size(result.get());

    Report report;
    report.header = {"a", "b", "c_in", sampled ? "count" : "probability"};
    json triples = json::array();
    json weights = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        unop_triple t;
        check(unop_unadd_result_at(result.get(), i, &t));
        if (!cfg.summary_only) {
            triples.push_back({t.a, t.b, t.c_in});
            if (sampled) {
                weights.push_back(t.count);
            } else {
                weights.push_back(t.probability);
            }
            report.rows.push_back({std::to_string(t.a), std::to_string(t.b), std::to_string(t.c_in),
                                   sampled ? std::to_string(t.count) : format_double(t.probability)});
        }
    }

    json results{{"cardinality", n}, {"expected_cardinality", expected}};
    if (!cfg.summary_only) {
        results["triples"] = std::move(triples);
        results[sampled ? "counts" : "probabilities"] = std::move(weights);
    }
    if (sampled) {
        results["shots"] = cfg.shots;
    }
    report.document = json{{"command", "unadd"},
                           {"config", config_json("unadd", cfg)},
                           {"results", std::move(results)},
                           {"oracle_verdict", unop_verdict_string(verdict)},
                           {"post_selection_probability", nullptr},
                           {"timing_ms", timing_json(cfg.timing, start)}};
    report.summary = {"cardinality: " + std::to_string(n) + " (expected " + std::to_string(expected) + ")",
                      std::string("oracle verdict: ") + unop_verdict_string(verdict)};
    std::cout << unop::cli::render(report, parse_format(cfg.format));
    return verdict_ok(verdict) ? kExitOk : kExitMismatch;
}

int cmd_unmul(const RunConfig &cfg) {
    if (cfg.bits == 0 || cfg.bits > 6 || (cfg.value >> (2 * cfg.bits)) != 0) {
        throw UsageError("--value must satisfy 0 <= value < 2^(2*bits) with 1 <= bits <= 6");
    }
    const auto opts = to_options(cfg);
    const auto start = std::chrono::steady_clock::now();
    unop_unmul_result *raw = nullptr;
    check(unop_unmultiply(cfg.bits, cfg.value, &opts, &raw));
    std::unique_ptr<unop_unmul_result, decltype(&unop_unmul_result_free)> result(raw, unop_unmul_result_free);

    const bool sampled = opts.mode == UNOP_MODE_SAMPLE;
    const std::size_t n = unop_unmul_result_size(result.get());
    const unop_verdict verdict = unop_unmul_result_verdict(result.get());
    const double success = unop_unmul_result_post_selection_probability(result.get());

    Report report;
    report.header = {"x", "y", sampled ? "count" : "probability"};
    json pairs = json::array();
    json weights = json::array();
    for (std::size_t i = 0; i < n; ++i) {
        unop_factor_pair p;
        check(unop_unmul_result_at(result.get(), i, &p));
        pairs.push_back({p.x, p.y});
        if (sampled) {
            weights.push_back(p.count);
        } else {
            weights.push_back(p.probability);
        }
        report.rows.push_back({std::to_string(p.x), std::to_string(p.y),
                               sampled ? std::to_string(p.count) : format_double(p.probability)});
    }

    json rejected = json::object();
    const std::pair<unop_rejection, const char *> kinds[] = {
        {UNOP_REJECT_CONST0, "const0"}, {UNOP_REJECT_CARRY, "c_in"}, {UNOP_REJECT_X_CONSISTENCY, "x_consistency"}};
    for (const auto &[kind, name] : kinds) {
        double prob = 0.0;
        std::uint64_t count = 0;
        check(unop_unmul_result_rejected(result.get(), kind, &prob, &count));
        rejected[name] = sampled ? json{{"count", count}, {"fraction", prob}} : json{{"probability", prob}};
        report.summary.push_back(std::string("rejected by ") + name + ": " +
                                 (sampled ? std::to_string(count) : format_double(prob)));
    }

    json results{{"pairs", std::move(pairs)},
                 {sampled ? "counts" : "probabilities", std::move(weights)},
                 {"rejected", std::move(rejected)},
                 {"outcomes_examined", unop_unmul_result_outcomes_examined(result.get())},
                 {"expected_pairs", unop_unmul_result_expected_size(result.get())}};
    if (sampled) {
        results["shots"] = cfg.shots;
    }
    report.document = json{{"command", "unmul"},
                           {"config", config_json("unmul", cfg)},
                           {"results", std::move(results)},
                           {"oracle_verdict", unop_verdict_string(verdict)},
                           {"post_selection_probability", success},
                           {"timing_ms", timing_json(cfg.timing, start)}};
    report.summary.push_back("post-selection probability: " + format_double(success));
    report.summary.push_back(std::string("oracle verdict: ") + unop_verdict_string(verdict));
    std::cout << unop::cli::render(report, parse_format(cfg.format));
    return verdict_ok(verdict) ? kExitOk : kExitMismatch;
}

struct VerifyConfig {
    std::uint64_t shots = 0;
    std::uint64_t seed = 1;
    std::vector<unsigned> tamper;
    double tamper_delta = 1e-3;
    std::string format = "json";
    bool timing = false;
};

int cmd_verify(const VerifyConfig &cfg) {
    unop_verify_options opts;
    unop_verify_options_init(&opts);
    opts.shots = cfg.shots;
    opts.seed = cfg.seed;
    if (!cfg.tamper.empty()) {
        if (cfg.tamper.size() != 2) {
            throw UsageError("--tamper expects ROW,COL");
        }
        opts.tamper = 1;
        opts.tamper_row = cfg.tamper[0];
        opts.tamper_col = cfg.tamper[1];
        opts.tamper_delta = cfg.tamper_delta;
    }
    const auto start = std::chrono::steady_clock::now();
    unop_verify_report *raw = nullptr;
    check(unop_verify(&opts, &raw));
    std::unique_ptr<unop_verify_report, decltype(&unop_verify_report_free)> report_handle(raw,
                                                                                       unop_verify_report_free);

    Report report;
    report.header = {"check", "status", "detail"};
    json checks = json::array();
    std::size_t passed_count = 0;
    std::map<std::string, int> rows_ok{{"gate", 0}, {"circuit", 0}};
    const std::size_t n = unop_verify_report_size(report_handle.get());
    for (std::size_t i = 0; i < n; ++i) {
        const char *name = nullptr;
        const char *detail = nullptr;
        int passed = 0;
        check(unop_verify_report_check(report_handle.get(), i, &name, &passed, &detail));
        passed_count += passed ? 1 : 0;
        const std::string check_name(name);
        for (auto &[kind, count] : rows_ok) {
            if (passed && check_name.rfind("truth_table_" + kind + " ", 0) == 0) {
                ++count;
            }
        }
        checks.push_back({{"name", check_name}, {"passed", passed != 0}, {"detail", detail}});
        report.rows.push_back({check_name, passed ? "pass" : "FAIL", detail});
    }
    const bool all = unop_verify_report_all_passed(report_handle.get()) != 0;
    json cfg_json{{"command", "verify"},
                  {"shots", cfg.shots},
                  {"seed", cfg.seed},
                  {"tamper", cfg.tamper.empty() ? json(nullptr) : json(cfg.tamper)},
                  {"format", cfg.format}};
    report.document = json{{"command", "verify"},
                           {"config", std::move(cfg_json)},
                           {"results",
                            {{"checks", std::move(checks)},
                             {"passed", passed_count},
                             {"total", n},
                             {"truth_table_rows_verified", rows_ok}}},
                           {"oracle_verdict", all ? "match" : "mismatch"},
                           {"post_selection_probability", nullptr},
                           {"timing_ms", timing_json(cfg.timing, start)}};
    report.summary = {std::to_string(passed_count) + "/" + std::to_string(n) + " checks passed",
                      "truth-table rows verified: gate " + std::to_string(rows_ok["gate"]) + "/4, circuit " +
                          std::to_string(rows_ok["circuit"]) + "/4"};
    std::cout << unop::cli::render(report, parse_format(cfg.format));
    return all ? kExitOk : kExitMismatch;
}

struct BenchConfig {
    std::uint32_t min_bits = 1;
    std::uint32_t max_bits = 10;
    std::string backend = "both";
    std::uint32_t dense_max_wires = 24;
    std::string format = "json";
};

struct BenchSample {
    std::uint64_t cardinality = 0;
    double wall_ms = 0.0;
    long peak_rss_kb = 0;
    int ok = 0;
};

/// Runs one exact unaddition in a forked child so each measurement gets its own peak RSS.
std::optional<BenchSample> bench_one(std::uint32_t bits, unop_backend backend) {
    int fds[2];
    if (pipe(fds) != 0) {
        return std::nullopt;
    }
    const pid_t pid = fork();
    if (pid < 0) {
        close(fds[0]);
        close(fds[1]);
        return std::nullopt;
    }
    if (pid == 0) {
        close(fds[0]);
        BenchSample s;
        unop_run_options opts;
        unop_run_options_init(&opts);
        opts.backend = backend;
        const auto start = std::chrono::steady_clock::now();
        unop_unadd_result *r = nullptr;
        if (unop_unadd(bits, (std::uint64_t{1} << bits) - 1, &opts, &r) == UNOP_OK) {
            s.wall_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
            s.cardinality = unop_unadd_result_size(r);
            s.ok = unop_unadd_result_verdict(r) == UNOP_VERDICT_MATCH;
            unop_unadd_result_free(r);
        }
        rusage usage{};
        getrusage(RUSAGE_SELF, &usage);
        s.peak_rss_kb = usage.ru_maxrss;
        const ssize_t written = write(fds[1], &s, sizeof(s));
        _exit(written == static_cast<ssize_t>(sizeof(s)) ? 0 : 1);
    }
    close(fds[1]);
    BenchSample s;
    const ssize_t got = read(fds[0], &s, sizeof(s));
    close(fds[0]);
    int status = 0;
    waitpid(pid, &status, 0);
    if (got != static_cast<ssize_t>(sizeof(s))) {
        return std::nullopt;
    }
    return s;
}

int cmd_bench(const BenchConfig &cfg) {
    if (cfg.min_bits == 0 || cfg.min_bits > cfg.max_bits || cfg.max_bits > 31) {
        throw UsageError("bench: need 1 <= --min-bits <= --max-bits <= 31");
    }
    std::vector<std::pair<std::string, unop_backend>> backends;
    if (cfg.backend != "sparse") {
        backends.emplace_back("dense", UNOP_BACKEND_DENSE);
    }
    if (cfg.backend != "dense") {
        backends.emplace_back("sparse", UNOP_BACKEND_SPARSE);
    }
    Report report;
    report.header = {"bits", "wires", "backend", "cardinality", "wall_ms", "peak_rss_kb", "status"};
    json runs = json::array();
    bool all_ok = true;
    for (std::uint32_t bits = cfg.min_bits; bits <= cfg.max_bits; ++bits) {
        const std::uint32_t wires = 2 * bits + 1;
        for (const auto &[name, backend] : backends) {
            json run{{"bits", bits}, {"wires", wires}, {"backend", name}, {"value", (std::uint64_t{1} << bits) - 1}};
            std::string status = "ok";
            if (backend == UNOP_BACKEND_DENSE && wires > cfg.dense_max_wires) {
                status = "skipped";
            } else if (const auto s = bench_one(bits, backend)) {
                run["cardinality"] = s->cardinality;
                run["wall_ms"] = s->wall_ms;
                run["peak_rss_kb"] = s->peak_rss_kb;
                status = s->ok ? "ok" : "mismatch";
            } else {
                status = "error";
            }
            all_ok = all_ok && (status == "ok" || status == "skipped");
            run["status"] = status;
            report.rows.push_back({std::to_string(bits), std::to_string(wires), name,
                                   run.contains("cardinality") ? run["cardinality"].dump() : "-",
                                   run.contains("wall_ms") ? format_double(run["wall_ms"].get<double>()) : "-",
                                   run.contains("peak_rss_kb") ? run["peak_rss_kb"].dump() : "-", status});
            runs.push_back(std::move(run));
        }
    }
    report.document = json{{"command", "bench"},
                           {"config",
                            {{"command", "bench"},
                             {"min_bits", cfg.min_bits},
                             {"max_bits", cfg.max_bits},
                             {"backend", cfg.backend},
                             {"dense_max_wires", cfg.dense_max_wires},
                             {"format", cfg.format}}},
                           {"results", {{"runs", std::move(runs)}}},
                           {"oracle_verdict", all_ok ? "match" : "mismatch"},
                           {"post_selection_probability", nullptr},
                           {"timing_ms", nullptr}};
    std::cout << unop::cli::render(report, parse_format(cfg.format));
    return all_ok ? kExitOk : kExitMismatch;
}

void add_run_options(CLI::App *sub, RunConfig &cfg) {
    sub->add_option("--bits", cfg.bits, "Register width n")->required();
    sub->add_option("--value", cfg.value, "Sum (unadd) or product (unmul) to invert")->required();
    sub->add_option("--mode", cfg.mode, "exact or sample")->check(CLI::IsMember({"exact", "sample"}));
    sub->add_option("--shots", cfg.shots, "Shots in sample mode");
    sub->add_option("--seed", cfg.seed, "64-bit sampling seed");
    sub->add_option("--backend", cfg.backend, "dense or sparse")->check(CLI::IsMember({"dense", "sparse"}));
    sub->add_option("--format", cfg.format, "json, csv or table")->check(CLI::IsMember({"json", "csv", "table"}));
    sub->add_flag("--timing", cfg.timing, "Report wall time in timing_ms (output is then not reproducible)");
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Unaddition and unmultiplication by quantum-circuit simulation"};
    app.require_subcommand(1);
    app.set_version_flag("--version", std::string(unop_version()));

    RunConfig unadd_cfg;
    auto *unadd_cmd = app.add_subcommand("unadd", "All (a, b, c_in) with a + b + c_in = value");
    add_run_options(unadd_cmd, unadd_cfg);
    unadd_cmd->add_flag("--summary", unadd_cfg.summary_only, "Print only cardinality and verdict");

    RunConfig unmul_cfg;
    auto *unmul_cmd = app.add_subcommand("unmul", "All factor pairs (x, y) with x * y = value");
    add_run_options(unmul_cmd, unmul_cfg);

    VerifyConfig verify_cfg;
    auto *verify_cmd = app.add_subcommand("verify", "Check both full-unadder realizations");
    verify_cmd->add_option("--shots", verify_cfg.shots, "Also sample each branching input (0 = skip)");
    verify_cmd->add_option("--seed", verify_cfg.seed, "Sampling seed");
    verify_cmd->add_option("--tamper", verify_cfg.tamper, "Perturb matrix entry ROW,COL before checking")
        ->delimiter(',')
        ->expected(2);
    verify_cmd->add_option("--tamper-delta", verify_cfg.tamper_delta, "Amount added to the tampered entry");
    verify_cmd->add_option("--format", verify_cfg.format, "json, csv or table")
        ->check(CLI::IsMember({"json", "csv", "table"}));
    verify_cmd->add_flag("--timing", verify_cfg.timing, "Report wall time in timing_ms");

    BenchConfig bench_cfg;
    auto *bench_cmd = app.add_subcommand("bench", "Time exact unaddition of 2^n - 1 per (n, backend)");
    bench_cmd->add_option("--min-bits", bench_cfg.min_bits);
    bench_cmd->add_option("--max-bits", bench_cfg.max_bits);
    bench_cmd->add_option("--backend", bench_cfg.backend, "dense, sparse or both")
        ->check(CLI::IsMember({"dense", "sparse", "both"}));
    bench_cmd->add_option("--dense-max-wires", bench_cfg.dense_max_wires, "Skip dense runs above this many wires");
    bench_cmd->add_option("--format", bench_cfg.format)->check(CLI::IsMember({"json", "csv", "table"}));

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (*unadd_cmd) {
            return cmd_unadd(unadd_cfg);
        }
        if (*unmul_cmd) {
            return cmd_unmul(unmul_cfg);
        }
        if (*verify_cmd) {
            return cmd_verify(verify_cfg);
        }
        if (*bench_cmd) {
            return cmd_bench(bench_cfg);
        }
    } catch (const UsageError &e) {
        std::cerr << "unop: " << e.what() << '\n';
        return kExitUsage;
    } catch (const LibraryError &e) {
        std::cerr << "unop: " << e.what() << '\n';
        return e.status == UNOP_ERR_OUT_OF_RANGE || e.status == UNOP_ERR_INVALID_ARGUMENT ? kExitUsage
                                                                                          : kExitMismatch;
    }
    return kExitUsage;
}
