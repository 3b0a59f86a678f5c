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

#include "unop/unop.h"

#include "unop/oracle.hpp"
#include "unop/unadd.hpp"
#include "unop/unmult.hpp"
#include "unop/verify.hpp"

#include <algorithm>
#include <exception>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>
#include <vector>

struct unop_unadd_result {
    unop::unadd::UnaddResult result;
    std::uint64_t expected_size = 0;
    unop_verdict verdict = UNOP_VERDICT_MISMATCH;
};

struct unop_unmul_result {
    unop::unmult::UnmultResult result;
    std::size_t expected_size = 0;
    unop_verdict verdict = UNOP_VERDICT_MISMATCH;
};

struct unop_verify_report {
    std::vector<unop::verify::CheckResult> checks;
};

namespace {

thread_local std::string last_error;

unop_status fail(unop_status status, std::string message) {
    last_error = std::move(message);
    return status;
}

/// Maps exceptions escaping the core onto status codes.
template <class F> unop_status guarded(F &&f) {
    try {
        return f();
    } catch (const std::out_of_range &e) {
        return fail(UNOP_ERR_OUT_OF_RANGE, e.what());
    } catch (const std::invalid_argument &e) {
        return fail(UNOP_ERR_INVALID_ARGUMENT, e.what());
    } catch (const std::bad_alloc &) {
        return fail(UNOP_ERR_INTERNAL, "out of memory");
    } catch (const std::exception &e) {
        return fail(UNOP_ERR_INTERNAL, e.what());
    } catch (...) {
        return fail(UNOP_ERR_INTERNAL, "unknown error");
    }
}

unop::RunOptions to_run_options(const unop_run_options *options) {
    unop::RunOptions out;
    if (options == nullptr) {
        return out;
    }
    switch (options->backend) {
    case UNOP_BACKEND_DENSE:
        out.backend = unop::qsim::Backend::dense;
        break;
    case UNOP_BACKEND_SPARSE:
        out.backend = unop::qsim::Backend::sparse;
        break;
    default:
        throw std::invalid_argument("unknown backend");
    }
    switch (options->mode) {
    case UNOP_MODE_EXACT:
        out.mode = unop::ExactMode{};
        break;
    case UNOP_MODE_SAMPLE:
        if (options->shots == 0) {
            throw std::invalid_argument("sample mode needs at least one shot");
        }
        out.mode = unop::SampleMode{options->shots, options->seed};
        break;
    default:
        throw std::invalid_argument("unknown mode");
    }
    out.threads = options->threads;
    return out;
}

/// Exact results must equal the reference; sampled results must be a subset of it.
template <class T> unop_verdict compare_sets(const std::vector<T> &got, const std::vector<T> &want, bool sampled) {
    if (got == want) {
        return UNOP_VERDICT_MATCH;
    }
    if (sampled && std::includes(want.begin(), want.end(), got.begin(), got.end())) {
        return UNOP_VERDICT_INCOMPLETE;
    }
    return UNOP_VERDICT_MISMATCH;
}

} // namespace

extern "C" {

void unop_run_options_init(unop_run_options *options) {
    if (options != nullptr) {
        *options = unop_run_options{UNOP_MODE_EXACT, UNOP_BACKEND_SPARSE, 0, 0, 0};
    }
}

const char *unop_version(void) { return "0.1.0"; }

const char *unop_status_string(unop_status status) {
    switch (status) {
    case UNOP_OK:
        return "ok";
    case UNOP_ERR_NULL_ARGUMENT:
        return "null argument";
    case UNOP_ERR_INVALID_ARGUMENT:
        return "invalid argument";
    case UNOP_ERR_OUT_OF_RANGE:
        return "out of range";
    case UNOP_ERR_INTERNAL:
        return "internal error";
    }
    return "unknown status";
}

const char *unop_last_error(void) { return last_error.c_str(); }

const char *unop_verdict_string(unop_verdict verdict) {
    switch (verdict) {
    case UNOP_VERDICT_MATCH:
        return "match";
    case UNOP_VERDICT_MISMATCH:
        return "mismatch";
    case UNOP_VERDICT_INCOMPLETE:
        return "incomplete";
    case UNOP_VERDICT_SOUND:
        return "sound";
    }
    return "unknown";
}

unop_status unop_unadd(uint32_t n_bits, uint64_t sum, const unop_run_options *options, unop_unadd_result **out) {
    if (out == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_unadd: out is null");
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<unop_unadd_result>();
        handle->result = unop::unadd::unadd(sum, n_bits, to_run_options(options));
        const auto reference = unop::oracle::unadd_oracle(sum, n_bits);
        handle->expected_size = reference.size();
        handle->verdict = compare_sets(handle->result.triples(), reference, handle->result.sampled);
        *out = handle.release();
        return UNOP_OK;
    });
}

size_t unop_unadd_result_size(const unop_unadd_result *result) {
    return result == nullptr ? 0 : result->result.entries.size();
}

unop_status unop_unadd_result_at(const unop_unadd_result *result, size_t i, unop_triple *out) {
    if (result == nullptr || out == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_unadd_result_at: null argument");
    }
    if (i >= result->result.entries.size()) {
        return fail(UNOP_ERR_OUT_OF_RANGE, "unop_unadd_result_at: index out of range");
    }
    const auto &e = result->result.entries[i];
    *out = unop_triple{e.triple.a, e.triple.b, e.triple.c_in, e.probability, e.count};
    return UNOP_OK;
}

uint64_t unop_unadd_result_expected_size(const unop_unadd_result *result) {
    return result == nullptr ? 0 : result->expected_size;
}

unop_verdict unop_unadd_result_verdict(const unop_unadd_result *result) {
    return result == nullptr ? UNOP_VERDICT_MISMATCH : result->verdict;
}

void unop_unadd_result_free(unop_unadd_result *result) { delete result; }

unop_status unop_unmultiplier_wire_count(uint32_t n_bits, uint64_t *out) {
    if (out == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_unmultiplier_wire_count: out is null");
    }
    return guarded([&] {
        *out = unop::unmult::make_layout(n_bits).total_wires();
        return UNOP_OK;
    });
}

unop_status unop_unmultiply(uint32_t n_bits, uint64_t product, const unop_run_options *options,
                            unop_unmul_result **out) {
    if (out == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_unmultiply: out is null");
    }
    *out = nullptr;
    return guarded([&] {
        auto handle = std::make_unique<unop_unmul_result>();
        handle->result = unop::unmult::unmultiply(product, n_bits, to_run_options(options));
        const auto reference = unop::oracle::factor_pairs_oracle(product, n_bits);
        handle->expected_size = reference.size();
        const auto pairs = handle->result.factor_pairs();
        if (product == 0) {
            const bool sound = std::all_of(pairs.begin(), pairs.end(), [](const unop::FactorPair &p) {
                return p.x * p.y == 0;
            });
            handle->verdict = sound ? UNOP_VERDICT_SOUND : UNOP_VERDICT_MISMATCH;
        } else {
            handle->verdict = compare_sets(pairs, reference, handle->result.sampled);
        }
        *out = handle.release();
        return UNOP_OK;
    });
}

size_t unop_unmul_result_size(const unop_unmul_result *result) {
    return result == nullptr ? 0 : result->result.pairs.size();
}

unop_status unop_unmul_result_at(const unop_unmul_result *result, size_t i, unop_factor_pair *out) {
    if (result == nullptr || out == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_unmul_result_at: null argument");
    }
    if (i >= result->result.pairs.size()) {
        return fail(UNOP_ERR_OUT_OF_RANGE, "unop_unmul_result_at: index out of range");
    }
    const auto &p = result->result.pairs[i];
    *out = unop_factor_pair{p.pair.x, p.pair.y, p.probability, p.count};
    return UNOP_OK;
}

double unop_unmul_result_post_selection_probability(const unop_unmul_result *result) {
    return result == nullptr ? 0.0 : result->result.post_selection_probability;
}

unop_status unop_unmul_result_rejected(const unop_unmul_result *result, unop_rejection kind, double *probability,
                                       uint64_t *count) {
    if (result == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_unmul_result_rejected: result is null");
    }
    const auto k = static_cast<std::size_t>(kind);
    if (k >= unop::unmult::kRejectionKinds) {
        return fail(UNOP_ERR_OUT_OF_RANGE, "unop_unmul_result_rejected: unknown rejection kind");
    }
    if (probability != nullptr) {
        *probability = result->result.rejected_probability[k];
    }
    if (count != nullptr) {
        *count = result->result.rejected_count[k];
    }
    return UNOP_OK;
}

size_t unop_unmul_result_outcomes_examined(const unop_unmul_result *result) {
    return result == nullptr ? 0 : result->result.outcomes_examined;
}

size_t unop_unmul_result_expected_size(const unop_unmul_result *result) {
    return result == nullptr ? 0 : result->expected_size;
}

unop_verdict unop_unmul_result_verdict(const unop_unmul_result *result) {
    return result == nullptr ? UNOP_VERDICT_MISMATCH : result->verdict;
}

void unop_unmul_result_free(unop_unmul_result *result) { delete result; }

void unop_verify_options_init(unop_verify_options *options) {
    if (options != nullptr) {
        *options = unop_verify_options{0, 1, 0, 0, 0, 1e-3};
    }
}

unop_status unop_verify(const unop_verify_options *options, unop_verify_report **out) {
    if (out == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_verify: out is null");
    }
    *out = nullptr;
    return guarded([&] {
        unop::verify::VerifyOptions opts;
        if (options != nullptr) {
            opts.shots = options->shots;
            opts.seed = options->seed;
            if (options->tamper != 0) {
                opts.tamper = unop::verify::Tamper{options->tamper_row, options->tamper_col, options->tamper_delta};
            }
        }
        auto handle = std::make_unique<unop_verify_report>();
        handle->checks = unop::verify::run_verification(opts);
        *out = handle.release();
        return UNOP_OK;
    });
}

size_t unop_verify_report_size(const unop_verify_report *report) {
    return report == nullptr ? 0 : report->checks.size();
}

unop_status unop_verify_report_check(const unop_verify_report *report, size_t i, const char **name, int *passed,
                                     const char **detail) {
    if (report == nullptr) {
        return fail(UNOP_ERR_NULL_ARGUMENT, "unop_verify_report_check: report is null");
    }
    if (i >= report->checks.size()) {
        return fail(UNOP_ERR_OUT_OF_RANGE, "unop_verify_report_check: index out of range");
    }
    const auto &c = report->checks[i];
    if (name != nullptr) {
        *name = c.name.c_str();
    }
    if (passed != nullptr) {
        *passed = c.passed ? 1 : 0;
    }
    if (detail != nullptr) {
        *detail = c.detail.c_str();
    }
    return UNOP_OK;
}

int unop_verify_report_all_passed(const unop_verify_report *report) {
    if (report == nullptr) {
        return 0;
    }
    return std::all_of(report->checks.begin(), report->checks.end(), [](const auto &c) { return c.passed; }) ? 1 : 0;
}

void unop_verify_report_free(unop_verify_report *report) { delete report; }

} // extern "C"
