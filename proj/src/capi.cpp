/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum.h"

#include "stirnum/checks.hpp"
#include "stirnum/expectation.hpp"
#include "stirnum/render.hpp"
#include "stirnum/stirling.hpp"

#include <cstdlib>
#include <cstring>
#include <new>
#include <stdexcept>

struct stirnum_triangle {
    stirnum::StirlingTriangle tri;
};

namespace {

char* dup_string(const std::string& s) {
    char* out = static_cast<char*>(std::malloc(s.size() + 1));
    if (out == nullptr) {
        throw std::bad_alloc();
    }
    std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

template <class Fn>
stirnum_status guarded(Fn&& fn) {
    try {
        fn();
        return STIRNUM_OK;
    } catch (const std::invalid_argument&) {
        return STIRNUM_ERR_INVALID_ARGUMENT;
    } catch (const std::domain_error&) {
        return STIRNUM_ERR_DOMAIN;
    } catch (const std::out_of_range&) {
        return STIRNUM_ERR_RANGE;
    } catch (...) {
        return STIRNUM_ERR_INTERNAL;
    }
}

stirnum::McConfig to_config(const stirnum_mc_config* cfg) {
    if (cfg == nullptr) {
        throw std::invalid_argument("capi: null configuration");
    }
    stirnum::McConfig c;
    c.k = cfg->k;
    c.n = cfg->n;
    c.lambda_value = cfg->lambda;
    c.samples = cfg->samples;
    c.seed = cfg->seed;
    c.chunks = cfg->chunks;
    return c;
}

void fill_report(const stirnum::McReport& rep, stirnum_mc_report* out) {
    out->estimate = rep.estimate;
    out->std_error = rep.std_error;
    out->exact_value = rep.exact_value;
    out->z_score = rep.z_score;
    out->samples_used = rep.samples_used;
}

}  // namespace

extern "C" {

const char* stirnum_status_str(stirnum_status status) {
    switch (status) {
        case STIRNUM_OK: return "ok";
        case STIRNUM_ERR_INVALID_ARGUMENT: return "invalid argument";
        case STIRNUM_ERR_DOMAIN: return "domain error";
        case STIRNUM_ERR_RANGE: return "out of range";
        case STIRNUM_ERR_INTERNAL: return "internal error";
    }
    return "unknown status";
}

void stirnum_string_free(char* s) {
    std::free(s);
}

stirnum_status stirnum_triangle_build(const char* family, int max_n, stirnum_triangle** out) {
    return guarded([&] {
        if (family == nullptr || out == nullptr) {
            throw std::invalid_argument("capi: null argument");
        }
        auto tri = stirnum::build_triangle(stirnum::family_from_id(family), max_n);
        *out = new stirnum_triangle{std::move(tri)};
    });
}

void stirnum_triangle_free(stirnum_triangle* tri) {
    delete tri;
}

int stirnum_triangle_max_n(const stirnum_triangle* tri) {
    return tri == nullptr ? -1 : tri->tri.max_n();
}

stirnum_status stirnum_triangle_entry(const stirnum_triangle* tri, int n, int k, char** out_poly) {
    return guarded([&] {
        if (tri == nullptr || out_poly == nullptr) {
            throw std::invalid_argument("capi: null argument");
        }
        *out_poly = dup_string(tri->tri.at(n, k).str());
    });
}

stirnum_status stirnum_triangle_entry_degree(const stirnum_triangle* tri, int n, int k,
                                             int* out_degree) {
    return guarded([&] {
        if (tri == nullptr || out_degree == nullptr) {
            throw std::invalid_argument("capi: null argument");
        }
        auto deg = tri->tri.at(n, k).degree();
        *out_degree = deg ? static_cast<int>(*deg) : -1;
    });
}

stirnum_status stirnum_triangle_entry_coeff(const stirnum_triangle* tri, int n, int k, int power,
                                            char** out_coeff) {
    return guarded([&] {
        if (tri == nullptr || out_coeff == nullptr || power < 0) {
            throw std::invalid_argument("capi: null or negative argument");
        }
        *out_coeff = dup_string(tri->tri.at(n, k).coeff(static_cast<std::size_t>(power)).str());
    });
}

stirnum_status stirnum_triangle_render(const stirnum_triangle* tri, const char* format,
                                       char** out_text) {
    return guarded([&] {
        if (tri == nullptr || format == nullptr || out_text == nullptr) {
            throw std::invalid_argument("capi: null argument");
        }
        *out_text = dup_string(stirnum::render_table(tri->tri, stirnum::table_format_from_id(format)));
    });
}

stirnum_status stirnum_table_render(const char* family, int max_n, const char* format,
                                    char** out_text) {
    return guarded([&] {
        if (family == nullptr || format == nullptr || out_text == nullptr) {
            throw std::invalid_argument("capi: null argument");
        }
        auto fmt = stirnum::table_format_from_id(format);
        auto tri = stirnum::build_triangle(stirnum::family_from_id(family), max_n);
        *out_text = dup_string(stirnum::render_table(tri, fmt));
    });
}

stirnum_status stirnum_check_run(const char* name, int max_n, int* out_passed, char** out_json) {
    return guarded([&] {
        if (name == nullptr || out_passed == nullptr) {
            throw std::invalid_argument("capi: null argument");
        }
        const stirnum::CheckResult result = stirnum::run_check(name, max_n);
        *out_passed = result.passed ? 1 : 0;
        if (out_json != nullptr) {
            *out_json = dup_string(stirnum::render_check_json(result));
        }
    });
}

stirnum_status stirnum_mc_moment(const stirnum_mc_config* cfg, stirnum_mc_report* out_report,
                                 char** out_json) {
    return guarded([&] {
        if (out_report == nullptr) {
            throw std::invalid_argument("capi: null report");
        }
        const stirnum::McConfig c = to_config(cfg);
        const stirnum::McReport rep = stirnum::mc_estimate_degenerate_moment(c);
        fill_report(rep, out_report);
        if (out_json != nullptr) {
            *out_json = dup_string(stirnum::render_mc_json("moment", c, rep));
        }
    });
}

stirnum_status stirnum_mc_theorem22(const stirnum_mc_config* cfg, stirnum_mc_report* out_report,
                                    char** out_json) {
    return guarded([&] {
        if (out_report == nullptr) {
            throw std::invalid_argument("capi: null report");
        }
        const stirnum::McConfig c = to_config(cfg);
        const stirnum::McReport rep =
            stirnum::mc_check_theorem22(c.n, c.k, c.lambda_value, c.samples, c.seed, c.chunks);
        fill_report(rep, out_report);
        if (out_json != nullptr) {
            *out_json = dup_string(stirnum::render_mc_json("theorem22", c, rep));
        }
    });
}

}  // extern "C"
