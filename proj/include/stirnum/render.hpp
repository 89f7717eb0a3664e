/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#pragma once

/**
 * @file render.hpp
 * @brief Deterministic text output: tables, check results, Monte Carlo reports.
 *
 * Machine formats serialize rationals as exact decimal strings ("p/q", or "p"
 * when integral). JSON objects are emitted with sorted keys; parsing and
 * re-dumping a document reproduces it byte for byte.
 */

#include "stirnum/checks.hpp"
#include "stirnum/expectation.hpp"
#include "stirnum/stirling.hpp"

#include <string>

namespace stirnum {

enum class TableFormat { Csv, Tsv, Json, Latex };

TableFormat table_format_from_id(const std::string& id);  // "csv" | "tsv" | "json" | "latex"

/// Ascending-power plain text, e.g. "11+18*l+11*l^2" (same as LambdaPoly::str).
std::string render_poly_ascii(const LambdaPoly& p);

/// Descending powers in display style, e.g. "11\lambda^{2}+18\lambda+11".
std::string render_poly_latex(const LambdaPoly& p);

/// Full triangle in the requested format. csv/tsv carry a "n,k,value" header
/// row; latex renders one "symbol=polynomial" line per entry with descending
/// powers; json is a single compact object.
std::string render_table(const StirlingTriangle& tri, TableFormat format);

std::string render_check_json(const CheckResult& result);
std::string render_check_line(const CheckResult& result);

std::string render_mc_json(const std::string& mode, const McConfig& cfg, const McReport& rep);
std::string render_mc_line(const McConfig& cfg, const McReport& rep);

}  // namespace stirnum
