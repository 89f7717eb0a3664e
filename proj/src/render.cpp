/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#include "stirnum/render.hpp"

#include <json.hpp>

#include <sstream>
#include <stdexcept>

namespace stirnum {

namespace {

using nlohmann::json;

std::string latex_symbol(Family f, int n, int k) {
    std::ostringstream os;
    switch (f) {
        case Family::S1: os << "S_{1}(" << n << "," << k << ")"; break;
        case Family::S1U: os << "{" << n << " \\brack " << k << "}"; break;
        case Family::S2: os << "{" << n << " \\brace " << k << "}"; break;
        case Family::DS1: os << "S_{1,\\lambda}(" << n << "," << k << ")"; break;
        case Family::DS2: os << "S_{2,\\lambda}(" << n << "," << k << ")"; break;
        case Family::NS1: os << "S_{1,\\lambda}^{*}(" << n << "," << k << ")"; break;
        case Family::NS1U: os << "{" << n << " \\brack " << k << "}_{\\lambda}^{*}"; break;
        case Family::NS2: os << "{" << n << " \\brace " << k << "}_{\\lambda}^{*}"; break;
    }
    return os.str();
}

std::string latex_rational(const Rational& r) {
    if (r.is_integer()) {
        return r.numerator().str();
    }
    std::string sign = r.is_negative() ? "-" : "";
    return sign + "\\frac{" + abs(r).numerator().str() + "}{" + r.denominator().str() + "}";
}

std::string delimited_table(const StirlingTriangle& tri, char sep) {
    std::ostringstream os;
    os << "n" << sep << "k" << sep << "value\n";
    for (int n = 0; n <= tri.max_n(); ++n) {
        for (int k = 0; k <= n; ++k) {
            os << n << sep << k << sep << tri.at(n, k).str() << "\n";
        }
    }
    return os.str();
}

std::string json_table(const StirlingTriangle& tri) {
    json entries = json::array();
    for (int n = 0; n <= tri.max_n(); ++n) {
        for (int k = 0; k <= n; ++k) {
            json coeffs = json::array();
            for (const Rational& c : tri.at(n, k).coeffs()) {
                coeffs.push_back(c.str());
            }
            entries.push_back(json{{"n", n}, {"k", k}, {"coeffs", std::move(coeffs)}});
        }
    }
    json doc{{"family", family_id(tri.family())}, {"max_n", tri.max_n()},
             {"entries", std::move(entries)}};
    return doc.dump();
}

std::string latex_table(const StirlingTriangle& tri) {
    std::ostringstream os;
    for (int n = 0; n <= tri.max_n(); ++n) {
        for (int k = 0; k <= n; ++k) {
            os << latex_symbol(tri.family(), n, k) << "=" << render_poly_latex(tri.at(n, k))
               << "\n";
        }
    }
    return os.str();
}

}  // namespace

TableFormat table_format_from_id(const std::string& id) {
    if (id == "csv") return TableFormat::Csv;
    if (id == "tsv") return TableFormat::Tsv;
    if (id == "json") return TableFormat::Json;
    if (id == "latex") return TableFormat::Latex;
    throw std::invalid_argument("render: unknown table format '" + id + "'");
}

std::string render_poly_ascii(const LambdaPoly& p) {
    return p.str();
}

std::string render_poly_latex(const LambdaPoly& p) {
    if (p.is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (std::size_t idx = p.coeffs().size(); idx-- > 0;) {
        const Rational& c = p.coeff(idx);
        if (c.is_zero()) {
            continue;
        }
        const Rational a = abs(c);
        if (first) {
            if (c.is_negative()) {
                os << "-";
            }
            first = false;
        } else {
            os << (c.is_negative() ? "-" : "+");
        }
        const bool unit = a == Rational(1);
        if (!unit || idx == 0) {
            os << latex_rational(a);
        }
        if (idx == 1) {
            os << "\\lambda";
        } else if (idx > 1) {
            os << "\\lambda^{" << idx << "}";
        }
    }
    return os.str();
}

std::string render_table(const StirlingTriangle& tri, TableFormat format) {
    switch (format) {
        case TableFormat::Csv: return delimited_table(tri, ',');
        case TableFormat::Tsv: return delimited_table(tri, '\t');
        case TableFormat::Json: return json_table(tri);
        case TableFormat::Latex: return latex_table(tri);
    }
    throw std::invalid_argument("render: unknown table format");
}

std::string render_check_json(const CheckResult& result) {
    json doc{{"name", result.name}, {"max_n", result.max_n}, {"passed", result.passed}};
    if (result.first_failure) {
        doc["first_failure"] = json{{"n", result.first_failure->n},
                                    {"k", result.first_failure->k},
                                    {"expected", result.first_failure->expected},
                                    {"actual", result.first_failure->actual}};
    }
    return doc.dump();
}

std::string render_check_line(const CheckResult& result) {
    std::ostringstream os;
    os << "check " << result.name << " max_n=" << result.max_n << ": "
       << (result.passed ? "pass" : "FAIL");
    if (result.first_failure) {
        os << " at (n=" << result.first_failure->n << ", k=" << result.first_failure->k
           << "): expected " << result.first_failure->expected << ", got "
           << result.first_failure->actual;
    }
    return os.str();
}

std::string render_mc_json(const std::string& mode, const McConfig& cfg, const McReport& rep) {
    json doc{{"mode", mode},
             {"k", cfg.k},
             {"n", cfg.n},
             {"lambda", cfg.lambda_value},
             {"samples", cfg.samples},
             {"seed", cfg.seed},
             {"chunks", cfg.chunks},
             {"estimate", rep.estimate},
             {"std_error", rep.std_error},
             {"exact_value", rep.exact_value},
             {"z_score", rep.z_score},
             {"samples_used", rep.samples_used}};
    return doc.dump();
}

std::string render_mc_line(const McConfig& cfg, const McReport& rep) {
    std::ostringstream os;
    os.precision(17);
    os << "mc k=" << cfg.k << " n=" << cfg.n << " lambda=" << cfg.lambda_value
       << " samples=" << cfg.samples << " seed=" << cfg.seed << ": estimate=" << rep.estimate
       << " exact=" << rep.exact_value << " std_error=" << rep.std_error
       << " z=" << rep.z_score;
    return os.str();
}

}  // namespace stirnum
