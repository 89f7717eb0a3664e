/*
 * (C) Copyright 2026 The stirnum Authors
 *
 * This software is licensed under the terms of the Apache License Version 2.0
 * which can be obtained at http://www.apache.org/licenses/LICENSE-2.0.
 */
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "stirnum/render.hpp"

#include <json.hpp>

using namespace stirnum;

namespace {

LambdaPoly poly(std::initializer_list<Rational> ascending) {
    return LambdaPoly(std::vector<Rational>(ascending));
}

}  // namespace

TEST_CASE("latex polynomials render descending with signs and units folded") {
    CHECK(render_poly_latex(poly({Rational(11), Rational(18), Rational(11)})) ==
          "11\\lambda^{2}+18\\lambda+11");
    CHECK(render_poly_latex(poly({Rational(1), Rational(1)})) == "\\lambda+1");
    CHECK(render_poly_latex(poly({Rational(-6), Rational(11), Rational(-6), Rational(1)})) ==
          "\\lambda^{3}-6\\lambda^{2}+11\\lambda-6");
    CHECK(render_poly_latex(poly({Rational(0), Rational(-1)})) == "-\\lambda");
    CHECK(render_poly_latex(LambdaPoly()) == "0");
    CHECK(render_poly_latex(poly({Rational(2, 3), Rational(-1, 2)})) ==
          "-\\frac{1}{2}\\lambda+\\frac{2}{3}");
}

TEST_CASE("table formats share content") {
    StirlingTriangle tri = build_triangle(Family::NS1U, 3);
    const std::string csv = render_table(tri, TableFormat::Csv);
    const std::string tsv = render_table(tri, TableFormat::Tsv);
    CHECK(csv.find("3,1,2+3*l+2*l^2\n") != std::string::npos);
    CHECK(tsv.find("3\t1\t2+3*l+2*l^2\n") != std::string::npos);

    std::string csv_as_tsv = csv;
    for (char& c : csv_as_tsv) {
        if (c == ',') {
            c = '\t';
        }
    }
    CHECK(csv_as_tsv == tsv);

    const auto doc = nlohmann::json::parse(render_table(tri, TableFormat::Json));
    CHECK(doc["entries"].size() == 10);
    CHECK(table_format_from_id("latex") == TableFormat::Latex);
    CHECK_THROWS_AS(table_format_from_id("xml"), std::invalid_argument);
}

TEST_CASE("check results serialize with and without a failure") {
    CheckResult ok;
    ok.name = "gf-vs-conv";
    ok.max_n = 20;
    ok.passed = true;
    auto doc = nlohmann::json::parse(render_check_json(ok));
    CHECK(doc["passed"] == true);
    CHECK(!doc.contains("first_failure"));
    CHECK(render_check_line(ok).find("pass") != std::string::npos);

    CheckResult bad;
    bad.name = "inversion";
    bad.max_n = 5;
    bad.passed = false;
    bad.first_failure = CheckFailure{4, 2, "11+18*l+11*l^2", "11+17*l+11*l^2"};
    doc = nlohmann::json::parse(render_check_json(bad));
    CHECK(doc["passed"] == false);
    CHECK(doc["first_failure"]["n"] == 4);
    CHECK(doc["first_failure"]["expected"] == "11+18*l+11*l^2");
    const std::string line = render_check_line(bad);
    CHECK(line.find("FAIL") != std::string::npos);
    CHECK(line.find("11+17*l+11*l^2") != std::string::npos);
}

TEST_CASE("monte carlo reports serialize all fields") {
    McConfig cfg;
    cfg.k = 2;
    cfg.n = 3;
    cfg.lambda_value = 0.5;
    cfg.samples = 1000;
    cfg.seed = 7;
    cfg.chunks = 4;
    McReport rep;
    rep.estimate = 2.75;
    rep.std_error = 0.01;
    rep.exact_value = 2.75;
    rep.z_score = 0.0;
    rep.samples_used = 1000;

    auto doc = nlohmann::json::parse(render_mc_json("moment", cfg, rep));
    CHECK(doc["mode"] == "moment");
    CHECK(doc["k"] == 2);
    CHECK(doc["lambda"] == 0.5);
    CHECK(doc["seed"] == 7);
    CHECK(doc["chunks"] == 4);
    CHECK(doc["estimate"] == 2.75);
    CHECK(doc["samples_used"] == 1000);

    const std::string line = render_mc_line(cfg, rep);
    CHECK(line.find("k=2") != std::string::npos);
    CHECK(line.find("z=0") != std::string::npos);
}
