#include <doctest.h>

#include <algorithm>
#include <sstream>

#include "oracles.hpp"
#include "wrlat/survey.hpp"

using namespace wrlat;

namespace {

const SurveyRecord* find(const std::vector<SurveyRecord>& rs, std::int64_t D, std::int64_t a, std::int64_t b,
                         std::int64_t g)
{
    for (const auto& r : rs)
        if (r.D == D && r.a == a && r.b == b && r.g == g) return &r;
    return nullptr;
}

}  // namespace

TEST_CASE("parse_config key=value")
{
    const auto cfg = parse_config("# survey\n d_min = -50\nd_max=-2   # trailing\n\nnorm_bound = 30\n"
                                  "require_squarefree = true\noutput_format = csv\nworkers = 3\n");
    CHECK(cfg.d_min == -50);
    CHECK(cfg.d_max == -2);
    CHECK(cfg.norm_bound == 30);
    CHECK(cfg.require_squarefree);
    CHECK(cfg.output_format == OutputFormat::Csv);
    CHECK(cfg.workers == 3);

    const auto partial = parse_config("norm_bound=4");
    CHECK(partial.d_min == -20);
    CHECK(partial.norm_bound == 4);

    CHECK_THROWS_AS(parse_config("colour = red"), InvalidInput);
    CHECK_THROWS_AS(parse_config("d_min"), InvalidInput);
    CHECK_THROWS_AS(parse_config("d_min = x"), InvalidInput);
    CHECK_THROWS_AS(parse_config("workers = 0"), InvalidInput);
    CHECK_THROWS_AS(parse_config("output_format = xml"), InvalidInput);
    CHECK_THROWS_AS(parse_config("require_squarefree = maybe"), InvalidInput);
}

TEST_CASE("parse_config JSON")
{
    const auto cfg = parse_config(R"({"d_min": 2, "d_max": 30, "require_squarefree": true, "output_format": "text"})");
    CHECK(cfg.d_min == 2);
    CHECK(cfg.d_max == 30);
    CHECK(cfg.require_squarefree);
    CHECK(cfg.output_format == OutputFormat::Text);
    CHECK_THROWS_AS(parse_config(R"({"d_min": 2,)"), InvalidInput);
    CHECK_THROWS_AS(parse_config(R"({"d_min": 2.5})"), InvalidInput);
    CHECK_THROWS_AS(parse_config(R"({"nope": 1})"), InvalidInput);
}

TEST_CASE("validate")
{
    SurveyConfig cfg;
    CHECK_NOTHROW(cfg.validate());
    cfg.d_min = 5;
    cfg.d_max = 4;
    CHECK_THROWS_AS(cfg.validate(), InvalidInput);
    cfg = {};
    cfg.norm_bound = 0;
    CHECK_THROWS_AS(run_survey(cfg), InvalidInput);
}

TEST_CASE("classify")
{
    const auto r = classify(-15, 2, 0, 1);
    CHECK(r.norm == 2);
    CHECK(r.minimum == 4);
    CHECK(r.n_minimal == 4);
    CHECK(r.wr);
    CHECK_FALSE(r.hexagonal);
    CHECK(r.bound_ok);
    CHECK(r.order_maximal);

    const auto real = classify(21, 7, 3, 1);
    CHECK(real.minimum == 35);
    CHECK(real.wr);

    const auto skew = classify(-5, 3, 1, 1);
    CHECK_FALSE(skew.wr);
    CHECK(skew.minimum == 6);

    CHECK_THROWS_AS(classify(-15, 3, 0, 1), InvalidInput);
    CHECK_THROWS_AS(classify(4, 1, 0, 1), InvalidInput);
}

TEST_CASE("radicands")
{
    SurveyConfig cfg;
    cfg.d_min = -5;
    cfg.d_max = 10;
    CHECK(survey_radicands(cfg) == std::vector<std::int64_t>{-5, -4, -3, -2, -1, 2, 3, 5, 6, 7, 8, 10});
    cfg.require_squarefree = true;
    CHECK(survey_radicands(cfg) == std::vector<std::int64_t>{-5, -3, -2, -1, 2, 3, 5, 6, 7, 10});
}

TEST_CASE("default survey against independent checks")
{
    const auto res = run_survey(SurveyConfig{});
    CHECK(res.summary.fields == 20);
    CHECK(res.summary.records == res.records.size());
    CHECK(res.summary.bound_ok == res.records.size());

    CHECK(find(res.records, -15, 2, 0, 1) != nullptr);
    CHECK(find(res.records, -15, 2, 0, 1)->wr);
    CHECK(find(res.records, -1, 1, 0, 1)->n_minimal == 4);
    CHECK(find(res.records, -3, 1, 0, 1)->hexagonal);
    CHECK(find(res.records, -3, 2, 0, 2)->hexagonal);
    CHECK_FALSE(find(res.records, -20, 1, 0, 1)->order_maximal);

    std::size_t wr = 0, hex = 0;
    for (std::int64_t D = -20; D <= -1; ++D) {
        const QuadOrder o(D);
        std::size_t expected = 0;
        for (std::int64_t g = 1; g <= 10; ++g)
            for (std::int64_t a = g; a * g <= 10; a += g)
                for (std::int64_t b = 0; b < a; b += g)
                    if (validate_triple(IdealTriple{a, b, g, o})) ++expected;
        const auto n = std::count_if(res.records.begin(), res.records.end(), [&](const auto& r) { return r.D == D; });
        CHECK(static_cast<std::size_t>(n) == expected);
    }
    for (const auto& r : res.records) {
        const auto box = oracle::planar_box_minimum(form_from_ideal(IdealTriple{r.a, r.b, r.g, QuadOrder(r.D)}), 25);
        CHECK(box.minimum == r.minimum);
        CHECK(box.vectors.size() == r.n_minimal);
        CHECK(r.norm == r.a * r.g);
        CHECK(r.wr == (r.n_minimal >= 4));
        // D = -12 is an order in the same field as D = -3.
        if (r.D != -3 && r.D != -12) CHECK(r.n_minimal <= 4);
        wr += r.wr;
        hex += r.hexagonal;
    }
    CHECK(res.summary.wr == wr);
    CHECK(res.summary.hexagonal == hex);
    CHECK(std::is_sorted(res.records.begin(), res.records.end(), [](const auto& l, const auto& r) {
        return std::make_tuple(l.D, l.norm, l.a, l.b, l.g) < std::make_tuple(r.D, r.norm, r.a, r.b, r.g);
    }));
}

TEST_CASE("survey output does not depend on worker count")
{
    SurveyConfig cfg;
    cfg.d_min = -60;
    cfg.d_max = 60;
    cfg.norm_bound = 40;
    const auto one = run_survey(cfg);
    cfg.workers = 4;
    const auto four = run_survey(cfg);
    CHECK(one.records == four.records);
    CHECK(one.summary == four.summary);

    std::ostringstream a, b;
    write_records(a, one.records, OutputFormat::Csv, one.summary);
    write_records(b, four.records, OutputFormat::Csv, four.summary);
    CHECK(a.str() == b.str());
}

TEST_CASE("JSON round trip")
{
    SurveyConfig cfg;
    cfg.d_min = -10;
    cfg.d_max = 12;
    const auto res = run_survey(cfg);
    std::ostringstream os;
    write_records(os, res.records, OutputFormat::Json, res.summary);
    CHECK(records_from_json(os.str()) == res.records);
}

TEST_CASE("csv and text layout")
{
    std::ostringstream csv;
    write_records(csv, {classify(-15, 2, 0, 1)}, OutputFormat::Csv);
    CHECK(csv.str() == "D,a,b,g,norm,minimum_num,minimum_den,n_minimal,wr,hexagonal,order_maximal\n"
                       "-15,2,0,1,2,4,1,4,true,false,true\n");
    std::ostringstream text;
    write_records(text, {classify(-15, 2, 0, 1)}, OutputFormat::Text);
    CHECK(text.str().find("-15") != std::string::npos);
}

TEST_CASE("tables")
{
    const auto rows = tables_report();
    REQUIRE(rows.size() == 8);
    for (const auto& r : rows) {
        CAPTURE(r.ideal);
        CHECK(r.match());
        CHECK(r.order_maximal == (r.D != -207));
    }
    CHECK(rows[0].ideal == "⟨2, (1−√−15)/2⟩");
    CHECK(rows[0].minimal_elements == "±2, ±(1−√−15)/2");
    CHECK(rows[4].minimal_elements == "±(7 ± √21)/2");
    CHECK(rows[6].D == 285);
    CHECK(rows[7].D == 957);
    CHECK(format_ideal(IdealTriple{2, 0, 2, QuadOrder(-1)}) == "⟨2, −2√−1⟩");
}
