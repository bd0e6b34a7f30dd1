#include "shockscope/error.hpp"
#include "shockscope/io.hpp"

#include <gtest/gtest.h>
#include <nlohmann/json.hpp>

#include <filesystem>
#include <sstream>

namespace ss = shockscope;
using nlohmann::json;

TEST(MeasureJson, RoundTrip) {
    const ss::Measure mu({{-2.0, 0.25}, {0.1, 1.0 / 3.0}},
                         {ss::DensityPiece{-1.0, 1.0, {1.0, 0.5}, 0.25, -0.125}});
    const ss::Measure back = ss::measure_from_json(ss::measure_to_json(mu));
    ASSERT_EQ(back.atoms().size(), 2u);
    EXPECT_EQ(back.atoms()[1].weight, 1.0 / 3.0);
    ASSERT_EQ(back.pieces().size(), 1u);
    EXPECT_EQ(back.pieces()[0].coeffs, mu.pieces()[0].coeffs);
    EXPECT_EQ(back.pieces()[0].exp_quad, -0.125);
    EXPECT_EQ(ss::measure_to_json(back), ss::measure_to_json(mu));
}

TEST(MeasureJson, OptionalFieldsAndErrors) {
    const auto mu = ss::measure_from_json(R"({"pieces":[{"a":-1,"b":1,"coeffs":[1]}]})");
    EXPECT_EQ(mu.pieces()[0].exp_rate, 0.0);
    EXPECT_THROW(ss::measure_from_json(R"({"atoms":[]})"), ss::InputError);
    EXPECT_THROW(ss::measure_from_json(R"({"atoms":[{"z":0,"w":-1}]})"), ss::InputError);
    try {
        ss::measure_from_json("{\n  \"atoms\": [\n    {\"z\": 1,, \"w\": 1}]}");
        FAIL() << "expected a parse error";
    } catch (const ss::InputError& e) {
        EXPECT_NE(std::string(e.what()).find("line 3"), std::string::npos) << e.what();
    }
}

TEST(FluxJson, BothKinds) {
    EXPECT_EQ(ss::flux_from_json(R"({"kind":"burgers"})").kind(), ss::Flux::Kind::Burgers);
    const auto p = ss::flux_from_json(R"({"kind":"poly","coeffs":[0,-1,0,0,1]})");
    EXPECT_EQ(p.kind(), ss::Flux::Kind::Polynomial);
    EXPECT_DOUBLE_EQ(p.f(2.0), 14.0);
    EXPECT_EQ(ss::flux_from_json(ss::flux_to_json(p)).coeffs(), p.coeffs());
    EXPECT_THROW(ss::flux_from_json(R"({"kind":"cubic"})"), ss::InputError);
    EXPECT_THROW(ss::flux_from_json(R"({"kind":"poly"})"), ss::InputError);
}

TEST(ScheduleJson, RoundTripAndValidation) {
    const auto s = ss::schedule_from_json(R"({"N":10,"times":[1,200,1e9]})");
    EXPECT_EQ(s.times().size(), 3u);
    EXPECT_EQ(ss::schedule_from_json(ss::schedule_to_json(s)).times(), s.times());
    EXPECT_THROW(ss::schedule_from_json(R"({"N":10,"times":[1,50]})"), ss::InputError);
}

TEST(Csv, HeaderDigitsAndLineEndings) {
    const std::vector<ss::TxSample> rows{{0.0, -1.0, 0.1}, {1.0, 2.0, -2.0 / 3.0}};
    std::ostringstream os;
    ss::write_tx_csv(os, rows);
    const std::string out = os.str();
    EXPECT_EQ(out.rfind("t,x,u\n", 0), 0u);
    EXPECT_EQ(out.find('\r'), std::string::npos);
    EXPECT_NE(out.find("0.10000000000000001"), std::string::npos);
    EXPECT_NE(out.find("-0.66666666666666663"), std::string::npos);
    EXPECT_EQ(ss::format_number(2.0), "2");
    EXPECT_EQ(std::stod(ss::format_number(1.0 / 7.0)), 1.0 / 7.0);
}

TEST(Csv, Grids) {
    const std::vector<ss::Grid> grids{ss::Grid::sample(0.0, 1.0, 3, [](double x) { return x; }, 0.5)};
    std::ostringstream os;
    ss::write_grids_csv(os, grids);
    EXPECT_EQ(os.str(), "t,x,u\n0.5,0,0\n0.5,0.5,0.5\n0.5,1,1\n");
}

TEST(Report, AncientJsonShape) {
    const auto mu = ss::Measure::uniform(-2.0, -1.0) + ss::Measure::uniform(1.0, 2.0);
    const auto rep = ss::ancient_report(mu, 0.0, {-100.0, -1000.0}, ss::fixed_window(5.0));
    ss::RunManifest man{"ancient", {"--measure", "m.json"}, {{"measure", ss::measure_to_json(mu)}}, 2, "0.1.0"};
    const json j = json::parse(ss::ancient_report_to_json(rep, &man));
    EXPECT_EQ(j["c"], 0.0);
    EXPECT_EQ(j["kind"], "shock_with_shift");
    EXPECT_EQ(j["value_or_pair"], json::array({1.0, -1.0}));
    EXPECT_EQ(j["errors_by_t"].size(), 2u);
    EXPECT_TRUE(j["errors_by_t"][0].contains("sup_err"));
    EXPECT_EQ(j["s_eps_trace"].size(), 2u);
    EXPECT_EQ(j["manifest"]["command"], "ancient");
    EXPECT_EQ(j["manifest"]["threads"], 2);
}

TEST(Files, ReadWrite) {
    const auto path = std::filesystem::temp_directory_path() / "shockscope_io_test.txt";
    ss::write_text_file(path, "abc\n");
    EXPECT_EQ(ss::read_text_file(path), "abc\n");
    std::filesystem::remove(path);
    EXPECT_THROW(ss::read_text_file(path), ss::InputError);
}
