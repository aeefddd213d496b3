#include <gtest/gtest.h>

#include <filesystem>
#include <fstream>
#include <string>

#include "hawkes/io.hpp"
#include "hawkes/simulate.hpp"

namespace hawkes {
namespace {

namespace fs = std::filesystem;

class IoTest : public ::testing::Test {
protected:
    void SetUp() override {
        dir_ = fs::temp_directory_path() /
               ("hawkes_io_" + std::string(::testing::UnitTest::GetInstance()->current_test_info()->name()));
        fs::remove_all(dir_);
        fs::create_directories(dir_);
    }
    void TearDown() override { fs::remove_all(dir_); }

    fs::path dir_;
};

TEST_F(IoTest, ModelJsonRoundTrip) {
    const HawkesModel model(0.5, {{0.00066, 0.001}, {100.0, 300.0}});
    const Json json = to_json(model);
    EXPECT_EQ(json.at("mu").get<double>(), 0.5);
    EXPECT_EQ(json.at("alpha").size(), 2u);
    EXPECT_EQ(model_from_json(json), model);
    write_json_file(dir_ / "m.json", json);
    EXPECT_EQ(read_model_file(dir_ / "m.json"), model);

    const auto zero = model_from_json(Json::parse(R"({"mu": 2, "alpha": [0], "beta": [1]})"));
    EXPECT_TRUE(zero.is_degenerate());
    EXPECT_THROW((void)model_from_json(Json::parse(R"({"mu": 2, "alpha": [1, 2], "beta": [1]})")),
                 std::invalid_argument);
}

TEST_F(IoTest, EventsCsvRoundTripIsExact) {
    const auto events = simulate_horizon(HawkesModel(0.5, {{9.0, 10.0}}), 100.0, 3);
    write_events_csv(dir_ / "e.csv", events);
    std::ifstream in(dir_ / "e.csv");
    std::string header;
    std::getline(in, header);
    EXPECT_EQ(header, "t");
    const auto back = read_events_csv(dir_ / "e.csv", 100.0);
    EXPECT_EQ(back, events);
}

TEST_F(IoTest, HorizonResolution) {
    const EventSequence events({1.0, 2.5}, 4.0);
    write_events_csv(dir_ / "e.csv", events);
    EXPECT_DOUBLE_EQ(read_events_csv(dir_ / "e.csv").horizon(), 2.5);
    write_json_file(sidecar_path(dir_ / "e.csv"), Json{{"horizon", 4.0}});
    EXPECT_EQ(sidecar_path(dir_ / "e.csv"), dir_ / "e.json");
    EXPECT_DOUBLE_EQ(read_events_csv(dir_ / "e.csv").horizon(), 4.0);
    EXPECT_DOUBLE_EQ(read_events_csv(dir_ / "e.csv", 9.0).horizon(), 9.0);
}

TEST_F(IoTest, MalformedInput) {
    std::ofstream(dir_ / "bad.csv") << "time\n1.0\n";
    EXPECT_THROW((void)read_events_csv(dir_ / "bad.csv"), std::runtime_error);
    std::ofstream(dir_ / "nan.csv") << "t\n1.0\nabc\n";
    EXPECT_THROW((void)read_events_csv(dir_ / "nan.csv"), std::runtime_error);
    EXPECT_THROW((void)read_events_csv(dir_ / "missing.csv"), std::runtime_error);
    EXPECT_THROW(write_json_file(dir_ / "no" / "such" / "dir.json", Json::object()), std::runtime_error);
}

TEST_F(IoTest, FitOptionsRoundTrip) {
    FitOptions options{.restarts = 4, .branching_cap = 0.99, .init_strategy = InitStrategy::random, .seed = 12};
    options.warm_starts.push_back(HawkesModel(1.0, {{0.5, 1.0}}));
    const auto back = fit_options_from_json(to_json(options));
    EXPECT_EQ(back.restarts, 4u);
    EXPECT_DOUBLE_EQ(back.branching_cap, 0.99);
    EXPECT_EQ(back.init_strategy, InitStrategy::random);
    EXPECT_EQ(back.seed, 12u);
    ASSERT_EQ(back.warm_starts.size(), 1u);
    EXPECT_EQ(back.warm_starts[0], options.warm_starts[0]);
}

TEST(FormatDoubleTest, ShortestRoundTrip) {
    EXPECT_EQ(format_double(0.5), "0.5");
    for (const double v : {0.1, 1.0 / 3.0, 1e-300, 123456.789, 2495.5}) {
        EXPECT_EQ(std::stod(format_double(v)), v);
    }
}

}  // namespace
}  // namespace hawkes
