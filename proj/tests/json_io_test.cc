#include "bitslab/json_io.h"

#include <gtest/gtest.h>

using namespace bitslab;

TEST(json_io, transcript_schema) {
    RandomStream rng(7);
    const auto j = to_json(run_protocol(TwoQubitState::singlet(), ContextChoice::XXYY, rng));
    for (const char* key : {"state", "context", "table", "bit", "outcome", "consistent", "seed", "events"}) {
        EXPECT_TRUE(j.contains(key)) << key;
    }
    EXPECT_EQ(j["state"].size(), 4u);
    EXPECT_EQ(j["state"][0].size(), 2u);
    EXPECT_EQ(j["context"], "XXYY");
    EXPECT_EQ(j["bit"], 1);
    EXPECT_EQ(j["outcome"], Json::array({-1, -1}));
    EXPECT_EQ(j["seed"], 7u);
    EXPECT_EQ(j["events"].size(), 4u);
    EXPECT_EQ(j["table"]["values"]["Z1Z2"]["provenance"], "derived");
    EXPECT_EQ(j["table"]["values"]["X1X2"]["provenance"], "sampled");
    EXPECT_FALSE(j["table"]["values"].contains("X1Y2"));
}

TEST(json_io, table_round_trip_property) {
    RandomStream srng(3);
    for (std::uint64_t seed = 0; seed < 200; ++seed) {
        RandomStream rng(seed);
        const auto state = random_state(srng);
        const auto table = sample_contextual_table(state, seed % 2 ? ContextChoice::XXYY : ContextChoice::XYYX, rng);
        const auto back = table_from_json(Json::parse(to_json(table).dump()));
        ASSERT_EQ(back, table);
    }
}

TEST(json_io, table_from_malformed_json) {
    EXPECT_THROW(table_from_json(Json::parse(R"({"context":"XXZZ","seed":0,"values":{}})")), std::invalid_argument);
    EXPECT_THROW(table_from_json(Json::parse(R"({"context":"XXYY"})")), std::invalid_argument);
    EXPECT_THROW(table_from_json(Json::parse(R"({"context":"XXYY","seed":0,"values":{"X1":{"value":2,"provenance":"sampled"}}})")),
                 std::invalid_argument);
}

TEST(json_io, reports_serialize) {
    const auto square = build_square();
    const auto s = to_json(verify_structure(square));
    EXPECT_EQ(s["passed"], true);
    EXPECT_EQ(s["lines"].size(), 6u);
    EXPECT_EQ(s["lines"][5]["product_sign"], -1);
    const auto n = to_json(exhaustive_assignment_search(square));
    EXPECT_EQ(n["all_six_satisfiable"], 0);
    EXPECT_EQ(n["max_satisfied"], 5);
    EXPECT_EQ(n["witness"].size(), 9u);

    const auto sweep_json = [] {
        RandomStream rng(0);
        return to_json(sweep({}, 1, rng));
    }();
    EXPECT_TRUE(sweep_json["match_fraction"].is_null());
}

TEST(json_io, stability_report_serializes) {
    FuloDevice plus_x;
    FuloDevice minus_x;
    minus_x.orientation = -1;
    const auto j = to_json(hv_stability_report(SpinState2::plus(), 0.9, {plus_x, minus_x}));
    EXPECT_EQ(j["unstable_axes"], Json::array({"x"}));
    EXPECT_EQ(j["bits_premise_holds"], false);
    EXPECT_EQ(j["axes"][0]["values"], Json::array({1, -1}));
}
