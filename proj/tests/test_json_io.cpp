// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include <doctest.h>

#include <cstdio>

#include "sepwsts/json_io.hpp"

using namespace sepwsts;
using io::json;

TEST_CASE("marking and cover round-trip with omega as \"w\"") {
    const auto j = json::parse(R"({"control":"q","vec":[1,"w",0]})");
    const OmegaMarking m = io::marking_from_json(j);
    CHECK(m == OmegaMarking{"q", {1, omega, 0}});
    CHECK(io::marking_to_json(m) == j);

    const IdealCover c = normalize({{"q", {1, omega}}, {"p", {2, 2}}});
    CHECK(io::cover_from_json(io::cover_to_json(c)) == c);

    SUBCASE("covers are normalized on load") {
        const auto raw = json::parse(R"([{"control":"q","vec":[1]},{"control":"q","vec":[2]}])");
        CHECK(io::cover_from_json(raw) == normalize({{"q", {2}}}));
    }
    SUBCASE("bad entries are input errors") {
        CHECK_THROWS_AS(io::marking_from_json(json::parse(R"({"control":"q","vec":[-1]})")),
                        input_error);
        CHECK_THROWS_AS(io::marking_from_json(json::parse(R"({"control":"q","vec":["x"]})")),
                        input_error);
        CHECK_THROWS_AS(io::marking_from_json(json::parse(R"({"vec":[1]})")), input_error);
    }
}

TEST_CASE("vass json round-trip") {
    const auto j = json::parse(R"({
        "dim": 1,
        "controls": ["p", "q"],
        "alphabet": ["a", "b"],
        "transitions": [
            {"src": "p", "letter": "a", "take": [0], "put": [1], "dst": "p"},
            {"src": "p", "letter": "b", "take": [1], "put": [0], "dst": "q"}
        ],
        "initial": [{"control": "p", "marking": [0]}],
        "finalBasis": [{"control": "q", "marking": [0]}]
    })");
    const LabeledVASS v = io::vass_from_json(j);
    CHECK(v.dim == 1);
    CHECK(v.transitions.size() == 2);
    CHECK(io::vass_from_json(io::vass_to_json(v)).transitions.size() == 2);
    CHECK(io::vass_to_json(io::vass_from_json(io::vass_to_json(v))) == io::vass_to_json(v));

    SUBCASE("control names with pair syntax are rejected") {
        auto bad = j;
        bad["controls"][0] = "p|x";
        CHECK_THROWS_AS(io::vass_from_json(bad), input_error);
    }
    SUBCASE("negative take entries are rejected") {
        auto bad = j;
        bad["transitions"][0]["take"][0] = -1;
        CHECK_THROWS_AS(io::vass_from_json(bad), input_error);
    }
    SUBCASE("unknown controls are rejected") {
        auto bad = j;
        bad["transitions"][0]["src"] = "zz";
        CHECK_THROWS_AS(io::vass_from_json(bad), input_error);
    }
}

TEST_CASE("olts json round-trip, reflexive closure implied") {
    const auto j = json::parse(R"({
        "states": ["s", "t"],
        "leq": [["s", "t"]],
        "initial": ["s"],
        "final": ["t"],
        "alphabet": ["a"],
        "trans": [["s", "a", ["t"]], ["t", "a", ["t"]]],
        "direction": "upward"
    })");
    const ExplicitOLTS u = io::olts_from_json(j);
    CHECK(u.less_eq(0, 0));
    CHECK(u.less_eq(0, 1));
    CHECK_FALSE(u.less_eq(1, 0));
    CHECK(io::olts_to_json(io::olts_from_json(io::olts_to_json(u))) == io::olts_to_json(u));

    SUBCASE("non-transitive relations are load errors") {
        auto bad = j;
        bad["states"].push_back("r");
        bad["leq"].push_back(json::array({"t", "r"}));  // s <= t <= r without s <= r
        CHECK_THROWS_AS(io::olts_from_json(bad), input_error);
    }
    SUBCASE("bad direction is rejected") {
        auto bad = j;
        bad["direction"] = "sideways";
        CHECK_THROWS_AS(io::olts_from_json(bad), input_error);
    }
}

TEST_CASE("separator json round-trip keeps payloads, flags, transitions") {
    SeparatorNfa a;
    a.alphabet = {"a", "b"};
    a.states.push_back({{"(p|s)", {0, omega}}, false, true});
    a.states.push_back({{"(q|_bot)", {1, 0}}, true, false});
    a.initial = {0};
    a.trans[{0, 0}] = {0, 1};
    a.trans[{1, 1}] = {1};
    const json j = io::separator_to_json(a);
    const SeparatorNfa b = io::separator_from_json(j);
    CHECK(io::separator_to_json(b) == j);
    CHECK(b.states[1].v2_dead);
    CHECK(b.states[0].final_);
    CHECK(b.trans.at({0, 0}) == std::vector<int>{0, 1});

    SUBCASE("emitters are byte-stable") {
        CHECK(io::separator_to_json(a).dump(2) == io::separator_to_json(b).dump(2));
        CHECK(io::separator_to_dot(a) == io::separator_to_dot(b));
    }
    SUBCASE("dot output names payloads") {
        const auto dot = io::separator_to_dot(a);
        CHECK(dot.find("(p|s)[0,w]") != std::string::npos);
        CHECK(dot.find("doublecircle") != std::string::npos);
    }
}

TEST_CASE("file helpers") {
    const std::string path = "./io_test_tmp.json";
    io::write_text_file(path, "{\"dim\": 0}");
    CHECK(io::load_json_file(path)["dim"] == 0);
    const auto d1 = io::file_digest(path);
    CHECK(d1.size() == 16);
    CHECK(d1 == io::file_digest(path));
    io::write_text_file(path, "{\"dim\": 1}");
    CHECK(d1 != io::file_digest(path));
    CHECK_THROWS_AS(io::load_json_file("./does_not_exist.json"), input_error);
    io::write_text_file(path, "{broken");
    CHECK_THROWS_AS(io::load_json_file(path), input_error);
    std::remove(path.c_str());
}
