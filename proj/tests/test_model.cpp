#include <doctest.h>

#include <string>

#include "support.hpp"
#include "toric/report.hpp"

using namespace toric;

namespace {

std::string location_of(const std::string& text) {
    try {
        parse_model(text);
    } catch (const ModelParseError& e) {
        return e.location();
    }
    return "<no error>";
}

const char* const kP2 = R"({"name": "p2", "rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[1,2],[2,3],[1,3]],
  "polynomial": [{"coefficient": "1", "exponents": [3,0,0]}, {"coefficient": "-2/3", "exponents": [1,1,1]}]})";

} // namespace

TEST_CASE("a hand-written model parses") {
    const Model m = parse_model(kP2);
    CHECK(m.name == "p2");
    CHECK(m.fan.ray_count() == 3);
    CHECK(m.divisor == TorusDivisor{1, 1, 1});
    REQUIRE(m.polynomial);
    CHECK(m.polynomial->to_string() == "x1^3 - 2/3*x1*x2*x3");
    CHECK(m.hash.size() == 16);
}

TEST_CASE("parse errors carry a location") {
    CHECK(location_of("{\n  \"rank\": 2,\n  \"rays\": [[1,0]\n  oops\n}") == "line 4");
    CHECK(location_of(R"({"rays": [[1]], "cones": [[1]]})") == "/");
    CHECK(location_of(R"({"rank": 0, "rays": [], "cones": []})") == "/rank");
    CHECK(location_of(R"({"rank": 2, "rays": [[1,0],[0]], "cones": [[1]]})") == "/rays/1");
    CHECK(location_of(R"({"rank": 2, "rays": [[1,0],[0,1]], "cones": [[1,2],[1,4]]})") == "/cones/1");
    CHECK(location_of(R"({"rank": 2, "rays": [[1,0],[0,1],[1,1]], "cones": [[1,2],[1,3]]})") == "/cones");
    CHECK(location_of(R"({"rank": 1, "rays": [[1],[-1]], "cones": [[1],[2]], "divisor": [1]})") == "/divisor");
    CHECK(location_of(R"({"rank": 1, "rays": [[1],[-1]], "cones": [[1],[2]],
        "polynomial": [{"coefficient": "1", "exponents": [2,0]}, {"coefficient": "x", "exponents": [0,2]}]})") ==
          "/polynomial/1/coefficient");
    CHECK(location_of(R"({"rank": 1, "rays": [[1],[-1]], "cones": [[1],[2]],
        "polynomial": [{"coefficient": "1", "exponents": [2,-1]}]})") == "/polynomial/0/exponents");
    CHECK(location_of(R"({"rank": 2, "rays": [[1,0],[0,1],[-1,-1]], "cones": [[1,2],[2,3],[1,3]],
        "polynomial": [{"coefficient": "1", "exponents": [2,0,0]}, {"coefficient": "1", "exponents": [0,1,0]}]})") ==
          "/polynomial");
    CHECK_THROWS_AS(load_model("/nonexistent/model.json"), ModelParseError);
    CHECK_THROWS_AS(preset("nope"), ModelParseError);
}

TEST_CASE("rational coefficients") {
    CHECK(parse_rational("3") == 3);
    CHECK(parse_rational("-3/6") == Rational(-1, 2));
    CHECK_THROWS(parse_rational("1/0"));
    CHECK_THROWS(parse_rational("abc"));
}

TEST_CASE("hashes depend on content only") {
    const Model a = parse_model(kP2);
    const Model b = parse_model(nlohmann::json::parse(kP2).dump(4));
    CHECK(a.hash == b.hash);
    const Model c = parse_model(R"({"name": "p2", "rank": 2, "rays": [[1,0],[0,1],[-1,-1]],
        "cones": [[1,2],[2,3],[1,3]]})");
    CHECK(a.hash != c.hash);
    CHECK(preset("quintic").hash == parse_model(preset_json("quintic")).hash);
}

TEST_CASE("reports are deterministic") {
    const Model ex = support::example();
    for (const auto& cmd : command_names()) {
        CAPTURE(cmd);
        CommandOptions opts;
        if (cmd == "deform" || cmd == "cocycle") opts.root = 0;
        const auto a = run_command(cmd, ex, opts);
        const auto b = run_command(cmd, support::example(), opts);
        CHECK(a.dump() == b.dump());
        CHECK(render_text(a) == render_text(b));
        CHECK(a.at("command") == cmd);
        CHECK(a.at("model").at("hash") == ex.hash);
    }
}

TEST_CASE("report contents for the example") {
    const Model ex = support::example();
    const auto roots = run_command("roots", ex, {});
    CHECK(roots.at("result").at("pairs").at(0).at("roots").size() == 3);
    CommandOptions opts;
    opts.root = 0;
    const auto d = run_command("deform", ex, opts);
    CHECK(d.at("result").at("composite_transition") == "x6 -> x6 - 2*t*x3/(x1*x2)");
    const auto dims = run_command("dims", ex, {});
    CHECK(dims.at("result").at("polynomial") == 83);
    CHECK(dims.at("result").at("total") == 86);
    opts.root = 7;
    CHECK_THROWS_AS(run_command("deform", ex, opts), DomainError);
    CHECK_THROWS(run_command("nope", ex, {}));
}

TEST_CASE("presets list") {
    const auto names = preset_names();
    CHECK(names.size() == 5);
    for (const auto& n : names) CHECK(preset(n).name == n);
}
