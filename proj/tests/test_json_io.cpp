#include <doctest.h>

#include <filesystem>

#include "helpers.hpp"
#include "invmon/error.hpp"
#include "invmon/json_io.hpp"

using namespace invmon;

TEST_SUITE("json_io") {
  TEST_CASE("metric round trip") {
    auto j = Json::parse(R"({"distance": [[0, 1, null], [1, 0, null], [null, null, 0]]})");
    auto m = metric_from_json(j);
    CHECK(m.size() == 3);
    CHECK(m.distance(0, 2).is_infinite());
    CHECK(metric_to_json(m) == j);
    CHECK_THROWS_AS(metric_from_json(Json::parse(R"({"d": []})")), ParseError);
    CHECK_THROWS_AS(metric_from_json(Json::parse(R"({"distance": [[0, "x"], [1, 0]]})")),
                    ParseError);
  }

  TEST_CASE("witness round trip") {
    auto j = Json::parse(R"({"eps": "1/2", "R": 1, "S": 2,
                             "xi": {"0": {"0": "1/3", "1": "2/3"}, "1": {"1": 1}}})");
    auto w = witness_from_json<Rational>(j);
    REQUIRE(w.xi.size() == 2);
    CHECK(w.eps == Rational(1, 2));
    CHECK(w.xi[0][1].second == Rational(2, 3));
    auto back = witness_from_json<Rational>(witness_to_json(w));
    CHECK(back.xi == w.xi);
    auto d = witness_from_json<double>(j);
    CHECK(d.xi[0][0].second == doctest::Approx(1.0 / 3));
    CHECK(witness_to_json(d)["xi"]["1"]["1"] == 1.0);
    CHECK_THROWS_AS(witness_from_json<double>(Json::parse(R"({"eps": 1, "R": 1, "S": 1,
                                                              "xi": {"a": {}}})")),
                    ParseError);
  }

  TEST_CASE("map") {
    CHECK(map_from_json(Json::parse(R"({"f": [0, 0, 2]})")) == std::vector<std::size_t>{0, 0, 2});
    CHECK_THROWS_AS(map_from_json(Json::parse(R"({"f": [-1]})")), ParseError);
    CHECK(map_to_json({1, 2})["f"][1] == 2);
  }

  TEST_CASE("files") {
    auto path = std::filesystem::temp_directory_path() / "invmon_json_io_test.json";
    write_json_file(path, Json{{"f", {0}}});
    CHECK(map_from_json(read_json_file(path)) == std::vector<std::size_t>{0});
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_json_file("/nonexistent/x.json"), IoError);
  }

  TEST_CASE("approximant and distortion output") {
    auto p = parse_presentation("gens: a b; flags: e_unitary;");
    auto a = approximate(p, p.word("a b b^-1"), Budget{});
    auto j = approximant_to_json(a, p.alphabet());
    CHECK(j["vertices"] == 3);
    CHECK(j["saturated"] == true);
    CHECK(j["edges"].size() == 2);
    CHECK(j["edges"][1][1] == "b");

    FreeGroupOracle fg(2);
    auto            t  = distortion_profile(a, fg, Budget{}, 3);
    auto            tj = distortion_to_json(t, p.alphabet());
    CHECK(tj["rows"].size() == t.rows.size());
    CHECK(tj["clipped"] == false);
    CHECK(tj.contains("budget"));
    CHECK(tj["rows"][1]["witness"].size() == 2);
    auto text = distortion_to_text(t, p.alphabet());
    CHECK(text.find("phi_hat") != std::string::npos);
  }
}
