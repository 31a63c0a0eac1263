#include <doctest.h>

#include "helpers.hpp"
#include "invmon/error.hpp"
#include "invmon/stephen.hpp"

using namespace invmon;

namespace {
  Presentation const& bicyclic() {
    static Presentation const p = parse_presentation("gens: a; rels: a a^-1 = 1;");
    return p;
  }
  Presentation const& free2() {
    static Presentation const p = parse_presentation("gens: a b;");
    return p;
  }
  Budget rounds(std::size_t k) {
    return Budget{k, 1'000'000};
  }
}  // namespace

TEST_SUITE("stephen") {
  TEST_CASE("budget") {
    CHECK_THROWS_AS((Budget{0, 5}.validate()), InvalidArgument);
    CHECK_THROWS_AS((Budget{5, 0}.validate()), InvalidArgument);
    CHECK_NOTHROW(Budget{}.validate());
  }

  TEST_CASE("approximate without relations") {
    auto const& p = free2();
    auto        a = approximate(p, p.word("a b b^-1"), rounds(5));
    CHECK(a.saturated);
    CHECK(a.rounds_done == 0);
    CHECK(a.graph.number_of_vertices() == 3);
    CHECK(a.graph.target(0, pos(0)) == 1);
    CHECK(a.graph.target(1, pos(1)) == 2);
    CHECK(a.graph.beta() == 1);
  }

  TEST_CASE("bicyclic ray") {
    auto const& p = bicyclic();
    for (std::size_t k = 1; k <= 12; ++k) {
      auto a = approximate(p, Word(), rounds(k));
      CHECK(a.graph.number_of_vertices() == k + 1);
      CHECK(a.graph.alpha() == 0);
      CHECK(a.graph.beta() == 0);
      CHECK_FALSE(a.saturated);
      CHECK(read(a.graph, 0, power(p.word("a"), static_cast<int>(k))).has_value());
    }
  }

  TEST_CASE("a = 1 collapses the roots") {
    auto p = parse_presentation("gens: a; rels: a = 1;");
    auto a = approximate(p, p.word("a"), rounds(5));
    CHECK(a.saturated);
    CHECK(a.graph.number_of_vertices() == 1);
    CHECK(a.graph.target(0, pos(0)) == 0);
  }

  TEST_CASE("vertex limit") {
    auto const& p = bicyclic();
    auto        a = approximate(p, Word(), Budget{50, 10});
    CHECK(a.limit_hit);
    CHECK_FALSE(a.saturated);
    CHECK(a.graph.number_of_vertices() <= 10);
  }

  TEST_CASE("test_geq") {
    CHECK(test_geq(free2(), free2().word("a"), free2().word("a a^-1 a"), rounds(3))
          == TriBool::confirmed);
    auto const& p = bicyclic();
    CHECK(test_geq(p, Word(), p.word("a^-1 a"), rounds(3)) == TriBool::confirmed);
    CHECK(test_geq(p, p.word("a^-1 a"), Word(), rounds(20)) == TriBool::unknown);
  }

  TEST_CASE("test_equal") {
    auto const&     p = free2();
    FreeGroupOracle fg(2);
    CHECK(test_equal(p, p.word("a a^-1 a"), p.word("a"), rounds(3)) == TriBool::confirmed);
    CHECK(test_equal(p, p.word("a"), p.word("b"), rounds(3), &fg) == TriBool::refuted);
    CHECK(test_equal(p, p.word("a a^-1"), Word(), rounds(3)) == TriBool::unknown);
    CHECK(test_equal(p, p.word("a a^-1"), Word(), rounds(3), nullptr, true) == TriBool::refuted);
    CHECK_THROWS_AS(
        test_equal(bicyclic(), Word(), Word(), rounds(1), nullptr, true), InvalidArgument);
    CHECK(test_equal(bicyclic(), bicyclic().word("a a^-1"), Word(), rounds(5))
          == TriBool::confirmed);
  }

  TEST_CASE("test_right_unit") {
    auto const& p = bicyclic();
    CHECK(test_right_unit(p, p.word("a"), rounds(5)) == TriBool::confirmed);
    CHECK(test_right_unit(p, p.word("a^-1"), rounds(20)) == TriBool::unknown);
    CHECK(test_right_unit(p, Word(), rounds(1)) == TriBool::confirmed);
    CHECK(test_right_unit(free2(), Word(), rounds(1)) == TriBool::confirmed);
  }

  TEST_CASE("munn_graph") {
    auto g = munn_graph(invmon::test::w("a a^-1"));
    CHECK(g.number_of_vertices() == 2);
    CHECK(g.alpha() == 0);
    CHECK(g.beta() == 0);
    CHECK(iso_rooted(munn_graph(invmon::test::w("a")),
                     munn_graph(invmon::test::w("a a^-1 a"))));
    CHECK(munn_graph(Word()).number_of_vertices() == 1);
  }

  TEST_CASE("Munn trees decide equality without relations") {
    auto const&       p     = free2();
    std::vector<Word> words = all_words(2, 4);
    for (std::size_t i = 0; i < words.size(); i += 3) {
      for (std::size_t j = 0; j < words.size(); j += 5) {
        bool same = iso_rooted(munn_graph(words[i], 2), munn_graph(words[j], 2));
        auto t    = test_equal(p, words[i], words[j], rounds(1));
        REQUIRE((t == TriBool::confirmed) == same);
      }
    }
  }

  TEST_CASE("raising the budget keeps confirmations") {
    auto p = parse_presentation("gens: a b; rels: a b a^-1 = 1, b b^-1 = 1;");
    std::mt19937_64 rng(8);
    for (int i = 0; i < 60; ++i) {
      Word u = invmon::test::random_word(rng, 2, 5);
      Word v = invmon::test::random_word(rng, 2, 5);
      bool before = false;
      for (std::size_t k = 1; k <= 4; ++k) {
        bool now = test_geq(p, u, v, Budget{k, 200'000}) == TriBool::confirmed;
        REQUIRE((!before || now));
        before = now;
      }
    }
  }

  TEST_CASE("rounds grow monotonically") {
    auto        p = fixture_bs(2);
    StephenRun  run(p, p.word("a b"));
    XGraph      prev = run.graph();
    for (int r = 0; r < 4; ++r) {
      std::vector<vertex_type> map;
      auto                     outcome = run.step(1'000'000, &map);
      REQUIRE(outcome == StephenRun::Outcome::expanded);
      XGraph next = run.graph();
      REQUIRE(map.size() == prev.number_of_vertices());
      for (auto const& e : prev.edges()) {
        REQUIRE(next.target(map[e.source], pos(e.gen)) == map[e.target]);
      }
      REQUIRE(map[prev.alpha()] == next.alpha());
      REQUIRE(map[prev.beta()] == next.beta());
      prev = next;
    }
  }

  TEST_CASE("scan order does not change saturated graphs") {
    auto p = parse_presentation("gens: a b; rels: a a = a, b b = b, a b = b a;");
    auto q = parse_presentation("gens: a b; rels: a b = b a, b b = b, a a = a;");
    auto z3 = parse_presentation("gens: a; rels: a a a = 1, a^-1 a = 1;");
    auto z3r = parse_presentation("gens: a; rels: a^-1 a = 1, a a a = 1;");
    for (auto const& text : {"a b", "a b^-1 a", "b a^-1 b b", ""}) {
      auto x = approximate(p, p.word(text), rounds(30));
      auto y = approximate(q, q.word(text), rounds(30));
      REQUIRE(x.saturated);
      REQUIRE(y.saturated);
      CHECK(iso_rooted(x.graph, y.graph));
    }
    for (auto const& text : {"a", "a a^-1 a^-1", ""}) {
      auto x = approximate(z3, z3.word(text), rounds(30));
      auto y = approximate(z3r, z3r.word(text), rounds(30));
      REQUIRE(x.saturated);
      REQUIRE(y.saturated);
      CHECK(x.graph.number_of_vertices() == 3);
      CHECK(iso_rooted(x.graph, y.graph));
    }
  }

  TEST_CASE("reads_root_path") {
    auto const& p = bicyclic();
    auto        a = approximate(p, p.word("a^-1"), rounds(3));
    CHECK(reads_root_path(a, p.word("a^-1")));
    CHECK(reads_root_path(a, p.word("a^-1 a a^-1")));
    CHECK_FALSE(reads_root_path(a, p.word("a")));
  }
}
