#include <doctest.h>

#include "helpers.hpp"
#include "invmon/error.hpp"
#include "invmon/geometry.hpp"

using namespace invmon;

namespace {
  Presentation const& bicyclic() {
    static Presentation const p
        = parse_presentation("gens: a; rels: a a^-1 = 1; flags: e_unitary;");
    return p;
  }
  Presentation const& free2() {
    static Presentation const p = parse_presentation("gens: a b; flags: e_unitary;");
    return p;
  }
}  // namespace

TEST_SUITE("geometry") {
  TEST_CASE("embedded closure without relations") {
    FreeGroupOracle fg(2);
    auto            e = embedded_closure(free2(), free2().word("a b"), fg, 3, Budget{});
    CHECK(e.normal_forms.size() == 3);
    CHECK_FALSE(e.clipped);
    CHECK(e.fixpoint);
    CHECK(e.graph.beta() == e.find(free2().word("a b")));
  }

  TEST_CASE("embedded closure of the bicyclic monoid") {
    FreeGroupOracle fg(1);
    auto const&     p = bicyclic();
    for (std::size_t r = 1; r <= 6; ++r) {
      auto e = embedded_closure(p, Word(), fg, r, Budget{});
      CHECK(e.normal_forms.size() == r + 1);
      for (int i = 0; i <= static_cast<int>(r); ++i) {
        CHECK(e.find(power(p.word("a"), i)) != UNDEFINED_VERTEX);
      }
      CHECK(e.clipped);
    }
  }

  TEST_CASE("embedded closure of the one-relator fixture") {
    auto p = fixture_scary();
    auto o = scary_oracle();
    auto e = embedded_closure(p, Word(), *o, 4, Budget{});
    for (auto const& text : {"1", "b", "b c", "b c b^-1", "b c b^-1 a", "b c b^-1 a d^-1"}) {
      CAPTURE(text);
      CHECK(e.find(o->normal_form_or_throw(p.word(text))) != UNDEFINED_VERTEX);
    }
    // the relator reads d^-1 backwards from 1, i.e. "a" and "a d" are there too
    CHECK(e.find(o->normal_form_or_throw(p.word("a"))) != UNDEFINED_VERTEX);
    CHECK(e.find(o->normal_form_or_throw(p.word("a d"))) != UNDEFINED_VERTEX);
  }

  TEST_CASE("embedded closure grows with radius and budget") {
    auto p = fixture_bs(2);
    BaumslagSolitarOracle o(2);
    std::size_t           prev = 0;
    for (std::size_t r = 1; r <= 4; ++r) {
      auto small = embedded_closure(p, Word(), o, r, Budget{2, 1'000'000});
      auto large = embedded_closure(p, Word(), o, r, Budget{6, 1'000'000});
      for (auto const& nf : small.normal_forms) {
        REQUIRE(large.find(nf) != UNDEFINED_VERTEX);
      }
      CHECK(large.normal_forms.size() >= prev);
      prev = large.normal_forms.size();
    }
  }

  TEST_CASE("embedded closure refusals") {
    auto            p = parse_presentation("gens: a; rels: a a^-1 = 1;");
    FreeGroupOracle fg(1);
    CHECK_THROWS_AS(embedded_closure(p, Word(), fg, 2, Budget{}), Refusal);
    CHECK_THROWS_AS(embedded_closure(bicyclic(), bicyclic().word("a a a"), fg, 2, Budget{}),
                    InvalidArgument);
  }

  TEST_CASE("distortion profile is isometric on free inverse monoids") {
    FreeGroupOracle fg(2);
    for (auto const& text : {"a b a^-1 b", "a a b^-1 a^-1 b b", "b a^-1 a^-1 b^-1 a"}) {
      auto t = distortion_profile(free2(), free2().word(text), fg, Budget{}, 8);
      CHECK_FALSE(t.clipped);
      for (auto const& row : t.rows) {
        CHECK(row.phi_hat == row.r);
      }
    }
  }

  TEST_CASE("distortion profile of Z") {
    auto            p = parse_presentation("gens: a; rels: a a^-1 = 1, a^-1 a = 1; flags: e_unitary;");
    FreeGroupOracle fg(1);
    auto            t = distortion_profile(p, p.word("a a a"), fg, Budget{6, 1'000'000}, 6);
    REQUIRE_FALSE(t.rows.empty());
    for (auto const& row : t.rows) {
      CHECK(row.phi_hat == row.r);
    }
  }

  TEST_CASE("distortion witnesses reproduce") {
    auto o = scary_oracle();
    auto p = fixture_scary();
    Budget b{3, 1'000'000};
    auto   a = approximate(p, Word(), b);
    auto   t = distortion_profile(a, *o, b, 4);
    auto   labels = sigma_labels(a.graph, *o);
    std::uint32_t last = 0;
    for (auto const& row : t.rows) {
      CHECK(row.phi_hat >= last);
      last = row.phi_hat;
      auto d = path_metric(a.graph, row.x, row.y);
      REQUIRE(d.is_finite());
      CHECK(d.value() == row.phi_hat);
      CHECK(group_length(*o, invert(labels[row.x]) * labels[row.y]) <= row.r);
      CHECK(labels[row.x] == row.nf_x);
    }
    CHECK(t.clipped);
    // the serial kernels give the same table
    auto s = distortion_profile(a, *o, b, 4, Exec::serial);
    REQUIRE(s.rows.size() == t.rows.size());
    for (std::size_t i = 0; i < s.rows.size(); ++i) {
      CHECK(s.rows[i].phi_hat == t.rows[i].phi_hat);
      CHECK(s.rows[i].x == t.rows[i].x);
      CHECK(s.rows[i].y == t.rows[i].y);
    }
  }

  TEST_CASE("distortion refuses without the e_unitary flag") {
    auto            p = parse_presentation("gens: a; rels: a a^-1 = 1;");
    FreeGroupOracle fg(1);
    CHECK_THROWS_AS(distortion_profile(p, Word(), fg, Budget{}, 3), Refusal);
  }

  TEST_CASE("prefix membership") {
    auto const&     p = bicyclic();
    FreeGroupOracle fg(1);
    Budget          b{8, 100'000};
    auto            stephen = stephen_right_unit_tester(p, b);
    auto            rules   = parse_rules("rule: a a^-1 -> 1 ;\nconfluent_terminating\n", p.alphabet());
    auto            total   = rewriting_right_unit_tester(rules);
    LengthBound     linear  = [](std::size_t n) { return n; };
    CHECK(total.total);
    CHECK_FALSE(stephen.total);

    CHECK(prefix_membership(p, p.word("a"), fg, std::nullopt, stephen, b, 4) == TriBool::confirmed);
    CHECK(prefix_membership(p, p.word("a^-1"), fg, linear, total, b, 4) == TriBool::refuted);
    CHECK(prefix_membership(p, p.word("a^-1"), fg, linear, stephen, b, 4) == TriBool::unknown);
    CHECK(prefix_membership(p, p.word("a^-1"), fg, std::nullopt, total, b, 4) == TriBool::unknown);
    CHECK(prefix_membership(p, Word(), fg, std::nullopt, stephen, b, 1) == TriBool::confirmed);
    CHECK(prefix_membership(fixture_scary(), Word(), *scary_oracle(), std::nullopt,
                            stephen_right_unit_tester(fixture_scary(), b), b, 1)
          == TriBool::confirmed);
    // a^3 needs radius 3 for the positive path, or the bounded search
    CHECK(prefix_membership(p, p.word("a a a"), fg, std::nullopt, stephen, b, 2) == TriBool::unknown);
    CHECK(prefix_membership(p, p.word("a a a"), fg, linear, total, b, 2) == TriBool::confirmed);
    CHECK_THROWS_AS(prefix_membership(parse_presentation("gens: a b; rels: a b = b a;"), Word(),
                                      FreeGroupOracle(2), std::nullopt, stephen, b, 1),
                    InvalidArgument);
  }

  TEST_CASE("rewriting right-unit tester") {
    auto p  = bicyclic();
    auto rs = parse_rules("rule: a a^-1 -> 1 ;\nconfluent_terminating\n", p.alphabet());
    auto t  = rewriting_right_unit_tester(rs);
    CHECK(t.test(p.word("a a")) == TriBool::confirmed);
    CHECK(t.test(p.word("a^-1")) == TriBool::refuted);
    CHECK(t.test(p.word("a a^-1 a")) == TriBool::confirmed);
    auto partial = rewriting_right_unit_tester(RewritingSystem{rs.rules, false, false});
    CHECK(partial.test(p.word("a^-1")) == TriBool::unknown);
    // agrees with Stephen's procedure wherever the latter confirms
    for (auto const& u : all_words(1, 5)) {
      if (test_right_unit(p, u, Budget{6, 100'000}) == TriBool::confirmed) {
        CHECK(t.test(u) == TriBool::confirmed);
      }
    }
  }

  TEST_CASE("group_length") {
    FreeGroupOracle fg(2);
    CHECK(group_length(fg, invmon::test::w("a b b^-1 a")) == 2);
    BaumslagSolitarOracle bs(2);
    CHECK(group_length(bs, invmon::test::w("b a a b^-1")) == 1);
  }
}
