#include <doctest.h>

#include <algorithm>

#include "helpers.hpp"
#include "invmon/error.hpp"
#include "invmon/presentation.hpp"

using namespace invmon;

namespace {
  bool has_relation(Presentation const& p, std::string const& u, std::string const& v) {
    Relation r{p.word(u), p.word(v)}, s{p.word(v), p.word(u)};
    auto const& rs = p.relations();
    return std::find(rs.begin(), rs.end(), r) != rs.end()
           || std::find(rs.begin(), rs.end(), s) != rs.end();
  }
}  // namespace

TEST_SUITE("presentation") {
  TEST_CASE("parse") {
    auto bicyclic = parse_presentation("gens: a; rels: a a^-1 = 1;");
    CHECK(bicyclic.number_of_generators() == 1);
    REQUIRE(bicyclic.relations().size() == 1);
    CHECK(bicyclic.relations()[0].lhs == bicyclic.word("a a^-1"));
    CHECK(bicyclic.relations()[0].rhs.empty());
    CHECK_FALSE(bicyclic.e_unitary_asserted());

    auto free2 = parse_presentation("gens: a b;");
    CHECK(free2.number_of_generators() == 2);
    CHECK(free2.relations().empty());

    CHECK_THROWS_AS(parse_presentation("gens: a; rels: a = b;"), ParseError);
    try {
      parse_presentation("gens: a;\nrels: a = b;");
    } catch (ParseError const& e) {
      CHECK(e.line() == 2);
      CHECK(e.column() == 11);
    }
  }

  TEST_CASE("parse details") {
    auto p = parse_presentation(
        "# comment\n"
        "gens: a b ; # trailing\n"
        "rels: a b = b a = 1 ,\n"
        "      a^2 = a ;\n"
        "flags: e_unitary ;\n");
    CHECK(p.relations().size() == 3);
    CHECK(p.e_unitary_asserted());
    CHECK(has_relation(p, "a b", "1"));
    CHECK_THROWS_AS(parse_presentation("gens: a ; flags: nope ;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a a ;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a"), ParseError);
    CHECK_THROWS_AS(parse_presentation("rels: 1 = 1 ; gens: a ;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a ; rels: a ;"), ParseError);
    CHECK_THROWS_AS(parse_presentation("gens: a ; colours: red ;"), ParseError);
    CHECK_THROWS_AS(read_presentation("/nonexistent/file.imp"), IoError);
  }

  TEST_CASE("is_special") {
    CHECK(is_special(parse_presentation("gens: a; rels: a a^-1 = 1;")));
    CHECK_FALSE(is_special(parse_presentation("gens: a b; rels: a b = b a;")));
    CHECK(is_special(parse_presentation("gens: a b;")));
  }

  TEST_CASE("group_image") {
    auto g = group_image(parse_presentation("gens: a; rels: a a^-1 = 1;"));
    REQUIRE(g.relators.size() == 1);
    CHECK(g.relators[0] == parse_word("a a^-1", g.alphabet));
    CHECK(free_reduce(g.relators[0]).empty());

    auto s = group_image(fixture_scary());
    REQUIRE(s.relators.size() == 1);
    CHECK(s.relators[0] == parse_word("b c b^-1 a d^-1 a^-1 c^-1 c d^-1 d", s.alphabet));

    CHECK(group_image(parse_presentation("gens: a b;")).relators.empty());
    auto two = group_image(parse_presentation("gens: a b; rels: a = b, a b = 1;"));
    CHECK(two.relators.size() == 2);
    CHECK(two.relators[0] == parse_word("a b^-1", two.alphabet));
  }

  TEST_CASE("fixture_scary") {
    auto p = fixture_scary();
    CHECK(p.number_of_generators() == 4);
    REQUIRE(p.relations().size() == 1);
    // the relator as printed has 10 letters
    CHECK(p.relations()[0].lhs.size() == 10);
    CHECK(is_special(p));
    CHECK(p.e_unitary_asserted());
    auto [z, y] = split_generators(p);
    CHECK(z.size() == 4);
    CHECK(y.empty());
  }

  TEST_CASE("fixture_bs") {
    auto p1 = fixture_bs(1);
    CHECK(p1.relations()[0].lhs == p1.word("a b a^-1 b^-1"));
    CHECK(fixture_bs(2).relations()[0].lhs.size() == 5);
    CHECK_THROWS_AS(fixture_bs(0), InvalidArgument);
    CHECK(fixture_bs(3).e_unitary_asserted());
    CHECK(cyclically_reduced_hint(fixture_bs(2)));
  }

  TEST_CASE("fixture_gray") {
    Alphabet x({"x"});
    auto     p = fixture_gray(x, {Word()}, {parse_word("x", x)});
    CHECK(p.number_of_generators() == 2);
    REQUIRE(p.relations().size() == 1);
    CHECK(p.relations()[0].lhs
          == p.word("x x^-1 t x t^-1 t x^-1 t^-1 x^-1 x"));
    CHECK(p.relations()[0].lhs.size() == 2 + 2 * (1 + 2) + 2);
    CHECK(is_special(p));

    auto k0 = fixture_gray(x, {Word()}, {});
    CHECK(k0.relations()[0].lhs == k0.word("x x^-1 x^-1 x"));

    Alphabet xy({"x", "y"});
    auto     q = fixture_gray(xy, {parse_word("x y", xy), parse_word("y y", xy)},
                          {parse_word("x", xy), parse_word("x y^-1", xy)});
    CHECK(q.relations().size() == 2);
    std::size_t e_length = 2 * 2 + 2 * ((1 + 2) + (2 + 2)) + 2 * 2;
    CHECK(q.relations()[0].lhs.size() == e_length + 2);
    CHECK(q.relations()[0].lhs.subword(e_length, 2) == q.word("x y"));
    CHECK(is_special(q));

    CHECK_THROWS_AS(fixture_gray(x, {}, {}), InvalidArgument);
    CHECK_THROWS_AS(fixture_gray(Alphabet({"x", "t"}), {Word()}, {}), InvalidArgument);
  }

  TEST_CASE("fixture_clifford") {
    GroupPresentation g{Alphabet({"a"}), {}}, h{Alphabet({"ap"}), {}};
    auto              p = fixture_clifford(g, h, {0});
    CHECK(p.number_of_generators() == 3);
    CHECK(has_relation(p, "e ap", "a"));
    CHECK(has_relation(p, "e e", "e"));
    CHECK(has_relation(p, "a a^-1", "e"));
    CHECK(has_relation(p, "a^-1 a", "e"));
    CHECK(has_relation(p, "ap ap^-1", "1"));
    CHECK(has_relation(p, "e ap", "ap e"));
    CHECK_FALSE(is_special(p));

    // relation count 2|X'| + 1 + 2|X'| + 2|Y| + m + n
    GroupPresentation g2{Alphabet({"a", "b"}), {}}, h2{Alphabet({"c"}), {}};
    g2.relators.push_back(parse_word("a b a^-1 b^-1", g2.alphabet));
    h2.relators.push_back(parse_word("c c", h2.alphabet));
    auto q = fixture_clifford(g2, h2, {1});
    CHECK(q.relations().size() == 2 * 1 + 1 + 2 * 1 + 2 * 2 + 1 + 1);
    CHECK(has_relation(q, "c c c c", "c c"));
    CHECK(has_relation(q, "e c", "b"));

    CHECK_THROWS_AS(fixture_clifford(g, GroupPresentation{Alphabet({"a"}), {}}, {0}),
                    InvalidArgument);
    CHECK_THROWS_AS(fixture_clifford(g, h, {}), InvalidArgument);
  }

  TEST_CASE("split_generators") {
    auto p      = parse_presentation("gens: a y; rels: a a^-1 = 1;");
    auto [z, y] = split_generators(p);
    CHECK(z == std::vector<gen_type>{0});
    CHECK(y == std::vector<gen_type>{1});
    auto [z2, y2] = split_generators(parse_presentation("gens: a b;"));
    CHECK(z2.empty());
    CHECK(y2.size() == 2);
  }

  TEST_CASE("sub_presentation") {
    auto p   = parse_presentation("gens: y a; rels: a a^-1 = 1; flags: e_unitary;");
    auto sub = sub_presentation(p, {1});
    CHECK(sub.presentation.number_of_generators() == 1);
    CHECK(sub.presentation.relations().size() == 1);
    CHECK(sub.lift(sub.presentation.word("a a")) == p.word("a a"));
    CHECK(sub.restrict(p.word("a^-1")) == sub.presentation.word("a^-1"));
    CHECK_THROWS_AS(sub.restrict(p.word("y")), InvalidArgument);
    CHECK_THROWS_AS(sub_presentation(p, {0}), InvalidArgument);
  }

  TEST_CASE("print then parse is the identity on fixtures") {
    Alphabet          x({"x"});
    GroupPresentation g{Alphabet({"a"}), {}}, h{Alphabet({"ap"}), {}};
    std::vector<Presentation> all{fixture_scary(),
                                  fixture_bs(1),
                                  fixture_bs(2),
                                  fixture_bs(3),
                                  fixture_gray(x, {Word()}, {parse_word("x", x)}),
                                  fixture_clifford(g, h, {0}),
                                  parse_presentation("gens: a b;")};
    for (auto const& p : all) {
      CHECK(parse_presentation(to_string(p)) == p);
      CHECK(group_image(p).relators.size() == p.relations().size());
    }
  }
}
