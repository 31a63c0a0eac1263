#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "invmon/error.hpp"
#include "invmon/group_oracle.hpp"
#include "invmon/presentation.hpp"

using namespace invmon;
using invmon::test::w;

namespace {
  Alphabet const& at() {
    static Alphabet const a({"a", "t"});
    return a;
  }
  Word wt(std::string const& s) {
    return parse_word(s, at());
  }
  Alphabet const& abu() {
    static Alphabet const a({"a", "b", "u"});
    return a;
  }
}  // namespace

TEST_SUITE("group_oracle") {
  TEST_CASE("free group") {
    FreeGroupOracle fg(2);
    CHECK(fg.is_identity(w("a a^-1")) == TriBool::confirmed);
    CHECK(fg.is_identity(w("a b")) == TriBool::refuted);
    CHECK(fg.normal_form(w("a b b^-1")) == w("a"));
    CHECK(fg.equal(w("a b b^-1"), w("a")) == TriBool::confirmed);
  }

  TEST_CASE("free product") {
    auto              fa = std::make_shared<FreeGroupOracle>(1);
    FreeProductOracle fp(fa, fa);
    CHECK(fp.is_identity(wt("a t t^-1 a^-1")) == TriBool::confirmed);
    CHECK(fp.normal_form(wt("t a t^-1")) == wt("t a t^-1"));
    CHECK(fp.is_identity(wt("t a t^-1")) == TriBool::refuted);
    CHECK(fp.normal_form(wt("a t a^-1 a t^-1")) == wt("a"));
    CHECK(fp.factor_of(0) == 0);
    CHECK(fp.factor_of(1) == 1);
    CHECK_THROWS_AS(FreeProductOracle(fa, fa, {0}, {0}), InvalidArgument);
  }

  TEST_CASE("free product of free groups agrees with the free group") {
    auto              f1 = std::make_shared<FreeGroupOracle>(1);
    auto              f2 = std::make_shared<FreeGroupOracle>(2);
    FreeProductOracle fp(f1, f2);
    FreeGroupOracle   fg(3);
    std::mt19937_64   rng(11);
    for (int i = 0; i < 1000; ++i) {
      Word u = invmon::test::random_word(rng, 3, 12);
      REQUIRE(fp.normal_form(u) == fg.normal_form(u));
      REQUIRE(fp.is_identity(u) == fg.is_identity(u));
    }
  }

  TEST_CASE("normal forms are idempotent") {
    std::vector<OraclePtr> oracles{
        std::make_shared<FreeGroupOracle>(2),
        std::make_shared<BaumslagSolitarOracle>(1),
        std::make_shared<BaumslagSolitarOracle>(2),
        std::make_shared<BaumslagSolitarOracle>(3),
        std::make_shared<FreeProductOracle>(std::make_shared<FreeGroupOracle>(1),
                                            std::make_shared<BaumslagSolitarOracle>(2)),
        std::make_shared<RewritingOracle>(
            1, RewritingSystem{{}, true, false}, 1000)};
    std::mt19937_64 rng(3);
    for (auto const& o : oracles) {
      CAPTURE(o->description());
      for (int i = 0; i < 1000; ++i) {
        Word u  = invmon::test::random_word(rng, o->number_of_generators(), 12);
        auto nf = o->normal_form(u);
        REQUIRE(nf.has_value());
        REQUIRE(o->normal_form(*nf) == nf);
        REQUIRE(o->equal(u, *nf) == TriBool::confirmed);
        REQUIRE((o->is_identity(u) == TriBool::confirmed) == nf->empty());
      }
    }
  }

  TEST_CASE("rewriting oracle") {
    auto rules = bs_rewriting_rules(2);
    RewritingOracle bs(2, rules, 10000);
    CHECK(bs.is_identity(w("a^-1 b a a b^-1")) == TriBool::confirmed);
    CHECK(bs.is_identity(w("b")) == TriBool::refuted);
    CHECK_FALSE(bs.has_normal_forms());

    RewritingSystem loop{{{w("a"), w("a a a^-1")}}, false, false};
    RewritingOracle stuck(2, loop, 100);
    CHECK(stuck.is_identity(w("a")) == TriBool::unknown);

    // without the flags a nonempty fixpoint is not a refutation
    RewritingOracle weak(2, RewritingSystem{bs_rewriting_rules(2).rules, false, false}, 10000);
    CHECK(weak.is_identity(w("b")) == TriBool::unknown);
    CHECK(weak.is_identity(w("a^-1 b a a b^-1")) == TriBool::confirmed);
  }

  TEST_CASE("rules file") {
    auto sys = parse_rules("# bs\nrule: a^-1 b -> b a^-2 ;\nrule: b^-1 a -> a a b^-1 ;\n"
                           "confluent_terminating\n",
                           invmon::test::ab());
    CHECK(sys.rules.size() == 2);
    CHECK(sys.confluent_terminating);
    CHECK_FALSE(sys.identity_exact);
    CHECK(sys.rules[0].rhs == w("b a^-1 a^-1"));
    CHECK_THROWS_AS(parse_rules("rule: a -> ;\n", invmon::test::ab()), ParseError);
    CHECK_THROWS_AS(parse_rules("rule: a b ;\n", invmon::test::ab()), ParseError);
    CHECK_THROWS_AS(parse_rules("confluent\n", invmon::test::ab()), ParseError);
    CHECK_THROWS_AS(read_rules("/nonexistent.rules", invmon::test::ab()), IoError);
  }

  TEST_CASE("rewrite") {
    std::vector<RewritingRule> rules{{w("a a^-1"), Word()}};
    CHECK(rewrite(w("b a a^-1 b^-1"), rules, 10, false) == w("b b^-1"));
    CHECK(rewrite(w("b a a^-1 b^-1"), rules, 10, true) == Word());
    CHECK(rewrite(w("a^-1 a"), rules, 10, false) == w("a^-1 a"));
  }

  TEST_CASE("Baumslag-Solitar oracle") {
    for (unsigned n : {1u, 2u, 3u}) {
      BaumslagSolitarOracle o(n);
      Word r = w("a b") * power(w("a"), -static_cast<int>(n)) * w("b^-1");
      CHECK(o.is_identity(r) == TriBool::confirmed);
      CHECK(o.is_identity(w("b")) == TriBool::refuted);
      CHECK(o.is_identity(w("a")) == TriBool::refuted);
    }
    BaumslagSolitarOracle o(2);
    CHECK(o.normal_form(w("a b")) == w("b a a"));
    CHECK(o.normal_form(w("b a b^-1")) == w("b a b^-1"));
    CHECK(o.normal_form(w("b a a b^-1")) == w("a"));
    // agrees with the identity-exact rewriting system
    RewritingOracle rw(2, bs_rewriting_rules(2), 100000);
    std::mt19937_64 rng(17);
    for (int i = 0; i < 500; ++i) {
      Word u = invmon::test::random_word(rng, 2, 10);
      REQUIRE(rw.is_identity(u) == o.is_identity(u));
    }
  }

  TEST_CASE("substitution and scary oracle") {
    auto scary = scary_oracle();
    auto p     = fixture_scary();
    CHECK(scary->number_of_generators() == 4);
    CHECK(scary->is_identity(p.relations()[0].lhs) == TriBool::confirmed);
    CHECK(scary->equal(p.word("c"), p.word("b^-1 a d a^-1 b")) == TriBool::confirmed);
    CHECK(scary->is_identity(p.word("c")) == TriBool::refuted);
    auto nf = scary->normal_form(p.word("b c b^-1"));
    REQUIRE(nf.has_value());
    CHECK(scary->equal(*nf, p.word("b c b^-1")) == TriBool::confirmed);
    std::mt19937_64 rng(23);
    for (int i = 0; i < 300; ++i) {
      Word u = invmon::test::random_word(rng, 4, 10);
      auto n = scary->normal_form(u);
      REQUIRE(n.has_value());
      REQUIRE(scary->normal_form(*n) == n);
    }
  }

  TEST_CASE("restrict_oracle") {
    auto fp = std::make_shared<FreeProductOracle>(std::make_shared<FreeGroupOracle>(1),
                                                  std::make_shared<BaumslagSolitarOracle>(2));
    auto r  = restrict_oracle(fp, {1, 2});
    CHECK(r->number_of_generators() == 2);
    CHECK(r->is_identity(w("a b a^-2 b^-1")) == TriBool::confirmed);
    CHECK(r->normal_form(w("a b")) == w("b a a"));
  }

  TEST_CASE("cayley balls") {
    FreeGroupOracle fg1(1), fg2(2), fg3(3);
    CHECK(cayley_ball(fg1, 2).size() == 5);
    CHECK(cayley_ball(fg2, 1).size() == 5);
    CHECK(cayley_ball(fg2, 2).size() == 17);
    CHECK(cayley_ball(fg3, 1).size() == 7);
    auto b = cayley_ball(fg2, 2);
    CHECK(b.normal_forms[0].empty());
    CHECK(b.graph.is_deterministic());
    CHECK(b.find(w("a b")) != UNDEFINED_VERTEX);
    CHECK(b.find(w("a b a")) == UNDEFINED_VERTEX);
    // induced subgraph: a 2-ball of a tree has 16 edges
    CHECK(b.graph.number_of_edges() == 16);

    RewritingOracle no_nf(2, bs_rewriting_rules(2), 100);
    CHECK_THROWS_AS(cayley_ball(no_nf, 1), InvalidArgument);
  }

  TEST_CASE("cayley balls are nested") {
    BaumslagSolitarOracle bs(2);
    auto                  small = cayley_ball(bs, 3);
    auto                  large = cayley_ball(bs, 4);
    CHECK(small.graph.is_deterministic());
    CHECK(large.graph.is_deterministic());
    for (auto const& nf : small.normal_forms) {
      CHECK(large.find(nf) != UNDEFINED_VERTEX);
    }
    std::set<Word> distinct(large.normal_forms.begin(), large.normal_forms.end());
    CHECK(distinct.size() == large.size());
    // the relator has length 5, so balls agree with the free group up to
    // radius 2 and are strictly smaller at radius 3
    CHECK(cayley_ball(bs, 2).size() == 17);
    CHECK(small.size() < 53);
  }
}
