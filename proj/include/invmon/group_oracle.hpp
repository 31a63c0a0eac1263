#pragma once

// Word problem oracles for maximal group images, and Cayley balls built from
// their normal forms.
//
// An oracle answers for words over generators 0, ..., n - 1. Exact oracles
// also provide a normal form, which must be canonical: two words have the
// same normal form iff they are equal in the group.

#include <cstddef>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "tribool.hpp"
#include "words.hpp"
#include "xgraph.hpp"

namespace invmon {

  class GroupOracle {
   public:
    virtual ~GroupOracle() = default;

    virtual std::size_t number_of_generators() const = 0;

    //! True if normal_form never returns nullopt for valid input.
    virtual bool has_normal_forms() const = 0;

    //! Canonical representative, or nullopt when unavailable.
    virtual std::optional<Word> normal_form(Word const& w) const = 0;

    //! Default: via normal_form (unknown when it is unavailable).
    virtual TriBool is_identity(Word const& w) const;

    virtual std::string description() const = 0;

    //! is_identity(u * v^-1).
    TriBool equal(Word const& u, Word const& v) const {
      return is_identity(u * invert(v));
    }

    //! normal_form, throwing OracleError instead of returning nullopt.
    Word normal_form_or_throw(Word const& w) const;
  };

  using OraclePtr = std::shared_ptr<GroupOracle const>;

  //! The free group on `rank` generators; normal form = free reduction.
  class FreeGroupOracle : public GroupOracle {
   public:
    explicit FreeGroupOracle(std::size_t rank) : _rank(rank) {}

    std::size_t number_of_generators() const override {
      return _rank;
    }
    bool has_normal_forms() const override {
      return true;
    }
    std::optional<Word> normal_form(Word const& w) const override;
    std::string         description() const override;

   private:
    std::size_t _rank;
  };

  //! Free product of two oracles. `gens1[i]` is the generator of the
  //! product that factor 1 calls i, likewise for gens2; the two lists must be
  //! disjoint. The normal form is the alternating sequence of non-trivial
  //! factor normal forms.
  class FreeProductOracle : public GroupOracle {
   public:
    FreeProductOracle(OraclePtr             o1,
                      OraclePtr             o2,
                      std::vector<gen_type> gens1,
                      std::vector<gen_type> gens2);

    //! Factor 1 on generators 0 .. n1 - 1, factor 2 on the next n2.
    FreeProductOracle(OraclePtr o1, OraclePtr o2);

    std::size_t number_of_generators() const override {
      return _num_gens;
    }
    bool has_normal_forms() const override;
    std::optional<Word> normal_form(Word const& w) const override;
    std::string         description() const override;

    //! Which factor (0 or 1) a generator belongs to.
    int factor_of(gen_type g) const;

   private:
    OraclePtr                        _factor[2];
    std::vector<gen_type>            _gens[2];
    std::vector<int>                 _owner;
    std::vector<gen_type>            _local;
    std::size_t                      _num_gens;
  };

  struct RewritingRule {
    Word lhs;
    Word rhs;

    friend bool operator==(RewritingRule const&, RewritingRule const&) = default;
  };

  //! A rewriting system as read from a rules file.
  //!
  //! `confluent_terminating`: the caller asserts every word reaches a unique
  //! irreducible form, so fixpoints are normal forms.
  //! `identity_exact`: the caller asserts termination and that the only
  //! irreducible word equal to 1 is the empty word (weaker: fixpoints are
  //! not canonical, but identity tests are exact).
  struct RewritingSystem {
    std::vector<RewritingRule> rules;
    bool                       confluent_terminating = false;
    bool                       identity_exact        = false;
  };

  //! Rules file: lines `rule: lhs -> rhs ;` and flag lines
  //! `confluent_terminating` or `identity_exact`, # comments.
  RewritingSystem parse_rules(std::string_view text, Alphabet const& alphabet);
  RewritingSystem read_rules(std::string const& path, Alphabet const& alphabet);

  //! Repeatedly replaces the leftmost occurrence of a left-hand side (rules
  //! tried in order at each position), calling free_reduce after each step
  //! when `group` is set. nullopt if `step_budget` rewrites do not reach an
  //! irreducible word.
  std::optional<Word> rewrite(Word const&                       w,
                              std::vector<RewritingRule> const& rules,
                              std::size_t                       step_budget,
                              bool                              group = true);

  //! String rewriting interleaved with free reduction. Normal forms are only
  //! offered for systems flagged confluent_terminating; otherwise an empty
  //! fixpoint confirms the identity and anything else is unknown (unless the
  //! system is flagged identity_exact).
  class RewritingOracle : public GroupOracle {
   public:
    RewritingOracle(std::size_t num_gens, RewritingSystem system, std::size_t step_budget);

    std::size_t number_of_generators() const override {
      return _num_gens;
    }
    bool has_normal_forms() const override {
      return _system.confluent_terminating;
    }
    std::optional<Word> normal_form(Word const& w) const override;
    TriBool             is_identity(Word const& w) const override;
    std::string         description() const override;

   private:
    std::size_t     _num_gens;
    RewritingSystem _system;
    std::size_t     _step_budget;
  };

  //! The rewriting rules a^-1 b -> b a^-n and b^-1 a -> a^n b^-1 for
  //! BS(1, n) = Gp<a, b | a b a^-n b^-1>, completed by a b -> b a^n and
  //! b^-1 a^-1 -> a^-n b^-1 so that every irreducible word has the shape
  //! b^p a^m b^-q. That shape is 1 only when empty, hence the system is
  //! flagged identity_exact; it is not confluent (b a^n b^-1 and a are both
  //! irreducible).
  RewritingSystem bs_rewriting_rules(unsigned n);

  //! Exact oracle for BS(1, n) = Gp<a, b | a b a^-n b^-1> (a = 0, b = 1),
  //! n >= 1, via the faithful action on Z[1/n] x Z. Normal form
  //! b^p a^m b^-q with p minimal.
  class BaumslagSolitarOracle : public GroupOracle {
   public:
    explicit BaumslagSolitarOracle(unsigned n);

    std::size_t number_of_generators() const override {
      return 2;
    }
    bool has_normal_forms() const override {
      return true;
    }
    std::optional<Word> normal_form(Word const& w) const override;
    TriBool             is_identity(Word const& w) const override;
    std::string         description() const override;

   private:
    unsigned _n;
  };

  //! An oracle for a group presented on a different generating set: words
  //! are mapped through `forward` (image of each generator in the target's
  //! alphabet), solved by the target, and normal forms are mapped back
  //! through `backward` (image of each target generator) and freely reduced.
  //! Without `backward` no normal forms are offered.
  class SubstitutionOracle : public GroupOracle {
   public:
    SubstitutionOracle(OraclePtr                               target,
                       std::vector<Word>                       forward,
                       std::optional<std::vector<Word>>        backward,
                       std::string                             name = "substitution");

    std::size_t number_of_generators() const override {
      return _forward.size();
    }
    bool has_normal_forms() const override {
      return _backward.has_value() && _target->has_normal_forms();
    }
    std::optional<Word> normal_form(Word const& w) const override;
    TriBool             is_identity(Word const& w) const override;
    std::string         description() const override;

    Word forward(Word const& w) const;

   private:
    OraclePtr                        _target;
    std::vector<Word>                _forward;
    std::optional<std::vector<Word>> _backward;
    std::string                      _name;
  };

  //! The oracle restricted to the subgroup generated by `gens`, renumbered
  //! 0 .. |gens| - 1. Normal forms must stay inside the subset (OracleError
  //! otherwise), which holds for free products split along their factors.
  OraclePtr restrict_oracle(OraclePtr oracle, std::vector<gen_type> const& gens);

  //! Group image oracle for the fixture with generators a, b, c, d and
  //! relator b c b^-1 a d^-1 a^-1: free on a, b, u with c = b^-1 u b and
  //! d = a^-1 u a. Normal forms are written back over a, b, c, d.
  OraclePtr scary_oracle();

  //! Ball of radius r around 1 in the Cayley graph, as the induced subgraph
  //! on the elements at distance <= r. Vertex 0 is the identity; vertices are
  //! numbered in BFS order (letters in code order).
  struct CayleyBall {
    XGraph                                 graph;
    std::vector<Word>                      normal_forms;
    std::vector<std::uint32_t>             distance;
    std::unordered_map<Word, vertex_type>  index;
    std::size_t                            radius = 0;

    std::size_t size() const noexcept {
      return normal_forms.size();
    }
    //! Vertex with normal form nf, or UNDEFINED_VERTEX.
    vertex_type find(Word const& nf) const;
  };

  //! Throws InvalidArgument if the oracle has no normal forms and
  //! OracleError if it fails to answer.
  CayleyBall cayley_ball(GroupOracle const& oracle, std::size_t radius);

}  // namespace invmon
