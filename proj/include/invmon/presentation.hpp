#pragma once

// Inverse monoid presentations Inv<X | u_i = v_i>, their text format, the
// maximal group image, and the fixture presentations used throughout the
// tests.

#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "words.hpp"

namespace invmon {

  struct Relation {
    Word lhs;
    Word rhs;

    friend bool operator==(Relation const&, Relation const&) = default;
  };

  //! An inverse monoid presentation. Relations are kept exactly as written
  //! (unreduced). The E-unitary flag is an assertion made by whoever built
  //! the presentation; nothing here verifies it.
  class Presentation {
   public:
    Presentation() = default;
    explicit Presentation(Alphabet alphabet) : _alphabet(std::move(alphabet)) {}
    Presentation(Alphabet alphabet, std::vector<Relation> relations, bool e_unitary = false);

    Alphabet const& alphabet() const noexcept {
      return _alphabet;
    }
    std::size_t number_of_generators() const noexcept {
      return _alphabet.size();
    }
    std::vector<Relation> const& relations() const noexcept {
      return _relations;
    }

    //! Throws InvalidArgument if a letter is outside the alphabet.
    void add_relation(Word lhs, Word rhs);

    bool e_unitary_asserted() const noexcept {
      return _e_unitary;
    }
    void assert_e_unitary(bool value = true) noexcept {
      _e_unitary = value;
    }

    //! Parse or print a word in this presentation's alphabet.
    Word        word(std::string_view text) const;
    std::string to_string(Word const& w) const;

    //! Throws InvalidArgument unless every letter of w is a generator.
    void validate_word(Word const& w) const;

    friend bool operator==(Presentation const&, Presentation const&) = default;

   private:
    Alphabet              _alphabet;
    std::vector<Relation> _relations;
    bool                  _e_unitary = false;
  };

  //! Gp<X | r_1, ..., r_m>.
  struct GroupPresentation {
    Alphabet          alphabet;
    std::vector<Word> relators;
  };

  //! Reads the text format
  //!
  //!   gens: a b c ;
  //!   rels: a b a^-1 b^-1 = 1 , a a^-1 = 1 ;
  //!   flags: e_unitary ;
  //!
  //! with # comments. A chain u = v = w stands for u = v, u = w. Throws
  //! ParseError with the position of the offending token.
  Presentation parse_presentation(std::string_view text);

  //! parse_presentation on the contents of a file; IoError if it cannot be
  //! read.
  Presentation read_presentation(std::string const& path);

  //! Inverse of parse_presentation.
  std::string to_string(Presentation const& p);

  //! True iff every relation has an empty side.
  bool is_special(Presentation const& p);

  //! Same generators, one relator lhs * rhs^-1 per relation.
  GroupPresentation group_image(Presentation const& p);

  //! Generators occurring in some relation (Z), and the rest (Y), both in
  //! increasing order.
  std::pair<std::vector<gen_type>, std::vector<gen_type>>
  split_generators(Presentation const& p);

  //! The presentation on a subset of the generators with every relation
  //! that only uses them. `to_parent[i]` is the parent index of generator i.
  struct SubPresentation {
    Presentation          presentation;
    std::vector<gen_type> to_parent;

    //! Translates a word over the subset into the parent alphabet.
    Word lift(Word const& w) const;
    //! Translates a parent word that only uses the subset; InvalidArgument
    //! otherwise.
    Word restrict(Word const& w) const;
  };

  //! Relations mentioning a generator outside `gens` are an error.
  SubPresentation sub_presentation(Presentation const& p, std::vector<gen_type> const& gens);

  //! Heuristic only: true for a one-relation special presentation whose
  //! relator is cyclically reduced, the classical sufficient condition for
  //! E-unitarity.
  bool cyclically_reduced_hint(Presentation const& p);

  //! Inv<a, b, c, d | b c b^-1 a d^-1 a^-1 c^-1 c d^-1 d = 1>, flagged
  //! E-unitary. Its group image is free on a, b and u = b c b^-1.
  Presentation fixture_scary();

  //! Inv<a, b | a b a^-n b^-1 = 1>, flagged E-unitary. n >= 1.
  Presentation fixture_bs(unsigned n);

  //! Inv<X, t | e r_1 = 1, r_2 = 1, ..., r_m = 1> where
  //! e = prod x x^-1 * prod_{s} (t s t^-1)(t s t^-1)^-1 * prod x^-1 x,
  //! the middle product running over the given s-words. Flagged E-unitary.
  //! Words are over X (indices 0 .. |X| - 1); t becomes generator |X|.
  Presentation fixture_gray(Alphabet const&          x,
                            std::vector<Word> const& relators,
                            std::vector<Word> const& s_words,
                            std::string const&       t_name = "t");

  //! The Clifford monoid presentation built from G = Gp<Y | w_j> and
  //! H' = Gp<X' | u_i>. `embedding[i]` is the Y-generator x corresponding to
  //! the i-th generator x' of X'. Generators: X', then Y, then e.
  //! Relations, in order:
  //!   1 = x' x'^-1, 1 = x'^-1 x'     for each x'
  //!   e e = e
  //!   e x' = x' e, e x' = x          for each x'
  //!   e = y y^-1, e = y^-1 y         for each y
  //!   u_i u_i = u_i, w_j w_j = w_j
  Presentation fixture_clifford(GroupPresentation const&     g,
                                GroupPresentation const&     h,
                                std::vector<gen_type> const& embedding,
                                std::string const&           e_name = "e");

}  // namespace invmon
