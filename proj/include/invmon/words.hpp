#pragma once

// Letters and words over X ∪ X^-1, free reduction, formal inversion, and the
// text syntax used by every file format in the project.

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace invmon {

  using gen_type = std::uint32_t;

  //! A generator or its formal inverse. Letters are ordered by code, which
  //! gives a < a^-1 < b < b^-1 < ...; this is the order used for every
  //! lexicographic tie-break in the library.
  class Letter {
   public:
    constexpr Letter() noexcept = default;
    constexpr Letter(gen_type gen, bool inverse) noexcept
        : _code(2 * gen + (inverse ? 1 : 0)) {}

    static constexpr Letter from_code(std::uint32_t code) noexcept {
      Letter l;
      l._code = code;
      return l;
    }

    constexpr gen_type gen() const noexcept {
      return _code >> 1;
    }
    constexpr bool is_inverse() const noexcept {
      return (_code & 1) != 0;
    }
    constexpr Letter inverse() const noexcept {
      return from_code(_code ^ 1);
    }
    constexpr std::uint32_t code() const noexcept {
      return _code;
    }

    friend constexpr auto operator<=>(Letter, Letter) noexcept = default;

   private:
    std::uint32_t _code = 0;
  };

  constexpr Letter pos(gen_type g) noexcept {
    return Letter(g, false);
  }
  constexpr Letter neg(gen_type g) noexcept {
    return Letter(g, true);
  }

  //! A finite word; the empty word denotes 1. Words are values: nothing in the
  //! library mutates a word in place, reductions return new words.
  class Word {
   public:
    using const_iterator = std::vector<Letter>::const_iterator;

    Word() = default;
    Word(std::initializer_list<Letter> letters) : _letters(letters) {}
    explicit Word(std::vector<Letter> letters) : _letters(std::move(letters)) {}
    template <typename It>
    Word(It first, It last) : _letters(first, last) {}

    std::size_t size() const noexcept {
      return _letters.size();
    }
    bool empty() const noexcept {
      return _letters.empty();
    }
    Letter operator[](std::size_t i) const noexcept {
      return _letters[i];
    }
    const_iterator begin() const noexcept {
      return _letters.begin();
    }
    const_iterator end() const noexcept {
      return _letters.end();
    }
    std::span<Letter const> letters() const noexcept {
      return _letters;
    }

    //! Subword [first, first + count).
    Word subword(std::size_t first, std::size_t count) const;

    //! Largest generator index + 1, or 0 for the empty word.
    std::size_t alphabet_bound() const noexcept;

    friend Word operator*(Word const& u, Word const& v);
    friend bool operator==(Word const&, Word const&) = default;
    friend auto operator<=>(Word const& u, Word const& v) {
      return u._letters <=> v._letters;
    }

   private:
    std::vector<Letter> _letters;
  };

  //! Formal inverse: reverse the word and flip every sign.
  Word invert(Word const& w);

  //! Cancel adjacent x x^-1 pairs until none remain.
  Word free_reduce(Word const& w);

  //! True iff w contains no adjacent cancelling pair.
  bool is_freely_reduced(Word const& w);

  //! True iff w is freely reduced and its first and last letters do not
  //! cancel.
  bool is_cyclically_reduced(Word const& w);

  //! Shortlex order: shorter first, then lexicographic by letter code.
  bool shortlex_less(Word const& u, Word const& v);

  //! w^k for any integer k (k < 0 uses the formal inverse).
  Word power(Word const& w, int k);

  //! Every word over `num_gens` generators of length at most `max_length`, in
  //! shortlex order.
  std::vector<Word> all_words(std::size_t num_gens, std::size_t max_length);

  //! Calls f on every word of length at most max_length in shortlex order.
  void for_each_word(std::size_t                            num_gens,
                     std::size_t                            max_length,
                     std::function<void(Word const&)> const& f);

  //! Interned generator names. Names match [a-zA-Z][a-zA-Z0-9_]*.
  class Alphabet {
   public:
    Alphabet() = default;
    explicit Alphabet(std::vector<std::string> names);

    std::size_t size() const noexcept {
      return _names.size();
    }
    std::string const& name(gen_type g) const {
      return _names.at(g);
    }
    std::vector<std::string> const& names() const noexcept {
      return _names;
    }
    std::optional<gen_type> index(std::string_view name) const;

    //! Appends a generator; throws InvalidArgument on a bad or repeated name.
    gen_type add(std::string name);

    //! True when every name is a single character, which enables the
    //! juxtaposed syntax "ab^-1c".
    bool single_char() const noexcept;

    static bool valid_name(std::string_view name) noexcept;

    friend bool operator==(Alphabet const& x, Alphabet const& y) {
      return x._names == y._names;
    }

   private:
    std::vector<std::string>                  _names;
    std::unordered_map<std::string, gen_type> _index;
  };

  //! Parses a word. Accepted syntax: whitespace separated generator names,
  //! each optionally followed by ^k for an integer k (usually ^-1); juxtaposed
  //! names when every generator name is one character; "1" or the empty
  //! string for the empty word. Throws ParseError.
  Word parse_word(std::string_view text, Alphabet const& alphabet);

  //! Same as parse_word, with positions reported relative to (line, column).
  Word parse_word(std::string_view text,
                  Alphabet const&  alphabet,
                  std::size_t      line,
                  std::size_t      column);

  std::string to_string(Letter l, Alphabet const& alphabet);

  //! Space separated letters with ^-1 for inverses; the empty word prints as
  //! "1". Round-trips with parse_word.
  std::string to_string(Word const& w, Alphabet const& alphabet);

  //! Fallback printing with generator names x0, x1, ...
  std::string to_string(Word const& w);

}  // namespace invmon

template <>
struct std::hash<invmon::Word> {
  std::size_t operator()(invmon::Word const& w) const noexcept {
    std::uint64_t h = 1469598103934665603ULL;
    for (auto l : w) {
      h ^= l.code() + 1;
      h *= 1099511628211ULL;
    }
    return static_cast<std::size_t>(h);
  }
};
