#pragma once

#include <random>
#include <string>
#include <vector>

#include "invmon/words.hpp"

namespace invmon::test {

  inline Alphabet const& ab() {
    static Alphabet const a({"a", "b"});
    return a;
  }

  inline Word w(std::string const& text, Alphabet const& alphabet = ab()) {
    return parse_word(text, alphabet);
  }

  inline Word random_word(std::mt19937_64& rng, std::size_t num_gens, std::size_t max_length) {
    std::uniform_int_distribution<std::size_t>   len(0, max_length);
    std::uniform_int_distribution<std::uint32_t> code(0, 2 * num_gens - 1);
    std::vector<Letter>                          letters(len(rng));
    for (auto& l : letters) {
      l = Letter::from_code(code(rng));
    }
    return Word(std::move(letters));
  }

}  // namespace invmon::test
