#include "invmon/words.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>

#include "invmon/error.hpp"

namespace invmon {

  Word Word::subword(std::size_t first, std::size_t count) const {
    return Word(_letters.begin() + first, _letters.begin() + first + count);
  }

  std::size_t Word::alphabet_bound() const noexcept {
    std::size_t bound = 0;
    for (auto l : _letters) {
      bound = std::max<std::size_t>(bound, l.gen() + 1);
    }
    return bound;
  }

  Word operator*(Word const& u, Word const& v) {
    std::vector<Letter> out;
    out.reserve(u.size() + v.size());
    out.insert(out.end(), u._letters.begin(), u._letters.end());
    out.insert(out.end(), v._letters.begin(), v._letters.end());
    return Word(std::move(out));
  }

  Word invert(Word const& w) {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto it = w.letters().rbegin(); it != w.letters().rend(); ++it) {
      out.push_back(it->inverse());
    }
    return Word(std::move(out));
  }

  Word free_reduce(Word const& w) {
    std::vector<Letter> stack;
    stack.reserve(w.size());
    for (auto l : w) {
      if (!stack.empty() && stack.back() == l.inverse()) {
        stack.pop_back();
      } else {
        stack.push_back(l);
      }
    }
    return Word(std::move(stack));
  }

  bool is_freely_reduced(Word const& w) {
    for (std::size_t i = 1; i < w.size(); ++i) {
      if (w[i] == w[i - 1].inverse()) {
        return false;
      }
    }
    return true;
  }

  bool is_cyclically_reduced(Word const& w) {
    return is_freely_reduced(w)
           && (w.size() < 2 || w[0] != w[w.size() - 1].inverse());
  }

  bool shortlex_less(Word const& u, Word const& v) {
    if (u.size() != v.size()) {
      return u.size() < v.size();
    }
    return u < v;
  }

  Word power(Word const& w, int k) {
    Word base = k < 0 ? invert(w) : w;
    Word out;
    for (int i = 0; i < std::abs(k); ++i) {
      out = out * base;
    }
    return out;
  }

  void for_each_word(std::size_t                            num_gens,
                     std::size_t                            max_length,
                     std::function<void(Word const&)> const& f) {
    std::size_t const   num_letters = 2 * num_gens;
    std::vector<Letter> letters;
    f(Word());
    if (num_letters == 0) {
      return;
    }
    for (std::size_t len = 1; len <= max_length; ++len) {
      std::vector<std::uint32_t> odometer(len, 0);
      while (true) {
        letters.clear();
        for (auto c : odometer) {
          letters.push_back(Letter::from_code(c));
        }
        f(Word(letters));
        std::size_t i = len;
        while (i > 0) {
          --i;
          if (++odometer[i] < num_letters) {
            break;
          }
          odometer[i] = 0;
          if (i == 0) {
            i = len + 1;  // wrapped the most significant digit
            break;
          }
        }
        if (i == len + 1) {
          break;
        }
      }
    }
  }

  std::vector<Word> all_words(std::size_t num_gens, std::size_t max_length) {
    std::vector<Word> out;
    for_each_word(
        num_gens, max_length, [&out](Word const& w) { out.push_back(w); });
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Alphabet
  ////////////////////////////////////////////////////////////////////////

  Alphabet::Alphabet(std::vector<std::string> names) {
    for (auto& n : names) {
      add(std::move(n));
    }
  }

  std::optional<gen_type> Alphabet::index(std::string_view name) const {
    auto it = _index.find(std::string(name));
    if (it == _index.end()) {
      return std::nullopt;
    }
    return it->second;
  }

  gen_type Alphabet::add(std::string name) {
    if (!valid_name(name)) {
      throw InvalidArgument("invalid generator name \"" + name + "\"");
    }
    if (_index.count(name) != 0) {
      throw InvalidArgument("duplicate generator name \"" + name + "\"");
    }
    auto g = static_cast<gen_type>(_names.size());
    _index.emplace(name, g);
    _names.push_back(std::move(name));
    return g;
  }

  bool Alphabet::single_char() const noexcept {
    return std::all_of(_names.begin(), _names.end(), [](auto const& n) {
      return n.size() == 1;
    });
  }

  bool Alphabet::valid_name(std::string_view name) noexcept {
    if (name.empty() || !std::isalpha(static_cast<unsigned char>(name[0]))) {
      return false;
    }
    return std::all_of(name.begin(), name.end(), [](char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    });
  }

  ////////////////////////////////////////////////////////////////////////
  // Parsing and printing
  ////////////////////////////////////////////////////////////////////////

  namespace {
    bool is_name_char(char c) {
      return std::isalnum(static_cast<unsigned char>(c)) || c == '_';
    }
  }  // namespace

  Word parse_word(std::string_view text, Alphabet const& alphabet) {
    return parse_word(text, alphabet, 1, 1);
  }

  Word parse_word(std::string_view text,
                  Alphabet const&  alphabet,
                  std::size_t      line,
                  std::size_t      column) {
    std::vector<Letter> out;
    std::size_t         i = 0;
    auto                advance = [&](std::size_t n) {
      for (std::size_t k = 0; k < n; ++k, ++i) {
        if (text[i] == '\n') {
          ++line;
          column = 1;
        } else {
          ++column;
        }
      }
    };
    bool saw_identity = false;
    while (i < text.size()) {
      char c = text[i];
      if (std::isspace(static_cast<unsigned char>(c))) {
        advance(1);
        continue;
      }
      if (c == '1' && (i + 1 == text.size() || !is_name_char(text[i + 1]))) {
        saw_identity = true;
        advance(1);
        continue;
      }
      if (!std::isalpha(static_cast<unsigned char>(c))) {
        throw ParseError(std::string("unexpected character '") + c + "'",
                         line,
                         column);
      }
      std::size_t const start_line = line, start_col = column;
      std::size_t       j          = i;
      while (j < text.size() && is_name_char(text[j])) {
        ++j;
      }
      std::string_view ident = text.substr(i, j - i);
      if (auto g = alphabet.index(ident)) {
        out.push_back(pos(*g));
      } else if (alphabet.single_char() && alphabet.size() > 0) {
        for (std::size_t k = 0; k < ident.size(); ++k) {
          auto g1 = alphabet.index(ident.substr(k, 1));
          if (!g1) {
            throw ParseError("unknown generator " + std::string(ident.substr(k, 1)),
                             start_line,
                             start_col + k);
          }
          out.push_back(pos(*g1));
        }
      } else {
        throw ParseError("unknown generator " + std::string(ident),
                         start_line,
                         start_col);
      }
      advance(j - i);
      if (i < text.size() && text[i] == '^') {
        advance(1);
        std::size_t k = i;
        bool        plus = k < text.size() && text[k] == '+';
        if (k < text.size() && (text[k] == '-' || plus)) {
          ++k;
        }
        std::size_t const digits = k;
        while (k < text.size()
               && std::isdigit(static_cast<unsigned char>(text[k]))) {
          ++k;
        }
        int exponent = 0;
        if (k == digits) {
          throw ParseError("bad exponent", line, column);
        }
        auto [ptr, ec] = std::from_chars(
            text.data() + i + (plus ? 1 : 0), text.data() + k, exponent);
        if (ec != std::errc() || ptr != text.data() + k) {
          throw ParseError("bad exponent", line, column);
        }
        advance(k - i);
        Letter last = out.back();
        out.pop_back();
        for (int e = 0; e < std::abs(exponent); ++e) {
          out.push_back(exponent < 0 ? last.inverse() : last);
        }
      }
    }
    if (saw_identity && !out.empty()) {
      // "1" is only accepted on its own.
      throw ParseError("identity symbol 1 mixed with letters", line, column);
    }
    return Word(std::move(out));
  }

  std::string to_string(Letter l, Alphabet const& alphabet) {
    std::string s = alphabet.name(l.gen());
    if (l.is_inverse()) {
      s += "^-1";
    }
    return s;
  }

  std::string to_string(Word const& w, Alphabet const& alphabet) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto l : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += to_string(l, alphabet);
    }
    return s;
  }

  std::string to_string(Word const& w) {
    if (w.empty()) {
      return "1";
    }
    std::string s;
    for (auto l : w) {
      if (!s.empty()) {
        s += ' ';
      }
      s += "x" + std::to_string(l.gen());
      if (l.is_inverse()) {
        s += "^-1";
      }
    }
    return s;
  }

}  // namespace invmon
