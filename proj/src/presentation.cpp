#include "invmon/presentation.hpp"

#include <algorithm>
#include <cctype>
#include <fstream>
#include <set>
#include <sstream>

#include "invmon/error.hpp"

namespace invmon {

  Presentation::Presentation(Alphabet              alphabet,
                             std::vector<Relation> relations,
                             bool                  e_unitary)
      : _alphabet(std::move(alphabet)), _e_unitary(e_unitary) {
    for (auto& r : relations) {
      add_relation(std::move(r.lhs), std::move(r.rhs));
    }
  }

  void Presentation::validate_word(Word const& w) const {
    if (w.alphabet_bound() > _alphabet.size()) {
      throw InvalidArgument("word uses a generator outside the alphabet");
    }
  }

  void Presentation::add_relation(Word lhs, Word rhs) {
    validate_word(lhs);
    validate_word(rhs);
    _relations.push_back({std::move(lhs), std::move(rhs)});
  }

  Word Presentation::word(std::string_view text) const {
    return parse_word(text, _alphabet);
  }

  std::string Presentation::to_string(Word const& w) const {
    return invmon::to_string(w, _alphabet);
  }

  ////////////////////////////////////////////////////////////////////////
  // Text format
  ////////////////////////////////////////////////////////////////////////

  namespace {

    class Source {
     public:
      explicit Source(std::string_view text) : _text(text) {
        // blank out comments, keeping every offset in place
        bool comment = false;
        for (auto& c : _text) {
          if (c == '#') {
            comment = true;
          } else if (c == '\n') {
            comment = false;
          }
          if (comment) {
            c = ' ';
          }
        }
        _line_start.push_back(0);
        for (std::size_t i = 0; i < _text.size(); ++i) {
          if (_text[i] == '\n') {
            _line_start.push_back(i + 1);
          }
        }
      }

      std::string const& text() const noexcept {
        return _text;
      }

      std::pair<std::size_t, std::size_t> position(std::size_t offset) const {
        auto it = std::upper_bound(_line_start.begin(), _line_start.end(), offset);
        auto line = static_cast<std::size_t>(it - _line_start.begin());
        return {line, offset - _line_start[line - 1] + 1};
      }

      [[noreturn]] void fail(std::string const& msg, std::size_t offset) const {
        auto [line, col] = position(offset);
        throw ParseError(msg, line, col);
      }

     private:
      std::string              _text;
      std::vector<std::size_t> _line_start;
    };

    bool is_space(char c) {
      return std::isspace(static_cast<unsigned char>(c)) != 0;
    }

    // Splits [first, last) of the source on `sep`, returning offset ranges.
    std::vector<std::pair<std::size_t, std::size_t>>
    split(std::string const& text, std::size_t first, std::size_t last, char sep) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      std::size_t                                      start = first;
      for (std::size_t i = first; i < last; ++i) {
        if (text[i] == sep) {
          out.emplace_back(start, i);
          start = i + 1;
        }
      }
      out.emplace_back(start, last);
      return out;
    }

    bool blank(std::string const& text, std::size_t first, std::size_t last) {
      return std::all_of(text.begin() + first, text.begin() + last, is_space);
    }

    // Whitespace or comma separated tokens in [first, last).
    std::vector<std::pair<std::size_t, std::size_t>>
    tokens(std::string const& text, std::size_t first, std::size_t last) {
      std::vector<std::pair<std::size_t, std::size_t>> out;
      std::size_t                                      i = first;
      while (i < last) {
        if (is_space(text[i]) || text[i] == ',') {
          ++i;
          continue;
        }
        std::size_t j = i;
        while (j < last && !is_space(text[j]) && text[j] != ',') {
          ++j;
        }
        out.emplace_back(i, j);
        i = j;
      }
      return out;
    }

  }  // namespace

  Presentation parse_presentation(std::string_view input) {
    Source             src(input);
    std::string const& text = src.text();
    Alphabet           alphabet;
    std::vector<Relation> relations;
    bool                  e_unitary = false;
    bool                  seen_gens = false, seen_rels = false;

    std::size_t i = 0;
    while (true) {
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
      if (i == text.size()) {
        break;
      }
      std::size_t const key_start = i;
      while (i < text.size() && (std::isalnum(static_cast<unsigned char>(text[i]))
                                 || text[i] == '_')) {
        ++i;
      }
      std::string key = text.substr(key_start, i - key_start);
      if (key.empty()) {
        src.fail(std::string("unexpected character '") + text[i] + "'", i);
      }
      while (i < text.size() && is_space(text[i])) {
        ++i;
      }
      if (i == text.size() || text[i] != ':') {
        src.fail("expected ':' after \"" + key + "\"", i);
      }
      std::size_t const body = ++i;
      std::size_t const end  = text.find(';', body);
      if (end == std::string::npos) {
        src.fail("section \"" + key + "\" is not terminated by ';'", key_start);
      }
      i = end + 1;

      if (key == "gens") {
        if (seen_gens) {
          src.fail("repeated gens section", key_start);
        }
        if (seen_rels) {
          src.fail("gens must precede rels", key_start);
        }
        seen_gens = true;
        for (auto [a, b] : tokens(text, body, end)) {
          std::string name = text.substr(a, b - a);
          if (!Alphabet::valid_name(name)) {
            src.fail("invalid generator name \"" + name + "\"", a);
          }
          if (alphabet.index(name)) {
            src.fail("duplicate generator \"" + name + "\"", a);
          }
          alphabet.add(name);
        }
      } else if (key == "rels") {
        seen_rels = true;
        if (blank(text, body, end)) {
          continue;
        }
        for (auto [a, b] : split(text, body, end, ',')) {
          if (blank(text, a, b)) {
            src.fail("empty relation", a);
          }
          auto sides = split(text, a, b, '=');
          if (sides.size() < 2) {
            src.fail("relation without '='", a);
          }
          std::vector<Word> words;
          for (auto [c, d] : sides) {
            auto [line, col] = src.position(c);
            words.push_back(parse_word(
                std::string_view(text).substr(c, d - c), alphabet, line, col));
          }
          for (std::size_t k = 1; k < words.size(); ++k) {
            relations.push_back({words[0], words[k]});
          }
        }
      } else if (key == "flags") {
        for (auto [a, b] : tokens(text, body, end)) {
          std::string flag = text.substr(a, b - a);
          if (flag == "e_unitary") {
            e_unitary = true;
          } else {
            src.fail("unknown flag \"" + flag + "\"", a);
          }
        }
      } else {
        src.fail("unknown section \"" + key + "\"", key_start);
      }
    }
    return Presentation(std::move(alphabet), std::move(relations), e_unitary);
  }

  Presentation read_presentation(std::string const& path) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_presentation(ss.str());
  }

  std::string to_string(Presentation const& p) {
    std::string out = "gens:";
    for (auto const& n : p.alphabet().names()) {
      out += ' ' + n;
    }
    out += " ;\n";
    if (!p.relations().empty()) {
      out += "rels:";
      bool first = true;
      for (auto const& r : p.relations()) {
        out += first ? " " : " ,\n      ";
        first = false;
        out += p.to_string(r.lhs) + " = " + p.to_string(r.rhs);
      }
      out += " ;\n";
    }
    if (p.e_unitary_asserted()) {
      out += "flags: e_unitary ;\n";
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Predicates and derived presentations
  ////////////////////////////////////////////////////////////////////////

  bool is_special(Presentation const& p) {
    return std::all_of(p.relations().begin(), p.relations().end(), [](auto const& r) {
      return r.lhs.empty() || r.rhs.empty();
    });
  }

  GroupPresentation group_image(Presentation const& p) {
    GroupPresentation g{p.alphabet(), {}};
    for (auto const& r : p.relations()) {
      g.relators.push_back(r.lhs * invert(r.rhs));
    }
    return g;
  }

  std::pair<std::vector<gen_type>, std::vector<gen_type>>
  split_generators(Presentation const& p) {
    std::vector<bool> used(p.number_of_generators(), false);
    for (auto const& r : p.relations()) {
      for (auto l : r.lhs) {
        used[l.gen()] = true;
      }
      for (auto l : r.rhs) {
        used[l.gen()] = true;
      }
    }
    std::vector<gen_type> z, y;
    for (gen_type g = 0; g < used.size(); ++g) {
      (used[g] ? z : y).push_back(g);
    }
    return {z, y};
  }

  Word SubPresentation::lift(Word const& w) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto l : w) {
      out.emplace_back(to_parent.at(l.gen()), l.is_inverse());
    }
    return Word(std::move(out));
  }

  Word SubPresentation::restrict(Word const& w) const {
    std::vector<Letter> out;
    out.reserve(w.size());
    for (auto l : w) {
      auto it = std::find(to_parent.begin(), to_parent.end(), l.gen());
      if (it == to_parent.end()) {
        throw InvalidArgument("word leaves the sub-alphabet");
      }
      out.emplace_back(static_cast<gen_type>(it - to_parent.begin()), l.is_inverse());
    }
    return Word(std::move(out));
  }

  SubPresentation sub_presentation(Presentation const&          p,
                                   std::vector<gen_type> const& gens) {
    SubPresentation sub;
    Alphabet        alphabet;
    for (auto g : gens) {
      alphabet.add(p.alphabet().name(g));
      sub.to_parent.push_back(g);
    }
    sub.presentation = Presentation(std::move(alphabet));
    for (auto const& r : p.relations()) {
      sub.presentation.add_relation(sub.restrict(r.lhs), sub.restrict(r.rhs));
    }
    sub.presentation.assert_e_unitary(p.e_unitary_asserted());
    return sub;
  }

  bool cyclically_reduced_hint(Presentation const& p) {
    if (p.relations().size() != 1 || !is_special(p)) {
      return false;
    }
    auto const& r = p.relations()[0];
    return is_cyclically_reduced(r.lhs.empty() ? r.rhs : r.lhs);
  }

  ////////////////////////////////////////////////////////////////////////
  // Fixtures
  ////////////////////////////////////////////////////////////////////////

  Presentation fixture_scary() {
    Presentation p(Alphabet({"a", "b", "c", "d"}));
    p.add_relation(p.word("b c b^-1 a d^-1 a^-1 c^-1 c d^-1 d"), Word());
    p.assert_e_unitary();
    return p;
  }

  Presentation fixture_bs(unsigned n) {
    if (n == 0) {
      throw InvalidArgument("fixture_bs requires n >= 1");
    }
    Presentation p(Alphabet({"a", "b"}));
    Word         a{pos(0)}, b{pos(1)};
    p.add_relation(a * b * power(a, -static_cast<int>(n)) * invert(b), Word());
    p.assert_e_unitary();
    return p;
  }

  Presentation fixture_gray(Alphabet const&          x,
                            std::vector<Word> const& relators,
                            std::vector<Word> const& s_words,
                            std::string const&       t_name) {
    if (relators.empty()) {
      throw InvalidArgument("fixture_gray needs at least one relator");
    }
    if (x.index(t_name)) {
      throw InvalidArgument("the letter " + t_name + " clashes with a generator");
    }
    for (auto const* list : {&relators, &s_words}) {
      for (auto const& w : *list) {
        if (w.alphabet_bound() > x.size()) {
          throw InvalidArgument("fixture_gray input uses a letter outside X");
        }
      }
    }
    Alphabet alphabet = x;
    gen_type t        = alphabet.add(t_name);
    Word     tw{pos(t)};

    Word e;
    for (gen_type i = 0; i < x.size(); ++i) {
      e = e * Word{pos(i), neg(i)};
    }
    for (auto const& s : s_words) {
      Word conj = tw * s * invert(tw);
      e         = e * conj * invert(conj);
    }
    for (gen_type i = 0; i < x.size(); ++i) {
      e = e * Word{neg(i), pos(i)};
    }
    Presentation p(std::move(alphabet));
    p.add_relation(e * relators[0], Word());
    for (std::size_t i = 1; i < relators.size(); ++i) {
      p.add_relation(relators[i], Word());
    }
    p.assert_e_unitary();
    return p;
  }

  Presentation fixture_clifford(GroupPresentation const&     g,
                                GroupPresentation const&     h,
                                std::vector<gen_type> const& embedding,
                                std::string const&           e_name) {
    std::size_t const nx = h.alphabet.size(), ny = g.alphabet.size();
    if (embedding.size() != nx) {
      throw InvalidArgument("embedding must name a Y-generator for every x'");
    }
    Alphabet alphabet;
    try {
      for (auto const& n : h.alphabet.names()) {
        alphabet.add(n);
      }
      for (auto const& n : g.alphabet.names()) {
        alphabet.add(n);
      }
      alphabet.add(e_name);
    } catch (InvalidArgument const& e) {
      throw InvalidArgument(std::string("fixture_clifford: ") + e.what());
    }
    auto xp = [](gen_type i) { return Word{pos(i)}; };
    auto y  = [nx](gen_type j) { return Word{pos(static_cast<gen_type>(nx + j))}; };
    Word const e{pos(static_cast<gen_type>(nx + ny))};
    auto       shift = [nx](Word const& w) {
      std::vector<Letter> out;
      for (auto l : w) {
        out.emplace_back(static_cast<gen_type>(l.gen() + nx), l.is_inverse());
      }
      return Word(std::move(out));
    };

    Presentation p(std::move(alphabet));
    for (gen_type i = 0; i < nx; ++i) {
      p.add_relation(Word(), xp(i) * invert(xp(i)));
      p.add_relation(Word(), invert(xp(i)) * xp(i));
    }
    p.add_relation(e * e, e);
    for (gen_type i = 0; i < nx; ++i) {
      if (embedding[i] >= ny) {
        throw InvalidArgument("embedding names a generator outside Y");
      }
      p.add_relation(e * xp(i), xp(i) * e);
      p.add_relation(e * xp(i), y(embedding[i]));
    }
    for (gen_type j = 0; j < ny; ++j) {
      p.add_relation(e, y(j) * invert(y(j)));
      p.add_relation(e, invert(y(j)) * y(j));
    }
    for (auto const& u : h.relators) {
      p.add_relation(u * u, u);
    }
    for (auto const& w : g.relators) {
      p.add_relation(shift(w) * shift(w), shift(w));
    }
    return p;
  }

}  // namespace invmon
