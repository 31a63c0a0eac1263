#include "invmon/group_oracle.hpp"

#include <algorithm>
#include <boost/multiprecision/cpp_int.hpp>
#include <fstream>
#include <sstream>

#include "invmon/error.hpp"

namespace invmon {

  TriBool GroupOracle::is_identity(Word const& w) const {
    auto nf = normal_form(w);
    if (!nf) {
      return TriBool::unknown;
    }
    return nf->empty() ? TriBool::confirmed : TriBool::refuted;
  }

  Word GroupOracle::normal_form_or_throw(Word const& w) const {
    auto nf = normal_form(w);
    if (!nf) {
      throw OracleError(description() + " could not normalise " + to_string(w));
    }
    return std::move(*nf);
  }

  ////////////////////////////////////////////////////////////////////////
  // Free groups and free products
  ////////////////////////////////////////////////////////////////////////

  std::optional<Word> FreeGroupOracle::normal_form(Word const& w) const {
    if (w.alphabet_bound() > _rank) {
      throw InvalidArgument("word outside the oracle's alphabet");
    }
    return free_reduce(w);
  }

  std::string FreeGroupOracle::description() const {
    return "fg:" + std::to_string(_rank);
  }

  namespace {
    std::vector<gen_type> iota_gens(std::size_t first, std::size_t count) {
      std::vector<gen_type> out(count);
      for (std::size_t i = 0; i < count; ++i) {
        out[i] = static_cast<gen_type>(first + i);
      }
      return out;
    }
  }  // namespace

  FreeProductOracle::FreeProductOracle(OraclePtr o1, OraclePtr o2)
      : FreeProductOracle(o1,
                          o2,
                          iota_gens(0, o1->number_of_generators()),
                          iota_gens(o1->number_of_generators(),
                                    o2->number_of_generators())) {}

  FreeProductOracle::FreeProductOracle(OraclePtr             o1,
                                       OraclePtr             o2,
                                       std::vector<gen_type> gens1,
                                       std::vector<gen_type> gens2)
      : _factor{std::move(o1), std::move(o2)},
        _gens{std::move(gens1), std::move(gens2)},
        _num_gens(0) {
    for (int f = 0; f < 2; ++f) {
      if (_gens[f].size() != _factor[f]->number_of_generators()) {
        throw InvalidArgument("free product: generator list does not match factor rank");
      }
      for (auto g : _gens[f]) {
        _num_gens = std::max<std::size_t>(_num_gens, g + 1);
      }
    }
    _owner.assign(_num_gens, -1);
    _local.assign(_num_gens, 0);
    for (int f = 0; f < 2; ++f) {
      for (gen_type i = 0; i < _gens[f].size(); ++i) {
        gen_type g = _gens[f][i];
        if (_owner[g] != -1) {
          throw InvalidArgument("free product factors share generator "
                                + std::to_string(g));
        }
        _owner[g] = f;
        _local[g] = i;
      }
    }
  }

  bool FreeProductOracle::has_normal_forms() const {
    return _factor[0]->has_normal_forms() && _factor[1]->has_normal_forms();
  }

  int FreeProductOracle::factor_of(gen_type g) const {
    if (g >= _num_gens || _owner[g] < 0) {
      throw InvalidArgument("generator " + std::to_string(g)
                            + " belongs to neither factor");
    }
    return _owner[g];
  }

  std::optional<Word> FreeProductOracle::normal_form(Word const& w) const {
    // alternating stack of (factor, factor-local normal form)
    std::vector<std::pair<int, Word>> stack;
    std::size_t                       i = 0;
    while (i < w.size()) {
      int const           f = factor_of(w[i].gen());
      std::vector<Letter> block;
      for (; i < w.size() && factor_of(w[i].gen()) == f; ++i) {
        block.emplace_back(_local[w[i].gen()], w[i].is_inverse());
      }
      Word piece(std::move(block));
      if (!stack.empty() && stack.back().first == f) {
        piece = stack.back().second * piece;
        stack.pop_back();
      }
      auto nf = _factor[f]->normal_form(piece);
      if (!nf) {
        return std::nullopt;
      }
      if (!nf->empty()) {
        stack.emplace_back(f, std::move(*nf));
      }
    }
    std::vector<Letter> out;
    for (auto const& [f, piece] : stack) {
      for (auto l : piece) {
        out.emplace_back(_gens[f][l.gen()], l.is_inverse());
      }
    }
    return Word(std::move(out));
  }

  std::string FreeProductOracle::description() const {
    return "fp:" + _factor[0]->description() + "," + _factor[1]->description();
  }

  ////////////////////////////////////////////////////////////////////////
  // Rewriting
  ////////////////////////////////////////////////////////////////////////

  std::optional<Word> rewrite(Word const&                       w,
                              std::vector<RewritingRule> const& rules,
                              std::size_t                       step_budget,
                              bool                              group) {
    std::vector<Letter> cur(w.begin(), w.end());
    if (group) {
      Word reduced = free_reduce(w);
      cur.assign(reduced.begin(), reduced.end());
    }
    for (std::size_t steps = 0;; ++steps) {
      bool applied = false;
      for (std::size_t p = 0; p < cur.size() && !applied; ++p) {
        for (auto const& r : rules) {
          auto const& lhs = r.lhs;
          if (lhs.empty() || p + lhs.size() > cur.size()
              || !std::equal(lhs.begin(), lhs.end(), cur.begin() + p)) {
            continue;
          }
          if (steps == step_budget) {
            return std::nullopt;
          }
          std::vector<Letter> next(cur.begin(), cur.begin() + p);
          next.insert(next.end(), r.rhs.begin(), r.rhs.end());
          next.insert(next.end(), cur.begin() + p + lhs.size(), cur.end());
          if (group) {
            Word reduced = free_reduce(Word(std::move(next)));
            next.assign(reduced.begin(), reduced.end());
          }
          cur     = std::move(next);
          applied = true;
          break;
        }
      }
      if (!applied) {
        return Word(std::move(cur));
      }
    }
  }

  RewritingOracle::RewritingOracle(std::size_t     num_gens,
                                   RewritingSystem system,
                                   std::size_t     step_budget)
      : _num_gens(num_gens), _system(std::move(system)), _step_budget(step_budget) {
    for (auto const& r : _system.rules) {
      if (r.lhs.empty()) {
        throw InvalidArgument("rewriting rule with empty left-hand side");
      }
      if (r.lhs.alphabet_bound() > num_gens || r.rhs.alphabet_bound() > num_gens) {
        throw InvalidArgument("rewriting rule outside the oracle's alphabet");
      }
    }
  }

  std::optional<Word> RewritingOracle::normal_form(Word const& w) const {
    if (!_system.confluent_terminating) {
      return std::nullopt;
    }
    return rewrite(w, _system.rules, _step_budget, true);
  }

  TriBool RewritingOracle::is_identity(Word const& w) const {
    auto r = rewrite(w, _system.rules, _step_budget, true);
    if (!r) {
      return TriBool::unknown;
    }
    if (r->empty()) {
      return TriBool::confirmed;
    }
    return _system.confluent_terminating || _system.identity_exact ? TriBool::refuted
                                                                   : TriBool::unknown;
  }

  std::string RewritingOracle::description() const {
    return "rw:" + std::to_string(_system.rules.size()) + " rules";
  }

  RewritingSystem parse_rules(std::string_view text, Alphabet const& alphabet) {
    RewritingSystem    sys;
    std::istringstream in{std::string(text)};
    std::string        line;
    std::size_t        lineno = 0;
    auto trim = [](std::string_view s) {
      auto b = s.find_first_not_of(" \t\r");
      if (b == std::string_view::npos) {
        return std::pair<std::string_view, std::size_t>{std::string_view(), 0};
      }
      auto e = s.find_last_not_of(" \t\r");
      return std::pair<std::string_view, std::size_t>{s.substr(b, e - b + 1), b};
    };
    while (std::getline(in, line)) {
      ++lineno;
      if (auto h = line.find('#'); h != std::string::npos) {
        line.erase(h);
      }
      auto [body, offset] = trim(line);
      if (!body.empty() && body.back() == ';') {
        body = trim(body.substr(0, body.size() - 1)).first;
      }
      if (body.empty()) {
        continue;
      }
      if (body.substr(0, 5) == "rule:") {
        std::string_view rest  = body.substr(5);
        auto             arrow = rest.find("->");
        if (arrow == std::string_view::npos) {
          throw ParseError("rule without '->'", lineno, offset + 1);
        }
        std::size_t const col = offset + 6;
        if (trim(rest.substr(arrow + 2)).first.empty()) {
          throw ParseError("empty right-hand side (write 1)", lineno, col + arrow + 2);
        }
        Word lhs = parse_word(rest.substr(0, arrow), alphabet, lineno, col);
        Word rhs = parse_word(rest.substr(arrow + 2), alphabet, lineno, col + arrow + 2);
        if (lhs.empty()) {
          throw ParseError("rule with empty left-hand side", lineno, col);
        }
        sys.rules.push_back({std::move(lhs), std::move(rhs)});
      } else if (body == "confluent_terminating") {
        sys.confluent_terminating = true;
      } else if (body == "identity_exact") {
        sys.identity_exact = true;
      } else {
        throw ParseError("expected a rule or a flag", lineno, offset + 1);
      }
    }
    return sys;
  }

  RewritingSystem read_rules(std::string const& path, Alphabet const& alphabet) {
    std::ifstream in(path);
    if (!in) {
      throw IoError("cannot open " + path);
    }
    std::ostringstream ss;
    ss << in.rdbuf();
    return parse_rules(ss.str(), alphabet);
  }

  RewritingSystem bs_rewriting_rules(unsigned n) {
    if (n == 0) {
      throw InvalidArgument("BS(1, n) needs n >= 1");
    }
    Word const      a{pos(0)}, b{pos(1)}, A{neg(0)}, B{neg(1)};
    int const       k = static_cast<int>(n);
    RewritingSystem sys;
    sys.rules = {{A * b, b * power(a, -k)},
                 {B * a, power(a, k) * B},
                 {a * b, b * power(a, k)},
                 {B * A, power(a, -k) * B}};
    sys.identity_exact = true;
    return sys;
  }

  ////////////////////////////////////////////////////////////////////////
  // BS(1, n)
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using boost::multiprecision::cpp_int;

    // (t, N / n^E): the element acts on Z[1/n] by x -> n^-t x + N / n^E.
    struct AffineState {
      std::int64_t t = 0;
      cpp_int      num = 0;
      std::int64_t exp = 0;
    };

    cpp_int ipow(unsigned n, std::int64_t e) {
      return boost::multiprecision::pow(cpp_int(n), static_cast<unsigned>(e));
    }

    AffineState evaluate(unsigned n, Word const& w) {
      AffineState s;
      for (auto l : w) {
        if (l.gen() > 1) {
          throw InvalidArgument("BS(1, n) has generators a and b only");
        }
        if (l.gen() == 1) {
          s.t += l.is_inverse() ? -1 : 1;
          continue;
        }
        if (n == 1) {
          s.num += l.is_inverse() ? -1 : 1;
          continue;
        }
        if (s.t > s.exp) {
          s.num *= ipow(n, s.t - s.exp);
          s.exp = s.t;
        }
        cpp_int delta = ipow(n, s.exp - s.t);
        if (l.is_inverse()) {
          s.num -= delta;
        } else {
          s.num += delta;
        }
      }
      if (s.num == 0) {
        s.exp = 0;
      }
      while (n > 1 && s.exp > 0 && s.num % n == 0) {
        s.num /= n;
        --s.exp;
      }
      return s;
    }
  }  // namespace

  BaumslagSolitarOracle::BaumslagSolitarOracle(unsigned n) : _n(n) {
    if (n == 0) {
      throw InvalidArgument("BS(1, n) needs n >= 1");
    }
  }

  TriBool BaumslagSolitarOracle::is_identity(Word const& w) const {
    auto s = evaluate(_n, w);
    return s.t == 0 && s.num == 0 ? TriBool::confirmed : TriBool::refuted;
  }

  std::optional<Word> BaumslagSolitarOracle::normal_form(Word const& w) const {
    auto         s = evaluate(_n, w);
    std::int64_t p = std::max<std::int64_t>({0, s.t, s.exp});
    std::int64_t q = p - s.t;
    cpp_int      m = s.num * ipow(_n, p - s.exp);
    if (abs(m) > 1'000'000) {
      throw OracleError("BS normal form exponent too large");
    }
    auto const          mm = static_cast<std::int64_t>(m);
    std::vector<Letter> out;
    out.insert(out.end(), p, pos(1));
    out.insert(out.end(), std::abs(mm), mm < 0 ? neg(0) : pos(0));
    out.insert(out.end(), q, neg(1));
    return Word(std::move(out));
  }

  std::string BaumslagSolitarOracle::description() const {
    return "bs:" + std::to_string(_n);
  }

  ////////////////////////////////////////////////////////////////////////
  // Substitutions
  ////////////////////////////////////////////////////////////////////////

  namespace {
    Word substitute(Word const& w, std::vector<Word> const& images) {
      std::vector<Letter> out;
      for (auto l : w) {
        if (l.gen() >= images.size()) {
          throw InvalidArgument("letter outside the substitution's domain");
        }
        Word const& img = images[l.gen()];
        if (l.is_inverse()) {
          Word inv = invert(img);
          out.insert(out.end(), inv.begin(), inv.end());
        } else {
          out.insert(out.end(), img.begin(), img.end());
        }
      }
      return Word(std::move(out));
    }

    class RestrictedOracle : public GroupOracle {
     public:
      RestrictedOracle(OraclePtr parent, std::vector<gen_type> gens)
          : _parent(std::move(parent)), _gens(std::move(gens)) {
        for (gen_type i = 0; i < _gens.size(); ++i) {
          _local.emplace(_gens[i], i);
        }
      }
      std::size_t number_of_generators() const override {
        return _gens.size();
      }
      bool has_normal_forms() const override {
        return _parent->has_normal_forms();
      }
      std::optional<Word> normal_form(Word const& w) const override {
        auto nf = _parent->normal_form(lift(w));
        if (!nf) {
          return nf;
        }
        std::vector<Letter> out;
        for (auto l : *nf) {
          auto it = _local.find(l.gen());
          if (it == _local.end()) {
            throw OracleError("normal form leaves the restricted alphabet");
          }
          out.emplace_back(it->second, l.is_inverse());
        }
        return Word(std::move(out));
      }
      TriBool is_identity(Word const& w) const override {
        return _parent->is_identity(lift(w));
      }
      std::string description() const override {
        return "restrict(" + _parent->description() + ")";
      }

     private:
      Word lift(Word const& w) const {
        std::vector<Letter> out;
        for (auto l : w) {
          out.emplace_back(_gens.at(l.gen()), l.is_inverse());
        }
        return Word(std::move(out));
      }
      OraclePtr                              _parent;
      std::vector<gen_type>                  _gens;
      std::unordered_map<gen_type, gen_type> _local;
    };
  }  // namespace

  SubstitutionOracle::SubstitutionOracle(OraclePtr                        target,
                                         std::vector<Word>                forward,
                                         std::optional<std::vector<Word>> backward,
                                         std::string                      name)
      : _target(std::move(target)),
        _forward(std::move(forward)),
        _backward(std::move(backward)),
        _name(std::move(name)) {
    for (auto const& img : _forward) {
      if (img.alphabet_bound() > _target->number_of_generators()) {
        throw InvalidArgument("forward image outside the target alphabet");
      }
    }
    if (_backward && _backward->size() != _target->number_of_generators()) {
      throw InvalidArgument("backward images must cover the target alphabet");
    }
  }

  Word SubstitutionOracle::forward(Word const& w) const {
    return substitute(w, _forward);
  }

  std::optional<Word> SubstitutionOracle::normal_form(Word const& w) const {
    if (!_backward) {
      return std::nullopt;
    }
    auto nf = _target->normal_form(forward(w));
    if (!nf) {
      return nf;
    }
    return free_reduce(substitute(*nf, *_backward));
  }

  TriBool SubstitutionOracle::is_identity(Word const& w) const {
    return _target->is_identity(forward(w));
  }

  std::string SubstitutionOracle::description() const {
    return _name;
  }

  OraclePtr restrict_oracle(OraclePtr oracle, std::vector<gen_type> const& gens) {
    for (auto g : gens) {
      if (g >= oracle->number_of_generators()) {
        throw InvalidArgument("restrict_oracle: generator out of range");
      }
    }
    return std::make_shared<RestrictedOracle>(std::move(oracle), gens);
  }

  OraclePtr scary_oracle() {
    // target FG(a, b, u) with a = 0, b = 1, u = 2
    Word const a{pos(0)}, b{pos(1)}, u{pos(2)};
    Word const c{pos(2)}, d{pos(3)};
    std::vector<Word> fwd{a, b, invert(b) * u * b, invert(a) * u * a};
    // u = b c b^-1 over a, b, c, d
    std::vector<Word> back{Word{pos(0)}, Word{pos(1)}, Word{pos(1)} * c * Word{neg(1)}};
    return std::make_shared<SubstitutionOracle>(
        std::make_shared<FreeGroupOracle>(3), fwd, back, "scary");
  }

  ////////////////////////////////////////////////////////////////////////
  // Cayley balls
  ////////////////////////////////////////////////////////////////////////

  vertex_type CayleyBall::find(Word const& nf) const {
    auto it = index.find(nf);
    return it == index.end() ? UNDEFINED_VERTEX : it->second;
  }

  CayleyBall cayley_ball(GroupOracle const& oracle, std::size_t radius) {
    if (!oracle.has_normal_forms()) {
      throw InvalidArgument("cayley_ball needs an oracle with normal forms");
    }
    std::size_t const k = oracle.number_of_generators();
    CayleyBall        ball;
    ball.radius = radius;
    auto add    = [&ball](Word nf, std::uint32_t d) {
      auto v = static_cast<vertex_type>(ball.normal_forms.size());
      ball.index.emplace(nf, v);
      ball.normal_forms.push_back(std::move(nf));
      ball.distance.push_back(d);
    };
    add(oracle.normal_form_or_throw(Word()), 0);
    for (std::size_t head = 0; head < ball.normal_forms.size(); ++head) {
      if (ball.distance[head] == radius) {
        continue;
      }
      for (std::uint32_t c = 0; c < 2 * k; ++c) {
        Word nf = oracle.normal_form_or_throw(ball.normal_forms[head]
                                              * Word{Letter::from_code(c)});
        if (ball.index.count(nf) == 0) {
          add(std::move(nf), ball.distance[head] + 1);
        }
      }
    }
    ball.graph = XGraph(k, ball.normal_forms.size());
    for (vertex_type v = 0; v < ball.normal_forms.size(); ++v) {
      for (gen_type g = 0; g < k; ++g) {
        vertex_type t = ball.find(
            oracle.normal_form_or_throw(ball.normal_forms[v] * Word{pos(g)}));
        if (t != UNDEFINED_VERTEX) {
          ball.graph.add_edge(v, pos(g), t);
        }
      }
    }
    return ball;
  }

}  // namespace invmon
