#include "invmon/finverse.hpp"

#include <algorithm>
#include <map>
#include <unordered_map>

#include "invmon/error.hpp"

namespace invmon {

  namespace {

    // Union of embedded graphs keyed by group normal forms.
    class UnionGraph {
     public:
      explicit UnionGraph(std::size_t num_gens) : _k(num_gens) {}

      vertex_type vertex(Word const& nf) {
        auto [it, inserted] = _index.emplace(nf, _nfs.size());
        if (inserted) {
          _nfs.push_back(nf);
          _adj.emplace_back(2 * _k, UNDEFINED_VERTEX);
        }
        return it->second;
      }

      void edge(Word const& from, Letter l, Word const& to) {
        vertex_type u = vertex(from), v = vertex(to);
        _adj[u][l.code()]           = v;
        _adj[v][l.inverse().code()] = u;
      }

      vertex_type find(Word const& nf) const {
        auto it = _index.find(nf);
        return it == _index.end() ? UNDEFINED_VERTEX : it->second;
      }

      Word const& normal_form(vertex_type v) const {
        return _nfs[v];
      }

      // Lex least shortest path label from `from` to `to`, with the
      // vertices visited; nullopt if disconnected.
      std::optional<std::pair<Word, std::vector<vertex_type>>>
      least_path(vertex_type from, vertex_type to) const {
        std::vector<std::uint32_t> dist(_nfs.size(), INFINITE_DISTANCE);
        std::vector<vertex_type>   queue{to};
        dist[to] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
          vertex_type v = queue[head];
          for (auto u : _adj[v]) {
            if (u != UNDEFINED_VERTEX && dist[u] == INFINITE_DISTANCE) {
              dist[u] = dist[v] + 1;
              queue.push_back(u);
            }
          }
        }
        if (dist[from] == INFINITE_DISTANCE) {
          return std::nullopt;
        }
        std::vector<Letter>      label;
        std::vector<vertex_type> visited{from};
        vertex_type              cur = from;
        while (cur != to) {
          for (std::uint32_t c = 0; c < 2 * _k; ++c) {
            vertex_type t = _adj[cur][c];
            if (t != UNDEFINED_VERTEX && dist[t] + 1 == dist[cur]) {
              label.push_back(Letter::from_code(c));
              cur = t;
              break;
            }
          }
          visited.push_back(cur);
        }
        return std::make_pair(Word(std::move(label)), std::move(visited));
      }

     private:
      std::size_t                                _k;
      std::vector<Word>                          _nfs;
      std::vector<std::vector<vertex_type>>      _adj;
      std::unordered_map<Word, vertex_type>      _index;
    };

    OraclePtr borrow(GroupOracle const& oracle) {
      return OraclePtr(&oracle, [](GroupOracle const*) {});
    }

  }  // namespace

  std::optional<MaxResult> sprawling_max(Presentation const& p,
                                         Word const&         g,
                                         GroupOracle const&  oracle,
                                         Budget const&       b,
                                         std::size_t         max_radius) {
    if (!p.e_unitary_asserted()) {
      throw Refusal("sprawling_max requires a presentation flagged e_unitary");
    }
    p.validate_word(g);
    Word const gnf = oracle.normal_form_or_throw(g);
    Word const one = oracle.normal_form_or_throw(Word());
    if (gnf == one) {
      MaxResult r;
      r.sigma_class = gnf;
      r.certificate = {{one, true, true}};
      return r;
    }
    std::size_t const k = p.number_of_generators();
    for (std::size_t radius = 1; radius <= max_radius; ++radius) {
      auto const sg = embedded_closure(p, Word(), oracle, radius, b);
      UnionGraph u(k);
      std::vector<Word> translate(sg.normal_forms.size());
      for (vertex_type v = 0; v < sg.normal_forms.size(); ++v) {
        u.vertex(sg.normal_forms[v]);
        translate[v] = oracle.normal_form_or_throw(g * sg.normal_forms[v]);
        u.vertex(translate[v]);
      }
      for (auto const& e : sg.graph.edges()) {
        u.edge(sg.normal_forms[e.source], pos(e.gen), sg.normal_forms[e.target]);
        u.edge(translate[e.source], pos(e.gen), translate[e.target]);
      }
      vertex_type from = u.find(one), to = u.find(gnf);
      if (from == UNDEFINED_VERTEX || to == UNDEFINED_VERTEX) {
        continue;
      }
      auto path = u.least_path(from, to);
      if (!path) {
        continue;
      }
      std::unordered_map<Word, char> in_gsg;
      for (auto const& w : translate) {
        in_gsg.emplace(w, 1);
      }
      MaxResult r;
      r.sigma_class    = gnf;
      r.representative = path->first;
      r.radius_used    = radius;
      for (auto v : path->second) {
        Word const& nf = u.normal_form(v);
        r.certificate.push_back({nf, sg.find(nf) != UNDEFINED_VERTEX, in_gsg.count(nf) != 0});
      }
      return r;
    }
    return std::nullopt;
  }

  std::optional<MaxResult> free_product_max(Presentation const& p,
                                            Word const&         w,
                                            GroupOracle const&  oracle,
                                            Budget const&       b,
                                            std::size_t         max_radius) {
    p.validate_word(w);
    auto [z, y] = split_generators(p);
    std::vector<char> in_z(p.number_of_generators(), 0);
    for (auto g : z) {
      in_z[g] = 1;
    }
    // alternating stack of non-trivial blocks
    std::vector<std::pair<bool, Word>> stack;
    std::size_t                        i = 0;
    while (i < w.size()) {
      bool const          kind = in_z[w[i].gen()] != 0;
      std::vector<Letter> block;
      for (; i < w.size() && (in_z[w[i].gen()] != 0) == kind; ++i) {
        block.push_back(w[i]);
      }
      Word piece(std::move(block));
      if (!stack.empty() && stack.back().first == kind) {
        piece = stack.back().second * piece;
        stack.pop_back();
      }
      bool trivial;
      if (kind) {
        TriBool id = oracle.is_identity(piece);
        if (id == TriBool::unknown) {
          throw OracleError("cannot decide whether a block is trivial");
        }
        trivial = id == TriBool::confirmed;
      } else {
        piece   = free_reduce(piece);
        trivial = piece.empty();
      }
      if (!trivial) {
        stack.emplace_back(kind, std::move(piece));
      }
    }

    MaxResult result;
    result.sigma_class = oracle.normal_form_or_throw(w);
    std::optional<SubPresentation> sub;
    OraclePtr                      zoracle;
    for (auto const& [kind, piece] : stack) {
      if (!kind) {
        result.representative = result.representative * piece;
        continue;
      }
      if (!sub) {
        sub     = sub_presentation(p, z);
        zoracle = restrict_oracle(borrow(oracle), z);
      }
      auto m = sprawling_max(sub->presentation, sub->restrict(piece), *zoracle, b, max_radius);
      if (!m) {
        return std::nullopt;
      }
      result.representative = result.representative * sub->lift(m->representative);
      result.radius_used    = std::max(result.radius_used, m->radius_used);
      for (auto& step : m->certificate) {
        step.normal_form = sub->lift(step.normal_form);
        result.certificate.push_back(std::move(step));
      }
    }
    return result;
  }

  std::optional<WedgeResult> wedge_upper_bound(Presentation const& p,
                                               Word const&         s,
                                               Word const&         t,
                                               GroupOracle const&  oracle,
                                               Budget const&       b) {
    if (!is_special(p)) {
      throw InvalidArgument("wedge_upper_bound requires a special presentation");
    }
    if (!p.e_unitary_asserted()) {
      throw Refusal("wedge_upper_bound requires a presentation flagged e_unitary");
    }
    if (oracle.equal(s, t) != TriBool::confirmed) {
      throw InvalidArgument("s and t are not confirmed to be sigma-related");
    }
    auto const   as = approximate(p, s, b);
    auto const   at = approximate(p, invert(t), b);
    XGraph const& gs = as.graph;
    XGraph const& gt = at.graph;

    WedgeResult out;
    out.folded = determinize(wedge(gs, gt)).graph;

    std::size_t const k  = p.number_of_generators();
    std::size_t const nt = gt.number_of_vertices();
    auto key = [nt](vertex_type x, vertex_type y) {
      return static_cast<std::uint64_t>(x) * nt + y;
    };
    std::uint64_t const start  = key(gs.beta(), gt.alpha());
    std::uint64_t const target = key(gs.alpha(), gt.beta());
    // state -> (parent state, letter code)
    std::unordered_map<std::uint64_t, std::pair<std::uint64_t, std::uint32_t>> parent;
    std::vector<std::uint64_t>                                                 queue{start};
    parent.emplace(start, std::make_pair(start, 0u));
    bool found = start == target;
    for (std::size_t head = 0; head < queue.size() && !found; ++head) {
      std::uint64_t const st = queue[head];
      auto const          x  = static_cast<vertex_type>(st / nt);
      auto const          y  = static_cast<vertex_type>(st % nt);
      for (std::uint32_t c = 0; c < 2 * k; ++c) {
        Letter      l  = Letter::from_code(c);
        vertex_type x2 = gs.target(x, l), y2 = gt.target(y, l);
        if (x2 == UNDEFINED_VERTEX || y2 == UNDEFINED_VERTEX) {
          continue;
        }
        std::uint64_t next = key(x2, y2);
        if (parent.emplace(next, std::make_pair(st, c)).second) {
          if (next == target) {
            found = true;
            break;
          }
          queue.push_back(next);
        }
      }
    }
    if (!found) {
      return std::nullopt;
    }
    std::vector<Letter> letters;
    for (std::uint64_t st = target; st != start;) {
      auto const& [prev, c] = parent.at(st);
      letters.push_back(Letter::from_code(c));
      st = prev;
    }
    std::reverse(letters.begin(), letters.end());
    out.path        = Word(std::move(letters));
    out.upper_bound = invert(out.path);
    return out;
  }

  std::optional<std::size_t> phi_from_max(std::size_t        num_gens,
                                          MaxFunction const& max_fn,
                                          std::size_t        n) {
    std::size_t best   = 0;
    bool        failed = false;
    for_each_word(num_gens, n, [&](Word const& w) {
      if (failed) {
        return;
      }
      auto m = max_fn(w);
      if (!m) {
        failed = true;
        return;
      }
      best = std::max(best, m->size());
    });
    if (failed) {
      return std::nullopt;
    }
    return best;
  }

  Word gray_normal_max(Presentation const& fixture, Word const& w, GroupOracle const& oracle) {
    if (fixture.number_of_generators() == 0) {
      throw InvalidArgument("gray_normal_max: empty alphabet");
    }
    fixture.validate_word(w);
    gen_type const t = static_cast<gen_type>(fixture.number_of_generators() - 1);
    std::vector<std::pair<bool, Word>> stack;  // (is t-block, word)
    std::size_t                        i = 0;
    while (i < w.size()) {
      bool const          is_t = w[i].gen() == t;
      std::vector<Letter> block;
      for (; i < w.size() && (w[i].gen() == t) == is_t; ++i) {
        block.push_back(w[i]);
      }
      Word piece(std::move(block));
      if (!stack.empty() && stack.back().first == is_t) {
        piece = stack.back().second * piece;
        stack.pop_back();
      }
      bool trivial;
      if (is_t) {
        piece   = free_reduce(piece);
        trivial = piece.empty();
      } else {
        TriBool id = oracle.is_identity(piece);
        if (id == TriBool::unknown) {
          throw OracleError("the G-oracle cannot decide a block");
        }
        trivial = id == TriBool::confirmed;
      }
      if (!trivial) {
        stack.emplace_back(is_t, std::move(piece));
      }
    }
    Word out;
    for (auto const& [is_t, piece] : stack) {
      out = out * piece;
    }
    return out;
  }

}  // namespace invmon
