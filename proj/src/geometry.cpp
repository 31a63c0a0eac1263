#include "invmon/geometry.hpp"

#include <algorithm>

#include "invmon/error.hpp"

namespace invmon {

  vertex_type EmbeddedApproximant::find(Word const& nf) const {
    auto it = index.find(nf);
    return it == index.end() ? UNDEFINED_VERTEX : it->second;
  }

  namespace {

    // Subgraph of a Cayley ball given by vertex and positive-edge flags.
    class BallSubgraph {
     public:
      explicit BallSubgraph(CayleyBall const& ball)
          : _ball(ball),
            _k(ball.graph.number_of_generators()),
            _vertex(ball.size(), 0),
            _edge(ball.size() * _k, 0) {}

      bool has_vertex(vertex_type v) const {
        return _vertex[v] != 0;
      }
      std::vector<vertex_type> const& vertices() const {
        return _order;
      }

      void add_vertex(vertex_type v) {
        if (!_vertex[v]) {
          _vertex[v] = 1;
          _order.push_back(v);
        }
      }

      // positive edge (source, gen) of the ball
      void add_edge(vertex_type v, Letter l) {
        vertex_type t = _ball.graph.target(v, l);
        add_vertex(v);
        add_vertex(t);
        if (l.is_inverse()) {
          _edge[t * _k + l.gen()] = 1;
        } else {
          _edge[v * _k + l.gen()] = 1;
        }
      }

      bool has_edge(vertex_type v, Letter l) const {
        vertex_type t = _ball.graph.target(v, l);
        if (t == UNDEFINED_VERTEX) {
          return false;
        }
        return l.is_inverse() ? _edge[t * _k + l.gen()] != 0 : _edge[v * _k + l.gen()] != 0;
      }

      // endpoint of the u-path from v using present edges only
      vertex_type read(vertex_type v, Word const& u) const {
        for (auto l : u) {
          if (!has_edge(v, l)) {
            return UNDEFINED_VERTEX;
          }
          v = _ball.graph.target(v, l);
        }
        return v;
      }

      // whether the u-path from v stays in the ball
      bool in_ball(vertex_type v, Word const& u) const {
        for (auto l : u) {
          v = _ball.graph.target(v, l);
          if (v == UNDEFINED_VERTEX) {
            return false;
          }
        }
        return true;
      }

      // number of vertices the u-path from v would add
      std::size_t new_vertices(vertex_type v, Word const& u) const {
        std::size_t count = 0;
        for (auto l : u) {
          v = _ball.graph.target(v, l);
          count += _vertex[v] == 0;
        }
        return count;
      }

      void add_path(vertex_type v, Word const& u) {
        add_vertex(v);
        for (auto l : u) {
          add_edge(v, l);
          v = _ball.graph.target(v, l);
        }
      }

      bool edge_flag(vertex_type v, gen_type g) const {
        return _edge[v * _k + g] != 0;
      }

     private:
      CayleyBall const&        _ball;
      std::size_t              _k;
      std::vector<char>        _vertex;
      std::vector<char>        _edge;
      std::vector<vertex_type> _order;
    };

  }  // namespace

  EmbeddedApproximant embedded_closure(Presentation const& p,
                                       Word const&         w,
                                       GroupOracle const&  oracle,
                                       std::size_t         radius,
                                       Budget const&       b) {
    if (!p.e_unitary_asserted()) {
      throw Refusal("embedded_closure requires a presentation flagged e_unitary");
    }
    b.validate();
    p.validate_word(w);
    if (oracle.number_of_generators() < p.number_of_generators()) {
      throw InvalidArgument("oracle alphabet is smaller than the presentation's");
    }
    CayleyBall   ball = cayley_ball(oracle, radius);
    BallSubgraph sub(ball);
    if (!sub.in_ball(0, w)) {
      throw InvalidArgument("the path of w leaves the ball; increase the radius");
    }
    sub.add_path(0, w);

    EmbeddedApproximant out;
    out.radius = radius;
    while (out.rounds < b.max_rounds) {
      struct Pending {
        vertex_type from;
        Word const* word;
      };
      std::vector<Pending> pending;
      auto const           snapshot = sub.vertices();
      for (auto const& rel : p.relations()) {
        for (auto x : snapshot) {
          bool has_l = sub.read(x, rel.lhs) != UNDEFINED_VERTEX;
          bool has_r = sub.read(x, rel.rhs) != UNDEFINED_VERTEX;
          if (has_l == has_r) {
            continue;
          }
          Word const& missing = has_l ? rel.rhs : rel.lhs;
          if (sub.in_ball(x, missing)) {
            pending.push_back({x, &missing});
          } else {
            out.clipped = true;
          }
        }
      }
      if (pending.empty()) {
        out.fixpoint = true;
        break;
      }
      std::size_t added = 0;
      for (auto const& q : pending) {
        added += sub.new_vertices(q.from, *q.word);
      }
      if (sub.vertices().size() + added > b.max_vertices) {
        break;
      }
      for (auto const& q : pending) {
        sub.add_path(q.from, *q.word);
      }
      ++out.rounds;
    }
    if (!out.fixpoint && out.rounds == b.max_rounds) {
      // decide whether the last round reached the fixpoint
      bool more = false;
      for (auto const& rel : p.relations()) {
        for (auto x : sub.vertices()) {
          bool has_l = sub.read(x, rel.lhs) != UNDEFINED_VERTEX;
          bool has_r = sub.read(x, rel.rhs) != UNDEFINED_VERTEX;
          if (has_l != has_r && sub.in_ball(x, has_l ? rel.rhs : rel.lhs)) {
            more = true;
          }
        }
      }
      out.fixpoint = !more;
    }

    auto const&              order = sub.vertices();
    std::vector<vertex_type> local(ball.size(), UNDEFINED_VERTEX);
    for (vertex_type i = 0; i < order.size(); ++i) {
      local[order[i]] = i;
      out.normal_forms.push_back(ball.normal_forms[order[i]]);
      out.index.emplace(ball.normal_forms[order[i]], i);
    }
    std::size_t const k = ball.graph.number_of_generators();
    out.graph           = XGraph(k, order.size());
    for (auto v : order) {
      for (gen_type g = 0; g < k; ++g) {
        if (sub.edge_flag(v, g)) {
          out.graph.add_edge(local[v], pos(g), local[ball.graph.target(v, pos(g))]);
        }
      }
    }
    vertex_type end = 0;
    for (auto l : w) {
      end = ball.graph.target(end, l);
    }
    out.graph.set_roots(local[0], local[end]);
    return out;
  }

  std::vector<Word> sigma_labels(XGraph const& g, GroupOracle const& oracle) {
    std::size_t const        n = g.number_of_vertices();
    std::vector<Word>        label(n);
    std::vector<char>        seen(n, 0);
    std::vector<vertex_type> queue{g.alpha()};
    seen[g.alpha()] = 1;
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_type v = queue[head];
      for (std::uint32_t c = 0; c < 2 * g.number_of_generators(); ++c) {
        Letter      l = Letter::from_code(c);
        vertex_type t = g.target(v, l);
        if (t != UNDEFINED_VERTEX && !seen[t]) {
          seen[t]  = 1;
          label[t] = label[v] * Word{l};
          queue.push_back(t);
        }
      }
    }
    if (queue.size() != n) {
      throw InvalidArgument("sigma_labels requires a connected graph");
    }
    for (auto& w : label) {
      w = oracle.normal_form_or_throw(w);
    }
    return label;
  }

  DistortionTable distortion_profile(Presentation const& p,
                                     Word const&         w,
                                     GroupOracle const&  oracle,
                                     Budget const&       b,
                                     std::size_t         radius,
                                     Exec                exec) {
    if (!p.e_unitary_asserted()) {
      throw Refusal("distortion_profile requires a presentation flagged e_unitary");
    }
    return distortion_profile(approximate(p, w, b), oracle, b, radius, exec);
  }

  DistortionTable distortion_profile(Approximant const& a,
                                     GroupOracle const& oracle,
                                     Budget const&      b,
                                     std::size_t        radius,
                                     Exec               exec) {
    XGraph const&     g = a.graph;
    std::size_t const n = g.number_of_vertices();
    auto const        labels = sigma_labels(g, oracle);
    CayleyBall const  ball   = cayley_ball(oracle, radius);

    DistortionTable table;
    table.radius   = radius;
    table.budget   = b;
    table.clipped  = !a.saturated;
    table.vertices = n;
    table.rounds   = a.rounds_done;

    std::vector<std::uint32_t> dg(n * n, INFINITE_DISTANCE);
    std::uint32_t              realized = 0;
    for (vertex_type x = 0; x < n; ++x) {
      Word const inv = invert(labels[x]);
      for (vertex_type y = x; y < n; ++y) {
        vertex_type v = ball.find(oracle.normal_form_or_throw(inv * labels[y]));
        if (v == UNDEFINED_VERTEX) {
          ++table.pairs_beyond_radius;
          continue;
        }
        dg[x * n + y] = ball.distance[v];
        realized      = std::max(realized, ball.distance[v]);
      }
    }
    auto const dhat    = all_pairs_bfs(g, exec);
    auto const buckets = distortion_sweep(dhat, dg, n, radius, exec);

    BucketMax best;
    for (std::size_t r = 0; r <= std::min<std::size_t>(radius, realized); ++r) {
      auto const& bk = buckets[r];
      if (bk.seen && bucket_better(bk.value, bk.x, bk.y, best)) {
        best = bk;
      }
      DistortionRow row;
      row.r       = r;
      row.phi_hat = best.value;
      row.x       = best.x;
      row.y       = best.y;
      row.nf_x    = labels[best.x];
      row.nf_y    = labels[best.y];
      table.rows.push_back(std::move(row));
    }
    return table;
  }

  ////////////////////////////////////////////////////////////////////////
  // Prefix membership
  ////////////////////////////////////////////////////////////////////////

  RightUnitTester stephen_right_unit_tester(Presentation const& p,
                                            Budget const&       b,
                                            OraclePtr           oracle) {
    RightUnitTester t;
    t.name  = "stephen";
    t.total = false;
    t.test  = [p, b, oracle](Word const& w) {
      return test_right_unit(p, w, b, oracle.get());
    };
    return t;
  }

  RightUnitTester rewriting_right_unit_tester(RewritingSystem system,
                                              std::size_t     step_budget) {
    RightUnitTester t;
    t.name  = "rewriting";
    t.total = system.confluent_terminating;
    t.test  = [system = std::move(system), step_budget](Word const& w) {
      auto r = rewrite(w * invert(w), system.rules, step_budget, false);
      if (!r) {
        return TriBool::unknown;
      }
      if (r->empty()) {
        return TriBool::confirmed;
      }
      return system.confluent_terminating ? TriBool::refuted : TriBool::unknown;
    };
    return t;
  }

  std::size_t group_length(GroupOracle const& oracle, Word const& w) {
    Word const nf   = oracle.normal_form_or_throw(w);
    CayleyBall ball = cayley_ball(oracle, free_reduce(w).size());
    vertex_type v   = ball.find(nf);
    if (v == UNDEFINED_VERTEX) {
      throw OracleError("element not found in the ball of radius |w|");
    }
    return ball.distance[v];
  }

  TriBool prefix_membership(Presentation const&        p,
                            Word const&                g,
                            GroupOracle const&         oracle,
                            std::optional<LengthBound> phi,
                            RightUnitTester const&     tester,
                            Budget const&              b,
                            std::size_t                radius) {
    if (!is_special(p)) {
      throw InvalidArgument("prefix_membership requires a special presentation");
    }
    p.validate_word(g);
    if (oracle.is_identity(g) == TriBool::confirmed) {
      return TriBool::confirmed;
    }
    if (p.e_unitary_asserted() && oracle.has_normal_forms()) {
      auto closure = embedded_closure(p, Word(), oracle, radius, b);
      if (closure.find(oracle.normal_form_or_throw(g)) != UNDEFINED_VERTEX) {
        return TriBool::confirmed;
      }
    }
    if (!phi) {
      return TriBool::unknown;
    }
    std::size_t const bound       = (*phi)(group_length(oracle, g));
    bool              all_refuted = true;
    bool              found       = false;
    for_each_word(p.number_of_generators(), bound, [&](Word const& c) {
      if (found) {
        return;
      }
      TriBool same = oracle.equal(c, g);
      if (same == TriBool::refuted) {
        return;
      }
      if (same == TriBool::unknown) {
        all_refuted = false;
        return;
      }
      TriBool unit = tester.test(c);
      if (unit == TriBool::confirmed) {
        found = true;
      } else if (unit == TriBool::unknown) {
        all_refuted = false;
      }
    });
    if (found) {
      return TriBool::confirmed;
    }
    return tester.total && all_refuted ? TriBool::refuted : TriBool::unknown;
  }

}  // namespace invmon
