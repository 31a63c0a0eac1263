#include "invmon/xgraph.hpp"

#include <deque>
#include <numeric>
#include <sstream>

#include "invmon/error.hpp"
#include "invmon/fold.hpp"

namespace invmon {

  XGraph::XGraph(std::size_t num_gens, std::size_t num_vertices)
      : _num_gens(num_gens),
        _num_vertices(num_vertices),
        _table(num_vertices * 2 * num_gens, UNDEFINED_VERTEX) {
    if (num_vertices == 0) {
      throw InvalidArgument("an X-graph needs at least one vertex");
    }
  }

  void XGraph::set_roots(vertex_type alpha, vertex_type beta) {
    if (alpha >= _num_vertices || beta >= _num_vertices) {
      throw InvalidArgument("root out of range");
    }
    _alpha = alpha;
    _beta  = beta;
  }

  vertex_type XGraph::add_vertex() {
    _table.resize(_table.size() + 2 * _num_gens, UNDEFINED_VERTEX);
    return static_cast<vertex_type>(_num_vertices++);
  }

  void XGraph::add_vertices(std::size_t count) {
    _num_vertices += count;
    _table.resize(_num_vertices * 2 * _num_gens, UNDEFINED_VERTEX);
  }

  void XGraph::add_edge(vertex_type source, Letter l, vertex_type target) {
    if (source >= _num_vertices || target >= _num_vertices) {
      throw InvalidArgument("edge endpoint out of range");
    }
    if (l.gen() >= _num_gens) {
      throw InvalidArgument("edge label out of range");
    }
    if (l.is_inverse()) {
      std::swap(source, target);
      l = l.inverse();
    }
    std::size_t const k   = 2 * _num_gens;
    vertex_type&      fwd = _table[source * k + l.code()];
    vertex_type&      bwd = _table[target * k + l.inverse().code()];
    if (fwd == target && bwd == source) {
      return;
    }
    if (fwd == UNDEFINED_VERTEX) {
      fwd = target;
    } else {
      _deterministic = false;
    }
    if (bwd == UNDEFINED_VERTEX) {
      bwd = source;
    } else {
      _deterministic = false;
    }
    _edges.push_back({source, l.gen(), target});
  }

  std::size_t XGraph::degree(vertex_type v) const noexcept {
    std::size_t d = 0;
    for (std::size_t c = 0; c < 2 * _num_gens; ++c) {
      d += target(v, Letter::from_code(c)) != UNDEFINED_VERTEX;
    }
    return d;
  }

  XGraph linear_graph(Word const& w, std::size_t num_gens) {
    num_gens = std::max(num_gens, w.alphabet_bound());
    XGraph g(num_gens, w.size() + 1);
    for (std::size_t i = 0; i < w.size(); ++i) {
      g.add_edge(i, w[i], i + 1);
    }
    g.set_roots(0, w.size());
    return g;
  }

  Determinized determinize(XGraph const& g) {
    std::vector<std::size_t> order(g.number_of_edges());
    std::iota(order.begin(), order.end(), 0);
    return determinize(g, order);
  }

  Determinized determinize(XGraph const&                g,
                           std::span<std::size_t const> edge_order) {
    if (edge_order.size() != g.number_of_edges()) {
      throw InvalidArgument("edge order has the wrong length");
    }
    Folder f(g.number_of_generators(), g.number_of_vertices());
    auto   edges = g.edges();
    for (auto i : edge_order) {
      auto const& e = edges[i];
      f.add_edge(e.source, pos(e.gen), e.target);
      f.fold();
    }
    auto map   = f.compact();
    auto graph = f.to_xgraph(map[g.alpha()], map[g.beta()]);
    return {std::move(graph), std::move(map)};
  }

  std::optional<vertex_type> read(XGraph const& g, vertex_type start, Word const& w) {
    if (!g.is_deterministic()) {
      throw InvalidArgument("read requires a deterministic graph");
    }
    vertex_type v = start;
    for (auto l : w) {
      if (l.gen() >= g.number_of_generators()) {
        return std::nullopt;
      }
      v = g.target(v, l);
      if (v == UNDEFINED_VERTEX) {
        return std::nullopt;
      }
    }
    return v;
  }

  std::vector<ExtNat> bfs_distances(XGraph const& g, vertex_type source) {
    std::size_t const n = g.number_of_vertices();
    // adjacency in CSR form, so nondeterministic graphs are handled as well
    std::vector<std::size_t> start(n + 1, 0);
    for (auto const& e : g.edges()) {
      ++start[e.source + 1];
      ++start[e.target + 1];
    }
    std::partial_sum(start.begin(), start.end(), start.begin());
    std::vector<vertex_type> adj(start[n]);
    std::vector<std::size_t> fill(start.begin(), start.end() - 1);
    for (auto const& e : g.edges()) {
      adj[fill[e.source]++] = e.target;
      adj[fill[e.target]++] = e.source;
    }
    std::vector<ExtNat>      dist(n, ExtNat::infinity());
    std::vector<vertex_type> queue;
    queue.reserve(n);
    dist[source] = ExtNat(0);
    queue.push_back(source);
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_type v = queue[head];
      auto        d = dist[v].value() + 1;
      for (std::size_t i = start[v]; i < start[v + 1]; ++i) {
        vertex_type u = adj[i];
        if (!dist[u].is_finite()) {
          dist[u] = ExtNat(d);
          queue.push_back(u);
        }
      }
    }
    return dist;
  }

  ExtNat path_metric(XGraph const& g, vertex_type u, vertex_type v) {
    if (u >= g.number_of_vertices() || v >= g.number_of_vertices()) {
      throw InvalidArgument("vertex out of range");
    }
    return bfs_distances(g, u)[v];
  }

  std::vector<std::uint32_t> canonical_form(XGraph const& g) {
    if (!g.is_deterministic()) {
      throw InvalidArgument("canonical_form requires a deterministic graph");
    }
    std::size_t const          k = 2 * g.number_of_generators();
    std::vector<vertex_type>   id(g.number_of_vertices(), UNDEFINED_VERTEX);
    std::vector<vertex_type>   order{g.alpha()};
    id[g.alpha()] = 0;
    for (std::size_t head = 0; head < order.size(); ++head) {
      for (std::size_t c = 0; c < k; ++c) {
        vertex_type t = g.target(order[head], Letter::from_code(c));
        if (t != UNDEFINED_VERTEX && id[t] == UNDEFINED_VERTEX) {
          id[t] = static_cast<vertex_type>(order.size());
          order.push_back(t);
        }
      }
    }
    std::vector<std::uint32_t> out;
    out.reserve(3 + order.size() * k);
    out.push_back(static_cast<std::uint32_t>(g.number_of_generators()));
    out.push_back(static_cast<std::uint32_t>(order.size()));
    out.push_back(id[g.beta()]);
    for (auto v : order) {
      for (std::size_t c = 0; c < k; ++c) {
        vertex_type t = g.target(v, Letter::from_code(c));
        out.push_back(t == UNDEFINED_VERTEX ? UNDEFINED_VERTEX : id[t]);
      }
    }
    return out;
  }

  bool iso_rooted(XGraph const& g1, XGraph const& g2) {
    if (!g1.is_deterministic() || !g2.is_deterministic()) {
      throw InvalidArgument("iso_rooted requires deterministic graphs");
    }
    if (g1.number_of_generators() != g2.number_of_generators()
        || g1.number_of_vertices() != g2.number_of_vertices()
        || g1.number_of_edges() != g2.number_of_edges()) {
      return false;
    }
    std::size_t const        k = 2 * g1.number_of_generators();
    std::vector<vertex_type> f(g1.number_of_vertices(), UNDEFINED_VERTEX);
    std::vector<vertex_type> finv(g2.number_of_vertices(), UNDEFINED_VERTEX);
    std::vector<vertex_type> queue{g1.alpha()};
    f[g1.alpha()]    = g2.alpha();
    finv[g2.alpha()] = g1.alpha();
    for (std::size_t head = 0; head < queue.size(); ++head) {
      vertex_type v1 = queue[head], v2 = f[v1];
      for (std::size_t c = 0; c < k; ++c) {
        Letter      l  = Letter::from_code(c);
        vertex_type t1 = g1.target(v1, l), t2 = g2.target(v2, l);
        if ((t1 == UNDEFINED_VERTEX) != (t2 == UNDEFINED_VERTEX)) {
          return false;
        }
        if (t1 == UNDEFINED_VERTEX) {
          continue;
        }
        if (f[t1] == UNDEFINED_VERTEX && finv[t2] == UNDEFINED_VERTEX) {
          f[t1]    = t2;
          finv[t2] = t1;
          queue.push_back(t1);
        } else if (f[t1] != t2 || finv[t2] != t1) {
          return false;
        }
      }
    }
    if (queue.size() != g1.number_of_vertices()) {
      // equal vertex counts and a bijection on the root component leave
      // other components unmatched
      throw InvalidArgument("iso_rooted requires connected graphs");
    }
    return f[g1.beta()] == g2.beta();
  }

  XGraph wedge(XGraph const& g1, XGraph const& g2) {
    std::size_t const k  = std::max(g1.number_of_generators(),
                                   g2.number_of_generators());
    std::size_t const n1 = g1.number_of_vertices();
    XGraph            g(k, n1 + g2.number_of_vertices() - 1);
    for (auto const& e : g1.edges()) {
      g.add_edge(e.source, pos(e.gen), e.target);
    }
    auto map = [&](vertex_type v) -> vertex_type {
      if (v == g2.alpha()) {
        return g1.beta();
      }
      return static_cast<vertex_type>(n1 + v - (v > g2.alpha() ? 1 : 0));
    };
    for (auto const& e : g2.edges()) {
      g.add_edge(map(e.source), pos(e.gen), map(e.target));
    }
    g.set_roots(g1.alpha(), map(g2.beta()));
    return g;
  }

  std::string to_dot(XGraph const& g, Alphabet const& alphabet) {
    std::ostringstream os;
    os << "digraph {\n";
    for (vertex_type v = 0; v < g.number_of_vertices(); ++v) {
      os << "  " << v;
      if (v == g.alpha() && v == g.beta()) {
        os << " [shape=doublecircle, peripheries=3]";
      } else if (v == g.alpha()) {
        os << " [shape=doublecircle]";
      } else if (v == g.beta()) {
        os << " [shape=square]";
      }
      os << ";\n";
    }
    for (auto const& e : g.edges()) {
      std::string label = e.gen < alphabet.size() ? alphabet.name(e.gen)
                                                  : "x" + std::to_string(e.gen);
      os << "  " << e.source << " -> " << e.target << " [label=\"" << label
         << "\"];\n";
    }
    os << "}\n";
    return os.str();
  }

}  // namespace invmon
