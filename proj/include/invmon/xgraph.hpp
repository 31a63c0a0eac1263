#pragma once

// Birooted involutive edge-labelled graphs ("X-graphs"), linear graphs,
// determinisation (folding), path reading, path metric and rooted isomorphism.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "extended.hpp"
#include "words.hpp"

namespace invmon {

  using vertex_type = std::uint32_t;

  inline constexpr vertex_type UNDEFINED_VERTEX = static_cast<vertex_type>(-1);

  //! A positive edge source --gen--> target. Its inverse edge
  //! target --gen^-1--> source is implicit.
  struct Edge {
    vertex_type source;
    gen_type    gen;
    vertex_type target;

    friend bool operator==(Edge const&, Edge const&) = default;
    friend auto operator<=>(Edge const&, Edge const&) = default;
  };

  //! An X-graph on vertices 0, ..., n - 1 with roots alpha and beta.
  //!
  //! Only positive edges are stored, so the involution invariant holds by
  //! construction. Alongside the edge list the graph keeps a dense transition
  //! table (one slot per vertex and letter) filled on a first-writer basis;
  //! once two edges compete for a slot the graph is flagged nondeterministic
  //! and path reading is refused until it is determinised.
  class XGraph {
   public:
    explicit XGraph(std::size_t num_gens = 0, std::size_t num_vertices = 1);

    std::size_t number_of_generators() const noexcept {
      return _num_gens;
    }
    std::size_t number_of_vertices() const noexcept {
      return _num_vertices;
    }
    //! Number of stored (positive) edges.
    std::size_t number_of_edges() const noexcept {
      return _edges.size();
    }
    std::span<Edge const> edges() const noexcept {
      return _edges;
    }

    vertex_type alpha() const noexcept {
      return _alpha;
    }
    vertex_type beta() const noexcept {
      return _beta;
    }
    void set_roots(vertex_type alpha, vertex_type beta);

    vertex_type add_vertex();
    void        add_vertices(std::size_t count);

    //! Adds source --l--> target together with its inverse. Adding an edge
    //! already recorded in the transition table is a no-op.
    void add_edge(vertex_type source, Letter l, vertex_type target);

    bool is_deterministic() const noexcept {
      return _deterministic;
    }

    //! Target of the l-edge at v, or UNDEFINED_VERTEX. On a nondeterministic
    //! graph this returns one of the candidates.
    vertex_type target(vertex_type v, Letter l) const noexcept {
      return _table[static_cast<std::size_t>(v) * 2 * _num_gens + l.code()];
    }

    //! Number of letters with an edge at v (in either direction).
    std::size_t degree(vertex_type v) const noexcept;

    friend bool operator==(XGraph const&, XGraph const&) = default;

   private:
    std::size_t              _num_gens;
    std::size_t              _num_vertices;
    vertex_type              _alpha = 0;
    vertex_type              _beta  = 0;
    bool                     _deterministic = true;
    std::vector<Edge>        _edges;
    std::vector<vertex_type> _table;
  };

  //! The linear graph of w: |w| + 1 vertices on a path alpha = 0 to
  //! beta = |w| reading w. `num_gens` defaults to w.alphabet_bound().
  XGraph linear_graph(Word const& w, std::size_t num_gens = 0);

  //! Result of determinise: the folded graph and the surjection from input
  //! vertices onto output vertices.
  struct Determinized {
    XGraph                   graph;
    std::vector<vertex_type> map;
  };

  //! Folds g until it is deterministic. Output vertices are numbered in order
  //! of the least input vertex of each class, so the result does not depend
  //! on the order in which folds happen.
  Determinized determinize(XGraph const& g);

  //! Same, inserting the edges of g in the order given by `edge_order` (a
  //! permutation of 0, ..., g.number_of_edges() - 1). Used to exercise fold
  //! confluence.
  Determinized determinize(XGraph const&                g,
                           std::span<std::size_t const> edge_order);

  //! Endpoint of the w-labelled path from start, if it exists. Throws
  //! InvalidArgument on a nondeterministic graph.
  std::optional<vertex_type> read(XGraph const& g, vertex_type start, Word const& w);

  //! Unweighted BFS distances from source; infinity for unreachable vertices.
  std::vector<ExtNat> bfs_distances(XGraph const& g, vertex_type source);

  //! BFS distance between u and v; infinity across components.
  ExtNat path_metric(XGraph const& g, vertex_type u, vertex_type v);

  //! Canonical encoding of the component of alpha: vertices are renumbered in
  //! BFS order from alpha (letters in code order), and the encoding lists the
  //! vertex count, the new index of beta and the full transition table. Two
  //! deterministic graphs have equal forms iff they are birooted isomorphic on
  //! the component of alpha. Requires a deterministic graph.
  std::vector<std::uint32_t> canonical_form(XGraph const& g);

  //! Birooted, label-preserving isomorphism test for deterministic graphs,
  //! decided by walking both graphs from alpha in lockstep. Throws
  //! InvalidArgument on nondeterministic input.
  bool iso_rooted(XGraph const& g1, XGraph const& g2);

  //! Disjoint union of g1 and g2 with g2's alpha identified with g1's beta,
  //! before any folding. Roots of the result: alpha of g1, beta of g2.
  XGraph wedge(XGraph const& g1, XGraph const& g2);

  //! Graphviz export: one edge per positive letter labelled by the generator
  //! name, alpha drawn as a doublecircle and beta as a square.
  std::string to_dot(XGraph const& g, Alphabet const& alphabet);

}  // namespace invmon
