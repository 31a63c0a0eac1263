#pragma once

// The folding kernel shared by determinise and Stephen's procedure: an
// incrementally built X-graph whose equally labelled edges are identified as
// soon as they appear (union-find with path compression plus a merge queue).

#include <cstddef>
#include <utility>
#include <vector>

#include "words.hpp"
#include "xgraph.hpp"

namespace invmon {

  class Folder {
   public:
    explicit Folder(std::size_t num_gens, std::size_t num_vertices = 0);

    std::size_t number_of_generators() const noexcept {
      return _num_gens;
    }
    //! Including vertices that have been merged away.
    std::size_t number_of_ids() const noexcept {
      return _parent.size();
    }
    std::size_t number_of_live_vertices() const noexcept {
      return _live;
    }

    vertex_type add_vertex();

    //! Adds u --l--> v (and its inverse). Conflicts are queued; call fold()
    //! to resolve them.
    void add_edge(vertex_type u, Letter l, vertex_type v);

    //! Queues the identification of u and v.
    void identify(vertex_type u, vertex_type v);

    //! Resolves every queued identification; afterwards each live vertex
    //! has at most one edge per letter.
    void fold();

    bool pending() const noexcept {
      return !_queue.empty();
    }

    vertex_type find(vertex_type v) noexcept;
    vertex_type find(vertex_type v) const noexcept;

    bool is_root(vertex_type v) const noexcept {
      return _parent[v] == v;
    }

    //! Representative of the l-neighbour of the class of v.
    vertex_type target(vertex_type v, Letter l) noexcept {
      vertex_type t = _table[slot(find(v), l)];
      return t == UNDEFINED_VERTEX ? t : find(t);
    }
    vertex_type target(vertex_type v, Letter l) const noexcept {
      vertex_type t = _table[slot(find(v), l)];
      return t == UNDEFINED_VERTEX ? t : find(t);
    }

    //! Reads w from v; UNDEFINED_VERTEX if reading fails. Requires no
    //! pending folds.
    vertex_type read(vertex_type v, Word const& w) const noexcept;

    //! Renumbers classes 0, 1, ... in increasing order of their least member
    //! id and drops dead ids. Returns old id -> new id for every old id.
    //! Requires no pending folds.
    std::vector<vertex_type> compact();

    //! Snapshot as an XGraph on the live vertices (numbered as compact() would
    //! number them), with the given roots (old ids). Requires no pending folds.
    XGraph to_xgraph(vertex_type alpha, vertex_type beta) const;

   private:
    std::size_t slot(vertex_type v, Letter l) const noexcept {
      return static_cast<std::size_t>(v) * 2 * _num_gens + l.code();
    }
    void set_slot(vertex_type u, Letter l, vertex_type v);

    std::size_t                                      _num_gens;
    std::size_t                                      _live = 0;
    std::vector<vertex_type>                         _parent;
    std::vector<std::uint32_t>                       _size;
    std::vector<vertex_type>                         _table;
    std::vector<std::pair<vertex_type, vertex_type>> _queue;
  };

}  // namespace invmon
