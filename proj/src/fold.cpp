#include "invmon/fold.hpp"

#include <numeric>

#include "invmon/error.hpp"

namespace invmon {

  Folder::Folder(std::size_t num_gens, std::size_t num_vertices)
      : _num_gens(num_gens) {
    _parent.reserve(num_vertices);
    for (std::size_t i = 0; i < num_vertices; ++i) {
      add_vertex();
    }
  }

  vertex_type Folder::add_vertex() {
    auto v = static_cast<vertex_type>(_parent.size());
    _parent.push_back(v);
    _size.push_back(1);
    _table.resize(_table.size() + 2 * _num_gens, UNDEFINED_VERTEX);
    ++_live;
    return v;
  }

  vertex_type Folder::find(vertex_type v) noexcept {
    vertex_type root = v;
    while (_parent[root] != root) {
      root = _parent[root];
    }
    while (_parent[v] != root) {
      vertex_type next = _parent[v];
      _parent[v]       = root;
      v                = next;
    }
    return root;
  }

  vertex_type Folder::find(vertex_type v) const noexcept {
    while (_parent[v] != v) {
      v = _parent[v];
    }
    return v;
  }

  void Folder::set_slot(vertex_type u, Letter l, vertex_type v) {
    vertex_type& s = _table[slot(u, l)];
    if (s == UNDEFINED_VERTEX) {
      s = v;
    } else if (find(s) != find(v)) {
      _queue.emplace_back(s, v);
    }
  }

  void Folder::add_edge(vertex_type u, Letter l, vertex_type v) {
    u = find(u);
    v = find(v);
    set_slot(u, l, v);
    set_slot(v, l.inverse(), u);
  }

  void Folder::identify(vertex_type u, vertex_type v) {
    _queue.emplace_back(u, v);
  }

  void Folder::fold() {
    std::size_t const num_letters = 2 * _num_gens;
    while (!_queue.empty()) {
      auto [x, y] = _queue.back();
      _queue.pop_back();
      x = find(x);
      y = find(y);
      if (x == y) {
        continue;
      }
      if (_size[x] < _size[y]) {
        std::swap(x, y);
      }
      // y is absorbed into x
      _parent[y] = x;
      _size[x] += _size[y];
      --_live;
      for (std::size_t c = 0; c < num_letters; ++c) {
        vertex_type ty = _table[y * num_letters + c];
        if (ty == UNDEFINED_VERTEX) {
          continue;
        }
        vertex_type& tx = _table[x * num_letters + c];
        if (tx == UNDEFINED_VERTEX) {
          tx = ty;
        } else {
          _queue.emplace_back(tx, ty);
        }
      }
    }
  }

  vertex_type Folder::read(vertex_type v, Word const& w) const noexcept {
    v = find(v);
    for (auto l : w) {
      v = target(v, l);
      if (v == UNDEFINED_VERTEX) {
        return v;
      }
    }
    return v;
  }

  std::vector<vertex_type> Folder::compact() {
    if (pending()) {
      throw InvalidArgument("Folder::compact called with pending folds");
    }
    std::size_t const        n           = _parent.size();
    std::size_t const        num_letters = 2 * _num_gens;
    std::vector<vertex_type> map(n, UNDEFINED_VERTEX);
    std::vector<vertex_type> root_id(n, UNDEFINED_VERTEX);
    vertex_type              next = 0;
    for (vertex_type v = 0; v < n; ++v) {
      vertex_type r = find(v);
      if (root_id[r] == UNDEFINED_VERTEX) {
        root_id[r] = next++;
      }
      map[v] = root_id[r];
    }
    std::vector<vertex_type>   table(static_cast<std::size_t>(next) * num_letters,
                                   UNDEFINED_VERTEX);
    std::vector<std::uint32_t> size(next);
    for (vertex_type v = 0; v < n; ++v) {
      if (_parent[v] != v) {
        continue;
      }
      vertex_type nv = root_id[v];
      size[nv]       = _size[v];
      for (std::size_t c = 0; c < num_letters; ++c) {
        vertex_type t = _table[v * num_letters + c];
        if (t != UNDEFINED_VERTEX) {
          table[nv * num_letters + c] = map[t];
        }
      }
    }
    _parent.resize(next);
    std::iota(_parent.begin(), _parent.end(), 0);
    _size  = std::move(size);
    _table = std::move(table);
    _live  = next;
    return map;
  }

  XGraph Folder::to_xgraph(vertex_type alpha, vertex_type beta) const {
    if (!_queue.empty()) {
      throw InvalidArgument("Folder::to_xgraph called with pending folds");
    }
    std::size_t const        n = _parent.size();
    std::vector<vertex_type> id(n, UNDEFINED_VERTEX);
    vertex_type              next = 0;
    for (vertex_type v = 0; v < n; ++v) {
      vertex_type r = find(v);
      if (id[r] == UNDEFINED_VERTEX) {
        id[r] = next++;
      }
      id[v] = id[r];
    }
    XGraph g(_num_gens, next);
    for (vertex_type v = 0; v < n; ++v) {
      if (_parent[v] != v) {
        continue;
      }
      for (gen_type a = 0; a < _num_gens; ++a) {
        vertex_type t = _table[slot(v, pos(a))];
        if (t != UNDEFINED_VERTEX) {
          g.add_edge(id[v], pos(a), id[find(t)]);
        }
      }
    }
    g.set_roots(id[find(alpha)], id[find(beta)]);
    return g;
  }

}  // namespace invmon
