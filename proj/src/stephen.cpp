#include "invmon/stephen.hpp"

#include "invmon/error.hpp"

namespace invmon {

  void Budget::validate() const {
    if (max_rounds == 0 || max_vertices == 0) {
      throw InvalidArgument("budget fields must be at least 1");
    }
  }

  StephenRun::StephenRun(Presentation const& p, Word w)
      : _p(&p),
        _word(std::move(w)),
        _special(is_special(p)),
        _folder(p.number_of_generators()) {
    p.validate_word(_word);
    if (_special) {
      for (auto const& r : p.relations()) {
        _relators.push_back(r.lhs.empty() ? r.rhs : r.lhs);
      }
    }
    for (std::size_t i = 0; i <= _word.size(); ++i) {
      _folder.add_vertex();
    }
    for (std::size_t i = 0; i < _word.size(); ++i) {
      _folder.add_edge(i, _word[i], i + 1);
    }
    _folder.fold();
    auto map = _folder.compact();
    _alpha   = map[0];
    _beta    = map[_word.size()];
    _done.assign(_folder.number_of_ids() * _relators.size(), 0);
  }

  std::vector<StephenRun::Sew> StephenRun::scan() const {
    std::vector<Sew>  out;
    std::size_t const n = _folder.number_of_ids();
    if (_special) {
      std::size_t const nr = _relators.size();
      for (std::size_t i = 0; i < nr; ++i) {
        Word const& r = _relators[i];
        for (vertex_type x = 0; x < n; ++x) {
          if (!_done[x * nr + i] && _folder.read(x, r) != x) {
            out.push_back({x, &r, x});
          }
        }
      }
      return out;
    }
    for (auto const& rel : _p->relations()) {
      for (vertex_type x = 0; x < n; ++x) {
        vertex_type y1 = _folder.read(x, rel.lhs);
        vertex_type y2 = _folder.read(x, rel.rhs);
        if (y1 == y2) {
          continue;
        }
        if (y1 != UNDEFINED_VERTEX) {
          out.push_back({x, &rel.rhs, y1});
        }
        if (y2 != UNDEFINED_VERTEX) {
          out.push_back({x, &rel.lhs, y2});
        }
      }
    }
    return out;
  }

  bool StephenRun::saturated() const {
    return scan().empty();
  }

  StephenRun::Outcome StephenRun::step(std::size_t               max_vertices,
                                       std::vector<vertex_type>* map) {
    auto sews = scan();
    if (sews.empty()) {
      return Outcome::saturated;
    }
    std::size_t const n     = _folder.number_of_ids();
    std::size_t       added = 0;
    for (auto const& s : sews) {
      added += s.word->empty() ? 0 : s.word->size() - 1;
    }
    if (n + added > max_vertices) {
      return Outcome::limit;
    }
    for (auto const& s : sews) {
      Word const& w = *s.word;
      if (w.empty()) {
        _folder.identify(s.from, s.to);
        continue;
      }
      vertex_type prev = s.from;
      for (std::size_t i = 0; i < w.size(); ++i) {
        vertex_type next = i + 1 == w.size() ? s.to : _folder.add_vertex();
        _folder.add_edge(prev, w[i], next);
        prev = next;
      }
    }
    _folder.fold();
    auto cmap = _folder.compact();
    _alpha    = cmap[_alpha];
    _beta     = cmap[_beta];
    if (_special) {
      // every old vertex now carries all relator loops
      std::size_t const nr = _relators.size();
      std::vector<char> done(_folder.number_of_ids() * nr, 0);
      for (vertex_type x = 0; x < n; ++x) {
        std::fill_n(done.begin() + cmap[x] * nr, nr, 1);
      }
      _done = std::move(done);
    }
    ++_rounds;
    if (map != nullptr) {
      map->assign(cmap.begin(), cmap.begin() + n);
    }
    return Outcome::expanded;
  }

  XGraph StephenRun::graph() const {
    return _folder.to_xgraph(_alpha, _beta);
  }

  Approximant approximate(Presentation const& p, Word const& w, Budget const& b) {
    b.validate();
    StephenRun  run(p, w);
    Approximant a;
    while (run.rounds_done() < b.max_rounds) {
      auto o = run.step(b.max_vertices);
      if (o == StephenRun::Outcome::saturated) {
        a.saturated = true;
        break;
      }
      if (o == StephenRun::Outcome::limit) {
        a.limit_hit = true;
        break;
      }
    }
    if (!a.saturated && !a.limit_hit) {
      a.saturated = run.saturated();
    }
    a.graph       = run.graph();
    a.rounds_done = run.rounds_done();
    a.source_word = w;
    return a;
  }

  bool reads_root_path(Approximant const& a, Word const& u) {
    auto end = read(a.graph, a.graph.alpha(), u);
    return end && *end == a.graph.beta();
  }

  TriBool test_geq(Presentation const& p, Word const& u, Word const& w, Budget const& b) {
    b.validate();
    p.validate_word(u);
    StephenRun run(p, w);
    while (true) {
      if (run.read(run.alpha(), u) == run.beta()) {
        return TriBool::confirmed;
      }
      if (run.rounds_done() == b.max_rounds
          || run.step(b.max_vertices) != StephenRun::Outcome::expanded) {
        return TriBool::unknown;
      }
    }
  }

  TriBool test_equal(Presentation const& p,
                     Word const&         u,
                     Word const&         w,
                     Budget const&       b,
                     GroupOracle const*  oracle,
                     bool                munn_refinement) {
    if (munn_refinement && !p.relations().empty()) {
      throw InvalidArgument("the Munn refinement only applies without relations");
    }
    p.validate_word(u);
    p.validate_word(w);
    if (oracle != nullptr) {
      if (oracle->number_of_generators() < p.number_of_generators()) {
        throw InvalidArgument("oracle alphabet is smaller than the presentation's");
      }
      if (oracle->equal(u, w) == TriBool::refuted) {
        return TriBool::refuted;
      }
    }
    if (munn_refinement) {
      std::size_t k = p.number_of_generators();
      return iso_rooted(munn_graph(u, k), munn_graph(w, k)) ? TriBool::confirmed
                                                            : TriBool::refuted;
    }
    if (test_geq(p, u, w, b) == TriBool::confirmed
        && test_geq(p, w, u, b) == TriBool::confirmed) {
      return TriBool::confirmed;
    }
    return TriBool::unknown;
  }

  TriBool test_right_unit(Presentation const& p,
                          Word const&         w,
                          Budget const&       b,
                          GroupOracle const*  oracle) {
    return test_equal(p, w * invert(w), Word(), b, oracle);
  }

  XGraph munn_graph(Word const& w, std::size_t num_gens) {
    return determinize(linear_graph(w, num_gens)).graph;
  }

}  // namespace invmon
