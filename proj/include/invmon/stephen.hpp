#pragma once

// Stephen's procedure with explicit budgets, and the semi-decision
// procedures built on it.
//
// Rounds: every round scans all (relation, vertex) pairs of a frozen
// snapshot (relations in presentation order, vertices in creation order).
// Whenever one side of a relation reads from x to y and the other side does
// not, the missing side is sewn as a new path from x to y. After the scan
// everything found is sewn and the graph is folded once.

#include <cstddef>
#include <vector>

#include "fold.hpp"
#include "group_oracle.hpp"
#include "presentation.hpp"
#include "tribool.hpp"
#include "xgraph.hpp"

namespace invmon {

  struct Budget {
    std::size_t max_rounds   = 16;
    std::size_t max_vertices = 1'000'000;

    //! InvalidArgument unless both fields are >= 1.
    void validate() const;
  };

  struct Approximant {
    XGraph      graph;
    std::size_t rounds_done = 0;
    //! No expansion applies: graph is the Schutzenberger graph.
    bool saturated = false;
    //! A round was skipped because it would exceed max_vertices.
    bool limit_hit = false;
    Word source_word;
  };

  //! Step-by-step driver, used directly when the intermediate graphs matter.
  class StephenRun {
   public:
    enum class Outcome { expanded, saturated, limit };

    //! Starts from the folded linear graph of w.
    StephenRun(Presentation const& p, Word w);

    //! One round. `limit`: sewing would push the vertex count past
    //! max_vertices, nothing changed. When `map` is given it receives, for
    //! each vertex of the previous graph, its image in the new one.
    Outcome step(std::size_t max_vertices, std::vector<vertex_type>* map = nullptr);

    //! True if the next round would sew nothing.
    bool saturated() const;

    std::size_t rounds_done() const noexcept {
      return _rounds;
    }
    std::size_t number_of_vertices() const noexcept {
      return _folder.number_of_ids();
    }
    vertex_type alpha() const noexcept {
      return _alpha;
    }
    vertex_type beta() const noexcept {
      return _beta;
    }
    //! UNDEFINED_VERTEX if u cannot be read from v.
    vertex_type read(vertex_type v, Word const& u) const {
      return _folder.read(v, u);
    }
    Word const& source_word() const noexcept {
      return _word;
    }

    XGraph graph() const;

   private:
    struct Sew {
      vertex_type  from;
      Word const*  word;
      vertex_type  to;
    };
    std::vector<Sew> scan() const;

    Presentation const* _p;
    Word                _word;
    bool                _special;
    std::vector<Word>   _relators;  // special presentations only
    Folder              _folder;
    vertex_type         _alpha = 0, _beta = 0;
    std::size_t         _rounds = 0;
    std::vector<char>   _done;  // special presentations: relator loops present
  };

  //! Runs Stephen's procedure on w within budget b. `saturated` is exact:
  //! when the round limit stops the run, one more scan decides it.
  Approximant approximate(Presentation const& p, Word const& w, Budget const& b);

  //! True iff u labels an alpha -> beta path of the approximant.
  bool reads_root_path(Approximant const& a, Word const& u);

  //! Confirmed iff u labels an alpha -> beta path in some approximant of
  //! SGamma(w) within budget, i.e. [u] >= [w]. Never refuted.
  TriBool test_geq(Presentation const& p, Word const& u, Word const& w, Budget const& b);

  //! Confirmed iff both test_geq directions are confirmed. Refuted if the
  //! oracle shows u and w have different group images, or, with
  //! `munn_refinement` on a presentation without relations, if the Munn
  //! trees differ (InvalidArgument when there are relations).
  TriBool test_equal(Presentation const& p,
                     Word const&         u,
                     Word const&         w,
                     Budget const&       b,
                     GroupOracle const*  oracle          = nullptr,
                     bool                munn_refinement = false);

  //! test_equal(w w^-1, 1).
  TriBool test_right_unit(Presentation const& p,
                          Word const&         w,
                          Budget const&       b,
                          GroupOracle const*  oracle = nullptr);

  //! determinize(linear_graph(w)); solves the word problem of the free
  //! inverse monoid via iso_rooted.
  XGraph munn_graph(Word const& w, std::size_t num_gens = 0);

}  // namespace invmon
