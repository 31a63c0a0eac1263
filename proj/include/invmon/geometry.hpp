#pragma once

// The embedded Schutzenberger graph inside a Cayley ball of the maximal
// group image (E-unitary case), empirical distortion tables, and prefix
// monoid membership.

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "group_oracle.hpp"
#include "kernels.hpp"
#include "presentation.hpp"
#include "stephen.hpp"
#include "tribool.hpp"

namespace invmon {

  //! Under-approximation of sigma(SGamma(w)) intersected with a ball.
  struct EmbeddedApproximant {
    //! Vertex i is the group element normal_forms[i]; vertex 0 is 1.
    std::vector<Word> normal_forms;
    //! alpha = 1, beta = sigma(w).
    XGraph      graph;
    std::size_t radius = 0;
    std::size_t rounds = 0;
    //! Some completion was suppressed because it left the ball.
    bool clipped = false;
    //! No further completion applies inside the ball.
    bool fixpoint = false;

    std::unordered_map<Word, vertex_type> index;

    //! Vertex with the given normal form, or UNDEFINED_VERTEX.
    vertex_type find(Word const& nf) const;
  };

  //! Starts from the w-path at 1 and repeatedly adds, for each relation
  //! u = v and each vertex x, the v-path from x when the u-path from x is
  //! present but the v-path is not (and symmetrically), as long as the new
  //! path stays inside the ball of the given radius. Runs to a fixpoint or
  //! for b.max_rounds rounds; stops early before exceeding b.max_vertices.
  //! Refusal unless the presentation is flagged E-unitary; InvalidArgument
  //! if the w-path itself leaves the ball.
  EmbeddedApproximant embedded_closure(Presentation const& p,
                                       Word const&         w,
                                       GroupOracle const&  oracle,
                                       std::size_t         radius,
                                       Budget const&       b);

  struct DistortionRow {
    std::size_t   r = 0;
    std::uint32_t phi_hat = 0;
    vertex_type   x = UNDEFINED_VERTEX;
    vertex_type   y = UNDEFINED_VERTEX;
    Word          nf_x;
    Word          nf_y;
  };

  struct DistortionTable {
    std::size_t radius = 0;
    Budget      budget;
    //! The approximant was not saturated, so phi_hat only bounds the true
    //! distances from above pair by pair.
    bool                       clipped = false;
    std::size_t                vertices = 0;
    std::size_t                rounds   = 0;
    std::size_t                pairs_beyond_radius = 0;
    std::vector<DistortionRow> rows;
  };

  //! For all pairs x <= y of a Stephen approximant of SGamma(w): dhat is the
  //! approximant path distance and dG the group distance of the sigma
  //! images, measured in the Cayley ball of the given radius (pairs farther
  //! apart are counted and skipped). Row r holds the maximum dhat over pairs
  //! with dG <= r, for r up to min(radius, largest dG seen); its witness is
  //! the pair with the largest dhat, then the smallest (x, y).
  DistortionTable distortion_profile(Presentation const& p,
                                     Word const&         w,
                                     GroupOracle const&  oracle,
                                     Budget const&       b,
                                     std::size_t         radius,
                                     Exec                exec = Exec::parallel);

  //! Same, on an already computed approximant.
  DistortionTable distortion_profile(Approximant const& a,
                                     GroupOracle const& oracle,
                                     Budget const&      b,
                                     std::size_t        radius,
                                     Exec               exec = Exec::parallel);

  //! Group labels of approximant vertices: the label of a BFS-tree path
  //! from alpha (letters in code order), normalised by the oracle.
  std::vector<Word> sigma_labels(XGraph const& g, GroupOracle const& oracle);

  //! Decides [w w^-1] = 1, i.e. whether w is a right unit. `total` promises
  //! the tester never answers unknown on valid input.
  struct RightUnitTester {
    std::function<TriBool(Word const&)> test;
    bool                                total = false;
    std::string                         name;
  };

  //! test_right_unit with the given budget; not total.
  RightUnitTester stephen_right_unit_tester(Presentation const& p,
                                            Budget const&       b,
                                            OraclePtr           oracle = nullptr);

  //! Rewrites w w^-1 as a plain monoid word (no free reduction) with the
  //! given system; total when the system is flagged confluent_terminating,
  //! in which case a nonempty irreducible word refutes.
  RightUnitTester rewriting_right_unit_tester(RewritingSystem system,
                                              std::size_t     step_budget = 100'000);

  using LengthBound = std::function<std::size_t(std::size_t)>;

  //! Is sigma(g) in the prefix monoid (the vertices of the embedded
  //! SGamma(1))? Confirmed if it is a vertex of embedded_closure(p, 1)
  //! within `radius` (E-unitary presentations only), or if phi is given and
  //! some word of length <= phi(l_G(g)) with the same sigma image is a
  //! confirmed right unit. Refuted only if phi is given, the tester is total
  //! and every such word is refuted. Requires a special presentation.
  TriBool prefix_membership(Presentation const&        p,
                            Word const&                g,
                            GroupOracle const&         oracle,
                            std::optional<LengthBound> phi,
                            RightUnitTester const&     tester,
                            Budget const&              b,
                            std::size_t                radius);

  //! Length of sigma(w) in the word metric.
  std::size_t group_length(GroupOracle const& oracle, Word const& w);

}  // namespace invmon
