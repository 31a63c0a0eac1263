#pragma once

// Maximal elements of sigma-classes: the sprawling search, the free product
// decomposition, wedge upper bounds, the distortion bound derived from a
// maximum oracle, and the normal shape for Gray's fixtures.

#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "geometry.hpp"
#include "group_oracle.hpp"
#include "presentation.hpp"
#include "stephen.hpp"

namespace invmon {

  //! One vertex of the certifying path, with its membership in S_g (the
  //! embedded SGamma(1)) and in g S_g.
  struct CertificateStep {
    Word   normal_form;
    bool   in_sg  = false;
    bool   in_gsg = false;
  };

  struct MaxResult {
    Word                         sigma_class;
    Word                         representative;
    std::vector<CertificateStep> certificate;
    std::size_t                  radius_used = 0;
  };

  //! Searches the union of S_g = embedded_closure(p, 1) and its translate
  //! g S_g in balls of radius 1, 2, ..., max_radius for a path from 1 to g,
  //! and returns the lexicographically least label among the shortest such
  //! paths (letters ordered a < a^-1 < b < ...). nullopt when no radius up
  //! to max_radius connects them. The result is the maximum of the
  //! sigma-class when SGamma(1) is sprawling and p is E-unitary. Refusal
  //! unless p is flagged e_unitary.
  std::optional<MaxResult> sprawling_max(Presentation const& p,
                                         Word const&         g,
                                         GroupOracle const&  oracle,
                                         Budget const&       b,
                                         std::size_t         max_radius);

  //! Splits w into blocks over Y (generators in no relation) and Z (the
  //! rest), drops blocks with trivial image while merging neighbours, then
  //! maps Y-blocks to their free reduction and Z-blocks to sprawling_max in
  //! the presentation on Z. nullopt if some block search fails.
  std::optional<MaxResult> free_product_max(Presentation const& p,
                                            Word const&         w,
                                            GroupOracle const&  oracle,
                                            Budget const&       b,
                                            std::size_t         max_radius);

  struct WedgeResult {
    //! A common upper bound of [s] and [t].
    Word upper_bound;
    //! The word read from the wedge point to s s^-1 and to t^-1.
    Word path;
    //! The folded wedge of the two approximants.
    XGraph folded;
  };

  //! Common upper bound of sigma-related s and t in a special E-unitary
  //! presentation: the shortest (then lex least) word w reading from the
  //! vertex s of SGamma(s) to s s^-1 and from the vertex t^-1 t of
  //! SGamma(t^-1) to t^-1, both in budgeted approximants; returns w^-1.
  //! InvalidArgument unless the oracle confirms sigma(s) = sigma(t).
  std::optional<WedgeResult> wedge_upper_bound(Presentation const& p,
                                               Word const&         s,
                                               Word const&         t,
                                               GroupOracle const&  oracle,
                                               Budget const&       b);

  using MaxFunction = std::function<std::optional<Word>(Word const&)>;

  //! max |max_fn(w)| over all words of length <= n on num_gens generators;
  //! nullopt if max_fn fails on one of them.
  std::optional<std::size_t> phi_from_max(std::size_t        num_gens,
                                          MaxFunction const& max_fn,
                                          std::size_t        n);

  //! Reduces w over X and t (the last generator of the fixture) to the shape
  //! t^k1 w_1 t^k2 ... w_l t^k(l+1): t-blocks freely reduced, X-blocks kept
  //! as written unless trivial in G, trivial blocks removed and neighbours
  //! merged. `oracle` answers for G * FG(t). OracleError if G cannot decide.
  Word gray_normal_max(Presentation const& fixture, Word const& w, GroupOracle const& oracle);

}  // namespace invmon
