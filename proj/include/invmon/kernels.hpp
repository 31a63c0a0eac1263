#pragma once

// Data-parallel kernels. Each comes in a serial reference version and an
// OpenMP version selected by Exec; both produce identical results (the
// parallel reductions merge per-thread partials with the same deterministic
// tie-breaks as the serial loop).

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

#include "xgraph.hpp"

namespace invmon {

  enum class Exec { serial, parallel };

  inline constexpr std::uint32_t INFINITE_DISTANCE
      = std::numeric_limits<std::uint32_t>::max();

  //! Row-major n x n matrix of unweighted BFS distances (INFINITE_DISTANCE
  //! across components). Edges are used in both directions.
  std::vector<std::uint32_t> all_pairs_bfs(XGraph const& g, Exec exec = Exec::parallel);

  //! Distances from `sources` only; row i belongs to sources[i].
  std::vector<std::uint32_t> multi_source_bfs(XGraph const&                   g,
                                              std::vector<vertex_type> const& sources,
                                              Exec exec = Exec::parallel);

  //! Largest value of `dhat` seen for an exact bucket value of `dg`.
  struct BucketMax {
    std::uint32_t value = 0;
    vertex_type   x     = UNDEFINED_VERTEX;
    vertex_type   y     = UNDEFINED_VERTEX;
    bool          seen  = false;
  };

  //! True if (v1, x1, y1) beats (v2, x2, y2): larger value, then smaller
  //! (x, y).
  constexpr bool bucket_better(std::uint32_t v1,
                               vertex_type   x1,
                               vertex_type   y1,
                               BucketMax const& b) noexcept {
    if (!b.seen) {
      return true;
    }
    if (v1 != b.value) {
      return v1 > b.value;
    }
    return x1 < b.x || (x1 == b.x && y1 < b.y);
  }

  //! For pairs x <= y with dg(x, y) <= max_bucket (dg == INFINITE_DISTANCE
  //! marks pairs to skip), the maximal dhat(x, y) per bucket dg(x, y).
  //! Both matrices are row-major n x n.
  std::vector<BucketMax> distortion_sweep(std::vector<std::uint32_t> const& dhat,
                                          std::vector<std::uint32_t> const& dg,
                                          std::size_t                       n,
                                          std::size_t                       max_bucket,
                                          Exec exec = Exec::parallel);

  //! Number of threads the parallel kernels would use.
  int kernel_threads() noexcept;

}  // namespace invmon
