#include "invmon/kernels.hpp"

#include <numeric>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace invmon {

  namespace {
    struct Csr {
      std::vector<std::size_t> start;
      std::vector<vertex_type> adj;
    };

    Csr undirected_csr(XGraph const& g) {
      std::size_t const n = g.number_of_vertices();
      Csr               c;
      c.start.assign(n + 1, 0);
      for (auto const& e : g.edges()) {
        ++c.start[e.source + 1];
        ++c.start[e.target + 1];
      }
      std::partial_sum(c.start.begin(), c.start.end(), c.start.begin());
      c.adj.resize(c.start[n]);
      std::vector<std::size_t> fill(c.start.begin(), c.start.end() - 1);
      for (auto const& e : g.edges()) {
        c.adj[fill[e.source]++] = e.target;
        c.adj[fill[e.target]++] = e.source;
      }
      return c;
    }

    void bfs_row(Csr const&                c,
                 vertex_type               source,
                 std::uint32_t*            row,
                 std::vector<vertex_type>& queue) {
      std::size_t const n = c.start.size() - 1;
      std::fill(row, row + n, INFINITE_DISTANCE);
      queue.clear();
      row[source] = 0;
      queue.push_back(source);
      for (std::size_t head = 0; head < queue.size(); ++head) {
        vertex_type v = queue[head];
        for (std::size_t i = c.start[v]; i < c.start[v + 1]; ++i) {
          vertex_type u = c.adj[i];
          if (row[u] == INFINITE_DISTANCE) {
            row[u] = row[v] + 1;
            queue.push_back(u);
          }
        }
      }
    }
  }  // namespace

  std::vector<std::uint32_t> multi_source_bfs(XGraph const&                   g,
                                              std::vector<vertex_type> const& sources,
                                              Exec                            exec) {
    Csr const         c = undirected_csr(g);
    std::size_t const n = g.number_of_vertices();
    std::size_t const m = sources.size();
    std::vector<std::uint32_t> out(m * n);
    if (exec == Exec::serial) {
      std::vector<vertex_type> queue;
      for (std::size_t i = 0; i < m; ++i) {
        bfs_row(c, sources[i], out.data() + i * n, queue);
      }
      return out;
    }
#pragma omp parallel
    {
      std::vector<vertex_type> queue;
#pragma omp for schedule(dynamic, 16)
      for (std::ptrdiff_t i = 0; i < static_cast<std::ptrdiff_t>(m); ++i) {
        bfs_row(c, sources[i], out.data() + i * n, queue);
      }
    }
    return out;
  }

  std::vector<std::uint32_t> all_pairs_bfs(XGraph const& g, Exec exec) {
    std::vector<vertex_type> sources(g.number_of_vertices());
    std::iota(sources.begin(), sources.end(), 0);
    return multi_source_bfs(g, sources, exec);
  }

  namespace {
    void sweep_rows(std::vector<std::uint32_t> const& dhat,
                    std::vector<std::uint32_t> const& dg,
                    std::size_t                       n,
                    std::size_t                       x,
                    std::vector<BucketMax>&           best) {
      for (std::size_t y = x; y < n; ++y) {
        std::uint32_t b = dg[x * n + y];
        if (b >= best.size()) {
          continue;
        }
        std::uint32_t v = dhat[x * n + y];
        if (bucket_better(v, x, y, best[b])) {
          best[b] = {v, static_cast<vertex_type>(x), static_cast<vertex_type>(y), true};
        }
      }
    }

    void merge_into(std::vector<BucketMax>& into, std::vector<BucketMax> const& from) {
      for (std::size_t b = 0; b < into.size(); ++b) {
        if (from[b].seen && bucket_better(from[b].value, from[b].x, from[b].y, into[b])) {
          into[b] = from[b];
        }
      }
    }
  }  // namespace

  std::vector<BucketMax> distortion_sweep(std::vector<std::uint32_t> const& dhat,
                                          std::vector<std::uint32_t> const& dg,
                                          std::size_t                       n,
                                          std::size_t                       max_bucket,
                                          Exec                              exec) {
    std::vector<BucketMax> best(max_bucket + 1);
    if (exec == Exec::serial) {
      for (std::size_t x = 0; x < n; ++x) {
        sweep_rows(dhat, dg, n, x, best);
      }
      return best;
    }
#pragma omp parallel
    {
      std::vector<BucketMax> local(max_bucket + 1);
#pragma omp for schedule(dynamic, 16) nowait
      for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(n); ++x) {
        sweep_rows(dhat, dg, n, x, local);
      }
#pragma omp critical
      merge_into(best, local);
    }
    return best;
  }

  int kernel_threads() noexcept {
#ifdef _OPENMP
    return omp_get_max_threads();
#else
    return 1;
#endif
  }

}  // namespace invmon
