#include <doctest.h>

#include "helpers.hpp"
#include "invmon/kernels.hpp"
#include "invmon/stephen.hpp"

using namespace invmon;

TEST_SUITE("kernels") {
  TEST_CASE("all_pairs_bfs matches path_metric") {
    auto g = determinize(linear_graph(invmon::test::w("a b a^-1 b b a"))).graph;
    auto d = all_pairs_bfs(g, Exec::serial);
    auto n = g.number_of_vertices();
    for (vertex_type x = 0; x < n; ++x) {
      for (vertex_type y = 0; y < n; ++y) {
        CHECK(ExtNat(d[x * n + y]) == path_metric(g, x, y));
      }
    }
    XGraph two(1, 2);
    CHECK(all_pairs_bfs(two)[1] == INFINITE_DISTANCE);
  }

  TEST_CASE("serial and parallel kernels agree") {
    auto p = fixture_scary();
    auto a = approximate(p, Word(), Budget{3, 1'000'000});
    auto s = all_pairs_bfs(a.graph, Exec::serial);
    auto q = all_pairs_bfs(a.graph, Exec::parallel);
    CHECK(s == q);

    std::vector<vertex_type> sources{0, 5, 17};
    CHECK(multi_source_bfs(a.graph, sources, Exec::serial)
          == multi_source_bfs(a.graph, sources, Exec::parallel));

    std::size_t const n = a.graph.number_of_vertices();
    std::mt19937_64   rng(1);
    std::vector<std::uint32_t> dg(n * n);
    for (auto& v : dg) {
      v = rng() % 7 == 0 ? INFINITE_DISTANCE : static_cast<std::uint32_t>(rng() % 5);
    }
    auto bs = distortion_sweep(s, dg, n, 4, Exec::serial);
    auto bp = distortion_sweep(s, dg, n, 4, Exec::parallel);
    REQUIRE(bs.size() == bp.size());
    for (std::size_t b = 0; b < bs.size(); ++b) {
      CHECK(bs[b].seen == bp[b].seen);
      CHECK(bs[b].value == bp[b].value);
      CHECK(bs[b].x == bp[b].x);
      CHECK(bs[b].y == bp[b].y);
    }
    CHECK(kernel_threads() >= 1);
  }

  TEST_CASE("sweep tie-break") {
    // two pairs in bucket 1 with the same dhat: the smaller (x, y) wins
    std::vector<std::uint32_t> dhat{0, 3, 3, 3, 0, 3, 3, 3, 0};
    std::vector<std::uint32_t> dg{0, 1, 1, 1, 0, 2, 1, 2, 0};
    auto                       b = distortion_sweep(dhat, dg, 3, 2, Exec::serial);
    CHECK(b[1].x == 0);
    CHECK(b[1].y == 1);
    CHECK(b[2].x == 1);
    CHECK(b[2].y == 2);
    CHECK(b[0].value == 0);
  }
}
