#include <doctest.h>

#include <algorithm>

#include "invmon/error.hpp"
#include "invmon/propa.hpp"

using namespace invmon;

namespace {
  using Matrix = std::vector<std::vector<ExtReal>>;

  ExtReal const inf = ExtReal::infinity();

  FinExtMetric uniform_metric(std::size_t n, double d) {
    Matrix m(n, std::vector<ExtReal>(n, d));
    for (std::size_t i = 0; i < n; ++i) {
      m[i][i] = 0;
    }
    return FinExtMetric(m);
  }

  template <typename T>
  Witness<T> deltas(std::size_t n, T eps, double R, double S) {
    Witness<T> w;
    w.eps = eps;
    w.R   = R;
    w.S   = S;
    for (std::size_t x = 0; x < n; ++x) {
      w.xi.push_back({{x, T(1)}});
    }
    return w;
  }

  template <typename T>
  void check_transport_properties(RandomInstance<T> const& inst,
                                  ContractionMap const&    cm,
                                  TransportResult<T> const& r,
                                  T const&                  tol) {
    auto const& X = cm.X;
    // support radius S' = k c R
    CHECK(r.zeta.S == static_cast<double>(cm.k * r.c) * inst.xi.R);
    CHECK(r.clipped == 0);
    for (std::size_t x = 0; x < X.size(); ++x) {
      T norm = l1_norm(r.zeta.xi[x]);
      REQUIRE(norm <= T(1) + tol);
      REQUIRE(norm >= T(1) - tol);
      for (auto const& [q, v] : r.zeta.xi[x]) {
        REQUIRE(v > T(0));
        REQUIRE(X.within(x, q, r.zeta.S));
      }
    }
    // variation is dominated by the variation upstairs
    for (std::size_t x = 0; x < X.size(); ++x) {
      for (std::size_t z = x + 1; z < X.size(); ++z) {
        if (X.within(x, z, inst.xi.R)) {
          REQUIRE(l1_distance(r.zeta.xi[x], r.zeta.xi[z])
                  <= l1_distance(inst.xi.xi[cm.f[x]], inst.xi.xi[cm.f[z]]) + tol);
        }
      }
    }
    // class diameters
    for (std::size_t p = 0; p < r.classes.size(); ++p) {
      for (auto const& cls : r.classes[p]) {
        REQUIRE(std::is_sorted(cls.begin(), cls.end()));
        std::size_t in_component = 0;
        for (std::size_t x = 0; x < X.size(); ++x) {
          if (X.component(x) == X.component(cls[0]) && cm.Y.within(cm.f[x], p, inst.xi.S)) {
            ++in_component;
          }
        }
        for (auto a : cls) {
          for (auto b : cls) {
            REQUIRE(X.distance(a, b).is_finite());
            REQUIRE(X.distance(a, b).value() < static_cast<double>(in_component) * inst.xi.R);
            REQUIRE(X.distance(a, b).value() <= r.zeta.S);
          }
        }
      }
    }
  }
}  // namespace

TEST_SUITE("propa") {
  TEST_CASE("metric validation") {
    CHECK_NOTHROW(FinExtMetric(Matrix{{0, 1, inf}, {1, 0, inf}, {inf, inf, 0}}));
    CHECK_THROWS_AS(FinExtMetric(Matrix{{0, 1}, {2, 0}}), InvalidArgument);
    CHECK_THROWS_AS(FinExtMetric(Matrix{{1}}), InvalidArgument);
    CHECK_THROWS_AS(FinExtMetric(Matrix{{0, 0}, {0, 0}}), InvalidArgument);
    CHECK_THROWS_AS(FinExtMetric(Matrix{{0, 1, 5}, {1, 0, 1}, {5, 1, 0}}), InvalidArgument);
    // finite distances across a would-be component boundary break the
    // triangle inequality
    CHECK_THROWS_AS(FinExtMetric(Matrix{{0, 1, inf}, {1, 0, 1}, {inf, 1, 0}}), InvalidArgument);
    CHECK_THROWS_AS(FinExtMetric(Matrix{{0, -1}, {-1, 0}}), InvalidArgument);
    FinExtMetric m(Matrix{{0, 1, inf}, {1, 0, inf}, {inf, inf, 0}});
    CHECK(m.number_of_components() == 2);
    CHECK(m.component(0) == m.component(1));
    CHECK(m.component(2) != m.component(0));
    CHECK(m.ball(0, 1) == std::vector<std::size_t>{0, 1});
  }

  TEST_CASE("check_witness examples") {
    auto space = uniform_metric(4, 2);
    CHECK(check_witness(space, deltas<double>(4, 0.0, 1.0, 0.0), 1e-9).ok());

    auto two = uniform_metric(2, 1);
    auto r   = check_witness(two, deltas<double>(2, 1.0, 1.0, 0.0), 1e-9);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].kind == Violation::Kind::variation);
    CHECK(r.violations[0].value == 2.0);
    CHECK(r.violations[0].x == 0);
    CHECK(r.violations[0].y == 1);

    Witness<Rational> uniform;
    uniform.eps = 0;
    uniform.R   = 10;
    uniform.S   = 2;
    for (std::size_t x = 0; x < 4; ++x) {
      SparseVector<Rational> v;
      for (std::size_t y = 0; y < 4; ++y) {
        v.emplace_back(y, Rational(1, 4));
      }
      uniform.xi.push_back(v);
    }
    CHECK(check_witness(space, uniform, Rational(0)).ok());
  }

  TEST_CASE("check_witness lists every kind of violation") {
    auto           space = uniform_metric(3, 2);
    Witness<double> w    = deltas<double>(3, 0.5, 1.0, 1.0);
    w.xi[0]              = {{0, 0.5}};
    w.xi[1]              = {{1, 1.5}, {2, -0.5}};
    auto r               = check_witness(space, w, 1e-9);
    auto count           = [&](Violation::Kind k) {
      return std::count_if(r.violations.begin(), r.violations.end(),
                           [k](auto const& v) { return v.kind == k; });
    };
    CHECK(count(Violation::Kind::norm) == 1);
    CHECK(count(Violation::Kind::negative) == 1);
    CHECK(count(Violation::Kind::support) == 1);
    CHECK(count(Violation::Kind::variation) == 0);
    w.xi.pop_back();
    CHECK(check_witness(space, w, 1e-9).violations[0].kind == Violation::Kind::size);
    CHECK_FALSE(to_string(r.violations[0]).empty());
  }

  TEST_CASE("analyze_contraction") {
    auto X = uniform_metric(4, 1);
    CHECK(analyze_contraction(X, X, {0, 1, 2, 3}).k == 1);
    auto point = uniform_metric(1, 1);
    CHECK(analyze_contraction(X, point, {0, 0, 0, 0}).k == 4);
    auto far = uniform_metric(4, 3);
    CHECK_THROWS_AS(analyze_contraction(X, far, {0, 1, 2, 3}), InvalidArgument);
    CHECK_THROWS_AS(analyze_contraction(X, point, {0, 0, 1, 0}), InvalidArgument);
    // k is per component
    FinExtMetric split(Matrix{{0, inf}, {inf, 0}});
    CHECK(analyze_contraction(split, point, {0, 0}).k == 1);
  }

  TEST_CASE("identity transport") {
    auto X  = uniform_metric(5, 1);
    auto cm = analyze_contraction(X, X, {0, 1, 2, 3, 4});
    auto xi = deltas<double>(5, 2.0, 1.0, 0.0);
    auto r  = transport_witness(cm, xi, 1e-9);
    CHECK(r.c == 1);
    CHECK(r.zeta.xi == xi.xi);
    CHECK(r.zeta.S == 1.0);
  }

  TEST_CASE("transport onto a point") {
    std::size_t const n  = 4;
    double const      R  = 2;
    auto              X  = uniform_metric(n, R);
    auto              Y  = uniform_metric(1, 1);
    auto              cm = analyze_contraction(X, Y, std::vector<std::size_t>(n, 0));
    CHECK(cm.k == n);
    auto r = transport_witness(cm, deltas<Rational>(1, Rational(0), R, 0), Rational(0));
    CHECK(r.c == 1);
    CHECK(r.zeta.S == n * R);
    REQUIRE(r.classes[0].size() == 1);
    CHECK(r.classes[0][0].size() == n);
    for (std::size_t x = 0; x < n; ++x) {
      CHECK(r.zeta.xi[x] == SparseVector<Rational>{{0, Rational(1)}});
    }
    CHECK(check_witness(X, r.zeta, Rational(0)).ok());
  }

  TEST_CASE("invalid witnesses are rejected") {
    auto X  = uniform_metric(2, 1);
    auto cm = analyze_contraction(X, X, {0, 1});
    CHECK_THROWS_AS(transport_witness(cm, deltas<double>(2, 1.0, 1.0, 0.0), 1e-9),
                    InvalidArgument);
  }

  TEST_CASE("random instances, floating point") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 100; ++i) {
      auto inst = random_instance<double>(rng);
      auto cm   = analyze_contraction(inst.X, inst.Y, inst.f);
      REQUIRE(cm.k <= 3);
      REQUIRE(inst.X.size() <= 30);
      REQUIRE(inst.Y.size() <= 12);
      REQUIRE(check_witness(inst.Y, inst.xi, 1e-9).ok());
      auto r = transport_witness(cm, inst.xi, 1e-9);
      REQUIRE(check_witness(inst.X, r.zeta, 1e-9).ok());
      check_transport_properties(inst, cm, r, 1e-9);
      auto s = transport_witness(cm, inst.xi, 1e-9, Exec::serial);
      REQUIRE(s.zeta.xi == r.zeta.xi);
    }
  }

  TEST_CASE("random instances, exact") {
    std::mt19937_64 rng(2024);
    for (int i = 0; i < 40; ++i) {
      auto inst = random_instance<Rational>(rng);
      auto cm   = analyze_contraction(inst.X, inst.Y, inst.f);
      auto r    = transport_witness(cm, inst.xi, Rational(0));
      REQUIRE(check_witness(inst.X, r.zeta, Rational(0)).ok());
      for (auto const& z : r.zeta.xi) {
        REQUIRE(l1_norm(z) == Rational(1));
      }
      check_transport_properties(inst, cm, r, Rational(0));
    }
  }

  TEST_CASE("the same seed gives the same instance in both modes") {
    std::mt19937_64 r1(77), r2(77);
    auto            a = random_instance<double>(r1);
    auto            b = random_instance<Rational>(r2);
    CHECK(a.f == b.f);
    CHECK(a.X.matrix() == b.X.matrix());
    REQUIRE(a.xi.xi.size() == b.xi.xi.size());
    for (std::size_t y = 0; y < a.xi.xi.size(); ++y) {
      REQUIRE(a.xi.xi[y].size() == b.xi.xi[y].size());
      for (std::size_t i = 0; i < a.xi.xi[y].size(); ++i) {
        CHECK(a.xi.xi[y][i].first == b.xi.xi[y][i].first);
        CHECK(a.xi.xi[y][i].second == doctest::Approx(to_double(b.xi.xi[y][i].second)));
      }
    }
  }
}
