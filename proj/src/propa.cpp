#include "invmon/propa.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>

#include "invmon/error.hpp"

namespace invmon {

  namespace {
    std::string pair_string(std::size_t x, std::size_t y) {
      return "(" + std::to_string(x) + ", " + std::to_string(y) + ")";
    }

    struct UnionFind {
      std::vector<std::size_t> parent;
      explicit UnionFind(std::size_t n) : parent(n) {
        std::iota(parent.begin(), parent.end(), 0);
      }
      std::size_t find(std::size_t x) {
        while (parent[x] != x) {
          parent[x] = parent[parent[x]];
          x         = parent[x];
        }
        return x;
      }
      // keeps the smaller root so roots are least members
      void unite(std::size_t x, std::size_t y) {
        x = find(x);
        y = find(y);
        if (x != y) {
          parent[std::max(x, y)] = std::min(x, y);
        }
      }
    };

    template <typename T>
    T abs_value(T const& x) {
      return x < T(0) ? T(-x) : x;
    }
  }  // namespace

  double to_double(double x) noexcept {
    return x;
  }

  double to_double(Rational const& x) {
    return x.convert_to<double>();
  }

  ////////////////////////////////////////////////////////////////////////
  // FinExtMetric
  ////////////////////////////////////////////////////////////////////////

  FinExtMetric::FinExtMetric(std::vector<std::vector<ExtReal>> d) : _n(d.size()) {
    _d.reserve(_n * _n);
    for (std::size_t x = 0; x < _n; ++x) {
      if (d[x].size() != _n) {
        throw InvalidArgument("distance matrix is not square (row " + std::to_string(x) + ")");
      }
      for (auto v : d[x]) {
        if (v.is_finite() && !(v.value() >= 0 && std::isfinite(v.value()))) {
          throw InvalidArgument("distances must be nonnegative reals or infinity");
        }
        _d.push_back(v);
      }
    }
    for (std::size_t x = 0; x < _n; ++x) {
      if (distance(x, x) != ExtReal(0)) {
        throw InvalidArgument("d(x, x) != 0 at x = " + std::to_string(x));
      }
      for (std::size_t y = x + 1; y < _n; ++y) {
        if (distance(x, y) != distance(y, x)) {
          throw InvalidArgument("asymmetric distance at " + pair_string(x, y));
        }
        if (distance(x, y) == ExtReal(0)) {
          throw InvalidArgument("distinct points at distance 0: " + pair_string(x, y));
        }
      }
    }
    // triangle inequality; with inf allowed it also makes finiteness an
    // equivalence relation
    for (std::size_t z = 0; z < _n; ++z) {
      for (std::size_t x = 0; x < _n; ++x) {
        for (std::size_t y = 0; y < _n; ++y) {
          if (distance(x, z) + distance(z, y) < distance(x, y)) {
            throw InvalidArgument("triangle inequality fails for " + pair_string(x, y)
                                  + " via " + std::to_string(z));
          }
        }
      }
    }
    _component.assign(_n, _n);
    for (std::size_t x = 0; x < _n; ++x) {
      if (_component[x] != _n) {
        continue;
      }
      for (std::size_t y = x; y < _n; ++y) {
        if (distance(x, y).is_finite()) {
          _component[y] = _num_components;
        }
      }
      ++_num_components;
    }
  }

  std::vector<std::size_t> FinExtMetric::ball(std::size_t x, double r) const {
    std::vector<std::size_t> out;
    for (std::size_t y = 0; y < _n; ++y) {
      if (within(x, y, r)) {
        out.push_back(y);
      }
    }
    return out;
  }

  std::vector<std::vector<ExtReal>> FinExtMetric::matrix() const {
    std::vector<std::vector<ExtReal>> out(_n);
    for (std::size_t x = 0; x < _n; ++x) {
      out[x].assign(_d.begin() + x * _n, _d.begin() + (x + 1) * _n);
    }
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Witnesses
  ////////////////////////////////////////////////////////////////////////

  std::string to_string(Violation const& v) {
    std::ostringstream os;
    switch (v.kind) {
      case Violation::Kind::norm:
        os << "norm of xi_" << v.x << " is " << v.value << ", expected 1";
        break;
      case Violation::Kind::negative:
        os << "xi_" << v.x << "(" << v.y << ") = " << v.value << " is negative";
        break;
      case Violation::Kind::support:
        os << "xi_" << v.x << " is supported at " << v.y << ", outside B(" << v.x << ", S)";
        break;
      case Violation::Kind::variation:
        os << "||xi_" << v.x << " - xi_" << v.y << "|| = " << v.value << " exceeds eps";
        break;
      case Violation::Kind::size:
        os << "witness has " << v.x << " vectors for a space of " << v.y << " points";
        break;
    }
    return os.str();
  }

  template <typename T>
  T l1_norm(SparseVector<T> const& u) {
    T s(0);
    for (auto const& [p, v] : u) {
      s += abs_value(v);
    }
    return s;
  }

  template <typename T>
  T l1_distance(SparseVector<T> const& u, SparseVector<T> const& v) {
    T           s(0);
    std::size_t i = 0, j = 0;
    while (i < u.size() || j < v.size()) {
      if (j == v.size() || (i < u.size() && u[i].first < v[j].first)) {
        s += abs_value(u[i++].second);
      } else if (i == u.size() || v[j].first < u[i].first) {
        s += abs_value(v[j++].second);
      } else {
        s += abs_value(T(u[i++].second - v[j++].second));
      }
    }
    return s;
  }

  template <typename T>
  WitnessReport check_witness(FinExtMetric const& space, Witness<T> const& w, T const& tol) {
    WitnessReport     report;
    std::size_t const n = space.size();
    if (w.xi.size() != n) {
      report.violations.push_back({Violation::Kind::size, w.xi.size(), n, 0});
      return report;
    }
    for (std::size_t x = 0; x < n; ++x) {
      T sum(0);
      for (auto const& [p, v] : w.xi[x]) {
        if (p >= n) {
          report.violations.push_back({Violation::Kind::support, x, p, to_double(v)});
          continue;
        }
        if (v < T(0)) {
          report.violations.push_back({Violation::Kind::negative, x, p, to_double(v)});
        }
        if (!space.within(x, p, w.S)) {
          report.violations.push_back({Violation::Kind::support, x, p, to_double(v)});
        }
        sum += v;
      }
      if (abs_value(T(sum - T(1))) > tol) {
        report.violations.push_back({Violation::Kind::norm, x, x, to_double(sum)});
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (space.within(x, y, w.R)) {
          T d = l1_distance(w.xi[x], w.xi[y]);
          if (d > w.eps) {
            report.violations.push_back({Violation::Kind::variation, x, y, to_double(d)});
          }
        }
      }
    }
    return report;
  }

  ////////////////////////////////////////////////////////////////////////
  // Contractions and transport
  ////////////////////////////////////////////////////////////////////////

  ContractionMap analyze_contraction(FinExtMetric const&             X,
                                     FinExtMetric const&             Y,
                                     std::vector<std::size_t> const& f) {
    std::size_t const n = X.size();
    if (f.size() != n) {
      throw InvalidArgument("the map is defined on " + std::to_string(f.size())
                            + " points, X has " + std::to_string(n));
    }
    for (std::size_t x = 0; x < n; ++x) {
      if (f[x] >= Y.size()) {
        throw InvalidArgument("f(" + std::to_string(x) + ") is not a point of Y");
      }
    }
    for (std::size_t x = 0; x < n; ++x) {
      for (std::size_t y = x + 1; y < n; ++y) {
        if (Y.distance(f[x], f[y]) > X.distance(x, y)) {
          throw InvalidArgument("f increases the distance of " + pair_string(x, y));
        }
      }
    }
    ContractionMap cm{X, Y, f, 0};
    std::vector<std::size_t> count(X.number_of_components() * Y.size(), 0);
    for (std::size_t x = 0; x < n; ++x) {
      cm.k = std::max(cm.k, ++count[X.component(x) * Y.size() + f[x]]);
    }
    return cm;
  }

  namespace {
    template <typename T>
    SparseVector<T> zeta_at(ContractionMap const&                         cm,
                            Witness<T> const&                             xi,
                            std::vector<std::vector<std::size_t>> const&  h,
                            std::size_t                                   x,
                            double                                        s_prime,
                            std::size_t&                                  clipped) {
      SparseVector<T> z;
      for (auto const& [p, v] : xi.xi[cm.f[x]]) {
        std::size_t q = h[p][x];
        // x is in C_p since supp xi_f(x) lies in B(f(x), S)
        z.emplace_back(q, v);
      }
      std::sort(z.begin(), z.end(), [](auto const& a, auto const& b) { return a.first < b.first; });
      SparseVector<T> out;
      for (auto& [q, v] : z) {
        if (!out.empty() && out.back().first == q) {
          out.back().second += v;
        } else {
          out.emplace_back(q, std::move(v));
        }
      }
      auto keep = std::remove_if(out.begin(), out.end(), [&](auto const& e) {
        return e.second == T(0) || !cm.X.within(x, e.first, s_prime);
      });
      clipped += std::count_if(keep, out.end(), [](auto const& e) { return e.second != T(0); });
      out.erase(keep, out.end());
      return out;
    }
  }  // namespace

  template <typename T>
  TransportResult<T> transport_witness(ContractionMap const& cm,
                                       Witness<T> const&     xi,
                                       T const&              tol,
                                       Exec                  exec) {
    auto report = check_witness(cm.Y, xi, tol);
    if (!report.ok()) {
      throw InvalidArgument("the witness on Y is invalid: " + to_string(report.violations.front()));
    }
    std::size_t const nx = cm.X.size();
    std::size_t const ny = cm.Y.size();

    TransportResult<T> out;
    for (std::size_t y = 0; y < ny; ++y) {
      out.c = std::max(out.c, cm.Y.ball(y, xi.S).size());
    }
    double const s_prime = static_cast<double>(cm.k * out.c) * xi.R;

    // h[p][x] = least point of the ~_p class of x, or nx if x is not in C_p
    std::vector<std::vector<std::size_t>> h(ny, std::vector<std::size_t>(nx, nx));
    out.classes.resize(ny);
    for (std::size_t p = 0; p < ny; ++p) {
      std::vector<std::size_t> cp;
      for (std::size_t x = 0; x < nx; ++x) {
        if (cm.Y.within(cm.f[x], p, xi.S)) {
          cp.push_back(x);
        }
      }
      UnionFind uf(nx);
      for (std::size_t i = 0; i < cp.size(); ++i) {
        for (std::size_t j = i + 1; j < cp.size(); ++j) {
          if (cm.X.within(cp[i], cp[j], xi.R)) {
            uf.unite(cp[i], cp[j]);
          }
        }
      }
      std::vector<std::size_t> slot(nx, nx);
      for (auto x : cp) {
        std::size_t r = uf.find(x);
        h[p][x]       = r;
        if (slot[r] == nx) {
          slot[r] = out.classes[p].size();
          out.classes[p].emplace_back();
        }
        out.classes[p][slot[r]].push_back(x);
      }
    }

    out.zeta.eps = xi.eps;
    out.zeta.R   = xi.R;
    out.zeta.S   = s_prime;
    out.zeta.xi.resize(nx);
    if (exec == Exec::serial) {
      for (std::size_t x = 0; x < nx; ++x) {
        out.zeta.xi[x] = zeta_at(cm, xi, h, x, s_prime, out.clipped);
      }
      return out;
    }
    std::size_t clipped = 0;
#pragma omp parallel for schedule(dynamic, 4) reduction(+ : clipped)
    for (std::ptrdiff_t x = 0; x < static_cast<std::ptrdiff_t>(nx); ++x) {
      out.zeta.xi[x] = zeta_at(cm, xi, h, x, s_prime, clipped);
    }
    out.clipped = clipped;
    return out;
  }

  ////////////////////////////////////////////////////////////////////////
  // Random instances
  ////////////////////////////////////////////////////////////////////////

  namespace {
    using Matrix = std::vector<std::vector<ExtReal>>;

    Matrix floyd_warshall(Matrix d) {
      std::size_t const n = d.size();
      for (std::size_t z = 0; z < n; ++z) {
        for (std::size_t x = 0; x < n; ++x) {
          for (std::size_t y = 0; y < n; ++y) {
            d[x][y] = min(d[x][y], d[x][z] + d[z][y]);
          }
        }
      }
      return d;
    }

    // min(d, cap) is again an extended metric
    void truncate(Matrix& d, double cap) {
      for (auto& row : d) {
        for (auto& v : row) {
          if (v.is_finite() && v.value() > cap) {
            v = cap;
          }
        }
      }
    }

    Matrix empty_matrix(std::size_t n) {
      Matrix d(n, std::vector<ExtReal>(n, ExtReal::infinity()));
      for (std::size_t x = 0; x < n; ++x) {
        d[x][x] = 0;
      }
      return d;
    }

    std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
      return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
    }
  }  // namespace

  template <typename T>
  RandomInstance<T> random_instance(std::mt19937_64& rng, RandomInstanceShape const& shape) {
    double const cap = static_cast<double>(shape.max_dist);
    std::size_t const ny = uniform(rng, 1, shape.max_y);

    Matrix dy = empty_matrix(ny);
    for (std::size_t x = 0; x < ny; ++x) {
      for (std::size_t y = x + 1; y < ny; ++y) {
        if (uniform(rng, 0, 2) == 0) {
          dy[x][y] = dy[y][x] = static_cast<double>(uniform(rng, 1, shape.max_dist));
        }
      }
    }
    dy = floyd_warshall(std::move(dy));
    truncate(dy, cap);

    std::vector<std::size_t> f;
    for (std::size_t y = 0; y < ny; ++y) {
      std::size_t room = shape.max_x - f.size() - (ny - 1 - y);
      std::size_t size = uniform(rng, 1, std::min(shape.max_fibre, room));
      f.insert(f.end(), size, y);
    }
    std::size_t const nx = f.size();

    Matrix dx = empty_matrix(nx);
    auto   link = [&](std::size_t a, std::size_t b) {
      if (a == b) {
        return;
      }
      double base = dy[f[a]][f[b]].value();
      double w    = std::max(1.0, base + static_cast<double>(uniform(rng, 0, 3)));
      dx[a][b] = dx[b][a] = min(dx[a][b], ExtReal(w));
    };
    for (std::size_t a = 0; a < nx; ++a) {
      for (std::size_t b = a + 1; b < nx; ++b) {
        bool same_fibre = f[a] == f[b];
        bool y_close    = !same_fibre && dy[f[a]][f[b]].is_finite();
        if ((same_fibre && uniform(rng, 0, 3) != 0) || (y_close && uniform(rng, 0, 2) == 0)) {
          link(a, b);
        }
      }
    }
    dx = floyd_warshall(std::move(dx));
    truncate(dx, cap);

    RandomInstance<T> inst;
    inst.Y    = FinExtMetric(std::move(dy));
    inst.X    = FinExtMetric(std::move(dx));
    inst.f    = std::move(f);
    inst.xi.R = static_cast<double>(uniform(rng, 1, shape.max_R));
    inst.xi.S = static_cast<double>(uniform(rng, 0, shape.max_S));
    inst.xi.xi.resize(ny);
    for (std::size_t y = 0; y < ny; ++y) {
      auto                     b = inst.Y.ball(y, inst.xi.S);
      std::vector<std::size_t> weight(b.size());
      std::size_t              total = 0;
      for (auto& w : weight) {
        w = uniform(rng, 0, 4);
        total += w;
      }
      if (total == 0) {
        weight[0] = total = 1;  // b[0] may differ from y, still inside B(y, S)
      }
      for (std::size_t i = 0; i < b.size(); ++i) {
        if (weight[i] != 0) {
          inst.xi.xi[y].emplace_back(b[i], T(weight[i]) / T(total));
        }
      }
    }
    T eps(0);
    for (std::size_t x = 0; x < ny; ++x) {
      for (std::size_t y = x + 1; y < ny; ++y) {
        if (inst.Y.within(x, y, inst.xi.R)) {
          eps = std::max(eps, l1_distance(inst.xi.xi[x], inst.xi.xi[y]));
        }
      }
    }
    inst.xi.eps = eps;
    return inst;
  }

#define INVMON_PROPA_INSTANTIATE(T)                                                          \
  template T             l1_distance<T>(SparseVector<T> const&, SparseVector<T> const&);     \
  template T             l1_norm<T>(SparseVector<T> const&);                                 \
  template WitnessReport check_witness<T>(FinExtMetric const&, Witness<T> const&, T const&); \
  template TransportResult<T> transport_witness<T>(                                          \
      ContractionMap const&, Witness<T> const&, T const&, Exec);                             \
  template RandomInstance<T> random_instance<T>(std::mt19937_64&, RandomInstanceShape const&);

  INVMON_PROPA_INSTANTIATE(double)
  INVMON_PROPA_INSTANTIATE(Rational)

}  // namespace invmon
