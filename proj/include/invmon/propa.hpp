#pragma once

// Finite extended metric spaces, Property A witnesses at a fixed scale, weak
// contractions, and transport of a witness on Y back along a weak
// contraction X -> Y that is at most k-to-one on each component of X.
//
// Weights are templated: double, or Rational for exact arithmetic. Both are
// explicitly instantiated in propa.cpp.

#include <cstddef>
#include <cstdint>
#include <random>
#include <string>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "extended.hpp"
#include "kernels.hpp"

namespace invmon {

  using Rational = boost::multiprecision::cpp_rational;

  //! Distances over [0, inf] on points 0, ..., n - 1. The constructor checks
  //! every axiom and throws InvalidArgument naming the offending points.
  class FinExtMetric {
   public:
    FinExtMetric() = default;
    explicit FinExtMetric(std::vector<std::vector<ExtReal>> d);

    std::size_t size() const noexcept {
      return _n;
    }

    ExtReal distance(std::size_t x, std::size_t y) const {
      return _d[x * _n + y];
    }

    //! Finite distance d(x, y) <= r.
    bool within(std::size_t x, std::size_t y, double r) const {
      auto v = distance(x, y);
      return v.is_finite() && v.value() <= r;
    }

    std::size_t component(std::size_t x) const {
      return _component[x];
    }

    std::size_t number_of_components() const noexcept {
      return _num_components;
    }

    //! Points at distance <= r from x, increasing.
    std::vector<std::size_t> ball(std::size_t x, double r) const;

    std::vector<std::vector<ExtReal>> matrix() const;

   private:
    std::size_t                _n = 0;
    std::vector<ExtReal>       _d;
    std::vector<std::size_t>   _component;
    std::size_t                _num_components = 0;
  };

  //! Sparse nonnegative vector: (point, weight) sorted by point, no zeros.
  template <typename T>
  using SparseVector = std::vector<std::pair<std::size_t, T>>;

  template <typename T>
  struct Witness {
    std::vector<SparseVector<T>> xi;
    T                            eps{};
    double                       R = 0;
    double                       S = 0;
  };

  struct Violation {
    enum class Kind { norm, negative, support, variation, size };
    Kind        kind;
    std::size_t x = 0;
    //! The second point: the support point, or the partner of x.
    std::size_t y = 0;
    double      value = 0;
  };

  std::string to_string(Violation const& v);

  struct WitnessReport {
    std::vector<Violation> violations;
    bool ok() const noexcept {
      return violations.empty();
    }
  };

  //! ||u - v||_1
  template <typename T>
  T l1_distance(SparseVector<T> const& u, SparseVector<T> const& v);

  template <typename T>
  T l1_norm(SparseVector<T> const& u);

  //! Checks unit norm (within tol), nonnegativity, supp xi_x in B(x, S), and
  //! ||xi_x - xi_y|| <= eps when d(x, y) <= R. Lists every violation.
  template <typename T>
  WitnessReport check_witness(FinExtMetric const& space, Witness<T> const& w, T const& tol);

  struct ContractionMap {
    FinExtMetric             X;
    FinExtMetric             Y;
    std::vector<std::size_t> f;
    //! Largest number of points of one component of X with the same image.
    std::size_t k = 0;
  };

  //! Checks d_Y(f x, f y) <= d_X(x, y) on all pairs and computes k.
  //! InvalidArgument naming the first violating pair otherwise.
  ContractionMap analyze_contraction(FinExtMetric const&             X,
                                     FinExtMetric const&             Y,
                                     std::vector<std::size_t> const& f);

  template <typename T>
  struct TransportResult {
    Witness<T>  zeta;
    std::size_t c = 0;
    //! Number of entries removed by the B(x, S') restriction (0 in theory).
    std::size_t clipped = 0;
    //! classes[p] lists the ~_p classes, each sorted; the representative
    //! h_p is the first member.
    std::vector<std::vector<std::vector<std::size_t>>> classes;
  };

  //! With c = max_y |B_Y(y, S)| and S' = k c R: C_p = f^-1(B_Y(p, S)), ~_p
  //! the transitive closure of d_X <= R on C_p, h_p the least point of each
  //! class, and zeta_x(q) the sum of xi_{f(x)}(p) over p with h_p(x) = q,
  //! restricted to B_X(x, S'). InvalidArgument unless check_witness accepts
  //! xi with tolerance tol.
  template <typename T>
  TransportResult<T> transport_witness(ContractionMap const& cm,
                                       Witness<T> const&     xi,
                                       T const&              tol,
                                       Exec                  exec = Exec::parallel);

  //! A random instance: Y a truncated shortest-path metric of a random
  //! weighted graph (possibly disconnected), X built from fibres of size
  //! <= max_fibre over Y with edge weights at least the Y distance, f the
  //! fibre map, and a witness on Y with random weights on B(y, S) whose eps
  //! is the actual largest variation at scale R.
  template <typename T>
  struct RandomInstance {
    FinExtMetric             X;
    FinExtMetric             Y;
    std::vector<std::size_t> f;
    Witness<T>               xi;
  };

  struct RandomInstanceShape {
    std::size_t max_y       = 12;
    std::size_t max_x       = 30;
    std::size_t max_fibre   = 3;
    std::size_t max_dist    = 10;
    std::size_t max_R       = 4;
    std::size_t max_S       = 5;
  };

  template <typename T>
  RandomInstance<T> random_instance(std::mt19937_64& rng, RandomInstanceShape const& shape = {});

  double to_double(double x) noexcept;
  double to_double(Rational const& x);

#define INVMON_PROPA_EXTERN(T)                                                          \
  extern template T    l1_distance<T>(SparseVector<T> const&, SparseVector<T> const&);  \
  extern template T    l1_norm<T>(SparseVector<T> const&);                              \
  extern template WitnessReport check_witness<T>(FinExtMetric const&,                   \
                                                 Witness<T> const&, T const&);          \
  extern template TransportResult<T> transport_witness<T>(                              \
      ContractionMap const&, Witness<T> const&, T const&, Exec);                        \
  extern template RandomInstance<T> random_instance<T>(std::mt19937_64&,                \
                                                       RandomInstanceShape const&);

  INVMON_PROPA_EXTERN(double)
  INVMON_PROPA_EXTERN(Rational)

#undef INVMON_PROPA_EXTERN

}  // namespace invmon
