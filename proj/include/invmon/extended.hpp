#pragma once

#include <compare>
#include <cstdint>
#include <limits>
#include <ostream>

namespace invmon {

  //! A value of T or +infinity. All arithmetic involving infinity lives here:
  //! x + inf = inf, min(x, inf) = x, inf compares greater than every finite
  //! value.
  template <typename T>
  class Extended {
   public:
    constexpr Extended() noexcept : _value(), _finite(true) {}
    constexpr Extended(T value) noexcept : _value(value), _finite(true) {}

    static constexpr Extended infinity() noexcept {
      Extended e;
      e._finite = false;
      return e;
    }

    constexpr bool is_finite() const noexcept {
      return _finite;
    }
    constexpr bool is_infinite() const noexcept {
      return !_finite;
    }

    //! Only meaningful when is_finite().
    constexpr T value() const noexcept {
      return _value;
    }

    friend constexpr Extended operator+(Extended x, Extended y) noexcept {
      if (!x._finite || !y._finite) {
        return infinity();
      }
      return Extended(x._value + y._value);
    }

    friend constexpr bool operator==(Extended x, Extended y) noexcept {
      if (x._finite != y._finite) {
        return false;
      }
      return !x._finite || x._value == y._value;
    }

    friend constexpr std::partial_ordering operator<=>(Extended x,
                                                       Extended y) noexcept {
      if (!x._finite && !y._finite) {
        return std::partial_ordering::equivalent;
      }
      if (!x._finite) {
        return std::partial_ordering::greater;
      }
      if (!y._finite) {
        return std::partial_ordering::less;
      }
      return x._value <=> y._value;
    }

    friend std::ostream& operator<<(std::ostream& os, Extended x) {
      if (!x._finite) {
        return os << "inf";
      }
      return os << x._value;
    }

   private:
    T    _value;
    bool _finite;
  };

  template <typename T>
  constexpr Extended<T> min(Extended<T> x, Extended<T> y) noexcept {
    return y < x ? y : x;
  }

  template <typename T>
  constexpr Extended<T> max(Extended<T> x, Extended<T> y) noexcept {
    return x < y ? y : x;
  }

  using ExtNat  = Extended<std::uint64_t>;
  using ExtReal = Extended<double>;

}  // namespace invmon
