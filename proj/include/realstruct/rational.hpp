#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <Eigen/Core>

#include <compare>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>

namespace realstruct {

namespace mp = boost::multiprecision;

/// Exact arbitrary-precision rational. Thin value wrapper around
/// boost cpp_rational (expression templates off) so the type has plain,
/// non-template operators and can be used as an Eigen scalar.
/// Always stored normalized: lowest terms, positive denominator.
class Rational {
 public:
  using Backend = mp::number<mp::cpp_rational_backend, mp::et_off>;

  Rational() = default;
  Rational(int v) : v_(v) {}            // NOLINT: implicit by design (literals)
  Rational(long long v) : v_(v) {}      // NOLINT
  explicit Rational(Backend v) : v_(std::move(v)) {}
  Rational(const mp::cpp_int& num, const mp::cpp_int& den) {
    if (den == 0) throw std::invalid_argument("rational: zero denominator");
    v_ = Backend(num) / Backend(den);
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational(a.v_ + b.v_); }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational(a.v_ - b.v_); }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational(a.v_ * b.v_); }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.v_ == 0) throw std::invalid_argument("rational: division by zero");
    return Rational(a.v_ / b.v_);
  }
  Rational operator-() const { return Rational(-v_); }
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o) { *this = *this / o; return *this; }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    if (a.v_ < b.v_) return std::strong_ordering::less;
    if (a.v_ == b.v_) return std::strong_ordering::equal;
    return std::strong_ordering::greater;
  }

  bool is_zero() const { return v_ == 0; }
  bool is_negative() const { return v_ < 0; }
  const Backend& value() const { return v_; }

 private:
  Backend v_;
};

/// Parses "p" or "p/q" with p >= 0, q >= 1. Lowest terms are not required
/// on input; the stored value is always normalized.
Rational parse_rational(std::string_view text);

/// Canonical form: "p" when the denominator is 1, else "p/q" in lowest terms.
std::string to_string(const Rational& r);

inline Rational min(const Rational& a, const Rational& b) { return a < b ? a : b; }
inline Rational max(const Rational& a, const Rational& b) { return a < b ? b : a; }

}  // namespace realstruct

namespace Eigen {

template <>
struct NumTraits<realstruct::Rational> : GenericNumTraits<realstruct::Rational> {
  typedef realstruct::Rational Real;
  typedef realstruct::Rational NonInteger;
  typedef realstruct::Rational Nested;
  static inline Real epsilon() { return Real(0); }
  static inline Real dummy_precision() { return Real(0); }
  static inline int digits10() { return 0; }
  enum {
    IsComplex = 0,
    IsInteger = 0,
    IsSigned = 1,
    RequireInitialization = 1,
    ReadCost = 8,
    AddCost = 60,
    MulCost = 60
  };
};

}  // namespace Eigen
