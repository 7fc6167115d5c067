#ifndef GOSPACE_SCALAR_HPP
#define GOSPACE_SCALAR_HPP

#include <gmpxx.h>

#include <iosfwd>
#include <stdexcept>
#include <string>
#include <string_view>

namespace gospace {

/// Ambient field of a computation: the rationals or the Gaussian rationals Q(i).
enum class Field { rational, gaussian };

std::string to_string(Field f);
Field field_from_string(std::string_view s);

/// Raised on malformed scalar text.
class ParseError : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Exact element of Q(i): re + im*i with both parts reduced rationals.
///
/// A rational-field value simply has im() == 0. All arithmetic is exact;
/// GMP keeps every mpq in canonical form (positive denominator, gcd 1).
class Scalar {
public:
  Scalar() = default;
  Scalar(long v) : re_(v) {}  // NOLINT(google-explicit-constructor)
  explicit Scalar(mpq_class re, mpq_class im = 0);

  static Scalar rational(long num, long den = 1);
  static Scalar imaginary_unit() { return Scalar(mpq_class(0), mpq_class(1)); }

  /// Parses the text grammar: "3", "-2/5", "1/2+3/4i", "-i", "2*i".
  static Scalar parse(std::string_view text);

  const mpq_class &re() const { return re_; }
  const mpq_class &im() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }

  Scalar conj() const { return Scalar(re_, -im_); }
  /// |z|^2 = re^2 + im^2.
  mpq_class norm() const { return re_ * re_ + im_ * im_; }

  Scalar operator-() const { return Scalar(-re_, -im_); }
  Scalar &operator+=(const Scalar &o);
  Scalar &operator-=(const Scalar &o);
  Scalar &operator*=(const Scalar &o);
  /// Throws std::domain_error on division by zero.
  Scalar &operator/=(const Scalar &o);

  friend Scalar operator+(Scalar a, const Scalar &b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar &b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar &b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar &b) { return a /= b; }

  friend bool operator==(const Scalar &a, const Scalar &b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar &a, const Scalar &b) { return !(a == b); }

  /// Canonical text form; parse(to_string()) round-trips.
  std::string to_string() const;

private:
  mpq_class re_{0};
  mpq_class im_{0};
};

std::ostream &operator<<(std::ostream &os, const Scalar &s);

}  // namespace gospace

#endif
