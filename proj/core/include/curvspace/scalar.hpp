#ifndef CURVSPACE_SCALAR_HPP
#define CURVSPACE_SCALAR_HPP

#include <gmpxx.h>

#include <string>
#include <string_view>

#include "curvspace/errors.hpp"

namespace curvspace {

/// Ground field tag. Every scalar, matrix and subspace carries one.
enum class Field : unsigned char {
  Q,  ///< rationals
  QI, ///< Gaussian rationals a + b*i with i*i = -1
};

inline const char* field_name(Field f) { return f == Field::Q ? "q" : "qi"; }

Field parse_field(std::string_view name);

/// Exact element of Q or Q(i).
///
/// Values are kept canonical: positive denominators coprime to the
/// numerators (mpq invariant), and the Q variant has zero imaginary part.
/// Arithmetic between a Q and a QI value promotes to QI; this realizes the
/// embedding of Q into Q(i).
class Scalar {
public:
  Scalar() : field_(Field::Q) {}
  Scalar(long n) : re_(n), field_(Field::Q) {} // NOLINT: implicit by design
  Scalar(long num, long den);

  static Scalar zero(Field f) { Scalar s; s.field_ = f; return s; }
  static Scalar one(Field f) { Scalar s(1L); s.field_ = f; return s; }
  static Scalar i(); ///< the imaginary unit, tagged QI
  static Scalar rational(const mpq_class& v);
  static Scalar gaussian(const mpq_class& re, const mpq_class& im);

  Field field() const { return field_; }
  const mpq_class& real() const { return re_; }
  const mpq_class& imag() const { return im_; }

  bool is_zero() const { return sgn(re_) == 0 && sgn(im_) == 0; }
  bool is_one() const { return re_ == 1 && sgn(im_) == 0; }
  bool is_real() const { return sgn(im_) == 0; }

  /// Embeds into the field f. Narrowing QI -> Q requires zero imaginary part.
  Scalar promoted(Field f) const;

  Scalar conj() const;
  Scalar inverse() const; ///< throws on zero
  Scalar operator-() const;

  Scalar& operator+=(const Scalar& o);
  Scalar& operator-=(const Scalar& o);
  Scalar& operator*=(const Scalar& o);
  Scalar& operator/=(const Scalar& o);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Equality of values; tags are ignored so that 2 in Q equals 2 in Q(i).
  friend bool operator==(const Scalar& a, const Scalar& b) {
    return a.re_ == b.re_ && a.im_ == b.im_;
  }
  friend bool operator!=(const Scalar& a, const Scalar& b) { return !(a == b); }

  /// Deterministic total order used for canonical forms; not a field order.
  static int compare(const Scalar& a, const Scalar& b);

  /// Text form: "a/b" over Q, "a/b+c/di" over Q(i) with either part
  /// omissible ("3/2", "-1+1/2i", "1/2i").
  std::string str() const;

  /// Parses the text form. The imaginary part requires f == QI.
  static Scalar parse(std::string_view text, Field f);

private:
  mpq_class re_;
  mpq_class im_;
  Field field_;
};

} // namespace curvspace

#endif // CURVSPACE_SCALAR_HPP
