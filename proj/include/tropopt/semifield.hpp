#pragma once

/// \file
/// Scalars of the four radicable idempotent semifields over the reals.
///
/// Every semifield is encoded on a plain `double`:
///
///   kind       carrier              add   mul   zero   one
///   MaxPlus    R ∪ {-inf}           max   +     -inf   0
///   MinPlus    R ∪ {+inf}           min   +     +inf   0
///   MaxTimes   R_{>0} ∪ {0}         max   *     0      1
///   MinTimes   R_{>0} ∪ {+inf}      min   *     +inf   1
///
/// The order is the one induced by addition: a <= b iff a (+) b = b. For the
/// min-semifields it is the reverse of the numeric order.

#include <optional>
#include <string>
#include <string_view>

namespace tropopt {

enum class SemifieldKind { MaxPlus, MinPlus, MaxTimes, MinTimes };

/// Tags used in problem files and on the command line: "max-plus",
/// "min-plus", "max-times", "min-times".
std::string_view to_string(SemifieldKind kind);
SemifieldKind parse_semifield(std::string_view tag);

/// Comparison slack. Absolute for the additive semifields, relative for the
/// multiplicative ones. Unset means the per-kind default (0 for MaxPlus and
/// MinPlus, 1e-9 for MaxTimes and MinTimes).
struct Tolerance {
  std::optional<double> epsilon;

  double for_kind(SemifieldKind kind) const;
};

/// Raw kernels on the encoded value. These assume their inputs already lie in
/// the carrier; the checked API is `Scalar` below.
namespace detail {

double zero(SemifieldKind kind);
double one(SemifieldKind kind);
bool is_zero(SemifieldKind kind, double v);
double add(SemifieldKind kind, double a, double b);
double mul(SemifieldKind kind, double a, double b);
double inv(SemifieldKind kind, double a);  // a must be non-zero
double pow(SemifieldKind kind, double a, double r);
bool approx_equal(SemifieldKind kind, double a, double b, double eps);
bool leq(SemifieldKind kind, double a, double b, double eps);
/// Throws DomainError when v is not in the carrier of `kind`.
void validate(SemifieldKind kind, double v);

}  // namespace detail

class Scalar {
 public:
  /// Throws DomainError if `value` is NaN or outside the carrier.
  Scalar(SemifieldKind kind, double value);

  static Scalar zero(SemifieldKind kind);
  static Scalar one(SemifieldKind kind);

  SemifieldKind kind() const { return kind_; }
  double value() const { return value_; }
  bool is_zero() const { return detail::is_zero(kind_, value_); }

  /// Exact equality of kind and encoded value.
  friend bool operator==(const Scalar&, const Scalar&) = default;

 private:
  struct Unchecked {};
  Scalar(SemifieldKind kind, double value, Unchecked) : kind_(kind), value_(value) {}

  friend Scalar add(const Scalar&, const Scalar&);
  friend Scalar mul(const Scalar&, const Scalar&);
  friend Scalar inv(const Scalar&);
  friend Scalar pow(const Scalar&, double);

  SemifieldKind kind_;
  double value_;
};

/// a (+) b. Throws DomainError when kinds differ.
Scalar add(const Scalar& a, const Scalar& b);
/// a (x) b; zero is absorbing. Throws DomainError when kinds differ.
Scalar mul(const Scalar& a, const Scalar& b);
/// Multiplicative inverse. Throws DomainError for zero.
Scalar inv(const Scalar& a);
/// a^r. Defined for every real r on non-zero a; zero^r is zero for r > 0 and
/// a DomainError for r <= 0.
Scalar pow(const Scalar& a, double r);

bool leq(const Scalar& a, const Scalar& b, const Tolerance& tol = {});
bool approx_equal(const Scalar& a, const Scalar& b, const Tolerance& tol = {});

inline Scalar operator+(const Scalar& a, const Scalar& b) { return add(a, b); }
inline Scalar operator*(const Scalar& a, const Scalar& b) { return mul(a, b); }

std::string to_string(const Scalar& a);

}  // namespace tropopt
