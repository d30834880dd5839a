#include "tropopt/semifield.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "tropopt/error.hpp"
#include "tropopt/format.hpp"

namespace tropopt {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

bool is_max(SemifieldKind kind) {
  return kind == SemifieldKind::MaxPlus || kind == SemifieldKind::MaxTimes;
}

bool is_additive(SemifieldKind kind) {
  return kind == SemifieldKind::MaxPlus || kind == SemifieldKind::MinPlus;
}

void require_same_kind(const Scalar& a, const Scalar& b) {
  if (a.kind() != b.kind()) {
    throw DomainError("semifield kind mismatch: " + std::string(to_string(a.kind())) + " vs " +
                      std::string(to_string(b.kind())));
  }
}

}  // namespace

std::string_view to_string(SemifieldKind kind) {
  switch (kind) {
    case SemifieldKind::MaxPlus: return "max-plus";
    case SemifieldKind::MinPlus: return "min-plus";
    case SemifieldKind::MaxTimes: return "max-times";
    case SemifieldKind::MinTimes: return "min-times";
  }
  return "?";
}

SemifieldKind parse_semifield(std::string_view tag) {
  if (tag == "max-plus") return SemifieldKind::MaxPlus;
  if (tag == "min-plus") return SemifieldKind::MinPlus;
  if (tag == "max-times") return SemifieldKind::MaxTimes;
  if (tag == "min-times") return SemifieldKind::MinTimes;
  throw DomainError("unknown semifield tag '" + std::string(tag) + "'");
}

double Tolerance::for_kind(SemifieldKind kind) const {
  if (epsilon) return *epsilon;
  return is_additive(kind) ? 0.0 : 1e-9;
}

namespace detail {

double zero(SemifieldKind kind) {
  switch (kind) {
    case SemifieldKind::MaxPlus: return -kInf;
    case SemifieldKind::MaxTimes: return 0.0;
    case SemifieldKind::MinPlus:
    case SemifieldKind::MinTimes: return kInf;
  }
  return 0.0;
}

double one(SemifieldKind kind) { return is_additive(kind) ? 0.0 : 1.0; }

bool is_zero(SemifieldKind kind, double v) { return v == zero(kind); }

double add(SemifieldKind kind, double a, double b) {
  return is_max(kind) ? std::max(a, b) : std::min(a, b);
}

double mul(SemifieldKind kind, double a, double b) {
  // -inf + +inf and 0 * inf never reach the arithmetic: zero absorbs.
  if (is_zero(kind, a) || is_zero(kind, b)) return zero(kind);
  return is_additive(kind) ? a + b : a * b;
}

double inv(SemifieldKind kind, double a) {
  // 0.0 - a keeps inv(one) == +0.0
  return is_additive(kind) ? 0.0 - a : 1.0 / a;
}

double pow(SemifieldKind kind, double a, double r) {
  if (is_zero(kind, a)) return zero(kind);
  return is_additive(kind) ? a * r + 0.0 : std::pow(a, r);
}

bool approx_equal(SemifieldKind kind, double a, double b, double eps) {
  if (a == b) return true;
  if (std::isinf(a) || std::isinf(b) || is_zero(kind, a) || is_zero(kind, b)) return false;
  const double diff = std::abs(a - b);
  if (is_additive(kind)) return diff <= eps;
  return diff <= eps * std::max(std::abs(a), std::abs(b));
}

bool leq(SemifieldKind kind, double a, double b, double eps) {
  return approx_equal(kind, add(kind, a, b), b, eps);
}

void validate(SemifieldKind kind, double v) {
  if (std::isnan(v)) throw DomainError("NaN is not a semifield element");
  bool ok = true;
  switch (kind) {
    case SemifieldKind::MaxPlus: ok = v != kInf; break;
    case SemifieldKind::MinPlus: ok = v != -kInf; break;
    case SemifieldKind::MaxTimes: ok = v >= 0.0 && v != kInf; break;
    case SemifieldKind::MinTimes: ok = v > 0.0; break;
  }
  if (!ok) {
    throw DomainError("value " + format_number(v) + " is outside the " +
                      std::string(to_string(kind)) + " carrier");
  }
}

}  // namespace detail

Scalar::Scalar(SemifieldKind kind, double value) : kind_(kind), value_(value + 0.0) {
  detail::validate(kind, value);
}

Scalar Scalar::zero(SemifieldKind kind) { return Scalar(kind, detail::zero(kind)); }
Scalar Scalar::one(SemifieldKind kind) { return Scalar(kind, detail::one(kind)); }

Scalar add(const Scalar& a, const Scalar& b) {
  require_same_kind(a, b);
  return Scalar(a.kind_, detail::add(a.kind_, a.value_, b.value_), Scalar::Unchecked{});
}

Scalar mul(const Scalar& a, const Scalar& b) {
  require_same_kind(a, b);
  return Scalar(a.kind_, detail::mul(a.kind_, a.value_, b.value_), Scalar::Unchecked{});
}

Scalar inv(const Scalar& a) {
  if (a.is_zero()) throw DomainError("inversion of the semifield zero");
  return Scalar(a.kind_, detail::inv(a.kind_, a.value_), Scalar::Unchecked{});
}

Scalar pow(const Scalar& a, double r) {
  if (std::isnan(r)) throw DomainError("NaN exponent");
  if (a.is_zero() && r <= 0.0) throw DomainError("non-positive power of the semifield zero");
  return Scalar(a.kind_, detail::pow(a.kind_, a.value_, r), Scalar::Unchecked{});
}

bool leq(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  require_same_kind(a, b);
  return detail::leq(a.kind(), a.value(), b.value(), tol.for_kind(a.kind()));
}

bool approx_equal(const Scalar& a, const Scalar& b, const Tolerance& tol) {
  require_same_kind(a, b);
  return detail::approx_equal(a.kind(), a.value(), b.value(), tol.for_kind(a.kind()));
}

std::string to_string(const Scalar& a) { return format_number(a.value()); }

}  // namespace tropopt
