#include <cmath>
#include <limits>

#include "doctest.h"
#include "support.hpp"
#include "tropopt/error.hpp"
#include "tropopt/semifield.hpp"

using namespace tropopt;
using testing_support::elem;
using testing_support::Gen;
using testing_support::kAllKinds;

namespace {
constexpr double kInf = std::numeric_limits<double>::infinity();
const auto MP = SemifieldKind::MaxPlus;
const auto mP = SemifieldKind::MinPlus;
const auto MT = SemifieldKind::MaxTimes;
const auto mT = SemifieldKind::MinTimes;

Scalar s(SemifieldKind k, double v) { return Scalar(k, v); }
}  // namespace

TEST_CASE("tags round trip") {
  for (auto k : kAllKinds) CHECK(parse_semifield(to_string(k)) == k);
  CHECK(to_string(MP) == "max-plus");
  CHECK(to_string(mT) == "min-times");
  CHECK_THROWS_AS(parse_semifield("plus-max"), DomainError);
}

TEST_CASE("zero and one encodings") {
  CHECK(Scalar::zero(MP).value() == -kInf);
  CHECK(Scalar::zero(mP).value() == kInf);
  CHECK(Scalar::zero(MT).value() == 0.0);
  CHECK(Scalar::zero(mT).value() == kInf);
  CHECK(Scalar::one(MP).value() == 0.0);
  CHECK(Scalar::one(mP).value() == 0.0);
  CHECK(Scalar::one(MT).value() == 1.0);
  CHECK(Scalar::one(mT).value() == 1.0);
}

TEST_CASE("carrier validation") {
  CHECK_THROWS_AS(s(MP, std::nan("")), DomainError);
  CHECK_THROWS_AS(s(MP, kInf), DomainError);
  CHECK_THROWS_AS(s(mP, -kInf), DomainError);
  CHECK_THROWS_AS(s(MT, -1.0), DomainError);
  CHECK_THROWS_AS(s(MT, kInf), DomainError);
  CHECK_THROWS_AS(s(mT, 0.0), DomainError);
  CHECK_NOTHROW(s(MT, 0.0));
  CHECK_NOTHROW(s(mT, kInf));
}

TEST_CASE("add") {
  CHECK(add(s(MP, 3), s(MP, 5)) == s(MP, 5));
  CHECK(add(Scalar::zero(MP), s(MP, 7)) == s(MP, 7));
  CHECK(add(s(mP, 3), s(mP, 5)) == s(mP, 3));
  CHECK(add(s(MT, 0.5), s(MT, 4)) == s(MT, 4));
  CHECK(add(s(mT, 0.5), s(mT, 4)) == s(mT, 0.5));
  for (double x : {-3.0, 0.0, 7.5}) CHECK(add(s(MP, x), s(MP, x)) == s(MP, x));
  CHECK_THROWS_AS(add(s(MP, 1), s(mP, 1)), DomainError);
}

TEST_CASE("mul") {
  CHECK(mul(s(MP, 3), s(MP, 5)) == s(MP, 8));
  CHECK(mul(Scalar::zero(MP), s(MP, 5)) == Scalar::zero(MP));
  CHECK(mul(s(MT, 2), s(MT, 4)) == s(MT, 8));
  CHECK(mul(Scalar::zero(MT), s(MT, 4)) == Scalar::zero(MT));
  CHECK(mul(Scalar::zero(mT), s(mT, 4)) == Scalar::zero(mT));
  CHECK(mul(Scalar::zero(mP), s(mP, -4)) == Scalar::zero(mP));
  CHECK_THROWS_AS(mul(s(MT, 1), s(MP, 1)), DomainError);
}

TEST_CASE("inv") {
  CHECK(inv(s(MP, 9)) == s(MP, -9));
  CHECK(inv(s(MP, 0)) == s(MP, 0));
  CHECK(inv(s(MT, 4)) == s(MT, 0.25));
  CHECK(inv(s(mT, 4)) == s(mT, 0.25));
  for (auto k : kAllKinds) CHECK_THROWS_AS(inv(Scalar::zero(k)), DomainError);
}

TEST_CASE("pow") {
  CHECK(pow(s(MP, 18), 0.5) == s(MP, 9));
  CHECK(pow(s(MP, 5), 0) == Scalar::one(MP));
  CHECK(pow(s(MP, -7), 0) == Scalar::one(MP));
  CHECK(pow(s(MT, 9), 0.5) == s(MT, 3));
  CHECK(pow(s(MP, 3), -2) == s(MP, -6));
  CHECK(pow(Scalar::zero(MP), 2) == Scalar::zero(MP));
  CHECK(pow(Scalar::zero(mT), 0.5) == Scalar::zero(mT));
  for (auto k : kAllKinds) {
    CHECK_THROWS_AS(pow(Scalar::zero(k), 0), DomainError);
    CHECK_THROWS_AS(pow(Scalar::zero(k), -1), DomainError);
  }
}

TEST_CASE("order") {
  CHECK(leq(Scalar::zero(MP), s(MP, -1e300)));
  CHECK(leq(s(MP, 3), s(MP, 5)));
  CHECK_FALSE(leq(s(MP, 5), s(MP, 3)));
  CHECK(leq(s(mP, 5), s(mP, 3)));
  CHECK(leq(s(mT, 5), s(mT, 3)));
  CHECK(leq(s(MT, 3), s(MT, 5)));
  for (auto k : kAllKinds) CHECK(leq(Scalar::zero(k), Scalar::one(k)));
  CHECK_THROWS_AS(leq(s(MP, 3), s(mP, 5)), DomainError);
}

TEST_CASE("tolerance policy") {
  CHECK(Tolerance{}.for_kind(MP) == 0.0);
  CHECK(Tolerance{}.for_kind(mP) == 0.0);
  CHECK(Tolerance{}.for_kind(MT) == 1e-9);
  CHECK(Tolerance{}.for_kind(mT) == 1e-9);
  CHECK(Tolerance{0.25}.for_kind(MP) == 0.25);

  CHECK_FALSE(approx_equal(s(MP, 1), s(MP, 1.1)));
  CHECK(approx_equal(s(MP, 1), s(MP, 1.1), Tolerance{0.2}));
  CHECK(approx_equal(s(MT, 1e6), s(MT, 1e6 * (1 + 1e-12))));
  CHECK_FALSE(approx_equal(s(MT, 1e6), s(MT, 1e6 * (1 + 1e-6))));
  CHECK(leq(s(MP, 5.1), s(MP, 5), Tolerance{0.2}));
  CHECK(approx_equal(Scalar::zero(MP), Scalar::zero(MP)));
  CHECK_FALSE(approx_equal(Scalar::zero(MP), s(MP, -1e300), Tolerance{1e9}));
}

TEST_CASE("semifield axioms on random elements") {
  Gen gen(11);
  for (auto k : kAllKinds) {
    for (int trial = 0; trial < 300; ++trial) {
      const Scalar a(k, gen.scalar(k, -10, 10, 0.1));
      const Scalar b(k, gen.scalar(k, -10, 10, 0.1));
      const Scalar c(k, gen.scalar(k, -10, 10, 0.1));
      CHECK(a + a == a);
      CHECK(a + b == b + a);
      CHECK(a * b == b * a);
      CHECK((a + b) + c == a + (b + c));
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      CHECK(a + Scalar::zero(k) == a);
      CHECK(a * Scalar::one(k) == a);
      CHECK(leq(a, a + b));
      CHECK(leq(a, b) == (a + b == b));
      if (!a.is_zero()) {
        CHECK(a * inv(a) == Scalar::one(k));
        CHECK(approx_equal(pow(pow(a, 0.5), 2), a));
      }
      if (leq(a, b)) CHECK(leq(a * c, b * c));
    }
  }
}

TEST_CASE("order matches exponent order") {
  Gen gen(12);
  for (auto k : kAllKinds)
    for (int trial = 0; trial < 200; ++trial) {
      const int x = gen.integer(-10, 10), y = gen.integer(-10, 10);
      CHECK(leq(s(k, elem(k, x)), s(k, elem(k, y))) == (x <= y));
    }
}
