#include "doctest.h"

#include <cmath>

#include "dehn/bigint.hpp"

using dehn::BigInt;

TEST_CASE("bigint basic arithmetic") {
  BigInt a(123456789012345678ull);
  BigInt b(987654321098765432ull);
  CHECK((a + b).to_string() == "1111111110111111110");
  CHECK((b - a).to_string() == "864197532086419754");
  CHECK((BigInt(1000000007) * BigInt(998244353)).to_string() ==
        "998244359987710471");
  CHECK(BigInt(0).to_string() == "0");
  CHECK(BigInt(0).is_zero());
}

TEST_CASE("bigint grows past 64 bits") {
  BigInt p(1);
  for (int i = 0; i < 10; ++i) p *= BigInt(1000000000000000003ull);
  CHECK(p.to_string().size() == 181);
  CHECK(BigInt::from_decimal(p.to_string()) == p);
}

TEST_CASE("bigint divmod") {
  BigInt n = BigInt::from_decimal("123456789123456789123456789");
  BigInt d = BigInt::from_decimal("987654321");
  BigInt q, r;
  BigInt::divmod(n, d, q, r);
  CHECK((q * d + r) == n);
  CHECK(r < d);
  CHECK((n / n).to_string() == "1");
  CHECK((n % n).is_zero());
}

TEST_CASE("bigint natural log") {
  CHECK(BigInt(1).log_natural() == doctest::Approx(0.0));
  CHECK(BigInt(1000).log_natural() == doctest::Approx(std::log(1000.0)));
  BigInt huge = BigInt::from_decimal(std::string("1") + std::string(100, '0'));
  CHECK(huge.log_natural() == doctest::Approx(100.0 * std::log(10.0)).epsilon(1e-9));
}

TEST_CASE("bigint comparisons") {
  CHECK(BigInt(5) < BigInt(7));
  CHECK(BigInt(7) >= BigInt(7));
  CHECK(BigInt(1ull << 40) > BigInt(1ull << 39));
}
