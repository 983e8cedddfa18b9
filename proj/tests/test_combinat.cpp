#include <stdexcept>

#include "doctest.h"
#include "vincular/combinat.hpp"

using namespace vincular;

TEST_SUITE("combinat") {

TEST_CASE("binomial basics") {
  CHECK(binomial(0, 0) == 1);
  CHECK(binomial(5, 2) == 10);
  CHECK(binomial(10, 3) == 120);
  CHECK(binomial(20, 10) == 184756);
}

TEST_CASE("binomial is zero outside the triangle") {
  CHECK(binomial(3, 5) == 0);
  CHECK(binomial(-1, 0) == 0);
  CHECK(binomial(5, -1) == 0);
  CHECK(binomial(-3, -3) == 0);
}

TEST_CASE("binomial symmetry and Pascal rule") {
  for (long n = 0; n <= 12; ++n)
    for (long k = 0; k <= n; ++k) {
      CHECK(binomial(n, k) == binomial(n, n - k));
      if (n > 0)
        CHECK(binomial(n, k) == binomial(n - 1, k - 1) + binomial(n - 1, k));
    }
}

TEST_CASE("bell numbers") {
  const long expected[] = {1,    1,    2,     5,     15,    52,
                           203,  877,  4140,  21147, 115975};
  for (int n = 0; n <= 10; ++n) CHECK(bell(n) == expected[n]);
  CHECK_THROWS_AS(bell(-1), std::invalid_argument);
}

TEST_CASE("bell numbers satisfy their binomial recurrence") {
  for (int n = 0; n <= 15; ++n) {
    BigCount sum = 0;
    for (int k = 0; k <= n; ++k) sum += binomial(n, k) * bell(k);
    CHECK(sum == bell(n + 1));
  }
}

TEST_CASE("catalan numbers") {
  const long expected[] = {1,   1,   2,    5,    14,   42,
                           132, 429, 1430, 4862, 16796};
  for (int n = 0; n <= 10; ++n) CHECK(catalan(n) == expected[n]);
  CHECK_THROWS_AS(catalan(-1), std::invalid_argument);
}

TEST_CASE("factorial") {
  CHECK(factorial(0) == 1);
  CHECK(factorial(5) == 120);
  CHECK(factorial(10) == 3628800);
  CHECK_THROWS_AS(factorial(-2), std::invalid_argument);
}

}  // TEST_SUITE
