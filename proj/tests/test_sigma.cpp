#include <doctest.h>

#include <cmath>
#include <random>

#include "army/sigma.hpp"

using namespace army;

namespace {
const double kSigma = 0.6180339887498949;
}

TEST_CASE("componentwise addition") {
  CHECK(SigmaValue{1, 0} + SigmaValue{0, 1} == SigmaValue{1, 1});
  // sigma^2 + sigma^1 = 1
  CHECK(sigma_pow(2) + sigma_pow(1) == sigma_one());
  // sigma^5 + sigma^6 = sigma^4
  CHECK(SigmaValue{-3, 5} + SigmaValue{5, -8} == SigmaValue{2, -3});
}

TEST_CASE("multiplication reduces via sigma^2 = 1 - sigma") {
  CHECK(sigma_unit() * sigma_unit() == SigmaValue{1, -1});
  // (1+sigma)(2+sigma) = 3+2sigma = sigma^-3
  CHECK(SigmaValue{1, 1} * SigmaValue{2, 1} == SigmaValue{3, 2});
  CHECK(SigmaValue{1, 1} * SigmaValue{2, 1} == sigma_pow(-3));
  SigmaValue x{-7, 12};
  CHECK(x * sigma_one() == x);
}

TEST_CASE("powers of sigma, both signs") {
  CHECK(sigma_pow(4) == SigmaValue{2, -3});
  CHECK(sigma_pow(0) == sigma_one());
  CHECK(sigma_pow(-6) == SigmaValue{13, 8});

  // the published power table, n = 1..10
  const SigmaValue pos[10] = {{0, 1}, {1, -1}, {-1, 2}, {2, -3},  {-3, 5},
                              {5, -8}, {-8, 13}, {13, -21}, {-21, 34}, {34, -55}};
  const SigmaValue neg[10] = {{1, 1}, {2, 1}, {3, 2}, {5, 3},  {8, 5},
                              {13, 8}, {21, 13}, {34, 21}, {55, 34}, {89, 55}};
  for (int n = 1; n <= 10; ++n) {
    CHECK(sigma_pow(n) == pos[n - 1]);
    CHECK(sigma_pow(-n) == neg[n - 1]);
  }
}

TEST_CASE("extended fibonacci numbers") {
  CHECK(fibonacci(7) == 13);
  CHECK(fibonacci(0) == 0);
  CHECK(fibonacci(-3) == 2);
  CHECK(fibonacci(1) == 1);
  CHECK(fibonacci(2) == 1);
  CHECK(fibonacci(-4) == -3);
  CHECK_THROWS_AS(fibonacci(184), std::overflow_error);
}

TEST_CASE("exact comparison") {
  CHECK(sigma_pow(9) > sigma_pow(11) + sigma_pow(13));
  CHECK(SigmaValue{0, 0} == SigmaValue{0, 0});
  // tail weight of the triangular board from row 7: sigma^4 (1 + 8 sigma) < 1
  SigmaValue s57 = sigma_pow(4) * SigmaValue{1, 8};
  CHECK(s57 < sigma_one());
  CHECK(sigma_pow(5) < sigma_pow(4));
  CHECK(SigmaValue{-1, 2} > SigmaValue{0, 0});  // sigma^3 > 0
}

TEST_CASE("comparison agrees with real evaluation") {
  std::mt19937_64 rng(12345);
  std::uniform_int_distribution<long long> d(-1000000, 1000000);
  for (int i = 0; i < 20000; ++i) {
    SigmaValue x{d(rng), d(rng)}, y{d(rng), d(rng)};
    double dx = to_real(x) - to_real(y);
    if (std::abs(dx) < 1e-9) continue;
    CHECK(((x < y) == (dx < 0)));
  }
}

TEST_CASE("real approximation") {
  CHECK(to_real(sigma_unit()) == doctest::Approx(kSigma));
  CHECK(to_real(SigmaValue{0, 0}) == 0.0);
  CHECK(to_real(sigma_pow(11) + sigma_pow(13)) ==
        doctest::Approx(std::pow(kSigma, 11) + std::pow(kSigma, 13)).epsilon(1e-12));
}

TEST_CASE("tableau reduction") {
  // 19 heaviest men for the orthogonal army at level 4 weigh exactly 1
  CHECK(tableau_reduce({1, 3, 5, 7, 3}, 4) == sigma_one());
  // one 51-man regiment of the 123-man level-8 army weighs exactly sigma^2
  CHECK(tableau_reduce({5, 7, 9, 12, 13, 5}, 8) == sigma_pow(2));
  CHECK(tableau_reduce({}, 3) == sigma_zero());
}

TEST_CASE("tableau equals term-by-term summation") {
  std::mt19937_64 rng(99);
  std::uniform_int_distribution<long long> coeff(-50, 50);
  std::uniform_int_distribution<int> len(0, 12), base(-8, 8);
  for (int trial = 0; trial < 500; ++trial) {
    std::vector<long long> c(len(rng));
    for (auto& v : c) v = coeff(rng);
    long b = base(rng);
    SigmaValue direct = sigma_zero();
    for (size_t k = 0; k < c.size(); ++k)
      direct += SigmaValue{c[k], 0} * sigma_pow(b + (long)k);
    CHECK(tableau_reduce(c, b) == direct);
  }
}

TEST_CASE("power identities") {
  for (long i = -25; i <= 25; ++i) {
    for (long j = -25; j <= 25; ++j)
      CHECK(sigma_pow(i) * sigma_pow(j) == sigma_pow(i + j));
    CHECK(sigma_pow(i) + sigma_pow(i - 1) == sigma_pow(i - 2));
  }
}

TEST_CASE("geometric series identities, truncated at 200 terms") {
  for (int n = 0; n <= 30; ++n) {
    double s1 = 0, s2 = 0, s3 = 0;
    for (int i = n; i < n + 200; ++i) {
      s1 += std::pow(kSigma, i);
      s2 += std::pow(kSigma, 2 * i);
      s3 += i * std::pow(kSigma, i);
    }
    CHECK(s1 == doctest::Approx(to_real(sigma_pow(n - 2))).epsilon(1e-9));
    CHECK(s2 == doctest::Approx(to_real(sigma_pow(2 * n - 1))).epsilon(1e-9));
    CHECK(s3 == doctest::Approx(to_real((int128)n * sigma_pow(n - 2) + sigma_pow(n - 3)))
                    .epsilon(1e-9));
  }
}

TEST_CASE("display format") {
  CHECK(to_string(SigmaValue{2, -3}) == "2-3\xCF\x83");
  CHECK(to_string(SigmaValue{0, 1}) == "\xCF\x83");
  CHECK(to_string(SigmaValue{0, 0}) == "0");
  CHECK(to_string(SigmaValue{-1, 2}) == "-1+2\xCF\x83");
  CHECK(display(SigmaValue{2, -3}).find("0.1459") != std::string::npos);
}

TEST_CASE("overflow is an explicit failure") {
  SigmaValue big{(int128)1 << 126, 0};
  CHECK_THROWS_AS(big + big, std::overflow_error);
  CHECK_THROWS_AS(big * big, std::overflow_error);
}
