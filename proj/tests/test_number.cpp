#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <random>

#include "qrohf/number.hpp"
#include "support.hpp"

using namespace qrohf;

TEST_CASE("neutral element") {
  CHECK(neutral(Rung(1), 1).mu[0] == doctest::Approx(0.5));
  CHECK(neutral(Rung(3), 1).mu[0] == doctest::Approx(0.7937).epsilon(1e-4));
  const Qrohfn n22 = neutral(Rung(2), 2);
  REQUIRE(n22.mu.size() == 2);
  for (double g : n22.mu) CHECK(g == doctest::Approx(0.7071).epsilon(1e-4));
  for (double g : n22.nu) CHECK(g == doctest::Approx(0.7071).epsilon(1e-4));
  CHECK_THROWS_AS(Rung(0.5), std::invalid_argument);
  CHECK_THROWS_AS(neutral(Rung(2), 0), std::invalid_argument);
}

TEST_CASE("validation") {
  CHECK(validate(Qrohfn{{0.3, 0.5}, {0.2, 0.4}}, Rung(2)).ok());
  // 0.9 + 0.9 > 1 at q = 1, and 0.9^3 + 0.9^3 = 1.458 > 1 at q = 3
  CHECK_FALSE(validate(Qrohfn{{0.9}, {0.9}}, Rung(1)).ok());
  CHECK_FALSE(validate(Qrohfn{{0.9}, {0.9}}, Rung(3)).ok());
  // 0.7^3 + 0.7^3 = 0.686 <= 1
  CHECK(validate(Qrohfn{{0.7}, {0.7}}, Rung(3)).ok());
  CHECK_FALSE(validate(Qrohfn{{0.5, 0.3}, {0.1, 0.2}}, Rung(2)).ok());  // not ascending
  CHECK_FALSE(validate(Qrohfn{{0.5}, {0.1, 0.2}}, Rung(2)).ok());      // length mismatch
  CHECK_FALSE(validate(Qrohfn{{1.2}, {0.1}}, Rung(2)).ok());           // out of range
  CHECK_FALSE(validate(Qrohfn{{}, {}}, Rung(2)).ok());
}

TEST_CASE("score and accuracy") {
  CHECK(score(neutral(Rung(3), 2), Rung(3)) == doctest::Approx(0.0));
  CHECK(score(Qrohfn{{0.6, 0.8}, {0.0, 0.0}}, Rung(2)) == doctest::Approx(0.5));
  CHECK(accuracy(Qrohfn{{0.0}, {0.0}}, Rung(2)) == doctest::Approx(0.0));
  CHECK(accuracy(neutral(Rung(1), 1), Rung(1)) == doctest::Approx(1.0));
  CHECK(accuracy(Qrohfn{{0.6, 0.8}, {0.2, 0.4}}, Rung(2)) == doctest::Approx(0.6));
}

TEST_CASE("comparison") {
  const Rung q(2);
  const Qrohfn high{{0.8}, {0.1}};
  const Qrohfn low{{0.5}, {0.3}};
  CHECK(compare(high, low, q) == Ordering::greater);
  CHECK(compare(low, high, q) == Ordering::less);
  CHECK(compare(high, high, q) == Ordering::equal);
  // equal scores, accuracy 0.72 vs 0.08 breaks the tie
  CHECK(compare(Qrohfn{{0.6}, {0.6}}, Qrohfn{{0.2}, {0.2}}, q) == Ordering::greater);
}

TEST_CASE("hesitancy") {
  CHECK(hesitancy(Qrohfn{{1.0}, {0.0}}, Rung(2))[0] == doctest::Approx(0.0));
  CHECK(hesitancy(Qrohfn{{0.0}, {0.0}}, Rung(2))[0] == doctest::Approx(1.0));
  CHECK(hesitancy(Qrohfn{{0.6}, {0.8}}, Rung(2))[0] == doctest::Approx(0.0));
}

TEST_CASE("hamming distance") {
  const Qrohfn x{{0.3, 0.5}, {0.2, 0.4}};
  CHECK(hamming_distance(x, x, Rung(2)) == doctest::Approx(0.0));
  // both hesitancies are zero, so the mu and nu swings carry everything
  CHECK(hamming_distance(Qrohfn{{1.0}, {0.0}}, Qrohfn{{0.0}, {1.0}}, Rung(1)) ==
        doctest::Approx(1.0));
  CHECK_THROWS_AS(hamming_distance(Qrohfn{{0.3}, {0.2}}, x, Rung(2)),
                  std::invalid_argument);
}

TEST_CASE("hesitant arithmetic identities") {
  const Rung q(2);
  const Qrohfn x{{0.3, 0.5}, {0.2, 0.4}};
  const Qrohfn s1 = scale(1.0, x, q);
  const Qrohfn p1 = pow(x, 1.0, q);
  for (std::size_t s = 0; s < x.mu.size(); ++s) {
    CHECK(s1.mu[s] == doctest::Approx(x.mu[s]).epsilon(1e-12));
    CHECK(s1.nu[s] == doctest::Approx(x.nu[s]).epsilon(1e-12));
    CHECK(p1.mu[s] == doctest::Approx(x.mu[s]).epsilon(1e-12));
    CHECK(p1.nu[s] == doctest::Approx(x.nu[s]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(scale(0.0, x, q), std::invalid_argument);
  CHECK_THROWS_AS(pow(x, 0.0, q), std::invalid_argument);

  // 0.6 + 0.8 - 0.6*0.8 = 0.92 and 0.5*0.4 = 0.2 at q = 1
  const Qrohfn sum = add(Qrohfn{{0.6}, {0.5}}, Qrohfn{{0.8}, {0.4}}, Rung(1));
  CHECK(sum.mu[0] == doctest::Approx(0.92));
  CHECK(sum.nu[0] == doctest::Approx(0.2));
}

TEST_CASE("cartesian growth and dedup") {
  const Rung q(2);
  const Qrohfn x{{0.2, 0.4}, {0.3, 0.5}};
  const Qrohfn y{{0.1, 0.6}, {0.2, 0.7}};
  const Qrohfn sum = add(x, y, q);
  CHECK(sum.mu.size() == 4);
  CHECK(sum.nu.size() == 4);
  CHECK(std::is_sorted(sum.mu.begin(), sum.mu.end()));
  CHECK(std::is_sorted(sum.nu.begin(), sum.nu.end()));
  // self-addition collapses the symmetric cross terms
  const Qrohfn twice = add(x, x, q);
  CHECK(twice.mu.size() == 3);
  CHECK(twice.nu.size() == 3);
}

TEST_CASE("random algebra invariants") {
  std::mt19937_64 rng(20260809);
  const double rungs[] = {1.0, 2.0, 3.0};
  for (int iter = 0; iter < 300; ++iter) {
    const Rung q(rungs[iter % 3]);
    const std::size_t l = 1 + static_cast<std::size_t>(iter % 3);
    const Qrohfn x = testsupport::random_number(rng, q, l);
    const Qrohfn y = testsupport::random_number(rng, q, l);
    REQUIRE(validate(x, q).ok());

    const double sx = score(x, q);
    const double ax = accuracy(x, q);
    CHECK(sx >= -1.0 - 1e-9);
    CHECK(sx <= 1.0 + 1e-9);
    CHECK(ax >= -1e-9);
    CHECK(ax <= 1.0 + 1e-9);

    const auto pi = hesitancy(x, q);
    for (std::size_t s = 0; s < l; ++s) {
      const double unity = std::pow(x.mu[s], q.value()) + std::pow(x.nu[s], q.value()) +
                           std::pow(pi[s], q.value());
      CHECK(unity == doctest::Approx(1.0).epsilon(1e-9));
    }

    CHECK(compare(x, x, q) == Ordering::equal);
    const Ordering xy = compare(x, y, q);
    const Ordering yx = compare(y, x, q);
    if (xy == Ordering::greater) CHECK(yx == Ordering::less);
    if (xy == Ordering::less) CHECK(yx == Ordering::greater);
    if (xy == Ordering::equal) CHECK(yx == Ordering::equal);

    CHECK(hamming_distance(x, y, q) == doctest::Approx(hamming_distance(y, x, q)));
    CHECK(hamming_distance(x, x, q) == doctest::Approx(0.0));
    const Qrohfn z = testsupport::random_number(rng, q, l);
    CHECK(hamming_distance(x, z, q) <=
          hamming_distance(x, y, q) + hamming_distance(y, z, q) + 1e-12);

    // closure of the hesitant algebra
    CHECK(validate(add(x, y, q), q).ok());
    CHECK(validate(mul(x, y, q), q).ok());
    CHECK(validate(scale(0.5, x, q), q).ok());
    CHECK(validate(pow(x, 2.0, q), q).ok());
  }
}
