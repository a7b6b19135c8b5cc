#include <doctest.h>

#include "loopbraid/errors.hpp"
#include "loopbraid/free_group.hpp"
#include "oracles.hpp"

using namespace loopbraid;

namespace {

FreeWord w(std::string_view text, int rank = 3) { return parse_free_word(text, rank); }

}  // namespace

TEST_CASE("reduce cancels adjacent inverse pairs") {
  const Letter cancel[] = {{1, 1}, {1, -1}};
  CHECK(FreeWord::reduce(2, cancel).empty());

  const Letter inner[] = {{1, 1}, {2, 1}, {2, -1}, {1, 1}};
  CHECK(FreeWord::reduce(2, inner) == w("x1 x1", 2));
}

TEST_CASE("reduce matches naive repeated scanning") {
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 300; ++trial) {
    const auto raw = oracle::random_raw(rng, 3, 40);
    const FreeWord reduced = FreeWord::reduce(3, raw);
    CHECK(reduced.letters() == oracle::naive_reduce(raw));
    CHECK(FreeWord::reduce(3, reduced.letters()) == reduced);
  }
}

TEST_CASE("reduce rejects out of range letters") {
  const Letter bad[] = {{4, 1}};
  CHECK_THROWS_AS(FreeWord::reduce(3, bad), DomainError);
  const Letter zero[] = {{0, 1}};
  CHECK_THROWS_AS(FreeWord::reduce(3, zero), DomainError);
  const Letter exponent[] = {{1, 2}};
  CHECK_THROWS_AS(FreeWord::reduce(3, exponent), DomainError);
  CHECK_THROWS_AS(FreeWord(0), DomainError);
}

TEST_CASE("multiply") {
  CHECK(multiply(w("x1"), w("x1^-1")).empty());
  CHECK(multiply(w("x1 x2"), w("x2^-1 x3")) == w("x1 x3"));
  CHECK_THROWS_AS(multiply(w("x1", 2), w("x1", 3)), DomainError);

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 100; ++trial) {
    const FreeWord u = oracle::random_word(rng, 3, 12);
    const FreeWord v = oracle::random_word(rng, 3, 12);
    auto raw = u.letters();
    raw.insert(raw.end(), v.letters().begin(), v.letters().end());
    CHECK(multiply(u, v).letters() == oracle::naive_reduce(raw));
    CHECK(multiply(u, v).length() <= u.length() + v.length());
  }
}

TEST_CASE("multiply is associative with the empty word as identity") {
  std::mt19937_64 rng(12);
  const FreeWord e(4);
  for (int trial = 0; trial < 1000; ++trial) {
    const FreeWord a = oracle::random_word(rng, 4, 10);
    const FreeWord b = oracle::random_word(rng, 4, 10);
    const FreeWord c = oracle::random_word(rng, 4, 10);
    REQUIRE(multiply(multiply(a, b), c) == multiply(a, multiply(b, c)));
    REQUIRE(multiply(a, e) == a);
    REQUIRE(multiply(e, a) == a);
  }
}

TEST_CASE("invert") {
  CHECK(invert(FreeWord(2)).empty());
  CHECK(invert(w("x1 x2^-1")) == w("x2 x1^-1"));
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 200; ++trial) {
    const FreeWord u = oracle::random_word(rng, 3, 15);
    CHECK(multiply(u, invert(u)).empty());
  }
}

TEST_CASE("conjugate") {
  CHECK(conjugate(w("x1"), FreeWord(3)) == w("x1"));
  CHECK(conjugate(w("x1"), w("x2")) == w("x2^-1 x1 x2"));
  CHECK(conjugate(w("x2"), w("x2")) == w("x2"));
  CHECK_THROWS_AS(conjugate(w("x1", 2), w("x1", 3)), DomainError);
}

TEST_CASE("as_conjugate_of_generator") {
  auto x3 = as_conjugate_of_generator(w("x3"));
  REQUIRE(x3);
  CHECK(x3->index == 3);
  CHECK(x3->sign == 1);
  CHECK(x3->conjugator.empty());

  auto c = as_conjugate_of_generator(w("x2^-1 x1^-1 x2"));
  REQUIRE(c);
  CHECK(c->index == 1);
  CHECK(c->sign == -1);
  CHECK(c->conjugator == w("x2"));

  CHECK_FALSE(as_conjugate_of_generator(w("x1 x2")));
  CHECK_FALSE(as_conjugate_of_generator(FreeWord(3)));
  CHECK_FALSE(as_conjugate_of_generator(w("x1 x2 x1^-1 x2")));
}

TEST_CASE("as_conjugate_of_generator recovers every conjugate of a generator") {
  std::mt19937_64 rng(21);
  for (int j = 1; j <= 4; ++j) {
    for (int e : {1, -1}) {
      for (int trial = 0; trial < 200; ++trial) {
        const FreeWord conj = oracle::random_word(rng, 4, 10);
        const FreeWord u = conjugate(FreeWord::generator(4, j, e), conj);
        const auto found = as_conjugate_of_generator(u);
        REQUIRE(found);
        CHECK(found->index == j);
        CHECK(found->sign == e);
        CHECK(conjugate(FreeWord::generator(4, found->index, found->sign), found->conjugator) == u);
        CHECK(found->conjugator.length() <= conj.length());
      }
    }
  }
}

TEST_CASE("text form round trips") {
  CHECK(format(w("x1 x2^-1 x1")) == "x1 x2^-1 x1");
  CHECK(format(FreeWord(2)) == "1");
  CHECK(parse_free_word("1", 2).empty());
  CHECK(parse_free_word("   ", 2).empty());
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 50; ++trial) {
    const FreeWord u = oracle::random_word(rng, 5, 12);
    CHECK(parse_free_word(format(u), 5) == u);
  }
  CHECK_THROWS_AS(parse_free_word("y1", 2), ParseError);
  CHECK_THROWS_AS(parse_free_word("x1^2", 2), ParseError);
  CHECK_THROWS_AS(parse_free_word("x", 2), ParseError);
  CHECK_THROWS_AS(parse_free_word("x3", 2), DomainError);
}
