#include <doctest.h>

#include <random>

#include "loopbraid/errors.hpp"
#include "loopbraid/pc_automorphism.hpp"
#include "oracles.hpp"

using namespace loopbraid;

namespace {

FreeWord w(std::string_view text, int rank) { return parse_free_word(text, rank); }

// Random product of generators, optionally without tau.
PCAut random_product(std::mt19937_64& rng, int n, std::size_t length, bool allow_tau, bool sigma_only = false) {
  PCAut f = PCAut::identity(n);
  std::uniform_int_distribution<int> kind(0, allow_tau ? 3 : (sigma_only ? 1 : 2));
  for (std::size_t k = 0; k < length; ++k) {
    const int choice = kind(rng);
    if (choice == 3) {
      f = compose(f, PCAut::tau(n, std::uniform_int_distribution<int>(1, n)(rng)));
      continue;
    }
    const int i = std::uniform_int_distribution<int>(1, n - 1)(rng);
    switch (choice) {
      case 0: f = compose(f, PCAut::sigma(n, i)); break;
      case 1: f = compose(f, PCAut::sigma_inverse(n, i)); break;
      default: f = compose(f, PCAut::rho(n, i)); break;
    }
  }
  return f;
}

}  // namespace

TEST_CASE("identity") {
  const PCAut id = PCAut::identity(3);
  CHECK(apply(id, w("x2", 3)) == w("x2", 3));
  CHECK(id.permutation() == Permutation{1, 2, 3});
  CHECK(PCAut::identity(5).permutation() == identity_permutation(5));
  CHECK(id.signs() == std::vector<int>{1, 1, 1});
  CHECK_THROWS_AS(PCAut::identity(0), DomainError);

  std::mt19937_64 rng(3);
  const PCAut f = random_product(rng, 3, 8, true);
  CHECK(compose(id, f) == f);
  CHECK(compose(f, id) == f);
}

TEST_CASE("generator images follow the defining formulas") {
  const PCAut s = PCAut::sigma(2, 1);
  CHECK(s.image(1) == w("x2", 2));
  CHECK(s.image(2) == w("x2^-1 x1 x2", 2));

  const PCAut r = PCAut::rho(2, 1);
  CHECK(r.image(1) == w("x2", 2));
  CHECK(r.image(2) == w("x1", 2));

  const PCAut t = PCAut::tau(2, 2);
  CHECK(t.image(1) == w("x1", 2));
  CHECK(t.image(2) == w("x2^-1", 2));

  CHECK_THROWS_AS(PCAut::sigma(3, 3), DomainError);
  CHECK_THROWS_AS(PCAut::rho(3, 0), DomainError);
  CHECK_THROWS_AS(PCAut::tau(3, 4), DomainError);
  CHECK_THROWS_AS(PCAut::alpha(3, 2, 2), DomainError);
}

TEST_CASE("sigma inverse closed form") {
  for (int n = 2; n <= 5; ++n) {
    for (int i = 1; i < n; ++i) {
      CHECK(compose(PCAut::sigma(n, i), PCAut::sigma_inverse(n, i)) == PCAut::identity(n));
      CHECK(compose(PCAut::sigma_inverse(n, i), PCAut::sigma(n, i)) == PCAut::identity(n));
    }
  }
}

TEST_CASE("compose is f after g") {
  CHECK(compose(PCAut::rho(2, 1), PCAut::rho(2, 1)) == PCAut::identity(2));

  // sigma o rho: x1 -> sigma(x2), x2 -> sigma(x1).
  const PCAut sr = compose(PCAut::sigma(2, 1), PCAut::rho(2, 1));
  CHECK(sr.image(1) == w("x2^-1 x1 x2", 2));
  CHECK(sr.image(2) == w("x2", 2));

  // rho o sigma: x1 -> rho(x2), x2 -> rho(x2^-1 x1 x2).
  const PCAut rs = compose(PCAut::rho(2, 1), PCAut::sigma(2, 1));
  CHECK(rs.image(1) == w("x1", 2));
  CHECK(rs.image(2) == w("x1^-1 x2 x1", 2));

  CHECK_THROWS_AS(compose(PCAut::identity(2), PCAut::identity(3)), DomainError);
}

TEST_CASE("compose agrees with substitution") {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 200; ++trial) {
    const PCAut f = random_product(rng, 4, 6, true);
    const PCAut g = random_product(rng, 4, 6, true);
    const PCAut fg = compose(f, g);
    for (int i = 1; i <= 4; ++i) {
      CHECK(fg.image(i).letters() == oracle::substitute(oracle::raw_images(f), g.image(i).letters()));
    }
  }
}

TEST_CASE("apply") {
  CHECK(apply(PCAut::tau(2, 1), w("x1", 2)) == w("x1^-1", 2));
  CHECK(apply(PCAut::sigma(3, 2), FreeWord(3)).empty());
  CHECK(apply(PCAut::sigma(2, 1), w("x1 x2", 2)) == w("x1 x2", 2));
  CHECK_THROWS_AS(apply(PCAut::identity(2), FreeWord(3)), DomainError);

  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 200; ++trial) {
    const PCAut f = random_product(rng, 3, 7, true);
    const FreeWord u = oracle::random_word(rng, 3, 8);
    const FreeWord v = oracle::random_word(rng, 3, 8);
    CHECK(apply(f, multiply(u, v)) == multiply(apply(f, u), apply(f, v)));
  }
}

TEST_CASE("equals") {
  CHECK(equals(PCAut::identity(3), PCAut::identity(3)));
  CHECK_FALSE(equals(PCAut::sigma(3, 1), PCAut::rho(3, 1)));
  const PCAut s1 = PCAut::sigma(3, 1);
  const PCAut s2 = PCAut::sigma(3, 2);
  CHECK(equals(compose(compose(s1, s2), s1), compose(compose(s2, s1), s2)));
  CHECK_THROWS_AS(equals(PCAut::identity(2), PCAut::identity(3)), DomainError);
}

TEST_CASE("equals is an equivalence relation stable under re-reduction") {
  std::mt19937_64 rng(23);
  std::vector<PCAut> pool;
  for (int k = 0; k < 30; ++k) pool.push_back(random_product(rng, 3, std::uniform_int_distribution<int>(0, 3)(rng), false));
  for (const auto& f : pool) {
    CHECK(equals(f, f));
    const PCAut rebuilt = PCAut::from_images(3, [&] {
      std::vector<FreeWord> images;
      for (const auto& img : f.images()) images.push_back(FreeWord::reduce(3, img.letters()));
      return images;
    }());
    CHECK(equals(f, rebuilt));
    for (const auto& g : pool) {
      CHECK(equals(f, g) == equals(g, f));
      for (const auto& h : pool) {
        if (equals(f, g) && equals(g, h)) CHECK(equals(f, h));
      }
    }
  }
}

TEST_CASE("recognize_pc_shape") {
  const auto id_shape = recognize_pc_shape(4, PCAut::identity(4).images());
  REQUIRE(id_shape);
  CHECK(id_shape->permutation == identity_permutation(4));
  CHECK(id_shape->signs == std::vector<int>(4, 1));
  for (const auto& c : id_shape->conjugators) CHECK(c.empty());

  const auto alpha = recognize_pc_shape(2, {w("x2^-1 x1 x2", 2), w("x2", 2)});
  REQUIRE(alpha);
  CHECK(alpha->permutation == Permutation{1, 2});
  CHECK(alpha->signs == std::vector<int>{1, 1});
  CHECK(alpha->conjugators[0] == w("x2", 2));
  CHECK(alpha->conjugators[1].empty());

  CHECK_FALSE(recognize_pc_shape(2, {w("x1 x2", 2), w("x2", 2)}));
  // Conjugates of generators but not a bijection.
  CHECK_FALSE(recognize_pc_shape(2, {w("x1", 2), w("x2^-1 x1 x2", 2)}));
  CHECK_FALSE(recognize_pc_shape(2, {w("x1", 2)}));
  CHECK_THROWS_AS(PCAut::from_images(2, {w("x1 x2", 2), w("x2", 2)}), DomainError);
}

TEST_CASE("permutation and signs projections") {
  CHECK(PCAut::rho(3, 2).permutation() == Permutation{1, 3, 2});
  CHECK(PCAut::tau(3, 1).signs() == std::vector<int>{-1, 1, 1});
  CHECK(PCAut::identity(6).permutation() == identity_permutation(6));
}

TEST_CASE("closure: random products keep the PC shape") {
  std::mt19937_64 rng(29);
  for (int trial = 0; trial < 5000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const PCAut f = random_product(rng, n, std::uniform_int_distribution<int>(1, 10)(rng), true);
    REQUIRE(recognize_pc_shape(n, f.images()));
  }
}

TEST_CASE("permutation of a composition") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1000; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const PCAut f = random_product(rng, n, 6, true);
    const PCAut g = random_product(rng, n, 6, true);
    REQUIRE(compose(f, g).permutation() == compose_permutations(f.permutation(), g.permutation()));
  }
}

TEST_CASE("tau-free products never invert a generator") {
  std::mt19937_64 rng(37);
  for (int trial = 0; trial < 500; ++trial) {
    const PCAut f = random_product(rng, 5, 12, false);
    CHECK(f.signs() == std::vector<int>(5, 1));
  }
}

TEST_CASE("Artin product condition for sigma-only products") {
  std::mt19937_64 rng(41);
  for (int trial = 0; trial < 500; ++trial) {
    const int n = std::uniform_int_distribution<int>(2, 6)(rng);
    const PCAut f = random_product(rng, n, 12, false, true);
    std::vector<Letter> product;
    for (int i = 1; i <= n; ++i) product.push_back({i, 1});
    const FreeWord x = FreeWord::reduce(n, product);
    REQUIRE(apply(f, x) == x);
  }
  const FreeWord x12 = w("x1 x2", 2);
  CHECK(apply(PCAut::rho(2, 1), x12) == w("x2 x1", 2));
}

TEST_CASE("printer") {
  CHECK(format(PCAut::tau(2, 1)) == "x_1 -> x1^-1\nx_2 -> x2\nperm: [1, 2]\nsigns: [-1, 1]\n");
  CHECK(format(PCAut::sigma(2, 1)) == "x_1 -> x2\nx_2 -> x2^-1 x1 x2\nperm: [2, 1]\nsigns: [1, 1]\n");
}
