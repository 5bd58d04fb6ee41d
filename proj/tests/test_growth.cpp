#include "doctest.h"

#include "dehn/growth.hpp"
#include "oracles.hpp"

using namespace dehn;

TEST_CASE("phi substitution") {
  Word xi{gen_xi()};
  CHECK(apply_phi(xi, 1) == Word({gen_xi(), gen_nu(), gen_xi()}));
  CHECK(apply_phi(xi, 0) == xi);
  Word second = apply_phi(xi, 2);
  CHECK(second.size() == 7);
  // phi(xi) phi(nu) phi(xi) spelled out
  CHECK(second == Word({gen_xi(), gen_nu(), gen_xi(), gen_xi(), gen_xi(),
                        gen_nu(), gen_xi()}));
  // inverse extension: phi(g^-1) = phi(g)^-1
  CHECK(apply_phi(xi.inverse(), 3) == apply_phi(xi, 3).inverse());
  // phi^-1 undoes phi
  Word w{gen_xi(), gen_nu(), gen_xi(-1)};
  CHECK(apply_phi_inverse(apply_phi(w, 4), 4) == w);
}

TEST_CASE("length recurrence vs the string oracle") {
  CHECK(phi_length(0) == BigInt(1));
  CHECK(phi_length(1) == BigInt(3));
  CHECK(phi_length(4) == BigInt(41));
  for (int n = 0; n <= 12; ++n) {
    CHECK(phi_length(n) == BigInt(oracle::substituted(n).size()));
    CHECK(phi_length(n) == BigInt(apply_phi(Word{gen_xi()}, n).size()));
  }
}

TEST_CASE("iterated growth") {
  CHECK(w_growth(0, 5) == BigInt(5));
  CHECK(w_growth(1, 2) == BigInt(7));
  CHECK(w_growth(2, 1) == BigInt(17));
  CHECK(w_growth(3, 1) == BigInt(3880899));
  // a sane tower refuses to materialize
  Config tiny;
  tiny.w_index_cap = 100;
  CHECK_THROWS_AS(w_growth(3, 2, tiny), BudgetExceeded);
}

TEST_CASE("geometric sums") {
  CHECK(geometric_sum(0) == BigInt(1));
  CHECK(geometric_sum(2) == BigInt(11));
  CHECK(geometric_sum(3) == BigInt(28));
  for (int n = 0; n <= 30; ++n) {
    CHECK(geometric_sum(n) >= phi_length(n));
    CHECK(geometric_sum(n) <= BigInt(3) * phi_length(n));
  }
}

TEST_CASE("images stay palindromic") {
  for (int n = 0; n <= 14; ++n) {
    CHECK(apply_phi(Word{gen_xi()}, n).is_palindrome());
    CHECK(apply_phi(Word{gen_nu()}, n).is_palindrome());
  }
}

TEST_CASE("single application stretches by at most three") {
  for (int r = 1; r <= 7; ++r) {
    BigInt lhs = w_growth(1, r + 1);
    CHECK(lhs <= BigInt(3) * w_growth(1, r));
  }
}

TEST_CASE("word budget") {
  Config tiny;
  tiny.word_budget = 100;
  CHECK_THROWS_AS(apply_phi(Word{gen_xi()}, 12, tiny), BudgetExceeded);
  // under budget still fine
  CHECK(apply_phi(Word{gen_xi()}, 4, tiny).size() == 41);
}

TEST_CASE("diagonal tracks ride along with phi") {
  // interleave(phi^N(G^-1), phi^N(H)) equals the diagonal expansion of
  // phi^N(D) with D expanding to G^-1 H coordinatewise.
  for (int N = 0; N <= 8; ++N) {
    Word lhs = interleave(apply_phi(Word{gen_u(0, 1, -1)}, N),
                          apply_phi(Word{gen_a(1, 1, 1)}, N));
    Word rhs = expand_diagonals(apply_phi(Word{gen_d(1, 1, 1, 1)}, N));
    CHECK(lhs == rhs);
  }
}

TEST_CASE("growth table is consistent under repeated queries") {
  BigInt a = phi_length(20);
  BigInt b = phi_length(20);
  CHECK(a == b);
  CHECK(w_growth(2, 3) == w_growth(2, 3));
}
