#include "doctest.h"

#include "dehn/growth.hpp"
#include "dehn/words.hpp"
#include "oracles.hpp"

using namespace dehn;

namespace {

Word xi_nu_word(const std::string& pattern) {
  std::vector<Generator> ls;
  for (char c : pattern) {
    switch (c) {
      case 'x': ls.push_back(gen_xi()); break;
      case 'X': ls.push_back(gen_xi(-1)); break;
      case 'y': ls.push_back(gen_nu()); break;
      case 'Y': ls.push_back(gen_nu(-1)); break;
    }
  }
  return Word(ls);
}

}  // namespace

TEST_CASE("free reduction") {
  // xi nu nu^-1 xi -> xi xi
  CHECK(xi_nu_word("xyYx") == xi_nu_word("xx"));
  CHECK(Word{} == xi_nu_word(""));
  CHECK(xi_nu_word("xyx") == xi_nu_word("xyx"));
  // idempotent and length-nonincreasing
  Word w = xi_nu_word("xYyXxy");
  CHECK(reduce(w.letters()) == w);
  CHECK(w.size() <= 6);
  // w * w^-1 is empty for a batch of words
  for (const std::string& s : {"x", "xy", "xYx", "yyXxY", "xyxyx"}) {
    Word v = xi_nu_word(s);
    CHECK((v * v.inverse()).empty());
  }
}

TEST_CASE("palindromes") {
  CHECK(xi_nu_word("xyx").is_palindrome());
  CHECK(Word{}.is_palindrome());
  CHECK_FALSE(xi_nu_word("xy").is_palindrome());
  // sign matters
  CHECK_FALSE(xi_nu_word("xyX").is_palindrome());
}

TEST_CASE("interleave basics") {
  Word b{gen_a(1, 1, 1), gen_a(1, 1, 2)};
  Word c{gen_u(0, 1), gen_u(0, 2)};
  Word mix = interleave(b, c);
  CHECK(mix.size() == 4);
  CHECK(mix[0] == gen_a(1, 1, 1));
  CHECK(mix[1] == gen_u(0, 1));
  // length-1 case
  Word lhs = interleave(Word{gen_a(1, 1, 1, -1)}, Word{gen_u(0, 1)});
  CHECK(lhs == Word({gen_a(1, 1, 1, -1), gen_u(0, 1)}));
  CHECK_THROWS_AS(interleave(b, Word{gen_u(0, 1)}), LengthMismatch);
  CHECK_THROWS_AS(interleave(b, b), std::invalid_argument);
}

TEST_CASE("interleave of phi images matches the figure label") {
  // phi(a[0][1][1]^-1) interleaved with phi(u[0][1]) is the six-letter
  // alternating diagonal word.
  Word a_img = apply_phi(Word{gen_a(0, 1, 1, -1)}, 1);
  Word u_img = apply_phi(Word{gen_u(0, 1)}, 1);
  Word mix = interleave(a_img, u_img);
  Word expected{gen_a(0, 1, 1, -1), gen_u(0, 1),  gen_a(0, 1, 2, -1),
                gen_u(0, 2),        gen_a(0, 1, 1, -1), gen_u(0, 1)};
  CHECK(mix == expected);
  CHECK(mix.size() == a_img.size() + u_img.size());
}

TEST_CASE("interleave projects back onto its factors") {
  for (int N = 0; N <= 8; ++N) {
    Word w1 = apply_phi(Word{gen_a(2, 3, 1, -1)}, N);
    Word w2 = apply_phi(Word{gen_u(1, 1)}, N);
    Word mix = interleave(w1, w2);
    CHECK(mix.project({Family::A, 2, 3}) == w1);
    CHECK(mix.project({Family::U, 1, 1}) == w2);
  }
}

TEST_CASE("shuffle counts") {
  auto pal_a = [](int m) { return apply_phi(Word{gen_a(0, 1, 1)}, 0).pow(m); };
  auto pal_u = [](int m) { return Word{gen_u(0, 1)}.pow(m); };
  // |W|=3 with subdivision: 2(2p+1)^2 = 18
  CHECK(shuffle_count(pal_a(3), pal_u(3), true) == BigInt(18));
  // |W|=1, subdivision off: a single transposition
  CHECK(shuffle_count(pal_a(1), pal_u(1), false) == BigInt(1));
  // |W|=7 with subdivision vs the diamond oracle
  CHECK(shuffle_count(pal_a(7), pal_u(7), true) == BigInt(oracle::diamond_cells(7)));
  CHECK(shuffle_count(pal_a(7), pal_u(7), true) == BigInt(98));
  // even length: no center band
  CHECK(shuffle_count(pal_a(4), pal_u(4), true) == BigInt(2 * 4 * 5));
  // the formula matches 2(2p+1)^2 for all small p
  for (std::uint64_t p = 0; p <= 20; ++p) {
    std::uint64_t m = 2 * p + 1;
    CHECK(shuffle_count(pal_a(int(m)), pal_u(int(m)), true) ==
          BigInt(2 * m * m));
  }
  CHECK_THROWS_AS(shuffle_count(pal_a(2), pal_u(3), true), LengthMismatch);
  Word not_pal{gen_a(0, 1, 1), gen_a(0, 1, 2)};
  CHECK_THROWS_AS(shuffle_count(not_pal, pal_u(2), true), NotPalindrome);
}

TEST_CASE("palindromic phi images shuffle at the quadratic rate") {
  for (int N = 1; N <= 6; ++N) {
    Word w1 = apply_phi(Word{gen_a(1, 2, 1)}, N);
    Word w2 = apply_phi(Word{gen_u(0, 1)}, N);
    REQUIRE(w1.is_palindrome());
    std::uint64_t m = w1.size();
    CHECK(shuffle_count(w1, w2, true) == BigInt(oracle::diamond_cells(m)));
  }
}

TEST_CASE("generator text round trip") {
  for (const auto& g :
       {gen_a(2, 3, 1), gen_a(0, 1, 2, -1), gen_u(1, 2), gen_u(-1, 1),
        gen_y(2, -1), gen_xi(), gen_nu(-1), gen_d(1, 2, 1, 2, -1)}) {
    CHECK(Generator::parse(g.render()) == g);
  }
  Word w{gen_a(1, 1, 1), gen_u(0, 1, -1), gen_y(2)};
  CHECK(Word::parse(w.render()) == w);
  CHECK(Word::parse("1") == Word{});
  CHECK_THROWS_AS(Generator::parse("b[1]"), ParseError);
}

TEST_CASE("basis vectors") {
  BasisVector d21 = BasisVector::diagonal(2, 1);
  CHECK(d21.coord_word(1) == Word({gen_u(1, 1, -1), gen_a(2, 1, 1)}));
  CHECK(d21.coord_letter(2) == gen_d(2, 1, 2, 2));
  // level-0 diagonal degenerates to a[0][2]
  BasisVector d0 = BasisVector::diagonal(0, 1);
  CHECK(d0.coord_word(1) == Word({gen_a(0, 2, 1)}));
  BasisVector um1 = BasisVector::u_minus_one();
  CHECK(um1.coord_word(2) == Word({gen_a(0, 1, 2), gen_a(0, 2, 2, -1)}));
  // expansion of diagonal letters
  Word w{gen_d(1, 2, 1, 1), gen_d(1, 2, 2, 2, -1)};
  Word expanded = expand_diagonals(w);
  CHECK(expanded == Word({gen_u(0, 1, -1), gen_a(1, 2, 1), gen_a(1, 2, 2, -1),
                          gen_u(0, 2)}));
}
