#include "doctest.h"

#include <cmath>

#include "dehn/distortion.hpp"
#include "dehn/growth.hpp"

using namespace dehn;

namespace {

BigInt corridor_bound(std::size_t len_x) {
  BigInt b(3);
  for (std::size_t i = 0; i < 3 * len_x; ++i) b *= BigInt(3);
  return b;
}

// Small deterministic generator for structured corridor words.
struct Lcg {
  std::uint64_t state = 0x9e3779b97f4a7c15ull;
  std::uint64_t next() {
    state = state * 6364136223846793005ull + 1442695040888963407ull;
    return state >> 33;
  }
  int pick(int n) { return static_cast<int>(next() % n); }
};

}  // namespace

TEST_CASE("single pinch resolves through phi") {
  // a111 a011 a111^-1 -> phi(a011) = a011 a012 a011
  CorridorWord x{Word({gen_a(1, 1, 1), gen_a(0, 1, 1), gen_a(1, 1, 1, -1)}), 1};
  RewriteResult res = corridor_rewrite(x, 1);
  CHECK(res.ambient ==
        Word({gen_a(0, 1, 1), gen_a(0, 1, 2), gen_a(0, 1, 1)}));
  CHECK(res.intrinsic_length == 3);
  CHECK(BigInt(res.intrinsic_length) <= corridor_bound(x.horizontal.size()));
  // inverse pinch goes through phi^-1
  CorridorWord xi{Word({gen_a(1, 1, 1, -1), gen_a(0, 1, 1), gen_a(1, 1, 1)}), 1};
  RewriteResult r2 = corridor_rewrite(xi, 1);
  CHECK(r2.ambient == Word({gen_a(0, 1, 2)}));
}

TEST_CASE("identity on a-basis words") {
  Word w({gen_a(0, 1, 1), gen_a(0, 1, 2, -1), gen_a(0, 1, 1)});
  RewriteResult res = corridor_rewrite(CorridorWord{w, 1}, 1);
  CHECK(res.ambient == w);
  CHECK(res.pinches_resolved == 0);
}

TEST_CASE("wing letters fix the F4 factor") {
  // a111 u01 a111^-1: the edge-membership route fails, the semidirect
  // action is trivial, and the final retraction kills u0.
  CorridorWord x{Word({gen_a(1, 1, 1), gen_u(0, 1), gen_a(1, 1, 1, -1)}), 1};
  RewriteResult res = corridor_rewrite(x, 1);
  CHECK(res.ambient.empty());
  CHECK(res.pinches_resolved == 1);
}

TEST_CASE("unsupported pinches are refused loudly") {
  // mixing the two semidirect factors inside one pinch
  CorridorWord bad{
      Word({gen_a(1, 1, 1), gen_a(0, 1, 1), gen_u(0, 1), gen_a(1, 1, 1, -1)}),
      1};
  CHECK_THROWS_AS(corridor_rewrite(bad, 1), UnsupportedPinch);
  // a pinch whose interior leaks into another factor
  CorridorWord bad2{
      Word({gen_a(1, 1, 1), gen_a(0, 2, 1), gen_a(1, 1, 1, -1)}), 1};
  CHECK_THROWS_AS(corridor_rewrite(bad2, 1), UnsupportedPinch);
  // alien letters
  CorridorWord bad3{Word({gen_u(1, 1)}), 1};
  CHECK_THROWS_AS(corridor_rewrite(bad3, 1), UnsupportedPinch);
}

TEST_CASE("diagonal targets at n = 2") {
  // a231 (u01^-1 a111) a231^-1 -> phi of the diagonal, expanded
  Word diag_arg({gen_u(0, 1, -1), gen_a(1, 1, 1)});
  CorridorWord x{Word{gen_a(2, 3, 1)} * diag_arg * Word{gen_a(2, 3, 1, -1)}, 2};
  RewriteResult res = corridor_rewrite(x, 3);
  Word expected = expand_diagonals(
      Word({gen_d(1, 1, 1, 1), gen_d(1, 1, 2, 2), gen_d(1, 1, 1, 1)}));
  CHECK(res.ambient == expected);
  CHECK(res.intrinsic_length == 3);
}

TEST_CASE("corridor corpus obeys the cubic-exponential bound") {
  // >= 100 structured corridor words across n = 1 and n = 2 with |X| <= 8
  Lcg rng;
  int tested = 0;
  for (int n = 1; n <= 2; ++n) {
    int slots = 1 << n;
    for (int trial = 0; trial < 60; ++trial) {
      int i = 1 + rng.pick(slots);
      BasisVector basis = i <= slots / 2
                              ? BasisVector::a(n - 1, i)
                              : BasisVector::diagonal(n - 1, i - slots / 2);
      int kind = rng.pick(3);
      Word inner;
      if (kind == 0) {
        // a word in the pinch's own basis
        int len = 1 + rng.pick(2);
        for (int q = 0; q < len; ++q)
          inner = inner * basis.coord_word(1 + rng.pick(2));
      } else if (kind == 1) {
        inner = Word{gen_u(n - 1, 1 + rng.pick(2))};
      } else {
        inner = basis.coord_word(1);
      }
      int sign = rng.pick(2) ? 1 : -1;
      Word t{gen_a(n, i, 1 + rng.pick(2), sign)};
      Word x = t * inner * t.inverse();
      if (x.size() > 8) continue;
      RewriteResult res = corridor_rewrite(CorridorWord{x, n}, i);
      CHECK(BigInt(res.intrinsic_length) <= corridor_bound(x.size()));
      ++tested;
    }
    // plain basis words count too
    for (int i = 1; i <= slots; ++i) {
      BasisVector basis = i <= slots / 2 ? BasisVector::a(n - 1, i)
                                         : BasisVector::diagonal(
                                               n - 1, i - slots / 2);
      Word x = basis.coord_word(1) * basis.coord_word(2);
      RewriteResult res = corridor_rewrite(CorridorWord{x, n}, i);
      CHECK(res.ambient == x);
      ++tested;
    }
  }
  CHECK(tested >= 100);
}

TEST_CASE("witness samples") {
  Witness w1 = make_witness(1, 1);
  CHECK(w1.sample.area_edge_exact == BigInt(2));
  CHECK(w1.sample.area_theta_total == BigInt(5));
  CHECK(w1.sample.area_ambient_upper == BigInt(9));
  CHECK(!w1.boundary.empty());

  for (int N = 2; N <= 12; ++N) {
    Witness w = make_witness(1, N);
    // the full diagram area sits in the lemma window
    CHECK(w.sample.area_theta_total >= w_growth(1, N));
    CHECK(w.sample.area_theta_total <= BigInt(3) * w_growth(1, N));
    // ambient cost stays quadratic
    BigInt cap = BigInt(40) * BigInt(std::uint64_t(N) * std::uint64_t(N));
    CHECK(w.sample.area_ambient_upper <= cap);
    if (N >= 5) CHECK(w.sample.area_edge_exact >= w.sample.area_ambient_upper);
  }
}

TEST_CASE("distortion shape at desk scale") {
  double log_lambda = std::log(1.0 + std::sqrt(2.0));
  std::vector<DistortionSample> samples;
  for (int N = 4; N <= 12; ++N) {
    Witness w = make_witness(1, N);
    samples.push_back(w.sample);
    double slope = w.sample.log_edge / (double(N) + 1.0);
    CHECK(slope >= 0.8 * log_lambda);
    CHECK(slope <= 1.0 * log_lambda);
  }
  DistortionReport rep = check_distortion_inequality(samples);
  CHECK(rep.ok);
  CHECK(rep.beta <= (std::uint64_t{1} << 20));
  for (const auto& s : samples) CHECK(s.fitted_beta == rep.beta);
}

TEST_CASE("beta search edge cases") {
  // equal areas: beta = 1 suffices
  DistortionSample eq;
  eq.area_edge_exact = BigInt(100);
  eq.area_ambient_upper = BigInt(100);
  std::vector<DistortionSample> v{eq};
  DistortionReport rep = check_distortion_inequality(v);
  CHECK(rep.ok);
  CHECK(rep.beta == 1);

  // adversarial: edge area out of exponential reach of the ambient bound
  DistortionSample bad;
  bad.area_edge_exact =
      BigInt::from_decimal("1" + std::string(29000, '0'));
  bad.area_ambient_upper = BigInt(1);
  std::vector<DistortionSample> vb{bad};
  CHECK_THROWS_AS(check_distortion_inequality(vb), NoBetaFound);
}
