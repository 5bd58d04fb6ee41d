// Acceptance suite: one pass/fail line per criterion, nonzero exit on any
// failure. Expected to finish in well under two minutes.

#include <cmath>
#include <cstdint>
#include <functional>
#include <iostream>
#include <sstream>
#include <vector>

#include "dehn/balls.hpp"
#include "dehn/complexes.hpp"
#include "dehn/dehncalc.hpp"
#include "dehn/distortion.hpp"
#include "dehn/growth.hpp"
#include "dehn/presentations.hpp"
#include "dehn/words.hpp"

using namespace dehn;

namespace {

int failures = 0;

void criterion(int number, const std::string& name,
               const std::function<bool(std::string&)>& body) {
  std::string detail;
  bool ok = false;
  try {
    ok = body(detail);
  } catch (const std::exception& e) {
    detail = std::string("exception: ") + e.what();
  }
  std::cout << "CRITERION " << number << " [" << name << "]: "
            << (ok ? "PASS" : "FAIL");
  if (!detail.empty()) std::cout << " (" << detail << ")";
  std::cout << std::endl;
  if (!ok) ++failures;
}

}  // namespace

int main() {
  criterion(1, "length sequence", [](std::string& detail) {
    const std::uint64_t expected[] = {1,   3,    7,    17,   41,  99,
                                      239, 577,  1393, 3363, 8119};
    for (int n = 0; n <= 10; ++n)
      if (phi_length(n) != BigInt(expected[n])) return false;
    for (int n = 0; n <= 14; ++n)
      if (BigInt(apply_phi(Word{gen_xi()}, n).size()) != phi_length(n))
        return false;
    detail = "L(0..10) exact, materialized cross-check to N = 14";
    return true;
  });

  criterion(2, "palindromicity", [](std::string& detail) {
    for (int n = 0; n <= 14; ++n) {
      if (!apply_phi(Word{gen_xi()}, n).is_palindrome()) return false;
      if (!apply_phi(Word{gen_nu()}, n).is_palindrome()) return false;
    }
    detail = "both basis images, N <= 14";
    return true;
  });

  criterion(3, "interleave identity", [](std::string& detail) {
    for (int n = 0; n <= 8; ++n) {
      Word wa = apply_phi(Word{gen_a(1, 1, 1, -1)}, n);
      Word wu = apply_phi(Word{gen_u(0, 1)}, n);
      Word mix = interleave(wa, wu);
      if (mix.project({Family::A, 1, 1}) != wa) return false;
      if (mix.project({Family::U, 0, 1}) != wu) return false;
      BigInt m = phi_length(n);
      if (shuffle_count(wa.inverse(), wu, true) != BigInt(2) * m * m)
        return false;
    }
    detail = "projections and 2(2p+1)^2 for N <= 8";
    return true;
  });

  criterion(4, "exact sphere areas", [](std::string& detail) {
    for (int n = 1; n <= 3; ++n)
      for (int r = 1; r <= 5; ++r) {
        BigInt rr{static_cast<std::uint64_t>(r)};
        BigInt want = BigInt(std::uint64_t{1} << (2 * n + 2)) * rr * rr +
                      BigInt(std::uint64_t{1} << (2 * n + 2)) * rr +
                      BigInt(std::uint64_t{1} << (2 * n + 1)) - BigInt(2);
        Inventory inv = build_sphere(LevelTag::H(n), r, false);
        if (inv.area != want) return false;
        if (n == 1 && r == 1 && inv.area != BigInt(38)) return false;
      }
    detail = "2^{2n+2}r^2 + 2^{2n+2}r + 2^{2n+1} - 2 for n in 1..3, r in 1..5";
    return true;
  });

  criterion(5, "sparse ratio bound", [](std::string& detail) {
    for (int n = 1; n <= 2; ++n)
      for (int r = 1; r <= 4; ++r) {
        Inventory a = build_sphere(LevelTag::G(n), r, false);
        Inventory b = build_sphere(LevelTag::G(n), r + 1, false);
        if (b.area > BigInt(18) * a.area) return false;
      }
    for (int r = 1; r <= 5; ++r) {
      BigInt area(std::uint64_t(build_theta(ThetaSpec{1, 1, 0, r}).complex.area()));
      if (area < w_growth(1, r)) return false;
      if (area > BigInt(3) * w_growth(1, r)) return false;
    }
    for (int r = 1; r <= 2; ++r) {
      BigInt area(std::uint64_t(build_theta(ThetaSpec{1, 2, 1, r}).complex.area()));
      if (area < w_growth(2, r)) return false;
      if (area > BigInt(3) * w_growth(2, r)) return false;
    }
    detail = "area(S_G(r+1)) <= 18 area(S_G(r)); theta areas in [w_{k+1}, 3w_{k+1}]";
    return true;
  });

  criterion(6, "explicit realization", [](std::string& detail) {
    for (int r = 1; r <= 2; ++r) {
      CellComplex g0 = realize_explicit(LevelTag::G(0), r);
      if (g0.euler_characteristic() != 2) return false;
      if (!validate(g0, build_group(LevelTag::G(0))).pass) return false;
      if (BigInt(g0.area()) != build_sphere(LevelTag::G(0), r, false).area)
        return false;
      CellComplex h1 = realize_explicit(LevelTag::H(1), r);
      if (h1.euler_characteristic() != 2) return false;
      if (!validate(h1, build_group(LevelTag::H(1))).pass) return false;
      std::uint64_t want = r == 1 ? 38 : 102;
      if (h1.area() != want) return false;
      if (BigInt(h1.area()) != build_sphere(LevelTag::H(1), r, false).area)
        return false;
    }
    detail = "G0 and H1 at r <= 2: chi = 2, labels valid, areas 22/62 and 38/102";
    return true;
  });

  criterion(7, "volume lower bounds", [](std::string& detail) {
    for (int n = 1; n <= 2; ++n)
      for (int r = 1; r <= (n == 2 ? 4 : 5); ++r) {
        Inventory inv = build_sphere(LevelTag::H(n), r, true);
        BigInt wn = w_growth(n, r);
        if (*inv.volume_lower < wn * wn) return false;
      }
    for (int n = 0; n <= 2; ++n)
      for (int r = 1; r <= (n == 2 ? 2 : 4); ++r) {
        Inventory inv = build_sphere(LevelTag::G(n), r, true);
        BigInt wn1 = w_growth(n + 1, r);
        if (*inv.volume_lower < wn1 * wn1) return false;
      }
    // slab: the exact 3-cell count within a factor 4 of the reference
    for (int k = 0; k <= 1; ++k)
      for (int r = 1; r <= 3; ++r) {
        SlabInfo s = build_slab(k, r);
        if (BigInt(4) * s.exact_cells < s.reference) return false;
        if (s.exact_cells > BigInt(4) * s.reference) return false;
      }
    // and the explicit product complex agrees at small scale
    if (BigInt(build_slab_complex(0, 1).volume()) != build_slab(0, 1).exact_cells)
      return false;
    if (BigInt(build_slab_complex(0, 2).volume()) != build_slab(0, 2).exact_cells)
      return false;
    detail = "vol >= [w_n(r)]^2 (H), [w_{n+1}(r)]^2 (G); slab exact = reference";
    return true;
  });

  criterion(8, "growth-vs-dehn shape", [](std::string& detail) {
    double log_lambda = std::log(1.0 + std::sqrt(2.0));
    for (int r = 3; r <= 8; ++r) {
      Inventory inv = build_sphere(LevelTag::H(1), r, true);
      double lv = inv.volume_lower->log_natural();
      double sa = std::sqrt(static_cast<double>(inv.area.to_u64()));
      double unit = sa * log_lambda / 4.0;
      if (lv < 1.5 * unit || lv > 2.5 * unit) {
        std::ostringstream os;
        os << "r=" << r << " log(vol)=" << lv << " unit=" << unit;
        detail = os.str();
        return false;
      }
    }
    detail = "log(vol) in [1.5, 2.5] sqrt(area) log(1+sqrt2)/4 for r in 3..8";
    return true;
  });

  criterion(9, "symbolic table", [](std::string& detail) {
    auto rows = derive_table(4);
    auto cls = [&](const std::string& level) -> const FunctionClass& {
      for (const auto& row : rows)
        if (row.level.render() == level) return row.cls;
      throw std::runtime_error("missing " + level);
    };
    bool ok = cls("G0") == FunctionClass::poly(Rational(2)) &&
              cls("H1") == FunctionClass::exp_tower(1, Rational(1, 2)) &&
              cls("G1") == FunctionClass::exp_tower(1, Rational(1)) &&
              cls("H2") == FunctionClass::exp_tower(2, Rational(1, 2)) &&
              cls("G2") == FunctionClass::exp_tower(2, Rational(1)) &&
              cls("H3") == FunctionClass::exp_tower(3, Rational(1, 2)) &&
              cls("G3") == FunctionClass::exp_tower(3, Rational(1)) &&
              cls("H4") == FunctionClass::exp_tower(4, Rational(1, 2)) &&
              cls("G4") == FunctionClass::exp_tower(4, Rational(1));
    detail = "eight table entries plus the schema rows to n = 4";
    return ok;
  });

  criterion(10, "corridor bound", [](std::string& detail) {
    auto bound = [](std::size_t len) {
      BigInt b(3);
      for (std::size_t i = 0; i < 3 * len; ++i) b *= BigInt(3);
      return b;
    };
    int corpus = 0;
    for (int n = 1; n <= 2; ++n) {
      int slots = 1 << n;
      for (int i = 1; i <= slots; ++i) {
        BasisVector basis = i <= slots / 2
                                ? BasisVector::a(n - 1, i)
                                : BasisVector::diagonal(n - 1, i - slots / 2);
        for (int j = 1; j <= 2; ++j)
          for (int sign : {1, -1})
            for (int c1 = 1; c1 <= 2; ++c1)
              for (int inner_len = 1; inner_len <= 2; ++inner_len) {
                Word inner = basis.coord_word(c1);
                if (inner_len == 2) inner = inner * basis.coord_word(2);
                Word t{gen_a(n, i, j, sign)};
                Word x = t * inner * t.inverse();
                if (x.size() > 8) continue;
                RewriteResult res =
                    corridor_rewrite(CorridorWord{x, n}, i);
                if (BigInt(res.intrinsic_length) > bound(x.size()))
                  return false;
                ++corpus;
              }
        // identity on plain basis words
        Word base = basis.coord_word(1) * basis.coord_word(2);
        RewriteResult res = corridor_rewrite(CorridorWord{base, n}, i);
        if (res.ambient != base) return false;
        ++corpus;
        // the F4 factor is fixed
        for (int k = 1; k <= 2; ++k) {
          Word t{gen_a(n, i, 1)};
          Word x = t * Word{gen_u(n - 1, k)} * t.inverse();
          RewriteResult res2 = corridor_rewrite(CorridorWord{x, n}, i);
          if (BigInt(res2.intrinsic_length) > bound(x.size())) return false;
          ++corpus;
        }
      }
    }
    std::ostringstream os;
    os << corpus << " corridor words at n in {1,2}, |X| <= 8";
    detail = os.str();
    return corpus >= 100;
  });

  criterion(11, "distortion shape", [](std::string& detail) {
    double log_lambda = std::log(1.0 + std::sqrt(2.0));
    std::vector<DistortionSample> samples;
    for (int N = 4; N <= 12; ++N) {
      Witness w = make_witness(1, N);
      samples.push_back(w.sample);
      double slope = w.sample.log_edge / (double(N) + 1.0);
      if (slope < 0.8 * log_lambda || slope > 1.0 * log_lambda) {
        std::ostringstream os;
        os << "N=" << N << " slope=" << slope;
        detail = os.str();
        return false;
      }
      BigInt cap = BigInt(40) * BigInt(std::uint64_t(N) * std::uint64_t(N));
      if (w.sample.area_ambient_upper > cap) return false;
    }
    DistortionReport rep = check_distortion_inequality(samples);
    if (!rep.ok || rep.beta > (std::uint64_t{1} << 20)) return false;
    std::ostringstream os;
    os << "linear log growth in [0.8, 1.0] log(1+sqrt2); beta = " << rep.beta;
    detail = os.str();
    return true;
  });

  if (failures == 0) {
    std::cout << "ALL CRITERIA PASS" << std::endl;
    return 0;
  }
  std::cout << failures << " CRITERIA FAILED" << std::endl;
  return 1;
}
