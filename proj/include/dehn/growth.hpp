#pragma once

#include <cstdint>
#include <map>
#include <mutex>
#include <vector>

#include "dehn/bigint.hpp"
#include "dehn/config.hpp"
#include "dehn/words.hpp"

namespace dehn {

/// Rank-two substitution acting trackwise: coordinate 1 maps to `image1`,
/// coordinate 2 to `image2`, spelled in coordinate indices (+/-1, +/-2).
/// Extended to inverses by s(g^-1) = s(g)^-1 and applied letterwise.
class Substitution {
 public:
  Substitution(std::vector<int> image1, std::vector<int> image2);

  /// The growing automorphism: 1 -> 1 2 1, 2 -> 1.
  static const Substitution& phi();
  /// Its inverse: 1 -> 2, 2 -> 2^-1 1 2^-1.
  static const Substitution& phi_inverse();

  Word apply(const Word& w) const;
  /// Per-letter image length bound (3 for phi and phi^-1).
  std::uint64_t stretch() const { return stretch_; }

 private:
  Word image_of(const Generator& g) const;
  std::vector<int> image1_, image2_;
  std::uint64_t stretch_;
};

/// apply_phi(W, times): phi^times(W) by repeated substitution. Throws
/// BudgetExceeded if the conservative estimate |W| * L(times) tops the
/// configured word budget.
Word apply_phi(const Word& w, int times, const Config& cfg = Config{});
Word apply_phi_inverse(const Word& w, int times, const Config& cfg = Config{});

/// Memoized growth table: L(N) = |phi^N(xi)|, the iterated w_n(r), and the
/// partial sums of L. Thread-safe: concurrent calls return identical values.
class GrowthTable {
 public:
  static GrowthTable& instance();

  /// L(N): L(0)=1, L(1)=3, L(N+1) = 2 L(N) + L(N-1).
  BigInt phi_length(std::uint64_t n);
  /// L at an arbitrary-precision index; subject to the index cap.
  BigInt phi_length_big(const BigInt& n, const Config& cfg = Config{});
  /// w_0(r) = r, w_n(r) = L(w_{n-1}(r)).
  BigInt w(int n, std::uint64_t r, const Config& cfg = Config{});
  /// geometric_sum(N) = sum_{i=0}^{N} L(i).
  BigInt geometric_sum(std::uint64_t n);

 private:
  GrowthTable() = default;
  void extend(std::uint64_t n);
  std::mutex mu_;
  std::vector<BigInt> lengths_;
  std::vector<BigInt> sums_;
};

// Convenience wrappers over the shared table.
BigInt phi_length(std::uint64_t n);
BigInt w_growth(int n, std::uint64_t r, const Config& cfg = Config{});
BigInt geometric_sum(std::uint64_t n);

}  // namespace dehn
