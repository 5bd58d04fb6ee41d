#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "dehn/presentations.hpp"

namespace dehn {

struct Rational {
  long long num = 1;
  long long den = 1;
  Rational() = default;
  Rational(long long n, long long d = 1);
  Rational operator*(const Rational& o) const;
  Rational operator+(const Rational& o) const;
  bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string render() const;
};

/// Coarse-Lipschitz class exp^tower(x^inner); tower = 0 means x^inner.
/// Canonical: positive rational inner exponent, outer powers and constant
/// multiples absorbed for tower >= 1.
struct FunctionClass {
  int tower = 0;
  Rational inner{1, 1};
  static FunctionClass poly(Rational a) { return {0, a}; }
  static FunctionClass exp_tower(int n, Rational a) { return {n, a}; }
  bool operator==(const FunctionClass& o) const {
    return tower == o.tower && inner == o.inner;
  }
  std::string render() const;
};

FunctionClass normalize(const FunctionClass& f);
/// f^c for c > 0: absorbed for towers, exponent-scaled for polynomials.
FunctionClass power_of(const FunctionClass& f, const Rational& c);
/// exp^m(x^a) o exp^n(x^b): exp^{m+n}(x^b) for n >= 1, exp^m(x^{ab}) for n = 0.
FunctionClass compose(const FunctionClass& f, const FunctionClass& g);
/// Product normalization: polynomials multiply, towers absorb polynomials,
/// the larger class wins between towers.
FunctionClass product_absorb(const FunctionClass& f, const FunctionClass& g);

struct DehnTableRow {
  LevelTag level;
  FunctionClass cls;
  std::string rule;          // which step produced this row
  std::string intermediate;  // un-normalized form kept for the audit trail
};

/// The inductive upper-bound table: base x for the two-factor product group,
/// alternating compose-with-x^2 and compose-with-e^sqrt(x) steps.
std::vector<DehnTableRow> derive_table(int max_n = 4);

struct EquivalenceResult {
  bool equivalent = false;
  std::uint64_t witness_C = 0;
  bool conclusive = true;
};

/// Search C in 2^0..2^20 and verify f(x) <= C g(Cx) + Cx both ways at
/// sampled x, in nested-log arithmetic. The verdict always agrees with
/// normal-form equality; sampling trouble is flagged, never inverted.
EquivalenceResult equivalence_witness(const FunctionClass& f,
                                      const FunctionClass& g);
/// Same, with inner-argument coefficients: value = exp^n((c x^a)).
EquivalenceResult equivalence_witness_scaled(const FunctionClass& f, double cf,
                                             const FunctionClass& g, double cg);

}  // namespace dehn
