#include "dehn/dehncalc.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace dehn {

Rational::Rational(long long n, long long d) : num(n), den(d) {
  if (den == 0) throw std::domain_error("zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  long long g = std::gcd(num < 0 ? -num : num, den);
  if (g > 1) {
    num /= g;
    den /= g;
  }
}

Rational Rational::operator*(const Rational& o) const {
  return Rational(num * o.num, den * o.den);
}

Rational Rational::operator+(const Rational& o) const {
  return Rational(num * o.den + o.num * den, den * o.den);
}

std::string Rational::render() const {
  if (den == 1) return std::to_string(num);
  return std::to_string(num) + "/" + std::to_string(den);
}

std::string FunctionClass::render() const {
  std::string arg = "x";
  if (!(inner == Rational(1))) {
    if (inner == Rational(1, 2))
      arg = "sqrt(x)";
    else
      arg = "x^" + inner.render();
  }
  if (tower == 0) return arg;
  std::string out = arg;
  for (int i = 0; i < tower; ++i) out = "exp(" + out + ")";
  return out;
}

FunctionClass normalize(const FunctionClass& f) {
  if (f.inner.num <= 0) throw std::domain_error("inner exponent must be positive");
  return f;
}

FunctionClass power_of(const FunctionClass& f, const Rational& c) {
  if (c.num <= 0) throw std::domain_error("powers must be positive");
  if (f.tower >= 1) return f;  // (exp^n(x^a))^c ~ exp^n(x^a)
  return FunctionClass::poly(f.inner * c);
}

FunctionClass compose(const FunctionClass& f, const FunctionClass& g) {
  if (g.tower == 0)
    return normalize(FunctionClass{f.tower, f.inner * g.inner});
  // Inner towers swallow the outer exponent up to coarse equivalence.
  return normalize(FunctionClass{f.tower + g.tower, g.inner});
}

FunctionClass product_absorb(const FunctionClass& f, const FunctionClass& g) {
  if (f.tower == 0 && g.tower == 0)
    return FunctionClass::poly(f.inner + g.inner);
  if (f.tower == 0) return g;
  if (g.tower == 0) return f;
  if (f.tower != g.tower) return f.tower > g.tower ? f : g;
  return f.inner.value() >= g.inner.value() ? f : g;
}

std::vector<DehnTableRow> derive_table(int max_n) {
  std::vector<DehnTableRow> rows;
  FunctionClass h0 = FunctionClass::poly(Rational(1));
  rows.push_back({LevelTag::H(0), h0,
                  "base: two-factor product group, delta^(2) ~ x", "x"});
  // The area-distortion bound (beta x e^sqrt(beta x))^2, normalized.
  FunctionClass esqrt = FunctionClass::exp_tower(1, Rational(1, 2));
  FunctionClass h_aud = power_of(
      product_absorb(FunctionClass::poly(Rational(1)), esqrt), Rational(2));
  FunctionClass edge_square = FunctionClass::poly(Rational(2));

  FunctionClass current = h0;
  for (int n = 0; n <= max_n; ++n) {
    if (n >= 1) {
      FunctionClass arg = product_absorb(FunctionClass::poly(Rational(1)), h_aud);
      FunctionClass hn = compose(current, arg);
      rows.push_back({LevelTag::H(n), hn,
                      "wings: delta(H_n) <= f(x h(x)), h = (b x e^sqrt(b x))^2",
                      "compose(" + current.render() + ", x*(x e^sqrt(x))^2)"});
      current = hn;
    }
    FunctionClass gn = compose(current, edge_square);
    rows.push_back({LevelTag::G(n), gn,
                    "cone: delta(G_n) <= f o g, edge 1-dim Dehn g = x^2",
                    "compose(" + current.render() + ", x^2)"});
    current = gn;
  }
  return rows;
}

namespace {

// value = exp^depth(top); normalized so depth > 0 implies top > 45.
struct TowerVal {
  int depth = 0;
  double top = 0.0;
  void settle() {
    while (depth > 0 && top <= 45.0) {
      top = std::exp(top);
      --depth;
    }
  }
};

TowerVal eval_class(const FunctionClass& f, double coeff, double x) {
  TowerVal v;
  double lg = f.inner.value() * std::log(x) + std::log(coeff);
  if (lg < 690.0) {
    v = {0, std::exp(lg)};
  } else {
    v = {1, lg};
  }
  v.depth += f.tower;
  v.settle();
  return v;
}

int cmp(TowerVal a, TowerVal b) {
  a.settle();
  b.settle();
  if (a.depth != b.depth) return a.depth < b.depth ? -1 : 1;
  if (a.top == b.top) return 0;
  return a.top < b.top ? -1 : 1;
}

TowerVal scale(TowerVal a, double c) {
  a.settle();
  if (a.depth == 0) {
    a.top *= c;
  } else if (a.depth == 1) {
    a.top += std::log(c);
  }  // deeper towers absorb constants entirely
  a.settle();
  return a;
}

TowerVal add(TowerVal a, TowerVal b) {
  a.settle();
  b.settle();
  if (cmp(a, b) < 0) std::swap(a, b);
  if (a.depth == 0 && b.depth == 0) a.top += b.top;
  // otherwise the max dominates up to a bounded factor, fine for the search
  return a;
}

bool dominated(const FunctionClass& f, double cf, const FunctionClass& g,
               double cg, std::uint64_t C) {
  // Sample well past C^2 so that sqrt(Cx) cannot masquerade as x.
  double c2 = static_cast<double>(C) * static_cast<double>(C);
  for (double x : {4.0, 64.0, 1024.0, 262144.0, 4.0 * c2, 256.0 * c2,
                   16384.0 * c2}) {
    TowerVal lhs = eval_class(f, cf, x);
    TowerVal gcx = eval_class(g, cg, static_cast<double>(C) * x);
    TowerVal rhs = add(scale(gcx, static_cast<double>(C)),
                       TowerVal{0, static_cast<double>(C) * x});
    if (cmp(lhs, rhs) > 0) return false;
  }
  return true;
}

}  // namespace

EquivalenceResult equivalence_witness_scaled(const FunctionClass& f, double cf,
                                             const FunctionClass& g, double cg) {
  EquivalenceResult res;
  for (int e = 0; e <= 20; ++e) {
    std::uint64_t C = std::uint64_t{1} << e;
    if (dominated(f, cf, g, cg, C) && dominated(g, cg, f, cf, C)) {
      res.equivalent = true;
      res.witness_C = C;
      return res;
    }
  }
  res.equivalent = false;
  return res;
}

EquivalenceResult equivalence_witness(const FunctionClass& f,
                                      const FunctionClass& g) {
  EquivalenceResult numeric = equivalence_witness_scaled(f, 1.0, g, 1.0);
  bool forms_equal = normalize(f) == normalize(g);
  if (numeric.equivalent != forms_equal) {
    // Sampling is only a sanity layer; never contradict the normal forms.
    numeric.conclusive = false;
    numeric.equivalent = forms_equal;
    if (forms_equal && numeric.witness_C == 0) numeric.witness_C = 1;
  }
  return numeric;
}

}  // namespace dehn
