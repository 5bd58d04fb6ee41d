#include "dehn/distortion.hpp"

#include <cmath>
#include <set>
#include <sstream>

#include "dehn/balls.hpp"
#include "dehn/complexes.hpp"
#include "dehn/growth.hpp"
#include "dehn/presentations.hpp"

namespace dehn {

namespace {

bool is_stable_letter(const Generator& g, int n) {
  return g.family == Family::A && g.level == n;
}

bool is_edge_letter(const Generator& g, int n) {
  if (g.family == Family::A && g.level == n - 1) return true;
  if (n >= 2 && g.family == Family::U && g.level == n - 2) return true;
  return false;
}

BasisVector target_basis(int n, int i) {
  int half = 1 << (n - 1);
  if (i < 1 || i > (1 << n))
    throw IndexOutOfRange("edge group index out of range");
  return i <= half ? BasisVector::a(n - 1, i)
                   : BasisVector::diagonal(n - 1, i - half);
}

// Positive letters of the F4 factor of Gamma_i: u[n-1] and the L_n(i) pair.
std::set<Generator> f4_letters(int n, int i) {
  std::set<Generator> out;
  out.insert(gen_u(n - 1, 1));
  out.insert(gen_u(n - 1, 2));
  BasisVector ell = build_L(n)[i - 1];
  for (int c = 1; c <= 2; ++c) {
    Word cw = ell.coord_word(c);
    for (const auto& g : cw.letters()) {
      Generator pos = g;
      pos.sign = 1;
      out.insert(pos);
    }
  }
  return out;
}

bool all_in(const Word& w, const std::set<Generator>& allowed) {
  for (const auto& g : w.letters()) {
    Generator pos = g;
    pos.sign = 1;
    if (!allowed.count(pos)) return false;
  }
  return true;
}

/// Convert an ambient word known to lie in a diagonal subgroup back into
/// diagonal letters: (u^-1 a) -> d, (a^-1 u) -> d^-1.
Word to_diag_letters(const Word& ambient, int level, int slot) {
  const auto& ls = ambient.letters();
  std::vector<Generator> out;
  for (std::size_t p = 0; p < ls.size(); p += 2) {
    if (p + 1 >= ls.size())
      throw UnsupportedPinch("odd-length word in a diagonal subgroup");
    const Generator& x = ls[p];
    const Generator& y = ls[p + 1];
    if (x.family == Family::U && x.sign < 0 && y.family == Family::A &&
        y.sign > 0 && y.level == level && y.slot == slot && x.coord == y.coord) {
      out.push_back(gen_d(level, slot, y.coord, y.coord));
    } else if (x.family == Family::A && x.sign < 0 && y.family == Family::U &&
               y.sign > 0 && x.level == level && x.slot == slot &&
               x.coord == y.coord) {
      out.push_back(gen_d(level, slot, x.coord, x.coord, -1));
    } else {
      throw UnsupportedPinch("word does not spell diagonal letters");
    }
  }
  return Word(std::move(out));
}

Word apply_phi_signed(const Word& w, int direction) {
  const Substitution& s = direction >= 0 ? Substitution::phi()
                                         : Substitution::phi_inverse();
  return s.apply(w);
}

}  // namespace

RewriteResult corridor_rewrite(const CorridorWord& x, int target_index,
                               const Config& cfg) {
  int n = x.level_n;
  if (n < 1) throw IndexOutOfRange("corridor level wants n >= 1");
  BasisVector target = target_basis(n, target_index);
  Presentation prior = build_group(LevelTag::G(n - 1), cfg);
  const EdgeGroupDescriptor& E = prior.edge_groups().at(0);
  std::set<Generator> allowed;  // schema letters besides the stable ones
  for (int i = 1; i <= (1 << n); ++i)
    for (const auto& g : f4_letters(n, i)) allowed.insert(g);
  for (const auto& f : E.free_factors)
    for (int c = 1; c <= 2; ++c) {
      Word cw = f.coord_word(c);
      for (const auto& g : cw.letters()) {
        Generator pos = g;
        pos.sign = 1;
        allowed.insert(pos);
      }
    }
  if (E.center && E.center->kind == BasisVector::Kind::Plain) {
    allowed.insert(gen_u(E.center->level, 1));
    allowed.insert(gen_u(E.center->level, 2));
  }
  for (const auto& g : x.horizontal.letters()) {
    Generator pos = g;
    pos.sign = 1;
    if (!is_stable_letter(g, n) && !allowed.count(pos))
      throw UnsupportedPinch("letter outside the corridor schema: " + g.render());
  }

  auto is_e_word = [&](const Word& v) {
    for (const auto& g : v.letters())
      if (!is_edge_letter(g, n)) return false;
    return true;
  };

  Word current = x.horizontal;
  std::size_t pinches = 0;
  for (;;) {
    const auto& ls = current.letters();
    // innermost pinch: t^e v t^-e with no level-n letters inside v
    std::optional<std::pair<std::size_t, std::size_t>> pinch;
    std::optional<std::size_t> open;
    for (std::size_t p = 0; p < ls.size(); ++p) {
      if (!is_stable_letter(ls[p], n)) continue;
      if (open && ls[*open].is_inverse_of(ls[p])) {
        pinch = {*open, p};
        break;
      }
      open = p;
    }
    if (!pinch) break;
    auto [p, q] = *pinch;
    std::vector<Generator> inner(ls.begin() + p + 1, ls.begin() + q);
    Word v{inner};
    int slot = ls[p].slot;
    int dir = ls[p].sign;  // t v t^-1 -> phi(v'); t^-1 v t -> phi^-1(v')
    BasisVector pinch_basis = target_basis(n, slot);
    Word replaced;
    if (is_e_word(v)) {
      auto vprime = edge_group_membership(E, v, pinch_basis);
      if (!vprime)
        throw UnsupportedPinch("pinched word is not in the edge subgroup");
      if (pinch_basis.kind == BasisVector::Kind::Diagonal) {
        Word diag =
            to_diag_letters(*vprime, pinch_basis.level, pinch_basis.slot);
        replaced = expand_diagonals(apply_phi_signed(diag, dir));
      } else {
        replaced = apply_phi_signed(*vprime, dir);
      }
    } else if (all_in(v, f4_letters(n, slot))) {
      replaced = v;  // the F4 factor is fixed by the wing letters
    } else {
      throw UnsupportedPinch("pinch mixes the semidirect factors");
    }
    std::vector<Generator> next(ls.begin(), ls.begin() + p);
    Word prefix{next};
    std::vector<Generator> tail(ls.begin() + q + 1, ls.end());
    current = prefix * replaced * Word{tail};
    ++pinches;
  }

  // Retraction onto the target basis: the F4 letters of the target edge
  // group die, the rest must pass the product normal-form verification.
  std::set<Generator> f4 = f4_letters(n, target_index);
  std::vector<Generator> kept;
  for (const auto& g : current.letters()) {
    Generator pos = g;
    pos.sign = 1;
    if (f4.count(pos)) continue;
    if (!is_edge_letter(g, n))
      throw UnsupportedPinch("residual letter outside the edge group: " +
                             g.render());
    kept.push_back(g);
  }
  auto y = edge_group_membership(E, Word{kept}, target);
  if (!y) throw UnsupportedPinch("rewritten word left the target subgroup");
  RewriteResult out;
  out.ambient = *y;
  out.pinches_resolved = pinches;
  out.intrinsic_length = target.kind == BasisVector::Kind::Diagonal
                             ? y->size() / 2
                             : y->size();
  // |Y| <= 3 * 3^{3 |X|}, checked on every output.
  BigInt bound(3);
  for (std::size_t i = 0; i < 3 * x.horizontal.size(); ++i) bound *= BigInt(3);
  if (BigInt(out.intrinsic_length) > bound)
    throw std::logic_error("corridor rewrite exceeded its length bound");
  return out;
}

Witness make_witness(int n, int N, const Config& cfg) {
  if (n < 1 || n > 2) throw IndexOutOfRange("witnesses wired for n in {1,2}");
  if (N < 1) throw IndexOutOfRange("witness wants N >= 1");
  ThetaSpec spec{n, 1, 0, N};
  Diagram theta = build_theta(spec, cfg);
  Witness w;
  w.boundary = boundary_word(theta.complex);
  w.sample.n = n;
  w.sample.N = N;
  // Trapezoid cells of the Theta filling inside Gamma; the full diagram adds
  // the central strip of length w_1(N).
  BigInt trap = BigInt(2) * geometric_sum(static_cast<std::uint64_t>(N) - 1);
  w.sample.area_edge_exact = trap;
  w.sample.area_theta_total = theta_area(spec, cfg);
  std::uint64_t nn = static_cast<std::uint64_t>(N);
  w.sample.area_ambient_upper = BigInt(4 * nn * nn + 4 * nn + 1);
  w.sample.log_edge = w.sample.area_edge_exact.log_natural();
  return w;
}

DistortionReport check_distortion_inequality(
    std::vector<DistortionSample>& samples) {
  if (samples.empty()) throw UsageError("no samples to check");
  DistortionReport rep;
  for (int e = 0; e <= 30; ++e) {
    std::uint64_t beta = std::uint64_t{1} << e;
    bool all = true;
    std::vector<double> slack;
    for (const auto& s : samples) {
      double lhs = s.area_edge_exact.log_natural();
      double a = s.area_ambient_upper.log_natural();
      double ba = static_cast<double>(beta) * std::exp(a);
      double rhs = 2.0 * (std::log(static_cast<double>(beta)) + a + std::sqrt(ba));
      slack.push_back(rhs - lhs);
      if (lhs > rhs) {
        all = false;
        break;
      }
    }
    if (all) {
      rep.ok = true;
      rep.beta = beta;
      rep.slack_log = std::move(slack);
      for (auto& s : samples) s.fitted_beta = beta;
      rep.note =
          "conservative check: ambient areas are upper bounds, so a pass is "
          "evidence and a fail is a construction bug";
      return rep;
    }
  }
  throw NoBetaFound("no beta <= 2^30 satisfies the distortion inequality");
}

}  // namespace dehn
