#include "dehn/presentations.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <mutex>

#include "dehn/growth.hpp"

namespace dehn {

LevelTag LevelTag::parse(const std::string& s) {
  if (s.size() < 2 || (s[0] != 'H' && s[0] != 'G'))
    throw ParseError("level wants H<n> or G<n>, got: " + s);
  LevelTag tag;
  tag.kind = s[0] == 'H' ? Kind::H : Kind::G;
  tag.n = std::stoi(s.substr(1));
  if (tag.n < 0) throw ParseError("negative level: " + s);
  return tag;
}

std::optional<LevelTag> LevelTag::predecessor() const {
  if (kind == Kind::G) return LevelTag::H(n);
  if (n == 0) return std::nullopt;
  return LevelTag::G(n - 1);
}

std::string LevelTag::render() const {
  return (kind == Kind::H ? "H" : "G") + std::to_string(n);
}

std::string to_string(RelatorKind k) {
  switch (k) {
    case RelatorKind::BaseCommutator: return "base_commutator";
    case RelatorKind::HnnConjugation: return "hnn_conjugation";
    case RelatorKind::DiagConjugation: return "diag_conjugation";
    case RelatorKind::WingConjugation: return "wing_conjugation";
    case RelatorKind::WingCommutation: return "wing_commutation";
    case RelatorKind::SubdivisionSquare: return "subdivision_square";
  }
  return "?";
}

Word canonical_relator(const Word& w) {
  // Cyclic reduction.
  std::vector<Generator> v = w.letters();
  while (v.size() >= 2 && v.front().is_inverse_of(v.back())) {
    v.erase(v.begin());
    v.pop_back();
  }
  if (v.empty()) return Word();
  auto min_rotation = [](const std::vector<Generator>& seq) {
    std::vector<Generator> best = seq;
    std::vector<Generator> rot = seq;
    for (std::size_t i = 1; i < seq.size(); ++i) {
      std::rotate(rot.begin(), rot.begin() + 1, rot.end());
      if (std::lexicographical_compare(rot.begin(), rot.end(), best.begin(),
                                       best.end()))
        best = rot;
    }
    return best;
  };
  std::vector<Generator> inv;
  inv.reserve(v.size());
  for (auto it = v.rbegin(); it != v.rend(); ++it) inv.push_back(it->inverse());
  std::vector<Generator> b1 = min_rotation(v);
  std::vector<Generator> b2 = min_rotation(inv);
  const std::vector<Generator>& best =
      std::lexicographical_compare(b2.begin(), b2.end(), b1.begin(), b1.end())
          ? b2
          : b1;
  Word out;
  // Already cyclically reduced, no further free reduction possible.
  out = Word(best);
  assert(out.size() == best.size());
  return out;
}

std::vector<BasisVector> build_L(int n) {
  if (n < 1) throw IndexOutOfRange("build_L wants n >= 1");
  std::vector<BasisVector> list = {BasisVector::y(), BasisVector::y()};
  for (int m = 2; m <= n; ++m) {
    int block = 1 << (m - 2);  // 2^(m-2) slots at level m-2
    for (int j = 1; j <= block; ++j) list.push_back(BasisVector::a(m - 2, j));
    for (int j = 1; j <= block; ++j)
      list.push_back(BasisVector::diagonal(m - 2, j));
  }
  assert(static_cast<int>(list.size()) == (1 << n));
  return list;
}

namespace {

int slots_at_level(int level) { return level == 0 ? 2 : (1 << level); }

Word phi_image_expanded(const BasisVector& v, int coord) {
  if (v.kind == BasisVector::Kind::UMinusOne)
    throw IndexOutOfRange("phi image of u[-1] is not needed as a unit");
  Word img = Substitution::phi().apply(Word({v.coord_letter(coord)}));
  return expand_diagonals(img);
}

Word commutator(const Word& g, const Word& h) {
  return g * h * g.inverse() * h.inverse();
}

}  // namespace

std::size_t Presentation::count(RelatorKind k) const {
  std::size_t c = 0;
  for (const auto& r : classified_)
    if (r.kind == k) ++c;
  return c;
}

bool Presentation::declares(const Generator& g) const {
  Generator pos = g;
  pos.sign = 1;
  return edge_alphabet_.count(pos) > 0;
}

namespace {

void push_relator(RelatorKind kind, const Word& raw, std::set<Word>* rels,
                  std::vector<Relator>* classified) {
  Word canon = canonical_relator(expand_diagonals(raw));
  if (canon.empty()) return;  // freely trivial: a subdivision cell, not a relator
  if (rels->insert(canon).second) classified->push_back({kind, canon});
}

}  // namespace

// The builder reaches into Presentation via friendship.
Presentation build_group(const LevelTag& level, const Config& cfg) {
  static std::mutex mu;
  static std::map<std::pair<int, int>, Presentation> cache;
  if (level.n < 0 || level.n > cfg.max_level_depth)
    throw DepthExceeded("level " + level.render() + " beyond configured depth " +
                        std::to_string(cfg.max_level_depth));
  auto key = std::make_pair(level.n, level.kind == LevelTag::Kind::H ? 0 : 1);
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(key);
    if (it != cache.end()) return it->second;
  }

  Presentation p;
  p.level_ = level;
  auto& gens = p.generators_;
  auto& alphabet = p.edge_alphabet_;
  auto& rels = p.relators_;
  auto& classified = p.classified_;
  auto& edges = p.edge_groups_;

  auto add = [&](RelatorKind kind, const Word& raw) {
    push_relator(kind, raw, &rels, &classified);
  };

  if (level.kind == LevelTag::Kind::H && level.n == 0) {
    for (int i = 1; i <= 2; ++i)
      for (int c = 1; c <= 2; ++c) gens.insert(gen_a(0, i, c));
    gens.insert(gen_y(1));
    gens.insert(gen_y(2));
    std::vector<std::vector<Word>> factors = {
        {Word({gen_a(0, 1, 1)}), Word({gen_a(0, 1, 2)})},
        {Word({gen_a(0, 2, 1)}), Word({gen_a(0, 2, 2)})},
        {Word({gen_y(1)}), Word({gen_y(2)})}};
    for (std::size_t f1 = 0; f1 < factors.size(); ++f1)
      for (std::size_t f2 = f1 + 1; f2 < factors.size(); ++f2)
        for (const auto& g : factors[f1])
          for (const auto& h : factors[f2])
            add(RelatorKind::BaseCommutator, commutator(g, h));
    alphabet = gens;
  } else {
    Presentation base = build_group(*level.predecessor(), cfg);
    gens = base.generators_;
    alphabet = base.edge_alphabet_;
    rels = base.relators_;
    classified = base.classified_;

    int n = level.n;
    if (level.kind == LevelTag::Kind::G) {
      for (int k = 1; k <= 2; ++k) gens.insert(gen_u(n, k));

      std::vector<BasisVector> basis;
      if (n == 0) {
        basis = {BasisVector::a(0, 1), BasisVector::a(0, 2)};
      } else {
        for (int j = 1; j <= slots_at_level(n); ++j)
          basis.push_back(BasisVector::a(n, j));
        basis.push_back(BasisVector::u(n - 1));
      }
      for (int k = 1; k <= 2; ++k) {
        Word t({gen_u(n, k)});
        for (const auto& v : basis)
          for (int c = 1; c <= 2; ++c)
            add(RelatorKind::HnnConjugation,
                t * v.coord_word(c) * t.inverse() *
                    phi_image_expanded(v, c).inverse());
      }
      if (n >= 1) {
        // Conjugation cells over the diagonal edges of the edge subcomplex.
        for (int k = 1; k <= 2; ++k) {
          Word t({gen_u(n, k)});
          for (int j = 1; j <= slots_at_level(n); ++j) {
            BasisVector d = BasisVector::diagonal(n, j);
            for (int c = 1; c <= 2; ++c)
              add(RelatorKind::DiagConjugation,
                  t * d.coord_word(c) * t.inverse() *
                      phi_image_expanded(d, c).inverse());
          }
        }
      }
      EdgeGroupDescriptor e;
      e.kind = EdgeGroupDescriptor::Kind::ProductF2kxF2;
      if (n == 0) {
        e.free_factors = {BasisVector::a(0, 1), BasisVector::a(0, 2)};
        e.center = BasisVector::u_minus_one();
      } else {
        for (int j = 1; j <= slots_at_level(n); ++j)
          e.free_factors.push_back(BasisVector::a(n, j));
        e.center = BasisVector::u(n - 1);
      }
      edges = {e};
    } else {
      // H_n, n >= 1: attach suspended wings.
      int half = 1 << (n - 1);
      auto Ln = build_L(n);
      auto Lnext = build_L(n + 1);
      for (int i = 1; i <= (1 << n); ++i)
        for (int j = 1; j <= 2; ++j) gens.insert(gen_a(n, i, j));
      for (int i = 1; i <= (1 << n); ++i)
        for (int ia = 1; ia <= 2; ++ia)
          for (int iu = 1; iu <= 2; ++iu)
            alphabet.insert(gen_d(n, i, ia, iu));

      edges.clear();
      for (int i = 1; i <= (1 << n); ++i) {
        BasisVector fpart = i <= half ? BasisVector::a(n - 1, i)
                                      : BasisVector::diagonal(n - 1, i - half);
        BasisVector ell = Ln[i - 1];
        for (int j = 1; j <= 2; ++j) {
          Word t({gen_a(n, i, j)});
          for (int c = 1; c <= 2; ++c)
            add(RelatorKind::WingConjugation,
                t * fpart.coord_word(c) * t.inverse() *
                    phi_image_expanded(fpart, c).inverse());
          for (int k = 1; k <= 2; ++k) {
            add(RelatorKind::WingCommutation,
                commutator(t, Word({gen_u(n - 1, k)})));
            add(RelatorKind::WingCommutation, commutator(t, ell.coord_word(k)));
          }
        }
        EdgeGroupDescriptor e;
        e.kind = EdgeGroupDescriptor::Kind::SemidirectF2byF4;
        e.a_basis = fpart;
        e.f4_basis = {BasisVector::u(n - 1), ell};
        e.index = i;
        edges.push_back(e);
      }
      // New 2-cells of the subdivision: [u[n-1]^-1 a[n][j], L_{n+1}(j+2^n)].
      for (int j = 1; j <= (1 << n); ++j) {
        BasisVector d = BasisVector::diagonal(n, j);
        BasisVector ell = Lnext[(j + (1 << n)) - 1];
        for (int c = 1; c <= 2; ++c)
          for (int k = 1; k <= 2; ++k)
            add(RelatorKind::SubdivisionSquare,
                commutator(d.coord_word(c), ell.coord_word(k)));
      }
      // Descriptors are per-level; the base level's are not carried forward.
    }
    for (const auto& g : gens) alphabet.insert(g);
  }

  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(key);
  if (it == cache.end()) it = cache.emplace(key, std::move(p)).first;
  return it->second;
}

bool is_relator(const Presentation& p, const Word& w) {
  Word expanded = expand_diagonals(w);
  Word canon = canonical_relator(expanded);
  if (canon.empty()) return true;  // subdivision triangle or trivial cell
  return p.relators().count(canon) > 0;
}

namespace {

bool in_tracks(const Word& w, const std::set<Track>& allowed) {
  for (const auto& t : w.tracks())
    if (!allowed.count(t)) return false;
  return true;
}

}  // namespace

std::optional<Word> edge_group_membership(const EdgeGroupDescriptor& e,
                                          const Word& v,
                                          const BasisVector& target) {
  if (e.kind != EdgeGroupDescriptor::Kind::ProductF2kxF2)
    throw UsageError("membership is defined for product-kind edge groups");

  std::set<Track> a_tracks;
  for (const auto& f : e.free_factors)
    a_tracks.insert({f.family, f.level, f.slot});
  bool has_center_track =
      e.center && e.center->kind == BasisVector::Kind::Plain;
  std::set<Track> all = a_tracks;
  if (has_center_track)
    all.insert({e.center->family, e.center->level, e.center->slot});
  if (!in_tracks(v, all)) return std::nullopt;

  // The retraction of Property 2.
  Word image;
  if (target.kind == BasisVector::Kind::Plain) {
    if (std::find(e.free_factors.begin(), e.free_factors.end(), target) ==
        e.free_factors.end())
      throw UsageError("target is not a free factor of this edge group");
    Track tt{target.family, target.level, target.slot};
    image = v.project(tt);
  } else if (target.kind == BasisVector::Kind::Diagonal) {
    // a[n-1][i] -> u[n-2]^-1 a[n-1][i], other factors and the center -> 1.
    BasisVector plain = BasisVector::a(target.level, target.slot);
    if (std::find(e.free_factors.begin(), e.free_factors.end(), plain) ==
        e.free_factors.end())
      throw UsageError("diagonal target has no matching free factor");
    std::vector<Generator> out;
    for (const auto& g : v.letters()) {
      if (g.family == Family::A && g.level == target.level &&
          g.slot == target.slot) {
        Word cw = target.coord_word(g.coord);
        Word piece = g.sign > 0 ? cw : cw.inverse();
        for (const auto& x : piece.letters()) out.push_back(x);
      }
      // everything else retracts to 1
    }
    image = Word(std::move(out));
  } else {
    throw UsageError("unsupported membership target");
  }

  // Verify v = image in E via the direct-product normal form.
  auto project_join = [](const Word& w, const std::set<Track>& tracks) {
    std::vector<Generator> kept;
    for (const auto& g : w.letters())
      if (tracks.count(Track{g.family, g.level, g.slot})) kept.push_back(g);
    return Word(std::move(kept));
  };
  if (has_center_track) {
    Track ct{e.center->family, e.center->level, e.center->slot};
    if (project_join(v, a_tracks) != project_join(image, a_tracks))
      return std::nullopt;
    if (v.project(ct) != image.project(ct)) return std::nullopt;
  } else {
    // G_0's edge group: two direct free factors, compare per track.
    for (const auto& f : e.free_factors) {
      Track ft{f.family, f.level, f.slot};
      if (v.project(ft) != image.project(ft)) return std::nullopt;
    }
  }
  return image;
}

}  // namespace dehn
