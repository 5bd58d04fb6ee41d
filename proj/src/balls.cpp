#include "dehn/balls.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dehn/growth.hpp"

namespace dehn {

std::string WordSchema::render() const {
  std::ostringstream os;
  switch (family) {
    case Family::U: os << "u[" << level << "][.]"; break;
    case Family::A: os << "a[" << level << "][" << slot << "][.]"; break;
    default: os << "?"; break;
  }
  os << "^" << (positive ? "" : "-");
  if (scale_k >= 0)
    os << "w_" << scale_k << "(" << scale_r << ")";
  else
    os << length.to_string();
  return os.str();
}

BigInt delta_area(const DeltaSpec& s, const Config& cfg) {
  BigInt side = GrowthTable::instance().w(s.k, s.r, cfg);
  BigInt sqr = side * side;
  return s.n == 0 ? sqr : BigInt(2) * sqr;
}

BigInt theta_area(const ThetaSpec& s, const Config& cfg) {
  BigInt m = GrowthTable::instance().w(s.k, s.r, cfg);
  if (!m.fits_u64() || m.to_u64() > cfg.w_index_cap)
    throw BudgetExceeded("theta area needs geometric sums at index " +
                         m.to_string());
  std::uint64_t mm = m.to_u64();
  return BigInt(2) * geometric_sum(mm - 1) +
         GrowthTable::instance().phi_length_big(m, cfg);
}

namespace {

BigInt floor_div_min1(const BigInt& a, std::uint64_t d) {
  BigInt q = a / BigInt(d);
  return q.is_zero() ? BigInt(1) : q;
}

// Expected length is w_{want_k}(want_r), materialized only when needed.
void check_acting(const WordSchema& acting, Family fam, int level, int slot,
                  int want_k, int want_r, const Config& cfg) {
  if (acting.family != fam)
    throw SchemaMismatch("acting word family does not match the move");
  if (acting.level != level)
    throw SchemaMismatch("acting word level " + std::to_string(acting.level) +
                         ", move wants " + std::to_string(level));
  if (slot != 0 && acting.slot != 0 && acting.slot != slot)
    throw SchemaMismatch("acting word slot does not match the target");
  if (!acting.positive)
    throw SchemaMismatch("acting word must be positive");
  if (acting.scale_k >= 0) {
    if (acting.scale_k != want_k || acting.scale_r != want_r)
      throw SchemaMismatch("acting word scale w_" +
                           std::to_string(acting.scale_k) + "(" +
                           std::to_string(acting.scale_r) + "), move wants w_" +
                           std::to_string(want_k) + "(" +
                           std::to_string(want_r) + ")");
    return;
  }
  BigInt expected = GrowthTable::instance().w(want_k, want_r, cfg);
  if (acting.length != expected)
    throw SchemaMismatch("acting word length " + acting.length.to_string() +
                         ", move wants " + expected.to_string());
}

}  // namespace

TypeIIResult type_ii_move(const DeltaPiece& target, const MoveRecord& move,
                          IdGen& ids, const Config& cfg, bool want_volume) {
  const DeltaSpec& s = target.spec;
  if (move.type != MoveType::II) throw SchemaMismatch("wrong move type");
  if (s.k < 1)
    throw SchemaMismatch("type II wants a delta at rendering k >= 1");
  check_acting(move.acting, Family::U, s.n, 0, s.k - 1, s.r, cfg);

  TypeIIResult out;
  for (auto& c : out.corner_sites) c = ids.fresh();
  // Trapezoid halves over the four sides [b_i, d_i, d_j, b_j]; the halves
  // become thetas of the next generation at rendering k-1. At level 0 the
  // grid sides alternate between the two base letters instead.
  int top = 1 << s.n;
  std::array<int, 4> theta_slots = s.n == 0
                                       ? std::array<int, 4>{1, 2, 1, 2}
                                       : std::array<int, 4>{s.i, s.i + top,
                                                            s.j + top, s.j};
  for (int z = 0; z < 4; ++z) {
    HalfTheta h{s.n, theta_slots[z], s.k - 1, s.r, target.flank_strips[z],
                out.corner_sites[(z + 3) % 4], out.corner_sites[z]};
    out.halves.push_back(h);
  }
  out.new_cell_id = ids.fresh();
  if (want_volume) {
    out.area_removed = delta_area(s, cfg);
    out.volume = floor_div_min1(out.area_removed, 9);
  }
  return out;
}

TypeIResult type_i_move(const ThetaPiece& target, const MoveRecord& move,
                        IdGen& ids, const Config& cfg, bool want_volume) {
  const ThetaSpec& s = target.spec;
  if (move.type != MoveType::I) throw SchemaMismatch("wrong move type");
  check_acting(move.acting, Family::A, s.n + 1, s.i, s.k, s.r, cfg);

  TypeIResult out;
  // Four strips: two lateral (flanking the upper pair and the lower pair of
  // u-loci) and two longitudinal (flanking upper/lower pairs crosswise).
  StripPiece sA{ids.fresh(), s.k, s.r};  // diagonal-sided, upper
  StripPiece sB{ids.fresh(), s.k, s.r};  // diagonal-sided, lower
  StripPiece sC{ids.fresh(), s.k, s.r};  // letter-sided, left
  StripPiece sD{ids.fresh(), s.k, s.r};  // letter-sided, right
  out.strips = {sA, sB, sC, sD};
  std::array<std::pair<std::uint64_t, std::uint64_t>, 4> strip_of = {
      std::make_pair(sC.id, sA.id),   // upper-left: horiz sC, diag sA
      std::make_pair(sD.id, sA.id),   // upper-right
      std::make_pair(sC.id, sB.id),   // lower-left
      std::make_pair(sD.id, sB.id)};  // lower-right
  for (int z = 0; z < 4; ++z) {
    HalfDelta h{s.n + 1, s.i,           s.k, s.r, target.u_sites[z],
                strip_of[z].first, strip_of[z].second};
    out.halves.push_back(h);
    out.corner_sites[z] = target.u_sites[z];
  }
  out.new_cell_id = ids.fresh();
  if (want_volume) {
    // Central strip has length w_{k+1}(r); one 3-cell per three 2-cells.
    BigInt central = GrowthTable::instance().w(s.k + 1, s.r, cfg);
    out.volume = floor_div_min1(central, 3);
  }
  return out;
}

SlabInfo build_slab(int k, int r, const Config& cfg) {
  if (k < 0 || r < 1) throw IndexOutOfRange("slab wants k >= 0, r >= 1");
  BigInt side = GrowthTable::instance().w(k + 1, r, cfg);
  SlabInfo info;
  info.reference = side * side;
  // The product cell structure has one 3-cell per grid square; the level-0
  // grid carries no diagonal subdivision, so the count is the reference.
  info.exact_cells = info.reference;
  return info;
}

std::vector<InventoryPieceRow> Inventory::rows() const {
  std::vector<InventoryPieceRow> out;
  std::map<std::string, std::size_t> index;
  auto bump = [&](const std::string& kind, const DiagramSpec& spec,
                  const BigInt& area_each) {
    auto it = index.find(kind);
    if (it == index.end()) {
      index[kind] = out.size();
      out.push_back({kind, spec, 1, area_each});
    } else {
      ++out[it->second].count;
    }
  };
  for (const auto& d : deltas) {
    std::ostringstream key;
    key << "delta(n=" << d.spec.n << ",k=" << d.spec.k << ",r=" << d.spec.r
        << ")";
    bump(key.str(), d.spec, delta_area(d.spec));
  }
  for (const auto& t : thetas) {
    std::ostringstream key;
    key << "theta(n=" << t.spec.n << ",k=" << t.spec.k << ",r=" << t.spec.r
        << ")";
    bump(key.str(), t.spec, theta_area(t.spec));
  }
  for (const auto& st : strips) {
    std::ostringstream key;
    key << "strip(w_" << st.scale_k << "(" << st.r << ")x1)";
    BigInt len = GrowthTable::instance().w(st.scale_k, st.r);
    bump(key.str(), StripSpec{len.fits_u64() ? len.to_u64() : 0, "move strip"},
         len);
  }
  if (single_cells > 0) {
    out.push_back({"cell", SingleCellSpec{"commutation square"}, single_cells,
                   BigInt(1)});
  }
  return out;
}

Inventory build_sphere(const LevelTag& level, int r, bool want_volume,
                       const Config& cfg) {
  if (r < 1) throw IndexOutOfRange("sphere wants r >= 1");
  if (level.n > cfg.max_level_depth)
    throw DepthExceeded("sphere level beyond configured depth");
  bool is_g = level.kind == LevelTag::Kind::G;
  if (!is_g && level.n < 1)
    throw IndexOutOfRange("sphere families start at G0 and H1");
  int n = level.n;
  int stages = is_g ? 2 * n + 1 : 2 * n;
  int slab_scale = is_g ? n + 1 : n;

  IdGen ids;
  Inventory inv;
  inv.level = level;
  inv.r = r;

  // Slab boundary: two level-0 faces sharing the four band strips.
  std::vector<StripPiece> strips;
  for (int z = 0; z < 4; ++z) strips.push_back({ids.fresh(), slab_scale, r});
  std::vector<DeltaPiece> deltas;
  for (int f = 0; f < 2; ++f) {
    DeltaPiece p;
    p.id = ids.fresh();
    p.spec = DeltaSpec{0, 1, 2, slab_scale, r};
    p.flank_strips = {strips[0].id, strips[1].id, strips[2].id, strips[3].id};
    deltas.push_back(p);
  }
  std::vector<ThetaPiece> thetas;
  std::uint64_t cells = 0;
  BigInt volume;
  if (want_volume) {
    BigInt side = GrowthTable::instance().w(slab_scale, r, cfg);
    inv.slab_reference = side * side;
    volume = *inv.slab_reference;
  }

  for (int t = 1; t <= stages; ++t) {
    bool type_two = (t % 2) == 1;
    if (type_two) {
      // Every delta is covered; trapezoid halves pair across the strips.
      std::map<std::uint64_t, std::vector<HalfTheta>> by_strip;
      for (const auto& p : deltas) {
        MoveRecord rec;
        rec.type = MoveType::II;
        rec.target_id = p.id;
        rec.acting.family = Family::U;
        rec.acting.level = p.spec.n;
        rec.acting.scale_k = p.spec.k - 1;
        rec.acting.scale_r = r;
        TypeIIResult res = type_ii_move(p, rec, ids, cfg, want_volume);
        if (want_volume) volume += res.volume;
        ++cells;
        for (const auto& h : res.halves) by_strip[h.strip_site].push_back(h);
      }
      std::map<std::uint64_t, StripPiece> strip_by_id;
      for (const auto& s : strips) strip_by_id[s.id] = s;
      if (by_strip.size() != strips.size())
        throw std::logic_error("type II halves do not cover the strips");
      std::vector<ThetaPiece> next;
      for (auto& [sid, halves] : by_strip) {
        if (halves.size() != 2)
          throw std::logic_error("strip not shared by exactly two halves");
        if (halves[0].i != halves[1].i || halves[0].k != halves[1].k)
          throw std::logic_error("mismatched theta halves");
        if (!strip_by_id.count(sid))
          throw std::logic_error("halves reference an unknown strip");
        ThetaPiece q;
        q.id = ids.fresh();
        q.spec = ThetaSpec{halves[0].n, halves[0].i, halves[0].k, r};
        q.u_sites = {halves[0].corner_a, halves[0].corner_b, halves[1].corner_a,
                     halves[1].corner_b};
        next.push_back(q);
      }
      deltas.clear();
      strips.clear();
      thetas = std::move(next);
    } else {
      // Type I on every theta; staircase halves pair along the u-loci.
      std::map<std::uint64_t, std::vector<HalfDelta>> by_site;
      std::vector<StripPiece> new_strips;
      for (const auto& q : thetas) {
        MoveRecord rec;
        rec.type = MoveType::I;
        rec.target_id = q.id;
        rec.acting.family = Family::A;
        rec.acting.level = q.spec.n + 1;
        rec.acting.slot = q.spec.i;
        rec.acting.scale_k = q.spec.k;
        rec.acting.scale_r = r;
        TypeIResult res = type_i_move(q, rec, ids, cfg, want_volume);
        if (want_volume) volume += res.volume;
        ++cells;
        for (const auto& s : res.strips) new_strips.push_back(s);
        for (const auto& h : res.halves) by_site[h.u_site].push_back(h);
      }
      std::vector<DeltaPiece> next;
      for (auto& [site, halves] : by_site) {
        if (halves.size() != 2)
          throw std::logic_error("u-locus not shared by exactly two halves");
        DeltaPiece p;
        p.id = ids.fresh();
        p.spec = DeltaSpec{halves[0].n, halves[0].i, halves[1].i, halves[0].k, r};
        p.flank_strips = {halves[0].strip_horiz, halves[0].strip_diag,
                          halves[1].strip_diag, halves[1].strip_horiz};
        next.push_back(p);
      }
      thetas.clear();
      deltas = std::move(next);
      strips.insert(strips.end(), new_strips.begin(), new_strips.end());
    }
  }

  inv.single_cells = cells;
  inv.area = BigInt(cells);
  if (is_g) {
    if (!strips.empty())
      throw std::logic_error("a G-level sphere should absorb all strips");
    for (const auto& q : thetas) inv.area += theta_area(q.spec, cfg);
  } else {
    for (const auto& p : deltas) inv.area += delta_area(p.spec, cfg);
    for (const auto& s : strips)
      inv.area += GrowthTable::instance().w(s.scale_k, s.r, cfg);
  }
  inv.deltas = std::move(deltas);
  inv.thetas = std::move(thetas);
  inv.strips = std::move(strips);
  for (const auto& p : inv.deltas) inv.attach_sites.push_back(p.id);
  for (const auto& q : inv.thetas) inv.attach_sites.push_back(q.id);
  if (want_volume) inv.volume_lower = volume;
  return inv;
}

// ---------------------------------------------------------------------------
// Explicit realizations.

namespace {

int lune_letter_slot(int c) { return c % 2 == 0 ? 1 : 2; }
int lune_sign(int c) { return c < 2 ? 1 : -1; }

// Conjugation row: faces between a short word path and its phi image,
// u-edges pointing from the long row toward the short row.
void add_conjugation_row(CellComplex& cx, const std::vector<int>& top,
                         const Word& top_word, const std::vector<int>& bottom,
                         const Generator& u) {
  std::vector<std::size_t> cuts(top_word.size() + 1);
  cuts[0] = 0;
  for (std::size_t s = 0; s < top_word.size(); ++s)
    cuts[s + 1] = cuts[s] + Substitution::phi().apply(Word({top_word[s]})).size();
  if (cuts.back() + 1 != bottom.size())
    throw std::logic_error("conjugation row misaligned");
  std::vector<int> uedges(top_word.size() + 1);
  for (std::size_t s = 0; s < uedges.size(); ++s)
    uedges[s] = cx.ensure_edge(bottom[cuts[s]], top[s], u);
  for (std::size_t s = 0; s < top_word.size(); ++s) {
    Word img = Substitution::phi().apply(Word({top_word[s]}));
    std::vector<int> cell;
    cell.push_back(-(uedges[s] + 1));
    for (std::size_t q = cuts[s]; q < cuts[s + 1]; ++q) {
      const Generator& lab = img[q - cuts[s]];
      int e = lab.sign > 0 ? cx.ensure_edge(bottom[q], bottom[q + 1], lab)
                           : cx.ensure_edge(bottom[q + 1], bottom[q], lab.inverse());
      cell.push_back(lab.sign > 0 ? e + 1 : -(e + 1));
    }
    cell.push_back(uedges[s + 1] + 1);
    const Generator& tl = top_word[s];
    int te = tl.sign > 0 ? cx.ensure_edge(top[s], top[s + 1], tl)
                         : cx.ensure_edge(top[s + 1], top[s], tl.inverse());
    cell.push_back(tl.sign > 0 ? -(te + 1) : (te + 1));
    cx.add_face(cell);
  }
}

CellComplex realize_g0(int r) {
  CellComplex cx(Topology::Sphere);
  // Ring rows per hemisphere: 4 corner chains plus per-lune interiors.
  // corners[h][t][kappa]; interiors[h][t][c] with L(t)-1 vertices.
  std::vector<std::vector<std::array<int, 4>>> corners(
      2, std::vector<std::array<int, 4>>(r + 1));
  std::vector<std::vector<std::array<std::vector<int>, 4>>> interiors(
      2, std::vector<std::array<std::vector<int>, 4>>(r + 1));
  for (int h = 0; h < 2; ++h)
    for (int t = 0; t <= r; ++t) {
      for (int k = 0; k < 4; ++k) corners[h][t][k] = cx.add_vertex();
      std::uint64_t len = phi_length(t).to_u64();
      for (int c = 0; c < 4; ++c)
        for (std::uint64_t q = 1; q < len; ++q)
          interiors[h][t][c].push_back(cx.add_vertex());
    }
  auto path = [&](int h, int t, int c) {
    int start = lune_sign(c) > 0 ? c : (c + 1) % 4;
    int end = lune_sign(c) > 0 ? (c + 1) % 4 : c;
    std::vector<int> p;
    p.push_back(corners[h][t][start]);
    for (int v : interiors[h][t][c]) p.push_back(v);
    p.push_back(corners[h][t][end]);
    return p;
  };
  auto lune_word = [&](int t, int c) {
    return apply_phi(Word({gen_a(0, lune_letter_slot(c), 1)}), t);
  };

  // Caps: the row-0 edges around each pole form a commutator square.
  for (int h = 0; h < 2; ++h) {
    std::array<int, 4> E;
    for (int c = 0; c < 4; ++c) {
      auto p = path(h, 0, c);
      E[c] = cx.ensure_edge(p[0], p[1], gen_a(0, lune_letter_slot(c), 1));
    }
    cx.add_face({E[0] + 1, E[1] + 1, -(E[2] + 1), -(E[3] + 1)});
  }
  // Trapezoid rows.
  for (int h = 0; h < 2; ++h)
    for (int c = 0; c < 4; ++c)
      for (int t = 1; t <= r; ++t)
        add_conjugation_row(cx, path(h, t - 1, c), lune_word(t - 1, c),
                            path(h, t, c), gen_u(0, 1));
  // Equatorial band: one commutation square per letter of each side.
  for (int c = 0; c < 4; ++c) {
    auto pn = path(0, r, c);
    auto ps = path(1, r, c);
    Word wbase = lune_word(r, c);
    std::vector<int> yedges(pn.size());
    for (std::size_t q = 0; q < pn.size(); ++q)
      yedges[q] = cx.ensure_edge(ps[q], pn[q], gen_y(1));
    for (std::size_t s = 0; s < wbase.size(); ++s) {
      const Generator& x = wbase[s];
      int en = cx.ensure_edge(pn[s], pn[s + 1], x);
      int es = cx.ensure_edge(ps[s], ps[s + 1], x);
      cx.add_face({yedges[s] + 1, en + 1, -(yedges[s + 1] + 1), -(es + 1)});
    }
  }
  return cx;
}

CellComplex realize_h1(int r) {
  CellComplex cx(Topology::Sphere);
  // Cap corners and angled-strip columns.
  // acol[h][c][side][t]: side 0 sits at ring corner c, side 1 at c+1.
  std::vector<std::array<int, 4>> cap(2);
  std::vector<std::array<std::array<std::vector<int>, 2>, 4>> acol(2);
  for (int h = 0; h < 2; ++h) {
    for (int k = 0; k < 4; ++k) cap[h][k] = cx.add_vertex();
    for (int c = 0; c < 4; ++c)
      for (int side = 0; side < 2; ++side) {
        acol[h][c][side].resize(r + 1);
        acol[h][c][side][0] = cap[h][(c + side) % 4];
        for (int t = 1; t <= r; ++t) acol[h][c][side][t] = cx.add_vertex();
      }
  }
  // Central u-columns at each ring corner; ucol[h][kappa][q], q = r is the
  // cap corner, q = 0 the equatorial end.
  std::vector<std::array<std::vector<int>, 4>> ucol(2);
  for (int h = 0; h < 2; ++h)
    for (int k = 0; k < 4; ++k) {
      ucol[h][k].resize(r + 1);
      ucol[h][k][r] = cap[h][k];
      for (int q = 0; q < r; ++q) ucol[h][k][q] = cx.add_vertex();
    }

  auto g_letter = [&](int c) { return gen_a(0, lune_letter_slot(c), 1); };
  auto b_letter = [&](int c) { return gen_a(1, lune_letter_slot(c), 1); };
  auto d_letter = [&](int c) { return gen_d(1, lune_letter_slot(c), 1, 1); };

  // Caps.
  for (int h = 0; h < 2; ++h) {
    std::array<int, 4> E;
    for (int c = 0; c < 4; ++c) {
      int start = lune_sign(c) > 0 ? 0 : 1;
      E[c] = cx.ensure_edge(acol[h][c][start][0], acol[h][c][1 - start][0],
                            g_letter(c));
    }
    cx.add_face({E[0] + 1, E[1] + 1, -(E[2] + 1), -(E[3] + 1)});
  }
  // Angled strips: d-edges run toward the equator, one [d, g] square per row.
  for (int h = 0; h < 2; ++h)
    for (int c = 0; c < 4; ++c) {
      int start = lune_sign(c) > 0 ? 0 : 1;
      for (int t = 1; t <= r; ++t) {
        int d0 = cx.ensure_edge(acol[h][c][start][t - 1], acol[h][c][start][t],
                                d_letter(c));
        int d1 = cx.ensure_edge(acol[h][c][1 - start][t - 1],
                                acol[h][c][1 - start][t], d_letter(c));
        int gt = cx.ensure_edge(acol[h][c][start][t - 1],
                                acol[h][c][1 - start][t - 1], g_letter(c));
        int gb = cx.ensure_edge(acol[h][c][start][t], acol[h][c][1 - start][t],
                                g_letter(c));
        cx.add_face({d0 + 1, gb + 1, -(d1 + 1), -(gt + 1)});
      }
    }

  // Staircase triangles at each ring corner; bpath[q] = V[q][0] runs from
  // the strip bottom (q = 0) to the equatorial corner vertex (q = r).
  // Returns the b-side path.
  auto build_triangle = [&](int h, int c, int kappa) {
    int side = (kappa % 4) == c ? 0 : 1;
    std::map<std::pair<int, int>, int> grid;
    for (int s = 0; s <= r; ++s)
      for (int t = 0; t <= s; ++t) {
        if (s == r)
          grid[{s, t}] = ucol[h][kappa % 4][t];
        else if (t == s)
          grid[{s, t}] = acol[h][c][side][r - s];
        else
          grid[{s, t}] = cx.add_vertex();
      }
    // note: (r, r) resolves to ucol[..][r] = cap corner = acol[..][0]
    for (int s = 0; s < r; ++s)
      for (int t = 0; t <= s; ++t) {
        int beta = cx.ensure_edge(grid[{s + 1, t}], grid[{s, t}], b_letter(c));
        int ups = cx.ensure_edge(grid[{s + 1, t}], grid[{s + 1, t + 1}],
                                 gen_u(0, 1));
        int delta = cx.ensure_edge(grid[{s + 1, t + 1}], grid[{s, t}],
                                   d_letter(c));
        cx.add_face({ups + 1, delta + 1, -(beta + 1)});
        if (t < s) {
          int ups2 =
              cx.ensure_edge(grid[{s, t}], grid[{s, t + 1}], gen_u(0, 1));
          int beta2 = cx.ensure_edge(grid[{s + 1, t + 1}], grid[{s, t + 1}],
                                     b_letter(c));
          cx.add_face({ups2 + 1, -(beta2 + 1), delta + 1});
        }
      }
    std::vector<int> bpath(r + 1);
    for (int s = 0; s <= r; ++s) bpath[s] = grid[{s, 0}];
    return bpath;
  };

  // Eight diamonds (two triangles each), eight longitudinal strips.
  for (int kappa = 0; kappa < 4; ++kappa) {
    for (int which = 0; which < 2; ++which) {
      int c = which == 0 ? (kappa + 3) % 4 : kappa;  // left lune, right lune
      auto bn = build_triangle(0, c, kappa);
      auto bs = build_triangle(1, c, kappa);
      // strip of [b, y] squares between the two b-sides
      std::vector<int> yedges(r + 1);
      for (int q = 0; q <= r; ++q)
        yedges[q] = cx.ensure_edge(bs[q], bn[q], gen_y(1));
      for (int q = 0; q < r; ++q) {
        int en = cx.ensure_edge(bn[q + 1], bn[q], b_letter(c));
        int es = cx.ensure_edge(bs[q + 1], bs[q], b_letter(c));
        cx.add_face({en + 1, -(yedges[q] + 1), -(es + 1), yedges[q + 1] + 1});
      }
    }
  }
  // Lune center cells [g, y] between the angled strips' equatorial rows.
  for (int c = 0; c < 4; ++c) {
    int start = lune_sign(c) > 0 ? 0 : 1;
    int n0 = acol[0][c][start][r], n1 = acol[0][c][1 - start][r];
    int s0 = acol[1][c][start][r], s1 = acol[1][c][1 - start][r];
    int gn = cx.ensure_edge(n0, n1, g_letter(c));
    int gs = cx.ensure_edge(s0, s1, g_letter(c));
    int y0 = cx.ensure_edge(s0, n0, gen_y(1));
    int y1 = cx.ensure_edge(s1, n1, gen_y(1));
    cx.add_face({y0 + 1, gn + 1, -(y1 + 1), -(gs + 1)});
  }
  return cx;
}

}  // namespace

CellComplex realize_explicit(const LevelTag& level, int r, const Config& cfg) {
  auto it = cfg.explicit_caps.find(level.render());
  if (it == cfg.explicit_caps.end())
    throw DepthExceeded("explicit realization supports G0 and H1 only");
  if (r < 1 || r > it->second)
    throw DepthExceeded("explicit realization capped at r <= " +
                        std::to_string(it->second));
  if (level.kind == LevelTag::Kind::G) return realize_g0(r);
  return realize_h1(r);
}

}  // namespace dehn
