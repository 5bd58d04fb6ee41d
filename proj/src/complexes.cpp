#include "dehn/complexes.hpp"

#include <algorithm>
#include <cassert>
#include <map>
#include <sstream>
#include <stdexcept>

#include "dehn/growth.hpp"

namespace dehn {

std::string spec_name(const DiagramSpec& s) {
  std::ostringstream os;
  if (auto d = std::get_if<DeltaSpec>(&s)) {
    os << "delta(n=" << d->n << ",i=" << d->i << ",j=" << d->j << ",k=" << d->k
       << ",r=" << d->r << ")";
  } else if (auto t = std::get_if<ThetaSpec>(&s)) {
    os << "theta(n=" << t->n << ",i=" << t->i << ",k=" << t->k << ",r=" << t->r
       << ")";
  } else if (auto sl = std::get_if<SlabSpec>(&s)) {
    os << "slab(k=" << sl->k << ",r=" << sl->r << ")";
  } else if (auto st = std::get_if<StripSpec>(&s)) {
    os << "strip(len=" << st->length << "," << st->label << ")";
  } else if (auto c = std::get_if<SingleCellSpec>(&s)) {
    os << "cell(" << c->label << ")";
  }
  return os.str();
}

int CellComplex::add_vertex() {
  coords_.push_back(std::nullopt);
  return static_cast<int>(n_vertices_++);
}

int CellComplex::add_vertex(double x, double y) {
  coords_.push_back(std::make_pair(x, y));
  return static_cast<int>(n_vertices_++);
}

int CellComplex::add_edge(int src, int dst, const Generator& label) {
  edges_.push_back({src, dst, label});
  return static_cast<int>(edges_.size() - 1);
}

int CellComplex::ensure_edge(int src, int dst, const Generator& label) {
  auto key = std::make_tuple(src, dst, label);
  auto it = edge_lookup_.find(key);
  if (it != edge_lookup_.end()) return it->second;
  int id = add_edge(src, dst, label);
  edge_lookup_[key] = id;
  return id;
}

int CellComplex::add_face(const std::vector<int>& signed_edges) {
  if (signed_edges.empty()) throw std::logic_error("empty face boundary");
  auto src_of = [&](int se) {
    const Edge& e = edges_[std::abs(se) - 1];
    return se > 0 ? e.src : e.dst;
  };
  auto dst_of = [&](int se) {
    const Edge& e = edges_[std::abs(se) - 1];
    return se > 0 ? e.dst : e.src;
  };
  for (std::size_t i = 0; i < signed_edges.size(); ++i) {
    int next = signed_edges[(i + 1) % signed_edges.size()];
    if (dst_of(signed_edges[i]) != src_of(next))
      throw std::logic_error("face boundary does not close");
  }
  faces_.push_back({signed_edges});
  return static_cast<int>(faces_.size() - 1);
}

int CellComplex::add_cell3(const std::vector<int>& faces) {
  cells3_.push_back({faces});
  return static_cast<int>(cells3_.size() - 1);
}

long long CellComplex::euler_characteristic() const {
  long long chi = static_cast<long long>(n_vertices_) -
                  static_cast<long long>(edges_.size()) +
                  static_cast<long long>(faces_.size());
  if (!cells3_.empty()) chi -= static_cast<long long>(cells3_.size());
  return chi;
}

Word CellComplex::face_word(int face) const {
  std::vector<Generator> letters;
  for (int se : faces_[face].boundary) {
    const Edge& e = edges_[std::abs(se) - 1];
    letters.push_back(se > 0 ? e.label : e.label.inverse());
  }
  return Word(std::move(letters));
}

std::vector<int> CellComplex::edge_face_incidence() const {
  std::vector<int> count(edges_.size(), 0);
  for (const auto& f : faces_)
    for (int se : f.boundary) ++count[std::abs(se) - 1];
  return count;
}

namespace {

// Letter patterns for the phi-image side words. Pattern entries are the
// coordinate (1 or 2) of each letter; phi images of positive letters are
// positive, so signs are uniform.
std::vector<int> side_pattern(int k, int r, const Config& cfg) {
  if (k == 0) return std::vector<int>(static_cast<std::size_t>(r), 1);
  BigInt depth = GrowthTable::instance().w(k - 1, r, cfg);
  if (!depth.fits_u64() || depth.to_u64() > 1'000'000)
    throw BudgetExceeded("phi power too deep to materialize: " + depth.to_string());
  Word img = apply_phi(Word({gen_xi()}), static_cast<int>(depth.to_u64()), cfg);
  std::vector<int> pattern;
  pattern.reserve(img.size());
  for (const auto& g : img.letters()) pattern.push_back(g.coord);
  return pattern;
}

void check_face_budget(const BigInt& faces, const Config& cfg) {
  if (faces > BigInt(cfg.face_budget))
    throw BudgetExceeded("diagram needs " + faces.to_string() +
                         " faces, budget is " + std::to_string(cfg.face_budget));
}

// One staircase triangle of the diamond: fills B^-1 U = diagonal. Vertices
// V[s][t] with 0 <= t <= s <= m; b-edges point toward smaller s, u-edges
// toward larger t, d-edges from V[s+1][t+1] to V[s][t].
struct Staircase {
  std::map<std::pair<int, int>, int> vertex;
  std::vector<int> b_side;    // boundary, read from V[m][0] to V[0][0]
  std::vector<int> hyp;       // d-edges, read from V[m][m] to V[0][0]
};

Staircase build_staircase(CellComplex& cx, const std::vector<int>& pattern,
                          int level, int slot,
                          const std::vector<int>& shared_u_path) {
  int m = static_cast<int>(pattern.size());
  Staircase st;
  auto vid = [&](int s, int t) -> int& { return st.vertex[{s, t}]; };
  // shared_u_path holds vertex ids V[m][0..m] when gluing the second
  // triangle onto the first one's u-path.
  for (int s = 0; s <= m; ++s) {
    for (int t = 0; t <= s; ++t) {
      if (s == m && !shared_u_path.empty())
        vid(s, t) = shared_u_path[t];
      else
        vid(s, t) = cx.add_vertex(static_cast<double>(s - t),
                                  static_cast<double>(s + t));
    }
  }
  auto b_letter = [&](int s) { return gen_a(level, slot, pattern[s - 1]); };
  auto u_letter = [&](int t) { return gen_u(level - 1, pattern[t - 1]); };
  auto d_letter = [&](int s, int t) {
    return gen_d(level, slot, pattern[s - 1], pattern[t - 1]);
  };
  for (int s = 0; s < m; ++s)
    for (int t = 0; t <= s; ++t) {
      // Square (s, t): subdivided into one or two triangles.
      int beta = cx.ensure_edge(vid(s + 1, t), vid(s, t), b_letter(s + 1));
      int upsilon =
          cx.ensure_edge(vid(s + 1, t), vid(s + 1, t + 1), u_letter(t + 1));
      int delta =
          cx.ensure_edge(vid(s + 1, t + 1), vid(s, t), d_letter(s + 1, t + 1));
      cx.add_face({upsilon + 1, delta + 1, -(beta + 1)});
      if (t < s) {
        int upsilon2 = cx.ensure_edge(vid(s, t), vid(s, t + 1), u_letter(t + 1));
        int beta2 =
            cx.ensure_edge(vid(s + 1, t + 1), vid(s, t + 1), b_letter(s + 1));
        cx.add_face({upsilon2 + 1, -(beta2 + 1), delta + 1});
      }
    }
  for (int s = m; s >= 1; --s)
    st.b_side.push_back(cx.ensure_edge(st.vertex[{s, 0}], st.vertex[{s - 1, 0}],
                                       b_letter(s)));
  for (int s = m; s >= 1; --s)
    st.hyp.push_back(cx.ensure_edge(st.vertex[{s, s}], st.vertex[{s - 1, s - 1}],
                                    d_letter(s, s)));
  return st;
}

}  // namespace

Diagram build_delta(const DeltaSpec& spec, const Config& cfg) {
  if (spec.r < 1 || spec.k < 0) throw IndexOutOfRange("delta wants r >= 1, k >= 0");
  if (spec.n < 0) throw IndexOutOfRange("delta wants n >= 0");
  if (spec.n == 0) {
    if (!(spec.i == 1 && spec.j == 2))
      throw IndexOutOfRange("level-0 delta exists as delta^0_{12} only");
  } else {
    int top = 1 << spec.n;
    if (spec.i < 1 || spec.i > top || spec.j < 1 || spec.j > top)
      throw IndexOutOfRange("delta slot out of range");
  }
  std::vector<int> pattern = side_pattern(spec.k, spec.r, cfg);
  int m = static_cast<int>(pattern.size());
  BigInt faces = spec.n == 0 ? BigInt(std::uint64_t(m)) * BigInt(std::uint64_t(m))
                             : BigInt(2) * BigInt(std::uint64_t(m)) * BigInt(std::uint64_t(m));
  check_face_budget(faces, cfg);

  Diagram dia;
  dia.spec = spec;
  CellComplex& cx = dia.complex;

  if (spec.n == 0) {
    // The m x m commutator grid between the a[0][1] and a[0][2] words.
    std::vector<std::vector<int>> v(m + 1, std::vector<int>(m + 1));
    for (int x = 0; x <= m; ++x)
      for (int y = 0; y <= m; ++y) v[x][y] = cx.add_vertex(x, y);
    auto h_letter = [&](int x) { return gen_a(0, 1, pattern[x - 1]); };
    auto v_letter = [&](int y) { return gen_a(0, 2, pattern[y - 1]); };
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) {
        int e_bottom = cx.ensure_edge(v[x][y], v[x + 1][y], h_letter(x + 1));
        int e_right = cx.ensure_edge(v[x + 1][y], v[x + 1][y + 1], v_letter(y + 1));
        int e_top = cx.ensure_edge(v[x][y + 1], v[x + 1][y + 1], h_letter(x + 1));
        int e_left = cx.ensure_edge(v[x][y], v[x][y + 1], v_letter(y + 1));
        cx.add_face({e_bottom + 1, e_right + 1, -(e_top + 1), -(e_left + 1)});
      }
    std::vector<Generator> hs, vs;
    for (int s = 1; s <= m; ++s) {
      hs.push_back(h_letter(s));
      vs.push_back(v_letter(s));
    }
    Word hw{hs}, vw{vs};
    dia.sides = {hw, vw, hw.inverse(), vw.inverse()};
    return dia;
  }

  Staircase tri_i = build_staircase(cx, pattern, spec.n, spec.i, {});
  std::vector<int> u_path;
  for (int t = 0; t <= m; ++t) u_path.push_back(tri_i.vertex[{m, t}]);
  Staircase tri_j = build_staircase(cx, pattern, spec.n, spec.j, u_path);

  auto side_word = [&](const std::vector<int>& edge_ids, bool forward) {
    std::vector<Generator> letters;
    for (int e : edge_ids) {
      Generator g = cx.edges()[e].label;
      letters.push_back(forward ? g : g.inverse());
    }
    Word w{letters};
    return w;
  };
  // Boundary read from the top corner: B_i side down to the left corner,
  // the i-diagonal to the bottom, back up the j-diagonal, then B_j^-1.
  Word b_i = side_word(tri_i.b_side, true);
  Word d_i;
  {
    std::vector<Generator> letters;
    for (auto it = tri_i.hyp.rbegin(); it != tri_i.hyp.rend(); ++it)
      letters.push_back(cx.edges()[*it].label.inverse());
    d_i = Word(letters);
  }
  Word d_j = side_word(tri_j.hyp, true);
  Word b_j = side_word(tri_j.b_side, true).inverse();
  dia.sides = {b_i, d_i, d_j, b_j};
  return dia;
}

namespace {

struct TrapezoidResult {
  std::vector<int> bottom_path_vertices;  // the long row, left to right
  std::vector<Word> lateral;              // [left side word, right side word]
};

// Stack of conjugation rows expanding `seed` under the u-side letters,
// built from the short apex row outward. u-edges point toward the apex.
TrapezoidResult build_trapezoid(CellComplex& cx, const Generator& seed,
                                const std::vector<Generator>& u_letters,
                                int apex_left, int apex_right, double y0,
                                double dy) {
  TrapezoidResult out;
  std::vector<Word> words = {Word({seed})};
  for (std::size_t t = 0; t < u_letters.size(); ++t)
    words.push_back(Substitution::phi().apply(words.back()));

  std::vector<int> prev = {apex_left, apex_right};
  std::vector<Generator> side_letters;
  for (std::size_t t = 1; t < words.size(); ++t) {
    const Word& top = words[t - 1];
    const Word& bottom = words[t];
    std::vector<int> row(bottom.size() + 1);
    double y = y0 + dy * static_cast<double>(t);
    for (std::size_t q = 0; q < row.size(); ++q) {
      double x = static_cast<double>(q) - static_cast<double>(bottom.size()) / 2.0;
      row[q] = cx.add_vertex(x, y);
    }
    const Generator u = u_letters[t - 1];
    // u-edges at letter boundaries of the top row; positions in the bottom
    // row advance by |phi(x_s)| per top letter.
    std::vector<int> uedges(top.size() + 1);
    std::vector<std::size_t> cuts(top.size() + 1);
    cuts[0] = 0;
    for (std::size_t s = 0; s < top.size(); ++s)
      cuts[s + 1] = cuts[s] + Substitution::phi().apply(Word({top[s]})).size();
    for (std::size_t s = 0; s <= top.size(); ++s)
      uedges[s] = cx.ensure_edge(row[cuts[s]], prev[s], u);
    for (std::size_t s = 0; s < top.size(); ++s) {
      Word img = Substitution::phi().apply(Word({top[s]}));
      std::vector<int> cell;
      cell.push_back(-(uedges[s] + 1));
      for (std::size_t q = cuts[s]; q < cuts[s + 1]; ++q) {
        const Generator& lab = img[q - cuts[s]];
        int e = lab.sign > 0 ? cx.ensure_edge(row[q], row[q + 1], lab)
                             : cx.ensure_edge(row[q + 1], row[q], lab.inverse());
        cell.push_back(lab.sign > 0 ? e + 1 : -(e + 1));
      }
      cell.push_back(uedges[s + 1] + 1);
      // back along the top row letter
      const Generator& tl = top[s];
      int te = tl.sign > 0 ? cx.ensure_edge(prev[s], prev[s + 1], tl)
                           : cx.ensure_edge(prev[s + 1], prev[s], tl.inverse());
      cell.push_back(tl.sign > 0 ? -(te + 1) : (te + 1));
      cx.add_face(cell);
    }
    side_letters.push_back(u);
    prev = row;
  }
  out.bottom_path_vertices = prev;
  out.lateral = {Word(side_letters), Word(side_letters)};
  return out;
}

}  // namespace

Diagram build_theta(const ThetaSpec& spec, const Config& cfg) {
  if (spec.r < 1) throw IndexOutOfRange("theta wants r >= 1");
  if (spec.k < 0 || spec.n < 0) throw IndexOutOfRange("theta wants n, k >= 0");
  if (spec.i < 1 || spec.i > (1 << (spec.n + 1)))
    throw IndexOutOfRange("theta slot out of range: i = " + std::to_string(spec.i));

  auto Lnp2 = build_L(spec.n + 2);
  BasisVector a_vec = Lnp2[(spec.i + (1 << (spec.n + 1))) - 1];
  BasisVector y_vec = Lnp2[spec.i - 1];
  Generator seed = a_vec.coord_letter(1);
  Generator y_letter = y_vec.coord_letter(1);

  // u-side letters: u[n][1]^r at k = 0, otherwise phi^{w_{k-1}(r)}(u[n][1]).
  std::vector<int> pattern = side_pattern(spec.k, spec.r, cfg);
  std::vector<Generator> u_letters;
  u_letters.reserve(pattern.size());
  for (int c : pattern) u_letters.push_back(gen_u(spec.n, c));
  std::uint64_t M = u_letters.size();

  BigInt expected_faces = BigInt(2) * geometric_sum(M - 1) + phi_length(M);
  check_face_budget(expected_faces, cfg);

  Diagram dia;
  dia.spec = spec;
  CellComplex& cx = dia.complex;

  int n_apex_l = cx.add_vertex(-0.5, 0.0);
  int n_apex_r = cx.add_vertex(0.5, 0.0);
  TrapezoidResult north =
      build_trapezoid(cx, seed, u_letters, n_apex_l, n_apex_r, 0.0, 1.0);

  int s_apex_l = cx.add_vertex(-0.5, 2.0 * M + 2.0);
  int s_apex_r = cx.add_vertex(0.5, 2.0 * M + 2.0);
  TrapezoidResult south = build_trapezoid(cx, seed, u_letters, s_apex_l,
                                          s_apex_r, 2.0 * M + 2.0, -1.0);

  // Middle strip between the two long rows: one commutation square per
  // letter of phi^M(seed), short sides labeled by the L-letter.
  Word long_word = Word({seed});
  for (std::uint64_t t = 0; t < M; ++t)
    long_word = Substitution::phi().apply(long_word);
  const std::vector<int>& nrow = north.bottom_path_vertices;
  const std::vector<int>& srow = south.bottom_path_vertices;
  if (nrow.size() != long_word.size() + 1 || srow.size() != nrow.size())
    throw std::logic_error("theta rows out of step");
  std::vector<int> yedges(nrow.size());
  for (std::size_t q = 0; q < nrow.size(); ++q)
    yedges[q] = cx.ensure_edge(srow[q], nrow[q], y_letter);
  for (std::size_t s = 0; s < long_word.size(); ++s) {
    const Generator& x = long_word[s];
    auto edge_for = [&](const std::vector<int>& rowv) {
      return x.sign > 0 ? cx.ensure_edge(rowv[s], rowv[s + 1], x) + 1
                        : -(cx.ensure_edge(rowv[s + 1], rowv[s], x.inverse()) + 1);
    };
    int north_e = edge_for(nrow);
    int south_e = edge_for(srow);
    cx.add_face({yedges[s] + 1, north_e, -(yedges[s + 1] + 1), -south_e});
  }

  Word a_side = Word({seed});
  Word y_side = Word({y_letter});
  dia.sides = {a_side,          north.lateral[0], y_side, south.lateral[0],
               a_side,          south.lateral[1], y_side, north.lateral[1]};
  return dia;
}

Diagram build_strip(std::uint64_t length, const Generator& g, const Generator& h) {
  Diagram dia;
  dia.spec = StripSpec{length, g.render() + "," + h.render()};
  CellComplex& cx = dia.complex;
  std::vector<int> top(length + 1), bottom(length + 1);
  for (std::uint64_t q = 0; q <= length; ++q) {
    top[q] = cx.add_vertex(static_cast<double>(q), 1.0);
    bottom[q] = cx.add_vertex(static_cast<double>(q), 0.0);
  }
  for (std::uint64_t q = 0; q < length; ++q) {
    int e_top = cx.ensure_edge(top[q], top[q + 1], g);
    int e_bottom = cx.ensure_edge(bottom[q], bottom[q + 1], g);
    int e_left = cx.ensure_edge(bottom[q], top[q], h);
    int e_right = cx.ensure_edge(bottom[q + 1], top[q + 1], h);
    cx.add_face({e_left + 1, e_top + 1, -(e_right + 1), -(e_bottom + 1)});
  }
  return dia;
}

Diagram build_single_cell(const Word& relator) {
  Diagram dia;
  dia.spec = SingleCellSpec{relator.render()};
  CellComplex& cx = dia.complex;
  if (relator.empty()) throw IndexOutOfRange("empty cell label");
  std::size_t n = relator.size();
  std::vector<int> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = cx.add_vertex();
  std::vector<int> cycle;
  for (std::size_t i = 0; i < n; ++i) {
    const Generator& g = relator[i];
    int a = v[i], b = v[(i + 1) % n];
    if (g.sign > 0)
      cycle.push_back(cx.add_edge(a, b, g) + 1);
    else
      cycle.push_back(-(cx.add_edge(b, a, g.inverse()) + 1));
  }
  cx.add_face(cycle);
  return dia;
}

CellComplex build_slab_complex(int k, int r, const Config& cfg) {
  if (r < 1 || k < 0) throw IndexOutOfRange("slab wants k >= 0, r >= 1");
  std::vector<int> pattern = side_pattern(k + 1, r, cfg);
  int m = static_cast<int>(pattern.size());
  check_face_budget(BigInt(std::uint64_t(m)) * BigInt(std::uint64_t(m)) * BigInt(6), cfg);

  CellComplex cx(Topology::Ball);
  // Two grid layers joined by y-edges; one cube per grid square.
  std::vector<std::vector<std::vector<int>>> v(
      2, std::vector<std::vector<int>>(m + 1, std::vector<int>(m + 1)));
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x <= m; ++x)
      for (int y = 0; y <= m; ++y) v[z][x][y] = cx.add_vertex();
  auto h_letter = [&](int x) { return gen_a(0, 1, pattern[x - 1]); };
  auto v_letter = [&](int y) { return gen_a(0, 2, pattern[y - 1]); };
  Generator yg = gen_y(1);

  auto horiz_face = [&](int z, int x, int y) {
    int e0 = cx.ensure_edge(v[z][x][y], v[z][x + 1][y], h_letter(x + 1));
    int e1 = cx.ensure_edge(v[z][x + 1][y], v[z][x + 1][y + 1], v_letter(y + 1));
    int e2 = cx.ensure_edge(v[z][x][y + 1], v[z][x + 1][y + 1], h_letter(x + 1));
    int e3 = cx.ensure_edge(v[z][x][y], v[z][x][y + 1], v_letter(y + 1));
    return cx.add_face({e0 + 1, e1 + 1, -(e2 + 1), -(e3 + 1)});
  };
  // Vertical wall face over one horizontal grid edge.
  auto vert_face = [&](int x, int y, bool along_x) {
    int x2 = along_x ? x + 1 : x;
    int y2 = along_x ? y : y + 1;
    Generator lab = along_x ? h_letter(x + 1) : v_letter(y + 1);
    int base = cx.ensure_edge(v[0][x][y], v[0][x2][y2], lab);
    int top = cx.ensure_edge(v[1][x][y], v[1][x2][y2], lab);
    int up0 = cx.ensure_edge(v[0][x][y], v[1][x][y], yg);
    int up1 = cx.ensure_edge(v[0][x2][y2], v[1][x2][y2], yg);
    return cx.add_face({base + 1, up1 + 1, -(top + 1), -(up0 + 1)});
  };

  std::map<std::tuple<int, int, int>, int> hfaces;  // (z, x, y) -> face
  for (int z = 0; z < 2; ++z)
    for (int x = 0; x < m; ++x)
      for (int y = 0; y < m; ++y) hfaces[{z, x, y}] = horiz_face(z, x, y);
  std::map<std::tuple<int, int, int>, int> xfaces, yfaces;  // walls
  for (int x = 0; x < m; ++x)
    for (int y = 0; y <= m; ++y) xfaces[{x, y, 0}] = vert_face(x, y, true);
  for (int x = 0; x <= m; ++x)
    for (int y = 0; y < m; ++y) yfaces[{x, y, 0}] = vert_face(x, y, false);

  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      cx.add_cell3({hfaces[{0, x, y}], hfaces[{1, x, y}], xfaces[{x, y, 0}],
                    xfaces[{x, y + 1, 0}], yfaces[{x, y, 0}],
                    yfaces[{x + 1, y, 0}]});
  return cx;
}

Word boundary_word(const CellComplex& c) {
  std::vector<int> inc = c.edge_face_incidence();
  std::vector<int> boundary_edges;
  for (std::size_t e = 0; e < inc.size(); ++e)
    if (inc[e] == 1) boundary_edges.push_back(static_cast<int>(e));
  if (boundary_edges.empty())
    throw NotADisk("complex has no boundary edges");
  // Each boundary vertex must meet exactly two boundary edge-endpoints.
  std::map<int, std::vector<int>> at;  // vertex -> incident boundary edges
  for (int e : boundary_edges) {
    at[c.edges()[e].src].push_back(e);
    at[c.edges()[e].dst].push_back(e);
  }
  for (const auto& [v, es] : at)
    if (es.size() != 2)
      throw NotADisk("boundary is not a single cycle at vertex " +
                     std::to_string(v));
  int start = at.begin()->first;
  int here = start;
  int prev_edge = -1;
  std::vector<Generator> letters;
  do {
    const auto& es = at[here];
    int e = (es[0] != prev_edge) ? es[0] : es[1];
    const auto& edge = c.edges()[e];
    if (edge.src == here) {
      letters.push_back(edge.label);
      here = edge.dst;
    } else {
      letters.push_back(edge.label.inverse());
      here = edge.src;
    }
    prev_edge = e;
  } while (here != start);
  return Word(std::move(letters));
}

std::string ValidationReport::summary() const {
  std::ostringstream os;
  os << (pass ? "pass" : "fail") << " (euler=" << euler
     << (euler_ok ? "" : " UNEXPECTED") << ", bad_faces=" << bad_faces.size()
     << ", bad_edges=" << bad_edges.size()
     << ", undeclared=" << undeclared.size() << ")";
  return os.str();
}

ValidationReport validate(const CellComplex& c, const Presentation& p) {
  ValidationReport rep;
  for (std::size_t f = 0; f < c.faces().size(); ++f) {
    if (!is_relator(p, c.face_word(static_cast<int>(f))))
      rep.bad_faces.push_back(static_cast<int>(f));
  }
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    if (!p.declares(c.edges()[e].label))
      rep.undeclared.push_back(static_cast<int>(e));
  }
  std::vector<int> inc = c.edge_face_incidence();
  for (std::size_t e = 0; e < inc.size(); ++e) {
    bool ok = false;
    switch (c.topology()) {
      case Topology::Disk:
        ok = inc[e] == 1 || inc[e] == 2;
        break;
      case Topology::Sphere:
        ok = inc[e] == 2;
        break;
      case Topology::Ball:
        ok = inc[e] >= 1;
        break;
    }
    if (!ok) rep.bad_edges.push_back(static_cast<int>(e));
  }
  rep.euler = c.euler_characteristic();
  switch (c.topology()) {
    case Topology::Disk: rep.euler_ok = rep.euler == 1; break;
    case Topology::Sphere: rep.euler_ok = rep.euler == 2; break;
    case Topology::Ball: rep.euler_ok = rep.euler == 1; break;
  }
  rep.pass = rep.bad_faces.empty() && rep.bad_edges.empty() &&
             rep.undeclared.empty() && rep.euler_ok;
  return rep;
}

std::string to_json(const CellComplex& c) {
  std::ostringstream os;
  os << "{\"schema_version\":1,\"vertices\":" << c.vertex_count()
     << ",\"edges\":[";
  for (std::size_t e = 0; e < c.edges().size(); ++e) {
    if (e) os << ',';
    const auto& ed = c.edges()[e];
    os << "[" << e << "," << ed.src << "," << ed.dst << ",\""
       << ed.label.render() << "\"]";
  }
  os << "],\"faces\":[";
  for (std::size_t f = 0; f < c.faces().size(); ++f) {
    if (f) os << ',';
    os << '[';
    const auto& b = c.faces()[f].boundary;
    for (std::size_t i = 0; i < b.size(); ++i) {
      if (i) os << ',';
      os << b[i];
    }
    os << ']';
  }
  os << ']';
  if (!c.cells3().empty()) {
    os << ",\"cells3\":[";
    for (std::size_t k = 0; k < c.cells3().size(); ++k) {
      if (k) os << ',';
      os << '[';
      const auto& fs = c.cells3()[k].faces;
      for (std::size_t i = 0; i < fs.size(); ++i) {
        if (i) os << ',';
        os << fs[i];
      }
      os << ']';
    }
    os << ']';
  }
  os << '}';
  return os.str();
}

std::string to_dot(const CellComplex& c) {
  std::ostringstream os;
  os << "digraph skeleton {\n";
  for (std::size_t v = 0; v < c.vertex_count(); ++v)
    os << "  v" << v << " [shape=point];\n";
  for (const auto& e : c.edges())
    os << "  v" << e.src << " -> v" << e.dst << " [label=\""
       << e.label.render() << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string to_svg(const CellComplex& c) {
  double minx = 0, miny = 0, maxx = 1, maxy = 1;
  bool any = false;
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    if (!c.coords(static_cast<int>(v))) continue;
    auto [x, y] = *c.coords(static_cast<int>(v));
    if (!any) {
      minx = maxx = x;
      miny = maxy = y;
      any = true;
    }
    minx = std::min(minx, x); maxx = std::max(maxx, x);
    miny = std::min(miny, y); maxy = std::max(maxy, y);
  }
  double scale = 40.0, pad = 20.0;
  auto X = [&](double x) { return pad + scale * (x - minx); };
  auto Y = [&](double y) { return pad + scale * (y - miny); };
  std::ostringstream os;
  os << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\""
     << X(maxx) + pad << "\" height=\"" << Y(maxy) + pad << "\">\n";
  for (const auto& e : c.edges()) {
    auto a = c.coords(e.src), b = c.coords(e.dst);
    if (!a || !b) continue;
    os << "  <line x1=\"" << X(a->first) << "\" y1=\"" << Y(a->second)
       << "\" x2=\"" << X(b->first) << "\" y2=\"" << Y(b->second)
       << "\" stroke=\"black\" stroke-width=\"1\"/>\n";
  }
  for (std::size_t v = 0; v < c.vertex_count(); ++v) {
    auto p = c.coords(static_cast<int>(v));
    if (!p) continue;
    os << "  <circle cx=\"" << X(p->first) << "\" cy=\"" << Y(p->second)
       << "\" r=\"2\" fill=\"black\"/>\n";
  }
  os << "</svg>\n";
  return os.str();
}

}  // namespace dehn
