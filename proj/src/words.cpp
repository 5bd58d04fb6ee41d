#include "dehn/words.hpp"

#include <algorithm>
#include <cassert>
#include <sstream>

namespace dehn {

namespace {

void append_reduced(std::vector<Generator>& out, const Generator& g) {
  if (!out.empty() && out.back().is_inverse_of(g)) {
    out.pop_back();
  } else {
    out.push_back(g);
  }
}

}  // namespace

Generator gen_a(int level, int slot, int coord, int sign) {
  Generator g;
  g.family = Family::A;
  g.level = static_cast<std::int16_t>(level);
  g.slot = static_cast<std::int16_t>(slot);
  g.coord = static_cast<std::int8_t>(coord);
  g.sign = static_cast<std::int8_t>(sign);
  return g;
}

Generator gen_u(int level, int coord, int sign) {
  Generator g;
  g.family = Family::U;
  g.level = static_cast<std::int16_t>(level);
  g.slot = 1;
  g.coord = static_cast<std::int8_t>(coord);
  g.sign = static_cast<std::int8_t>(sign);
  return g;
}

Generator gen_y(int coord, int sign) {
  Generator g;
  g.family = Family::Y;
  g.level = 0;
  g.slot = 1;
  g.coord = static_cast<std::int8_t>(coord);
  g.sign = static_cast<std::int8_t>(sign);
  return g;
}

Generator gen_xi(int sign) {
  Generator g;
  g.family = Family::XiNu;
  g.level = 0;
  g.slot = 1;
  g.coord = 1;
  g.sign = static_cast<std::int8_t>(sign);
  return g;
}

Generator gen_nu(int sign) {
  Generator g = gen_xi(sign);
  g.coord = 2;
  return g;
}

Generator gen_d(int level, int slot, int coord, int ucoord, int sign) {
  assert(level >= 1);
  Generator g;
  g.family = Family::Diag;
  g.level = static_cast<std::int16_t>(level);
  g.slot = static_cast<std::int16_t>(slot);
  g.coord = static_cast<std::int8_t>(coord);
  g.ucoord = static_cast<std::int8_t>(ucoord);
  g.sign = static_cast<std::int8_t>(sign);
  return g;
}

std::string Generator::render() const {
  std::ostringstream os;
  switch (family) {
    case Family::A:
      os << "a[" << level << "][" << slot << "][" << int(coord) << "]";
      break;
    case Family::U:
      os << "u[" << level << "][" << int(coord) << "]";
      break;
    case Family::Y:
      os << "y[" << int(coord) << "]";
      break;
    case Family::XiNu:
      os << (coord == 1 ? "xi" : "nu");
      break;
    case Family::Diag:
      os << "d[" << level << "][" << slot << "][" << int(coord) << "]["
         << int(ucoord) << "]";
      break;
  }
  if (sign < 0) os << "^-1";
  return os.str();
}

namespace {

std::vector<int> parse_indices(const std::string& s, std::size_t pos,
                               std::size_t* end) {
  std::vector<int> out;
  while (pos < s.size() && s[pos] == '[') {
    std::size_t close = s.find(']', pos);
    if (close == std::string::npos) throw ParseError("unbalanced '[' in " + s);
    out.push_back(std::stoi(s.substr(pos + 1, close - pos - 1)));
    pos = close + 1;
  }
  *end = pos;
  return out;
}

}  // namespace

Generator Generator::parse(const std::string& text) {
  std::string s = text;
  int sign = 1;
  if (s.size() >= 3 && s.substr(s.size() - 3) == "^-1") {
    sign = -1;
    s = s.substr(0, s.size() - 3);
  }
  if (s == "xi") return gen_xi(sign);
  if (s == "nu") return gen_nu(sign);
  if (s.empty()) throw ParseError("empty generator");
  char fam = s[0];
  std::size_t end = 0;
  std::vector<int> idx = parse_indices(s, 1, &end);
  if (end != s.size()) throw ParseError("trailing junk in generator: " + text);
  switch (fam) {
    case 'a':
      if (idx.size() != 3) throw ParseError("a wants [n][i][j]: " + text);
      return gen_a(idx[0], idx[1], idx[2], sign);
    case 'u':
      if (idx.size() != 2) throw ParseError("u wants [n][j]: " + text);
      return gen_u(idx[0], idx[1], sign);
    case 'y':
      if (idx.size() != 1) throw ParseError("y wants [j]: " + text);
      return gen_y(idx[0], sign);
    case 'd':
      if (idx.size() != 4) throw ParseError("d wants [n][i][ja][ju]: " + text);
      return gen_d(idx[0], idx[1], idx[2], idx[3], sign);
    default:
      throw ParseError("unknown generator family: " + text);
  }
}

Word::Word(std::vector<Generator> letters) {
  letters_.reserve(letters.size());
  for (const auto& g : letters) append_reduced(letters_, g);
}

Word::Word(std::initializer_list<Generator> letters) {
  for (const auto& g : letters) append_reduced(letters_, g);
}

Word Word::inverse() const {
  std::vector<Generator> rev;
  rev.reserve(letters_.size());
  for (auto it = letters_.rbegin(); it != letters_.rend(); ++it)
    rev.push_back(it->inverse());
  return Word(std::move(rev));
}

Word Word::operator*(const Word& o) const {
  std::vector<Generator> out = letters_;
  for (const auto& g : o.letters_) append_reduced(out, g);
  Word w;
  w.letters_ = std::move(out);
  return w;
}

Word Word::pow(int e) const {
  Word base = e < 0 ? inverse() : *this;
  int n = e < 0 ? -e : e;
  Word out;
  for (int i = 0; i < n; ++i) out = out * base;
  return out;
}

bool Word::operator<(const Word& o) const {
  return std::lexicographical_compare(letters_.begin(), letters_.end(),
                                      o.letters_.begin(), o.letters_.end());
}

bool Word::is_palindrome() const {
  std::size_t n = letters_.size();
  for (std::size_t i = 0; i < n / 2; ++i) {
    if (letters_[i] != letters_[n - 1 - i]) return false;
  }
  return true;
}

std::set<Track> Word::tracks() const {
  std::set<Track> out;
  for (const auto& g : letters_) out.insert({g.family, g.level, g.slot});
  return out;
}

Word Word::project(const Track& t) const {
  std::vector<Generator> kept;
  for (const auto& g : letters_) {
    if (Track{g.family, g.level, g.slot} == t) kept.push_back(g);
  }
  return Word(std::move(kept));
}

std::string Word::render() const {
  if (letters_.empty()) return "1";
  std::ostringstream os;
  for (std::size_t i = 0; i < letters_.size(); ++i) {
    if (i) os << ' ';
    os << letters_[i].render();
  }
  return os.str();
}

Word Word::parse(const std::string& text) {
  std::istringstream is(text);
  std::vector<Generator> letters;
  std::string tok;
  while (is >> tok) {
    if (tok == "1") continue;
    letters.push_back(Generator::parse(tok));
  }
  return Word(std::move(letters));
}

Word reduce(const std::vector<Generator>& raw) { return Word(raw); }

Word interleave(const Word& w1, const Word& w2) {
  if (w1.size() != w2.size())
    throw LengthMismatch("interleave wants equal lengths, got " +
                         std::to_string(w1.size()) + " and " +
                         std::to_string(w2.size()));
  auto t1 = w1.tracks();
  for (const auto& t : w2.tracks()) {
    if (t1.count(t))
      throw std::invalid_argument("interleave wants disjoint letter tracks");
  }
  std::vector<Generator> out;
  out.reserve(2 * w1.size());
  for (std::size_t i = 0; i < w1.size(); ++i) {
    out.push_back(w1[i]);
    out.push_back(w2[i]);
  }
  return Word(std::move(out));
}

BigInt shuffle_count(const Word& w1, const Word& w2, bool diagonal_subdivision) {
  if (w1.size() != w2.size())
    throw LengthMismatch("shuffle_count wants equal lengths");
  if (!w1.is_palindrome()) throw NotPalindrome("first word: " + w1.render());
  if (!w2.is_palindrome()) throw NotPalindrome("second word: " + w2.render());
  std::uint64_t len = w1.size();
  std::uint64_t p = len / 2;
  // One staircase triangle: 2p(2p+1) crossings plus the 2p+1 center band
  // when the length is odd (empty centers drop the band).
  BigInt base = (len % 2 == 1) ? BigInt((2 * p + 1) * (2 * p + 1))
                               : BigInt(2 * p * (2 * p + 1));
  if (diagonal_subdivision) base += base;
  return base;
}

BasisVector BasisVector::plain(Family f, int level, int slot) {
  BasisVector v;
  v.kind = Kind::Plain;
  v.family = f;
  v.level = static_cast<std::int16_t>(level);
  v.slot = static_cast<std::int16_t>(slot);
  return v;
}

BasisVector BasisVector::y() { return plain(Family::Y, 0, 1); }

BasisVector BasisVector::u(int level) { return plain(Family::U, level, 1); }

BasisVector BasisVector::diagonal(int level, int slot) {
  if (level == 0) {
    // u[-1]^-1 a[0][1] collapses coordinatewise to a[0][2].
    if (slot != 1)
      throw IndexOutOfRange("level-0 diagonal exists only at slot 1");
    return plain(Family::A, 0, 2);
  }
  BasisVector v;
  v.kind = Kind::Diagonal;
  v.family = Family::Diag;
  v.level = static_cast<std::int16_t>(level);
  v.slot = static_cast<std::int16_t>(slot);
  return v;
}

BasisVector BasisVector::u_minus_one() {
  BasisVector v;
  v.kind = Kind::UMinusOne;
  v.family = Family::U;
  v.level = -1;
  v.slot = 1;
  return v;
}

Word BasisVector::coord_word(int coord) const {
  switch (kind) {
    case Kind::Plain:
      if (family == Family::A) return Word({gen_a(level, slot, coord)});
      if (family == Family::U) return Word({gen_u(level, coord)});
      return Word({gen_y(coord)});
    case Kind::Diagonal:
      return Word({gen_u(level - 1, coord, -1), gen_a(level, slot, coord)});
    case Kind::UMinusOne:
      return Word({gen_a(0, 1, coord), gen_a(0, 2, coord, -1)});
  }
  return Word();
}

Generator BasisVector::coord_letter(int coord) const {
  switch (kind) {
    case Kind::Plain:
      return coord_word(coord)[0];
    case Kind::Diagonal:
      return gen_d(level, slot, coord, coord);
    case Kind::UMinusOne:
      break;
  }
  throw IndexOutOfRange("u[-1] has no single-letter coordinates");
}

std::string BasisVector::render() const {
  std::ostringstream os;
  switch (kind) {
    case Kind::Plain:
      if (family == Family::A)
        os << "a[" << level << "][" << slot << "]";
      else if (family == Family::U)
        os << "u[" << level << "]";
      else
        os << "y";
      break;
    case Kind::Diagonal:
      os << "u[" << (level - 1) << "]^-1 a[" << level << "][" << slot << "]";
      break;
    case Kind::UMinusOne:
      os << "a[0][1] a[0][2]^-1";
      break;
  }
  return os.str();
}

Word expand_diagonals(const Word& w) {
  std::vector<Generator> out;
  for (const auto& g : w.letters()) {
    if (g.family != Family::Diag) {
      out.push_back(g);
      continue;
    }
    Generator u = gen_u(g.level - 1, g.ucoord, -1);
    Generator a = gen_a(g.level, g.slot, g.coord);
    if (g.sign > 0) {
      out.push_back(u);
      out.push_back(a);
    } else {
      out.push_back(a.inverse());
      out.push_back(u.inverse());
    }
  }
  return Word(std::move(out));
}

}  // namespace dehn
