#pragma once

#include <cstdint>
#include <initializer_list>
#include <set>
#include <string>
#include <tuple>
#include <vector>

#include "dehn/bigint.hpp"
#include "dehn/error.hpp"

namespace dehn {

/// Letter families. `A` and `U` are the indexed stable-letter families
/// a[n][i][j] and u[n][j], `Y` the base pair y[j], `XiNu` the abstract
/// rank-two basis used by the substitution engine, and `Diag` the diagonal
/// edge letters u[n-1][ju]^-1 a[n][i][ja] introduced by the cell subdivision.
enum class Family : std::uint8_t { A, U, Y, XiNu, Diag };

/// One signed, indexed generator. Equality is field-wise. `ucoord` is only
/// meaningful for Diag letters (the u-side coordinate); it is 0 elsewhere.
struct Generator {
  Family family = Family::XiNu;
  std::int16_t level = 0;   // n; -1 reserved for the u[-1] convention
  std::int16_t slot = 1;    // i of a[n][i][j]
  std::int8_t coord = 1;    // j, in {1,2}
  std::int8_t ucoord = 0;   // Diag only: u coordinate, in {1,2}
  std::int8_t sign = 1;     // +1 or -1

  Generator inverse() const {
    Generator g = *this;
    g.sign = static_cast<std::int8_t>(-sign);
    return g;
  }
  bool is_inverse_of(const Generator& o) const {
    return family == o.family && level == o.level && slot == o.slot &&
           coord == o.coord && ucoord == o.ucoord && sign == -o.sign;
  }

  friend bool operator==(const Generator& a, const Generator& b) {
    return a.family == b.family && a.level == b.level && a.slot == b.slot &&
           a.coord == b.coord && a.ucoord == b.ucoord && a.sign == b.sign;
  }
  friend bool operator!=(const Generator& a, const Generator& b) { return !(a == b); }
  friend bool operator<(const Generator& a, const Generator& b) {
    return std::tie(a.family, a.level, a.slot, a.coord, a.ucoord, a.sign) <
           std::tie(b.family, b.level, b.slot, b.coord, b.ucoord, b.sign);
  }

  std::string render() const;
  static Generator parse(const std::string& text);
};

// Constructors for the concrete families.
Generator gen_a(int level, int slot, int coord, int sign = 1);
Generator gen_u(int level, int coord, int sign = 1);
Generator gen_y(int coord, int sign = 1);
Generator gen_xi(int sign = 1);
Generator gen_nu(int sign = 1);
/// Diagonal letter u[level-1][ucoord]^-1 a[level][slot][coord]; level >= 1.
Generator gen_d(int level, int slot, int coord, int ucoord, int sign = 1);

/// A track identifies a rank-two letter family: all letters sharing
/// (family, level, slot, ucoord) and differing only in coord/sign.
struct Track {
  Family family;
  std::int16_t level;
  std::int16_t slot;
  friend bool operator<(const Track& a, const Track& b) {
    return std::tie(a.family, a.level, a.slot) <
           std::tie(b.family, b.level, b.slot);
  }
  friend bool operator==(const Track& a, const Track& b) {
    return a.family == b.family && a.level == b.level && a.slot == b.slot;
  }
};

/// Freely reduced word. Every constructor reduces eagerly, so a Word is
/// always in normal form over the free group on its letters.
class Word {
 public:
  Word() = default;
  explicit Word(std::vector<Generator> letters);
  Word(std::initializer_list<Generator> letters);

  static Word from_letter(const Generator& g) { return Word({g}); }

  const std::vector<Generator>& letters() const { return letters_; }
  std::size_t size() const { return letters_.size(); }
  bool empty() const { return letters_.empty(); }
  const Generator& operator[](std::size_t i) const { return letters_[i]; }

  Word inverse() const;
  Word operator*(const Word& o) const;
  Word pow(int e) const;

  bool operator==(const Word& o) const { return letters_ == o.letters_; }
  bool operator!=(const Word& o) const { return !(*this == o); }
  bool operator<(const Word& o) const;

  /// Letter-by-letter palindrome check, signs included.
  bool is_palindrome() const;

  std::set<Track> tracks() const;
  /// Keep only letters on `t`, then reduce. Valid as a direct-product
  /// projection whenever the other tracks commute with `t`.
  Word project(const Track& t) const;

  std::string render() const;  // space-separated letters; "1" if empty
  static Word parse(const std::string& text);

 private:
  std::vector<Generator> letters_;
};

/// reduce: free reduction of a raw letter sequence. Idempotent.
Word reduce(const std::vector<Generator>& raw);

/// interleave(W1, W2) = b1 c1 b2 c2 ... bm cm. Requires equal lengths and
/// disjoint tracks (the commuting-family hypothesis).
Word interleave(const Word& w1, const Word& w2);

/// Number of elementary commutations realizing W1^-1 W2 =
/// interleave(W1^-1, W2) for palindromes of equal length, i.e. the cell
/// count of one staircase triangle: (2p+1)^2 for odd length 2p+1,
/// 2p(2p+1) for even length 2p. Doubled when the diagonal subdivision is on.
BigInt shuffle_count(const Word& w1, const Word& w2, bool diagonal_subdivision);

/// Basis 2-vector: a plain indexed pair (a[n][i], u[n], y) or a
/// coordinatewise diagonal u[n-1]^-1 a[n][i].
struct BasisVector {
  enum class Kind { Plain, Diagonal, UMinusOne } kind = Kind::Plain;
  Family family = Family::Y;  // Plain only
  std::int16_t level = 0;
  std::int16_t slot = 1;

  static BasisVector plain(Family f, int level, int slot);
  static BasisVector y();
  static BasisVector a(int level, int slot) { return plain(Family::A, level, slot); }
  static BasisVector u(int level);
  /// u[level-1]^-1 a[level][slot]. Level 0 with slot 1 degenerates to a[0][2].
  static BasisVector diagonal(int level, int slot);
  static BasisVector u_minus_one();

  /// The coordinate as a word over ambient (non-Diag) letters.
  Word coord_word(int coord) const;
  /// The coordinate as a single complex edge letter (Diag letters for
  /// diagonal vectors). Not available for UMinusOne.
  Generator coord_letter(int coord) const;
  bool has_single_letter_coords() const { return kind != Kind::UMinusOne; }

  std::string render() const;
  friend bool operator==(const BasisVector& x, const BasisVector& y_) {
    return x.kind == y_.kind && x.family == y_.family && x.level == y_.level &&
           x.slot == y_.slot;
  }
  friend bool operator<(const BasisVector& x, const BasisVector& y_) {
    return std::tie(x.kind, x.family, x.level, x.slot) <
           std::tie(y_.kind, y_.family, y_.level, y_.slot);
  }
};

/// Expand Diag letters into their u^-1 a spelling and reduce.
Word expand_diagonals(const Word& w);

}  // namespace dehn
