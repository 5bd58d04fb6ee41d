#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "dehn/config.hpp"
#include "dehn/words.hpp"

namespace dehn {

/// A row of the recursive family: H_n or G_n.
struct LevelTag {
  enum class Kind { H, G } kind = Kind::H;
  int n = 0;

  static LevelTag H(int n) { return {Kind::H, n}; }
  static LevelTag G(int n) { return {Kind::G, n}; }
  static LevelTag parse(const std::string& s);  // "H1", "G0", ...

  /// The level built just before this one (H_0 has no predecessor).
  std::optional<LevelTag> predecessor() const;
  std::string render() const;
  friend bool operator==(const LevelTag& a, const LevelTag& b) {
    return a.kind == b.kind && a.n == b.n;
  }
  friend bool operator<(const LevelTag& a, const LevelTag& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.kind == Kind::H && b.kind == Kind::G;  // H_n precedes G_n
  }
};

enum class RelatorKind {
  BaseCommutator,    // H_0 direct-product squares
  HnnConjugation,    // u_n g u_n^-1 phi(g)^-1
  DiagConjugation,   // u_n d u_n^-1 phi(d)^-1 over diagonal letters
  WingConjugation,   // a_{nij} f a_{nij}^-1 phi(f)^-1
  WingCommutation,   // [a_{nij}, u_{n-1}] and [a_{nij}, L_n(i)]
  SubdivisionSquare  // [d_{nj}, L_{n+1}(j+2^n)]
};

std::string to_string(RelatorKind k);

/// Edge group descriptor, one per graph-of-groups edge at its level.
struct EdgeGroupDescriptor {
  enum class Kind { ProductF2kxF2, SemidirectF2byF4 } kind;
  // ProductF2kxF2: the free factors and the F_2 center.
  std::vector<BasisVector> free_factors;
  std::optional<BasisVector> center;
  // SemidirectF2byF4: the F_2 part and the ordered F_4 basis (u_{n-1}, L_n(i)).
  BasisVector a_basis;
  std::vector<BasisVector> f4_basis;
  int index = 0;  // the i of Gamma_i for semidirect descriptors
};

struct Relator {
  RelatorKind kind;
  Word word;  // canonical form, diagonal letters expanded
};

/// Immutable presentation for one level: generators, canonicalized relators
/// (with classification), the complex edge alphabet (generators plus the
/// diagonal subdivision letters), and the edge-group descriptors.
class Presentation {
 public:
  LevelTag level() const { return level_; }
  const std::set<Generator>& generators() const { return generators_; }
  const std::set<Generator>& edge_alphabet() const { return edge_alphabet_; }
  const std::set<Word>& relators() const { return relators_; }
  const std::vector<Relator>& classified_relators() const { return classified_; }
  const std::vector<EdgeGroupDescriptor>& edge_groups() const { return edge_groups_; }

  std::size_t count(RelatorKind k) const;
  bool declares(const Generator& g) const;

 private:
  friend Presentation build_group(const LevelTag&, const Config&);
  LevelTag level_;
  std::set<Generator> generators_;     // positive representatives
  std::set<Generator> edge_alphabet_;  // generators + Diag letters
  std::set<Word> relators_;
  std::vector<Relator> classified_;
  std::vector<EdgeGroupDescriptor> edge_groups_;
};

/// Cyclic reduction followed by the minimal rotation over all rotations of
/// the word and of its inverse. Rotation/orientation independent.
Word canonical_relator(const Word& w);

/// The ordered list L_n (1-based accessor elsewhere); 2^n entries.
std::vector<BasisVector> build_L(int n);

/// Build the presentation for a level. Levels are cached internally.
Presentation build_group(const LevelTag& level, const Config& cfg = Config{});

/// True iff W is a relator of P up to rotation and inversion. Diagonal
/// letters are expanded first; subdivision triangles reduce to the empty
/// word and count as relators of the cell structure.
bool is_relator(const Presentation& p, const Word& w);

/// Property-2 retraction of a product-kind edge group onto the subgroup
/// generated by `target`, with direct-product normal-form verification.
/// Returns the retracted word, or nullopt when v is not a member.
std::optional<Word> edge_group_membership(const EdgeGroupDescriptor& e,
                                          const Word& v,
                                          const BasisVector& target);

}  // namespace dehn
