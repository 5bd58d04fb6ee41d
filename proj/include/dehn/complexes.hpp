#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "dehn/config.hpp"
#include "dehn/presentations.hpp"
#include "dehn/words.hpp"

namespace dehn {

/// Which diagram a piece or a builder refers to.
struct DeltaSpec {
  int n, i, j, k, r;
};
struct ThetaSpec {
  int n, i, k, r;
};
struct SlabSpec {
  int k, r;
};
struct StripSpec {
  std::uint64_t length;
  std::string label;  // descriptive; explicit strips carry real letters
};
struct SingleCellSpec {
  std::string label;
};
using DiagramSpec =
    std::variant<DeltaSpec, ThetaSpec, SlabSpec, StripSpec, SingleCellSpec>;

std::string spec_name(const DiagramSpec& s);

enum class Topology { Disk, Sphere, Ball };

/// Labeled combinatorial 2-/3-complex. Faces are closed edge paths stored as
/// signed edge indices (+e traverses edge e forward). Ids follow construction
/// order, so identical builds serialize identically.
class CellComplex {
 public:
  struct Edge {
    int src, dst;
    Generator label;
  };
  struct Face {
    std::vector<int> boundary;  // signed: +(e+1) forward, -(e+1) reversed
  };
  struct Cell3 {
    std::vector<int> faces;
  };

  explicit CellComplex(Topology t) : topology_(t) {}

  int add_vertex();
  /// Vertices may carry 2d coordinates for SVG export of small diagrams.
  int add_vertex(double x, double y);
  int add_edge(int src, int dst, const Generator& label);
  /// Find or create; direction-sensitive lookup keyed by (src, dst, label).
  int ensure_edge(int src, int dst, const Generator& label);
  int add_face(const std::vector<int>& signed_edges);
  int add_cell3(const std::vector<int>& faces);

  Topology topology() const { return topology_; }
  std::size_t vertex_count() const { return n_vertices_; }
  const std::vector<Edge>& edges() const { return edges_; }
  const std::vector<Face>& faces() const { return faces_; }
  const std::vector<Cell3>& cells3() const { return cells3_; }

  std::uint64_t area() const { return faces_.size(); }
  std::uint64_t volume() const { return cells3_.size(); }
  long long euler_characteristic() const;

  /// Face boundary as a reduced word of edge labels.
  Word face_word(int face) const;
  /// Number of faces incident to each edge (counting multiplicity).
  std::vector<int> edge_face_incidence() const;

  const std::optional<std::pair<double, double>>& coords(int v) const {
    return coords_[v];
  }

 private:
  Topology topology_;
  std::size_t n_vertices_ = 0;
  std::vector<Edge> edges_;
  std::vector<Face> faces_;
  std::vector<Cell3> cells3_;
  std::vector<std::optional<std::pair<double, double>>> coords_;
  std::map<std::tuple<int, int, Generator>, int> edge_lookup_;
};

/// A built diagram: the complex plus its boundary sides and bookkeeping.
struct Diagram {
  CellComplex complex{Topology::Disk};
  DiagramSpec spec;
  /// Boundary sides in order, as words over complex edge labels.
  std::vector<Word> sides;
};

/// The quadrilateral diagram with two phi-image sides, two diagonal sides
/// and a central phi-image of u. n >= 1 builds the diagonally subdivided
/// diamond (area 2 m^2); n = 0 builds the m x m commutator grid (area m^2).
Diagram build_delta(const DeltaSpec& spec, const Config& cfg = Config{});

/// Trapezoid / strip / trapezoid diagram with exact trapezoid area
/// geometric_sum(M-1) each and central strip of length L(M), M = w_k(r).
Diagram build_theta(const ThetaSpec& spec, const Config& cfg = Config{});

/// Strip of `length` commutation squares between letters g and h.
Diagram build_strip(std::uint64_t length, const Generator& g, const Generator& h);

/// One closed 2-cell with the given relator boundary.
Diagram build_single_cell(const Word& relator);

/// The slab Delta^0_12(w_{k+1}(r)) x [0,1] as an explicit 3-complex.
CellComplex build_slab_complex(int k, int r, const Config& cfg = Config{});

/// The reduced boundary cycle label of a disk diagram, from the canonical
/// base vertex (the smallest boundary vertex id).
Word boundary_word(const CellComplex& c);

struct ValidationReport {
  bool pass = true;
  std::vector<int> bad_faces;       // face label not a relator
  std::vector<int> bad_edges;       // incidence count off
  std::vector<int> undeclared;      // edge label outside the presentation
  bool euler_ok = true;
  long long euler = 0;
  std::string summary() const;
};

/// Checks face labels against P, edge-face incidence for the declared
/// topology, and the Euler characteristic.
ValidationReport validate(const CellComplex& c, const Presentation& p);

// Exporters: stable construction-order ids throughout.
std::string to_json(const CellComplex& c);
std::string to_dot(const CellComplex& c);
std::string to_svg(const CellComplex& c);

}  // namespace dehn
