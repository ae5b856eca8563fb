#pragma once

#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "vk/gauss.hpp"
#include "vk/moves.hpp"

namespace vk {

// A perfect matching on positions 0..2n-1 of a circle.
class FreeKnotDiagram {
 public:
  FreeKnotDiagram() = default;
  // Throws SyntaxError unless `partner` is an involution without fixed points.
  static FreeKnotDiagram from_partners(std::vector<int> partner);

  int size() const { return static_cast<int>(partner_.size()) / 2; }
  int length() const { return static_cast<int>(partner_.size()); }
  bool empty() const { return partner_.empty(); }
  int partner(int pos) const { return partner_[wrap(pos)]; }
  const std::vector<int>& partners() const { return partner_; }
  int wrap(int pos) const {
    int m = length();
    return ((pos % m) + m) % m;
  }
  // Chords as (first, second) position pairs ordered by first position.
  std::vector<std::pair<int, int>> chords() const;
  bool interlaced(int p, int q) const;
  int interlacement_degree(int pos) const;

  bool operator==(const FreeKnotDiagram&) const = default;

 private:
  std::vector<int> partner_;
};

FreeKnotDiagram parse_free_code(std::string_view text);
// Least rotation, labels in order of first appearance.
std::string serialize(const FreeKnotDiagram& f);
std::vector<int> free_canonical_key(const FreeKnotDiagram& f);
// Least word over rotations and reflections.
std::vector<int> dihedral_key(const std::vector<int>& word);
bool free_equal(const FreeKnotDiagram& a, const FreeKnotDiagram& b);

FreeKnotDiagram project(const GaussDiagram& d);

// Half-edge 4v + s belongs to vertex v in slot s; slots s and s ^ 2 are framing-opposite.
// For the graph of a chord with endpoints p < q: slot 0 enters at p, slot 2 leaves p,
// slot 1 enters at q, slot 3 leaves q.
struct FramedFourValentGraph {
  int vertices = 0;
  std::vector<int> partner;  // the other half-edge of the same edge
  int free_loops = 0;        // closed curves carrying no vertex

  static int vertex_of(int h) { return h / 4; }
  static int slot_of(int h) { return h % 4; }
  static int opposite(int h) { return h ^ 2; }
  bool operator==(const FramedFourValentGraph&) const = default;
};

FramedFourValentGraph to_framed_graph(const FreeKnotDiagram& f);

// A joins slots (0,1),(2,3); B joins slots (0,3),(1,2). On a chord graph, A is the
// orientation-breaking resolution and B the orientation-respecting one.
enum class SmoothingChoice { A, B };
using Smoothing = std::map<int, SmoothingChoice>;

FramedFourValentGraph smooth(const FramedFourValentGraph& g, const Smoothing& s);
int unicursal_components(const FramedFourValentGraph& g);
// Vertex sequence along the single straight-ahead circuit, when there is exactly one and no free loop.
std::optional<std::vector<int>> circuit_word(const FramedFourValentGraph& g);
bool framed_iso(const FramedFourValentGraph& a, const FramedFourValentGraph& b);

// Sites, as in the moves module, but on positions of a free diagram:
//   R1Add {gap}; R1Remove {p} with p, p+1 partners; R2Add {gap1, gap2}, variant bit0 reverses the
//   second pair; R2Remove {p, q} for the adjacent pairs (p, p+1), (q, q+1); R3 {s1, s2, s3}.
struct FreeMove {
  MoveKind kind;
  std::vector<int> site;
  int variant = 0;
  bool operator==(const FreeMove&) const = default;
};

std::string to_string(const FreeMove& m);
std::vector<FreeMove> free_moves(const FreeKnotDiagram& f, int max_chords);
FreeKnotDiagram apply_free_move(const FreeKnotDiagram& f, const FreeMove& m);

bool is_irreducibly_odd(const FreeKnotDiagram& f);
bool contains_smoothing_isomorphic_to(const FreeKnotDiagram& candidate, const FreeKnotDiagram& pattern);

}  // namespace vk
