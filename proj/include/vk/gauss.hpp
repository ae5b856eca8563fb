#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "vk/error.hpp"

namespace vk {

enum class Sign { Plus, Minus };
enum class Role { Over, Under };

inline Sign flip(Sign s) { return s == Sign::Plus ? Sign::Minus : Sign::Plus; }
inline Role flip(Role r) { return r == Role::Over ? Role::Under : Role::Over; }
inline int sign_value(Sign s) { return s == Sign::Plus ? 1 : -1; }

// One slot of the circle: which arrow passes here, and whether this is its tail (over) or head (under).
struct Endpoint {
  int arrow;
  Role role;
  bool operator==(const Endpoint&) const = default;
};

struct Arrow {
  int label;
  int over_position;
  int under_position;
  Sign sign;
};

// Arrows are indexed 0..n-1 in order of first appearance along the circle; label = index + 1.
class GaussDiagram {
 public:
  GaussDiagram() = default;

  // Builds a diagram from an endpoint sequence whose arrow ids are arbitrary non-negative
  // integers; `signs[id]` gives the sign of arrow id. Arrows are renumbered by first appearance.
  static GaussDiagram from_sequence(const std::vector<Endpoint>& seq, const std::vector<Sign>& signs);

  int size() const { return static_cast<int>(signs_.size()); }
  int length() const { return static_cast<int>(seq_.size()); }
  bool empty() const { return seq_.empty(); }

  const Endpoint& at(int pos) const { return seq_[wrap(pos)]; }
  const std::vector<Endpoint>& sequence() const { return seq_; }
  Sign sign(int arrow) const { return signs_[arrow]; }
  const std::vector<Sign>& signs() const { return signs_; }
  int over_position(int arrow) const { return over_[arrow]; }
  int under_position(int arrow) const { return under_[arrow]; }
  int position(int arrow, Role role) const { return role == Role::Over ? over_[arrow] : under_[arrow]; }
  int wrap(int pos) const {
    int m = length();
    return ((pos % m) + m) % m;
  }

  std::vector<Arrow> arrows() const;
  // Maps a label (1..n) to an arrow index; throws NoSuchLabel.
  int arrow_of_label(int label) const;

  bool operator==(const GaussDiagram&) const = default;

 private:
  std::vector<Endpoint> seq_;
  std::vector<Sign> signs_;
  std::vector<int> over_;
  std::vector<int> under_;
};

GaussDiagram parse_gauss_code(std::string_view text);
std::string serialize(const GaussDiagram& d);
// Token-by-token serialization of the diagram as stored, without rotating.
std::string serialize_raw(const GaussDiagram& d);

// Integer key of the least rotation; equal keys iff diagrams_equal.
std::vector<int> canonical_key(const GaussDiagram& d);
// The diagram rotated and relabeled into canonical position.
GaussDiagram canonical(const GaussDiagram& d);

int writhe(const GaussDiagram& d);
GaussDiagram crossing_change(const GaussDiagram& d, int label);
GaussDiagram virtualize(const GaussDiagram& d, int label);
GaussDiagram flip_sign(const GaussDiagram& d, int label);
GaussDiagram mirror(const GaussDiagram& d);
GaussDiagram inverse(const GaussDiagram& d);
GaussDiagram rotate(const GaussDiagram& d, int k);
bool diagrams_equal(const GaussDiagram& a, const GaussDiagram& b);

// Two arrows are interlaced when their endpoints alternate around the circle.
bool interlaced(const GaussDiagram& d, int arrow_a, int arrow_b);
int interlacement_degree(const GaussDiagram& d, int arrow);

// Number of boundary cycles of the ribbon graph whose vertex rotations come from the crossing signs.
int carter_faces(const GaussDiagram& d);
int carter_genus(const GaussDiagram& d);
// Planarity of the unsigned Gauss word (interlacement-graph criterion).
bool word_realizable(const GaussDiagram& d);
bool is_realizable(const GaussDiagram& d);

}  // namespace vk
