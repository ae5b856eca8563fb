#pragma once

#include <optional>
#include <string>
#include <vector>

#include "vk/gauss.hpp"

namespace vk {

enum class MoveKind { R1Add, R1Remove, R2Add, R2Remove, R3 };

std::string to_string(MoveKind kind);

// Site conventions, all positions refer to the diagram the move is applied to:
//   R1Add    site = {gap}              variant bit0: under endpoint first, bit1: Minus sign
//   R1Remove site = {arrow}
//   R2Add    site = {gap1, gap2}       gap1 <= gap2; variant bit0: the gap2 segment is over,
//                                      bit1: second segment reversed, bit2: first arrow Minus
//   R2Remove site = {arrow_a, arrow_b} over endpoints of a then b are adjacent
//   R3       site = {top, middle, bottom} first positions of the three adjacent pairs
// Gap g means "insert before position g"; arrows are 0-based indices (label - 1).
struct MoveApplication {
  MoveKind kind;
  std::vector<int> site;
  int variant = 0;

  bool operator==(const MoveApplication&) const = default;
};

std::string to_string(const MoveApplication& m);

struct SearchBounds {
  int max_crossings = 6;
  long max_states = 100000;
  std::optional<double> max_seconds;
};

std::vector<MoveApplication> enumerate_moves(const GaussDiagram& d, const SearchBounds& bounds);
std::vector<MoveApplication> removal_and_r3_moves(const GaussDiagram& d);
GaussDiagram apply_move(const GaussDiagram& d, const MoveApplication& m);

// True when the three arrows at an R3 site (top-middle, top-bottom, middle-bottom) with the given
// strand orders and signs come from a diagram of three lines in the plane.
bool r3_pattern_valid(bool top_meets_tm_first, bool middle_meets_tm_first, bool bottom_meets_tb_first,
                      Sign tm, Sign tb, Sign mb);

struct SearchStatistics {
  long visited = 0;
  long expanded = 0;
  bool state_cap_hit = false;
  bool time_cap_hit = false;
};

struct SearchOutcome {
  bool equivalent = false;
  std::vector<MoveApplication> path;
  SearchStatistics stats;
};

SearchOutcome bounded_equiv_search(const GaussDiagram& source, const GaussDiagram& target,
                                   const SearchBounds& bounds);

}  // namespace vk
