#include "vk/moves.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <set>
#include <unordered_set>

namespace vk {

std::string to_string(MoveKind kind) {
  switch (kind) {
    case MoveKind::R1Add: return "R1Add";
    case MoveKind::R1Remove: return "R1Remove";
    case MoveKind::R2Add: return "R2Add";
    case MoveKind::R2Remove: return "R2Remove";
    case MoveKind::R3: return "R3";
  }
  return "?";
}

std::string to_string(const MoveApplication& m) {
  std::string out = to_string(m.kind) + "(";
  for (size_t i = 0; i < m.site.size(); ++i) {
    if (i) out += ",";
    out += std::to_string(m.site[i]);
  }
  out += ")";
  if (m.kind == MoveKind::R1Add || m.kind == MoveKind::R2Add) out += "#" + std::to_string(m.variant);
  return out;
}

bool r3_pattern_valid(bool top_meets_tm_first, bool middle_meets_tm_first, bool bottom_meets_tb_first,
                      Sign tm, Sign tb, Sign mb) {
  bool s12 = tm == Sign::Plus;
  bool s13 = tb == Sign::Plus;
  bool s23 = mb == Sign::Plus;
  return (top_meets_tm_first != middle_meets_tm_first) == (s13 != s23) &&
         (middle_meets_tm_first != bottom_meets_tb_first) == (s12 != s13);
}

namespace {

int gap_count(const GaussDiagram& d) { return d.empty() ? 1 : d.length(); }

// Inserts `first` before old position g1 and `second` before old position g2 (g1 <= g2).
GaussDiagram insert_segments(const GaussDiagram& d, int g1, const std::vector<Endpoint>& first, int g2,
                             const std::vector<Endpoint>& second, const std::vector<Sign>& new_signs) {
  std::vector<Endpoint> seq;
  int m = d.length();
  for (int pos = 0; pos <= m; ++pos) {
    if (pos == g1) seq.insert(seq.end(), first.begin(), first.end());
    if (pos == g2) seq.insert(seq.end(), second.begin(), second.end());
    if (pos < m) seq.push_back(d.at(pos));
  }
  std::vector<Sign> signs = d.signs();
  signs.insert(signs.end(), new_signs.begin(), new_signs.end());
  return GaussDiagram::from_sequence(seq, signs);
}

GaussDiagram remove_arrows(const GaussDiagram& d, const std::vector<int>& arrows) {
  std::vector<Endpoint> seq;
  for (const Endpoint& e : d.sequence()) {
    if (std::find(arrows.begin(), arrows.end(), e.arrow) == arrows.end()) seq.push_back(e);
  }
  return GaussDiagram::from_sequence(seq, d.signs());
}

bool adjacent(const GaussDiagram& d, int p, int q) {
  int m = d.length();
  return (p + 1) % m == q || (q + 1) % m == p;
}

std::vector<MoveApplication> r1_removals(const GaussDiagram& d) {
  std::vector<MoveApplication> out;
  for (int a = 0; a < d.size(); ++a) {
    if (adjacent(d, d.over_position(a), d.under_position(a))) out.push_back({MoveKind::R1Remove, {a}, 0});
  }
  return out;
}

std::vector<MoveApplication> r2_removals(const GaussDiagram& d) {
  std::vector<MoveApplication> out;
  int m = d.length();
  for (int a = 0; a < d.size(); ++a) {
    for (int b = 0; b < d.size(); ++b) {
      if (a == b || d.sign(a) == d.sign(b)) continue;
      if ((d.over_position(a) + 1) % m != d.over_position(b)) continue;
      if (!adjacent(d, d.under_position(a), d.under_position(b))) continue;
      out.push_back({MoveKind::R2Remove, {a, b}, 0});
    }
  }
  return out;
}

std::vector<MoveApplication> r3_sites(const GaussDiagram& d) {
  std::vector<MoveApplication> out;
  std::set<std::vector<int>> seen;
  int m = d.length();
  if (d.size() < 3) return out;
  for (int p = 0; p < m; ++p) {
    const Endpoint& e1 = d.at(p);
    const Endpoint& e2 = d.at(p + 1);
    if (e1.role != Role::Over || e2.role != Role::Over) continue;
    for (int swap = 0; swap < 2; ++swap) {
      int tm = swap ? e2.arrow : e1.arrow;
      int tb = swap ? e1.arrow : e2.arrow;
      bool o1 = e1.arrow == tm;
      int u = d.under_position(tm);
      for (int side : {+1, -1}) {
        const Endpoint& nb = d.at(u + side);
        if (nb.role != Role::Over || nb.arrow == tm || nb.arrow == tb) continue;
        int mb = nb.arrow;
        int middle = side == +1 ? u : d.wrap(u - 1);
        bool o2 = middle == u;
        int v = d.under_position(tb);
        int w = d.under_position(mb);
        int bottom;
        bool o3;
        if (d.wrap(v + 1) == w) {
          bottom = v;
          o3 = true;
        } else if (d.wrap(w + 1) == v) {
          bottom = w;
          o3 = false;
        } else {
          continue;
        }
        if (!r3_pattern_valid(o1, o2, o3, d.sign(tm), d.sign(tb), d.sign(mb))) continue;
        std::vector<int> key{p, middle, bottom};
        std::sort(key.begin(), key.end());
        if (!seen.insert(key).second) continue;
        out.push_back({MoveKind::R3, {p, middle, bottom}, 0});
      }
    }
  }
  return out;
}

std::vector<Endpoint> pair_of(Endpoint a, Endpoint b) { return {a, b}; }

GaussDiagram r2_insert(const GaussDiagram& d, int g1, int g2, int variant) {
  int A = d.size();
  int B = A + 1;
  bool over_at_second = variant & 1;
  bool reversed = variant & 2;
  Sign sa = (variant & 4) ? Sign::Minus : Sign::Plus;
  std::vector<Endpoint> over_seg = pair_of({A, Role::Over}, {B, Role::Over});
  std::vector<Endpoint> under_seg =
      reversed ? pair_of({B, Role::Under}, {A, Role::Under}) : pair_of({A, Role::Under}, {B, Role::Under});
  std::vector<Sign> signs{sa, flip(sa)};
  if (over_at_second) return insert_segments(d, g1, under_seg, g2, over_seg, signs);
  return insert_segments(d, g1, over_seg, g2, under_seg, signs);
}

bool contains(const std::vector<MoveApplication>& moves, const MoveApplication& m) {
  return std::find(moves.begin(), moves.end(), m) != moves.end();
}

}  // namespace

std::vector<MoveApplication> removal_and_r3_moves(const GaussDiagram& d) {
  std::vector<MoveApplication> out = r1_removals(d);
  for (auto& m : r2_removals(d)) out.push_back(m);
  for (auto& m : r3_sites(d)) out.push_back(m);
  return out;
}

std::vector<MoveApplication> enumerate_moves(const GaussDiagram& d, const SearchBounds& bounds) {
  std::vector<MoveApplication> out = removal_and_r3_moves(d);
  int gaps = gap_count(d);
  if (d.size() + 1 <= bounds.max_crossings) {
    for (int g = 0; g < gaps; ++g) {
      for (int v = 0; v < 4; ++v) out.push_back({MoveKind::R1Add, {g}, v});
    }
  }
  if (d.size() + 2 <= bounds.max_crossings) {
    std::set<std::vector<int>> seen;
    for (int g1 = 0; g1 < gaps; ++g1) {
      for (int g2 = g1; g2 < gaps; ++g2) {
        for (int v = 0; v < 8; ++v) {
          if (seen.insert(canonical_key(r2_insert(d, g1, g2, v))).second) {
            out.push_back({MoveKind::R2Add, {g1, g2}, v});
          }
        }
      }
    }
  }
  return out;
}

GaussDiagram apply_move(const GaussDiagram& d, const MoveApplication& m) {
  auto invalid = [&]() { return Error(ErrorKind::InvalidSite, to_string(m) + " on " + serialize_raw(d)); };
  int gaps = gap_count(d);
  switch (m.kind) {
    case MoveKind::R1Add: {
      if (m.site.size() != 1 || m.site[0] < 0 || m.site[0] >= gaps || m.variant < 0 || m.variant > 3) throw invalid();
      int A = d.size();
      Role first = (m.variant & 1) ? Role::Under : Role::Over;
      Sign s = (m.variant & 2) ? Sign::Minus : Sign::Plus;
      return insert_segments(d, m.site[0], pair_of({A, first}, {A, flip(first)}), -1, {}, {s});
    }
    case MoveKind::R2Add: {
      if (m.site.size() != 2 || m.site[0] < 0 || m.site[0] > m.site[1] || m.site[1] >= gaps || m.variant < 0 ||
          m.variant > 7) {
        throw invalid();
      }
      return r2_insert(d, m.site[0], m.site[1], m.variant);
    }
    case MoveKind::R1Remove:
      if (!contains(r1_removals(d), m)) throw invalid();
      return remove_arrows(d, m.site);
    case MoveKind::R2Remove:
      if (!contains(r2_removals(d), m)) throw invalid();
      return remove_arrows(d, m.site);
    case MoveKind::R3: {
      if (!contains(r3_sites(d), m)) throw invalid();
      std::vector<Endpoint> seq = d.sequence();
      for (int start : m.site) std::swap(seq[d.wrap(start)], seq[d.wrap(start + 1)]);
      return GaussDiagram::from_sequence(seq, d.signs());
    }
  }
  throw invalid();
}

namespace {

std::string key_string(const GaussDiagram& d) {
  std::vector<int> key = canonical_key(d);
  return std::string(reinterpret_cast<const char*>(key.data()), key.size() * sizeof(int));
}

}  // namespace

SearchOutcome bounded_equiv_search(const GaussDiagram& source, const GaussDiagram& target,
                                   const SearchBounds& bounds) {
  struct Node {
    GaussDiagram diagram;
    int parent;
    MoveApplication move;
  };
  SearchOutcome outcome;
  const std::string goal = key_string(target);
  std::vector<Node> nodes{{source, -1, {}}};
  std::unordered_set<std::string> visited{key_string(source)};
  outcome.stats.visited = 1;
  if (*visited.begin() == goal) {
    outcome.equivalent = true;
    return outcome;
  }
  auto started = std::chrono::steady_clock::now();
  std::deque<int> frontier{0};
  while (!frontier.empty()) {
    if (bounds.max_seconds) {
      std::chrono::duration<double> elapsed = std::chrono::steady_clock::now() - started;
      if (elapsed.count() > *bounds.max_seconds) {
        outcome.stats.time_cap_hit = true;
        break;
      }
    }
    int current = frontier.front();
    frontier.pop_front();
    ++outcome.stats.expanded;
    GaussDiagram here = nodes[current].diagram;
    for (const MoveApplication& m : enumerate_moves(here, bounds)) {
      GaussDiagram next = apply_move(here, m);
      std::string key = key_string(next);
      if (!visited.insert(key).second) continue;
      ++outcome.stats.visited;
      nodes.push_back({std::move(next), current, m});
      if (key == goal) {
        for (int i = static_cast<int>(nodes.size()) - 1; nodes[i].parent >= 0; i = nodes[i].parent) {
          outcome.path.push_back(nodes[i].move);
        }
        std::reverse(outcome.path.begin(), outcome.path.end());
        outcome.equivalent = true;
        return outcome;
      }
      if (outcome.stats.visited >= bounds.max_states) {
        outcome.stats.state_cap_hit = true;
        return outcome;
      }
      frontier.push_back(static_cast<int>(nodes.size()) - 1);
    }
  }
  return outcome;
}

}  // namespace vk
