#include "vk/free_knot.hpp"

#include <algorithm>
#include <array>
#include <charconv>
#include <functional>
#include <numeric>
#include <set>

namespace vk {

namespace {

// Chord ids along the circle, numbered by first appearance.
std::vector<int> word_of(const FreeKnotDiagram& f) {
  std::vector<int> word(f.length(), -1);
  int next = 0;
  for (int p = 0; p < f.length(); ++p) {
    if (word[p] == -1) word[p] = word[f.partner(p)] = next++;
  }
  return word;
}

FreeKnotDiagram from_word(const std::vector<int>& word) {
  std::map<int, int> first;
  std::vector<int> partner(word.size(), -1);
  for (int p = 0; p < static_cast<int>(word.size()); ++p) {
    auto [it, fresh] = first.try_emplace(word[p], p);
    if (!fresh) {
      if (partner[it->second] != -1) throw Error(ErrorKind::UnmatchedLabel, "label appears more than twice");
      partner[it->second] = p;
      partner[p] = it->second;
    }
  }
  return FreeKnotDiagram::from_partners(partner);
}

std::vector<int> relabeled_rotation(const std::vector<int>& word, int start, bool reversed) {
  int m = static_cast<int>(word.size());
  std::map<int, int> relabel;
  std::vector<int> out(m);
  for (int i = 0; i < m; ++i) {
    int idx = reversed ? ((start - i) % m + m) % m : (start + i) % m;
    auto [it, fresh] = relabel.try_emplace(word[idx], static_cast<int>(relabel.size()));
    out[i] = it->second;
  }
  return out;
}

std::vector<int> least_word(const std::vector<int>& word, bool with_reflection) {
  std::vector<int> best;
  int m = static_cast<int>(word.size());
  for (int start = 0; start < m; ++start) {
    for (int r = 0; r < (with_reflection ? 2 : 1); ++r) {
      std::vector<int> w = relabeled_rotation(word, start, r == 1);
      if (best.empty() || w < best) best = std::move(w);
    }
  }
  return best;
}

}  // namespace

FreeKnotDiagram FreeKnotDiagram::from_partners(std::vector<int> partner) {
  int m = static_cast<int>(partner.size());
  for (int p = 0; p < m; ++p) {
    int q = partner[p];
    if (q < 0 || q >= m || q == p || partner[q] != p) throw Error(ErrorKind::SyntaxError, "not a perfect matching");
  }
  FreeKnotDiagram f;
  f.partner_ = std::move(partner);
  return f;
}

std::vector<std::pair<int, int>> FreeKnotDiagram::chords() const {
  std::vector<std::pair<int, int>> out;
  for (int p = 0; p < length(); ++p) {
    if (p < partner_[p]) out.push_back({p, partner_[p]});
  }
  return out;
}

bool FreeKnotDiagram::interlaced(int p, int q) const {
  int a = std::min(p, partner(p)), b = std::max(p, partner(p));
  auto inside = [&](int x) { return a < x && x < b; };
  return inside(wrap(q)) != inside(partner(q));
}

int FreeKnotDiagram::interlacement_degree(int pos) const {
  int k = 0;
  for (auto [p, q] : chords()) {
    if (p != wrap(pos) && q != wrap(pos) && interlaced(pos, p)) ++k;
  }
  return k;
}

FreeKnotDiagram parse_free_code(std::string_view text) {
  if (text.empty()) return FreeKnotDiagram{};
  std::vector<long> labels;
  size_t begin = 0;
  while (true) {
    size_t comma = text.find(',', begin);
    std::string_view tok = text.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin);
    if (tok.size() < 2 || tok.front() != 'X' || tok[1] == '0') {
      throw Error(ErrorKind::SyntaxError, "free token '" + std::string(tok) + "'");
    }
    long label = 0;
    auto [ptr, ec] = std::from_chars(tok.data() + 1, tok.data() + tok.size(), label);
    if (ec != std::errc() || ptr != tok.data() + tok.size()) {
      throw Error(ErrorKind::SyntaxError, "free token '" + std::string(tok) + "'");
    }
    labels.push_back(label);
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }
  std::map<long, int> count;
  for (long l : labels) ++count[l];
  for (auto [l, c] : count) {
    if (c != 2) throw Error(ErrorKind::UnmatchedLabel, "label " + std::to_string(l) + " appears " + std::to_string(c) + " time(s)");
  }
  std::vector<int> word(labels.begin(), labels.end());
  return from_word(word);
}

std::vector<int> free_canonical_key(const FreeKnotDiagram& f) { return least_word(word_of(f), false); }

std::vector<int> dihedral_key(const std::vector<int>& word) { return least_word(word, true); }

std::string serialize(const FreeKnotDiagram& f) {
  std::string out;
  for (int id : free_canonical_key(f)) {
    if (!out.empty()) out += ',';
    out += "X" + std::to_string(id + 1);
  }
  return out;
}

bool free_equal(const FreeKnotDiagram& a, const FreeKnotDiagram& b) {
  return a.length() == b.length() && free_canonical_key(a) == free_canonical_key(b);
}

FreeKnotDiagram project(const GaussDiagram& d) {
  std::vector<int> partner(d.length());
  for (int a = 0; a < d.size(); ++a) {
    partner[d.over_position(a)] = d.under_position(a);
    partner[d.under_position(a)] = d.over_position(a);
  }
  return FreeKnotDiagram::from_partners(partner);
}

FramedFourValentGraph to_framed_graph(const FreeKnotDiagram& f) {
  FramedFourValentGraph g;
  int m = f.length();
  g.vertices = f.size();
  if (m == 0) g.free_loops = 1;
  g.partner.assign(4 * g.vertices, -1);
  std::vector<int> in(m), out(m);
  auto chords = f.chords();
  for (int v = 0; v < static_cast<int>(chords.size()); ++v) {
    auto [p, q] = chords[v];
    in[p] = 4 * v + 0;
    out[p] = 4 * v + 2;
    in[q] = 4 * v + 1;
    out[q] = 4 * v + 3;
  }
  for (int k = 0; k < m; ++k) {
    int a = out[k], b = in[(k + 1) % m];
    g.partner[a] = b;
    g.partner[b] = a;
  }
  return g;
}

FramedFourValentGraph smooth(const FramedFourValentGraph& g, const Smoothing& s) {
  for (auto [v, c] : s) {
    if (v < 0 || v >= g.vertices) throw Error(ErrorKind::InvalidVertex, "vertex " + std::to_string(v));
  }
  auto smoothed = [&](int h) { return s.count(FramedFourValentGraph::vertex_of(h)) > 0; };
  auto joined = [&](int h) {
    int v = FramedFourValentGraph::vertex_of(h), slot = FramedFourValentGraph::slot_of(h);
    int other = s.at(v) == SmoothingChoice::A ? (slot ^ 1) : (3 - slot);
    return 4 * v + other;
  };
  std::vector<int> renumber(g.vertices, -1);
  FramedFourValentGraph out;
  for (int v = 0; v < g.vertices; ++v) {
    if (!s.count(v)) renumber[v] = out.vertices++;
  }
  auto image = [&](int h) { return 4 * renumber[FramedFourValentGraph::vertex_of(h)] + FramedFourValentGraph::slot_of(h); };
  out.partner.assign(4 * out.vertices, -1);
  out.free_loops = g.free_loops;
  std::vector<char> used(g.partner.size(), 0);
  for (int h = 0; h < static_cast<int>(g.partner.size()); ++h) {
    if (smoothed(h)) continue;
    int x = g.partner[h];
    while (smoothed(x)) {
      used[x] = 1;
      int y = joined(x);
      used[y] = 1;
      x = g.partner[y];
    }
    out.partner[image(h)] = image(x);
  }
  for (int h = 0; h < static_cast<int>(g.partner.size()); ++h) {
    if (!smoothed(h) || used[h]) continue;
    ++out.free_loops;
    int x = h;
    do {
      used[x] = 1;
      int y = joined(x);
      used[y] = 1;
      x = g.partner[y];
    } while (x != h);
  }
  return out;
}

int unicursal_components(const FramedFourValentGraph& g) {
  int n = static_cast<int>(g.partner.size());
  std::vector<int> parent(n);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int h) { return parent[h] == h ? h : parent[h] = find(parent[h]); };
  for (int h = 0; h < n; ++h) {
    parent[find(h)] = find(g.partner[h]);
    parent[find(h)] = find(FramedFourValentGraph::opposite(h));
  }
  int curves = g.free_loops;
  for (int h = 0; h < n; ++h) curves += find(h) == h;
  return curves;
}

std::optional<std::vector<int>> circuit_word(const FramedFourValentGraph& g) {
  if (g.free_loops != 0 || g.vertices == 0 || unicursal_components(g) != 1) return std::nullopt;
  std::vector<int> word;
  int h = 0;
  do {
    word.push_back(FramedFourValentGraph::vertex_of(h));
    h = g.partner[FramedFourValentGraph::opposite(h)];
  } while (h != 0);
  return word;
}

namespace {

// The eight slot permutations that keep opposite slots opposite.
const std::vector<std::array<int, 4>>& framing_symmetries() {
  static const std::vector<std::array<int, 4>> maps = [] {
    std::vector<std::array<int, 4>> out;
    for (int a = 0; a < 4; ++a) {
      for (int b = 0; b < 4; ++b) {
        if (b == a || b == (a ^ 2)) continue;
        out.push_back({a, b, a ^ 2, b ^ 2});
      }
    }
    return out;
  }();
  return maps;
}

bool framed_iso_search(const FramedFourValentGraph& a, const FramedFourValentGraph& b) {
  int n = a.vertices;
  std::vector<int> vmap(n, -1), used(n, 0);
  std::vector<std::array<int, 4>> smap(n);
  auto image = [&](int h) { return 4 * vmap[h / 4] + smap[h / 4][h % 4]; };
  auto consistent = [&](int v) {
    for (int s = 0; s < 4; ++s) {
      int h = 4 * v + s;
      int p = a.partner[h];
      if (vmap[p / 4] == -1) continue;
      if (b.partner[image(h)] != image(p)) return false;
    }
    return true;
  };
  std::function<bool(int)> extend = [&](int placed) -> bool {
    if (placed == n) return true;
    // Prefer a vertex adjacent to the mapped part, which fixes its image and one slot.
    int v = -1, anchor = -1;
    for (int u = 0; u < n && v == -1; ++u) {
      if (vmap[u] != -1) continue;
      for (int s = 0; s < 4; ++s) {
        int p = a.partner[4 * u + s];
        if (vmap[p / 4] != -1) {
          v = u;
          anchor = s;
          break;
        }
      }
    }
    if (v == -1) {
      for (int u = 0; u < n; ++u) {
        if (vmap[u] == -1) {
          v = u;
          break;
        }
      }
    }
    for (int w = 0; w < n; ++w) {
      if (used[w]) continue;
      for (const auto& sigma : framing_symmetries()) {
        if (anchor != -1) {
          int p = a.partner[4 * v + anchor];
          int target = b.partner[image(p)];
          if (target / 4 != w || sigma[anchor] != target % 4) continue;
        }
        vmap[v] = w;
        smap[v] = sigma;
        used[w] = 1;
        if (consistent(v) && extend(placed + 1)) return true;
        vmap[v] = -1;
        used[w] = 0;
      }
    }
    return false;
  };
  return extend(0);
}

}  // namespace

bool framed_iso(const FramedFourValentGraph& a, const FramedFourValentGraph& b) {
  if (a.vertices != b.vertices || a.free_loops != b.free_loops) return false;
  if (unicursal_components(a) != unicursal_components(b)) return false;
  auto wa = circuit_word(a);
  auto wb = circuit_word(b);
  if (wa && wb) return dihedral_key(*wa) == dihedral_key(*wb);
  return framed_iso_search(a, b);
}

std::string to_string(const FreeMove& m) {
  MoveApplication shown{m.kind, m.site, m.variant};
  return to_string(shown);
}

namespace {

std::vector<FreeMove> free_removals_and_r3(const FreeKnotDiagram& f) {
  std::vector<FreeMove> out;
  int m = f.length();
  if (m == 0) return out;
  for (int p = 0; p < m; ++p) {
    if (f.partner(p) == (p + 1) % m && (m > 2 || p == 0)) out.push_back({MoveKind::R1Remove, {p}, 0});
  }
  std::set<std::pair<int, int>> chord_pairs;
  for (int p = 0; p < m; ++p) {
    int p2 = (p + 1) % m;
    int a = f.partner(p), b = f.partner(p2);
    if (a == p2) continue;
    int q;
    if ((b + 1) % m == a) q = b;
    else if ((a + 1) % m == b) q = a;
    else continue;
    int c1 = std::min(p, a), c2 = std::min(p2, b);
    if (!chord_pairs.insert({std::min(c1, c2), std::max(c1, c2)}).second) continue;
    out.push_back({MoveKind::R2Remove, {p, q}, 0});
  }
  // Segments (s, s+1) whose endpoints lie on different chords, keyed by the chord pair.
  auto chord = [&](int p) { return std::min(p, f.partner(p)); };
  std::vector<int> segments;
  for (int s = 0; s < m; ++s) {
    if (f.partner(s) != (s + 1) % m) segments.push_back(s);
  }
  auto chords_of = [&](int s) {
    int a = chord(s), b = chord((s + 1) % m);
    return std::pair<int, int>{std::min(a, b), std::max(a, b)};
  };
  for (size_t i = 0; i < segments.size(); ++i) {
    for (size_t j = i + 1; j < segments.size(); ++j) {
      for (size_t k = j + 1; k < segments.size(); ++k) {
        int s1 = segments[i], s2 = segments[j], s3 = segments[k];
        if (s2 - s1 < 2 || s3 - s2 < 2 || (s1 + m - s3) < 2) continue;
        std::set<int> all;
        for (int s : {s1, s2, s3}) {
          all.insert(chord(s));
          all.insert(chord((s + 1) % m));
        }
        std::set<std::pair<int, int>> pairs{chords_of(s1), chords_of(s2), chords_of(s3)};
        if (all.size() == 3 && pairs.size() == 3) out.push_back({MoveKind::R3, {s1, s2, s3}, 0});
      }
    }
  }
  return out;
}

FreeKnotDiagram insert_pairs(const FreeKnotDiagram& f, int g1, const std::vector<int>& first, int g2,
                             const std::vector<int>& second) {
  std::vector<int> word = word_of(f);
  std::vector<int> out;
  int m = f.length();
  for (int pos = 0; pos <= m; ++pos) {
    if (pos == g1) out.insert(out.end(), first.begin(), first.end());
    if (pos == g2) out.insert(out.end(), second.begin(), second.end());
    if (pos < m) out.push_back(word[pos]);
  }
  return from_word(out);
}

FreeKnotDiagram remove_positions(const FreeKnotDiagram& f, std::vector<int> positions) {
  std::vector<int> word = word_of(f);
  std::vector<int> out;
  for (int p = 0; p < f.length(); ++p) {
    if (std::find(positions.begin(), positions.end(), p) == positions.end()) out.push_back(word[p]);
  }
  return from_word(out);
}

bool contains(const std::vector<FreeMove>& moves, const FreeMove& m) {
  return std::find(moves.begin(), moves.end(), m) != moves.end();
}

}  // namespace

std::vector<FreeMove> free_moves(const FreeKnotDiagram& f, int max_chords) {
  std::vector<FreeMove> out = free_removals_and_r3(f);
  int gaps = f.empty() ? 1 : f.length();
  if (f.size() + 1 <= max_chords) {
    for (int g = 0; g < gaps; ++g) out.push_back({MoveKind::R1Add, {g}, 0});
  }
  if (f.size() + 2 <= max_chords) {
    std::set<std::vector<int>> seen;
    for (int g1 = 0; g1 < gaps; ++g1) {
      for (int g2 = g1; g2 < gaps; ++g2) {
        for (int v = 0; v < 2; ++v) {
          FreeMove m{MoveKind::R2Add, {g1, g2}, v};
          if (seen.insert(free_canonical_key(apply_free_move(f, m))).second) out.push_back(m);
        }
      }
    }
  }
  return out;
}

FreeKnotDiagram apply_free_move(const FreeKnotDiagram& f, const FreeMove& m) {
  auto invalid = [&]() { return Error(ErrorKind::InvalidSite, to_string(m) + " on " + serialize(f)); };
  int gaps = f.empty() ? 1 : f.length();
  const int A = f.size(), B = f.size() + 1;
  switch (m.kind) {
    case MoveKind::R1Add:
      if (m.site.size() != 1 || m.site[0] < 0 || m.site[0] >= gaps) throw invalid();
      return insert_pairs(f, m.site[0], {A, A}, -1, {});
    case MoveKind::R2Add: {
      if (m.site.size() != 2 || m.site[0] < 0 || m.site[0] > m.site[1] || m.site[1] >= gaps || m.variant < 0 ||
          m.variant > 1) {
        throw invalid();
      }
      std::vector<int> second = m.variant ? std::vector<int>{B, A} : std::vector<int>{A, B};
      return insert_pairs(f, m.site[0], {A, B}, m.site[1], second);
    }
    case MoveKind::R1Remove:
      if (!contains(free_removals_and_r3(f), m)) throw invalid();
      return remove_positions(f, {m.site[0], f.partner(m.site[0])});
    case MoveKind::R2Remove:
      if (!contains(free_removals_and_r3(f), m)) throw invalid();
      return remove_positions(f, {m.site[0], f.wrap(m.site[0] + 1), m.site[1], f.wrap(m.site[1] + 1)});
    case MoveKind::R3: {
      if (!contains(free_removals_and_r3(f), m)) throw invalid();
      std::vector<int> word = word_of(f);
      for (int s : m.site) std::swap(word[f.wrap(s)], word[f.wrap(s + 1)]);
      return from_word(word);
    }
  }
  throw invalid();
}

bool is_irreducibly_odd(const FreeKnotDiagram& f) {
  for (auto [p, q] : f.chords()) {
    if (f.interlacement_degree(p) % 2 == 0) return false;
  }
  for (const FreeMove& m : free_removals_and_r3(f)) {
    if (m.kind == MoveKind::R2Remove) return false;
  }
  return true;
}

bool contains_smoothing_isomorphic_to(const FreeKnotDiagram& candidate, const FreeKnotDiagram& pattern) {
  int k = candidate.size() - pattern.size();
  if (k < 0) return false;
  FramedFourValentGraph g = to_framed_graph(candidate);
  FramedFourValentGraph target = to_framed_graph(pattern);
  if (k == 0) return framed_iso(g, target);
  std::vector<int> subset(k);
  std::iota(subset.begin(), subset.end(), 0);
  int n = candidate.size();
  while (true) {
    for (int choice = 0; choice < (1 << k); ++choice) {
      Smoothing s;
      for (int i = 0; i < k; ++i) s[subset[i]] = ((choice >> i) & 1) ? SmoothingChoice::B : SmoothingChoice::A;
      FramedFourValentGraph h = smooth(g, s);
      if (h.free_loops == target.free_loops && framed_iso(h, target)) return true;
    }
    // Next k-subset in lexicographic order.
    int i = k - 1;
    while (i >= 0 && subset[i] == n - k + i) --i;
    if (i < 0) break;
    ++subset[i];
    for (int j = i + 1; j < k; ++j) subset[j] = subset[j - 1] + 1;
  }
  return false;
}

}  // namespace vk
