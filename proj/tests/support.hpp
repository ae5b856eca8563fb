#pragma once

// Generators and corpora shared by the unit and acceptance tests.

#include <algorithm>
#include <functional>
#include <optional>
#include <random>
#include <vector>

#include "vk/gauss.hpp"
#include "vk/moves.hpp"
#include "vk/parity.hpp"

namespace vk::testing {

using Rng = std::mt19937;

inline GaussDiagram random_diagram(Rng& rng, int n) {
  std::vector<Endpoint> seq;
  for (int a = 0; a < n; ++a) {
    seq.push_back({a, Role::Over});
    seq.push_back({a, Role::Under});
  }
  std::shuffle(seq.begin(), seq.end(), rng);
  std::vector<Sign> signs(n);
  for (Sign& s : signs) s = (rng() & 1) ? Sign::Plus : Sign::Minus;
  return GaussDiagram::from_sequence(seq, signs);
}

// Closure of a braid word on `strands` strands; letter +i / -i is sigma_i^{+1} / sigma_i^{-1}.
// Returns nothing when the closure has more than one component.
inline std::optional<GaussDiagram> braid_closure(int strands, const std::vector<int>& word) {
  int len = static_cast<int>(word.size());
  std::vector<Endpoint> seq;
  std::vector<int> visits(len, 0);
  int pos = 0;
  do {
    for (int j = 0; j < len; ++j) {
      int i = std::abs(word[j]) - 1;
      if (pos != i && pos != i + 1) continue;
      bool left = pos == i;
      // sigma_i^+ carries the left strand over; sigma_i^- carries the right strand over.
      bool over = (word[j] > 0) == left;
      seq.push_back({j, over ? Role::Over : Role::Under});
      ++visits[j];
      pos = left ? i + 1 : i;
    }
  } while (pos != 0);
  (void)strands;
  if (std::any_of(visits.begin(), visits.end(), [](int v) { return v != 2; })) return std::nullopt;
  std::vector<Sign> signs;
  for (int letter : word) signs.push_back(letter > 0 ? Sign::Minus : Sign::Plus);
  return GaussDiagram::from_sequence(seq, signs);
}

inline GaussDiagram connected_sum(const GaussDiagram& a, const GaussDiagram& b) {
  std::vector<Endpoint> seq = a.sequence();
  for (Endpoint e : b.sequence()) seq.push_back({e.arrow + a.size(), e.role});
  std::vector<Sign> signs = a.signs();
  signs.insert(signs.end(), b.signs().begin(), b.signs().end());
  return GaussDiagram::from_sequence(seq, signs);
}

struct NamedBraid {
  const char* name;
  int strands;
  std::vector<int> word;
};

inline const std::vector<NamedBraid>& prime_braids() {
  static const std::vector<NamedBraid> braids = {
      {"3_1", 2, {1, 1, 1}},
      {"4_1", 3, {1, -2, 1, -2}},
      {"5_1", 2, {1, 1, 1, 1, 1}},
      {"5_2", 3, {1, 1, 1, 2, -1, 2}},
      {"6_1", 4, {1, 1, 2, -1, -3, 2, -3}},
      {"6_2", 3, {1, 1, 1, -2, 1, -2}},
      {"6_3", 3, {1, 1, -2, 1, -2, -2}},
      {"7_1", 2, {1, 1, 1, 1, 1, 1, 1}},
  };
  return braids;
}

// Classical diagrams with at most `max_crossings` crossings: kinks, prime braid closures,
// their mirrors and inverses, connected sums, and random braid closures.
inline std::vector<GaussDiagram> classical_corpus(int max_crossings, int random_count, unsigned seed) {
  std::vector<GaussDiagram> out;
  auto keep = [&](const GaussDiagram& d) {
    if (d.size() > max_crossings) return;
    for (const GaussDiagram& e : out) {
      if (diagrams_equal(d, e)) return;
    }
    out.push_back(d);
  };
  keep(GaussDiagram{});
  keep(parse_gauss_code("O1+,U1+"));
  keep(parse_gauss_code("O1-,U1-"));
  keep(parse_gauss_code("U1+,O1+,O2-,U2-"));
  std::vector<GaussDiagram> primes;
  for (const NamedBraid& b : prime_braids()) {
    if (auto d = braid_closure(b.strands, b.word)) primes.push_back(*d);
  }
  for (const GaussDiagram& d : primes) {
    keep(d);
    keep(mirror(d));
    keep(inverse(d));
  }
  for (size_t i = 0; i < primes.size(); ++i) {
    for (size_t j = i; j < primes.size(); ++j) keep(connected_sum(primes[i], primes[j]));
  }
  Rng rng(seed);
  int made = 0;
  while (made < random_count) {
    int strands = 2 + static_cast<int>(rng() % 3);
    int len = 1 + static_cast<int>(rng() % max_crossings);
    std::vector<int> word;
    for (int k = 0; k < len; ++k) {
      int g = 1 + static_cast<int>(rng() % (strands - 1));
      word.push_back((rng() & 1) ? g : -g);
    }
    if (auto d = braid_closure(strands, word)) {
      size_t before = out.size();
      keep(*d);
      if (out.size() > before) ++made;
    }
  }
  return out;
}

// Every perfect matching of 2n points, as partner arrays.
inline void for_each_matching(int n, const std::function<void(const std::vector<int>&)>& visit) {
  std::vector<int> partner(2 * n, -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < 2 * n; ++i) {
      if (partner[i] == -1) {
        first = i;
        break;
      }
    }
    if (first == -1) {
      visit(partner);
      return;
    }
    for (int j = first + 1; j < 2 * n; ++j) {
      if (partner[j] != -1) continue;
      partner[first] = j;
      partner[j] = first;
      rec();
      partner[first] = partner[j] = -1;
    }
  };
  rec();
}

// Every Gauss diagram with n arrows (not deduplicated up to rotation).
inline void for_each_diagram(int n, const std::function<void(const GaussDiagram&)>& visit) {
  for_each_matching(n, [&](const std::vector<int>& partner) {
    std::vector<std::pair<int, int>> chords;
    for (int i = 0; i < 2 * n; ++i) {
      if (i < partner[i]) chords.push_back({i, partner[i]});
    }
    for (int dirs = 0; dirs < (1 << n); ++dirs) {
      for (int sg = 0; sg < (1 << n); ++sg) {
        std::vector<Endpoint> seq(2 * n);
        std::vector<Sign> signs(n);
        for (int c = 0; c < n; ++c) {
          bool flipped = (dirs >> c) & 1;
          seq[chords[c].first] = {c, flipped ? Role::Under : Role::Over};
          seq[chords[c].second] = {c, flipped ? Role::Over : Role::Under};
          signs[c] = ((sg >> c) & 1) ? Sign::Minus : Sign::Plus;
        }
        visit(GaussDiagram::from_sequence(seq, signs));
      }
    }
  });
}

// Parity axioms at a removal or R3 site: an R1 arrow is even, an R2 pair has equal parity,
// an R3 triple has an even number of odd arrows.
inline bool parity_axiom_holds(const GaussDiagram& d, const MoveApplication& m) {
  auto odd = [&](int arrow) { return gaussian_parity(d, arrow + 1) == Parity::Odd; };
  switch (m.kind) {
    case MoveKind::R1Remove:
      return !odd(m.site[0]);
    case MoveKind::R2Remove:
      return odd(m.site[0]) == odd(m.site[1]);
    case MoveKind::R3: {
      std::vector<int> arrows;
      for (int p : m.site) {
        for (int q : {p, p + 1}) arrows.push_back(d.at(q).arrow);
      }
      std::sort(arrows.begin(), arrows.end());
      arrows.erase(std::unique(arrows.begin(), arrows.end()), arrows.end());
      int count = 0;
      for (int a : arrows) count += odd(a);
      return arrows.size() == 3 && count % 2 == 0;
    }
    default:
      return true;
  }
}

// A diagram reached from a random one by random moves, so removal and R3 sites are common.
inline GaussDiagram random_walked_diagram(Rng& rng, int max_crossings, int steps) {
  SearchBounds bounds;
  bounds.max_crossings = max_crossings;
  GaussDiagram d = random_diagram(rng, static_cast<int>(rng() % (max_crossings / 2 + 1)));
  for (int i = 0; i < steps; ++i) {
    auto moves = enumerate_moves(d, bounds);
    d = apply_move(d, moves[rng() % moves.size()]);
  }
  return d;
}

}  // namespace vk::testing
