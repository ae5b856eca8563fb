#include "vk/gauss.hpp"

#include <algorithm>
#include <charconv>
#include <map>
#include <stdexcept>

namespace vk {

GaussDiagram GaussDiagram::from_sequence(const std::vector<Endpoint>& seq, const std::vector<Sign>& signs) {
  std::map<int, int> renumber;
  GaussDiagram d;
  d.seq_.reserve(seq.size());
  for (const Endpoint& e : seq) {
    auto [it, fresh] = renumber.try_emplace(e.arrow, static_cast<int>(renumber.size()));
    d.seq_.push_back({it->second, e.role});
  }
  int n = static_cast<int>(renumber.size());
  if (static_cast<int>(seq.size()) != 2 * n) {
    throw Error(ErrorKind::UnmatchedLabel, "endpoint sequence does not pair up");
  }
  d.signs_.assign(n, Sign::Plus);
  d.over_.assign(n, -1);
  d.under_.assign(n, -1);
  for (auto [old_id, new_id] : renumber) d.signs_[new_id] = signs.at(old_id);
  for (int pos = 0; pos < 2 * n; ++pos) {
    const Endpoint& e = d.seq_[pos];
    int& slot = e.role == Role::Over ? d.over_[e.arrow] : d.under_[e.arrow];
    if (slot != -1) throw Error(ErrorKind::RoleMismatch, "arrow has two endpoints of the same role");
    slot = pos;
  }
  return d;
}

std::vector<Arrow> GaussDiagram::arrows() const {
  std::vector<Arrow> out;
  for (int a = 0; a < size(); ++a) out.push_back({a + 1, over_[a], under_[a], signs_[a]});
  return out;
}

int GaussDiagram::arrow_of_label(int label) const {
  if (label < 1 || label > size()) {
    throw Error(ErrorKind::NoSuchLabel, "label " + std::to_string(label) + " not in diagram");
  }
  return label - 1;
}

namespace {

struct Token {
  Role role;
  long label;
  Sign sign;
};

Token parse_token(std::string_view tok) {
  auto bad = [&](const std::string& why) {
    return Error(ErrorKind::SyntaxError, "token '" + std::string(tok) + "': " + why);
  };
  if (tok.size() < 3) throw bad("too short");
  Token t{};
  if (tok.front() == 'O') t.role = Role::Over;
  else if (tok.front() == 'U') t.role = Role::Under;
  else throw bad("role must be O or U");
  if (tok.back() == '+') t.sign = Sign::Plus;
  else if (tok.back() == '-') t.sign = Sign::Minus;
  else throw bad("sign must be + or -");
  std::string_view digits = tok.substr(1, tok.size() - 2);
  if (digits.empty() || digits.front() == '0') throw bad("label must be a nonzero decimal integer");
  auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), t.label);
  if (ec != std::errc() || ptr != digits.data() + digits.size()) throw bad("label must be a nonzero decimal integer");
  return t;
}

char role_char(Role r) { return r == Role::Over ? 'O' : 'U'; }
char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

// Key of the rotation starting at `start`, relabeled by first appearance.
std::vector<int> rotation_key(const GaussDiagram& d, int start) {
  int n = d.size();
  int m = d.length();
  int under_offset = 2 * (n + 1);
  std::vector<int> relabel(n, 0);
  int next = 1;
  std::vector<int> key(m);
  for (int i = 0; i < m; ++i) {
    const Endpoint& e = d.at(start + i);
    if (relabel[e.arrow] == 0) relabel[e.arrow] = next++;
    key[i] = (e.role == Role::Under ? under_offset : 0) + 2 * relabel[e.arrow] + (d.sign(e.arrow) == Sign::Minus);
  }
  return key;
}

int best_rotation(const GaussDiagram& d) {
  if (d.empty()) return 0;
  // The first token of any rotation gets label 1, so the least rotation starts on an over endpoint.
  int best = -1;
  std::vector<int> best_key;
  for (int a = 0; a < d.size(); ++a) {
    int start = d.over_position(a);
    std::vector<int> key = rotation_key(d, start);
    if (best < 0 || key < best_key) {
      best = start;
      best_key = std::move(key);
    }
  }
  return best;
}

}  // namespace

GaussDiagram parse_gauss_code(std::string_view text) {
  if (text.empty()) return GaussDiagram{};
  std::vector<Token> tokens;
  size_t begin = 0;
  while (true) {
    size_t comma = text.find(',', begin);
    std::string_view tok = text.substr(begin, comma == std::string_view::npos ? std::string_view::npos : comma - begin);
    tokens.push_back(parse_token(tok));
    if (comma == std::string_view::npos) break;
    begin = comma + 1;
  }

  std::map<long, std::vector<int>> occurrences;
  for (int i = 0; i < static_cast<int>(tokens.size()); ++i) occurrences[tokens[i].label].push_back(i);
  std::map<long, int> ids;
  std::vector<Sign> signs;
  for (auto& [label, where] : occurrences) {
    if (where.size() != 2) {
      throw Error(ErrorKind::UnmatchedLabel,
                  "label " + std::to_string(label) + " appears " + std::to_string(where.size()) + " time(s)");
    }
    const Token& a = tokens[where[0]];
    const Token& b = tokens[where[1]];
    if (a.sign != b.sign) throw Error(ErrorKind::SignMismatch, "label " + std::to_string(label));
    if (a.role == b.role) throw Error(ErrorKind::RoleMismatch, "label " + std::to_string(label));
    ids[label] = static_cast<int>(signs.size());
    signs.push_back(a.sign);
  }
  std::vector<Endpoint> seq;
  for (const Token& t : tokens) seq.push_back({ids[t.label], t.role});
  return GaussDiagram::from_sequence(seq, signs);
}

std::string serialize_raw(const GaussDiagram& d) {
  std::string out;
  for (int pos = 0; pos < d.length(); ++pos) {
    if (pos) out += ',';
    const Endpoint& e = d.at(pos);
    out += role_char(e.role);
    out += std::to_string(e.arrow + 1);
    out += sign_char(d.sign(e.arrow));
  }
  return out;
}

GaussDiagram rotate(const GaussDiagram& d, int k) {
  if (d.empty()) return d;
  std::vector<Endpoint> seq;
  for (int i = 0; i < d.length(); ++i) seq.push_back(d.at(k + i));
  return GaussDiagram::from_sequence(seq, d.signs());
}

GaussDiagram canonical(const GaussDiagram& d) { return rotate(d, best_rotation(d)); }

std::vector<int> canonical_key(const GaussDiagram& d) {
  if (d.empty()) return {};
  return rotation_key(d, best_rotation(d));
}

std::string serialize(const GaussDiagram& d) { return serialize_raw(canonical(d)); }

int writhe(const GaussDiagram& d) {
  int w = 0;
  for (Sign s : d.signs()) w += sign_value(s);
  return w;
}

GaussDiagram virtualize(const GaussDiagram& d, int label) {
  int a = d.arrow_of_label(label);
  std::vector<Endpoint> seq = d.sequence();
  for (Endpoint& e : seq) {
    if (e.arrow == a) e.role = flip(e.role);
  }
  return GaussDiagram::from_sequence(seq, d.signs());
}

GaussDiagram flip_sign(const GaussDiagram& d, int label) {
  int a = d.arrow_of_label(label);
  std::vector<Sign> signs = d.signs();
  signs[a] = flip(signs[a]);
  return GaussDiagram::from_sequence(d.sequence(), signs);
}

GaussDiagram crossing_change(const GaussDiagram& d, int label) { return flip_sign(virtualize(d, label), label); }

GaussDiagram mirror(const GaussDiagram& d) {
  std::vector<Endpoint> seq = d.sequence();
  for (Endpoint& e : seq) e.role = flip(e.role);
  std::vector<Sign> signs = d.signs();
  for (Sign& s : signs) s = flip(s);
  return GaussDiagram::from_sequence(seq, signs);
}

GaussDiagram inverse(const GaussDiagram& d) {
  std::vector<Endpoint> seq(d.sequence().rbegin(), d.sequence().rend());
  return GaussDiagram::from_sequence(seq, d.signs());
}

bool diagrams_equal(const GaussDiagram& a, const GaussDiagram& b) {
  return a.size() == b.size() && canonical_key(a) == canonical_key(b);
}

bool interlaced(const GaussDiagram& d, int arrow_a, int arrow_b) {
  int p = std::min(d.over_position(arrow_a), d.under_position(arrow_a));
  int q = std::max(d.over_position(arrow_a), d.under_position(arrow_a));
  auto inside = [&](int x) { return p < x && x < q; };
  return inside(d.over_position(arrow_b)) != inside(d.under_position(arrow_b));
}

int interlacement_degree(const GaussDiagram& d, int arrow) {
  int k = 0;
  for (int b = 0; b < d.size(); ++b) {
    if (b != arrow && interlaced(d, arrow, b)) ++k;
  }
  return k;
}

int carter_faces(const GaussDiagram& d) {
  int m = d.length();
  if (m == 0) return 0;
  // Half-edge 2*pos is the incoming end at pos, 2*pos+1 the outgoing end.
  auto in = [](int pos) { return 2 * pos; };
  auto out = [](int pos) { return 2 * pos + 1; };
  std::vector<int> rot(2 * m, -1);
  for (int a = 0; a < d.size(); ++a) {
    int p = d.over_position(a);
    int q = d.under_position(a);
    int cyc[4];
    if (d.sign(a) == Sign::Plus) {
      cyc[0] = out(p); cyc[1] = out(q); cyc[2] = in(p); cyc[3] = in(q);
    } else {
      cyc[0] = out(p); cyc[1] = in(q); cyc[2] = in(p); cyc[3] = out(q);
    }
    for (int i = 0; i < 4; ++i) rot[cyc[i]] = cyc[(i + 1) % 4];
  }
  auto other_end = [&](int h) {
    int pos = h / 2;
    return (h % 2 == 1) ? in((pos + 1) % m) : out((pos + m - 1) % m);
  };
  std::vector<char> seen(2 * m, 0);
  int faces = 0;
  for (int h0 = 0; h0 < 2 * m; ++h0) {
    if (seen[h0]) continue;
    ++faces;
    for (int h = h0; !seen[h]; h = rot[other_end(h)]) seen[h] = 1;
  }
  return faces;
}

int carter_genus(const GaussDiagram& d) {
  if (d.empty()) return 0;
  return (2 + d.size() - carter_faces(d)) / 2;
}

bool word_realizable(const GaussDiagram& d) {
  int n = d.size();
  std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) adj[a][b] = adj[b][a] = interlaced(d, a, b);
  }
  std::vector<int> degree(n, 0);
  for (int a = 0; a < n; ++a) {
    for (int b = 0; b < n; ++b) degree[a] += adj[a][b];
    if (degree[a] % 2) return false;
  }
  auto common = [&](int a, int b) {
    int c = 0;
    for (int v = 0; v < n; ++v) c += adj[a][v] && adj[b][v];
    return c;
  };
  // cut[a][b] marks interlaced pairs with an even number of common neighbours; they must form a cocycle.
  std::vector<std::vector<char>> cut(n, std::vector<char>(n, 0));
  for (int a = 0; a < n; ++a) {
    for (int b = a + 1; b < n; ++b) {
      int c = common(a, b);
      if (!adj[a][b] && c % 2) return false;
      if (adj[a][b] && c % 2 == 0) cut[a][b] = cut[b][a] = 1;
    }
  }
  std::vector<int> colour(n, -1);
  for (int s = 0; s < n; ++s) {
    if (colour[s] != -1) continue;
    colour[s] = 0;
    std::vector<int> stack{s};
    while (!stack.empty()) {
      int u = stack.back();
      stack.pop_back();
      for (int v = 0; v < n; ++v) {
        if (!adj[u][v]) continue;
        int want = colour[u] ^ cut[u][v];
        if (colour[v] == -1) {
          colour[v] = want;
          stack.push_back(v);
        } else if (colour[v] != want) {
          return false;
        }
      }
    }
  }
  return true;
}

bool is_realizable(const GaussDiagram& d) {
  if (d.empty()) return true;
  for (int a = 0; a < d.size(); ++a) {
    if (interlacement_degree(d, a) % 2) return false;
  }
  if (!word_realizable(d)) return false;
  // The word is planar; the given signs must also agree with a planar rotation system.
  return carter_genus(d) == 0;
}

}  // namespace vk
