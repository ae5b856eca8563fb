#include "vk/seifert.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>

namespace vk {

SurfaceEvent SurfaceEvent::crossing(int label, Role role, Sign sign) {
  SurfaceEvent e;
  e.kind = Kind::Crossing;
  e.label = label;
  e.role = role;
  e.sign = sign;
  return e;
}

SurfaceEvent SurfaceEvent::traversal(int band, bool forward, int lane) {
  SurfaceEvent e;
  e.kind = Kind::Traversal;
  e.band = band;
  e.forward = forward;
  e.lane = lane;
  return e;
}

namespace {

Error syntax(const std::string& what) { return Error(ErrorKind::SyntaxError, what); }

int parse_int(std::string_view s, const std::string& what) {
  int v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (s.empty() || ec != std::errc() || ptr != s.data() + s.size()) throw syntax(what + " '" + std::string(s) + "'");
  return v;
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  if (s.empty()) return out;
  size_t begin = 0;
  while (true) {
    size_t at = s.find(sep, begin);
    out.push_back(s.substr(begin, at == std::string_view::npos ? std::string_view::npos : at - begin));
    if (at == std::string_view::npos) break;
    begin = at + 1;
  }
  return out;
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

Sign parse_sign(char c, const std::string& what) {
  if (c == '+') return Sign::Plus;
  if (c == '-') return Sign::Minus;
  throw syntax(what + ": sign must be + or -");
}

char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

SurfaceEvent parse_event(std::string_view tok) {
  std::string what = "event '" + std::string(tok) + "'";
  if (tok.size() < 3) throw syntax(what);
  if (tok.front() == 'B') {
    size_t at = tok.find_first_of("+-");
    if (at == std::string_view::npos) throw syntax(what + ": missing direction");
    int band = parse_int(tok.substr(1, at - 1), what + ": band");
    int lane = parse_int(tok.substr(at + 1), what + ": lane");
    if (band < 1 || lane < 0) throw syntax(what);
    return SurfaceEvent::traversal(band - 1, tok[at] == '+', lane);
  }
  Role role;
  if (tok.front() == 'O') role = Role::Over;
  else if (tok.front() == 'U') role = Role::Under;
  else throw syntax(what);
  int label = parse_int(tok.substr(1, tok.size() - 2), what + ": label");
  if (label < 1 || tok[1] == '0') throw syntax(what);
  return SurfaceEvent::crossing(label, role, parse_sign(tok.back(), what));
}

std::string event_token(const SurfaceEvent& e) {
  if (e.kind == SurfaceEvent::Kind::Traversal) {
    return "B" + std::to_string(e.band + 1) + (e.forward ? "+" : "-") + std::to_string(e.lane);
  }
  return std::string(1, e.role == Role::Over ? 'O' : 'U') + std::to_string(e.label) + sign_char(e.sign);
}

AttachSlot parse_slot(std::string_view tok) {
  std::string what = "attach slot '" + std::string(tok) + "'";
  if (tok.size() < 2 || tok.front() != 'a') throw syntax(what);
  bool primed = tok.back() == '\'';
  std::string_view digits = tok.substr(1, tok.size() - 1 - (primed ? 1 : 0));
  if (digits.empty() || digits.front() == '0') throw syntax(what);
  return {parse_int(digits, what) - 1, primed ? 1 : 0};
}

// Half-edges with an involution `twin` and the counter-clockwise successor `next` at each vertex.
struct RotationSystem {
  std::vector<int> vertex_of;
  std::vector<int> twin;
  std::vector<int> next;
  int vertices = 0;

  int add_vertex(int degree) {
    int first = static_cast<int>(next.size());
    for (int i = 0; i < degree; ++i) {
      vertex_of.push_back(vertices);
      twin.push_back(-1);
      next.push_back(first + (i + 1) % degree);
    }
    ++vertices;
    return first;
  }
  // Rebinds the counter-clockwise order of an existing vertex's half-edges.
  void set_order(const std::vector<int>& ccw) {
    for (size_t i = 0; i < ccw.size(); ++i) next[ccw[i]] = ccw[(i + 1) % ccw.size()];
  }
  void join(int a, int b) {
    twin[a] = b;
    twin[b] = a;
  }
  bool planar() const {
    int h = static_cast<int>(twin.size());
    for (int t : twin) {
      if (t < 0) return false;
    }
    std::vector<int> parent(vertices);
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int v) { return parent[v] == v ? v : parent[v] = find(parent[v]); };
    for (int e = 0; e < h; ++e) parent[find(vertex_of[e])] = find(vertex_of[twin[e]]);
    int components = 0;
    for (int v = 0; v < vertices; ++v) components += find(v) == v;
    std::vector<char> seen(h, 0);
    int faces = 0;
    for (int e0 = 0; e0 < h; ++e0) {
      if (seen[e0]) continue;
      ++faces;
      for (int e = e0; !seen[e]; e = next[twin[e]]) seen[e] = 1;
    }
    return vertices - h / 2 + faces == 2 * components;
  }
};

// Counter-clockwise order at a crossing given its four half-edges.
std::vector<int> crossing_order(Sign s, int in_over, int out_over, int in_under, int out_under) {
  if (s == Sign::Plus) return {out_over, out_under, in_over, in_under};
  return {out_over, in_under, in_over, out_under};
}

std::vector<std::string> attach_violations(const SurfaceDiagram& sd) {
  std::vector<std::string> out;
  const BandPresentation& p = sd.surface;
  if (p.genus < 0) return {"attach: negative genus"};
  int bands = 2 * p.genus;
  if (static_cast<int>(p.attach.size()) != 2 * bands) {
    out.push_back("attach: expected " + std::to_string(2 * bands) + " slots for genus " + std::to_string(p.genus));
    return out;
  }
  std::vector<std::array<int, 2>> seen(bands, {0, 0});
  for (const AttachSlot& s : p.attach) {
    if (s.band < 0 || s.band >= bands || s.end < 0 || s.end > 1) {
      out.push_back("attach: slot names a band outside 1.." + std::to_string(bands));
      return out;
    }
    ++seen[s.band][s.end];
  }
  for (int b = 0; b < bands; ++b) {
    if (seen[b][0] != 1 || seen[b][1] != 1) out.push_back("attach: band " + std::to_string(b + 1) + " needs one a and one a' slot");
  }
  if (!out.empty()) return out;
  int m = static_cast<int>(p.attach.size());
  bool alternating = m == 0;
  for (int offset = 0; offset < 4 && !alternating; ++offset) {
    bool ok = true;
    for (int i = 0; i < m && ok; i += 4) {
      auto at = [&](int k) { return p.attach[(offset + i + k) % m].band; };
      ok = at(0) == at(2) && at(1) == at(3) && at(0) != at(1);
    }
    alternating = ok;
  }
  if (!alternating) out.push_back("attach: slots do not alternate as x,y,x',y' blocks");
  return out;
}

std::vector<std::string> band_crossing_violations(const SurfaceDiagram& sd) {
  std::vector<std::string> out;
  int bands = 2 * sd.surface.genus;
  std::map<int, std::set<int>> stations;
  std::set<std::pair<int, int>> used;
  for (const BandCrossing& c : sd.surface.crossings) {
    if (c.over_band < 0 || c.over_band >= bands || c.under_band < 0 || c.under_band >= bands) {
      out.push_back("bandcross: band outside 1.." + std::to_string(bands));
      continue;
    }
    if (c.pos_over < 0 || c.pos_under < 0) {
      out.push_back("bandcross: negative position");
      continue;
    }
    for (auto st : {std::pair{c.over_band, c.pos_over}, std::pair{c.under_band, c.pos_under}}) {
      if (!used.insert(st).second) {
        out.push_back("bandcross: station " + std::to_string(st.second) + " on band " + std::to_string(st.first + 1) + " used twice");
      }
      stations[st.first].insert(st.second);
    }
  }
  for (auto& [band, s] : stations) {
    if (*s.rbegin() + 1 != static_cast<int>(s.size())) {
      out.push_back("bandcross: stations on band " + std::to_string(band + 1) + " are not 0..k-1");
    }
  }
  return out;
}

std::vector<std::string> event_violations(const SurfaceDiagram& sd) {
  std::vector<std::string> out;
  int bands = 2 * sd.surface.genus;
  if (sd.events.empty() && sd.surface.genus > 0) out.push_back("knot: empty event word on a surface of positive genus");
  std::string code;
  std::map<int, std::set<int>> lanes;
  std::map<int, int> runs;
  for (const SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Crossing) {
      if (!code.empty()) code += ',';
      code += event_token(e);
    } else if (e.band < 0 || e.band >= bands) {
      out.push_back("knot: traversal of band " + std::to_string(e.band + 1) + " outside 1.." + std::to_string(bands));
    } else {
      if (!lanes[e.band].insert(e.lane).second) out.push_back("knot: lane " + std::to_string(e.lane) + " of band " + std::to_string(e.band + 1) + " used twice");
      ++runs[e.band];
    }
  }
  for (auto& [band, s] : lanes) {
    if (*s.rbegin() + 1 != runs[band]) out.push_back("knot: lanes on band " + std::to_string(band + 1) + " are not 0..m-1");
  }
  try {
    parse_gauss_code(code);
  } catch (const Error& err) {
    out.push_back(std::string("knot: crossing events are not a Gauss code (") + err.what() + ")");
  }
  return out;
}

bool disk_planar(const SurfaceDiagram& sd) {
  if (sd.events.empty()) return true;
  RotationSystem g;
  // Crossing vertices: half-edges in_over, out_over, in_under, out_under.
  std::map<int, int> first;
  std::map<int, Sign> sign;
  for (const SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Crossing && !first.count(e.label)) {
      first[e.label] = g.add_vertex(4);
      sign[e.label] = e.sign;
    }
  }
  for (auto [label, h] : first) g.set_order(crossing_order(sign[label], h, h + 1, h + 2, h + 3));
  // Boundary points: half-edge 0 toward the knot, 1 toward infinity. Keyed by (band, end, lane).
  std::map<std::array<int, 3>, int> point;
  struct Node {
    int in = -1, out = -1;
  };
  std::vector<Node> nodes;
  for (const SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Crossing) {
      int h = first[e.label] + (e.role == Role::Over ? 0 : 2);
      nodes.push_back({h, h + 1});
    } else {
      int leave = g.add_vertex(2), arrive = g.add_vertex(2);
      point[{e.band, e.forward ? 0 : 1, e.lane}] = leave;
      point[{e.band, e.forward ? 1 : 0, e.lane}] = arrive;
      nodes.push_back({leave, -1});
      nodes.push_back({-1, arrive});
    }
  }
  for (size_t i = 0; i < nodes.size(); ++i) {
    if (nodes[i].out == -1) continue;
    g.join(nodes[i].out, nodes[(i + 1) % nodes.size()].in);
  }
  if (!point.empty()) {
    std::vector<int> around;
    for (const AttachSlot& s : sd.surface.attach) {
      int m = lane_count(sd, s.band);
      for (int k = 0; k < m; ++k) {
        int lane = s.end == 0 ? k : m - 1 - k;
        around.push_back(point.at({s.band, s.end, lane}) + 1);
      }
    }
    // Seen from outside the disk the boundary order is reversed.
    int inf = g.add_vertex(static_cast<int>(around.size()));
    std::reverse(around.begin(), around.end());
    for (size_t i = 0; i < around.size(); ++i) g.join(inf + static_cast<int>(i), around[i]);
  }
  return g.planar();
}

bool bands_planar(const SurfaceDiagram& sd) {
  int bands = 2 * sd.surface.genus;
  if (bands == 0) return true;
  RotationSystem g;
  int center = g.add_vertex(2 * bands);
  std::map<std::pair<int, int>, int> end_vertex;
  for (size_t i = 0; i < sd.surface.attach.size(); ++i) {
    const AttachSlot& s = sd.surface.attach[i];
    int v = g.add_vertex(2);
    g.join(center + static_cast<int>(i), v);
    end_vertex[{s.band, s.end}] = v + 1;
  }
  // Station (band, pos) -> (in, out) half-edges along that band's core.
  std::map<std::pair<int, int>, std::pair<int, int>> station;
  for (const BandCrossing& c : sd.surface.crossings) {
    int h = g.add_vertex(4);
    g.set_order(crossing_order(c.sign, h, h + 1, h + 2, h + 3));
    station[{c.over_band, c.pos_over}] = {h, h + 1};
    station[{c.under_band, c.pos_under}] = {h + 2, h + 3};
  }
  for (int b = 0; b < bands; ++b) {
    int prev = end_vertex.at({b, 0});
    for (int pos = 0;; ++pos) {
      auto it = station.find({b, pos});
      if (it == station.end()) break;
      g.join(prev, it->second.first);
      prev = it->second.second;
    }
    g.join(prev, end_vertex.at({b, 1}));
  }
  return g.planar();
}

void require_valid(const SurfaceDiagram& sd) {
  auto v = validate(sd);
  if (!v.empty()) throw Error(ErrorKind::InvalidSurfaceDiagram, v.front());
}

std::vector<SurfaceEvent> normalized_events(const std::vector<SurfaceEvent>& events) {
  std::map<int, int> relabel;
  std::vector<SurfaceEvent> out = events;
  for (SurfaceEvent& e : out) {
    if (e.kind != SurfaceEvent::Kind::Crossing) continue;
    auto [it, fresh] = relabel.try_emplace(e.label, static_cast<int>(relabel.size()) + 1);
    e.label = it->second;
  }
  return out;
}

}  // namespace

SurfaceDiagram parse_surface_diagram(std::string_view text) {
  SurfaceDiagram sd;
  bool have_genus = false, have_attach = false, have_knot = false;
  for (std::string_view raw : split(text, '\n')) {
    std::string_view line = trim(raw);
    if (line.empty() || line.front() == '#') continue;
    size_t sp = line.find(' ');
    std::string_view key = line.substr(0, sp);
    std::string_view rest = sp == std::string_view::npos ? std::string_view{} : trim(line.substr(sp + 1));
    if (have_knot) throw syntax("content after the knot line");
    if (key == "genus") {
      if (have_genus) throw syntax("repeated genus line");
      sd.surface.genus = parse_int(rest, "genus");
      if (sd.surface.genus < 0) throw syntax("negative genus");
      have_genus = true;
    } else if (key == "attach") {
      if (!have_genus || have_attach) throw syntax("attach line must follow the genus line");
      for (std::string_view tok : split(rest, ',')) sd.surface.attach.push_back(parse_slot(trim(tok)));
      have_attach = true;
    } else if (key == "bandcross") {
      if (!have_attach) throw syntax("bandcross before attach");
      std::istringstream in{std::string(rest)};
      std::string o, u, po, pu, s, extra;
      if (!(in >> o >> u >> po >> pu >> s) || (in >> extra) || s.size() != 1) throw syntax("bandcross '" + std::string(rest) + "'");
      BandCrossing c{parse_int(o, "band") - 1, parse_int(u, "band") - 1, parse_int(po, "position"), parse_int(pu, "position"),
                     parse_sign(s[0], "bandcross")};
      sd.surface.crossings.push_back(c);
    } else if (key == "knot") {
      if (!have_attach) throw syntax("knot before attach");
      for (std::string_view tok : split(rest, ',')) sd.events.push_back(parse_event(trim(tok)));
      have_knot = true;
    } else {
      throw syntax("unknown line '" + std::string(line) + "'");
    }
  }
  if (!have_knot) throw syntax("missing knot line");
  return sd;
}

std::string serialize(const SurfaceDiagram& sd) {
  std::string out = "genus " + std::to_string(sd.surface.genus) + "\nattach";
  for (size_t i = 0; i < sd.surface.attach.size(); ++i) {
    const AttachSlot& s = sd.surface.attach[i];
    out += (i == 0 ? " " : ",");
    out += "a" + std::to_string(s.band + 1) + (s.end ? "'" : "");
  }
  out += "\n";
  for (const BandCrossing& c : sd.surface.crossings) {
    out += "bandcross " + std::to_string(c.over_band + 1) + " " + std::to_string(c.under_band + 1) + " " +
           std::to_string(c.pos_over) + " " + std::to_string(c.pos_under) + " " + sign_char(c.sign) + "\n";
  }
  out += "knot";
  for (size_t i = 0; i < sd.events.size(); ++i) out += (i == 0 ? " " : ",") + event_token(sd.events[i]);
  return out + "\n";
}

int band_count(const SurfaceDiagram& sd) { return 2 * sd.surface.genus; }

int lane_count(const SurfaceDiagram& sd, int band) {
  int m = 0;
  for (const SurfaceEvent& e : sd.events) m += e.kind == SurfaceEvent::Kind::Traversal && e.band == band;
  return m;
}

int station_count(const SurfaceDiagram& sd, int band) {
  int k = 0;
  for (const BandCrossing& c : sd.surface.crossings) k += (c.over_band == band) + (c.under_band == band);
  return k;
}

std::vector<std::string> validate(const SurfaceDiagram& sd) {
  std::vector<std::string> out = attach_violations(sd);
  bool attach_ok = out.empty();
  auto crossings = band_crossing_violations(sd);
  auto events = event_violations(sd);
  out.insert(out.end(), crossings.begin(), crossings.end());
  out.insert(out.end(), events.begin(), events.end());
  if (attach_ok && crossings.empty() && !bands_planar(sd)) out.push_back("bandcross: band projection is not planar");
  if (attach_ok && events.empty() && !disk_planar(sd)) out.push_back("knot: diagram does not embed in the disk");
  return out;
}

GaussDiagram kappa(const SurfaceDiagram& sd) {
  require_valid(sd);
  std::string code;
  for (const SurfaceEvent& e : sd.events) {
    if (e.kind != SurfaceEvent::Kind::Crossing) continue;
    if (!code.empty()) code += ',';
    code += event_token(e);
  }
  return parse_gauss_code(code);
}

int linking_number(const SurfaceDiagram& sd) {
  require_valid(sd);
  // Directions of the knot lanes on each band relative to its core.
  std::map<int, std::vector<int>> lanes;
  for (const SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Traversal) lanes[e.band].push_back(e.forward ? 1 : -1);
  }
  // The two boundary strands of a band run with and against its core.
  const int strands[2] = {1, -1};
  int total = 0;
  for (const BandCrossing& c : sd.surface.crossings) {
    int eps = sign_value(c.sign);
    for (int lane : lanes[c.over_band]) {
      for (int strand : strands) total += eps * lane * strand;
    }
    for (int strand : strands) {
      for (int lane : lanes[c.under_band]) total += eps * strand * lane;
    }
  }
  return total / 2;
}

std::string to_string(const CoverMove& m) {
  std::string s = m.kind == CoverMoveKind::Loop ? "Loop" : "Pass";
  if (m.kind == CoverMoveKind::Pass || !m.forward) return s + (m.forward ? "" : "-") + "[record " + std::to_string(m.record) + "]";
  return s + "[band " + std::to_string(m.band + 1) + " at " + std::to_string(m.position) + (m.first_over ? " over " : " under ") +
         sign_char(m.sign) + "]";
}

std::vector<CoverMove> cover_moves(const SurfaceDiagram& sd) {
  std::vector<CoverMove> out;
  const auto& rec = sd.surface.crossings;
  for (int r = 0; r < static_cast<int>(rec.size()); ++r) {
    CoverMove pass;
    pass.kind = CoverMoveKind::Pass;
    pass.record = r;
    out.push_back(pass);
    if (rec[r].over_band == rec[r].under_band && std::abs(rec[r].pos_over - rec[r].pos_under) == 1) {
      CoverMove back;
      back.forward = false;
      back.record = r;
      out.push_back(back);
    }
  }
  for (int b = 0; b < band_count(sd); ++b) {
    int k = station_count(sd, b);
    for (int p = 0; p <= k; ++p) {
      for (bool over : {true, false}) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          CoverMove m;
          m.band = b;
          m.position = p;
          m.first_over = over;
          m.sign = s;
          out.push_back(m);
        }
      }
    }
  }
  return out;
}

SurfaceDiagram loop_move(const SurfaceDiagram& sd, const CoverMove& m) {
  auto invalid = [&]() { return Error(ErrorKind::InvalidSite, to_string(m)); };
  if (m.kind != CoverMoveKind::Loop) throw invalid();
  SurfaceDiagram out = sd;
  auto& rec = out.surface.crossings;
  auto shift = [&](int band, int from, int by) {
    for (BandCrossing& c : rec) {
      if (c.over_band == band && c.pos_over >= from) c.pos_over += by;
      if (c.under_band == band && c.pos_under >= from) c.pos_under += by;
    }
  };
  if (m.forward) {
    if (m.band < 0 || m.band >= band_count(sd) || m.position < 0 || m.position > station_count(sd, m.band)) throw invalid();
    shift(m.band, m.position, 2);
    int p = m.position;
    rec.push_back({m.band, m.band, m.first_over ? p : p + 1, m.first_over ? p + 1 : p, m.sign});
    return out;
  }
  if (m.record < 0 || m.record >= static_cast<int>(rec.size())) throw invalid();
  BandCrossing c = rec[m.record];
  if (c.over_band != c.under_band || std::abs(c.pos_over - c.pos_under) != 1) throw invalid();
  rec.erase(rec.begin() + m.record);
  shift(c.over_band, std::max(c.pos_over, c.pos_under) + 1, -2);
  return out;
}

SurfaceDiagram pass_move(const SurfaceDiagram& sd, const CoverMove& m) {
  if (m.kind != CoverMoveKind::Pass || m.record < 0 || m.record >= static_cast<int>(sd.surface.crossings.size())) {
    throw Error(ErrorKind::InvalidSite, to_string(m));
  }
  SurfaceDiagram out = sd;
  BandCrossing& c = out.surface.crossings[m.record];
  std::swap(c.over_band, c.under_band);
  std::swap(c.pos_over, c.pos_under);
  c.sign = flip(c.sign);
  return out;
}

SurfaceDiagram apply_cover_move(const SurfaceDiagram& sd, const CoverMove& m) {
  return m.kind == CoverMoveKind::Loop ? loop_move(sd, m) : pass_move(sd, m);
}

bool surface_equal(const SurfaceDiagram& a, const SurfaceDiagram& b) {
  auto ca = a.surface.crossings, cb = b.surface.crossings;
  std::sort(ca.begin(), ca.end());
  std::sort(cb.begin(), cb.end());
  return a.surface.genus == b.surface.genus && a.surface.attach == b.surface.attach && ca == cb &&
         normalized_events(a.events) == normalized_events(b.events);
}

BandPresentation standard_presentation(int genus) {
  BandPresentation p;
  p.genus = genus;
  for (int k = 0; k < genus; ++k) {
    int x = 2 * k, y = 2 * k + 1;
    p.attach.insert(p.attach.end(), {{x, 0}, {y, 0}, {x, 1}, {y, 1}});
    p.crossings.push_back({x, y, 0, 0, Sign::Minus});
  }
  return p;
}

SurfaceDiagram add_handle(const SurfaceDiagram& sd) {
  SurfaceDiagram out = sd;
  int x = band_count(sd), y = x + 1;
  out.surface.genus += 1;
  out.surface.attach.insert(out.surface.attach.end(), {{x, 0}, {y, 0}, {x, 1}, {y, 1}});
  out.surface.crossings.push_back({x, y, 0, 0, Sign::Minus});
  return out;
}

namespace {

// Slides the end at attach[i] along the band whose end is its neighbour on the given side.
void slide(SurfaceDiagram& sd, int i, bool before) {
  auto& w = sd.surface.attach;
  int n = static_cast<int>(w.size());
  AttachSlot z = w[i];
  AttachSlot x = w[(i + (before ? 1 : n - 1)) % n];
  int mz = lane_count(sd, z.band), mx = lane_count(sd, x.band);
  // New lanes on x, indexed by the counter-clockwise rank of the matching lane at z's end.
  bool shift_old = (before && x.end == 0) || (!before && x.end == 1);
  auto new_lane = [&](int rank) {
    if (before) return x.end == 0 ? rank : mx + mz - 1 - rank;
    return x.end == 0 ? mx + rank : mz - 1 - rank;
  };
  std::vector<SurfaceEvent> events;
  for (const SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Traversal && e.band == x.band) {
      SurfaceEvent f = e;
      if (shift_old) f.lane += mz;
      events.push_back(f);
      continue;
    }
    if (e.kind != SurfaceEvent::Kind::Traversal || e.band != z.band) {
      events.push_back(e);
      continue;
    }
    int rank = z.end == 0 ? e.lane : mz - 1 - e.lane;
    bool enters_at_z = e.forward == (z.end == 0);
    if (enters_at_z) {
      events.push_back(SurfaceEvent::traversal(x.band, x.end == 0, new_lane(rank)));
      events.push_back(e);
    } else {
      events.push_back(e);
      events.push_back(SurfaceEvent::traversal(x.band, x.end == 1, new_lane(rank)));
    }
  }
  sd.events = std::move(events);
  w.erase(w.begin() + i);
  AttachSlot xbar{x.band, 1 - x.end};
  int at = static_cast<int>(std::find(w.begin(), w.end(), xbar) - w.begin());
  w.insert(w.begin() + (before ? at + 1 : at), z);
}

void flip_band(SurfaceDiagram& sd, int band) {
  int m = lane_count(sd, band);
  for (SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Traversal && e.band == band) {
      e.lane = m - 1 - e.lane;
      e.forward = !e.forward;
    }
  }
  for (AttachSlot& s : sd.surface.attach) {
    if (s.band == band) s.end = 1 - s.end;
  }
}

// Brings the attach word of a one-boundary disk-band surface to x,y,x',y' blocks by band slides.
void normalize_attach(SurfaceDiagram& sd) {
  auto& w = sd.surface.attach;
  int n = static_cast<int>(w.size());
  auto find = [&](AttachSlot s) { return static_cast<int>(std::find(w.begin(), w.end(), s) - w.begin()); };
  for (int start = 0; start < n; start += 4) {
    AttachSlot x = w[start];
    int px = start, pxb = find({x.band, 1 - x.end});
    int py = -1;
    for (int k = px + 1; k < pxb && py == -1; ++k) {
      int other = find({w[k].band, 1 - w[k].end});
      if (other > pxb) py = k;
    }
    if (py == -1) throw Error(ErrorKind::InvalidSurfaceDiagram, "band without a dual band; surface has several boundary components");
    AttachSlot y = w[py];
    while (true) {
      px = find(x);
      pxb = find({x.band, 1 - x.end});
      py = find(y);
      int pyb = find({y.band, 1 - y.end});
      if (py > px + 1) slide(sd, py - 1, true);
      else if (pxb > py + 1) slide(sd, pxb - 1, true);
      else if (pyb > pxb + 1) slide(sd, pyb - 1, true);
      else break;
    }
  }
}


// Boundary circles of the disk-band surface, as labels of the disk segments after each slot.
std::vector<int> boundary_circles(const std::vector<AttachSlot>& w) {
  int n = static_cast<int>(w.size());
  auto pos = [&](AttachSlot s) { return static_cast<int>(std::find(w.begin(), w.end(), s) - w.begin()); };
  std::vector<int> circle(n, -1);
  int count = 0;
  for (int i0 = 0; i0 < n; ++i0) {
    if (circle[i0] != -1) continue;
    for (int i = i0; circle[i] == -1;) {
      circle[i] = count;
      AttachSlot s = w[(i + 1) % n];
      i = pos({s.band, 1 - s.end});
    }
    ++count;
  }
  return circle;
}

int separating_band(const SurfaceDiagram& sd) {
  const auto& w = sd.surface.attach;
  std::vector<int> circle = boundary_circles(w);
  for (int i = 0; i < static_cast<int>(w.size()); ++i) {
    int j = static_cast<int>(std::find(w.begin(), w.end(), AttachSlot{w[i].band, 1 - w[i].end}) - w.begin());
    if (circle[i] != circle[j]) return w[i].band;
  }
  return -1;
}

// Slides one end of the band around the boundary circle that follows it until the two ends meet,
// then removes the band; its lanes become short arcs in the disk.
void drop_band(SurfaceDiagram& sd, int band) {
  auto& w = sd.surface.attach;
  auto pos = [&](AttachSlot s) { return static_cast<int>(std::find(w.begin(), w.end(), s) - w.begin()); };
  AttachSlot e{band, 0};
  while (true) {
    int i = pos(e);
    AttachSlot next = w[(i + 1) % w.size()];
    if (next.band == band) break;
    slide(sd, i, true);
  }
  std::erase_if(sd.events, [&](const SurfaceEvent& ev) { return ev.kind == SurfaceEvent::Kind::Traversal && ev.band == band; });
  std::erase_if(w, [&](const AttachSlot& s) { return s.band == band; });
  for (AttachSlot& s : w) s.band -= s.band > band;
  for (SurfaceEvent& ev : sd.events) {
    if (ev.kind == SurfaceEvent::Kind::Traversal && ev.band > band) --ev.band;
  }
}

}  // namespace

SurfaceDiagram embed_on_standard_surface(const GaussDiagram& d) {
  SurfaceDiagram sd;
  int n = d.size(), m = d.length();
  if (n == 0) return sd;
  auto in = [](int pos) { return 2 * pos; };
  auto out = [](int pos) { return 2 * pos + 1; };
  std::vector<int> rot(2 * m), vertex(2 * m);
  for (int a = 0; a < n; ++a) {
    int p = d.over_position(a), q = d.under_position(a);
    std::vector<int> cyc = crossing_order(d.sign(a), in(p), out(p), in(q), out(q));
    for (int i = 0; i < 4; ++i) {
      rot[cyc[i]] = cyc[(i + 1) % 4];
      vertex[cyc[i]] = a;
    }
  }
  auto twin = [&](int h) { return h % 2 ? in((h / 2 + 1) % m) : out((h / 2 + m - 1) % m); };
  // Arc k joins out(k) to in(k+1). Thicken a spanning tree of the crossings into the disk.
  std::vector<char> tree(m, 0), reached(n, 0);
  reached[vertex[0]] = 1;
  for (bool grew = true; grew;) {
    grew = false;
    for (int k = 0; k < m; ++k) {
      int u = vertex[out(k)], v = vertex[in((k + 1) % m)];
      if (reached[u] != reached[v]) {
        reached[u] = reached[v] = 1;
        tree[k] = 1;
        grew = true;
      }
    }
  }
  // Every other arc becomes a band with one lane, end 0 at the start of the arc.
  std::vector<int> band_of_arc(m, -1);
  int bands = 0;
  for (int k = 0; k < m; ++k) {
    if (!tree[k]) band_of_arc[k] = bands++;
  }
  for (int h = 0, step = 0; step < 2 * m; ++step) {
    int k = h % 2 ? h / 2 : (h / 2 + m - 1) % m;
    if (tree[k]) {
      h = rot[twin(h)];
      continue;
    }
    sd.surface.attach.push_back({band_of_arc[k], h % 2 ? 0 : 1});
    h = rot[h];
  }
  for (int pos = 0; pos < m; ++pos) {
    int a = d.at(pos).arrow;
    sd.events.push_back(SurfaceEvent::crossing(a + 1, d.at(pos).role, d.sign(a)));
    if (!tree[pos]) sd.events.push_back(SurfaceEvent::traversal(band_of_arc[pos], true, 0));
  }
  // Bands separating two boundary circles are slid around one of them and dropped.
  while (true) {
    int b = separating_band(sd);
    if (b == -1) break;
    drop_band(sd, b);
  }
  bands = static_cast<int>(sd.surface.attach.size()) / 2;
  sd.surface.genus = bands / 2;
  normalize_attach(sd);
  // Rename bands so the blocks read a1,a2,a1',a2',...
  std::vector<int> rename(bands);
  for (int j = 0; j < bands / 2; ++j) {
    for (int t = 0; t < 2; ++t) {
      AttachSlot s = sd.surface.attach[4 * j + t];
      if (s.end == 1) flip_band(sd, s.band);
      rename[s.band] = 2 * j + t;
    }
  }
  for (AttachSlot& s : sd.surface.attach) s.band = rename[s.band];
  for (SurfaceEvent& e : sd.events) {
    if (e.kind == SurfaceEvent::Kind::Traversal) e.band = rename[e.band];
  }
  sd.surface.crossings = standard_presentation(sd.surface.genus).crossings;
  return sd;
}

}  // namespace vk
