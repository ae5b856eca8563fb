#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "vk/catalog.hpp"
#include "vk/error.hpp"
#include "vk/free_knot.hpp"
#include "vk/laurent.hpp"
#include "vk/moves.hpp"
#include "vk/parity.hpp"
#include "vk/sawollek.hpp"
#include "vk/seifert.hpp"

using json = nlohmann::ordered_json;
using namespace vk;

namespace {

enum Exit { Ok = 0, Internal = 1, Input = 2, Exhausted = 3 };

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Output {
  std::string command;
  json result;
  std::string text;  // human form, one trailing newline
  std::vector<std::string> diagnostics;
  int exit_code = Ok;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw InputError("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

// Codes may be given inline or as @file.
std::string code_arg(const std::string& arg) {
  if (arg.empty() || arg[0] != '@') return arg;
  std::string s = read_file(arg.substr(1));
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.pop_back();
  return s;
}

GaussDiagram gauss_arg(const std::string& arg) { return parse_gauss_code(code_arg(arg)); }

MoveApplication parse_move(const std::string& s) {
  auto bad = [&]() { return Error(ErrorKind::SyntaxError, "move '" + s + "'"); };
  size_t open = s.find('('), close = s.find(')');
  if (open == std::string::npos || close == std::string::npos || close < open) throw bad();
  std::string name = s.substr(0, open);
  MoveApplication m{MoveKind::R1Add, {}, 0};
  bool found = false;
  for (MoveKind k : {MoveKind::R1Add, MoveKind::R1Remove, MoveKind::R2Add, MoveKind::R2Remove, MoveKind::R3}) {
    if (to_string(k) == name) {
      m.kind = k;
      found = true;
    }
  }
  if (!found) throw bad();
  try {
    std::string inner = s.substr(open + 1, close - open - 1);
    std::stringstream ss(inner);
    for (std::string tok; std::getline(ss, tok, ',');) {
      size_t used = 0;
      m.site.push_back(std::stoi(tok, &used));
      if (used != tok.size()) throw bad();
    }
    std::string rest = s.substr(close + 1);
    if (!rest.empty()) {
      if (rest[0] != '#') throw bad();
      size_t used = 0;
      m.variant = std::stoi(rest.substr(1), &used);
      if (used != rest.size() - 1) throw bad();
    }
  } catch (const std::logic_error&) {
    throw bad();
  }
  return m;
}

std::string bool_text(bool b) { return b ? "true\n" : "false\n"; }

json parity_json(const GaussDiagram& d) {
  json out = json::object();
  for (const auto& [label, p] : parity_map(d)) out[std::to_string(label)] = to_string(p);
  return out;
}

json entry_json(const CatalogEntry& e) {
  return {{"name", e.name},
          {"kind", to_string(e.kind)},
          {"payload", e.payload},
          {"provenance", to_string(e.provenance)},
          {"notes", e.notes}};
}

void print(const Output& out, bool as_json) {
  if (as_json) {
    json env = {{"schema_version", 1}, {"command", out.command}, {"result", out.result}, {"diagnostics", out.diagnostics}};
    std::cout << env.dump(2) << "\n";
    return;
  }
  std::cout << out.text;
  for (const std::string& d : out.diagnostics) std::cerr << d << "\n";
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Virtual knot calculus: Gauss diagrams, parity, Sawollek polynomial, free knots, surface diagrams"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false, stats = false;
  app.add_flag("--json", as_json, "Print a JSON envelope");
  app.add_flag("--stats", stats, "Include search statistics");

  Output out;
  std::function<void()> action;

  std::string code, code2, file, pattern, candidate, move_text, name;
  SearchBounds bounds;
  double max_seconds = 0;

  auto* validate_cmd = app.add_subcommand("validate", "Parse a Gauss code, or check a surface diagram file");
  bool surface = false;
  validate_cmd->add_flag("--surface", surface, "Argument is a surface diagram file");
  validate_cmd->add_option("input", code, "Gauss code, @file, or surface file")->required();
  validate_cmd->callback([&]() {
    action = [&]() {
      if (!surface) {
        GaussDiagram d = gauss_arg(code);
        out = {"validate", {{"valid", true}, {"canonical", serialize(d)}}, serialize(d) + "\n"};
        return;
      }
      std::vector<std::string> v = validate(parse_surface_diagram(read_file(code)));
      out = {"validate", {{"valid", v.empty()}, {"violations", v}}, v.empty() ? "valid\n" : ""};
      for (const std::string& s : v) out.text += s + "\n";
      if (!v.empty()) out.exit_code = Input;
    };
  });

  auto* inv = app.add_subcommand("invariant", "Invariants of a Gauss code");
  inv->require_subcommand(1);
  auto add_invariant = [&](const char* sub, const char* help, std::function<void(const GaussDiagram&)> f) {
    auto* c = inv->add_subcommand(sub, help);
    c->add_option("code", code, "Gauss code or @file")->required();
    c->callback([&, f, sub]() {
      action = [&, f, sub]() {
        out.command = std::string("invariant ") + sub;
        f(gauss_arg(code));
      };
    });
  };
  add_invariant("odd-writhe", "Odd writhe", [&](const GaussDiagram& d) {
    out.result = odd_writhe(d);
    out.text = std::to_string(odd_writhe(d)) + "\n";
  });
  add_invariant("writhe", "Writhe", [&](const GaussDiagram& d) {
    out.result = writhe(d);
    out.text = std::to_string(writhe(d)) + "\n";
  });
  add_invariant("parity", "Gaussian parity per label", [&](const GaussDiagram& d) {
    out.result = parity_json(d);
    out.text = out.result.dump() + "\n";
  });
  add_invariant("sawollek", "Normalized Sawollek polynomial", [&](const GaussDiagram& d) {
    std::string p = normalized_sawollek(d).to_string();
    out.result = p;
    out.text = p + "\n";
  });
  add_invariant("realizable", "Whether the code is classical", [&](const GaussDiagram& d) {
    out.result = is_realizable(d);
    out.text = bool_text(is_realizable(d));
  });

  auto* moves = app.add_subcommand("moves", "Reidemeister moves on Gauss codes");
  moves->require_subcommand(1);
  auto* moves_list = moves->add_subcommand("list", "List the applicable moves");
  moves_list->add_option("code", code, "Gauss code or @file")->required();
  moves_list->add_option("--max-crossings", bounds.max_crossings, "Largest diagram an added move may produce");
  moves_list->callback([&]() {
    action = [&]() {
      out.command = "moves list";
      out.result = json::array();
      GaussDiagram d = gauss_arg(code);
      for (const MoveApplication& m : enumerate_moves(d, bounds)) {
        std::string result = serialize(apply_move(d, m));
        out.result.push_back({{"move", to_string(m)}, {"result", result}});
        out.text += to_string(m) + " " + result + "\n";
      }
    };
  });
  auto* moves_apply = moves->add_subcommand("apply", "Apply one move, written as in moves list");
  moves_apply->add_option("code", code, "Gauss code or @file")->required();
  moves_apply->add_option("move", move_text, "e.g. R2Add(0,1)#3")->required();
  moves_apply->callback([&]() {
    action = [&]() {
      std::string result = serialize(apply_move(gauss_arg(code), parse_move(move_text)));
      out = {"moves apply", result, result + "\n"};
    };
  });

  auto* equiv = app.add_subcommand("equiv", "Bounded search for a move sequence between two codes");
  equiv->add_option("source", code, "Gauss code or @file")->required();
  equiv->add_option("target", code2, "Gauss code or @file")->required();
  equiv->add_option("--max-crossings", bounds.max_crossings, "Largest intermediate diagram");
  equiv->add_option("--max-states", bounds.max_states, "Most diagrams visited");
  equiv->add_option("--max-seconds", max_seconds, "Time cap; 0 for none");
  equiv->callback([&]() {
    action = [&]() {
      if (max_seconds > 0) bounds.max_seconds = max_seconds;
      SearchOutcome r = bounded_equiv_search(gauss_arg(code), gauss_arg(code2), bounds);
      out.command = "equiv";
      json path = json::array();
      for (const MoveApplication& m : r.path) path.push_back(to_string(m));
      out.result = {{"outcome", r.equivalent ? "Equivalent" : "Exhausted"}, {"path", path}};
      if (r.equivalent) {
        out.text = "Equivalent " + std::to_string(r.path.size()) + "\n";
        for (const MoveApplication& m : r.path) out.text += to_string(m) + "\n";
      } else {
        out.text = "Exhausted\n";
        out.diagnostics.push_back("no move sequence within the bounds");
        out.exit_code = Exhausted;
      }
      if (stats) {
        out.result["stats"] = {{"visited", r.stats.visited},
                               {"expanded", r.stats.expanded},
                               {"state_cap_hit", r.stats.state_cap_hit},
                               {"time_cap_hit", r.stats.time_cap_hit}};
        out.text += "visited " + std::to_string(r.stats.visited) + " expanded " + std::to_string(r.stats.expanded) + "\n";
      }
    };
  });

  auto* free = app.add_subcommand("free", "Free knots");
  free->require_subcommand(1);
  auto* free_project = free->add_subcommand("project", "Free knot of a Gauss code");
  free_project->add_option("code", code, "Gauss code or @file")->required();
  free_project->callback([&]() {
    action = [&]() {
      std::string f = serialize(project(gauss_arg(code)));
      out = {"free project", f, f + "\n"};
    };
  });
  auto* free_odd = free->add_subcommand("irreducibly-odd", "Whether a free code is irreducibly odd");
  free_odd->add_option("code", code, "Free code or @file")->required();
  free_odd->callback([&]() {
    action = [&]() {
      bool b = is_irreducibly_odd(parse_free_code(code_arg(code)));
      out = {"free irreducibly-odd", b, bool_text(b)};
    };
  });
  auto* free_rep = free->add_subcommand("reproduced", "Whether a smoothing of the candidate is the pattern");
  free_rep->add_option("--pattern", pattern, "Free code or @file")->required();
  free_rep->add_option("--candidate", candidate, "Free code or @file")->required();
  free_rep->callback([&]() {
    action = [&]() {
      bool b = contains_smoothing_isomorphic_to(parse_free_code(code_arg(candidate)), parse_free_code(code_arg(pattern)));
      out = {"free reproduced", b, bool_text(b)};
    };
  });

  auto* cover = app.add_subcommand("cover", "Knots on disk-band surfaces");
  cover->require_subcommand(1);
  auto* cover_kappa = cover->add_subcommand("kappa", "Gauss code of the knot on the surface");
  cover_kappa->add_option("file", file, "Surface diagram file")->required();
  cover_kappa->callback([&]() {
    action = [&]() {
      std::string g = serialize(kappa(parse_surface_diagram(read_file(file))));
      out = {"cover kappa", g, g + "\n"};
    };
  });
  auto* cover_linking = cover->add_subcommand("linking", "Linking number of the knot with the surface boundary");
  cover_linking->add_option("file", file, "Surface diagram file")->required();
  cover_linking->callback([&]() {
    action = [&]() {
      int lk = linking_number(parse_surface_diagram(read_file(file)));
      out = {"cover linking", lk, std::to_string(lk) + "\n"};
    };
  });
  auto* cover_move = cover->add_subcommand("move", "Apply a loop or pass move");
  CoverMove cm;
  bool loop = false, pass = false, backward = false, under = false;
  int band = 1;
  std::string sign = "+";
  auto* loop_opt = cover_move->add_flag("--loop", loop, "Loop move");
  auto* pass_opt = cover_move->add_flag("--pass", pass, "Pass move");
  loop_opt->excludes(pass_opt);
  cover_move->add_flag("--backward", backward, "Remove the curl at --record");
  cover_move->add_option("--band", band, "Band of a new curl, from 1");
  cover_move->add_option("--position", cm.position, "Station before which the curl goes");
  cover_move->add_flag("--under", under, "First station of the curl is under");
  cover_move->add_option("--sign", sign, "Sign of the curl")->check(CLI::IsMember({"+", "-"}));
  cover_move->add_option("--record", cm.record, "Band crossing record, from 0");
  cover_move->add_option("file", file, "Surface diagram file")->required();
  cover_move->callback([&]() {
    action = [&]() {
      if (loop == pass) throw InputError("give exactly one of --loop and --pass");
      cm.kind = loop ? CoverMoveKind::Loop : CoverMoveKind::Pass;
      cm.forward = !backward;
      cm.band = band - 1;
      cm.first_over = !under;
      cm.sign = sign == "+" ? Sign::Plus : Sign::Minus;
      SurfaceDiagram sd = parse_surface_diagram(read_file(file));
      std::string s = serialize(apply_cover_move(sd, cm));
      out = {"cover move", s, s};
    };
  });

  auto* catalog = app.add_subcommand("catalog", "Built-in examples");
  catalog->require_subcommand(1);
  catalog->add_subcommand("list", "Entry names")->callback([&]() {
    action = [&]() {
      out.command = "catalog list";
      out.result = json::array();
      for (const std::string& n : catalog_names()) {
        const CatalogEntry& e = catalog_entry(n);
        out.result.push_back({{"name", n}, {"kind", to_string(e.kind)}, {"provenance", to_string(e.provenance)}});
        out.text += n + "\t" + to_string(e.kind) + "\t" + to_string(e.provenance) + "\n";
      }
    };
  });
  auto* catalog_show = catalog->add_subcommand("show", "Print an entry's payload");
  catalog_show->add_option("name", name, "Entry name")->required();
  catalog_show->callback([&]() {
    action = [&]() {
      const CatalogEntry& e = catalog_entry(name);
      out = {"catalog show", entry_json(e), e.payload};
      if (e.kind != EntryKind::Surface) out.text += "\n";
    };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? Ok : Input;
  }

  try {
    action();
  } catch (const Error& e) {
    bool internal = e.kind() == ErrorKind::Overflow || e.kind() == ErrorKind::InexactDivision;
    out.result = nullptr;
    out.text.clear();
    out.diagnostics = {e.what()};
    out.exit_code = internal ? Internal : Input;
  } catch (const InputError& e) {
    out.result = nullptr;
    out.text.clear();
    out.diagnostics = {e.what()};
    out.exit_code = Input;
  } catch (const std::exception& e) {
    out.result = nullptr;
    out.text.clear();
    out.diagnostics = {std::string("internal error: ") + e.what()};
    out.exit_code = Internal;
  }
  print(out, as_json);
  return out.exit_code;
}
