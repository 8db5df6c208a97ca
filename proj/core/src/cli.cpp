#include "catena/cli.hpp"

#include <CLI11.hpp>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <map>
#include <sstream>

#include "catena/corpus.hpp"
#include "catena/dot.hpp"
#include "catena/error.hpp"
#include "catena/ext_lattice.hpp"
#include "catena/json_io.hpp"

namespace catena::cli {

namespace {

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(ErrorKind::ParseError, "cannot read " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void emit(const std::string& text, const std::string& out_path, std::ostream& out) {
  if (out_path.empty()) {
    out << text;
    return;
  }
  std::ofstream f(out_path, std::ios::binary);
  if (!f) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
  f << text;
}

std::vector<std::string> split_csv(const std::string& s) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : s) {
    if (c == ',') {
      if (!cur.empty()) out.push_back(cur);
      cur.clear();
    } else {
      cur += c;
    }
  }
  if (!cur.empty()) out.push_back(cur);
  return out;
}

struct Options {
  std::string input, out_path, format = "json", checks;
  uint32_t cap = 0;  // 0 = default
  int sample = -1;
  uint64_t seed = 0;
  bool inject_fault = false;
};

Caps caps_from(const Options& o) {
  Caps caps;
  if (const char* env = std::getenv("CATENA_CAP")) {
    uint32_t v = static_cast<uint32_t>(std::strtoul(env, nullptr, 10));
    if (v > 0) {
      caps.ring_cap = v;
      caps.enumerate_cap = v;
      caps.corpus_max_order = std::min(caps.corpus_max_order, v);
    }
  }
  if (o.cap > 0) {
    caps.ring_cap = std::max(o.cap, 2u);
    caps.enumerate_cap = std::max(o.cap, 2u);
    caps.corpus_max_order = std::min<uint32_t>(16, std::max(o.cap, 2u));
  }
  return caps;
}

int run_lattice(const Options& o, std::ostream& out) {
  Caps caps = caps_from(o);
  std::vector<std::string> checks =
      o.checks.empty() ? std::vector<std::string>{"graded", "distributive", "length",
                                                  "loewy", "p_extension"}
                       : split_csv(o.checks);
  for (const auto& c : checks) {
    const auto& known = known_lattice_checks();
    if (std::find(known.begin(), known.end(), c) == known.end())
      throw Error(ErrorKind::SpecError, "unknown check " + c);
  }
  FiniteLattice L = parse_lattice_json(read_file(o.input));
  if (o.format == "dot") {
    emit(to_dot(L), o.out_path, out);
    return 0;
  }
  std::string rep = o.format == "text"
                        ? lattice_report_text(L, checks, caps.supersolvable_cap)
                        : lattice_report_json(L, checks, caps.supersolvable_cap);
  emit(rep, o.out_path, out);
  return 0;
}

int run_ring(const Options& o, std::ostream& out) {
  Caps caps = caps_from(o);
  RingExtension ext = parse_extension_spec(read_file(o.input), caps.ring_cap);
  ExtensionLattice EL = enumerate_interval(ext, caps.enumerate_cap);
  CatenarityReport rep = analyze_catenarity(EL);
  if (o.format == "dot") {
    std::map<std::pair<int, int>, std::string> attrs;
    for (const auto& [e, info] : EL.edges) {
      const char* color = info.type == MinimalType::Inert       ? "blue"
                          : info.type == MinimalType::Decomposed ? "darkgreen"
                                                                 : "red";
      attrs[e] = std::string("color=") + color + ", label=\"" +
                 to_string(info.type) + "\"";
    }
    emit(to_dot(EL.lattice, attrs), o.out_path, out);
    return 0;
  }
  std::string text =
      o.format == "text" ? ring_report_text(EL, rep) : ring_report_json(EL, rep);
  emit(text, o.out_path, out);
  bool failed = !rep.thm_3_62_ok || !rep.cor_3_63_ok || !rep.prop_3_411_ok ||
                !rep.prop_3_42_ok || !rep.prop_3_6_ok ||
                (rep.unbranched && (!rep.thm_3_5_ok || !rep.all_elements_local));
  return failed ? 1 : 0;
}

int run_group(const Options& o, std::ostream& out) {
  Caps caps = caps_from(o);
  FiniteGroup G = parse_group_spec(read_file(o.input), caps.group_bound);
  Prop3814Report rep = check_prop_3814(G, caps.group_bound, caps.supersolvable_cap);
  SubgroupLattice SL = subgroup_lattice(G, caps.group_bound);
  if (o.format == "dot") {
    emit(to_dot(SL.lattice, {}, "subgroups"), o.out_path, out);
    return 0;
  }
  std::string text = o.format == "text" ? group_report_text("G", G, rep, SL)
                                        : group_report_json("G", G, rep, SL);
  emit(text, o.out_path, out);
  return (rep.iwasawa_ok && rep.lattice_equiv_ok) ? 0 : 1;
}

int run_tower(const Options& o, std::ostream& out) {
  FieldTower T = parse_tower_spec(read_file(o.input));
  DLatticeReport rep = check_D_lattice(T);
  if (o.format == "dot") {
    emit(to_dot(rep.d_lat, {}, "minimal_polynomials"), o.out_path, out);
    return 0;
  }
  std::string text =
      o.format == "text" ? tower_report_text(T, rep) : tower_report_json(T, rep);
  emit(text, o.out_path, out);
  return rep.ok() ? 0 : 1;
}

int run_verify(const Options& o, std::ostream& out) {
  VerifyOptions vo;
  vo.caps = caps_from(o);
  vo.sample = o.sample;
  vo.seed = o.seed;
  vo.inject_fault = o.inject_fault;
  VerifyReport rep = ::catena::run_verify(vo);
  std::string text =
      o.format == "text" ? verify_report_text(rep) : verify_report_json(rep);
  emit(text, o.out_path, out);
  return rep.ok() ? 0 : 1;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"finite ring extension lattice toolkit"};
  app.require_subcommand(1);

  Options o;
  auto add_common = [&](CLI::App* cmd, bool needs_input) {
    if (needs_input)
      cmd->add_option("--input", o.input, "input JSON file")->required();
    cmd->add_option("--format", o.format, "json | dot | text")
        ->check(CLI::IsMember({"json", "dot", "text"}));
    cmd->add_option("--out", o.out_path, "output path (default stdout)");
    cmd->add_option("--cap", o.cap, "size cap override");
  };

  CLI::App* lattice = app.add_subcommand("lattice", "order-theoretic checks");
  add_common(lattice, true);
  lattice->add_option("--checks", o.checks, "comma-separated check names");

  CLI::App* ring = app.add_subcommand("ring", "enumerate and classify [R,S]");
  add_common(ring, true);

  CLI::App* group = app.add_subcommand("group", "subgroup lattice checks");
  add_common(group, true);

  CLI::App* tower = app.add_subcommand("tower", "minimal-polynomial lattice checks");
  add_common(tower, true);

  CLI::App* verify = app.add_subcommand("verify", "run the verification suite");
  add_common(verify, false);
  verify->add_option("--sample", o.sample, "random corpus subsample size");
  verify->add_option("--seed", o.seed, "subsample seed");
  verify->add_flag("--inject-fault", o.inject_fault,
                   "negative control: corrupt one table");

  std::vector<std::string> argv = args;
  std::vector<char*> cargs;
  std::string prog = "catena";
  cargs.push_back(prog.data());
  for (auto& a : argv) cargs.push_back(a.data());
  try {
    app.parse(static_cast<int>(cargs.size()), cargs.data());
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      // --help and friends
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << "\n";
    return 2;
  }

  try {
    if (lattice->parsed()) return run_lattice(o, out);
    if (ring->parsed()) return run_ring(o, out);
    if (group->parsed()) return run_group(o, out);
    if (tower->parsed()) return run_tower(o, out);
    if (verify->parsed()) return run_verify(o, out);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    switch (e.kind()) {
      case ErrorKind::InconsistentCharacterization:
        return 1;
      default:
        return 2;
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}

}  // namespace catena::cli
