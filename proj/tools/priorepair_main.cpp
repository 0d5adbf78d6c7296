// Command-line frontend. Everything goes through the public C API.

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <CLI11.hpp>

#include "priorepair.h"

namespace {

struct InputFiles {
  std::string data, meta, constraints, rules, queries, tax;
};

void add_input_options(CLI::App* cmd, InputFiles& f) {
  cmd->add_option("--data", f.data, "dataset file (.dkb)")->required();
  cmd->add_option("--meta", f.meta, "meta database file (.meta)");
  cmd->add_option("--constraints", f.constraints, "denial constraints file (.dc)");
  cmd->add_option("--rules", f.rules, "preference rules file (.prefs)");
  cmd->add_option("--queries", f.queries, "query file (.ucq)");
  cmd->add_option("--tax", f.tax, "taxonomy file (.tax)");
}

std::string read_file(const std::string& path) {
  if (path.empty()) return {};
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read '" + path + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::string& path, const char* text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
  out << text;
  if (!out) throw std::runtime_error("cannot write '" + path + "'");
}

void ensure_dir(const std::string& dir) {
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw std::runtime_error("cannot create directory '" + dir + "'");
}

// Owned handle + owned strings, so early returns don't leak.
struct Kb {
  prq_kb* kb = nullptr;
  ~Kb() { prq_kb_free(kb); }
};

struct OwnedString {
  char* s = nullptr;
  ~OwnedString() { prq_string_free(s); }
};

int die(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return 1;
}

int die_status() { return die(prq_last_error()); }

int load_kb(const InputFiles& f, Kb& kb) {
  std::string data = read_file(f.data);
  std::string meta = read_file(f.meta);
  std::string dc = read_file(f.constraints);
  std::string ucq = read_file(f.queries);
  std::string prefs = read_file(f.rules);
  std::string tax = read_file(f.tax);
  if (prq_kb_load(data.c_str(), meta.c_str(), dc.c_str(), ucq.c_str(), prefs.c_str(), tax.c_str(), &kb.kb) != PRQ_OK) {
    return die_status();
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"priorepair — query answering over inconsistent data under prioritized repairs"};
  app.require_subcommand(1);
  int rc = 0;

  // conflicts
  auto* c_conflicts = app.add_subcommand("conflicts", "list the minimal inconsistent subsets");
  InputFiles cf;
  bool c_pretty = false;
  add_input_options(c_conflicts, cf);
  c_conflicts->add_flag("--pretty", c_pretty, "indented JSON");
  c_conflicts->callback([&] {
    Kb kb;
    if ((rc = load_kb(cf, kb))) return;
    OwnedString out;
    if (prq_conflicts_json(kb.kb, c_pretty, &out.s) != PRQ_OK) {
      rc = die_status();
      return;
    }
    std::cout << out.s;
  });

  // priority
  auto* c_priority = app.add_subcommand("priority", "compute the resolved priority relation");
  InputFiles pf;
  std::string p_strategy = "d";
  bool p_pretty = false;
  add_input_options(c_priority, pf);
  c_priority->add_option("--strategy", p_strategy, "cycle resolution: u, d, ru, g")->capture_default_str();
  c_priority->add_flag("--pretty", p_pretty, "indented JSON");
  c_priority->callback([&] {
    Kb kb;
    if ((rc = load_kb(pf, kb))) return;
    OwnedString out;
    if (prq_priority_json(kb.kb, p_strategy.c_str(), p_pretty, &out.s) != PRQ_OK) {
      rc = die_status();
      return;
    }
    std::cout << out.s;
  });

  // answer
  auto* c_answer = app.add_subcommand("answer", "decide query answers under a repair semantics");
  InputFiles af;
  std::string a_strategy = "d";
  std::string a_repair = "P";
  std::string a_sem = "AR";
  int a_jobs = 1;
  bool a_exact = false;
  bool a_pretty = false;
  add_input_options(c_answer, af);
  c_answer->add_option("--strategy", a_strategy, "cycle resolution: u, d, ru, g")->capture_default_str();
  c_answer->add_option("--repair", a_repair, "repair family: S, P, C")->capture_default_str();
  c_answer->add_option("--sem", a_sem, "entailment mode: brave, AR, IAR")->capture_default_str();
  c_answer->add_option("--jobs", a_jobs, "parallel answer tuples")->capture_default_str();
  c_answer->add_flag("--exact-causes", a_exact, "minimize causes before deciding (same verdicts)");
  c_answer->add_flag("--pretty", a_pretty, "indented JSON");
  c_answer->callback([&] {
    Kb kb;
    if ((rc = load_kb(af, kb))) return;
    OwnedString out;
    if (prq_answers_json(kb.kb, a_strategy.c_str(), a_repair.c_str(), a_sem.c_str(), a_jobs, a_exact, a_pretty,
                         &out.s) != PRQ_OK) {
      rc = die_status();
      return;
    }
    std::cout << out.s;
  });

  // repairs
  auto* c_repairs = app.add_subcommand("repairs", "enumerate the repair family (small instances)");
  InputFiles rf;
  std::string r_strategy = "d";
  std::string r_repair = "S";
  bool r_pretty = false;
  add_input_options(c_repairs, rf);
  c_repairs->add_option("--strategy", r_strategy, "cycle resolution: u, d, ru, g")->capture_default_str();
  c_repairs->add_option("--repair", r_repair, "repair family: S, P, C")->capture_default_str();
  c_repairs->add_flag("--pretty", r_pretty, "indented JSON");
  c_repairs->callback([&] {
    Kb kb;
    if ((rc = load_kb(rf, kb))) return;
    OwnedString out;
    if (prq_repairs_json(kb.kb, r_strategy.c_str(), r_repair.c_str(), r_pretty, &out.s) != PRQ_OK) {
      rc = die_status();
      return;
    }
    std::cout << out.s;
  });

  // emit-asp
  auto* c_emit = app.add_subcommand("emit-asp", "emit solver programs for the inputs");
  InputFiles ef;
  std::string e_query;
  std::string e_strategy = "d";
  std::string e_repair = "P";
  std::string e_sem = "AR";
  std::string e_out;
  add_input_options(c_emit, ef);
  c_emit->add_option("--query", e_query, "query name (default: first in the file)");
  c_emit->add_option("--strategy", e_strategy, "cycle resolution program to include")->capture_default_str();
  c_emit->add_option("--repair", e_repair, "repair family for the filter program")->capture_default_str();
  c_emit->add_option("--sem", e_sem, "entailment mode for the filter program")->capture_default_str();
  c_emit->add_option("--out", e_out, "directory to write .lp files into (default: stdout)");
  c_emit->callback([&] {
    Kb kb;
    if ((rc = load_kb(ef, kb))) return;
    OwnedString data, meta, constraints, causes, prefs, warnings;
    if (prq_emit_input(kb.kb, e_query.empty() ? nullptr : e_query.c_str(), &data.s, &meta.s, &constraints.s,
                       &causes.s, &prefs.s, &warnings.s) != PRQ_OK) {
      rc = die_status();
      return;
    }
    OwnedString priority, minconf, semantics;
    if (prq_emit_priority(e_strategy.c_str(), &priority.s) != PRQ_OK ||
        prq_emit_minconf(&minconf.s) != PRQ_OK ||
        prq_emit_semantics(e_repair.c_str(), e_sem.c_str(), &semantics.s) != PRQ_OK) {
      rc = die_status();
      return;
    }
    if (warnings.s[0]) std::cerr << warnings.s;
    const char* names[] = {"data", "meta", "constraints", "causes", "prefs", "priority", "minconf", "semantics"};
    const char* texts[] = {data.s, meta.s, constraints.s, causes.s, prefs.s, priority.s, minconf.s, semantics.s};
    if (e_out.empty()) {
      for (int i = 0; i < 8; ++i) std::cout << "%% " << names[i] << "\n" << texts[i];
      return;
    }
    ensure_dir(e_out);
    for (int i = 0; i < 8; ++i) write_file(e_out + "/" + names[i] + ".lp", texts[i]);
  });

  // gen
  auto* c_gen = app.add_subcommand("gen", "generate a synthetic fixture");
  unsigned long long g_facts = 0;
  double g_rate = 0.0;
  int g_arity = 2;
  int g_levels = 1;
  double g_density = 0.0;
  unsigned long long g_seed = 0;
  std::string g_out;
  std::string g_prefix = "gen";
  c_gen->add_option("--facts", g_facts, "number of facts")->required();
  c_gen->add_option("--conflict-rate", g_rate, "share of facts in conflicts")->required();
  c_gen->add_option("--max-conflict-arity", g_arity, "largest conflict size")->capture_default_str();
  c_gen->add_option("--levels", g_levels, "preference levels")->capture_default_str();
  c_gen->add_option("--pref-density", g_density, "share of facts ranked per level")->capture_default_str();
  c_gen->add_option("--seed", g_seed, "random seed")->capture_default_str();
  c_gen->add_option("--out", g_out, "output directory")->required();
  c_gen->add_option("--prefix", g_prefix, "output file prefix")->capture_default_str();
  c_gen->callback([&] {
    OwnedString dkb, dc, meta, prefs;
    if (prq_generate(g_facts, g_rate, g_arity, g_levels, g_density, g_seed, &dkb.s, &dc.s, &meta.s, &prefs.s) !=
        PRQ_OK) {
      rc = die_status();
      return;
    }
    ensure_dir(g_out);
    write_file(g_out + "/" + g_prefix + ".dkb", dkb.s);
    write_file(g_out + "/" + g_prefix + ".dc", dc.s);
    write_file(g_out + "/" + g_prefix + ".meta", meta.s);
    write_file(g_out + "/" + g_prefix + ".prefs", prefs.s);
  });

  try {
    CLI11_PARSE(app, argc, argv);
  } catch (const std::exception& e) {
    return die(e.what());
  }
  return rc;
}
