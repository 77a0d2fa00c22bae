#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <regex>
#include <sstream>

#include "lpg/dwyer.hpp"
#include "lpg/lcenum.hpp"
#include "lpg/lowx.hpp"
#include "lpg/lpfile.hpp"
#include "lpg/nq.hpp"
#include "lpg/rs.hpp"

using json = nlohmann::ordered_json;
using namespace lpg;

namespace {

constexpr int kOk = 0, kError = 1, kPartial = 2;

struct Common {
  bool json = false;
  double max_seconds = 600;
  unsigned threads = 1;
  bool long_mode = false;
};

struct Input {
  LPresentation L;
  std::string text;
  std::string origin;
};

std::string fnv_hex(const std::string& s) {
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::optional<LPresentation> preset_by_name(const std::string& name) {
  if (name == "grigorchuk") return preset_grigorchuk();
  static const std::regex gamma(R"(gamma[:\-_]?(\d+))");
  std::smatch m;
  if (std::regex_match(name, m, gamma)) return preset_gamma(std::stoi(m[1]));
  return std::nullopt;
}

Input load(const std::string& source) {
  Input in;
  if (source == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    in.text = ss.str();
    in.origin = "stdin";
  } else if (std::filesystem::exists(source)) {
    std::ifstream f(source);
    std::ostringstream ss;
    ss << f.rdbuf();
    in.text = ss.str();
    in.origin = source;
  } else if (auto p = preset_by_name(source)) {
    in.text = print_lp(*p);
    in.origin = "preset " + source;
    in.L = std::move(*p);
    return in;
  } else {
    throw std::runtime_error("no such file or preset: " + source);
  }
  in.L = parse_lp(in.text);
  return in;
}

json invariants_json(const AbelianInvariants& a) {
  json t = json::array();
  for (const auto& d : a.torsion) t.push_back(d.get_str());
  return json{{"invariants", a.to_string()}, {"torsion", t}, {"free_rank", a.free_rank},
              {"rank", a.torsion.size() + a.free_rank}};
}

std::size_t section_rank(const AbelianInvariants& a) { return a.torsion.size() + a.free_rank; }

class Report {
 public:
  Report(std::string command, const Common& c) : command_(std::move(command)), common_(c) {}
  json parameters = json::object();
  json results = json::object();
  json certificates = json::object();
  std::string input_hash;
  std::ostringstream text;

  int emit(int code) {
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    if (common_.json) {
      json out{{"command", command_},
               {"input-hash", input_hash},
               {"parameters", parameters},
               {"results", results},
               {"certificates", certificates},
               {"timing", {{"seconds", secs}}}};
      std::cout << out.dump(2) << "\n";
    } else {
      std::cout << text.str();
    }
    return code;
  }

 private:
  std::string command_;
  const Common& common_;
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

double seconds_limit(const Common& c) { return c.long_mode ? 0 : c.max_seconds; }

int cmd_preset(const Common& c, const std::string& name, int d, bool emit) {
  LPresentation L;
  std::string label = name;
  if (name == "grigorchuk") {
    L = preset_grigorchuk();
  } else if (name == "gamma") {
    if (d < 3) throw std::runtime_error("preset gamma needs d >= 3");
    L = preset_gamma(d);
    label += " " + std::to_string(d);
  } else if (auto p = preset_by_name(name)) {
    L = *p;
  } else {
    throw std::runtime_error("unknown preset: " + name);
  }
  if (emit) {
    std::cout << print_lp(L);
    return kOk;
  }
  Report r("preset", c);
  r.input_hash = fnv_hex(print_lp(L));
  r.parameters = {{"name", name}, {"d", d}};
  r.results = {{"generators", L.alphabet().names()},
               {"fixed_relators", L.fixed_relators().size()},
               {"substitutions", L.substitutions().size()},
               {"iterated_relators", L.iterated_relators().size()},
               {"ascending", L.ascending()},
               {"invariant", L.invariant()}};
  r.text << "preset " << label << ": " << L.rank() << " generators, " << L.fixed_relators().size()
         << " fixed relators, " << L.substitutions().size() << " substitutions, " << L.iterated_relators().size()
         << " iterated relators" << (L.ascending() ? " (ascending)" : "") << "\n";
  return r.emit(kOk);
}

int cmd_abelian(const Common& c, const std::string& file) {
  Input in = load(file);
  Report r("abelian", c);
  r.input_hash = fnv_hex(in.text);
  r.parameters = {{"input", in.origin}};
  auto a = abelian_quotient(in.L);
  r.results = invariants_json(a);
  r.certificates = {{"status", "certified"}};
  r.text << "abelian invariants: " << a.to_string() << "\n";
  r.text << "torsion [";
  for (std::size_t i = 0; i < a.torsion.size(); ++i) r.text << (i ? "," : "") << a.torsion[i].get_str();
  r.text << "] free rank " << a.free_rank << "\n";
  return r.emit(kOk);
}

int cmd_nq(const Common& c, const std::string& file, int klass, std::size_t max_tails) {
  Input in = load(file);
  Report r("nq", c);
  r.input_hash = fnv_hex(in.text);
  r.parameters = {{"input", in.origin}, {"class", klass}, {"max_tails", max_tails}};
  NqBudget b{seconds_limit(c), max_tails};
  auto q = nilpotent_quotient(in.L, klass, b);
  json secs = json::array();
  std::string ranks;
  for (std::size_t k = 0; k < q.sections.size(); ++k) {
    json s = invariants_json(q.sections[k]);
    s["class"] = k + 1;
    secs.push_back(s);
    r.text << "class " << (k + 1) << ": " << q.sections[k].to_string() << "\n";
    ranks += (k ? "," : "") + std::to_string(section_rank(q.sections[k]));
  }
  r.text << "ranks: " << ranks << "\n";
  if (q.stabilized) r.text << "quotient stabilized at class " << q.klass << "\n";
  if (q.partial) r.text << "partial: " << q.message << "\n";
  r.results = {{"class", q.klass}, {"sections", secs}, {"stabilized", q.stabilized},
               {"pc_generators", q.P.size()}};
  r.certificates = {{"status", q.partial ? "partial" : "certified"}, {"message", q.message}};
  return r.emit(q.partial ? kPartial : kOk);
}

int cmd_dwyer(const Common& c, const std::string& file, int klass) {
  Input in = load(file);
  Report r("dwyer", c);
  r.input_hash = fnv_hex(in.text);
  r.parameters = {{"input", in.origin}, {"class", klass}};
  auto ds = dwyer_quotients(in.L, klass, NqBudget{seconds_limit(c), 0});
  json entries = json::array();
  for (std::size_t k = 0; k < ds.entries.size(); ++k) {
    json e = invariants_json(ds.entries[k]);
    e["c"] = k + 1;
    entries.push_back(e);
    r.text << "M_" << (k + 1) << ": " << ds.entries[k].to_string() << "\n";
  }
  if (ds.partial) r.text << "partial: " << ds.message << "\n";
  r.results = {{"entries", entries}};
  r.certificates = {{"status", ds.partial ? "partial" : "certified"}, {"message", ds.message}};
  return r.emit(ds.partial ? kPartial : kOk);
}

int cmd_index(const Common& c, const std::string& file, const std::string& subgroup, int ell_start, int ell_max,
              std::size_t max_cosets, bool dump) {
  Input in = load(file);
  Report r("index", c);
  r.input_hash = fnv_hex(in.text);
  r.parameters = {{"input", in.origin}, {"subgroup", subgroup}, {"ell_start", ell_start}, {"ell_max", ell_max},
                  {"max_cosets", max_cosets}};
  auto gens = parse_word_list(subgroup, in.L.alphabet());
  EnumerationPolicy pol;
  pol.ell_start = ell_start;
  pol.ell_max = ell_max;
  pol.limits.max_cosets = c.long_mode ? max_cosets * 10 : max_cosets;
  pol.limits.max_seconds = seconds_limit(c);
  auto ci = l_enumerate(in.L, gens, pol);
  r.results = {{"index", ci.index}, {"ell_used", ci.ell_used}, {"certified", ci.certified}};
  json cert = {{"status", ci.certified ? "certified" : "approximate"}, {"message", ci.message}};
  if (ci.certificate) {
    cert["closure_size"] = ci.certificate->closure_size;
    cert["relators_checked"] = ci.certificate->relators_checked;
  }
  r.certificates = cert;
  if (ci.index == 0) {
    r.text << "no complete coset table: " << ci.message << "\n";
  } else {
    r.text << "index: " << ci.index << (ci.certified ? " (certified" : " (not certified, truncation depth only")
           << ", depth " << ci.ell_used << ")\n";
    if (dump) r.text << ci.table.dump();
  }
  return r.emit(ci.certified ? kOk : kPartial);
}

std::string count_line(const std::map<std::size_t, std::size_t>& m, std::size_t n) {
  std::string s;
  for (std::size_t k = 1; k <= n; ++k) {
    auto it = m.find(k);
    s += (k > 1 ? ", " : "") + std::string("index ") + std::to_string(k) + ": " +
         std::to_string(it == m.end() ? 0 : it->second);
  }
  return s;
}

int cmd_lowindex(const Common& c, const std::string& file, std::size_t n, bool normal, int ell, std::size_t max_len) {
  Input in = load(file);
  Report r("lowindex", c);
  r.input_hash = fnv_hex(in.text);
  r.parameters = {{"input", in.origin}, {"max_index", n}, {"normal", normal}, {"ell", ell},
                  {"max_relator_length", max_len}};
  LowIndexPolicy pol;
  pol.ell = ell;
  pol.max_relator_length = max_len;
  pol.max_seconds = seconds_limit(c);
  pol.threads = c.threads;
  auto res = normal ? normal_subgroups(in.L, n, pol) : low_index_subgroups(in.L, n, pol);
  auto all = res.counts(false), nrm = res.counts(true);
  json counts = json::array();
  for (std::size_t k = 1; k <= n; ++k)
    counts.push_back({{"index", k}, {"subgroups", all.count(k) ? all[k] : 0}, {"normal", nrm.count(k) ? nrm[k] : 0}});
  r.results = {{"counts", counts}, {"total", res.subgroups.size()}};
  r.certificates = {{"status", res.partial ? "partial" : "certified"},
                    {"candidates", res.candidates},
                    {"refuted", res.refuted},
                    {"ell", res.ell_used},
                    {"message", res.message}};
  if (normal) {
    r.text << count_line(nrm, n) << "\n";
  } else {
    r.text << count_line(all, n) << "\n";
    r.text << "normal: " << count_line(nrm, n) << "\n";
  }
  r.text << (res.partial ? "partial: " + res.message : std::string("all subgroups certified")) << "\n";
  return r.emit(res.partial ? kPartial : kOk);
}

int cmd_derived(const Common& c, const std::string& file, int depth, std::size_t max_index) {
  Input in = load(file);
  Report r("derived", c);
  r.input_hash = fnv_hex(in.text);
  r.parameters = {{"input", in.origin}, {"depth", depth}, {"max_index", max_index}};
  DerivedBudget b{c.long_mode ? max_index * 64 : max_index, seconds_limit(c)};
  auto ds = derived_series_sections(in.L, depth, b);
  json secs = json::array();
  for (std::size_t i = 0; i < ds.sections.size(); ++i) {
    json s = invariants_json(ds.sections[i]);
    s["level"] = i + 1;
    s["subgroup_generators"] = ds.ranks[i];
    if (i < ds.cumulative_index.size()) s["cumulative_index"] = ds.cumulative_index[i].get_str();
    secs.push_back(s);
    r.text << "level " << (i + 1) << ": " << ds.sections[i].to_string();
    if (i < ds.cumulative_index.size()) r.text << "  (index " << ds.cumulative_index[i].get_str() << ")";
    r.text << "\n";
  }
  if (ds.partial) r.text << "partial: " << ds.message << "\n";
  r.results = {{"sections", secs}};
  r.certificates = {{"status", ds.partial ? "partial" : (ds.exact ? "certified" : "approximate")},
                    {"exact", ds.exact},
                    {"message", ds.message}};
  return r.emit(ds.partial ? kPartial : kOk);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Computations with finitely L-presented groups"};
  app.require_subcommand(1);
  Common c;
  auto add_common = [&](CLI::App* s) {
    s->add_flag("--json", c.json, "Emit JSON");
    s->add_option("--max-seconds", c.max_seconds, "Wall-clock limit (0 = none)");
    s->add_option("--threads", c.threads, "Worker threads");
    s->add_flag("--long", c.long_mode, "Lift default limits");
  };

  std::string file, preset_name, subgroup;
  int d = 0, klass = 1, ell_start = 1, ell_max = 8, ell = 2, depth = 1;
  bool emit = false, normal = false, dump = false;
  std::size_t max_tails = 0, max_cosets = 1000000, max_index = 1, max_len = 0, derived_bound = std::size_t{1} << 20;

  auto* pre = app.add_subcommand("preset", "Built-in presentations");
  pre->add_option("name", preset_name, "grigorchuk | gamma")->required();
  pre->add_option("d", d, "Degree for gamma");
  pre->add_flag("--emit", emit, "Print in .lp format");
  add_common(pre);

  auto* ab = app.add_subcommand("abelian", "Abelian invariants of G/G'");
  ab->add_option("file", file, ".lp file, '-' or preset name")->required();
  add_common(ab);

  auto* nq = app.add_subcommand("nq", "Lower central series sections");
  nq->add_option("file", file)->required();
  nq->add_option("--class", klass, "Nilpotency class")->required();
  nq->add_option("--max-tails", max_tails, "Limit on tails per step");
  add_common(nq);

  auto* dw = app.add_subcommand("dwyer", "Dwyer quotients of the Schur multiplier");
  dw->add_option("file", file)->required();
  dw->add_option("--class", klass, "Largest c")->required();
  add_common(dw);

  auto* ix = app.add_subcommand("index", "Certified subgroup index by coset enumeration");
  ix->add_option("file", file)->required();
  ix->add_option("--subgroup", subgroup, "Comma separated generator words")->required();
  ix->add_option("--ell-start", ell_start);
  ix->add_option("--ell-max", ell_max);
  ix->add_option("--max-cosets", max_cosets);
  ix->add_flag("--dump-table", dump, "Print the coset table");
  add_common(ix);

  auto* lx = app.add_subcommand("lowindex", "Subgroups of small index");
  lx->add_option("file", file)->required();
  lx->add_option("--max-index", max_index)->required();
  lx->add_flag("--normal", normal, "Only normal subgroups");
  lx->add_option("--ell", ell, "Truncation depth used for pruning");
  lx->add_option("--max-relator-length", max_len, "Prune with relators up to this length (0 = all)");
  add_common(lx);

  auto* dv = app.add_subcommand("derived", "Derived series sections");
  dv->add_option("file", file)->required();
  dv->add_option("--depth", depth)->required();
  dv->add_option("--max-index", derived_bound, "Bound on the cumulative index");
  add_common(dv);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    return app.exit(e) == 0 ? kOk : kError;
  }
  try {
    if (*pre) return cmd_preset(c, preset_name, d, emit);
    if (*ab) return cmd_abelian(c, file);
    if (*nq) return cmd_nq(c, file, klass, max_tails);
    if (*dw) return cmd_dwyer(c, file, klass);
    if (*ix) return cmd_index(c, file, subgroup, ell_start, ell_max, max_cosets, dump);
    if (*lx) return cmd_lowindex(c, file, max_index, normal, ell, max_len);
    if (*dv) return cmd_derived(c, file, depth, derived_bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kError;
  }
  return kError;
}
