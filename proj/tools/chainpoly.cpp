// Command-line front end for the chainpoly library.
//
// Exit codes: 0 success (certify: property holds), 1 certify: property
// fails, 2 invalid input or domain error, 3 resource cap exceeded,
// 4 two independent computations disagreed.

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <chrono>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "chainpoly/coxeter.hpp"
#include "chainpoly/descent.hpp"
#include "chainpoly/error.hpp"
#include "chainpoly/poly_shape.hpp"
#include "chainpoly/poset.hpp"
#include "chainpoly/real_roots.hpp"

using namespace chainpoly;
using nlohmann::ordered_json;

namespace {

constexpr int kExitFails = 1;
constexpr int kExitInvalid = 2;
constexpr int kExitResource = 3;
constexpr int kExitMismatch = 4;

struct MismatchError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Primary polynomial line followed by key=value verdict lines, in order.
struct Report {
  std::string input;
  std::string primary;
  std::vector<std::pair<std::string, ordered_json>> fields;
  std::vector<std::string> table;
  ordered_json table_json = ordered_json::array();

  void set(const std::string& key, ordered_json value) { fields.emplace_back(key, std::move(value)); }
};

std::string text_value(const ordered_json& v) {
  if (v.is_boolean()) return v.get<bool>() ? "yes" : "no";
  if (v.is_string()) return v.get<std::string>();
  return v.dump();
}

void print(const Report& r, bool json, bool one_line, std::ostream& out) {
  if (json) {
    ordered_json j;
    j["input"] = r.input;
    j["polynomial"] = r.primary;
    for (const auto& [k, v] : r.fields) j[k] = v;
    if (!r.table_json.empty()) j["table"] = r.table_json;
    out << (one_line ? j.dump() : j.dump(2)) << '\n';
    return;
  }
  if (one_line) {
    out << r.primary;
    for (const auto& [k, v] : r.fields) out << ' ' << k << '=' << text_value(v);
    out << '\n';
    return;
  }
  out << r.primary << '\n';
  for (const auto& [k, v] : r.fields) out << k << '=' << text_value(v) << '\n';
  for (const auto& line : r.table) out << line << '\n';
}

std::string rational(const mpq_class& q) { return q.get_str(); }

void add_shape(Report& r, const IntPoly& p) {
  r.set("real-rooted", is_real_rooted(p));
  r.set("unimodal", is_unimodal(p));
  r.set("log-concave", is_log_concave(p));
  if (p.has_nonnegative_coeffs()) {
    auto m = mode(p);
    r.set("mode", m ? rational(*m) : "none");
  }
}

struct Globals {
  bool json = false;
  bool timing = false;
  std::size_t max_elements = 0;
  std::uint64_t max_enum = 0;
};

EnumerationCaps enumeration_caps(const Globals& g) {
  EnumerationCaps caps;
  if (g.max_enum) {
    caps.max_objects = g.max_enum;
    // Largest n with n! <= max_enum.
    std::uint64_t f = 1;
    int n = 1;
    while (n < 20 && f * static_cast<std::uint64_t>(n + 1) <= g.max_enum) f *= static_cast<std::uint64_t>(++n);
    caps.max_perm_n = n;
  }
  return caps;
}

// ------------------------------------------------------------ subcommands

struct AntArgs {
  int n = 0;
  std::string t;
  int colored = 0;
  bool gessel = false;
  bool brute = false;
};

int cmd_ant(const AntArgs& a, const Globals& g, Report& r) {
  if (a.n < 1) throw DomainError("n must be positive");
  PositionSet t = PositionSet::parse(a.t);
  r.input = "ant " + std::to_string(a.n) + " " + t.to_string() + (a.colored ? " --colored " + std::to_string(a.colored) : "");
  IntPoly p;
  if (a.colored) {
    p = a.brute ? a_t_n_colored_bruteforce(a.n, a.colored, t, enumeration_caps(g)) : a_t_n_colored(a.n, a.colored, t);
  } else {
    p = a.brute ? a_t_n_bruteforce(a.n, t, enumeration_caps(g)) : a_t_n(a.n, t);
  }
  r.primary = to_string(p);
  add_shape(r, p);
  if (!a.colored) r.set("mu", rational(mu_n(a.n, t)));
  if (a.gessel) {
    if (a.colored) throw DomainError("--gessel applies to uncolored permutations only");
    IntPoly d = gessel_determinant(a.n, t & PositionSet::interval(a.n - 1));
    if (!(d == p)) throw MismatchError("Gessel determinant " + to_string(d) + " differs from " + to_string(p));
    r.set("gessel", "match");
  }
  return 0;
}

struct NcArgs {
  std::string type;
  bool oracle = false;
  bool symdec = false;
};

int cmd_nc(const NcArgs& a, const Globals& g, Report& r) {
  CoxeterType t = CoxeterType::parse(a.type);
  r.input = "nc " + t.to_string();
  NcSymdecReport rep = nc_symdec_report(t);
  r.primary = to_string(rep.h);
  r.set("rank", rep.rank);
  r.set("chain", to_string(rep.chain));
  r.set("real-rooted", rep.h_real_rooted);
  r.set("chain-real-rooted", rep.chain_real_rooted);
  std::string peaks;
  for (int k : rep.peaks) peaks += (peaks.empty() ? "" : ",") + std::to_string(k);
  r.set("peaks", peaks);
  r.set("peak-at-half-rank", rep.peak_at_half_rank);
  if (a.symdec) {
    r.set("symdec-n", rep.rank - 1);
    r.set("symdec-a", to_string(rep.symdec.a));
    r.set("symdec-b", to_string(rep.symdec.b));
    r.set("symdec-nonneg-real-rooted", rep.symdec_nonneg_real_rooted);
    if (rep.veronese_identity) r.set("veronese-identity", *rep.veronese_identity);
  }
  if (a.oracle) {
    if (!t.classical()) throw ResourceError("--oracle builds concrete groups of types A, B, D only");
    GroupCaps caps;
    if (g.max_elements) caps.max_order = g.max_elements;
    GradedBoundedPoset lat = nc_lattice(ReflectionGroup::build(t, caps));
    IntPoly h = order_h_polynomial(lat.poset());
    if (!(h == rep.h)) throw MismatchError("lattice h-polynomial " + to_string(h) + " differs from the formula " + to_string(rep.h));
    if (!(chain_polynomial(lat.poset()) == rep.chain)) throw MismatchError("lattice chain polynomial differs from the formula");
    r.set("lattice-elements", lat.size());
    r.set("oracle", "match");
  }
  return 0;
}

struct PosetArgs {
  std::string file;
  std::string rank_select;
  bool flags = false;
  bool certify = false;
};

int cmd_poset(const PosetArgs& a, const Globals& g, Report& r) {
  r.input = "poset " + a.file;
  const std::string text = read_text_file(a.file);
  const bool graded = !a.rank_select.empty() || a.flags;
  Poset p = poset_from_json(text);
  IntPoly f = chain_polynomial(p);
  r.primary = to_string(f);
  r.set("elements", p.size());
  r.set("h", to_string(order_h_polynomial(p)));
  int exit = 0;
  if (a.certify) r.set("real-rooted", is_real_rooted(f));
  if (!graded) return exit;
  GradedBoundedPoset gp = graded_poset_from_json(text);
  r.set("rank", gp.rank());
  if (!a.rank_select.empty()) {
    PositionSet t = PositionSet::parse(a.rank_select);
    GradedBoundedPoset sel = rank_selected(gp, t);
    IntPoly fs = chain_polynomial(sel.poset());
    r.set("rank-select", t.to_string());
    r.set("rank-selected-chain", to_string(fs));
    r.set("rank-selected-h", to_string(order_h_polynomial(sel.poset())));
    if (a.certify) r.set("rank-selected-real-rooted", is_real_rooted(fs));
  }
  if (a.flags) {
    CensusLimits limits;
    if (g.max_elements) limits.max_entries = g.max_elements;
    FlagVectors fv = flag_vectors(gp, limits);
    for_each_subset(PositionSet::interval(gp.rank()), [&](PositionSet s) {
      r.table.push_back("S=" + s.to_string() + " alpha=" + fv.alpha_of(s).get_str() + " beta=" + fv.beta_of(s).get_str());
      r.table_json.push_back({{"S", s.to_string()}, {"alpha", fv.alpha_of(s).get_str()}, {"beta", fv.beta_of(s).get_str()}});
    });
  }
  return exit;
}

struct CertifyArgs {
  std::string poly;
  std::string interlaces;
  int symdec = -1;
};

int cmd_certify(const CertifyArgs& a, const Globals&, Report& r) {
  IntPoly p = parse_int_poly(a.poly);
  r.input = "certify " + to_string(p);
  r.primary = to_string(p);
  RealRootCertificate cert = certify_real_rooted(p);
  r.set("real-rooted", cert.real_rooted);
  r.set("distinct-real-roots", cert.distinct_real_roots);
  r.set("degree", cert.degree);
  bool holds = cert.real_rooted;
  if (!a.interlaces.empty()) {
    IntPoly q = parse_int_poly(a.interlaces);
    r.set("other", to_string(q));
    if (!cert.real_rooted || !is_real_rooted(q)) {
      r.set("interlaces", "undefined");
      holds = false;
    } else {
      const bool v = interlaces(p, q);
      r.set("interlaces", v);
      holds = v;
    }
  }
  if (a.symdec >= 0) {
    SymmetricDecomposition d = symmetric_decomposition(p, a.symdec);
    r.set("symdec-n", a.symdec);
    r.set("symdec-a", to_string(d.a));
    r.set("symdec-b", to_string(d.b));
    const bool v = has_nonneg_realrooted_symdec(p, a.symdec);
    r.set("symdec-nonneg-real-rooted", v);
    holds = v && (a.interlaces.empty() ? true : holds);
  }
  return holds ? 0 : kExitFails;
}

struct WordsArgs {
  std::string kind;
  int n = 0;
  int r = 0;
  bool brute = false;
};

int cmd_words(const WordsArgs& a, const Globals& g, Report& r) {
  IntPoly p;
  EnumerationCaps caps = enumeration_caps(g);
  if (a.kind == "E" || a.kind == "Etilde") {
    if (a.r < 1) throw DomainError("alphabet size r must be given and positive");
    const bool tilde = a.kind == "Etilde";
    if (a.brute) {
      p = tilde ? e_tilde_bruteforce(a.n, a.r, caps) : e_nr_bruteforce(a.n, a.r, caps);
    } else {
      p = tilde ? e_tilde(a.n, a.r) : e_nr(a.n, a.r);
    }
    r.input = "words " + a.kind + " " + std::to_string(a.n) + " " + std::to_string(a.r);
  } else if (a.kind == "D") {
    p = a.brute ? d_word_bruteforce(a.n, caps) : d_word_enumerator(a.n);
    r.input = "words D " + std::to_string(a.n);
  } else {
    throw DomainError("unknown word family \"" + a.kind + "\" (expected E, Etilde or D)");
  }
  r.primary = to_string(p);
  add_shape(r, p);
  return 0;
}

// ------------------------------------------------------------ driver

int run(std::vector<std::string> args, Globals globals, bool one_line, std::ostream& out, std::ostream& err);

// Errors go to `out` too, so every command yields exactly one line.
int run_batch(const std::string& path, const Globals& g, std::ostream& out, std::ostream& err) {
  std::ifstream in(path);
  if (!in) {
    err << "error: cannot open " << path << '\n';
    return kExitInvalid;
  }
  int worst = 0;
  std::string line;
  while (std::getline(in, line)) {
    std::istringstream ss(line);
    std::vector<std::string> args;
    for (std::string w; ss >> w;) args.push_back(w);
    if (args.empty() || args[0][0] == '#') continue;
    worst = std::max(worst, run(args, g, true, out, out));
  }
  return worst;
}

int run(std::vector<std::string> args, Globals globals, bool one_line, std::ostream& out, std::ostream& err) {
  CLI::App app{"Chain polynomials, descent enumerators and real-rootedness certificates"};
  app.name("chainpoly");
  std::string batch;
  app.add_flag("--json", globals.json, "Emit a JSON object instead of key=value lines");
  app.add_flag("--timing", globals.timing, "Report the wall-clock time of the computation");
  app.add_option("--max-elements", globals.max_elements, "Cap for built groups (default 50000) and flag-vector census entries (default 2^28)");
  app.add_option("--max-enum", globals.max_enum, "Cap for brute-force enumerations (default 10^7 objects; permutations n <= 9)");
  app.add_option("--batch", batch, "Run one command per line of FILE, one report per line");
  app.require_subcommand(0, 1);

  AntArgs ant;
  auto* s_ant = app.add_subcommand("ant", "Descent enumerator A^T_n (or A^T_{n,r}) with verdicts");
  s_ant->add_option("n", ant.n, "Permutation size")->required();
  s_ant->add_option("T", ant.t, "Descent set such as 2,4,6, or - for the empty set")->required();
  s_ant->add_option("--colored", ant.colored, "Number of colors r");
  s_ant->add_flag("--gessel", ant.gessel, "Cross-check with the determinant formula");
  s_ant->add_flag("--brute", ant.brute, "Enumerate instead of using the recurrence");

  NcArgs nc;
  auto* s_nc = app.add_subcommand("nc", "h-polynomial and chain polynomial of a noncrossing partition lattice");
  s_nc->add_option("type", nc.type, "A4, B3, D4, I2:7, H3, H4, F4, E6, E7 or E8")->required();
  s_nc->add_flag("--oracle", nc.oracle, "Build the group and compare with the lattice");
  s_nc->add_flag("--symdec", nc.symdec, "Print the symmetric decomposition and its verdict");

  PosetArgs po;
  auto* s_poset = app.add_subcommand("poset", "Chain polynomial of a poset read from a JSON file");
  s_poset->add_option("file", po.file, "JSON file with \"elements\" and \"covers\"")->required();
  s_poset->add_option("--rank-select", po.rank_select, "Rank set T for the rank-selected subposet");
  s_poset->add_flag("--flags", po.flags, "Print the flag f- and h-vectors");
  s_poset->add_flag("--certify", po.certify, "Certify real-rootedness");

  CertifyArgs ce;
  auto* s_cert = app.add_subcommand("certify", "Real-rootedness, interlacing and symmetric decomposition verdicts");
  s_cert->add_option("poly", ce.poly, "Coefficients from the constant term, e.g. 1,4,1")->required();
  s_cert->add_option("--interlaces", ce.interlaces, "Check that poly interlaces this polynomial");
  s_cert->add_option("--symdec", ce.symdec, "Check for a nonnegative real-rooted symmetric decomposition with respect to n");

  WordsArgs wo;
  auto* s_words = app.add_subcommand("words", "Word enumerators E_{n,r}, Etilde_{n,r} and the signed-word enumerator of D_n");
  s_words->add_option("kind", wo.kind, "E, Etilde or D")->required();
  s_words->add_option("n", wo.n, "Word length")->required();
  s_words->add_option("r", wo.r, "Alphabet size (E, Etilde)");
  s_words->add_flag("--brute", wo.brute, "Enumerate instead of using the transfer table");

  std::reverse(args.begin(), args.end());
  try {
    app.parse(args);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) {
      out << app.help();
      return 0;
    }
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  }
  if (!batch.empty()) {
    if (one_line) {
      err << "error: --batch cannot be nested\n";
      return kExitInvalid;
    }
    return run_batch(batch, globals, out, err);
  }
  if (app.get_subcommands().empty()) {
    out << app.help();
    return kExitInvalid;
  }

  Report report;
  int code = 0;
  const auto start = std::chrono::steady_clock::now();
  try {
    if (s_ant->parsed()) code = cmd_ant(ant, globals, report);
    if (s_nc->parsed()) code = cmd_nc(nc, globals, report);
    if (s_poset->parsed()) code = cmd_poset(po, globals, report);
    if (s_cert->parsed()) code = cmd_certify(ce, globals, report);
    if (s_words->parsed()) code = cmd_words(wo, globals, report);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << '\n';
    return kExitResource;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitInvalid;
  } catch (const MismatchError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  } catch (const InternalConsistencyError& e) {
    err << "error: " << e.what() << '\n';
    return kExitMismatch;
  }
  if (globals.timing) {
    const double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream t;
    t << std::fixed << std::setprecision(3) << ms;
    report.set("time-ms", t.str());
  }
  print(report, globals.json, one_line, out);
  return code;
}

}  // namespace

int main(int argc, char** argv) {
  std::vector<std::string> args(argv + 1, argv + argc);
  return run(std::move(args), Globals{}, false, std::cout, std::cerr);
}
