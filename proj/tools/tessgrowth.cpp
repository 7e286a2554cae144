#include "tessgrowth/bilinski.hpp"
#include "tessgrowth/classification.hpp"
#include "tessgrowth/formulas.hpp"
#include "tessgrowth/spectral.hpp"
#include "tessgrowth/tables.hpp"
#include "tessgrowth/transition.hpp"
#include "tessgrowth/verify.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <cmath>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>

using namespace tg;
using json = nlohmann::ordered_json;

namespace {

constexpr int kUsage = 2;
constexpr int kFail = 1;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

CyclicSequence parse_or_usage(const std::string& text) {
  try {
    return CyclicSequence(parse_sequence(text));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

// --root takes a valence or "vertex" (the recommended root).
int parse_root(const std::string& text, const CyclicSequence& s) {
  if (text.empty() || text == "vertex") return 0;
  int v = 0;
  try {
    size_t used = 0;
    v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument(text);
  } catch (const std::exception&) {
    throw UsageError("--root expects a valence or 'vertex', got '" + text + "'");
  }
  if (std::find(s.terms().begin(), s.terms().end(), v) == s.terms().end())
    throw UsageError("root valence " + text + " does not occur in " + s.str());
  return v;
}

void emit(const std::string& text, const std::string& out) {
  if (out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream f(out);
  if (!f) throw UsageError("cannot write " + out);
  f << text;
}

std::string fixed(double x, int digits) {
  std::ostringstream os;
  os << std::fixed << std::setprecision(digits) << x;
  return os.str();
}

std::string join(const std::vector<long long>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

std::string join(const std::vector<Rational>& v) {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + to_string(v[i]);
  return s;
}

std::string ext_of(const std::string& path) {
  auto dot = path.rfind('.');
  return dot == std::string::npos ? "" : path.substr(dot + 1);
}

// ---------------------------------------------------------------- analyze

struct AnalyzeOpts {
  std::string seq, variant, root, out;
  int coronas = 10;
  bool json = false, refs = false;
};

int cmd_analyze(const AnalyzeOpts& o) {
  const CyclicSequence s = parse_or_usage(o.seq);
  const Classification c = classify(s);
  const FamilyRow* row = c.matched_family ? find_family(*c.matched_family) : nullptr;
  const std::string family_ref = row ? row->anchor : "";
  json j;
  std::ostringstream txt;
  j["sequence"] = s.str();
  j["growth_class"] = to_string(c.growth_class);
  j["angle_excess"] = to_string(angle_excess(s));
  txt << "sequence        " << s.str() << "\n";
  txt << "class           " << to_string(c.growth_class) << " (angle excess " << to_string(angle_excess(s)) << ")\n";

  if (c.growth_class != GrowthClass::Hyperbolic) {
    j["growth"] = nullptr;
    j["note"] = "no exponential growth; nothing to compute";
    txt << "growth          none (not hyperbolic, no growth computation)\n";
    emit(o.json ? j.dump(2) + "\n" : txt.str(), o.out);
    return 0;
  }

  j["classification"] = json::parse(classification_json(s, c));
  txt << "morphism        " << to_string(c.morphism) << "\n";
  txt << "concentricity   " << to_string(c.concentricity) << "\n";
  txt << "family          " << (c.matched_family ? *c.matched_family : "unmatched");
  if (o.refs && row) txt << "  {" << family_ref << "}";
  txt << "\n";
  if (!c.root_options.empty()) {
    txt << "recommended root";
    for (size_t i = 0; i < c.root_options.size(); ++i) txt << (i ? " or " : " ") << c.root_options[i] << "-valent";
    txt << "\n";
  }
  for (const auto& n : c.notes) txt << "note            " << n << "\n";

  const bool is4468 = s.terms() == std::vector<int>{4, 4, 6, 8};
  if (is4468 && o.variant != "T1" && o.variant != "T2")
    throw UsageError("[4,4,6,8] is polymorphic: pass --variant T1 or --variant T2");
  const int root = parse_root(o.root, s);

  json sources = json::array();
  std::optional<GrowthRate> spectral, closed;
  std::optional<CatalogMatrix> cm;
  try {
    cm = catalog_matrix(s, o.variant, root);
  } catch (const std::invalid_argument& e) {
    if (!o.variant.empty()) throw UsageError(e.what());
    j["matrix"] = nullptr;
    txt << "matrix          none (" << e.what() << ")\n";
  }
  if (cm) {
    const auto chi = char_poly(cm->matrix.m);
    spectral = max_modulus_root(chi);
    auto series = corona_series(cm->matrix.m, cm->v1, std::max(1, o.coronas), cm->matrix.weights);
    j["matrix"] = json::parse(matrix_json(cm->matrix));
    j["root"] = cm->root_description;
    j["v1"] = join(cm->v1);
    j["char_poly"] = chi.str();
    j["matrix_coronas"] = join(series);
    txt << "matrix          " << cm->matrix.size() << "x" << cm->matrix.size() << ", rooted at " << cm->root_description;
    if (o.refs) txt << "  {" << cm->anchor << "}";
    txt << "\n" << cm->matrix.m.grid();
    txt << "char poly       " << chi.str() << "\n";
    txt << "matrix coronas  " << join(series) << "\n";
    json sj{{"source", "Spectral"}, {"value", spectral->value}, {"certified", spectral->certified}};
    if (o.refs) sj["ref"] = cm->anchor;
    sources.push_back(sj);
  }
  if (!is4468) {
    closed = closed_form_gamma(s);
    if (closed) {
      const ClosedFormEntry* e = row ? find_closed_form(row->formula_id) : nullptr;
      json cj{{"source", to_string(closed->source)}, {"value", closed->value}};
      if (e) cj["expression"] = e->expression;
      if (o.refs) cj["ref"] = e ? e->anchor : family_ref;
      sources.push_back(cj);
    }
  }

  // Simulator estimate, compared only when it reaches 10 coronas.
  std::optional<GrowthRate> estimate;
  int sim_coronas = 0;
  {
    GrowOptions opt;
    opt.keep_patch = false;
    opt.face_cap = 2'000'000;
    const int sim_root = root ? root : (cm ? cm->root_valence : default_root(s));
    const std::string policy = is4468 ? o.variant : "none";
    GrowResult g = grow(s, sim_root, o.coronas, policy_by_name(policy), opt);
    sim_coronas = static_cast<int>(g.profile.faces.size());
    j["simulator"] = {{"root", sim_root}, {"policy", policy}, {"status", to_string(g.status)},
                      {"coronas", join(g.profile.faces)}};
    txt << "simulator       root " << sim_root << ", policy " << policy << ", " << to_string(g.status);
    if (g.status != GrowStatus::Ok) txt << " (" << g.diagnostic << ")";
    txt << "\nsim coronas     " << join(g.profile.faces) << "\n";
    if (sim_coronas >= 4) {
      estimate = estimate_growth(g.profile);
      sources.push_back({{"source", "SimulatorEstimate"}, {"value", estimate->value}, {"coronas", sim_coronas}});
    }
  }

  // Agreement between sources.
  std::vector<std::string> problems;
  if (spectral && closed && std::fabs(spectral->value - closed->value) > 1e-6)
    problems.push_back("closed form " + fixed(closed->value, 9) + " vs spectral " + fixed(spectral->value, 9));
  const GrowthRate* reference = spectral ? &*spectral : closed ? &*closed : nullptr;
  if (estimate && reference && sim_coronas >= 10 &&
      std::fabs(estimate->value - reference->value) > 0.03 * reference->value)
    problems.push_back("simulator estimate " + fixed(estimate->value, 6) + " vs " + fixed(reference->value, 6));

  j["sources"] = sources;
  const GrowthRate* best = reference ? reference : estimate ? &*estimate : nullptr;
  if (best) {
    j["growth"] = best->value;
    j["growth_truncated"] = truncated4(best->value);
    j["growth_source"] = to_string(best->source);
  } else {
    j["growth"] = nullptr;
    j["note"] = "partial result: no matrix, closed form or simulator estimate available";
  }
  j["consistent"] = problems.empty();
  if (!problems.empty()) j["inconsistencies"] = problems;

  for (const auto& src : sources) {
    txt << "growth [" << std::left << std::setw(17) << src["source"].get<std::string>() << "] "
        << fixed(src["value"].get<double>(), 10);
    if (src.contains("coronas")) txt << "  (estimate after " << src["coronas"].get<int>() << " coronas)";
    if (src.contains("ref")) txt << "  {" << src["ref"].get<std::string>() << "}";
    txt << "\n";
  }
  if (best)
    txt << "growth          " << truncated4(best->value) << " (" << to_string(best->source) << ", "
        << fixed(best->value, 5) << ")\n";
  else
    txt << "growth          unknown (partial result)\n";
  if (!problems.empty()) {
    txt << "INCONSISTENT\n";
    for (const auto& p : problems) txt << "  " << p << "\n";
  }
  emit(o.json ? j.dump(2) + "\n" : txt.str(), o.out);
  return problems.empty() ? 0 : kFail;
}

// ---------------------------------------------------------------- classify

int cmd_classify(const std::string& seq, bool as_json, const std::string& out) {
  const CyclicSequence s = parse_or_usage(seq);
  const Classification c = classify(s);
  if (as_json) {
    emit(classification_json(s, c) + "\n", out);
    return 0;
  }
  std::ostringstream os;
  os << s.str() << "\n";
  os << "  class          " << to_string(c.growth_class) << " (angle excess " << to_string(angle_excess(s)) << ")\n";
  os << "  morphism       " << to_string(c.morphism) << "\n";
  os << "  concentricity  " << to_string(c.concentricity) << "\n";
  os << "  realizability  " << to_string(realizability_check(s)) << "\n";
  if (c.matched_family) os << "  family         " << *c.matched_family << "\n";
  for (int r : c.root_options) os << "  root option    " << r << "-valent vertex\n";
  for (const auto& n : c.notes) os << "  note           " << n << "\n";
  emit(os.str(), out);
  return 0;
}

// ---------------------------------------------------------------- simulate

struct SimulateOpts {
  std::string seq, root, policy = "none", out, format;
  int coronas = 6;
  bool json = false;
};

int cmd_simulate(const SimulateOpts& o) {
  const CyclicSequence s = parse_or_usage(o.seq);
  if (growth_class(s) == GrowthClass::Finite) throw UsageError(s.str() + " tiles a sphere; nothing to grow");
  int root = parse_root(o.root, s);
  if (root == 0) root = default_root(s);
  if (o.coronas < 1) throw UsageError("-n must be at least 1");
  if (o.policy != "none" && o.policy != "first" && o.policy != "T1" && o.policy != "T2")
    throw UsageError("unknown policy '" + o.policy + "' (none, first, T1, T2)");

  std::optional<PatchFormat> fmt;
  if (!o.out.empty()) {
    fmt = patch_format(o.format.empty() ? ext_of(o.out) : o.format);
    if (!fmt) throw UsageError("cannot tell the patch format of '" + o.out + "'; use --format edges|dot|json");
  }

  GrowOptions opt;
  opt.keep_patch = true;
  GrowResult g = grow(s, root, o.coronas, policy_by_name(o.policy), opt);
  const auto& f = g.profile.faces;
  std::vector<int> concentric;
  for (int n = 1; n <= g.patch.complete; ++n) concentric.push_back(check_concentric(g, n) ? 1 : 0);
  bool warned = g.status == GrowStatus::NonConcentric ||
                std::find(concentric.begin(), concentric.end(), 0) != concentric.end();

  if (o.json) {
    json j{{"sequence", s.str()}, {"root", root}, {"policy", o.policy}, {"status", to_string(g.status)},
           {"faces", f}, {"vertices", g.profile.vertices}, {"tau", g.profile.tau()},
           {"tau_ratios", g.profile.tau_ratios()}, {"concentric", concentric}};
    if (!g.diagnostic.empty()) j["diagnostic"] = g.diagnostic;
    if (f.size() >= 4) j["estimate"] = estimate_growth(g.profile).value;
    std::cout << j.dump(2) << "\n";
  } else {
    std::cout << "sequence " << s.str() << ", root " << root << "-valent vertex, policy " << o.policy << "\n";
    std::cout << std::setw(4) << "n" << std::setw(14) << "|F_n|" << std::setw(14) << "|U_n|" << std::setw(14)
              << "tau(n)" << std::setw(12) << "ratio" << "  concentric\n";
    auto tau = g.profile.tau();
    auto ratios = g.profile.tau_ratios();
    for (size_t i = 0; i < f.size(); ++i) {
      std::cout << std::setw(4) << i + 1 << std::setw(14) << f[i] << std::setw(14) << g.profile.vertices[i]
                << std::setw(14) << tau[i] << std::setw(12) << (i ? fixed(ratios[i - 1], 6) : "-") << "  "
                << (i < concentric.size() ? (concentric[i] ? "yes" : "no") : "-") << "\n";
    }
    if (f.size() >= 4) std::cout << "growth estimate " << fixed(estimate_growth(g.profile).value, 6) << "\n";
  }
  if (warned)
    std::cerr << "warning: " << s.str() << " rooted at a " << root << "-valent vertex is not concentric"
              << (g.nonconcentric_at ? " from corona " + std::to_string(g.nonconcentric_at) : std::string()) << ": "
              << (g.diagnostic.empty() ? "U_n is not a simple cycle" : g.diagnostic) << "\n";
  else if (g.status != GrowStatus::Ok)
    std::cerr << "warning: " << to_string(g.status) << ": " << g.diagnostic << "\n";

  if (fmt) emit(export_patch(g.patch, *fmt), o.out);
  if (g.status == GrowStatus::PolicyRequired || g.status == GrowStatus::BadRoot) return kUsage;
  return 0;
}

// ---------------------------------------------------------------- table

int cmd_table(const std::string& name, bool as_json, const std::string& out, int max_n) {
  Table t;
  try {
    t = make_table(name, max_n);
  } catch (const std::invalid_argument& e) {
    std::string names;
    for (const auto& n : table_names()) names += " " + n;
    throw UsageError(std::string(e.what()) + "; known tables:" + names);
  }
  emit(as_json ? table_json(t) : table_csv(t), out);
  if (t.mismatches) std::cerr << t.name << ": " << t.mismatches << " row(s) differ from the printed values\n";
  return t.mismatches ? kFail : 0;
}

// ---------------------------------------------------------------- verify

bool verify_formulas(double tol, json& j) {
  bool ok = true;
  json fams = json::array();
  for (const auto& id : consistency_families()) {
    auto r = verify_consistency(id, 20, tol);
    ok = ok && r.ok();
    std::cout << (r.ok() ? "PASS " : "FAIL ") << std::left << std::setw(16) << id << " " << r.tested
              << " tuples, max |closed - spectral| = " << std::scientific << std::setprecision(2) << r.max_diff
              << std::defaultfloat << "\n";
    for (const auto& m : r.mismatches)
      std::cout << "     " << m.sequence.str() << ": closed " << fixed(m.closed, 12) << " spectral "
                << fixed(m.spectral, 12) << "\n";
    fams.push_back({{"family", id}, {"tested", r.tested}, {"max_diff", r.max_diff}, {"ok", r.ok()}});
  }
  j["formulas"] = {{"ok", ok}, {"families", fams}};
  return ok;
}

bool verify_simulator(int max_n, json& j) {
  bool ok = true;
  json cases = json::array();
  for (const auto& c : oracle_equivalence(max_n)) {
    const bool pass = c.exact(max_n);
    ok = ok && pass;
    std::cout << (pass ? "PASS " : "FAIL ") << std::left << std::setw(16) << c.family << " " << std::setw(20)
              << c.sequence.str() << " root " << c.root << ", " << c.compared << " coronas compared";
    if (c.first_mismatch)
      std::cout << ", corona " << c.first_mismatch << ": matrix " << to_string(c.matrix_series[c.first_mismatch - 1])
                << " vs simulator " << c.simulator_series[c.first_mismatch - 1];
    if (!c.note.empty()) std::cout << " (" << c.note << ")";
    std::cout << "\n";
    cases.push_back({{"family", c.family}, {"sequence", c.sequence.str()}, {"root", c.root},
                     {"compared", c.compared}, {"first_mismatch", c.first_mismatch}, {"ok", pass}});
  }
  j["simulator"] = {{"ok", ok}, {"cases", cases}};
  return ok;
}

bool verify_monotonicity(double tol, json& j) {
  auto r = monotonicity_check(tol);
  const bool ok = r.violations.empty() && r.pairs > 0;
  std::cout << (ok ? "PASS " : "FAIL ") << "monotonicity over " << r.pairs << " comparable pairs\n";
  for (const auto& v : r.violations) std::cout << "     " << v << "\n";
  for (const auto& s : r.skipped) std::cout << "     skipped " << s << "\n";
  j["monotonicity"] = {{"ok", ok}, {"pairs", r.pairs}, {"violations", r.violations}};
  return ok;
}

int cmd_verify(const std::string& scope, double tol, int max_n, bool as_json, const std::string& out) {
  if (scope != "formulas" && scope != "simulator" && scope != "monotonicity" && scope != "all")
    throw UsageError("unknown scope '" + scope + "' (formulas, simulator, monotonicity, all)");
  if (max_n < 1) throw UsageError("--max-n must be at least 1");
  json j;
  bool ok = true;
  if (scope == "formulas" || scope == "all") ok = verify_formulas(tol, j) && ok;
  if (scope == "simulator" || scope == "all") ok = verify_simulator(max_n, j) && ok;
  if (scope == "monotonicity" || scope == "all") ok = verify_monotonicity(tol, j) && ok;
  j["ok"] = ok;
  if (as_json || !out.empty()) emit(j.dump(2) + "\n", out);
  std::cout << (ok ? "PASS" : "FAIL") << "\n";
  return ok ? 0 : kFail;
}

// ---------------------------------------------------------------- export

int cmd_export(const std::string& what, const std::string& variant, const std::string& root_text, bool as_json,
               const std::string& out) {
  if (what == "catalog") {
    emit(catalog_json() + "\n", out);
    return 0;
  }
  const CyclicSequence s = parse_or_usage(what);
  CatalogMatrix cm;
  try {
    cm = catalog_matrix(s, variant, parse_root(root_text, s));
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
  const bool want_json = as_json || ext_of(out) == "json";
  if (want_json) {
    json j = json::parse(matrix_json(cm.matrix));
    j["sequence"] = s.str();
    j["root"] = cm.root_description;
    j["v1"] = join(cm.v1);
    j["char_poly"] = char_poly(cm.matrix.m).str();
    emit(j.dump(2) + "\n", out);
  } else {
    std::ostringstream os;
    os << s.str() << " rooted at " << cm.root_description << " (column = parent, row = child)\n";
    os << cm.matrix.m.grid();
    os << "v1 = " << join(cm.v1) << "\n";
    emit(os.str(), out);
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Growth rates of face-homogeneous planar tessellations"};
  app.require_subcommand(1);

  AnalyzeOpts ao;
  auto* analyze = app.add_subcommand("analyze", "classify, build the matrix and compare every growth source");
  analyze->add_option("sequence", ao.seq, "cyclic valence sequence, e.g. [4,6,14]")->required();
  analyze->add_option("--variant", ao.variant, "matrix variant: T1/T2 for [4,4,6,8], 'block' for the generic construction");
  analyze->add_option("--root", ao.root, "root valence or 'vertex'");
  analyze->add_option("-n,--coronas", ao.coronas, "coronas to simulate")->check(CLI::PositiveNumber);
  analyze->add_flag("--json", ao.json);
  analyze->add_option("--out", ao.out, "write the report to FILE");
  analyze->add_flag("--paper-refs", ao.refs, "annotate numbers with their catalog anchor");

  std::string cseq, cout_path;
  bool cjson = false;
  auto* classify_cmd = app.add_subcommand("classify", "growth class, morphism and concentricity");
  classify_cmd->add_option("sequence", cseq)->required();
  classify_cmd->add_flag("--json", cjson);
  classify_cmd->add_option("--out", cout_path);

  SimulateOpts so;
  auto* simulate = app.add_subcommand("simulate", "grow a patch corona by corona");
  simulate->add_option("sequence", so.seq)->required();
  simulate->add_option("--root", so.root, "root valence or 'vertex'");
  simulate->add_option("-n,--coronas", so.coronas);
  simulate->add_option("--policy", so.policy, "none, first, T1, T2");
  simulate->add_flag("--json", so.json);
  simulate->add_option("--out", so.out, "write the patch (.dot, .json, .edges)");
  simulate->add_option("--format", so.format, "patch format when --out has no telling extension");

  std::string tname, tout;
  bool tjson = false;
  int tmax = 9;
  auto* table = app.add_subcommand("table", "reproduce a published table");
  table->add_option("name", tname, "least-growth, pqrst-minimal, pqrstu-minimal, 4468-coronas")->required();
  table->add_flag("--json", tjson);
  table->add_option("--out", tout);
  table->add_option("--max-n", tmax);

  std::string vscope = "all", vout;
  double vtol = 1e-9;
  int vmax = 8;
  bool vjson = false;
  auto* verify = app.add_subcommand("verify", "consistency sweeps");
  verify->add_option("scope", vscope, "formulas, simulator, monotonicity, all");
  verify->add_option("--tolerance", vtol);
  verify->add_option("--max-n", vmax);
  verify->add_flag("--json", vjson);
  verify->add_option("--out", vout);

  std::string ewhat, evariant, eroot, eout;
  bool ejson = false;
  auto* exp = app.add_subcommand("export", "write a transition matrix or the family catalog");
  exp->add_option("what", ewhat, "a sequence or 'catalog'")->required();
  exp->add_option("--variant", evariant);
  exp->add_option("--root", eroot);
  exp->add_flag("--json", ejson);
  exp->add_option("--out", eout);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*analyze) return cmd_analyze(ao);
    if (*classify_cmd) return cmd_classify(cseq, cjson, cout_path);
    if (*simulate) return cmd_simulate(so);
    if (*table) return cmd_table(tname, tjson, tout, tmax);
    if (*verify) return cmd_verify(vscope, vtol, vmax, vjson, vout);
    if (*exp) return cmd_export(ewhat, evariant, eroot, ejson, eout);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kFail;
  }
  return kUsage;
}
