#include "tessgrowth/tables.hpp"

#include "tessgrowth/bilinski.hpp"
#include "tessgrowth/formulas.hpp"
#include "tessgrowth/spectral.hpp"
#include "tessgrowth/transition.hpp"

#include <json.hpp>

#include <algorithm>
#include <atomic>
#include <iomanip>
#include <sstream>
#include <stdexcept>
#include <thread>

namespace tg {

const std::vector<long long> kPrintedT1 = {4, 30, 110, 494, 1938, 8272, 33464, 140046, 573610};
const std::vector<long long> kPrintedT2 = {4, 28, 108, 468, 1900, 7956, 32868, 136380, 565956};

const std::vector<std::string>& table_names() {
  static const std::vector<std::string> names = {"least-growth", "pqrst-minimal", "pqrstu-minimal", "4468-coronas"};
  return names;
}

void parallel_for(int n, const std::function<void(int)>& job, unsigned workers) {
  if (workers == 0) workers = std::max(1u, std::thread::hardware_concurrency());
  workers = std::min<unsigned>(workers, std::max(1, n));
  std::atomic<int> next{0};
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w)
    pool.emplace_back([&] {
      for (int i = next++; i < n; i = next++) job(i);
    });
  for (auto& t : pool) t.join();
}

CoronaComparison corona_table_4468(int max_n, bool run_simulator) {
  CoronaComparison c;
  const CyclicSequence s({4, 4, 6, 8});
  for (int i = 0; i < max_n && i < static_cast<int>(kPrintedT1.size()); ++i) {
    c.printed_t1.push_back(kPrintedT1[i]);
    c.printed_t2.push_back(kPrintedT2[i]);
  }
  auto m1 = catalog_matrix(s, "T1"), m2 = catalog_matrix(s, "T2");
  c.matrix_t1 = corona_series(m1.matrix.m, m1.v1, max_n, m1.matrix.weights);
  c.matrix_t2 = corona_series(m2.matrix.m, m2.v1, max_n, m2.matrix.weights);
  if (run_simulator) {
    GrowOptions opt;
    opt.keep_patch = false;
    GrowResult r1, r2;
    parallel_for(2, [&](int i) {
      (i == 0 ? r1 : r2) = grow(s, 4, max_n, policy_by_name(i == 0 ? "T1" : "T2"), opt);
    });
    c.sim_t1 = r1.profile.faces;
    c.sim_t2 = r2.profile.faces;
    if (r1.status != GrowStatus::Ok) c.sim_error += "T1: " + r1.diagnostic + " ";
    if (r2.status != GrowStatus::Ok) c.sim_error += "T2: " + r2.diagnostic;
  }
  return c;
}

namespace {

Table least_growth() {
  Table t{"least-growth", {"class", "sequence", "printed", "computed", "full", "golden", "match"}, {}};
  for (const auto& r : least_growth_table()) {
    std::ostringstream full;
    full << std::setprecision(12) << r.computed;
    t.rows.push_back({r.family, r.minimal.str(), r.printed, r.error.empty() ? r.computed_str : "error",
                      r.error.empty() ? full.str() : r.error, r.bold ? "yes" : "no", r.matches ? "yes" : "no"});
    if (!r.matches) ++t.mismatches;
  }
  return t;
}

Table minimal(const std::string& name, const std::vector<MinimalRow>& rows) {
  Table t{name, {"sequence", "printed", "computed", "full", "least", "match"}, {}};
  for (const auto& r : rows) {
    std::ostringstream full;
    full << std::fixed << std::setprecision(8) << r.computed;
    t.rows.push_back({r.sequence.str(), r.printed, truncated4(r.computed), full.str(), r.starred ? "yes" : "no",
                      r.matches ? "yes" : "no"});
    if (!r.matches) ++t.mismatches;
  }
  return t;
}

Table coronas(int max_n) {
  CoronaComparison c = corona_table_4468(max_n, true);
  Table t{"4468-coronas", {"n", "T1 printed", "T1 matrix", "T1 simulator", "T2 printed", "T2 matrix", "T2 simulator"}, {}};
  auto at = [](const std::vector<long long>& v, int i) { return i < static_cast<int>(v.size()) ? std::to_string(v[i]) : std::string("-"); };
  for (int i = 0; i < max_n; ++i) {
    t.rows.push_back({std::to_string(i + 1), at(c.printed_t1, i), to_string(c.matrix_t1[i]), at(c.sim_t1, i),
                      at(c.printed_t2, i), to_string(c.matrix_t2[i]), at(c.sim_t2, i)});
    for (int side = 0; side < 2; ++side) {
      const auto& printed = side ? c.printed_t2 : c.printed_t1;
      const auto& mat = side ? c.matrix_t2 : c.matrix_t1;
      const auto& sim = side ? c.sim_t2 : c.sim_t1;
      if (i >= static_cast<int>(printed.size())) continue;
      bool ok = mat[i] == printed[i] && i < static_cast<int>(sim.size()) && sim[i] == printed[i];
      if (!ok) ++t.mismatches;
    }
  }
  return t;
}

}  // namespace

Table make_table(const std::string& name, int max_n) {
  if (name == "least-growth") return least_growth();
  if (name == "pqrst-minimal") return minimal(name, pqrst_minimal_table());
  if (name == "pqrstu-minimal") return minimal(name, pqrstu_minimal_table());
  if (name == "4468-coronas") {
    if (max_n < 1) throw std::invalid_argument("--max-n must be at least 1");
    return coronas(max_n);
  }
  throw std::invalid_argument("unknown table '" + name + "'");
}

std::string table_csv(const Table& t) {
  auto cell = [](const std::string& s) {
    if (s.find_first_of(",\"\n") == std::string::npos) return s;
    std::string q = "\"";
    for (char ch : s) q += ch == '"' ? std::string("\"\"") : std::string(1, ch);
    return q + "\"";
  };
  std::ostringstream os;
  for (size_t i = 0; i < t.header.size(); ++i) os << (i ? "," : "") << cell(t.header[i]);
  os << "\n";
  for (const auto& r : t.rows) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << cell(r[i]);
    os << "\n";
  }
  return os.str();
}

std::string table_json(const Table& t) {
  nlohmann::ordered_json j;
  j["table"] = t.name;
  j["mismatches"] = t.mismatches;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  for (const auto& r : t.rows) {
    nlohmann::ordered_json o;
    for (size_t i = 0; i < r.size(); ++i) o[t.header[i]] = r[i];
    rows.push_back(o);
  }
  j["rows"] = rows;
  return j.dump(2) + "\n";
}

std::string table_text(const Table& t) {
  std::vector<size_t> w(t.header.size());
  for (size_t i = 0; i < w.size(); ++i) w[i] = t.header[i].size();
  for (const auto& r : t.rows)
    for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
  std::ostringstream os;
  auto line = [&](const std::vector<std::string>& r) {
    for (size_t i = 0; i < r.size(); ++i) os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
    os << "\n";
  };
  line(t.header);
  for (const auto& r : t.rows) line(r);
  os << (t.mismatches ? std::to_string(t.mismatches) + " row(s) differ from the printed values\n"
                      : "all rows match the printed values\n");
  return os.str();
}

}  // namespace tg
