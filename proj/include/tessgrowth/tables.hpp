// Reproductions of the published tables, rendered as CSV or JSON.
#pragma once

#include "tessgrowth/rational.hpp"

#include <functional>
#include <string>
#include <vector>

namespace tg {

struct Table {
  std::string name;
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;
  int mismatches = 0;   // rows disagreeing with the printed values
};

// least-growth, pqrst-minimal, pqrstu-minimal, 4468-coronas
const std::vector<std::string>& table_names();
// Throws std::invalid_argument for an unknown name.  max_n only affects
// 4468-coronas (printed values exist for n <= 9).
Table make_table(const std::string& name, int max_n = 9);

std::string table_csv(const Table& t);
std::string table_json(const Table& t);
std::string table_text(const Table& t);

struct CoronaComparison {
  std::vector<long long> printed_t1, printed_t2;
  std::vector<Rational> matrix_t1, matrix_t2;
  std::vector<long long> sim_t1, sim_t2;
  std::string sim_error;
};

extern const std::vector<long long> kPrintedT1;
extern const std::vector<long long> kPrintedT2;

// Corona sizes of [4,4,6,8] from the M1/M2 series and from the simulator.
CoronaComparison corona_table_4468(int max_n, bool run_simulator = true);

// Runs jobs on at most `workers` threads (0 = hardware concurrency).
void parallel_for(int n, const std::function<void(int)>& job, unsigned workers = 0);

}  // namespace tg
