#pragma once

#include <string>
#include <vector>

#include "ssarc/problem.hpp"
#include "ssarc/solver.hpp"

namespace ssarc {

// One benchmark row.  Matches the CSV schema
//   problem,n,m,nit,cpu_s,res,nif,nig,status
// and, cpu_s aside, is fully deterministic for a given build.
struct RunRecord {
  std::string problem;
  int n = 0;
  int m = 0;
  int nit = 0;
  double cpu_s = 0.0;
  double res = 0.0;
  int nif = 0;
  int nig = 0;
  std::string status;
};

RunRecord to_record(const Problem& p, const SolverReport& rep, double cpu_s);

// Solves each problem with the given configuration (wall-clocked per run).
std::vector<RunRecord> run_problems(const std::vector<const Problem*>& ps,
                                    const SolverConfig& cfg);

std::string format_table(const std::vector<RunRecord>& rows);
std::string format_csv(const std::vector<RunRecord>& rows);
std::string format_json(const std::vector<RunRecord>& rows);

// Inverse of format_csv; throws Error on a malformed header or row.
std::vector<RunRecord> parse_csv(const std::string& text);

struct CompareRow {
  std::string problem;
  int nit = 0;
  int ref_nit = 0;
  double ratio = 0.0;
  bool converged = false;
  bool within = false;  // converged and nit <= factor * ref_nit
};

struct CompareReport {
  std::vector<CompareRow> rows;           // input rows with a reference match
  std::vector<std::string> unmatched;     // input rows without one
  double factor = 0.0;
  bool all_within() const {
    for (const CompareRow& r : rows)
      if (!r.within) return false;
    return true;
  }
};

// Joins by problem name (case-sensitive; names are canonical upper-case).
CompareReport compare(const std::vector<RunRecord>& input,
                      const std::vector<RunRecord>& reference,
                      double factor = 3.0);

std::string format_compare(const CompareReport& rep);

}  // namespace ssarc
