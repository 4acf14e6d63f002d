#include "ssarc/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <sstream>

namespace ssarc {

namespace {

std::string fmt(const char* f, double v) {
  char buf[64];
  std::snprintf(buf, sizeof buf, f, v);
  return buf;
}

std::vector<std::string> split(const std::string& line, char sep) {
  std::vector<std::string> out;
  std::string cur;
  for (char ch : line) {
    if (ch == sep) {
      out.push_back(cur);
      cur.clear();
    } else {
      cur += ch;
    }
  }
  out.push_back(cur);
  return out;
}

constexpr const char* kHeader = "problem,n,m,nit,cpu_s,res,nif,nig,status";

}  // namespace

RunRecord to_record(const Problem& p, const SolverReport& rep, double cpu_s) {
  RunRecord r;
  r.problem = p.name;
  r.n = p.n;
  r.m = p.m;
  r.nit = rep.nit;
  r.cpu_s = cpu_s;
  r.res = rep.res;
  r.nif = rep.nif;
  r.nig = rep.nig;
  r.status = to_string(rep.status);
  return r;
}

std::vector<RunRecord> run_problems(const std::vector<const Problem*>& ps,
                                    const SolverConfig& cfg) {
  std::vector<RunRecord> rows;
  rows.reserve(ps.size());
  for (const Problem* p : ps) {
    const auto t0 = std::chrono::steady_clock::now();
    const SolverReport rep = solve(*p, cfg);
    const auto t1 = std::chrono::steady_clock::now();
    rows.push_back(
        to_record(*p, rep, std::chrono::duration<double>(t1 - t0).count()));
  }
  return rows;
}

std::string format_table(const std::vector<RunRecord>& rows) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %4s %4s %5s %10s %11s %5s %5s  %s\n",
                "problem", "n", "m", "nit", "cpu_s", "res", "nif", "nig",
                "status");
  os << buf;
  for (const RunRecord& r : rows) {
    std::snprintf(buf, sizeof buf,
                  "%-10s %4d %4d %5d %10.4f %11.4e %5d %5d  %s\n",
                  r.problem.c_str(), r.n, r.m, r.nit, r.cpu_s, r.res, r.nif,
                  r.nig, r.status.c_str());
    os << buf;
  }
  return os.str();
}

std::string format_csv(const std::vector<RunRecord>& rows) {
  std::ostringstream os;
  os << kHeader << "\n";
  for (const RunRecord& r : rows) {
    os << r.problem << ',' << r.n << ',' << r.m << ',' << r.nit << ','
       << fmt("%.6f", r.cpu_s) << ',' << fmt("%.4e", r.res) << ',' << r.nif
       << ',' << r.nig << ',' << r.status << "\n";
  }
  return os.str();
}

std::string format_json(const std::vector<RunRecord>& rows) {
  std::ostringstream os;
  os << "[\n";
  for (size_t i = 0; i < rows.size(); ++i) {
    const RunRecord& r = rows[i];
    os << "  {\"problem\": \"" << r.problem << "\", \"n\": " << r.n
       << ", \"m\": " << r.m << ", \"nit\": " << r.nit
       << ", \"cpu_s\": " << fmt("%.6f", r.cpu_s)
       << ", \"res\": " << fmt("%.4e", r.res) << ", \"nif\": " << r.nif
       << ", \"nig\": " << r.nig << ", \"status\": \"" << r.status << "\"}"
       << (i + 1 < rows.size() ? "," : "") << "\n";
  }
  os << "]\n";
  return os.str();
}

std::vector<RunRecord> parse_csv(const std::string& text) {
  std::istringstream is(text);
  std::string line;
  if (!std::getline(is, line)) throw Error("empty CSV");
  if (!line.empty() && line.back() == '\r') line.pop_back();
  if (line != kHeader)
    throw Error("unexpected CSV header: " + line);

  std::vector<RunRecord> rows;
  while (std::getline(is, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    const auto f = split(line, ',');
    if (f.size() != 9) throw Error("malformed CSV row: " + line);
    try {
      RunRecord r;
      r.problem = f[0];
      r.n = std::stoi(f[1]);
      r.m = std::stoi(f[2]);
      r.nit = std::stoi(f[3]);
      r.cpu_s = std::stod(f[4]);
      r.res = std::stod(f[5]);
      r.nif = std::stoi(f[6]);
      r.nig = std::stoi(f[7]);
      r.status = f[8];
      rows.push_back(std::move(r));
    } catch (const std::logic_error&) {
      throw Error("malformed CSV row: " + line);
    }
  }
  return rows;
}

CompareReport compare(const std::vector<RunRecord>& input,
                      const std::vector<RunRecord>& reference, double factor) {
  CompareReport rep;
  rep.factor = factor;
  for (const RunRecord& in : input) {
    const RunRecord* ref = nullptr;
    for (const RunRecord& r : reference) {
      if (r.problem == in.problem) {
        ref = &r;
        break;
      }
    }
    if (!ref) {
      rep.unmatched.push_back(in.problem);
      continue;
    }
    CompareRow row;
    row.problem = in.problem;
    row.nit = in.nit;
    row.ref_nit = ref->nit;
    row.ratio = ref->nit > 0 ? double(in.nit) / ref->nit
                             : (in.nit == 0 ? 1.0 : double(in.nit));
    row.converged = (in.status == "Converged");
    row.within = row.converged && in.nit <= factor * ref->nit;
    rep.rows.push_back(std::move(row));
  }
  return rep;
}

std::string format_compare(const CompareReport& rep) {
  std::ostringstream os;
  char buf[160];
  std::snprintf(buf, sizeof buf, "%-10s %6s %8s %7s  %s\n", "problem", "nit",
                "ref_nit", "ratio", "verdict");
  os << buf;
  for (const CompareRow& r : rep.rows) {
    std::snprintf(buf, sizeof buf, "%-10s %6d %8d %7.2f  %s\n",
                  r.problem.c_str(), r.nit, r.ref_nit, r.ratio,
                  r.within ? "ok" : (r.converged ? "slow" : "failed"));
    os << buf;
  }
  for (const std::string& name : rep.unmatched)
    os << name << ": no reference row\n";
  const size_t ok = static_cast<size_t>(
      std::count_if(rep.rows.begin(), rep.rows.end(),
                    [](const CompareRow& r) { return r.within; }));
  std::snprintf(buf, sizeof buf, "%zu/%zu within %.1fx\n", ok,
                rep.rows.size(), rep.factor);
  os << buf;
  return os.str();
}

}  // namespace ssarc
