#pragma once

// JSON / TSV views of solver output. The JSON report is the machine-readable
// contract; "opt" is either the solution size or the string "no" when the best
// set is trivial (smaller than k + 2).

#include <string>

#include <json.hpp>

#include "kdefect/model.hpp"
#include "kdefect/solver.hpp"

namespace kdefect {

using nlohmann::json;

inline json solution_to_json(const Solution& sol) {
  return json{{"size", sol.size()},
              {"vertices", sol.vertices},
              {"nontrivial", sol.nontrivial},
              {"k", sol.k}};
}

inline Solution solution_from_json(const json& j) {
  Solution sol;
  sol.vertices = j.at("vertices").get<std::vector<int>>();
  sol.k = j.at("k").get<int>();
  sol.nontrivial = j.at("nontrivial").get<bool>();
  if (j.at("size").get<int>() != sol.size())
    throw ValidationError("solution json: size field disagrees with vertex list");
  return sol;
}

inline json report_to_json(const SolveReport& rep, const std::string& graph_name) {
  json j{{"graph", graph_name},
         {"n", rep.n},
         {"m", rep.m},
         {"degeneracy", rep.degeneracy},
         {"k", rep.k},
         {"nontrivial", !rep.no},
         {"nodes", rep.stats.nodes},
         {"bound_prunes", rep.stats.bound_prunes},
         {"mc_calls", rep.stats.mc_calls},
         {"time_ms", rep.stats.time_ms},
         {"bound", bound_name(rep.bound)},
         {"status", rep.complete ? "solved" : "oot"}};
  if (rep.no)
    j["opt"] = "no";
  else
    j["opt"] = rep.solution.size();
  return j;
}

// One tab-separated row; opt carries a ">=" marker when the run timed out,
// since the best-found size is then only a lower bound.
inline std::string report_to_tsv(const SolveReport& rep, const std::string& graph_name) {
  std::string opt;
  if (rep.no && rep.complete)
    opt = "no";
  else
    opt = (rep.complete ? "" : ">=") + std::to_string(rep.solution.size());
  char buf[256];
  std::snprintf(buf, sizeof buf, "%s\t%d\t%s\t%.1f\t%.3f\t%s\t%s", graph_name.c_str(), rep.k,
                opt.c_str(), rep.stats.nodes / 1000.0, rep.stats.time_ms / 1000.0,
                bound_name(rep.bound), rep.complete ? "solved" : "oot");
  return buf;
}

inline const char* tsv_header() { return "graph\tk\topt\tnodes_k\ttime_s\tbound\tstatus"; }

}  // namespace kdefect
