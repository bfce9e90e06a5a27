#pragma once

#include <string>
#include <vector>

#include "zgu/help_core.hpp"

namespace zgu {

/// Self-contained run report; class and character references are by name so
/// that a parsed report does not depend on the group file. The structured
/// encoding round-trips byte-identically through parse_report/emit_report.
struct Report {
  struct Vector {
    long effective_order = 1;
    std::vector<std::pair<std::string, Integer>> entries;  // class name -> eps
  };
  struct Branch {
    std::vector<std::pair<long, Vector>> assignments;  // divisor -> vector
  };
  struct Order {
    long order = 1;
    std::string status;
    std::vector<Branch> solutions;
  };
  struct Graph {
    std::vector<long> vertices;
    std::vector<std::pair<long, long>> edges;
  };

  std::string group;
  std::string mode;
  std::vector<std::string> characters;  // empty = all
  std::vector<Order> orders;
  std::string zp1, spp, pgq;  // empty when the mode reports no verdicts
  std::vector<long> surviving_orders;
  std::vector<long> spectrum;
  Graph unit_prime_graph;
  Graph group_prime_graph;
  long constraints = 0;
  long branch_nodes = 0;
  long timing_ms = 0;
};

Report make_report(const CharacterTable& table, const std::string& mode,
                   const std::vector<std::string>& characters,
                   const std::map<long, SolutionSet>& results, const Verdicts& v,
                   const SolveStats& stats, long timing_ms);

/// Structured (JSON) encoding; stable field and key order.
std::string emit_report(const Report& report);
Report parse_report(const std::string& text);

/// Human-readable rendering.
std::string render_text(const Report& report);

}  // namespace zgu
