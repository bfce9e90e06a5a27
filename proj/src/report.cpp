#include "zgu/report.hpp"

#include <sstream>

#include "json.hpp"

namespace zgu {

namespace {

using ordered_json = nlohmann::ordered_json;

Report::Vector vector_report(const CharacterTable& table, const PAVector& v) {
  Report::Vector out;
  out.effective_order = v.effective_order;
  for (const auto& [cls, value] : v.entries)
    out.entries.emplace_back(table.classes[cls].name, value);
  return out;
}

ordered_json graph_json(const Report::Graph& g) {
  ordered_json j;
  j["vertices"] = g.vertices;
  ordered_json edges = ordered_json::array();
  for (const auto& [p, q] : g.edges) edges.push_back({p, q});
  j["edges"] = std::move(edges);
  return j;
}

Report::Graph graph_from_json(const ordered_json& j) {
  Report::Graph g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(v.get<long>());
  for (const auto& e : j.at("edges")) g.edges.emplace_back(e.at(0).get<long>(), e.at(1).get<long>());
  return g;
}

}  // namespace

Report make_report(const CharacterTable& table, const std::string& mode,
                   const std::vector<std::string>& characters,
                   const std::map<long, SolutionSet>& results, const Verdicts& v,
                   const SolveStats& stats, long timing_ms) {
  Report report;
  report.group = table.group_name;
  report.mode = mode;
  report.characters = characters;
  for (const auto& [n, set] : results) {
    Report::Order order;
    order.order = n;
    order.status = to_string(set.status);
    for (const auto& branch : set.solutions) {
      Report::Branch b;
      for (const auto& [d, vec] : branch.assignments)
        b.assignments.emplace_back(d, vector_report(table, vec));
      order.solutions.push_back(std::move(b));
    }
    report.orders.push_back(std::move(order));
  }
  report.zp1 = to_string(v.zp1);
  report.spp = to_string(v.spp);
  report.pgq = to_string(v.pgq);
  report.surviving_orders.assign(v.surviving_orders.begin(), v.surviving_orders.end());
  report.spectrum.assign(v.group_spectrum.begin(), v.group_spectrum.end());
  report.unit_prime_graph.vertices.assign(v.unit_graph.vertices.begin(),
                                          v.unit_graph.vertices.end());
  for (const auto& e : v.unit_graph.edges) report.unit_prime_graph.edges.push_back(e);
  report.group_prime_graph.vertices.assign(v.group_graph.vertices.begin(),
                                           v.group_graph.vertices.end());
  for (const auto& e : v.group_graph.edges) report.group_prime_graph.edges.push_back(e);
  report.constraints = stats.constraints;
  report.branch_nodes = stats.branch_nodes;
  report.timing_ms = timing_ms;
  return report;
}

std::string emit_report(const Report& report) {
  ordered_json j;
  j["group"] = report.group;
  j["mode"] = report.mode;
  j["characters"] = report.characters;
  ordered_json orders = ordered_json::array();
  for (const auto& order : report.orders) {
    ordered_json jo;
    jo["order"] = order.order;
    jo["status"] = order.status;
    ordered_json solutions = ordered_json::array();
    for (const auto& branch : order.solutions) {
      ordered_json assignments = ordered_json::object();
      for (const auto& [d, vec] : branch.assignments) {
        ordered_json jv;
        jv["effective_order"] = vec.effective_order;
        ordered_json entries = ordered_json::object();
        for (const auto& [name, value] : vec.entries) entries[name] = to_string(value);
        jv["entries"] = std::move(entries);
        assignments[std::to_string(d)] = std::move(jv);
      }
      solutions.push_back({{"assignments", std::move(assignments)}});
    }
    jo["solutions"] = std::move(solutions);
    orders.push_back(std::move(jo));
  }
  j["orders"] = std::move(orders);
  ordered_json verdicts = ordered_json::object();
  verdicts["zp1"] = report.zp1;
  verdicts["spp"] = report.spp;
  verdicts["pgq"] = report.pgq;
  j["verdicts"] = std::move(verdicts);
  j["surviving_orders"] = report.surviving_orders;
  j["spectrum"] = report.spectrum;
  j["unit_prime_graph"] = graph_json(report.unit_prime_graph);
  j["group_prime_graph"] = graph_json(report.group_prime_graph);
  j["constraints"] = report.constraints;
  j["branch_nodes"] = report.branch_nodes;
  j["timing_ms"] = report.timing_ms;
  return j.dump(2) + "\n";
}

Report parse_report(const std::string& text) {
  ordered_json j;
  try {
    j = ordered_json::parse(text);
  } catch (const ordered_json::parse_error& e) {
    throw ParseError(std::string("report is not valid JSON: ") + e.what());
  }
  Report report;
  report.group = j.at("group").get<std::string>();
  report.mode = j.at("mode").get<std::string>();
  for (const auto& c : j.at("characters")) report.characters.push_back(c.get<std::string>());
  for (const auto& jo : j.at("orders")) {
    Report::Order order;
    order.order = jo.at("order").get<long>();
    order.status = jo.at("status").get<std::string>();
    for (const auto& js : jo.at("solutions")) {
      Report::Branch branch;
      for (const auto& [key, jv] : js.at("assignments").items()) {
        Report::Vector vec;
        vec.effective_order = jv.at("effective_order").get<long>();
        for (const auto& [name, value] : jv.at("entries").items())
          vec.entries.emplace_back(name, Integer(value.get<std::string>()));
        branch.assignments.emplace_back(std::stol(key), std::move(vec));
      }
      order.solutions.push_back(std::move(branch));
    }
    report.orders.push_back(std::move(order));
  }
  report.zp1 = j.at("verdicts").at("zp1").get<std::string>();
  report.spp = j.at("verdicts").at("spp").get<std::string>();
  report.pgq = j.at("verdicts").at("pgq").get<std::string>();
  for (const auto& v : j.at("surviving_orders")) report.surviving_orders.push_back(v.get<long>());
  for (const auto& v : j.at("spectrum")) report.spectrum.push_back(v.get<long>());
  report.unit_prime_graph = graph_from_json(j.at("unit_prime_graph"));
  report.group_prime_graph = graph_from_json(j.at("group_prime_graph"));
  report.constraints = j.at("constraints").get<long>();
  report.branch_nodes = j.at("branch_nodes").get<long>();
  report.timing_ms = j.at("timing_ms").get<long>();
  return report;
}

namespace {

std::string render_graph(const Report::Graph& g) {
  std::ostringstream os;
  os << "primes {";
  for (std::size_t i = 0; i < g.vertices.size(); ++i)
    os << (i ? ", " : "") << g.vertices[i];
  os << "}, edges {";
  for (std::size_t i = 0; i < g.edges.size(); ++i)
    os << (i ? ", " : "") << "{" << g.edges[i].first << "," << g.edges[i].second << "}";
  os << "}";
  return os.str();
}

}  // namespace

std::string render_text(const Report& report) {
  std::ostringstream os;
  os << "group " << report.group << " (" << report.mode << ")\n";
  if (!report.characters.empty()) {
    os << "characters:";
    for (const auto& c : report.characters) os << " " << c;
    os << "\n";
  }
  for (const auto& order : report.orders) {
    os << "  order " << order.order << ": " << order.status;
    if (!order.solutions.empty()) os << " (" << order.solutions.size() << " solution"
                                     << (order.solutions.size() == 1 ? "" : "s") << ")";
    os << "\n";
    for (const auto& branch : order.solutions) {
      os << "    ";
      bool first_d = true;
      for (const auto& [d, vec] : branch.assignments) {
        if (!first_d) os << "; ";
        os << "u^" << d << ": (";
        bool first_e = true;
        for (const auto& [name, value] : vec.entries) {
          if (!first_e) os << ", ";
          os << name << "=" << value.get_str();
          first_e = false;
        }
        os << ")";
        first_d = false;
      }
      os << "\n";
    }
  }
  if (!report.zp1.empty()) {
    os << "verdicts: ZP1 " << report.zp1 << ", SpP " << report.spp << ", PGQ " << report.pgq
       << "\n";
    os << "orders with solutions:";
    for (long n : report.surviving_orders) os << " " << n;
    os << "\nspectrum of G:";
    for (long n : report.spectrum) os << " " << n;
    os << "\nprime graph of V(ZG) candidates: " << render_graph(report.unit_prime_graph) << "\n";
    os << "prime graph of G:              " << render_graph(report.group_prime_graph) << "\n";
  }
  os << "constraints: " << report.constraints << ", branch nodes: " << report.branch_nodes
     << ", time: " << report.timing_ms << " ms\n";
  return os.str();
}

}  // namespace zgu
