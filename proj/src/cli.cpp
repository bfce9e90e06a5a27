#include "zgu/cli.hpp"

#include <chrono>
#include <ostream>

#include "json.hpp"
#include "zgu/report.hpp"
#include "zgu/scenarios.hpp"

namespace zgu {

namespace {

using Clock = std::chrono::steady_clock;

long ms_since(Clock::time_point start) {
  return std::chrono::duration_cast<std::chrono::milliseconds>(Clock::now() - start).count();
}

std::vector<int> resolve_characters(const CharacterTable& table,
                                    const std::vector<std::string>& names) {
  std::vector<int> indices;
  for (const auto& name : names) {
    int idx = table.character_index(name);
    if (idx < 0) throw Error("unknown character '" + name + "'");
    indices.push_back(idx);
  }
  return indices;
}

int require_valid(const CharacterTable& table, std::ostream& err) {
  auto violations = validate(table);
  if (violations.empty()) return 0;
  err << "error: group file fails validation:\n";
  for (const auto& v : violations) err << "  " << v << "\n";
  return 2;
}

void print_forms(const CharacterTable& table, const std::map<long, SolutionSet>& results,
                 const SolveOptions& options, std::ostream& out) {
  out << "constraint forms (n * mu as affine forms in the top-level eps):\n";
  for (const auto& [n, set] : results) {
    if (set.solutions.empty() || n == 1) continue;
    for (const auto& branch : set.solutions) {
      out << "  order " << n << ", branch:\n";
      std::vector<int> chars = options.characters;
      if (chars.empty())
        for (std::size_t i = 0; i < table.characters.size(); ++i)
          chars.push_back(static_cast<int>(i));
      for (int chi : chars) {
        auto forms = build_multiplicity_forms(table, chi, n, branch);
        for (const auto& form : forms) {
          out << "    " << table.characters[chi].name << " i=" << form.root_exponent << ":";
          for (const auto& [cls, coeff] : form.coefficients)
            out << " " << to_string(coeff) << "*eps(" << table.classes[cls].name << ")";
          out << " + " << to_string(form.constant) << "\n";
        }
      }
      break;  // one branch is enough to display the matrix
    }
  }
}

int run_solver_mode(const RunConfig& config, const CharacterTable& table, std::ostream& out,
                    std::ostream& err) {
  if (int code = require_valid(table, err)) return code;

  SolveOptions options;
  options.characters = resolve_characters(table, config.characters);

  const long e = exponent(table);
  std::map<long, SolutionSet> results;
  SolveStats stats;
  const auto start = Clock::now();

  std::string mode_name;
  if (config.mode == RunConfig::Mode::CheckOrder) {
    if (config.order < 1 || e % config.order != 0)
      throw Error("order " + std::to_string(config.order) + " does not divide the exponent " +
                  std::to_string(e));
    mode_name = "check-order-" + std::to_string(config.order);
    std::map<long, SolutionSet> partial;
    for (long d : divisors_of(config.order))
      partial[d] = solve_order(table, d, partial, options, &stats);
    results = std::move(partial);
  } else {
    mode_name = config.mode == RunConfig::Mode::CheckAll ? "check-all"
                : config.mode == RunConfig::Mode::Spectrum ? "spectrum"
                                                           : "prime-graph";
    results = solve_all(table, options, &stats);
  }

  Verdicts v = verdicts(results, table);
  Report report =
      make_report(table, mode_name, config.characters, results, v, stats, ms_since(start));

  if (config.format == RunConfig::Format::Structured) {
    out << emit_report(report);
  } else {
    switch (config.mode) {
      case RunConfig::Mode::Spectrum: {
        out << "spectrum of " << table.group_name << ":";
        for (long n : report.spectrum) out << " " << n;
        out << "\norders surviving the constraints:";
        for (long n : report.surviving_orders) out << " " << n;
        out << "\nSpP " << report.spp << "\n";
        break;
      }
      case RunConfig::Mode::PrimeGraph: {
        out << "prime graph of " << table.group_name << ": " << to_string(v.group_graph) << "\n";
        out << "prime graph from surviving orders: " << to_string(v.unit_graph) << "\n";
        out << "PGQ " << report.pgq << "\n";
        break;
      }
      default:
        out << render_text(report);
    }
    if (config.verbosity >= 2) print_forms(table, results, options, out);
  }

  switch (config.mode) {
    case RunConfig::Mode::CheckOrder:
      return results.at(config.order).status == SolutionStatus::Critical ? 1 : 0;
    case RunConfig::Mode::Spectrum:
      return v.spp == VerdictValue::Positive ? 0 : 1;
    case RunConfig::Mode::PrimeGraph:
      return v.pgq == VerdictValue::Positive ? 0 : 1;
    default:
      return (v.zp1 == VerdictValue::Positive && v.spp == VerdictValue::Positive &&
              v.pgq == VerdictValue::Positive)
                 ? 0
                 : 1;
  }
}

int run_examples(const RunConfig& config, std::ostream& out, std::ostream& err) {
  if (config.example_name == "s3-lattice") {
    auto s = run_s3_lattice();
    out << "Wedderburn image of ZS3, slot convention (aug, sgn, m11, m12/3, m21, m22)\n";
    out << "HNF basis of the image lattice:\n";
    for (const auto& row : s.image_lattice.basis) {
      out << "  (";
      for (std::size_t j = 0; j < row.size(); ++j) out << (j ? ", " : "") << row[j].get_str();
      out << ")\n";
    }
    out << "lattice index in Z^6: " << s.index.get_str() << "\n";
    out << "congruence description {x=y mod 2, x=a mod 3, y=d mod 3} generates "
        << (s.equal ? "the same lattice: verified" : "A DIFFERENT LATTICE") << "\n";
    return s.equal ? 0 : 1;
  }
  if (config.example_name == "s3-unit") {
    CharacterTable table = load_table_file(config.group_path);
    if (int code = require_valid(table, err)) return code;
    auto s = run_s3_unit(table);
    out << "u = ";
    const char* words[] = {"1", "a", "a^2", "b", "ab", "a^2b"};
    bool first = true;
    for (std::size_t i = 0; i < s.word_coefficients.size(); ++i) {
      const Integer& c = s.word_coefficients[i];
      if (c == 0) continue;
      if (!first && c > 0) out << " + ";
      if (c < 0) out << (first ? "-" : " - ");
      Integer a = abs(c);
      if (a != 1) out << a.get_str() << "*";
      out << words[i];
      first = false;
    }
    out << "  (image (1, -1, diag(1, -1)))\n";
    out << "order: " << s.order << "\n";
    out << "identity coefficient zero: " << (s.identity_coefficient_zero ? "yes" : "NO") << "\n";
    out << "partial augmentations:";
    for (std::size_t c = 0; c < s.partial_augmentations.size(); ++c)
      out << " " << table.classes[c].name << "=" << to_string(s.partial_augmentations[c]);
    out << "\n";
    if (s.mrsw.rationally_conjugate) {
      out << "mrsw: RationallyConjugate, targets";
      for (const auto& [d, cls] : s.mrsw.target_classes)
        out << " u^" << d << "->" << table.classes[cls].name;
      out << "\n";
    } else {
      out << "mrsw: Fails at u^" << s.mrsw.witness->divisor << ", class "
          << table.classes[s.mrsw.witness->class_index].name << ", value "
          << to_string(s.mrsw.witness->value) << "\n";
    }
    out << "matches the solver's unique order-" << s.order
        << " solution: " << (s.is_unique_order_solution ? "yes" : "NO") << "\n";
    bool ok = s.order == 2 && s.identity_coefficient_zero && s.mrsw.rationally_conjugate &&
              s.is_unique_order_solution;
    return ok ? 0 : 1;
  }
  if (config.example_name == "a5-order5") {
    CharacterTable table = load_table_file(config.group_path);
    if (int code = require_valid(table, err)) return code;
    auto s = run_a5_order5(table);
    auto show = [&](const MultiplicityForm& form) {
      out << "  mu(zeta^" << form.root_exponent << "):";
      for (const auto& [cls, coeff] : form.coefficients)
        out << " " << to_string(coeff) << "*eps(" << table.classes[cls].name << ")";
      out << " + " << to_string(form.constant) << "\n";
    };
    out << "character " << s.character << ", multiplicity forms for i = 1, 2:\n";
    show(s.form_i1);
    show(s.form_i2);
    out << "order-5 solutions:\n";
    for (const auto& branch : s.solutions.solutions) {
      out << "  (";
      bool first = true;
      for (const auto& [cls, value] : branch.assignments.at(1).entries) {
        if (!first) out << ", ";
        out << table.classes[cls].name << "=" << value.get_str();
        first = false;
      }
      out << ")\n";
    }
    out << "status: " << to_string(s.solutions.status) << "\n";
    return s.solutions.status == SolutionStatus::AllRationallyTrivial ? 0 : 1;
  }
  throw UnknownExampleError("unknown example '" + config.example_name +
                            "' (expected s3-lattice, s3-unit or a5-order5)");
}

}  // namespace

int run(const RunConfig& config, std::ostream& out, std::ostream& err) {
  try {
    if (config.mode == RunConfig::Mode::Examples) return run_examples(config, out, err);

    CharacterTable table = load_table_file(config.group_path);
    if (config.mode == RunConfig::Mode::Validate) {
      auto violations = validate(table);
      if (config.format == RunConfig::Format::Structured) {
        nlohmann::ordered_json j;
        j["group"] = table.group_name;
        j["mode"] = "validate";
        j["violations"] = violations;
        out << j.dump(2) << "\n";
        return violations.empty() ? 0 : 2;
      }
      if (violations.empty()) {
        out << table.group_name << ": valid (" << table.classes.size() << " classes, "
            << table.characters.size() << " characters, |G| = " << table.group_order << ")\n";
        return 0;
      }
      out << table.group_name << ": " << violations.size() << " violation"
          << (violations.size() == 1 ? "" : "s") << "\n";
      for (const auto& v : violations) out << "  " << v << "\n";
      return 2;
    }
    return run_solver_mode(config, table, out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

}  // namespace zgu
