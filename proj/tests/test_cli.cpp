#include "zgu/cli.hpp"

#include <sstream>

#include "doctest.h"
#include "zgu/report.hpp"
#include "zgu/scenarios.hpp"

using namespace zgu;

namespace {

std::string data_file(const std::string& name) {
  return std::string(ZGU_DATA_DIR) + "/" + name;
}

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run invoke(RunConfig config) {
  std::ostringstream out, err;
  int code = run(config, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("validate mode") {
  RunConfig config;
  config.mode = RunConfig::Mode::Validate;
  config.group_path = data_file("s3.json");
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("valid") != std::string::npos);

  config.group_path = data_file("does_not_exist.json");
  CHECK(invoke(config).code == 2);
}

TEST_CASE("validate reports violations on a corrupted file") {
  RunConfig config;
  config.mode = RunConfig::Mode::Validate;
  config.group_path = std::string(ZGU_DATA_DIR) + "/../tests/fixtures/s3_corrupt.json";
  Run r = invoke(config);
  CHECK(r.code == 2);
  CHECK(r.out.find("orthogonality") != std::string::npos);
}

TEST_CASE("check --all on A5") {
  RunConfig config;
  config.mode = RunConfig::Mode::CheckAll;
  config.group_path = data_file("a5.json");
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("order 5: AllRationallyTrivial (2 solutions)") != std::string::npos);
  CHECK(r.out.find("order 6: NoUnits") != std::string::npos);
  CHECK(r.out.find("ZP1 Positive, SpP Positive, PGQ Positive") != std::string::npos);
}

TEST_CASE("check --all on S5 exits 1 with critical tuples") {
  RunConfig config;
  config.mode = RunConfig::Mode::CheckAll;
  config.group_path = data_file("s5.json");
  Run r = invoke(config);
  CHECK(r.code == 1);
  CHECK(r.out.find("order 4: Critical") != std::string::npos);
  CHECK(r.out.find("ZP1 Inconclusive") != std::string::npos);
}

TEST_CASE("check --order") {
  RunConfig config;
  config.mode = RunConfig::Mode::CheckOrder;
  config.group_path = data_file("a5.json");
  config.order = 5;
  config.characters = {"chi3a"};
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("5a=0, 5b=1") != std::string::npos);
  CHECK(r.out.find("5a=1, 5b=0") != std::string::npos);

  config.order = 7;  // does not divide 30
  CHECK(invoke(config).code == 2);

  config.order = 4;
  config.characters = {};
  config.group_path = data_file("s5.json");
  CHECK(invoke(config).code == 1);  // critical tuples at order 4

  config.characters = {"nope"};
  CHECK(invoke(config).code == 2);
}

TEST_CASE("spectrum and prime-graph modes") {
  RunConfig config;
  config.group_path = data_file("s3.json");
  config.mode = RunConfig::Mode::Spectrum;
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("SpP Positive") != std::string::npos);

  config.mode = RunConfig::Mode::PrimeGraph;
  r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("PGQ Positive") != std::string::npos);

  config.group_path = data_file("c6.json");
  r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("{2,3}") != std::string::npos);
}

TEST_CASE("structured reports round-trip byte-identically") {
  RunConfig config;
  config.mode = RunConfig::Mode::CheckAll;
  config.group_path = data_file("a5.json");
  config.format = RunConfig::Format::Structured;
  Run r = invoke(config);
  CHECK(r.code == 0);
  Report parsed = parse_report(r.out);
  CHECK(emit_report(parsed) == r.out);
  CHECK(parsed.group == "A5");
  CHECK(parsed.zp1 == "Positive");
  CHECK(parsed.surviving_orders == std::vector<long>{1, 2, 3, 5});

  // the same for a report with critical tuples and branch data
  config.group_path = data_file("s5.json");
  r = invoke(config);
  CHECK(r.code == 1);
  Report parsed5 = parse_report(r.out);
  CHECK(emit_report(parsed5) == r.out);
}

TEST_CASE("worked example: s3-lattice") {
  RunConfig config;
  config.mode = RunConfig::Mode::Examples;
  config.example_name = "s3-lattice";
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("lattice index in Z^6: 18") != std::string::npos);
  CHECK(r.out.find("verified") != std::string::npos);
}

TEST_CASE("worked example: s3-unit") {
  RunConfig config;
  config.mode = RunConfig::Mode::Examples;
  config.example_name = "s3-unit";
  config.group_path = data_file("s3.json");
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("order: 2") != std::string::npos);
  CHECK(r.out.find("1a=0 2a=1 3a=0") != std::string::npos);
  CHECK(r.out.find("RationallyConjugate") != std::string::npos);
}

TEST_CASE("worked example: a5-order5") {
  RunConfig config;
  config.mode = RunConfig::Mode::Examples;
  config.example_name = "a5-order5";
  config.group_path = data_file("a5.json");
  Run r = invoke(config);
  CHECK(r.code == 0);
  CHECK(r.out.find("-3/5*eps(5a) 2/5*eps(5b) + 3/5") != std::string::npos);
  CHECK(r.out.find("2/5*eps(5a) -3/5*eps(5b) + 3/5") != std::string::npos);
  CHECK(r.out.find("status: AllRationallyTrivial") != std::string::npos);
}

TEST_CASE("unknown example name") {
  RunConfig config;
  config.mode = RunConfig::Mode::Examples;
  config.example_name = "zzz";
  Run r = invoke(config);
  CHECK(r.code == 2);
  CHECK(r.err.find("unknown example") != std::string::npos);
}

TEST_CASE("scenario structs carry the expected exact values") {
  auto lattice = run_s3_lattice();
  CHECK(lattice.equal);
  CHECK(lattice.index == 18);

  CharacterTable s3 = load_table_file(data_file("s3.json"));
  auto unit = run_s3_unit(s3);
  CHECK(unit.order == 2);
  CHECK(unit.partial_augmentations == std::vector<Rational>{0, 1, 0});
  CHECK(unit.word_coefficients == std::vector<Integer>{0, 1, -1, 1, 1, -1});
  CHECK(unit.identity_coefficient_zero);
  CHECK(unit.is_unique_order_solution);

  CharacterTable a5 = load_table_file(data_file("a5.json"));
  auto order5 = run_a5_order5(a5);
  CHECK(order5.solutions.solutions.size() == 2);
  const int c5a = a5.class_index("5a"), c5b = a5.class_index("5b");
  CHECK(order5.form_i1.coefficients.at(c5a) == make_rational(-3, 5));
  CHECK(order5.form_i2.coefficients.at(c5b) == make_rational(-3, 5));
}
