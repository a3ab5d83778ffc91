#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include <json.hpp>

#include "fls/errors.hpp"
#include "fls/io.hpp"

using namespace fls;
using njson = nlohmann::ordered_json;

namespace {

const char* kOver3x2 = R"({
  "A": [[-1, 2], [3, 4], [2, -1]],
  "b": [{"tri": [-1, 1, 3]}, {"tri": [15, 17, 20]}, {"tri": [2, 3, 6]}]
})";

const char* kOver3x2Inconsistent = R"({
  "A": [[-1, 2], [3, 4], [2, -1]],
  "b": [{"tri": [-1, 1, 3]}, {"tri": [15, 17, 20]}, {"tri": [-2, -1, 0]}]
})";

std::string write_temp(const std::string& name, const std::string& text) {
  const auto path = std::filesystem::temp_directory_path() / name;
  std::ofstream out(path, std::ios::binary);
  out << text;
  return path.string();
}

struct RunResult {
  int code;
  std::string out;
  std::string err;
};

RunResult run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run_command(args, out, err);
  return {code, out.str(), err.str()};
}

}  // namespace

TEST_CASE("parse_system accepts tri and pl entries") {
  const auto sys = parse_system(R"({
    "A": [[1, -2], [1, 3]],
    "b": [{"tri": [-2, 1, 4]},
          {"pl": {"r": [0, 1], "lower": [2, 6], "upper": [10, 6]}}]
  })");
  CHECK(sys.A.rows() == 2);
  CHECK(sys.A(0, 1) == -2.0);
  CHECK(sys.rhs[1].membership(6.0) == 1.0);
  CHECK(sys.rhs[1].support() == std::pair{2.0, 10.0});
}

TEST_CASE("parse_system rejects bad input") {
  CHECK_THROWS_AS(parse_system("{ not json"), ParseError);
  CHECK_THROWS_AS(parse_system(R"({"A": [[1]]})"), ValidationError);
  CHECK_THROWS_AS(parse_system(R"({"A": [[1], [2, 3]], "b": []})"), ValidationError);
  CHECK_THROWS_AS(parse_system(R"({"A": [[1]], "b": [{"tri": [1, 2]}]})"),
                  ValidationError);
  // unordered endpoints must name the offending entry
  try {
    parse_system(R"({"A": [[1]], "b": [{"tri": [4, 1, -2]}]})");
    FAIL("expected ValidationError");
  } catch (const ValidationError& ex) {
    CHECK(std::string(ex.what()).find("rhs entry 0") != std::string::npos);
  }
}

TEST_CASE("membership command") {
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  const auto r = run({"membership", path, "--point", "2.5,2"});
  CHECK(r.code == 0);
  const auto doc = njson::parse(r.out);
  CHECK(doc.at("membership").get<double>() == doctest::Approx(0.25).epsilon(1e-12));
  CHECK(doc.at("per_row").size() == 3);
  CHECK_FALSE(doc.at("not_a_solution").get<bool>());

  const auto outside = run({"membership", path, "--point", "100,100"});
  CHECK(outside.code == 0);
  CHECK(njson::parse(outside.out).at("not_a_solution").get<bool>());
}

TEST_CASE("vertices command") {
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  const auto r = run({"vertices", path, "--alpha", "0"});
  CHECK(r.code == 0);
  const auto doc = njson::parse(r.out);
  CHECK(doc.at("case") == "over");
  const auto verts = doc.at("vertices");
  REQUIRE(verts.size() == 6);
  auto contains = [&](double x, double y) {
    for (const auto& v : verts) {
      if (std::abs(v[0].get<double>() - x) < 1e-9 &&
          std::abs(v[1].get<double>() - y) < 1e-9) {
        return true;
      }
    }
    return false;
  };
  CHECK(contains(4.0, 2.0));
  CHECK(contains(3.4, 1.2));

  const auto csv = run({"vertices", path, "--alpha", "0", "--format", "csv"});
  CHECK(csv.code == 0);
  CHECK(std::count(csv.out.begin(), csv.out.end(), '\n') == 6);
  bool has_d = false;
  std::istringstream lines(csv.out);
  for (std::string line; std::getline(lines, line);) {
    const auto comma = line.find(',');
    const double x = std::stod(line.substr(0, comma));
    const double y = std::stod(line.substr(comma + 1));
    if (std::abs(x - 4.0) < 1e-9 && std::abs(y - 2.0) < 1e-9) has_d = true;
  }
  CHECK(has_d);
}

TEST_CASE("solve command and inconsistency exit code") {
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  const auto r = run({"solve", path, "--alpha", "0,0.5"});
  CHECK(r.code == 0);
  const auto doc = njson::parse(r.out);
  CHECK(doc.at("case") == "over");
  CHECK(doc.at("rank") == 2);
  CHECK(doc.at("cuts").size() == 2);
  CHECK(doc.at("max_membership").at("alpha").get<double>() ==
        doctest::Approx(24.0 / 29.0).epsilon(5e-3));

  const auto bad_path = write_temp("fls_io_bad.json", kOver3x2Inconsistent);
  const auto bad = run({"solve", bad_path});
  CHECK(bad.code == 2);
  CHECK(njson::parse(bad.out).at("case") == "inconsistent");
}

TEST_CASE("solve reports the square geometry") {
  const auto path = write_temp("fls_io_square.json", R"({
    "A": [[1, -2], [1, 3]],
    "b": [{"tri": [-2, 1, 4]}, {"tri": [2, 6, 10]}]
  })");
  const auto r = run({"solve", path});
  REQUIRE(r.code == 0);
  const auto doc = njson::parse(r.out);
  CHECK(doc.at("case") == "square");
  CHECK(doc.at("center")[0].get<double>() == doctest::Approx(3).epsilon(1e-12));
  CHECK(doc.at("center")[1].get<double>() == doctest::Approx(1).epsilon(1e-12));
  CHECK(doc.at("generators").size() == 2);
  CHECK(doc.at("coeff_bounds")[0].at("tri")[0].get<double>() ==
        doctest::Approx(-3).epsilon(1e-12));
}

TEST_CASE("max-membership and oracle commands") {
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  const auto mm = run({"max-membership", path});
  CHECK(mm.code == 0);
  CHECK(njson::parse(mm.out).at("alpha_star").get<double>() ==
        doctest::Approx(24.0 / 29.0).epsilon(5e-3));

  const auto ok = run({"oracle", path, "--alpha", "0.5", "--bbox",
                       "1.5,4.5,1,3.2", "--resolution", "60"});
  CHECK(ok.code == 0);
  CHECK(njson::parse(ok.out).at("disagreements") == 0);
}

TEST_CASE("plot-data command") {
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  const auto r = run({"plot-data", path, "--alphas", "0,0.5"});
  CHECK(r.code == 0);
  const auto doc = njson::parse(r.out);
  CHECK(doc.at("cuts").size() == 2);
  CHECK(doc.at("cuts")[0].at("vertices").size() == 6);

  const auto csv = run({"plot-data", path, "--alphas", "0,0.5", "--format", "csv"});
  CHECK(csv.code == 0);
  // alpha column plus two coordinates per line
  CHECK(csv.out.find("0.5,") != std::string::npos);
}

TEST_CASE("deterministic output") {
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  const auto a = run({"solve", path, "--alpha", "0,0.25,0.5,0.75"});
  const auto b = run({"solve", path, "--alpha", "0,0.25,0.5,0.75"});
  CHECK(a.code == 0);
  CHECK(a.out == b.out);
}

TEST_CASE("input errors exit with code 1") {
  CHECK(run({"solve", "/nonexistent/system.json"}).code == 1);
  const auto garbled = write_temp("fls_io_garbled.json", "{ nope");
  CHECK(run({"solve", garbled}).code == 1);
  const auto path = write_temp("fls_io_over.json", kOver3x2);
  CHECK(run({"membership", path, "--point", "1,2,3"}).code == 1);
  CHECK(run({"membership", path, "--point", "1,x"}).code == 1);
  CHECK(run({"oracle", path, "--bbox", "0,1"}).code == 1);
  CHECK(run({"bogus-subcommand", path}).code == 1);
}
