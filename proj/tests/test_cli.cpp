#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <array>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

const char* cli_path() {
  const char* p = std::getenv("IONGAS_CLI");
  REQUIRE_MESSAGE(p != nullptr, "IONGAS_CLI must point at the binary");
  return p;
}

RunResult run(const std::string& args) {
  const std::string cmd = std::string(cli_path()) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

// value of a named column in the first data row of a CSV table
double csv_value(const std::string& out, const std::string& column) {
  std::istringstream in(out);
  std::string line, header;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    header = line;
    break;
  }
  std::string row;
  REQUIRE(std::getline(in, row));
  std::vector<std::string> names, values;
  for (std::string* s : {&header, &row}) {
    std::vector<std::string>& dst = (s == &header) ? names : values;
    std::istringstream ls(*s);
    std::string cell;
    while (std::getline(ls, cell, ',')) dst.push_back(cell);
  }
  REQUIRE(names.size() == values.size());
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == column) return std::strtod(values[i].c_str(), nullptr);
  FAIL("column not found: ", column);
  return 0.0;
}

std::string meta_value(const std::string& out, const std::string& key) {
  std::istringstream in(out);
  std::string line;
  const std::string prefix = "# " + key + "=";
  while (std::getline(in, line))
    if (line.rfind(prefix, 0) == 0) return line.substr(prefix.size());
  return {};
}

}  // namespace

TEST_CASE("state: tabulated hydrogen point") {
  const RunResult r = run("state --gas hydrogen --T 750 --p 1466.3");
  CHECK(r.exit_code == 0);
  const double alpha = csv_value(r.out, "alpha");
  CHECK(std::abs(alpha / 3.8418e-45 - 1.0) < 1e-3);
  CHECK(r.out.find("true") != std::string::npos);  // gn_sufficient column
}

TEST_CASE("state: domain error exits with 2") {
  CHECK(run("state --T -5 --p 1").exit_code == 2);
  CHECK(run("state --T 300 --p -1").exit_code == 2);
}

TEST_CASE("state: usage errors exit with 64") {
  CHECK(run("state --T 300").exit_code == 64);
  CHECK(run("state --T 300 --p 10 --rho 1").exit_code == 64);
  CHECK(run("state").exit_code == 64);
  CHECK(run("nonsense").exit_code == 64);
}

TEST_CASE("state: the htl closure reports a larger ionization degree") {
  const double exact =
      csv_value(run("state --T 750 --p 1466.3").out, "alpha");
  const double htl =
      csv_value(run("state --model htl --T 750 --p 1466.3").out, "alpha");
  CHECK(htl > exact);
}

TEST_CASE("state: density and alpha input forms work") {
  const RunResult by_alpha = run("state --alpha 0.25 --T 9000");
  CHECK(by_alpha.exit_code == 0);
  const double p = csv_value(by_alpha.out, "p");
  const double rho = csv_value(by_alpha.out, "rho");
  const RunResult by_rho =
      run("state --rho " + std::to_string(rho) + " --T 9000");
  CHECK(by_rho.exit_code == 0);
  CHECK(std::abs(csv_value(by_rho.out, "p") / p - 1.0) < 1e-6);
}

TEST_CASE("inflection: header, bounded residuals, byte-identical reruns") {
  const std::string args = "inflection --tmin 500 --tmax 1300 --samples 9";
  const RunResult a = run(args);
  const RunResult b = run(args);
  CHECK(a.exit_code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find("T,alpha_left,alpha_right,f_residual") != std::string::npos);

  std::istringstream in(a.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'T') continue;
    ++rows;
    // residual column, when present, stays within the tracing tolerance
    const auto last = line.rfind(',');
    const std::string resid = line.substr(last + 1);
    if (!resid.empty()) CHECK(std::strtod(resid.c_str(), nullptr) <= 1e-9);
  }
  CHECK(rows == 9);
}

TEST_CASE("inflection: htl model has an empty locus") {
  const RunResult r = run("--model htl inflection --tmin 500 --tmax 1300 --samples 4");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  int rows = 0;
  while (std::getline(in, line))
    if (!line.empty() && line[0] != '#' && line[0] != 'T') ++rows;
  CHECK(rows == 0);
}

TEST_CASE("hugoniot: the cold tabulated reference traces cleanly") {
  const RunResult r = run(
      "hugoniot --alpha0 3.5929e-114 --T0 300 --samples 40 "
      "--alpha-min 1e-120 --alpha-max 0.99");
  CHECK(r.exit_code == 0);
  CHECK(std::abs(std::strtod(meta_value(r.out, "p0").c_str(), nullptr) -
                 1466.3) < 1.0);
  // temperatures increase down the table
  std::istringstream in(r.out);
  std::string line;
  double prevT = 0.0;
  int rows = 0;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'a') continue;
    std::istringstream ls(line);
    std::string a, T;
    std::getline(ls, a, ',');
    std::getline(ls, T, ',');
    const double Tv = std::strtod(T.c_str(), nullptr);
    CHECK(Tv > prevT);
    prevT = Tv;
    ++rows;
  }
  CHECK(rows == 40);
}

TEST_CASE("hugoniot: shock solve at the documented velocity") {
  const RunResult r = run(
      "hugoniot --alpha0 3.5929e-114 --T0 300 --u0 0 --u 38000 --samples 24 "
      "--alpha-min 1e-115 --alpha-max 0.95");
  CHECK(r.exit_code == 0);
  const double ai = std::strtod(meta_value(r.out, "intersection_alpha").c_str(),
                                nullptr);
  const double Ti = std::strtod(meta_value(r.out, "intersection_T").c_str(),
                                nullptr);
  CHECK(ai > 0.2);
  CHECK(ai < 0.6);
  CHECK(Ti > 1e4);
  CHECK(Ti < 3e4);
  CHECK(r.out.find("T_kinetic_minus") != std::string::npos);
}

TEST_CASE("hugoniot: equal velocities give the contact record") {
  const RunResult r = run(
      "hugoniot --alpha0 1e-3 --T0 10000 --u0 5 --u 5 --samples 8 "
      "--alpha-min 1e-4 --alpha-max 0.5");
  CHECK(r.exit_code == 0);
  CHECK(meta_value(r.out, "contact") == "true");
  CHECK(!meta_value(r.out, "contact_p").empty());
}

TEST_CASE("isentrope: the symmetric entropy level and level sweep") {
  const RunResult r = run("isentrope --eta0 3.75 --samples 12");
  CHECK(r.exit_code == 0);
  const double ainf =
      std::strtod(meta_value(r.out, "alpha_inf").c_str(), nullptr);
  CHECK(std::abs(ainf - 0.5) < 1e-12);

  double prev = -1.0;
  for (const char* level : {"0", "5", "10"}) {
    const RunResult rr =
        run(std::string("isentrope --eta0 ") + level + " --samples 8");
    CHECK(rr.exit_code == 0);
    const double ai =
        std::strtod(meta_value(rr.out, "alpha_inf").c_str(), nullptr);
    CHECK(ai > prev);
    prev = ai;
  }
}

TEST_CASE("isentrope: drift column stays within tolerance") {
  const RunResult r =
      run("isentrope --alpha0 1e-3 --T0 9000 --samples 24");
  CHECK(r.exit_code == 0);
  std::istringstream in(r.out);
  std::string line;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#' || line[0] == 'a') continue;
    const auto last = line.rfind(',');
    const double drift = std::strtod(line.substr(last + 1).c_str(), nullptr);
    CHECK(std::abs(drift) <= 1e-8 * 20.0);
  }
}

TEST_CASE("json output parses and matches the csv numbers") {
  const RunResult c = run("state --T 750 --p 1466.3");
  const RunResult j = run("--output json state --T 750 --p 1466.3");
  CHECK(j.exit_code == 0);
  const auto doc = nlohmann::json::parse(j.out);
  const double aj =
      std::strtod(doc.at("rows").at(0).at("alpha").get<std::string>().c_str(),
                  nullptr);
  CHECK(aj == csv_value(c.out, "alpha"));
}

TEST_CASE("gas presets load from the environment directory") {
  const std::string dir = "/tmp/iongas_presets";
  std::system(("mkdir -p " + dir).c_str());
  {
    std::ofstream f(dir + "/mygas.json");
    f << "{\"a2\": 4157.0, \"kappa\": 29.9774, \"Ti\": 157800.0}\n";
  }
  const std::string cmd = std::string("IONGAS_PRESET_DIR=") + dir + " " +
                          cli_path() +
                          " state --gas mygas --alpha 0.5 --T 9000 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  std::array<char, 4096> buf;
  size_t n;
  while ((n = fread(buf.data(), 1, buf.size(), pipe)) > 0)
    out.append(buf.data(), n);
  CHECK(WEXITSTATUS(pclose(pipe)) == 0);
  // e = (3/2) a2 (1+alpha) T + a2 Ti alpha with the halved a2
  const double e = csv_value(out, "e");
  CHECK(std::abs(e / (1.5 * 4157.0 * 1.5 * 9000.0 + 4157.0 * 157800.0 * 0.5) -
                 1.0) < 1e-12);

  CHECK(run("state --gas unobtainium --T 300 --p 10").exit_code == 2);
}

TEST_CASE("explicit constants override the preset") {
  const RunResult r =
      run("state --gas hydrogen --Ti 315600 --alpha 0.5 --T 9000");
  CHECK(r.exit_code == 0);
  const double e = csv_value(r.out, "e");
  CHECK(std::abs(e / (1.5 * 8314.0 * 1.5 * 9000.0 + 8314.0 * 315600.0 * 0.5) -
                 1.0) < 1e-12);
}

TEST_CASE("floating-point cells carry 17 significant digits") {
  const RunResult r = run("state --alpha 0.123456789 --T 9000");
  CHECK(r.out.find("0.12345678899999999") != std::string::npos);
}
