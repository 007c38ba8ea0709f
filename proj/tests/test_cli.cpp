// Copyright 2026 The edrlab developers
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdlib>
#include <sys/wait.h>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <vector>
#include <string>

namespace {

struct RunResult {
  int exit_code = -1;
  std::string output;  // stdout + stderr
};

RunResult run_cli(const std::string& args) {
  const auto out_path =
      std::filesystem::temp_directory_path() / "edrlab_cli_out.txt";
  const std::string command = std::string(EDRLAB_BIN) + " " + args + " > " +
                              out_path.string() + " 2>&1";
  const int status = std::system(command.c_str());
  RunResult result;
  result.exit_code = WEXITSTATUS(status);
  std::ifstream in(out_path);
  std::ostringstream text;
  text << in.rdbuf();
  result.output = text.str();
  std::filesystem::remove(out_path);
  return result;
}

std::string data_file(const std::string& name) {
  return (std::filesystem::path(EDRLAB_DATA_DIR) / name).string();
}

}  // namespace

TEST_CASE("verify: spin preset passes; the breakable form is only flagged") {
  const RunResult r =
      run_cli("verify --model spin:theta=0 --rho bloch:0,1,0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("comparator violated HEISENBERG_EDR") !=
        std::string::npos);
  CHECK(r.output.find("VIOLATED ") == std::string::npos);
}

TEST_CASE("verify: golden model file passes all requested relations") {
  const RunResult r = run_cli("verify --model " + data_file("basic_model.json") +
                              " --relations OZAWA_EDR,MIXED_EDR,ROBERTSON_D");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"satisfied\": true") != std::string::npos);
}

TEST_CASE("verify: malformed input exits with the input-error code") {
  const RunResult r = run_cli("verify --model " + data_file("malformed.json"));
  CHECK(r.exit_code == 2);
  CHECK(r.output.find("parse error") != std::string::npos);
  CHECK(r.output.find("byte") != std::string::npos);
}

TEST_CASE("verify: precondition failures are reported as skips, not passes") {
  const RunResult r = run_cli("verify --model " + data_file("biased_model.json") +
                              " --relations MIXED_BINARY");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("skipped MIXED_BINARY") != std::string::npos);
  CHECK(r.output.find("<A>=0") != std::string::npos);
}

TEST_CASE("verify: a tightened tolerance turns near-equality into exit 1") {
  // At theta=0 with rho=(I+Y)/2 the first universal form holds with margin
  // sqrt(2)-1; demanding residual >= 1 via a negative tolerance must fail.
  const RunResult r = run_cli(
      "verify --model spin:theta=0 --rho bloch:0,1,0 "
      "--relations OZAWA_EDR --tolerance -1");
  CHECK(r.exit_code == 1);
  CHECK(r.output.find("VIOLATED OZAWA_EDR") != std::string::npos);
}

TEST_CASE("verify: unknown relation id is an input error") {
  const RunResult r =
      run_cli("verify --model spin:theta=0 --relations NOT_A_RELATION");
  CHECK(r.exit_code == 2);
}

TEST_CASE("compute: spin preset reports the anchor values") {
  const RunResult r = run_cli("compute --model spin:theta=0");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("\"eps_a\": 0.0") != std::string::npos);
  CHECK(r.output.find("\"eps_b\": 1.4142135623730951") != std::string::npos);
  CHECK(r.output.find("\"c_ab\": 0.0") != std::string::npos);
  CHECK(r.output.find("\"d_ab\": 1.0") != std::string::npos);
}

TEST_CASE("sweep: endpoint rows land on (0,2) and (2,0)") {
  const auto csv_path =
      std::filesystem::temp_directory_path() / "edrlab_sweep.csv";
  const RunResult r =
      run_cli("sweep --steps 2 --out " + csv_path.string());
  CHECK(r.exit_code == 0);

  std::ifstream in(csv_path);
  std::string stamp, header, first, second;
  std::getline(in, stamp);
  std::getline(in, header);
  std::getline(in, first);
  std::getline(in, second);
  CHECK(stamp == "# edrlab-report-csv v1");
  CHECK(header == "theta,eps_sq,eta_sq,circle_residual");

  auto parse_row = [](const std::string& line) {
    std::istringstream fields(line);
    std::vector<double> values;
    std::string field;
    while (std::getline(fields, field, ',')) {
      values.push_back(std::stod(field));
    }
    return values;
  };
  const auto row0 = parse_row(first);
  const auto row1 = parse_row(second);
  REQUIRE(row0.size() == 4);
  REQUIRE(row1.size() == 4);
  CHECK(row0[1] <= 1e-12);                            // eps_sq at theta 0
  CHECK(row0[2] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(row1[1] == doctest::Approx(2.0).epsilon(1e-9));
  CHECK(row1[2] <= 1e-12);                            // eta_sq at theta pi/4
  std::filesystem::remove(csv_path);
}

TEST_CASE("sweep: 101-step run keeps the circle residual at tolerance") {
  const auto csv_path =
      std::filesystem::temp_directory_path() / "edrlab_sweep_full.csv";
  const RunResult r = run_cli("sweep --steps 101 --relations SPIN_CIRCLE --out " +
                              csv_path.string());
  CHECK(r.exit_code == 0);
  std::ifstream in(csv_path);
  std::string line;
  std::getline(in, line);  // stamp
  std::getline(in, line);  // header
  int rows = 0;
  while (std::getline(in, line)) {
    ++rows;
    const auto first_comma = line.find(',');
    const auto second_comma = line.find(',', first_comma + 1);
    const auto third_comma = line.find(',', second_comma + 1);
    const auto fourth_comma = line.find(',', third_comma + 1);
    const double circle = std::stod(
        line.substr(third_comma + 1, fourth_comma - third_comma - 1));
    CHECK(std::abs(circle) <= 1e-9);
  }
  CHECK(rows == 101);
  std::filesystem::remove(csv_path);
}

TEST_CASE("compute: --out writes both report files") {
  const auto base =
      (std::filesystem::temp_directory_path() / "edrlab_report").string();
  const RunResult r =
      run_cli("compute --model spin:theta=0.3 --out " + base);
  CHECK(r.exit_code == 0);
  CHECK(std::filesystem::exists(base + ".json"));
  CHECK(std::filesystem::exists(base + ".csv"));
  std::filesystem::remove(base + ".json");
  std::filesystem::remove(base + ".csv");
}

TEST_CASE("spin-demo prints the grid") {
  const RunResult r = run_cli("spin-demo --steps 3");
  CHECK(r.exit_code == 0);
  CHECK(r.output.find("circle residual") != std::string::npos);
  CHECK(r.output.find("min |circle residual|") != std::string::npos);
}
