#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <string>
#include <vector>

namespace {

struct RunResult {
  int exit_code;
  std::string out;
};

RunResult run(const std::string& args) {
  const std::string cmd = std::string(UDWB_BIN) + " " + args + " 2>/dev/null";
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  const int status = pclose(pipe);
  return {WEXITSTATUS(status), out};
}

struct Csv {
  std::vector<std::string> comments;
  std::vector<std::string> header;
  std::vector<std::vector<double>> rows;
};

Csv parse_csv(const std::string& text) {
  Csv csv;
  std::size_t pos = 0;
  bool header_seen = false;
  while (pos < text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string::npos) end = text.size();
    const std::string line = text.substr(pos, end - pos);
    pos = end + 1;
    if (line.empty()) continue;
    if (line[0] == '#') {
      csv.comments.push_back(line);
      continue;
    }
    std::vector<std::string> cells;
    std::size_t c = 0;
    while (true) {
      const auto comma = line.find(',', c);
      cells.push_back(line.substr(c, comma == std::string::npos ? std::string::npos : comma - c));
      if (comma == std::string::npos) break;
      c = comma + 1;
    }
    if (!header_seen) {
      csv.header = cells;
      header_seen = true;
    } else {
      std::vector<double> row;
      for (const auto& cell : cells) {
        try {
          row.push_back(std::stod(cell));
        } catch (...) {
          row.push_back(std::nan(""));
        }
      }
      csv.rows.push_back(row);
    }
  }
  return csv;
}

}  // namespace

TEST_CASE("spectral-scan output is byte-identical across runs") {
  const auto r1 = run("spectral-scan --fig 1");
  const auto r2 = run("spectral-scan --fig 1");
  CHECK(r1.exit_code == 0);
  CHECK(r1.out == r2.out);
  CHECK(!r1.out.empty());
}

TEST_CASE("spectral-scan flat row equals omega over two pi exactly") {
  const auto r = run("spectral-scan --a 0 --grid 1:3:3");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 3);
  for (const auto& row : csv.rows) {
    const double omega = row[1], p_rod = row[2];
    CHECK(p_rod == omega / (2.0 * M_PI));
    CHECK(row[3] == 1.0);  // p1
    CHECK(row[4] == 0.0);  // p2
  }
}

TEST_CASE("spectral-scan rate grows with acceleration and approaches omega/2pi") {
  const auto r = run("spectral-scan --a 0.5 --a 1 --a 2 --grid 0.5:5:4");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 12);
  // p_rod at fixed omega increases along the a blocks
  for (int i = 0; i < 4; ++i) {
    const double v05 = csv.rows[i][2], v1 = csv.rows[4 + i][2], v2 = csv.rows[8 + i][2];
    CHECK(v05 < v1);
    CHECK(v1 < v2);
  }
  // large omega at fixed a: within 1% of omega / 2pi
  const auto big = run("spectral-scan --a 1 --grid 10:50:2");
  REQUIRE(big.exit_code == 0);
  const auto big_csv = parse_csv(big.out);
  const auto& last = big_csv.rows.back();
  CHECK(std::abs(last[2] - last[1] / (2.0 * M_PI)) < 0.01 * last[1] / (2.0 * M_PI));
}

TEST_CASE("dynamics CSV: analytic and propagated columns agree") {
  const auto r = run("dynamics --grid 0:10:21");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 21);
  // first row is tau = 0 with <sigma_x> = <Sigma> = 1
  CHECK(csv.rows[0][0] == 0.0);
  CHECK(std::abs(csv.rows[0][1] - 1.0) < 1e-12);
  CHECK(std::abs(csv.rows[0][4] - 1.0) < 1e-12);
  for (const auto& row : csv.rows) {
    CHECK(row[3] < 1e-8);  // sx abs diff
    CHECK(row[6] < 1e-8);  // number abs diff
    CHECK(std::abs(row[4] + row[7] - 1.0) < 1e-12);  // <Sigma> + <Delta> = 1
  }
}

TEST_CASE("correlators CSV carries the kind column and antibunching zeros") {
  const auto r = run("correlators --tau-prime 1 --grid 0:5:6 --kind hbt");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 6);
  CHECK(csv.header[0] == "kind");
  // first delay is zero: the hbt correlator vanishes there
  CHECK(csv.rows[0][5] == 0.0);
  CHECK(csv.rows[0][6] == 0.0);
  const auto all = run("correlators --tau-prime 1 --grid 0:5:6");
  CHECK(parse_csv(all.out).rows.size() == 36);
}

TEST_CASE("hbt fig 4 output") {
  const auto r = run("hbt --fig 4 --grid 0:20:5");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 15);  // three a values
  // tau = 0 rows vanish
  for (std::size_t b = 0; b < 3; ++b) CHECK(csv.rows[5 * b][2] == 0.0);
  // at the last delay the correlation grows with a
  CHECK(csv.rows[4][2] < csv.rows[9][2]);
  CHECK(csv.rows[9][2] < csv.rows[14][2]);
  // monotone in tau within one block
  for (int i = 1; i < 5; ++i) CHECK(csv.rows[i][2] > csv.rows[i - 1][2]);
}

TEST_CASE("hbt fig 5 output matches the closed form") {
  const auto r = run("hbt --fig 5 --a 1 --grid 0.5:2:4");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 4);
  double prev = 1.0;
  for (const auto& row : csv.rows) {
    const double omega = row[1];
    const double expect = std::pow(1.0 + std::exp(2.0 * M_PI * omega), -2.0);
    CHECK(std::abs(row[2] - expect) < 1e-15);
    CHECK(row[2] < prev);  // decreasing in omega
    prev = row[2];
  }
}

TEST_CASE("spectrum CSV header and column identity") {
  const auto r = run("spectrum --T 20 --grid 1.2:2.8:33");
  REQUIRE(r.exit_code == 0);
  const auto csv = parse_csv(r.out);
  REQUIRE(csv.rows.size() == 33);
  bool has_params = false;
  for (const auto& c : csv.comments)
    if (c.find("T=20") != std::string::npos && c.find("a=1") != std::string::npos)
      has_params = true;
  CHECK(has_params);
  for (const auto& row : csv.rows) {
    CHECK(row[5] == row[1] + row[3]);  // re_total = re_p1 + re_p2
    CHECK(row[6] == row[2] + row[4]);
  }
}

TEST_CASE("exit codes") {
  CHECK(run("spectral-scan --grid 5:1:10").exit_code == 2);   // inverted grid
  CHECK(run("spectral-scan --grid 1:5:1").exit_code == 2);    // too few points
  CHECK(run("nonsense").exit_code == 2);                      // unknown command
  CHECK(run("dynamics --omega -1").exit_code == 2);           // invalid parameter
  // a frequency grid crossing the resonance triggers a numerical failure
  CHECK(run("spectrum --grid 1.98298143:1.98298144:3").exit_code == 3);
  // oversized window overflows the printed exponentials
  CHECK(run("spectrum --T 100000").exit_code == 3);
}

TEST_CASE("verify quick suites pass and report per-check lines") {
  const auto r = run("verify --suite spectral --quick");
  CHECK(r.exit_code == 0);
  CHECK(r.out.find("PASS spectral/g-plus-identity") != std::string::npos);
  CHECK(r.out.find("OK") != std::string::npos);
  CHECK(r.out.find("FAIL ") == std::string::npos);
}

TEST_CASE("config file supplies defaults and flags override it") {
  const std::string path = std::string(UDWB_BIN) + ".test-config";
  {
    std::ofstream cfg(path);
    cfg << "omega = 2\n" << "grid = 0:4:5\n";
  }
  const auto r = run("dynamics --config " + path);
  REQUIRE(r.exit_code == 0);
  CHECK(r.out.find("omega=2") != std::string::npos);
  CHECK(parse_csv(r.out).rows.size() == 5);
  const auto r2 = run("dynamics --config " + path + " --omega 3 --grid 0:4:3");
  REQUIRE(r2.exit_code == 0);
  CHECK(r2.out.find("omega=3") != std::string::npos);
  CHECK(parse_csv(r2.out).rows.size() == 3);
  std::remove(path.c_str());
}

TEST_CASE("output file writing") {
  const std::string path = std::string(UDWB_BIN) + ".test-out.csv";
  const auto r = run("spectral-scan --grid 1:2:3 --out " + path);
  CHECK(r.exit_code == 0);
  std::ifstream in(path);
  REQUIRE(in.good());
  std::string first;
  std::getline(in, first);
  CHECK(first.rfind("#", 0) == 0);
  in.close();
  std::remove(path.c_str());
  CHECK(run("spectral-scan --out /nonexistent-dir/x.csv").exit_code == 2);
}
