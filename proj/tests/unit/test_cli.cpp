#include <doctest.h>

#include <json.hpp>

#include <cmath>
#include <complex>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "cli.hpp"

namespace fs = std::filesystem;
using Json = nlohmann::json;

namespace {

struct Outcome {
  int code;
  std::string out;
  std::string err;
};

Outcome run(std::vector<std::string> args) {
  args.insert(args.begin(), "ccheb");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = ccheb::cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::stringstream ss;
  ss << f.rdbuf();
  return ss.str();
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "ccheb_cli_test";
  fs::create_directories(dir);
  return dir / name;
}

double num(const Json& j) { return std::stod(j.get<std::string>()); }

std::vector<std::vector<std::string>> csv_rows(const std::string& text) {
  std::vector<std::vector<std::string>> rows;
  std::stringstream ss(text);
  std::string line;
  while (std::getline(ss, line)) {
    std::vector<std::string> cells;
    std::stringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) cells.push_back(cell);
    rows.push_back(cells);
  }
  return rows;
}

void check_provenance(const Json& j, int digits) {
  REQUIRE(j.contains("provenance"));
  CHECK(j["provenance"]["digits"] == digits);
  CHECK(j["provenance"].contains("threshold"));
  CHECK(j["provenance"]["version"] == CCHEB_VERSION);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("cheb on the square degree 17") {
  const fs::path path = scratch("t17.json");
  auto o = run({"cheb", "--set", "polygon", "--m", "4", "--degree", "17", "--threshold", "1e-20",
                "--digits", "60", "--out", path.string()});
  REQUIRE(o.code == 0);
  Json j = Json::parse(slurp(path));
  check_provenance(j, 60);
  std::vector<int> nonzero;
  for (const auto& c : j["coefficients"])
    if (c["k"] != 17 && std::abs(num(c["re"])) + std::abs(num(c["im"])) > 1e-12) nonzero.push_back(c["k"]);
  CHECK(nonzero == std::vector<int>{1, 5, 9, 13});

  // Unreduced solve of the same problem. A 1e-20 gap pins coefficients to ~1e-10.
  auto full = run({"cheb", "--set", "polygon", "--m", "4", "--degree", "17", "--threshold", "1e-20",
                   "--symmetry", "off"});
  REQUIRE(full.code == 0);
  Json jf = Json::parse(full.out);
  for (int k = 0; k < 17; ++k)
    CHECK(std::abs(num(j["coefficients"][k]["re"]) - num(jf["coefficients"][k]["re"])) < 1e-8);
  CHECK(std::abs(num(j["widom"]) - num(jf["widom"])) < 1e-9);
}

TEST_CASE("cheb on the circle") {
  auto o = run({"cheb", "--set", "lune", "--alpha", "1", "--degree", "3"});
  REQUIRE(o.code == 0);
  Json j = Json::parse(o.out);
  for (int k = 0; k < 3; ++k) CHECK(std::abs(num(j["coefficients"][k]["re"])) < 1e-9);
  CHECK(std::abs(num(j["widom"]) - 1.0) < 1e-9);
  for (const char* key : {"label", "degree", "coefficients", "sup_norm", "capacity", "widom",
                          "rel_error", "iterations"})
    CHECK(j.contains(key));
}

TEST_CASE("cheb on the lemniscate") {
  auto o = run({"cheb", "--set", "power-lemniscate", "--m", "2", "--r", "1", "--degree", "3"});
  REQUIRE(o.code == 0);
  Json j = Json::parse(o.out);
  // The cubic's linear coefficient is not strongly unique: the 1e-10 gap pins it to ~1e-5.
  CHECK(std::abs(num(j["coefficients"][1]["re"]) + 1.2) < 1e-5);
  auto tight = run({"cheb", "--set", "power-lemniscate", "--m", "2", "--degree", "3", "--threshold",
                    "1e-20"});
  CHECK(std::abs(num(Json::parse(tight.out)["coefficients"][1]["re"]) + 1.2) < 1e-8);
}

TEST_CASE("widom-table") {
  SUBCASE("hypocycloid row at degree 5") {
    const double expected[] = {1.69594045, 1.52124467, 1.64453125, 2.48832000};
    for (int m = 3; m <= 6; ++m) {
      auto o = run({"widom-table", "--set", "hypocycloid", "--m", std::to_string(m), "--degrees", "5"});
      REQUIRE(o.code == 0);
      auto rows = csv_rows(o.out);
      REQUIRE(rows.size() == 2);
      CHECK(rows[0][0] == "degree");
      CHECK(rows[0][1] == "widom");
      CHECK(rows[0][2] == "rel_error");
      CHECK(std::abs(std::stod(rows[1][1]) - expected[m - 3]) < 1e-6);
    }
  }
  SUBCASE("polygon block and lunes") {
    auto o = run({"widom-table", "--set", "polygon", "--m", "3", "--degrees", "5,10", "--jobs", "2"});
    REQUIRE(o.code == 0);
    auto rows = csv_rows(o.out);
    CHECK(std::abs(std::stod(rows[1][1]) - 1.30901051) < 1e-6);
    CHECK(std::abs(std::stod(rows[2][1]) - 1.14268975) < 1e-6);
    auto l = run({"widom-table", "--set", "lune", "--alpha", "1.5", "--degrees", "10,25"});
    auto lr = csv_rows(l.out);
    CHECK(std::abs(std::stod(lr[1][1]) - 1.06185388) < 1e-6);
    CHECK(std::abs(std::stod(lr[2][1]) - 1.02444481) < 1e-6);
    auto h = run({"widom-table", "--set", "lune", "--alpha", "0.5", "--degrees", "10"});
    CHECK(std::abs(std::stod(csv_rows(h.out)[1][1]) - 1.03696888) < 1e-6);
  }
  SUBCASE("regression fit") {
    const fs::path path = scratch("fit.csv");
    auto o = run({"widom-table", "--set", "polygon", "--m", "4", "--degrees", "4,8,12", "--fit",
                  "--format", "csv,json", "--out", path.string()});
    REQUIRE(o.code == 0);
    Json j = Json::parse(slurp(scratch("fit.json")));
    CHECK(j.contains("fit_log_excess_slope"));
    check_provenance(j, 60);
  }
}

TEST_CASE("faber-compare") {
  const fs::path path = scratch("faber.csv");
  auto o = run({"faber-compare", "--set", "hypocycloid", "--m", "5", "--degree", "11", "--r-grid",
                "1.5,2,3", "--threshold", "1e-30", "--format", "csv,json", "--out", path.string()});
  REQUIRE(o.code == 0);
  auto rows = csv_rows(slurp(path));
  REQUIRE(rows.size() == 4);
  CHECK(rows[0][0] == "r");
  CHECK(rows[0][1] == "distance");
  for (std::size_t i = 2; i < rows.size(); ++i) CHECK(std::stod(rows[i][1]) < std::stod(rows[i - 1][1]));
  Json j = Json::parse(slurp(scratch("faber.json")));
  check_provenance(j, 64);
  CHECK(std::stod(j["slope"].get<std::string>()) < -8);
}

TEST_CASE("zeros") {
  SUBCASE("square degree 17") {
    const fs::path path = scratch("z17.csv");
    auto o = run({"zeros", "--set", "polygon", "--m", "4", "--degree", "17", "--format", "csv,svg",
                  "--out", path.string()});
    REQUIRE(o.code == 0);
    auto rows = csv_rows(slurp(path));
    REQUIRE(rows.size() == 18);
    CHECK(rows[0][0] == "re");
    CHECK(rows[0][1] == "im");
    CHECK(rows[0][2] == "residual");
    std::vector<std::complex<double>> zs;
    for (std::size_t i = 1; i < rows.size(); ++i) zs.emplace_back(std::stod(rows[i][0]), std::stod(rows[i][1]));
    int origin = 0;
    for (const auto& z : zs) {
      if (std::abs(z) < 1e-20) ++origin;
      bool has_rotated = false;
      for (const auto& w : zs) has_rotated |= std::abs(w - std::complex<double>(0, 1) * z) < 1e-6;
      CHECK(has_rotated);
    }
    CHECK(origin == 1);
    const std::string svg = slurp(scratch("z17.svg"));
    CHECK(svg.rfind("<svg", 0) == 0);
    CHECK(svg.find("viewBox") != std::string::npos);
    CHECK(svg.find("<polygon") != std::string::npos);
    CHECK(svg.find("http", svg.find("xmlns") + 30) == std::string::npos);
  }
  SUBCASE("lemniscate degree 4") {
    auto o = run({"zeros", "--set", "power-lemniscate", "--m", "2", "--degree", "4"});
    REQUIRE(o.code == 0);
    auto rows = csv_rows(o.out);
    REQUIRE(rows.size() == 5);
    int plus = 0, minus = 0;
    for (std::size_t i = 1; i < rows.size(); ++i) {
      const double re = std::stod(rows[i][0]);
      CHECK(std::abs(std::stod(rows[i][1])) < 1e-20);
      if (std::abs(re - 1) < 1e-20) ++plus;
      if (std::abs(re + 1) < 1e-20) ++minus;
    }
    CHECK(plus == 2);
    CHECK(minus == 2);
  }
  SUBCASE("hypocycloid degree 31 stays inside the max-modulus disk") {
    auto o = run({"zeros", "--set", "hypocycloid", "--m", "3", "--degree", "31", "--format", "json"});
    REQUIRE(o.code == 0);
    Json j = Json::parse(o.out);
    CHECK(j["count"] == 31);
    auto csv = run({"zeros", "--set", "hypocycloid", "--m", "3", "--degree", "31"});
    auto rows = csv_rows(csv.out);
    for (std::size_t i = 1; i < rows.size(); ++i)
      CHECK(std::hypot(std::stod(rows[i][0]), std::stod(rows[i][1])) <= 1.5);
  }
}

TEST_CASE("curve-dump") {
  auto tri = csv_rows(run({"curve-dump", "--set", "polygon", "--m", "3", "--samples", "3"}).out);
  REQUIRE(tri.size() == 4);
  CHECK(tri[0] == std::vector<std::string>{"t", "re", "im", "digits", "threshold", "version"});
  CHECK(std::abs(std::stod(tri[1][1]) - 1) < 1e-25);
  CHECK(std::abs(std::stod(tri[2][1]) + 0.5) < 1e-25);
  CHECK(std::abs(std::stod(tri[2][2]) - std::sqrt(3.0) / 2) < 1e-15);
  CHECK(std::abs(std::stod(tri[3][2]) + std::sqrt(3.0) / 2) < 1e-15);

  auto lune = csv_rows(run({"curve-dump", "--set", "lune", "--alpha", "0.5", "--samples", "4"}).out);
  CHECK(std::stod(lune[1][1]) == 0.5);
  CHECK(std::stod(lune[1][2]) == 0.0);
  auto hyp = csv_rows(run({"curve-dump", "--set", "hypocycloid", "--m", "6", "--samples", "1"}).out);
  CHECK(std::abs(std::stod(hyp[1][1]) - 1.2) < 1e-25);
}

TEST_CASE("determinism and formatting") {
  const std::vector<std::string> args{"widom-table", "--set", "lune", "--alpha", "1.5", "--degrees", "3,6"};
  auto a = run(args);
  auto b = run(args);
  REQUIRE(a.code == 0);
  CHECK(a.out == b.out);
  CHECK(a.out.find('\r') == std::string::npos);
  auto rows = csv_rows(a.out);
  // 30 significant digits in scientific notation: "d." then 29 digits.
  const std::string w = rows[1][1];
  CHECK(w.find('e') == 31);
}

TEST_CASE("config file with flags taking precedence") {
  const fs::path cfg = scratch("run.toml");
  {
    std::ofstream f(cfg);
    f << "set = \"lune\"\nalpha = \"1.5\"\ndegree = 5\nthreshold = \"1e-12\"\n";
  }
  auto o = run({"cheb", "--config", cfg.string()});
  REQUIRE(o.code == 0);
  Json j = Json::parse(o.out);
  CHECK(j["label"].get<std::string>().find("alpha=1.5") != std::string::npos);
  CHECK(j["provenance"]["threshold"] == "1e-12");
  CHECK(std::abs(num(j["widom"]) - 1.12569879) < 1e-6);

  auto over = run({"cheb", "--config", cfg.string(), "--alpha", "1"});
  Json jo = Json::parse(over.out);
  CHECK(std::abs(num(jo["widom"]) - 1.0) < 1e-9);
}

TEST_CASE("exit codes") {
  CHECK(run({"cheb", "--set", "polygon", "--degree", "3", "--digits", "10"}).code == 3);
  CHECK(run({"cheb", "--set", "polygon", "--degree", "3", "--digits", "30", "--threshold", "1e-12"}).code == 3);
  CHECK(run({"cheb", "--set", "polygon", "--degree", "3", "--threshold", "2"}).code == 3);
  CHECK(run({"cheb", "--set", "ellipse", "--degree", "3"}).code == 3);
  CHECK(run({"cheb", "--set", "polygon", "--m", "2", "--degree", "3"}).code == 3);
  CHECK(run({"cheb", "--set", "polygon", "--degrees", "3,4"}).code == 3);
  CHECK(run({"cheb", "--set", "polygon"}).code == 3);
  CHECK(run({"faber-compare", "--set", "polygon", "--degree", "5", "--r-grid", "2,3"}).code == 3);
  CHECK(run({}).code == 3);
  auto fail = run({"cheb", "--set", "poly-lemniscate", "--coeffs", "-1,0,1", "--r",
                   "1.000000000000000000000000000001",
                   "--degree", "2"});
  CHECK(fail.code == 2);
  Json diag = Json::parse(fail.out);
  CHECK(diag.contains("error"));
  CHECK(diag.contains("message"));
  auto help = run({"--help"});
  CHECK(help.code == 0);
  CHECK(help.out.find("widom-table") != std::string::npos);
}

TEST_CASE("poly-lemniscate coefficients") {
  auto o = run({"cheb", "--set", "poly-lemniscate", "--coeffs", "1,1,0,1", "--r", "2", "--degree", "3"});
  REQUIRE(o.code == 0);
  Json j = Json::parse(o.out);
  // T_3 of |P| = 2 is P itself for a cubic P: W = 2 / cap^3 = 1.
  CHECK(std::abs(num(j["widom"]) - 1.0) < 1e-9);
  CHECK(std::abs(num(j["coefficients"][0]["re"]) - 1.0) < 1e-9);
  CHECK(std::abs(num(j["coefficients"][1]["re"]) - 1.0) < 1e-9);
}

}  // TEST_SUITE
