#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <sys/wait.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <string>

#include "hankel/driver.hpp"

#ifndef HANKEL_APPROX_EXE
#error "HANKEL_APPROX_EXE must point at the CLI binary"
#endif

namespace {

struct Run {
  int code = -1;
  std::string out;
};

Run run(const std::string& args) {
  const std::string cmd = std::string(HANKEL_APPROX_EXE) + " " + args + " 2>/dev/null";
  Run r;
  FILE* pipe = popen(cmd.c_str(), "r");
  REQUIRE(pipe != nullptr);
  std::array<char, 4096> buf{};
  std::size_t got;
  while ((got = fread(buf.data(), 1, buf.size(), pipe)) > 0) r.out.append(buf.data(), got);
  const int status = pclose(pipe);
  r.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return r;
}

std::filesystem::path temp_file(const std::string& name, const std::string& body) {
  const auto path = std::filesystem::temp_directory_path() / ("hankel_cli_" + name);
  std::ofstream(path) << body;
  return path;
}

}  // namespace

TEST_CASE("approx prints the table") {
  const auto r = run("approx --family gompertz --n-max 1");
  CHECK(r.code == 0);
  CHECK(r.out == "n | P_n/Q_n | decimal\n0 | 1/2 | 0.5000000000\n1 | 4/7 | 0.5714285714\n");
}

TEST_CASE("approx csv and json") {
  const auto csv = run("approx --family zeta --k 3 --n-max 1 --method det --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out.rfind("n,P,Q,value,gap\n", 0) == 0);
  CHECK(csv.out.find(",4887/4105,") != std::string::npos);

  const auto json = run("approx --family factorial --n-max 3 --format json");
  CHECK(json.code == 0);
  const auto records = hankel::records_from_json(json.out);
  REQUIRE(records.size() == 4);
  CHECK(records[3].value == hankel::make_rational(25, 12));
}

TEST_CASE("approx --out writes the file") {
  const auto path = std::filesystem::temp_directory_path() / "hankel_cli_out.csv";
  std::filesystem::remove(path);
  const auto r = run("approx --family gompertz --n-max 2 --format csv --out " + path.string());
  CHECK(r.code == 0);
  CHECK(r.out.empty());
  std::ifstream in(path);
  std::string header;
  std::getline(in, header);
  CHECK(header == "n,P,Q,value,gap");

  CHECK(run("approx --family gompertz --n-max 2 --out /nonexistent/dir/x.csv").code == 4);
}

TEST_CASE("custom sequences") {
  const auto good = temp_file("good.json", R"({"name":"d","a":["1","2","5","16","65","326"]})");
  const auto r = run("approx --family custom --moments-file " + good.string() + " --n-max 2");
  CHECK(r.code == 0);
  CHECK(r.out.find("2 | 10/17 | 0.5882352941") != std::string::npos);

  const auto alt = temp_file("alt.json", R"({"name":"alt","a":["-1","1","-1","1","-1","1"]})");
  const auto bad = run("approx --family custom --moments-file " + alt.string() + " --n-max 2");
  CHECK(bad.code == 3);
  CHECK(bad.out.find("0 | 1 | 1.0000000000") != std::string::npos);
  CHECK(bad.out.find("\n1 |") == std::string::npos);
  CHECK(run("validate --family custom --moments-file " + alt.string() + " --n-max 2").code == 3);

  const auto broken = temp_file("broken.json", R"({"name":"x","a":["1/0"]})");
  CHECK(run("approx --family custom --moments-file " + broken.string() + " --n-max 0").code == 4);
  CHECK(run("approx --family custom --moments-file /nonexistent.json --n-max 0").code == 4);
  CHECK(run("approx --family custom --n-max 0").code == 1);
}

TEST_CASE("validate") {
  const auto r = run("validate --family gompertz --n-max 15");
  CHECK(r.code == 0);
  CHECK(r.out.find("all checks passed") != std::string::npos);
}

TEST_CASE("moments") {
  const auto csv = run("moments --family gompertz --count 4 --format csv");
  CHECK(csv.code == 0);
  CHECK(csv.out == "n,a\n1,1\n2,2\n3,5\n4,16\n");

  const auto json = run("moments --family zeta --k 2 --count 3");
  CHECK(json.code == 0);
  const auto seq = hankel::parse_moments(json.out);
  CHECK(seq.moment(2) == hankel::make_rational(3, 4));
  CHECK(seq.reference()->decimal == "1.644934067");
}

TEST_CASE("usage errors") {
  CHECK(run("approx --family zeta --k 65 --n-max 1").code == 1);
  CHECK(run("approx --family nope --n-max 1").code == 1);
  CHECK(run("approx --family gamma").code == 1);
  CHECK(run("").code == 1);
  CHECK(run("--help").code == 0);
}
