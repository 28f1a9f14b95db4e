#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <fstream>

#include "windinv/report.hpp"

using namespace windinv;

namespace {

std::string data_path(const char* name) {
  return std::string(WINDINV_DATA_DIR) + "/" + name;
}

std::string temp_file(const char* name, const std::string& content) {
  std::string path = std::string("/tmp/windinv_test_") + name;
  std::ofstream out(path);
  out << content;
  return path;
}

}  // namespace

TEST_CASE("the full report passes on the shipped certificate") {
  const VerificationReport report = run_verify_paper(data_path("cert_ene.cert"));
  REQUIRE(report.checks.size() == 6);
  for (const CheckResult& c : report.checks) {
    INFO(c.name, ": ", c.detail);
    CHECK(c.pass);
  }
  CHECK(report.all_pass());
  const std::string machine = format_report(report, true);
  CHECK(machine.find("CHECK winding-ground-truth PASS") != std::string::npos);
  CHECK(machine.find("CHECK lambda-replay PASS") != std::string::npos);
  CHECK(machine.find("CHECK evans-matrix PASS") != std::string::npos);
  CHECK(machine.find("CHECK fox-replay PASS") != std::string::npos);
  CHECK(machine.find("CHECK certificate PASS") != std::string::npos);
  CHECK(machine.find("CHECK reduction-argument PASS") != std::string::npos);
  const std::string aligned = format_report(report, false);
  CHECK(aligned.find("all checks passed") != std::string::npos);
}

TEST_CASE("a corrupted certificate fails only the certificate check") {
  // Flip one sign in the shipped certificate.
  std::ifstream in(data_path("cert_ene.cert"));
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  const std::size_t at = content.find("\n+ 1 xy^-1\n");
  REQUIRE(at != std::string::npos);
  content.replace(at, 11, "\n- 1 xy^-1\n");
  const std::string path = temp_file("corrupt.cert", content);

  const VerificationReport report = run_verify_paper(path);
  CHECK_FALSE(report.all_pass());
  for (const CheckResult& c : report.checks) {
    CHECK(c.pass == (c.name != "certificate"));
  }
  std::remove(path.c_str());
}

TEST_CASE("an unparseable certificate is reported, not thrown") {
  const std::string path = temp_file("garbage.cert", "not a certificate\n");
  const VerificationReport report = run_verify_paper(path);
  CHECK_FALSE(report.all_pass());
  std::remove(path.c_str());
}

TEST_CASE("a missing certificate file throws") {
  CHECK_THROWS_AS(run_verify_paper("/nonexistent/cert_ene.cert"), std::runtime_error);
}
