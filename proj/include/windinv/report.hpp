#pragma once

#include <string>
#include <vector>

namespace windinv {

struct CheckResult {
  std::string name;
  bool pass = false;
  std::string detail;
  double millis = 0.0;
};

struct VerificationReport {
  std::vector<CheckResult> checks;

  bool all_pass() const;
};

// Replays every identity the workbench can machine-check: the two ground
// truth winding values, the relator-invariant vectors against the Evans
// matrix column and the reference grid, the Evans determinant and inverse,
// the boundary matrices three ways, the shipped normal-closure certificate
// and the elementary first-column reduction on random inputs. Reads the
// certificate from `cert_path`; throws std::runtime_error if the file is
// missing (a corrupt file fails the certificate check instead).
VerificationReport run_verify_paper(const std::string& cert_path);

// Aligned plain text, or "CHECK <name> PASS|FAIL" lines when
// machine_readable is set.
std::string format_report(const VerificationReport& report, bool machine_readable);

}  // namespace windinv
