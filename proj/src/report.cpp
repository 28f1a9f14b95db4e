#include "windinv/report.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <random>
#include <sstream>

#include "windinv/certificates.hpp"
#include "windinv/foxcalc.hpp"
#include "windinv/matrices.hpp"
#include "windinv/presentations.hpp"
#include "windinv/winding.hpp"
#include "windinv/words.hpp"

namespace windinv {

bool VerificationReport::all_pass() const {
  return std::all_of(checks.begin(), checks.end(),
                     [](const CheckResult& c) { return c.pass; });
}

namespace {

using Clock = std::chrono::steady_clock;

double elapsed_ms(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

LaurentPoly paper_lambda_q1() {
  // 1 - 2(X-1)Y^-1
  return LaurentPoly(1) -
         LaurentPoly(2) * (LaurentPoly::monomial(1, 0, 1) - LaurentPoly(1)) *
             LaurentPoly::monomial(0, -1, 1);
}

LaurentPoly paper_lambda_q2() {
  // -(X-1)^2 Y^-1
  const LaurentPoly xm1 = LaurentPoly::monomial(1, 0, 1) - LaurentPoly(1);
  return -(xm1 * xm1 * LaurentPoly::monomial(0, -1, 1));
}

CheckResult check_winding_ground_truth() {
  const auto start = Clock::now();
  const Word x = Word::generator(0);
  const Word y = Word::generator(1);
  const bool xy_ok = winding_invariant(commutator(x, y)) == LaurentPoly(1);
  const bool yinvx_ok =
      winding_invariant(commutator(invert(y), x)) == LaurentPoly::monomial(0, -1, 1);
  const double ms = elapsed_ms(start);
  CheckResult result{"winding-ground-truth", xy_ok && yinvx_ok && ms < 1.0, "", ms};
  result.detail = std::string("P[x,y]=1: ") + (xy_ok ? "ok" : "WRONG") +
                  ", P[y^-1,x]=Y^-1: " + (yinvx_ok ? "ok" : "WRONG");
  return result;
}

CheckResult check_lambda_replay() {
  const auto start = Clock::now();
  const auto lambda_p = lambda_vector(standard_zz_presentation());
  const Presentation q = exotic_zz_presentation();
  const auto lambda_q = lambda_vector(q);
  const LaurentMatrix m = evans_matrix();

  const bool p_ok = lambda_p.size() == 2 && lambda_p[0] == LaurentPoly(1) &&
                    lambda_p[1].is_zero();
  const bool q_ok = lambda_q.size() == 2 && lambda_q[0] == paper_lambda_q1() &&
                    lambda_q[1] == paper_lambda_q2();
  const bool column_ok = lambda_q.size() == 2 && lambda_q[0] == m.at(1, 1) &&
                         lambda_q[1] == m.at(2, 1);
  const WindingGrid expected_grid{{{0, -1}, 2}, {{1, -1}, -2}, {{0, 0}, 1}};
  const bool grid_ok = winding_grid_oracle(q.relators[0]) == expected_grid;
  const double ms = elapsed_ms(start);
  CheckResult result{"lambda-replay", p_ok && q_ok && column_ok && grid_ok && ms < 10.0, "", ms};
  std::ostringstream detail;
  detail << "lambda(P)=(1,0): " << (p_ok ? "ok" : "WRONG")
         << ", lambda(Q) paper values: " << (q_ok ? "ok" : "WRONG")
         << ", first Evans column: " << (column_ok ? "ok" : "WRONG")
         << ", r1 grid: " << (grid_ok ? "ok" : "WRONG");
  result.detail = detail.str();
  return result;
}

CheckResult check_evans_matrix() {
  const auto start = Clock::now();
  const LaurentMatrix m = evans_matrix();
  const bool det_ok = det(m).is_one();
  bool inverse_ok = false;
  if (det_ok) {
    const LaurentMatrix inv = adjugate_inverse_2x2(m);
    inverse_ok = mul(m, inv) == LaurentMatrix::identity(2) &&
                 mul(inv, m) == LaurentMatrix::identity(2);
  }
  const double ms = elapsed_ms(start);
  CheckResult result{"evans-matrix", det_ok && inverse_ok, "", ms};
  result.detail = std::string("det=1: ") + (det_ok ? "ok" : "WRONG") +
                  ", M*M^-1=I: " + (inverse_ok ? "ok" : "WRONG");
  return result;
}

CheckResult check_fox_replay() {
  const auto start = Clock::now();
  const Presentation p = standard_zz_presentation();
  const Presentation q = exotic_zz_presentation();
  const LaurentPoly one(1);
  const LaurentPoly xm1 = LaurentPoly::monomial(1, 0, 1) - one;
  const LaurentPoly ym1 = LaurentPoly::monomial(0, 1, 1) - one;
  const LaurentPoly y_inv = LaurentPoly::monomial(0, -1, 1);

  // The two displayed boundary matrices, entry for entry.
  LaurentMatrix display_p(2, 2);
  display_p.at(1, 1) = -ym1;  // 1 - y
  display_p.at(2, 1) = xm1;
  LaurentMatrix display_q(2, 2);
  display_q.at(1, 1) = -ym1 * paper_lambda_q1();
  display_q.at(1, 2) = xm1 * xm1 * (one - y_inv);
  display_q.at(2, 1) = xm1 * paper_lambda_q1();
  display_q.at(2, 2) = -(xm1 * xm1 * xm1 * y_inv);

  const LaurentMatrix fox_p = boundary_d2(p);
  const LaurentMatrix fox_q = boundary_d2(q);
  const bool display_ok = fox_p == display_p && fox_q == display_q;

  const std::vector<LaurentPoly> column{-ym1, xm1};  // (1-y, x-1)^t
  const auto lambda_p = lambda_vector(p);
  const auto lambda_q = lambda_vector(q);
  const bool outer_ok = fox_p == outer_product(column, lambda_p) &&
                        fox_q == outer_product(column, lambda_q);

  const bool transport_ok = mul(fox_p, transpose(evans_matrix())) == fox_q;
  const double ms = elapsed_ms(start);
  CheckResult result{"fox-replay", display_ok && outer_ok && transport_ok, "", ms};
  std::ostringstream detail;
  detail << "displayed matrices: " << (display_ok ? "ok" : "WRONG")
         << ", outer products (1-Y, X-1)^t * lambda: " << (outer_ok ? "ok" : "WRONG")
         << ", d2' * M^t = d2: " << (transport_ok ? "ok" : "WRONG");
  result.detail = detail.str();
  return result;
}

CheckResult check_certificate(const std::string& cert_path) {
  const auto start = Clock::now();
  CheckResult result{"certificate", false, "", 0.0};
  std::ifstream in(cert_path);
  if (!in) {
    throw std::runtime_error("certificate data file not found: " + cert_path);
  }
  std::ostringstream buffer;
  buffer << in.rdbuf();
  try {
    const Certificate cert = parse_certificate(buffer.str());
    const Presentation q = exotic_zz_presentation();
    const Word target = commutator(Word::generator(0), Word::generator(1));
    const bool verified = verify(cert, q, target);
    const bool consistent = lambda_consistency(cert, q, target);
    result.millis = elapsed_ms(start);
    result.pass = verified && consistent && result.millis < 1000.0;
    result.detail = std::string("expand = [x,y] over Q: ") + (verified ? "ok" : "WRONG") +
                    ", lambda consistency: " + (consistent ? "ok" : "WRONG") + " (" +
                    std::to_string(cert.steps.size()) + " steps)";
  } catch (const std::exception& err) {
    result.millis = elapsed_ms(start);
    result.pass = false;
    result.detail = std::string("certificate rejected: ") + err.what();
  }
  return result;
}

CheckResult check_reduction_argument() {
  const auto start = Clock::now();
  std::mt19937_64 rng(0x5eed0001u);
  std::uniform_int_distribution<int> exponent(-3, 3);
  std::uniform_int_distribution<int> coefficient(-9, 9);
  std::uniform_int_distribution<int> term_count(0, 6);
  bool all_ok = true;
  for (int trial = 0; trial < 100 && all_ok; ++trial) {
    LaurentPoly a;
    const int terms = term_count(rng);
    for (int t = 0; t < terms; ++t) {
      a.add_term({exponent(rng), exponent(rng)}, coefficient(rng));
    }
    LaurentMatrix n = LaurentMatrix::identity(2);
    n.at(1, 2) = a;
    const GEFactor factor = reduce_e1_fixed(n);
    all_ok = mul(realize(factor, 2), n) == LaurentMatrix::identity(2);
  }
  const double ms = elapsed_ms(start);
  return CheckResult{"reduction-argument", all_ok,
                     std::string("100 random unipotent matrices reduced: ") +
                         (all_ok ? "ok" : "WRONG"),
                     ms};
}

}  // namespace

VerificationReport run_verify_paper(const std::string& cert_path) {
  VerificationReport report;
  report.checks.push_back(check_winding_ground_truth());
  report.checks.push_back(check_lambda_replay());
  report.checks.push_back(check_evans_matrix());
  report.checks.push_back(check_fox_replay());
  report.checks.push_back(check_certificate(cert_path));
  report.checks.push_back(check_reduction_argument());
  return report;
}

std::string format_report(const VerificationReport& report, bool machine_readable) {
  std::ostringstream out;
  if (machine_readable) {
    for (const CheckResult& c : report.checks) {
      out << "CHECK " << c.name << " " << (c.pass ? "PASS" : "FAIL") << "\n";
    }
    return out.str();
  }
  std::size_t width = 0;
  for (const CheckResult& c : report.checks) width = std::max(width, c.name.size());
  for (const CheckResult& c : report.checks) {
    out << c.name << std::string(width - c.name.size() + 2, ' ')
        << (c.pass ? "PASS" : "FAIL") << "  " << c.detail;
    char ms[32];
    std::snprintf(ms, sizeof(ms), "%.2f", c.millis);
    out << "  [" << ms << " ms]\n";
  }
  out << (report.all_pass() ? "all checks passed" : "CHECKS FAILED") << "\n";
  return out.str();
}

}  // namespace windinv
