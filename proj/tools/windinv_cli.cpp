#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "windinv/certificates.hpp"
#include "windinv/foxcalc.hpp"
#include "windinv/matrices.hpp"
#include "windinv/presentations.hpp"
#include "windinv/report.hpp"
#include "windinv/winding.hpp"
#include "windinv/words.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitCheckFailed = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open file: " + path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write file: " + path);
  out << content;
}

windinv::Presentation load_presentation(const std::string& path) {
  return windinv::parse_presentation(read_file(path));
}

int run_winding(const std::string& word_text, const std::string& render,
                const std::string& out_path) {
  const windinv::Word w = windinv::parse_word(word_text);
  std::cout << windinv::winding_invariant(w).str() << "\n";
  if (!render.empty()) {
    const auto format =
        render == "svg" ? windinv::GridFormat::svg : windinv::GridFormat::ascii;
    const std::string text = windinv::render_grid(w, format);
    if (out_path.empty()) {
      std::cout << text;
    } else {
      write_file(out_path, text);
    }
  }
  return kExitOk;
}

int run_lambda(const std::string& pres_path) {
  for (const auto& p : windinv::lambda_vector(load_presentation(pres_path))) {
    std::cout << p.str() << "\n";
  }
  return kExitOk;
}

int run_fox(const std::string& pres_path) {
  std::cout << windinv::boundary_d2(load_presentation(pres_path)).str() << "\n";
  return kExitOk;
}

int run_moves_apply(const std::string& pres_path, const std::string& script_path) {
  windinv::Presentation p = load_presentation(pres_path);
  const auto script = windinv::parse_move_script(read_file(script_path));
  for (const auto& m : script) p = windinv::apply_move(p, m);
  std::cout << windinv::to_string(p);
  return kExitOk;
}

int run_moves_search(const std::string& start_path, const std::string& goal_path,
                     const windinv::SearchBounds& bounds) {
  const auto script =
      windinv::bounded_search(load_presentation(start_path), load_presentation(goal_path), bounds);
  if (!script) {
    std::cout << "NONE\n";  // exhausted the bounded space; claims nothing beyond it
  } else {
    std::cout << windinv::to_string(*script);
  }
  return kExitOk;
}

int run_cert_verify(const std::string& pres_path, const std::string& cert_path,
                    const std::string& target_text) {
  const windinv::Presentation p = load_presentation(pres_path);
  const windinv::Certificate cert = windinv::parse_certificate(read_file(cert_path));
  const windinv::Word target = windinv::parse_word(target_text);
  if (windinv::verify(cert, p, target)) {
    std::cout << "PASS\n";
    return kExitOk;
  }
  std::cout << "FAIL\n";
  return kExitCheckFailed;
}

int run_cert_search(const std::string& pres_path, const std::string& target_text,
                    const windinv::CertificateSearchBounds& bounds) {
  const auto cert = windinv::search_certificate(load_presentation(pres_path),
                                                windinv::parse_word(target_text), bounds);
  if (!cert) {
    std::cout << "NONE\n";
  } else {
    std::cout << windinv::to_string(*cert);
  }
  return kExitOk;
}

int run_verify_paper_cmd(const std::string& cert_path, bool machine) {
  const windinv::VerificationReport report = windinv::run_verify_paper(cert_path);
  std::cout << windinv::format_report(report, machine);
  return report.all_pass() ? kExitOk : kExitCheckFailed;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"exact workbench for winding invariants of rank-2 presentations"};
  app.require_subcommand(1);

  // winding
  std::string word_text, render_format, out_path;
  auto* winding = app.add_subcommand("winding", "winding invariant of a word");
  winding->add_option("word", word_text, "word in the grammar, e.g. \"[x,y]\"")->required();
  winding->add_option("--render", render_format, "also render the traced grid")
      ->check(CLI::IsMember({"ascii", "svg"}));
  winding->add_option("--out", out_path, "write the rendering to a file");

  // lambda
  std::string lambda_pres;
  auto* lambda = app.add_subcommand("lambda", "relator invariant vector of a presentation");
  lambda->add_option("presentation", lambda_pres, "presentation file")->required();

  // fox
  std::string fox_pres;
  auto* fox = app.add_subcommand("fox", "boundary matrix of a presentation");
  fox->add_option("presentation", fox_pres, "presentation file")->required();

  // moves apply / moves search
  auto* moves = app.add_subcommand("moves", "presentation moves");
  moves->require_subcommand(1);
  std::string apply_pres, apply_script;
  auto* moves_apply = moves->add_subcommand("apply", "apply a move script");
  moves_apply->add_option("presentation", apply_pres)->required();
  moves_apply->add_option("--script", apply_script, "move script file")->required();
  std::string search_start, search_goal;
  windinv::SearchBounds search_bounds;
  auto* moves_search = moves->add_subcommand("search", "bounded equivalence search");
  moves_search->add_option("start", search_start)->required();
  moves_search->add_option("goal", search_goal)->required();
  moves_search->add_option("--max-moves", search_bounds.max_moves);
  moves_search->add_option("--max-conj-len", search_bounds.max_conjugator_len);
  moves_search->add_option("--max-relator-len", search_bounds.max_relator_len);

  // cert verify / cert search
  auto* cert = app.add_subcommand("cert", "normal-closure membership certificates");
  cert->require_subcommand(1);
  std::string cv_pres, cv_cert, cv_target;
  auto* cert_verify = cert->add_subcommand("verify", "check a certificate against a target");
  cert_verify->add_option("presentation", cv_pres)->required();
  cert_verify->add_option("certificate", cv_cert)->required();
  cert_verify->add_option("--target", cv_target, "target word")->required();
  std::string cs_pres, cs_target;
  windinv::CertificateSearchBounds cert_bounds;
  auto* cert_search = cert->add_subcommand("search", "search for a certificate");
  cert_search->add_option("presentation", cs_pres)->required();
  cert_search->add_option("--target", cs_target, "target word")->required();
  cert_search->add_option("--max-steps", cert_bounds.max_steps);
  cert_search->add_option("--max-conj-len", cert_bounds.max_conjugator_len);

  // verify-paper
  std::string vp_cert = "data/cert_ene.cert";
  bool vp_machine = false;
  auto* verify_paper = app.add_subcommand("verify-paper", "replay every machine-checkable identity");
  verify_paper->add_option("--cert", vp_cert, "normal-closure certificate file");
  verify_paper->add_flag("--machine", vp_machine, "one CHECK <name> PASS|FAIL line per check");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (app.got_subcommand(winding)) return run_winding(word_text, render_format, out_path);
    if (app.got_subcommand(lambda)) return run_lambda(lambda_pres);
    if (app.got_subcommand(fox)) return run_fox(fox_pres);
    if (app.got_subcommand(moves)) {
      if (moves->got_subcommand(moves_apply)) return run_moves_apply(apply_pres, apply_script);
      return run_moves_search(search_start, search_goal, search_bounds);
    }
    if (app.got_subcommand(cert)) {
      if (cert->got_subcommand(cert_verify)) return run_cert_verify(cv_pres, cv_cert, cv_target);
      return run_cert_search(cs_pres, cs_target, cert_bounds);
    }
    if (app.got_subcommand(verify_paper)) return run_verify_paper_cmd(vp_cert, vp_machine);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
