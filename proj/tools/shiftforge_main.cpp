// Command-line front end; talks to the engine exclusively through the shared
// library's C interface.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <memory>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "shiftforge/shiftforge_c.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitInput = 2;
constexpr int kExitInternal = 3;

struct DocHandle {
  sf_document* doc = nullptr;
  ~DocHandle() { sf_document_free(doc); }
};

struct CString {
  char* s = nullptr;
  ~CString() { sf_string_free(s); }
};

int status_to_exit(sf_status st) {
  if (st == SF_OK) return kExitOk;
  std::cerr << "error: " << sf_last_error() << "\n";
  return st == SF_ERR_INPUT ? kExitInput : kExitInternal;
}

int open_doc(const std::string& path, DocHandle& doc) {
  return status_to_exit(sf_document_open(path.c_str(), &doc.doc));
}

bool write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path, std::ios::binary);
  if (!out) return false;
  out << text;
  return static_cast<bool>(out);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"shiftforge: word problems, probes, and certificates for "
               "shift and multipush systems on surfaces built from graphs"};
  app.require_subcommand(1);
  app.fallthrough();

  int window = 16;
  std::string apply_order = "rightmost-first";
  app.add_option("--window", window, "evaluation window radius")->capture_default_str();
  app.add_option("--apply-order", apply_order,
                 "composition convention (rightmost-first is the only value)")
      ->capture_default_str();

  std::string spec_path;

  auto* eval = app.add_subcommand("eval", "evaluate words in a named system");
  std::string eval_system, eval_word, eval_words_path, eval_query;
  eval->add_option("--spec", spec_path, "spec document")->required();
  eval->add_option("--system", eval_system, "system name")->required();
  eval->add_option("--word", eval_word, "a single word");
  eval->add_option("--words", eval_words_path, "file with one word per line");
  eval->add_option("--query", eval_query, "stored word-list query name");

  auto* probe = app.add_subcommand("probe", "compare a system against a claimed oracle");
  std::string probe_system, probe_claim, probe_out;
  int probe_radius = 4;
  probe->add_option("--spec", spec_path, "spec document")->required();
  probe->add_option("--system", probe_system, "system name")->required();
  probe->add_option("--claim", probe_claim, "claimed oracle name")->required();
  probe->add_option("--radius", probe_radius, "ball radius")->capture_default_str();
  probe->add_option("--out", probe_out, "report file (default: stdout)");

  auto* render = app.add_subcommand("render", "emit DOT drawings");
  std::string render_target, render_name, render_word, render_out;
  render->add_option("--spec", spec_path, "spec document")->required();
  render->add_option("--target", render_target, "graph | domains | support")->required();
  render->add_option("--graph", render_name, "graph name (target=graph)");
  render->add_option("--system", render_name, "system name (target=domains|support)");
  render->add_option("--word", render_word, "word (target=support)");
  render->add_option("--out", render_out, "output DOT file (default: stdout)");

  auto* classify = app.add_subcommand("classify", "classification quadruple of a surface");
  std::string classify_surface;
  classify->add_option("--spec", spec_path, "spec document")->required();
  classify->add_option("--surface", classify_surface, "surface name")->required();

  auto* certify = app.add_subcommand("certify", "non-conjugacy certificate from omissions");
  std::string certify_surface, certify_letter = "t";
  int certify_m = 0, certify_n = 1;
  certify->add_option("--spec", spec_path, "spec document")->required();
  certify->add_option("--surface", certify_surface, "surface name")->required();
  certify->add_option("--letter", certify_letter, "domain letter")->capture_default_str();
  certify->add_option("-m", certify_m, "first omission count")->required();
  certify->add_option("-n", certify_n, "second omission count")->required();

  auto* query = app.add_subcommand("query", "run a stored query by name");
  std::string query_name;
  query->add_option("--spec", spec_path, "spec document")->required();
  query->add_option("--name", query_name, "query name")->required();

  auto* validate = app.add_subcommand("validate", "parse a spec and reprint it");
  validate->add_option("--spec", spec_path, "spec document")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitInput;
  }

  if (apply_order != "rightmost-first") {
    std::cerr << "error: unsupported apply order '" << apply_order
              << "'; the engine composes rightmost-first\n";
    return kExitInput;
  }

  DocHandle doc;
  int rc = open_doc(spec_path, doc);
  if (rc != kExitOk) return rc;

  if (eval->parsed()) {
    std::vector<std::string> words;
    if (!eval_word.empty()) words.push_back(eval_word);
    if (!eval_words_path.empty()) {
      std::ifstream in(eval_words_path);
      if (!in) {
        std::cerr << "error: cannot open word list '" << eval_words_path << "'\n";
        return kExitInput;
      }
      std::string line;
      while (std::getline(in, line)) {
        if (!line.empty()) words.push_back(line);
      }
    }
    if (!eval_query.empty()) {
      CString out;
      sf_status st = sf_query(doc.doc, eval_query.c_str(), window, &out.s);
      if (st != SF_OK) return status_to_exit(st);
      std::cout << out.s;
      return kExitOk;
    }
    if (words.empty()) {
      std::cerr << "error: eval needs --word, --words, or --query\n";
      return kExitInput;
    }
    for (const std::string& w : words) {
      CString line;
      sf_status st = sf_eval_word(doc.doc, eval_system.c_str(), w.c_str(), window, &line.s);
      if (st != SF_OK) return status_to_exit(st);
      std::cout << line.s << "\n";
    }
    return kExitOk;
  }

  if (probe->parsed()) {
    CString report, summary;
    sf_status st = sf_probe(doc.doc, probe_system.c_str(), probe_claim.c_str(),
                            probe_radius, window, &report.s, &summary.s);
    if (st != SF_OK) return status_to_exit(st);
    if (probe_out.empty()) {
      std::cout << report.s;
    } else if (!write_file(probe_out, report.s)) {
      std::cerr << "error: cannot write report to '" << probe_out << "'\n";
      return kExitInput;
    } else {
      std::cout << "report: " << probe_out << "\n";
    }
    std::cout << summary.s << "\n";
    return kExitOk;
  }

  if (render->parsed()) {
    CString dot;
    sf_status st = sf_render(doc.doc, render_target.c_str(), render_name.c_str(),
                             render_word.c_str(), window, &dot.s);
    if (st != SF_OK) return status_to_exit(st);
    if (render_out.empty()) {
      std::cout << dot.s;
    } else if (!write_file(render_out, dot.s)) {
      std::cerr << "error: cannot write DOT to '" << render_out << "'\n";
      return kExitInput;
    } else {
      std::cout << "dot: " << render_out << "\n";
    }
    return kExitOk;
  }

  if (classify->parsed()) {
    CString text;
    sf_status st = sf_classify(doc.doc, classify_surface.c_str(), &text.s);
    if (st != SF_OK) return status_to_exit(st);
    std::cout << text.s << "\n";
    return kExitOk;
  }

  if (certify->parsed()) {
    CString text;
    sf_status st = sf_certificate(doc.doc, certify_surface.c_str(), certify_letter.c_str(),
                                  certify_m, certify_n, &text.s);
    if (st != SF_OK) return status_to_exit(st);
    std::cout << text.s << "\n";
    return kExitOk;
  }

  if (query->parsed()) {
    CString text;
    sf_status st = sf_query(doc.doc, query_name.c_str(), window, &text.s);
    if (st != SF_OK) return status_to_exit(st);
    std::cout << text.s;
    return kExitOk;
  }

  if (validate->parsed()) {
    CString text;
    sf_status st = sf_document_serialize(doc.doc, &text.s);
    if (st != SF_OK) return status_to_exit(st);
    std::cout << text.s;
    return kExitOk;
  }

  return kExitInput;
}
