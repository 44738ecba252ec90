#include "shiftforge/shiftforge_c.h"

#include <cstdlib>
#include <cstring>
#include <sstream>
#include <string>

#include "shiftforge/specdoc.hpp"

using shiftforge::SpecDocument;

struct sf_document {
  SpecDocument doc;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) return nullptr;
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

template <typename Fn>
sf_status guarded(Fn&& fn) {
  try {
    fn();
    return SF_OK;
  } catch (const shiftforge::SpecError& e) {
    g_last_error = e.what();
    return SF_ERR_INPUT;
  } catch (const shiftforge::InternalError& e) {
    g_last_error = e.what();
    return SF_ERR_INTERNAL;
  } catch (const std::exception& e) {
    g_last_error = e.what();
    return SF_ERR_INTERNAL;
  }
}

sf_status require(const void* p, const char* what) {
  if (p) return SF_OK;
  g_last_error = std::string("null ") + what;
  return SF_ERR_INPUT;
}

}  // namespace

extern "C" {

const char* sf_version(void) { return "shiftforge 1.0.0"; }

const char* sf_last_error(void) { return g_last_error.c_str(); }

sf_status sf_document_open(const char* path, sf_document** out) {
  if (require(path, "path") != SF_OK || require(out, "out") != SF_OK) return SF_ERR_INPUT;
  return guarded([&] { *out = new sf_document{SpecDocument::load_file(path)}; });
}

sf_status sf_document_parse(const char* json_text, sf_document** out) {
  if (require(json_text, "text") != SF_OK || require(out, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] { *out = new sf_document{SpecDocument::parse_text(json_text)}; });
}

void sf_document_free(sf_document* doc) { delete doc; }

sf_status sf_document_serialize(const sf_document* doc, char** out_json) {
  if (require(doc, "document") != SF_OK || require(out_json, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] { *out_json = dup_string(doc->doc.serialize()); });
}

sf_status sf_eval_word(const sf_document* doc, const char* system, const char* word,
                       int window, char** out_line) {
  if (require(doc, "document") != SF_OK || require(system, "system") != SF_OK ||
      require(word, "word") != SF_OK || require(out_line, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] { *out_line = dup_string(doc->doc.eval_word(system, word, window)); });
}

sf_status sf_probe(const sf_document* doc, const char* system, const char* claim,
                   int radius, int window, char** out_report, char** out_summary) {
  if (require(doc, "document") != SF_OK || require(system, "system") != SF_OK ||
      require(claim, "claim") != SF_OK || require(out_report, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] {
    shiftforge::ProbeReport report = doc->doc.probe(system, claim, radius, window);
    *out_report = dup_string(report.to_text());
    if (out_summary) {
      std::ostringstream os;
      os << "compared: " << report.compared << " diverged: " << report.diverged();
      *out_summary = dup_string(os.str());
    }
  });
}

sf_status sf_render(const sf_document* doc, const char* target, const char* name,
                    const char* word, int window, char** out_dot) {
  if (require(doc, "document") != SF_OK || require(target, "target") != SF_OK ||
      require(name, "name") != SF_OK || require(out_dot, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] {
    *out_dot = dup_string(doc->doc.render(target, name, word ? word : "", window));
  });
}

sf_status sf_classify(const sf_document* doc, const char* surface, char** out_text) {
  if (require(doc, "document") != SF_OK || require(surface, "surface") != SF_OK ||
      require(out_text, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] { *out_text = dup_string(doc->doc.classify_surface(surface)); });
}

sf_status sf_certificate(const sf_document* doc, const char* surface, const char* letter,
                         int m, int n, char** out_text) {
  if (require(doc, "document") != SF_OK || require(surface, "surface") != SF_OK ||
      require(letter, "letter") != SF_OK || require(out_text, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded(
      [&] { *out_text = dup_string(doc->doc.certificate(surface, letter, m, n)); });
}

sf_status sf_query(const sf_document* doc, const char* query, int window,
                   char** out_text) {
  if (require(doc, "document") != SF_OK || require(query, "query") != SF_OK ||
      require(out_text, "out") != SF_OK)
    return SF_ERR_INPUT;
  return guarded([&] { *out_text = dup_string(doc->doc.run_query(query, window)); });
}

void sf_string_free(char* s) { std::free(s); }

}  // extern "C"
