/* C interface to the shiftforge engine.
 *
 * All functions return sf_status; on failure sf_last_error() holds a
 * descriptive message for the calling thread.  Strings returned through
 * out-parameters are heap-allocated and must be released with
 * sf_string_free().  Documents are opaque handles released with
 * sf_document_free().
 */
#ifndef SHIFTFORGE_C_H
#define SHIFTFORGE_C_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SF_OK = 0,
  SF_ERR_INPUT = 2,    /* malformed input, unknown names, bad references */
  SF_ERR_INTERNAL = 3, /* internal invariant violation */
} sf_status;

typedef struct sf_document sf_document;

const char* sf_version(void);

/* Message describing the most recent failure on this thread. */
const char* sf_last_error(void);

sf_status sf_document_open(const char* path, sf_document** out);
sf_status sf_document_parse(const char* json_text, sf_document** out);
void sf_document_free(sf_document* doc);

/* Canonical JSON for the document; reparsing yields the same document. */
sf_status sf_document_serialize(const sf_document* doc, char** out_json);

/* One verdict line: TRIVIAL | NONTRIVIAL <witness> | UNKNOWN <reason>,
 * tagged with the evaluation window. */
sf_status sf_eval_word(const sf_document* doc, const char* system, const char* word,
                       int window, char** out_line);

/* Deterministic divergence report between a system's solver and a claimed
 * normal-form oracle; out_summary receives "compared: N diverged: M".
 * The radius is capped by SHIFTFORGE_MAX_RADIUS (default 8). */
sf_status sf_probe(const sf_document* doc, const char* system, const char* claim,
                   int radius, int window, char** out_report, char** out_summary);

/* target: "graph" (name = graph), "domains" (name = system), or
 * "support" (name = system, word required).  Produces DOT text. */
sf_status sf_render(const sf_document* doc, const char* target, const char* name,
                    const char* word, int window, char** out_dot);

/* Classification quadruple of a named surface, or a symbolic marker. */
sf_status sf_classify(const sf_document* doc, const char* surface, char** out_text);

/* Non-conjugacy certificate from omission counts m and n along a letter. */
sf_status sf_certificate(const sf_document* doc, const char* surface,
                         const char* letter, int m, int n, char** out_text);

/* Runs a stored query (word-list, probe, or certificate) by name. */
sf_status sf_query(const sf_document* doc, const char* query, int window,
                   char** out_text);

void sf_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* SHIFTFORGE_C_H */
