/* priorepair — consistent query answering over prioritized repairs.
 *
 * C API: load a knowledge base from its input texts, then ask for conflicts,
 * the resolved priority relation, query answers under a repair family and
 * entailment mode, repair enumerations, solver program text, or synthetic
 * fixtures. All results are returned as malloc'd NUL-terminated strings owned
 * by the caller (release with prq_string_free). Every call reports a status
 * code; on failure prq_last_error() describes the problem for the calling
 * thread. A prq_kb handle may be shared across threads only for concurrent
 * reads after the first derived call completed; concurrent first calls race
 * on the internal caches.
 */

#ifndef PRIOREPAIR_H
#define PRIOREPAIR_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum prq_status {
  PRQ_OK = 0,
  PRQ_INVALID_ARG = 1,  /* bad flag value, bad parameters, unusable input data */
  PRQ_PARSE_ERROR = 2,  /* malformed input text; see prq_last_error() */
  PRQ_CAP_EXCEEDED = 3, /* instance too large for an enumeration-based call */
  PRQ_INTERNAL = 4
} prq_status;

typedef struct prq_kb prq_kb;

/* Library version, static storage. */
const char* prq_version(void);

/* Message for the calling thread's most recent failure; static storage,
 * overwritten by the next failing call on the same thread. */
const char* prq_last_error(void);

/* Releases a string returned through an out parameter. NULL is a no-op. */
void prq_string_free(char* s);

/* Parses the six input texts (NULL means empty) into a handle. */
prq_status prq_kb_load(const char* dkb, const char* meta, const char* dc, const char* ucq, const char* prefs,
                       const char* tax, prq_kb** out_kb);
void prq_kb_free(prq_kb* kb);

/* Conflicts as JSON lines (sorted id arrays). pretty: indented documents. */
prq_status prq_conflicts_json(prq_kb* kb, int pretty, char** out);

/* Resolved priority as JSON lines of {"from": id, "to": id}.
 * strategy: "u" | "d" | "ru" | "g". */
prq_status prq_priority_json(prq_kb* kb, const char* strategy, int pretty, char** out);

/* Answers for every query as JSON lines of {"query", "tuple", "entailed"}.
 * repair: "S" | "P" | "C"; semantics: "brave" | "AR" | "IAR"; jobs >= 1
 * parallelizes across answer tuples; exact_causes switches the cause
 * computation to minimal consistent subsets (same verdicts, slower). */
prq_status prq_answers_json(prq_kb* kb, const char* strategy, const char* repair, const char* semantics, int jobs,
                            int exact_causes, int pretty, char** out);

/* Enumerates the repair family as JSON lines (sorted id arrays). Uses the
 * exhaustive engine, so instances beyond the size caps (see the
 * PRIOREPAIR_ORACLE_CAP environment variable) return PRQ_CAP_EXCEEDED. */
prq_status prq_repairs_json(prq_kb* kb, const char* strategy, const char* repair, int pretty, char** out);

/* Input encodings as solver program text. query selects one rewriting by
 * name (NULL = first; ignored when there are none). out_warnings receives
 * newline-separated notes (empty string when clean). */
prq_status prq_emit_input(prq_kb* kb, const char* query, char** out_data, char** out_meta, char** out_constraints,
                          char** out_causes, char** out_prefs, char** out_warnings);

/* Fixed solver programs: cycle resolution for a strategy, conflict
 * minimization, and the per-semantics filter program. */
prq_status prq_emit_priority(const char* strategy, char** out);
prq_status prq_emit_minconf(char** out);
prq_status prq_emit_semantics(const char* repair, const char* semantics, char** out);

/* Deterministic synthetic fixture; four file texts, each malloc'd. Same
 * parameters and seed give byte-identical output. */
prq_status prq_generate(unsigned long long facts, double conflict_rate, int max_conflict_arity, int levels,
                        double pref_density, unsigned long long seed, char** out_dkb, char** out_dc, char** out_meta,
                        char** out_prefs);

#ifdef __cplusplus
}
#endif

#endif /* PRIOREPAIR_H */
