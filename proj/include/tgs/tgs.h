/* tgs.h — C interface of the ternary-gamma-semiring code library.
 *
 * The library computes with finite commutative ternary Gamma-semirings given
 * as explicit operation tables: axiom checking, k-ideal lattices, Bourne
 * quotients, the four code constructions, ternary-syndrome decoding, channel
 * simulation, and a claims suite that adjudicates the structural hypotheses
 * on bundled or user-supplied fixtures.
 *
 * All complex inputs and outputs are UTF-8 JSON strings.  Handles are opaque;
 * every function that can fail returns a tgs_status and, when an `error`
 * out-parameter is given, a human-readable message the caller must release
 * with tgs_string_free().  Returned strings are heap-allocated and owned by
 * the caller (tgs_string_free).  A tgs_code keeps its own copy of the
 * underlying structure, so the tgs_structure it was built from may be freed
 * independently.
 */
#ifndef TGS_TGS_H
#define TGS_TGS_H

#include <stddef.h>

#if defined(_WIN32)
#  if defined(TGS_BUILD_SHARED)
#    define TGS_API __declspec(dllexport)
#  else
#    define TGS_API __declspec(dllimport)
#  endif
#else
#  define TGS_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum tgs_status {
  TGS_OK = 0,
  TGS_ERR_PARSE = 1,             /* malformed document */
  TGS_ERR_USAGE = 2,             /* invalid argument or mismatched inputs */
  TGS_ERR_BOUNDS = 3,            /* enumeration bound exceeded */
  TGS_ERR_INVALID_STRUCTURE = 4, /* axioms fail and force was not set */
  TGS_ERR_NOT_FOUND = 5,         /* unknown label, fixture or file */
  TGS_ERR_INTERNAL = 6
} tgs_status;

typedef struct tgs_structure tgs_structure; /* finite TGS (operation tables) */
typedef struct tgs_code tgs_code;           /* enumerated code over a TGS */

/* Library version string ("major.minor.patch"). */
TGS_API const char* tgs_version(void);

/* Stable identifier for a status value, e.g. "parse" for TGS_ERR_PARSE. */
TGS_API const char* tgs_status_name(tgs_status status);

/* Release a string returned by any function below. NULL is allowed. */
TGS_API void tgs_string_free(char* str);

/* ---- structures ----------------------------------------------------------
 *
 * `bounds`, where accepted, is either NULL (defaults) or a comma-separated
 * list "carrier=12,words=1048576,witnesses=32"; unknown keys are rejected.
 * `force` permits structures whose axiom check fails (diagnostic mode).
 */

TGS_API tgs_status tgs_structure_parse(const char* document_json,
                                       tgs_structure** out, char** error);
TGS_API void tgs_structure_free(tgs_structure* s);

/* Canonical serialization; reloads to an equal structure. */
TGS_API tgs_status tgs_structure_to_json(const tgs_structure* s, char** out);

/* 1 when all axioms (and the zero identity) hold, else 0. */
TGS_API int tgs_structure_is_valid(const tgs_structure* s);

/* Evaluate one table operation. op is "plus" (args "x,y"), "ternary"
 * ("x,y,z"), "gamma" ("g,x" with a gamma label first) or "leq" ("x,y").
 * Returns {"op":..., "args":[...], "value": label} ({"value": bool} for leq). */
TGS_API tgs_status tgs_structure_eval(const tgs_structure* s, const char* op,
                                      const char* args_csv, char** out,
                                      char** error);

/* Full axiom report with capped violation witnesses. */
TGS_API tgs_status tgs_structure_check(const tgs_structure* s,
                                       const char* bounds, char** report_json,
                                       char** error);

/* k-ideal predicate for one subset, given as comma-separated labels.
 * Diagnostic: allowed on structures that fail the axiom check. */
TGS_API tgs_status tgs_structure_test_ideal(const tgs_structure* s,
                                            const char* labels_csv,
                                            int literal, char** verdict_json,
                                            char** error);

/* All k-ideals in canonical order. `literal` drops the plus-closure clause. */
TGS_API tgs_status tgs_structure_ideals(const tgs_structure* s, int literal,
                                        const char* bounds, int force,
                                        char** out, char** error);

/* Inclusion lattice: nodes, Hasse edges, meet/join tables, distributivity. */
TGS_API tgs_status tgs_structure_lattice(const tgs_structure* s, int literal,
                                         const char* bounds, int force,
                                         char** out, char** error);

/* Bourne quotient by the k-ideal given as comma-separated labels. */
TGS_API tgs_status tgs_structure_quotient(const tgs_structure* s,
                                          const char* ideal_csv, int force,
                                          char** out, char** error);

/* Ternary annihilator of the subset given as comma-separated labels
 * (empty string = empty subset). */
TGS_API tgs_status tgs_structure_annihilator(const tgs_structure* s,
                                             const char* labels_csv, int force,
                                             char** out, char** error);

/* ---- codes ----------------------------------------------------------------
 *
 * `spec_json` follows the code-spec document format:
 *   {"construction": "ideal-power"|"constraint"|"kernel"|"generated",
 *    "n": int, "ideal": [labels], "A": [labels], "B": [labels],
 *    "generators": [[labels]...]}
 * (The "tgs" path key used by on-disk specs is resolved by the caller.)
 */

TGS_API tgs_status tgs_code_build(const tgs_structure* s, const char* spec_json,
                                  const char* bounds, int force, tgs_code** out,
                                  char** error);
TGS_API void tgs_code_free(tgs_code* c);

/* Parameters: cardinality, k, d, decoding radius, formula cross-checks. */
TGS_API tgs_status tgs_code_params(const tgs_code* c, char** out);

/* Members in canonical (lexicographic) order. */
TGS_API tgs_status tgs_code_members(const tgs_code* c, char** out);

/* Syndrome coset table (constraint/kernel codes only). */
TGS_API tgs_status tgs_code_cosets(const tgs_code* c, char** out, char** error);

/* Syndrome decoding of one word ("a,0,1"). Constraint/kernel codes only. */
TGS_API tgs_status tgs_code_decode(const tgs_code* c, const char* word_csv,
                                   char** out, char** error);

/* Brute-force nearest codeword under Hamming distance. */
TGS_API tgs_status tgs_code_nearest(const tgs_code* c, const char* word_csv,
                                    char** out, char** error);

/* Channel simulation.  options_json:
 *   {"decoder": "syndrome"|"nearest", "w_max": int,
 *    "mode": "exhaustive"|"sampled", "trials": int, "seed": int}
 * Sampled mode requires a seed. */
TGS_API tgs_status tgs_code_simulate(const tgs_code* c,
                                     const char* options_json, char** out,
                                     char** error);

/* Generated-substructure span report: inclusion in ideal^n and equality.
 * spec_json must be a "generated" code spec; ideal_csv names the k-ideal. */
TGS_API tgs_status tgs_code_span_check(const tgs_structure* s,
                                       const char* spec_json,
                                       const char* ideal_csv,
                                       const char* bounds, int force,
                                       char** out, char** error);

/* ---- claims ---------------------------------------------------------------
 *
 * fixtures_json: [{"name": "M3.json", "document": {...}}, ...] where each
 * document is either a TGS document or a code spec (code specs reference
 * their TGS fixture by name through the "tgs" key).
 * options_json (all optional): {"bounds": "...", "max_n": 3,
 *   "timings": false, "witness_cap": 8,
 *   "search": {"m": 3, "candidates": 100000, "seed": 1}}
 * The report is a claim x fixture matrix; falsified claims carry standalone
 * replayable counterexample documents.
 */
TGS_API tgs_status tgs_claims_run(const char* fixtures_json,
                                  const char* options_json, char** report_json,
                                  char** error);

/* Re-evaluate a standalone counterexample document; *reproduced is set to 1
 * when the recorded violation is confirmed. */
TGS_API tgs_status tgs_claims_replay(const char* counterexample_json,
                                     int* reproduced, char** error);

/* ---- bundled fixtures ----------------------------------------------------- */

/* Manifest: {"version": "...", "files": [{"name","sha256","bytes"}...]}. */
TGS_API tgs_status tgs_fixtures_manifest(char** out);

/* Content of one bundled fixture document by name (e.g. "M3.json"). */
TGS_API tgs_status tgs_fixture_document(const char* name, char** out,
                                        char** error);

#ifdef __cplusplus
}
#endif

#endif /* TGS_TGS_H */
