#ifndef QLW_H
#define QLW_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Status codes shared by the library and the command-line driver:
 * 0 when the queried property holds or the input is accepted,
 * 1 when a countermodel or rejection was produced,
 * 2 on usage, format, or lookup errors. */
typedef enum qlw_status {
    QLW_OK = 0,
    QLW_COUNTERMODEL = 1,
    QLW_ERROR = 2
} qlw_status;

typedef struct qlw_structure qlw_structure;
typedef struct qlw_formula qlw_formula;
typedef struct qlw_derivation qlw_derivation;

const char* qlw_version(void);

/* Message of the last failing call on this thread; empty string when the
 * last call succeeded. The pointer stays valid until the next call. */
const char* qlw_last_error(void);

/* Frees any string returned through a char** out-parameter. */
void qlw_string_free(char* s);

/* Newline-separated names of the shipped structures; caller frees. */
char* qlw_structure_catalog(void);

/* Loads a structure from the text format or fetches a catalog entry when
 * the text starts with "catalog:". NULL on failure. */
qlw_structure* qlw_structure_load(const char* text);
void qlw_structure_free(qlw_structure* st);

/* Serialized text of the structure; caller frees. */
char* qlw_structure_save(const qlw_structure* st);

int qlw_structure_size(const qlw_structure* st);

/* Kebab-case class label, e.g. "orthomodular-lattice"; caller frees.
 * NULL only when st is NULL. */
char* qlw_structure_class(const qlw_structure* st);

/* Element name for an index, or NULL when out of range; caller frees. */
char* qlw_structure_element(const qlw_structure* st, int index);

/* Element index for a name, or -1 when unknown. */
int qlw_structure_index(const qlw_structure* st, const char* name);

/* dialect is one of OL, OQL, PQL, RPQL, BZL, BZL3, UPaQL, WPaQL, SPaQL,
 * LQL. NULL on parse failure. */
qlw_formula* qlw_formula_parse(const char* dialect, const char* text);
void qlw_formula_free(qlw_formula* f);

/* Printed form of the formula; caller frees. */
char* qlw_formula_print(const qlw_formula* f);

/* Value of the formula under the assignment literals[i] -> values[i]
 * (element names), as an element index; -1 on failure. */
int qlw_evaluate(const qlw_structure* st, const qlw_formula* f,
                 const char* const* literals, const char* const* values,
                 size_t n);

/* Tests the consequence premises |- conclusion (logical truth when
 * npremises is 0) over catalog structures named in structs. Returns QLW_OK,
 * QLW_COUNTERMODEL (writing a textual witness to *witness when witness is
 * not NULL; caller frees), or QLW_ERROR. */
qlw_status qlw_consequence(const char* const* structs, size_t nstructs,
                           qlw_formula* const* premises, size_t npremises,
                           const qlw_formula* conclusion, char** witness);

/* Parses the derivation text format (calculus: header plus numbered steps).
 * Derived-rule steps are expanded to primitives. NULL on failure. */
qlw_derivation* qlw_derivation_parse(const char* text);
void qlw_derivation_free(qlw_derivation* d);

/* QLW_OK when every step fits its rule, QLW_COUNTERMODEL when rejected
 * (writing the reason to *reason when reason is not NULL; caller frees),
 * QLW_ERROR when d is NULL. */
qlw_status qlw_derivation_check(const qlw_derivation* d, char** reason);

/* Runs the command-line driver; argv excludes the program name. Output goes
 * to stdout. Returns the exit code (see qlw_status). */
int qlw_run(int argc, const char* const* argv);

/* Same, capturing the report into *output (caller frees) instead of
 * writing to stdout. */
int qlw_run_capture(int argc, const char* const* argv, char** output);

#ifdef __cplusplus
}
#endif

#endif
