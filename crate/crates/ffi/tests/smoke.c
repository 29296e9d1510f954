#include <stdio.h>
#include <string.h>

#include "poset_tense.h"

static const char *EXAMPLE =
    "poset A {\n"
    "  elements: 0 a b c d e f g 1;\n"
    "  covers: 0<a, 0<b, 0<c, a<e, a<f, b<d, b<e, b<g, c<f, c<g, d<f, e<1, f<1, g<1;\n"
    "}\n"
    "frame T { points: 1 2 3; rel: 1->1, 1->2, 1->3, 2->2, 2->3, 3->3; }\n"
    "prop r over A,T = [a, b, b];\n";

int main(void) {
    PtInstance *inst = NULL;
    if (pt_instance_parse(EXAMPLE, &inst) != PT_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", pt_last_error());
        return 1;
    }
    char *out = NULL;
    if (pt_tense(inst, "r", PT_OP_P, &out) != PT_STATUS_OK) {
        fprintf(stderr, "tense: %s\n", pt_last_error());
        return 1;
    }
    printf("P(r) = %s\n", out);
    pt_string_free(out);
    if (pt_compose(inst, "r", PT_OP_P, PT_OP_P, &out) != PT_STATUS_OK) {
        return 1;
    }
    printf("(P*P)(r) = %s\n", out);
    pt_string_free(out);
    PtStatus s = pt_tense(inst, "missing", PT_OP_G, &out);
    printf("missing: %d %s\n", (int)s, pt_last_error());
    pt_instance_free(inst);
    return 0;
}
