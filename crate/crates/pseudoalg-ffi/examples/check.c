/* Parses an algebra from a file (or builds a catalog family) and prints
 * its classification and λ-brackets.
 *
 *   cc examples/check.c -Iinclude -L../../target/debug -lpseudoalg_ffi -o check
 *   ./check virasoro.pa
 *   ./check --family mtype-B "lambda1=1/2;kappa1=0;w01=1;a=0"
 */
#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "pseudoalg.h"

static char *slurp(const char *path) {
    FILE *f = fopen(path, "rb");
    if (!f) return NULL;
    fseek(f, 0, SEEK_END);
    long n = ftell(f);
    fseek(f, 0, SEEK_SET);
    char *buf = malloc((size_t)n + 1);
    if (buf && fread(buf, 1, (size_t)n, f) != (size_t)n) {
        free(buf);
        buf = NULL;
    }
    if (buf) buf[n] = '\0';
    fclose(f);
    return buf;
}

static int fail(PaStatus st) {
    const char *msg = pa_last_error();
    fprintf(stderr, "error %d: %s\n", (int)st, msg ? msg : "(no message)");
    return 2;
}

int main(int argc, char **argv) {
    PaAlgebra *a = NULL;
    PaStatus st;
    if (argc == 4 && strcmp(argv[1], "--family") == 0) {
        st = pa_algebra_from_family(argv[2], argv[3], &a);
    } else if (argc == 2) {
        char *text = slurp(argv[1]);
        if (!text) {
            perror(argv[1]);
            return 2;
        }
        st = pa_algebra_parse(text, &a);
        free(text);
    } else {
        fprintf(stderr, "usage: %s FILE | --family ID PARAMS\n", argv[0]);
        return 2;
    }
    if (st != PA_STATUS_OK) return fail(st);

    PaClassification cls;
    if ((st = pa_algebra_classify(a, &cls)) != PA_STATUS_OK) return fail(st);
    static const char *names[] = {"lie", "leibniz-not-lie", "not-leibniz"};
    printf("rank %zu, %s\n", pa_algebra_rank(a), names[cls]);

    char *lambda = NULL;
    if ((st = pa_algebra_to_lambda(a, PA_SIGN_CONVENTION_CANONICAL, 1, &lambda)) != PA_STATUS_OK) return fail(st);
    fputs(lambda, stdout);
    pa_string_free(lambda);
    pa_algebra_free(a);
    return cls == PA_CLASSIFICATION_NOT_LEIBNIZ ? 1 : 0;
}
