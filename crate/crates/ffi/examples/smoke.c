#include <stdio.h>

#include "ocws.h"

static const char *CODE =
    "n = 8\nr = 1\ngraph = ring\ndistance = 3\n"
    "word = 00000000\nword = 01111100\n";

int main(void) {
    OcwsCode *code = NULL;
    if (ocws_code_parse(CODE, &code) != OCWS_STATUS_OK) {
        fprintf(stderr, "parse: %s\n", ocws_last_error());
        return 1;
    }
    size_t d = 0;
    bool corrects = false;
    OcwsOracleReport report;
    if (ocws_certify_distance(code, &d) != OCWS_STATUS_OK ||
        ocws_corrects_weight(code, 1, &corrects) != OCWS_STATUS_OK ||
        ocws_oracle_check(code, 1, 1e-9, &report) != OCWS_STATUS_OK) {
        fprintf(stderr, "query: %s\n", ocws_last_error());
        ocws_code_free(code);
        return 1;
    }
    printf("d=%zu corrects=%d oracle=%s\n", d, corrects, report.pass ? "pass" : "fail");
    ocws_code_free(code);

    if (ocws_code_parse("n = 3\nbogus\n", &code) != OCWS_STATUS_PARSE_ERROR) {
        return 1;
    }
    printf("error: %s\n", ocws_last_error());
    return 0;
}
