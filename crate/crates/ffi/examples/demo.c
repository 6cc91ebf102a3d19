#include <stdio.h>

#include "eudoxus.h"

int main(void) {
    EudoxusReal *r2 = NULL, *sq = NULL;
    char *text = NULL;

    if (eudoxus_parse("cf[1;(2)*]", 64, &r2) != EUDOXUS_STATUS_OK) {
        fprintf(stderr, "%s\n", eudoxus_last_error());
        return 1;
    }
    eudoxus_mul(r2, r2, &sq);
    eudoxus_to_decimal(sq, 20, &text);
    printf("sqrt2 * sqrt2 = %s\n", text);
    eudoxus_string_free(text);

    EudoxusReal *diff = NULL, *minus_two = NULL;
    eudoxus_from_int(-2, &minus_two);
    eudoxus_add(sq, minus_two, &diff);
    int sign = 0;
    if (eudoxus_sign(diff, 40, &sign) == EUDOXUS_STATUS_INCONCLUSIVE)
        printf("sign of sqrt2 * sqrt2 - 2: %s\n", eudoxus_last_error());
    eudoxus_real_free(diff);
    eudoxus_real_free(minus_two);

    eudoxus_real_free(sq);
    eudoxus_real_free(r2);
    return 0;
}
