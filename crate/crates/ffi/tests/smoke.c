#include <stdio.h>
#include "flagorbits.h"

int main(void) {
    const char *text[] = {"D:1,inf,1", "D:inf,inf,inf,inf", "D:2,inf,2"};
    FoSignature *sigs[3];
    for (int i = 0; i < 3; i++) {
        if (fo_signature_parse(text[i], &sigs[i]) != FO_STATUS_OK) {
            fprintf(stderr, "%s\n", fo_last_error());
            return 1;
        }
    }
    FoVerdict *v = NULL;
    bool finite = false;
    if (fo_classify((const FoSignature *const *)sigs, 3, &v) != FO_STATUS_OK ||
        fo_verdict_is_finite(v, &finite) != FO_STATUS_OK) {
        fprintf(stderr, "%s\n", fo_last_error());
        return 1;
    }
    fo_verdict_free(v);
    for (int i = 0; i < 3; i++) fo_signature_free(sigs[i]);

    size_t dims[] = {1, 2, 1, 2};
    size_t lens[] = {2, 2};
    uint64_t orbits = 0, points = 0;
    if (fo_enumerate_orbits('A', dims, lens, 2, 2, 1000, &orbits, &points) != FO_STATUS_OK) {
        fprintf(stderr, "%s\n", fo_last_error());
        return 1;
    }
    printf("%s %llu %llu\n", finite ? "finite" : "infinite",
           (unsigned long long)orbits, (unsigned long long)points);
    return 0;
}
