// Copyright 2026 The qcalc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* Compiled as C to keep the header honest. */

#include <stdio.h>
#include <string.h>

#include "qcalc/qcalc.h"

#define EXPECT(cond)                                                   \
    do {                                                               \
        if (!(cond)) {                                                 \
            fprintf(stderr, "%s:%d: failed: %s\n", __FILE__, __LINE__, #cond); \
            return 1;                                                  \
        }                                                              \
    } while (0)

int main(void) {
    const double coords[] = {0.0, 0.0, 1.0, 0.0, 1.0, 1.0};
    qcalc_set* set = NULL;
    qcalc_report* report = NULL;
    qcalc_tolerances tol;
    size_t dim = 0;

    EXPECT(qcalc_set_build_polyline(coords, 3, 2, &set) == QCALC_OK);
    EXPECT(qcalc_set_point_count(set) == 3);
    EXPECT(qcalc_k_estimate(set, 1, 0, 0, &report) == QCALC_OK);
    EXPECT(strstr(qcalc_report_json(report), "\"k_hat\": 1.414213562373095") != NULL);
    EXPECT(qcalc_report_passed(report) == 1);
    qcalc_report_free(report);

    qcalc_tolerances_default(&tol);
    EXPECT(qcalc_tolerances_set(&tol, "nope", 1.0) == QCALC_ERR_INVALID_ARGUMENT);
    EXPECT(strlen(qcalc_last_error()) > 0);

    EXPECT(qcalc_clifford_dimension(3, &dim, NULL) == QCALC_OK);
    EXPECT(dim == 16);

    qcalc_set_free(set);
    printf("capi smoke ok (qcalc %s)\n", qcalc_version());
    return 0;
}
