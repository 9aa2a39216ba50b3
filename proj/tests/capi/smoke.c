/*
   Copyright 2026 The prfq Authors

   Licensed under the Apache License, Version 2.0 (the "License");
   you may not use this file except in compliance with the License.
   You may obtain a copy of the License at

        http://www.apache.org/licenses/LICENSE-2.0

   Unless required by applicable law or agreed to in writing, software
   distributed under the License is distributed on an "AS IS" BASIS,
   WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
   See the License for the specific language governing permissions and
   limitations under the License.
*/

#include <stdio.h>
#include <string.h>

#include "prfq/prfq.h"

int main(void) {
    const prfq_field* F = NULL;
    prfq_ratfun* f = NULL;
    uint32_t sum = 0;
    int pr = 0;
    char* text = NULL;

    if (prfq_field_of_order(16, &F) != PRFQ_OK) return 1;
    if (prfq_ratfun_parse(F, "x^3", &f) != PRFQ_OK) return 1;
    if (prfq_is_pr(f, PRFQ_PR_HERMITE, &pr) != PRFQ_OK || pr != 0) return 1;
    if (prfq_power_sum(f, 5, PRFQ_SUM_BRUTE, &sum) != PRFQ_OK) return 1;
    if (prfq_ratfun_to_string(f, &text) != PRFQ_OK || strcmp(text, "x^3") != 0) return 1;
    prfq_string_free(text);
    prfq_ratfun_free(f);

    if (prfq_ratfun_parse(F, "x+*", &f) != PRFQ_ERR_PARSE) return 1;
    if (prfq_last_error()[0] == '\0') return 1;
    printf("prfq %s ok\n", prfq_version());
    return 0;
}
