#include <stdio.h>
#include <string.h>
#include "berger_lab.h"

#define CHECK(cond) do { if (!(cond)) { fprintf(stderr, "failed: %s (%s)\n", #cond, bl_last_error() ? bl_last_error() : ""); return 1; } } while (0)

int main(void) {
    BlSpace *space = NULL;
    BlAlgebra *h0 = NULL;
    BlCurvatureSpace *curv = NULL;
    size_t dim = 0, first = 0, second = 0;
    char *json = NULL;

    CHECK(bl_space_new(1, 1, 1, &space) == BL_STATUS_OK);
    CHECK(bl_space_real_dim(space, &dim) == BL_STATUS_OK && dim == 8);
    CHECK(bl_algebra_new(space, "h0", &h0) == BL_STATUS_OK);
    CHECK(bl_algebra_dim(h0, &dim) == BL_STATUS_OK && dim == 7);
    CHECK(bl_prolongation_dims(h0, &first, &second) == BL_STATUS_OK && first == 4 && second == 0);
    CHECK(bl_curvature_space_new(h0, &curv) == BL_STATUS_OK);
    CHECK(bl_curvature_space_dim(curv, &dim) == BL_STATUS_OK && dim == 1);
    CHECK(bl_berger_report_json(curv, &json) == BL_STATUS_OK);
    CHECK(strstr(json, "\"is_berger\":true") != NULL);
    bl_string_free(json);

    BlAlgebra *bad = NULL;
    CHECK(bl_algebra_new(space, "nosuch", &bad) == BL_STATUS_UNKNOWN_ALGEBRA);
    CHECK(bad == NULL && strstr(bl_last_error(), "nosuch") != NULL);

    bl_curvature_space_free(curv);
    bl_algebra_free(h0);
    bl_space_free(space);
    printf("ok %s\n", bl_version());
    return 0;
}
