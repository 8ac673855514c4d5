#include <math.h>
#include <stdio.h>

#include "pentamod.h"

int main(void) {
    PentamodSolid *solid = NULL;
    if (pentamod_solid_new(7, &solid) != PENTAMOD_STATUS_UNSUPPORTED_SOLID) return 1;
    char msg[128];
    if (pentamod_last_error_message(msg, sizeof msg) == 0) return 2;

    if (pentamod_solid_new(3, &solid) != PENTAMOD_STATUS_OK) return 3;
    PentamodMembership m;
    if (pentamod_check(solid, PENTAMOD_CHART_M, -0.17, -0.17, &m) != PENTAMOD_STATUS_OK) return 4;
    if (!m.analytic || !m.oracle || m.region != 1) return 5;

    PentamodAreas areas;
    if (pentamod_areas(solid, &areas) != PENTAMOD_STATUS_OK) return 6;
    if (fabs(areas.total_over_pi - 0.8600517493) > 1e-8) return 7;

    PentamodCurvePoint p;
    if (pentamod_gamma_point(solid, PENTAMOD_CURVE_GAMMA_A, 2.0 * M_PI / 3.0, &p) != PENTAMOD_STATUS_OK) return 8;
    if (fabs(p.r - sqrt(0.5)) > 1e-12) return 9;

    pentamod_solid_free(solid);
    printf("ok %s\n", pentamod_version());
    return 0;
}
