/* Minimal consumer of the C bindings. Build from the repository root with
 *
 *   cargo build -p weilmax-capi
 *   cc crates/weilmax-capi/examples/demo.c \
 *      -Icrates/weilmax-capi/include \
 *      target/debug/libweilmax_capi.a -lm -o demo
 */
#include <stdio.h>
#include <stdlib.h>

#include "weilmax.h"

static void fail(const char *what) {
    char *msg = wm_last_error_message();
    fprintf(stderr, "%s: %s\n", what, msg ? msg : "unknown error");
    wm_string_free(msg);
    exit(1);
}

int main(void) {
    WmClass *best = NULL;
    if (wm_maximal_class(3, "4", &best) != WM_STATUS_OK)
        fail("maximal class");
    char *label = wm_class_label(best);
    char *points = wm_class_points(best);
    printf("maximal class over F_4: %s with %s points\n", label, points);
    wm_string_free(points);
    wm_string_free(label);
    wm_class_free(best);

    WmScan *scan = NULL;
    if (wm_scan_threefolds("4", &scan) != WM_STATUS_OK)
        fail("scan");
    int n = wm_scan_exceeder_count(scan);
    printf("classes with more points than the best field class: %d\n", n);
    for (int i = 0; i < n; i++) {
        WmClass *exceeder = NULL;
        if (wm_scan_exceeder(scan, (size_t)i, &exceeder) != WM_STATUS_OK)
            fail("exceeder");
        char *tag = wm_class_tag(exceeder);
        char *pts = wm_class_points(exceeder);
        printf("  %s with %s points\n", tag, pts);
        wm_string_free(pts);
        wm_string_free(tag);
        wm_class_free(exceeder);
    }
    wm_scan_free(scan);
    return 0;
}
