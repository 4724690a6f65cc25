/* geng PRUNE hook: reject graphs with an induced K_{1,3}.
 * geng grows graphs one vertex at a time and calls the hook on every
 * intermediate graph, so only claws through the newest vertex need a check. */
#include "gtools.h"

int
clawfree_prune(graph *g, int n, int maxn)
{
    int v = n - 1, c, a, b, d;
    setword nv = g[v];

    /* v as the centre */
    for (a = 0; a < v; ++a) if (ISELEMENT(&nv, a))
        for (b = a + 1; b < v; ++b) if (ISELEMENT(&nv, b) && !ISELEMENT(&g[a], b))
            for (d = b + 1; d < v; ++d)
                if (ISELEMENT(&nv, d) && !ISELEMENT(&g[a], d) && !ISELEMENT(&g[b], d))
                    return 1;

    /* v as a leaf of centre c */
    for (c = 0; c < v; ++c) if (ISELEMENT(&nv, c))
        for (a = 0; a < v; ++a)
        {
            if (a == c || !ISELEMENT(&g[c], a) || ISELEMENT(&nv, a)) continue;
            for (b = a + 1; b < v; ++b)
                if (b != c && ISELEMENT(&g[c], b) && !ISELEMENT(&nv, b) && !ISELEMENT(&g[a], b))
                    return 1;
        }
    return 0;
}
