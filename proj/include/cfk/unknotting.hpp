#pragma once

// Crossing-resolution recursion (p,q) -> (p-2i, q-2j) with iq = jp +/- 1,
// and the number of steps k(p,q) it takes to reach p in {0, 1}.

#include <vector>

namespace cfk {

struct UnknotStep {
    int p = 0; // normalized result: p <= q, both non-negative
    int q = 0;
    int i = 0;
    int j = 0;
    int sign = 0; // i*q = j*p + sign

    friend bool operator==(const UnknotStep&, const UnknotStep&) = default;
};

// Least positive i <= p/2 with i*q = j*p +/- 1 for a positive j. When both
// signs work for the minimal i (p <= 2), +1 is taken.
// Requires coprime 1 < p < q.
UnknotStep unknot_step(int p, int q);

struct TraceEntry {
    int p = 0;
    int q = 0;
    int i = 0; // zero on the terminal entry
    int j = 0;
    int sign = 0;

    friend bool operator==(const TraceEntry&, const TraceEntry&) = default;
};

struct KpqResult {
    int k = 0;
    // One entry per visited pair; the last one is the terminal pair (p in {0,1}).
    std::vector<TraceEntry> trace;
};

// Accepts coprime 1 < p < q, or a terminal pair 0 <= p <= 1 <= q (k = 0).
KpqResult kpq(int p, int q);

} // namespace cfk
