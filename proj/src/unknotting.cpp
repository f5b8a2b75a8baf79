#include "cfk/unknotting.hpp"

#include "cfk/errors.hpp"

#include <algorithm>
#include <cstdlib>
#include <numeric>
#include <string>

namespace cfk {

UnknotStep unknot_step(int p, int q)
{
    if (!(1 < p && p < q) || std::gcd(p, q) != 1)
        throw DomainError("step needs coprime 1 < p < q, got (" + std::to_string(p) + ", " +
                          std::to_string(q) + ")");
    for (int i = 1; 2 * i <= p; ++i) {
        const long iq = static_cast<long>(i) * q;
        const long r = iq % p;
        int sign = 0;
        if (r == 1)
            sign = 1;
        else if (r == p - 1)
            sign = -1;
        else
            continue;
        const long j = (iq - sign) / p;
        if (j <= 0) continue;
        const int p2 = std::abs(p - 2 * i);
        const int q2 = std::abs(static_cast<int>(q - 2 * j));
        return {std::min(p2, q2), std::max(p2, q2), i, static_cast<int>(j), sign};
    }
    throw InternalError("no admissible i <= p/2 for (" + std::to_string(p) + ", " + std::to_string(q) + ")");
}

KpqResult kpq(int p, int q)
{
    KpqResult out;
    const bool terminal = 0 <= p && p <= 1 && q >= 1;
    if (!terminal && (!(1 < p && p < q) || std::gcd(p, q) != 1))
        throw DomainError("k(p,q) needs coprime 0 < p < q");

    while (!(p == 0 || p == 1)) {
        const UnknotStep s = unknot_step(p, q);
        out.trace.push_back({p, q, s.i, s.j, s.sign});
        // Termination and coprimality are checked rather than assumed.
        if (s.p >= p) throw InternalError("recursion failed to decrease p at (" + std::to_string(p) + ", " + std::to_string(q) + ")");
        if (s.p > 1 && std::gcd(s.p, s.q) != 1) throw InternalError("recursion lost coprimality");
        if (s.p > 1 && s.p == s.q) throw InternalError("recursion reached p == q");
        p = s.p;
        q = s.q;
        ++out.k;
    }
    out.trace.push_back({p, q, 0, 0, 0});
    return out;
}

} // namespace cfk
