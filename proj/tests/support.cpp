#include "support.hpp"

#include "cfk/torus.hpp"

#include <algorithm>
#include <stdexcept>

namespace cfk::testing {

PolyU random_poly_u(Rng& rng, int max_degree)
{
    std::vector<std::size_t> exps;
    for (int e = 0; e <= max_degree; ++e)
        if (uniform(rng, 0, 1)) exps.push_back(static_cast<std::size_t>(e));
    return PolyU::from_exponents(exps);
}

PolyUW random_poly_uw(Rng& rng, int max_exp, int max_terms)
{
    std::vector<MonomialUW> terms;
    const int n = uniform(rng, 0, max_terms);
    for (int i = 0; i < n; ++i)
        terms.push_back({static_cast<std::uint32_t>(uniform(rng, 0, max_exp)),
                         static_cast<std::uint32_t>(uniform(rng, 0, max_exp))});
    return PolyUW::from_terms(std::move(terms));
}

MatrixU random_matrix(Rng& rng, std::size_t rows, std::size_t cols, int max_degree, double density)
{
    MatrixU m(rows, cols);
    std::bernoulli_distribution fill(density);
    for (std::size_t r = 0; r < rows; ++r)
        for (std::size_t c = 0; c < cols; ++c)
            if (fill(rng)) m.at(r, c) = random_poly_u(rng, max_degree);
    return m;
}

FreeComplexUW random_staircase(Rng& rng, int max_pairs, int max_gap)
{
    const int pairs = uniform(rng, 0, max_pairs);
    std::vector<int> b;
    for (int i = 0; i < 2 * pairs; ++i) b.push_back(uniform(rng, 1, max_gap));
    return staircase_from_gaps("S", b);
}

FreeComplexUW box_complex(int k, int maslov, int alexander, const std::string& prefix)
{
    FreeComplexUW c;
    c.name = "B" + std::to_string(k);
    const auto uk = static_cast<std::uint32_t>(k);
    const auto a = c.add_generator({prefix + "a", maslov, alexander});
    const auto b = c.add_generator({prefix + "b", maslov - 1 + 2 * k, alexander + k});
    const auto cc = c.add_generator({prefix + "c", maslov - 1, alexander - k});
    const auto e = c.add_generator({prefix + "e", maslov - 2 + 2 * k, alexander});
    c.add_arrow(a, b, PolyUW::monomial(uk, 0));
    c.add_arrow(a, cc, PolyUW::monomial(0, uk));
    c.add_arrow(b, e, PolyUW::monomial(0, uk));
    c.add_arrow(cc, e, PolyUW::monomial(uk, 0));
    return c;
}

FreeComplexUW direct_sum(const FreeComplexUW& a, const FreeComplexUW& b)
{
    FreeComplexUW out = a;
    out.name = a.name + "+" + b.name;
    const std::size_t shift = a.size();
    for (const auto& g : b.generators) out.add_generator({"r." + g.id, g.maslov, g.alexander});
    for (std::size_t i = 0; i < b.size(); ++i)
        for (const auto& t : b.differential[i]) out.add_arrow(shift + i, shift + t.target, t.coeff);
    return out;
}

FreeComplexUW random_complex(Rng& rng, std::size_t max_generators)
{
    for (;;) {
        FreeComplexUW c;
        switch (uniform(rng, 0, 3)) {
        case 0:
            c = random_staircase(rng, 9, 4);
            break;
        case 1:
            c = box_complex(uniform(rng, 1, 4), uniform(rng, -3, 3), uniform(rng, -3, 3));
            break;
        case 2:
            c = direct_sum(random_staircase(rng, 4, 4),
                           box_complex(uniform(rng, 1, 4), uniform(rng, -3, 3), uniform(rng, -3, 3)));
            break;
        default: {
            const auto a = random_staircase(rng, 2, 3);
            const auto b = uniform(rng, 0, 1) ? random_staircase(rng, 2, 3)
                                              : box_complex(uniform(rng, 1, 3), 0, 0);
            c = tensor(a, b);
        }
        }
        if (c.size() <= max_generators) return c;
    }
}

int max_torsion_by_truncation(const FreeComplexU& c, int search_limit)
{
    std::vector<long> step;
    long prev = 0;
    for (int n = 1; n <= search_limit + 1; ++n) {
        const long d = static_cast<long>(truncated_dimension(c, static_cast<std::size_t>(n)));
        step.push_back(d - prev);
        prev = d;
    }
    const long free = step.back();
    int best = 0;
    for (int n = 1; n <= search_limit; ++n)
        if (step[static_cast<std::size_t>(n - 1)] > free) best = n;
    if (step[static_cast<std::size_t>(search_limit - 1)] > free)
        throw std::logic_error("search limit below the largest torsion order");
    return best;
}

} // namespace cfk::testing
