#include "cfk/homology.hpp"

#include <bit>
#include <cstdint>
#include <vector>

namespace cfk {

namespace {

// Rank over F2 of a set of bit vectors, by elimination on the highest set bit.
class F2RankAccumulator {
public:
    explicit F2RankAccumulator(std::size_t dim) : words_((dim + 63) / 64), pivots_(dim) {}

    void insert(std::vector<std::uint64_t> v)
    {
        for (;;) {
            const long top = highest_bit(v);
            if (top < 0) return;
            auto& p = pivots_[static_cast<std::size_t>(top)];
            if (p.empty()) {
                p = std::move(v);
                ++rank_;
                return;
            }
            for (std::size_t i = 0; i < words_; ++i) v[i] ^= p[i];
        }
    }

    std::size_t rank() const noexcept { return rank_; }
    std::size_t words() const noexcept { return words_; }

private:
    static long highest_bit(const std::vector<std::uint64_t>& v)
    {
        for (std::size_t i = v.size(); i-- > 0;)
            if (v[i]) return static_cast<long>(i * 64 + 63 - static_cast<std::size_t>(std::countl_zero(v[i])));
        return -1;
    }

    std::size_t words_;
    std::vector<std::vector<std::uint64_t>> pivots_;
    std::size_t rank_ = 0;
};

} // namespace

std::size_t truncated_dimension(const FreeComplexU& c, std::size_t n)
{
    // Basis u^k x_j (0 <= k < n) at index j*n + k.
    const std::size_t dim = c.size() * n;
    F2RankAccumulator acc(dim);
    for (std::size_t j = 0; j < c.size(); ++j) {
        for (std::size_t k = 0; k < n; ++k) {
            std::vector<std::uint64_t> col(acc.words(), 0);
            for (const auto& t : c.differential[j])
                for (std::size_t e : t.coeff.exponents()) {
                    if (k + e >= n) continue;
                    const std::size_t row = t.target * n + k + e;
                    col[row / 64] ^= std::uint64_t{1} << (row % 64);
                }
            acc.insert(std::move(col));
        }
    }
    // dim H = dim ker - rank = (dim - rank) - rank
    return dim - 2 * acc.rank();
}

} // namespace cfk
