#pragma once

#include <cstddef>
#include <initializer_list>
#include <string>
#include <vector>

namespace cfk {

// Non-increasing sequence n_1 >= n_2 >= ... >= n_k > 0 of torsion exponents,
// one per cyclic summand F2[u]/(u^n_i).
class TorsionSequence {
public:
    TorsionSequence() = default;
    // Throws DomainError unless entries are positive and non-increasing.
    explicit TorsionSequence(std::vector<int> entries);
    TorsionSequence(std::initializer_list<int> entries) : TorsionSequence(std::vector<int>(entries)) {}

    // Any order; entries must be positive.
    static TorsionSequence from_unsorted(std::vector<int> entries);

    const std::vector<int>& entries() const noexcept { return entries_; }
    std::size_t size() const noexcept { return entries_.size(); }
    bool empty() const noexcept { return entries_.empty(); }
    // Largest entry, 0 for the empty sequence.
    int leading() const noexcept { return entries_.empty() ? 0 : entries_.front(); }

    // Subtract ell from every entry, dropping the ones that become non-positive.
    TorsionSequence minus(int ell) const;
    // Every entry repeated `copies` times.
    TorsionSequence repeated(std::size_t copies) const;

    friend bool operator==(const TorsionSequence&, const TorsionSequence&) = default;

private:
    std::vector<int> entries_;
};

// a >= b: |a| >= |b| and a_i >= b_i for i <= |b|.
bool dominates(const TorsionSequence& a, const TorsionSequence& b);

// Least ell >= 0 with a >= b - ell and b >= a - ell.
int distance(const TorsionSequence& a, const TorsionSequence& b);

std::string to_string(const TorsionSequence& n);

} // namespace cfk
