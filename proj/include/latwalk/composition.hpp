#pragma once

#include <functional>
#include <vector>

namespace latwalk {

// Ordered slot weights (l_1, ..., l_k), every part >= 0, k >= 1. A zero part
// is a slot whose weight factor is absent but which still participates in
// the slot count k of the surrounding sums.
struct Composition {
    std::vector<int> parts;

    explicit Composition(std::vector<int> p);

    int slots() const { return static_cast<int>(parts.size()); }
    int total() const;
    bool all_positive() const;

    // sorted descending: the partition underlying the permutation class
    std::vector<int> class_key() const;
};

// weak compositions of total into exactly `slots` parts >= 0
void for_each_composition(int total, int slots,
                          const std::function<void(const std::vector<int>&)>& fn);

// compositions with every part >= 1
void for_each_positive_composition(int total, int slots,
                                   const std::function<void(const std::vector<int>&)>& fn);

// sum_{i >= j} parts[i-1] >= k - j + 1 for every j = 1..k. Exactly the
// compositions whose product of partial-sum powers contains a monomial
// covering every sign variable at least once (Hall's condition on the
// prefix-shaped feeding sets), hence the ones with a nonvanishing
// sign-sequence weight.
bool is_suffix_dominant(const std::vector<int>& parts);
void for_each_suffix_dominant_composition(int total, int slots,
                                          const std::function<void(const std::vector<int>&)>& fn);

// sign sequences eps in {-1, 0, +1}^k
struct SignSequence {
    std::vector<int> eps;
    int plus_count() const;
    int minus_count() const;
    int zero_count() const;
};
void for_each_sign_sequence(int k, const std::function<void(const SignSequence&)>& fn);

} // namespace latwalk
