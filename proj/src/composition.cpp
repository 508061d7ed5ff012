#include "latwalk/composition.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace latwalk {

Composition::Composition(std::vector<int> p) : parts(std::move(p)) {
    if (parts.empty()) throw std::invalid_argument("Composition: needs at least one slot");
    for (int v : parts)
        if (v < 0) throw std::invalid_argument("Composition: negative part");
}

int Composition::total() const { return std::accumulate(parts.begin(), parts.end(), 0); }

bool Composition::all_positive() const {
    return std::all_of(parts.begin(), parts.end(), [](int v) { return v >= 1; });
}

std::vector<int> Composition::class_key() const {
    std::vector<int> key = parts;
    std::sort(key.begin(), key.end(), std::greater<int>());
    return key;
}

namespace {

void comp_rec(int remaining, int pos, int min_part, std::vector<int>& buf,
              const std::function<void(const std::vector<int>&)>& fn) {
    int slots = static_cast<int>(buf.size());
    if (pos == slots - 1) {
        if (remaining >= min_part) {
            buf[pos] = remaining;
            fn(buf);
        }
        return;
    }
    int hi = remaining - min_part * (slots - pos - 1);
    for (int v = min_part; v <= hi; ++v) {
        buf[pos] = v;
        comp_rec(remaining - v, pos + 1, min_part, buf, fn);
    }
}

} // namespace

void for_each_composition(int total, int slots,
                          const std::function<void(const std::vector<int>&)>& fn) {
    if (total < 0 || slots < 1) throw std::invalid_argument("for_each_composition: bad arguments");
    std::vector<int> buf(slots);
    comp_rec(total, 0, 0, buf, fn);
}

void for_each_positive_composition(int total, int slots,
                                   const std::function<void(const std::vector<int>&)>& fn) {
    if (total < 0 || slots < 1)
        throw std::invalid_argument("for_each_positive_composition: bad arguments");
    if (total < slots) return;
    std::vector<int> buf(slots);
    comp_rec(total, 0, 1, buf, fn);
}

bool is_suffix_dominant(const std::vector<int>& parts) {
    int k = static_cast<int>(parts.size());
    int suffix = 0;
    for (int j = k; j >= 1; --j) {
        suffix += parts[j - 1];
        if (suffix < k - j + 1) return false;
    }
    return true;
}

namespace {

// builds parts from the last slot toward the first so the dominance bound
// can prune as soon as a suffix falls short; `behind` is the sum already
// placed at positions pos+1..k-1
void dominant_rec(int remaining, int pos, int behind, std::vector<int>& buf,
                  const std::function<void(const std::vector<int>&)>& fn) {
    int k = static_cast<int>(buf.size());
    if (pos == 0) {
        buf[0] = remaining; // bound at j = 1 is total >= k, ensured by the caller
        fn(buf);
        return;
    }
    int need = k - pos; // suffix starting at 0-based pos must reach this
    for (int v = std::max(0, need - behind); v <= remaining; ++v) {
        buf[pos] = v;
        dominant_rec(remaining - v, pos - 1, behind + v, buf, fn);
    }
}

} // namespace

void for_each_suffix_dominant_composition(
    int total, int slots, const std::function<void(const std::vector<int>&)>& fn) {
    if (total < 0 || slots < 1)
        throw std::invalid_argument("for_each_suffix_dominant_composition: bad arguments");
    if (total < slots) return; // j = 1 bound cannot hold
    std::vector<int> buf(slots);
    dominant_rec(total, slots - 1, 0, buf, fn);
}

int SignSequence::plus_count() const {
    return static_cast<int>(std::count(eps.begin(), eps.end(), +1));
}
int SignSequence::minus_count() const {
    return static_cast<int>(std::count(eps.begin(), eps.end(), -1));
}
int SignSequence::zero_count() const {
    return static_cast<int>(std::count(eps.begin(), eps.end(), 0));
}

void for_each_sign_sequence(int k, const std::function<void(const SignSequence&)>& fn) {
    if (k < 0) throw std::invalid_argument("for_each_sign_sequence: negative length");
    SignSequence s;
    s.eps.assign(k, -1);
    while (true) {
        fn(s);
        int i = k - 1;
        while (i >= 0 && s.eps[i] == 1) s.eps[i--] = -1;
        if (i < 0) break;
        ++s.eps[i];
    }
}

} // namespace latwalk
