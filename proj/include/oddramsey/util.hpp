#pragma once

// Small shared helpers: exact combinatorial counts, deterministic RNG
// utilities, and iteration over subsets / set partitions.

#include <algorithm>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <vector>

namespace oddramsey {

inline std::uint64_t factorial(unsigned n) {
    if (n > 20) throw std::overflow_error("factorial(" + std::to_string(n) + ") overflows u64");
    std::uint64_t r = 1;
    for (unsigned i = 2; i <= n; ++i) r *= i;
    return r;
}

inline std::uint64_t binomial(unsigned n, unsigned k) {
    if (k > n) return 0;
    if (k > n - k) k = n - k;
    unsigned __int128 r = 1;
    for (unsigned i = 1; i <= k; ++i) {
        r = r * (n - k + i) / i;
        if (r > ~std::uint64_t{0}) throw std::overflow_error("binomial overflow");
    }
    return static_cast<std::uint64_t>(r);
}

// n^e with overflow check.
inline std::uint64_t upow(std::uint64_t n, unsigned e) {
    unsigned __int128 r = 1;
    for (unsigned i = 0; i < e; ++i) {
        r *= n;
        if (r > ~std::uint64_t{0}) throw std::overflow_error("upow overflow");
    }
    return static_cast<std::uint64_t>(r);
}

// Thrown when an enumeration would exceed its configured work guard.
struct GuardExceeded : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational, used for the density parameter d (numerator/denominator).
struct ExactRatio {
    std::uint64_t num = 0;
    std::uint64_t den = 1;
    long double value() const { return static_cast<long double>(num) / static_cast<long double>(den); }
};

using Rng = std::mt19937_64;

// Unbiased uniform draw from [0, bound). Rejection sampling keeps the
// result independent of the standard library's distribution internals.
inline std::uint64_t uniform_below(Rng& rng, std::uint64_t bound) {
    if (bound == 0) throw std::invalid_argument("uniform_below: empty range");
    const std::uint64_t limit = ~std::uint64_t{0} - (~std::uint64_t{0} % bound);
    std::uint64_t x;
    do { x = rng(); } while (x >= limit);
    return x % bound;
}

template <typename T>
void shuffle_vec(std::vector<T>& v, Rng& rng) {
    for (std::size_t i = v.size(); i > 1; --i) {
        std::size_t j = static_cast<std::size_t>(uniform_below(rng, i));
        std::swap(v[i - 1], v[j]);
    }
}

// Uniform k-subset of {0,..,n-1}, returned sorted.
inline std::vector<int> sample_subset(Rng& rng, int n, int k) {
    // Floyd's algorithm
    std::vector<int> out;
    std::vector<bool> in(static_cast<std::size_t>(n), false);
    for (int j = n - k; j < n; ++j) {
        int t = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(j) + 1));
        if (in[static_cast<std::size_t>(t)]) t = j;
        in[static_cast<std::size_t>(t)] = true;
        out.push_back(t);
    }
    std::sort(out.begin(), out.end());
    return out;
}

// Calls fn(idx) for every k-subset of {0,..,n-1} in lexicographic order.
template <typename Fn>
void for_each_subset(int n, int k, Fn&& fn) {
    if (k < 0 || k > n) return;
    std::vector<int> idx(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) idx[static_cast<std::size_t>(i)] = i;
    while (true) {
        fn(const_cast<const std::vector<int>&>(idx));
        int i = k - 1;
        while (i >= 0 && idx[static_cast<std::size_t>(i)] == n - k + i) --i;
        if (i < 0) break;
        ++idx[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j) idx[static_cast<std::size_t>(j)] = idx[static_cast<std::size_t>(j - 1)] + 1;
    }
}

// Calls fn(rgs, nblocks) for every set partition of {0,..,m-1}, encoded as a
// restricted growth string (rgs[i] = block of element i).
template <typename Fn>
void for_each_partition(int m, Fn&& fn) {
    std::vector<int> rgs(static_cast<std::size_t>(m), 0);
    auto rec = [&](auto&& self, int i, int maxb) -> void {
        if (i == m) {
            fn(const_cast<const std::vector<int>&>(rgs), maxb + 1);
            return;
        }
        for (int b = 0; b <= maxb + 1; ++b) {
            rgs[static_cast<std::size_t>(i)] = b;
            self(self, i + 1, std::max(maxb, b));
        }
    };
    if (m == 0) return;
    rec(rec, 0, -1);
}

}  // namespace oddramsey
