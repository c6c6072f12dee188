#pragma once

#include <cstdint>

namespace tqi {

// Exact Fibonacci numbers with F(1) = F(2) = 1; throws std::overflow_error
// once the value leaves 64 bits (first at n = 94).
std::uint64_t fibonacci(int n);

enum class FibCharge { vacuum, tau };

// Number of fusion trees of n tau anyons with the given total charge:
// F(n-1) for the vacuum and F(n) for tau.
std::uint64_t fusion_tree_count(int n, FibCharge c);

// Literal enumeration of running-charge strings, for cross-checking the
// closed form at small n.
std::uint64_t fusion_tree_count_brute(int n, FibCharge c);

// Fusion space dimensions for an annulus carrying n_inner and n_outer tau
// anyons on its two boundaries, split by the charge threading the hole.
// The two sectors always fill the combined disc space exactly.
struct FibAnnulusDims {
    std::uint64_t vacuum = 0;
    std::uint64_t tau = 0;
    std::uint64_t total = 0;
};

FibAnnulusDims fib_annulus_dims(int n_inner, int n_outer);

double golden_ratio();

// log2(1 + phi^2), the large-annulus limit of log2(total / vacuum).
double fib_invariant_bits();

}  // namespace tqi
