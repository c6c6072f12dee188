#include "tqi/fib.hpp"

#include <cmath>
#include <stdexcept>

namespace tqi {

std::uint64_t fibonacci(int n) {
    if (n < 0) throw std::invalid_argument("fibonacci index must be nonnegative");
    if (n == 0) return 0;
    std::uint64_t a = 0, b = 1;  // F(0), F(1)
    for (int i = 1; i < n; ++i) {
        std::uint64_t next;
        if (__builtin_add_overflow(a, b, &next)) throw std::overflow_error("fibonacci overflow");
        a = b;
        b = next;
    }
    return b;
}

std::uint64_t fusion_tree_count(int n, FibCharge c) {
    if (n < 0) throw std::invalid_argument("anyon count must be nonnegative");
    if (n == 0) return c == FibCharge::vacuum ? 1 : 0;
    return fibonacci(c == FibCharge::vacuum ? n - 1 : n);
}

std::uint64_t fusion_tree_count_brute(int n, FibCharge c) {
    if (n < 0) throw std::invalid_argument("anyon count must be nonnegative");
    if (n > 24) throw std::invalid_argument("brute enumeration capped at 24 anyons");
    if (n == 0) return c == FibCharge::vacuum ? 1 : 0;
    const bool want_tau = (c == FibCharge::tau);
    std::uint64_t count = 0;
    // Bit k of the string is the running charge after fusing anyon k
    // (0 = vacuum, 1 = tau); vacuum times tau can only fuse to tau.
    for (std::uint64_t s = 0; s < (std::uint64_t(1) << n); ++s) {
        if (!(s & 1)) continue;  // the first anyon alone carries tau
        bool ok = true;
        for (int k = 0; k + 1 < n; ++k) {
            bool cur = (s >> k) & 1, nxt = (s >> (k + 1)) & 1;
            if (!cur && !nxt) ok = false;
        }
        if (ok && bool((s >> (n - 1)) & 1) == want_tau) ++count;
    }
    return count;
}

namespace {

std::uint64_t checked_mul(std::uint64_t a, std::uint64_t b) {
    std::uint64_t out;
    if (__builtin_mul_overflow(a, b, &out)) throw std::overflow_error("fusion dimension overflow");
    return out;
}

}  // namespace

FibAnnulusDims fib_annulus_dims(int n_inner, int n_outer) {
    if (n_inner < 1 || n_outer < 1)
        throw std::invalid_argument("each boundary needs at least one anyon");
    FibAnnulusDims dims;
    dims.vacuum = checked_mul(fusion_tree_count(n_inner, FibCharge::vacuum),
                              fusion_tree_count(n_outer, FibCharge::vacuum));
    dims.tau = checked_mul(fusion_tree_count(n_inner, FibCharge::tau),
                           fusion_tree_count(n_outer, FibCharge::tau));
    std::uint64_t sum;
    if (__builtin_add_overflow(dims.vacuum, dims.tau, &sum))
        throw std::overflow_error("fusion dimension overflow");
    dims.total = fibonacci(n_inner + n_outer - 1);
    if (sum != dims.total)
        throw std::logic_error("annulus sectors do not fill the disc space");
    return dims;
}

double golden_ratio() { return (1.0 + std::sqrt(5.0)) / 2.0; }

double fib_invariant_bits() {
    double phi = golden_ratio();
    return std::log2(1.0 + phi * phi);
}

}  // namespace tqi
