#ifndef GIE_RANDOM_HPP
#define GIE_RANDOM_HPP

#include <gie/action.hpp>

#include <cstdint>
#include <random>

namespace gie {

// Deterministic stream of small rationals p/q, p in [-3, 3], q in [1, 3].
// Draws use plain modular reduction of mt19937_64 output, so sequences are
// identical across standard libraries.
class RationalStream {
public:
    explicit RationalStream(std::uint64_t seed) : engine_(seed) {}

    Scalar next();
    // Uniform integer in [lo, hi].
    long next_int(long lo, long hi);
    RatMatrix matrix(int rows, int cols);
    RatMatrix invertible(int n);

private:
    std::mt19937_64 engine_;
};

// Random action with every block populated; a0 is zero.
ActionSpec random_spec(RationalStream& rng, int n);

// Random spec whose n-th closed form, brute force path and inverse (where
// applicable) are all defined; redraws until the preconditions hold.
ActionSpec random_regular_spec(RationalStream& rng, int n);

// Random spec satisfying the reduction precondition: A2_nn = 1 and all other
// coefficients touching index n vanish.
ActionSpec random_reducible_spec(RationalStream& rng, int n);

} // namespace gie

#endif
