#pragma once

#include <cstdint>

#include "pcvx/convex_function.hpp"
#include "pcvx/multifunction.hpp"
#include "pcvx/polyhedron.hpp"

namespace pcvx {

/// Deterministic splitmix64 stream; identical across platforms, unlike the
/// standard distributions.
struct Rng {
    std::uint64_t state;

    explicit Rng(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [lo, hi].
    int uniform_int(int lo, int hi) {
        return lo + static_cast<int>(next() % static_cast<std::uint64_t>(hi - lo + 1));
    }

    /// Small integer coefficient in {-3, ..., 3}.
    Rat coeff() { return Rat(uniform_int(-3, 3)); }

    /// Rational in [-3, 3] with denominator at most 8.
    Rat sample_coord() {
        const int q = uniform_int(1, 8);
        const int p = uniform_int(-3 * q, 3 * q);
        Rat r(p, q);
        r.canonicalize();
        return r;
    }

    Vec coeff_vec(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = coeff();
        return v;
    }

    Vec sample_vec(int dim) {
        Vec v(dim);
        for (int i = 0; i < dim; ++i) v[i] = sample_coord();
        return v;
    }
};

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index);

/// Random HRep with small integer coefficients; at most `max_rows` rows split
/// between a small equality block and inequalities. May be empty.
HRep random_hrep(Rng& rng, int dim, int max_rows);

/// Rejection-sampled nonempty instance.
HRep random_nonempty_hrep(Rng& rng, int dim, int max_rows);

MultiFn random_multifn(Rng& rng, int nx, int ny, int max_rows, bool require_nonempty);

/// A proper objective: the maximum of a few affine pieces, optionally
/// restricted to a polyhedral domain over the arguments.
PCFunc random_proper_pcfunc(Rng& rng, int n);

/// The pointwise sampling grid: generator points, their pairwise midpoints,
/// points displaced along each ray by 1 and 2, plus `n_random` seeded
/// rational points. Midpoint and displacement fans are capped to keep grids
/// at desk scale.
std::vector<Vec> sample_grid(const VRep& gens, int dim, Rng& rng, int n_random);

}  // namespace pcvx
