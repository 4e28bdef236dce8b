#include "pcvx/sampling.hpp"

#include <algorithm>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"

namespace pcvx {

std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream, std::uint64_t index) {
    Rng r(seed ^ (0x8b72e2f1640b35c5ULL * (stream + 1)));
    r.next();
    r.state += index * 0x2545f4914f6cdd1dULL;
    return r.next();
}

HRep random_hrep(Rng& rng, int dim, int max_rows) {
    static const int eq_choices[6] = {0, 0, 0, 1, 1, 2};
    int neq = eq_choices[rng.uniform_int(0, 5)];
    if (neq > max_rows) neq = max_rows;
    const int nineq = rng.uniform_int(0, max_rows - neq);

    std::vector<Vec> eq_rows, ineq_rows;
    Vec eq_rhs, ineq_rhs;
    for (int i = 0; i < neq; ++i) {
        eq_rows.push_back(rng.coeff_vec(dim));
        eq_rhs.push_back(rng.coeff());
    }
    for (int i = 0; i < nineq; ++i) {
        ineq_rows.push_back(rng.coeff_vec(dim));
        ineq_rhs.push_back(rng.coeff());
    }
    return make_hrep(dim, Mat::from_rows(std::move(eq_rows), dim), std::move(eq_rhs),
                     Mat::from_rows(std::move(ineq_rows), dim), std::move(ineq_rhs));
}

HRep random_nonempty_hrep(Rng& rng, int dim, int max_rows) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        HRep p = random_hrep(rng, dim, max_rows);
        if (!is_empty(p)) return p;
    }
    throw DomainError("random_nonempty_hrep: rejection sampling exhausted");
}

MultiFn random_multifn(Rng& rng, int nx, int ny, int max_rows, bool require_nonempty) {
    if (!require_nonempty) return make_multifn(nx, ny, random_hrep(rng, nx + ny, max_rows));
    return make_multifn(nx, ny, random_nonempty_hrep(rng, nx + ny, max_rows));
}

PCFunc random_proper_pcfunc(Rng& rng, int n) {
    for (int attempt = 0; attempt < 500; ++attempt) {
        const int npieces = rng.uniform_int(1, 3);
        const int ndom = rng.uniform_int(0, 2);
        std::vector<Vec> rows;
        Vec rhs;
        for (int i = 0; i < npieces; ++i) {
            // t >= a.u + c  becomes  a.u - t <= -c
            Vec row = rng.coeff_vec(n);
            const Rat c = rng.coeff();
            row.push_back(Rat(-1));
            rows.push_back(std::move(row));
            rhs.push_back(-c);
        }
        for (int i = 0; i < ndom; ++i) {
            Vec row = rng.coeff_vec(n);
            row.push_back(Rat(0));
            rows.push_back(std::move(row));
            rhs.push_back(rng.coeff());
        }
        HRep epi = make_hrep(n + 1, Mat::zero(0, n + 1), {}, Mat::from_rows(std::move(rows), n + 1),
                             std::move(rhs));
        PCFunc f = make_pcfunc(n, std::move(epi));
        if (is_proper(f)) return f;  // fails only when the domain rows clash
    }
    throw DomainError("random_proper_pcfunc: rejection sampling exhausted");
}

std::vector<Vec> sample_grid(const VRep& gens, int dim, Rng& rng, int n_random) {
    std::vector<Vec> grid;

    const std::size_t pts = std::min<std::size_t>(gens.points.size(), 12);
    for (std::size_t i = 0; i < gens.points.size(); ++i) grid.push_back(gens.points[i]);
    const Rat half(1, 2);
    for (std::size_t i = 0; i < pts; ++i) {
        for (std::size_t j = i + 1; j < pts; ++j) {
            grid.push_back(scale(half, add(gens.points[i], gens.points[j])));
        }
    }
    const std::size_t ray_base = std::min<std::size_t>(gens.points.size(), 6);
    const std::size_t nrays = std::min<std::size_t>(gens.rays.size(), 6);
    for (std::size_t i = 0; i < ray_base; ++i) {
        for (std::size_t j = 0; j < nrays; ++j) {
            grid.push_back(add(gens.points[i], gens.rays[j]));
            grid.push_back(add(gens.points[i], scale(Rat(2), gens.rays[j])));
        }
    }
    for (int i = 0; i < n_random; ++i) grid.push_back(rng.sample_vec(dim));

    std::sort(grid.begin(), grid.end());
    grid.erase(std::unique(grid.begin(), grid.end()), grid.end());
    return grid;
}

}  // namespace pcvx
