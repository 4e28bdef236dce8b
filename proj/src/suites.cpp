#include "pcvx/suites.hpp"

#include <array>
#include <atomic>
#include <chrono>
#include <map>
#include <sstream>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "pcvx/convex_function.hpp"
#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"
#include "pcvx/multifunction.hpp"
#include "pcvx/oracle.hpp"
#include "pcvx/polyhedron.hpp"
#include "pcvx/relint.hpp"
#include "pcvx/sampling.hpp"

namespace pcvx {

namespace {

struct InstanceReport {
    std::string message;
    std::array<int, 3> value_tags{0, 0, 0};  // finite, +inf, -inf sightings
};

bool fail(InstanceReport& rep, const std::string& msg) {
    rep.message = msg;
    return false;
}

// --- criterion 1: representation round trip -------------------------------

bool roundtrip_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int dim = rng.uniform_int(1, 4);
    const HRep p = random_hrep(rng, dim, 8);

    const VRep v = h_to_v(p);
    const HRep back = v_to_h(v);
    if (!set_equal(p, back)) return fail(rep, "v_to_h(h_to_v(P)) differs from P");

    if (dim <= 3 && p.eq_A.nrows + p.ineq_C.nrows <= 6) {
        const VRep ref = oracle::enumerate_basic_solutions(p);
        if (!set_equal(back, v_to_h(ref))) {
            return fail(rep, "h_to_v disagrees with basic-solution enumeration");
        }
    }
    return true;
}

// --- criterion 2: projection soundness -------------------------------------

bool projection_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int dim = 4;
    const HRep p = random_hrep(rng, dim, 8);

    CoordSet keep;
    const int a = rng.uniform_int(0, dim - 2);
    const int b = rng.uniform_int(a + 1, dim - 1);
    keep = {a, b};

    const HRep q = project(p, keep);
    const std::vector<Vec> grid = sample_grid(h_to_v(q), 2, rng, 16);
    for (const Vec& x : grid) {
        const bool direct = member(q, x);
        const bool lifted = oracle::lifted_member_oracle(p, keep, x);
        if (direct != lifted) {
            return fail(rep, "projection membership mismatch at " + vec_to_string(x));
        }
    }
    return true;
}

// --- criterion 3: composition ----------------------------------------------

bool compose_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int nx = rng.uniform_int(1, 2);
    const int nmid = rng.uniform_int(1, 2);
    const int nz = rng.uniform_int(1, 2);
    const MultiFn f = random_multifn(rng, nx, nmid, 5, false);
    const MultiFn g = random_multifn(rng, nmid, nz, 5, false);

    const MultiFn gf = compose(g, f);
    const std::vector<Vec> grid = sample_grid(h_to_v(gf.graph), nx + nz, rng, 16);
    for (const Vec& xz : grid) {
        const Vec x(xz.begin(), xz.begin() + nx);
        const Vec z(xz.begin() + nx, xz.end());
        const bool direct = member(gf.graph, xz);
        const bool staged = oracle::compose_member_oracle(f, g, x, z);
        if (direct != staged) {
            return fail(rep, "composition membership mismatch at " + vec_to_string(xz));
        }
    }
    return true;
}

// --- criterion 4: sum -------------------------------------------------------

bool sum_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int nx = rng.uniform_int(1, 2);
    const int ny = rng.uniform_int(1, 2);
    const MultiFn f1 = random_multifn(rng, nx, ny, 5, false);
    const MultiFn f2 = random_multifn(rng, nx, ny, 5, false);

    const MultiFn s = sum(f1, f2);
    const std::vector<Vec> grid = sample_grid(h_to_v(s.graph), nx + ny, rng, 16);
    for (const Vec& xz : grid) {
        const Vec x(xz.begin(), xz.begin() + nx);
        const Vec z(xz.begin() + nx, xz.end());
        const bool direct = member(s.graph, xz);
        const bool joint = oracle::sum_member_oracle(f1, f2, x, z);
        if (direct != joint) return fail(rep, "sum membership mismatch at " + vec_to_string(xz));
    }

    const HRep dom_sum = domain(s);
    const HRep dom_both = intersect(domain(f1), domain(f2));
    if (!set_equal(dom_sum, dom_both)) return fail(rep, "dom(F1+F2) differs from dom F1 ∩ dom F2");
    return true;
}

// --- criterion 5: optimal value function ------------------------------------

bool optval_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int nx = rng.uniform_int(1, 2);
    const int ny = rng.uniform_int(1, 2);
    const PCFunc phi = random_proper_pcfunc(rng, nx + ny);
    const MultiFn f = random_multifn(rng, nx, ny, 5, false);

    const PCFunc mu = optimal_value_fn(phi, f);  // construction validates epi mu

    const std::vector<Vec> grid = sample_grid(h_to_v(domain(f)), nx, rng, 16);
    for (const Vec& x : grid) {
        const ExtReal direct = evaluate(mu, x);
        const ExtReal ref = oracle::optval_oracle(phi, f, x);
        if (!(direct == ref)) {
            return fail(rep, "mu(" + vec_to_string(x) + ") = " + extreal_to_string(direct) +
                                 " but the direct LP gives " + extreal_to_string(ref));
        }
        switch (direct.tag) {
            case ExtReal::Tag::Finite:
                rep.value_tags[0]++;
                break;
            case ExtReal::Tag::PlusInf:
                rep.value_tags[1]++;
                break;
            case ExtReal::Tag::MinusInf:
                rep.value_tags[2]++;
                break;
        }
        if (direct.is_finite()) {
            if (is_empty(solution_map(phi, f, x))) {
                return fail(rep, "finite value but empty solution set at " + vec_to_string(x));
            }
        }
    }
    return true;
}

// --- criterion 6: relative interior formula ---------------------------------

bool relint_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int dim = rng.uniform_int(1, 3);
    const HRep p = random_nonempty_hrep(rng, dim, 6);

    const std::vector<Vec> grid = sample_grid(h_to_v(p), dim, rng, 16);
    for (const Vec& x : grid) {
        const bool rm = ri_member(p, x);
        if (!member(p, x)) {
            if (rm) return fail(rep, "ri_member true outside the set at " + vec_to_string(x));
            continue;
        }
        if (rm != oracle::iri_member_oracle(p, x)) {
            return fail(rep, "ri formula disagrees with iri definition at " + vec_to_string(x));
        }
    }

    const Vec w = relint_witness(p);
    if (!ri_member(p, w)) return fail(rep, "relative interior witness rejected");
    return true;
}

// --- criterion 7: graph decomposition ---------------------------------------

bool ri_graph_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int nx = rng.uniform_int(1, 3);
    const int ny = rng.uniform_int(1, 3);
    const MultiFn f = random_multifn(rng, nx, ny, 6, true);

    std::vector<Vec> grid = sample_grid(h_to_v(f.graph), nx + ny, rng, 8);
    if (grid.size() > 24) grid.resize(24);
    for (const Vec& xy : grid) {
        const Vec x(xy.begin(), xy.begin() + nx);
        const Vec y(xy.begin() + nx, xy.end());
        const bool whole = ri_member(f.graph, xy);
        const bool split = ri_graph_member_decomposed(f, x, y);
        if (whole != split) {
            return fail(rep, "graph relative interior decomposition mismatch at " + vec_to_string(xy));
        }
    }
    return true;
}

// --- criterion 8: linear image ----------------------------------------------

bool linimg_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int n = rng.uniform_int(1, 3);
    const int m = rng.uniform_int(1, 3);
    const HRep d = random_hrep(rng, n, 6);
    Mat t = Mat::zero(m, n);
    for (int i = 0; i < m; ++i) t.rows[i] = rng.coeff_vec(n);

    const HRep img = linear_image(t, d);
    const std::vector<Vec> grid = sample_grid(h_to_v(img), m, rng, 16);
    for (const Vec& y : grid) {
        const bool direct = member(img, y);
        const bool lifted = oracle::linear_image_member_oracle(t, d, y);
        if (direct != lifted) {
            return fail(rep, "linear image membership mismatch at " + vec_to_string(y));
        }
    }
    return true;
}

// --- criterion 9: LP engine vs vertex enumeration ---------------------------

bool lp_instance(std::uint64_t seed, InstanceReport& rep) {
    Rng rng(seed);
    const int dim = rng.uniform_int(1, 3);

    HRep p = hrep_universe(dim);
    VRep gens;
    bool found = false;
    for (int attempt = 0; attempt < 200 && !found; ++attempt) {
        if (rng.uniform_int(0, 1) == 0) {
            // A box plus a few extra cuts always stays bounded.
            std::vector<Vec> rows;
            Vec rhs;
            for (int j = 0; j < dim; ++j) {
                const int lo = rng.uniform_int(-3, 0);
                const int hi = rng.uniform_int(lo, 3);
                Vec up = zero_vec(dim), down = zero_vec(dim);
                up[j] = 1;
                down[j] = -1;
                rows.push_back(up);
                rhs.push_back(Rat(hi));
                rows.push_back(down);
                rhs.push_back(Rat(-lo));
            }
            const int extra = rng.uniform_int(0, 6 - 2 * dim >= 0 ? 6 - 2 * dim : 0);
            for (int i = 0; i < extra; ++i) {
                rows.push_back(rng.coeff_vec(dim));
                rhs.push_back(rng.coeff());
            }
            p = make_hrep(dim, Mat::zero(0, dim), {}, Mat::from_rows(std::move(rows), dim), std::move(rhs));
        } else {
            p = random_hrep(rng, dim, 6);
        }
        gens = oracle::enumerate_basic_solutions(p);
        found = !gens.points.empty() && gens.rays.empty() && gens.lineality.empty();
    }
    if (!found) return fail(rep, "no bounded feasible instance generated");

    const Vec c = rng.coeff_vec(dim);
    const LPResult lo = solve_lp(c, p, Sense::Min);
    const LPResult hi = solve_lp(c, p, Sense::Max);
    if (lo.status != LPStatus::Optimal || hi.status != LPStatus::Optimal) {
        return fail(rep, "bounded instance not reported Optimal");
    }

    Rat best_min = dot(c, gens.points[0]);
    Rat best_max = best_min;
    for (const Vec& u : gens.points) {
        const Rat v = dot(c, u);
        if (v < best_min) best_min = v;
        if (v > best_max) best_max = v;
    }
    if (*lo.value != best_min) return fail(rep, "simplex minimum differs from best vertex value");
    if (*hi.value != best_max) return fail(rep, "simplex maximum differs from best vertex value");
    if (!member(p, *lo.point) || dot(c, *lo.point) != *lo.value) {
        return fail(rep, "optimal point infeasible or value not attained");
    }
    return true;
}

using InstanceFn = bool (*)(std::uint64_t, InstanceReport&);

struct SuiteInfo {
    const char* name;
    InstanceFn fn;
    int default_count;
    std::uint64_t stream;
};

const std::array<SuiteInfo, 9>& suite_table() {
    static const std::array<SuiteInfo, 9> table = {{
        {"roundtrip", roundtrip_instance, 200, 1},
        {"projection", projection_instance, 200, 2},
        {"compose", compose_instance, 100, 3},
        {"sum", sum_instance, 100, 4},
        {"optval", optval_instance, 100, 5},
        {"relint", relint_instance, 200, 6},
        {"ri-graph", ri_graph_instance, 100, 7},
        {"linimg", linimg_instance, 100, 8},
        {"lp", lp_instance, 300, 9},
    }};
    return table;
}

const SuiteInfo* find_suite(const std::string& name) {
    for (const SuiteInfo& s : suite_table()) {
        if (name == s.name) return &s;
    }
    return nullptr;
}

}  // namespace

const std::vector<std::string>& suite_names() {
    static const std::vector<std::string> names = [] {
        std::vector<std::string> n;
        for (const SuiteInfo& s : suite_table()) n.push_back(s.name);
        return n;
    }();
    return names;
}

bool is_suite(const std::string& name) { return find_suite(name) != nullptr; }

int suite_default_count(const std::string& name) {
    const SuiteInfo* s = find_suite(name);
    if (!s) throw DomainError("unknown suite: " + name);
    return s->default_count;
}

SuiteResult run_suite(const std::string& name, std::uint64_t seed, int count, int jobs) {
    const SuiteInfo* info = find_suite(name);
    if (!info) throw DomainError("unknown suite: " + name);
    if (count <= 0) count = info->default_count;

    SuiteResult result;
    result.suite = name;
    result.seed = seed;
    result.count = count;

    std::vector<InstanceReport> reports(count);
    std::vector<char> passed(count, 0);

    const auto t0 = std::chrono::steady_clock::now();
#ifdef _OPENMP
    const int nthreads = jobs > 0 ? jobs : omp_get_max_threads();
#pragma omp parallel for schedule(dynamic) num_threads(nthreads)
#else
    (void)jobs;
#endif
    for (int i = 0; i < count; ++i) {
        try {
            passed[i] = info->fn(mix_seed(seed, info->stream, i), reports[i]) ? 1 : 0;
        } catch (const std::exception& e) {
            reports[i].message = std::string("exception: ") + e.what();
            passed[i] = 0;
        }
    }
    const auto t1 = std::chrono::steady_clock::now();
    result.seconds = std::chrono::duration<double>(t1 - t0).count();

    std::array<long, 3> tags{0, 0, 0};
    for (int i = 0; i < count; ++i) {
        for (int k = 0; k < 3; ++k) tags[k] += reports[i].value_tags[k];
        if (passed[i]) {
            ++result.passed;
        } else {
            result.failed_indices.push_back(i);
            result.failure_messages.push_back(reports[i].message);
        }
    }
    if (name == "optval") {
        static const char* tag_names[3] = {"finite", "+inf", "-inf"};
        for (int k = 0; k < 3; ++k) {
            if (tags[k] == 0) {
                result.notes.push_back(std::string("no ") + tag_names[k] + " value was ever sampled");
            }
        }
    }
    return result;
}

}  // namespace pcvx
