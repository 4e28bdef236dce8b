#include "pcvx/polyhedron.hpp"

#include <algorithm>
#include <cstdint>
#include <exception>
#include <map>
#include <set>
#include <utility>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"

namespace pcvx {

namespace {

Vec row_with_rhs(const Vec& coeffs, const Rat& rhs) {
    Vec r = coeffs;
    r.push_back(rhs);
    return r;
}

// Joint scaling of coefficients and right-hand side. Equality rows are also
// sign-normalized so the first nonzero coefficient is positive.
Vec canonical_row(const Vec& full_row, bool is_eq) {
    Vec r = primitive(full_row);
    if (is_eq) {
        for (std::size_t i = 0; i + 1 < r.size(); ++i) {
            if (r[i] == 0) continue;
            if (r[i] < 0) {
                for (Rat& x : r) x = -x;
            }
            break;
        }
    }
    return r;
}

}  // namespace

HRep hrep_universe(int dim) {
    if (dim < 0) throw DomainError("negative dimension");
    HRep p;
    p.dim = dim;
    p.eq_A = Mat::zero(0, dim);
    p.ineq_C = Mat::zero(0, dim);
    return p;
}

HRep hrep_empty(int dim) {
    HRep p = hrep_universe(dim);
    p.ineq_C = Mat::from_rows({zero_vec(dim)}, dim);
    p.ineq_d = Vec{Rat(-1)};
    return p;
}

HRep make_hrep(int dim, Mat eq_A, Vec eq_b, Mat ineq_C, Vec ineq_d) {
    if (dim < 0) throw DomainError("negative dimension");
    if (eq_A.ncols != dim || ineq_C.ncols != dim) throw DomainError("hrep: column count must equal dim");
    if (static_cast<int>(eq_b.size()) != eq_A.nrows) throw DomainError("hrep: equality rhs size mismatch");
    if (static_cast<int>(ineq_d.size()) != ineq_C.nrows) throw DomainError("hrep: inequality rhs size mismatch");
    HRep p;
    p.dim = dim;
    p.eq_A = std::move(eq_A);
    p.eq_b = std::move(eq_b);
    p.ineq_C = std::move(ineq_C);
    p.ineq_d = std::move(ineq_d);
    return p;
}

VRep make_vrep(int dim, std::vector<Vec> points, std::vector<Vec> rays, std::vector<Vec> lineality) {
    if (dim < 0) throw DomainError("negative dimension");
    for (const auto& v : points) {
        if (static_cast<int>(v.size()) != dim) throw DomainError("vrep: point dimension mismatch");
    }
    for (const auto& v : rays) {
        if (static_cast<int>(v.size()) != dim) throw DomainError("vrep: ray dimension mismatch");
    }
    for (const auto& v : lineality) {
        if (static_cast<int>(v.size()) != dim) throw DomainError("vrep: lineality dimension mismatch");
    }

    VRep out;
    out.dim = dim;
    if (points.empty()) return out;  // empty set: no generators at all

    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    out.points = std::move(points);

    std::vector<Vec> nrays;
    for (const Vec& r : rays) {
        if (is_zero_vec(r)) continue;
        nrays.push_back(primitive(r));
    }
    std::sort(nrays.begin(), nrays.end());
    nrays.erase(std::unique(nrays.begin(), nrays.end()), nrays.end());
    out.rays = std::move(nrays);

    std::vector<Vec> lin;
    for (const Vec& l : lineality) {
        if (!is_zero_vec(l)) lin.push_back(l);
    }
    if (!lin.empty()) {
        const RrefResult r = rref(Mat::from_rows(lin, dim));
        lin.clear();
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) lin.push_back(primitive(r.reduced.rows[k]));
        std::sort(lin.begin(), lin.end());
    }
    out.lineality = std::move(lin);
    return out;
}

bool member(const HRep& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.dim) throw DomainError("member: point dimension mismatch");
    for (int i = 0; i < p.eq_A.nrows; ++i) {
        if (dot(p.eq_A.rows[i], x) != p.eq_b[i]) return false;
    }
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        if (dot(p.ineq_C.rows[i], x) > p.ineq_d[i]) return false;
    }
    return true;
}

bool is_empty(const HRep& p) { return !feasible(p); }

bool recession_member(const HRep& p, const Vec& v) {
    if (static_cast<int>(v.size()) != p.dim) throw DomainError("recession_member: dimension mismatch");
    for (int i = 0; i < p.eq_A.nrows; ++i) {
        if (dot(p.eq_A.rows[i], v) != 0) return false;
    }
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        if (dot(p.ineq_C.rows[i], v) > 0) return false;
    }
    return true;
}

bool valid_coordset(const CoordSet& keep, int dim) {
    for (std::size_t i = 0; i < keep.size(); ++i) {
        if (keep[i] < 0 || keep[i] >= dim) return false;
        if (i > 0 && keep[i] <= keep[i - 1]) return false;
    }
    return true;
}

HRep canonicalize_rows(const HRep& p) {
    std::set<Vec> eq_rows, ineq_rows;
    for (int i = 0; i < p.eq_A.nrows; ++i) {
        Vec full = row_with_rhs(p.eq_A.rows[i], p.eq_b[i]);
        if (is_zero_vec(p.eq_A.rows[i])) {
            if (p.eq_b[i] != 0) return hrep_empty(p.dim);
            continue;
        }
        eq_rows.insert(canonical_row(full, true));
    }
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        Vec full = row_with_rhs(p.ineq_C.rows[i], p.ineq_d[i]);
        if (is_zero_vec(p.ineq_C.rows[i])) {
            if (p.ineq_d[i] < 0) return hrep_empty(p.dim);
            continue;
        }
        ineq_rows.insert(canonical_row(full, false));
    }

    HRep out = hrep_universe(p.dim);
    for (const Vec& r : eq_rows) {
        out.eq_A.rows.push_back(Vec(r.begin(), r.end() - 1));
        out.eq_b.push_back(r.back());
    }
    out.eq_A.nrows = static_cast<int>(out.eq_A.rows.size());
    for (const Vec& r : ineq_rows) {
        out.ineq_C.rows.push_back(Vec(r.begin(), r.end() - 1));
        out.ineq_d.push_back(r.back());
    }
    out.ineq_C.nrows = static_cast<int>(out.ineq_C.rows.size());
    return out;
}

// ---------------------------------------------------------------------------
// Double description.
//
// dd_cone computes generators of {u : rows[i] . u <= 0} as a lineality basis
// plus extreme rays modulo lineality. Halfspaces are inserted one at a time;
// while a basis vector still violates the new halfspace the lineality shrinks
// by one dimension, afterwards rays are combined pairwise, restricted to
// adjacent pairs via the combinatorial zero-set test.
// ---------------------------------------------------------------------------

namespace {

struct Bitmask {
    std::vector<std::uint64_t> words;

    explicit Bitmask(int nbits = 0) : words((nbits + 63) / 64, 0) {}
    void set(int i) { words[i / 64] |= (std::uint64_t{1} << (i % 64)); }
    static Bitmask intersect(const Bitmask& a, const Bitmask& b) {
        Bitmask r;
        r.words.resize(a.words.size());
        for (std::size_t w = 0; w < a.words.size(); ++w) r.words[w] = a.words[w] & b.words[w];
        return r;
    }
    bool subset_of(const Bitmask& other) const {
        for (std::size_t w = 0; w < words.size(); ++w) {
            if (words[w] & ~other.words[w]) return false;
        }
        return true;
    }
};

struct DDRay {
    Vec v;
    Bitmask tight;
};

struct ConeGenerators {
    std::vector<Vec> lineality;
    std::vector<Vec> rays;
};

ConeGenerators dd_cone(const std::vector<Vec>& halfspaces, int n) {
    const int m = static_cast<int>(halfspaces.size());

    std::vector<Vec> lin;
    for (int i = 0; i < n; ++i) {
        Vec e = zero_vec(n);
        e[i] = 1;
        lin.push_back(std::move(e));
    }
    std::vector<DDRay> rays;

    for (int t = 0; t < m; ++t) {
        const Vec& a = halfspaces[t];

        int escape = -1;
        for (std::size_t k = 0; k < lin.size(); ++k) {
            if (dot(a, lin[k]) != 0) {
                escape = static_cast<int>(k);
                break;
            }
        }

        if (escape >= 0) {
            Vec l = lin[escape];
            if (dot(a, l) > 0) {
                for (Rat& x : l) x = -x;
            }
            const Rat al = dot(a, l);  // < 0
            std::vector<Vec> new_lin;
            for (std::size_t k = 0; k < lin.size(); ++k) {
                if (static_cast<int>(k) == escape) continue;
                const Rat f = dot(a, lin[k]) / al;
                new_lin.push_back(primitive(sub(lin[k], scale(f, l))));
            }
            lin = std::move(new_lin);
            for (DDRay& r : rays) {
                const Rat f = dot(a, r.v) / al;
                if (f != 0) r.v = primitive(sub(r.v, scale(f, l)));
                r.tight.set(t);
            }
            // The escaped basis vector survives as a ray; every earlier
            // halfspace vanishes on it, the new one is slack.
            DDRay nr{primitive(l), Bitmask(m)};
            for (int j = 0; j < t; ++j) nr.tight.set(j);
            rays.push_back(std::move(nr));
            continue;
        }

        std::vector<Rat> val(rays.size());
        std::vector<int> neg, pos;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            val[k] = dot(a, rays[k].v);
            if (val[k] < 0) neg.push_back(static_cast<int>(k));
            if (val[k] > 0) pos.push_back(static_cast<int>(k));
        }
        if (pos.empty()) {
            for (std::size_t k = 0; k < rays.size(); ++k) {
                if (val[k] == 0) rays[k].tight.set(t);
            }
            continue;
        }

        std::vector<DDRay> next;
        for (std::size_t k = 0; k < rays.size(); ++k) {
            if (val[k] > 0) continue;
            DDRay r = rays[k];
            if (val[k] == 0) r.tight.set(t);
            next.push_back(std::move(r));
        }
        for (int kn : neg) {
            for (int kp : pos) {
                const Bitmask common = Bitmask::intersect(rays[kn].tight, rays[kp].tight);
                bool adjacent = true;
                for (std::size_t k = 0; k < rays.size(); ++k) {
                    if (static_cast<int>(k) == kn || static_cast<int>(k) == kp) continue;
                    if (common.subset_of(rays[k].tight)) {
                        adjacent = false;
                        break;
                    }
                }
                if (!adjacent) continue;
                Vec combo = sub(scale(val[kp], rays[kn].v), scale(val[kn], rays[kp].v));
                if (is_zero_vec(combo)) continue;
                DDRay nr{primitive(std::move(combo)), common};
                nr.tight.set(t);
                next.push_back(std::move(nr));
            }
        }

        std::sort(next.begin(), next.end(), [](const DDRay& x, const DDRay& y) { return x.v < y.v; });
        next.erase(std::unique(next.begin(), next.end(),
                               [](const DDRay& x, const DDRay& y) { return x.v == y.v; }),
                   next.end());
        rays = std::move(next);
    }

    ConeGenerators out;
    for (Vec& l : lin) out.lineality.push_back(primitive(l));
    for (DDRay& r : rays) out.rays.push_back(std::move(r.v));
    return out;
}

}  // namespace

VRep h_to_v(const HRep& p) {
    if (is_empty(p)) return make_vrep(p.dim, {}, {}, {});

    const int n = p.dim;
    // Homogenize over (x, t), t last: equalities become opposite halfspace
    // pairs, inequality rows C x <= d become C x - d t <= 0, plus -t <= 0.
    std::vector<Vec> halfspaces;
    for (int i = 0; i < p.eq_A.nrows; ++i) {
        Vec r = row_with_rhs(p.eq_A.rows[i], -p.eq_b[i]);
        halfspaces.push_back(r);
        for (Rat& x : r) x = -x;
        halfspaces.push_back(std::move(r));
    }
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        halfspaces.push_back(row_with_rhs(p.ineq_C.rows[i], -p.ineq_d[i]));
    }
    Vec tpos = zero_vec(n + 1);
    tpos[n] = -1;
    halfspaces.push_back(std::move(tpos));

    const ConeGenerators gen = dd_cone(halfspaces, n + 1);

    std::vector<Vec> points, rays, lineality;
    for (const Vec& l : gen.lineality) {
        lineality.push_back(Vec(l.begin(), l.end() - 1));  // t-component is 0
    }
    for (const Vec& r : gen.rays) {
        const Rat t = r[n];
        Vec x(r.begin(), r.end() - 1);
        if (t > 0) {
            points.push_back(scale(Rat(1) / t, x));
        } else {
            rays.push_back(std::move(x));
        }
    }
    return make_vrep(n, std::move(points), std::move(rays), std::move(lineality));
}

HRep v_to_h(const VRep& v) {
    if (v.points.empty()) return hrep_empty(v.dim);

    const int n = v.dim;
    // Generators of the homogenization; its polar cone is described by one
    // halfspace per generator and gets converted back by double description.
    std::vector<Vec> halfspaces;
    for (const Vec& u : v.points) halfspaces.push_back(row_with_rhs(u, Rat(1)));
    for (const Vec& r : v.rays) halfspaces.push_back(row_with_rhs(r, Rat(0)));
    for (const Vec& l : v.lineality) {
        Vec row = row_with_rhs(l, Rat(0));
        halfspaces.push_back(row);
        for (Rat& x : row) x = -x;
        halfspaces.push_back(std::move(row));
    }

    const ConeGenerators polar = dd_cone(halfspaces, n + 1);

    HRep out = hrep_universe(n);
    for (const Vec& m : polar.lineality) {
        out.eq_A.rows.push_back(Vec(m.begin(), m.end() - 1));
        out.eq_b.push_back(-m.back());
    }
    out.eq_A.nrows = static_cast<int>(out.eq_A.rows.size());
    for (const Vec& w : polar.rays) {
        out.ineq_C.rows.push_back(Vec(w.begin(), w.end() - 1));
        out.ineq_d.push_back(-w.back());
    }
    out.ineq_C.nrows = static_cast<int>(out.ineq_C.rows.size());
    return canonicalize_rows(out);
}

HRep intersect(const HRep& p, const HRep& q) {
    if (p.dim != q.dim) throw DomainError("intersect: dimension mismatch");
    HRep out = p;
    out.eq_A = vstack(p.eq_A, q.eq_A);
    out.eq_b.insert(out.eq_b.end(), q.eq_b.begin(), q.eq_b.end());
    out.ineq_C = vstack(p.ineq_C, q.ineq_C);
    out.ineq_d.insert(out.ineq_d.end(), q.ineq_d.begin(), q.ineq_d.end());
    return out;
}

HRep product(const HRep& p, const HRep& q) {
    const int n = p.dim + q.dim;
    HRep out = hrep_universe(n);
    auto embed = [&](const Mat& m, int offset) {
        Mat r = Mat::zero(m.nrows, n);
        for (int i = 0; i < m.nrows; ++i) {
            for (int j = 0; j < m.ncols; ++j) r.rows[i][offset + j] = m.rows[i][j];
        }
        return r;
    };
    out.eq_A = vstack(embed(p.eq_A, 0), embed(q.eq_A, p.dim));
    out.eq_b = p.eq_b;
    out.eq_b.insert(out.eq_b.end(), q.eq_b.begin(), q.eq_b.end());
    out.ineq_C = vstack(embed(p.ineq_C, 0), embed(q.ineq_C, p.dim));
    out.ineq_d = p.ineq_d;
    out.ineq_d.insert(out.ineq_d.end(), q.ineq_d.begin(), q.ineq_d.end());
    return out;
}

HRep linear_preimage(const Mat& t, const HRep& q) {
    if (t.nrows != q.dim) throw DomainError("linear_preimage: matrix rows must match set dimension");
    return make_hrep(t.ncols, mat_mul(q.eq_A, t), q.eq_b, mat_mul(q.ineq_C, t), q.ineq_d);
}

HRep linear_image(const Mat& t, const HRep& p) {
    if (t.ncols != p.dim) throw DomainError("linear_image: matrix columns must match set dimension");
    const VRep v = h_to_v(p);
    if (v.points.empty()) return hrep_empty(t.nrows);
    std::vector<Vec> points, rays, lineality;
    for (const Vec& u : v.points) points.push_back(mat_vec(t, u));
    for (const Vec& r : v.rays) rays.push_back(mat_vec(t, r));
    for (const Vec& l : v.lineality) lineality.push_back(mat_vec(t, l));
    return v_to_h(make_vrep(t.nrows, std::move(points), std::move(rays), std::move(lineality)));
}

HRep minkowski_sum(const HRep& p, const HRep& q) {
    if (p.dim != q.dim) throw DomainError("minkowski_sum: dimension mismatch");
    const VRep vp = h_to_v(p);
    const VRep vq = h_to_v(q);
    if (vp.points.empty() || vq.points.empty()) return hrep_empty(p.dim);
    std::vector<Vec> points, rays, lineality;
    for (const Vec& a : vp.points) {
        for (const Vec& b : vq.points) points.push_back(add(a, b));
    }
    rays = vp.rays;
    rays.insert(rays.end(), vq.rays.begin(), vq.rays.end());
    lineality = vp.lineality;
    lineality.insert(lineality.end(), vq.lineality.begin(), vq.lineality.end());
    return v_to_h(make_vrep(p.dim, std::move(points), std::move(rays), std::move(lineality)));
}

std::vector<RowSlack> inequality_slack_scan(const HRep& p) {
    const int m = p.ineq_C.nrows;
    std::vector<RowSlack> out(m);
    std::exception_ptr failure;

    // Per row: maximize s subject to x in p, s <= d_i - C_i x, s <= 1.
    // p nonempty makes every row's LP optimal with value in [0, 1].
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic) if (m > 4)
#endif
    for (int i = 0; i < m; ++i) {
        try {
            HRep aug = hrep_universe(p.dim + 1);
            aug.eq_A = Mat::zero(p.eq_A.nrows, p.dim + 1);
            for (int r = 0; r < p.eq_A.nrows; ++r) {
                for (int j = 0; j < p.dim; ++j) aug.eq_A.rows[r][j] = p.eq_A.rows[r][j];
            }
            aug.eq_b = p.eq_b;
            std::vector<Vec> rows;
            Vec rhs;
            for (int r = 0; r < m; ++r) {
                rows.push_back(row_with_rhs(p.ineq_C.rows[r], r == i ? Rat(1) : Rat(0)));
                rhs.push_back(p.ineq_d[r]);
            }
            Vec cap = zero_vec(p.dim + 1);
            cap[p.dim] = 1;
            rows.push_back(cap);
            rhs.push_back(Rat(1));
            aug.ineq_C = Mat::from_rows(std::move(rows), p.dim + 1);
            aug.ineq_d = std::move(rhs);

            Vec obj = zero_vec(p.dim + 1);
            obj[p.dim] = 1;
            const LPResult r = solve_lp(obj, aug, Sense::Max);
            if (r.status != LPStatus::Optimal) throw DomainError("slack scan expects a nonempty set");
            if (*r.value > 0) {
                out[i].positive = true;
                out[i].witness = Vec(r.point->begin(), r.point->end() - 1);
            }
        } catch (...) {
#ifdef _OPENMP
#pragma omp critical
#endif
            if (!failure) failure = std::current_exception();
        }
    }
    if (failure) std::rethrow_exception(failure);
    return out;
}

HRep affine_hull(const HRep& p) {
    if (is_empty(p)) throw DomainError("empty set has no affine hull");
    const std::vector<RowSlack> scan = inequality_slack_scan(p);

    std::vector<Vec> eq_rows;
    for (int i = 0; i < p.eq_A.nrows; ++i) eq_rows.push_back(row_with_rhs(p.eq_A.rows[i], p.eq_b[i]));
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        if (!scan[i].positive) eq_rows.push_back(row_with_rhs(p.ineq_C.rows[i], p.ineq_d[i]));
    }

    HRep out = hrep_universe(p.dim);
    if (!eq_rows.empty()) {
        const RrefResult r = rref(Mat::from_rows(eq_rows, p.dim + 1));
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
            const Vec& row = r.reduced.rows[k];
            out.eq_A.rows.push_back(Vec(row.begin(), row.end() - 1));
            out.eq_b.push_back(row.back());
        }
        out.eq_A.nrows = static_cast<int>(out.eq_A.rows.size());
    }
    return canonicalize_rows(out);
}

HRep recession_cone(const HRep& p) {
    if (is_empty(p)) throw DomainError("recession cone of the empty set is undefined");
    HRep out = p;
    out.eq_b.assign(out.eq_b.size(), Rat(0));
    out.ineq_d.assign(out.ineq_d.size(), Rat(0));
    return out;
}

HRep remove_redundancy(const HRep& p) {
    HRep cur = canonicalize_rows(p);
    if (!feasible(cur)) return hrep_empty(p.dim);
    if (cur.ineq_C.nrows > 0) {
        const std::vector<RowSlack> scan = inequality_slack_scan(cur);
        std::vector<Vec> eq_rows, ineq_rows;
        Vec eq_rhs, ineq_rhs;
        for (int i = 0; i < cur.eq_A.nrows; ++i) {
            eq_rows.push_back(cur.eq_A.rows[i]);
            eq_rhs.push_back(cur.eq_b[i]);
        }
        for (int i = 0; i < cur.ineq_C.nrows; ++i) {
            if (scan[i].positive) {
                ineq_rows.push_back(cur.ineq_C.rows[i]);
                ineq_rhs.push_back(cur.ineq_d[i]);
            } else {
                eq_rows.push_back(cur.ineq_C.rows[i]);  // implicit equality
                eq_rhs.push_back(cur.ineq_d[i]);
            }
        }
        cur = make_hrep(cur.dim, Mat::from_rows(std::move(eq_rows), cur.dim), std::move(eq_rhs),
                        Mat::from_rows(std::move(ineq_rows), cur.dim), std::move(ineq_rhs));
    }

    // Reduce the equality block to an independent system.
    if (cur.eq_A.nrows > 0) {
        std::vector<Vec> aug;
        for (int i = 0; i < cur.eq_A.nrows; ++i) aug.push_back(row_with_rhs(cur.eq_A.rows[i], cur.eq_b[i]));
        const RrefResult r = rref(Mat::from_rows(std::move(aug), cur.dim + 1));
        std::vector<Vec> rows;
        Vec rhs;
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) {
            rows.push_back(Vec(r.reduced.rows[k].begin(), r.reduced.rows[k].end() - 1));
            rhs.push_back(r.reduced.rows[k].back());
        }
        cur.eq_A = Mat::from_rows(std::move(rows), cur.dim);
        cur.eq_b = std::move(rhs);
    }

    // Sequential irredundancy filter: drop a row when maximizing it over the
    // remaining rows stays within its bound.
    std::vector<bool> kept(cur.ineq_C.nrows, true);
    for (int i = 0; i < cur.ineq_C.nrows; ++i) {
        HRep relaxed = hrep_universe(cur.dim);
        relaxed.eq_A = cur.eq_A;
        relaxed.eq_b = cur.eq_b;
        std::vector<Vec> rows;
        Vec rhs;
        for (int j = 0; j < cur.ineq_C.nrows; ++j) {
            if (j == i || !kept[j]) continue;
            rows.push_back(cur.ineq_C.rows[j]);
            rhs.push_back(cur.ineq_d[j]);
        }
        relaxed.ineq_C = Mat::from_rows(std::move(rows), cur.dim);
        relaxed.ineq_d = std::move(rhs);
        const LPResult r = solve_lp(cur.ineq_C.rows[i], relaxed, Sense::Max);
        if (r.status == LPStatus::Optimal && *r.value <= cur.ineq_d[i]) kept[i] = false;
    }
    std::vector<Vec> rows;
    Vec rhs;
    for (int i = 0; i < cur.ineq_C.nrows; ++i) {
        if (!kept[i]) continue;
        rows.push_back(cur.ineq_C.rows[i]);
        rhs.push_back(cur.ineq_d[i]);
    }
    cur.ineq_C = Mat::from_rows(std::move(rows), cur.dim);
    cur.ineq_d = std::move(rhs);
    return canonicalize_rows(cur);
}

bool subset_of(const HRep& p, const HRep& q) {
    if (p.dim != q.dim) throw DomainError("subset_of: dimension mismatch");
    const VRep v = h_to_v(p);
    if (v.points.empty()) return true;
    if (is_empty(q)) return false;
    for (const Vec& u : v.points) {
        if (!member(q, u)) return false;
    }
    for (const Vec& r : v.rays) {
        if (!recession_member(q, r)) return false;
    }
    for (const Vec& l : v.lineality) {
        if (!recession_member(q, l)) return false;
        Vec neg = l;
        for (Rat& x : neg) x = -x;
        if (!recession_member(q, neg)) return false;
    }
    return true;
}

bool set_equal(const HRep& p, const HRep& q) { return subset_of(p, q) && subset_of(q, p); }

namespace {

// One Fourier-Motzkin step: eliminate column `col` of `cur`. If an equality
// row has a nonzero coefficient there, solve it and substitute; otherwise
// combine opposite-sign inequality rows.
HRep eliminate_column(const HRep& cur, int col) {
    const int n = cur.dim;
    auto strip = [col](const Vec& v) {
        Vec r;
        r.reserve(v.size() - 1);
        for (std::size_t j = 0; j < v.size(); ++j) {
            if (static_cast<int>(j) != col) r.push_back(v[j]);
        }
        return r;
    };

    int eq_row = -1;
    for (int i = 0; i < cur.eq_A.nrows; ++i) {
        if (cur.eq_A.rows[i][col] != 0) {
            eq_row = i;
            break;
        }
    }

    std::vector<Vec> eq_rows, ineq_rows;
    Vec eq_rhs, ineq_rhs;

    if (eq_row >= 0) {
        const Vec& e = cur.eq_A.rows[eq_row];
        const Rat ec = e[col];
        for (int i = 0; i < cur.eq_A.nrows; ++i) {
            if (i == eq_row) continue;
            const Rat f = cur.eq_A.rows[i][col] / ec;
            eq_rows.push_back(strip(sub(cur.eq_A.rows[i], scale(f, e))));
            eq_rhs.push_back(cur.eq_b[i] - f * cur.eq_b[eq_row]);
        }
        for (int i = 0; i < cur.ineq_C.nrows; ++i) {
            const Rat f = cur.ineq_C.rows[i][col] / ec;
            ineq_rows.push_back(strip(sub(cur.ineq_C.rows[i], scale(f, e))));
            ineq_rhs.push_back(cur.ineq_d[i] - f * cur.eq_b[eq_row]);
        }
    } else {
        for (int i = 0; i < cur.eq_A.nrows; ++i) {
            eq_rows.push_back(strip(cur.eq_A.rows[i]));
            eq_rhs.push_back(cur.eq_b[i]);
        }
        std::vector<int> pos, neg;
        for (int i = 0; i < cur.ineq_C.nrows; ++i) {
            const Rat& c = cur.ineq_C.rows[i][col];
            if (c > 0) {
                pos.push_back(i);
            } else if (c < 0) {
                neg.push_back(i);
            } else {
                ineq_rows.push_back(strip(cur.ineq_C.rows[i]));
                ineq_rhs.push_back(cur.ineq_d[i]);
            }
        }
        for (int ip : pos) {
            for (int in : neg) {
                const Rat cp = cur.ineq_C.rows[ip][col];
                const Rat cn = cur.ineq_C.rows[in][col];
                // (-cn) * row_p + cp * row_n has a zero coefficient at col.
                Vec combo = add(scale(-cn, cur.ineq_C.rows[ip]), scale(cp, cur.ineq_C.rows[in]));
                ineq_rows.push_back(strip(combo));
                ineq_rhs.push_back(-cn * cur.ineq_d[ip] + cp * cur.ineq_d[in]);
            }
        }
    }
    return make_hrep(n - 1, Mat::from_rows(std::move(eq_rows), n - 1), std::move(eq_rhs),
                     Mat::from_rows(std::move(ineq_rows), n - 1), std::move(ineq_rhs));
}

}  // namespace

HRep project(const HRep& p, const CoordSet& keep) {
    if (!valid_coordset(keep, p.dim)) throw DomainError("project: invalid coordinate set");
    const int target = static_cast<int>(keep.size());

    std::vector<bool> keep_flag(p.dim, false);
    for (int k : keep) keep_flag[k] = true;

    HRep cur = canonicalize_rows(p);
    std::vector<bool> cur_keep = keep_flag;
    int remaining = p.dim - target;

    while (remaining > 0) {
        if (is_empty(cur)) return hrep_empty(target);

        // Prefer a coordinate solvable through an equality row; otherwise the
        // column with the fewest pairwise combinations.
        int chosen = -1;
        for (int j = 0; j < cur.dim && chosen < 0; ++j) {
            if (cur_keep[j]) continue;
            for (int i = 0; i < cur.eq_A.nrows; ++i) {
                if (cur.eq_A.rows[i][j] != 0) {
                    chosen = j;
                    break;
                }
            }
        }
        if (chosen < 0) {
            long best_cost = -1;
            for (int j = 0; j < cur.dim; ++j) {
                if (cur_keep[j]) continue;
                long npos = 0, nneg = 0;
                for (int i = 0; i < cur.ineq_C.nrows; ++i) {
                    if (cur.ineq_C.rows[i][j] > 0) ++npos;
                    if (cur.ineq_C.rows[i][j] < 0) ++nneg;
                }
                const long cost = npos * nneg;
                if (best_cost < 0 || cost < best_cost) {
                    best_cost = cost;
                    chosen = j;
                }
            }
        }

        cur = eliminate_column(cur, chosen);
        cur_keep.erase(cur_keep.begin() + chosen);
        cur = remove_redundancy(cur);
        --remaining;
    }
    return cur;
}

}  // namespace pcvx
