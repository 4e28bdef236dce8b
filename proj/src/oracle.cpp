#include "pcvx/oracle.hpp"

#include <algorithm>

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"

namespace pcvx::oracle {

namespace {

Vec with_rhs(const Vec& coeffs, const Rat& rhs) {
    Vec r = coeffs;
    r.push_back(rhs);
    return r;
}

bool satisfies(const HRep& p, const Vec& x) {
    for (int i = 0; i < p.eq_A.nrows; ++i) {
        if (dot(p.eq_A.rows[i], x) != p.eq_b[i]) return false;
    }
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        if (dot(p.ineq_C.rows[i], x) > p.ineq_d[i]) return false;
    }
    return true;
}

// Rows of p with the strictly increasing coordinate set `fixed` pinned to
// `vals`, rewritten over the remaining coordinates in order.
HRep substitute_coords(const HRep& p, const std::vector<int>& fixed, const Vec& vals) {
    std::vector<bool> is_fixed(p.dim, false);
    std::vector<int> fixed_pos(p.dim, -1);
    for (std::size_t k = 0; k < fixed.size(); ++k) {
        is_fixed[fixed[k]] = true;
        fixed_pos[fixed[k]] = static_cast<int>(k);
    }
    const int rest = p.dim - static_cast<int>(fixed.size());

    HRep out = hrep_universe(rest);
    auto reduce_rows = [&](const Mat& m, const Vec& rhs, Mat* om, Vec* orhs) {
        *om = Mat::zero(m.nrows, rest);
        orhs->assign(m.nrows, Rat(0));
        for (int i = 0; i < m.nrows; ++i) {
            Rat shift(0);
            int col = 0;
            for (int j = 0; j < p.dim; ++j) {
                if (is_fixed[j]) {
                    shift += m.rows[i][j] * vals[fixed_pos[j]];
                } else {
                    om->rows[i][col++] = m.rows[i][j];
                }
            }
            (*orhs)[i] = rhs[i] - shift;
        }
    };
    reduce_rows(p.eq_A, p.eq_b, &out.eq_A, &out.eq_b);
    reduce_rows(p.ineq_C, p.ineq_d, &out.ineq_C, &out.ineq_d);
    return out;
}

HRep conjoin(const HRep& a, const HRep& b) {
    HRep out = a;
    out.eq_A = vstack(a.eq_A, b.eq_A);
    out.eq_b.insert(out.eq_b.end(), b.eq_b.begin(), b.eq_b.end());
    out.ineq_C = vstack(a.ineq_C, b.ineq_C);
    out.ineq_d.insert(out.ineq_d.end(), b.ineq_d.begin(), b.ineq_d.end());
    return out;
}

std::vector<int> iota_coords(int from, int to) {
    std::vector<int> c;
    for (int i = from; i < to; ++i) c.push_back(i);
    return c;
}

}  // namespace

VRep enumerate_basic_solutions(const HRep& p) {
    if (p.dim > 4) throw DomainError("enumerate_basic_solutions: dimension guard (dim <= 4) violated");
    if (p.eq_A.nrows + p.ineq_C.nrows > 12) {
        throw DomainError("enumerate_basic_solutions: row guard (<= 12 rows) violated");
    }

    const int n = p.dim;
    std::vector<Vec> heq, hin;
    for (int i = 0; i < p.eq_A.nrows; ++i) heq.push_back(with_rhs(p.eq_A.rows[i], -p.eq_b[i]));
    for (int i = 0; i < p.ineq_C.nrows; ++i) hin.push_back(with_rhs(p.ineq_C.rows[i], -p.ineq_d[i]));
    Vec tpos = zero_vec(n + 1);
    tpos[n] = -1;
    hin.push_back(tpos);
    const int m = static_cast<int>(hin.size());

    std::vector<Vec> all = heq;
    all.insert(all.end(), hin.begin(), hin.end());
    const std::vector<Vec> lin_basis = nullspace_basis(Mat::from_rows(all, n + 1));
    const int q = static_cast<int>(lin_basis.size());
    Mat lin_mat = Mat::from_rows(lin_basis, n + 1);

    std::vector<Vec> cone_rays;
    for (std::uint32_t mask = 0; mask < (std::uint32_t{1} << m); ++mask) {
        std::vector<Vec> rows = heq;
        for (int i = 0; i < m; ++i) {
            if (mask & (std::uint32_t{1} << i)) rows.push_back(hin[i]);
        }
        const std::vector<Vec> space = nullspace_basis(Mat::from_rows(rows, n + 1));
        if (static_cast<int>(space.size()) != q + 1) continue;

        // Any basis vector outside the lineality span generates the line.
        Vec w;
        for (const Vec& cand : space) {
            Mat stacked = lin_mat;
            stacked.nrows += 1;
            stacked.rows.push_back(cand);
            if (rank(stacked) == q + 1) {
                w = cand;
                break;
            }
        }
        if (w.empty()) continue;

        auto admissible = [&](const Vec& v) {
            for (const Vec& row : hin) {
                if (dot(row, v) > 0) return false;
            }
            return true;
        };
        Vec neg = w;
        for (Rat& x : neg) x = -x;
        if (admissible(w)) {
            cone_rays.push_back(primitive(w));
        } else if (admissible(neg)) {
            cone_rays.push_back(primitive(neg));
        }
    }
    std::sort(cone_rays.begin(), cone_rays.end());
    cone_rays.erase(std::unique(cone_rays.begin(), cone_rays.end()), cone_rays.end());

    std::vector<Vec> points, rays, lineality;
    for (const Vec& r : cone_rays) {
        const Rat t = r[n];
        Vec x(r.begin(), r.end() - 1);
        if (t > 0) {
            points.push_back(scale(Rat(1) / t, x));
        } else {
            rays.push_back(primitive(x));
        }
    }
    for (const Vec& l : lin_basis) lineality.push_back(Vec(l.begin(), l.end() - 1));

    VRep out;
    out.dim = n;
    if (points.empty()) return out;  // infeasible system
    std::sort(points.begin(), points.end());
    points.erase(std::unique(points.begin(), points.end()), points.end());
    std::sort(rays.begin(), rays.end());
    rays.erase(std::unique(rays.begin(), rays.end()), rays.end());
    std::vector<Vec> lin_rows;
    for (const Vec& l : lineality) {
        if (!is_zero_vec(l)) lin_rows.push_back(l);
    }
    if (!lin_rows.empty()) {
        const RrefResult r = rref(Mat::from_rows(lin_rows, n));
        lin_rows.clear();
        for (std::size_t k = 0; k < r.pivot_cols.size(); ++k) lin_rows.push_back(primitive(r.reduced.rows[k]));
        std::sort(lin_rows.begin(), lin_rows.end());
    }
    out.points = std::move(points);
    out.rays = std::move(rays);
    out.lineality = std::move(lin_rows);
    return out;
}

bool iri_member_oracle(const HRep& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.dim) throw DomainError("iri_member_oracle: dimension mismatch");
    if (!satisfies(p, x)) throw DomainError("iri_member_oracle: point must belong to the set");

    const VRep v = enumerate_basic_solutions(p);
    std::vector<Vec> conic;  // nonnegative-multiplier generators of cone(P - x)
    for (const Vec& u : v.points) {
        Vec g = sub(u, x);
        if (!is_zero_vec(g)) conic.push_back(std::move(g));
    }
    conic.insert(conic.end(), v.rays.begin(), v.rays.end());

    const int nc = static_cast<int>(conic.size());
    const int nl = static_cast<int>(v.lineality.size());

    // -g must be a conic combination of the generators plus the lineality.
    auto in_cone = [&](const Vec& target) {
        HRep sys = hrep_universe(nc + nl);
        sys.eq_A = Mat::zero(p.dim, nc + nl);
        sys.eq_b = Vec(p.dim);
        for (int coord = 0; coord < p.dim; ++coord) {
            for (int j = 0; j < nc; ++j) sys.eq_A.rows[coord][j] = conic[j][coord];
            for (int j = 0; j < nl; ++j) sys.eq_A.rows[coord][nc + j] = v.lineality[j][coord];
            sys.eq_b[coord] = target[coord];
        }
        sys.ineq_C = Mat::zero(nc, nc + nl);
        sys.ineq_d = Vec(nc, Rat(0));
        for (int j = 0; j < nc; ++j) sys.ineq_C.rows[j][j] = -1;
        return feasible(sys);
    };

    for (const Vec& g : conic) {
        Vec neg = g;
        for (Rat& c : neg) c = -c;
        if (!in_cone(neg)) return false;
    }
    return true;
}

ExtReal optval_oracle(const PCFunc& phi, const MultiFn& f, const Vec& x) {
    if (phi.n != f.nx + f.ny) throw DomainError("optval_oracle: objective dimension must be nx + ny");
    if (static_cast<int>(x.size()) != f.nx) throw DomainError("optval_oracle: point dimension mismatch");

    // One LP over (y, t): minimize t with (x, y, t) in epi phi, (x, y) in gph F.
    const HRep epi_rows = substitute_coords(phi.epi, iota_coords(0, f.nx), x);  // over (y, t)
    HRep graph_rows = substitute_coords(f.graph, iota_coords(0, f.nx), x);     // over y
    graph_rows = [&] {  // pad with a free t column
        HRep padded = hrep_universe(f.ny + 1);
        padded.eq_A = Mat::zero(graph_rows.eq_A.nrows, f.ny + 1);
        padded.eq_b = graph_rows.eq_b;
        for (int i = 0; i < graph_rows.eq_A.nrows; ++i) {
            for (int j = 0; j < f.ny; ++j) padded.eq_A.rows[i][j] = graph_rows.eq_A.rows[i][j];
        }
        padded.ineq_C = Mat::zero(graph_rows.ineq_C.nrows, f.ny + 1);
        padded.ineq_d = graph_rows.ineq_d;
        for (int i = 0; i < graph_rows.ineq_C.nrows; ++i) {
            for (int j = 0; j < f.ny; ++j) padded.ineq_C.rows[i][j] = graph_rows.ineq_C.rows[i][j];
        }
        return padded;
    }();

    Vec obj = zero_vec(f.ny + 1);
    obj[f.ny] = 1;
    const LPResult r = solve_lp(obj, conjoin(epi_rows, graph_rows), Sense::Min);
    switch (r.status) {
        case LPStatus::Infeasible:
            return ExtReal::plus_inf();
        case LPStatus::Unbounded:
            return ExtReal::minus_inf();
        case LPStatus::Optimal:
            return ExtReal::finite(*r.value);
    }
    return ExtReal::plus_inf();
}

bool pointwise_relation_oracle(const MultiFn& f, const Vec& x, const HRep& extra_on_y) {
    if (static_cast<int>(x.size()) != f.nx) throw DomainError("pointwise_relation_oracle: dimension mismatch");
    if (extra_on_y.dim != f.ny) throw DomainError("pointwise_relation_oracle: extra rows dimension mismatch");
    const HRep fx = substitute_coords(f.graph, iota_coords(0, f.nx), x);
    return feasible(conjoin(fx, extra_on_y));
}

bool compose_member_oracle(const MultiFn& f, const MultiFn& g, const Vec& x, const Vec& z) {
    if (f.ny != g.nx) throw DomainError("compose_member_oracle: inner dimensions disagree");
    if (static_cast<int>(z.size()) != g.ny) throw DomainError("compose_member_oracle: dimension mismatch");
    const HRep gz = substitute_coords(g.graph, iota_coords(g.nx, g.nx + g.ny), z);  // over y
    return pointwise_relation_oracle(f, x, gz);
}

bool sum_member_oracle(const MultiFn& f1, const MultiFn& f2, const Vec& x, const Vec& z) {
    if (f1.nx != f2.nx || f1.ny != f2.ny) throw DomainError("sum_member_oracle: block dimensions disagree");
    if (static_cast<int>(x.size()) != f1.nx || static_cast<int>(z.size()) != f1.ny) {
        throw DomainError("sum_member_oracle: dimension mismatch");
    }
    const int ny = f1.ny;
    const HRep r1 = substitute_coords(f1.graph, iota_coords(0, f1.nx), x);  // over y1
    const HRep r2 = substitute_coords(f2.graph, iota_coords(0, f2.nx), x);  // over y2

    HRep sys = hrep_universe(2 * ny);
    auto widen = [&](const HRep& h, int offset) {
        HRep w = hrep_universe(2 * ny);
        w.eq_A = Mat::zero(h.eq_A.nrows, 2 * ny);
        w.eq_b = h.eq_b;
        for (int i = 0; i < h.eq_A.nrows; ++i) {
            for (int j = 0; j < ny; ++j) w.eq_A.rows[i][offset + j] = h.eq_A.rows[i][j];
        }
        w.ineq_C = Mat::zero(h.ineq_C.nrows, 2 * ny);
        w.ineq_d = h.ineq_d;
        for (int i = 0; i < h.ineq_C.nrows; ++i) {
            for (int j = 0; j < ny; ++j) w.ineq_C.rows[i][offset + j] = h.ineq_C.rows[i][j];
        }
        return w;
    };
    sys = conjoin(widen(r1, 0), widen(r2, ny));
    for (int j = 0; j < ny; ++j) {  // y1 + y2 = z
        Vec row = zero_vec(2 * ny);
        row[j] = 1;
        row[ny + j] = 1;
        sys.eq_A.rows.push_back(std::move(row));
        sys.eq_A.nrows += 1;
        sys.eq_b.push_back(z[j]);
    }
    return feasible(sys);
}

bool image_member_oracle(const MultiFn& f, const HRep& c, const Vec& y) {
    if (c.dim != f.nx) throw DomainError("image_member_oracle: set dimension mismatch");
    if (static_cast<int>(y.size()) != f.ny) throw DomainError("image_member_oracle: dimension mismatch");
    const HRep fy = substitute_coords(f.graph, iota_coords(f.nx, f.nx + f.ny), y);  // over x
    return feasible(conjoin(fy, c));
}

bool lifted_member_oracle(const HRep& p, const CoordSet& keep, const Vec& x) {
    if (!valid_coordset(keep, p.dim)) throw DomainError("lifted_member_oracle: invalid coordinate set");
    if (x.size() != keep.size()) throw DomainError("lifted_member_oracle: dimension mismatch");
    HRep sys = p;
    for (std::size_t k = 0; k < keep.size(); ++k) {
        Vec row = zero_vec(p.dim);
        row[keep[k]] = 1;
        sys.eq_A.rows.push_back(std::move(row));
        sys.eq_A.nrows += 1;
        sys.eq_b.push_back(x[k]);
    }
    return feasible(sys);
}

bool linear_image_member_oracle(const Mat& t, const HRep& d, const Vec& y) {
    if (t.ncols != d.dim) throw DomainError("linear_image_member_oracle: matrix columns must match set dimension");
    if (static_cast<int>(y.size()) != t.nrows) throw DomainError("linear_image_member_oracle: dimension mismatch");
    HRep sys = d;
    for (int i = 0; i < t.nrows; ++i) {
        sys.eq_A.rows.push_back(t.rows[i]);
        sys.eq_A.nrows += 1;
        sys.eq_b.push_back(y[i]);
    }
    return feasible(sys);
}

}  // namespace pcvx::oracle
