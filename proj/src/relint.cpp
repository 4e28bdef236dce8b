#include "pcvx/relint.hpp"

#include "pcvx/errors.hpp"
#include "pcvx/lp.hpp"

namespace pcvx {

IndexSet binding_index_set(const HRep& p) {
    if (is_empty(p)) throw DomainError("index set undefined on empty set");
    const std::vector<RowSlack> scan = inequality_slack_scan(p);
    IndexSet out;
    for (int i = 0; i < static_cast<int>(scan.size()); ++i) {
        if (scan[i].positive) out.push_back(i);
    }
    return out;
}

RelOpenHRep relative_interior(const HRep& p) {
    const HRep hull = affine_hull(p);  // errors on the empty set
    const std::vector<RowSlack> scan = inequality_slack_scan(p);

    RelOpenHRep out;
    out.dim = p.dim;
    out.eq_A = hull.eq_A;
    out.eq_b = hull.eq_b;
    out.strict_C = Mat::zero(0, p.dim);
    for (int i = 0; i < p.ineq_C.nrows; ++i) {
        if (!scan[i].positive) continue;
        out.strict_C.rows.push_back(p.ineq_C.rows[i]);
        out.strict_d.push_back(p.ineq_d[i]);
    }
    out.strict_C.nrows = static_cast<int>(out.strict_C.rows.size());
    return out;
}

bool relopen_member(const RelOpenHRep& r, const Vec& x) {
    if (static_cast<int>(x.size()) != r.dim) throw DomainError("relopen_member: dimension mismatch");
    for (int i = 0; i < r.eq_A.nrows; ++i) {
        if (dot(r.eq_A.rows[i], x) != r.eq_b[i]) return false;
    }
    for (int i = 0; i < r.strict_C.nrows; ++i) {
        if (dot(r.strict_C.rows[i], x) >= r.strict_d[i]) return false;
    }
    return true;
}

bool ri_member(const HRep& p, const Vec& x) {
    if (static_cast<int>(x.size()) != p.dim) throw DomainError("ri_member: dimension mismatch");
    if (!member(p, x)) return false;
    const IndexSet binding = binding_index_set(p);
    for (int i : binding) {
        if (dot(p.ineq_C.rows[i], x) >= p.ineq_d[i]) return false;
    }
    return true;
}

Vec relint_witness(const HRep& p) {
    if (is_empty(p)) throw DomainError("relative interior of the empty set is undefined");
    const std::vector<RowSlack> scan = inequality_slack_scan(p);

    // Averaging the per-row witnesses keeps every strict row strict.
    Vec sum = zero_vec(p.dim);
    int count = 0;
    for (const RowSlack& s : scan) {
        if (!s.positive) continue;
        sum = add(sum, s.witness);
        ++count;
    }
    if (count == 0) return *feasible_point(p);
    return scale(Rat(1, count), sum);
}

bool ri_graph_member_decomposed(const MultiFn& f, const Vec& x, const Vec& y) {
    if (static_cast<int>(x.size()) != f.nx || static_cast<int>(y.size()) != f.ny) {
        throw DomainError("ri_graph_member_decomposed: dimension mismatch");
    }
    if (is_empty(f.graph)) throw DomainError("ri_graph_member_decomposed: empty graph");

    const HRep dom = domain(f);
    if (!ri_member(dom, x)) return false;
    const HRep fx = value(f, x);
    if (is_empty(fx)) return false;
    return ri_member(fx, y);
}

}  // namespace pcvx
