#include "pcvx/json_io.hpp"

#include <fstream>
#include <sstream>

#include "pcvx/errors.hpp"

namespace pcvx {

using nlohmann::json;

namespace {

json rat_array(const Vec& v) {
    json a = json::array();
    for (const Rat& x : v) a.push_back(rat_to_string(x));
    return a;
}

json mat_array(const Mat& m) {
    json a = json::array();
    for (const Vec& row : m.rows) a.push_back(rat_array(row));
    return a;
}

json vec_list(const std::vector<Vec>& vs) {
    json a = json::array();
    for (const Vec& v : vs) a.push_back(rat_array(v));
    return a;
}

const json& expect(const json& j, const char* key) {
    if (!j.is_object() || !j.contains(key)) {
        throw ParseError(std::string("missing field \"") + key + "\"");
    }
    return j.at(key);
}

int expect_int(const json& j, const char* key) {
    const json& v = expect(j, key);
    if (!v.is_number_integer()) throw ParseError(std::string("field \"") + key + "\" must be an integer");
    return v.get<int>();
}

Vec parse_rat_array(const json& a, const char* what) {
    if (!a.is_array()) throw ParseError(std::string(what) + " must be an array");
    Vec v;
    for (const json& x : a) {
        if (!x.is_string()) throw ParseError(std::string(what) + " entries must be rational strings");
        v.push_back(rat_from_string(x.get<std::string>()));
    }
    return v;
}

Mat parse_mat(const json& a, int ncols, const char* what) {
    if (!a.is_array()) throw ParseError(std::string(what) + " must be an array of rows");
    std::vector<Vec> rows;
    for (const json& r : a) {
        Vec row = parse_rat_array(r, what);
        if (static_cast<int>(row.size()) != ncols) {
            throw ParseError(std::string(what) + " row width disagrees with the dimension");
        }
        rows.push_back(std::move(row));
    }
    return Mat::from_rows(std::move(rows), ncols);
}

std::string kind_of(const json& j) {
    const json& k = expect(j, "kind");
    if (!k.is_string()) throw ParseError("field \"kind\" must be a string");
    return k.get<std::string>();
}

void check_kind(const json& j, const char* kind) {
    if (kind_of(j) != kind) {
        throw ParseError(std::string("expected a \"") + kind + "\" document, found \"" + kind_of(j) + "\"");
    }
}

}  // namespace

json hrep_to_json(const HRep& p) {
    return json{{"kind", "hrep"},
                {"dim", p.dim},
                {"eq", json{{"A", mat_array(p.eq_A)}, {"b", rat_array(p.eq_b)}}},
                {"ineq", json{{"C", mat_array(p.ineq_C)}, {"d", rat_array(p.ineq_d)}}}};
}

json vrep_to_json(const VRep& v) {
    return json{{"kind", "vrep"},
                {"dim", v.dim},
                {"points", vec_list(v.points)},
                {"rays", vec_list(v.rays)},
                {"lineality", vec_list(v.lineality)}};
}

json multifn_to_json(const MultiFn& f) {
    return json{{"kind", "multifn"}, {"nx", f.nx}, {"ny", f.ny}, {"graph", hrep_to_json(f.graph)}};
}

json pcfunc_to_json(const PCFunc& f) {
    return json{{"kind", "pcf"}, {"n", f.n}, {"epi", hrep_to_json(f.epi)}};
}

json relopen_to_json(const RelOpenHRep& r) {
    return json{{"kind", "relopen"},
                {"dim", r.dim},
                {"eq", json{{"A", mat_array(r.eq_A)}, {"b", rat_array(r.eq_b)}}},
                {"strict", json{{"C", mat_array(r.strict_C)}, {"d", rat_array(r.strict_d)}}}};
}

json point_to_json(const Vec& v) { return json{{"kind", "point"}, {"v", rat_array(v)}}; }

json matrix_to_json(const Mat& m) {
    return json{{"kind", "matrix"}, {"nrows", m.nrows}, {"ncols", m.ncols}, {"A", mat_array(m)}};
}

HRep hrep_from_json(const json& j) {
    check_kind(j, "hrep");
    const int dim = expect_int(j, "dim");
    const json& eq = expect(j, "eq");
    const json& ineq = expect(j, "ineq");
    return make_hrep(dim, parse_mat(expect(eq, "A"), dim, "eq.A"), parse_rat_array(expect(eq, "b"), "eq.b"),
                     parse_mat(expect(ineq, "C"), dim, "ineq.C"),
                     parse_rat_array(expect(ineq, "d"), "ineq.d"));
}

VRep vrep_from_json(const json& j) {
    check_kind(j, "vrep");
    const int dim = expect_int(j, "dim");
    auto parse_list = [&](const char* key) {
        const json& a = expect(j, key);
        if (!a.is_array()) throw ParseError(std::string(key) + " must be an array");
        std::vector<Vec> out;
        for (const json& e : a) {
            Vec v = parse_rat_array(e, key);
            if (static_cast<int>(v.size()) != dim) {
                throw ParseError(std::string(key) + " entry width disagrees with the dimension");
            }
            out.push_back(std::move(v));
        }
        return out;
    };
    return make_vrep(dim, parse_list("points"), parse_list("rays"), parse_list("lineality"));
}

MultiFn multifn_from_json(const json& j) {
    check_kind(j, "multifn");
    return make_multifn(expect_int(j, "nx"), expect_int(j, "ny"), hrep_from_json(expect(j, "graph")));
}

PCFunc pcfunc_from_json(const json& j) {
    check_kind(j, "pcf");
    return make_pcfunc(expect_int(j, "n"), hrep_from_json(expect(j, "epi")));
}

RelOpenHRep relopen_from_json(const json& j) {
    check_kind(j, "relopen");
    RelOpenHRep r;
    r.dim = expect_int(j, "dim");
    const json& eq = expect(j, "eq");
    const json& strict = expect(j, "strict");
    r.eq_A = parse_mat(expect(eq, "A"), r.dim, "eq.A");
    r.eq_b = parse_rat_array(expect(eq, "b"), "eq.b");
    r.strict_C = parse_mat(expect(strict, "C"), r.dim, "strict.C");
    r.strict_d = parse_rat_array(expect(strict, "d"), "strict.d");
    if (static_cast<int>(r.eq_b.size()) != r.eq_A.nrows || static_cast<int>(r.strict_d.size()) != r.strict_C.nrows) {
        throw ParseError("relopen rhs sizes disagree with the row counts");
    }
    return r;
}

Vec point_from_json(const json& j) {
    check_kind(j, "point");
    return parse_rat_array(expect(j, "v"), "v");
}

Mat matrix_from_json(const json& j) {
    check_kind(j, "matrix");
    const int nrows = expect_int(j, "nrows");
    const int ncols = expect_int(j, "ncols");
    Mat m = parse_mat(expect(j, "A"), ncols, "A");
    if (m.nrows != nrows) throw ParseError("matrix row count disagrees with \"nrows\"");
    return m;
}

Document document_from_json(const json& j) {
    const std::string kind = kind_of(j);
    if (kind == "hrep") return hrep_from_json(j);
    if (kind == "vrep") return vrep_from_json(j);
    if (kind == "multifn") return multifn_from_json(j);
    if (kind == "pcf") return pcfunc_from_json(j);
    if (kind == "relopen") return relopen_from_json(j);
    if (kind == "point") return point_from_json(j);
    if (kind == "matrix") return matrix_from_json(j);
    throw ParseError("unknown document kind \"" + kind + "\"");
}

namespace {

json parse_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::exception& e) {
        throw ParseError(path + ": " + e.what());
    }
    return j;
}

}  // namespace

Document load_document(const std::string& path) { return document_from_json(parse_file(path)); }

HRep load_hrep(const std::string& path) { return hrep_from_json(parse_file(path)); }
VRep load_vrep(const std::string& path) { return vrep_from_json(parse_file(path)); }
MultiFn load_multifn(const std::string& path) { return multifn_from_json(parse_file(path)); }
PCFunc load_pcfunc(const std::string& path) { return pcfunc_from_json(parse_file(path)); }
Vec load_point(const std::string& path) { return point_from_json(parse_file(path)); }
Mat load_matrix(const std::string& path) { return matrix_from_json(parse_file(path)); }

namespace {

std::string row_text(const json& coeffs, const std::string& rel, const json& rhs) {
    std::ostringstream os;
    os << "⟨(";
    for (std::size_t i = 0; i < coeffs.size(); ++i) {
        if (i) os << ", ";
        os << coeffs[i].get<std::string>();
    }
    os << "), x⟩ " << rel << " " << rhs.get<std::string>();
    return os.str();
}

void block_text(std::ostringstream& os, const json& block, const char* mat_key, const char* rhs_key,
                const std::string& rel) {
    const json& a = block.at(mat_key);
    const json& b = block.at(rhs_key);
    for (std::size_t i = 0; i < a.size(); ++i) os << "  " << row_text(a[i], rel, b[i]) << "\n";
}

void vec_block_text(std::ostringstream& os, const json& list, const char* label) {
    for (const json& v : list) {
        os << "  " << label << " (";
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (i) os << ", ";
            os << v[i].get<std::string>();
        }
        os << ")\n";
    }
}

}  // namespace

std::string render_text(const json& doc) {
    std::ostringstream os;
    if (doc.is_object() && doc.contains("kind")) {
        const std::string kind = doc.at("kind").get<std::string>();
        if (kind == "hrep") {
            os << "hrep dim " << doc.at("dim").get<int>() << "\n";
            block_text(os, doc.at("eq"), "A", "b", "=");
            block_text(os, doc.at("ineq"), "C", "d", "≤");
            return os.str();
        }
        if (kind == "relopen") {
            os << "relopen dim " << doc.at("dim").get<int>() << "\n";
            block_text(os, doc.at("eq"), "A", "b", "=");
            block_text(os, doc.at("strict"), "C", "d", "<");
            return os.str();
        }
        if (kind == "vrep") {
            os << "vrep dim " << doc.at("dim").get<int>() << "\n";
            vec_block_text(os, doc.at("points"), "point");
            vec_block_text(os, doc.at("rays"), "ray");
            vec_block_text(os, doc.at("lineality"), "lineality");
            return os.str();
        }
        if (kind == "multifn") {
            os << "multifn nx " << doc.at("nx").get<int>() << " ny " << doc.at("ny").get<int>() << "\n";
            os << render_text(doc.at("graph"));
            return os.str();
        }
        if (kind == "pcf") {
            os << "pcf n " << doc.at("n").get<int>() << "\n";
            os << render_text(doc.at("epi"));
            return os.str();
        }
        if (kind == "point") {
            os << "point (";
            const json& v = doc.at("v");
            for (std::size_t i = 0; i < v.size(); ++i) {
                if (i) os << ", ";
                os << v[i].get<std::string>();
            }
            os << ")\n";
            return os.str();
        }
    }
    // Scalar results ("member", "value", check reports, ...) print as
    // key: value lines.
    if (doc.is_object()) {
        for (auto it = doc.begin(); it != doc.end(); ++it) {
            os << it.key() << ": " << it.value().dump() << "\n";
        }
        return os.str();
    }
    os << doc.dump() << "\n";
    return os.str();
}

}  // namespace pcvx
