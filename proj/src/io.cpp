#include "syzygy/io.hpp"

#include <fstream>
#include <utility>
#include <vector>

namespace syzygy {

namespace {

const Json& need(const Json& j, const char* key, const char* what) {
    auto it = j.find(key);
    if (it == j.end()) {
        throw Error(std::string(what) + ": missing field '" + key + "'");
    }
    return *it;
}

int need_int(const Json& j, const char* key, const char* what) {
    const Json& v = need(j, key, what);
    if (!v.is_number_integer()) {
        throw Error(std::string(what) + ": field '" + key +
                    "' must be an integer");
    }
    return v.get<int>();
}

Scalar scalar_from_json(const Json& j, const FieldSpec& f, const char* what) {
    if (!j.is_string()) {
        throw Error(std::string(what) + ": scalar entries must be strings");
    }
    return Scalar::parse(f, j.get<std::string>());
}

// flat array of scalar strings <-> dim x 1 coordinate column
Json column_to_json(const Matrix& col) {
    Json out = Json::array();
    for (int i = 0; i < col.rows(); ++i) {
        out.push_back(col.at(i, 0).to_string());
    }
    return out;
}

Matrix column_from_json(const Json& j, const FieldSpec& f, int dim,
                        const char* what) {
    if (!j.is_array() || static_cast<int>(j.size()) != dim) {
        throw Error(std::string(what) + ": expected a vector of length " +
                    std::to_string(dim));
    }
    Matrix out(f, dim, 1);
    for (int i = 0; i < dim; ++i) {
        out.set(i, 0, scalar_from_json(j[i], f, what));
    }
    return out;
}

}  // namespace

Json matrix_to_json(const Matrix& m) {
    Json out = Json::array();
    for (int i = 0; i < m.rows(); ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols(); ++j) {
            row.push_back(m.at(i, j).to_string());
        }
        out.push_back(std::move(row));
    }
    return out;
}

Matrix matrix_from_json(const Json& j, const FieldSpec& f, int rows,
                        int cols) {
    if (!j.is_array()) {
        throw Error("matrix: expected an array of rows");
    }
    if (!j.empty() && static_cast<int>(j.size()) != rows) {
        throw Error("matrix: expected " + std::to_string(rows) +
                    " rows, got " + std::to_string(j.size()));
    }
    if (j.empty() && rows != 0 && cols != 0) {
        throw Error("matrix: expected " + std::to_string(rows) +
                    " rows, got an empty array");
    }
    Matrix out(f, rows, cols);
    for (int r = 0; r < static_cast<int>(j.size()); ++r) {
        const Json& row = j[r];
        if (!row.is_array() || static_cast<int>(row.size()) != cols) {
            throw Error("matrix: row " + std::to_string(r) + " must have " +
                        std::to_string(cols) + " entries");
        }
        for (int c = 0; c < cols; ++c) {
            out.set(r, c, scalar_from_json(row[c], f, "matrix"));
        }
    }
    return out;
}

Json field_to_json(const FieldSpec& f) {
    if (f.is_rationals()) {
        return Json{{"kind", "Q"}};
    }
    return Json{{"kind", "Fp"}, {"p", f.p()}};
}

FieldSpec field_from_json(const Json& j) {
    const Json& kind = need(j, "kind", "field");
    if (kind == "Q") {
        return FieldSpec::rationals();
    }
    if (kind == "Fp") {
        const Json& p = need(j, "p", "field");
        if (!p.is_number_unsigned() && !p.is_number_integer()) {
            throw Error("field: 'p' must be a prime integer");
        }
        long long v = p.get<long long>();
        if (v < 2 || v > 0x7fffffff) {
            throw Error("field: 'p' out of range");
        }
        return FieldSpec::prime_field(static_cast<uint32_t>(v));
    }
    throw Error("field: 'kind' must be \"Q\" or \"Fp\"");
}

Json algebra_to_json(const Algebra& a) {
    Json out;
    out["field"] = field_to_json(a.field);
    out["dim"] = a.dim;
    out["labels"] = a.basis_names;
    out["unit"] = column_to_json(a.unit);
    Json sc = Json::array();
    for (int i = 0; i < a.dim; ++i) {
        for (int j = 0; j < a.dim; ++j) {
            for (int k = 0; k < a.dim; ++k) {
                const Scalar& v = a.left_mult[i].at(k, j);
                if (!v.is_zero()) {
                    sc.push_back(Json::array({i, j, k, v.to_string()}));
                }
            }
        }
    }
    out["structure_constants"] = std::move(sc);
    Json idem = Json::array();
    for (const Matrix& e : a.idempotents) {
        idem.push_back(column_to_json(e));
    }
    out["idempotents"] = std::move(idem);
    if (a.radical_rows) {
        Json rb = Json::array();
        for (int r = 0; r < a.radical_rows->rows(); ++r) {
            Json row = Json::array();
            for (int c = 0; c < a.radical_rows->cols(); ++c) {
                row.push_back(a.radical_rows->at(r, c).to_string());
            }
            rb.push_back(std::move(row));
        }
        out["radical_basis"] = std::move(rb);
    }
    Json gens = Json::array();
    for (const Matrix& g : a.generators) {
        gens.push_back(column_to_json(g));
    }
    out["generators"] = std::move(gens);
    if (!a.name.empty()) {
        out["name"] = a.name;
    }
    return out;
}

Algebra algebra_from_json(const Json& j) {
    Algebra a;
    a.field = field_from_json(need(j, "field", "algebra"));
    a.dim = need_int(j, "dim", "algebra");
    if (a.dim <= 0) {
        throw Error("algebra: 'dim' must be positive");
    }
    if (auto it = j.find("labels"); it != j.end()) {
        if (!it->is_array()) {
            throw Error("algebra: 'labels' must be an array of strings");
        }
        for (const Json& s : *it) {
            if (!s.is_string()) {
                throw Error("algebra: 'labels' must be an array of strings");
            }
            a.basis_names.push_back(s.get<std::string>());
        }
        if (static_cast<int>(a.basis_names.size()) != a.dim) {
            throw Error("algebra: expected " + std::to_string(a.dim) +
                        " labels");
        }
    } else {
        for (int i = 0; i < a.dim; ++i) {
            a.basis_names.push_back("b" + std::to_string(i));
        }
    }
    for (int i = 0; i < a.dim; ++i) {
        a.left_mult.emplace_back(a.field, a.dim, a.dim);
    }
    const Json& sc = need(j, "structure_constants", "algebra");
    if (!sc.is_array()) {
        throw Error("algebra: 'structure_constants' must be an array");
    }
    for (const Json& t : sc) {
        if (!t.is_array() || t.size() != 4) {
            throw Error(
                "algebra: structure constants are quadruples [i, j, k, "
                "value]");
        }
        int i = t[0].get<int>();
        int jj = t[1].get<int>();
        int k = t[2].get<int>();
        if (i < 0 || i >= a.dim || jj < 0 || jj >= a.dim || k < 0 ||
            k >= a.dim) {
            throw Error("algebra: structure constant index out of range");
        }
        a.left_mult[i].set(k, jj,
                           scalar_from_json(t[3], a.field, "algebra"));
    }
    a.unit = column_from_json(need(j, "unit", "algebra"), a.field, a.dim,
                              "algebra unit");
    if (auto it = j.find("idempotents"); it != j.end()) {
        for (const Json& e : *it) {
            a.idempotents.push_back(
                column_from_json(e, a.field, a.dim, "algebra idempotent"));
        }
    }
    if (a.idempotents.empty()) {
        a.idempotents = {a.unit};
    }
    if (auto it = j.find("radical_basis"); it != j.end()) {
        if (!it->is_array()) {
            throw Error("algebra: 'radical_basis' must be an array of rows");
        }
        Matrix rad(a.field, static_cast<int>(it->size()), a.dim);
        for (int r = 0; r < rad.rows(); ++r) {
            const Json& row = (*it)[r];
            if (!row.is_array() || static_cast<int>(row.size()) != a.dim) {
                throw Error("algebra: radical basis row " +
                            std::to_string(r) + " must have " +
                            std::to_string(a.dim) + " entries");
            }
            for (int c = 0; c < a.dim; ++c) {
                rad.set(r, c, scalar_from_json(row[c], a.field, "algebra"));
            }
        }
        a.radical_rows = std::move(rad);
    }
    if (auto it = j.find("generators"); it != j.end()) {
        for (const Json& g : *it) {
            a.generators.push_back(
                column_from_json(g, a.field, a.dim, "algebra generator"));
        }
    }
    if (auto it = j.find("name"); it != j.end() && it->is_string()) {
        a.name = it->get<std::string>();
    }
    std::vector<std::string> problems = a.validate();
    if (!problems.empty()) {
        std::string msg = "algebra: validation failed:";
        for (const std::string& p : problems) {
            msg += " " + p + ";";
        }
        throw Error(msg);
    }
    return a;
}

Json module_to_json(const Module& m, bool inline_algebra) {
    Json out;
    if (inline_algebra) {
        out["algebra"] = algebra_to_json(m.algebra);
    }
    out["dim"] = m.dim;
    Json act = Json::array();
    for (const Matrix& mat : m.action) {
        act.push_back(matrix_to_json(mat));
    }
    out["action"] = std::move(act);
    if (!m.name.empty()) {
        out["name"] = m.name;
    }
    return out;
}

Module module_from_json(const Json& j, const Algebra* context,
                        const std::filesystem::path& base_dir) {
    Module m;
    if (auto it = j.find("algebra"); it != j.end()) {
        if (it->is_string()) {
            m.algebra = load_algebra(base_dir / it->get<std::string>());
        } else if (it->is_object()) {
            m.algebra = algebra_from_json(*it);
        } else {
            throw Error("module: 'algebra' must be an object or a path");
        }
    } else if (context != nullptr) {
        m.algebra = *context;
    } else {
        throw Error("module: no algebra given and none available from "
                    "context");
    }
    m.dim = need_int(j, "dim", "module");
    if (m.dim < 0) {
        throw Error("module: 'dim' must be non-negative");
    }
    const Json& act = need(j, "action", "module");
    if (!act.is_array() ||
        static_cast<int>(act.size()) != m.algebra.dim) {
        throw Error("module: expected one action matrix per algebra basis "
                    "element (" +
                    std::to_string(m.algebra.dim) + ")");
    }
    for (const Json& mat : act) {
        m.action.push_back(
            matrix_from_json(mat, m.algebra.field, m.dim, m.dim));
    }
    if (auto it = j.find("name"); it != j.end() && it->is_string()) {
        m.name = it->get<std::string>();
    }
    std::vector<std::string> problems = m.validate();
    if (!problems.empty()) {
        std::string msg = "module: validation failed:";
        for (const std::string& p : problems) {
            msg += " " + p + ";";
        }
        throw Error(msg);
    }
    return m;
}

Json complex_to_json(const ChainComplex& c) {
    Json out;
    out["algebra"] = algebra_to_json(c.algebra);
    out["low"] = c.low;
    out["high"] = c.high;
    Json terms = Json::array();
    for (const Module& t : c.terms) {
        terms.push_back(module_to_json(t, false));
    }
    out["terms"] = std::move(terms);
    Json diffs = Json::array();
    for (const Matrix& d : c.differentials) {
        diffs.push_back(matrix_to_json(d));
    }
    out["differentials"] = std::move(diffs);
    if (!c.name.empty()) {
        out["name"] = c.name;
    }
    return out;
}

ChainComplex complex_from_json(const Json& j,
                               const std::filesystem::path& base_dir) {
    ChainComplex c;
    const Json& alg = need(j, "algebra", "complex");
    if (alg.is_string()) {
        c.algebra = load_algebra(base_dir / alg.get<std::string>());
    } else if (alg.is_object()) {
        c.algebra = algebra_from_json(alg);
    } else {
        throw Error("complex: 'algebra' must be an object or a path");
    }
    c.low = need_int(j, "low", "complex");
    c.high = need_int(j, "high", "complex");
    int count = c.high - c.low + 1;
    if (count < 0) {
        count = 0;
    }
    const Json& terms = need(j, "terms", "complex");
    if (!terms.is_array() || static_cast<int>(terms.size()) != count) {
        throw Error("complex: expected " + std::to_string(count) +
                    " terms for the window [" + std::to_string(c.low) +
                    ", " + std::to_string(c.high) + "]");
    }
    for (const Json& t : terms) {
        c.terms.push_back(module_from_json(t, &c.algebra, base_dir));
    }
    const Json& diffs = need(j, "differentials", "complex");
    int dcount = count > 0 ? count - 1 : 0;
    if (!diffs.is_array() || static_cast<int>(diffs.size()) != dcount) {
        throw Error("complex: expected " + std::to_string(dcount) +
                    " differentials");
    }
    for (int k = 0; k < dcount; ++k) {
        c.differentials.push_back(matrix_from_json(
            diffs[k], c.algebra.field, c.terms[k].dim, c.terms[k + 1].dim));
    }
    if (auto it = j.find("name"); it != j.end() && it->is_string()) {
        c.name = it->get<std::string>();
    }
    std::vector<std::string> problems = c.validate();
    if (!problems.empty()) {
        std::string msg = "complex: validation failed:";
        for (const std::string& p : problems) {
            msg += " " + p + ";";
        }
        throw Error(msg);
    }
    return c;
}

Json resolution_to_json(const Resolution& r) {
    Json out;
    out["betti"] = r.betti();
    out["terminated"] = r.terminated;
    Json terms = Json::array();
    for (const Module& t : r.terms) {
        terms.push_back(t.dim);
    }
    out["terms"] = std::move(terms);
    out["augmentation"] = matrix_to_json(r.augmentation);
    Json diffs = Json::array();
    for (const Matrix& d : r.differentials) {
        diffs.push_back(matrix_to_json(d));
    }
    out["differentials"] = std::move(diffs);
    return out;
}

Json orth_report_to_json(const OrthReport& r) {
    Json out;
    out["schema"] = "garc-report/1";
    out["kind"] = "orthogonality";
    out["left"] = r.left;
    out["right"] = r.right;
    out["window"] = r.window;
    out["threshold"] = r.threshold;
    out["dims"] = r.dims;
    out["nonzero_degrees"] = r.nonzero_degrees;
    out["vanishes_in_window"] = r.vanishes_in_window;
    out["resolution_bound"] = r.resolution_bound;
    return out;
}

Json pd_certificate_to_json(const PdCertificate& c) {
    Json out;
    out["module"] = c.module.name;
    out["module_dim"] = c.module.dim;
    if (const auto* f = std::get_if<FinitePd>(&c.verdict)) {
        out["verdict"] = "finite";
        out["value"] = f->value;
        out["resolution"] = resolution_to_json(f->resolution);
    } else if (const auto* inf = std::get_if<InfinitePd>(&c.verdict)) {
        out["verdict"] = "infinite";
        out["reason"] = inf->reason;
        if (inf->periodicity) {
            Json p;
            p["a"] = inf->periodicity->a;
            p["b"] = inf->periodicity->b;
            p["iso"] = matrix_to_json(inf->periodicity->iso);
            p["recurring_dim"] = inf->periodicity->omega_a.dim;
            out["periodicity"] = std::move(p);
        }
        if (inf->frobenius_iso) {
            out["frobenius_iso"] = matrix_to_json(*inf->frobenius_iso);
        }
    } else {
        const auto& lb = std::get<LowerBoundOnly>(c.verdict);
        out["verdict"] = "lower-bound-only";
        out["bound"] = lb.bound;
    }
    return out;
}

Json omega_result_to_json(const OmegaResult& r) {
    Json out;
    out["inf"] = r.inf;
    out["width"] = r.width;
    out["placement"] = r.placement;
    out["bound"] = r.bound;
    out["omega"] = module_to_json(r.omega, false);
    Json q = Json::array();
    for (int k = r.q.low; k <= r.q.high; ++k) {
        q.push_back(r.q.term(k).dim);
    }
    out["q_term_dims"] = std::move(q);
    out["q_low"] = r.q.low;
    return out;
}

Json perfect_report_to_json(const PerfectReport& r) {
    Json out;
    out["schema"] = "garc-report/1";
    out["kind"] = "perfect-check";
    switch (r.verdict) {
        case Perfectness::Perfect:
            out["verdict"] = "Perfect";
            break;
        case Perfectness::NotPerfect:
            out["verdict"] = "NotPerfect";
            break;
        case Perfectness::Unknown:
            out["verdict"] = "Unknown";
            break;
    }
    out["note"] = r.note;
    if (r.omega_result) {
        out["omega"] = omega_result_to_json(*r.omega_result);
    }
    if (r.pd) {
        out["pd"] = pd_certificate_to_json(*r.pd);
    }
    return out;
}

Json garc_report_to_json(const GarcReport& r) {
    Json out;
    out["schema"] = "garc-report/1";
    out["kind"] = "garc-check";
    out["instance"] = r.instance.name;
    out["window"] = r.window;
    out["threshold"] = r.threshold;
    out["bound"] = r.bound;
    out["self_orth"] = orth_report_to_json(r.self_orth);
    out["regular_orth"] = orth_report_to_json(r.regular_orth);
    out["hypotheses_hold"] = r.hypotheses_hold;
    if (r.omega_result) {
        out["omega"] = omega_result_to_json(*r.omega_result);
        out["omega_window"] = r.omega_window;
        out["transfer_threshold"] = r.transfer_threshold;
    }
    if (r.omega_self_orth) {
        out["omega_self_orth"] = orth_report_to_json(*r.omega_self_orth);
    }
    if (r.omega_regular_orth) {
        out["omega_regular_orth"] =
            orth_report_to_json(*r.omega_regular_orth);
    }
    out["transfer_violations_self"] = r.transfer_violations_self;
    out["transfer_violations_regular"] = r.transfer_violations_regular;
    if (r.omega_pd) {
        out["omega_pd"] = pd_certificate_to_json(*r.omega_pd);
    }
    out["classification"] = to_string(r.classification);
    out["note"] = r.note;
    return out;
}

Json schulz_report_to_json(const SchulzScanReport& r) {
    Json out;
    out["schema"] = "garc-report/1";
    out["kind"] = "schulz-scan";
    out["field"] = field_to_json(r.field);
    out["c"] = r.c_value;
    out["window"] = r.window;
    out["bound"] = r.bound;
    if (r.root_of_unity) {
        out["root_of_unity"] = *r.root_of_unity;
    } else {
        out["root_of_unity"] = nullptr;
    }
    out["frobenius"] = r.frobenius;
    out["note"] = r.note;
    Json entries = Json::array();
    for (const SchulzEntry& e : r.entries) {
        Json je;
        je["label"] = e.label;
        je["dim"] = e.module.dim;
        je["projective"] = e.projective;
        je["ext_self"] = e.ext_self;
        je["ext_regular"] = e.ext_regular;
        if (e.vanish_from) {
            je["vanish_from"] = *e.vanish_from;
        } else {
            je["vanish_from"] = nullptr;
        }
        if (e.pd) {
            je["pd"] = pd_certificate_to_json(*e.pd);
        }
        entries.push_back(std::move(je));
    }
    out["entries"] = std::move(entries);
    out["hits"] = r.hits;
    out["strict_hits"] = r.strict_hits;
    return out;
}

Json read_json(const std::filesystem::path& p) {
    std::ifstream in(p);
    if (!in) {
        throw Error("cannot open file: " + p.string());
    }
    try {
        return Json::parse(in);
    } catch (const Json::parse_error& e) {
        throw Error("malformed JSON in " + p.string() + ": " + e.what());
    }
}

void write_json(const std::filesystem::path& p, const Json& j) {
    std::ofstream out(p);
    if (!out) {
        throw Error("cannot write file: " + p.string());
    }
    out << j.dump(2) << "\n";
}

namespace {

// json access errors (wrong types, bad casts) count as malformed files
template <typename F>
auto guarded(const std::filesystem::path& p, const char* kind, F&& f) {
    try {
        return f();
    } catch (const Json::exception& e) {
        throw Error("malformed " + std::string(kind) + " file " + p.string() +
                    ": " + e.what());
    }
}

}  // namespace

Algebra load_algebra(const std::filesystem::path& p) {
    Json j = read_json(p);
    return guarded(p, "algebra", [&] { return algebra_from_json(j); });
}

Module load_module(const std::filesystem::path& p, const Algebra* context) {
    Json j = read_json(p);
    return guarded(p, "module", [&] {
        return module_from_json(j, context, p.parent_path());
    });
}

ChainComplex load_complex(const std::filesystem::path& p) {
    Json j = read_json(p);
    return guarded(p, "complex", [&] {
        return complex_from_json(j, p.parent_path());
    });
}

}  // namespace syzygy
