#include "syzygy/complex.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

namespace syzygy {

namespace {

Matrix vec_of(const Matrix& m) {
    Matrix v = Matrix::zeros(m.field(), m.rows() * m.cols(), 1);
    for (int j = 0; j < m.cols(); ++j) {
        for (int i = 0; i < m.rows(); ++i) {
            v.set(j * m.rows() + i, 0, m.at(i, j));
        }
    }
    return v;
}

std::vector<int> index_range(int first, int count) {
    std::vector<int> idx(count);
    std::iota(idx.begin(), idx.end(), first);
    return idx;
}

}  // namespace

Module ChainComplex::term(int k) const {
    if (in_window(k)) {
        return terms[k - low];
    }
    return zero_module(algebra);
}

Matrix ChainComplex::differential(int k) const {
    if (k > low && k <= high) {
        return differentials[k - low - 1];
    }
    return Matrix::zeros(algebra.field, term(k - 1).dim, term(k).dim);
}

bool ChainComplex::is_zero_object() const {
    for (const Module& m : terms) {
        if (m.dim != 0) {
            return false;
        }
    }
    return true;
}

std::vector<std::string> ChainComplex::validate() const {
    std::vector<std::string> issues;
    int span = high - low + 1;
    if (high < low) {
        if (!terms.empty() || !differentials.empty()) {
            issues.push_back("empty window must carry no terms");
        }
        return issues;
    }
    if (static_cast<int>(terms.size()) != span) {
        issues.push_back("window holds " + std::to_string(span) +
                         " degrees but " + std::to_string(terms.size()) +
                         " terms are present");
        return issues;
    }
    if (static_cast<int>(differentials.size()) != span - 1) {
        issues.push_back("expected " + std::to_string(span - 1) +
                         " differentials, found " +
                         std::to_string(differentials.size()));
        return issues;
    }
    for (int j = 0; j < span; ++j) {
        if (!terms[j].algebra.same_algebra(algebra)) {
            issues.push_back("term " + std::to_string(low + j) +
                             " lives over a different algebra");
        }
        for (const std::string& s : terms[j].validate()) {
            issues.push_back("term " + std::to_string(low + j) + ": " + s);
        }
    }
    if (!issues.empty()) {
        return issues;
    }
    for (int j = 0; j + 1 < span; ++j) {
        const Matrix& d = differentials[j];
        if (d.rows() != terms[j].dim || d.cols() != terms[j + 1].dim) {
            issues.push_back("differential d_" + std::to_string(low + j + 1) +
                             " has the wrong shape");
            continue;
        }
        for (int i = 0; i < algebra.dim; ++i) {
            if (d * terms[j + 1].action[i] != terms[j].action[i] * d) {
                issues.push_back("differential d_" +
                                 std::to_string(low + j + 1) +
                                 " is not a module map");
                break;
            }
        }
    }
    if (!issues.empty()) {
        return issues;
    }
    for (int j = 0; j + 2 < span; ++j) {
        if (!(differentials[j] * differentials[j + 1]).is_zero()) {
            issues.push_back("d_" + std::to_string(low + j + 1) + " o d_" +
                             std::to_string(low + j + 2) + " != 0");
        }
    }
    return issues;
}

ChainComplex zero_complex(const Algebra& a) {
    ChainComplex c;
    c.algebra = a;
    c.name = "0";
    c.low = 0;
    c.high = -1;
    return c;
}

ChainComplex stalk(const Module& m, int degree) {
    if (m.dim == 0) {
        return zero_complex(m.algebra);
    }
    ChainComplex c;
    c.algebra = m.algebra;
    c.name = m.name + "[" + std::to_string(degree) + "]";
    c.low = degree;
    c.high = degree;
    c.terms = {m};
    return c;
}

ChainComplex shift(const ChainComplex& c, int i) {
    ChainComplex out = c;
    out.name = "shift(" + c.name + ", " + std::to_string(i) + ")";
    out.low += i;
    out.high += i;
    if (i % 2 != 0) {
        for (Matrix& d : out.differentials) {
            d = -d;
        }
    }
    return out;
}

ChainComplex trimmed(const ChainComplex& c) {
    int lo = c.low;
    while (lo <= c.high && c.term(lo).dim == 0) {
        ++lo;
    }
    int hi = c.high;
    while (hi >= lo && c.term(hi).dim == 0) {
        --hi;
    }
    if (lo > hi) {
        ChainComplex z = zero_complex(c.algebra);
        z.name = c.name;
        return z;
    }
    ChainComplex out;
    out.algebra = c.algebra;
    out.name = c.name;
    out.low = lo;
    out.high = hi;
    for (int k = lo; k <= hi; ++k) {
        out.terms.push_back(c.term(k));
        if (k > lo) {
            out.differentials.push_back(c.differential(k));
        }
    }
    return out;
}

ChainComplex truncate_at_most(const ChainComplex& c, int n) {
    if (n < c.low) {
        return zero_complex(c.algebra);
    }
    ChainComplex out;
    out.algebra = c.algebra;
    out.name = c.name + "<=" + std::to_string(n);
    out.low = c.low;
    out.high = std::min(c.high, n);
    for (int k = out.low; k <= out.high; ++k) {
        out.terms.push_back(c.term(k));
        if (k > out.low) {
            out.differentials.push_back(c.differential(k));
        }
    }
    return out;
}

ChainComplex truncate_at_least(const ChainComplex& c, int n) {
    if (n > c.high) {
        return zero_complex(c.algebra);
    }
    ChainComplex out;
    out.algebra = c.algebra;
    out.name = c.name + ">=" + std::to_string(n);
    out.low = std::max(c.low, n);
    out.high = c.high;
    for (int k = out.low; k <= out.high; ++k) {
        out.terms.push_back(c.term(k));
        if (k > out.low) {
            out.differentials.push_back(c.differential(k));
        }
    }
    return out;
}

Module homology(const ChainComplex& c, int k) {
    Module tk = c.term(k);
    std::string hname = "H_" + std::to_string(k) + "(" + c.name + ")";
    if (tk.dim == 0) {
        Module z = zero_module(c.algebra);
        z.name = hname;
        return z;
    }
    SubmoduleData cycles = submodule(tk, kernel_basis(c.differential(k)));
    auto boundary = solve(cycles.inclusion, c.differential(k + 1));
    if (!boundary) {
        throw InvalidParameter(
            "homology: differentials do not compose to zero at degree " +
            std::to_string(k));
    }
    Module h = quotient(cycles.module, *boundary).module;
    h.name = hname;
    return h;
}

int homology_dim(const ChainComplex& c, int k) {
    if (!c.in_window(k)) {
        return 0;
    }
    return c.term(k).dim - rank(c.differential(k)) -
           rank(c.differential(k + 1));
}

std::optional<std::pair<int, int>> homology_support(const ChainComplex& c) {
    std::optional<std::pair<int, int>> out;
    for (int k = c.low; k <= c.high; ++k) {
        if (homology_dim(c, k) > 0) {
            if (!out) {
                out = {k, k};
            } else {
                out->second = k;
            }
        }
    }
    return out;
}

Matrix ChainMap::component(int k) const {
    int n = static_cast<int>(components.size());
    if (k >= low && k < low + n) {
        return components[k - low];
    }
    return Matrix::zeros(target.algebra.field, target.term(k).dim,
                         source.term(k).dim);
}

std::vector<std::string> ChainMap::validate() const {
    std::vector<std::string> issues;
    if (!source.algebra.same_algebra(target.algebra)) {
        issues.push_back("source and target live over different algebras");
        return issues;
    }
    int n = static_cast<int>(components.size());
    for (int j = 0; j < n; ++j) {
        int k = low + j;
        const Matrix& f = components[j];
        if (f.rows() != target.term(k).dim || f.cols() != source.term(k).dim) {
            issues.push_back("component at degree " + std::to_string(k) +
                             " has the wrong shape");
            return issues;
        }
        Module s = source.term(k);
        Module t = target.term(k);
        for (int i = 0; i < source.algebra.dim; ++i) {
            if (f * s.action[i] != t.action[i] * f) {
                issues.push_back("component at degree " + std::to_string(k) +
                                 " is not a module map");
                break;
            }
        }
    }
    if (!issues.empty()) {
        return issues;
    }
    int lo = std::min(source.low, target.low);
    int hi = std::max(source.high, target.high) + 1;
    for (int k = lo; k <= hi; ++k) {
        if (component(k - 1) * source.differential(k) !=
            target.differential(k) * component(k)) {
            issues.push_back("square at degree " + std::to_string(k) +
                             " does not commute");
        }
    }
    return issues;
}

ChainMap identity_chain_map(const ChainComplex& c) {
    ChainMap f;
    f.source = c;
    f.target = c;
    f.low = c.low;
    for (int k = c.low; k <= c.high; ++k) {
        f.components.push_back(
            Matrix::identity(c.algebra.field, c.term(k).dim));
    }
    return f;
}

ChainMap zero_chain_map(const ChainComplex& src, const ChainComplex& tgt) {
    if (!src.algebra.same_algebra(tgt.algebra)) {
        throw AlgebraMismatch("zero_chain_map: algebras differ");
    }
    ChainMap f;
    f.source = src;
    f.target = tgt;
    f.low = src.low;
    return f;
}

ChainMap stalk_chain_map(const Module& m, const Module& n, const Matrix& f,
                         int degree) {
    if (!m.algebra.same_algebra(n.algebra)) {
        throw AlgebraMismatch("stalk_chain_map: algebras differ");
    }
    if (f.rows() != n.dim || f.cols() != m.dim) {
        throw InvalidParameter("stalk_chain_map: map shape does not match");
    }
    ChainMap out;
    out.source = stalk(m, degree);
    out.target = stalk(n, degree);
    out.low = degree;
    out.components = {f};
    return out;
}

ChainComplex cone(const ChainMap& f) {
    const ChainComplex& s = f.source;
    const ChainComplex& t = f.target;
    if (!s.algebra.same_algebra(t.algebra)) {
        throw AlgebraMismatch("cone: algebras differ");
    }
    {
        int lo = std::min(s.low, t.low);
        int hi = std::max(s.high, t.high) + 1;
        for (int k = lo; k <= hi; ++k) {
            if (f.component(k - 1) * s.differential(k) !=
                t.differential(k) * f.component(k)) {
                throw InvalidParameter(
                    "cone: the given components do not form a chain map");
            }
        }
    }
    bool s_empty = s.high < s.low;
    bool t_empty = t.high < t.low;
    if (s_empty && t_empty) {
        return zero_complex(s.algebra);
    }
    ChainComplex out;
    out.algebra = s.algebra;
    out.name = "cone(" + s.name + " -> " + t.name + ")";
    out.low = s_empty ? t.low : (t_empty ? s.low + 1 : std::min(s.low + 1, t.low));
    out.high =
        s_empty ? t.high : (t_empty ? s.high + 1 : std::max(s.high + 1, t.high));
    for (int k = out.low; k <= out.high; ++k) {
        out.terms.push_back(direct_sum(s.term(k - 1), t.term(k)));
        if (k > out.low) {
            int rtop = s.term(k - 2).dim;
            int rbot = t.term(k - 1).dim;
            int ctop = s.term(k - 1).dim;
            Matrix d = Matrix::zeros(s.algebra.field, rtop + rbot,
                                     ctop + t.term(k).dim);
            d.paste(0, 0, -s.differential(k - 1));
            d.paste(rtop, 0, f.component(k - 1));
            d.paste(rtop, ctop, t.differential(k));
            out.differentials.push_back(d);
        }
    }
    return out;
}

Matrix projective_lift(const Module& p, const Module& w, const Matrix& proj,
                       const Matrix& f) {
    if (proj.cols() != w.dim || f.cols() != p.dim ||
        proj.rows() != f.rows()) {
        throw InvalidParameter("projective_lift: shapes do not match");
    }
    if (p.dim == 0) {
        return Matrix::zeros(p.algebra.field, w.dim, 0);
    }
    Matrix homs = hom_space(p, w);
    Matrix eye = Matrix::identity(p.algebra.field, p.dim);
    auto alpha = solve(kronecker(eye, proj) * homs, vec_of(f));
    if (!alpha) {
        throw MissingStructure(
            "projective_lift: no module lift exists (is the map onto?)");
    }
    return unvec(homs * *alpha, w.dim, p.dim);
}

ResolvedComplex resolve(const ChainComplex& c, int bound) {
    {
        std::vector<std::string> issues = c.validate();
        if (!issues.empty()) {
            throw InvalidParameter("resolve: invalid complex: " + issues[0]);
        }
    }
    ResolvedComplex out;
    out.original = c;
    out.bound = bound;
    auto support = homology_support(c);
    if (!support) {
        out.p = zero_complex(c.algebra);
        out.p.name = "P(" + c.name + ")";
        out.epsilon = zero_chain_map(out.p, c);
        return out;
    }
    if (bound < support->second + 2) {
        throw BoundTooSmall("resolve: bound must be at least sup + 2 = " +
                            std::to_string(support->second + 2));
    }
    const FieldSpec& f = c.algebra.field;
    std::vector<Module> pterms;
    std::vector<Matrix> pdiffs;
    std::vector<Matrix> eps;
    Module pm1 = zero_module(c.algebra);  // P_{k-1}
    Module pm2 = zero_module(c.algebra);  // P_{k-2}
    Matrix dprev = Matrix::zeros(f, 0, 0);  // P_{k-1} -> P_{k-2}
    Matrix eprev = Matrix::zeros(f, c.term(c.low - 1).dim, 0);
    for (int k = c.low; k <= bound; ++k) {
        Module ck = c.term(k);
        Module cone_k = direct_sum(pm1, ck);
        int rtop = pm2.dim;
        Matrix dcone = Matrix::zeros(f, rtop + c.term(k - 1).dim,
                                     pm1.dim + ck.dim);
        dcone.paste(0, 0, -dprev);
        dcone.paste(rtop, 0, eprev);
        dcone.paste(rtop, pm1.dim, c.differential(k));
        SubmoduleData w = submodule(cone_k, kernel_basis(dcone));
        // boundaries arriving from c_{k+1} are already inside the kernel
        Matrix v = Matrix::zeros(f, pm1.dim + ck.dim, c.term(k + 1).dim);
        v.paste(pm1.dim, 0, c.differential(k + 1));
        auto vcoords = solve(w.inclusion, v);
        if (!vcoords) {
            throw InvalidParameter(
                "resolve: differentials do not compose to zero");
        }
        QuotientData q = quotient(w.module, *vcoords);
        Module pk;
        Matrix dpk(f, pm1.dim, 0);
        Matrix epsk(f, ck.dim, 0);
        if (q.module.dim == 0) {
            pk = zero_module(c.algebra);
        } else {
            Cover cov = projective_cover(q.module);
            Matrix lift = projective_lift(cov.projective, w.module,
                                          q.projection, cov.map);
            Matrix into_cone = w.inclusion * lift;
            Matrix upper = into_cone.select_rows(index_range(0, pm1.dim));
            epsk = into_cone.select_rows(index_range(pm1.dim, ck.dim));
            pk = cov.projective;
            dpk = -upper;
        }
        pterms.push_back(pk);
        if (k > c.low) {
            pdiffs.push_back(dpk);
        }
        eps.push_back(epsk);
        pm2 = pm1;
        pm1 = pk;
        dprev = dpk;
        eprev = epsk;
    }
    out.p.algebra = c.algebra;
    out.p.name = "P(" + c.name + ")";
    out.p.low = c.low;
    out.p.high = bound;
    out.p.terms = std::move(pterms);
    out.p.differentials = std::move(pdiffs);
    out.epsilon = ChainMap{out.p, c, c.low, std::move(eps)};
    return out;
}

namespace {

struct HomSlot {
    int k;         // Hom(P_k, n_{k-t})
    Matrix basis;  // columns: vectorized module maps
};

std::vector<HomSlot> hom_slots(const ChainComplex& p, const ChainComplex& n,
                               int t) {
    std::vector<HomSlot> out;
    int klo = std::max(p.low, n.low + t);
    int khi = std::min(p.high, n.high + t);
    for (int k = klo; k <= khi; ++k) {
        if (p.term(k).dim == 0 || n.term(k - t).dim == 0) {
            continue;
        }
        out.push_back({k, hom_space(p.term(k), n.term(k - t))});
    }
    return out;
}

int slot_dim(const std::vector<HomSlot>& slots) {
    int total = 0;
    for (const HomSlot& s : slots) {
        total += s.basis.cols();
    }
    return total;
}

// The degree-t differential of the total Hom complex, written in ambient
// (vectorized map) coordinates of level t+1: d(f)_k = dn o f_k -
// (-1)^t f_{k-1} o dP.
Matrix total_hom_differential(const ChainComplex& p, const ChainComplex& n,
                              int t, const std::vector<HomSlot>& src,
                              const std::vector<HomSlot>& tgt) {
    const FieldSpec& f = p.algebra.field;
    std::map<int, int> offset;
    int rows = 0;
    for (const HomSlot& s : tgt) {
        offset[s.k] = rows;
        rows += n.term(s.k - t - 1).dim * p.term(s.k).dim;
    }
    Matrix m = Matrix::zeros(f, rows, slot_dim(src));
    int col = 0;
    for (const HomSlot& s : src) {
        int nrows = n.term(s.k - t).dim;
        int pcols = p.term(s.k).dim;
        Matrix dn = n.differential(s.k - t);
        Matrix dp = p.differential(s.k + 1);
        for (int j = 0; j < s.basis.cols(); ++j) {
            Matrix g = unvec(s.basis.select_columns({j}), nrows, pcols);
            if (offset.count(s.k)) {
                m.paste(offset[s.k], col, vec_of(dn * g));
            }
            if (offset.count(s.k + 1)) {
                Matrix gd = g * dp;
                if (t % 2 == 0) {
                    gd = -gd;
                }
                m.paste(offset[s.k + 1], col, vec_of(gd));
            }
            ++col;
        }
    }
    return m;
}

int trimmed_top(const ChainComplex& c) {
    for (int k = c.high; k >= c.low; --k) {
        if (c.term(k).dim > 0) {
            return k;
        }
    }
    return c.low - 1;
}

}  // namespace

std::vector<int> derived_hom_dims(const ResolvedComplex& rm,
                                  const ChainComplex& n, int lo, int hi) {
    if (lo > hi) {
        throw InvalidParameter("derived_hom_dims: empty degree window");
    }
    if (!rm.original.algebra.same_algebra(n.algebra)) {
        throw AlgebraMismatch("derived_hom_dims: algebras differ");
    }
    std::vector<int> out(hi - lo + 1, 0);
    auto sm = homology_support(rm.original);
    auto sn = homology_support(n);
    if (!sm || !sn) {
        return out;  // zero object on one side
    }
    int contract = hi + (sn->second - sn->first) + sm->second + 2;
    // every Hom slot the window touches must sit inside the resolved range
    int safety = std::max(trimmed_top(n) + hi + 1, sm->second + 2);
    if (rm.bound < std::max(contract, safety)) {
        throw BoundTooSmall(
            "derived_hom_dims: window up to " + std::to_string(hi) +
            " needs a resolution bound of at least " +
            std::to_string(std::max(contract, safety)));
    }
    std::map<int, std::vector<HomSlot>> slots;
    for (int t = lo - 1; t <= hi + 1; ++t) {
        slots[t] = hom_slots(rm.p, n, t);
    }
    std::map<int, int> ranks;
    for (int t = lo - 1; t <= hi; ++t) {
        ranks[t] =
            rank(total_hom_differential(rm.p, n, t, slots[t], slots[t + 1]));
    }
    for (int i = lo; i <= hi; ++i) {
        out[i - lo] = slot_dim(slots[i]) - ranks[i] - ranks[i - 1];
    }
    return out;
}

int derived_hom_dim(const ChainComplex& m, const ChainComplex& n, int i,
                    int bound) {
    auto sm = homology_support(m);
    auto sn = homology_support(n);
    if (!sm || !sn) {
        return 0;
    }
    int contract = i + (sn->second - sn->first) + sm->second + 2;
    if (bound < contract) {
        throw BoundTooSmall("derived_hom_dim: bound must be at least " +
                            std::to_string(contract));
    }
    // resolve far enough for every slot the computation touches, even when
    // the stated precondition is met by a smaller bound
    int internal =
        std::max({bound, trimmed_top(n) + i + 1, sm->second + 2});
    ResolvedComplex rm = resolve(m, internal);
    return derived_hom_dims(rm, n, i, i)[0];
}

}  // namespace syzygy
