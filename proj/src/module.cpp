#include "syzygy/module.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <utility>

namespace syzygy {

namespace {

// Do the columns of `cols` all lie in the column span of `basis`?
bool columns_in_span(const Matrix& basis, const Matrix& cols) {
    return solve(basis, cols).has_value();
}

}  // namespace

Matrix Module::action_of(const Matrix& elt) const {
    if (elt.rows() != algebra.dim || elt.cols() != 1) {
        throw DimensionMismatch("action_of expects algebra coordinates " +
                                std::to_string(algebra.dim) + " x 1, got " +
                                std::to_string(elt.rows()) + " x " +
                                std::to_string(elt.cols()));
    }
    Matrix out(algebra.field, dim, dim);
    for (int i = 0; i < algebra.dim; ++i) {
        Scalar c = elt.at(i, 0);
        if (c.is_zero()) continue;
        out = out + action[i].scaled(c);
    }
    return out;
}

std::vector<std::string> Module::validate() const {
    std::vector<std::string> issues;
    if (dim < 0) {
        issues.push_back("negative dimension");
        return issues;
    }
    if (static_cast<int>(action.size()) != algebra.dim) {
        issues.push_back("expected " + std::to_string(algebra.dim) +
                         " action matrices, found " +
                         std::to_string(action.size()));
        return issues;
    }
    for (int i = 0; i < algebra.dim; ++i) {
        if (action[i].rows() != dim || action[i].cols() != dim) {
            issues.push_back("action matrix " + std::to_string(i) +
                             " is not " + std::to_string(dim) + " x " +
                             std::to_string(dim));
            return issues;
        }
        if (!(action[i].field() == algebra.field)) {
            issues.push_back("action matrix " + std::to_string(i) +
                             " lives over the wrong field");
            return issues;
        }
    }
    if (action_of(algebra.unit) != Matrix::identity(algebra.field, dim)) {
        issues.push_back("the unit does not act as the identity");
    }
    for (int i = 0; i < algebra.dim; ++i) {
        for (int j = 0; j < algebra.dim; ++j) {
            Matrix prod = algebra.multiply(algebra.basis_element(i),
                                           algebra.basis_element(j));
            if (action_of(prod) != action[i] * action[j]) {
                issues.push_back("action incompatible with the product e_" +
                                 std::to_string(i) + " e_" +
                                 std::to_string(j));
            }
        }
    }
    return issues;
}

Module regular_module(const Algebra& a) {
    Module m;
    m.algebra = a;
    m.name = "regular(" + a.name + ")";
    m.dim = a.dim;
    m.action = a.left_mult;
    return m;
}

Module zero_module(const Algebra& a) {
    Module m;
    m.algebra = a;
    m.name = "0";
    m.dim = 0;
    m.action.assign(a.dim, Matrix(a.field, 0, 0));
    return m;
}

Module direct_sum(const Module& m, const Module& n) {
    if (!m.algebra.same_algebra(n.algebra)) {
        throw AlgebraMismatch("direct_sum of modules over different algebras");
    }
    Module out;
    out.algebra = m.algebra;
    out.name = "(" + m.name + " (+) " + n.name + ")";
    out.dim = m.dim + n.dim;
    out.action.reserve(m.algebra.dim);
    for (int i = 0; i < m.algebra.dim; ++i) {
        out.action.push_back(direct_sum(m.action[i], n.action[i]));
    }
    return out;
}

Module power_module(const Module& m, int copies) {
    if (copies < 0) {
        throw InvalidParameter("power_module needs copies >= 0");
    }
    Module out = zero_module(m.algebra);
    for (int i = 0; i < copies; ++i) {
        out = direct_sum(out, m);
    }
    out.name = m.name + "^" + std::to_string(copies);
    return out;
}

SubmoduleData submodule(const Module& m, const Matrix& span_cols) {
    if (span_cols.rows() != m.dim) {
        throw DimensionMismatch("submodule span must have " +
                                std::to_string(m.dim) + " rows");
    }
    Matrix u = image_basis(span_cols);
    int r = u.cols();
    SubmoduleData out;
    out.module.algebra = m.algebra;
    out.module.name = m.name + "[sub:" + std::to_string(r) + "]";
    out.module.dim = r;
    out.module.action.reserve(m.algebra.dim);
    for (int i = 0; i < m.algebra.dim; ++i) {
        auto coords = solve(u, m.action[i] * u);
        if (!coords) {
            throw InvalidParameter(
                "span is not invariant under basis element " +
                std::to_string(i));
        }
        out.module.action.push_back(*coords);
    }
    out.inclusion = u;
    return out;
}

QuotientData quotient(const Module& m, const Matrix& span_cols) {
    if (span_cols.rows() != m.dim) {
        throw DimensionMismatch("quotient span must have " +
                                std::to_string(m.dim) + " rows");
    }
    Matrix u = image_basis(span_cols);
    for (int i = 0; i < m.algebra.dim; ++i) {
        if (!columns_in_span(u, m.action[i] * u)) {
            throw InvalidParameter(
                "span is not invariant under basis element " +
                std::to_string(i));
        }
    }
    int r = u.cols();
    int q = m.dim - r;
    // Complete the span to a basis of the ambient space by standard basis
    // vectors: the pivot columns of [u | I] are the r columns of u followed
    // by m.dim - r completing columns of I.
    Matrix c = hstack(u, Matrix::identity(m.algebra.field, m.dim));
    RrefResult rr = rref(c);
    Matrix b = c.select_columns(rr.pivot_columns);
    Matrix binv = b.inverse();
    std::vector<int> bottom(q), right(q);
    for (int i = 0; i < q; ++i) {
        bottom[i] = r + i;
        right[i] = r + i;
    }
    QuotientData out;
    out.projection = binv.select_rows(bottom);  // kills u exactly
    out.section = b.select_columns(right);      // projection * section = I
    out.module.algebra = m.algebra;
    out.module.name = m.name + "/[" + std::to_string(r) + "]";
    out.module.dim = q;
    out.module.action.reserve(m.algebra.dim);
    for (int i = 0; i < m.algebra.dim; ++i) {
        out.module.action.push_back(out.projection * m.action[i] *
                                    out.section);
    }
    return out;
}

ExactnessPackage exactness_package(const Module& src, const Matrix& f,
                                   const Module& tgt) {
    if (!src.algebra.same_algebra(tgt.algebra)) {
        throw AlgebraMismatch(
            "exactness_package of a map between different algebras");
    }
    if (f.rows() != tgt.dim || f.cols() != src.dim) {
        throw DimensionMismatch("map shape does not match source/target");
    }
    for (int i = 0; i < src.algebra.dim; ++i) {
        if (f * src.action[i] != tgt.action[i] * f) {
            throw InvalidParameter("map does not intertwine basis element " +
                                   std::to_string(i));
        }
    }
    ExactnessPackage out;
    SubmoduleData ker = submodule(src, kernel_basis(f));
    out.kernel = ker.module;
    out.kernel.name = "ker";
    out.kernel_inclusion = ker.inclusion;
    SubmoduleData img = submodule(tgt, f);
    out.image = img.module;
    out.image.name = "im";
    out.image_inclusion = img.inclusion;
    // f = image_inclusion * image_corestriction, solved exactly.
    out.image_corestriction = *solve(img.inclusion, f);
    QuotientData coker = quotient(tgt, f);
    out.cokernel = coker.module;
    out.cokernel.name = "coker";
    out.cokernel_projection = coker.projection;
    return out;
}

Matrix radical_span(const Module& m) {
    const Matrix& rad = m.algebra.radical();  // g x dim_A rows
    Matrix stack(m.algebra.field, m.dim, 0);
    for (int t = 0; t < rad.rows(); ++t) {
        std::vector<int> row{t};
        Matrix coords = rad.select_rows(row).transpose();
        stack = hstack(stack, m.action_of(coords));
    }
    return image_basis(stack);
}

QuotientData top(const Module& m) { return quotient(m, radical_span(m)); }

Matrix hom_space(const Module& m, const Module& n) {
    if (!m.algebra.same_algebra(n.algebra)) {
        throw AlgebraMismatch("hom_space of modules over different algebras");
    }
    const FieldSpec& f = m.algebra.field;
    int total = n.dim * m.dim;
    if (total == 0) return Matrix(f, 0, 0);
    // f * act_m(a) = act_n(a) * f, vectorized column-major:
    //   (act_m(a)^T (x) I_n  -  I_m (x) act_n(a)) vec(f) = 0.
    // Commuting with a unital generating set is enough.
    std::vector<std::pair<Matrix, Matrix>> constraints;
    if (!m.algebra.generators.empty()) {
        for (const Matrix& g : m.algebra.generators) {
            constraints.emplace_back(m.action_of(g), n.action_of(g));
        }
    } else {
        for (int i = 0; i < m.algebra.dim; ++i) {
            constraints.emplace_back(m.action[i], n.action[i]);
        }
    }
    Matrix in = Matrix::identity(f, n.dim);
    Matrix im = Matrix::identity(f, m.dim);
    Matrix stack(f, 0, total);
    for (const auto& [am, an] : constraints) {
        Matrix k = kronecker(am.transpose(), in) - kronecker(im, an);
        stack = vstack(stack, k);
    }
    return kernel_basis(stack);
}

int hom_dim(const Module& m, const Module& n) {
    return hom_space(m, n).cols();
}

Matrix unvec(const Matrix& column, int rows, int cols) {
    if (column.rows() != rows * cols || column.cols() != 1) {
        throw DimensionMismatch("unvec expects a " +
                                std::to_string(rows * cols) + " x 1 column");
    }
    Matrix out(column.field(), rows, cols);
    for (int j = 0; j < cols; ++j) {
        for (int i = 0; i < rows; ++i) {
            out.set(i, j, column.at(j * rows + i, 0));
        }
    }
    return out;
}

Cover projective_cover(const Module& m) {
    const Algebra& a = m.algebra;
    if (!a.idempotents_known() || !a.radical_known()) {
        throw MissingStructure(
            "projective covers need idempotents and the radical");
    }
    Cover out;
    if (m.dim == 0) {
        out.projective = zero_module(a);
        out.map = Matrix(a.field, 0, 0);
        return out;
    }
    Module reg = regular_module(a);
    QuotientData t = top(m);
    int tdim = t.module.dim;
    if (tdim == 0) {
        throw MissingStructure("nonzero module with zero top");
    }

    // Greedy: walk the idempotent blocks and take the part of f_b * top(m)
    // not yet covered; each chosen vector w spans a copy of the simple
    // top(A f_b) inside top(m), so P picks up one copy of A f_b for it.
    struct Pick {
        int b;
        Matrix w;  // tdim x 1
    };
    std::vector<Pick> picks;
    Matrix covered(a.field, tdim, 0);
    int idem_count = static_cast<int>(a.idempotents.size());
    for (int b = 0; b < idem_count; ++b) {
        Matrix fb = a.idempotents[b];
        Matrix image = image_basis(t.module.action_of(fb));
        for (int j = 0; j < image.cols(); ++j) {
            Matrix w = image.select_columns({j});
            if (columns_in_span(covered, w)) continue;
            picks.push_back({b, w});
            Matrix orbit(a.field, tdim, 0);
            for (int i = 0; i < a.dim; ++i) {
                orbit = hstack(orbit, t.module.action[i] * w);
            }
            covered = image_basis(hstack(covered, orbit));
        }
    }
    if (covered.cols() != tdim) {
        throw MissingStructure(
            "idempotent blocks failed to span the top; the idempotent set "
            "is not complete");
    }

    Module p = zero_module(a);
    Matrix map(a.field, m.dim, 0);
    std::map<int, int> counts;
    for (const Pick& pick : picks) {
        SubmoduleData pb =
            submodule(reg, a.right_mult_of(a.idempotents[pick.b]));
        // Lift w through the top projection into f_b * m so that
        // u |-> u * lift is a module map A f_b -> m hitting w in the top.
        Matrix lift = m.action_of(a.idempotents[pick.b]) *
                      (t.section * pick.w);
        Matrix block(a.field, m.dim, pb.module.dim);
        for (int j = 0; j < pb.module.dim; ++j) {
            Matrix u = pb.inclusion.select_columns({j});
            block.paste(0, j, m.action_of(u) * lift);
        }
        p = direct_sum(p, pb.module);
        map = hstack(map, block);
        counts[pick.b] += 1;
    }
    p.name = "P(" + m.name + ")";
    if (rank(map) != m.dim) {
        throw MissingStructure("projective cover map is not surjective");
    }
    out.projective = std::move(p);
    out.map = std::move(map);
    out.summands.assign(counts.begin(), counts.end());
    return out;
}

bool is_projective(const Module& m) {
    Cover c = projective_cover(m);
    return c.projective.dim == m.dim;
}

Module syzygy_module(const Module& m) {
    Cover c = projective_cover(m);
    Module out = submodule(c.projective, kernel_basis(c.map)).module;
    out.name = "Omega(" + m.name + ")";
    return out;
}

std::vector<int> Resolution::betti() const {
    std::vector<int> out;
    out.reserve(summands.size());
    for (const auto& term : summands) {
        int total = 0;
        for (const auto& [idem, mult] : term) total += mult;
        out.push_back(total);
    }
    return out;
}

Resolution minimal_resolution(const Module& m, int length) {
    if (length < 0) {
        throw InvalidParameter("resolution length must be >= 0");
    }
    Resolution res;
    res.module = m;
    Cover c0 = projective_cover(m);
    res.terms.push_back(c0.projective);
    res.summands.push_back(c0.summands);
    res.augmentation = c0.map;
    SubmoduleData ker = submodule(res.terms[0], kernel_basis(c0.map));
    for (int k = 1; k <= length; ++k) {
        if (ker.module.dim == 0) break;
        ker.module.name = "Omega^" + std::to_string(k) + "(" + m.name + ")";
        Cover c = projective_cover(ker.module);
        res.terms.push_back(c.projective);
        res.summands.push_back(c.summands);
        res.differentials.push_back(ker.inclusion * c.map);
        // The next kernel already sits in terms[k] coordinates.
        ker = submodule(c.projective, kernel_basis(c.map));
    }
    res.terminated = (ker.module.dim == 0);
    return res;
}

namespace {

// dim Ext^i from a resolution of x that reaches degree i+1 (or terminates).
// With delta^k : Hom(P_k, y) -> Hom(P_{k+1}, y), f |-> f d_{k+1}:
//   dim Ext^i = dim Hom(P_i, y) - rank delta^i - rank delta^{i-1}.
int ext_from_resolution(const Resolution& res, const Module& y, int i) {
    if (i < 0) return 0;
    int nterms = static_cast<int>(res.terms.size());
    if (i >= nterms) {
        if (res.terminated) return 0;
        throw BoundTooSmall("resolution too short for Ext^" +
                            std::to_string(i));
    }
    auto delta_rank = [&](int k) -> int {
        // rank of Hom(P_k, y) -> Hom(P_{k+1}, y); d_{k+1} = differentials[k]
        if (k < 0) return 0;
        if (k >= static_cast<int>(res.differentials.size())) {
            if (res.terminated) return 0;
            throw BoundTooSmall("resolution too short for Ext^" +
                                std::to_string(k + 1));
        }
        Matrix h = hom_space(res.terms[k], y);
        if (h.cols() == 0) return 0;
        const Matrix& d = res.differentials[k];
        Matrix iy = Matrix::identity(y.algebra.field, y.dim);
        return rank(kronecker(d.transpose(), iy) * h);
    };
    int h_i = hom_dim(res.terms[i], y);
    return h_i - delta_rank(i) - delta_rank(i - 1);
}

}  // namespace

int ext_dim(const Module& x, const Module& y, int i) {
    if (!x.algebra.same_algebra(y.algebra)) {
        throw AlgebraMismatch("ext_dim of modules over different algebras");
    }
    if (i < 0) return 0;
    if (i == 0) return hom_dim(x, y);
    Resolution res = minimal_resolution(x, i + 1);
    return ext_from_resolution(res, y, i);
}

int ext_dim(const Module& x, const Module& y, int i, int bound) {
    if (i >= 0 && i > bound - 1) {
        throw BoundTooSmall("ext_dim needs i <= bound - 1, got i = " +
                            std::to_string(i) + ", bound = " +
                            std::to_string(bound));
    }
    return ext_dim(x, y, i);
}

std::vector<int> ext_dims(const Module& x, const Module& y, int lo, int hi) {
    if (!x.algebra.same_algebra(y.algebra)) {
        throw AlgebraMismatch("ext_dims of modules over different algebras");
    }
    if (hi < lo) return {};
    Resolution res = minimal_resolution(x, std::max(hi, 0) + 1);
    std::vector<int> out;
    out.reserve(hi - lo + 1);
    for (int i = lo; i <= hi; ++i) {
        out.push_back(ext_from_resolution(res, y, i));
    }
    return out;
}

Module dual_module(const Module& m) {
    Module out;
    out.algebra = opposite(m.algebra);
    out.name = "D(" + m.name + ")";
    out.dim = m.dim;
    out.action.reserve(m.algebra.dim);
    for (const Matrix& a : m.action) {
        out.action.push_back(a.transpose());
    }
    return out;
}

namespace {

bool is_invertible_map(const Matrix& f) {
    return f.rows() == f.cols() && rank(f) == f.rows();
}

// Defensive re-check that f really intertwines every basis action.
bool verified_intertwiner(const Module& m, const Module& n, const Matrix& f) {
    for (int i = 0; i < m.algebra.dim; ++i) {
        if (f * m.action[i] != n.action[i] * f) return false;
    }
    return true;
}

}  // namespace

IsoResult iso_test(const Module& m, const Module& n, uint64_t seed,
                   int attempts) {
    if (!m.algebra.same_algebra(n.algebra)) {
        throw AlgebraMismatch("iso_test of modules over different algebras");
    }
    const FieldSpec& f = m.algebra.field;
    if (m.dim != n.dim) {
        return IsoNo{"dimensions differ: " + std::to_string(m.dim) + " vs " +
                     std::to_string(n.dim)};
    }
    if (m.dim == 0) {
        return IsoYes{Matrix(f, 0, 0)};
    }
    if (m.action == n.action) {
        return IsoYes{Matrix::identity(f, m.dim)};
    }
    Matrix h = hom_space(m, n);
    int hd = h.cols();
    int hmm = hom_dim(m, m);
    int hnn = hom_dim(n, n);
    int hnm = hom_dim(n, m);
    if (!(hd == hmm && hmm == hnn && hnn == hnm)) {
        return IsoNo{"hom-dimension invariants differ: hom(m,n)=" +
                     std::to_string(hd) + " hom(n,m)=" + std::to_string(hnm) +
                     " hom(m,m)=" + std::to_string(hmm) + " hom(n,n)=" +
                     std::to_string(hnn)};
    }
    if (hd == 0) {
        return IsoNo{"Hom(m, n) = 0 between nonzero modules"};
    }

    auto candidate = [&](const Matrix& coeffs) -> std::optional<Matrix> {
        Matrix g = unvec(h * coeffs, n.dim, m.dim);
        if (is_invertible_map(g) && verified_intertwiner(m, n, g)) return g;
        return std::nullopt;
    };

    // Cheap deterministic candidates: each basis hom, then their sum.
    Matrix ones(f, hd, 1);
    for (int j = 0; j < hd; ++j) {
        Matrix e(f, hd, 1);
        e.set(j, 0, Scalar::one(f));
        ones.set(j, 0, Scalar::one(f));
        if (auto g = candidate(e)) return IsoYes{*g};
    }
    if (auto g = candidate(ones)) return IsoYes{*g};

    // Small prime-field hom spaces: exhaustive, hence definitive.
    if (f.is_prime_field() && hd <= 4) {
        uint64_t p = f.p();
        uint64_t count = 1;
        bool small = true;
        for (int j = 0; j < hd; ++j) {
            count *= p;
            if (count > 65536) {
                small = false;
                break;
            }
        }
        if (small) {
            Matrix coeffs(f, hd, 1);
            std::vector<uint32_t> digits(hd, 0);
            for (uint64_t it = 1; it < count; ++it) {
                int pos = 0;
                while (true) {
                    digits[pos] = static_cast<uint32_t>((digits[pos] + 1) % p);
                    coeffs.set(pos, 0, Scalar::of_residue(f, digits[pos]));
                    if (digits[pos] != 0) break;
                    ++pos;
                }
                if (auto g = candidate(coeffs)) return IsoYes{*g};
            }
            return IsoNo{"exhausted the hom space; no invertible map"};
        }
    }

    std::mt19937_64 rng(seed);
    for (int t = 0; t < attempts; ++t) {
        Matrix coeffs(f, hd, 1);
        for (int j = 0; j < hd; ++j) {
            if (f.is_rationals()) {
                long long c = static_cast<long long>(rng() % 9) - 4;
                coeffs.set(j, 0, Scalar::of_int(f, c));
            } else {
                coeffs.set(j, 0, Scalar::of_residue(f, rng() % f.p()));
            }
        }
        if (auto g = candidate(coeffs)) return IsoYes{*g};
    }
    return IsoUnknown{"no invertible combination found after " +
                      std::to_string(attempts) +
                      " random draws; hom invariants agree"};
}

}  // namespace syzygy
