#include "syzygy/algebra.hpp"

#include <algorithm>

namespace syzygy {

namespace {

std::string pos(int i, int j) {
    return "(" + std::to_string(i) + ", " + std::to_string(j) + ")";
}

// row space membership: v lies in the row space of r
bool in_row_space(const Matrix& r, const Matrix& v_row, int r_rank) {
    return rank(vstack(r, v_row)) == r_rank;
}

}  // namespace

Matrix Algebra::basis_element(int i) const {
    if (i < 0 || i >= dim) throw InvalidParameter("basis_element: index out of range");
    Matrix e(field, dim, 1);
    e.set(i, 0, Scalar::one(field));
    return e;
}

Scalar Algebra::structure_constant(int i, int j, int k) const {
    return left_mult[i].at(k, j);
}

Matrix Algebra::left_mult_of(const Matrix& x) const {
    if (x.rows() != dim || x.cols() != 1)
        throw DimensionMismatch("left_mult_of: element must be dim x 1");
    Matrix out(field, dim, dim);
    for (int i = 0; i < dim; ++i) {
        Scalar xi = x.at(i, 0);
        if (xi.is_zero()) continue;
        out = out + left_mult[i].scaled(xi);
    }
    return out;
}

Matrix Algebra::right_mult_of(const Matrix& x) const {
    if (x.rows() != dim || x.cols() != 1)
        throw DimensionMismatch("right_mult_of: element must be dim x 1");
    Matrix out(field, dim, dim);
    for (int i = 0; i < dim; ++i) out.paste(0, i, left_mult[i] * x);
    return out;
}

Matrix Algebra::multiply(const Matrix& x, const Matrix& y) const {
    return left_mult_of(x) * y;
}

const Matrix& Algebra::radical() const {
    if (!radical_rows)
        throw MissingStructure("algebra '" + name + "' has no radical data");
    return *radical_rows;
}

bool Algebra::is_local() const { return rank(radical()) == dim - 1; }

bool Algebra::same_algebra(const Algebra& o) const {
    return field == o.field && dim == o.dim && unit == o.unit && left_mult == o.left_mult;
}

std::vector<std::string> Algebra::validate() const {
    std::vector<std::string> out;
    if (dim <= 0) {
        out.push_back("dimension must be positive");
        return out;
    }
    if (static_cast<int>(left_mult.size()) != dim) {
        out.push_back("expected " + std::to_string(dim) + " left-multiplication matrices, got " +
                      std::to_string(left_mult.size()));
        return out;
    }
    for (int i = 0; i < dim; ++i) {
        if (!(left_mult[i].field() == field) || left_mult[i].rows() != dim ||
            left_mult[i].cols() != dim) {
            out.push_back("left multiplication matrix " + std::to_string(i) +
                          " has wrong shape or field");
            return out;
        }
    }
    if (!(unit.field() == field) || unit.rows() != dim || unit.cols() != 1) {
        out.push_back("unit has wrong shape or field");
        return out;
    }

    if (!left_mult_of(unit).is_identity())
        out.push_back("unit law fails on the left: 1*e_j != e_j");
    if (!right_mult_of(unit).is_identity())
        out.push_back("unit law fails on the right: e_j*1 != e_j");

    for (int i = 0; i < dim; ++i) {
        for (int j = 0; j < dim; ++j) {
            Matrix eij = left_mult[i] * basis_element(j);
            if (left_mult_of(eij) != left_mult[i] * left_mult[j]) {
                out.push_back("associativity fails at basis pair " + pos(i, j));
            }
        }
    }

    if (!idempotents.empty()) {
        Matrix sum(field, dim, 1);
        for (std::size_t a = 0; a < idempotents.size(); ++a) {
            const Matrix& f = idempotents[a];
            if (f.rows() != dim || f.cols() != 1 || !(f.field() == field)) {
                out.push_back("idempotent " + std::to_string(a) + " has wrong shape or field");
                return out;
            }
            if (f.is_zero()) out.push_back("idempotent " + std::to_string(a) + " is zero");
            if (multiply(f, f) != f)
                out.push_back("idempotent " + std::to_string(a) + " is not idempotent");
            sum = sum + f;
            for (std::size_t b = a + 1; b < idempotents.size(); ++b) {
                if (!multiply(f, idempotents[b]).is_zero() ||
                    !multiply(idempotents[b], f).is_zero())
                    out.push_back("idempotents " + std::to_string(a) + " and " +
                                  std::to_string(b) + " are not orthogonal");
            }
        }
        if (sum != unit) out.push_back("idempotents do not sum to the unit");
    }

    if (radical_rows) {
        const Matrix& r = *radical_rows;
        if (r.cols() != dim || !(r.field() == field)) {
            out.push_back("radical rows have wrong shape or field");
            return out;
        }
        int rr = rank(r);
        bool ideal = true;
        for (int v = 0; v < r.rows() && ideal; ++v) {
            Matrix elt = r.select_rows({v}).transpose();
            for (int i = 0; i < dim && ideal; ++i) {
                Matrix lm = (left_mult[i] * elt).transpose();
                Matrix rm = (right_mult_of(basis_element(i)) * elt).transpose();
                if (!in_row_space(r, lm, rr) || !in_row_space(r, rm, rr)) {
                    out.push_back("radical is not a two-sided ideal (fails at basis " +
                                  std::to_string(i) + ")");
                    ideal = false;
                }
            }
        }
        if (ideal) {
            // nilpotency: powers of the ideal must reach zero
            Matrix power = r;
            bool nil = rank(power) == 0;
            for (int step = 0; step < dim && !nil; ++step) {
                Matrix next(field, 0, dim);
                for (int v = 0; v < power.rows(); ++v) {
                    Matrix elt = power.select_rows({v}).transpose();
                    Matrix lm = left_mult_of(elt);
                    for (int w = 0; w < r.rows(); ++w) {
                        next = vstack(next, (lm * r.select_rows({w}).transpose()).transpose());
                    }
                }
                int nr = rank(next);
                if (nr == 0) {
                    nil = true;
                } else if (nr == rank(power)) {
                    break;  // stabilized without vanishing
                }
                power = next;
            }
            if (!nil) out.push_back("radical is not nilpotent");
        }
        if (ideal && field.is_rationals()) {
            // characteristic zero: the Jacobson radical is exactly the kernel
            // of the trace form (x, y) -> tr(L_x L_y)
            Matrix gram(field, dim, dim);
            for (int i = 0; i < dim; ++i) {
                for (int j = i; j < dim; ++j) {
                    Matrix prod = left_mult[i] * left_mult[j];
                    Scalar tr = Scalar::zero(field);
                    for (int t = 0; t < dim; ++t) tr = tr + prod.at(t, t);
                    gram.set(i, j, tr);
                    gram.set(j, i, tr);
                }
            }
            Matrix j_cols = kernel_basis(gram);
            int want = j_cols.cols();
            if (rr != want || rank(vstack(r, j_cols.transpose())) != want)
                out.push_back("radical rows do not span the Jacobson radical");
        }
    }

    if (!generators.empty()) {
        Matrix span = unit.transpose();
        for (const Matrix& g : generators) {
            if (g.rows() != dim || g.cols() != 1 || !(g.field() == field)) {
                out.push_back("generator has wrong shape or field");
                return out;
            }
            span = vstack(span, g.transpose());
        }
        int prev = rank(span);
        for (int step = 0; step < dim; ++step) {
            Matrix next = span;
            for (int v = 0; v < span.rows(); ++v) {
                Matrix elt = span.select_rows({v}).transpose();
                for (const Matrix& g : generators)
                    next = vstack(next, multiply(elt, g).transpose());
            }
            int nr = rank(next);
            span = next;
            if (nr == prev) break;
            prev = nr;
        }
        if (prev != dim)
            out.push_back("generators span a proper subalgebra of dimension " +
                          std::to_string(prev));
    }

    return out;
}

Algebra opposite(const Algebra& a) {
    Algebra op = a;
    op.name = a.name + "^op";
    // multiplication reversed: column j of the new L_i is e_j * e_i
    for (int i = 0; i < a.dim; ++i) op.left_mult[i] = a.right_mult_of(a.basis_element(i));
    // unit, idempotents, radical, and generators carry over verbatim:
    // idempotence and orthogonality are order-symmetric, and J(A^op) = J(A)
    return op;
}

Algebra schulz_algebra(const FieldSpec& f, const Scalar& c) {
    if (!(c.field() == f)) throw FieldMismatch("schulz_algebra: c lives in the wrong field");
    if (c.is_zero()) throw InvalidParameter("schulz_algebra: c must be nonzero");
    Algebra a;
    a.field = f;
    a.name = "schulz(c=" + c.to_string() + ")";
    a.dim = 4;
    a.basis_names = {"1", "x", "y", "xy"};
    Scalar one = Scalar::one(f), zero = Scalar::zero(f);
    a.unit = Matrix(f, 4, 1);
    a.unit.set(0, 0, one);
    // basis order 1, x, y, xy with x^2 = y^2 = 0, x y = xy, y x = c^{-1} xy
    auto L = [&](std::initializer_list<std::initializer_list<Scalar>> cols) {
        std::vector<std::vector<Scalar>> grid;
        for (auto& col : cols) grid.emplace_back(col);
        Matrix out(f, 4, 4);
        for (int j = 0; j < 4; ++j)
            for (int i = 0; i < 4; ++i) out.set(i, j, grid[j][i]);
        return out;
    };
    Matrix l0 = Matrix::identity(f, 4);
    Matrix l1 = L({{zero, one, zero, zero},    // x*1 = x
                   {zero, zero, zero, zero},   // x*x = 0
                   {zero, zero, zero, one},    // x*y = xy
                   {zero, zero, zero, zero}}); // x*xy = 0
    Matrix l2 = L({{zero, zero, one, zero},                // y*1 = y
                   {zero, zero, zero, c.inverse()},        // y*x = c^{-1} xy
                   {zero, zero, zero, zero},               // y*y = 0
                   {zero, zero, zero, zero}});             // y*xy = 0
    Matrix l3 = L({{zero, zero, zero, one},    // xy*1 = xy
                   {zero, zero, zero, zero},
                   {zero, zero, zero, zero},
                   {zero, zero, zero, zero}});
    a.left_mult = {l0, l1, l2, l3};
    a.idempotents = {a.unit};
    Matrix rad(f, 3, 4);
    for (int i = 0; i < 3; ++i) rad.set(i, i + 1, one);
    a.radical_rows = rad;
    a.generators = {a.basis_element(1), a.basis_element(2)};
    return a;
}

Algebra truncated_poly(const FieldSpec& f, int n) {
    if (n < 1) throw InvalidParameter("truncated_poly: n must be >= 1");
    Algebra a;
    a.field = f;
    a.name = "k[t]/(t^" + std::to_string(n) + ")";
    a.dim = n;
    Scalar one = Scalar::one(f);
    a.unit = Matrix(f, n, 1);
    a.unit.set(0, 0, one);
    for (int i = 0; i < n; ++i) {
        Matrix l(f, n, n);
        for (int j = 0; i + j < n; ++j) l.set(i + j, j, one);
        a.left_mult.push_back(l);
        a.basis_names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    }
    a.idempotents = {a.unit};
    Matrix rad(f, n - 1, n);
    for (int i = 0; i + 1 < n; ++i) rad.set(i, i + 1, one);
    a.radical_rows = rad;
    if (n >= 2) a.generators = {a.basis_element(1)};
    return a;
}

Algebra path_an(const FieldSpec& f, int n) {
    if (n < 1) throw InvalidParameter("path_an: n must be >= 1");
    Algebra a;
    a.field = f;
    a.name = "kA" + std::to_string(n);
    a.dim = n * (n + 1) / 2;
    Scalar one = Scalar::one(f);
    // basis e_ij, 1 <= i <= j <= n, ordered lexicographically
    std::vector<std::pair<int, int>> basis;
    std::vector<std::vector<int>> idx(n + 1, std::vector<int>(n + 1, -1));
    for (int i = 1; i <= n; ++i) {
        for (int j = i; j <= n; ++j) {
            idx[i][j] = static_cast<int>(basis.size());
            basis.emplace_back(i, j);
            a.basis_names.push_back("e" + std::to_string(i) + std::to_string(j));
        }
    }
    a.unit = Matrix(f, a.dim, 1);
    for (int i = 1; i <= n; ++i) a.unit.set(idx[i][i], 0, one);
    for (int t = 0; t < a.dim; ++t) {
        auto [i, j] = basis[t];
        Matrix l(f, a.dim, a.dim);
        // e_ij * e_kl = [i = l] e_kj
        for (int s = 0; s < a.dim; ++s) {
            auto [k, l_] = basis[s];
            if (l_ == i) l.set(idx[k][j], s, one);
        }
        a.left_mult.push_back(l);
    }
    for (int i = 1; i <= n; ++i) a.idempotents.push_back(a.basis_element(idx[i][i]));
    Matrix rad(f, a.dim - n, a.dim);
    {
        int row = 0;
        for (int t = 0; t < a.dim; ++t)
            if (basis[t].first != basis[t].second) rad.set(row++, t, one);
    }
    a.radical_rows = rad;
    for (int i = 1; i <= n; ++i) a.generators.push_back(a.basis_element(idx[i][i]));
    for (int i = 1; i < n; ++i) a.generators.push_back(a.basis_element(idx[i][i + 1]));
    return a;
}

Algebra full_matrix(const FieldSpec& f, int n) {
    if (n < 1) throw InvalidParameter("full_matrix: n must be >= 1");
    Algebra a;
    a.field = f;
    a.name = "M" + std::to_string(n) + "(k)";
    a.dim = n * n;
    Scalar one = Scalar::one(f);
    auto idx = [n](int r, int c) { return r * n + c; };
    a.unit = Matrix(f, a.dim, 1);
    for (int r = 0; r < n; ++r) a.unit.set(idx(r, r), 0, one);
    for (int r = 0; r < n; ++r) {
        for (int c = 0; c < n; ++c) {
            Matrix l(f, a.dim, a.dim);
            // E_rc * E_st = [c = s] E_rt
            for (int s = 0; s < n; ++s)
                for (int t = 0; t < n; ++t)
                    if (c == s) l.set(idx(r, t), idx(s, t), one);
            a.left_mult.push_back(l);
            a.basis_names.push_back("E" + std::to_string(r + 1) + std::to_string(c + 1));
        }
    }
    for (int r = 0; r < n; ++r) a.idempotents.push_back(a.basis_element(idx(r, r)));
    a.radical_rows = Matrix(f, 0, a.dim);  // semisimple
    if (n >= 2) {
        for (int r = 0; r + 1 < n; ++r) {
            a.generators.push_back(a.basis_element(idx(r, r + 1)));
            a.generators.push_back(a.basis_element(idx(r + 1, r)));
        }
    }
    return a;
}

Algebra cyclic_group(const FieldSpec& f, int n) {
    if (n < 1) throw InvalidParameter("cyclic_group: n must be >= 1");
    Algebra a;
    a.field = f;
    a.name = "k[Z/" + std::to_string(n) + "]";
    a.dim = n;
    Scalar one = Scalar::one(f);
    a.unit = Matrix(f, n, 1);
    a.unit.set(0, 0, one);
    for (int i = 0; i < n; ++i) {
        Matrix l(f, n, n);
        for (int j = 0; j < n; ++j) l.set((i + j) % n, j, one);
        a.left_mult.push_back(l);
        a.basis_names.push_back(i == 0 ? "1" : i == 1 ? "t" : "t^" + std::to_string(i));
    }
    int m = n;
    if (f.is_prime_field()) {
        uint32_t p = f.p();
        while (m % static_cast<int>(p) == 0) m /= static_cast<int>(p);
    }
    if (m == n) {
        a.radical_rows = Matrix(f, 0, n);  // Maschke: semisimple
    } else {
        // radical generated by t^m - 1: basis (t^m - 1) t^j, j < n - m
        Matrix rad(f, n - m, n);
        for (int j = 0; j + m < n; ++j) {
            rad.set(j, m + j, one);
            rad.set(j, j, -one);
        }
        a.radical_rows = rad;
    }
    if (n == 1 || m == 1) a.idempotents = {a.unit};
    if (n >= 2) a.generators = {a.basis_element(1)};
    return a;
}

std::optional<uint64_t> root_of_unity_order(const Scalar& c) {
    if (c.is_zero()) return std::nullopt;
    if (c.field().is_rationals()) {
        if (c.rational() == 1) return 1;
        if (c.rational() == -1) return 2;
        return std::nullopt;
    }
    uint32_t p = c.field().p();
    uint32_t r = c.residue();
    uint64_t order = p - 1;
    // peel prime factors of p-1 off the order while the power stays 1
    uint64_t rem = p - 1;
    for (uint64_t q = 2; q * q <= rem; ++q) {
        if (rem % q) continue;
        while (rem % q == 0) rem /= q;
        while (order % q == 0 && fp_pow(r, order / q, p) == 1) order /= q;
    }
    if (rem > 1) {
        while (order % rem == 0 && fp_pow(r, order / rem, p) == 1) order /= rem;
    }
    return order;
}

}  // namespace syzygy
