#include "syzygy/matrix.hpp"

#include <algorithm>
#include <sstream>

#include "syzygy/fp_kernels.hpp"

namespace syzygy {

namespace {

void check_dims_nonneg(int rows, int cols) {
    if (rows < 0 || cols < 0)
        throw InvalidParameter("matrix dimensions must be non-negative");
}

}  // namespace

Matrix::Matrix(const FieldSpec& f, int rows, int cols)
    : field_(f), rows_(rows), cols_(cols) {
    check_dims_nonneg(rows, cols);
    std::size_t n = static_cast<std::size_t>(rows) * static_cast<std::size_t>(cols);
    if (f.is_rationals())
        q_.assign(n, Rational(0));
    else
        f_.assign(n, 0);
}

Matrix Matrix::identity(const FieldSpec& f, int n) {
    Matrix m(f, n, n);
    Scalar one = Scalar::one(f);
    for (int i = 0; i < n; ++i) m.set(i, i, one);
    return m;
}

Matrix Matrix::of(const FieldSpec& f,
                  std::initializer_list<std::initializer_list<const char*>> entries) {
    std::vector<std::vector<std::string>> grid;
    for (const auto& row : entries) {
        grid.emplace_back();
        for (const char* s : row) grid.back().emplace_back(s);
    }
    return of_strings(f, grid);
}

Matrix Matrix::of_strings(const FieldSpec& f,
                          const std::vector<std::vector<std::string>>& entries) {
    int rows = static_cast<int>(entries.size());
    int cols = rows == 0 ? 0 : static_cast<int>(entries[0].size());
    Matrix m(f, rows, cols);
    for (int i = 0; i < rows; ++i) {
        if (static_cast<int>(entries[i].size()) != cols)
            throw InvalidParameter("ragged entry grid");
        for (int j = 0; j < cols; ++j) m.set(i, j, Scalar::parse(f, entries[i][j]));
    }
    return m;
}

Scalar Matrix::at(int i, int j) const {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw InvalidParameter("matrix index out of range");
    std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_rationals()) return Scalar::of_rational(q_[idx]);
    return Scalar::of_residue(field_, f_[idx]);
}

void Matrix::set(int i, int j, const Scalar& v) {
    if (i < 0 || i >= rows_ || j < 0 || j >= cols_)
        throw InvalidParameter("matrix index out of range");
    if (!(v.field() == field_)) throw FieldMismatch("set: scalar field differs");
    std::size_t idx = static_cast<std::size_t>(i) * cols_ + j;
    if (field_.is_rationals())
        q_[idx] = v.rational();
    else
        f_[idx] = v.residue();
}

bool Matrix::is_zero() const {
    if (field_.is_rationals())
        return std::all_of(q_.begin(), q_.end(), [](const Rational& r) { return r == 0; });
    return std::all_of(f_.begin(), f_.end(), [](uint32_t r) { return r == 0; });
}

bool Matrix::is_identity() const {
    if (rows_ != cols_) return false;
    return *this == identity(field_, rows_);
}

bool Matrix::operator==(const Matrix& o) const {
    if (!(field_ == o.field_) || rows_ != o.rows_ || cols_ != o.cols_) return false;
    if (field_.is_rationals()) return q_ == o.q_;
    return f_ == o.f_;
}

void Matrix::check_field(const Matrix& o) const {
    if (!(field_ == o.field_))
        throw FieldMismatch("matrix arithmetic across different fields");
}

Matrix Matrix::operator+(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("add: shapes differ");
    Matrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = q_[i] + o.q_[i];
    } else {
        uint32_t p = field_.p();
        for (std::size_t i = 0; i < f_.size(); ++i) out.f_[i] = fp_add(f_[i], o.f_[i], p);
    }
    return out;
}

Matrix Matrix::operator-(const Matrix& o) const {
    check_field(o);
    if (rows_ != o.rows_ || cols_ != o.cols_)
        throw DimensionMismatch("subtract: shapes differ");
    Matrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = q_[i] - o.q_[i];
    } else {
        uint32_t p = field_.p();
        for (std::size_t i = 0; i < f_.size(); ++i) out.f_[i] = fp_sub(f_[i], o.f_[i], p);
    }
    return out;
}

Matrix Matrix::operator-() const {
    Matrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = -q_[i];
    } else {
        uint32_t p = field_.p();
        for (std::size_t i = 0; i < f_.size(); ++i) out.f_[i] = fp_neg(f_[i], p);
    }
    return out;
}

Matrix Matrix::operator*(const Matrix& o) const {
    check_field(o);
    if (cols_ != o.rows_)
        throw DimensionMismatch("multiply: " + std::to_string(rows_) + "x" +
                                std::to_string(cols_) + " by " + std::to_string(o.rows_) +
                                "x" + std::to_string(o.cols_));
    Matrix out(field_, rows_, o.cols_);
    if (field_.is_rationals()) {
        for (int i = 0; i < rows_; ++i) {
            for (int k = 0; k < cols_; ++k) {
                const Rational& a = q_[static_cast<std::size_t>(i) * cols_ + k];
                if (a == 0) continue;
                for (int j = 0; j < o.cols_; ++j) {
                    out.q_[static_cast<std::size_t>(i) * o.cols_ + j] +=
                        a * o.q_[static_cast<std::size_t>(k) * o.cols_ + j];
                }
            }
        }
    } else {
        fpk::Barrett br(field_.p());
        const fpk::Kernels& kn = fpk::active_kernels();
        for (int i = 0; i < rows_; ++i) {
            uint32_t* dst = out.f_.data() + static_cast<std::size_t>(i) * o.cols_;
            for (int k = 0; k < cols_; ++k) {
                uint32_t a = f_[static_cast<std::size_t>(i) * cols_ + k];
                if (a == 0) continue;
                kn.axpy(dst, o.f_.data() + static_cast<std::size_t>(k) * o.cols_, a,
                        static_cast<std::size_t>(o.cols_), br);
            }
        }
    }
    return out;
}

Matrix Matrix::scaled(const Scalar& a) const {
    if (!(a.field() == field_)) throw FieldMismatch("scaled: scalar field differs");
    Matrix out(field_, rows_, cols_);
    if (field_.is_rationals()) {
        const Rational& r = a.rational();
        for (std::size_t i = 0; i < q_.size(); ++i) out.q_[i] = r * q_[i];
    } else {
        fpk::Barrett br(field_.p());
        out.f_ = f_;
        fpk::active_kernels().scale(out.f_.data(), a.residue(), out.f_.size(), br);
    }
    return out;
}

Matrix Matrix::transpose() const {
    Matrix out(field_, cols_, rows_);
    for (int i = 0; i < rows_; ++i) {
        for (int j = 0; j < cols_; ++j) {
            std::size_t src = static_cast<std::size_t>(i) * cols_ + j;
            std::size_t dst = static_cast<std::size_t>(j) * rows_ + i;
            if (field_.is_rationals())
                out.q_[dst] = q_[src];
            else
                out.f_[dst] = f_[src];
        }
    }
    return out;
}

Matrix Matrix::select_columns(const std::vector<int>& cols) const {
    Matrix out(field_, rows_, static_cast<int>(cols.size()));
    for (int j = 0; j < static_cast<int>(cols.size()); ++j) {
        if (cols[j] < 0 || cols[j] >= cols_)
            throw InvalidParameter("select_columns: index out of range");
        for (int i = 0; i < rows_; ++i) out.set(i, j, at(i, cols[j]));
    }
    return out;
}

Matrix Matrix::select_rows(const std::vector<int>& rows) const {
    Matrix out(field_, static_cast<int>(rows.size()), cols_);
    for (int i = 0; i < static_cast<int>(rows.size()); ++i) {
        if (rows[i] < 0 || rows[i] >= rows_)
            throw InvalidParameter("select_rows: index out of range");
        for (int j = 0; j < cols_; ++j) out.set(i, j, at(rows[i], j));
    }
    return out;
}

void Matrix::paste(int i, int j, const Matrix& block) {
    if (!(block.field_ == field_)) throw FieldMismatch("paste: field differs");
    if (i < 0 || j < 0 || i + block.rows_ > rows_ || j + block.cols_ > cols_)
        throw InvalidParameter("paste: block exceeds bounds");
    for (int a = 0; a < block.rows_; ++a)
        for (int b = 0; b < block.cols_; ++b) set(i + a, j + b, block.at(a, b));
}

std::string Matrix::to_string() const {
    std::ostringstream os;
    os << rows_ << "x" << cols_ << " over " << field_.to_string();
    for (int i = 0; i < rows_; ++i) {
        os << "\n[";
        for (int j = 0; j < cols_; ++j) os << " " << at(i, j).to_string();
        os << " ]";
    }
    return os.str();
}

uint32_t* Matrix::fp_data() {
    if (!field_.is_prime_field()) throw FieldMismatch("fp_data: field is Q");
    return f_.data();
}

const uint32_t* Matrix::fp_data() const {
    if (!field_.is_prime_field()) throw FieldMismatch("fp_data: field is Q");
    return f_.data();
}

const Rational& Matrix::q_at(int i, int j) const {
    if (!field_.is_rationals()) throw FieldMismatch("q_at: field is F_p");
    return q_[static_cast<std::size_t>(i) * cols_ + j];
}

Matrix direct_sum(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("direct_sum: fields differ");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols() + b.cols());
    out.paste(0, 0, a);
    out.paste(a.rows(), a.cols(), b);
    return out;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("hstack: fields differ");
    if (a.rows() != b.rows()) throw DimensionMismatch("hstack: row counts differ");
    Matrix out(a.field(), a.rows(), a.cols() + b.cols());
    out.paste(0, 0, a);
    out.paste(0, a.cols(), b);
    return out;
}

Matrix vstack(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("vstack: fields differ");
    if (a.cols() != b.cols()) throw DimensionMismatch("vstack: column counts differ");
    Matrix out(a.field(), a.rows() + b.rows(), a.cols());
    out.paste(0, 0, a);
    out.paste(a.rows(), 0, b);
    return out;
}

Matrix kronecker(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("kronecker: fields differ");
    Matrix out(a.field(), a.rows() * b.rows(), a.cols() * b.cols());
    for (int i1 = 0; i1 < a.rows(); ++i1) {
        for (int j1 = 0; j1 < a.cols(); ++j1) {
            Scalar s = a.at(i1, j1);
            if (s.is_zero()) continue;
            out.paste(i1 * b.rows(), j1 * b.cols(), b.scaled(s));
        }
    }
    return out;
}

namespace {

// Fraction-free Gauss-Jordan (Montante/Bareiss) over Q applied to the
// augmented block [A | I]. Rows are prescaled to integers first; every
// intermediate entry is then a minor of the scaled matrix, so the division
// in the update rule is exact and there is no fraction blow-up until the
// single normalization pass at the end.
RrefResult rref_q(const Matrix& m) {
    const int n = m.rows(), c = m.cols();
    const int w = c + n;
    std::vector<std::vector<BigInt>> work(n, std::vector<BigInt>(w, 0));
    for (int i = 0; i < n; ++i) {
        BigInt l = 1;
        for (int j = 0; j < c; ++j) l = lcm(l, BigInt(denominator(m.q_at(i, j))));
        for (int j = 0; j < c; ++j) {
            Rational scaled = m.q_at(i, j) * Rational(l);
            work[i][j] = numerator(scaled);
        }
        work[i][c + i] = l;
    }
    BigInt prev = 1;
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < c && r < n; ++col) {
        int sel = -1;
        for (int i = r; i < n; ++i) {
            if (work[i][col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        std::swap(work[sel], work[r]);
        BigInt piv = work[r][col];
        for (int j = 0; j < n; ++j) {
            if (j == r) continue;
            BigInt mj = work[j][col];
            for (int k = 0; k < w; ++k) {
                work[j][k] = (piv * work[j][k] - mj * work[r][k]) / prev;
            }
        }
        prev = piv;
        pivots.push_back(col);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivot_columns = pivots;
    out.reduced = Matrix(m.field(), n, c);
    out.transform = Matrix(m.field(), n, n);
    for (int i = 0; i < n; ++i) {
        // pivot rows carry their pivot value in every pivot slot; dividing by
        // it normalizes the row. Non-pivot rows have a zero left block and an
        // integral transform block, which needs no normalization.
        Rational d(i < r ? work[i][pivots[i]] : BigInt(1));
        for (int j = 0; j < c; ++j)
            out.reduced.set(i, j, Scalar::of_rational(Rational(work[i][j]) / d));
        for (int j = 0; j < n; ++j)
            out.transform.set(i, j, Scalar::of_rational(Rational(work[i][c + j]) / d));
    }
    return out;
}

// Plain Gauss-Jordan over F_p on [A | I], rows driven through the kernel lane.
RrefResult rref_fp(const Matrix& m) {
    const int n = m.rows(), c = m.cols();
    const int w = c + n;
    const uint32_t p = m.field().p();
    fpk::Barrett br(p);
    const fpk::Kernels& kn = fpk::active_kernels();
    std::vector<uint32_t> work(static_cast<std::size_t>(n) * w, 0);
    auto row = [&](int i) { return work.data() + static_cast<std::size_t>(i) * w; };
    for (int i = 0; i < n; ++i) {
        const uint32_t* src = m.fp_data() + static_cast<std::size_t>(i) * c;
        std::copy(src, src + c, row(i));
        row(i)[c + i] = 1;
    }
    std::vector<int> pivots;
    int r = 0;
    for (int col = 0; col < c && r < n; ++col) {
        int sel = -1;
        for (int i = r; i < n; ++i) {
            if (row(i)[col] != 0) {
                sel = i;
                break;
            }
        }
        if (sel < 0) continue;
        if (sel != r) std::swap_ranges(row(sel), row(sel) + w, row(r));
        uint32_t inv = fp_inv(row(r)[col], p);
        if (inv != 1) kn.scale(row(r), inv, static_cast<std::size_t>(w), br);
        for (int j = 0; j < n; ++j) {
            if (j == r) continue;
            uint32_t mj = row(j)[col];
            if (mj == 0) continue;
            kn.axpy(row(j), row(r), p - mj, static_cast<std::size_t>(w), br);
        }
        pivots.push_back(col);
        ++r;
    }
    RrefResult out;
    out.rank = r;
    out.pivot_columns = pivots;
    out.reduced = Matrix(m.field(), n, c);
    out.transform = Matrix(m.field(), n, n);
    for (int i = 0; i < n; ++i) {
        uint32_t* red = out.reduced.fp_data() + static_cast<std::size_t>(i) * c;
        std::copy(row(i), row(i) + c, red);
        uint32_t* tr = out.transform.fp_data() + static_cast<std::size_t>(i) * n;
        std::copy(row(i) + c, row(i) + w, tr);
    }
    return out;
}

}  // namespace

RrefResult rref(const Matrix& m) {
    return m.field().is_rationals() ? rref_q(m) : rref_fp(m);
}

int rank(const Matrix& m) { return rref(m).rank; }

Matrix kernel_basis(const Matrix& m) {
    RrefResult r = rref(m);
    std::vector<int> free_cols;
    {
        std::size_t next = 0;
        for (int j = 0; j < m.cols(); ++j) {
            if (next < r.pivot_columns.size() && r.pivot_columns[next] == j)
                ++next;
            else
                free_cols.push_back(j);
        }
    }
    Matrix out(m.field(), m.cols(), static_cast<int>(free_cols.size()));
    Scalar one = Scalar::one(m.field());
    for (int k = 0; k < static_cast<int>(free_cols.size()); ++k) {
        int j = free_cols[k];
        out.set(j, k, one);
        for (int t = 0; t < r.rank; ++t)
            out.set(r.pivot_columns[t], k, -r.reduced.at(t, j));
    }
    return out;
}

Matrix image_basis(const Matrix& m) {
    return m.select_columns(rref(m).pivot_columns);
}

std::optional<Matrix> solve(const Matrix& a, const Matrix& b) {
    if (!(a.field() == b.field())) throw FieldMismatch("solve: fields differ");
    if (a.rows() != b.rows()) throw DimensionMismatch("solve: row counts differ");
    RrefResult r = rref(a);
    Matrix bp = r.transform * b;
    for (int i = r.rank; i < bp.rows(); ++i)
        for (int j = 0; j < bp.cols(); ++j)
            if (!bp.at(i, j).is_zero()) return std::nullopt;
    Matrix x(a.field(), a.cols(), b.cols());
    for (int t = 0; t < r.rank; ++t)
        for (int j = 0; j < b.cols(); ++j) x.set(r.pivot_columns[t], j, bp.at(t, j));
    return x;
}

Matrix Matrix::inverse() const {
    if (rows_ != cols_) throw SingularMatrix("inverse: matrix is not square");
    RrefResult r = rref(*this);
    if (r.rank != rows_) throw SingularMatrix("inverse: rank " + std::to_string(r.rank) +
                                              " of " + std::to_string(rows_));
    return r.transform;
}

}  // namespace syzygy
