#pragma once

#include <optional>
#include <string>
#include <vector>

#include "syzygy/matrix.hpp"

namespace syzygy {

// A finite-dimensional unital associative algebra presented by structure
// constants: e_i * e_j = sum_k c_ijk e_k. The primary representation is the
// list of left-multiplication matrices L_i with column j holding the
// coordinates of e_i * e_j. Elements are dim x 1 coordinate columns.
//
// Optional structure (needed by some downstream operations, which throw
// MissingStructure when it is absent):
//   - idempotents: a complete set of orthogonal primitive idempotents
//   - radical_rows: rows spanning the Jacobson radical; a 0 x dim matrix
//     means the algebra is semisimple (radical known to be zero), while
//     std::nullopt means the radical is not supplied
struct Algebra {
    FieldSpec field = FieldSpec::rationals();
    std::string name;
    int dim = 0;
    std::vector<Matrix> left_mult;
    Matrix unit;
    std::vector<Matrix> idempotents;
    std::optional<Matrix> radical_rows;
    std::vector<Matrix> generators;
    std::vector<std::string> basis_names;

    Matrix basis_element(int i) const;
    Scalar structure_constant(int i, int j, int k) const;

    // matrix of y |-> x*y
    Matrix left_mult_of(const Matrix& x) const;
    // matrix of y |-> y*x
    Matrix right_mult_of(const Matrix& x) const;
    Matrix multiply(const Matrix& x, const Matrix& y) const;

    bool radical_known() const { return radical_rows.has_value(); }
    const Matrix& radical() const;  // throws MissingStructure when absent
    bool idempotents_known() const { return !idempotents.empty(); }
    // local <=> A / rad A is one-dimensional; needs the radical
    bool is_local() const;

    // Structural identity: same field, dimension, multiplication, and unit.
    // Labels and optional structure do not participate.
    bool same_algebra(const Algebra& o) const;

    // Diagnostics for every checkable axiom; empty result means valid.
    // Checks: shape consistency, associativity, the unit law, idempotent
    // axioms (when supplied), and that radical_rows spans a nilpotent
    // two-sided ideal (when supplied). Over Q the radical is additionally
    // checked for exactness against the trace-form characterization of the
    // Jacobson radical, which is complete in characteristic zero.
    std::vector<std::string> validate() const;
};

Algebra opposite(const Algebra& a);

// Builtins. Every builtin carries its unit, idempotents (when known),
// radical, generators, and basis labels.

// k<x,y> / (x^2, y^2, xy - c yx), c nonzero: basis {1, x, y, xy}, local,
// radical {x, y, xy} with cube zero.
Algebra schulz_algebra(const FieldSpec& f, const Scalar& c);

// k[t]/(t^n), n >= 1: local, radical (t).
Algebra truncated_poly(const FieldSpec& f, int n);

// Path algebra of the linear quiver 1 -> 2 -> ... -> n: basis e_ij for the
// path i ~> j (i <= j), product e_ij * e_kl = [i = l] e_kj (composition
// extends a path at its endpoint), dimension n(n+1)/2. Hereditary; radical
// is the arrow ideal.
Algebra path_an(const FieldSpec& f, int n);

// n x n matrices: E_ab E_cd = [b = c] E_ad. Semisimple (radical zero).
Algebra full_matrix(const FieldSpec& f, int n);

// Group algebra k[Z/n] = k[t]/(t^n - 1). The radical is zero unless
// char k = p divides n, in which case writing n = p^a m with p coprime to m
// the radical is generated by t^m - 1. Idempotents are recorded only when
// the algebra is local (n a power of char k, or n = 1); in the other cases
// a complete primitive set would require polynomial factorization and is
// left unset.
Algebra cyclic_group(const FieldSpec& f, int n);

// Multiplicative order of c when c is a root of unity, nullopt otherwise
// (and for c = 0). Over Q only 1 and -1 qualify; over F_p every nonzero
// residue does.
std::optional<uint64_t> root_of_unity_order(const Scalar& c);

}  // namespace syzygy
