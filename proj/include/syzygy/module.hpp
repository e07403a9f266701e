#pragma once

#include <cstdint>
#include <string>
#include <variant>
#include <vector>

#include "syzygy/algebra.hpp"

namespace syzygy {

// Finite-dimensional left module over an Algebra, presented by one action
// matrix per algebra basis element. The zero module (dim 0) is first-class.
struct Module {
    Algebra algebra;
    std::string name;
    int dim = 0;
    std::vector<Matrix> action;  // action[i]: matrix of e_i, dim x dim

    // matrix of the action of an arbitrary element (dim_A x 1 coordinates)
    Matrix action_of(const Matrix& elt) const;

    bool is_zero_module() const { return dim == 0; }

    // Module axioms: shapes, unit acts as identity, action respects the
    // structure constants. Empty result means valid.
    std::vector<std::string> validate() const;
};

Module regular_module(const Algebra& a);
Module zero_module(const Algebra& a);
Module direct_sum(const Module& m, const Module& n);
// n-fold direct sum of m with itself
Module power_module(const Module& m, int copies);

struct SubmoduleData {
    Module module;
    Matrix inclusion;  // m.dim x sub.dim, columns form the chosen basis
};
// The submodule spanned by the columns of span_cols. Throws InvalidParameter
// when the column span is not invariant under the action.
SubmoduleData submodule(const Module& m, const Matrix& span_cols);

struct QuotientData {
    Module module;
    Matrix projection;  // quot.dim x m.dim, surjective module map
    Matrix section;     // m.dim x quot.dim, linear section: projection * section = I
};
// The quotient of m by the submodule spanned by the columns of span_cols.
QuotientData quotient(const Module& m, const Matrix& span_cols);

// Columns spanning rad(A) * M. Needs the algebra's radical.
Matrix radical_span(const Module& m);
// top(M) = M / rad M, with the defining projection.
QuotientData top(const Module& m);

// Basis of Hom_A(m, n) as columns of a (n.dim * m.dim) x h matrix; each
// column is a column-major vectorization of an n.dim x m.dim matrix f with
// f * action_m(a) = action_n(a) * f for all a. When the algebra records
// generators the commutation constraints are imposed only for them.
Matrix hom_space(const Module& m, const Module& n);
int hom_dim(const Module& m, const Module& n);
// column-major reshape of one vectorized hom
Matrix unvec(const Matrix& column, int rows, int cols);

// Kernel, image, and cokernel of a module map f: src -> tgt (given as a
// tgt.dim x src.dim matrix), with the maps that relate them back to src and
// tgt. Throws InvalidParameter unless f intertwines the actions.
struct ExactnessPackage {
    Module kernel;
    Matrix kernel_inclusion;  // src.dim x kernel.dim
    Module image;
    Matrix image_inclusion;      // tgt.dim x image.dim
    Matrix image_corestriction;  // image.dim x src.dim; f factors through it
    Module cokernel;
    Matrix cokernel_projection;  // cokernel.dim x tgt.dim
};
ExactnessPackage exactness_package(const Module& src, const Matrix& f,
                                   const Module& tgt);

struct Cover {
    Module projective;                       // P = direct sum of A f_b copies
    Matrix map;                              // m.dim x P.dim, surjective
    std::vector<std::pair<int, int>> summands;  // (idempotent index, multiplicity)
};
// Projective cover P(M) ->> M: P has the same top as M, so the map's kernel
// sits inside rad P. Needs idempotents and the radical; throws
// MissingStructure otherwise. Works blockwise, so non-basic algebras (full
// matrix algebras, for instance) are handled correctly.
Cover projective_cover(const Module& m);

bool is_projective(const Module& m);

// First syzygy: the kernel of the projective cover.
Module syzygy_module(const Module& m);

struct Resolution {
    Module module;                      // the module being resolved
    std::vector<Module> terms;          // P_0, P_1, ..., possibly ending early at 0
    std::vector<Matrix> differentials;  // d_k: terms[k] -> terms[k-1], k = 1..
    Matrix augmentation;                // terms[0] -> module
    bool terminated = false;            // a zero term was reached: finite pd
    // per-term cover decomposition: (idempotent index, multiplicity) pairs
    std::vector<std::vector<std::pair<int, int>>> summands;
    // Betti numbers: how many indecomposable projective summands each term
    // has (the multiplicities above, totalled per term).
    std::vector<int> betti() const;
};
// Minimal projective resolution through homological degree `length`
// (terms[k] for k <= length, unless the resolution stops at zero first).
Resolution minimal_resolution(const Module& m, int length);

// dim_k Ext^i_A(x, y); zero for i < 0. Resolves x through degree i+1.
int ext_dim(const Module& x, const Module& y, int i);
// Same, resolving through degree B; requires i <= B - 1 (BoundTooSmall).
int ext_dim(const Module& x, const Module& y, int i, int bound);
// [lo, hi] window from a single resolution of x
std::vector<int> ext_dims(const Module& x, const Module& y, int lo, int hi);

// k-linear dual D(M) = Hom_k(M, k) as a module over the opposite algebra:
// the action of e_i is the transpose of its action on M.
Module dual_module(const Module& m);

struct IsoYes {
    Matrix intertwiner;  // invertible module map m -> n (n.dim x m.dim)
};
struct IsoNo {
    std::string reason;
};
struct IsoUnknown {
    std::string reason;
};
using IsoResult = std::variant<IsoYes, IsoNo, IsoUnknown>;

// Decides m ~ n where possible. Yes always carries a verified invertible
// intertwiner. No is returned only on proof: dimension or hom-dimension
// invariants differ, Hom(m, n) = 0 for nonzero modules, or an exhaustive
// search of a small hom space found no invertible element. Otherwise a
// seeded random search over the hom space runs `attempts` rounds before
// giving up with Unknown.
IsoResult iso_test(const Module& m, const Module& n, uint64_t seed,
                   int attempts = 24);

}  // namespace syzygy
