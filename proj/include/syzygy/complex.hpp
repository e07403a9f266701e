#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "syzygy/module.hpp"

namespace syzygy {

// Bounded chain complex with homological (lower) indexing: terms M_low..
// M_high and differentials d_k: M_k -> M_{k-1}. Terms outside the window are
// implicitly zero; high < low encodes the zero complex.
struct ChainComplex {
    Algebra algebra;
    std::string name;
    int low = 0;
    int high = -1;
    std::vector<Module> terms;          // size high - low + 1
    std::vector<Matrix> differentials;  // [j] = d_{low+1+j}, size high - low

    bool in_window(int k) const { return k >= low && k <= high; }
    Module term(int k) const;       // zero module outside the window
    Matrix differential(int k) const;  // d_k, zero-shaped off the window
    bool is_zero_object() const;       // every term zero

    // Shapes, per-term module axioms, d being module maps, and dd = 0.
    std::vector<std::string> validate() const;
};

ChainComplex zero_complex(const Algebra& a);
// m concentrated in one degree; the zero module gives the zero complex
ChainComplex stalk(const Module& m, int degree);
// (Sigma^i c)_n = c_{n-i}, differentials scaled by (-1)^i; consequently
// H_0(shift(c, i)) = H_{-i}(c)
ChainComplex shift(const ChainComplex& c, int i);
// drop zero modules at both ends of the window
ChainComplex trimmed(const ChainComplex& c);
// brutal truncations (kept terms unchanged, others dropped)
ChainComplex truncate_at_most(const ChainComplex& c, int n);
ChainComplex truncate_at_least(const ChainComplex& c, int n);

// ker d_k / im d_{k+1} with its induced action
Module homology(const ChainComplex& c, int k);
int homology_dim(const ChainComplex& c, int k);
// [inf, sup] degrees with nonzero homology; nullopt when c is exact
std::optional<std::pair<int, int>> homology_support(const ChainComplex& c);

// Degreewise map of complexes f_k: source_k -> target_k commuting with the
// differentials. Components are stored from degree `low` upward; degrees
// outside are zero maps.
struct ChainMap {
    ChainComplex source;
    ChainComplex target;
    int low = 0;
    std::vector<Matrix> components;

    Matrix component(int k) const;  // zero-shaped outside the stored range
    std::vector<std::string> validate() const;
};

ChainMap identity_chain_map(const ChainComplex& c);
ChainMap zero_chain_map(const ChainComplex& src, const ChainComplex& tgt);
// a module map f: m -> n as a chain map between stalks in one degree
ChainMap stalk_chain_map(const Module& m, const Module& n, const Matrix& f,
                         int degree);

// Mapping cone: C_k = source_{k-1} (+) target_k with
// d(x, y) = (-d x, f(x) + d y). f is a quasi-isomorphism iff cone(f) is
// exact.
ChainComplex cone(const ChainMap& f);

// Module map lift l: p -> w with proj * l = f, where proj: w ->> q is a
// surjective module map, f: p -> q, and p is projective.
Matrix projective_lift(const Module& p, const Module& w, const Matrix& proj,
                       const Matrix& f);

struct ResolvedComplex {
    ChainComplex original;
    ChainComplex p;    // projective terms, supported in [inf(original), bound]
    ChainMap epsilon;  // p -> original
    int bound = 0;
};
// Minimal complex of projectives quasi-isomorphic to c through degree
// bound - 1 (and surjective on H_bound): degreewise projective covers of
// the kernel of the partial mapping-cone differential. Requires
// bound >= sup(c) + 2 when c has homology; exact complexes resolve to the
// zero complex.
ResolvedComplex resolve(const ChainComplex& c, int bound);

// dim Hom_{D^b}(m, Sigma^i n): degree-i cohomology of the total Hom complex
// Hom^t(P, n) = (+)_k Hom(P_k, n_{k-t}) with d(f) = dn o f - (-1)^t f o dP,
// where P = resolve(m, bound).p.
int derived_hom_dim(const ChainComplex& m, const ChainComplex& n, int i,
                    int bound);
// the window [lo, hi] from one precomputed resolution of m
std::vector<int> derived_hom_dims(const ResolvedComplex& rm,
                                  const ChainComplex& n, int lo, int hi);

}  // namespace syzygy
