#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "syzygy/complex.hpp"

namespace syzygy {

// The syzygy construction for a bounded complex c with nonzero homology:
// normalize so the lowest homology degree is 0, take a minimal projective
// resolution P, and split it brutally at the top homology degree n. The
// low part Q = P_{<=n} is perfect; the high part has homology omega
// concentrated in degree n + 1, giving the triangle Q -> c -> Sigma^{n+1}
// omega (shifted back by the placement).
struct OmegaResult {
    ChainComplex source;
    int inf = 0;        // lowest degree with homology (the normalization shift)
    int width = 0;      // sup - inf of the homology support
    Module omega;       // coker of the resolution differential into P_{n+1}
    int placement = 0;  // equals inf: omega belongs to Sigma^inf of the
                        // normalized construction
    ChainComplex q;     // brutal truncation P_{<=n}: projective terms, finite
                        // support, hence perfect
    int bound = 0;
    ResolvedComplex resolved;  // resolution of the normalized complex
};
// Errors: ZeroComplex when c is exact (omega undefined; such a complex is
// already perfect), BoundTooSmall when bound < width + 2, MissingStructure.
OmegaResult omega(const ChainComplex& c, int bound);

// Windowed eventual-orthogonality report: exact dims of Hom(m, Sigma^i n)
// for every i in [-W, W]; the verdict ignores |i| < t. Degrees |i| > W are
// not examined and the report says nothing about them.
struct OrthReport {
    std::string left;
    std::string right;
    int window = 0;     // W
    int threshold = 0;  // t
    std::vector<int> dims;             // dims[i + window] for i in [-W, W]
    std::vector<int> nonzero_degrees;  // i with t <= |i| <= W and dim != 0
    bool vanishes_in_window = false;
    int resolution_bound = 0;

    int dim_at(int i) const;
};
// pre: W >= t >= 0; the resolution bound is derived internally.
OrthReport check_perp(const ChainComplex& m, const ChainComplex& n,
                      int window, int threshold);

// A certified recurrence Omega^a x ~ Omega^b x with 0 <= a < b and
// Omega^a x nonzero; consequently ext_dim(x, N, i) = ext_dim(x, N, i + (b-a))
// for every N and every i >= a + 1, so x has infinite projective dimension.
struct PeriodicityCertificate {
    int a = 0;
    int b = 0;
    Matrix iso;      // invertible intertwiner Omega^a x -> Omega^b x
    Module omega_a;  // the recurring syzygy
};
// Least pair (smallest b, then smallest a) with b <= bound, or nothing.
std::optional<PeriodicityCertificate> syzygy_periodicity(const Module& x,
                                                         int bound);

// Certificate that the algebra is Frobenius (hence self-injective): an
// isomorphism from the regular module to the dual of the opposite regular
// module. Sufficient, not necessary; absence proves nothing.
struct FrobeniusCertificate {
    Matrix iso;
};
std::optional<FrobeniusCertificate> frobenius_certificate(const Algebra& a);

// Projective dimension evidence for a module.
struct FinitePd {
    int value = 0;  // -1 for the zero module (vacuously finite)
    Resolution resolution;  // complete minimal resolution, zero next syzygy
};
struct InfinitePd {
    std::string reason;  // "syzygy-periodicity" | "self-injective-and-nonprojective"
    std::optional<PeriodicityCertificate> periodicity;
    std::optional<Matrix> frobenius_iso;
};
struct LowerBoundOnly {
    int bound = 0;  // every syzygy through this index is nonzero
};
using PdVerdict = std::variant<FinitePd, InfinitePd, LowerBoundOnly>;
struct PdCertificate {
    Module module;
    PdVerdict verdict;
};
PdCertificate pd_certificate(const Module& x, int bound);
// convenience accessors
std::optional<int> finite_pd_value(const PdCertificate& c);
bool pd_is_infinite(const PdCertificate& c);

// Perfectness of a bounded complex, decided through omega: the truncation
// triangle leaves exactly the question whether omega has finite projective
// dimension.
enum class Perfectness { Perfect, NotPerfect, Unknown };
struct PerfectReport {
    Perfectness verdict = Perfectness::Unknown;
    std::string note;
    std::optional<OmegaResult> omega_result;  // absent for exact complexes
    std::optional<PdCertificate> pd;          // certificate for omega
};
PerfectReport is_perfect(const ChainComplex& c, int bound);

enum class GarcClassification {
    HypothesesFail,
    Consistent,
    CandidateCounterexample,
    Inconclusive,
};
std::string to_string(GarcClassification c);

// Instance check: does c satisfy the eventual-orthogonality hypotheses
// (against itself and against the regular stalk) in the window, and if so,
// is it perfect? The omega-side reports re-check both hypotheses for the
// syzygy module with the window shrunk by width + 2 (the stalk shift plus
// one triangle rotation); vanishing at degrees >= transfer_threshold is
// forced by the triangle, so entries in transfer_violations indicate an
// internal contradiction and the test suite treats them as hard failures.
struct GarcReport {
    ChainComplex instance;
    int window = 0;
    int threshold = 0;
    int bound = 0;
    OrthReport self_orth;     // c against c
    OrthReport regular_orth;  // c against the regular stalk
    bool hypotheses_hold = false;
    std::optional<OmegaResult> omega_result;
    int omega_window = 0;        // window - (width + 2)
    int transfer_threshold = 0;  // threshold + width + 2
    std::optional<OrthReport> omega_self_orth;
    std::optional<OrthReport> omega_regular_orth;
    std::vector<int> transfer_violations_self;
    std::vector<int> transfer_violations_regular;
    std::optional<PdCertificate> omega_pd;
    GarcClassification classification = GarcClassification::Inconclusive;
    std::string note;
};
GarcReport check_garc_instance(const ChainComplex& c, int window,
                               int threshold, int bound);

// One member of the two-parameter family over the four-dimensional
// two-relator algebra: the cyclic module cut out by x - lambda*y (or by y
// alone for the point at infinity).
struct SchulzEntry {
    std::string label;  // lambda as a scalar literal, or "inf"
    Module module;
    bool projective = false;
    std::vector<int> ext_self;     // ext(M, M, i) for i = 1..window
    std::vector<int> ext_regular;  // ext(M, A, i) for i = 1..window
    // least v >= 1 with both tables zero on [v, window]; absent when even
    // the top degree is nonzero
    std::optional<int> vanish_from;
    // attached to non-projective eventual hits when the algebra carries a
    // Frobenius certificate
    std::optional<PdCertificate> pd;
};
struct SchulzScanReport {
    FieldSpec field = FieldSpec::rationals();
    std::string c_value;
    int window = 0;
    int bound = 0;
    // multiplicative order of c when finite: vanishing windows cannot be
    // extended, because the syzygy orbit of every family member recurs
    std::optional<uint64_t> root_of_unity;
    bool frobenius = false;
    std::string note;
    std::vector<SchulzEntry> entries;
    // labels with a vanishing tail starting at degree <= 2: the
    // eventual-orthogonality phenomenon
    std::vector<std::string> hits;
    // labels vanishing over the whole window [1, window]; over a field the
    // one-dimensional self-extension space of every family member keeps
    // this list empty
    std::vector<std::string> strict_hits;
};
// pre: c != 0, window >= 1, bound >= 1 (InvalidParameter otherwise)
SchulzScanReport schulz_scan(const FieldSpec& field, const Scalar& c,
                             int window, int bound);

}  // namespace syzygy
