#include "syzygy/garc.hpp"

#include <algorithm>
#include <string>
#include <utility>
#include <vector>

namespace syzygy {

namespace {

constexpr uint64_t kIsoSeed = 0x5EEDBA5Eu;

int abs_i(int x) { return x < 0 ? -x : x; }

// highest degree carrying a nonzero term (c.low - 1 when there is none)
int trimmed_high(const ChainComplex& c) {
    for (int k = c.high; k >= c.low; --k) {
        if (c.term(k).dim > 0) {
            return k;
        }
    }
    return c.low - 1;
}

void verify_omega(const OmegaResult& r) {
    const ChainComplex& p = r.resolved.p;
    int n = r.width;
    ChainComplex high = truncate_at_least(p, n + 1);
    for (int k = p.low; k <= p.high; ++k) {
        if (r.q.term(k).dim + high.term(k).dim != p.term(k).dim) {
            throw Error("omega: degreewise splitting is not exact");
        }
    }
    for (int k = r.q.low + 1; k <= r.q.high; ++k) {
        if (r.q.differential(k) != p.differential(k)) {
            throw Error("omega: low truncation changed a differential");
        }
    }
    for (int k = high.low + 1; k <= high.high; ++k) {
        if (high.differential(k) != p.differential(k)) {
            throw Error("omega: high truncation changed a differential");
        }
    }
    for (int k = r.q.low; k <= r.q.high; ++k) {
        if (r.q.term(k).dim > 0 && !is_projective(r.q.term(k))) {
            throw Error("omega: the perfect part has a non-projective term");
        }
    }
    Module h = homology(high, n + 1);
    if (!std::holds_alternative<IsoYes>(iso_test(h, r.omega, kIsoSeed))) {
        throw Error("omega: homology of the high part does not match");
    }
    for (int j = n + 2; j <= r.bound - 1; ++j) {
        if (homology_dim(high, j) != 0) {
            throw Error("omega: stray homology at degree " + std::to_string(j));
        }
    }
}

}  // namespace

OmegaResult omega(const ChainComplex& c, int bound) {
    auto support = homology_support(c);
    if (!support) {
        throw ZeroComplex(
            "omega: the complex is exact (a zero object, hence perfect); "
            "omega is undefined");
    }
    int m = support->first;
    int n = support->second - support->first;
    if (bound < n + 2) {
        throw BoundTooSmall("omega: bound must be at least width + 2 = " +
                            std::to_string(n + 2));
    }
    ChainComplex normalized = shift(c, -m);
    ResolvedComplex rp = resolve(normalized, bound);
    QuotientData qd = quotient(rp.p.term(n + 1), rp.p.differential(n + 2));
    OmegaResult out;
    out.source = c;
    out.inf = m;
    out.width = n;
    out.omega = qd.module;
    out.omega.name = "Omega(" + c.name + ")";
    out.placement = m;
    out.q = truncate_at_most(rp.p, n);
    out.q.name = "Q(" + c.name + ")";
    out.bound = bound;
    out.resolved = std::move(rp);
    verify_omega(out);
    return out;
}

int OrthReport::dim_at(int i) const {
    if (i < -window || i > window) {
        throw InvalidParameter("dim_at: degree outside the verified window");
    }
    return dims[i + window];
}

OrthReport check_perp(const ChainComplex& m, const ChainComplex& n,
                      int window, int threshold) {
    if (threshold < 0 || window < threshold) {
        throw InvalidParameter("check_perp: window >= threshold >= 0 required");
    }
    OrthReport rep;
    rep.left = m.name.empty() ? "left" : m.name;
    rep.right = n.name.empty() ? "right" : n.name;
    rep.window = window;
    rep.threshold = threshold;
    auto sm = homology_support(m);
    auto sn = homology_support(n);
    int bound = sm ? sm->second + 2 : 0;
    if (sm && sn) {
        int contract = window + (sn->second - sn->first) + sm->second + 2;
        int safety = trimmed_high(n) + window + 1;
        bound = std::max({bound, contract, safety});
    }
    rep.resolution_bound = bound;
    if (sm && sn) {
        ResolvedComplex rm = resolve(m, bound);
        rep.dims = derived_hom_dims(rm, n, -window, window);
    } else {
        rep.dims.assign(2 * window + 1, 0);
    }
    for (int i = -window; i <= window; ++i) {
        if (abs_i(i) >= threshold && rep.dims[i + window] != 0) {
            rep.nonzero_degrees.push_back(i);
        }
    }
    rep.vanishes_in_window = rep.nonzero_degrees.empty();
    return rep;
}

std::optional<PeriodicityCertificate> syzygy_periodicity(const Module& x,
                                                         int bound) {
    if (bound < 1) {
        return std::nullopt;
    }
    std::vector<Module> syz{x};
    for (int k = 1; k <= bound; ++k) {
        Module next = syzygy_module(syz.back());
        next.name = "Omega^" + std::to_string(k) + "(" + x.name + ")";
        syz.push_back(next);
        if (syz.back().dim == 0) {
            break;  // every later syzygy is zero: nothing can recur
        }
    }
    int avail = static_cast<int>(syz.size()) - 1;
    for (int b = 1; b <= avail; ++b) {
        for (int a = 0; a < b; ++a) {
            if (syz[a].dim == 0 || syz[a].dim != syz[b].dim) {
                continue;
            }
            IsoResult r = iso_test(syz[a], syz[b],
                                   kIsoSeed + 31u * static_cast<uint64_t>(a) +
                                       static_cast<uint64_t>(b));
            if (auto* yes = std::get_if<IsoYes>(&r)) {
                return PeriodicityCertificate{a, b, yes->intertwiner, syz[a]};
            }
        }
    }
    return std::nullopt;
}

std::optional<FrobeniusCertificate> frobenius_certificate(const Algebra& a) {
    Module reg = regular_module(a);
    Module dual_op = dual_module(regular_module(opposite(a)));
    IsoResult r = iso_test(reg, dual_op, kIsoSeed ^ 0x0F0Fu);
    if (auto* yes = std::get_if<IsoYes>(&r)) {
        return FrobeniusCertificate{yes->intertwiner};
    }
    return std::nullopt;
}

PdCertificate pd_certificate(const Module& x, int bound) {
    if (bound < 0) {
        throw InvalidParameter("pd_certificate: bound must be >= 0");
    }
    if (x.dim == 0) {
        // vacuously finite; -1 marks the zero module
        return PdCertificate{x, FinitePd{-1, minimal_resolution(x, 0)}};
    }
    Resolution res = minimal_resolution(x, bound);
    if (res.terminated) {
        int value = static_cast<int>(res.terms.size()) - 1;
        return PdCertificate{x, FinitePd{value, std::move(res)}};
    }
    if (auto per = syzygy_periodicity(x, bound)) {
        InfinitePd inf;
        inf.reason = "syzygy-periodicity";
        inf.periodicity = std::move(*per);
        return PdCertificate{x, std::move(inf)};
    }
    // the resolution did not terminate, so x is not projective; over a
    // self-injective algebra every non-projective module has infinite pd
    if (auto frob = frobenius_certificate(x.algebra)) {
        InfinitePd inf;
        inf.reason = "self-injective-and-nonprojective";
        inf.frobenius_iso = std::move(frob->iso);
        return PdCertificate{x, std::move(inf)};
    }
    return PdCertificate{x, LowerBoundOnly{bound}};
}

std::optional<int> finite_pd_value(const PdCertificate& c) {
    if (const auto* f = std::get_if<FinitePd>(&c.verdict)) {
        return f->value;
    }
    return std::nullopt;
}

bool pd_is_infinite(const PdCertificate& c) {
    return std::holds_alternative<InfinitePd>(c.verdict);
}

PerfectReport is_perfect(const ChainComplex& c, int bound) {
    PerfectReport out;
    if (!homology_support(c)) {
        out.verdict = Perfectness::Perfect;
        out.note = "exact complex: isomorphic to zero, perfect";
        return out;
    }
    OmegaResult om = omega(c, bound);
    out.omega_result = om;
    PdCertificate pd = pd_certificate(om.omega, bound);
    if (std::holds_alternative<FinitePd>(pd.verdict)) {
        out.verdict = Perfectness::Perfect;
        out.note = "the syzygy module has certified finite projective dimension";
    } else if (std::holds_alternative<InfinitePd>(pd.verdict)) {
        out.verdict = Perfectness::NotPerfect;
        out.note = "the syzygy module has certified infinite projective dimension (" +
                   std::get<InfinitePd>(pd.verdict).reason + ")";
    } else {
        out.verdict = Perfectness::Unknown;
        out.note = "no certificate within bound " + std::to_string(bound);
    }
    out.pd = std::move(pd);
    return out;
}

std::string to_string(GarcClassification c) {
    switch (c) {
        case GarcClassification::HypothesesFail:
            return "HypothesesFail";
        case GarcClassification::Consistent:
            return "Consistent";
        case GarcClassification::CandidateCounterexample:
            return "CandidateCounterexample";
        case GarcClassification::Inconclusive:
            return "Inconclusive";
    }
    return "Inconclusive";
}

namespace {

std::vector<int> violations_from(const OrthReport& r, int from) {
    std::vector<int> out;
    for (int i : r.nonzero_degrees) {
        if (abs_i(i) >= from) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

GarcReport check_garc_instance(const ChainComplex& c, int window,
                               int threshold, int bound) {
    GarcReport rep;
    rep.instance = c;
    rep.window = window;
    rep.threshold = threshold;
    rep.bound = bound;
    Module reg = regular_module(c.algebra);
    rep.self_orth = check_perp(c, c, window, threshold);
    rep.regular_orth = check_perp(c, stalk(reg, 0), window, threshold);
    rep.hypotheses_hold = rep.self_orth.vanishes_in_window &&
                          rep.regular_orth.vanishes_in_window;
    if (!rep.hypotheses_hold) {
        rep.classification = GarcClassification::HypothesesFail;
        return rep;
    }
    if (!homology_support(c)) {
        rep.classification = GarcClassification::Consistent;
        rep.note = "exact complex: isomorphic to zero, perfect";
        return rep;
    }
    OmegaResult om = omega(c, bound);
    rep.omega_window = window - (om.width + 2);
    rep.transfer_threshold = threshold + om.width + 2;
    ChainComplex omega_stalk = stalk(om.omega, 0);
    if (rep.omega_window >= threshold) {
        rep.omega_self_orth =
            check_perp(omega_stalk, omega_stalk, rep.omega_window, threshold);
        rep.omega_regular_orth = check_perp(omega_stalk, stalk(reg, 0),
                                            rep.omega_window, threshold);
        // vanishing at degrees >= transfer_threshold is forced by the
        // truncation triangle; anything recorded here is a contradiction
        rep.transfer_violations_self =
            violations_from(*rep.omega_self_orth, rep.transfer_threshold);
        rep.transfer_violations_regular =
            violations_from(*rep.omega_regular_orth, rep.transfer_threshold);
    } else {
        rep.note +=
            "window too small to re-check the syzygy side (needs width + 2 "
            "of slack); ";
    }
    rep.omega_pd = pd_certificate(om.omega, bound);
    rep.omega_result = std::move(om);
    if (std::holds_alternative<FinitePd>(rep.omega_pd->verdict)) {
        rep.classification = GarcClassification::Consistent;
    } else if (std::holds_alternative<InfinitePd>(rep.omega_pd->verdict)) {
        rep.classification = GarcClassification::CandidateCounterexample;
    } else {
        rep.classification = GarcClassification::Inconclusive;
    }
    return rep;
}

namespace {

SchulzEntry make_schulz_entry(const Algebra& a, const Module& reg,
                              const std::string& label, const Matrix& w,
                              int window) {
    SchulzEntry e;
    e.label = label;
    e.module = quotient(reg, a.right_mult_of(w)).module;
    e.module.name = "M(" + label + ")";
    e.projective = is_projective(e.module);
    e.ext_self = ext_dims(e.module, e.module, 1, window);
    e.ext_regular = ext_dims(e.module, reg, 1, window);
    int v = window + 1;
    while (v > 1 && e.ext_self[v - 2] == 0 && e.ext_regular[v - 2] == 0) {
        --v;
    }
    if (v <= window) {
        e.vanish_from = v;
    }
    return e;
}

}  // namespace

SchulzScanReport schulz_scan(const FieldSpec& field, const Scalar& c,
                             int window, int bound) {
    if (c.is_zero()) {
        throw InvalidParameter("schulz_scan: c must be nonzero");
    }
    if (window < 1 || bound < 1) {
        throw InvalidParameter(
            "schulz_scan: window and bound must be at least 1");
    }
    Algebra a = schulz_algebra(field, c);
    Module reg = regular_module(a);
    SchulzScanReport rep;
    rep.field = field;
    rep.c_value = c.to_string();
    rep.window = window;
    rep.bound = bound;
    rep.root_of_unity = root_of_unity_order(c);
    rep.frobenius = frobenius_certificate(a).has_value();
    if (rep.root_of_unity) {
        rep.note = "c is a root of unity of order " +
                   std::to_string(*rep.root_of_unity) +
                   ": every syzygy orbit recurs, so a vanishing window "
                   "cannot be extended beyond itself";
    }
    std::vector<Scalar> sweep;
    if (field.is_rationals()) {
        for (long long z = -4; z <= 4; ++z) {
            sweep.push_back(Scalar::of_int(field, z));
        }
        for (const char* s : {"1/2", "-1/2", "3/2", "-3/2", "1/3", "-1/3"}) {
            sweep.push_back(Scalar::parse(field, s));
        }
    } else {
        uint64_t count = std::min<uint64_t>(field.p(), 64);
        for (uint64_t r = 0; r < count; ++r) {
            sweep.push_back(Scalar::of_residue(field, r));
        }
    }
    for (const Scalar& lam : sweep) {
        Matrix w(field, a.dim, 1);
        w.set(1, 0, Scalar::one(field));
        w.set(2, 0, -lam);
        rep.entries.push_back(
            make_schulz_entry(a, reg, lam.to_string(), w, window));
    }
    {
        Matrix w(field, a.dim, 1);
        w.set(2, 0, Scalar::one(field));
        rep.entries.push_back(make_schulz_entry(a, reg, "inf", w, window));
    }
    for (SchulzEntry& e : rep.entries) {
        if (e.vanish_from && *e.vanish_from <= 2) {
            rep.hits.push_back(e.label);
            if (*e.vanish_from == 1) {
                rep.strict_hits.push_back(e.label);
            }
            if (!e.projective && rep.frobenius) {
                e.pd = pd_certificate(e.module, bound);
            }
        }
    }
    return rep;
}

}  // namespace syzygy
