#include <vector>

#include "doctest.h"
#include "syzygy/complex.hpp"

using namespace syzygy;

namespace {

const FieldSpec Q = FieldSpec::rationals();

Module simple_over_local(const Algebra& a) {
    Module s = top(regular_module(a)).module;
    s.name = "k";
    return s;
}

// coordinates of the basis element t in a truncated polynomial algebra
Matrix t_coords(const Algebra& a) { return a.basis_element(1); }

// two-term complex 0 -> m1 -d-> m0 -> 0 in degrees (low+1, low)
ChainComplex two_term(const Module& m1, const Module& m0, const Matrix& d,
                      int low) {
    ChainComplex c;
    c.algebra = m0.algebra;
    c.name = "two-term";
    c.low = low;
    c.high = low + 1;
    c.terms = {m0, m1};
    c.differentials = {d};
    return c;
}

// the multiplication complex 0 -> A -(t.)-> A -> 0 in degrees (1, 0)
ChainComplex mult_complex(const Algebra& a) {
    Module reg = regular_module(a);
    return two_term(reg, reg, reg.action_of(t_coords(a)), 0);
}

bool in_radical_of(const Module& p, const Matrix& cols) {
    return solve(radical_span(p), cols).has_value();
}

void check_resolved(const ResolvedComplex& rp) {
    CHECK(rp.p.validate().empty());
    CHECK(rp.epsilon.validate().empty());
    // quasi-isomorphism through the bound: the cone is exact there
    ChainComplex cn = cone(rp.epsilon);
    for (int k = cn.low; k <= rp.bound; ++k) {
        CAPTURE(k);
        CHECK(homology_dim(cn, k) == 0);
    }
    // homology agreement below the bound
    for (int k = rp.p.low - 1; k <= rp.bound - 1; ++k) {
        CAPTURE(k);
        CHECK(homology_dim(rp.p, k) == homology_dim(rp.original, k));
    }
    // projective terms with differentials into the radical
    for (int k = rp.p.low; k <= rp.p.high; ++k) {
        if (rp.p.term(k).dim > 0) {
            CHECK(is_projective(rp.p.term(k)));
        }
        if (k > rp.p.low && rp.p.differential(k).cols() > 0 &&
            rp.p.term(k - 1).dim > 0) {
            CAPTURE(k);
            CHECK(in_radical_of(rp.p.term(k - 1), rp.p.differential(k)));
        }
    }
}

}  // namespace

TEST_SUITE_BEGIN("complex");

TEST_CASE("stalks and the zero complex") {
    Algebra a = truncated_poly(Q, 2);
    Module reg = regular_module(a);
    ChainComplex st = stalk(reg, 3);
    CHECK(st.validate().empty());
    CHECK(st.low == 3);
    CHECK(st.high == 3);
    CHECK(st.term(3).dim == 2);
    CHECK(st.term(2).dim == 0);
    CHECK(st.differential(3).rows() == 0);
    CHECK(st.differential(4).cols() == 0);
    CHECK(homology_dim(st, 3) == 2);
    CHECK(homology_dim(st, 2) == 0);
    CHECK(homology_dim(st, 4) == 0);
    Module h = homology(st, 3);
    CHECK(std::holds_alternative<IsoYes>(iso_test(h, reg, 11)));
    auto support = homology_support(st);
    REQUIRE(support.has_value());
    CHECK(support->first == 3);
    CHECK(support->second == 3);

    ChainComplex z = stalk(zero_module(a), 0);
    CHECK(z.high < z.low);
    CHECK(z.is_zero_object());
    CHECK(z.validate().empty());
    CHECK(!homology_support(z).has_value());
}

TEST_CASE("validation flags broken complexes") {
    Algebra a = truncated_poly(Q, 2);
    Module reg = regular_module(a);

    ChainComplex wrong_shape = mult_complex(a);
    wrong_shape.differentials[0] = Matrix::zeros(Q, 1, 2);
    CHECK(!wrong_shape.validate().empty());

    // E12 does not commute with the action of t
    ChainComplex not_a_map = mult_complex(a);
    not_a_map.differentials[0] = Matrix::of(Q, {{"0", "1"}, {"0", "0"}});
    CHECK(!not_a_map.validate().empty());

    ChainComplex bad_square;
    bad_square.algebra = a;
    bad_square.low = 0;
    bad_square.high = 2;
    bad_square.terms = {reg, reg, reg};
    Matrix eye = Matrix::identity(Q, 2);
    bad_square.differentials = {eye, eye};
    CHECK(!bad_square.validate().empty());

    // the same three-term shape with d = multiplication by t is honest
    ChainComplex fine = bad_square;
    Matrix tk = reg.action_of(t_coords(a));
    fine.differentials = {tk, tk};
    CHECK(fine.validate().empty());
    CHECK(homology_dim(fine, 0) == 1);
    CHECK(homology_dim(fine, 1) == 0);
    CHECK(homology_dim(fine, 2) == 1);
}

TEST_CASE("homology of the multiplication complex") {
    Algebra a = truncated_poly(Q, 2);
    ChainComplex c = mult_complex(a);
    CHECK(c.validate().empty());
    CHECK(homology_dim(c, 0) == 1);
    CHECK(homology_dim(c, 1) == 1);
    CHECK(homology_dim(c, 2) == 0);
    Module k = simple_over_local(a);
    CHECK(std::holds_alternative<IsoYes>(iso_test(homology(c, 0), k, 3)));
    CHECK(std::holds_alternative<IsoYes>(iso_test(homology(c, 1), k, 4)));
    auto support = homology_support(c);
    REQUIRE(support.has_value());
    CHECK(*support == std::pair<int, int>{0, 1});
}

TEST_CASE("shift bookkeeping") {
    Algebra a = truncated_poly(Q, 2);
    ChainComplex c = mult_complex(a);
    ChainComplex s = shift(c, 1);
    CHECK(s.low == 1);
    CHECK(s.high == 2);
    CHECK(s.validate().empty());
    CHECK(s.differential(2) == -c.differential(1));
    for (int k = -1; k <= 2; ++k) {
        CHECK(homology_dim(s, k + 1) == homology_dim(c, k));
    }
    for (int i : {-1, 0, 1, 2}) {
        CHECK(homology_dim(shift(c, i), 0) == homology_dim(c, -i));
    }
    ChainComplex back = shift(shift(c, 2), -2);
    CHECK(back.low == c.low);
    CHECK(back.high == c.high);
    CHECK(back.differentials[0] == c.differentials[0]);

    ChainComplex odd = shift(c, 3);
    CHECK(odd.validate().empty());
    CHECK(odd.differential(4) == -c.differential(1));
}

TEST_CASE("truncations and trimming") {
    Algebra a = truncated_poly(Q, 2);
    Module reg = regular_module(a);
    Matrix tk = reg.action_of(t_coords(a));
    ChainComplex c;
    c.algebra = a;
    c.low = 0;
    c.high = 2;
    c.terms = {reg, reg, reg};
    c.differentials = {tk, tk};

    ChainComplex below = truncate_at_most(c, 0);
    CHECK(below.low == 0);
    CHECK(below.high == 0);
    CHECK(below.validate().empty());
    CHECK(homology_dim(below, 0) == 2);

    ChainComplex above = truncate_at_least(c, 1);
    CHECK(above.low == 1);
    CHECK(above.high == 2);
    CHECK(above.validate().empty());
    CHECK(homology_dim(above, 1) == 1);
    CHECK(homology_dim(above, 2) == 1);

    CHECK(truncate_at_most(c, -1).is_zero_object());
    CHECK(truncate_at_least(c, 3).is_zero_object());

    ChainComplex padded;
    padded.algebra = a;
    padded.low = -1;
    padded.high = 1;
    padded.terms = {zero_module(a), reg, zero_module(a)};
    padded.differentials = {Matrix::zeros(Q, 0, 2), Matrix::zeros(Q, 2, 0)};
    CHECK(padded.validate().empty());
    ChainComplex tight = trimmed(padded);
    CHECK(tight.low == 0);
    CHECK(tight.high == 0);
    CHECK(tight.term(0).dim == 2);
}

TEST_CASE("cones of identities, zero maps, and stalk maps") {
    Algebra a = truncated_poly(Q, 2);
    Module reg = regular_module(a);
    ChainComplex c = mult_complex(a);

    ChainComplex killed = cone(identity_chain_map(c));
    CHECK(killed.validate().empty());
    CHECK(!homology_support(killed).has_value());

    ChainComplex copy = cone(zero_chain_map(zero_complex(a), c));
    CHECK(copy.validate().empty());
    CHECK(copy.low == c.low);
    CHECK(copy.high == c.high);
    for (int k = c.low; k <= c.high; ++k) {
        CHECK(copy.term(k).dim == c.term(k).dim);
    }
    CHECK(copy.differential(1) == c.differential(1));

    ChainComplex two = cone(stalk_chain_map(reg, reg,
                                            reg.action_of(t_coords(a)), 0));
    CHECK(two.validate().empty());
    CHECK(two.low == 0);
    CHECK(two.high == 1);
    CHECK(homology_dim(two, 0) == 1);
    CHECK(homology_dim(two, 1) == 1);

    ChainMap broken;
    broken.source = c;
    broken.target = c;
    broken.low = 0;
    broken.components = {Matrix::identity(Q, 2)};  // f_1 missing
    CHECK_THROWS_AS(cone(broken), InvalidParameter);
}

TEST_CASE("projective lifts through surjections") {
    Algebra a = truncated_poly(Q, 2);
    Module reg = regular_module(a);
    QuotientData t = top(reg);

    Matrix l = projective_lift(reg, reg, t.projection, t.projection);
    CHECK(t.projection * l == t.projection);
    for (int i = 0; i < a.dim; ++i) {
        CHECK(l * reg.action[i] == reg.action[i] * l);
    }

    // the socle does not surject onto the regular module
    SubmoduleData socle = submodule(reg, radical_span(reg));
    CHECK_THROWS_AS(projective_lift(reg, socle.module, socle.inclusion,
                                    Matrix::identity(Q, 2)),
                    MissingStructure);
}

TEST_CASE("resolving a stalk reproduces the minimal resolution") {
    Algebra a = truncated_poly(Q, 2);
    Module k = simple_over_local(a);
    const int bound = 6;
    ResolvedComplex rp = resolve(stalk(k, 0), bound);
    CHECK(rp.p.low == 0);
    CHECK(rp.p.high == bound);
    Resolution res = minimal_resolution(k, bound);
    for (int i = 0; i <= bound; ++i) {
        CAPTURE(i);
        CHECK(rp.p.term(i).dim == res.terms[i].dim);
    }
    check_resolved(rp);
    CHECK(std::holds_alternative<IsoYes>(iso_test(homology(rp.p, 0), k, 5)));

    // a projective stalk terminates immediately
    ResolvedComplex rq = resolve(stalk(regular_module(a), 0), 4);
    CHECK(rq.p.term(0).dim == 2);
    for (int i = 1; i <= 4; ++i) {
        CHECK(rq.p.term(i).dim == 0);
    }
    check_resolved(rq);
}

TEST_CASE("resolving general complexes") {
    Algebra a = truncated_poly(Q, 2);
    ChainComplex c = mult_complex(a);
    ResolvedComplex rp = resolve(c, 6);
    check_resolved(rp);
    // the minimal shape: two regular terms and nothing above degree 1
    CHECK(rp.p.term(0).dim == 2);
    CHECK(rp.p.term(1).dim == 2);
    for (int k = 2; k <= 6; ++k) {
        CAPTURE(k);
        CHECK(rp.p.term(k).dim == 0);
    }

    // an exact complex resolves to the zero complex
    ResolvedComplex re = resolve(cone(identity_chain_map(c)), 9);
    CHECK(re.p.is_zero_object());
    CHECK(!homology_support(re.p).has_value());

    // shifted input, shifted output
    ResolvedComplex rs = resolve(shift(c, 2), 8);
    check_resolved(rs);
    CHECK(rs.p.term(2).dim == 2);
    CHECK(rs.p.term(3).dim == 2);
    CHECK(rs.p.term(4).dim == 0);

    CHECK_THROWS_AS(resolve(stalk(simple_over_local(a), 5), 6), BoundTooSmall);
    CHECK_THROWS_AS(resolve(c, 2), BoundTooSmall);
}

TEST_CASE("resolution over a three-vertex path algebra") {
    Algebra a = path_an(Q, 3);
    Module reg = regular_module(a);
    REQUIRE(a.radical_known());
    // right multiplication by a radical element is a module endomorphism
    Matrix r = a.radical_rows->select_rows({0}).transpose();
    ChainComplex c = two_term(reg, reg, a.right_mult_of(r), 0);
    REQUIRE(c.validate().empty());
    ResolvedComplex rp = resolve(c, 6);
    check_resolved(rp);
}

TEST_CASE("derived hom of stalks agrees with ext") {
    Algebra t2 = truncated_poly(Q, 2);
    Algebra t3 = truncated_poly(Q, 3);
    Algebra sz = schulz_algebra(Q, Scalar::of_int(Q, 2));
    std::vector<std::pair<Module, Module>> pairs;
    {
        Module k2 = simple_over_local(t2);
        Module r2 = regular_module(t2);
        pairs.push_back({k2, k2});
        pairs.push_back({k2, r2});
        pairs.push_back({r2, k2});
        Module k3 = simple_over_local(t3);
        Module r3 = regular_module(t3);
        pairs.push_back({k3, k3});
        pairs.push_back({r3, r3});
        Matrix w(Q, 4, 1);
        w.set(1, 0, Scalar::one(Q));
        w.set(2, 0, -Scalar::of_int(Q, 1));
        Module m1 = quotient(regular_module(sz), sz.right_mult_of(w)).module;
        m1.name = "M(1)";
        pairs.push_back({m1, m1});
        pairs.push_back({m1, regular_module(sz)});
    }
    for (const auto& [x, y] : pairs) {
        CAPTURE(x.name);
        CAPTURE(y.name);
        for (int i = 0; i <= 4; ++i) {
            CAPTURE(i);
            int lhs = derived_hom_dim(stalk(x, 0), stalk(y, 0), i, i + 2);
            CHECK(lhs == ext_dim(x, y, i));
        }
        CHECK(derived_hom_dim(stalk(x, 0), stalk(y, 0), -1, 2) == 0);
        CHECK(derived_hom_dim(stalk(x, 0), stalk(y, 0), -3, 2) == 0);
    }
}

TEST_CASE("derived hom against the regular stalk computes homology") {
    for (int n : {2, 3}) {
        Algebra a = truncated_poly(Q, n);
        Module reg = regular_module(a);
        ChainComplex rs = stalk(reg, 0);
        std::vector<ChainComplex> tests;
        tests.push_back(mult_complex(a));
        tests.push_back(shift(mult_complex(a), -2));
        tests.push_back(shift(mult_complex(a), 1));
        tests.push_back(stalk(simple_over_local(a), 2));
        {
            ChainComplex three;
            three.algebra = a;
            three.low = -1;
            three.high = 1;
            Matrix tk = reg.action_of(t_coords(a));
            Matrix tk_high = tk;  // t^{n-1}, so the composite is t^n = 0
            for (int j = 2; j < n; ++j) {
                tk_high = tk_high * tk;
            }
            three.terms = {reg, reg, reg};
            three.differentials = {tk_high, tk};
            tests.push_back(three);
        }
        for (const ChainComplex& c : tests) {
            CAPTURE(c.name);
            REQUIRE(c.validate().empty());
            for (int i = -3; i <= 3; ++i) {
                CAPTURE(i);
                CHECK(derived_hom_dim(rs, c, i, 12) == homology_dim(c, -i));
            }
        }
    }
}

TEST_CASE("derived hom respects quasi-isomorphic replacements") {
    Algebra a = truncated_poly(Q, 2);
    Module reg = regular_module(a);
    Module k = simple_over_local(a);
    // tA -> A is quasi-isomorphic to the stalk of k = A/tA
    SubmoduleData socle = submodule(reg, radical_span(reg));
    ChainComplex resolved_k = two_term(socle.module, reg, socle.inclusion, 0);
    REQUIRE(resolved_k.validate().empty());
    REQUIRE(homology_dim(resolved_k, 0) == 1);
    REQUIRE(homology_dim(resolved_k, 1) == 0);
    for (int i = 0; i <= 3; ++i) {
        CAPTURE(i);
        CHECK(derived_hom_dim(stalk(k, 0), resolved_k, i, 10) ==
              derived_hom_dim(stalk(k, 0), stalk(k, 0), i, 10));
        CHECK(derived_hom_dim(resolved_k, stalk(k, 0), i, 10) ==
              derived_hom_dim(stalk(k, 0), stalk(k, 0), i, 10));
    }
}

TEST_CASE("derived hom shift compatibility") {
    Algebra a = truncated_poly(Q, 2);
    Module k = simple_over_local(a);
    ChainComplex m = stalk(k, 0);
    ChainComplex c = mult_complex(a);
    for (int j : {-2, 1}) {
        for (int i = 0; i <= 2; ++i) {
            CAPTURE(j);
            CAPTURE(i);
            CHECK(derived_hom_dim(m, shift(c, j), i, 14) ==
                  derived_hom_dim(m, c, i + j, 14));
        }
    }
}

TEST_CASE("derived hom bound contract") {
    Algebra a = truncated_poly(Q, 2);
    Module k = simple_over_local(a);
    CHECK_THROWS_AS(derived_hom_dim(stalk(k, 0), stalk(k, 0), 3, 4),
                    BoundTooSmall);
    CHECK(derived_hom_dim(stalk(k, 0), stalk(k, 0), 3, 5) == 1);
    ResolvedComplex rk = resolve(stalk(k, 0), 6);
    CHECK_THROWS_AS(derived_hom_dims(rk, stalk(k, 0), 0, 5), BoundTooSmall);
    std::vector<int> window = derived_hom_dims(rk, stalk(k, 0), 0, 4);
    for (int v : window) {
        CHECK(v == 1);
    }
    // both sides zero: no bound demanded
    CHECK(derived_hom_dim(zero_complex(a), stalk(k, 0), 3, 0) == 0);
    CHECK(derived_hom_dim(stalk(k, 0), zero_complex(a), 3, 0) == 0);
}

TEST_SUITE_END();
