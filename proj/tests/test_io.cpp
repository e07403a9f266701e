#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

#include "doctest.h"
#include "syzygy/io.hpp"

using namespace syzygy;
namespace fs = std::filesystem;

namespace {

const FieldSpec Q = FieldSpec::rationals();
const FieldSpec F5 = FieldSpec::prime_field(5);

Module simple_over_local(const Algebra& a) {
    Module s = top(regular_module(a)).module;
    s.name = "k";
    return s;
}

ChainComplex mult_complex(const Algebra& a) {
    Module reg = regular_module(a);
    ChainComplex c;
    c.algebra = a;
    c.name = "mult";
    c.low = 0;
    c.high = 1;
    c.terms = {reg, reg};
    c.differentials = {a.right_mult_of(a.basis_element(1))};
    return c;
}

fs::path scratch_dir() {
    fs::path p = fs::temp_directory_path() / "syzygy-io-tests";
    fs::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("algebra serialization round-trips every builtin") {
    std::vector<Algebra> corpus = {
        truncated_poly(Q, 2),
        truncated_poly(Q, 3),
        path_an(Q, 3),
        cyclic_group(FieldSpec::prime_field(2), 2),
        schulz_algebra(Q, Scalar::of_int(Q, 2)),
        schulz_algebra(F5, Scalar::of_residue(F5, 2)),
        full_matrix(Q, 2),
    };
    for (const Algebra& a : corpus) {
        CAPTURE(a.name);
        Json j = algebra_to_json(a);
        Algebra b = algebra_from_json(j);
        CHECK(b.validate().empty());
        CHECK(a.same_algebra(b));
        CHECK(b.basis_names == a.basis_names);
        CHECK(b.idempotents.size() == a.idempotents.size());
        CHECK(b.radical_rows.has_value() == a.radical_rows.has_value());
        CHECK(b.generators.size() == a.generators.size());
        // canonical form: serializing again gives the identical document
        CHECK(algebra_to_json(b).dump() == j.dump());
    }
}

TEST_CASE("module serialization round-trips with exact actions") {
    Algebra a = truncated_poly(Q, 3);
    Module k = simple_over_local(a);
    Module reg = regular_module(a);
    for (const Module* m : {&k, &reg}) {
        Json j = module_to_json(*m, true);
        Module back = module_from_json(j, nullptr, ".");
        CHECK(back.dim == m->dim);
        CHECK(back.action == m->action);
        CHECK(back.algebra.same_algebra(m->algebra));
    }
    // context-supplied algebra
    Json bare = module_to_json(k, false);
    Module from_ctx = module_from_json(bare, &a, ".");
    CHECK(from_ctx.action == k.action);
    CHECK_THROWS_AS(module_from_json(bare, nullptr, "."), Error);
}

TEST_CASE("complex serialization keeps degenerate shapes") {
    Algebra a = truncated_poly(Q, 2);
    ChainComplex c = mult_complex(a);
    Json j = complex_to_json(c);
    ChainComplex back = complex_from_json(j, ".");
    CHECK(back.validate().empty());
    CHECK(back.low == c.low);
    CHECK(back.high == c.high);
    CHECK(back.differentials == c.differentials);

    // a complex with a zero middle term: differentials of shape 0 x 1 and
    // 1 x 0 must come back with the right shapes
    Module k = simple_over_local(a);
    Module z = zero_module(a);
    ChainComplex gap;
    gap.algebra = a;
    gap.name = "gap";
    gap.low = 0;
    gap.high = 2;
    gap.terms = {k, z, k};
    gap.differentials = {Matrix(Q, 1, 0), Matrix(Q, 0, 1)};
    REQUIRE(gap.validate().empty());
    ChainComplex gap_back = complex_from_json(complex_to_json(gap), ".");
    CHECK(gap_back.validate().empty());
    CHECK(gap_back.differential(1).rows() == 1);
    CHECK(gap_back.differential(1).cols() == 0);
    CHECK(gap_back.differential(2).rows() == 0);
    CHECK(gap_back.differential(2).cols() == 1);

    // the zero complex
    ChainComplex zc = zero_complex(a);
    ChainComplex zc_back = complex_from_json(complex_to_json(zc), ".");
    CHECK(zc_back.is_zero_object());
}

TEST_CASE("file round trip and path-referenced algebras") {
    fs::path dir = scratch_dir();
    Algebra a = schulz_algebra(Q, Scalar::of_int(Q, 2));
    write_json(dir / "alg.json", algebra_to_json(a));
    Algebra a2 = load_algebra(dir / "alg.json");
    CHECK(a.same_algebra(a2));

    Module reg = regular_module(a);
    Json mj = module_to_json(reg, false);
    mj["algebra"] = "alg.json";  // relative to the module file
    write_json(dir / "reg.json", mj);
    Module m2 = load_module(dir / "reg.json");
    CHECK(m2.dim == reg.dim);
    CHECK(m2.action == reg.action);

    ChainComplex c = stalk(reg, 3);
    write_json(dir / "c.json", complex_to_json(c));
    ChainComplex c2 = load_complex(dir / "c.json");
    CHECK(c2.low == 3);
    CHECK(c2.high == 3);
    CHECK(c2.validate().empty());
}

TEST_CASE("malformed documents are rejected with context") {
    Algebra a = truncated_poly(Q, 2);
    Json good = algebra_to_json(a);

    Json missing = good;
    missing.erase("unit");
    CHECK_THROWS_AS(algebra_from_json(missing), Error);

    Json bad_scalar = good;
    bad_scalar["unit"][0] = "one half";
    CHECK_THROWS_AS(algebra_from_json(bad_scalar), Error);

    // break associativity: the validator must refuse the table
    Json broken = good;
    broken["structure_constants"].push_back(Json::array({1, 1, 1, "1"}));
    CHECK_THROWS_AS(algebra_from_json(broken), Error);

    Module k = simple_over_local(a);
    Json mj = module_to_json(k, true);
    mj["action"] = Json::array();  // wrong count
    CHECK_THROWS_AS(module_from_json(mj, nullptr, "."), Error);

    ChainComplex c = mult_complex(a);
    Json cj = complex_to_json(c);
    cj["differentials"][0][0][0] = "1";  // no longer a chain complex? it is
    // one (any matrix is a valid differential for a two-term complex), but
    // intertwining with the action must still hold
    cj["differentials"][0][1][0] = "1";
    cj["differentials"][0][0][1] = "1";
    CHECK_THROWS_AS(complex_from_json(cj, "."), Error);

    fs::path dir = scratch_dir();
    std::ofstream(dir / "broken.json") << "{ not json";
    CHECK_THROWS_AS(read_json(dir / "broken.json"), Error);
    CHECK_THROWS_AS(read_json(dir / "no-such-file.json"), Error);
}

TEST_CASE("report serialization carries the schema and certificates") {
    Algebra a = truncated_poly(Q, 2);
    Module k = simple_over_local(a);

    OrthReport orth = check_perp(stalk(k, 0), stalk(k, 0), 3, 0);
    Json jo = orth_report_to_json(orth);
    CHECK(jo["schema"] == "garc-report/1");
    CHECK(jo["dims"].size() == 7);
    CHECK(jo["vanishes_in_window"] == false);

    PdCertificate pd = pd_certificate(k, 4);
    Json jp = pd_certificate_to_json(pd);
    CHECK(jp["verdict"] == "infinite");
    CHECK(jp["reason"] == "syzygy-periodicity");
    CHECK(jp["periodicity"]["a"] == 0);
    CHECK(jp["periodicity"]["b"] == 1);
    CHECK(jp["periodicity"]["iso"].is_array());

    GarcReport rep = check_garc_instance(stalk(regular_module(a), 0), 5, 1, 7);
    Json jg = garc_report_to_json(rep);
    CHECK(jg["schema"] == "garc-report/1");
    CHECK(jg["classification"] == "Consistent");
    CHECK(jg["hypotheses_hold"] == true);
    CHECK(jg["omega_pd"]["verdict"] == "finite");
    CHECK(jg["omega_pd"]["value"] == -1);

    SchulzScanReport scan =
        schulz_scan(Q, Scalar::of_int(Q, 2), 4, 5);
    Json js = schulz_report_to_json(scan);
    CHECK(js["kind"] == "schulz-scan");
    CHECK(js["entries"].size() == scan.entries.size());
    CHECK(js["hits"].size() == scan.hits.size());
    CHECK(js["root_of_unity"].is_null());
    // serialization is deterministic
    CHECK(js.dump() == schulz_report_to_json(scan).dump());
}
