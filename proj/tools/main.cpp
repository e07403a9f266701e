#include <cstdint>
#include <ctime>
#include <filesystem>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "syzygy/io.hpp"

using namespace syzygy;
namespace fs = std::filesystem;

namespace {

struct GlobalOpts {
    std::string out;
    uint64_t seed = 0;
    bool json = false;
};

std::string timestamp_utc() {
    std::time_t t = std::time(nullptr);
    std::tm tm{};
    gmtime_r(&t, &tm);
    char buf[32];
    std::strftime(buf, sizeof buf, "%Y-%m-%dT%H:%M:%SZ", &tm);
    return buf;
}

Json base_report(const std::string& subcommand, Json args,
                 const GlobalOpts& g) {
    Json r;
    r["schema"] = "garc-report/1";
    Json inv;
    inv["subcommand"] = subcommand;
    inv["args"] = std::move(args);
    inv["seed"] = g.seed;
    r["invocation"] = std::move(inv);
    r["generated_at"] = timestamp_utc();
    return r;
}

void emit_report(const Json& r, const GlobalOpts& g) {
    if (!g.out.empty()) {
        write_json(g.out, r);
    }
    if (g.json) {
        std::cout << r.dump(2) << "\n";
    }
}

std::string dims_row(const std::vector<int>& dims) {
    std::string out;
    for (std::size_t i = 0; i < dims.size(); ++i) {
        if (i > 0) {
            out += " ";
        }
        out += std::to_string(dims[i]);
    }
    return out;
}

FieldSpec parse_field(const std::string& s) {
    if (s == "Q" || s == "q") {
        return FieldSpec::rationals();
    }
    if (s.size() >= 2 && (s[0] == 'F' || s[0] == 'f')) {
        try {
            unsigned long p = std::stoul(s.substr(1));
            return FieldSpec::prime_field(static_cast<uint32_t>(p));
        } catch (const std::exception&) {
            // fall through to the usage error below
        }
    }
    throw InvalidParameter("field must be Q or F<p> (for example F5), got '" +
                           s + "'");
}

int cmd_alg_validate(const std::string& path, const GlobalOpts& g) {
    Algebra a = load_algebra(path);
    std::cout << "algebra " << (a.name.empty() ? path : a.name)
              << ": valid\n"
              << "  field:       " << a.field.to_string() << "\n"
              << "  dimension:   " << a.dim << "\n"
              << "  idempotents: " << a.idempotents.size() << "\n"
              << "  radical:     " << (a.radical_known() ? "known" : "not given")
              << "\n";
    Json r = base_report("alg-validate", Json{{"algebra", path}}, g);
    r["valid"] = true;
    r["field"] = field_to_json(a.field);
    r["dim"] = a.dim;
    r["idempotents"] = a.idempotents.size();
    r["radical_known"] = a.radical_known();
    emit_report(r, g);
    return 0;
}

int cmd_ext_table(const std::string& alg_path, const std::string& x_path,
                  const std::string& y_path, int max_degree,
                  const GlobalOpts& g) {
    if (max_degree < 0) {
        throw InvalidParameter("--max-degree must be >= 0");
    }
    Algebra a = load_algebra(alg_path);
    Module x = load_module(x_path, &a);
    Module y = load_module(y_path, &a);
    std::vector<int> via_module = ext_dims(x, y, 0, max_degree);
    ResolvedComplex rm = resolve(stalk(x, 0), max_degree + 2);
    std::vector<int> via_derived =
        derived_hom_dims(rm, stalk(y, 0), 0, max_degree);
    bool agree = via_module == via_derived;
    std::cout << "Ext table for 0 <= i <= " << max_degree << "\n"
              << "  module path:  " << dims_row(via_module) << "\n"
              << "  derived path: " << dims_row(via_derived) << "\n"
              << "  paths " << (agree ? "agree" : "DISAGREE") << "\n";
    Json r = base_report("ext-table",
                         Json{{"algebra", alg_path},
                              {"x", x_path},
                              {"y", y_path},
                              {"max_degree", max_degree}},
                         g);
    r["ext_module_path"] = via_module;
    r["ext_derived_path"] = via_derived;
    r["agree"] = agree;
    emit_report(r, g);
    if (!agree) {
        std::cerr << "internal error: the module-resolution and derived-Hom "
                     "paths disagree\n";
        return 70;
    }
    return 0;
}

int cmd_resolve_omega(const std::string& complex_path, int bound,
                      const GlobalOpts& g) {
    ChainComplex c = load_complex(complex_path);
    OmegaResult om = omega(c, bound);
    fs::path dir = g.out.empty() ? fs::path(".") : fs::path(g.out);
    fs::create_directories(dir);
    write_json(dir / "resolution.json", complex_to_json(om.resolved.p));
    write_json(dir / "omega.json", module_to_json(om.omega, true));
    write_json(dir / "q.json", complex_to_json(om.q));
    Json r = base_report(
        "resolve-omega",
        Json{{"complex", complex_path}, {"bound", bound}}, g);
    r["omega"] = omega_result_to_json(om);
    r["files"] = Json::array({"resolution.json", "omega.json", "q.json"});
    r["verified"] = Json::array({
        "differentials compose to zero",
        "resolution matches the homology of the input through the bound",
        "degreewise split truncation sequence",
        "syzygy module is the homology of the high truncation",
        "perfect part has projective terms",
    });
    write_json(dir / "report.json", r);
    if (g.json) {
        std::cout << r.dump(2) << "\n";
    }
    std::cout << "syzygy construction for " << complex_path << "\n"
              << "  homology support: [" << om.inf << ", "
              << om.inf + om.width << "]\n"
              << "  omega dimension:  " << om.omega.dim << " (placement "
              << om.placement << ")\n"
              << "  artifacts: " << (dir / "resolution.json").string() << ", "
              << (dir / "omega.json").string() << ", "
              << (dir / "q.json").string() << "\n"
              << "  all construction invariants verified\n";
    return 0;
}

int cmd_perp_check(const std::string& m_path, const std::string& n_path,
                   int window, int threshold, const GlobalOpts& g) {
    ChainComplex m = load_complex(m_path);
    ChainComplex n = load_complex(n_path);
    OrthReport rep = check_perp(m, n, window, threshold);
    std::cout << "orthogonality of " << m_path << " against " << n_path
              << "\n"
              << "  window [-" << window << ", " << window << "], threshold "
              << threshold << "\n"
              << "  dims: " << dims_row(rep.dims) << "\n"
              << "  verdict: "
              << (rep.vanishes_in_window ? "vanishes in window"
                                         : "nonzero degrees present")
              << "\n";
    if (!rep.nonzero_degrees.empty()) {
        std::string degs;
        for (int i : rep.nonzero_degrees) {
            degs += (degs.empty() ? "" : " ") + std::to_string(i);
        }
        std::cout << "  nonzero at: " << degs << "\n";
    }
    Json r = base_report("perp-check",
                         Json{{"m", m_path},
                              {"n", n_path},
                              {"window", window},
                              {"threshold", threshold}},
                         g);
    r.update(orth_report_to_json(rep));
    emit_report(r, g);
    return 0;
}

int cmd_perfect_check(const std::string& complex_path, int bound,
                      const GlobalOpts& g) {
    ChainComplex c = load_complex(complex_path);
    PerfectReport rep = is_perfect(c, bound);
    const char* verdict = rep.verdict == Perfectness::Perfect ? "Perfect"
                          : rep.verdict == Perfectness::NotPerfect
                              ? "NotPerfect"
                              : "Unknown";
    std::cout << "perfectness of " << complex_path << ": " << verdict << "\n"
              << "  " << rep.note << "\n";
    Json r = base_report("perfect-check",
                         Json{{"complex", complex_path}, {"bound", bound}},
                         g);
    r.update(perfect_report_to_json(rep));
    emit_report(r, g);
    return 0;
}

int cmd_garc_check(const std::string& complex_path, int window, int threshold,
                   int bound, const GlobalOpts& g) {
    ChainComplex c = load_complex(complex_path);
    GarcReport rep = check_garc_instance(c, window, threshold, bound);
    std::cout << "instance " << complex_path << "\n"
              << "  window " << window << ", threshold " << threshold
              << ", bound " << bound << "\n"
              << "  hypotheses: "
              << (rep.hypotheses_hold ? "hold" : "fail") << "\n"
              << "  classification: " << to_string(rep.classification)
              << "\n";
    if (!rep.note.empty()) {
        std::cout << "  note: " << rep.note << "\n";
    }
    Json r = base_report("garc-check",
                         Json{{"complex", complex_path},
                              {"window", window},
                              {"threshold", threshold},
                              {"bound", bound}},
                         g);
    r.update(garc_report_to_json(rep));
    emit_report(r, g);
    switch (rep.classification) {
        case GarcClassification::CandidateCounterexample:
            return 2;
        case GarcClassification::Inconclusive:
            return 3;
        case GarcClassification::HypothesesFail:
        case GarcClassification::Consistent:
            return 0;
    }
    return 0;
}

int cmd_schulz_demo(const std::string& field_str, const std::string& c_str,
                    int window, int bound, const GlobalOpts& g) {
    FieldSpec f = parse_field(field_str);
    Scalar c = Scalar::zero(f);
    try {
        c = Scalar::parse(f, c_str);
    } catch (const Error& e) {
        throw InvalidParameter("--c: " + std::string(e.what()));
    }
    SchulzScanReport rep = schulz_scan(f, c, window, bound);
    std::cout << "family scan over " << f.to_string() << " with c = "
              << rep.c_value << ", window [1, " << window << "]\n";
    for (const SchulzEntry& e : rep.entries) {
        std::cout << "  M(" << e.label << ")"
                  << std::string(e.label.size() < 5 ? 5 - e.label.size() : 1,
                                 ' ')
                  << " self: " << dims_row(e.ext_self)
                  << "   regular: " << dims_row(e.ext_regular);
        if (e.vanish_from) {
            std::cout << "   vanishes from " << *e.vanish_from;
        }
        std::cout << "\n";
    }
    if (rep.hits.empty()) {
        std::cout << "no eventually-orthogonal members found\n";
    } else {
        std::string labels;
        for (const std::string& h : rep.hits) {
            labels += (labels.empty() ? "" : ", ") + h;
        }
        std::cout << "eventually-orthogonal members: " << labels << "\n";
    }
    std::cout << "Frobenius certificate: "
              << (rep.frobenius ? "present" : "absent") << "\n";
    if (!rep.note.empty()) {
        std::cout << rep.note << "\n";
    }
    Json r = base_report("schulz-demo",
                         Json{{"field", field_str},
                              {"c", c_str},
                              {"window", window},
                              {"bound", bound}},
                         g);
    r.update(schulz_report_to_json(rep));
    emit_report(r, g);
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact homological algebra over finite-dimensional algebras"};
    app.require_subcommand(1);
    app.fallthrough();

    GlobalOpts g;
    app.add_option("--out", g.out,
                   "write the JSON report to this path (a directory for "
                   "resolve-omega)");
    app.add_option("--seed", g.seed, "seed recorded in reports");
    app.add_flag("--json", g.json, "print the JSON report to stdout");

    std::string alg_path, x_path, y_path, m_path, n_path, complex_path;
    std::string field_str = "Q", c_str = "2";
    int max_degree = 6, window = 12, threshold = 2, bound = 16;

    CLI::App* validate = app.add_subcommand(
        "alg-validate", "load an algebra file and check its axioms");
    validate->add_option("algebra", alg_path, "algebra JSON file")
        ->required();

    CLI::App* ext = app.add_subcommand(
        "ext-table",
        "Ext dimensions of a module pair via two independent paths");
    ext->add_option("algebra", alg_path, "algebra JSON file")->required();
    ext->add_option("x", x_path, "module JSON file")->required();
    ext->add_option("y", y_path, "module JSON file")->required();
    ext->add_option("--max-degree", max_degree, "top Ext degree")
        ->capture_default_str();

    CLI::App* romega = app.add_subcommand(
        "resolve-omega",
        "resolve a complex and write its syzygy construction");
    romega->add_option("complex", complex_path, "complex JSON file")
        ->required();
    romega->add_option("--bound", bound, "resolution bound")
        ->capture_default_str();

    CLI::App* perp = app.add_subcommand(
        "perp-check", "windowed orthogonality of two complexes");
    perp->add_option("m", m_path, "left complex JSON file")->required();
    perp->add_option("n", n_path, "right complex JSON file")->required();
    perp->add_option("--window", window, "window half-width")
        ->capture_default_str();
    perp->add_option("--threshold", threshold, "ignore |i| below this")
        ->capture_default_str();

    CLI::App* perfect = app.add_subcommand(
        "perfect-check", "decide perfectness through the syzygy module");
    perfect->add_option("complex", complex_path, "complex JSON file")
        ->required();
    perfect->add_option("--bound", bound, "resolution bound")
        ->capture_default_str();

    CLI::App* garc = app.add_subcommand(
        "garc-check",
        "orthogonality hypotheses plus perfectness classification");
    garc->add_option("complex", complex_path, "complex JSON file")
        ->required();
    garc->add_option("--window", window, "window half-width")
        ->capture_default_str();
    garc->add_option("--threshold", threshold, "hypothesis threshold")
        ->capture_default_str();
    garc->add_option("--bound", bound, "resolution bound")
        ->capture_default_str();

    CLI::App* demo = app.add_subcommand(
        "schulz-demo", "scan the two-relator family for eventual "
                       "orthogonality");
    demo->add_option("--field", field_str, "Q or F<p>")
        ->capture_default_str();
    demo->add_option("--c", c_str, "the relation parameter, nonzero")
        ->capture_default_str();
    demo->add_option("--window", window, "top Ext degree scanned")
        ->capture_default_str();
    demo->add_option("--bound", bound, "resolution bound for certificates")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForAllHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 64;
    }

    try {
        if (app.got_subcommand(validate)) {
            return cmd_alg_validate(alg_path, g);
        }
        if (app.got_subcommand(ext)) {
            return cmd_ext_table(alg_path, x_path, y_path, max_degree, g);
        }
        if (app.got_subcommand(romega)) {
            return cmd_resolve_omega(complex_path, bound, g);
        }
        if (app.got_subcommand(perp)) {
            return cmd_perp_check(m_path, n_path, window, threshold, g);
        }
        if (app.got_subcommand(perfect)) {
            return cmd_perfect_check(complex_path, bound, g);
        }
        if (app.got_subcommand(garc)) {
            return cmd_garc_check(complex_path, window, threshold, bound, g);
        }
        if (app.got_subcommand(demo)) {
            return cmd_schulz_demo(field_str, c_str, window, bound, g);
        }
        std::cerr << "no subcommand given\n";
        return 64;
    } catch (const BoundTooSmall& e) {
        std::cerr << "error: " << e.what()
                  << "\nincrease --bound and run again\n";
        return 65;
    } catch (const ZeroComplex& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const InvalidParameter& e) {
        std::cerr << "usage error: " << e.what() << "\n";
        return 64;
    } catch (const Error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 65;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 70;
    }
}
