// Command-line workbench: every subcommand reads the quadratic-map JSON on
// stdin (or --input) and writes a JSON report to stdout plus a one-line
// summary to stderr. Exit codes: 0 ok, 1 mathematical negative, 2 usage
// error, 3 cap exceeded.

#include <fstream>
#include <iostream>
#include <random>
#include <sstream>

#include "CLI11.hpp"
#include "qmap/bockstein.hpp"
#include "qmap/cohomology.hpp"
#include "qmap/errors.hpp"
#include "qmap/group.hpp"
#include "qmap/ideal.hpp"
#include "qmap/json_io.hpp"
#include "qmap/resolution.hpp"
#include "qmap/spectral.hpp"

using namespace qmap;

namespace {

struct Options {
    std::string input;       // path; empty means stdin
    int max_degree = 12;
    std::size_t group_cap = std::size_t{1} << 16;
    unsigned seed = 0;
    std::string format = "json";
};

std::string slurp(const Options& opt) {
    if (!opt.input.empty()) {
        std::ifstream in(opt.input);
        if (!in) throw std::invalid_argument("cannot open input file: " + opt.input);
        std::ostringstream ss;
        ss << in.rdbuf();
        return ss.str();
    }
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
}

QuadraticMap read_map(const Options& opt) { return quadmap_from_json_text(slurp(opt)); }

Json read_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open file: " + path);
    Json j = Json::parse(in, nullptr, false);
    if (j.is_discarded()) throw std::invalid_argument("invalid JSON in " + path);
    return j;
}

int emit(const Options& opt, const Json& report, const std::string& summary, int code) {
    if (opt.format == "text") {
        std::cout << summary << "\n";
    } else {
        std::cout << report.dump(2) << "\n";
        std::cerr << summary << "\n";
    }
    return code;
}

Json polys_to_strings(const std::vector<Poly>& polys) {
    Json out = Json::array();
    for (auto& p : polys) out.push_back(p.str());
    return out;
}

Json poly_matrix_strings(const PolyMatrix& m) {
    Json rows = Json::array();
    for (int i = 0; i < m.rows; ++i) {
        Json row = Json::array();
        for (int j = 0; j < m.cols; ++j) row.push_back(m.at(i, j).str());
        rows.push_back(std::move(row));
    }
    return rows;
}

PolyMatrix poly_matrix_from_strings(const Json& j, int nvars) {
    if (!j.is_array() || j.empty() || !j[0].is_array())
        throw std::invalid_argument("expected an array of arrays of polynomials");
    PolyMatrix m(static_cast<int>(j.size()), static_cast<int>(j[0].size()), nvars);
    for (int i = 0; i < m.rows; ++i)
        for (int c = 0; c < m.cols; ++c)
            m.at(i, c) = parse_poly(j[static_cast<std::size_t>(i)][static_cast<std::size_t>(c)]
                                        .get<std::string>(),
                                    nvars);
    return m;
}

BitMatrix bit_matrix_from_json(const Json& j) {
    if (!j.is_array() || j.empty()) throw std::invalid_argument("expected a 0/1 matrix");
    BitMatrix m(j.size(), j[0].size());
    for (std::size_t r = 0; r < m.rows(); ++r)
        for (std::size_t c = 0; c < m.cols(); ++c) {
            int v = j[r][c].get<int>();
            if (v != 0 && v != 1) throw std::invalid_argument("matrix entries must be 0/1");
            if (v) m.set(r, c);
        }
    return m;
}

void enforce_group_cap(const QuadraticMap& q, const Options& opt) {
    int bits = q.dim_w() + q.dim_v();
    if (bits >= 63 || (std::size_t{1} << bits) > opt.group_cap)
        throw CapExceeded("group order 2^" + std::to_string(bits) + " exceeds --group-cap");
}

/// Builds the coefficient module selected by --module for a closed map.
QModule select_module(const QuadraticMap& q, const std::string& spec, const PolyMatrix& l) {
    if (spec == "trivial") return QModule::trivial(1, q);
    if (spec == "L") {
        auto mod = module_from_l(q, l);
        if (!mod) throw std::invalid_argument("beta(L)+L^2 escapes the span of q");
        return *mod;
    }
    if (spec.rfind("sym:", 0) == 0) {
        int i = std::stoi(spec.substr(4));
        if (i < 0 || i > 6) throw std::invalid_argument("sym power out of range [0,6]");
        auto mod = sym_power_module(q, l, i);
        if (!mod) throw std::invalid_argument("Sym^i(L) does not complete to a module");
        return *mod;
    }
    if (spec.rfind("file:", 0) == 0) {
        Json j = read_json_file(spec.substr(5));
        if (!j.contains("R")) throw std::invalid_argument("module file needs an \"R\" field");
        auto mod = complete_module(q, poly_matrix_from_strings(j["R"], q.dim_w()));
        if (!mod) throw std::invalid_argument("R does not complete to a module");
        return *mod;
    }
    throw std::invalid_argument("unknown --module (use trivial|L|sym:i|file:path)");
}

int cmd_family(const Options& opt, const std::string& kind, int n) {
    Family f;
    if (kind == "gl") f = Family::gl;
    else if (kind == "sl") f = Family::sl;
    else if (kind == "u") f = Family::u;
    else throw std::invalid_argument("family kind must be gl, sl or u");
    QuadraticMap q = family(f, n);
    return emit(opt, quadmap_to_json(q),
                "family " + kind + " " + std::to_string(n) + ": m=" +
                    std::to_string(q.dim_w()) + " n=" + std::to_string(q.dim_v()),
                0);
}

int cmd_check(const Options& opt) {
    QuadraticMap q = read_map(opt);
    bool closed = solve_l(q).has_value();
    RegularityReport reg = is_regular_sequence(q);
    Json report{{"bockstein_closed", closed},
                {"two_power_exact", is_two_power_exact(q)},
                {"square", reg.square},
                {"regular", reg.square && reg.regular}};
    std::string s = std::string("bockstein_closed=") + (closed ? "true" : "false") +
                    " two_power_exact=" + (report["two_power_exact"].get<bool>() ? "true" : "false") +
                    " regular=" + (report["regular"].get<bool>() ? "true" : "false");
    return emit(opt, report, s, closed ? 0 : 1);
}

int cmd_solve_l(const Options& opt) {
    QuadraticMap q = read_map(opt);
    auto sol = solve_l(q);
    if (!sol)
        return emit(opt, Json{{"bockstein_closed", false}}, "not Bockstein closed", 1);
    Json report{{"bockstein_closed", true},
                {"unique", sol->unique()},
                {"kernel_dim", sol->kernel.size()},
                {"L", poly_matrix_strings(sol->particular)}};
    return emit(opt, report,
                "L solved, unique=" + std::string(sol->unique() ? "true" : "false") +
                    " kernel_dim=" + std::to_string(sol->kernel.size()),
                0);
}

int cmd_quotient(const Options& opt) {
    QuadraticMap q = read_map(opt);
    QuotientAlgebra a(q.extension_class(), q.dim_w(), opt.max_degree);
    RegularityReport reg = is_regular_sequence(q);
    Json report{{"hilbert", a.hilbert_series()},
                {"truncation", opt.max_degree},
                {"square", reg.square},
                {"regular", reg.square && reg.regular}};
    std::ostringstream s;
    s << "hilbert =";
    for (int d : a.hilbert_series()) s << " " << d;
    return emit(opt, report, s.str(), 0);
}

int cmd_cohomology(const Options& opt, const std::string& module_spec) {
    QuadraticMap q = read_map(opt);
    auto sol = solve_l(q);
    if (!sol && module_spec != "trivial")
        return emit(opt, Json{{"bockstein_closed", false}}, "not Bockstein closed", 1);
    PolyMatrix l = sol ? sol->particular : PolyMatrix(q.dim_v(), q.dim_v(), q.dim_w());
    QModule mod = select_module(q, module_spec, l);
    // size the algebra one degree past the last p of interest
    QuotientAlgebra a(q.extension_class(), q.dim_w(), opt.max_degree + 1);
    CochainComplex cx(q, mod, a);
    Json dims = Json::array();
    for (int p = 0; p <= opt.max_degree; ++p) dims.push_back(cx.cohomology(p).dim);
    Json report{{"module", module_spec}, {"k", mod.k}, {"h_dims", dims}};
    std::ostringstream s;
    s << "H^p dims (" << module_spec << ") =";
    for (auto& d : dims) s << " " << d.get<int>();
    return emit(opt, report, s.str(), 0);
}

int cmd_group(const Options& opt) {
    QuadraticMap q = read_map(opt);
    enforce_group_cap(q, opt);
    FiniteTwoGroup g = FiniteTwoGroup::build(q);
    StructureReport rep = verify_structure(g, q);
    Json report{{"order", g.order()},
                {"verified", rep.ok()},
                {"center_order", center(g).size()},
                {"frattini_dim", frattini_basis(g).size()},
                {"two_rank", two_rank(g)},
                {"effective", is_effective(q)}};
    std::ostringstream s;
    s << "order=" << g.order() << " verified=" << (rep.ok() ? "true" : "false")
      << " two_rank=" << two_rank(g);
    return emit(opt, report, s.str(), rep.ok() ? 0 : 1);
}

int cmd_realize(const Options& opt) {
    Json j = Json::parse(slurp(opt), nullptr, false);
    if (j.is_discarded() || !j.contains("source") || !j.contains("target") ||
        !j.contains("f_w") || !j.contains("f_v"))
        throw std::invalid_argument(
            "expected {\"source\":map, \"target\":map, \"f_w\":[[0/1]], \"f_v\":[[0/1]]}");
    QuadraticMap q1 = quadmap_from_json(j["source"]);
    QuadraticMap q2 = quadmap_from_json(j["target"]);
    enforce_group_cap(q1, opt);
    enforce_group_cap(q2, opt);
    QuadMorphism phi{bit_matrix_from_json(j["f_w"]), bit_matrix_from_json(j["f_v"])};
    if (!verify_morphism(phi, q1, q2))
        return emit(opt, Json{{"morphism", false}}, "not a morphism of quadratic maps", 1);
    GroupHom hom = realize_morphism(phi, q1, q2);
    Json table = Json::array();
    for (unsigned x : hom.table) table.push_back(x);
    Json tvals = Json::array();
    for (auto& t : hom.t) tvals.push_back(bitvector_to_json(t));
    Json report{{"morphism", true}, {"table", table}, {"t", tvals}};
    return emit(opt, report, "realized as a homomorphism on " +
                                 std::to_string(hom.table.size()) + " elements", 0);
}

int cmd_betti(const Options& opt, int degree) {
    QuadraticMap q = read_map(opt);
    enforce_group_cap(q, opt);
    PoincareCheck pc = poincare_check(q, degree);
    Json report{{"betti", pc.betti}, {"predicted", pc.predicted}, {"match", pc.match}};
    std::ostringstream s;
    s << "betti =";
    for (int b : pc.betti) s << " " << b;
    s << " match=" << (pc.match ? "true" : "false");
    return emit(opt, report, s.str(), pc.match ? 0 : 1);
}

int cmd_b2(const Options& opt, const std::string& eta_spec) {
    QuadraticMap q = read_map(opt);
    auto sol = solve_l(q);
    if (!sol) return emit(opt, Json{{"bockstein_closed", false}}, "not Bockstein closed", 1);
    const PolyMatrix& l = sol->particular;
    int d = opt.max_degree;

    std::vector<Poly> eta;
    Json report;
    bool decompose = true;
    if (eta_spec != "zero") {
        Json j = read_json_file(eta_spec.rfind("file:", 0) == 0 ? eta_spec.substr(5) : eta_spec);
        for (auto& e : j) eta.push_back(parse_poly(e.get<std::string>(), q.dim_w()));
        if (static_cast<int>(eta.size()) != q.dim_v())
            throw std::invalid_argument("eta must have one polynomial per generator");
        auto mod = module_from_l(q, l);
        if (!mod) throw std::invalid_argument("L does not complete to a module");
        QuotientAlgebra a(q.extension_class(), q.dim_w(), 5);
        CochainComplex cx(q, *mod, a);
        ObstructionResult obs = obstruction_test(cx, cx.normalize(3, eta));
        switch (obs.status) {
            case ObstructionStatus::NotCocycle:
                return emit(opt, Json{{"eta_status", "not_cocycle"}},
                            "eta fails the cocycle condition beta(eta)+L eta = 0", 1);
            case ObstructionStatus::NontrivialClass:
                report["eta_status"] = "nontrivial_class";
                decompose = false;  // decomposition formula needs [eta] = 0
                break;
            case ObstructionStatus::Coboundary:
                report["eta_status"] = "coboundary";
                report["xi"] = polys_to_strings(obs.xi->entries);
                break;
        }
    } else {
        report["eta_status"] = "zero";
    }

    B1Page page(q, l, eta, d);
    report["b1"] = b1_dims(page).dims;
    BPage direct = b2_direct(page);
    report["b2_direct"] = direct.dims;
    report["torsion_degrees"] = torsion_report(direct);
    bool agree = true;
    if (decompose) {
        BPage dec = b2_decomposition(q, l, d);
        report["b2_decomposition"] = dec.dims;
        agree = direct.dims == dec.dims;
        report["methods_agree"] = agree;
    }
    std::ostringstream s;
    s << "B2 dims =";
    for (int x : direct.dims) s << " " << x;
    return emit(opt, report, s.str(), agree ? 0 : 1);
}

int cmd_obstruct(const Options& opt, const std::string& eta_path) {
    QuadraticMap q = read_map(opt);
    auto sol = solve_l(q);
    if (!sol) return emit(opt, Json{{"bockstein_closed", false}}, "not Bockstein closed", 1);
    auto mod = module_from_l(q, sol->particular);
    if (!mod) throw std::invalid_argument("L does not complete to a module");
    Json j = read_json_file(eta_path);
    std::vector<Poly> eta;
    for (auto& e : j) eta.push_back(parse_poly(e.get<std::string>(), q.dim_w()));
    if (static_cast<int>(eta.size()) != q.dim_v())
        throw std::invalid_argument("eta must have one polynomial per generator");
    QuotientAlgebra a(q.extension_class(), q.dim_w(), 5);
    CochainComplex cx(q, *mod, a);
    ObstructionResult obs = obstruction_test(cx, cx.normalize(3, eta));
    switch (obs.status) {
        case ObstructionStatus::NotCocycle:
            return emit(opt, Json{{"status", "not_cocycle"}}, "eta is not a cocycle", 1);
        case ObstructionStatus::NontrivialClass:
            return emit(opt, Json{{"status", "nontrivial_class"}},
                        "[eta] != 0 in H^3(Q, L)", 1);
        case ObstructionStatus::Coboundary:
            break;
    }
    Json report{{"status", "coboundary"}, {"xi", polys_to_strings(obs.xi->entries)}};
    return emit(opt, report, "[eta] = 0: eta = delta(xi)", 0);
}

int cmd_selftest(const Options& opt) {
    std::mt19937 rng(opt.seed);
    int checks = 0, failed = 0;
    auto expect = [&](bool ok) {
        ++checks;
        if (!ok) ++failed;
    };

    auto random_poly = [&](int nv) {
        std::vector<Monomial> terms;
        int t = static_cast<int>(rng() % 6);
        for (int i = 0; i < t; ++i) {
            Monomial m(static_cast<std::size_t>(nv));
            int deg = static_cast<int>(rng() % 4);
            for (int k = 0; k < deg; ++k) m.exp[rng() % static_cast<unsigned>(nv)] += 1;
            terms.push_back(std::move(m));
        }
        return Poly::from_terms(nv, std::move(terms));
    };
    for (int i = 0; i < 200; ++i) {
        int nv = 1 + static_cast<int>(rng() % 4);
        Poly a = random_poly(nv), b = random_poly(nv);
        expect(bockstein(bockstein(a)).is_zero());
        expect(bockstein(a * b) == bockstein(a) * b + a * bockstein(b));
        expect(parse_poly(a.str(), nv) == a);
    }

    auto random_map = [&](int m, int n) {
        std::vector<BitVector> values;
        for (int i = 0; i < m; ++i) {
            BitVector v(static_cast<std::size_t>(n));
            for (int k = 0; k < n; ++k)
                if (rng() & 1) v.set(static_cast<std::size_t>(k));
            values.push_back(std::move(v));
        }
        std::vector<std::vector<BitVector>> b(
            static_cast<std::size_t>(m),
            std::vector<BitVector>(static_cast<std::size_t>(m),
                                   BitVector(static_cast<std::size_t>(n))));
        for (int i = 0; i < m; ++i)
            for (int k = i + 1; k < m; ++k)
                for (int c = 0; c < n; ++c)
                    if (rng() & 1)
                        b[static_cast<std::size_t>(i)][static_cast<std::size_t>(k)].set(
                            static_cast<std::size_t>(c));
        return QuadraticMap(m, n, std::move(values), std::move(b));
    };
    for (int i = 0; i < 100; ++i) {
        QuadraticMap qm = random_map(1 + rng() % 3, 1 + rng() % 3);
        expect(check_p(qm).has_value() == solve_l(qm).has_value());
        expect(quadmap_from_json(quadmap_to_json(qm)) == qm);
    }

    QuadraticMap u3 = family(Family::u, 3);
    auto sol = solve_l(u3);
    expect(sol.has_value() && sol->unique());
    QuotientAlgebra a(u3.extension_class(), 3, 6);
    expect(a.hilbert_series()[1] == 3 && a.hilbert_series()[3] == 1);
    CochainComplex cx(u3, QModule::trivial(1, u3), a);
    expect(cx.cohomology(1).dim == 2);
    for (int i = 0; i < 100; ++i) {
        int p = 1 + static_cast<int>(rng() % 2);
        BitVector v(static_cast<std::size_t>(cx.cochain_dim(p)));
        for (std::size_t k = 0; k < v.size(); ++k)
            if (rng() & 1) v.set(k);
        expect(cx.differential(cx.differential(cx.from_coords(p, v))).is_zero());
    }
    FiniteTwoGroup g = FiniteTwoGroup::build(u3);
    expect(g.order() == 64 && verify_structure(g, u3).ok() && two_rank(g) == 3);
    expect(poincare_check(u3, 3).match);

    Json report{{"seed", opt.seed}, {"checks", checks}, {"failed", failed}};
    return emit(opt, report,
                "selftest: " + std::to_string(checks - failed) + "/" +
                    std::to_string(checks) + " checks passed",
                failed == 0 ? 0 : 1);
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"workbench for Bockstein closed quadratic maps over F2"};
    app.require_subcommand(1);
    Options opt;

    auto add_common = [&](CLI::App* sub) {
        sub->add_option("--input", opt.input, "read the map JSON from a file instead of stdin");
        sub->add_option("--max-degree", opt.max_degree, "degree bound for graded computations")
            ->default_val(12);
        sub->add_option("--group-cap", opt.group_cap, "largest group order to enumerate")
            ->default_val(std::size_t{1} << 16);
        sub->add_option("--seed", opt.seed, "seed for randomized checks")->default_val(0);
        sub->add_option("--format", opt.format, "json or text")
            ->default_val("json")
            ->check(CLI::IsMember({"json", "text"}));
        return sub;
    };

    std::string family_kind;
    int family_n = 3;
    auto* fam = add_common(app.add_subcommand("family", "emit a gl/sl/u family map as JSON"));
    fam->add_option("kind", family_kind, "gl, sl or u")->required();
    fam->add_option("n", family_n, "matrix size")->required()->check(CLI::Range(1, 8));

    auto* check = add_common(
        app.add_subcommand("check", "closedness, 2-power exactness and regularity"));
    auto* solvel = add_common(app.add_subcommand("solve-l", "solve beta(q) = L q for L"));
    auto* quot = add_common(app.add_subcommand("quotient", "Hilbert series of A*(Q)"));

    std::string module_spec = "trivial";
    auto* coh = add_common(app.add_subcommand("cohomology", "H^p(Q, U) dimensions"));
    coh->add_option("--module", module_spec, "trivial | L | sym:i | file:path")
        ->default_val("trivial");

    auto* grp = add_common(app.add_subcommand("group", "build and verify G(Q)"));
    auto* rea = add_common(
        app.add_subcommand("realize", "lift a morphism of quadratic maps to the groups"));

    int betti_degree = 4;
    auto* bet = add_common(app.add_subcommand("betti", "resolution Betti numbers vs the "
                                                       "Poincare-series prediction"));
    bet->add_option("--degree", betti_degree, "resolution length (cap 5)")->default_val(4);

    std::string eta_spec = "zero";
    auto* b2 = add_common(app.add_subcommand("b2", "B-page dimensions by both methods"));
    b2->add_option("--eta", eta_spec, "zero or file:path with degree-3 polynomials")
        ->default_val("zero");

    std::string eta_path;
    auto* obs = add_common(app.add_subcommand("obstruct", "test [eta] in H^3(Q, L)"));
    obs->add_option("--eta", eta_path, "JSON file with one polynomial per generator")
        ->required();

    auto* self = add_common(app.add_subcommand("selftest", "run the invariant battery"));

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (fam->parsed()) return cmd_family(opt, family_kind, family_n);
        if (check->parsed()) return cmd_check(opt);
        if (solvel->parsed()) return cmd_solve_l(opt);
        if (quot->parsed()) return cmd_quotient(opt);
        if (coh->parsed()) return cmd_cohomology(opt, module_spec);
        if (grp->parsed()) return cmd_group(opt);
        if (rea->parsed()) return cmd_realize(opt);
        if (bet->parsed()) return cmd_betti(opt, betti_degree);
        if (b2->parsed()) return cmd_b2(opt, eta_spec);
        if (obs->parsed()) return cmd_obstruct(opt, eta_path);
        if (self->parsed()) return cmd_selftest(opt);
    } catch (const CapExceeded& e) {
        std::cerr << "cap exceeded: " << e.what() << "\n";
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "internal error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
