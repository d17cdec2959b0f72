#include "qcurv/cli.hpp"

#include "qcurv/coeff.hpp"
#include "qcurv/golden.hpp"
#include "qcurv/residue.hpp"
#include "qcurv/rpoly.hpp"
#include "qcurv/sphere.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <fstream>
#include <sstream>

namespace qcurv {

namespace {

constexpr int kOk = 0;
constexpr int kFail = 1;
constexpr int kUsage = 2;

struct Options {
    std::string composition;
    std::string eval;
    std::string format = "text";
    std::string source = "rpoly";
    std::string suite;
    std::string dims;
    std::string lambdas;
    std::string out_path;
    int N = 0;
    int max_N = 0;
    int max_size = 0;
};

struct UsageError : Error {
    using Error::Error;
};

std::vector<Rational> parse_list(const std::string& text) {
    std::vector<Rational> out;
    std::stringstream ss(text);
    std::string item;
    try {
        while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    if (out.empty()) throw UsageError("empty list");
    return out;
}

void print_report(std::ostream& os, const Report& rep) {
    for (const auto& l : rep.lines) {
        os << (l.pass ? "PASS " : "FAIL ") << l.name;
        if (!l.detail.empty())
            os << ": " << l.detail;
        os << "\n";
    }
}

int finish(std::ostream& os, const Report& rep, const std::string& suite) {
    print_report(os, rep);
    os << suite << ": " << rep.lines.size() - rep.failures() << "/" << rep.lines.size() << " passed\n";
    return rep.ok() ? kOk : kFail;
}

int cmd_rpoly(const Options& o, std::ostream& os) {
    Composition I;
    try {
        I = parse_composition(o.composition);
    } catch (const Error& e) {
        throw UsageError(e.what());
    }
    const UniPoly& p = build_r(I).poly;
    if (!o.eval.empty()) {
        Rational x0;
        try {
            x0 = parse_rational(o.eval);
        } catch (const Error& e) {
            throw UsageError(e.what());
        }
        os << pretty(p(x0)) << "\n";
        return kOk;
    }
    int s = comp_size(I);
    if (o.format == "json") {
        nlohmann::ordered_json j;
        j["I"] = I;
        std::vector<std::string> c;
        for (const auto& v : p.coeffs()) c.push_back(to_string(v));
        j["coeffs"] = c;
        nlohmann::ordered_json half, ints;
        for (const auto& x : half_integer_set(s)) half[to_string(x)] = to_string(p(x));
        for (int x = -s; x <= 2; ++x) ints[std::to_string(x)] = to_string(p(Rational(x)));
        j["values_half"] = half;
        j["values_int"] = ints;
        os << j.dump(2) << "\n";
        return kOk;
    }
    os << (o.format == "latex" ? p.latex_str() : p.str()) << "\n";
    auto pts = half_integer_set(s);
    for (auto it = pts.rbegin(); it != pts.rend(); ++it) os << "x=" << pretty(*it) << " " << pretty(p(*it)) << "\n";
    for (int x = -s; x <= 2; ++x) os << "x=" << x << " " << pretty(p(Rational(x))) << "\n";
    return kOk;
}

int cmd_formula(const Options& o, std::ostream& os) {
    if (o.N < 2) throw UsageError("--N must be >= 2");
    RecursiveFormula F;
    if (o.source == "rpoly") {
        if (o.N > 16) throw UsageError("--N must be <= 16 for the rpoly route");
        F = assemble_formula(o.N);
    } else if (o.source == "residue") {
        if (o.N > 8) throw UsageError("--N must be <= 8 for the residue route");
        F = critical_formula(o.N);
    } else {
        throw UsageError("unknown source " + o.source);
    }
    if (o.format == "json")
        os << formula_json(F) << "\n";
    else if (o.format == "latex")
        os << formula_latex(F) << "\n";
    else
        os << formula_text(F) << "\n";
    return kOk;
}

int cmd_verify(const Options& o, std::ostream& os) {
    const std::string& s = o.suite;
    if (s == "tables") {
        TableSummary sum;
        Report rep = verify_tables(&sum);
        os << "polynomials " << sum.polys << ", values " << sum.values << ", source inconsistencies "
           << sum.source_inconsistencies.size() << "\n";
        return finish(os, rep, s);
    }
    if (s == "formulas") {
        int nmax = o.max_N ? o.max_N : 8;
        Report rep = verify_golden_formulas(nmax);
        for (int N = 2; N <= nmax; ++N) rep.append(check_sign_law(assemble_formula(N)));
        rep.append(verify_alpha_table());
        rep.append(check_alpha_layer(std::max(nmax, 20)));
        rep.append(closed_form_check(std::max(nmax, 14)));
        return finish(os, rep, s);
    }
    if (s == "spheres") {
        int nmax = o.max_N ? o.max_N : 10;
        std::vector<Rational> lams = o.lambdas.empty() ? std::vector<Rational>{1, 2, -1, rat(5, 7)} : parse_list(o.lambdas);
        Report rep;
        int lo = o.N ? o.N : 2, hi = o.N ? o.N : nmax;
        for (int N = lo; N <= hi; ++N) rep.append(verify_formula_on_sphere(assemble_formula(N)));
        for (int N = lo; N <= std::min(hi, 6); ++N) rep.append(einstein_scaling_check(assemble_formula(N), lams));
        return finish(os, rep, s);
    }
    if (s == "cross") return finish(os, cross_check(o.max_N ? o.max_N : 5), s);
    if (s == "universality") {
        int nmax = o.max_N ? o.max_N : 4;
        Report rep;
        for (int N = o.N ? o.N : 2; N <= (o.N ? o.N : nmax); ++N) {
            std::vector<Rational> dims = o.dims.empty()
                                             ? std::vector<Rational>{Rational(4 * N), Rational(4 * N + 2), Rational(4 * N + 4)}
                                             : parse_list(o.dims);
            RecursiveFormula crit = critical_formula(N);
            for (const auto& n : dims) {
                UniversalityProbe p = universality_probe(N, n);
                std::string id = " N=" + std::to_string(N) + " n=" + pretty(n);
                std::string d = formula_diff(p.formula, crit);
                rep.add("Q^res(0) formula" + id, d.empty(), d);
                ValueExpr want = formula_defect(crit) * ((n - 1) / (2 * N - 1));
                bool ok = p.derivative_residual == want;
                rep.add("derivative residual (n-1)/" + std::to_string(2 * N - 1) + id, ok,
                        ok ? "" : p.derivative_residual.str());
            }
        }
        return finish(os, rep, s);
    }
    if (s == "conjectures") {
        int smax = o.max_size ? o.max_size : 6;
        Report rep = check_conjectural_identities(smax);
        rep.append(check_gen_f(11));
        rep.append(check_q_series(smax));
        int code = finish(os, rep, s);
        if (code != kOk) os << "CONJECTURE COUNTEREXAMPLE: " << rep.failures() << " identity check(s) failed\n";
        return code;
    }
    throw UsageError("unknown suite " + s);
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Q-curvature recursion engine"};
    app.require_subcommand(1);
    Options o;

    auto add_common = [&](CLI::App* c) {
        c->add_option("--format", o.format)->check(CLI::IsMember({"text", "latex", "json"}));
        c->add_option("--out", o.out_path);
    };
    auto* rp = app.add_subcommand("rpoly", "build r_I and print it with its values");
    rp->add_option("--I", o.composition)->required();
    rp->add_option("--eval", o.eval);
    add_common(rp);

    auto* fm = app.add_subcommand("formula", "emit the recursive formula for Q_{2N}");
    fm->add_option("--N", o.N)->required();
    fm->add_option("--source", o.source)->check(CLI::IsMember({"rpoly", "residue"}));
    add_common(fm);

    auto* vf = app.add_subcommand("verify", "run a verification suite");
    vf->add_option("suite", o.suite)->required();
    vf->add_option("--N", o.N);
    vf->add_option("--max-N", o.max_N);
    vf->add_option("--max-size", o.max_size);
    vf->add_option("--dims", o.dims);
    vf->add_option("--lambdas", o.lambdas);
    add_common(vf);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        out << app.help();
        return kOk;
    } catch (const CLI::ParseError& e) {
        err << e.what() << "\n";
        return kUsage;
    }
    if (o.N < 0 || o.max_N < 0 || o.max_size < 0) {
        err << "bounds must be nonnegative\n";
        return kUsage;
    }

    std::ofstream file;
    std::ostream* os = &out;
    if (!o.out_path.empty()) {
        file.open(o.out_path);
        if (!file) {
            err << "cannot open " << o.out_path << "\n";
            return kUsage;
        }
        os = &file;
    }
    try {
        if (rp->parsed()) return cmd_rpoly(o, *os);
        if (fm->parsed()) return cmd_formula(o, *os);
        return cmd_verify(o, *os);
    } catch (const UsageError& e) {
        err << e.what() << "\n";
        return kUsage;
    } catch (const Error& e) {
        err << "error: " << e.what() << "\n";
        return kFail;
    }
}

}  // namespace qcurv
