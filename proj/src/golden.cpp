#include "qcurv/golden.hpp"

#include "qcurv/rpoly.hpp"

#include <sstream>

namespace qcurv {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string item;
    std::stringstream ss(s);
    while (std::getline(ss, item, sep)) out.push_back(item);
    if (!s.empty() && s.back() == sep) out.emplace_back();
    return out;
}

std::vector<std::vector<std::string>> records(const std::string& text, size_t fields) {
    std::vector<std::vector<std::string>> out;
    std::stringstream ss(text);
    std::string line;
    int lineno = 0;
    while (std::getline(ss, line)) {
        ++lineno;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ';');
        if (f.size() != fields) throw Error("golden record with wrong field count at line " + std::to_string(lineno));
        out.push_back(std::move(f));
    }
    return out;
}

}  // namespace

std::vector<GoldenPoly> parse_golden_polys(const std::string& text) {
    std::vector<GoldenPoly> out;
    for (const auto& f : records(text, 2)) {
        GoldenPoly g;
        g.index = parse_composition(f[0]);
        for (const auto& c : split(f[1], ',')) g.coeffs.push_back(parse_rational(c));
        out.push_back(std::move(g));
    }
    return out;
}

std::vector<GoldenValue> parse_golden_values(const std::string& text) {
    std::vector<GoldenValue> out;
    for (const auto& f : records(text, 4))
        out.push_back({f[0], parse_composition(f[1]), parse_rational(f[2]), parse_rational(f[3])});
    return out;
}

std::vector<GoldenAlpha> parse_golden_alpha(const std::string& text) {
    std::vector<GoldenAlpha> out;
    for (const auto& f : records(text, 3)) out.push_back({std::stoi(f[0]), std::stoi(f[1]), parse_rational(f[2])});
    return out;
}

std::map<int, RecursiveFormula> parse_golden_formulas(const std::string& text) {
    std::map<int, RecursiveFormula> out;
    std::stringstream ss(text);
    std::string line;
    while (std::getline(ss, line)) {
        if (line.empty() || line[0] == '#') continue;
        auto f = split(line, ';');
        if (f.size() < 4) throw Error("malformed formula record: " + line);
        int N = std::stoi(f[0]);
        auto& F = out[N];
        F.N = N;
        F.source = "golden";
        if (f[1] == "term" && f.size() == 5) {
            F.terms.push_back({parse_rational(f[4]), parse_composition(f[2]), std::stoi(f[3])});
        } else if (f[1] == "bar" && f.size() == 4) {
            F.bar_power = std::stoi(f[2]);
            F.bar_coeff = parse_rational(f[3]);
        } else {
            throw Error("malformed formula record: " + line);
        }
    }
    return out;
}

std::vector<GoldenPoly> golden_polys() { return parse_golden_polys(golden_text("r_polynomials")); }
std::vector<GoldenValue> golden_values() { return parse_golden_values(golden_text("r_values")); }
std::vector<GoldenAlpha> golden_alpha() { return parse_golden_alpha(golden_text("alpha_table")); }
std::map<int, RecursiveFormula> golden_formulas() { return parse_golden_formulas(golden_text("formulas")); }

Report verify_tables(TableSummary* summary) {
    Report rep;
    TableSummary sum;
    std::map<Composition, UniPoly> golden_poly;
    for (const auto& g : golden_polys()) {
        UniPoly want(g.coeffs);
        golden_poly[g.index] = want;
        const UniPoly& got = build_r(g.index).poly;
        bool ok = got == want;
        rep.add("polynomial " + comp_key(g.index), ok, ok ? "" : "engine " + got.str() + " vs table " + want.str());
        ++sum.polys;
    }
    for (const auto& v : golden_values()) {
        Rational got = build_r(v.index).poly(v.x);
        std::string name = "value " + v.table + " " + comp_key(v.index) + " at " + pretty(v.x);
        ++sum.values;
        if (got == v.value) {
            rep.add(name, true);
            continue;
        }
        auto it = golden_poly.find(v.index);
        if (it != golden_poly.end() && it->second(v.x) != v.value && it->second(v.x) == got) {
            std::string note = "table prints " + pretty(v.value) + ", polynomial table gives " + pretty(got);
            sum.source_inconsistencies.push_back(name + ": " + note);
            rep.add(name + " (source inconsistency)", true, note);
            continue;
        }
        rep.add(name, false, "engine " + pretty(got) + " vs table " + pretty(v.value));
    }
    if (summary) *summary = sum;
    return rep;
}

Report verify_alpha_table() {
    Report rep;
    for (const auto& a : golden_alpha()) {
        Rational got = alpha(a.j, a.N);
        Rational direct = alpha_direct(a.j, a.N);
        bool ok = got == a.value && direct == a.value;
        rep.add("alpha j=" + std::to_string(a.j) + " N=" + std::to_string(a.N), ok,
                ok ? "" : "engine " + pretty(got) + "/" + pretty(direct) + " vs table " + pretty(a.value));
    }
    return rep;
}

Report verify_golden_formulas(int N_max) {
    Report rep;
    for (const auto& [N, G] : golden_formulas()) {
        if (N > N_max) continue;
        RecursiveFormula F = assemble_formula(N);
        std::string d = formula_diff(F, G);
        bool count_ok = G.terms.size() == (1u << (N - 1)) - 1;
        rep.add("formula Q_" + std::to_string(2 * N), d.empty() && count_ok, d);
    }
    return rep;
}

}  // namespace qcurv
