#include "qcurv/residue.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <sstream>

namespace qcurv {

namespace {

std::mutex family_mu;
std::map<std::pair<int, std::string>, std::unique_ptr<ResidueFamily>> family_memo;

std::mutex formula_mu;
std::map<int, RecursiveFormula> critical_memo;

std::vector<Rational> node_abscissas(int N, const Rational& n) {
    std::vector<Rational> xs;
    for (int j = 1; j <= N; ++j) xs.push_back(-n / 2 + 2 * N - j);
    xs.push_back(-(n - 1) / 2);
    return xs;
}

ResidueFamily build_family(int N, const Rational& n) {
    ResidueFamily f;
    f.N = N;
    f.n = n;
    if (N == 0) {
        f.expanded = OpExpr::word(restriction_word(), Rational(1), n);
        return f;
    }
    auto xs = node_abscissas(N, n);
    for (int j = 1; j <= N; ++j) {
        OpExpr lower = residue_family(N - j, n).expanded.at(xs[j - 1]);
        f.nodes.emplace_back(xs[j - 1], compose(OpExpr::word(boundary_word({j}), Rational(1), n), lower));
    }
    OpExpr lower = residue_family(N - 1, n).expanded.at(-(n + 3) / 2);
    f.nodes.emplace_back(xs[N], compose(lower, OpExpr::word(bulk_word(1), Rational(1), n)));

    std::vector<UniPoly> basis;
    try {
        basis = lagrange_basis(xs, "λ");
    } catch (const Error&) {
        throw Error("dimension too small for interpolation");
    }
    OpExpr e(n);
    for (size_t i = 0; i < basis.size(); ++i) e += basis[i] * f.nodes[i].second;
    f.expanded = std::move(e);
    return f;
}

Rational qres_sign(int N) { return Rational(-sign_pow(N)); }

RecursiveFormula value_to_formula(const ValueExpr& v, int N, const std::string& source) {
    RecursiveFormula F;
    F.N = N;
    F.source = source;
    F.bar_power = N - 1;
    std::map<std::pair<Composition, int>, Rational> found;
    for (const auto& [k, c] : v.terms()) {
        if (k.target.kind == TargetKind::Bar && k.word.empty() && k.target.index == N - 1) {
            F.bar_coeff = c;
        } else if (N == 1 && k.target.kind == TargetKind::Q && k.word.empty() && k.target.index == 2) {
            F.bar_coeff = c;
        } else if (k.target.kind == TargetKind::Q && !k.word.empty() &&
                   k.target.index == 2 * N - 2 * comp_size(k.word)) {
            found[{k.word, k.target.index}] = c;
        } else {
            throw Error("unexpected term in residue formula: " + v.str());
        }
    }
    for (int s = 1; s <= N - 1; ++s)
        for (const auto& I : enumerate_compositions(s)) {
            auto it = found.find({I, 2 * N - 2 * s});
            F.terms.push_back({it == found.end() ? Rational(0) : it->second, I, 2 * N - 2 * s});
        }
    return F;
}

std::map<int, RecursiveFormula> lower_critical(int N) {
    std::map<int, RecursiveFormula> known;
    for (int k = 2; k < N; ++k) known.emplace(k, critical_formula(k));
    return known;
}

}  // namespace

const ResidueFamily& residue_family(int N, const Rational& n) {
    if (N < 0) throw Error("residue family order must be >= 0");
    auto key = std::make_pair(N, to_string(n));
    {
        std::lock_guard<std::mutex> lock(family_mu);
        auto it = family_memo.find(key);
        if (it != family_memo.end()) return *it->second;
    }
    auto built = std::make_unique<ResidueFamily>(build_family(N, n));
    std::lock_guard<std::mutex> lock(family_mu);
    return *family_memo.emplace(key, std::move(built)).first->second;
}

std::vector<ValueExpr> qres_polynomial(int N, const Rational& n) {
    const auto& fam = residue_family(N, n);
    std::vector<ValueExpr> out;
    int deg = fam.expanded.degree();
    for (int p = 0; p <= deg; ++p) {
        OpExpr part(n);
        for (const auto& [w, c] : fam.expanded.terms()) part.add(w, UniPoly::constant(c.coeff(p), "λ"));
        out.push_back(apply_to_one(part, n) * qres_sign(N));
    }
    return out;
}

RecursiveFormula critical_formula(int N) {
    if (N < 2) throw Error("critical formula needs N >= 2");
    {
        std::lock_guard<std::mutex> lock(formula_mu);
        auto it = critical_memo.find(N);
        if (it != critical_memo.end()) return it->second;
    }
    Rational n(2 * N);
    const auto& fam = residue_family(N, n);
    ValueExpr at0 = apply_to_one(fam.expanded.at(Rational(0)), n);
    if (!at0.terms().empty()) throw Error("critical family does not vanish at 0 on constants: " + at0.str());
    ValueExpr q = apply_to_one(fam.expanded.derivative().at(Rational(0)), n) * qres_sign(N);
    ValueExpr sub = substitute_universal(q, lower_critical(N), N - 1);
    RecursiveFormula F = value_to_formula(sub, N, "residue");
    std::lock_guard<std::mutex> lock(formula_mu);
    critical_memo.emplace(N, F);
    return F;
}

UniversalityProbe universality_probe(int N, const Rational& n) {
    if (N < 2) throw Error("universality probe needs N >= 2");
    if (n.get_den() != 1 || n.get_num() % 2 != 0 || n < 4 * N)
        throw Error("universality probe needs even n >= 4N");
    const auto& fam = residue_family(N, n);
    auto known = lower_critical(N);
    Rational sg = qres_sign(N);

    ValueExpr v0 = substitute_universal(apply_to_one(fam.expanded.at(Rational(0)), n) * sg, known, N - 1);
    ValueKey top = q_key({}, 2 * N);
    Rational c = v0.coeff(top);
    if (c == 0) throw Error("degenerate normalization");
    ValueExpr rest = v0;
    rest.add(top, -c);
    UniversalityProbe probe;
    probe.formula = value_to_formula(rest * (Rational(-1) / c), N, "residue");
    probe.normalization = c;

    // derivative at -n/2+N: full node set versus the P_{2j} D_{2N-2j} nodes plus the vanishing at 0
    Rational lamN = -n / 2 + N;
    ValueExpr full = apply_to_one(fam.expanded.derivative().at(lamN), n) * sg;
    std::vector<Rational> xs;
    for (int j = 1; j <= N; ++j) xs.push_back(fam.nodes[j - 1].first);
    xs.push_back(Rational(0));
    auto basis = lagrange_basis(xs, "λ");
    ValueExpr alt(n);
    for (int j = 1; j <= N; ++j)
        alt += apply_to_one(fam.nodes[j - 1].second, n) * (sg * basis[j - 1].derivative()(lamN));
    probe.derivative_residual = substitute_universal(alt - full, known, N - 1);
    return probe;
}

RecursiveFormula universality_residual(int N, const Rational& n) { return universality_probe(N, n).formula; }

Report cross_check(int N_max) {
    Report rep;
    for (int N = 2; N <= N_max; ++N) {
        std::string d = formula_diff(critical_formula(N), assemble_formula(N));
        rep.add("residue vs rpoly N=" + std::to_string(N), d.empty(), d);
    }
    return rep;
}

Report check_family_nodes(int N, const Rational& n) {
    Report rep;
    const auto& fam = residue_family(N, n);
    bool ok = fam.expanded.degree() <= N;
    for (const auto& [x, val] : fam.nodes)
        if (!(fam.expanded.at(x) == val)) ok = false;
    rep.add("family nodes N=" + std::to_string(N) + " n=" + pretty(n), ok);
    return rep;
}

std::string derivation_trace(int N, const Rational& n) {
    std::ostringstream os;
    const auto& fam = residue_family(N, n);
    os << "residue family N=" << N << " n=" << pretty(n) << "\n";
    std::vector<Rational> xs;
    for (const auto& [x, val] : fam.nodes) xs.push_back(x);
    auto basis = lagrange_basis(xs, "λ");
    for (size_t i = 0; i < fam.nodes.size(); ++i) {
        os << "node λ=" << pretty(fam.nodes[i].first) << ": " << fam.nodes[i].second.str() << "\n";
        os << "  weight " << basis[i].str() << "\n";
    }
    os << "expanded: " << fam.expanded.str() << "\n";
    auto qp = qres_polynomial(N, n);
    for (size_t p = 0; p < qp.size(); ++p) os << "Q^res λ^" << p << ": " << qp[p].str() << "\n";
    return os.str();
}

}  // namespace qcurv
