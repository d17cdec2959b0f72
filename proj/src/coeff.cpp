#include "qcurv/coeff.hpp"

#include "qcurv/rpoly.hpp"

#include <json.hpp>

#include <mutex>
#include <sstream>

namespace qcurv {

CoeffMap coeff_map(const RecursiveFormula& F) {
    CoeffMap m;
    for (const auto& t : F.terms)
        if (t.coeff != 0) m[{t.word, t.q_order}] += t.coeff;
    return m;
}

std::string formula_diff(const RecursiveFormula& F, const RecursiveFormula& G) {
    std::ostringstream os;
    if (F.N != G.N) os << "N " << F.N << " vs " << G.N << "\n";
    CoeffMap a = coeff_map(F), b = coeff_map(G);
    for (const auto& [k, v] : a) {
        auto it = b.find(k);
        Rational w = it == b.end() ? Rational(0) : it->second;
        if (v != w)
            os << "P[" << comp_key(k.first) << "](Q_" << k.second << "): " << pretty(v) << " vs " << pretty(w) << "\n";
    }
    for (const auto& [k, w] : b)
        if (!a.count(k)) os << "P[" << comp_key(k.first) << "](Q_" << k.second << "): 0 vs " << pretty(w) << "\n";
    bool bar_same = F.bar_coeff == G.bar_coeff && (F.bar_coeff == 0 || F.bar_power == G.bar_power);
    if (!bar_same)
        os << "bar: " << pretty(F.bar_coeff) << "^" << F.bar_power << " vs " << pretty(G.bar_coeff) << "^" << G.bar_power
           << "\n";
    return os.str();
}

Rational coeff_a(const Composition& I, int N) {
    int s = comp_size(I);
    if (N < s + 1) throw Error("coefficient undefined below threshold");
    Rational prod(1);
    for (int i = 1; i <= s; ++i) prod *= Rational(N - i) / Rational(2 * N - 2 * i - 1);
    return prod * build_r(I).poly(Rational(N - s));
}

Rational bar_coefficient(int N) {
    if (N < 1) throw Error("bar coefficient needs N >= 1");
    return Rational(sign_pow(N - 1)) * double_factorial(2 * N - 2) / double_factorial(2 * N - 3);
}

RecursiveFormula assemble_formula(int N) {
    if (N < 1) throw Error("formula index must be >= 1");
    RecursiveFormula F;
    F.N = N;
    F.source = "rpoly";
    for (int s = 1; s <= N - 1; ++s)
        for (const auto& I : enumerate_compositions(s)) F.terms.push_back({coeff_a(I, N), I, 2 * N - 2 * s});
    F.bar_coeff = bar_coefficient(N);
    F.bar_power = N - 1;
    return F;
}

Report check_sign_law(const RecursiveFormula& F) {
    Report rep;
    bool ok = true;
    std::string bad, exception;
    for (const auto& t : F.terms) {
        int want = sign_pow(comp_size(t.word) + static_cast<long>(t.word.size()) - 1);
        if (sgn(t.coeff) == want) continue;
        // a_(1) = (N-1)/(2N-3) is positive while the law predicts a negative sign
        if (t.word == Composition{1} && t.coeff > 0)
            exception = "exception I=(1): coefficient " + pretty(t.coeff) + " is positive";
        else
            ok = false, bad += " " + comp_key(t.word);
    }
    std::string detail = ok ? exception : "violations:" + bad + (exception.empty() ? "" : "; " + exception);
    rep.add("sign law N=" + std::to_string(F.N), ok, detail);
    return rep;
}

namespace {

// T[s][k] = sum of r_I over |I| = s with last entry k; rho[s] = sum of script R over |I| = s.
struct RSumTable {
    std::mutex mu;
    std::vector<std::vector<UniPoly>> T{{}};
    std::vector<UniPoly> total{UniPoly()};
    std::vector<Rational> rho{Rational(1)};

    void extend(int smax) {
        Rational half = rat(1, 2);
        for (int s = static_cast<int>(T.size()); s <= smax; ++s) {
            std::vector<UniPoly> row(s + 1);
            row[s] = build_base(s).poly;
            auto pts = half_integer_set(s);
            for (int k = 1; k < s; ++k) {
                std::vector<Rational> xs = pts;
                for (int i = 1; i <= s; ++i)
                    if (i != k) xs.push_back(Rational(-i));
                auto basis = lagrange_basis(xs);
                UniPoly A, B;
                for (size_t i = 0; i < pts.size(); ++i) {
                    Rational L(0);
                    for (int p = 1; p <= s - k; ++p) L += rho[p] * T[s - p][k](pts[i]);
                    A += basis[i];
                    if (L != 0) B -= basis[i] * L;
                }
                Rational target = -total[s - k](Rational(k)) * build_base(k).poly(Rational(0));
                Rational a0 = A(Rational(0));
                if (a0 == 0) throw Error("inconsistent interpolation data");
                // K enters linearly, so the summed K solves the summed condition
                Rational K = (target - B(Rational(0))) / a0;
                row[k] = A * K + B;
            }
            UniPoly tot;
            for (int k = 1; k <= s; ++k) tot += row[k];
            Rational r(0);
            for (int p = 1; p <= s; ++p) {
                const UniPoly& tp = p == s ? tot : total[p];
                r += tp(half) * rho[s - p];
            }
            T.push_back(std::move(row));
            total.push_back(std::move(tot));
            rho.push_back(r);
        }
    }
};

RSumTable& rsum_table() {
    static RSumTable t;
    return t;
}

}  // namespace

UniPoly r_sum(int size) {
    if (size < 1) throw Error("size must be positive");
    auto& t = rsum_table();
    std::lock_guard<std::mutex> lock(t.mu);
    t.extend(size);
    return t.total[size];
}

namespace {

Rational alpha_prefactor(int j, int N) {
    Rational prod(1);
    for (int i = 1; i <= j; ++i) prod *= Rational(N - i) / Rational(2 * N - 2 * i - 1);
    return prod;
}

void check_alpha_range(int j, int N) {
    if (N < 1 || j < 0 || j > N - 1) throw Error("alpha index out of range");
}

}  // namespace

Rational alpha(int j, int N) {
    check_alpha_range(j, N);
    if (j == 0) return Rational(-1);
    return alpha_prefactor(j, N) * r_sum(j)(Rational(N - j));
}

Rational alpha_direct(int j, int N) {
    check_alpha_range(j, N);
    if (j == 0) return Rational(-1);
    Rational sum(0);
    for (const auto& I : enumerate_compositions(j)) sum += coeff_a(I, N);
    return sum;
}

Rational beta(int j, int N) {
    check_alpha_range(j, N);
    return Rational(sign_pow(j - 1)) * binomial(N - 1, j) * double_factorial(2 * j - 1) *
           double_factorial(2 * N - 2 * j - 3) / double_factorial(2 * N - 3);
}

Rational gen_G(int j, int k) {
    return pochhammer(rat(1, 2), j) / factorial(j) * pochhammer(rat(1, 2), k) / factorial(k);
}

Report check_alpha_layer(int N_max) {
    Report rep;
    for (int N = 2; N <= N_max; ++N) {
        std::string id = " N=" + std::to_string(N);
        bool ab = true, sym = true;
        std::string bad;
        Rational alt(0);
        for (int j = 0; j <= N - 1; ++j) {
            Rational a = alpha(j, N);
            if (a != beta(j, N)) ab = false, bad += " j=" + std::to_string(j) + ":" + pretty(a);
            if (a != Rational(sign_pow(N - 1)) * alpha(N - 1 - j, N)) sym = false;
            alt += Rational(sign_pow(j - 1)) * a;
        }
        rep.add("alpha=beta" + id, ab, bad);
        rep.add("symmetry" + id, sym);
        Rational want = double_factorial(2 * N - 2) / double_factorial(2 * N - 3);
        rep.add("alternating sum" + id, alt == want, alt == want ? "" : pretty(alt) + " vs " + pretty(want));
    }
    return rep;
}

Report check_gen_f(int max_total_degree) {
    Report rep;
    for (int t = 0; t <= max_total_degree; ++t) {
        int N = t + 1;
        bool ok = true;
        std::string bad;
        for (int j = 0; j <= t; ++j) {
            Rational rhs = alpha(j, N) * double_factorial(2 * N - 3) / double_factorial(2 * N - 2) *
                           Rational(sign_pow(j - 1));
            if (gen_G(j, t - j) != rhs) ok = false, bad += " j=" + std::to_string(j);
        }
        rep.add("generating function degree=" + std::to_string(t), ok, bad);
    }
    return rep;
}

Rational q_series_coeff(const Composition& I, int e) {
    int N = comp_size(I) + e + 1;
    return double_factorial(2 * N - 3) / double_factorial(2 * N - 2) * coeff_a(I, N);
}

std::vector<Rational> q_series(const std::vector<Composition>& x_orders, int y_order) {
    std::vector<Rational> out;
    for (const auto& I : x_orders) out.push_back(q_series_coeff(I, y_order));
    return out;
}

Report check_q_series(int max_total_degree) {
    Report rep;
    for (int t = 1; t <= max_total_degree; ++t) {
        bool diag = true, closed = true;
        std::string bad;
        for (int j = 0; j <= t; ++j) {
            int e = t - j;
            int N = j + e + 1;
            Rational sum(0);
            if (j == 0) {
                sum = -double_factorial(2 * N - 3) / double_factorial(2 * N - 2);
            } else {
                for (const auto& I : enumerate_compositions(j)) {
                    Rational c = q_series_coeff(I, e);
                    sum += c;
                    Rational alt = power(Rational(2), -j) * pochhammer(rat(1, 2), e) * build_r(I).poly(Rational(e + 1)) /
                                   factorial(e);
                    if (c != alt) closed = false, bad += " " + comp_key(I) + "/" + std::to_string(e);
                }
            }
            Rational want = -Rational(sign_pow(j)) * gen_G(j, e);
            if (sum != want) diag = false, bad += " diag j=" + std::to_string(j);
        }
        rep.add("Q(diag) degree=" + std::to_string(t), diag, diag ? "" : bad);
        rep.add("Q coefficient via r_I degree=" + std::to_string(t), closed, closed ? "" : bad);
    }
    return rep;
}

Report closed_form_check(int N_max) {
    Report rep;
    for (int N = 2; N <= N_max; ++N) {
        Rational a1 = coeff_a({1}, N), w1 = Rational(N - 1) / Rational(2 * N - 3);
        Rational al = coeff_a({N - 1}, N);
        Rational wl = Rational(sign_pow(N - 1) * (N - 1) * (2 * N - 5)) / Rational(2 * N - 3);
        std::string id = " N=" + std::to_string(N);
        rep.add("a_(1)" + id, a1 == w1, a1 == w1 ? "" : pretty(a1) + " vs " + pretty(w1));
        rep.add("a_(N-1)" + id, al == wl, al == wl ? "" : pretty(al) + " vs " + pretty(wl));
    }
    return rep;
}

std::string formula_json(const RecursiveFormula& F) {
    nlohmann::ordered_json j;
    j["N"] = F.N;
    j["source"] = F.source;
    j["terms"] = nlohmann::ordered_json::array();
    for (const auto& t : F.terms) {
        nlohmann::ordered_json term;
        term["coeff"] = to_string(t.coeff);
        term["word"] = t.word;
        term["q_order"] = t.q_order;
        j["terms"].push_back(term);
    }
    j["bar"] = {{"coeff", to_string(F.bar_coeff)}, {"power", F.bar_power}};
    return j.dump(2);
}

RecursiveFormula formula_from_json(const std::string& text) {
    RecursiveFormula F;
    try {
        auto j = nlohmann::json::parse(text);
        F.N = j.at("N").get<int>();
        F.source = j.at("source").get<std::string>();
        for (const auto& t : j.at("terms"))
            F.terms.push_back({parse_rational(t.at("coeff").get<std::string>()), t.at("word").get<Composition>(),
                               t.at("q_order").get<int>()});
        F.bar_coeff = parse_rational(j.at("bar").at("coeff").get<std::string>());
        F.bar_power = j.at("bar").at("power").get<int>();
    } catch (const nlohmann::json::exception& e) {
        throw Error(std::string("formula JSON: ") + e.what());
    }
    return F;
}

namespace {

std::string sub(int v) { return v < 10 ? std::to_string(v) : "{" + std::to_string(v) + "}"; }

std::string latex_word(const Composition& w) {
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += " ";
        out += "P_" + sub(2 * w[i]);
        if (j - i > 1) out += "^" + sub(static_cast<int>(j - i));
        i = j;
    }
    return out;
}

std::string text_word(const Composition& w) {
    std::string out;
    for (size_t i = 0; i < w.size();) {
        size_t j = i;
        while (j < w.size() && w[j] == w[i]) ++j;
        if (!out.empty()) out += " ";
        out += "P_" + std::to_string(2 * w[i]);
        if (j - i > 1) out += "^" + std::to_string(j - i);
        i = j;
    }
    return out;
}

template <class CoeffFn>
std::string signed_coeff(const Rational& c, bool first, CoeffFn fmt) {
    std::string out;
    if (first)
        out = c < 0 ? "-" : "";
    else
        out = c < 0 ? " - " : " + ";
    Rational a = abs(c);
    if (a != 1) out += fmt(a) + " ";
    return out;
}

}  // namespace

std::string formula_latex(const RecursiveFormula& F) {
    std::string out = "Q_" + sub(2 * F.N) + " = ";
    bool first = true;
    for (const auto& t : F.terms) {
        if (t.coeff == 0) continue;
        out += signed_coeff(t.coeff, first, [](const Rational& a) { return latex(a); });
        out += latex_word(t.word) + " (Q_" + sub(t.q_order) + ")";
        first = false;
    }
    if (F.bar_coeff != 0) {
        out += signed_coeff(F.bar_coeff, first, [](const Rational& a) { return latex(a); });
        out += "i^* \\bar{P}_2";
        if (F.bar_power != 1) out += "^" + sub(F.bar_power);
        out += " (\\bar{Q}_2)";
    }
    return out;
}

std::string formula_text(const RecursiveFormula& F) {
    std::string out = "Q_" + std::to_string(2 * F.N) + " = ";
    bool first = true;
    for (const auto& t : F.terms) {
        if (t.coeff == 0) continue;
        out += signed_coeff(t.coeff, first, [](const Rational& a) { return pretty(a); });
        out += text_word(t.word) + "(Q_" + std::to_string(t.q_order) + ")";
        first = false;
    }
    if (F.bar_coeff != 0) {
        out += signed_coeff(F.bar_coeff, first, [](const Rational& a) { return pretty(a); });
        out += "i* Pbar_2";
        if (F.bar_power != 1) out += "^" + std::to_string(F.bar_power);
        out += "(Qbar_2)";
    }
    return out;
}

}  // namespace qcurv
