#include "qcurv/sphere.hpp"

#include <map>
#include <mutex>

namespace qcurv {

MPoly mpoly(std::vector<Rational> coeffs) { return UniPoly(std::move(coeffs), "m"); }

MPoly sphere_q(int N) {
    if (N < 1) throw Error("sphere Q needs N >= 1");
    MPoly out = mpoly({0, 1});
    for (int j = 1; j <= N - 1; ++j) out = out * mpoly({Rational(-j * j), 0, 1});
    return out;
}

MPoly gjms_on_constant(int j) {
    if (j < 1) throw Error("GJMS order must be >= 1");
    MPoly out = mpoly({Rational(sign_pow(j))});
    for (int t = 0; t < j; ++t) out = out * mpoly({Rational(t), 1}) * mpoly({Rational(-1 - t), 1});
    return out;
}

namespace {

UniPoly rpoly(std::vector<Rational> c) { return UniPoly(std::move(c), "r"); }

void trim(std::vector<UniPoly>& v) {
    while (!v.empty() && v.back().is_zero()) v.pop_back();
}

// Exact division by (1 - c r^2); returns false if not divisible.
bool divide_D(const UniPoly& p, const Rational& c, UniPoly& q) {
    if (p.is_zero()) {
        q = rpoly({});
        return true;
    }
    if (c == 0) {
        q = p;
        return true;
    }
    // p = (1 - c r^2) q, solve from the top: q_{k-2} = -p_k / c after peeling
    std::vector<Rational> rem = p.coeffs();
    int d = static_cast<int>(rem.size()) - 1;
    if (d < 2) return false;
    std::vector<Rational> qc(d - 1);
    for (int k = d; k >= 2; --k) {
        Rational t = -rem[k] / c;
        qc[k - 2] = t;
        rem[k] = 0;
        rem[k - 2] -= t;
    }
    if (rem[0] != 0 || rem[1] != 0) return false;
    q = rpoly(std::move(qc));
    return true;
}

}  // namespace

RadialFunction::RadialFunction(std::vector<UniPoly> by_m_power, int K, Rational c)
    : num_(std::move(by_m_power)), K_(K), c_(std::move(c)) {
    for (auto& p : num_) p.set_var("r");
    trim(num_);
}

RadialFunction RadialFunction::q_bar(const Rational& lambda) {
    return RadialFunction({rpoly({}), rpoly({lambda})}, 1, lambda / 4);
}

RadialFunction RadialFunction::canonical() const {
    std::vector<UniPoly> cur = num_;
    int K = K_;
    while (K > 0 && !cur.empty()) {
        std::vector<UniPoly> next(cur.size());
        bool ok = true;
        for (size_t i = 0; i < cur.size() && ok; ++i) ok = divide_D(cur[i], c_, next[i]);
        if (!ok) break;
        cur = std::move(next);
        --K;
    }
    if (cur.empty()) K = 0;
    return RadialFunction(std::move(cur), K, c_);
}

RadialFunction RadialFunction::expanded_once() const {
    UniPoly D = rpoly({1, 0, -c_});
    std::vector<UniPoly> next;
    for (const auto& p : num_) next.push_back(p * D);
    return RadialFunction(std::move(next), K_ + 1, c_);
}

MPoly RadialFunction::at_zero() const {
    std::vector<Rational> c;
    for (const auto& p : num_) c.push_back(p(Rational(0)));
    return mpoly(std::move(c));
}

bool RadialFunction::operator==(const RadialFunction& o) const {
    RadialFunction a = canonical(), b = o.canonical();
    return a.num_ == b.num_ && a.K_ == b.K_ && a.c_ == b.c_;
}

RadialFunction bar_apply(const RadialFunction& f, const Rational& lambda) {
    const Rational& c = f.c_;
    UniPoly D = rpoly({1, 0, -c});
    UniPoly r = rpoly({0, 1});
    int K = f.K_;
    // f = u / D^K, f' = v / D^{K+1} with v = u' D + 2 K c r u
    size_t M = f.num_.size();
    std::vector<UniPoly> v(M);
    for (size_t i = 0; i < M; ++i) v[i] = f.num_[i].derivative() * D + r * f.num_[i] * Rational(2 * K * c);
    // result numerator over D^{K+2}:
    // v' D + 2 (K+1) c r v - m lambda r v - lambda m (m - 1/2) u D
    std::vector<UniPoly> out(M + 2, rpoly({}));
    for (size_t i = 0; i < M; ++i) {
        out[i] += v[i].derivative() * D + r * v[i] * Rational(2 * (K + 1) * c);
        out[i + 1] -= r * v[i] * lambda;
        UniPoly uD = f.num_[i] * D;
        out[i + 2] -= uD * lambda;
        out[i + 1] += uD * (lambda / 2);
    }
    return RadialFunction(std::move(out), K + 2, c).canonical();
}

MPoly bar_value(int k, const Rational& lambda) {
    static std::mutex mu;
    static std::map<std::string, std::vector<RadialFunction>> cache;
    std::lock_guard<std::mutex> lock(mu);
    auto& seq = cache[to_string(lambda)];
    if (seq.empty()) seq.push_back(RadialFunction::q_bar(lambda));
    while (static_cast<int>(seq.size()) <= k) seq.push_back(bar_apply(seq.back(), lambda));
    return seq[k].at_zero();
}

MPoly formula_on_einstein(const RecursiveFormula& F, const Rational& lambda) {
    if (lambda == 0) throw Error("degenerate scale");
    MPoly total = mpoly({});
    for (const auto& t : F.terms) {
        if (t.coeff == 0) continue;
        MPoly term = sphere_q(t.q_order / 2) * power(lambda, t.q_order / 2);
        for (int j : t.word) term = term * gjms_on_constant(j) * power(lambda, j);
        total += term * t.coeff;
    }
    total += bar_value(F.bar_power, lambda) * F.bar_coeff;
    return total;
}

Report verify_formula_on_sphere(const RecursiveFormula& F) {
    Report rep;
    MPoly diff = formula_on_einstein(F, Rational(1)) - sphere_q(F.N);
    rep.add("sphere N=" + std::to_string(F.N), diff.is_zero(), diff.is_zero() ? "" : "difference " + diff.str());
    return rep;
}

Report einstein_scaling_check(const RecursiveFormula& F, const std::vector<Rational>& lambdas) {
    Report rep;
    for (const auto& lam : lambdas) {
        if (lam == 0) throw Error("degenerate scale");
        MPoly diff = formula_on_einstein(F, lam) - sphere_q(F.N) * power(lam, F.N);
        rep.add("einstein N=" + std::to_string(F.N) + " lambda=" + pretty(lam), diff.is_zero(),
                diff.is_zero() ? "" : "difference " + diff.str());
    }
    return rep;
}

}  // namespace qcurv
