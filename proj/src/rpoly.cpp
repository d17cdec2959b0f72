#include "qcurv/rpoly.hpp"

namespace qcurv {

std::vector<Rational> half_integer_set(int k) {
    std::vector<Rational> pts;
    for (int i = 0; i <= k; ++i) pts.push_back(rat(1, 2) - i);
    return pts;
}

Rational base_value(int k) {
    return power(Rational(-2), -(k - 1)) * pochhammer(rat(1, 2), k - 1) / factorial(k - 1);
}

Rational sigma_scalar(int k, int j) {
    return power(Rational(-2), -(j - 1)) * pochhammer(rat(1, 2), k - 1) * pochhammer(rat(1, 2) + j, j - k) /
           (factorial(k - 1) * factorial(j - k));
}

namespace {

// Abscissas: S(size) first, then the forced zeros -i (i = 1..size, i != skip).
std::vector<Rational> node_set(int size, int skip) {
    std::vector<Rational> xs = half_integer_set(size);
    for (int i = 1; i <= size; ++i)
        if (i != skip) xs.push_back(Rational(-i));
    return xs;
}

Rational script_R_recursive(const Composition& I, const Rational& own_half, RStore& store) {
    // first block runs over every nonempty prefix; the whole of I contributes r_I(1/2)
    Rational total = own_half;
    for (size_t k = 1; k < I.size(); ++k) {
        Composition head(I.begin(), I.begin() + k);
        total += store.get(head).value_at_half * store.script_R(Composition(I.begin() + k, I.end()));
    }
    return total;
}

}  // namespace

RPolynomial build_base(int k) {
    if (k < 1) throw Error("base polynomial needs k >= 1");
    // k is never a zero of r_(k), so skipping it leaves exactly -1..-(k-1)
    std::vector<Rational> xs = node_set(k, k);
    Rational c = base_value(k);
    std::vector<Node> nodes;
    for (size_t i = 0; i < xs.size(); ++i) nodes.push_back({xs[i], i <= static_cast<size_t>(k) ? c : Rational(0)});
    UniPoly p = lagrange_interpolate(nodes);
    Rational ct = Rational(sign_pow(k - 1)) * double_factorial(2 * k - 3) / factorial(k);
    if (p(Rational(0)) != ct) throw Error("inconsistent interpolation data");
    if (k >= 2 && p.degree() != 2 * k - 1) throw Error("inconsistent interpolation data");
    RPolynomial out;
    out.index = {k};
    out.poly = std::move(p);
    out.value_at_half = c;
    out.script_R = c;
    return out;
}

const std::vector<UniPoly>& RStore::basis(int size, int last) {
    std::lock_guard<std::mutex> lock(mu_);
    auto key = std::make_pair(size, last);
    auto it = basis_.find(key);
    if (it == basis_.end()) it = basis_.emplace(key, lagrange_basis(node_set(size, last))).first;
    return it->second;
}

RPolynomial RStore::build(const Composition& I) {
    if (!comp_valid(I)) throw Error("invalid composition");
    if (I.size() == 1) return build_base(I[0]);
    int size = comp_size(I);
    int last = I.back();
    auto pts = half_integer_set(size);

    // values of the lower-order part L on S(size)
    std::vector<Rational> lvals(pts.size());
    for (const auto& [pre, suf] : prefix_splits(I)) {
        Rational w = script_R(pre);
        const UniPoly& rs = r(suf);
        for (size_t i = 0; i < pts.size(); ++i) lvals[i] += w * rs(pts[i]);
    }

    const auto& B = basis(size, last);
    UniPoly A, Bpart;
    for (size_t i = 0; i < pts.size(); ++i) {
        A += B[i];
        if (lvals[i] != 0) Bpart -= B[i] * lvals[i];
    }
    auto ls = split_last(I);
    Rational target = -r(*ls.head)(Rational(ls.last)) * r({ls.last})(Rational(0));
    Rational a0 = A(Rational(0));
    if (a0 == 0) throw Error("inconsistent interpolation data");
    Rational K = (target - Bpart(Rational(0))) / a0;
    UniPoly p = A * K + Bpart;
    if (p.degree() != 2 * size - 1) throw Error("inconsistent interpolation data");

    RPolynomial out;
    out.index = I;
    out.value_at_half = p(rat(1, 2));
    out.poly = std::move(p);
    return out;
}

const RPolynomial& RStore::get(const Composition& I) {
    std::string key = comp_key(I);
    {
        std::lock_guard<std::mutex> lock(mu_);
        auto it = memo_.find(key);
        if (it != memo_.end()) return *it->second;
    }
    auto built = std::make_unique<RPolynomial>(build(I));
    if (I.size() > 1) built->script_R = script_R_recursive(I, built->value_at_half, *this);
    std::lock_guard<std::mutex> lock(mu_);
    return *memo_.emplace(key, std::move(built)).first->second;
}

void RStore::build_all(int max_size) {
    for (int s = 1; s <= max_size; ++s)
        for (const auto& c : enumerate_compositions(s)) get(c);
}

size_t RStore::size() const {
    std::lock_guard<std::mutex> lock(mu_);
    return memo_.size();
}

RStore& default_store() {
    static RStore store;
    return store;
}

const RPolynomial& build_r(const Composition& I) { return default_store().get(I); }

Rational script_R(const Composition& I) { return default_store().script_R(I); }

Rational script_R_bruteforce(const Composition& I, RStore& store) {
    Rational total(0);
    for (const auto& sub : subdivisions(I)) {
        Rational prod(1);
        for (const auto& block : sub) prod *= store.get(block).poly(rat(1, 2));
        total += prod;
    }
    return total;
}

UniPoly s_poly(const Composition& I) {
    const auto& e = build_r(I);
    return e.poly - UniPoly::constant(e.value_at_half);
}

UniPoly curly_C(const Composition& I) {
    UniPoly out = build_r(I).poly;
    for (const auto& [pre, suf] : prefix_splits(I)) out += build_r(suf).poly * script_R(pre);
    return out;
}

UniPoly sigma(int k, int j) {
    if (k < 1 || k > j) throw Error("sigma index out of range");
    if (k == j) return build_r({j}).poly;
    UniPoly out;
    for (const auto& J : enumerate_compositions(j - k)) out += build_r(concat({k}, J)).poly;
    return out;
}

UniPoly standard_interp(int M, int N) {
    if (N < 1 || M < 0 || M > N - 1) throw Error("standard interpolation index out of range");
    std::vector<Node> nodes;
    for (const auto& p : half_integer_set(N)) nodes.push_back({p, Rational(1)});
    for (int i = 1; i <= N - 1; ++i) nodes.push_back({Rational(-M - i), Rational(0)});
    return lagrange_interpolate(nodes);
}

namespace {

std::string tag(const std::string& what, int j) { return what + " size=" + std::to_string(j); }

}  // namespace

Report check_construction(int max_size) {
    Report rep;
    RStore& st = default_store();
    st.build_all(max_size);
    for (int s = 1; s <= max_size; ++s) {
        bool deg = true, zeros = true, cconst = true, mult2 = true, rsum = true;
        std::string bad;
        for (const auto& I : enumerate_compositions(s)) {
            const auto& e = st.get(I);
            int want = s == 1 ? 0 : 2 * s - 1;
            if (e.poly.degree() != want) deg = false, bad += " deg:" + comp_key(I);
            for (int i = 1; i <= s; ++i)
                if (i != I.back() && e.poly(Rational(-i)) != 0) zeros = false, bad += " zero:" + comp_key(I);
            UniPoly C = curly_C(I);
            auto pts = half_integer_set(s);
            for (const auto& p : pts)
                if (C(p) != C(pts[0])) cconst = false, bad += " C:" + comp_key(I);
            auto ls = split_last(I);
            if (ls.head) {
                Rational lhs = e.poly(Rational(0)) + st.r(*ls.head)(Rational(ls.last)) * st.r({ls.last})(Rational(0));
                if (lhs != 0) mult2 = false, bad += " mult2:" + comp_key(I);
            }
            if (script_R_bruteforce(I, st) != e.script_R) rsum = false, bad += " R:" + comp_key(I);
        }
        rep.add(tag("degree", s), deg, deg ? "" : bad);
        rep.add(tag("forced zeros", s), zeros, zeros ? "" : bad);
        rep.add(tag("C constant on S", s), cconst, cconst ? "" : bad);
        rep.add(tag("constant-term relation", s), mult2, mult2 ? "" : bad);
        rep.add(tag("subdivision sum", s), rsum, rsum ? "" : bad);
    }
    return rep;
}

Report check_conjectural_identities(int max_size) {
    Report rep;
    RStore& st = default_store();
    st.build_all(max_size);
    Rational half = rat(1, 2);

    for (int j = 1; j <= max_size; ++j) {
        UniPoly sum;
        for (const auto& I : enumerate_compositions(j)) sum += st.r(I);
        Rational want = Rational(sign_pow(j - 1)) * double_factorial(2 * j - 1) / factorial(j);
        bool ok = sum == UniPoly::constant(want);
        rep.add(tag("sum of r over size", j), ok, ok ? "" : "sum = " + sum.str() + ", expected " + pretty(want));
    }

    for (int j = 1; j <= max_size; ++j) {
        for (int k = 1; k <= j; ++k) {
            UniPoly sg = sigma(k, j);
            Rational c = sigma_scalar(k, j);
            std::string id = " (k,j)=(" + std::to_string(k) + "," + std::to_string(j) + ")";
            bool ai = sg == standard_interp(j - k, j) * c;
            rep.add("average is interpolation" + id, ai, ai ? "" : "sigma = " + sg.str());
            bool zeros = true;
            for (int i = 1; i <= j - 1; ++i)
                if (sg(Rational(-(j - k) - i)) != 0) zeros = false;
            rep.add("average zeros" + id, zeros);
            bool val = sg(half) == c;
            rep.add("average at 1/2" + id, val, val ? "" : "got " + pretty(sg(half)) + ", expected " + pretty(c));
        }
    }

    for (int s = 2; s <= max_size; ++s) {
        bool m4 = true, m1 = true, m2 = true, sc = true;
        std::string bad;
        for (const auto& I : enumerate_compositions(s)) {
            if (I.size() < 2) continue;
            auto ls = split_last(I);
            const Composition& J = *ls.head;
            int k = ls.last;
            if (k >= 2) {
                Rational x0 = -half - k;
                Rational lhs = st.r(I)(x0) - st.get(I).value_at_half;
                Rational rhs = -st.get(J).value_at_half * (st.r({k})(x0) - st.get({k}).value_at_half);
                if (lhs != rhs) m4 = false, bad += " shifted product:" + comp_key(I);
            }
            Rational c2 = st.r(I)(Rational(0)) + st.r(J)(Rational(k)) * st.r({k})(Rational(0));
            if (c2 != 0) m2 = false, bad += " value at 0:" + comp_key(I);
            if (I.size() >= 3) {
                int jj = I.back();
                int kk = I[I.size() - 2];
                Composition JJ(I.begin(), I.end() - 2);
                Rational lhs = st.r(I)(Rational(-jj));
                Rational rhs = -st.r(JJ)(Rational(kk)) * st.r({kk, jj})(Rational(-jj));
                if (lhs != rhs) m1 = false, bad += " product at -j:" + comp_key(I);
            }
            UniPoly S = s_poly(I);
            for (const auto& [pre, suf] : prefix_splits(I)) S += s_poly(suf) * st.script_R(pre);
            for (const auto& p : half_integer_set(s))
                if (S(p) != 0) sc = false, bad += " s constant:" + comp_key(I);
        }
        rep.add(tag("shifted product", s), m4, m4 ? "" : bad);
        rep.add(tag("product at -j", s), m1, m1 ? "" : bad);
        rep.add(tag("value at 0", s), m2, m2 ? "" : bad);
        rep.add(tag("s constant", s), sc, sc ? "" : bad);
    }
    return rep;
}

}  // namespace qcurv
