#include "qcurv/exact.hpp"

#include <algorithm>
#include <sstream>

namespace qcurv {

Rational parse_rational(const std::string& text) {
    std::string s;
    for (char ch : text)
        if (ch != ' ' && ch != '\t') s += ch;
    if (s.empty()) throw Error("empty rational");
    if (s[0] == '+') s.erase(0, 1);
    auto slash = s.find('/');
    auto digits_ok = [](const std::string& t, bool allow_sign) {
        size_t i = 0;
        if (allow_sign && !t.empty() && t[0] == '-') i = 1;
        if (i >= t.size()) return false;
        return std::all_of(t.begin() + i, t.end(), [](char ch) { return ch >= '0' && ch <= '9'; });
    };
    if (slash == std::string::npos) {
        if (!digits_ok(s, true)) throw Error("malformed rational: " + text);
        return Rational(mpz_class(s));
    }
    std::string num = s.substr(0, slash), den = s.substr(slash + 1);
    if (!digits_ok(num, true) || !digits_ok(den, false)) throw Error("malformed rational: " + text);
    mpz_class d(den);
    if (d == 0) throw Error("zero denominator: " + text);
    Rational q(mpz_class(num), d);
    q.canonicalize();
    return q;
}

std::string to_string(const Rational& q) {
    return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string pretty(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    return to_string(q);
}

std::string latex(const Rational& q) {
    if (q.get_den() == 1) return q.get_num().get_str();
    std::string sign = q < 0 ? "-" : "";
    mpz_class n = abs(q.get_num());
    return sign + "\\frac{" + n.get_str() + "}{" + q.get_den().get_str() + "}";
}

Rational rat(long p, long q) {
    Rational r(p, q);
    r.canonicalize();
    return r;
}

Rational power(const Rational& base, long e) {
    if (e < 0) {
        if (base == 0) throw Error("zero to a negative power");
        return power(Rational(1) / base, -e);
    }
    Rational out(1), b = base;
    while (e > 0) {
        if (e & 1) out *= b;
        b *= b;
        e >>= 1;
    }
    return out;
}

Rational double_factorial(long k) {
    if (k < -1) throw Error("double factorial of " + std::to_string(k));
    mpz_class out(1);
    for (long i = k; i > 1; i -= 2) out *= i;
    return Rational(out);
}

Rational pochhammer(const Rational& a, long n) {
    if (n < 0) throw Error("negative pochhammer length");
    Rational out(1);
    for (long i = 0; i < n; ++i) out *= a + i;
    return out;
}

Rational factorial(long k) {
    if (k < 0) throw Error("factorial of negative integer");
    mpz_class out;
    mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(k));
    return Rational(out);
}

Rational binomial(long n, long k) {
    if (k < 0 || n < 0 || k > n) return Rational(0);
    mpz_class out;
    mpz_bin_uiui(out.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
    return Rational(out);
}

UniPoly::UniPoly(std::vector<Rational> coeffs, std::string var) : c_(std::move(coeffs)), var_(std::move(var)) {
    trim();
}

UniPoly UniPoly::constant(const Rational& c, std::string var) { return UniPoly({c}, std::move(var)); }

UniPoly UniPoly::monomial(const Rational& c, int deg, std::string var) {
    std::vector<Rational> v(deg + 1);
    v[deg] = c;
    return UniPoly(std::move(v), std::move(var));
}

UniPoly UniPoly::linear_root(const Rational& a, std::string var) {
    return UniPoly({-a, Rational(1)}, std::move(var));
}

void UniPoly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Rational UniPoly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return Rational(0);
    return c_[k];
}

Rational UniPoly::operator()(const Rational& x0) const {
    Rational acc(0);
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
        acc *= x0;
        acc += *it;
    }
    return acc;
}

UniPoly UniPoly::derivative() const {
    std::vector<Rational> d;
    for (size_t k = 1; k < c_.size(); ++k) d.push_back(c_[k] * static_cast<long>(k));
    return UniPoly(std::move(d), var_);
}

UniPoly& UniPoly::operator+=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator-=(const UniPoly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
    for (size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

UniPoly& UniPoly::operator*=(const Rational& s) {
    if (s == 0) {
        c_.clear();
        return *this;
    }
    for (auto& v : c_) v *= s;
    return *this;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    if (a.is_zero() || b.is_zero()) return UniPoly({}, a.var_);
    std::vector<Rational> out(a.c_.size() + b.c_.size() - 1);
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    }
    return UniPoly(std::move(out), a.var_);
}

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& v : r.c_) v = -v;
    return r;
}

std::string UniPoly::str() const {
    if (c_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& v = c_[k];
        if (v == 0) continue;
        Rational a = abs(v);
        if (first)
            os << (v < 0 ? "-" : "");
        else
            os << (v < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || a != 1) {
            os << pretty(a);
            if (k > 0) os << "*";
        }
        if (k >= 1) os << var_;
        if (k >= 2) os << "^" << k;
    }
    return os.str();
}

std::string UniPoly::latex_str() const {
    if (c_.empty()) return "0";
    std::string v = var_ == "λ" ? "\\lambda" : var_;
    std::ostringstream os;
    bool first = true;
    for (int k = degree(); k >= 0; --k) {
        const Rational& c = c_[k];
        if (c == 0) continue;
        Rational a = abs(c);
        if (first)
            os << (c < 0 ? "-" : "");
        else
            os << (c < 0 ? " - " : " + ");
        first = false;
        if (k == 0 || a != 1) os << latex(a);
        if (k >= 1) os << v;
        if (k >= 2) os << "^{" << k << "}";
    }
    return os.str();
}

std::vector<UniPoly> lagrange_basis(const std::vector<Rational>& xs, const std::string& var) {
    size_t n = xs.size();
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (xs[i] == xs[j]) throw Error("degenerate node set");
    // master polynomial Z = prod (x - x_j); l_i = Z / ((x - x_i) * prod_{j != i} (x_i - x_j))
    std::vector<Rational> Z{Rational(1)};
    for (const auto& xj : xs) {
        std::vector<Rational> next(Z.size() + 1);
        for (size_t k = 0; k < Z.size(); ++k) {
            next[k + 1] += Z[k];
            next[k] -= xj * Z[k];
        }
        Z = std::move(next);
    }
    std::vector<UniPoly> basis;
    basis.reserve(n);
    for (size_t i = 0; i < n; ++i) {
        // synthetic division of Z by (x - x_i)
        std::vector<Rational> q(n);
        Rational carry(0);
        for (size_t k = n; k >= 1; --k) {
            carry = Z[k] + carry * xs[i];
            q[k - 1] = carry;
        }
        Rational denom(1);
        for (size_t j = 0; j < n; ++j)
            if (j != i) denom *= xs[i] - xs[j];
        Rational inv = Rational(1) / denom;
        for (auto& v : q) v *= inv;
        basis.emplace_back(std::move(q), var);
    }
    return basis;
}

UniPoly lagrange_interpolate(const std::vector<Node>& nodes, const std::string& var) {
    if (nodes.empty()) throw Error("empty node set");
    std::vector<Rational> xs;
    for (const auto& nd : nodes) xs.push_back(nd.x);
    auto basis = lagrange_basis(xs, var);
    UniPoly out({}, var);
    for (size_t i = 0; i < nodes.size(); ++i)
        if (nodes[i].y != 0) out += basis[i] * nodes[i].y;
    return out;
}

}  // namespace qcurv
