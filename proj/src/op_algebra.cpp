#include "qcurv/op_algebra.hpp"

#include <sstream>

namespace qcurv {

bool Word::well_formed() const {
    for (int j : boundary)
        if (j < 1) return false;
    if (bulk < 0) return false;
    // a boundary operator cannot act on a bulk function without a restriction in between
    return !(bulk > 0 && !restriction && !boundary.empty());
}

std::string Word::str() const {
    std::string out;
    for (int j : boundary) out += (out.empty() ? "" : " ") + std::string("P_") + std::to_string(2 * j);
    if (restriction) out += (out.empty() ? "" : " ") + std::string("i*");
    if (bulk > 0) {
        out += (out.empty() ? "" : " ") + std::string("Pbar_2");
        if (bulk > 1) out += "^" + std::to_string(bulk);
    }
    return out.empty() ? "1" : out;
}

Word boundary_word(std::vector<int> b) { return Word{std::move(b), false, 0}; }
Word restriction_word() { return Word{{}, true, 0}; }
Word bulk_word(int k) { return Word{{}, false, k}; }

Word compose_words(const Word& a, const Word& b) {
    bool a_has_right = a.restriction || a.bulk > 0;
    bool b_has_left = !b.boundary.empty() || b.restriction;
    if (a_has_right && b_has_left) throw Error("word grammar violation");
    if (a.bulk > 0 && b.restriction) throw Error("word grammar violation");
    Word w;
    w.boundary = a.boundary;
    w.boundary.insert(w.boundary.end(), b.boundary.begin(), b.boundary.end());
    w.restriction = a.restriction || b.restriction;
    w.bulk = a.bulk + b.bulk;
    if (!w.well_formed()) throw Error("word grammar violation");
    return w;
}

OpExpr OpExpr::word(const Word& w, const Rational& c, std::optional<Rational> n) {
    if (!w.well_formed()) throw Error("word grammar violation");
    OpExpr e(std::move(n));
    e.add(w, UniPoly::constant(c, "λ"));
    return e;
}

void OpExpr::merge_dim(const std::optional<Rational>& other) {
    if (!other) return;
    if (n_ && *n_ != *other) throw Error("dimension mismatch");
    n_ = other;
}

void OpExpr::add(const Word& w, const UniPoly& c) {
    if (c.is_zero()) return;
    auto it = terms_.find(w);
    if (it == terms_.end()) {
        UniPoly v = c;
        v.set_var("λ");
        terms_.emplace(w, std::move(v));
        return;
    }
    it->second += c;
    if (it->second.is_zero()) terms_.erase(it);
}

OpExpr& OpExpr::operator+=(const OpExpr& o) {
    merge_dim(o.n_);
    for (const auto& [w, c] : o.terms_) add(w, c);
    return *this;
}

OpExpr& OpExpr::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [w, c] : terms_) c *= s;
    return *this;
}

OpExpr& OpExpr::operator*=(const UniPoly& s) {
    std::map<Word, UniPoly> next;
    for (auto& [w, c] : terms_) {
        UniPoly v = c * s;
        v.set_var("λ");
        if (!v.is_zero()) next.emplace(w, std::move(v));
    }
    terms_ = std::move(next);
    return *this;
}

OpExpr OpExpr::at(const Rational& lambda) const {
    OpExpr e(n_);
    for (const auto& [w, c] : terms_) e.add(w, UniPoly::constant(c(lambda), "λ"));
    return e;
}

OpExpr OpExpr::derivative() const {
    OpExpr e(n_);
    for (const auto& [w, c] : terms_) e.add(w, c.derivative());
    return e;
}

int OpExpr::degree() const {
    int d = -1;
    for (const auto& [w, c] : terms_) d = std::max(d, c.degree());
    return d;
}

std::string OpExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [w, c] : terms_) {
        if (!first) os << " + ";
        first = false;
        if (c.degree() == 0)
            os << pretty(c.coeff(0));
        else
            os << "(" << c.str() << ")";
        os << " " << w.str();
    }
    return os.str();
}

OpExpr compose(const OpExpr& a, const OpExpr& b) {
    OpExpr out(a.n_);
    out.merge_dim(b.n_);
    for (const auto& [wa, ca] : a.terms_)
        for (const auto& [wb, cb] : b.terms_) out.add(compose_words(wa, wb), ca * cb);
    return out;
}

ValueKey q_key(Composition w, int order) { return ValueKey{std::move(w), Target{TargetKind::Q, order}}; }

ValueKey bar_key(Composition w, int power) {
    // i* Qbar_2 restricts to Q_2
    if (power == 0) return q_key(std::move(w), 2);
    return ValueKey{std::move(w), Target{TargetKind::Bar, power}};
}

void ValueExpr::add(ValueKey key, const Rational& c) {
    if (c == 0) return;
    if (key.target.kind == TargetKind::Bar && key.target.index == 0) key = q_key(std::move(key.word), 2);
    auto it = terms_.find(key);
    if (it == terms_.end()) {
        terms_.emplace(std::move(key), c);
        return;
    }
    it->second += c;
    if (it->second == 0) terms_.erase(it);
}

ValueExpr& ValueExpr::operator+=(const ValueExpr& o) {
    if (o.n_) {
        if (n_ && *n_ != *o.n_) throw Error("dimension mismatch");
        n_ = o.n_;
    }
    for (const auto& [k, c] : o.terms_) add(k, c);
    return *this;
}

ValueExpr& ValueExpr::operator-=(const ValueExpr& o) {
    ValueExpr neg = o;
    neg *= Rational(-1);
    return *this += neg;
}

ValueExpr& ValueExpr::operator*=(const Rational& s) {
    if (s == 0) {
        terms_.clear();
        return *this;
    }
    for (auto& [k, c] : terms_) c *= s;
    return *this;
}

Rational ValueExpr::coeff(const ValueKey& key) const {
    auto it = terms_.find(key);
    return it == terms_.end() ? Rational(0) : it->second;
}

int ValueExpr::max_bar_power() const {
    int m = -1;
    for (const auto& [k, c] : terms_)
        if (k.target.kind == TargetKind::Bar) m = std::max(m, k.target.index);
    return m;
}

std::string ValueExpr::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
        os << (first ? "" : (c < 0 ? " - " : " + "));
        if (first && c < 0) os << "-";
        first = false;
        os << pretty(abs(c)) << " ";
        for (int j : k.word) os << "P_" << 2 * j << " ";
        switch (k.target.kind) {
            case TargetKind::Q: os << "Q_" << k.target.index; break;
            case TargetKind::Bar: os << "i* Pbar_2^" << k.target.index << "(Qbar_2)"; break;
            case TargetKind::Unit: os << "1"; break;
        }
    }
    return os.str();
}

ValueExpr apply_to_one(const OpExpr& e, const Rational& n) {
    if (e.dim() && *e.dim() != n) throw Error("dimension mismatch");
    ValueExpr out(n);
    for (const auto& [w, c] : e.terms()) {
        if (c.degree() > 0) throw Error("apply_to_one needs a lambda-free expression");
        Rational v = c.coeff(0);
        if (w.bulk > 0) {
            if (!w.restriction) throw Error("bulk word without restriction has no boundary value");
            // Pbar_2(1) = -((n-1)/2) Qbar_2 for the (n+1)-dimensional Yamabe operator
            out.add(bar_key(w.boundary, w.bulk - 1), -v * (n - 1) / 2);
        } else if (w.boundary.empty()) {
            out.add(ValueKey{{}, Target{TargetKind::Unit, 0}}, v);
        } else {
            int j = w.boundary.back();
            Composition head(w.boundary.begin(), w.boundary.end() - 1);
            out.add(q_key(std::move(head), 2 * j), v * sign_pow(j) * (n / 2 - j));
        }
    }
    return out;
}

ValueExpr substitute_universal(const ValueExpr& v, const std::map<int, RecursiveFormula>& known, int keep_power) {
    ValueExpr out(v.dim());
    for (const auto& [k, c] : v.terms()) {
        if (k.target.kind != TargetKind::Bar || k.target.index >= keep_power) {
            out.add(k, c);
            continue;
        }
        int Np = k.target.index + 1;
        auto it = known.find(Np);
        if (it == known.end()) throw Error("universality input incomplete");
        const RecursiveFormula& F = it->second;
        if (F.bar_power != k.target.index || F.bar_coeff == 0) throw Error("universality input incomplete");
        Rational s = c / F.bar_coeff;
        // bar = (Q_{2N'} - sum a_J P_{2J}(Q)) / b
        out.add(q_key(k.word, 2 * Np), s);
        for (const auto& t : F.terms) out.add(q_key(concat(k.word, t.word), t.q_order), -s * t.coeff);
    }
    return out;
}

ValueExpr formula_defect(const RecursiveFormula& F) {
    ValueExpr v;
    v.add(q_key({}, 2 * F.N), Rational(1));
    for (const auto& t : F.terms) v.add(q_key(t.word, t.q_order), -t.coeff);
    v.add(bar_key({}, F.bar_power), -F.bar_coeff);
    return v;
}

}  // namespace qcurv
