#pragma once

#include "qcurv/coeff.hpp"
#include "qcurv/compositions.hpp"
#include "qcurv/exact.hpp"

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace qcurv {

// Word P_{2 b_1} ... P_{2 b_s} [i*] Pbar_2^bulk, read left to right, applied right to left.
struct Word {
    std::vector<int> boundary;
    bool restriction = false;
    int bulk = 0;

    auto operator<=>(const Word&) const = default;
    bool well_formed() const;
    std::string str() const;
};

Word boundary_word(std::vector<int> b);
Word restriction_word();
Word bulk_word(int k);
Word compose_words(const Word& a, const Word& b);

class OpExpr {
public:
    OpExpr() = default;
    explicit OpExpr(std::optional<Rational> n) : n_(std::move(n)) {}
    static OpExpr word(const Word& w, const Rational& c = Rational(1), std::optional<Rational> n = std::nullopt);

    const std::map<Word, UniPoly>& terms() const { return terms_; }
    const std::optional<Rational>& dim() const { return n_; }
    bool is_zero() const { return terms_.empty(); }

    void add(const Word& w, const UniPoly& c);
    OpExpr& operator+=(const OpExpr& o);
    OpExpr& operator*=(const Rational& s);
    OpExpr& operator*=(const UniPoly& s);
    friend OpExpr operator+(OpExpr a, const OpExpr& b) { return a += b; }
    friend OpExpr operator*(OpExpr a, const Rational& s) { return a *= s; }
    friend OpExpr operator*(const UniPoly& s, OpExpr a) { return a *= s; }
    bool operator==(const OpExpr& o) const { return terms_ == o.terms_; }

    OpExpr at(const Rational& lambda) const;
    OpExpr derivative() const;
    int degree() const;
    std::string str() const;

private:
    void merge_dim(const std::optional<Rational>& other);
    std::map<Word, UniPoly> terms_;
    std::optional<Rational> n_;
    friend OpExpr compose(const OpExpr& a, const OpExpr& b);
};

OpExpr compose(const OpExpr& a, const OpExpr& b);

enum class TargetKind { Q, Bar, Unit };

struct Target {
    TargetKind kind = TargetKind::Unit;
    int index = 0;  // order 2j for Q, power k for Bar
    auto operator<=>(const Target&) const = default;
};

struct ValueKey {
    Composition word;  // may be empty
    Target target;
    auto operator<=>(const ValueKey&) const = default;
};

class ValueExpr {
public:
    ValueExpr() = default;
    explicit ValueExpr(std::optional<Rational> n) : n_(std::move(n)) {}

    const std::map<ValueKey, Rational>& terms() const { return terms_; }
    const std::optional<Rational>& dim() const { return n_; }
    void add(ValueKey key, const Rational& c);
    ValueExpr& operator+=(const ValueExpr& o);
    ValueExpr& operator-=(const ValueExpr& o);
    ValueExpr& operator*=(const Rational& s);
    friend ValueExpr operator+(ValueExpr a, const ValueExpr& b) { return a += b; }
    friend ValueExpr operator-(ValueExpr a, const ValueExpr& b) { return a -= b; }
    friend ValueExpr operator*(ValueExpr a, const Rational& s) { return a *= s; }
    bool operator==(const ValueExpr& o) const { return terms_ == o.terms_; }
    Rational coeff(const ValueKey& key) const;
    int max_bar_power() const;  // -1 when there is none
    std::string str() const;

private:
    std::map<ValueKey, Rational> terms_;
    std::optional<Rational> n_;
};

ValueKey q_key(Composition w, int order);
ValueKey bar_key(Composition w, int power);

ValueExpr apply_to_one(const OpExpr& e, const Rational& n);
// Eliminate every bar power below keep_power using the formulas in known (keyed by N).
ValueExpr substitute_universal(const ValueExpr& v, const std::map<int, RecursiveFormula>& known, int keep_power);
// Q_{2N} minus the right side of F.
ValueExpr formula_defect(const RecursiveFormula& F);

}  // namespace qcurv
