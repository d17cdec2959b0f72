#pragma once

#include "qcurv/compositions.hpp"
#include "qcurv/exact.hpp"
#include "qcurv/report.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>
#include <vector>

namespace qcurv {

struct RPolynomial {
    Composition index;
    UniPoly poly;
    Rational value_at_half;
    Rational script_R;
};

// The k+1 points 1/2-k, ..., -1/2, 1/2, listed from 1/2 downwards.
std::vector<Rational> half_integer_set(int k);

// Memo store for r_I. Safe for concurrent readers and writers.
class RStore {
public:
    const RPolynomial& get(const Composition& I);
    const UniPoly& r(const Composition& I) { return get(I).poly; }
    Rational script_R(const Composition& I) { return get(I).script_R; }
    // Populate every composition of size <= max_size, smallest first.
    void build_all(int max_size);
    size_t size() const;

private:
    RPolynomial build(const Composition& I);
    const std::vector<UniPoly>& basis(int size, int last);

    mutable std::mutex mu_;
    std::unordered_map<std::string, std::unique_ptr<RPolynomial>> memo_;
    std::map<std::pair<int, int>, std::vector<UniPoly>> basis_;
};

RStore& default_store();

RPolynomial build_base(int k);
const RPolynomial& build_r(const Composition& I);
Rational script_R(const Composition& I);
// Direct subdivision sum; independent of the recursion used by the store.
Rational script_R_bruteforce(const Composition& I, RStore& store);

UniPoly s_poly(const Composition& I);
UniPoly curly_C(const Composition& I);
UniPoly sigma(int k, int j);
UniPoly standard_interp(int M, int N);
// The bracketed scalar multiplying I_(j-k,j) in the averages identity.
Rational sigma_scalar(int k, int j);
Rational base_value(int k);  // value of r_(k) on S(k)

Report check_conjectural_identities(int max_size);
// Structural conditions that hold by construction (zeros, constancy, degree, constant term).
Report check_construction(int max_size);

}  // namespace qcurv
