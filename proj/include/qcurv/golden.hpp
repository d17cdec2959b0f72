#pragma once

#include "qcurv/coeff.hpp"
#include "qcurv/compositions.hpp"
#include "qcurv/exact.hpp"
#include "qcurv/report.hpp"

#include <map>
#include <string>
#include <vector>

namespace qcurv {

// Raw text of an embedded data file (r_polynomials, r_values, alpha_table, formulas).
std::string golden_text(const std::string& name);

struct GoldenPoly {
    Composition index;
    std::vector<Rational> coeffs;  // ascending powers
};

struct GoldenValue {
    std::string table;
    Composition index;
    Rational x;
    Rational value;
};

struct GoldenAlpha {
    int N = 0;
    int j = 0;
    Rational value;
};

std::vector<GoldenPoly> parse_golden_polys(const std::string& text);
std::vector<GoldenValue> parse_golden_values(const std::string& text);
std::vector<GoldenAlpha> parse_golden_alpha(const std::string& text);
std::map<int, RecursiveFormula> parse_golden_formulas(const std::string& text);

std::vector<GoldenPoly> golden_polys();
std::vector<GoldenValue> golden_values();
std::vector<GoldenAlpha> golden_alpha();
std::map<int, RecursiveFormula> golden_formulas();

struct TableSummary {
    size_t polys = 0;
    size_t values = 0;
    // value entries that disagree with the golden polynomial table itself
    std::vector<std::string> source_inconsistencies;
};

// Compares every golden polynomial and value with the engine. A value entry
// that contradicts the golden polynomial for the same composition is checked
// against that polynomial instead and listed in the summary.
Report verify_tables(TableSummary* summary = nullptr);
Report verify_alpha_table();
Report verify_golden_formulas(int N_max);

}  // namespace qcurv
