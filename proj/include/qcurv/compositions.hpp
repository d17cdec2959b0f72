#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace qcurv {

using Composition = std::vector<int>;

int comp_size(const Composition& c);
std::string comp_key(const Composition& c);  // "1,2,1"
Composition parse_composition(const std::string& text);
bool comp_valid(const Composition& c);

// Length ascending, then lexicographic.
bool canonical_less(const Composition& a, const Composition& b);

std::vector<Composition> enumerate_compositions(int size);
std::vector<std::vector<Composition>> subdivisions(const Composition& c);

struct LastSplit {
    std::optional<Composition> head;  // empty for a single entry
    int last = 0;
};
LastSplit split_last(const Composition& c);
std::vector<std::pair<Composition, Composition>> prefix_splits(const Composition& c);

Composition concat(const Composition& a, const Composition& b);

}  // namespace qcurv
