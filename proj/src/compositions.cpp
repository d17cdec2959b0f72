#include "qcurv/compositions.hpp"

#include "qcurv/error.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace qcurv {

int comp_size(const Composition& c) { return std::accumulate(c.begin(), c.end(), 0); }

std::string comp_key(const Composition& c) {
    std::string out;
    for (size_t i = 0; i < c.size(); ++i) {
        if (i) out += ',';
        out += std::to_string(c[i]);
    }
    return out;
}

bool comp_valid(const Composition& c) {
    return !c.empty() && std::all_of(c.begin(), c.end(), [](int v) { return v >= 1; });
}

Composition parse_composition(const std::string& text) {
    Composition out;
    std::stringstream ss(text);
    std::string item;
    while (std::getline(ss, item, ',')) {
        item.erase(std::remove_if(item.begin(), item.end(), [](char ch) { return ch == ' ' || ch == '(' || ch == ')'; }),
                   item.end());
        if (item.empty() || !std::all_of(item.begin(), item.end(), [](char ch) { return ch >= '0' && ch <= '9'; }))
            throw Error("malformed composition: " + text);
        out.push_back(std::stoi(item));
    }
    if (!comp_valid(out)) throw Error("malformed composition: " + text);
    return out;
}

bool canonical_less(const Composition& a, const Composition& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
}

std::vector<Composition> enumerate_compositions(int size) {
    if (size <= 0) throw Error("composition size must be positive");
    std::vector<Composition> out;
    // bit i set means a cut after position i
    unsigned long count = 1ul << (size - 1);
    out.reserve(count);
    for (unsigned long mask = 0; mask < count; ++mask) {
        Composition c;
        int run = 1;
        for (int i = 0; i < size - 1; ++i) {
            if (mask & (1ul << i)) {
                c.push_back(run);
                run = 1;
            } else {
                ++run;
            }
        }
        c.push_back(run);
        out.push_back(std::move(c));
    }
    std::sort(out.begin(), out.end(), canonical_less);
    return out;
}

std::vector<std::vector<Composition>> subdivisions(const Composition& c) {
    std::vector<std::vector<Composition>> out;
    size_t m = c.size();
    unsigned long count = 1ul << (m - 1);
    for (unsigned long mask = 0; mask < count; ++mask) {
        std::vector<Composition> blocks;
        Composition cur;
        for (size_t i = 0; i < m; ++i) {
            cur.push_back(c[i]);
            if (i + 1 < m && (mask & (1ul << i))) {
                blocks.push_back(std::move(cur));
                cur.clear();
            }
        }
        blocks.push_back(std::move(cur));
        out.push_back(std::move(blocks));
    }
    std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    return out;
}

LastSplit split_last(const Composition& c) {
    LastSplit s;
    s.last = c.back();
    if (c.size() > 1) s.head = Composition(c.begin(), c.end() - 1);
    return s;
}

std::vector<std::pair<Composition, Composition>> prefix_splits(const Composition& c) {
    std::vector<std::pair<Composition, Composition>> out;
    for (size_t k = 1; k < c.size(); ++k)
        out.emplace_back(Composition(c.begin(), c.begin() + k), Composition(c.begin() + k, c.end()));
    return out;
}

Composition concat(const Composition& a, const Composition& b) {
    Composition out = a;
    out.insert(out.end(), b.begin(), b.end());
    return out;
}

}  // namespace qcurv
