#pragma once

#include <string>
#include <vector>

namespace qcurv {

struct CheckLine {
    std::string name;
    bool pass = true;
    std::string detail;
};

struct Report {
    std::vector<CheckLine> lines;

    void add(std::string name, bool pass, std::string detail = {}) {
        lines.push_back({std::move(name), pass, std::move(detail)});
    }
    void append(const Report& other) { lines.insert(lines.end(), other.lines.begin(), other.lines.end()); }
    bool ok() const {
        for (const auto& l : lines)
            if (!l.pass) return false;
        return true;
    }
    size_t failures() const {
        size_t n = 0;
        for (const auto& l : lines) n += l.pass ? 0 : 1;
        return n;
    }
};

}  // namespace qcurv
