// Text rendering of multivectors, terms ordered by (grade, mask).
#pragma once

#include "ga/core.hpp"

#include <string>
#include <vector>

namespace ga {

inline std::string blade_name(Mask m) {
    std::string s;
    for (int i : mask_indices(m)) {
        if (!s.empty()) s += "*";
        s += "e" + std::to_string(i + 1);
    }
    return s;
}

template <class T>
std::vector<std::pair<Mask, T>> ordered_terms(const Multivector<T>& x) {
    std::vector<std::pair<Mask, T>> out(x.terms().begin(), x.terms().end());
    std::stable_sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
        int ga_ = grade(a.first), gb = grade(b.first);
        return ga_ != gb ? ga_ < gb : a.first < b.first;
    });
    return out;
}

template <class T>
std::string to_string(const Multivector<T>& x) {
    auto terms = ordered_terms(x);
    if (terms.empty()) return "0";
    std::string out;
    bool first = true;
    for (const auto& [m, v] : terms) {
        std::string c = to_str(v);
        bool neg = !c.empty() && c[0] == '-';
        if (neg) c.erase(0, 1);
        if (first) out += neg ? "-" : "";
        else out += neg ? " - " : " + ";
        first = false;
        if (m == 0) out += c;
        else if (c == "1") out += blade_name(m);
        else out += c + "*" + blade_name(m);
    }
    return out;
}

}  // namespace ga
