// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/omega.hpp"

#include <algorithm>

namespace sepwsts {

bool canonical_less(const OmegaMarking& a, const OmegaMarking& b) {
    if (a.control != b.control) return a.control < b.control;
    return a.vec < b.vec;  // omega is the largest Ent, so this is lex with omega greatest
}

bool omega_leq(const OmegaMarking& u, const OmegaMarking& v) {
    if (u.vec.size() != v.vec.size())
        throw input_error("omega_leq: dimension mismatch (" + std::to_string(u.vec.size()) +
                          " vs " + std::to_string(v.vec.size()) + ")");
    if (u.control != v.control) return false;
    for (std::size_t i = 0; i < u.vec.size(); ++i)
        if (u.vec[i] > v.vec[i]) return false;
    return true;
}

IdealCover normalize(const std::vector<OmegaMarking>& ms) {
    if (!ms.empty()) {
        const std::size_t d = ms.front().vec.size();
        for (const auto& m : ms)
            if (m.vec.size() != d) throw input_error("normalize: non-uniform dimensions");
    }
    IdealCover out;
    for (const auto& m : ms) {
        bool dominated = false;
        for (const auto& kept : out.elements)
            if (omega_leq(m, kept)) { dominated = true; break; }
        if (dominated) continue;
        std::erase_if(out.elements, [&](const OmegaMarking& kept) { return omega_leq(kept, m); });
        out.elements.push_back(m);
    }
    std::sort(out.elements.begin(), out.elements.end(), canonical_less);
    return out;
}

bool covers_point(const IdealCover& c, const OmegaMarking& m) {
    for (const auto& e : c.elements)
        if (omega_leq(m, e)) return true;
    return false;
}

bool cover_leq(const IdealCover& a, const IdealCover& b) {
    for (const auto& e : a.elements)
        if (!covers_point(b, e)) return false;
    return true;
}

std::string pair_control(const std::string& c1, const std::string& c2) {
    return "(" + c1 + "|" + c2 + ")";
}

std::pair<std::string, std::string> split_pair_control(const std::string& c) {
    if (c.size() < 3 || c.front() != '(' || c.back() != ')')
        throw input_error("split_pair_control: not a pair control: " + c);
    int depth = 0;
    for (std::size_t i = 1; i + 1 < c.size(); ++i) {
        if (c[i] == '(') ++depth;
        else if (c[i] == ')') --depth;
        else if (c[i] == '|' && depth == 0)
            return {c.substr(1, i - 1), c.substr(i + 1, c.size() - i - 2)};
    }
    throw input_error("split_pair_control: not a pair control: " + c);
}

OmegaMarking join_product(const OmegaMarking& j1, const OmegaMarking& j2) {
    OmegaMarking out;
    out.control = pair_control(j1.control, j2.control);
    out.vec = j1.vec;
    out.vec.insert(out.vec.end(), j2.vec.begin(), j2.vec.end());
    return out;
}

std::pair<OmegaMarking, OmegaMarking> split_product(const OmegaMarking& j, std::size_t d1) {
    if (d1 > j.vec.size())
        throw input_error("split_product: split index " + std::to_string(d1) +
                          " exceeds dimension " + std::to_string(j.vec.size()));
    auto [c1, c2] = split_pair_control(j.control);
    OmegaMarking m1{c1, std::vector<Ent>(j.vec.begin(), j.vec.begin() + static_cast<long>(d1))};
    OmegaMarking m2{c2, std::vector<Ent>(j.vec.begin() + static_cast<long>(d1), j.vec.end())};
    return {m1, m2};
}

IdealCover down_of_finite(const std::vector<OmegaMarking>& ms) {
    for (const auto& m : ms)
        for (Ent x : m.vec)
            if (is_omega(x)) throw input_error("down_of_finite: entry is omega");
    return normalize(ms);
}

bool ideal_meets_up(const OmegaMarking& e, const OmegaMarking& b) {
    if (e.vec.size() != b.vec.size()) throw input_error("ideal_meets_up: dimension mismatch");
    if (e.control != b.control) return false;
    for (std::size_t i = 0; i < e.vec.size(); ++i)
        if (!is_omega(e.vec[i]) && e.vec[i] < b.vec[i]) return false;
    return true;
}

std::string to_string(const OmegaMarking& m) {
    std::string s = m.control + "[";
    for (std::size_t i = 0; i < m.vec.size(); ++i) {
        if (i) s += ",";
        s += is_omega(m.vec[i]) ? "w" : std::to_string(m.vec[i]);
    }
    return s + "]";
}

}  // namespace sepwsts
