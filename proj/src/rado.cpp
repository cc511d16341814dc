// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/rado.hpp"

#include <algorithm>

namespace sepwsts::rado {

namespace {
void require_point(const RadoPoint& p, const char* who) {
    if (p.c < 0 || p.c >= p.r)
        throw input_error(std::string(who) + ": (" + std::to_string(p.c) + "," +
                          std::to_string(p.r) + ") is not in the upper diagonal");
}

void require_letter(char a) {
    if (a != '<' && a != '>' && a != '0')
        throw input_error(std::string("unknown letter: ") + a);
}
}  // namespace

bool rado_leq(const RadoPoint& p, const RadoPoint& q) {
    require_point(p, "rado_leq");
    require_point(q, "rado_leq");
    return p.r <= q.c || (p.c == q.c && p.r <= q.r);
}

std::optional<RadoPoint> point_post(const RadoPoint& p, char letter) {
    require_point(p, "point_post");
    require_letter(letter);
    switch (letter) {
        case '<':
            return RadoPoint{p.c + 1, p.r + 1};
        case '>':
            if (p.c >= 1) return RadoPoint{p.c - 1, p.r - 1};
            return std::nullopt;
        default:  // '0'
            if (p.c >= 1) {
                // delta((c+1, r), 0) = (0, c); undefined from column 1 since
                // (0,0) is outside the upper diagonal
                if (p.c - 1 >= 1) return RadoPoint{0, p.c - 1};
                return std::nullopt;
            }
            // delta((0, r+1), 0) = (0, r); undefined from (0,1)
            if (p.r - 1 >= 1) return RadoPoint{0, p.r - 1};
            return std::nullopt;
    }
}

bool RadoRegion::canonical() const {
    for (const auto& p : points)
        if (columns.count(p.c)) return false;
    return true;
}

RadoRegion initial_region() { return RadoRegion{{}, {0}}; }

RadoRegion region_post(const RadoRegion& reg, char letter) {
    require_letter(letter);
    RadoRegion out;
    for (long long i : reg.columns) {
        switch (letter) {
            case '<':
                out.columns.insert(i + 1);
                break;
            case '>':
                if (i >= 1) out.columns.insert(i - 1);
                break;
            default:  // '0'
                if (i == 0) out.columns.insert(0);       // column 0 maps onto itself
                else if (i >= 2) out.points.insert({0, i - 1});
                // column 1 has no '0'-successors
                break;
        }
    }
    for (const auto& p : reg.points)
        if (auto q = point_post(p, letter)) out.points.insert(*q);
    std::erase_if(out.points, [&](const RadoPoint& p) { return out.columns.count(p.c) != 0; });
    return out;
}

bool witness_member(const std::string& w) {
    RadoRegion reg = initial_region();
    for (char a : w) {
        reg = region_post(reg, a);
        if (reg.empty()) return false;
    }
    return !reg.empty();
}

bool fragment_oracle(long long n, long long k, long long i) {
    if (n < k) return false;
    return n == k || n - k > i;
}

std::string column_word(long long i) {
    if (i < 0) throw input_error("column_word: negative index");
    std::string w(static_cast<std::size_t>(i), '<');
    RadoRegion reg = initial_region();
    for (char a : w) reg = region_post(reg, a);
    if (!(reg == RadoRegion{{}, {i}}))
        throw std::logic_error("column_word: simulator did not reach exactly column " +
                               std::to_string(i));
    return w;
}

SuffixCertificate distinguishing_suffixes(long long i, long long j) {
    if (i >= j) throw input_error("distinguishing_suffixes: need i < j");
    if (i < 0) throw input_error("distinguishing_suffixes: negative index");
    SuffixCertificate cert;
    cert.u = std::string(static_cast<std::size_t>(j), '>');
    cert.v = std::string(static_cast<std::size_t>(i), '>') +
             std::string(static_cast<std::size_t>(j - i), '0');
    const std::string wi = column_word(i), wj = column_word(j);
    cert.u_accepts_j = witness_member(wj + cert.u);
    cert.u_accepts_i = witness_member(wi + cert.u);
    cert.v_accepts_i = witness_member(wi + cert.v);
    cert.v_accepts_j = witness_member(wj + cert.v);
    return cert;
}

bool downcls_column_leq(long long i, long long j) {
    if (i < 0 || j < 0) throw input_error("downcls_column_leq: negative index");
    // down(C_i) = C_i + { (c,r) in R : r <= i }, the column plus a finite
    // triangle. A point lies in down(C_j) iff its column is j or its row is
    // at most j.
    auto in_down_col = [](const RadoPoint& p, long long col) {
        return p.c == col || p.r <= col;
    };
    // Column part: rows of C_i up to j land in the triangle of down(C_j); a
    // single probe beyond both indices decides the unbounded remainder.
    if (!in_down_col(RadoPoint{i, std::max(i, j) + 1}, j)) return false;
    // Triangle part, enumerated exactly.
    for (long long r = 1; r <= i; ++r)
        for (long long c = 0; c < r; ++c)
            if (!in_down_col(RadoPoint{c, r}, j)) return false;
    return true;
}

bool k_member(const std::string& w) {
    const auto pos = w.find('#');
    if (pos == std::string::npos || w.find('#', pos + 1) != std::string::npos) return false;
    const std::string w1 = w.substr(0, pos);
    std::string w2 = w.substr(pos + 1);
    std::reverse(w2.begin(), w2.end());
    return witness_member(w1) && !witness_member(w2);
}

}  // namespace sepwsts::rado
