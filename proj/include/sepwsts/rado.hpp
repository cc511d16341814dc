// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// The Rado order, the infinitely-branching witness system over it, an exact
// symbolic simulator for its reachable sets, the fragment-formula oracle,
// antichain certificates for the word order, and the composed language K.
//
// Words use the ASCII letters '<', '>', '0' (and '#' for k_member).
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepwsts/common.hpp"

namespace sepwsts::rado {

/// A point of the upper diagonal: column c, row r, with c < r.
struct RadoPoint {
    long long c = 0;
    long long r = 1;

    bool operator==(const RadoPoint& o) const { return c == o.c && r == o.r; }
    bool operator<(const RadoPoint& o) const { return c != o.c ? c < o.c : r < o.r; }
};

/// (c1,r1) <= (c2,r2) iff r1 <= c2, or c1 = c2 and r1 <= r2.
/// Throws input_error if either point violates c < r.
bool rado_leq(const RadoPoint& p, const RadoPoint& q);

/// Successor of a point under one letter; nullopt when the transition is
/// undefined (reading '>' in column 0, or a '0' whose image would leave the
/// upper diagonal).
std::optional<RadoPoint> point_post(const RadoPoint& p, char letter);

/// Exact representation of a reachable set: finitely many points plus
/// finitely many full columns. Canonical: no listed point lies in a listed
/// full column.
struct RadoRegion {
    std::set<RadoPoint> points;
    std::set<long long> columns;

    bool operator==(const RadoRegion& o) const {
        return points == o.points && columns == o.columns;
    }
    bool empty() const { return points.empty() && columns.empty(); }
    bool canonical() const;
};

/// The initial region of the witness system: full column 0.
RadoRegion initial_region();

/// Exact image of a region under one letter, re-canonicalized.
RadoRegion region_post(const RadoRegion& reg, char letter);

/// Membership in the witness language: fold region_post from column 0 and
/// accept iff the resulting region is nonempty (every state is final).
/// Throws input_error on letters outside {<, >, 0}.
bool witness_member(const std::string& w);

/// The fragment formula for words <^n >^k 0^i: accepted iff n = k, or n > k
/// and n - k > i.
bool fragment_oracle(long long n, long long k, long long i);

/// Representative word reaching exactly full column i, namely <^i. Asserts
/// via the simulator that the reached region is exactly {column i}.
std::string column_word(long long i);

/// Distinguishing suffixes for the column representatives <^i and <^j with
/// i < j, certified by running the simulator on all four words.
struct SuffixCertificate {
    std::string u;  // >^j      : <^j u in W, <^i u not in W
    std::string v;  // >^i 0^(j-i) : <^i v in W, <^j v not in W
    bool u_accepts_j = false, u_accepts_i = false;
    bool v_accepts_i = false, v_accepts_j = false;
    bool valid() const { return u_accepts_j && !u_accepts_i && v_accepts_i && !v_accepts_j; }
};
SuffixCertificate distinguishing_suffixes(long long i, long long j);

/// Symbolic inclusion test of the downward closures of full columns:
/// down(C_i) is C_i plus the finite triangle of rows <= i, so inclusion
/// holds iff i = j.
bool downcls_column_leq(long long i, long long j);

/// Membership in K = W . # . reverse(complement(W)): exactly one '#', the
/// prefix is in W and the reversed suffix is not.
bool k_member(const std::string& w);

}  // namespace sepwsts::rado
