// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Explicit labeled transition systems with an ordered state space:
// compatibility diagnostics, synchronized product, reversal, complement,
// determinization of finitely-branching systems, pruning, bounded language
// operations, and word orders.
#pragma once

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepwsts/common.hpp"

namespace sepwsts {

enum class Direction { Upward, Downward };

/// Finite LTS with an extensional quasi order on the states. Which of <= / >=
/// must act as a simulation is selected by `direction`; final-set closure
/// follows the same flag.
struct ExplicitOLTS {
    std::vector<std::string> states;
    std::vector<std::vector<bool>> leq;  // leq[s][t] iff s <= t
    std::set<int> initial;
    std::set<int> final;
    std::vector<std::string> alphabet;
    std::map<std::pair<int, int>, std::vector<int>> trans;  // (state, letter) -> successors
    Direction direction = Direction::Upward;

    int state_index(const std::string& s) const;
    int letter_index(const std::string& a) const;
    bool less_eq(int s, int t) const { return leq[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)]; }
    const std::vector<int>& successors(int s, int letter) const;

    /// Quasi-order laws (reflexivity, transitivity) are load errors;
    /// also checks transitions/initials/finals reference declared states.
    void validate() const;

    bool is_deterministic() const;  // exactly one initial, |delta(s,a)| = 1 everywhere
};

struct CompatViolation {
    enum class Kind { FinalClosure, Simulation } kind;
    int s = -1, t = -1;      // related pair s <= t
    int letter = -1;         // for simulation violations
    int succ = -1;           // unmatched successor
    std::string describe(const ExplicitOLTS& u) const;
};

struct CompatReport {
    std::vector<CompatViolation> violations;
    bool ok() const { return violations.empty(); }
};

/// Diagnostics for the declared direction: final-set closure and the
/// simulation property of the order. Never throws; an empty report means the
/// system is a well-formed ULTS / DLTS.
CompatReport check_compatible(const ExplicitOLTS& u);

/// Synchronized product (componentwise states, order, transitions). The
/// bounded language of the result is the intersection of the inputs'.
ExplicitOLTS product(const ExplicitOLTS& u1, const ExplicitOLTS& u2);

/// Reversal: initial and final sets swap (with the appropriate closure of the
/// old initial set), transitions flip and are widened to all sources
/// simulated by the original target; the direction flips.
ExplicitOLTS reverse(const ExplicitOLTS& u);

/// Final-set complement of a deterministic total system; the direction flips.
/// Throws precondition_error if the input is not deterministic and total.
ExplicitOLTS complement(const ExplicitOLTS& u);

/// Determinization of an upward-direction system. States of the result are
/// maximal-element antichains of finite downward closures, ordered by
/// elementwise domination; bounded languages coincide with the input's.
ExplicitOLTS determinize_fb(const ExplicitOLTS& u);

/// Restrict every successor set of a downward-direction system to its minimal
/// elements; the bounded language is unchanged.
ExplicitOLTS prune_nonminimal(const ExplicitOLTS& u);

struct BoundedLangReport {
    std::size_t max_len = 0;
    std::set<Word> words;
};

/// Exact L(u) intersected with words of length <= k.
BoundedLangReport members_upto(const ExplicitOLTS& u, std::size_t k);

/// Word order induced by a deterministic system: w <= w' iff the unique
/// states reached satisfy the state order. Throws precondition_error on
/// non-deterministic input.
bool word_leq_dwsts(const ExplicitOLTS& d, const Word& w, const Word& w2);

/// Bounded Nerode test: true iff member(w.u) implies member(w2.u) for every
/// suffix u of length <= k over the given alphabet. A "false" refutes the
/// Nerode quasi order exactly; "true" is a bounded confirmation.
bool nerode_leq_bounded(const std::function<bool(const Word&)>& member,
                        const std::vector<std::string>& alphabet, const Word& w,
                        const Word& w2, std::size_t k);

}  // namespace sepwsts
