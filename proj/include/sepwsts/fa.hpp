// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Plain finite-automata toolbox: acceptance, subset construction, complement,
// product, emptiness with shortest witness. Supports separator verification.
#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepwsts/common.hpp"

namespace sepwsts::fa {

struct Nfa {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    std::set<int> initial;
    std::set<int> final;
    // (state, letter index) -> successor states, kept sorted
    std::map<std::pair<int, int>, std::vector<int>> trans;

    int letter_index(const std::string& a) const;
    std::vector<int> post(const std::set<int>& from, int letter) const;
};

/// Total single-valued automaton; trans[s][a] is the unique successor.
struct Dfa {
    std::vector<std::string> states;
    std::vector<std::string> alphabet;
    int initial = 0;
    std::set<int> final;
    std::vector<std::vector<int>> trans;

    int letter_index(const std::string& a) const;
    int run(const Word& w) const;
    Nfa as_nfa() const;
};

bool accepts(const Nfa& a, const Word& w);
bool accepts(const Dfa& d, const Word& w);

/// Subset construction restricted to reachable subsets. Derived state names
/// are canonical sorted tuples so outputs are stable.
Dfa determinize_fa(const Nfa& a);

/// Flip final states. The input is total by construction of Dfa; determinize
/// always yields a total machine (the empty subset acts as sink).
Dfa complement_dfa(const Dfa& d);

/// Synchronized product; accepts the intersection. Alphabets must agree.
Nfa product_intersect(const Nfa& x, const Nfa& y);

/// Exact emptiness; when nonempty also returns a shortest witness (BFS).
std::pair<bool, std::optional<Word>> is_empty(const Nfa& a);

/// L(a) with words restricted to length <= k, by breadth-first exploration.
std::set<Word> members_upto(const Nfa& a, std::size_t k);

}  // namespace sepwsts::fa
