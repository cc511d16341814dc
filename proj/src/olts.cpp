// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/olts.hpp"

#include <algorithm>
#include <deque>

namespace sepwsts {

namespace {
const std::vector<int> kNoSuccessors{};
}

int ExplicitOLTS::state_index(const std::string& s) const {
    for (std::size_t i = 0; i < states.size(); ++i)
        if (states[i] == s) return static_cast<int>(i);
    throw input_error("unknown state: " + s);
}

int ExplicitOLTS::letter_index(const std::string& a) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == a) return static_cast<int>(i);
    throw input_error("unknown letter: " + a);
}

const std::vector<int>& ExplicitOLTS::successors(int s, int letter) const {
    auto it = trans.find({s, letter});
    return it == trans.end() ? kNoSuccessors : it->second;
}

void ExplicitOLTS::validate() const {
    const int n = static_cast<int>(states.size());
    if (leq.size() != states.size())
        throw input_error("leq relation size does not match state count");
    for (const auto& row : leq)
        if (row.size() != states.size()) throw input_error("leq row size mismatch");
    for (int s = 0; s < n; ++s)
        if (!less_eq(s, s)) throw input_error("leq not reflexive at state " + states[static_cast<std::size_t>(s)]);
    for (int s = 0; s < n; ++s)
        for (int t = 0; t < n; ++t) {
            if (!less_eq(s, t)) continue;
            for (int r = 0; r < n; ++r)
                if (less_eq(t, r) && !less_eq(s, r))
                    throw input_error("leq not transitive via " + states[static_cast<std::size_t>(s)] + " <= " +
                                      states[static_cast<std::size_t>(t)] + " <= " + states[static_cast<std::size_t>(r)]);
        }
    auto check_state = [&](int s) {
        if (s < 0 || s >= n) throw input_error("state index out of range");
    };
    for (int s : initial) check_state(s);
    for (int s : final) check_state(s);
    for (const auto& [key, succs] : trans) {
        check_state(key.first);
        if (key.second < 0 || key.second >= static_cast<int>(alphabet.size()))
            throw input_error("letter index out of range");
        for (int t : succs) check_state(t);
    }
}

bool ExplicitOLTS::is_deterministic() const {
    if (initial.size() != 1) return false;
    for (std::size_t s = 0; s < states.size(); ++s)
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            if (successors(static_cast<int>(s), static_cast<int>(a)).size() != 1) return false;
    return true;
}

std::string CompatViolation::describe(const ExplicitOLTS& u) const {
    if (kind == Kind::FinalClosure) {
        return std::string("final set not ") +
               (u.direction == Direction::Upward ? "upward" : "downward") + "-closed: " +
               u.states[static_cast<std::size_t>(s)] + " <= " + u.states[static_cast<std::size_t>(t)];
    }
    return "simulation violation at (" + u.states[static_cast<std::size_t>(s)] + " <= " +
           u.states[static_cast<std::size_t>(t)] + ", " + u.alphabet[static_cast<std::size_t>(letter)] +
           "): successor " + u.states[static_cast<std::size_t>(succ)] + " unmatched";
}

CompatReport check_compatible(const ExplicitOLTS& u) {
    CompatReport report;
    const int n = static_cast<int>(u.states.size());
    const bool up = u.direction == Direction::Upward;
    for (int s = 0; s < n; ++s) {
        for (int t = 0; t < n; ++t) {
            if (s == t || !u.less_eq(s, t)) continue;
            // closure of finals: upward keeps F closed above, downward below
            const int small = s, large = t;
            if (up && u.final.count(small) && !u.final.count(large))
                report.violations.push_back({CompatViolation::Kind::FinalClosure, small, large, -1, -1});
            if (!up && u.final.count(large) && !u.final.count(small))
                report.violations.push_back({CompatViolation::Kind::FinalClosure, small, large, -1, -1});
            for (int a = 0; a < static_cast<int>(u.alphabet.size()); ++a) {
                // upward: every move of the smaller is matched above by the larger;
                // downward: every move of the larger is matched below by the smaller
                const auto& moves = u.successors(up ? small : large, a);
                const auto& matches = u.successors(up ? large : small, a);
                for (int m : moves) {
                    bool matched = false;
                    for (int m2 : matches)
                        if (up ? u.less_eq(m, m2) : u.less_eq(m2, m)) { matched = true; break; }
                    if (!matched)
                        report.violations.push_back({CompatViolation::Kind::Simulation, small, large, a, m});
                }
            }
        }
    }
    return report;
}

ExplicitOLTS product(const ExplicitOLTS& u1, const ExplicitOLTS& u2) {
    if (u1.alphabet != u2.alphabet) throw input_error("product: alphabet mismatch");
    if (u1.direction != u2.direction) throw input_error("product: direction mismatch");
    ExplicitOLTS p;
    p.alphabet = u1.alphabet;
    p.direction = u1.direction;
    const int n2 = static_cast<int>(u2.states.size());
    auto pid = [&](int s1, int s2) { return s1 * n2 + s2; };
    for (const auto& s1 : u1.states)
        for (const auto& s2 : u2.states) p.states.push_back("(" + s1 + "|" + s2 + ")");
    p.leq.assign(p.states.size(), std::vector<bool>(p.states.size(), false));
    for (int s1 = 0; s1 < static_cast<int>(u1.states.size()); ++s1)
        for (int s2 = 0; s2 < n2; ++s2)
            for (int t1 = 0; t1 < static_cast<int>(u1.states.size()); ++t1)
                for (int t2 = 0; t2 < n2; ++t2)
                    if (u1.less_eq(s1, t1) && u2.less_eq(s2, t2))
                        p.leq[static_cast<std::size_t>(pid(s1, s2))][static_cast<std::size_t>(pid(t1, t2))] = true;
    for (int s1 : u1.initial)
        for (int s2 : u2.initial) p.initial.insert(pid(s1, s2));
    for (int s1 : u1.final)
        for (int s2 : u2.final) p.final.insert(pid(s1, s2));
    for (const auto& [k1, v1] : u1.trans)
        for (const auto& [k2, v2] : u2.trans) {
            if (k1.second != k2.second) continue;
            auto& slot = p.trans[{pid(k1.first, k2.first), k1.second}];
            for (int t1 : v1)
                for (int t2 : v2) slot.push_back(pid(t1, t2));
            std::sort(slot.begin(), slot.end());
            slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
        }
    return p;
}

ExplicitOLTS reverse(const ExplicitOLTS& u) {
    ExplicitOLTS r;
    r.states = u.states;
    r.leq = u.leq;
    r.alphabet = u.alphabet;
    r.direction = u.direction == Direction::Upward ? Direction::Downward : Direction::Upward;
    r.initial = u.final;
    // new finals: the closure of the old initial set, downward for an upward
    // input and upward for a downward input
    const bool up = u.direction == Direction::Upward;
    for (int i : u.initial)
        for (int s = 0; s < static_cast<int>(u.states.size()); ++s)
            if (up ? u.less_eq(s, i) : u.less_eq(i, s)) r.final.insert(s);
    // flipped transitions, widened to sources simulated by the original target
    for (const auto& [key, succs] : u.trans) {
        const auto& [src, letter] = key;
        for (int tgt : succs)
            for (int s = 0; s < static_cast<int>(u.states.size()); ++s)
                if (up ? u.less_eq(s, tgt) : u.less_eq(tgt, s)) {
                    auto& slot = r.trans[{s, letter}];
                    slot.push_back(src);
                }
    }
    for (auto& [key, succs] : r.trans) {
        std::sort(succs.begin(), succs.end());
        succs.erase(std::unique(succs.begin(), succs.end()), succs.end());
    }
    return r;
}

ExplicitOLTS complement(const ExplicitOLTS& u) {
    if (!u.is_deterministic())
        throw precondition_error("complement: input must be deterministic and total");
    ExplicitOLTS c = u;
    c.direction = u.direction == Direction::Upward ? Direction::Downward : Direction::Upward;
    c.final.clear();
    for (int s = 0; s < static_cast<int>(u.states.size()); ++s)
        if (!u.final.count(s)) c.final.insert(s);
    return c;
}

namespace {
// maximal elements of a set of states, as a canonical sorted antichain
std::vector<int> maximal(const ExplicitOLTS& u, std::vector<int> ss) {
    std::sort(ss.begin(), ss.end());
    ss.erase(std::unique(ss.begin(), ss.end()), ss.end());
    std::vector<int> keep;
    for (int s : ss) {
        bool dominated = false;
        for (int t : ss)
            if (s != t && u.less_eq(s, t) && !(u.less_eq(t, s) && t > s)) {
                // among order-equivalent states keep the smallest index
                dominated = true;
                break;
            }
        if (!dominated) keep.push_back(s);
    }
    return keep;
}

std::string antichain_name(const ExplicitOLTS& u, const std::vector<int>& ac) {
    std::string name = "{";
    for (std::size_t i = 0; i < ac.size(); ++i) {
        if (i) name += ",";
        name += u.states[static_cast<std::size_t>(ac[i])];
    }
    return name + "}";
}
}  // namespace

ExplicitOLTS determinize_fb(const ExplicitOLTS& u) {
    if (u.direction != Direction::Upward)
        throw precondition_error("determinize_fb: input must be upward-direction");
    ExplicitOLTS d;
    d.alphabet = u.alphabet;
    d.direction = Direction::Upward;
    std::map<std::vector<int>, int> index;
    std::vector<std::vector<int>> chains;
    auto intern = [&](const std::vector<int>& ac) {
        auto it = index.find(ac);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(chains.size());
        index.emplace(ac, id);
        chains.push_back(ac);
        d.states.push_back(antichain_name(u, ac));
        return id;
    };
    int init = intern(maximal(u, {u.initial.begin(), u.initial.end()}));
    d.initial = {init};
    std::deque<int> work{init};
    while (!work.empty()) {
        int id = work.front();
        work.pop_front();
        for (int a = 0; a < static_cast<int>(u.alphabet.size()); ++a) {
            std::vector<int> post;
            for (int s : chains[static_cast<std::size_t>(id)]) {
                const auto& succ = u.successors(s, a);
                post.insert(post.end(), succ.begin(), succ.end());
            }
            auto ac = maximal(u, std::move(post));
            bool fresh = !index.count(ac);
            int nid = intern(ac);
            if (fresh) work.push_back(nid);
            d.trans[{id, a}] = {nid};
        }
    }
    // cover order: every element dominated by some element of the other chain
    auto chain_leq = [&](const std::vector<int>& x, const std::vector<int>& y) {
        for (int s : x) {
            bool covered = false;
            for (int t : y)
                if (u.less_eq(s, t)) { covered = true; break; }
            if (!covered) return false;
        }
        return true;
    };
    d.leq.assign(d.states.size(), std::vector<bool>(d.states.size(), false));
    for (std::size_t x = 0; x < chains.size(); ++x)
        for (std::size_t y = 0; y < chains.size(); ++y)
            d.leq[x][y] = chain_leq(chains[x], chains[y]);
    for (std::size_t x = 0; x < chains.size(); ++x)
        for (int s : chains[x]) {
            bool fin = false;
            for (int f : u.final)
                if (u.less_eq(f, s)) { fin = true; break; }
            if (fin) { d.final.insert(static_cast<int>(x)); break; }
        }
    return d;
}

ExplicitOLTS prune_nonminimal(const ExplicitOLTS& u) {
    if (u.direction != Direction::Downward)
        throw precondition_error("prune_nonminimal: input must be downward-direction");
    ExplicitOLTS p = u;
    for (auto& [key, succs] : p.trans) {
        std::vector<int> keep;
        for (int s : succs) {
            bool dominated = false;
            for (int t : succs)
                if (s != t && u.less_eq(t, s) && !(u.less_eq(s, t) && t > s)) { dominated = true; break; }
            if (!dominated) keep.push_back(s);
        }
        succs = std::move(keep);
    }
    return p;
}

BoundedLangReport members_upto(const ExplicitOLTS& u, std::size_t k) {
    BoundedLangReport report;
    report.max_len = k;
    std::deque<std::pair<Word, std::set<int>>> work;
    work.emplace_back(Word{}, u.initial);
    while (!work.empty()) {
        auto [w, cur] = work.front();
        work.pop_front();
        for (int s : cur)
            if (u.final.count(s)) { report.words.insert(w); break; }
        if (w.size() == k || cur.empty()) continue;
        for (int a = 0; a < static_cast<int>(u.alphabet.size()); ++a) {
            std::set<int> nxt;
            for (int s : cur) {
                const auto& succ = u.successors(s, a);
                nxt.insert(succ.begin(), succ.end());
            }
            if (nxt.empty()) continue;
            Word w2 = w;
            w2.push_back(u.alphabet[static_cast<std::size_t>(a)]);
            work.emplace_back(std::move(w2), std::move(nxt));
        }
    }
    return report;
}

bool word_leq_dwsts(const ExplicitOLTS& d, const Word& w, const Word& w2) {
    if (!d.is_deterministic())
        throw precondition_error("word_leq_dwsts: input must be deterministic");
    auto run = [&](const Word& word) {
        int s = *d.initial.begin();
        for (const auto& a : word) s = d.successors(s, d.letter_index(a)).front();
        return s;
    };
    return d.less_eq(run(w), run(w2));
}

bool nerode_leq_bounded(const std::function<bool(const Word&)>& member,
                        const std::vector<std::string>& alphabet, const Word& w,
                        const Word& w2, std::size_t k) {
    std::deque<Word> suffixes{Word{}};
    while (!suffixes.empty()) {
        Word u = suffixes.front();
        suffixes.pop_front();
        Word wu = w, w2u = w2;
        wu.insert(wu.end(), u.begin(), u.end());
        w2u.insert(w2u.end(), u.begin(), u.end());
        if (member(wu) && !member(w2u)) return false;
        if (u.size() < k)
            for (const auto& a : alphabet) {
                Word u2 = u;
                u2.push_back(a);
                suffixes.push_back(std::move(u2));
            }
    }
    return true;
}

}  // namespace sepwsts
