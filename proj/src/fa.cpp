// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/fa.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sepwsts::fa {

int Nfa::letter_index(const std::string& a) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == a) return static_cast<int>(i);
    throw input_error("unknown letter: " + a);
}

std::vector<int> Nfa::post(const std::set<int>& from, int letter) const {
    std::set<int> out;
    for (int s : from) {
        auto it = trans.find({s, letter});
        if (it != trans.end()) out.insert(it->second.begin(), it->second.end());
    }
    return {out.begin(), out.end()};
}

int Dfa::letter_index(const std::string& a) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == a) return static_cast<int>(i);
    throw input_error("unknown letter: " + a);
}

int Dfa::run(const Word& w) const {
    int s = initial;
    for (const auto& a : w) s = trans[static_cast<std::size_t>(s)][static_cast<std::size_t>(letter_index(a))];
    return s;
}

Nfa Dfa::as_nfa() const {
    Nfa n;
    n.states = states;
    n.alphabet = alphabet;
    n.initial = {initial};
    n.final = final;
    for (std::size_t s = 0; s < states.size(); ++s)
        for (std::size_t a = 0; a < alphabet.size(); ++a)
            n.trans[{static_cast<int>(s), static_cast<int>(a)}] = {trans[s][a]};
    return n;
}

bool accepts(const Nfa& a, const Word& w) {
    std::set<int> cur = a.initial;
    for (const auto& letter : w) {
        auto nxt = a.post(cur, a.letter_index(letter));
        cur = std::set<int>(nxt.begin(), nxt.end());
        if (cur.empty()) return false;
    }
    for (int s : cur)
        if (a.final.count(s)) return true;
    return false;
}

bool accepts(const Dfa& d, const Word& w) { return d.final.count(d.run(w)) != 0; }

namespace {
std::string subset_name(const Nfa& a, const std::set<int>& ss) {
    std::string name = "{";
    bool first = true;
    for (int s : ss) {
        if (!first) name += ",";
        name += a.states[static_cast<std::size_t>(s)];
        first = false;
    }
    return name + "}";
}
}  // namespace

Dfa determinize_fa(const Nfa& a) {
    Dfa d;
    d.alphabet = a.alphabet;
    std::map<std::set<int>, int> index;
    std::vector<std::set<int>> subsets;
    auto intern = [&](const std::set<int>& ss) {
        auto it = index.find(ss);
        if (it != index.end()) return it->second;
        int id = static_cast<int>(subsets.size());
        index.emplace(ss, id);
        subsets.push_back(ss);
        d.states.push_back(subset_name(a, ss));
        return id;
    };
    d.initial = intern(a.initial);
    std::deque<int> work{d.initial};
    while (!work.empty()) {
        int id = work.front();
        work.pop_front();
        if (static_cast<std::size_t>(id) >= d.trans.size()) d.trans.resize(static_cast<std::size_t>(id) + 1);
        d.trans[static_cast<std::size_t>(id)].resize(a.alphabet.size());
        for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
            auto nxt = a.post(subsets[static_cast<std::size_t>(id)], static_cast<int>(l));
            std::set<int> nset(nxt.begin(), nxt.end());
            bool fresh = !index.count(nset);
            int nid = intern(nset);
            if (fresh) work.push_back(nid);
            d.trans[static_cast<std::size_t>(id)][l] = nid;
        }
    }
    d.trans.resize(d.states.size());
    for (auto& row : d.trans) row.resize(a.alphabet.size());
    for (const auto& [ss, id] : index)
        for (int s : ss)
            if (a.final.count(s)) { d.final.insert(id); break; }
    return d;
}

Dfa complement_dfa(const Dfa& d) {
    Dfa out = d;
    out.final.clear();
    for (std::size_t s = 0; s < d.states.size(); ++s)
        if (!d.final.count(static_cast<int>(s))) out.final.insert(static_cast<int>(s));
    return out;
}

Nfa product_intersect(const Nfa& x, const Nfa& y) {
    if (x.alphabet != y.alphabet) throw input_error("product_intersect: alphabet mismatch");
    Nfa p;
    p.alphabet = x.alphabet;
    const int ny = static_cast<int>(y.states.size());
    auto pid = [&](int sx, int sy) { return sx * ny + sy; };
    for (const auto& sx : x.states)
        for (const auto& sy : y.states)
            p.states.push_back("(" + sx + "|" + sy + ")");
    for (int sx : x.initial)
        for (int sy : y.initial) p.initial.insert(pid(sx, sy));
    for (int sx : x.final)
        for (int sy : y.final) p.final.insert(pid(sx, sy));
    for (const auto& [kx, vx] : x.trans) {
        for (const auto& [ky, vy] : y.trans) {
            if (kx.second != ky.second) continue;
            std::vector<int> succs;
            for (int tx : vx)
                for (int ty : vy) succs.push_back(pid(tx, ty));
            std::sort(succs.begin(), succs.end());
            auto& slot = p.trans[{pid(kx.first, ky.first), kx.second}];
            slot.insert(slot.end(), succs.begin(), succs.end());
            std::sort(slot.begin(), slot.end());
            slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
        }
    }
    return p;
}

std::pair<bool, std::optional<Word>> is_empty(const Nfa& a) {
    std::map<int, std::pair<int, int>> parent;  // state -> (pred state, letter)
    std::deque<int> work;
    for (int s : a.initial) {
        parent.emplace(s, std::make_pair(-1, -1));
        work.push_back(s);
    }
    auto reconstruct = [&](int s) {
        Word w;
        while (parent.at(s).first != -1) {
            auto [p, l] = parent.at(s);
            w.push_back(a.alphabet[static_cast<std::size_t>(l)]);
            s = p;
        }
        std::reverse(w.begin(), w.end());
        return w;
    };
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        if (a.final.count(s)) return {false, reconstruct(s)};
        for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
            auto it = a.trans.find({s, static_cast<int>(l)});
            if (it == a.trans.end()) continue;
            for (int t : it->second) {
                if (parent.count(t)) continue;
                parent.emplace(t, std::make_pair(s, static_cast<int>(l)));
                work.push_back(t);
            }
        }
    }
    return {true, std::nullopt};
}

std::set<Word> members_upto(const Nfa& a, std::size_t k) {
    std::set<Word> out;
    std::deque<std::pair<Word, std::set<int>>> work;
    work.emplace_back(Word{}, a.initial);
    while (!work.empty()) {
        auto [w, cur] = work.front();
        work.pop_front();
        for (int s : cur)
            if (a.final.count(s)) { out.insert(w); break; }
        if (w.size() == k || cur.empty()) continue;
        for (std::size_t l = 0; l < a.alphabet.size(); ++l) {
            auto nxt = a.post(cur, static_cast<int>(l));
            if (nxt.empty()) continue;
            Word w2 = w;
            w2.push_back(a.alphabet[l]);
            work.emplace_back(std::move(w2), std::set<int>(nxt.begin(), nxt.end()));
        }
    }
    return out;
}

}  // namespace sepwsts::fa
