// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/vass.hpp"

#include <algorithm>
#include <deque>
#include <map>

namespace sepwsts {

int LabeledVASS::control_index(const std::string& c) const {
    for (std::size_t i = 0; i < controls.size(); ++i)
        if (controls[i] == c) return static_cast<int>(i);
    throw input_error("unknown control: " + c);
}

int LabeledVASS::letter_index(const std::string& a) const {
    for (std::size_t i = 0; i < alphabet.size(); ++i)
        if (alphabet[i] == a) return static_cast<int>(i);
    throw input_error("unknown letter: " + a);
}

void LabeledVASS::validate() const {
    auto check_vec = [&](const std::vector<Ent>& x, const char* what) {
        if (x.size() != dim) throw input_error(std::string(what) + ": dimension mismatch");
        for (Ent e : x)
            if (e < 0 || is_omega(e)) throw input_error(std::string(what) + ": entries must be finite naturals");
    };
    for (const auto& t : transitions) {
        if (t.src < 0 || t.src >= static_cast<int>(controls.size()) || t.dst < 0 ||
            t.dst >= static_cast<int>(controls.size()))
            throw input_error("transition control out of range");
        if (t.letter < 0 || t.letter >= static_cast<int>(alphabet.size()))
            throw input_error("transition letter out of range");
        check_vec(t.take, "take");
        check_vec(t.put, "put");
    }
    for (const auto& c : initial) {
        if (c.control < 0 || c.control >= static_cast<int>(controls.size()))
            throw input_error("initial control out of range");
        check_vec(c.marking, "initial marking");
    }
    for (const auto& c : final_basis) {
        if (c.control < 0 || c.control >= static_cast<int>(controls.size()))
            throw input_error("final basis control out of range");
        check_vec(c.marking, "final basis marking");
    }
}

bool LabeledVASS::is_deterministic() const {
    if (initial.size() != 1) return false;
    std::set<std::pair<int, int>> seen;
    for (const auto& t : transitions)
        if (!seen.insert({t.src, t.letter}).second) return false;
    return true;
}

bool LabeledVASS::config_leq(const VassConfig& a, const VassConfig& b) const {
    if (a.control != b.control) return false;
    for (std::size_t i = 0; i < dim; ++i)
        if (a.marking[i] > b.marking[i]) return false;
    return true;
}

bool LabeledVASS::is_final(const VassConfig& c) const {
    for (const auto& b : final_basis)
        if (config_leq(b, c)) return true;
    return false;
}

std::vector<VassConfig> post_concrete(const LabeledVASS& v, const std::vector<VassConfig>& configs,
                                      int letter) {
    std::vector<VassConfig> out;
    for (const auto& c : configs) {
        for (const auto& t : v.transitions) {
            if (t.letter != letter || t.src != c.control) continue;
            bool enabled = true;
            for (std::size_t i = 0; i < v.dim; ++i)
                if (c.marking[i] < t.take[i]) { enabled = false; break; }
            if (!enabled) continue;
            VassConfig succ{t.dst, c.marking};
            for (std::size_t i = 0; i < v.dim; ++i) succ.marking[i] += t.put[i] - t.take[i];
            out.push_back(std::move(succ));
        }
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

bool membership(const LabeledVASS& v, const Word& w) {
    std::vector<VassConfig> cur = v.initial;
    std::sort(cur.begin(), cur.end());
    cur.erase(std::unique(cur.begin(), cur.end()), cur.end());
    for (const auto& a : w) {
        cur = post_concrete(v, cur, v.letter_index(a));
        if (cur.empty()) return false;
    }
    for (const auto& c : cur)
        if (v.is_final(c)) return true;
    return false;
}

IdealCover post_omega(const LabeledVASS& v, const OmegaMarking& m, int letter) {
    if (m.vec.size() != v.dim) throw input_error("post_omega: dimension mismatch");
    const int q = v.control_index(m.control);
    std::vector<OmegaMarking> results;
    for (const auto& t : v.transitions) {
        if (t.letter != letter || t.src != q) continue;
        bool enabled = true;
        for (std::size_t i = 0; i < v.dim; ++i)
            if (!is_omega(m.vec[i]) && m.vec[i] < t.take[i]) { enabled = false; break; }
        if (!enabled) continue;
        OmegaMarking succ{v.controls[static_cast<std::size_t>(t.dst)], m.vec};
        for (std::size_t i = 0; i < v.dim; ++i)
            succ.vec[i] = ent_add(ent_sub(succ.vec[i], t.take[i]), t.put[i]);
        results.push_back(std::move(succ));
    }
    return normalize(results);
}

namespace {

// pump every coordinate where `m` strictly exceeds a dominated path ancestor
// with the same control; repeat until no such ancestor remains
void accelerate(const std::vector<KMNode>& tree, int parent, OmegaMarking& m) {
    bool changed = true;
    while (changed) {
        changed = false;
        for (int a = parent; a != -1; a = tree[static_cast<std::size_t>(a)].parent) {
            const OmegaMarking& anc = tree[static_cast<std::size_t>(a)].label;
            if (anc.control != m.control || anc == m) continue;
            bool below = true;
            for (std::size_t i = 0; i < m.vec.size(); ++i)
                if (anc.vec[i] > m.vec[i]) { below = false; break; }
            if (!below) continue;
            for (std::size_t i = 0; i < m.vec.size(); ++i)
                if (m.vec[i] > anc.vec[i] && !is_omega(m.vec[i])) {
                    m.vec[i] = omega;
                    changed = true;
                }
        }
    }
}

}  // namespace

KMResult karp_miller_from(const LabeledVASS& v, const std::vector<OmegaMarking>& roots) {
    KMResult res;
    std::deque<int> work;
    for (const auto& r : roots) {
        if (r.vec.size() != v.dim) throw input_error("karp_miller_from: root dimension mismatch");
        res.tree.push_back({r, -1, -1});
        work.push_back(static_cast<int>(res.tree.size()) - 1);
    }
    auto subsumed = [&](const OmegaMarking& m) {
        for (const auto& node : res.tree)
            if (omega_leq(m, node.label)) return true;
        return false;
    };
    while (!work.empty()) {
        const int node = work.front();
        work.pop_front();
        for (int a = 0; a < static_cast<int>(v.alphabet.size()); ++a) {
            const IdealCover post = post_omega(v, res.tree[static_cast<std::size_t>(node)].label, a);
            for (OmegaMarking child : post.elements) {
                accelerate(res.tree, node, child);
                const bool skip = subsumed(child);
                res.tree.push_back({std::move(child), node, a});
                if (!skip) work.push_back(static_cast<int>(res.tree.size()) - 1);
            }
        }
    }
    std::vector<OmegaMarking> labels;
    labels.reserve(res.tree.size());
    for (const auto& node : res.tree) labels.push_back(node.label);
    res.cover = normalize(labels);
    return res;
}

KMResult karp_miller(const LabeledVASS& v) {
    std::vector<OmegaMarking> roots;
    for (const auto& c : v.initial) roots.push_back(v.config_marking(c));
    return karp_miller_from(v, roots);
}

std::string InvariantVerdict::kind_name() const {
    switch (kind) {
        case Kind::Ok: return "ok";
        case Kind::ViolationInit: return "iiI";
        case Kind::ViolationFinal: return "iiF";
        case Kind::ViolationSucc: return "iiSucc";
    }
    return "?";
}

InvariantVerdict check_invariant(const LabeledVASS& v, const IdealCover& x) {
    for (const auto& c : v.initial) {
        if (!covers_point(x, v.config_marking(c)))
            return {InvariantVerdict::Kind::ViolationInit,
                    "initial configuration " + to_string(v.config_marking(c)) + " not covered"};
    }
    for (const auto& e : x.elements)
        for (const auto& b : v.final_basis)
            if (ideal_meets_up(e, v.config_marking(b)))
                return {InvariantVerdict::Kind::ViolationFinal,
                        "element " + to_string(e) + " meets final basis " +
                            to_string(v.config_marking(b))};
    for (const auto& e : x.elements)
        for (int a = 0; a < static_cast<int>(v.alphabet.size()); ++a)
            if (!cover_leq(post_omega(v, e, a), x))
                return {InvariantVerdict::Kind::ViolationSucc,
                        "post of " + to_string(e) + " on letter " +
                            v.alphabet[static_cast<std::size_t>(a)] + " escapes the cover"};
    return {};
}

namespace {
// antichain of minimal configurations
std::vector<VassConfig> minimize_basis(const LabeledVASS& v, std::vector<VassConfig> basis) {
    std::sort(basis.begin(), basis.end());
    basis.erase(std::unique(basis.begin(), basis.end()), basis.end());
    std::vector<VassConfig> keep;
    for (const auto& c : basis) {
        bool dominated = false;
        for (const auto& other : basis)
            if (!(other == c) && v.config_leq(other, c)) { dominated = true; break; }
        if (!dominated) keep.push_back(c);
    }
    return keep;
}
}  // namespace

BackwardResult backward_covers(const LabeledVASS& v, const std::vector<VassConfig>& target) {
    std::vector<VassConfig> basis = minimize_basis(v, target);
    for (;;) {
        std::vector<VassConfig> next = basis;
        for (const auto& b : basis) {
            for (const auto& t : v.transitions) {
                if (t.dst != b.control) continue;
                // m fires t and covers b afterwards iff m >= max(take, b + take - put)
                VassConfig pre{t.src, std::vector<Ent>(v.dim)};
                for (std::size_t i = 0; i < v.dim; ++i)
                    pre.marking[i] = std::max(t.take[i], b.marking[i] + t.take[i] - t.put[i]);
                next.push_back(std::move(pre));
            }
        }
        next = minimize_basis(v, std::move(next));
        if (next == basis) break;
        basis = std::move(next);
    }
    BackwardResult res;
    res.pre_basis = std::move(basis);
    for (const auto& c : v.initial)
        for (const auto& b : res.pre_basis)
            if (v.config_leq(b, c)) { res.covered = true; break; }
    return res;
}

LabeledVASS make_product(const LabeledVASS& v1, const LabeledVASS& v2) {
    std::set<std::string> a1(v1.alphabet.begin(), v1.alphabet.end());
    std::set<std::string> a2(v2.alphabet.begin(), v2.alphabet.end());
    if (a1 != a2) throw input_error("make_product: alphabets differ");
    LabeledVASS p;
    p.dim = v1.dim + v2.dim;
    p.alphabet = v1.alphabet;
    const int n2 = static_cast<int>(v2.controls.size());
    auto pid = [&](int c1, int c2) { return c1 * n2 + c2; };
    for (const auto& c1 : v1.controls)
        for (const auto& c2 : v2.controls) p.controls.push_back(pair_control(c1, c2));
    auto joined = [&](const std::vector<Ent>& x, const std::vector<Ent>& y) {
        std::vector<Ent> out = x;
        out.insert(out.end(), y.begin(), y.end());
        return out;
    };
    for (const auto& t1 : v1.transitions)
        for (const auto& t2 : v2.transitions) {
            if (v1.alphabet[static_cast<std::size_t>(t1.letter)] !=
                v2.alphabet[static_cast<std::size_t>(t2.letter)])
                continue;
            p.transitions.push_back({pid(t1.src, t2.src), t1.letter, joined(t1.take, t2.take),
                                     joined(t1.put, t2.put), pid(t1.dst, t2.dst)});
        }
    for (const auto& c1 : v1.initial)
        for (const auto& c2 : v2.initial)
            p.initial.push_back({pid(c1.control, c2.control), joined(c1.marking, c2.marking)});
    for (const auto& b1 : v1.final_basis)
        for (const auto& b2 : v2.final_basis)
            p.final_basis.push_back({pid(b1.control, b2.control), joined(b1.marking, b2.marking)});
    return p;
}

std::set<Word> vass_members_upto(const LabeledVASS& v, std::size_t k) {
    std::set<Word> out;
    std::deque<std::pair<Word, std::vector<VassConfig>>> work;
    std::vector<VassConfig> init = v.initial;
    std::sort(init.begin(), init.end());
    init.erase(std::unique(init.begin(), init.end()), init.end());
    work.emplace_back(Word{}, std::move(init));
    while (!work.empty()) {
        auto [w, cur] = work.front();
        work.pop_front();
        for (const auto& c : cur)
            if (v.is_final(c)) { out.insert(w); break; }
        if (w.size() == k || cur.empty()) continue;
        for (int a = 0; a < static_cast<int>(v.alphabet.size()); ++a) {
            auto nxt = post_concrete(v, cur, a);
            if (nxt.empty()) continue;
            Word w2 = w;
            w2.push_back(v.alphabet[static_cast<std::size_t>(a)]);
            work.emplace_back(std::move(w2), std::move(nxt));
        }
    }
    return out;
}

std::optional<Word> find_witness(const LabeledVASS& v, const std::vector<VassConfig>& target,
                                 const std::vector<VassConfig>& pre_basis) {
    auto in_up = [&](const VassConfig& c, const std::vector<VassConfig>& basis) {
        for (const auto& b : basis)
            if (v.config_leq(b, c)) return true;
        return false;
    };
    struct SearchNode {
        VassConfig config;
        int parent;
        int letter;
    };
    std::vector<SearchNode> nodes;
    std::deque<int> work;
    std::vector<VassConfig> seen;  // antichain of maximal visited configurations
    auto visit = [&](VassConfig c, int parent, int letter) {
        if (!in_up(c, pre_basis)) return;  // cannot reach the target from here
        for (const auto& s : seen)
            if (v.config_leq(c, s)) return;  // a dominating configuration was already explored
        std::erase_if(seen, [&](const VassConfig& s) { return v.config_leq(s, c); });
        seen.push_back(c);
        nodes.push_back({std::move(c), parent, letter});
        work.push_back(static_cast<int>(nodes.size()) - 1);
    };
    for (const auto& c : v.initial) visit(c, -1, -1);
    while (!work.empty()) {
        const int id = work.front();
        work.pop_front();
        if (in_up(nodes[static_cast<std::size_t>(id)].config, target)) {
            Word w;
            for (int n = id; nodes[static_cast<std::size_t>(n)].parent != -1;
                 n = nodes[static_cast<std::size_t>(n)].parent)
                w.push_back(v.alphabet[static_cast<std::size_t>(nodes[static_cast<std::size_t>(n)].letter)]);
            std::reverse(w.begin(), w.end());
            return w;
        }
        for (int a = 0; a < static_cast<int>(v.alphabet.size()); ++a) {
            auto succs = post_concrete(v, {nodes[static_cast<std::size_t>(id)].config}, a);
            for (auto& s : succs) visit(std::move(s), id, a);
        }
    }
    return std::nullopt;
}

}  // namespace sepwsts
