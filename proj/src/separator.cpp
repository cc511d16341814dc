// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/separator.hpp"

#include <algorithm>
#include <deque>

namespace sepwsts {

namespace {

// Extended payload: an ideal of the product order, where the second factor
// may be the bottom adjoined to the (completed) deterministic side.
struct ExtIdeal {
    OmegaMarking first;
    OmegaMarking second;  // ignored when dead
    bool dead = false;
};

ExtIdeal split_state(const LabeledVASS& v1, const SeparatorState& s) {
    auto [f, g] = split_product(s.payload, v1.dim);
    return {f, g, s.v2_dead};
}

// Inclusion of extended ideals: the bottom sits below every second factor.
bool ext_leq(const ExtIdeal& a, const ExtIdeal& b) {
    if (!omega_leq(a.first, b.first)) return false;
    if (a.dead) return true;
    if (b.dead) return false;
    return omega_leq(a.second, b.second);
}

OmegaMarking bottom_marking(const LabeledVASS& v2) {
    return {kBottomControl, std::vector<Ent>(v2.dim, 0)};
}

// The unique v2 transition for (control, letter), if any.
const VassTransition* v2_transition(const LabeledVASS& v2, int control, int letter) {
    for (const auto& t : v2.transitions)
        if (t.src == control && t.letter == letter) return &t;
    return nullptr;
}

// Ideal-level step of the completed deterministic side: either the unique
// enabled successor ideal or bottom.
std::optional<OmegaMarking> v2_ideal_step(const LabeledVASS& v2, const OmegaMarking& j2,
                                          int letter) {
    const VassTransition* t = v2_transition(v2, v2.control_index(j2.control), letter);
    if (t == nullptr) return std::nullopt;
    for (std::size_t i = 0; i < v2.dim; ++i)
        if (!is_omega(j2.vec[i]) && j2.vec[i] < t->take[i]) return std::nullopt;
    OmegaMarking succ{v2.controls[static_cast<std::size_t>(t->dst)], j2.vec};
    for (std::size_t i = 0; i < v2.dim; ++i)
        succ.vec[i] = ent_add(ent_sub(succ.vec[i], t->take[i]), t->put[i]);
    return succ;
}

// All ideal posts of an extended payload in the completed product: either the
// synchronized posts (second side alive) or v1's posts paired with bottom.
// `letter` indexes v1's alphabet, which is also the product's.
std::vector<ExtIdeal> ext_posts(const LabeledVASS& v1, const LabeledVASS& v2,
                                const LabeledVASS& product, const ExtIdeal& s, int letter) {
    std::vector<ExtIdeal> out;
    const int v2_letter = v2.letter_index(v1.alphabet[static_cast<std::size_t>(letter)]);
    if (!s.dead) {
        if (auto j2succ = v2_ideal_step(v2, s.second, v2_letter)) {
            for (const auto& joint :
                 post_omega(product, join_product(s.first, s.second), letter).elements) {
                auto [f, g] = split_product(joint, v1.dim);
                out.push_back({f, g, false});
            }
            return out;
        }
    }
    // second side is (or goes) under: v1 continues alone
    for (const auto& k1 : post_omega(v1, s.first, letter).elements)
        out.push_back({k1, {}, true});
    return out;
}

}  // namespace

fa::Nfa SeparatorNfa::as_nfa() const {
    fa::Nfa n;
    n.alphabet = alphabet;
    for (std::size_t i = 0; i < states.size(); ++i) {
        n.states.push_back(std::to_string(i));
        if (states[i].final_) n.final.insert(static_cast<int>(i));
    }
    n.initial.insert(initial.begin(), initial.end());
    n.trans = trans;
    return n;
}

SeparatorNfa build_separator(const LabeledVASS& v1, const LabeledVASS& v2, const IdealCover& q) {
    const LabeledVASS product = make_product(v1, v2);
    const InvariantVerdict verdict = check_invariant(product, q);
    if (!verdict.ok())
        throw precondition_error("build_separator: cover is not an inductive invariant of the product (" +
                                 verdict.kind_name() + "): " + verdict.detail);

    // dead part: v1 explored from the first factors of q, paired with bottom
    std::vector<OmegaMarking> seeds;
    for (const auto& e : q.elements) seeds.push_back(split_product(e, v1.dim).first);
    const IdealCover dead_cover =
        seeds.empty() ? IdealCover{} : karp_miller_from(v1, seeds).cover;

    SeparatorNfa a;
    a.alphabet = v1.alphabet;
    std::vector<ExtIdeal> payloads;
    for (const auto& e : q.elements) {
        auto [f, g] = split_product(e, v1.dim);
        a.states.push_back({e, false, false});
        payloads.push_back({f, g, false});
    }
    for (const auto& d : dead_cover.elements) {
        a.states.push_back({join_product(d, bottom_marking(v2)), true, false});
        payloads.push_back({d, {}, true});
    }

    for (std::size_t i = 0; i < a.states.size(); ++i) {
        const auto& p = payloads[i];
        for (const auto& b : v1.final_basis)
            if (ideal_meets_up(p.first, v1.config_marking(b))) {
                a.states[i].final_ = true;
                break;
            }
    }
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        if (payloads[i].dead) continue;  // initial product configurations have an alive second side
        bool is_initial = false;
        for (const auto& c1 : v1.initial) {
            for (const auto& c2 : v2.initial) {
                ExtIdeal init{v1.config_marking(c1), v2.config_marking(c2), false};
                if (ext_leq(init, payloads[i])) { is_initial = true; break; }
            }
            if (is_initial) break;
        }
        if (is_initial) a.initial.push_back(static_cast<int>(i));
    }

    for (std::size_t i = 0; i < a.states.size(); ++i)
        for (int letter = 0; letter < static_cast<int>(a.alphabet.size()); ++letter) {
            const auto posts = ext_posts(v1, v2, product, payloads[i], letter);
            std::vector<int> succs;
            for (std::size_t j = 0; j < a.states.size(); ++j)
                for (const auto& k : posts)
                    if (ext_leq(k, payloads[j])) {
                        succs.push_back(static_cast<int>(j));
                        break;
                    }
            if (!succs.empty()) a.trans[{static_cast<int>(i), letter}] = std::move(succs);
        }

    // keep every invariant element; drop only bottom states the automaton
    // cannot reach
    std::vector<bool> reach(a.states.size(), false);
    std::deque<int> work;
    for (int s : a.initial) {
        reach[static_cast<std::size_t>(s)] = true;
        work.push_back(s);
    }
    while (!work.empty()) {
        int s = work.front();
        work.pop_front();
        for (int letter = 0; letter < static_cast<int>(a.alphabet.size()); ++letter) {
            auto it = a.trans.find({s, letter});
            if (it == a.trans.end()) continue;
            for (int t : it->second)
                if (!reach[static_cast<std::size_t>(t)]) {
                    reach[static_cast<std::size_t>(t)] = true;
                    work.push_back(t);
                }
        }
    }
    std::vector<int> remap(a.states.size(), -1);
    SeparatorNfa pruned;
    pruned.alphabet = a.alphabet;
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        if (a.states[i].v2_dead && !reach[i]) continue;
        remap[i] = static_cast<int>(pruned.states.size());
        pruned.states.push_back(a.states[i]);
    }
    for (int s : a.initial) pruned.initial.push_back(remap[static_cast<std::size_t>(s)]);
    for (const auto& [key, succs] : a.trans) {
        if (remap[static_cast<std::size_t>(key.first)] == -1) continue;
        std::vector<int> out;
        for (int t : succs)
            if (remap[static_cast<std::size_t>(t)] != -1) out.push_back(remap[static_cast<std::size_t>(t)]);
        if (!out.empty()) pruned.trans[{remap[static_cast<std::size_t>(key.first)], key.second}] = std::move(out);
    }
    return pruned;
}

SeparationOutcome separate(const LabeledVASS& v1, const LabeledVASS& v2) {
    if (!v2.is_deterministic())
        throw precondition_error(
            "separate: second net must be deterministic (one initial configuration, at most one "
            "transition per control and letter); determinize the model or revise it");
    const LabeledVASS product = make_product(v1, v2);
    const BackwardResult bw = backward_covers(product, product.final_basis);
    SeparationOutcome outcome;
    if (bw.covered) {
        auto w = find_witness(product, product.final_basis, bw.pre_basis);
        if (!w) throw std::logic_error("separate: certified witness not found");
        if (!membership(v1, *w) || !membership(v2, *w))
            throw std::logic_error("separate: witness failed re-validation");
        outcome.witness = std::move(w);
        return outcome;
    }
    outcome.separator = build_separator(v1, v2, karp_miller(product).cover);
    return outcome;
}

LabeledVASS product_with_dfa(const LabeledVASS& v, const fa::Dfa& d,
                             std::vector<VassConfig>* joint_targets) {
    LabeledVASS p;
    p.dim = v.dim;
    p.alphabet = v.alphabet;
    const int nd = static_cast<int>(d.states.size());
    auto pid = [&](int c, int s) { return c * nd + s; };
    for (const auto& c : v.controls)
        for (const auto& s : d.states) p.controls.push_back(pair_control(c, s));
    std::vector<int> letter_map(v.alphabet.size());
    for (std::size_t a = 0; a < v.alphabet.size(); ++a)
        letter_map[a] = d.letter_index(v.alphabet[a]);
    for (const auto& t : v.transitions)
        for (int s = 0; s < nd; ++s)
            p.transitions.push_back(
                {pid(t.src, s), t.letter, t.take, t.put,
                 pid(t.dst, d.trans[static_cast<std::size_t>(s)]
                                   [static_cast<std::size_t>(letter_map[static_cast<std::size_t>(t.letter)])])});
    for (const auto& c : v.initial) p.initial.push_back({pid(c.control, d.initial), c.marking});
    if (joint_targets) {
        joint_targets->clear();
        for (const auto& b : v.final_basis)
            for (int f : d.final) joint_targets->push_back({pid(b.control, f), b.marking});
    }
    // the net's own final basis is not meaningful for the product; the caller
    // works with joint_targets
    return p;
}

namespace {
// determinization of the separator over a prescribed alphabet; letters the
// automaton does not know lead to the sink subset
fa::Dfa determinize_over(const SeparatorNfa& a, const std::vector<std::string>& alphabet) {
    fa::Nfa n = a.as_nfa();
    for (const auto& letter : alphabet)
        if (std::find(n.alphabet.begin(), n.alphabet.end(), letter) == n.alphabet.end())
            n.alphabet.push_back(letter);
    return fa::determinize_fa(n);
}
}  // namespace

SeparationReport verify_separator(const LabeledVASS& v1, const LabeledVASS& v2,
                                  const SeparatorNfa& a) {
    SeparationReport report;
    {
        const fa::Dfa comp = fa::complement_dfa(determinize_over(a, v1.alphabet));
        std::vector<VassConfig> targets;
        const LabeledVASS prod = product_with_dfa(v1, comp, &targets);
        const BackwardResult bw = backward_covers(prod, targets);
        report.inclusion_ok = !bw.covered;
        if (bw.covered) report.inclusion_counterexample = find_witness(prod, targets, bw.pre_basis);
    }
    {
        const fa::Dfa dfa = determinize_over(a, v2.alphabet);
        std::vector<VassConfig> targets;
        const LabeledVASS prod = product_with_dfa(v2, dfa, &targets);
        const BackwardResult bw = backward_covers(prod, targets);
        report.disjoint_ok = !bw.covered;
        if (bw.covered) report.disjoint_counterexample = find_witness(prod, targets, bw.pre_basis);
    }
    return report;
}

SimulationReport check_simulation_properties(const LabeledVASS& v1, const LabeledVASS& v2,
                                             const SeparatorNfa& a,
                                             const std::vector<Word>& sample_words) {
    if (!v2.is_deterministic())
        throw precondition_error("check_simulation_properties: second net must be deterministic");
    const LabeledVASS product = make_product(v1, v2);
    std::vector<ExtIdeal> payloads;
    payloads.reserve(a.states.size());
    for (const auto& s : a.states) payloads.push_back(split_state(v1, s));
    const fa::Nfa nfa = a.as_nfa();

    SimulationReport report;
    for (const auto& w : sample_words) {
        SimulationCheck check;
        check.word = w;

        std::vector<VassConfig> prod_reach = product.initial;
        std::set<int> a_reach = nfa.initial;
        std::vector<VassConfig> v2_reach = v2.initial;
        for (const auto& letter : w) {
            prod_reach = post_concrete(product, prod_reach, product.letter_index(letter));
            auto nxt = nfa.post(a_reach, nfa.letter_index(letter));
            a_reach = std::set<int>(nxt.begin(), nxt.end());
            v2_reach = post_concrete(v2, v2_reach, v2.letter_index(letter));
        }

        for (const auto& pc : prod_reach) {
            auto [f, g] = split_product(product.config_marking(pc), v1.dim);
            const ExtIdeal point{f, g, false};
            bool dominated = false;
            for (int s : a_reach)
                if (ext_leq(point, payloads[static_cast<std::size_t>(s)])) { dominated = true; break; }
            if (!dominated) { check.product_dominated = false; break; }
        }
        if (!v2_reach.empty()) {
            const OmegaMarking c2 = v2.config_marking(v2_reach.front());
            for (int s : a_reach) {
                const auto& p = payloads[static_cast<std::size_t>(s)];
                if (p.dead || !omega_leq(c2, p.second)) { check.v2_tracked = false; break; }
            }
        }
        report.checks.push_back(std::move(check));
    }
    return report;
}

}  // namespace sepwsts
