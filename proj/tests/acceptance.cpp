// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Acceptance suite. Runs every criterion at its stated tolerance and prints
// one pass/fail line per criterion. Usage: acceptance <data-dir> <scratch-dir>

#include <chrono>
#include <filesystem>
#include <iostream>
#include <random>
#include <sstream>

#include "commands.hpp"
#include "sepwsts/json_io.hpp"
#include "sepwsts/rado.hpp"

using namespace sepwsts;

namespace {

struct Criterion {
    int number;
    std::string title;
    bool passed;
    std::string detail;
    double ms;
};

std::vector<Criterion> results;

struct Timer {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

void record(int number, const std::string& title, bool passed, const std::string& detail,
            double ms) {
    results.push_back({number, title, passed, detail, ms});
}

Word word(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(std::string(1, c));
    return w;
}

std::vector<Word> all_words(const std::vector<std::string>& alphabet, std::size_t k) {
    std::vector<Word> out{{}};
    std::size_t begin = 0;
    for (std::size_t len = 1; len <= k; ++len) {
        const std::size_t end = out.size();
        for (std::size_t i = begin; i < end; ++i)
            for (const auto& a : alphabet) {
                Word w = out[i];
                w.push_back(a);
                out.push_back(std::move(w));
            }
        begin = end;
    }
    return out;
}

std::string data_dir, scratch_dir;

LabeledVASS load_net(const std::string& name) {
    return io::vass_from_json(io::load_json_file(data_dir + "/" + name));
}

// ---- criterion 1: fragment regression ----------------------------------
void criterion_fragment() {
    Timer t;
    std::size_t checked = 0, mismatches = 0;
    for (long long n = 0; n <= 12; ++n)
        for (long long k = 0; n + k <= 12; ++k)
            for (long long i = 0; n + k + i <= 12; ++i) {
                const std::string w = std::string(static_cast<std::size_t>(n), '<') +
                                      std::string(static_cast<std::size_t>(k), '>') +
                                      std::string(static_cast<std::size_t>(i), '0');
                ++checked;
                if (rado::witness_member(w) != rado::fragment_oracle(n, k, i)) ++mismatches;
            }
    const double ms = t.ms();
    std::ostringstream detail;
    detail << checked << " words, " << mismatches << " mismatches";
    record(1, "Rado fragment regression (length <= 12)", mismatches == 0 && ms < 1000.0,
           detail.str(), ms);
}

// ---- criterion 2: Nerode antichain certificates -------------------------
void criterion_suffixes() {
    Timer t;
    int invalid = 0, total = 0;
    for (long long i = 0; i <= 6; ++i)
        for (long long j = i + 1; j <= 6; ++j) {
            ++total;
            if (!rado::distinguishing_suffixes(i, j).valid()) ++invalid;
        }
    const double ms = t.ms();
    std::ostringstream detail;
    detail << total << " pairs, " << invalid << " invalid certificates";
    record(2, "Nerode antichain certificates (i < j <= 6)", invalid == 0 && ms < 1000.0,
           detail.str(), ms);
}

// ---- criterion 3: simulation compatibility of the Rado system -----------
void criterion_rado_simulation() {
    Timer t;
    std::vector<rado::RadoPoint> pts;
    for (long long r = 1; r <= 25; ++r)
        for (long long c = 0; c < r; ++c) pts.push_back({c, r});
    long long violations = 0, pairs = 0;
    const char letters[] = {'<', '>', '0'};
    for (const auto& p : pts)
        for (const auto& q : pts) {
            if (!rado::rado_leq(p, q)) continue;
            ++pairs;
            for (char a : letters) {
                const auto sp = rado::point_post(p, a);
                if (!sp) continue;
                const auto sq = rado::point_post(q, a);
                if (!sq || !rado::rado_leq(*sp, *sq)) ++violations;
            }
        }
    std::ostringstream detail;
    detail << pairs << " ordered pairs, " << violations << " violations";
    record(3, "Rado order is a simulation (rows <= 25)", violations == 0, detail.str(), t.ms());
}

// ---- criterion 4: column antichain ---------------------------------------
void criterion_column_antichain() {
    Timer t;
    int wrong = 0;
    for (long long i = 0; i <= 10; ++i)
        for (long long j = 0; j <= 10; ++j)
            if (rado::downcls_column_leq(i, j) != (i == j)) ++wrong;
    record(4, "column closures form an antichain (i, j <= 10)", wrong == 0,
           wrong == 0 ? "121 pairs checked" : std::to_string(wrong) + " wrong verdicts", t.ms());
}

const char* kCorpus[] = {"counter_leq.json", "bexcess_rev.json", "empty_never.json",
                         "guard_dead.json",  "twodim_pump.json", "ring4.json"};

// ---- criterion 5: cross-oracle coverability ------------------------------
void criterion_cross_oracle() {
    Timer t;
    long long targets = 0, disagreements = 0;
    for (const char* name : kCorpus) {
        const LabeledVASS v = load_net(name);
        const KMResult km = karp_miller(v);
        // every target marking in the box [0..4]^d, every control
        std::vector<std::vector<Ent>> box{{}};
        for (std::size_t i = 0; i < v.dim; ++i) {
            std::vector<std::vector<Ent>> next;
            for (const auto& m : box)
                for (Ent x = 0; x <= 4; ++x) {
                    auto mm = m;
                    mm.push_back(x);
                    next.push_back(std::move(mm));
                }
            box = std::move(next);
        }
        for (int q = 0; q < static_cast<int>(v.controls.size()); ++q)
            for (const auto& m : box) {
                ++targets;
                const VassConfig target{q, m};
                const bool backward = backward_covers(v, {target}).covered;
                const bool forward = covers_point(km.cover, v.config_marking(target));
                if (backward != forward) ++disagreements;
            }
    }
    const double ms = t.ms();
    std::ostringstream detail;
    detail << sizeof(kCorpus) / sizeof(kCorpus[0]) << " nets, " << targets << " targets, "
           << disagreements << " disagreements";
    record(5, "cross-oracle coverability (backward vs Karp-Miller)",
           disagreements == 0 && ms < 10000.0, detail.str(), ms);
}

// ---- criterion 6: invariant soundness on empty-language nets --------------
void criterion_invariant_soundness() {
    Timer t;
    int empty_nets = 0, failures = 0;
    for (const char* name : kCorpus) {
        const LabeledVASS v = load_net(name);
        if (backward_covers(v, v.final_basis).covered) continue;
        ++empty_nets;
        if (!check_invariant(v, karp_miller(v).cover).ok()) ++failures;
    }
    std::ostringstream detail;
    detail << empty_nets << " empty-language nets, " << failures << " invariant failures";
    record(6, "KM cover is an inductive invariant when the language is empty",
           empty_nets >= 2 && failures == 0, detail.str(), t.ms());
}

// ---- criterion 7: end-to-end separation -----------------------------------
void criterion_end_to_end() {
    Timer t;
    const std::pair<const char*, const char*> pairs[] = {
        {"one_a.json", "one_b.json"},
        {"counter_leq.json", "bexcess_rev.json"},
        {"parity_even.json", "parity_odd.json"},
    };
    bool ok = true;
    std::ostringstream detail;
    std::ostringstream devnull;
    int idx = 0;
    for (const auto& [n1, n2] : pairs) {
        const std::string out = scratch_dir + "/sep" + std::to_string(idx++);
        cli::Options opts;
        opts.bound = 8;
        const int sep_rc = cli::cmd_separate(data_dir + "/" + n1, data_dir + "/" + n2, out, opts,
                                             devnull, std::cerr);
        const int ver_rc = sep_rc == cli::kOk
                               ? cli::cmd_verify(data_dir + "/" + n1, data_dir + "/" + n2,
                                                 out + "/separator.json", opts, devnull, std::cerr)
                               : -1;
        // bounded shadow at k = 8, recomputed here from the artifact
        bool shadow = false;
        if (sep_rc == cli::kOk) {
            const auto a = io::separator_from_json(io::load_json_file(out + "/separator.json"));
            const auto nfa = a.as_nfa();
            const LabeledVASS v1 = load_net(n1);
            const LabeledVASS v2 = load_net(n2);
            shadow = true;
            for (const auto& w : vass_members_upto(v1, 8))
                if (!fa::accepts(nfa, w)) shadow = false;
            for (const auto& w : vass_members_upto(v2, 8))
                if (fa::accepts(nfa, w)) shadow = false;
        }
        const bool pair_ok = sep_rc == cli::kOk && ver_rc == cli::kOk && shadow;
        ok = ok && pair_ok;
        detail << n1 << "+" << n2 << (pair_ok ? " ok; " : " FAIL; ");
    }
    const double ms = t.ms();
    record(7, "end-to-end separation and exact verification (3 pairs, shadow k=8)",
           ok && ms < 30000.0, detail.str(), ms);
}

// ---- criterion 8: non-disjoint detection ----------------------------------
void criterion_not_disjoint() {
    Timer t;
    const std::pair<const char*, const char*> pairs[] = {
        {"counter_leq.json", "counter_leq.json"},
        {"counter_leq_strict.json", "universal_ab.json"},
    };
    bool ok = true;
    std::ostringstream detail;
    std::ostringstream devnull;
    int idx = 0;
    for (const auto& [n1, n2] : pairs) {
        const std::string out = scratch_dir + "/joint" + std::to_string(idx++);
        cli::Options opts;
        const int rc = cli::cmd_separate(data_dir + "/" + n1, data_dir + "/" + n2, out, opts,
                                         devnull, std::cerr);
        bool pair_ok = rc == cli::kNotDisjoint;
        if (pair_ok) {
            const auto report = io::load_json_file(out + "/report.json");
            Word w;
            for (const auto& letter : report["verdicts"]["witness"])
                w.push_back(letter.get<std::string>());
            pair_ok = membership(load_net(n1), w) && membership(load_net(n2), w);
        }
        ok = ok && pair_ok;
        detail << n1 << "+" << n2 << (pair_ok ? " ok; " : " FAIL; ");
    }
    record(8, "non-disjoint pairs yield validated joint witnesses", ok, detail.str(), t.ms());
}

// ---- criterion 9: determinization and closure laws -------------------------
std::vector<std::vector<bool>> discrete(std::size_t n) {
    std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
    for (std::size_t i = 0; i < n; ++i) leq[i][i] = true;
    return leq;
}

std::vector<ExplicitOLTS> upward_models() {
    std::vector<ExplicitOLTS> out;
    {
        ExplicitOLTS u;  // {ab}
        u.states = {"s0", "s1", "s2"};
        u.leq = discrete(3);
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {2};
        u.trans[{0, 0}] = {1};
        u.trans[{1, 1}] = {2};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // {a, ab}, nondeterministic
        u.states = {"s0", "s1", "s2"};
        u.leq = discrete(3);
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {1};
        u.trans[{0, 0}] = {1, 2};
        u.trans[{2, 1}] = {1};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // saturating counter chain, ordered states
        u.states = {"n0", "n1", "n2"};
        u.leq = {{true, true, true}, {false, true, true}, {false, false, true}};
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {2};
        u.trans[{0, 0}] = {1};
        u.trans[{1, 0}] = {2};
        u.trans[{2, 0}] = {2};
        u.trans[{0, 1}] = {0};
        u.trans[{1, 1}] = {1};
        u.trans[{2, 1}] = {2};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // everything
        u.states = {"u"};
        u.leq = discrete(1);
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {0};
        u.trans[{0, 0}] = {0};
        u.trans[{0, 1}] = {0};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // a(ba)*, nondeterministic start
        u.states = {"x0", "x1", "x2", "x3"};
        u.leq = discrete(4);
        u.alphabet = {"a", "b"};
        u.initial = {0, 1};
        u.final = {2};
        u.trans[{0, 0}] = {2};
        u.trans[{1, 0}] = {2, 3};
        u.trans[{2, 1}] = {0};
        u.trans[{3, 1}] = {3};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // diamond order, monotone total moves
        u.states = {"bot", "l", "r", "top"};
        u.leq = {{true, true, true, true},
                 {false, true, false, true},
                 {false, false, true, true},
                 {false, false, false, true}};
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {3};
        u.trans[{0, 0}] = {1};
        u.trans[{0, 1}] = {2};
        for (int s : {1, 2, 3})
            for (int l : {0, 1}) u.trans[{s, l}] = {3};
        out.push_back(u);
    }
    return out;
}

std::vector<ExplicitOLTS> deterministic_models() {
    std::vector<ExplicitOLTS> out;
    for (auto& u : upward_models())
        if (u.is_deterministic()) out.push_back(u);
    {
        ExplicitOLTS u;  // a-star over {a,b}
        u.states = {"ok", "dead"};
        u.leq = discrete(2);
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {0};
        u.trans[{0, 0}] = {0};
        u.trans[{0, 1}] = {1};
        u.trans[{1, 0}] = {1};
        u.trans[{1, 1}] = {1};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // even number of b's
        u.states = {"even", "odd"};
        u.leq = discrete(2);
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {0};
        u.trans[{0, 0}] = {0};
        u.trans[{1, 0}] = {1};
        u.trans[{0, 1}] = {1};
        u.trans[{1, 1}] = {0};
        out.push_back(u);
    }
    {
        ExplicitOLTS u;  // word length mod 3 == 0
        u.states = {"m0", "m1", "m2"};
        u.leq = discrete(3);
        u.alphabet = {"a", "b"};
        u.initial = {0};
        u.final = {0};
        for (int s = 0; s < 3; ++s)
            for (int l = 0; l < 2; ++l) u.trans[{s, l}] = {(s + 1) % 3};
        out.push_back(u);
    }
    return out;
}

void criterion_closure_laws() {
    Timer t;
    const std::size_t k = 6;
    bool ok = true;
    int det_models = 0, rev_models = 0, prune_models = 0, comp_models = 0;
    const auto words6 = all_words({"a", "b"}, k);
    for (const auto& u : upward_models()) {
        if (!check_compatible(u).ok()) { ok = false; continue; }
        const auto lang = members_upto(u, k).words;
        const auto det = determinize_fb(u);
        ++det_models;
        if (!det.is_deterministic() || members_upto(det, k).words != lang) ok = false;
        if (!check_compatible(det).ok()) ok = false;

        std::set<Word> rev_lang;
        for (auto w : lang) rev_lang.insert(reversed(w));
        const auto rev = reverse(u);
        ++rev_models;
        if (members_upto(rev, k).words != rev_lang) ok = false;
        if (members_upto(reverse(rev), k).words != lang) ok = false;
        if (!check_compatible(rev).ok()) ok = false;

        const auto pruned = prune_nonminimal(rev);
        ++prune_models;
        if (members_upto(pruned, k).words != rev_lang) ok = false;
        if (!check_compatible(pruned).ok()) ok = false;
    }
    for (const auto& d : deterministic_models()) {
        if (!check_compatible(d).ok()) { ok = false; continue; }
        const auto lang = members_upto(d, k).words;
        const auto comp = complement(d);
        const auto comp_lang = members_upto(comp, k).words;
        ++comp_models;
        for (const auto& w : words6)
            if ((comp_lang.count(w) != 0) == (lang.count(w) != 0)) ok = false;
        if (members_upto(complement(comp), k).words != lang) ok = false;
        if (!check_compatible(comp).ok()) ok = false;
    }
    std::ostringstream detail;
    detail << det_models << " det / " << rev_models << " rev / " << prune_models << " prune / "
           << comp_models << " comp models at k=6";
    record(9, "determinization and closure laws on explicit models",
           ok && det_models >= 5 && comp_models >= 5, detail.str(), t.ms());
}

// ---- criterion 10: fa toolbox ----------------------------------------------
fa::Nfa random_nfa(std::mt19937& rng) {
    fa::Nfa a;
    std::uniform_int_distribution<int> nstates(1, 6);
    const int n = nstates(rng);
    for (int i = 0; i < n; ++i) a.states.push_back("s" + std::to_string(i));
    a.alphabet = {"a", "b"};
    std::uniform_int_distribution<int> coin(0, 3);
    for (int i = 0; i < n; ++i) {
        if (coin(rng) == 0) a.initial.insert(i);
        if (coin(rng) == 0) a.final.insert(i);
        for (int l = 0; l < 2; ++l)
            for (int j = 0; j < n; ++j)
                if (coin(rng) == 0) a.trans[{i, l}].push_back(j);
    }
    if (a.initial.empty()) a.initial.insert(0);
    return a;
}

void criterion_fa_toolbox() {
    Timer t;
    std::mt19937 rng(424242);
    const auto words = all_words({"a", "b"}, 6);
    int rounds = 0, failures = 0;
    for (int round = 0; round < 200; ++round) {
        ++rounds;
        const fa::Nfa x = random_nfa(rng);
        const fa::Nfa y = random_nfa(rng);
        const fa::Dfa dx = fa::determinize_fa(x);
        const fa::Dfa cx = fa::complement_dfa(dx);
        const fa::Nfa pxy = fa::product_intersect(x, y);
        bool good = true;
        for (const auto& w : words) {
            const bool in_x = fa::accepts(x, w);
            if (fa::accepts(dx, w) != in_x) good = false;
            if (fa::accepts(cx, w) != !in_x) good = false;
            if (fa::accepts(pxy, w) != (in_x && fa::accepts(y, w))) good = false;
        }
        const auto [empty, witness] = fa::is_empty(x);
        if (!empty && (!witness || !fa::accepts(x, *witness))) good = false;
        if (empty && witness) good = false;
        if (!good) ++failures;
    }
    std::ostringstream detail;
    detail << rounds << " random automata, " << failures << " failures";
    record(10, "fa toolbox bounded-language laws (length <= 6)", failures == 0, detail.str(),
           t.ms());
}

}  // namespace

int main(int argc, char** argv) {
    if (argc != 3) {
        std::cerr << "usage: acceptance <data-dir> <scratch-dir>\n";
        return 2;
    }
    data_dir = argv[1];
    scratch_dir = argv[2];
    std::filesystem::create_directories(scratch_dir);

    criterion_fragment();
    criterion_suffixes();
    criterion_rado_simulation();
    criterion_column_antichain();
    criterion_cross_oracle();
    criterion_invariant_soundness();
    criterion_end_to_end();
    criterion_not_disjoint();
    criterion_closure_laws();
    criterion_fa_toolbox();

    int failed = 0;
    for (const auto& c : results) {
        std::cout << (c.passed ? "PASS" : "FAIL") << "  " << c.number << "  " << c.title << " ["
                  << c.detail << ", " << static_cast<long long>(c.ms) << " ms]\n";
        if (!c.passed) ++failed;
    }
    std::cout << (failed == 0 ? "all criteria passed" : std::to_string(failed) + " criteria failed")
              << "\n";
    return failed == 0 ? 0 : 1;
}
