// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "sepwsts/json_io.hpp"

#include <algorithm>
#include <fstream>
#include <sstream>

namespace sepwsts::io {

namespace {

[[noreturn]] void bad(const std::string& what) { throw input_error(what); }

const json& field(const json& j, const char* key) {
    auto it = j.find(key);
    if (it == j.end()) bad(std::string("missing field \"") + key + "\"");
    return *it;
}

std::vector<Ent> nat_vector(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array");
    std::vector<Ent> out;
    for (const auto& x : j) {
        if (!x.is_number_integer() || x.get<Ent>() < 0)
            bad(std::string(what) + " entries must be non-negative integers");
        out.push_back(x.get<Ent>());
    }
    return out;
}

void check_control_name(const std::string& c) {
    if (c.empty() || c.find_first_of("()|") != std::string::npos)
        bad("control names must be non-empty and free of '(', ')', '|': \"" + c + "\"");
}

}  // namespace

json marking_to_json(const OmegaMarking& m) {
    json vec = json::array();
    for (Ent x : m.vec) {
        if (is_omega(x)) vec.push_back("w");
        else vec.push_back(x);
    }
    return json{{"control", m.control}, {"vec", vec}};
}

OmegaMarking marking_from_json(const json& j) {
    OmegaMarking m;
    m.control = field(j, "control").get<std::string>();
    const json& vec = field(j, "vec");
    if (!vec.is_array()) bad("\"vec\" must be an array");
    for (const auto& x : vec) {
        if (x.is_string()) {
            if (x.get<std::string>() != "w") bad("vector entries are integers or \"w\"");
            m.vec.push_back(omega);
        } else if (x.is_number_integer() && x.get<Ent>() >= 0) {
            m.vec.push_back(x.get<Ent>());
        } else {
            bad("vector entries are non-negative integers or \"w\"");
        }
    }
    return m;
}

json cover_to_json(const IdealCover& c) {
    json out = json::array();
    for (const auto& e : c.elements) out.push_back(marking_to_json(e));
    return out;
}

IdealCover cover_from_json(const json& j) {
    if (!j.is_array()) bad("a cover is an array of markings");
    std::vector<OmegaMarking> ms;
    for (const auto& e : j) ms.push_back(marking_from_json(e));
    return normalize(ms);
}

json marking_list_to_json(std::vector<OmegaMarking> ms) {
    std::sort(ms.begin(), ms.end(), canonical_less);
    json out = json::array();
    for (const auto& m : ms) out.push_back(marking_to_json(m));
    return out;
}

LabeledVASS vass_from_json(const json& j) {
    LabeledVASS v;
    const json& dim = field(j, "dim");
    if (!dim.is_number_integer() || dim.get<long long>() < 0) bad("\"dim\" must be a natural number");
    v.dim = dim.get<std::size_t>();
    for (const auto& c : field(j, "controls")) {
        const auto name = c.get<std::string>();
        check_control_name(name);
        v.controls.push_back(name);
    }
    for (const auto& a : field(j, "alphabet")) {
        const auto letter = a.get<std::string>();
        if (letter.empty()) bad("letters must be non-empty");
        v.alphabet.push_back(letter);
    }
    for (const auto& t : field(j, "transitions")) {
        VassTransition tr;
        tr.src = v.control_index(field(t, "src").get<std::string>());
        tr.dst = v.control_index(field(t, "dst").get<std::string>());
        tr.letter = v.letter_index(field(t, "letter").get<std::string>());
        tr.take = nat_vector(field(t, "take"), "take");
        tr.put = nat_vector(field(t, "put"), "put");
        v.transitions.push_back(std::move(tr));
    }
    auto configs = [&](const char* key) {
        std::vector<VassConfig> out;
        for (const auto& c : field(j, key)) {
            VassConfig cfg;
            cfg.control = v.control_index(field(c, "control").get<std::string>());
            cfg.marking = nat_vector(field(c, "marking"), "marking");
            out.push_back(std::move(cfg));
        }
        return out;
    };
    v.initial = configs("initial");
    v.final_basis = configs("finalBasis");
    v.validate();
    return v;
}

json vass_to_json(const LabeledVASS& v) {
    json trans = json::array();
    for (const auto& t : v.transitions) {
        json take = json::array(), put = json::array();
        for (Ent x : t.take) take.push_back(x);
        for (Ent x : t.put) put.push_back(x);
        trans.push_back(json{{"src", v.controls[static_cast<std::size_t>(t.src)]},
                             {"letter", v.alphabet[static_cast<std::size_t>(t.letter)]},
                             {"take", take},
                             {"put", put},
                             {"dst", v.controls[static_cast<std::size_t>(t.dst)]}});
    }
    auto configs = [&](const std::vector<VassConfig>& cs) {
        json out = json::array();
        for (const auto& c : cs) {
            json marking = json::array();
            for (Ent x : c.marking) marking.push_back(x);
            out.push_back(json{{"control", v.controls[static_cast<std::size_t>(c.control)]},
                               {"marking", marking}});
        }
        return out;
    };
    return json{{"dim", v.dim},           {"controls", v.controls},
                {"alphabet", v.alphabet}, {"transitions", trans},
                {"initial", configs(v.initial)}, {"finalBasis", configs(v.final_basis)}};
}

ExplicitOLTS olts_from_json(const json& j) {
    ExplicitOLTS u;
    for (const auto& s : field(j, "states")) u.states.push_back(s.get<std::string>());
    for (const auto& a : field(j, "alphabet")) u.alphabet.push_back(a.get<std::string>());
    const auto dir = field(j, "direction").get<std::string>();
    if (dir == "upward") u.direction = Direction::Upward;
    else if (dir == "downward") u.direction = Direction::Downward;
    else bad("\"direction\" must be \"upward\" or \"downward\"");
    const std::size_t n = u.states.size();
    u.leq.assign(n, std::vector<bool>(n, false));
    for (std::size_t s = 0; s < n; ++s) u.leq[s][s] = true;  // a quasi order is reflexive
    for (const auto& pair : field(j, "leq")) {
        if (!pair.is_array() || pair.size() != 2) bad("\"leq\" entries are [s, t] pairs");
        const int s = u.state_index(pair[0].get<std::string>());
        const int t = u.state_index(pair[1].get<std::string>());
        u.leq[static_cast<std::size_t>(s)][static_cast<std::size_t>(t)] = true;
    }
    for (const auto& s : field(j, "initial")) u.initial.insert(u.state_index(s.get<std::string>()));
    for (const auto& s : field(j, "final")) u.final.insert(u.state_index(s.get<std::string>()));
    for (const auto& t : field(j, "trans")) {
        if (!t.is_array() || t.size() != 3) bad("\"trans\" entries are [state, letter, [successors]]");
        const int s = u.state_index(t[0].get<std::string>());
        const int a = u.letter_index(t[1].get<std::string>());
        auto& slot = u.trans[{s, a}];
        for (const auto& succ : t[2]) slot.push_back(u.state_index(succ.get<std::string>()));
        std::sort(slot.begin(), slot.end());
        slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
    }
    u.validate();  // quasi-order violations are load errors
    return u;
}

json olts_to_json(const ExplicitOLTS& u) {
    json leq = json::array();
    for (std::size_t s = 0; s < u.states.size(); ++s)
        for (std::size_t t = 0; t < u.states.size(); ++t)
            if (s != t && u.leq[s][t]) leq.push_back(json::array({u.states[s], u.states[t]}));
    json trans = json::array();
    for (const auto& [key, succs] : u.trans) {
        json targets = json::array();
        for (int t : succs) targets.push_back(u.states[static_cast<std::size_t>(t)]);
        trans.push_back(json::array({u.states[static_cast<std::size_t>(key.first)],
                                     u.alphabet[static_cast<std::size_t>(key.second)], targets}));
    }
    auto names = [&](const std::set<int>& ss) {
        json out = json::array();
        for (int s : ss) out.push_back(u.states[static_cast<std::size_t>(s)]);
        return out;
    };
    return json{{"states", u.states},
                {"leq", leq},
                {"initial", names(u.initial)},
                {"final", names(u.final)},
                {"alphabet", u.alphabet},
                {"trans", trans},
                {"direction", u.direction == Direction::Upward ? "upward" : "downward"}};
}

SeparatorNfa separator_from_json(const json& j) {
    SeparatorNfa a;
    for (const auto& letter : field(j, "alphabet")) a.alphabet.push_back(letter.get<std::string>());
    const json& states = field(j, "states");
    a.states.resize(states.size());
    for (const auto& s : states) {
        const auto id = field(s, "id").get<std::size_t>();
        if (id >= a.states.size()) bad("state ids must be 0..n-1");
        SeparatorState st;
        st.payload = marking_from_json(field(s, "payload"));
        st.final_ = field(s, "final").get<bool>();
        st.v2_dead = s.value("v2dead", false);
        a.states[id] = std::move(st);
    }
    for (const auto& s : field(j, "initial")) {
        const auto id = s.get<std::size_t>();
        if (id >= a.states.size()) bad("initial state id out of range");
        a.initial.push_back(static_cast<int>(id));
    }
    for (const auto& t : field(j, "trans")) {
        if (!t.is_array() || t.size() != 3) bad("\"trans\" entries are [id, letter, [ids]]");
        const auto src = t[0].get<std::size_t>();
        if (src >= a.states.size()) bad("transition source out of range");
        int letter = -1;
        for (std::size_t l = 0; l < a.alphabet.size(); ++l)
            if (a.alphabet[l] == t[1].get<std::string>()) letter = static_cast<int>(l);
        if (letter < 0) bad("transition letter not in alphabet");
        auto& slot = a.trans[{static_cast<int>(src), letter}];
        for (const auto& dst : t[2]) {
            const auto id = dst.get<std::size_t>();
            if (id >= a.states.size()) bad("transition target out of range");
            slot.push_back(static_cast<int>(id));
        }
        std::sort(slot.begin(), slot.end());
        slot.erase(std::unique(slot.begin(), slot.end()), slot.end());
    }
    return a;
}

json separator_to_json(const SeparatorNfa& a) {
    json states = json::array();
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        json s{{"id", i},
               {"payload", marking_to_json(a.states[i].payload)},
               {"final", a.states[i].final_}};
        if (a.states[i].v2_dead) s["v2dead"] = true;
        states.push_back(std::move(s));
    }
    json trans = json::array();
    for (const auto& [key, succs] : a.trans)
        trans.push_back(json::array(
            {key.first, a.alphabet[static_cast<std::size_t>(key.second)], succs}));
    json initial = a.initial;
    return json{{"alphabet", a.alphabet},
                {"states", states},
                {"initial", initial},
                {"trans", trans}};
}

namespace {
std::string dot_escape(const std::string& s) {
    std::string out;
    for (char c : s) {
        if (c == '"' || c == '\\') out += '\\';
        out += c;
    }
    return out;
}
}  // namespace

std::string separator_to_dot(const SeparatorNfa& a) {
    std::ostringstream os;
    os << "digraph separator {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < a.states.size(); ++i) {
        os << "  n" << i << " [label=\"" << dot_escape(to_string(a.states[i].payload)) << "\" shape="
           << (a.states[i].final_ ? "doublecircle" : "circle") << "];\n";
    }
    for (std::size_t k = 0; k < a.initial.size(); ++k) {
        os << "  i" << k << " [shape=point];\n";
        os << "  i" << k << " -> n" << a.initial[k] << ";\n";
    }
    for (const auto& [key, succs] : a.trans)
        for (int t : succs)
            os << "  n" << key.first << " -> n" << t << " [label=\""
               << dot_escape(a.alphabet[static_cast<std::size_t>(key.second)]) << "\"];\n";
    os << "}\n";
    return os.str();
}

json nfa_to_json(const fa::Nfa& a) {
    json states = json::array();
    for (std::size_t i = 0; i < a.states.size(); ++i)
        states.push_back(json{{"id", i},
                              {"name", a.states[i]},
                              {"final", a.final.count(static_cast<int>(i)) != 0}});
    json trans = json::array();
    for (const auto& [key, succs] : a.trans)
        trans.push_back(json::array(
            {key.first, a.alphabet[static_cast<std::size_t>(key.second)], succs}));
    json initial = json::array();
    for (int s : a.initial) initial.push_back(s);
    return json{{"alphabet", a.alphabet},
                {"states", states},
                {"initial", initial},
                {"trans", trans}};
}

std::string nfa_to_dot(const fa::Nfa& a) {
    std::ostringstream os;
    os << "digraph nfa {\n  rankdir=LR;\n";
    for (std::size_t i = 0; i < a.states.size(); ++i)
        os << "  n" << i << " [label=\"" << dot_escape(a.states[i]) << "\" shape="
           << (a.final.count(static_cast<int>(i)) ? "doublecircle" : "circle") << "];\n";
    int k = 0;
    for (int s : a.initial) {
        os << "  i" << k << " [shape=point];\n  i" << k << " -> n" << s << ";\n";
        ++k;
    }
    for (const auto& [key, succs] : a.trans)
        for (int t : succs)
            os << "  n" << key.first << " -> n" << t << " [label=\""
               << dot_escape(a.alphabet[static_cast<std::size_t>(key.second)]) << "\"];\n";
    os << "}\n";
    return os.str();
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw input_error("cannot open " + path);
    try {
        return json::parse(in);
    } catch (const json::parse_error& e) {
        throw input_error(path + ": " + e.what());
    }
}

void write_text_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw input_error("cannot write " + path);
    out << content;
}

std::string file_digest(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw input_error("cannot open " + path);
    std::uint64_t h = 1469598103934665603ull;
    char c;
    while (in.get(c)) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ull;
    }
    std::ostringstream os;
    os << std::hex;
    os.width(16);
    os.fill('0');
    os << h;
    return os.str();
}

}  // namespace sepwsts::io
