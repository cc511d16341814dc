// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0

#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <functional>
#include <ostream>

#include "sepwsts/json_io.hpp"
#include "sepwsts/rado.hpp"

namespace sepwsts::cli {

namespace {

using io::json;

int guard(std::ostream& err, const std::function<int()>& body) {
    try {
        return body();
    } catch (const precondition_error& e) {
        err << "precondition error: " << e.what() << "\n";
        return kPreconditionError;
    } catch (const input_error& e) {
        err << "input error: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << "\n";
        return kInputError;
    }
}

Word parse_word(const std::string& raw) {
    Word w;
    if (raw.empty()) return w;
    if (raw.find(',') != std::string::npos) {
        std::size_t start = 0;
        while (start <= raw.size()) {
            const auto comma = raw.find(',', start);
            const auto end = comma == std::string::npos ? raw.size() : comma;
            if (end > start) w.push_back(raw.substr(start, end - start));
            if (comma == std::string::npos) break;
            start = comma + 1;
        }
        return w;
    }
    for (char c : raw) w.push_back(std::string(1, c));
    return w;
}

json word_to_json(const Word& w) {
    json out = json::array();
    for (const auto& a : w) out.push_back(a);
    return out;
}

std::vector<Ent> parse_marking_csv(const std::string& csv) {
    std::vector<Ent> out;
    if (csv.empty()) return out;
    std::size_t start = 0;
    while (start <= csv.size()) {
        const auto comma = csv.find(',', start);
        const auto end = comma == std::string::npos ? csv.size() : comma;
        const std::string part = csv.substr(start, end - start);
        try {
            std::size_t used = 0;
            const long long v = std::stoll(part, &used);
            if (used != part.size() || v < 0) throw input_error("");
            out.push_back(v);
        } catch (...) {
            throw input_error("marking entries must be non-negative integers: \"" + part + "\"");
        }
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return out;
}

struct Stopwatch {
    std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
    double ms() const {
        return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
            .count();
    }
};

}  // namespace

std::size_t default_bound() {
    if (const char* env = std::getenv("SEPWSTS_BOUND")) {
        char* end = nullptr;
        const long v = std::strtol(env, &end, 10);
        if (end && *end == '\0' && v >= 0) return static_cast<std::size_t>(v);
    }
    return 6;
}

int cmd_separate(const std::string& net1_path, const std::string& net2_path,
                 const std::string& out_dir, const Options& opts, std::ostream& out,
                 std::ostream& err) {
    return guard(err, [&]() {
        Stopwatch clock;
        const LabeledVASS v1 = io::vass_from_json(io::load_json_file(net1_path));
        const LabeledVASS v2 = io::vass_from_json(io::load_json_file(net2_path));
        std::filesystem::create_directories(out_dir);

        json report;
        report["command"] = "separate";
        report["inputs"] = {{net1_path, io::file_digest(net1_path)},
                            {net2_path, io::file_digest(net2_path)}};
        report["artifacts"] = json::array();

        const SeparationOutcome outcome = separate(v1, v2);
        int code;
        if (outcome.disjoint()) {
            const SeparatorNfa& a = *outcome.separator;
            const std::string json_path = out_dir + "/separator.json";
            const std::string dot_path = out_dir + "/separator.dot";
            io::write_text_file(json_path, io::separator_to_json(a).dump(2) + "\n");
            io::write_text_file(dot_path, io::separator_to_dot(a));
            report["artifacts"].push_back(json_path);
            report["artifacts"].push_back(dot_path);
            report["verdicts"]["disjoint"] = true;
            report["verdicts"]["separator_states"] = a.states.size();

            // bounded shadow of the exact checks, at the requested bound
            const auto l1 = vass_members_upto(v1, opts.bound);
            const auto l2 = vass_members_upto(v2, opts.bound);
            const fa::Nfa nfa = a.as_nfa();
            bool shadow_incl = true, shadow_disj = true;
            for (const auto& w : l1)
                if (!fa::accepts(nfa, w)) { shadow_incl = false; break; }
            for (const auto& w : l2)
                if (fa::accepts(nfa, w)) { shadow_disj = false; break; }
            report["verdicts"]["shadow"] = {{"k", opts.bound},
                                            {"inclusion_ok", shadow_incl},
                                            {"disjoint_ok", shadow_disj}};
            out << "disjoint: separator with " << a.states.size() << " states written to "
                << out_dir << "\n";
            code = kOk;
        } else {
            report["verdicts"]["disjoint"] = false;
            report["verdicts"]["witness"] = word_to_json(*outcome.witness);
            out << "not disjoint: joint witness \"" << word_to_string(*outcome.witness) << "\"\n";
            code = kNotDisjoint;
        }
        report["wall_ms"] = clock.ms();
        io::write_text_file(out_dir + "/report.json", report.dump(2) + "\n");
        return code;
    });
}

int cmd_verify(const std::string& net1_path, const std::string& net2_path,
               const std::string& nfa_path, const Options&, std::ostream& out,
               std::ostream& err) {
    return guard(err, [&]() {
        const LabeledVASS v1 = io::vass_from_json(io::load_json_file(net1_path));
        const LabeledVASS v2 = io::vass_from_json(io::load_json_file(net2_path));
        const SeparatorNfa a = io::separator_from_json(io::load_json_file(nfa_path));
        const SeparationReport report = verify_separator(v1, v2, a);
        out << "inclusion (L(net1) within L(A)): " << (report.inclusion_ok ? "ok" : "FAIL");
        if (report.inclusion_counterexample)
            out << "  counterexample \"" << word_to_string(*report.inclusion_counterexample) << "\"";
        out << "\n";
        out << "disjointness (L(A) and L(net2)): " << (report.disjoint_ok ? "ok" : "FAIL");
        if (report.disjoint_counterexample)
            out << "  counterexample \"" << word_to_string(*report.disjoint_counterexample) << "\"";
        out << "\n";
        return report.ok() ? kOk : kVerificationFailed;
    });
}

int cmd_rado_member(const std::string& word, std::ostream& out, std::ostream& err) {
    return guard(err, [&]() {
        const bool verdict = word.find('#') != std::string::npos ? rado::k_member(word)
                                                                 : rado::witness_member(word);
        out << (verdict ? "true" : "false") << "\n";
        return kOk;
    });
}

int cmd_rado_suffixes(long long i, long long j, std::ostream& out, std::ostream& err) {
    return guard(err, [&]() {
        const rado::SuffixCertificate cert = rado::distinguishing_suffixes(i, j);
        const std::string wi(static_cast<std::size_t>(i), '<');
        const std::string wj(static_cast<std::size_t>(j), '<');
        out << "u = \"" << cert.u << "\": " << wj << cert.u << " in W: "
            << (cert.u_accepts_j ? "true" : "false") << ", " << wi << cert.u << " in W: "
            << (cert.u_accepts_i ? "true" : "false") << "\n";
        out << "v = \"" << cert.v << "\": " << wi << cert.v << " in W: "
            << (cert.v_accepts_i ? "true" : "false") << ", " << wj << cert.v << " in W: "
            << (cert.v_accepts_j ? "true" : "false") << "\n";
        out << "certificate " << (cert.valid() ? "valid" : "INVALID") << "\n";
        return cert.valid() ? kOk : kVerificationFailed;
    });
}

int cmd_rado_fragment_check(std::size_t max_len, std::ostream& out, std::ostream& err) {
    return guard(err, [&]() {
        std::size_t checked = 0, mismatches = 0;
        for (std::size_t n = 0; n <= max_len; ++n)
            for (std::size_t k = 0; n + k <= max_len; ++k)
                for (std::size_t i = 0; n + k + i <= max_len; ++i) {
                    const std::string w = std::string(n, '<') + std::string(k, '>') +
                                          std::string(i, '0');
                    ++checked;
                    if (rado::witness_member(w) !=
                        rado::fragment_oracle(static_cast<long long>(n), static_cast<long long>(k),
                                              static_cast<long long>(i)))
                        ++mismatches;
                }
        out << "checked " << checked << " words up to length " << max_len << ", " << mismatches
            << " mismatches\n";
        return mismatches == 0 ? kOk : kVerificationFailed;
    });
}

int cmd_km(const std::string& net_path, const Options& opts, std::ostream& out,
           std::ostream& err) {
    return guard(err, [&]() {
        const LabeledVASS v = io::vass_from_json(io::load_json_file(net_path));
        const KMResult km = karp_miller(v);
        if (opts.format == "dot") {
            out << "digraph km {\n  rankdir=TB;\n";
            for (std::size_t i = 0; i < km.tree.size(); ++i)
                out << "  n" << i << " [label=\"" << to_string(km.tree[i].label) << "\"];\n";
            for (std::size_t i = 0; i < km.tree.size(); ++i)
                if (km.tree[i].parent >= 0)
                    out << "  n" << km.tree[i].parent << " -> n" << i << " [label=\""
                        << v.alphabet[static_cast<std::size_t>(km.tree[i].letter)] << "\"];\n";
            out << "}\n";
        } else {
            out << io::cover_to_json(km.cover).dump(2) << "\n";
        }
        return kOk;
    });
}

int cmd_covers(const std::string& net_path, const std::string& control,
               const std::string& marking_csv, std::ostream& out, std::ostream& err) {
    return guard(err, [&]() {
        const LabeledVASS v = io::vass_from_json(io::load_json_file(net_path));
        VassConfig target;
        target.control = v.control_index(control);
        target.marking = parse_marking_csv(marking_csv);
        if (target.marking.size() != v.dim)
            throw input_error("target marking has wrong dimension");
        const BackwardResult bw = backward_covers(v, {target});
        std::vector<OmegaMarking> basis;
        for (const auto& b : bw.pre_basis) basis.push_back(v.config_marking(b));
        json result{{"covered", bw.covered}, {"preBasis", io::marking_list_to_json(basis)}};
        out << result.dump(2) << "\n";
        return kOk;
    });
}

int cmd_membership(const std::string& net_path, const std::string& word, std::ostream& out,
                   std::ostream& err) {
    return guard(err, [&]() {
        const LabeledVASS v = io::vass_from_json(io::load_json_file(net_path));
        out << (membership(v, parse_word(word)) ? "true" : "false") << "\n";
        return kOk;
    });
}

int cmd_det(const std::string& model_path, const Options& opts, std::ostream& out,
            std::ostream& err) {
    return guard(err, [&]() {
        const ExplicitOLTS u = io::olts_from_json(io::load_json_file(model_path));
        const ExplicitOLTS d = determinize_fb(u);
        if (opts.format == "dot") {
            fa::Nfa view;
            view.states = d.states;
            view.alphabet = d.alphabet;
            view.initial = d.initial;
            view.final = d.final;
            view.trans = d.trans;
            out << io::nfa_to_dot(view);
        } else {
            out << io::olts_to_json(d).dump(2) << "\n";
        }
        return kOk;
    });
}

}  // namespace sepwsts::cli
