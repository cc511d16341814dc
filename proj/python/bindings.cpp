// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Python module exposing the main operations. Models travel as JSON strings
// in the same formats the CLI uses; words are plain strings with one letter
// per character.

#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "sepwsts/json_io.hpp"
#include "sepwsts/rado.hpp"

namespace py = pybind11;
using namespace sepwsts;

namespace {

io::json parse(const std::string& text) {
    try {
        return io::json::parse(text);
    } catch (const io::json::parse_error& e) {
        throw input_error(e.what());
    }
}

LabeledVASS net_of(const std::string& text) { return io::vass_from_json(parse(text)); }

Word word_of(const std::string& s) {
    Word w;
    for (char c : s) w.push_back(std::string(1, c));
    return w;
}

std::string word_str(const Word& w) {
    std::string s;
    for (const auto& a : w) s += a;
    return s;
}

}  // namespace

PYBIND11_MODULE(sepwsts, m) {
    m.doc() =
        "Regular separators for well-structured coverability languages: "
        "ideal covers, Karp-Miller, backward coverability, separator synthesis "
        "and exact verification, and the Rado witness-language tooling.";

    py::register_exception<input_error>(m, "InputError", PyExc_ValueError);
    py::register_exception<precondition_error>(m, "PreconditionError", PyExc_ValueError);

    // Rado witness language
    m.def("rado_member", [](const std::string& w) { return rado::witness_member(w); },
          py::arg("word"), "Membership in the witness language W (letters <, >, 0).");
    m.def("rado_k_member", [](const std::string& w) { return rado::k_member(w); }, py::arg("word"),
          "Membership in K = W . # . reverse(complement(W)).");
    m.def("rado_fragment", &rado::fragment_oracle, py::arg("n"), py::arg("k"), py::arg("i"),
          "Fragment formula for <^n >^k 0^i.");
    m.def(
        "rado_suffixes",
        [](long long i, long long j) {
            const auto cert = rado::distinguishing_suffixes(i, j);
            py::dict d;
            d["u"] = cert.u;
            d["v"] = cert.v;
            d["valid"] = cert.valid();
            return d;
        },
        py::arg("i"), py::arg("j"), "Certified distinguishing suffixes for <^i versus <^j.");
    m.def("rado_column_leq", &rado::downcls_column_leq, py::arg("i"), py::arg("j"),
          "Inclusion of downward-closed full columns (true iff i == j).");

    // nets
    m.def(
        "membership", [](const std::string& net, const std::string& w) {
            return membership(net_of(net), word_of(w));
        },
        py::arg("net_json"), py::arg("word"), "Exact coverability-language membership.");
    m.def(
        "members_upto",
        [](const std::string& net, std::size_t k) {
            std::vector<std::string> out;
            for (const auto& w : vass_members_upto(net_of(net), k)) out.push_back(word_str(w));
            return out;
        },
        py::arg("net_json"), py::arg("k"), "All members of length at most k.");
    m.def(
        "karp_miller_cover",
        [](const std::string& net) {
            return io::cover_to_json(karp_miller(net_of(net)).cover).dump();
        },
        py::arg("net_json"), "Ideal cover of the coverability set, as JSON.");
    m.def(
        "backward_covers",
        [](const std::string& net, const std::string& control, const std::vector<Ent>& marking) {
            const LabeledVASS v = net_of(net);
            VassConfig target{v.control_index(control), marking};
            if (marking.size() != v.dim) throw input_error("target marking has wrong dimension");
            const auto res = backward_covers(v, {target});
            std::vector<OmegaMarking> basis;
            for (const auto& b : res.pre_basis) basis.push_back(v.config_marking(b));
            py::dict d;
            d["covered"] = res.covered;
            d["pre_basis"] = io::marking_list_to_json(basis).dump();
            return d;
        },
        py::arg("net_json"), py::arg("control"), py::arg("marking"),
        "Exact backward coverability of an upward-closed target.");
    m.def(
        "check_invariant",
        [](const std::string& net, const std::string& cover) {
            const auto verdict = check_invariant(net_of(net), io::cover_from_json(parse(cover)));
            py::dict d;
            d["ok"] = verdict.ok();
            d["kind"] = verdict.kind_name();
            d["detail"] = verdict.detail;
            return d;
        },
        py::arg("net_json"), py::arg("cover_json"),
        "Inductive-invariant check of an ideal cover.");

    // separator pipeline
    m.def(
        "separate",
        [](const std::string& net1, const std::string& net2) {
            const auto outcome = separate(net_of(net1), net_of(net2));
            py::dict d;
            d["disjoint"] = outcome.disjoint();
            if (outcome.disjoint())
                d["separator"] = io::separator_to_json(*outcome.separator).dump();
            else
                d["witness"] = word_str(*outcome.witness);
            return d;
        },
        py::arg("net1_json"), py::arg("net2_json"),
        "Decide disjointness; return a separator or a joint witness word.");
    m.def(
        "verify",
        [](const std::string& net1, const std::string& net2, const std::string& nfa) {
            const auto report = verify_separator(net_of(net1), net_of(net2),
                                                 io::separator_from_json(parse(nfa)));
            py::dict d;
            d["inclusion_ok"] = report.inclusion_ok;
            d["disjoint_ok"] = report.disjoint_ok;
            if (report.inclusion_counterexample)
                d["inclusion_counterexample"] = word_str(*report.inclusion_counterexample);
            if (report.disjoint_counterexample)
                d["disjoint_counterexample"] = word_str(*report.disjoint_counterexample);
            return d;
        },
        py::arg("net1_json"), py::arg("net2_json"), py::arg("separator_json"),
        "Exact separator verification via backward coverability.");

    m.def(
        "separator_dot",
        [](const std::string& nfa) { return io::separator_to_dot(io::separator_from_json(parse(nfa))); },
        py::arg("separator_json"), "DOT rendering of a separator.");
}
