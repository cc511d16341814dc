// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// sepwsts: invariant-based regular separators for coverability languages.

#include <iostream>
#include <string>

#include <CLI11.hpp>

#include "commands.hpp"

int main(int argc, char** argv) {
    using namespace sepwsts::cli;

    CLI::App app{"Regular separators for well-structured coverability languages"};
    app.require_subcommand(1);
    app.fallthrough();  // --bound / --format may follow the subcommand

    Options opts;
    opts.bound = default_bound();
    app.add_option("--bound", opts.bound, "bound for bounded enumerations")
        ->capture_default_str();
    app.add_option("--format", opts.format, "output format for emitters: json or dot")
        ->check(CLI::IsMember({"json", "dot"}))
        ->capture_default_str();

    std::string net1, net2, nfa, outdir, word, control, marking, model;
    long long idx_i = 0, idx_j = 0;
    std::size_t fragment_len = 12;

    auto* sep = app.add_subcommand("separate",
                                   "synthesize a regular separator for two disjoint nets");
    sep->add_option("net1", net1, "first net (JSON)")->required();
    sep->add_option("net2", net2, "second net (JSON), must be deterministic")->required();
    sep->add_option("out", outdir, "output directory for artifacts")->required();

    auto* ver = app.add_subcommand("verify", "verify a separator exactly");
    ver->add_option("net1", net1, "first net (JSON)")->required();
    ver->add_option("net2", net2, "second net (JSON)")->required();
    ver->add_option("nfa", nfa, "separator automaton (JSON)")->required();

    auto* rado = app.add_subcommand("rado", "witness-language tooling");
    rado->require_subcommand(1);
    auto* member = rado->add_subcommand("member", "membership in W (or K when '#' is present)");
    member->add_option("word", word, "word over < > 0 (and optionally one #)")->required();
    auto* suffixes = rado->add_subcommand("suffixes", "distinguishing suffixes for <^i vs <^j");
    suffixes->add_option("i", idx_i, "smaller column index")->required();
    suffixes->add_option("j", idx_j, "larger column index")->required();
    auto* fragment = rado->add_subcommand("fragment-check",
                                          "exhaustive simulator-vs-formula agreement");
    fragment->add_option("--len", fragment_len, "maximal word length")->capture_default_str();

    auto* km = app.add_subcommand("km", "Karp-Miller cover of a net");
    km->add_option("net", net1, "net (JSON)")->required();

    auto* covers = app.add_subcommand("covers", "backward coverability query");
    covers->add_option("net", net1, "net (JSON)")->required();
    covers->add_option("control", control, "target control")->required();
    covers->add_option("marking", marking, "target marking, comma-separated")->default_val("");

    auto* mem = app.add_subcommand("membership", "exact word membership in a net's language");
    mem->add_option("net", net1, "net (JSON)")->required();
    mem->add_option("word", word, "word (one letter per character, or comma-separated)")
        ->default_val("");

    auto* det = app.add_subcommand("det", "determinize a finitely-branching explicit model");
    det->add_option("model", model, "explicit model (JSON)")->required();

    CLI11_PARSE(app, argc, argv);

    if (sep->parsed()) return cmd_separate(net1, net2, outdir, opts, std::cout, std::cerr);
    if (ver->parsed()) return cmd_verify(net1, net2, nfa, opts, std::cout, std::cerr);
    if (rado->parsed()) {
        if (member->parsed()) return cmd_rado_member(word, std::cout, std::cerr);
        if (suffixes->parsed()) return cmd_rado_suffixes(idx_i, idx_j, std::cout, std::cerr);
        if (fragment->parsed()) return cmd_rado_fragment_check(fragment_len, std::cout, std::cerr);
    }
    if (km->parsed()) return cmd_km(net1, opts, std::cout, std::cerr);
    if (covers->parsed()) return cmd_covers(net1, control, marking, std::cout, std::cerr);
    if (mem->parsed()) return cmd_membership(net1, word, std::cout, std::cerr);
    if (det->parsed()) return cmd_det(model, opts, std::cout, std::cerr);
    return kInputError;
}
