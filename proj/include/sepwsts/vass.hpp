// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Labeled VASS (Petri-net-style) coverability-language models: exact word
// membership, symbolic omega-post, Karp-Miller computation of the least
// inductive invariant's ideal cover, invariant checking, and exact backward
// coverability.
#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "sepwsts/omega.hpp"

namespace sepwsts {

struct VassTransition {
    int src = 0;
    int letter = 0;
    std::vector<Ent> take;
    std::vector<Ent> put;
    int dst = 0;
};

struct VassConfig {
    int control = 0;
    std::vector<Ent> marking;

    bool operator==(const VassConfig& o) const {
        return control == o.control && marking == o.marking;
    }
    bool operator<(const VassConfig& o) const {
        return control != o.control ? control < o.control : marking < o.marking;
    }
};

/// Plain VASS: firing t at (q, m) needs q = src and m >= take; the result is
/// (dst, m - take + put). The final set is the upward closure of finalBasis.
struct LabeledVASS {
    std::size_t dim = 0;
    std::vector<std::string> controls;
    std::vector<std::string> alphabet;
    std::vector<VassTransition> transitions;
    std::vector<VassConfig> initial;
    std::vector<VassConfig> final_basis;

    int control_index(const std::string& c) const;
    int letter_index(const std::string& a) const;
    void validate() const;

    /// At most one initial configuration and at most one transition per
    /// (control, letter).
    bool is_deterministic() const;

    OmegaMarking config_marking(const VassConfig& c) const {
        return {controls[static_cast<std::size_t>(c.control)], c.marking};
    }
    bool config_leq(const VassConfig& a, const VassConfig& b) const;
    bool is_final(const VassConfig& c) const;
};

/// All firings of letter-labeled transitions from the given configurations,
/// deduplicated and sorted.
std::vector<VassConfig> post_concrete(const LabeledVASS& v, const std::vector<VassConfig>& configs,
                                      int letter);

/// True iff some run over w from an initial configuration ends in the upward
/// closure of finalBasis; exact via finite Post-set iteration.
bool membership(const LabeledVASS& v, const Word& w);

/// Ideal post: transitions on this letter enabled at m (omega exceeds any
/// take; finite entries must cover it) yield m - take + put with omega
/// absorbing; results are normalized.
IdealCover post_omega(const LabeledVASS& v, const OmegaMarking& m, int letter);

struct KMNode {
    OmegaMarking label;
    int parent = -1;  // -1 for roots
    int letter = -1;
};

struct KMResult {
    IdealCover cover;          // normalize of all tree node labels; denotes the coverability set
    std::vector<KMNode> tree;  // exploration tree, retained for witness extraction
};

/// Karp-Miller: cover denotes the coverability set exactly. A node strictly
/// dominating a path ancestor on the same control pumps all strictly
/// increased coordinates to omega; nodes subsumed by an existing node are
/// kept in the tree but not expanded.
KMResult karp_miller(const LabeledVASS& v);

/// Karp-Miller exploration seeded with arbitrary omega-markings instead of
/// the initial configurations.
KMResult karp_miller_from(const LabeledVASS& v, const std::vector<OmegaMarking>& roots);

struct InvariantVerdict {
    enum class Kind { Ok, ViolationInit, ViolationFinal, ViolationSucc } kind = Kind::Ok;
    std::string detail;

    bool ok() const { return kind == Kind::Ok; }
    std::string kind_name() const;
};

/// Checks the three inductive-invariant conditions for the downward-closed
/// set denoted by x: initial configurations covered, no element meets the
/// upward closure of finalBasis, and closure under the ideal post. Returns
/// the first violation found.
InvariantVerdict check_invariant(const LabeledVASS& v, const IdealCover& x);

struct BackwardResult {
    bool covered = false;
    std::vector<VassConfig> pre_basis;  // minimal basis of Pre*(up(target))
};

/// Exact backward coverability: fixpoint of minimal-basis backward steps;
/// covered iff some initial configuration dominates a basis element.
BackwardResult backward_covers(const LabeledVASS& v, const std::vector<VassConfig>& target);

/// Synchronized product; alphabets must be equal as sets. Controls are pair
/// controls, vectors are concatenated.
LabeledVASS make_product(const LabeledVASS& v1, const LabeledVASS& v2);

/// Exact bounded language: all words of length <= k in the coverability
/// language.
std::set<Word> vass_members_upto(const LabeledVASS& v, std::size_t k);

/// Shortest word reaching the upward closure of target, restricted to
/// configurations inside the upward closure of pre_basis (sound pruning when
/// pre_basis is the backward fixpoint for target). Returns nullopt only if
/// the search space is exhausted, which cannot happen when coverability was
/// certified.
std::optional<Word> find_witness(const LabeledVASS& v, const std::vector<VassConfig>& target,
                                 const std::vector<VassConfig>& pre_basis);

}  // namespace sepwsts
