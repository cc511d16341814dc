// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Regular separator synthesis from ideal-represented inductive invariants of
// a synchronized product, plus exact verification of separation via backward
// coverability.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "sepwsts/fa.hpp"
#include "sepwsts/omega.hpp"
#include "sepwsts/vass.hpp"

namespace sepwsts {

/// One automaton state. The payload is a maximal ideal of the product order:
/// a pair control with the concatenated vector. States whose second factor is
/// the added bottom of the completed second system carry `v2_dead`; their
/// second vector half is all zero and their second control is the first
/// system's view of "the other side went under".
struct SeparatorState {
    OmegaMarking payload;
    bool v2_dead = false;
    bool final_ = false;
};

struct SeparatorNfa {
    std::vector<SeparatorState> states;
    std::vector<int> initial;
    std::vector<std::string> alphabet;
    std::map<std::pair<int, int>, std::vector<int>> trans;  // (state, letter) -> successors

    fa::Nfa as_nfa() const;
};

/// Name used for the bottom state adjoined to the deterministic side.
inline constexpr const char* kBottomControl = "_bot";

/// Builds the separating automaton induced by the invariant cover q of the
/// synchronized product of v1 and v2 (q must pass check_invariant on the
/// product; otherwise precondition_error naming the violated condition).
///
/// States are the elements of q: a state is initial iff its ideal covers an
/// initial product configuration, final iff its first factor meets the upward
/// closure of v1's final basis, and there is an a-edge from s to r iff some
/// ideal post of s's payload under a is included in r's payload.
///
/// Since v2 may be partial (a guard or a missing transition can kill its
/// unique run), the deterministic side is completed with a bottom state below
/// everything. Reachable states whose second factor is that bottom are added,
/// with first factors drawn from a Karp-Miller cover of v1 seeded by q's
/// first factors.
SeparatorNfa build_separator(const LabeledVASS& v1, const LabeledVASS& v2, const IdealCover& q);

struct SeparationOutcome {
    std::optional<SeparatorNfa> separator;
    std::optional<Word> witness;  // joint member of both languages

    bool disjoint() const { return separator.has_value(); }
};

/// Decides disjointness exactly (backward coverability on the product). On
/// disjoint inputs returns build_separator over the Karp-Miller cover of the
/// product; otherwise returns a concrete joint witness word, re-validated by
/// membership in both nets. Requires equal alphabets and a deterministic v2
/// (one initial configuration, at most one transition per control and
/// letter); throws precondition_error otherwise.
SeparationOutcome separate(const LabeledVASS& v1, const LabeledVASS& v2);

struct SeparationReport {
    bool inclusion_ok = false;   // L(v1) subset of L(A)
    bool disjoint_ok = false;    // L(A) and L(v2) disjoint
    std::optional<Word> inclusion_counterexample;
    std::optional<Word> disjoint_counterexample;

    bool ok() const { return inclusion_ok && disjoint_ok; }
};

/// Exact verification: (1) inclusion via the product of v1 with the
/// complemented determinization of a (automaton states become extra control
/// components) and backward coverability; (2) disjointness via the product of
/// v2 with the determinization of a. Counterexample words are extracted from
/// the backward certificate on failure.
SeparationReport verify_separator(const LabeledVASS& v1, const LabeledVASS& v2,
                                  const SeparatorNfa& a);

struct SimulationCheck {
    Word word;
    bool product_dominated = true;  // every reached product configuration sits below a reached state
    bool v2_tracked = true;         // the unique v2 configuration sits inside every reached second factor
};

struct SimulationReport {
    std::vector<SimulationCheck> checks;
    bool ok() const {
        for (const auto& c : checks)
            if (!c.product_dominated || !c.v2_tracked) return false;
        return true;
    }
};

/// Sampled simulation properties of a constructed separator: for each word,
/// every concrete product configuration reached is dominated by some reached
/// automaton state, and v2's unique configuration (while its run is alive) is
/// below the second factor of every reached state payload.
SimulationReport check_simulation_properties(const LabeledVASS& v1, const LabeledVASS& v2,
                                             const SeparatorNfa& a,
                                             const std::vector<Word>& sample_words);

/// Product of a VASS with a total DFA over the same alphabet: DFA states
/// become extra control components, the dimension is unchanged. Targets are
/// the VASS final basis paired with DFA-final controls.
LabeledVASS product_with_dfa(const LabeledVASS& v, const fa::Dfa& d,
                             std::vector<VassConfig>* joint_targets);

}  // namespace sepwsts
