// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// Ideals of (control x N^d, = x <=) encoded as omega-markings, and finite
// inclusion-antichains of such ideals (covers) as the canonical
// representation of downward-closed sets.
#pragma once

#include <string>
#include <utility>
#include <vector>

#include "sepwsts/common.hpp"

namespace sepwsts {

/// A control state paired with a vector over N u {omega}. Denotes the ideal
/// { (control, m) : m <= vec componentwise }, omega meaning "no bound".
struct OmegaMarking {
    std::string control;
    std::vector<Ent> vec;

    bool operator==(const OmegaMarking& o) const {
        return control == o.control && vec == o.vec;
    }
};

/// Canonical order on markings: control first, then the vector
/// lexicographically with omega greatest. Used to keep covers byte-stable.
bool canonical_less(const OmegaMarking& a, const OmegaMarking& b);

/// Ideal inclusion: equal controls and componentwise <= with omega as top.
/// Throws input_error on dimension mismatch.
bool omega_leq(const OmegaMarking& u, const OmegaMarking& v);

/// A finite inclusion-antichain of omega-markings, kept in canonical order.
/// The empty cover denotes the empty set and is legal everywhere.
struct IdealCover {
    std::vector<OmegaMarking> elements;

    bool operator==(const IdealCover& o) const { return elements == o.elements; }
    bool empty() const { return elements.empty(); }
    std::size_t size() const { return elements.size(); }
};

/// Keep the inclusion-maximal elements; the denoted downward-closed set is
/// unchanged. Throws input_error on non-uniform dimensions.
IdealCover normalize(const std::vector<OmegaMarking>& ms);

/// True iff m lies in the set denoted by c, i.e. m <= e for some element e.
bool covers_point(const IdealCover& c, const OmegaMarking& m);

/// Denoted-set inclusion, decided elementwise (ideals are irreducible:
/// an ideal inside a decomposition sits inside one maximal ideal).
bool cover_leq(const IdealCover& a, const IdealCover& b);

/// Product ideal: pair control and concatenated vectors.
OmegaMarking join_product(const OmegaMarking& j1, const OmegaMarking& j2);

/// Inverse of join_product; d1 is the dimension of the first factor.
/// Throws input_error if d1 exceeds the dimension or the control of j is not
/// a pair control produced by join_product.
std::pair<OmegaMarking, OmegaMarking> split_product(const OmegaMarking& j, std::size_t d1);

/// Pair-control naming used by join_product / synchronized products.
std::string pair_control(const std::string& c1, const std::string& c2);
std::pair<std::string, std::string> split_pair_control(const std::string& c);

/// Cover of the downward closure of a finite set of concrete markings.
/// Throws input_error if any entry is omega.
IdealCover down_of_finite(const std::vector<OmegaMarking>& ms);

/// True iff the ideal denoted by e intersects the upward closure of the
/// concrete point b (same control; every entry of e is omega or >= b's).
bool ideal_meets_up(const OmegaMarking& e, const OmegaMarking& b);

/// Human-readable form control[x,y,w].
std::string to_string(const OmegaMarking& m);

}  // namespace sepwsts
