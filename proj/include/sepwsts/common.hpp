// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
#pragma once

#include <algorithm>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

namespace sepwsts {

/// Malformed or inconsistent input (bad JSON, dimension mismatch, unknown
/// letter, ...). Maps to CLI exit code 2.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// An operation was called on a model that violates its precondition
/// (non-deterministic where determinism is required, wrong direction, ...).
/// Maps to CLI exit code 3.
struct precondition_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Vector entry over the naturals extended with omega. omega is encoded as
/// the largest representable value, so the built-in integer order coincides
/// with the extended order (n <= omega for all n).
using Ent = std::int64_t;
inline constexpr Ent omega = std::numeric_limits<Ent>::max();

inline bool is_omega(Ent x) { return x == omega; }

/// omega + k = omega, otherwise plain addition.
inline Ent ent_add(Ent x, Ent k) { return is_omega(x) ? omega : x + k; }

/// omega - k = omega, otherwise plain subtraction (caller guarantees x >= k).
inline Ent ent_sub(Ent x, Ent k) { return is_omega(x) ? omega : x - k; }

/// A word is a sequence of letters; letters are strings so that model
/// alphabets are not limited to single characters.
using Word = std::vector<std::string>;

inline std::string word_to_string(const Word& w) {
    std::string s;
    for (const auto& a : w) s += a;
    return s;
}

inline Word reversed(Word w) {
    std::reverse(w.begin(), w.end());
    return w;
}

}  // namespace sepwsts
