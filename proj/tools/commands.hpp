// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// CLI command bodies, shared between the binary and the acceptance suite.
// Exit codes are the machine contract: 0 ok, 1 verification failed, 2 input
// error, 3 precondition error, 10 not disjoint.
#pragma once

#include <cstddef>
#include <iosfwd>
#include <string>

namespace sepwsts::cli {

inline constexpr int kOk = 0;
inline constexpr int kVerificationFailed = 1;
inline constexpr int kInputError = 2;
inline constexpr int kPreconditionError = 3;
inline constexpr int kNotDisjoint = 10;

struct Options {
    std::size_t bound = 6;          // bound for all bounded enumerations
    std::string format = "json";    // "json" or "dot" for emitters
};

/// Reads the default bound from SEPWSTS_BOUND when set.
std::size_t default_bound();

int cmd_separate(const std::string& net1_path, const std::string& net2_path,
                 const std::string& out_dir, const Options& opts, std::ostream& out,
                 std::ostream& err);

int cmd_verify(const std::string& net1_path, const std::string& net2_path,
               const std::string& nfa_path, const Options& opts, std::ostream& out,
               std::ostream& err);

int cmd_rado_member(const std::string& word, std::ostream& out, std::ostream& err);
int cmd_rado_suffixes(long long i, long long j, std::ostream& out, std::ostream& err);
int cmd_rado_fragment_check(std::size_t max_len, std::ostream& out, std::ostream& err);

int cmd_km(const std::string& net_path, const Options& opts, std::ostream& out, std::ostream& err);
int cmd_covers(const std::string& net_path, const std::string& control,
               const std::string& marking_csv, std::ostream& out, std::ostream& err);
int cmd_membership(const std::string& net_path, const std::string& word, std::ostream& out,
                   std::ostream& err);
int cmd_det(const std::string& model_path, const Options& opts, std::ostream& out,
            std::ostream& err);

}  // namespace sepwsts::cli
