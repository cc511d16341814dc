// Copyright (c) sepwsts contributors.
// SPDX-License-Identifier: Apache-2.0
//
// JSON and DOT encodings of models and analysis artifacts. All emitters are
// canonical: keys sorted, elements in canonical order, so identical inputs
// yield byte-identical files.
#pragma once

#include <string>

#include <json.hpp>

#include "sepwsts/fa.hpp"
#include "sepwsts/olts.hpp"
#include "sepwsts/separator.hpp"
#include "sepwsts/vass.hpp"

namespace sepwsts::io {

using nlohmann::json;

json marking_to_json(const OmegaMarking& m);
OmegaMarking marking_from_json(const json& j);

json cover_to_json(const IdealCover& c);
/// Parses and normalizes (the denoted set is preserved).
IdealCover cover_from_json(const json& j);

/// Markings serialized without normalization (used for pre-bases, whose
/// canonical form is the antichain of minimal elements).
json marking_list_to_json(std::vector<OmegaMarking> ms);

LabeledVASS vass_from_json(const json& j);
json vass_to_json(const LabeledVASS& v);

ExplicitOLTS olts_from_json(const json& j);
json olts_to_json(const ExplicitOLTS& u);

SeparatorNfa separator_from_json(const json& j);
json separator_to_json(const SeparatorNfa& a);
std::string separator_to_dot(const SeparatorNfa& a);

json nfa_to_json(const fa::Nfa& a);
std::string nfa_to_dot(const fa::Nfa& a);

/// Reads and parses a file; parse failures become input_error with the path
/// and location.
json load_json_file(const std::string& path);
void write_text_file(const std::string& path, const std::string& content);

/// FNV-1a 64-bit digest of a file's bytes, as 16 hex characters. Used to
/// record inputs in run reports.
std::string file_digest(const std::string& path);

}  // namespace sepwsts::io
