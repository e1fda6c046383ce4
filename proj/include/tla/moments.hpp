#pragma once

#include <map>
#include <string>
#include <vector>

#include "tla/classifier.hpp"
#include "tla/dynkin.hpp"

namespace tla {

// Canonical exact scalar text for JSON: "p/q" or "p/q+r/s*sqrt(d)",
// denominators always explicit.
std::string scalar_json(const Scalar& s);

// Printed case tags and their accepted aliases.
std::string case_tag(CaseKind kind);
CaseKind case_kind_from_tag(const std::string& tag);

// Moment input: either one of the four minimal cases or a general diagram
// row with per-node sequences.
struct MomentFile {
    bool general = false;
    MomentData data;            // minimal cases
    std::string diagram;        // general: affine type label
    std::vector<int> s_tilde;   // general: painted vertices
    long a_max = 0;             // general: window size
    std::map<int, GeneralNodeData> nodes;
};

std::string moment_file_json(const MomentFile& f);

// Errors carry kind "Schema" with a JSON pointer to the offending field.
MomentFile parse_moment_file(const std::string& text);

std::string classification_json(const ClassificationResult& r);

ClassificationResult classify_moment_file(const MomentFile& f);

} // namespace tla
