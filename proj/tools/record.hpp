// record.hpp
// Serialization-ready catalogue records and their three renderings: one-line
// JSON (fixed field order, arbitrary-width decimal integers, byte-exact round
// trip), CSV (one row per filling), and an aligned text table.

#pragma once

#include <string>
#include <vector>

#include "lenscf/atlas.hpp"

namespace lenscf {

inline constexpr const char* kToolVersion = "1.0.0";
inline constexpr const char* kConvention = "greedy-ceiling-b-string";

struct FillingRecord {
    Word n;
    Int rank_h2;
    bool is_artin = false;
    bool is_rational_homology_ball = false;
    std::vector<long> witness;  // 1-based blowdown positions

    bool operator==(const FillingRecord&) const = default;
};

struct CatalogueRecord {
    Int p, q;
    long k = 0, h = 0;
    Word b_string, a_string;
    std::vector<FillingRecord> fillings;
    bool unique_up_to_blowup = false;
    bool kollar_certified = false;
    std::vector<Word> nrs_members;
    long filling_count_lower_bound = 1;
    std::string tool_version = kToolVersion;
    std::string convention = kConvention;

    bool operator==(const CatalogueRecord&) const = default;
};

CatalogueRecord record_from_atlas(const Atlas& atlas);

// One JSON object on a single line, no trailing newline. Field order is fixed
// (p, q, k, h, b_string, a_string, fillings, unique_up_to_blowup,
// kollar_certified, nrs_members, filling_count_lower_bound, tool_version,
// convention); integers are plain decimal of any width.
std::string record_json(const CatalogueRecord& rec);

// Strict parser for the record schema (objects, arrays, strings, booleans,
// arbitrary-width decimal integers). Throws std::runtime_error on anything
// malformed, missing, or unknown. record_json(record_from_json(s)) == s for
// every s this writer produced.
CatalogueRecord record_from_json(const std::string& line);

// CSV rendering: lens-space columns repeated on every filling row; words are
// space-joined, the nrs list semicolon-joined.
std::string record_csv_header();                     // no trailing newline
std::string record_csv_rows(const CatalogueRecord&); // one '\n'-ended line per filling

// Aligned two-column text report, trailing newline included.
std::string record_table(const CatalogueRecord& rec);

}  // namespace lenscf
