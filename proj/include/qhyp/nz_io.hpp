#pragma once
// JSON files for NZ data and raw gluing tables.
//
// NZ datum: {"N", "A", "B", "nu", "d", "f", "fp", "curve",
//            optional "shapes": {"zp": [[re, im], ...]}} with decimal-string entries.
// Raw gluing: {"G", "Gp", "Gpp", optional "eta"}, each (N+2) x N.

#include <optional>
#include <string>

#include "qhyp/oneloop.hpp"

namespace qhyp {

struct NZFile {
    NZDatum datum;
    std::optional<CVec> zp;  // shapes, when present
};

NZFile parse_nz_json(const std::string& text);
NZFile load_nz_file(const std::string& path);
std::string nz_to_json(const NZDatum& nz, const CVec* zp = nullptr, int digits = 30);

RawGluingData parse_raw_json(const std::string& text);
RawGluingData load_raw_file(const std::string& path);

}  // namespace qhyp
