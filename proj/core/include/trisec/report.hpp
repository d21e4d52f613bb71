#pragma once

// Serialization of results for the command line: JSON documents of the shape
// {field, q, version, ...} with count maps keyed by ascending integers, and
// CSV for the two tables. Every report carries the field description string
// and the library version; identical inputs give byte-identical output.

#include <cstdint>
#include <string>
#include <vector>

#include "trisec/classify.hpp"
#include "trisec/distributions.hpp"
#include "trisec/kakeya.hpp"
#include "trisec/steiner.hpp"
#include "trisec/verify.hpp"

namespace trisec {

std::string field_report(const Field& F);

std::string row_report(const Field& F, const PolyFn& f,
                       const MultiplicityRow& row, bool nonzero_variant);

std::string distribution_report(const Field& F, const PolyFn& f,
                                const IntersectionDistribution& dist);

// per-hit evidence (oracle counts when the scan confirmed) plus the
// comparison against the known exponent families
std::string scan_report(const Field& F, const ScanResult& scan,
                        const std::vector<std::uint64_t>& family);

std::string nonhitting_json(const Field& F, const NonhittingTable& t);
std::string nonhitting_csv(const Field& F, const NonhittingTable& t);

// with_dual = false drops the plane-enumeration columns (formula-only runs)
std::string kakeya_json(const Field& F, const std::vector<KakeyaSize>& rows,
                        bool with_dual);
// one row per q: the sorted size list with a branch tag per size
std::string kakeya_csv(const Field& F, const std::vector<KakeyaSize>& rows);

// pasch/affine are optional extras (null = not computed); F may be null for
// systems loaded from a plain block file
std::string sts_report(const TripleSystem& ts, const SystemCheck& chk,
                       const Field* F, const std::uint64_t* pasch,
                       const bool* affine);

std::string iso_report(const IsoResult& res);

std::string checks_report(const std::vector<CheckResult>& results);

}
