#include "trisec/report.hpp"

#include <map>
#include <sstream>

#include "json.hpp"
#include "trisec/version.hpp"

namespace trisec {

namespace {

using json = nlohmann::ordered_json;

json header(const Field& F) {
  json j;
  j["field"] = F.to_string();
  j["q"] = F.q();
  j["version"] = kVersion;
  return j;
}

json poly_object(const PolyFn& f) {
  json j;
  switch (f.kind()) {
    case PolyFn::Kind::kMonomial:
      j["kind"] = "monomial";
      j["d"] = f.exponent();
      break;
    case PolyFn::Kind::kCubic:
      j["kind"] = "cubic";
      j["a"] = f.cubic_a();
      break;
    case PolyFn::Kind::kDense:
      j["kind"] = "dense";
      j["coeffs"] = f.coeffs();
      break;
  }
  return j;
}

template <typename Map>
json counts_object(const Map& counts) {
  json j = json::object();
  for (const auto& [i, n] : counts) j[std::to_string(i)] = n;
  return j;
}

std::string dump(const json& j) { return j.dump(2) + "\n"; }

void csv_preamble(std::ostringstream& out, const Field& F) {
  out << "# field: " << F.to_string() << "\n";
  out << "# version: " << kVersion << "\n";
}

}  // namespace

std::string field_report(const Field& F) {
  json j = header(F);
  j["p"] = F.p();
  j["m"] = F.m();
  j["modulus"] = F.modulus();
  j["generator"] = F.alpha();
  return dump(j);
}

std::string row_report(const Field& F, const PolyFn& f,
                       const MultiplicityRow& row, bool nonzero_variant) {
  json j = header(F);
  j["poly"] = poly_object(f);
  j["b"] = row.b;
  j["variant"] = nonzero_variant ? "nonzero" : "all";
  j["counts"] = counts_object(row.counts);
  return dump(j);
}

std::string distribution_report(const Field& F, const PolyFn& f,
                                const IntersectionDistribution& dist) {
  json j = header(F);
  j["poly"] = poly_object(f);
  j["counts"] = counts_object(dist.counts);
  j["v0"] = dist.at(0);
  return dump(j);
}

std::string scan_report(const Field& F, const ScanResult& scan,
                        const std::vector<std::uint64_t>& family) {
  json j = header(F);
  j["confirmed"] = scan.confirmed;
  json hits = json::array();
  for (std::size_t i = 0; i < scan.hits.size(); ++i) {
    json h;
    h["d"] = scan.hits[i];
    h["filter"] = true;
    if (scan.confirmed && i < scan.hit_distributions.size())
      h["oracle_counts"] = counts_object(scan.hit_distributions[i].counts);
    hits.push_back(h);
  }
  j["hits"] = hits;
  j["known_families"] = family;
  FamilyComparison cmp = compare_scan_to_families(scan.hits, family);
  j["scan_only"] = cmp.scan_only;
  j["family_only"] = cmp.family_only;
  j["families_match"] = cmp.equal();
  return dump(j);
}

std::string nonhitting_json(const Field& F, const NonhittingTable& t) {
  json j = header(F);
  json rows = json::array();
  for (const auto& e : t.entries) {
    json r;
    r["exponents"] = e.ds;
    r["v0"] = e.v0;
    rows.push_back(r);
  }
  j["entries"] = rows;
  return dump(j);
}

std::string nonhitting_csv(const Field& F, const NonhittingTable& t) {
  std::ostringstream out;
  csv_preamble(out, F);
  out << "q,exponents,v0\n";
  for (const auto& e : t.entries) {
    out << t.q << ",";
    for (std::size_t i = 0; i < e.ds.size(); ++i) {
      if (i) out << "|";
      out << e.ds[i];
    }
    out << "," << e.v0 << "\n";
  }
  return out.str();
}

std::string kakeya_json(const Field& F, const std::vector<KakeyaSize>& rows,
                        bool with_dual) {
  json j = header(F);
  json arr = json::array();
  for (const auto& r : rows) {
    json row;
    row["a"] = r.a;
    row["b"] = r.b;
    row["branch"] = r.special ? "special" : "generic";
    row["size"] = r.via_formula;
    if (with_dual) {
      row["dual_size"] = r.via_dual;
      row["u0"] = r.u0_dual;
      row["agree"] = r.agree;
    }
    arr.push_back(row);
  }
  j["rows"] = arr;
  return dump(j);
}

std::string kakeya_csv(const Field& F, const std::vector<KakeyaSize>& rows) {
  std::map<std::uint64_t, std::string> tags;
  for (const auto& r : rows) {
    const std::string tag = r.special ? "special" : "generic";
    auto [it, inserted] = tags.emplace(r.via_formula, tag);
    if (!inserted && it->second != tag)
      throw internal_check_error("one size reached from both branches");
  }
  std::ostringstream out;
  csv_preamble(out, F);
  out << "q,sizes,branches\n";
  out << F.q() << ",";
  bool sep = false;
  for (const auto& [size, tag] : tags) {
    (void)tag;
    if (sep) out << "|";
    out << size;
    sep = true;
  }
  out << ",";
  sep = false;
  for (const auto& [size, tag] : tags) {
    (void)size;
    if (sep) out << "|";
    out << tag;
    sep = true;
  }
  out << "\n";
  return out.str();
}

std::string sts_report(const TripleSystem& ts, const SystemCheck& chk,
                       const Field* F, const std::uint64_t* pasch,
                       const bool* affine) {
  json j;
  if (F != nullptr) {
    j["field"] = F->to_string();
    j["q"] = F->q();
  }
  j["version"] = kVersion;
  j["v"] = ts.v;
  j["blocks"] = ts.blocks.size();
  j["valid"] = chk.pass;
  if (!chk.detail.empty()) j["detail"] = chk.detail;
  if (pasch != nullptr) j["pasch"] = *pasch;
  if (affine != nullptr) j["affine"] = *affine;
  return dump(j);
}

std::string iso_report(const IsoResult& res) {
  json j;
  j["version"] = kVersion;
  switch (res.verdict) {
    case IsoResult::Verdict::kIsomorphic:
      j["verdict"] = "isomorphic";
      break;
    case IsoResult::Verdict::kNonIsomorphic:
      j["verdict"] = "nonisomorphic";
      break;
    case IsoResult::Verdict::kUndecided:
      j["verdict"] = "undecided";
      break;
  }
  j["nodes"] = res.nodes;
  if (!res.reason.empty()) j["reason"] = res.reason;
  if (res.verdict == IsoResult::Verdict::kIsomorphic) j["witness"] = res.witness;
  return dump(j);
}

std::string checks_report(const std::vector<CheckResult>& results) {
  json j;
  j["version"] = kVersion;
  bool all = true;
  json arr = json::array();
  for (const auto& r : results) {
    json c;
    c["name"] = r.name;
    c["pass"] = r.pass;
    if (!r.detail.empty()) c["detail"] = r.detail;
    arr.push_back(c);
    all = all && r.pass;
  }
  j["checks"] = arr;
  j["pass"] = all;
  return dump(j);
}

}  // namespace trisec
