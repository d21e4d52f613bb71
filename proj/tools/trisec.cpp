// Command-line front end: every verification and table-generation workflow
// behind one binary with machine-readable output.
//
// Exit codes: 0 all checks passed, 1 a mathematical check failed (diagnostics
// in the report / on stderr), 2 usage or configuration error.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "trisec/classify.hpp"
#include "trisec/distributions.hpp"
#include "trisec/field.hpp"
#include "trisec/kakeya.hpp"
#include "trisec/parallel.hpp"
#include "trisec/report.hpp"
#include "trisec/steiner.hpp"
#include "trisec/verify.hpp"

namespace {

using namespace trisec;

std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  std::uint64_t v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw field_error("not an integer: '" + s + "'");
  }
  if (pos != s.size()) throw field_error("not an integer: '" + s + "'");
  return v;
}

std::vector<std::uint32_t> parse_u32_list(const std::string& s) {
  std::vector<std::uint32_t> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ','))
    out.push_back(std::uint32_t(parse_u64(item)));
  if (out.empty()) throw field_error("empty integer list");
  return out;
}

struct FieldArgs {
  std::uint32_t p = 0;
  std::uint32_t m = 0;
  std::string modulus;  // c0,c1,...,cm or empty for the default
};

void add_field_options(CLI::App* cmd, FieldArgs& fa, bool required = true) {
  auto* p = cmd->add_option("--p", fa.p, "field characteristic (prime)");
  auto* m = cmd->add_option("--m", fa.m, "extension degree");
  if (required) {
    p->required();
    m->required();
  }
  cmd->add_option("--modulus", fa.modulus,
                  "modulus coefficients c0,c1,...,cm, constant term first "
                  "(default: built-in primitive polynomial)");
}

Field make_field(const FieldArgs& fa) {
  if (fa.modulus.empty()) return Field::build(fa.p, fa.m);
  return Field::build(fa.p, fa.m, parse_u32_list(fa.modulus));
}

PolyFn parse_poly(const Field& F, const std::string& spec) {
  const auto colon = spec.find(':');
  if (colon == std::string::npos)
    throw field_error(
        "polynomial descriptor must be monomial:<d>, cubic:<a>, or "
        "dense:<c0,c1,...>");
  const std::string kind = spec.substr(0, colon);
  const std::string rest = spec.substr(colon + 1);
  if (kind == "monomial") {
    const std::uint64_t d = parse_u64(rest);
    if (d == 0) throw field_error("monomial exponent must be positive");
    return PolyFn::monomial(d);
  }
  if (kind == "cubic") {
    const Elem a = Elem(parse_u64(rest));
    F.check(a);
    return PolyFn::cubic(a);
  }
  if (kind == "dense") {
    std::vector<Elem> coeffs;
    for (std::uint32_t c : parse_u32_list(rest)) {
      F.check(c);
      coeffs.push_back(c);
    }
    return PolyFn::dense(coeffs);
  }
  throw field_error("unknown polynomial kind '" + kind + "'");
}

void emit(const std::string& content, const std::string& path) {
  if (path.empty()) {
    std::cout << content;
    return;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) throw field_error("cannot open output file '" + path + "'");
  out << content;
  if (!out) throw field_error("failed writing '" + path + "'");
}

unsigned resolve_workers(unsigned jobs) {
  return jobs == 0 ? default_workers() : jobs;
}

std::uint32_t default_budget() {
  const char* s = std::getenv("TRISEC_BUDGET");
  if (s == nullptr) return 512;
  return std::uint32_t(parse_u64(s));
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw field_error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

std::string checks_text(const std::vector<CheckResult>& results) {
  std::ostringstream out;
  for (const auto& r : results) {
    out << (r.pass ? "PASS" : "FAIL") << " " << r.name;
    if (!r.detail.empty()) out << ": " << r.detail;
    out << "\n";
  }
  return out.str();
}

bool all_pass(const std::vector<CheckResult>& results) {
  for (const auto& r : results)
    if (!r.pass) return false;
  return true;
}

KakeyaSize formula_only_row(const Field& F, Elem a, Elem b) {
  KakeyaSize r;
  r.a = a;
  r.b = b;
  r.special = kakeya_special_pair(F, a, b);
  r.via_formula = kakeya_size_formula(F, a, b);
  return r;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "Intersection distributions of low-degree polynomials over small "
      "finite fields: closed forms vs. enumeration, exponent scans, triple "
      "systems, and Kakeya set sizes."};
  app.require_subcommand(1);
  int rc = 0;

  // field-info
  FieldArgs fi_field;
  std::string fi_out;
  auto* fi = app.add_subcommand("field-info",
                                "Describe a field: modulus, generator, size");
  add_field_options(fi, fi_field);
  fi->add_option("--out", fi_out, "output path (default: stdout)");
  fi->callback([&] { emit(field_report(make_field(fi_field)), fi_out); });

  // muldist
  FieldArgs md_field;
  std::string md_poly, md_out;
  std::uint32_t md_b = 0;
  bool md_nonzero = false;
  auto* md = app.add_subcommand(
      "muldist", "Root-count histogram of f(x) - bx - c over all c");
  add_field_options(md, md_field);
  md->add_option("--poly", md_poly, "monomial:<d> | cubic:<a> | dense:<c0,c1,...>")
      ->required();
  md->add_option("--b", md_b, "slope b as a canonical element index");
  md->add_flag("--nonzero", md_nonzero, "count nonzero roots only");
  md->add_option("--out", md_out, "output path (default: stdout)");
  md->callback([&] {
    const Field F = make_field(md_field);
    F.check(md_b);
    const PolyFn f = parse_poly(F, md_poly);
    const auto row = md_nonzero ? multiplicity_row_nonzero(F, f, md_b)
                                : multiplicity_row(F, f, md_b);
    emit(row_report(F, f, row, md_nonzero), md_out);
  });

  // intdist
  FieldArgs id_field;
  std::string id_poly, id_out;
  unsigned id_jobs = 0;
  auto* id = app.add_subcommand(
      "intdist", "Line-intersection distribution of the graph of f");
  add_field_options(id, id_field);
  id->add_option("--poly", id_poly, "monomial:<d> | cubic:<a> | dense:<c0,c1,...>")
      ->required();
  id->add_option("--jobs", id_jobs, "worker threads (0 = auto)");
  id->add_option("--out", id_out, "output path (default: stdout)");
  id->callback([&] {
    const Field F = make_field(id_field);
    const PolyFn f = parse_poly(F, id_poly);
    const auto dist = intersection_distribution(F, f, resolve_workers(id_jobs));
    emit(distribution_report(F, f, dist), id_out);
  });

  // verify-cubic
  FieldArgs vc_field;
  std::string vc_out;
  unsigned vc_jobs = 0;
  auto* vc = app.add_subcommand(
      "verify-cubic",
      "Check every closed-form multiplicity row and covered related monomial "
      "of one field against enumeration");
  add_field_options(vc, vc_field);
  vc->add_option("--jobs", vc_jobs, "worker threads (0 = auto)");
  vc->add_option("--out", vc_out, "output path (default: stdout)");
  vc->callback([&] {
    const Field F = make_field(vc_field);
    const unsigned w = resolve_workers(vc_jobs);
    const std::vector<CheckResult> results = {
        verify_cubic_forms_field(F, w),
        verify_related_monomials_field(F, w),
    };
    emit(checks_report(results), vc_out);
    if (!all_pass(results)) rc = 1;
  });

  // nonhit-table
  FieldArgs nh_field;
  std::string nh_out, nh_format = "csv";
  unsigned nh_jobs = 0;
  std::uint32_t nh_budget = default_budget();
  auto* nh = app.add_subcommand(
      "nonhit-table", "Non-hitting index of every monomial x^d, d in [1, q-1]");
  add_field_options(nh, nh_field);
  nh->add_option("--jobs", nh_jobs, "worker threads (0 = auto)");
  nh->add_option("--budget", nh_budget,
                 "largest admissible q (default: TRISEC_BUDGET or 512)");
  nh->add_option("--format", nh_format, "csv or json (default: csv)")
      ->check(CLI::IsMember({"csv", "json"}));
  nh->add_option("--out", nh_out, "output path (default: stdout)");
  nh->callback([&] {
    const Field F = make_field(nh_field);
    const auto table =
        monomial_nonhitting_table(F, resolve_workers(nh_jobs), nh_budget);
    emit(nh_format == "csv" ? nonhitting_csv(F, table)
                            : nonhitting_json(F, table),
         nh_out);
  });

  // scan
  FieldArgs sc_field;
  std::string sc_json;
  unsigned sc_jobs = 0;
  std::uint32_t sc_budget = default_budget();
  auto* sc = app.add_subcommand(
      "scan",
      "Find every exponent d whose x^d matches the cubic intersection "
      "distribution, and compare against the known families");
  add_field_options(sc, sc_field);
  auto* sc_confirm =
      sc->add_flag("--confirm", "re-check every hit by full enumeration "
                                "(default: on for q <= 2048)");
  auto* sc_noconfirm = sc->add_flag("--no-confirm", "filter only");
  sc_noconfirm->excludes(sc_confirm);
  sc->add_option("--jobs", sc_jobs, "worker threads (0 = auto)");
  sc->add_option("--budget", sc_budget,
                 "largest admissible q (default: TRISEC_BUDGET or 512)");
  sc->add_option("--json", sc_json, "write the JSON report here "
                                    "(default: stdout)");
  sc->callback([&] {
    const Field F = make_field(sc_field);
    if (F.q() > sc_budget)
      throw budget_error("GF(" + std::to_string(F.q()) +
                         ") exceeds the scan budget " +
                         std::to_string(sc_budget) +
                         "; raise --budget or TRISEC_BUDGET");
    ScanOptions opts;
    opts.workers = resolve_workers(sc_jobs);
    opts.confirm = sc_confirm->count() > 0 ||
                   (sc_noconfirm->count() == 0 && F.q() <= 2048);
    const auto scan = scan_all_d(F, opts);
    const auto family = known_families(F);
    emit(scan_report(F, scan, family), sc_json);
    if (!compare_scan_to_families(scan.hits, family).equal()) rc = 1;
  });

  // sts build | check | iso
  auto* sts = app.add_subcommand("sts", "Triple systems from slope collisions");
  sts->require_subcommand(1);

  FieldArgs sb_field;
  std::string sb_poly, sb_out;
  unsigned sb_jobs = 0;
  auto* sb = sts->add_subcommand(
      "build", "Build the block set of a qualifying polynomial over GF(3^m)");
  add_field_options(sb, sb_field);
  sb->add_option("--poly", sb_poly, "monomial:<d> | cubic:<a> | dense:<c0,c1,...>")
      ->required();
  sb->add_option("--jobs", sb_jobs, "worker threads (0 = auto)");
  sb->add_option("--out", sb_out, "output path (default: stdout)");
  sb->callback([&] {
    const Field F = make_field(sb_field);
    const PolyFn f = parse_poly(F, sb_poly);
    emit(to_block_text(build_sts(F, f, resolve_workers(sb_jobs))), sb_out);
  });

  FieldArgs sk_field;
  std::string sk_in, sk_out;
  auto* sk = sts->add_subcommand(
      "check", "Validate a block file: pair coverage, pasch count, and (with "
               "--p/--m) the block-sum test");
  sk->add_option("--in", sk_in, "block file")->required();
  add_field_options(sk, sk_field, /*required=*/false);
  sk->add_option("--out", sk_out, "output path (default: stdout)");
  sk->callback([&] {
    const auto ts = from_block_text(read_file(sk_in));
    const auto chk = validate_sts(ts);
    const std::uint64_t pasch = chk.pass ? pasch_count(ts) : 0;
    if ((sk_field.p == 0) != (sk_field.m == 0))
      throw field_error("--p and --m must be given together");
    if (sk_field.p != 0) {
      const Field F = make_field(sk_field);
      const bool affine = is_affine(F, ts);
      emit(sts_report(ts, chk, &F, chk.pass ? &pasch : nullptr, &affine),
           sk_out);
    } else {
      emit(sts_report(ts, chk, nullptr, chk.pass ? &pasch : nullptr, nullptr),
           sk_out);
    }
    if (!chk.pass) rc = 1;
  });

  std::string si_a, si_b, si_out;
  std::uint64_t si_budget = 2000000;
  auto* si = sts->add_subcommand(
      "iso", "Decide isomorphism of two block files (invariants, then "
             "backtracking with a node budget)");
  si->add_option("--a", si_a, "first block file")->required();
  si->add_option("--b", si_b, "second block file")->required();
  si->add_option("--iso-budget", si_budget, "search node budget");
  si->add_option("--out", si_out, "output path (default: stdout)");
  si->callback([&] {
    const auto res = isomorphic(from_block_text(read_file(si_a)),
                                from_block_text(read_file(si_b)), si_budget);
    emit(iso_report(res), si_out);
    if (res.verdict == IsoResult::Verdict::kUndecided) rc = 1;
  });

  // kakeya
  FieldArgs kk_field;
  std::string kk_out, kk_format;
  bool kk_table = false;
  std::uint32_t kk_budget = default_budget();
  CLI::Option* kk_a_opt = nullptr;
  CLI::Option* kk_b_opt = nullptr;
  std::uint32_t kk_a = 0, kk_b = 0;
  auto* kk = app.add_subcommand(
      "kakeya", "Kakeya set sizes for x^3 - a x^2 and slope b: closed form "
                "cross-checked by plane enumeration");
  add_field_options(kk, kk_field);
  kk_a_opt = kk->add_option("--a", kk_a, "coefficient a (element index)");
  kk_b_opt = kk->add_option("--b", kk_b, "slope b (element index)");
  kk_a_opt->needs(kk_b_opt);
  kk_b_opt->needs(kk_a_opt);
  kk->add_flag("--table", kk_table,
               "all representative (a, b) branches (default when --a/--b "
               "are absent)");
  kk->add_option("--budget", kk_budget,
                 "largest q for plane enumeration; above it only the closed "
                 "form runs (default: TRISEC_BUDGET or 512)");
  kk->add_option("--format", kk_format,
                 "csv or json (default: csv for --table, else json)")
      ->check(CLI::IsMember({"csv", "json"}));
  kk->add_option("--out", kk_out, "output path (default: stdout)");
  kk->callback([&] {
    const Field F = make_field(kk_field);
    const bool single = kk_a_opt->count() > 0;
    if (single && kk_table)
      throw field_error("--table and --a/--b are mutually exclusive");
    const bool with_dual = F.q() <= kk_budget;
    std::vector<KakeyaSize> rows;
    if (single) {
      F.check(kk_a);
      F.check(kk_b);
      rows.push_back(with_dual ? kakeya_size(F, kk_a, kk_b)
                               : formula_only_row(F, kk_a, kk_b));
    } else {
      if (with_dual) {
        rows = cubic_kakeya_table(F);
      } else {
        for (auto [a, b] : kakeya_representatives(F))
          rows.push_back(formula_only_row(F, a, b));
      }
    }
    const std::string format =
        !kk_format.empty() ? kk_format : (single ? "json" : "csv");
    emit(format == "csv" ? kakeya_csv(F, rows)
                         : kakeya_json(F, rows, with_dual),
         kk_out);
    if (with_dual)
      for (const auto& r : rows)
        if (!r.agree) rc = 1;
  });

  // verify-all
  std::string va_out, va_format = "json";
  unsigned va_jobs = 0;
  std::uint64_t va_seed = 1;
  std::uint32_t va_qcap = 0;
  auto* va = app.add_subcommand(
      "verify-all", "The full correctness suite (closed forms, reference "
                    "tables, filter, triple systems, Kakeya sizes, bounds, "
                    "representation independence)");
  va->add_option("--jobs", va_jobs, "worker threads (0 = auto)");
  va->add_option("--seed", va_seed, "seed for the randomized property checks");
  va->add_option("--q-cap", va_qcap, "skip fields with q above this (0 = none)");
  va->add_option("--format", va_format, "json or text (default: json)")
      ->check(CLI::IsMember({"json", "text"}));
  va->add_option("--out", va_out, "output path (default: stdout)");
  va->callback([&] {
    VerifyOptions opts;
    opts.workers = resolve_workers(va_jobs);
    opts.seed = va_seed;
    opts.q_cap = va_qcap;
    const auto results = run_all_checks(opts);
    emit(va_format == "text" ? checks_text(results) : checks_report(results),
         va_out);
    if (!all_pass(results)) rc = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const internal_check_error& e) {
    nlohmann::ordered_json j;
    j["error"] = e.what();
    std::cerr << j.dump(2) << "\n";
    return 1;
  } catch (const budget_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return rc;
}
