#include "trisec/steiner.hpp"

#include <algorithm>
#include <sstream>

#include "trisec/classify.hpp"
#include "trisec/parallel.hpp"

namespace trisec {
namespace {

constexpr std::uint32_t kNone = 0xFFFFFFFF;

// third[x * v + y] = the point completing the block through {x, y}
std::vector<std::uint32_t> third_table(const TripleSystem& ts) {
  const std::uint64_t v = ts.v;
  std::vector<std::uint32_t> third(v * v, kNone);
  auto set = [&](std::uint32_t x, std::uint32_t y, std::uint32_t z) {
    auto& slot = third[std::uint64_t(x) * v + y];
    if (slot != kNone)
      throw internal_check_error("point pair covered by two blocks");
    slot = z;
  };
  for (const auto& blk : ts.blocks) {
    set(blk[0], blk[1], blk[2]);
    set(blk[1], blk[0], blk[2]);
    set(blk[0], blk[2], blk[1]);
    set(blk[2], blk[0], blk[1]);
    set(blk[1], blk[2], blk[0]);
    set(blk[2], blk[1], blk[0]);
  }
  return third;
}

// blocks through each point, as the pair of other points
std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> point_blocks(
    const TripleSystem& ts) {
  std::vector<std::vector<std::pair<std::uint32_t, std::uint32_t>>> at(ts.v);
  for (const auto& blk : ts.blocks) {
    at[blk[0]].emplace_back(blk[1], blk[2]);
    at[blk[1]].emplace_back(blk[0], blk[2]);
    at[blk[2]].emplace_back(blk[0], blk[1]);
  }
  return at;
}

}  // namespace

TripleSystem build_sts(const Field& F, const PolyFn& f, unsigned workers) {
  const std::uint32_t q = F.q();
  if (F.p() != 3)
    throw field_error("triple systems arise only in characteristic 3");
  const bool flat =
      f.kind() == PolyFn::Kind::kMonomial
          ? is_cubic_like(F, f.exponent())
          : intersection_distribution(F, f, workers) ==
                closed_form_cubic_intdist(F, 0);
  if (!flat)
    throw field_error(
        "some argument pair of " + f.describe() +
        " has no unique collinear completion; no triple system");

  const auto values = f.value_table(F);
  std::vector<std::vector<std::array<std::uint32_t, 3>>> parts(
      workers == 0 ? 1 : workers);
  parallel_chunks(q, workers, [&](unsigned slot, std::uint64_t lo,
                                  std::uint64_t hi) {
    auto& out = parts[slot];
    std::vector<Elem> partner(q, kNone);
    std::vector<Elem> touched;
    touched.reserve(q);
    for (Elem x1 = Elem(lo); x1 < Elem(hi); ++x1) {
      for (Elem x2 = 0; x2 < q; ++x2) {
        if (x2 == x1) continue;
        const Elem s = F.mul(F.sub(values[x2], values[x1]),
                             F.inv(F.sub(x2, x1)));
        if (partner[s] == kNone) {
          partner[s] = x2;
          touched.push_back(s);
        } else {
          const Elem x3 = partner[s];
          if (x3 == q)
            throw internal_check_error("three arguments share a slope");
          partner[s] = q;  // consumed
          if (x1 < x3) out.push_back({x1, x3, x2});
        }
      }
      for (Elem s : touched) {
        if (partner[s] != q && partner[s] != kNone)
          throw internal_check_error("argument pair without completion");
        partner[s] = kNone;
      }
      touched.clear();
    }
  });

  TripleSystem ts;
  ts.v = q;
  for (auto& part : parts)
    ts.blocks.insert(ts.blocks.end(), part.begin(), part.end());
  std::sort(ts.blocks.begin(), ts.blocks.end());
  if (ts.blocks.size() != std::uint64_t(q) * (q - 1) / 6)
    throw internal_check_error("wrong block count");
  return ts;
}

SystemCheck validate_sts(const TripleSystem& ts) {
  const std::uint64_t v = ts.v;
  if (ts.blocks.size() != v * (v - 1) / 6)
    return {false, "expected " + std::to_string(v * (v - 1) / 6) +
                       " blocks, found " + std::to_string(ts.blocks.size())};
  for (const auto& blk : ts.blocks)
    if (!(blk[0] < blk[1] && blk[1] < blk[2] && blk[2] < v))
      return {false, "malformed block " + std::to_string(blk[0]) + " " +
                         std::to_string(blk[1]) + " " + std::to_string(blk[2])};
  std::vector<std::uint8_t> covered(v * v, 0);
  for (const auto& blk : ts.blocks)
    for (int i = 0; i < 3; ++i)
      for (int j = i + 1; j < 3; ++j) {
        auto& c = covered[std::uint64_t(blk[i]) * v + blk[j]];
        if (c) {
          return {false, "pair {" + std::to_string(blk[i]) + ", " +
                             std::to_string(blk[j]) +
                             "} covered more than once"};
        }
        c = 1;
      }
  for (std::uint64_t x = 0; x < v; ++x)
    for (std::uint64_t y = x + 1; y < v; ++y)
      if (!covered[x * v + y])
        return {false, "pair {" + std::to_string(x) + ", " +
                           std::to_string(y) + "} uncovered"};
  return {true, ""};
}

bool is_affine(const Field& F, const TripleSystem& ts) {
  if (ts.v != F.q())
    throw field_error("triple system and field have different sizes");
  for (const auto& blk : ts.blocks)
    if (F.add(F.add(blk[0], blk[1]), blk[2]) != 0) return false;
  return true;
}

bool is_additive(const Field& F, const PolyFn& f) {
  const std::uint32_t q = F.q();
  const auto values = f.value_table(F);
  for (Elem x = 0; x < q; ++x)
    for (Elem y = x; y < q; ++y)
      if (values[F.add(x, y)] != F.add(values[x], values[y])) return false;
  return true;
}

std::uint64_t pasch_count(const TripleSystem& ts) {
  const auto third = third_table(ts);
  const auto at = point_blocks(ts);
  const std::uint64_t v = ts.v;
  auto t3 = [&](std::uint32_t x, std::uint32_t y) {
    return third[std::uint64_t(x) * v + y];
  };
  std::uint64_t hits = 0;
  for (std::uint32_t p = 0; p < ts.v; ++p) {
    const auto& here = at[p];
    for (std::size_t i = 0; i < here.size(); ++i)
      for (std::size_t j = i + 1; j < here.size(); ++j) {
        const auto [b, c] = here[i];
        const auto [d, e] = here[j];
        hits += t3(b, d) == t3(c, e);
        hits += t3(b, e) == t3(c, d);
      }
  }
  if (hits % 6 != 0)
    throw internal_check_error("pasch hit count not divisible by 6");
  return hits / 6;
}

std::map<std::vector<std::uint32_t>, std::uint64_t> cycle_signature(
    const TripleSystem& ts) {
  const auto third = third_table(ts);
  const std::uint64_t v = ts.v;
  auto t3 = [&](std::uint32_t x, std::uint32_t y) {
    return third[std::uint64_t(x) * v + y];
  };
  std::map<std::vector<std::uint32_t>, std::uint64_t> sig;
  std::vector<std::uint32_t> stamp(v, kNone);
  std::uint32_t epoch = 0;
  for (std::uint32_t x = 0; x < v; ++x)
    for (std::uint32_t y = x + 1; y < v; ++y) {
      const std::uint32_t z = t3(x, y);
      ++epoch;
      stamp[x] = stamp[y] = stamp[z] = epoch;
      std::vector<std::uint32_t> lens;
      for (std::uint32_t u = 0; u < v; ++u) {
        if (stamp[u] == epoch) continue;
        std::uint32_t len = 0;
        std::uint32_t cur = u;
        bool use_x = true;
        do {
          stamp[cur] = epoch;
          ++len;
          cur = use_x ? t3(x, cur) : t3(y, cur);
          use_x = !use_x;
        } while (cur != u);
        lens.push_back(len);
      }
      std::sort(lens.begin(), lens.end());
      ++sig[lens];
    }
  return sig;
}

namespace {

struct PlanStep {
  std::uint32_t point = 0;
  bool forced = false;
  std::uint32_t s = 0, t = 0;  // when forced: point = third(s, t)
};

// Assignment order over the points of `a`: a point is forced as soon as two
// block-mates are placed, otherwise the smallest unplaced point opens a new
// branch level.
std::vector<PlanStep> build_plan(std::uint32_t v,
                                 const std::vector<std::uint32_t>& third) {
  std::vector<PlanStep> plan;
  std::vector<std::uint8_t> placed(v, 0);
  std::vector<std::uint32_t> order;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> queue;
  std::size_t head = 0;
  auto place = [&](std::uint32_t u, bool forced, std::uint32_t s,
                   std::uint32_t t) {
    plan.push_back({u, forced, s, t});
    placed[u] = 1;
    for (std::uint32_t w : order) queue.emplace_back(w, u);
    order.push_back(u);
  };
  std::uint32_t next_free = 0;
  while (order.size() < v) {
    bool progressed = false;
    while (head < queue.size()) {
      const auto [s, t] = queue[head++];
      const std::uint32_t w = third[std::uint64_t(s) * v + t];
      if (!placed[w]) {
        place(w, true, s, t);
        progressed = true;
        break;
      }
    }
    if (progressed) continue;
    while (placed[next_free]) ++next_free;
    place(next_free, false, 0, 0);
  }
  return plan;
}

struct IsoSearch {
  std::uint32_t v;
  const std::vector<std::uint32_t>& third_a;
  const std::vector<std::uint32_t>& third_b;
  const std::vector<PlanStep>& plan;
  std::uint64_t budget;
  std::uint64_t nodes = 0;
  bool out_of_budget = false;
  std::vector<std::uint32_t> map;
  std::vector<std::uint8_t> used;
  std::vector<std::uint32_t> order;  // points of `a` mapped so far

  IsoSearch(std::uint32_t v_, const std::vector<std::uint32_t>& ta,
            const std::vector<std::uint32_t>& tb,
            const std::vector<PlanStep>& plan_, std::uint64_t budget_)
      : v(v_), third_a(ta), third_b(tb), plan(plan_), budget(budget_),
        map(v_, kNone), used(v_, 0) {}

  std::uint32_t ta(std::uint32_t x, std::uint32_t y) const {
    return third_a[std::uint64_t(x) * v + y];
  }
  std::uint32_t tb(std::uint32_t x, std::uint32_t y) const {
    return third_b[std::uint64_t(x) * v + y];
  }

  // mapping u -> img must send every block through u and a mapped point to
  // a block of b, and must not steal an image reserved by an unmapped third
  bool consistent(std::uint32_t u, std::uint32_t img) const {
    for (std::uint32_t w : order) {
      const std::uint32_t t_a = ta(u, w);
      const std::uint32_t t_b = tb(img, map[w]);
      if (map[t_a] != kNone) {
        if (map[t_a] != t_b) return false;
      } else if (used[t_b] || t_b == img) {
        return false;
      }
    }
    return true;
  }

  bool dfs(std::size_t idx) {
    if (out_of_budget) return false;
    if (idx == plan.size()) return true;
    const auto& step = plan[idx];
    if (++nodes > budget) {
      out_of_budget = true;
      return false;
    }
    if (step.forced) {
      const std::uint32_t img = tb(map[step.s], map[step.t]);
      if (used[img] || !consistent(step.point, img)) return false;
      assign(step.point, img);
      if (dfs(idx + 1)) return true;
      unassign(step.point, img);
      return false;
    }
    for (std::uint32_t img = 0; img < v; ++img) {
      if (used[img] || !consistent(step.point, img)) continue;
      assign(step.point, img);
      if (dfs(idx + 1)) return true;
      unassign(step.point, img);
      if (out_of_budget) return false;
    }
    return false;
  }

  void assign(std::uint32_t u, std::uint32_t img) {
    map[u] = img;
    used[img] = 1;
    order.push_back(u);
  }
  void unassign(std::uint32_t u, std::uint32_t img) {
    map[u] = kNone;
    used[img] = 0;
    order.pop_back();
  }
};

}  // namespace

TripleSystem relabel(const TripleSystem& ts,
                     const std::vector<std::uint32_t>& perm) {
  if (perm.size() != ts.v) throw field_error("permutation has wrong size");
  TripleSystem out;
  out.v = ts.v;
  out.blocks.reserve(ts.blocks.size());
  for (const auto& blk : ts.blocks) {
    std::array<std::uint32_t, 3> nb = {perm[blk[0]], perm[blk[1]],
                                       perm[blk[2]]};
    std::sort(nb.begin(), nb.end());
    out.blocks.push_back(nb);
  }
  std::sort(out.blocks.begin(), out.blocks.end());
  return out;
}

IsoResult isomorphic(const TripleSystem& a, const TripleSystem& b,
                     std::uint64_t node_budget) {
  IsoResult res;
  if (a.v != b.v || a.blocks.size() != b.blocks.size()) {
    res.verdict = IsoResult::Verdict::kNonIsomorphic;
    res.reason = "different sizes";
    return res;
  }
  if (pasch_count(a) != pasch_count(b)) {
    res.verdict = IsoResult::Verdict::kNonIsomorphic;
    res.reason = "pasch counts differ";
    return res;
  }
  if (cycle_signature(a) != cycle_signature(b)) {
    res.verdict = IsoResult::Verdict::kNonIsomorphic;
    res.reason = "cycle signatures differ";
    return res;
  }

  const auto third_a = third_table(a);
  const auto third_b = third_table(b);
  const auto plan = build_plan(a.v, third_a);
  IsoSearch search(a.v, third_a, third_b, plan, node_budget);
  const bool found = search.dfs(0);
  res.nodes = search.nodes;
  if (found) {
    if (relabel(a, search.map).blocks != b.blocks)
      throw internal_check_error("isomorphism witness failed re-verification");
    res.verdict = IsoResult::Verdict::kIsomorphic;
    res.witness = search.map;
    res.reason = "witness found";
    return res;
  }
  if (search.out_of_budget) {
    res.verdict = IsoResult::Verdict::kUndecided;
    res.reason = "node budget exhausted";
    return res;
  }
  res.verdict = IsoResult::Verdict::kNonIsomorphic;
  res.reason = "search exhausted without witness";
  return res;
}

std::string to_block_text(const TripleSystem& ts) {
  auto blocks = ts.blocks;
  std::sort(blocks.begin(), blocks.end());
  std::ostringstream out;
  out << "v=" << ts.v << "\n";
  for (const auto& blk : blocks)
    out << blk[0] << " " << blk[1] << " " << blk[2] << "\n";
  return out.str();
}

TripleSystem from_block_text(const std::string& text) {
  std::istringstream in(text);
  std::string header;
  if (!(in >> header) || header.rfind("v=", 0) != 0)
    throw field_error("block text must start with v=<points>");
  TripleSystem ts;
  try {
    std::size_t used = 0;
    const std::string num = header.substr(2);
    ts.v = std::stoul(num, &used);
    if (used != num.size()) throw std::invalid_argument(num);
  } catch (const std::exception&) {
    throw field_error("bad point count in '" + header + "'");
  }
  std::uint64_t x, y, z;
  while (in >> x) {
    if (!(in >> y >> z)) throw field_error("truncated block line");
    if (!(x < y && y < z && z < ts.v))
      throw field_error("block " + std::to_string(x) + " " + std::to_string(y) +
                        " " + std::to_string(z) +
                        " is not ascending and in range");
    ts.blocks.push_back({std::uint32_t(x), std::uint32_t(y), std::uint32_t(z)});
  }
  if (!in.eof()) throw field_error("unreadable token in block text");
  std::sort(ts.blocks.begin(), ts.blocks.end());
  const auto dup = std::adjacent_find(ts.blocks.begin(), ts.blocks.end());
  if (dup != ts.blocks.end()) throw field_error("duplicate block in text");
  return ts;
}

}
