#include "f4prolong/f4roots/f4roots.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "f4prolong/cli/report_io.hpp"

namespace f4prolong {

namespace {

const char* kRefRemark = "correspondence between zetas and roots of F4";

Root add(const Root& a, const Root& b) {
  Root r;
  for (std::size_t i = 0; i < 4; ++i) r[i] = a[i] + b[i];
  return r;
}

Root simple(std::size_t i) {
  Root r{0, 0, 0, 0};
  r[i] = 1;
  return r;
}

std::string counts_string(const std::vector<std::size_t>& v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? "," : "") + std::to_string(v[i]);
  return s + ")";
}

std::string zeta_label(std::size_t k) { return "zeta" + std::to_string(k); }

}  // namespace

CartanMatrix f4_cartan_matrix() { return {{{2, -1, 0, 0}, {-1, 2, -2, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}}}; }

int height(const Root& r) { return r[0] + r[1] + r[2] + r[3]; }

std::string root_string(const Root& r) {
  std::string s;
  for (std::size_t i = 0; i < 4; ++i) {
    if (r[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (r[i] != 1) s += std::to_string(r[i]);
    s += "a" + std::to_string(i + 1);
  }
  return s.empty() ? "0" : s;
}

bool RootSystem::is_positive_root(const Root& r) const {
  return std::find(positive_roots.begin(), positive_roots.end(), r) != positive_roots.end();
}

Root RootSystem::highest() const {
  if (positive_roots.empty()) throw std::logic_error("empty root system");
  return *std::max_element(positive_roots.begin(), positive_roots.end(),
                           [](const Root& a, const Root& b) { return height(a) < height(b); });
}

RootSystem generate_positive_roots(const CartanMatrix& a) {
  for (std::size_t i = 0; i < 4; ++i) {
    if (a[i][i] != 2) throw std::invalid_argument("Cartan matrix needs 2 on the diagonal");
    for (std::size_t j = 0; j < 4; ++j) {
      if (i == j) continue;
      if (a[i][j] > 0) throw std::invalid_argument("Cartan matrix needs non-positive off-diagonal entries");
      if ((a[i][j] == 0) != (a[j][i] == 0)) throw std::invalid_argument("Cartan matrix zero pattern is not symmetric");
      if (a[i][j] * a[j][i] > 3) throw std::invalid_argument("Cartan matrix is not of finite type");
    }
  }
  RootSystem rs;
  rs.cartan = a;
  std::set<Root> known;
  std::vector<Root> level;
  for (std::size_t i = 0; i < 4; ++i) {
    level.push_back(simple(i));
    known.insert(simple(i));
  }
  constexpr std::size_t kLimit = 1000;
  while (!level.empty()) {
    rs.positive_roots.insert(rs.positive_roots.end(), level.begin(), level.end());
    std::set<Root> next;
    for (const Root& b : level) {
      for (std::size_t i = 0; i < 4; ++i) {
        // alpha_i-string through b: b - p alpha_i, ..., b + q alpha_i, p - q = <b, alpha_i^vee>
        int p = 0;
        Root down = b;
        for (;;) {
          down[i] -= 1;
          if (!known.count(down)) break;
          ++p;
        }
        int pairing = 0;
        for (std::size_t j = 0; j < 4; ++j) pairing += b[j] * a[j][i];
        if (p - pairing > 0) next.insert(add(b, simple(i)));
      }
    }
    level.assign(next.begin(), next.end());
    for (const Root& r : level) known.insert(r);
    if (known.size() > kLimit) throw std::invalid_argument("Cartan matrix is not of finite type");
  }
  return rs;
}

std::vector<std::size_t> height_distribution(const RootSystem& rs) {
  std::vector<std::size_t> out;
  for (const Root& r : rs.positive_roots) {
    const auto h = static_cast<std::size_t>(height(r));
    if (out.size() < h) out.resize(h, 0);
    ++out[h - 1];
  }
  return out;
}

std::vector<std::size_t> alpha4_grading(const RootSystem& rs) {
  std::vector<std::size_t> out;
  for (const Root& r : rs.positive_roots) {
    const auto c = static_cast<std::size_t>(r[3]);
    if (out.size() <= c) out.resize(c + 1, 0);
    ++out[c];
  }
  return out;
}

RootAssignment printed_assignment() {
  return {{{1, 0, 0, 0}, {0, 1, 0, 0}, {0, 0, 1, 0}, {0, 0, 0, 1}, {1, 1, 0, 0}, {0, 1, 1, 0},
           {0, 0, 1, 1}, {1, 1, 1, 0}, {0, 1, 1, 1}, {0, 1, 2, 0}, {1, 1, 1, 1}, {1, 1, 2, 0},
           {0, 1, 2, 1}, {1, 1, 2, 1}, {1, 2, 2, 0}, {0, 1, 2, 2}, {1, 1, 2, 1}, {1, 1, 2, 2},
           {1, 2, 2, 2}, {1, 2, 3, 1}, {1, 2, 3, 2}, {1, 2, 4, 2}, {1, 3, 4, 2}, {2, 3, 4, 2}}};
}

Correspondence verify_root_correspondence(const BracketTable& table, const RootAssignment& start,
                                          const RootSystem& rs, const std::vector<std::size_t>& weights) {
  Correspondence c;
  c.assignment = start;
  Report& rep = c.report;
  rep.suite = "roots.correspondence";

  // single-target nonzero entries: (i, j, k)
  struct Hit {
    std::size_t i, j, k;
  };
  std::vector<Hit> hits;
  std::size_t multi = 0, nonconstant = 0;
  for (const auto& e : table.entries) {
    if (!e.coefficients) {
      ++nonconstant;
      continue;
    }
    std::vector<std::size_t> targets;
    for (std::size_t k = 0; k < 24; ++k)
      if ((*e.coefficients)[k] != 0) targets.push_back(k + 1);
    if (targets.size() == 1) hits.push_back({e.i, e.j, targets[0]});
    if (targets.size() > 1) ++multi;
  }
  rep.check("roots.single_term", "every nonzero table entry is a multiple of one zeta", multi == 0 && nonconstant == 0,
            std::to_string(multi) + " multi-term, " + std::to_string(nonconstant) + " non-constant", "0, 0", kRefRemark);

  // repairs in increasing zeta order, so sources are settled first
  for (std::size_t k = 5; k <= 24; ++k) {
    std::set<Root> forced;
    bool violated = false;
    for (const Hit& h : hits) {
      if (h.k != k || h.i >= k || h.j >= k) continue;
      const Root r = add(c.assignment[h.i - 1], c.assignment[h.j - 1]);
      forced.insert(r);
      violated = violated || r != c.assignment[k - 1];
    }
    if (!violated) continue;
    const Root old = c.assignment[k - 1];
    if (forced.size() == 1 && rs.is_positive_root(*forced.begin())) {
      c.assignment[k - 1] = *forced.begin();
      c.repaired.push_back(k);
      rep.discrepancy("roots.repair." + zeta_label(k),
                      "additivity forces a different root for " + zeta_label(k),
                      "-(" + root_string(*forced.begin()) + ")", "-(" + root_string(old) + ")", kRefRemark);
    } else {
      rep.check("roots.repair." + zeta_label(k), "additivity determines a unique root for " + zeta_label(k), false,
                std::to_string(forced.size()) + " candidate roots", "1", kRefRemark);
    }
  }

  std::size_t additive = 0;
  std::string bad_add;
  for (const Hit& h : hits) {
    if (add(c.assignment[h.i - 1], c.assignment[h.j - 1]) == c.assignment[h.k - 1]) {
      ++additive;
    } else if (bad_add.empty()) {
      bad_add = "; [" + zeta_label(h.i) + ", " + zeta_label(h.j) + "] -> " + zeta_label(h.k);
    }
  }
  rep.check("roots.additive", "root(i) + root(j) = root(k) whenever [zeta_i, zeta_j] = c zeta_k",
            additive == hits.size(), std::to_string(additive) + "/" + std::to_string(hits.size()) + bad_add,
            std::to_string(hits.size()) + "/" + std::to_string(hits.size()), kRefRemark);

  std::size_t zeros = 0, zeros_ok = 0;
  std::string bad_zero;
  for (const auto& e : table.entries) {
    if (!e.coefficients) continue;
    bool zero = true;
    for (const auto& x : *e.coefficients) zero = zero && x == 0;
    if (!zero) continue;
    ++zeros;
    if (!rs.is_positive_root(add(c.assignment[e.i - 1], c.assignment[e.j - 1]))) {
      ++zeros_ok;
    } else if (bad_zero.empty()) {
      bad_zero = "; [" + zeta_label(e.i) + ", " + zeta_label(e.j) + "]";
    }
  }
  rep.check("roots.zero_entries", "root(i) + root(j) is not a root whenever [zeta_i, zeta_j] = 0", zeros == zeros_ok,
            std::to_string(zeros_ok) + "/" + std::to_string(zeros) + bad_zero,
            std::to_string(zeros) + "/" + std::to_string(zeros), kRefRemark);

  std::size_t heights = 0;
  for (std::size_t k = 0; k < 24 && k < weights.size(); ++k)
    if (static_cast<std::size_t>(height(c.assignment[k])) == weights[k]) ++heights;
  rep.check("roots.heights", "height of root(k) equals the symbol weight of zeta_k", heights == 24 && weights.size() == 24,
            std::to_string(heights) + "/24", "24/24", kRefRemark);

  std::set<Root> image(c.assignment.begin(), c.assignment.end());
  bool all_roots = true;
  for (const Root& r : c.assignment) all_roots = all_roots && rs.is_positive_root(r);
  const bool bijective = all_roots && image.size() == 24 && rs.positive_roots.size() == 24;
  rep.check("roots.bijective", "the assignment is a bijection onto the positive roots", bijective,
            std::to_string(image.size()) + " distinct roots" + (all_roots ? "" : ", some not roots"), "24 distinct roots",
            kRefRemark);
  rep.check("roots.repairs", "the assignment equals the printed one up to the forced repairs",
            c.repaired.size() == 1 && c.repaired[0] == 17,
            c.repaired.empty() ? "no repair" : [&] {
              std::string s;
              for (std::size_t k : c.repaired) s += (s.empty() ? "" : ", ") + zeta_label(k);
              return s;
            }(),
            "zeta17", kRefRemark);
  c.consistent = rep.passed();
  return c;
}

Report verify_roots(std::uint64_t seed) {
  Report rep;
  rep.suite = "roots";
  rep.seed = seed;
  const RootSystem rs = generate_positive_roots(f4_cartan_matrix());
  const auto heights = height_distribution(rs);
  const auto graded = alpha4_grading(rs);
  const std::vector<std::size_t> kHeights{4, 3, 3, 3, 3, 2, 2, 1, 1, 1, 1};
  rep.check("roots.count", "number of positive roots of F4", rs.positive_roots.size() == 24,
            std::to_string(rs.positive_roots.size()), "24", "root system of F4");
  rep.check("roots.highest", "highest root", rs.highest() == Root{2, 3, 4, 2}, root_string(rs.highest()),
            "2a1 + 3a2 + 4a3 + 2a4", kRefRemark);
  rep.check("roots.heights_distribution", "positive roots per height", heights == kHeights, counts_string(heights),
            counts_string(kHeights), "growth vector of E");
  rep.check("roots.alpha4_grading", "positive roots per alpha4-coefficient", graded == std::vector<std::size_t>{9, 8, 7},
            counts_string(graded), "(9,8,7)", "parabolic subgroup of alpha4");
  {
    std::size_t neg = 0;
    for (const Root& r : rs.positive_roots) {
      Root m = r;
      for (auto& x : m) x = -x;
      if (!rs.is_positive_root(m)) ++neg;
    }
    bool rejected = false;
    try {
      generate_positive_roots({{{2, 1, 0, 0}, {1, 2, 0, 0}, {0, 0, 2, 0}, {0, 0, 0, 2}}});
    } catch (const std::invalid_argument&) {
      rejected = true;
    }
    rep.check("roots.input_validation", "a non-Cartan matrix is rejected", rejected && neg == rs.positive_roots.size(),
              rejected ? "rejected" : "accepted", "rejected", "root system of F4");
  }

  ZetaSystem z = build_zeta_generators();
  const BracketTable table = compute_bracket_table(z);
  const SymbolAlgebra s = symbol_structure(z, table, origin(z.chart));
  rep.check("roots.heights_vs_growth", "height distribution equals the graded dimensions of E",
            heights == s.graded_dimensions, counts_string(heights), counts_string(s.graded_dimensions),
            "growth vector of E");
  const auto base = growth_vector(z.model.distribution(), origin(z.model.chart), 4);
  std::vector<std::size_t> base_graded;
  for (std::size_t i = 0; i < base.ranks.size(); ++i) base_graded.push_back(base.ranks[i] - (i ? base.ranks[i - 1] : 0));
  const std::vector<std::size_t> upper(graded.begin() + 1, graded.end());
  rep.check("roots.alpha4_vs_base", "alpha4-coefficient counts (1, 2) equal the graded ranks of D",
            upper == base_graded, counts_string(upper), counts_string(base_graded), "(8, 15)-distribution");

  const Correspondence c = verify_root_correspondence(table, printed_assignment(), rs, s.weights);
  rep.append(c.report);
  return rep;
}

nlohmann::json roots_json(const RootSystem& rs) {
  nlohmann::json roots = nlohmann::json::array();
  for (const Root& r : rs.positive_roots)
    roots.push_back({{"coefficients", r}, {"height", height(r)}, {"alpha4", r[3]}, {"name", root_string(r)}});
  return {{"schema", kSchema}, {"count", rs.positive_roots.size()}, {"roots", roots}};
}

}  // namespace f4prolong
