// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <string>
#include <vector>

#include "f4prolong/cartan_model/cartan_model.hpp"
#include "f4prolong/control/control.hpp"
#include "f4prolong/control/integrator.hpp"
#include "f4prolong/f4roots/f4roots.hpp"
#include "f4prolong/nullflag/nullflag.hpp"
#include "f4prolong/prolong/prolong.hpp"

using namespace f4prolong;

namespace {

constexpr std::uint64_t kSeed = 1;
constexpr double kBracketSeconds = 5.0;
constexpr double kProlongSeconds = 120.0;
constexpr double kIntegratorSeconds = 2.0;
constexpr double kDriftTol = 1e-8;
constexpr double kStep = 1e-3;
constexpr double kTMax = 1.0;
constexpr double kHalvingFactor = 8.0;
constexpr std::size_t kRankSamples = 50;
constexpr std::size_t kSvcSamples = 200;
constexpr std::size_t kFlagSamples = 100;
constexpr std::size_t kGrowthPoints = 5;
// RK4 global error ratio under step halving on x'' = -x
constexpr double kOrderRatioLo = 14.0;
constexpr double kOrderRatioHi = 18.0;

struct Outcome {
  bool ok = true;
  std::string detail;

  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      detail += (detail.empty() ? "" : "; ") + what;
    }
  }
  void note(const std::string& what) { detail += (detail.empty() ? "" : "; ") + what; }
};

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3g", x);
  return buf;
}

bool item_passes(const Report& r, const std::string& id) {
  const CheckItem* c = r.find(id);
  return c && c->status == Status::pass;
}

std::string computed(const Report& r, const std::string& id) {
  const CheckItem* c = r.find(id);
  return c ? c->computed : "missing";
}

void require_items(Outcome& o, const Report& r, const std::vector<std::string>& ids) {
  for (const auto& id : ids) o.require(item_passes(r, id), id + " = " + computed(r, id));
}

Outcome criterion1(const CartanModel& m) {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = verify_bracket_table(m);
  const double dt = seconds_since(t0);
  o.require(r.items.size() >= 84, "only " + std::to_string(r.items.size()) + " brackets checked");
  o.require(r.count(Status::fail) == 0 && r.count(Status::paper_discrepancy) == 0,
            std::to_string(r.count(Status::fail) + r.count(Status::paper_discrepancy)) + " mismatches");
  o.require(dt < kBracketSeconds, "runtime " + fmt(dt) + " s");
  o.note(std::to_string(r.items.size()) + " brackets, 0 mismatches expected, " + fmt(dt) + " s");
  return o;
}

Outcome criterion2(const CartanModel& m) {
  Outcome o;
  const Report r = verify_duality(m);
  o.require(r.passed() && computed(r, "cartan.duality") == "225/225", "duality " + computed(r, "cartan.duality"));
  o.note("pairings " + computed(r, "cartan.duality"));
  return o;
}

Outcome criterion3(const CartanModel& m) {
  Outcome o;
  std::size_t good = 0;
  for (const auto& [i, j] : index_pairs()) {
    const ContactResult c = contact_foliation(m, i, j);
    const bool ok = c.integrable && c.contact && !c.leaf_determinant.is_zero();
    o.require(ok, "D" + std::to_string(i) + std::to_string(j) + " fails");
    good += ok;
  }
  o.note(std::to_string(good) + "/6 foliations integrable with nonzero leaf determinant");
  return o;
}

Outcome criterion4(const CartanModel& m) {
  Outcome o;
  const CotangentChart t(m.chart);
  const Report lifts = verify_lifts(m, t);
  const ControlSystem sys(m);
  const Report lemma = verify_flow_lemma_symbolic(sys);
  require_items(o, lifts, {"control.lifts.poisson"});
  o.require(lemma.count(Status::fail) == 0, std::to_string(lemma.count(Status::fail)) + " flow identity failures");
  require_items(o, lemma, {"control.flow_lemma.poisson", "control.flow_lemma.chain_rule"});
  o.note("lift identity " + computed(lifts, "control.lifts.poisson") + ", flow identity " +
         computed(lemma, "control.flow_lemma.poisson"));
  if (lemma.count(Status::paper_discrepancy) > 0)
    o.note("printed bracket order is opposite to x' = dH/dp, p' = -dH/dx (paper-discrepancy)");
  return o;
}

Outcome criterion5() {
  Outcome o;
  const Report r = verify_matrix_identities(kSeed, kRankSamples);
  o.require(r.count(Status::fail) == 0, std::to_string(r.count(Status::fail)) + " failed items");
  require_items(o, r,
                {"control.identity.detA11", "control.identity.detA22", "control.identity.A11A22",
                 "control.U.rank_on_cone", "control.U.rank_off_cone", "control.UU.shape", "control.UU.det"});
  o.require(computed(r, "control.U.rank_on_cone") == "50/50" && computed(r, "control.U.rank_off_cone") == "50/50",
            "rank dichotomy samples");
  o.note("det = " + computed(r, "control.UU.det"));
  if (const CheckItem* p = r.find("control.UU.det.printed"); p && p->status == Status::paper_discrepancy)
    o.note("printed Q^8 is a paper-discrepancy");
  return o;
}

Outcome criterion6() {
  Outcome o;
  const Report r = verify_svc(kSeed, kSvcSamples);
  o.require(r.count(Status::fail) == 0, std::to_string(r.count(Status::fail)) + " failed items");
  require_items(o, r, {"control.svc.membership", "control.svc.witness"});
  o.require(computed(r, "control.svc.membership") == "200/200", "membership " + computed(r, "control.svc.membership"));
  o.note("membership " + computed(r, "control.svc.membership") + ", witnesses " + computed(r, "control.svc.witness"));
  return o;
}

Outcome criterion7() {
  Outcome o;
  const Report r = verify_null_flags(kSeed, kFlagSamples);
  require_items(o, r,
                {"nullflag.random.r_null", "nullflag.random.profile", "nullflag.random.q_null",
                 "nullflag.random.nullity"});
  for (const char* id : {"nullflag.random.r_null", "nullflag.random.profile", "nullflag.random.q_null"})
    o.require(computed(r, id) == "100/100", std::string(id) + " = " + computed(r, id));
  o.require(r.find("nullflag.eta.closed_form") != nullptr, "eta cross-check missing");
  o.note("eta closed form: " + computed(r, "nullflag.eta.closed_form"));
  return o;
}

Outcome criterion8() {
  Outcome o;
  const auto t0 = std::chrono::steady_clock::now();
  const Report r = verify_prolong(kSeed, kGrowthPoints);
  const double dt = seconds_since(t0);
  std::vector<std::string> growth{"prolong.growth.origin"};
  for (std::size_t k = 1; k <= kGrowthPoints; ++k) growth.push_back("prolong.growth.point" + std::to_string(k));
  require_items(o, r, growth);
  require_items(o, r, {"prolong.table.constant", "prolong.growth.pi_inverse_D"});
  const CheckItem* zeros = r.find("prolong.table.printed_zeros");
  o.require(zeros && zeros->status == Status::pass,
            "printed zeros computed zero: " + computed(r, "prolong.table.printed_zeros") +
                " ([zeta1, zeta16] is printed 0, computed zeta18)");
  o.require(dt < kProlongSeconds, "runtime " + fmt(dt) + " s");
  o.note("growth " + computed(r, "prolong.growth.origin") + ", constant entries " +
         computed(r, "prolong.table.constant") + ", " + fmt(dt) + " s");
  return o;
}

Outcome criterion9() {
  Outcome o;
  const Report r = verify_roots(kSeed);
  require_items(o, r,
                {"roots.count", "roots.heights_distribution", "roots.alpha4_grading", "roots.additive",
                 "roots.zero_entries", "roots.bijective", "roots.repairs"});
  o.require(computed(r, "roots.count") == "24", "count " + computed(r, "roots.count"));
  o.require(computed(r, "roots.repairs") == "zeta17", "repairs " + computed(r, "roots.repairs"));
  o.note(computed(r, "roots.count") + " roots, heights " + computed(r, "roots.heights_distribution") +
         ", alpha4 " + computed(r, "roots.alpha4_grading") + ", repaired " + computed(r, "roots.repairs"));
  return o;
}

double oscillator_order_ratio() {
  const OdeRhs f = [](const std::vector<double>& y, std::vector<double>& dy) {
    dy.resize(2);
    dy[0] = y[1];
    dy[1] = -y[0];
  };
  auto error = [&](double h) {
    std::vector<double> y{1, 0};
    const int n = static_cast<int>(std::lround(1.0 / h));
    for (int k = 0; k < n; ++k) y = rk4_step(f, y, h);
    return std::hypot(y[0] - std::cos(1.0), y[1] + std::sin(1.0));
  };
  return error(0.1) / error(0.05);
}

Outcome criterion10(const CartanModel& m) {
  Outcome o;
  const ControlSystem sys(m);
  const auto t0 = std::chrono::steady_clock::now();
  const IntegrationResult full = integrate_extremal(sys, standard_initial_data(), standard_controls(), kStep, kTMax);
  const double dt = seconds_since(t0);
  const IntegrationResult half =
      integrate_extremal(sys, standard_initial_data(), standard_controls(), kStep / 2, kTMax);
  const double before = std::max(full.drift.max_constraint_drift, full.drift.max_sr_drift);
  const double after = std::max(half.drift.max_constraint_drift, half.drift.max_sr_drift);
  o.require(full.drift.max_constraint_drift < kDriftTol, "constraint drift " + fmt(full.drift.max_constraint_drift));
  o.require(full.drift.max_sr_drift < kDriftTol, "(s, r) drift " + fmt(full.drift.max_sr_drift));
  o.require(after <= before / kHalvingFactor, "halving " + fmt(before) + " -> " + fmt(after));
  o.require(dt < kIntegratorSeconds, "runtime " + fmt(dt) + " s");
  const double ratio = oscillator_order_ratio();
  o.require(ratio > kOrderRatioLo && ratio < kOrderRatioHi, "oscillator order ratio " + fmt(ratio));
  o.note("drift " + fmt(before) + " -> " + fmt(after) + " at h/2, " + fmt(dt) + " s");
  if (before == 0) o.note("drift is identically 0, halving ratio is vacuous; oscillator error ratio " + fmt(ratio));
  return o;
}

}  // namespace

int main() {
  const CartanModel m = build_model();
  const std::vector<std::pair<std::string, std::function<Outcome()>>> criteria{
      {"bracket table", [&] { return criterion1(m); }},
      {"frame/coframe duality", [&] { return criterion2(m); }},
      {"contact foliations", [&] { return criterion3(m); }},
      {"Poisson/lift identity", [&] { return criterion4(m); }},
      {"matrix identities", criterion5},
      {"singular velocity cone", criterion6},
      {"null flags", criterion7},
      {"prolongation", criterion8},
      {"roots", criterion9},
      {"integrator", [&] { return criterion10(m); }},
  };
  int failed = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      o = criteria[k].second();
    } catch (const std::exception& e) {
      o.ok = false;
      o.detail = std::string("exception: ") + e.what();
    }
    failed += !o.ok;
    std::cout << (o.ok ? "PASS" : "FAIL") << "  " << k + 1 << "  " << criteria[k].first << "  (" << o.detail << ")\n";
  }
  std::cout << criteria.size() - static_cast<std::size_t>(failed) << "/" << criteria.size() << " criteria pass\n";
  return failed == 0 ? 0 : 1;
}
