#include "f4prolong/cli/suites.hpp"

#include <chrono>
#include <stdexcept>

#include "f4prolong/cartan_model/cartan_model.hpp"
#include "f4prolong/control/integrator.hpp"
#include "f4prolong/f4roots/f4roots.hpp"
#include "f4prolong/nullflag/nullflag.hpp"
#include "f4prolong/prolong/prolong.hpp"

namespace f4prolong {

namespace {

std::size_t or_default(std::size_t samples, std::size_t fallback) { return samples ? samples : fallback; }

void require_dimension(const SuiteOptions& opt, std::size_t dim, const char* suite) {
  if (opt.point && opt.point->size() != dim)
    throw std::invalid_argument(std::string("--point for ") + suite + " needs " + std::to_string(dim) + " entries, got " +
                                std::to_string(opt.point->size()));
}

std::string ranks_string(const std::vector<std::size_t>& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
  return s + ")";
}

Report cartan_suite(const SuiteOptions& opt) {
  require_dimension(opt, 15, "cartan");
  Report rep;
  rep.suite = "cartan";
  const CartanModel m = build_model();
  rep.append(verify_bracket_table(m));
  rep.append(verify_duality(m));
  for (const auto& [i, j] : index_pairs()) rep.append(contact_foliation_check(m, i, j));
  const Point base = opt.point ? *opt.point : origin(m.chart);
  const auto samples = random_points(15, or_default(opt.samples, 5), opt.seed);
  rep.append(type_f4_frame_check(cartan_frame(m), m.distribution(), base, samples));
  std::vector<Point> pts{base};
  pts.insert(pts.end(), samples.begin(), samples.end());
  std::size_t ok = 0;
  std::string first;
  for (const auto& p : pts) {
    const auto g = growth_vector(m.distribution(), p, 4, pts).ranks;
    if (g == std::vector<std::size_t>{8, 15}) {
      ++ok;
    } else if (first.empty()) {
      first = "; " + ranks_string(g);
    }
  }
  rep.check("cartan.growth", "growth vector of D at the base point and samples", ok == pts.size(),
            std::to_string(ok) + "/" + std::to_string(pts.size()) + " give (8,15)" + first, "(8,15) everywhere",
            "(8, 15)-distribution");
  return rep;
}

Report control_suite(const SuiteOptions& opt) {
  Report rep;
  rep.suite = "control";
  const ControlSystem sys(build_model());
  rep.append(verify_lifts(sys.model, sys.cot));
  rep.append(verify_matrix_identities(opt.seed, or_default(opt.samples, 50)));
  rep.append(verify_svc(opt.seed, or_default(opt.samples, 200)));
  rep.append(verify_equations(sys));
  rep.append(verify_flow_lemma_symbolic(sys));
  rep.append(verify_integrator(sys));
  return rep;
}

Report nullflag_suite(const SuiteOptions& opt) {
  Report rep = verify_null_flags(opt.seed, or_default(opt.samples, 100));
  rep.suite = "nullflag";
  return rep;
}

Report prolong_suite(const SuiteOptions& opt) {
  require_dimension(opt, 24, "prolong");
  Report rep = verify_prolong(opt.seed, or_default(opt.samples, 5));
  if (opt.point) {
    ZetaSystem z = build_zeta_generators();
    const Distribution e(z.chart, {z(1), z(2), z(3), z(4)});
    const auto g = growth_vector(e, *opt.point, 12).ranks;
    const std::vector<std::size_t> expect{4, 7, 10, 13, 16, 18, 20, 21, 22, 23, 24};
    rep.check("prolong.growth.user_point", "growth vector of E at the given point", g == expect, ranks_string(g),
              ranks_string(expect), "growth vector of E");
  }
  return rep;
}

Report roots_suite(const SuiteOptions& opt) { return verify_roots(opt.seed); }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names{"cartan", "control", "nullflag", "prolong", "roots", "all"};
  return names;
}

Report run_suite(const std::string& name, const SuiteOptions& opt) {
  const auto start = std::chrono::steady_clock::now();
  Report rep;
  if (name == "cartan") {
    rep = cartan_suite(opt);
  } else if (name == "control") {
    rep = control_suite(opt);
  } else if (name == "nullflag") {
    rep = nullflag_suite(opt);
  } else if (name == "prolong") {
    rep = prolong_suite(opt);
  } else if (name == "roots") {
    rep = roots_suite(opt);
  } else if (name == "all") {
    // the point only applies to the suite whose chart it fits
    SuiteOptions cartan_opt = opt, prolong_opt = opt, plain = opt;
    plain.point.reset();
    if (opt.point && opt.point->size() != 15) cartan_opt.point.reset();
    if (opt.point && opt.point->size() != 24) prolong_opt.point.reset();
    if (opt.point && !cartan_opt.point && !prolong_opt.point)
      throw std::invalid_argument("--point needs 15 (cartan) or 24 (prolong) entries");
    rep.suite = "all";
    rep.append(cartan_suite(cartan_opt));
    rep.append(control_suite(plain));
    rep.append(nullflag_suite(plain));
    rep.append(prolong_suite(prolong_opt));
    rep.append(roots_suite(plain));
  } else {
    throw std::invalid_argument("unknown suite: " + name);
  }
  rep.suite = name;
  rep.seed = opt.seed;
  rep.elapsed_ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return rep;
}

}  // namespace f4prolong
