// Acceptance gate: every criterion at its stated bounds and time limit, plus
// the oracle cross-checks that back the frozen goldens. One line per criterion.

#include <cstdio>
#include <string>

#include "k3mcg/free_product.hpp"
#include "k3mcg/lattice.hpp"
#include "k3mcg/subdivision.hpp"
#include "k3mcg/verify.hpp"
#include "oracles.hpp"

using namespace k3mcg;

namespace {

const std::vector<std::vector<long>> kQuartic{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -1}};
const std::vector<std::vector<long>> kSextic{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {-1, -1, -3}};

// Returns an empty string when the oracle agrees, else what went wrong.
std::string oracle_check(int id) {
  switch (id) {
    case 1: {
      const IntMatrix g = make_standard(StandardKind::K3).gram();
      oracle::ZMat m(22, std::vector<Integer>(22));
      for (std::size_t i = 0; i < 22; ++i)
        for (std::size_t j = 0; j < 22; ++j) m[i][j] = g(i, j);
      const auto [p, q] = oracle::signature(m);
      return p == 3 && q == 19 ? "" : "characteristic polynomial gives (" + std::to_string(p) + "," + std::to_string(q) + ")";
    }
    case 3: {
      const auto q = oracle::dual_census(kQuartic), s = oracle::dual_census(kSextic);
      if (q.total != 35 || q.interior != 1 || q.facet_interior != 12) return "box scan disagrees for the quartic";
      if (s.total != 39 || s.interior != 1 || s.facet_interior != 16) return "box scan disagrees for the sextic";
      return "";
    }
    case 4: {
      for (const auto* d : {&kQuartic, &kSextic}) {
        const auto c = oracle::dual_census(*d);
        if (c.total - 4 - c.facet_interior != 19) return "hand formula does not give 19";
      }
      return "";
    }
    case 8: {
      for (long p : {3, 4})
        if (oracle::has_cube_root(1, 0, p)) return "brute force finds a cube root of (1,0)";
      return "";
    }
    case 9: {
      for (const auto* d : {&kQuartic, &kSextic}) {
        const auto one = oracle::dual_census(*d, 1), two = oracle::dual_census(*d, 2);
        std::vector<IntVector> pts;
        for (const auto& v : *d) pts.emplace_back(v.begin(), v.end());
        if (oracle::ehrhart_volume(one.total, two.total, one.interior) != polytope_volume(polar_dual(LatticePolytope(pts))))
          return "Ehrhart volume disagrees";
      }
      return "";
    }
    default:
      return "";
  }
}

}  // namespace

int main() {
  const VerifyProfile profile;
  int failures = 0;
  for (int id = 1; id <= 12; ++id) {
    const CriterionResult r = run_criterion(id, profile);
    const std::string oracle = oracle_check(id);
    const bool pass = r.pass && !r.skipped && oracle.empty();
    failures += !pass;
    std::printf("[%s] %2d %-28s %9.1f ms (limit %6.0f ms)  %s%s%s\n", pass ? "PASS" : "FAIL", id, r.name.c_str(),
                r.elapsed_ms, r.limit_ms, r.detail.c_str(), oracle.empty() ? "" : " | oracle: ", oracle.c_str());
  }
  std::printf("%d/12 criteria passed\n", 12 - failures);
  return failures == 0 ? 0 : 1;
}
