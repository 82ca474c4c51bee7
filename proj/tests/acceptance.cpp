// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Suites run at their default budgets.

#include <cstdio>
#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "semiloc/suites.hpp"

using namespace semiloc;

namespace {

int failures = 0;

void line(int n, bool ok, const std::string& detail) {
  std::cout << "criterion " << n << ": " << (ok ? "PASS" : "FAIL") << "; " << detail << std::endl;
  if (!ok) ++failures;
}

SuiteReport run(const std::string& id, std::size_t count, std::size_t threads = 0) {
  SuiteOptions o;
  o.seed = 20240601;
  o.budgets.count = count;
  o.threads = threads;
  SuiteReport r = run_suite(id, o);
  std::cerr << "[" << id << "] " << r.instances.size() << " instances, " << r.failures() << " failures, "
            << r.wall_time_seconds << " s" << std::endl;
  for (const auto& i : r.instances)
    if (i.status == InstanceStatus::Fail || i.status == InstanceStatus::Error)
      std::cerr << "  instance " << i.index << " (" << i.description << "): " << i.message << std::endl;
  return r;
}

std::string summary(const SuiteReport& r) {
  std::ostringstream s;
  s << r.id << " " << (r.instances.size() - r.failures()) << "/" << r.instances.size() << " pass";
  return s.str();
}

std::size_t tags_with_prefix(const SuiteReport& r, const std::string& prefix) {
  std::size_t n = 0;
  for (const auto& [k, v] : r.census) n += k.rfind(prefix, 0) == 0;
  return n;
}

}  // namespace

int main() {
  {
    const auto r = run("RAD", 200);
    line(1, r.passed() && r.instances.size() >= 200,
         summary(r) + ", trace radical = brute-force radical on generated algebras with p > dim");
  }
  {
    const auto r = run("T2.4", 100);
    const auto& first = r.instances.at(0);
    const bool ut2 = first.status == InstanceStatus::Pass && first.field("codim_domain") &&
                     *first.field("codim_domain") == "2" && *first.field("codim_codomain") == "2";
    const std::size_t morph_families = tags_with_prefix(r, "morphism-family.");
    const std::size_t alg_families = tags_with_prefix(r, "algebra-family.");
    line(2, r.passed() && ut2 && r.count_tag("phi.exhaustive") == 100 && alg_families >= 6,
         summary(r) + ", all certified local; UT2 -> M2 gives 2 <= 2: " + (ut2 ? "yes" : "no") + "; " +
             std::to_string(morph_families) + " morphism families, " + std::to_string(alg_families) +
             " algebra families");
  }
  {
    const auto r = run("P2.5", 100);
    line(3, r.passed() && r.instances.size() >= 50,
         summary(r) + ", block match, m = block count of R/J, assembled morphism local with kernel J(R)");
  }
  {
    const auto r = run("T3.3", 100);
    line(4, r.passed() && r.count_tag("psi.exhaustive") == r.instances.size(),
         summary(r) + ", top(M+N) free, psi local (exhaustive on " + std::to_string(r.count_tag("psi.exhaustive")) +
             "), End(M) semilocal");
  }
  {
    const auto r = run("P4.4", 100);
    line(5, r.passed(), summary(r) + ", dim(M) = Goldie dimension of End(E(M))/J");
  }
  {
    const auto chi = run("T5.4", 100);
    const auto phi = run("T7.2", 100);
    std::size_t not_local = 0;
    for (const auto* r : {&chi, &phi})
      for (const auto& [k, v] : r->census)
        if (k.find("not-local") != std::string::npos) not_local += v;
    line(6, chi.passed() && phi.passed() && not_local == 0,
         summary(chi) + " (chi exhaustive " + std::to_string(chi.count_tag("chi.exhaustive")) + ", sampled " +
             std::to_string(chi.count_tag("chi.sampled")) + "), " + summary(phi) + " (bigPhi exhaustive " +
             std::to_string(phi.count_tag("bigPhi.exhaustive")) + ", sampled " +
             std::to_string(phi.count_tag("bigPhi.sampled")) + "), not-local verdicts: " + std::to_string(not_local));
  }
  {
    const auto b1 = run("T5.4", 100);
    const auto b2 = run("C6.5", 100);
    const auto b3 = run("T7.3", 100);
    line(7, b1.passed() && b2.passed() && b3.passed() && b2.count_tag("b2-equality") >= 1,
         summary(b1) + ", " + summary(b2) + ", " + summary(b3) + "; equality census b1=" +
             std::to_string(b3.count_tag("b1-equality")) + " b2=" + std::to_string(b2.count_tag("b2-equality")) +
             " (zero module only) b3=" + std::to_string(b3.count_tag("b3-equality")));
  }
  {
    const auto r = run("P6.4", 100);
    line(8, r.passed(), summary(r) + ", ker(pair) = I ∩ K exactly, pair morphism local");
  }
  {
    const auto r = run("C6.7", 100);
    line(9, r.passed(),
         summary(r) + ", each biuniform instance in exactly one case; case-1=" + std::to_string(r.count_tag("case-1")) +
             " case-2=" + std::to_string(r.count_tag("case-2")));
  }
  {
    const auto r = run("IDEM", 100);
    line(10, r.passed(), summary(r) + ", lifted idempotents exact, cover kernels superfluous, envelope images essential");
  }
  {
    bool same = true;
    std::string which;
    for (const char* id : {"T2.4", "C2.6", "T3.3", "P6.4"}) {
      const auto a = run(id, 100, 1);
      const auto b = run(id, 100, 3);
      const bool eq = a.payload() == b.payload();
      same = same && eq;
      which += std::string(which.empty() ? "" : ", ") + id + (eq ? " identical" : " DIFFERS");
    }
    line(11, same, "payloads on rerun with 1 and 3 worker threads: " + which);
  }
  std::cout << (failures == 0 ? "acceptance: all criteria pass" : "acceptance: " + std::to_string(failures) + " criteria fail")
            << std::endl;
  return failures == 0 ? 0 : 1;
}
