#include "semiloc/suites.hpp"

#include <atomic>
#include <chrono>
#include <functional>
#include <sstream>
#include <thread>

#include "json.hpp"
#include "semiloc/bridges.hpp"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"
#include "semiloc/instance_io.hpp"

namespace semiloc {

std::string to_string(InstanceStatus s) {
  switch (s) {
    case InstanceStatus::Pass: return "pass";
    case InstanceStatus::Fail: return "fail";
    case InstanceStatus::Error: return "error";
    case InstanceStatus::Skipped: return "skipped";
  }
  return "?";
}

const std::string* InstanceOutcome::field(const std::string& key) const {
  for (const auto& [k, v] : fields)
    if (k == key) return &v;
  return nullptr;
}

std::size_t SuiteReport::failures() const {
  std::size_t n = 0;
  for (const auto& i : instances) n += i.status == InstanceStatus::Fail || i.status == InstanceStatus::Error;
  return n;
}

std::size_t SuiteReport::count_tag(const std::string& tag) const {
  const auto it = census.find(tag);
  return it == census.end() ? 0 : it->second;
}

std::string SuiteReport::payload() const {
  std::ostringstream out;
  out << "suite=" << id << "\n";
  out << "operation=" << operation << "\n";
  out << "seed=" << seed << "\n";
  out << "budget.enumeration=" << budgets.enumeration << "\n";
  out << "budget.sampling=" << budgets.sampling << "\n";
  out << "count=" << budgets.count << "\n";
  for (const auto& i : instances) {
    const std::string pre = "instance." + std::to_string(i.index) + ".";
    out << pre << "description=" << i.description << "\n";
    out << pre << "status=" << to_string(i.status) << "\n";
    if (!i.message.empty()) out << pre << "message=" << i.message << "\n";
    for (const auto& [k, v] : i.fields) out << pre << k << "=" << v << "\n";
  }
  for (const auto& [k, v] : census) out << "census." << k << "=" << v << "\n";
  out << "failures=" << failures() << "\n";
  out << "verdict=" << (passed() ? "pass" : "fail") << "\n";
  return out.str();
}

std::string SuiteReport::text() const {
  std::ostringstream out;
  out << payload() << "wall_time_seconds=" << wall_time_seconds << "\n";
  return out.str();
}

std::string SuiteReport::summary_json() const {
  nlohmann::ordered_json j;
  j["suite"] = id;
  j["operation"] = operation;
  j["seed"] = seed;
  j["budgets"] = {{"enumeration", budgets.enumeration}, {"sampling", budgets.sampling}, {"count", budgets.count}};
  std::size_t skipped = 0;
  for (const auto& i : instances) skipped += i.status == InstanceStatus::Skipped;
  j["instances"] = instances.size();
  j["skipped"] = skipped;
  j["failures"] = failures();
  j["census"] = census;
  nlohmann::ordered_json failed = nlohmann::ordered_json::array();
  for (const auto& i : instances)
    if (i.status == InstanceStatus::Fail || i.status == InstanceStatus::Error)
      failed.push_back({{"index", i.index}, {"description", i.description}, {"message", i.message}});
  j["failed"] = failed;
  j["verdict"] = passed() ? "pass" : "fail";
  j["wall_time_seconds"] = wall_time_seconds;
  return j.dump(2);
}

namespace {

// ---------------------------------------------------------------------------
// Per-instance recording

class Recorder {
 public:
  explicit Recorder(InstanceOutcome& out) : out_(out) {}

  void describe(const std::string& d) { out_.description = d; }
  template <class T>
  void field(const std::string& key, const T& value) {
    std::ostringstream s;
    s << value;
    out_.fields.emplace_back(key, s.str());
  }
  void field(const std::string& key, bool value) { out_.fields.emplace_back(key, value ? "true" : "false"); }
  void tag(const std::string& t) { out_.tags.push_back(t); }
  void require(bool cond, const std::string& clause, const std::string& detail = "violated") {
    if (!cond) throw AssertionFailure(clause, detail);
  }

 private:
  InstanceOutcome& out_;
};

std::string vec_text(const Vec& v) {
  std::string s = "[";
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s + "]";
}

std::string family_of(const std::string& description) {
  std::string d = description;
  const std::string scr = "scramble(";
  if (d.rfind(scr, 0) == 0) d = d.substr(scr.size());
  return d.substr(0, d.find_first_of("( "));
}

// Every algebra family named anywhere in a morphism description.
void tag_algebra_families(Recorder& r, const std::string& description) {
  for (const char* f : {"field", "truncated-poly", "triangular", "path-algebra", "trivial-ext", "matrix(", "product("}) {
    const std::string name(f);
    // whole words only: "field" must not match "field-regular", nor
    // "product(" match "field-product("
    auto word = [&](std::size_t at) {
      const bool starts = at == 0 || description[at - 1] == '(' || description[at - 1] == ',' ||
                          description[at - 1] == ' ' || description[at - 1] == ';';
      const std::size_t end = at + name.size();
      return starts && (name.back() == '(' || (end < description.size() && description[end] == '('));
    };
    std::size_t at = description.find(name);
    while (at != std::string::npos && !word(at)) at = description.find(name, at + 1);
    if (at == std::string::npos) continue;
    std::string key = name;
    if (key.back() == '(') key.pop_back();
    r.tag("algebra-family." + key);
  }
}

struct SuiteContext {
  const SuiteOptions& options;
  std::uint64_t instance_seed;

  LocalityOptions locality() const {
    LocalityOptions lo;
    lo.enumeration_budget = options.budgets.enumeration;
    lo.sampling_budget = options.budgets.sampling;
    lo.seed = instance_seed;
    lo.lift_sampling_budget = std::min<std::uint64_t>(lo.lift_sampling_budget, options.budgets.sampling);
    return lo;
  }
};

// Records a locality verdict under `key` and fails on not-local.
LocalityReport check_local(Recorder& r, const SuiteContext& ctx, const std::string& key,
                           const AlgebraMorphism& phi) {
  const LocalityReport rep = is_local(phi, ctx.locality());
  r.field(key + ".verdict", to_string(rep.verdict));
  r.field(key + ".method", to_string(rep.method));
  r.field(key + ".checked", rep.elements_checked);
  r.tag(key + "." + to_string(rep.method));
  if (rep.witness) r.field(key + ".witness", vec_text(*rep.witness));
  r.require(rep.verdict != LocalityVerdict::NotLocal, key + " is local",
            "witness " + (rep.witness ? vec_text(*rep.witness) : std::string("?")));
  return rep;
}

// ---------------------------------------------------------------------------
// Instance generators

// J is taken by enumeration when p <= dim, so such algebras must fit the
// enumeration budget. Generators retry until every algebra a suite
// analyzes passes this test.
bool radical_computable(Residue p, std::size_t dim, const SuiteContext& ctx) {
  return p > dim || element_count(p, dim) <= ctx.options.budgets.enumeration;
}

constexpr int kRetries = 32;

// Goldie dimension of End(X)/J for an envelope or cover X. The quotient is
// semisimple by the certified linear description of J; when it is small
// enough this is re-checked by computing its radical, otherwise the
// Wedderburn split runs on it directly.
std::size_t semisimple_goldie(Recorder& r, const Algebra& s, const SuiteContext& ctx, const std::string& key) {
  if (radical_computable(s.p(), s.dim(), ctx)) {
    const auto an = analyze(s, ctx.options.budgets.enumeration);
    r.require(an.radical.radical.is_zero(), key + " quotient semisimple");
    r.tag(key + ".radical-recomputed");
    return an.codim();
  }
  r.tag(key + ".radical-from-certificate");
  return wedderburn_decompose(s).codim();
}

AlgebraCaps module_algebra_caps() {
  AlgebraCaps caps;
  caps.primes = {2, 3, 5};
  caps.max_dim = 6;
  caps.max_elements = std::uint64_t{1} << 14;
  return caps;
}

struct ModuleInstance {
  std::string description;
  AlgebraAnalysis analysis;
  Module module;
};

ModuleInstance random_module_instance(Rng& rng, const SuiteContext& ctx) {
  for (int attempt = 0;; ++attempt) {
    const auto g = random_algebra(rng, module_algebra_caps());
    AlgebraAnalysis an = analyze(g.algebra, ctx.options.budgets.enumeration);
    ModuleCaps mcaps;
    mcaps.max_dim = 6;
    auto m = random_module(rng, an, mcaps);
    if (attempt + 1 < kRetries && !radical_computable(m.module.p(), endo_algebra(m.module).algebra.dim(), ctx))
      continue;
    return {g.description + " / " + m.description, std::move(an), std::move(m.module)};
  }
}

// Endomorphisms of a square module: a monomorphism is an epimorphism and
// an isomorphism. Checks bridge invertibility against rank on the basis
// and a few random combinations.
void check_invertibility(Recorder& r, Rng& rng, const EndoAlgebra& e, const AlgebraMorphism& bridge,
                         const std::string& clause) {
  const Residue p = e.module.p();
  const std::size_t h = e.algebra.dim();
  std::vector<Vec> probes;
  for (std::size_t t = 0; t < h; ++t) probes.push_back(unit_vector(h, t));
  probes.push_back(e.algebra.unit());
  for (int k = 0; k < 4; ++k) probes.push_back(random_vector(rng, p, h));
  for (const Vec& f : probes) {
    const bool iso = rank(e.to_matrix(f)) == e.module.dim();
    r.require(bridge.codomain().is_unit(bridge.apply(f)) == iso, clause, "probe " + vec_text(f));
  }
}

// ---------------------------------------------------------------------------
// Suites

using SuiteFn = std::function<void(Recorder&, Rng&, const SuiteContext&, std::size_t index)>;

void suite_radical(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  AlgebraCaps caps;
  caps.primes = {5, 7, 11};
  caps.max_dim = 6;
  caps.max_elements = std::min<std::uint64_t>(std::uint64_t{1} << 15, ctx.options.budgets.enumeration);
  caps.large_char = true;
  const auto g = random_algebra(rng, caps);
  r.describe(g.description);
  r.tag("algebra-family." + family_of(g.description));
  const Algebra& a = g.algebra;
  r.field("p", a.p());
  r.field("dim", a.dim());
  const auto trace = radical_trace(a);
  const auto brute = radical_bruteforce(a, ctx.options.budgets.enumeration, ctx.instance_seed);
  r.field("radical_dim", trace.radical.dim());
  r.field("nilpotency_index", trace.nilpotency_index);
  r.require(trace.radical == brute.radical, "trace radical equals brute-force radical");
  r.require(trace.nilpotency_index == brute.nilpotency_index, "nilpotency indices agree");
}

void suite_idempotents(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  const AlgebraAnalysis& an = mi.analysis;
  // Certificates must survive a text round trip of the algebra.
  const Algebra reloaded = load_text(serialize(algebra_instance(an.algebra))).algebra();
  std::size_t lifted = 0;
  for (const auto& b : an.blocks) {
    for (const Vec* e : {&b.primitive, &b.central}) {
      r.require(an.algebra.is_idempotent(*e), "lifted idempotent e^2 = e", vec_text(*e));
      r.require(reloaded.is_idempotent(*e), "idempotent certificate re-validates after parse", vec_text(*e));
      ++lifted;
    }
    r.require(an.quotient.projection.apply(b.central) == an.decomposition.blocks[&b - an.blocks.data()].central_idempotent,
              "central idempotent lifts the block idempotent");
  }
  r.field("blocks", an.blocks.size());
  r.field("idempotents", lifted);
  r.tag("idempotents-lifted");
  const ProjectiveCover pc = projective_cover(mi.module, an);
  const InjectiveEnvelope ie = injective_envelope(mi.module, an);
  r.require(submodule_position(pc.cover, pc.kernel, an).superfluous, "cover kernel superfluous");
  r.require(submodule_position(ie.envelope, ie.iota.image(), an).essential, "envelope image essential");
  r.field("module_dim", mi.module.dim());
  r.field("cover_dim", pc.cover.dim());
  r.field("envelope_dim", ie.envelope.dim());
}

void suite_lemma21(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t index) {
  AlgebraCaps caps;
  caps.max_dim = 5;
  caps.max_elements = std::min<std::uint64_t>(std::uint64_t{1} << 12, ctx.options.budgets.enumeration);
  const bool local_phi = index % 3 != 2;
  const auto [phi, psi] = random_morphism_pair(rng, caps, local_phi);
  r.describe(phi.description + " ; " + psi.description);
  const auto calc = lemma21_suite(phi.morphism, psi.morphism, ctx.locality());
  r.field("phi.verdict", to_string(calc.phi.verdict));
  if (calc.psi) r.field("psi.verdict", to_string(calc.psi->verdict));
  if (calc.composite) r.field("composite.verdict", to_string(calc.composite->verdict));
  for (const auto& c : calc.clauses) {
    r.field("clause." + c.clause, c.checked ? (c.detail.empty() ? "checked" : c.detail) : "not-applicable");
    if (c.checked) r.tag("clause-checked." + c.clause);
  }
  r.tag(std::string("phi.") + to_string(calc.phi.verdict));
  if (calc.phi.witness) {
    r.field("phi.witness", vec_text(*calc.phi.witness));
    const AlgebraMorphism back = load_text(serialize(morphism_instance(phi.morphism))).morphism();
    const Vec& w = *calc.phi.witness;
    r.require(back.codomain().is_unit(back.apply(w)) && !back.domain().is_unit(w),
              "not-local witness re-validates after parse");
  }
}

void suite_camps_dicks(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t index) {
  GeneratedMorphism g = index == 0 ? triangular_inclusion(2, 1, 2) : [&] {
    AlgebraCaps caps;
    caps.max_elements = std::min<std::uint64_t>(std::uint64_t{1} << 14, ctx.options.budgets.enumeration);
    for (int attempt = 0;; ++attempt) {
      auto h = random_local_morphism(rng, caps);
      const Algebra& s = h.morphism.codomain();
      if (attempt + 1 == kRetries || radical_computable(s.p(), s.dim(), ctx)) return h;
    }
  }();
  r.describe(g.description);
  r.tag("morphism-family." + family_of(g.description));
  tag_algebra_families(r, g.description);
  const auto rep = check_local(r, ctx, "phi", g.morphism);
  r.require(rep.verdict == LocalityVerdict::Local && rep.certain(), "generated morphism certified local");
  const auto cd = camps_dicks_check(g.morphism, ctx.options.budgets.enumeration);
  r.field("codim_domain", cd.codim_domain);
  r.field("codim_codomain", cd.codim_codomain);
  r.require(cd.holds, "codim(R) <= codim(S)",
            std::to_string(cd.codim_domain) + " > " + std::to_string(cd.codim_codomain));
  if (cd.codim_domain == cd.codim_codomain) r.tag("equality");
}

void suite_producte(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  AlgebraCaps caps;
  caps.max_elements = std::min<std::uint64_t>(std::uint64_t{1} << 14, ctx.options.budgets.enumeration);
  const auto g = random_field_product_morphism(rng, caps);
  r.describe(g.description);
  tag_algebra_families(r, g.description);
  const auto res = producte_decompose(g.morphism, *g.field_target, ctx.locality());
  const auto an = analyze(g.morphism.domain(), ctx.options.budgets.enumeration);
  r.field("factors", g.field_target->factors.size());
  r.field("m", res.m());
  std::string sel, deg;
  for (std::size_t i = 0; i < res.m(); ++i) {
    sel += (i ? " " : "") + std::to_string(res.selected[i]);
    deg += (i ? " " : "") + std::to_string(res.residue_degrees[i]);
  }
  r.field("selected", sel);
  r.field("residue_degrees", deg);
  r.field("idempotent_splits", res.idempotent_splits);
  r.field("support_reductions", res.support_reductions);
  r.require(res.m() == an.blocks.size(), "m equals the block count of R/J");
  r.require(res.assembled.kernel() == an.radical.radical, "assembled kernel is J(R)");
  r.require(res.assembled_locality.verdict == LocalityVerdict::Local, "assembled morphism local");
  if (res.support_reductions > 0) r.tag("support-reduction-used");
}

void suite_dichotomy(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  AlgebraCaps caps;
  caps.max_elements = std::min<std::uint64_t>(std::uint64_t{1} << 14, ctx.options.budgets.enumeration);
  std::optional<GeneratedMorphism> g;
  for (int attempt = 0; attempt < 64 && !g; ++attempt) {
    auto h = random_field_product_morphism(rng, caps);
    if (h.field_target->factors.size() == 2) g = std::move(h);
  }
  r.require(g.has_value(), "two-factor instance generated", "no two-factor target in 64 attempts");
  r.describe(g->description);
  const auto d = dos_classify(g->morphism, *g->field_target, ctx.locality());
  r.field("case", d.which_case);
  r.tag("case-" + std::to_string(d.which_case));
  const auto an = analyze(g->morphism.domain(), ctx.options.budgets.enumeration);
  r.require(d.which_case == (an.blocks.size() == 1 ? 1 : 2), "case matches the number of maximal ideals");
  if (d.which_case == 2) r.require(g->morphism.kernel() == an.radical.radical, "case 2: ker phi = J(R)");
}

void restriction_instance(Recorder& r, const SuiteContext& ctx, const GeneratedMorphism& g, const GeneratedModule& m);

void suite_restriction(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  AlgebraCaps caps;
  caps.max_dim = 5;
  caps.max_elements = std::uint64_t{1} << 12;
  ModuleCaps mcaps;
  mcaps.max_dim = 5;
  for (int attempt = 0;; ++attempt) {
    auto g = random_local_morphism(rng, caps);
    const Algebra& s = g.morphism.codomain();
    if (attempt + 1 < kRetries && !radical_computable(s.p(), s.dim(), ctx)) continue;
    const auto an_s = analyze(s, ctx.options.budgets.enumeration);
    auto m = random_module(rng, an_s, mcaps);
    const std::size_t end_r = endo_algebra(restrict_scalars(g.morphism, m.module)).algebra.dim();
    if (attempt + 1 < kRetries && !radical_computable(s.p(), end_r, ctx)) continue;
    restriction_instance(r, ctx, g, m);
    return;
  }
}

void restriction_instance(Recorder& r, const SuiteContext& ctx, const GeneratedMorphism& g, const GeneratedModule& m) {
  const AlgebraMorphism& phi = g.morphism;
  r.describe(g.description + " / " + m.description);
  const Module ms = m.module;
  const Module mr = restrict_scalars(phi, ms);
  const EndoAlgebra es = endo_algebra(ms);
  const EndoAlgebra er = endo_algebra(mr);
  std::vector<Vec> cols;
  for (std::size_t t = 0; t < es.algebra.dim(); ++t) {
    const auto c = er.homs.coordinates(es.homs.basis_matrix(t));
    r.require(c.has_value(), "End(M_S) inside End(M_R)");
    cols.push_back(*c);
  }
  const AlgebraMorphism incl =
      AlgebraMorphism::make(es.algebra, er.algebra, FpMatrix::from_columns(ms.p(), cols, er.algebra.dim()));
  r.require(incl.is_injective(), "embedding is injective");
  r.field("end_S_dim", es.algebra.dim());
  r.field("end_R_dim", er.algebra.dim());
  check_local(r, ctx, "embedding", incl);
  const auto cd = camps_dicks_check(incl, ctx.options.budgets.enumeration);
  r.field("codim_end_S", cd.codim_domain);
  r.field("codim_end_R", cd.codim_codomain);
  r.require(cd.holds, "codim End(M_S) <= codim End(M_R)");
}

void suite_commutative_top(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  AlgebraCaps caps = module_algebra_caps();
  std::optional<GeneratedAlgebra> g;
  for (int attempt = 0; attempt < 64 && !g; ++attempt) {
    auto h = random_algebra(rng, caps);
    if (h.algebra.is_commutative()) g = std::move(h);
  }
  if (!g) g = GeneratedAlgebra{"truncated-poly(n=3,p=3)", gen_truncated_poly(3, 3)};
  const auto an = analyze(g->algebra, ctx.options.budgets.enumeration);
  ModuleCaps mcaps;
  mcaps.max_dim = 6;
  auto m = random_module(rng, an, mcaps);
  for (int attempt = 1; attempt < kRetries && !radical_computable(an.algebra.p(), endo_algebra(m.module).algebra.dim(), ctx);
       ++attempt)
    m = random_module(rng, an, mcaps);
  r.describe(g->description + " / " + m.description);
  BridgeContext bc(m.module, an, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto top = bc.top_bridge();
  r.field("codim_end", bc.codim_end());
  r.field("top_end_dim", top.morphism.codomain().dim());
  check_local(r, ctx, "top", top.morphism);
}

void suite_finitely_presented(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t index) {
  // A quarter of the instances are random presentations over UT2(GF(2)).
  std::optional<ModuleInstance> mi;
  for (int attempt = 0; attempt < 20; ++attempt) {
    ModuleInstance cand = [&] {
      if (index % 4 == 0) {
        AlgebraAnalysis an = analyze(gen_triangular(2, 2));
        const std::size_t rows = 1 + rng() % 2, cols = 1 + rng() % 2;
        std::vector<std::vector<Vec>> entries(rows, std::vector<Vec>(cols));
        for (auto& row : entries)
          for (auto& e : row) e = random_vector(rng, 2, 3);
        Module mod = module_from_presentation(an.algebra, rows, entries).module;
        return ModuleInstance{"presentation over UT2(GF(2)) " + std::to_string(rows) + "x" + std::to_string(cols),
                              std::move(an), std::move(mod)};
      }
      return random_module_instance(rng, ctx);
    }();
    if (cand.module.dim() == 0) continue;
    const TopComplement tc = build_top_complement(cand.module, cand.analysis);
    const Module sum = direct_sum(cand.module, tc.complement).module;
    if (element_count(sum.p(), endo_algebra(sum).algebra.dim()) <= ctx.options.budgets.enumeration) {
      mi = std::move(cand);
      break;
    }
  }
  r.require(mi.has_value(), "instance with enumerable End(M + N)", "none in 20 attempts");
  r.describe(mi->description);
  const AlgebraAnalysis& an = mi->analysis;
  const TopComplement tc = build_top_complement(mi->module, an);
  const Module sum = direct_sum(mi->module, tc.complement).module;
  const StructuralSeries ss = structural_series(sum, an);
  bool free_top = true;
  for (std::size_t i = 0; i < an.blocks.size(); ++i)
    free_top = free_top && ss.top_multiplicities[i] == tc.free_rank * an.blocks[i].n;
  r.require(free_top, "top(M + N) free over A/J");
  r.field("free_rank", tc.free_rank);
  r.field("complement_dim", tc.complement.dim());
  BridgeContext own(mi->module, an, ctx.instance_seed, ctx.options.budgets.enumeration);
  r.field("codim_end_M", own.codim_end());
  r.field("end_M_semilocal", true);
  BridgeContext bc(sum, an, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto psi = bc.step1_psi();
  r.field("codim_end_sum", bc.codim_end());
  const auto rep = check_local(r, ctx, "psi", psi.morphism);
  r.require(rep.certain(), "psi locality certified exhaustively");
}

void suite_goldie_spectral(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const std::size_t goldie = semisimple_goldie(r, bc.spectral().target.quotient.algebra, ctx, "end-spec");
  r.field("dim", bc.series().socle_length);
  r.field("goldie_end_spec", goldie);
  r.require(goldie == bc.series().socle_length, "dim(M) = Goldie dimension of End(E(M))/J");
  r.require(bc.spectral_bridge().morphism.kernel() == bc.ideal_pair().essential_kernel, "ker(spectral) = I");
}

void suite_spectral_local(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto b = bc.spectral_bridge();
  check_local(r, ctx, "spectral", b.morphism);
  check_invertibility(r, rng, bc.end(), b.morphism, "spectral image invertible iff mono");
  r.field("codim_end", bc.codim_end());
  r.field("dim", bc.series().socle_length);
  r.require(bc.codim_end() <= bc.series().socle_length, "codim End(M) <= dim(M)");
}

void suite_chi(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto chi = bc.chi_bridge();
  r.field("target_factors", chi.target_factors.size());
  check_local(r, ctx, "chi", chi.morphism);
  const auto b = bc.bounds();
  r.field("b1", std::to_string(b.codim_end) + "<=" + std::to_string(b.dim) + "+" + std::to_string(b.dim_cokernel));
  r.require(b.b1, "codim End(M) <= dim(M) + dim(E(M)/M)");
  if (b.b1_equal) r.tag("b1-equality");
}

void suite_dual(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const std::size_t goldie = semisimple_goldie(r, bc.dual().target.quotient.algebra, ctx, "end-dual");
  r.field("codim", bc.series().top_length);
  r.field("goldie_end_dual", goldie);
  r.require(goldie == bc.series().top_length, "Goldie dimension of End(P(M))/J = codim(M)");
  const auto b = bc.dual_bridge();
  r.require(b.morphism.kernel() == bc.ideal_pair().superfluous_image, "ker(dual) = K");
  check_invertibility(r, rng, bc.end(), b.morphism, "dual image invertible iff epi");
  check_local(r, ctx, "dual", b.morphism);
}

void suite_pair(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto ip = bc.ideal_pair();
  const auto b = bc.pair_bridge();
  r.field("I_dim", ip.essential_kernel.dim());
  r.field("K_dim", ip.superfluous_image.dim());
  r.field("kernel_dim", b.morphism.kernel().dim());
  r.require(b.morphism.kernel() == ip.essential_kernel.intersection(ip.superfluous_image), "ker(pair) = I ∩ K");
  check_local(r, ctx, "pair", b.morphism);
}

void suite_bound_b2(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t index) {
  // Instance 0 is the zero module: with codim End(M) <= min(dim, codim),
  // it is the only module meeting b2 with equality.
  ModuleInstance mi = [&] {
    if (index == 0) {
      AlgebraAnalysis an = analyze(gen_truncated_poly(2, 3));
      Module z = Module::zero(an.algebra);
      return ModuleInstance{"zero module over truncated-poly(n=2,p=3)", std::move(an), std::move(z)};
    }
    return random_module_instance(rng, ctx);
  }();
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto b = bc.bounds();
  r.field("b2", std::to_string(b.codim_end) + "<=" + std::to_string(b.dim) + "+" + std::to_string(b.codim));
  r.require(b.b2, "codim End(M) <= dim(M) + codim(M)");
  if (b.b2_equal) r.tag("b2-equality");
  r.require(b.all(), "all three bounds");
}

void suite_biuniform(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  std::optional<ModuleInstance> mi;
  for (int attempt = 0; attempt < 64 && !mi; ++attempt) {
    ModuleInstance cand = random_module_instance(rng, ctx);
    const auto gd = goldie_dims(cand.module, cand.analysis);
    if (gd.dim == 1 && gd.codim == 1) mi = std::move(cand);
  }
  r.require(mi.has_value(), "biuniform instance generated", "none in 64 attempts");
  r.describe(mi->description);
  BridgeContext bc(mi->module, mi->analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto c = bc.biuniform_classify();
  r.field("case", c.which_case);
  r.field("I_dim", c.ideals.essential_kernel.dim());
  r.field("K_dim", c.ideals.superfluous_image.dim());
  r.tag("case-" + std::to_string(c.which_case));
  const bool comparable = c.ideals.essential_kernel.contains(c.ideals.superfluous_image) ||
                          c.ideals.superfluous_image.contains(c.ideals.essential_kernel);
  r.require((c.which_case == 1) == comparable, "exactly one case applies");
  if (c.ideals.essential_kernel == c.ideals.superfluous_image) r.tag("I-equals-K");
}

void suite_bigphi(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto phi = bc.bigphi_bridge();
  r.field("target_factors", phi.target_factors.size());
  check_local(r, ctx, "bigPhi", phi.morphism);
}

void suite_bound_b3(Recorder& r, Rng& rng, const SuiteContext& ctx, std::size_t) {
  const ModuleInstance mi = random_module_instance(rng, ctx);
  r.describe(mi.description);
  BridgeContext bc(mi.module, mi.analysis, ctx.instance_seed, ctx.options.budgets.enumeration);
  const auto b = bc.bounds();
  r.field("b3", std::to_string(b.codim_end) + "<=" + std::to_string(b.codim) + "+" + std::to_string(b.codim_kernel));
  r.require(b.b3, "codim End(M) <= codim(M) + codim(K)");
  r.require(b.all(), "all three bounds");
  if (b.b1_equal) r.tag("b1-equality");
  if (b.b3_equal) r.tag("b3-equality");
}

struct SuiteDef {
  std::string id;
  std::string operation;
  SuiteFn fn;
};

const std::vector<SuiteDef>& registry() {
  static const std::vector<SuiteDef> defs = {
      {"RAD", "radical_trace vs radical_bruteforce", suite_radical},
      {"IDEM", "lift_idempotent, projective_cover, injective_envelope", suite_idempotents},
      {"L2.1", "lemma21_suite", suite_lemma21},
      {"T2.4", "is_local + camps_dicks_check", suite_camps_dicks},
      {"P2.5", "producte_decompose", suite_producte},
      {"C2.6", "dos_classify", suite_dichotomy},
      {"P2.7", "restrict_scalars + End embedding locality", suite_restriction},
      {"P3.1", "End(M) -> End(M/MJ) over commutative algebras", suite_commutative_top},
      {"T3.3", "build_top_complement + step1_psi", suite_finitely_presented},
      {"P4.4", "spectral target Goldie dimension", suite_goldie_spectral},
      {"C4.5", "spectral_bridge locality", suite_spectral_local},
      {"T5.4", "chi_bridge + bound b1", suite_chi},
      {"P6.3", "dual_bridge", suite_dual},
      {"P6.4", "pair_bridge kernel", suite_pair},
      {"C6.5", "bound b2", suite_bound_b2},
      {"C6.7", "biuniform_classify", suite_biuniform},
      {"T7.2", "bigPhi_bridge locality", suite_bigphi},
      {"T7.3", "bound b3", suite_bound_b3},
  };
  return defs;
}

const SuiteDef& find_suite(const std::string& id) {
  for (const auto& d : registry())
    if (d.id == id) return d;
  throw ValidationError("unknown suite '" + id + "'");
}

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

}  // namespace

const std::vector<std::string>& suite_ids() {
  static const std::vector<std::string> ids = [] {
    std::vector<std::string> out;
    for (const auto& d : registry()) out.push_back(d.id);
    return out;
  }();
  return ids;
}

const std::string& suite_operation(const std::string& id) { return find_suite(id).operation; }

SuiteReport run_suite(const std::string& id, const SuiteOptions& options) {
  const SuiteDef& def = find_suite(id);
  const auto start = std::chrono::steady_clock::now();
  SuiteReport report;
  report.id = def.id;
  report.operation = def.operation;
  report.seed = options.seed;
  report.budgets = options.budgets;
  const std::size_t n = options.budgets.count;
  report.instances.resize(n);
  for (std::size_t i = 0; i < n; ++i) report.instances[i].index = i;

  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  auto worker = [&] {
    for (;;) {
      const std::size_t i = next.fetch_add(1);
      if (i >= n || stop.load()) return;
      InstanceOutcome& out = report.instances[i];
      const std::uint64_t seed = mix(mix(options.seed) ^ i);
      Rng rng(seed);
      Recorder rec(out);
      try {
        def.fn(rec, rng, SuiteContext{options, seed}, i);
        out.status = InstanceStatus::Pass;
      } catch (const AssertionFailure& e) {
        out.status = InstanceStatus::Fail;
        out.message = e.what();
      } catch (const std::exception& e) {
        out.status = InstanceStatus::Error;
        out.message = e.what();
      }
      if (out.status != InstanceStatus::Pass && options.fail_fast) stop.store(true);
    }
  };
  std::size_t threads = options.threads ? options.threads : std::max(1u, std::thread::hardware_concurrency());
  threads = std::min(threads, std::max<std::size_t>(n, 1));
  if (threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (std::size_t t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }
  for (const auto& i : report.instances) {
    if (i.status == InstanceStatus::Skipped) continue;
    ++report.census["status." + to_string(i.status)];
    for (const auto& t : i.tags) ++report.census[t];
  }
  report.wall_time_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace semiloc
