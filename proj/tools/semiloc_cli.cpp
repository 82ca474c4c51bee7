// Command-line surface: inspect instance files and run verification suites.
// Exit codes: 0 pass, 1 assertion failure (or a not-local verdict from
// check-local), 2 usage, parse or validation error.

#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "semiloc/bridges.hpp"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"
#include "semiloc/instance_io.hpp"
#include "semiloc/suites.hpp"

using namespace semiloc;

namespace {

constexpr int kPass = 0;
constexpr int kAssertion = 1;
constexpr int kUsage = 2;

LoadedInstance load_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ValidationError("cannot open '" + path + "'");
  std::ostringstream s;
  s << in.rdbuf();
  return load_text(s.str());
}

std::string vec_text(std::span<const Residue> v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? " " : "") + std::to_string(v[i]);
  return s;
}

void print_basis(const std::string& key, const Subspace& s) {
  for (std::size_t r = 0; r < s.dim(); ++r) std::cout << key << "." << r << "=" << vec_text(s.basis().row(r)) << "\n";
}

const Algebra& primary_algebra(const LoadedInstance& li) {
  if (li.kind == InstanceKind::Morphism) return li.morphism().domain();
  return li.algebra();
}

const Module& require_module(const LoadedInstance& li) {
  if (li.kind != InstanceKind::Module) throw ValidationError("expected a module file, got a " + to_string(li.kind));
  return li.module();
}

int cmd_validate(const std::string& path) {
  const LoadedInstance li = load_file(path);
  std::cout << "kind=" << to_string(li.kind) << "\nname=" << li.primary << "\n";
  for (const auto& [n, a] : li.algebras) std::cout << "algebra." << n << "=p" << a.p() << " dim " << a.dim() << "\n";
  for (const auto& [n, m] : li.modules) std::cout << "module." << n << "=dim " << m.dim() << "\n";
  for (const auto& [n, f] : li.morphisms)
    std::cout << "morphism." << n << "=" << f.domain().dim() << " -> " << f.codomain().dim() << "\n";
  for (const auto& [n, h] : li.homs) std::cout << "hom." << n << "=" << h.domain().dim() << " -> " << h.codomain().dim() << "\n";
  std::cout << "valid=true\n";
  return kPass;
}

int cmd_radical(const std::string& path, std::uint64_t budget) {
  const Algebra a = primary_algebra(load_file(path));
  const RadicalReport r = radical(a, budget);
  std::cout << "dim=" << a.dim() << "\nradical_dim=" << r.radical.dim() << "\nnilpotency_index=" << r.nilpotency_index
            << "\nmethod=" << to_string(r.method) << "\n";
  print_basis("radical.basis", r.radical);
  return kPass;
}

int cmd_decompose(const std::string& path, std::uint64_t budget) {
  const AlgebraAnalysis an = analyze(primary_algebra(load_file(path)), budget);
  std::cout << "dim=" << an.algebra.dim() << "\nradical_dim=" << an.radical.radical.dim()
            << "\nblocks=" << an.blocks.size() << "\ncodim=" << an.codim() << "\n";
  for (std::size_t i = 0; i < an.blocks.size(); ++i) {
    const auto& b = an.blocks[i];
    std::cout << "block." << i << "=M_" << b.n << "(GF(" << an.algebra.p() << "^" << b.k << "))\n";
    std::cout << "block." << i << ".central_idempotent=" << vec_text(b.central) << "\n";
    std::cout << "block." << i << ".primitive_idempotent=" << vec_text(b.primitive) << "\n";
  }
  return kPass;
}

int cmd_endo(const std::string& path, std::uint64_t budget) {
  const Module m = require_module(load_file(path));
  const AlgebraAnalysis an = analyze(m.algebra(), budget);
  BridgeContext bc(m, an, 0xb41d9eULL, budget);
  const AlgebraAnalysis& ea = bc.end_analysis();
  std::cout << "module_dim=" << m.dim() << "\nend_dim=" << ea.algebra.dim() << "\nend_radical_dim="
            << ea.radical.radical.dim() << "\nend_codim=" << ea.codim() << "\nend_local="
            << (ea.blocks.size() == 1 && ea.blocks[0].n == 1 ? "true" : "false") << "\n";
  for (std::size_t i = 0; i < ea.blocks.size(); ++i)
    std::cout << "end_block." << i << "=M_" << ea.blocks[i].n << "(GF(" << m.p() << "^" << ea.blocks[i].k << "))\n";
  const IdealPair ip = bc.ideal_pair();
  std::cout << "I_dim=" << ip.essential_kernel.dim() << "\nK_dim=" << ip.superfluous_image.dim() << "\n";
  return kPass;
}

int cmd_dims(const std::string& path, std::uint64_t budget) {
  const Module m = require_module(load_file(path));
  const AlgebraAnalysis an = analyze(m.algebra(), budget);
  BridgeContext bc(m, an, 0xb41d9eULL, budget);
  const StructuralSeries& s = bc.series();
  std::cout << "module_dim=" << m.dim() << "\ngoldie_dim=" << s.socle_length << "\ndual_goldie_dim=" << s.top_length
            << "\nsocle_dim=" << s.socle.dim() << "\nradical_dim=" << s.radical.dim() << "\n";
  std::cout << "socle_multiplicities=" << vec_text(Vec(s.socle_multiplicities.begin(), s.socle_multiplicities.end()))
            << "\ntop_multiplicities=" << vec_text(Vec(s.top_multiplicities.begin(), s.top_multiplicities.end())) << "\n";
  std::cout << "envelope_dim=" << bc.spectral().envelope.envelope.dim() << "\ncover_dim=" << bc.dual().cover.cover.dim()
            << "\n";
  const BoundsReport b = bc.bounds();
  std::cout << "codim_end=" << b.codim_end << "\nb1=" << b.b1 << "\nb2=" << b.b2 << "\nb3=" << b.b3 << "\n";
  return b.all() ? kPass : kAssertion;
}

int cmd_check_local(const std::string& path, std::uint64_t budget, std::uint64_t sampling) {
  const AlgebraMorphism phi = load_file(path).morphism();
  LocalityOptions lo;
  lo.enumeration_budget = budget;
  lo.sampling_budget = sampling;
  const LocalityReport r = is_local(phi, lo);
  std::cout << "verdict=" << to_string(r.verdict) << "\nmethod=" << to_string(r.method)
            << "\nelements_checked=" << r.elements_checked << "\n";
  if (r.witness) std::cout << "witness=" << vec_text(*r.witness) << "\n";
  return r.verdict == LocalityVerdict::NotLocal ? kAssertion : kPass;
}

// The codomain must be commutative semisimple; it is presented as a
// product of fields through its own Wedderburn decomposition.
int cmd_producte(const std::string& path, std::uint64_t budget) {
  const AlgebraMorphism phi = load_file(path).morphism();
  const AlgebraAnalysis san = analyze(phi.codomain(), budget);
  const auto fp = san.radical.radical.is_zero() ? to_field_product(san) : std::nullopt;
  if (!fp) throw CodomainNotFieldProduct("codomain is not a finite product of fields");
  const AlgebraMorphism composite = compose(fp->morphism, phi);
  LocalityOptions lo;
  lo.enumeration_budget = budget;
  const ProducteResult res = producte_decompose(composite, fp->target, lo);
  std::cout << "factors=" << fp->target.factors.size() << "\nm=" << res.m() << "\n";
  for (std::size_t i = 0; i < res.m(); ++i) {
    std::cout << "selected." << i << "=" << res.selected[i] << "\nresidue_degree." << i << "=" << res.residue_degrees[i]
              << "\n";
    print_basis("maximal_ideal." + std::to_string(i), res.maximal_ideals[i]);
  }
  std::cout << "radical_dim=" << res.radical.dim() << "\nassembled_local=" << to_string(res.assembled_locality.verdict)
            << "\nidempotent_splits=" << res.idempotent_splits << "\n";
  return kPass;
}

int cmd_gen(const std::string& family, const std::vector<std::string>& params, std::uint64_t seed, std::size_t count,
            std::uint64_t budget) {
  const auto gens = generate_algebras(family, params, seed, count, budget);
  for (std::size_t i = 0; i < gens.size(); ++i) {
    if (i) std::cout << "\n";
    std::cout << serialize(algebra_instance(gens[i].algebra, "gen " + gens[i].description + " seed=" +
                                                                  std::to_string(seed) + " index=" + std::to_string(i)));
  }
  return kPass;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ValidationError("cannot write '" + path + "'");
  out << text;
}

int cmd_verify(const std::string& suite, const SuiteOptions& options, const std::string& json) {
  const std::vector<std::string> ids = suite == "all" ? suite_ids() : std::vector<std::string>{suite};
  for (const auto& id : ids) suite_operation(id);  // validate ids before running anything
  bool ok = true;
  std::string summaries = "[";
  for (const auto& id : ids) {
    const SuiteReport r = run_suite(id, options);
    std::cout << r.text() << std::flush;
    if (ids.size() > 1) std::cout << "\n";
    summaries += (summaries.size() > 1 ? ",\n" : "") + r.summary_json();
    ok = ok && r.passed();
    if (!ok && options.fail_fast) break;
  }
  if (!json.empty()) write_file(json, summaries + "]\n");
  return ok ? kPass : kAssertion;
}

int cmd_report(const std::string& out, const SuiteOptions& options) {
  std::string text, summaries = "[";
  bool ok = true;
  for (const auto& id : suite_ids()) {
    const SuiteReport r = run_suite(id, options);
    text += r.text() + "\n";
    summaries += (summaries.size() > 1 ? ",\n" : "") + r.summary_json();
    std::cout << id << ": " << (r.passed() ? "pass" : "FAIL") << " (" << r.instances.size() << " instances, "
              << r.failures() << " failures, " << r.wall_time_seconds << " s)\n";
    ok = ok && r.passed();
  }
  write_file(out, text);
  write_file(out + ".json", summaries + "]\n");
  std::cout << "wrote " << out << " and " << out << ".json\n";
  return ok ? kPass : kAssertion;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Semilocal endomorphism rings: exact computations and verification suites"};
  app.require_subcommand(1);
  std::uint64_t budget = kDefaultEnumerationBudget;
  std::uint64_t sampling = kDefaultSamplingBudget;
  std::string file;

  auto add_file = [&](CLI::App* sub, const char* what) {
    sub->add_option("file", file, what)->required();
    sub->add_option("--budget", budget, "enumeration budget (elements)");
  };
  auto* validate = app.add_subcommand("validate", "parse and validate an instance file");
  validate->add_option("file", file, "instance file")->required();
  auto* rad = app.add_subcommand("radical", "Jacobson radical of an algebra");
  add_file(rad, "algebra file");
  auto* dec = app.add_subcommand("decompose", "Wedderburn blocks of A/J and lifted idempotents");
  add_file(dec, "algebra file");
  auto* endo = app.add_subcommand("endo", "endomorphism ring of a module");
  add_file(endo, "module file");
  auto* dims = app.add_subcommand("dims", "Goldie and dual Goldie dimensions and bounds");
  add_file(dims, "module file");
  auto* local = app.add_subcommand("check-local", "decide whether a morphism is local");
  add_file(local, "morphism file");
  local->add_option("--sampling", sampling, "sampling budget (trials)");
  auto* prod = app.add_subcommand("producte", "decompose a local morphism into a product of fields");
  add_file(prod, "morphism file");

  auto* gen = app.add_subcommand("gen", "generate algebra instances");
  std::string family;
  std::vector<std::string> params;
  std::uint64_t seed = 1;
  std::size_t count = 1;
  std::uint64_t gen_cap = std::uint64_t{1} << 20;
  gen->add_option("family", family, "triangular, truncated-poly, field, matrix, path-algebra, trivial-ext, random")
      ->required();
  gen->add_option("params", params, "family parameters");
  gen->add_option("--seed", seed, "seed");
  gen->add_option("--count", count, "number of instances");
  gen->add_option("--cap", gen_cap, "maximum p^dim");

  SuiteOptions so;
  std::string suite, json, out;
  auto suite_flags = [&](CLI::App* sub) {
    sub->add_option("--count", so.budgets.count, "instances per suite");
    sub->add_option("--seed", so.seed, "seed");
    sub->add_option("--budget", so.budgets.enumeration, "enumeration budget (elements)");
    sub->add_option("--sampling", so.budgets.sampling, "sampling budget (trials)");
    sub->add_option("--threads", so.threads, "worker threads (0 = all cores)");
    sub->add_flag("--fail-fast", so.fail_fast, "stop at the first failing instance");
  };
  auto* verify = app.add_subcommand("verify", "run a verification suite (or 'all')");
  verify->add_option("suite", suite, "suite id")->required();
  verify->add_option("--json", json, "write a JSON summary here");
  suite_flags(verify);
  auto* report = app.add_subcommand("report", "run every suite and write the reports");
  report->add_option("--out", out, "report path; the JSON summary goes to <path>.json")->required();
  suite_flags(report);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kUsage;
  }

  try {
    if (*validate) return cmd_validate(file);
    if (*rad) return cmd_radical(file, budget);
    if (*dec) return cmd_decompose(file, budget);
    if (*endo) return cmd_endo(file, budget);
    if (*dims) return cmd_dims(file, budget);
    if (*local) return cmd_check_local(file, budget, sampling);
    if (*prod) return cmd_producte(file, budget);
    if (*gen) return cmd_gen(family, params, seed, count, gen_cap);
    if (*verify) return cmd_verify(suite, so, json);
    if (*report) return cmd_report(out, so);
  } catch (const AssertionFailure& e) {
    std::cerr << "assertion failure: " << e.what() << "\n";
    return kAssertion;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kUsage;
  }
  return kUsage;
}
