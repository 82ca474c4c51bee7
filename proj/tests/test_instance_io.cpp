#include <fstream>
#include <sstream>

#include "doctest.h"
#include "semiloc/errors.hpp"
#include "semiloc/generators.hpp"
#include "semiloc/instance_io.hpp"
#include "semiloc/locality.hpp"
#include "semiloc/radical.hpp"

using namespace semiloc;

namespace {

std::string read_data(const std::string& name) {
  std::ifstream in(std::string(SEMILOC_DATA_DIR) + "/" + name);
  REQUIRE(in.good());
  std::ostringstream s;
  s << in.rdbuf();
  return s.str();
}

ParseError parse_error(const std::string& text) {
  try {
    parse_instance(text);
  } catch (const ParseError& e) {
    return e;
  }
  FAIL("no ParseError");
  return ParseError(0, 0, "");
}

}  // namespace

TEST_CASE("hand-authored UT2 file validates and has a 1-dim radical") {
  const std::string text = read_data("ut2_gf2.txt");
  const auto spec = parse_instance(text);
  CHECK(spec.kind() == InstanceKind::Algebra);
  CHECK(serialize(spec) == text);
  const auto loaded = load(spec);
  CHECK(same_structure(loaded.algebra(), gen_triangular(2, 2)));
  CHECK(radical(loaded.algebra()).radical.dim() == 1);
}

TEST_CASE("hand-authored UT2 -> M2 inclusion is local with codims 2 <= 2") {
  const std::string text = read_data("ut2_in_m2.txt");
  const auto spec = parse_instance(text);
  CHECK(serialize(spec) == text);
  const auto phi = load(spec).morphism();
  CHECK(is_local(phi).verdict == LocalityVerdict::Local);
  const auto cd = camps_dicks_check(phi);
  CHECK(cd.codim_domain == 2);
  CHECK(cd.codim_codomain == 2);
}

TEST_CASE("syntax errors carry line and column") {
  const auto e1 = parse_error("alg A p=x dim=2\nunit 1 0\nend\n");
  CHECK(e1.line == 1);
  CHECK(e1.column == 9);
  const auto e2 = parse_error("alg A p=4 dim=1\nunit 1\nend\n");
  CHECK(e2.line == 1);
  const auto e3 = parse_error("alg A p=3 dim=1\nc 0 0 0 3\nunit 1\nend\n");
  CHECK(e3.line == 2);
  CHECK(e3.column == 9);
  const auto e4 = parse_error("alg A p=3 dim=1\nc 0 0 0 1\nend\n");
  CHECK(e4.line == 3);
  const auto e5 = parse_error("alg A p=3 dim=1\nunit 1\n");
  CHECK(e5.line == 2);
  const auto e6 = parse_error("alg A p=3 dim=1\nunit 1\nend\nmod M p=3 dim=1 over=B\nact 0 : 1\nend\n");
  CHECK(e6.line == 4);
  CHECK(e6.column == 22);  // the undefined name itself
  const auto e7 = parse_error("  frob\n");
  CHECK(e7.line == 1);
  CHECK(e7.column == 3);
  CHECK_THROWS_AS(parse_instance("# nothing\n"), ParseError);
}

TEST_CASE("validation errors are forwarded from constructors") {
  // b0*b0 = b1 but b1 has no products: not unital with unit b0
  CHECK_THROWS_AS(load_text("alg A p=2 dim=2\nc 0 0 1 1\nunit 1 0\nend\n"), ValidationError);
  CHECK_THROWS_AS(load_text("alg A p=2 dim=1\nc 0 0 0 1\nunit 1\nend\nmod M p=2 dim=1 over=A\nact 0 : 0\nend\n"),
                  ValidationError);
  const std::string ut2 = read_data("ut2_gf2.txt");
  // projection onto e11's coefficient is multiplicative, onto e22's with e12 kept is not
  CHECK_THROWS_AS(load_text(ut2 + "alg F p=2 dim=1\nc 0 0 0 1\nunit 1\nend\nmap bad from=UT2 to=F\n1 1 0\nend\n"),
                  NotMultiplicative);
  CHECK_NOTHROW(load_text(ut2 + "alg F p=2 dim=1\nc 0 0 0 1\nunit 1\nend\nmap good from=UT2 to=F\n1 0 0\nend\n"));
}

TEST_CASE("headers without names default and references resolve") {
  const auto s = parse_instance("alg p=3 dim=1\nc 0 0 0 1\nunit 1\nend\nmod p=3 dim=2\nact 0 : 1 0 0 1\nend\n");
  CHECK(s.blocks[0].name == "alg0");
  CHECK(s.blocks[1].over == "alg0");
  CHECK(load(s).module().dim() == 2);
}

TEST_CASE("property: generated objects round-trip bit-exactly") {
  Rng rng(77);
  AlgebraCaps caps;
  caps.max_dim = 6;
  ModuleCaps mcaps;
  mcaps.max_dim = 5;
  for (int t = 0; t < 30; ++t) {
    const auto g = random_algebra(rng, caps);
    const auto an = analyze(g.algebra);
    const auto m = random_module(rng, an, mcaps);
    InstanceSpec spec = module_instance(m.module, "gen " + g.description);
    const Module& mm = m.module;
    add_hom(spec, "id", ModuleHom::identity(mm), "M", "M");
    const std::string text = serialize(spec);
    const auto back = parse_instance(text);
    CHECK(back == spec);
    CHECK(serialize(back) == text);
    const auto loaded = load(back);
    CHECK(same_structure(loaded.algebras.at("A"), g.algebra));
    CHECK(loaded.modules.at("M").actions() == mm.actions());
    CHECK(loaded.hom().matrix().is_identity());

    const auto phi = random_local_morphism(rng, caps);
    const auto ms = morphism_instance(phi.morphism);
    const auto reloaded = load(parse_instance(serialize(ms))).morphism();
    CHECK(reloaded.matrix() == phi.morphism.matrix());
  }
}
