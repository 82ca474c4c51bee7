#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "semiloc/algebra.hpp"
#include "semiloc/module.hpp"

namespace semiloc {

enum class InstanceKind { Algebra, Module, Morphism, ModuleHom };
std::string to_string(InstanceKind k);

/// One `alg`, `mod`, `map` or `hom` block, as raw data. Nothing beyond
/// syntax, shapes and residue ranges is checked until `load`.
struct InstanceBlock {
  InstanceKind kind = InstanceKind::Algebra;
  std::string name;
  Residue p = 0;
  std::size_t dim = 0;        ///< alg, mod
  std::string over;           ///< mod: owning algebra
  std::string from, to;       ///< map: algebras; hom: modules
  std::vector<Residue> constants;  ///< alg: dense c[(i*dim+j)*dim+k]
  Vec unit;                         ///< alg
  std::vector<FpMatrix> actions;    ///< mod: one per algebra basis element
  FpMatrix matrix;                  ///< map: cod x dom; hom: dom x cod

  friend bool operator==(const InstanceBlock&, const InstanceBlock&) = default;
};

/// A file: an optional provenance line and blocks in dependency order.
/// Blocks may only reference blocks defined above them.
struct InstanceSpec {
  std::string source = "hand-authored";
  std::vector<InstanceBlock> blocks;

  /// The last block is the object the file is about.
  const InstanceBlock& primary() const;
  InstanceKind kind() const { return primary().kind; }
  const InstanceBlock* find(const std::string& name) const;

  friend bool operator==(const InstanceSpec&, const InstanceSpec&) = default;
};

/// Throws ParseError (1-based line and column) on syntax, shape or range
/// problems.
InstanceSpec parse_instance(std::string_view text);
/// Canonical text; parse_instance(serialize(s)) == s.
std::string serialize(const InstanceSpec& spec);

/// Validated objects built from a spec; constructor errors propagate
/// (AssociativityViolation, NotMultiplicative, ValidationError, ...).
struct LoadedInstance {
  InstanceKind kind = InstanceKind::Algebra;
  std::string primary;
  std::map<std::string, Algebra> algebras;
  std::map<std::string, Module> modules;
  std::map<std::string, AlgebraMorphism> morphisms;
  std::map<std::string, ModuleHom> homs;

  const Algebra& algebra() const;  ///< primary algebra, or the owner of the primary module
  const Module& module() const;
  const AlgebraMorphism& morphism() const;
  const ModuleHom& hom() const;
};
LoadedInstance load(const InstanceSpec& spec);
LoadedInstance load_text(std::string_view text);

// Builders. Names must be unique within a spec; referenced objects must
// already be present under the given names.
void add_algebra(InstanceSpec& spec, const std::string& name, const Algebra& a);
void add_module(InstanceSpec& spec, const std::string& name, const Module& m, const std::string& over);
void add_morphism(InstanceSpec& spec, const std::string& name, const AlgebraMorphism& phi,
                  const std::string& from, const std::string& to);
void add_hom(InstanceSpec& spec, const std::string& name, const ModuleHom& f, const std::string& from,
             const std::string& to);

InstanceSpec algebra_instance(const Algebra& a, std::string source = "hand-authored");
/// Algebra "A" and module "M".
InstanceSpec module_instance(const Module& m, std::string source = "hand-authored");
/// Algebras "R", "S" and map "phi".
InstanceSpec morphism_instance(const AlgebraMorphism& phi, std::string source = "hand-authored");

}  // namespace semiloc
