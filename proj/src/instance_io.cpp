#include "semiloc/instance_io.hpp"

#include <charconv>
#include <set>
#include <sstream>

#include "semiloc/errors.hpp"

namespace semiloc {

std::string to_string(InstanceKind k) {
  switch (k) {
    case InstanceKind::Algebra: return "algebra";
    case InstanceKind::Module: return "module";
    case InstanceKind::Morphism: return "morphism";
    case InstanceKind::ModuleHom: return "module-hom";
  }
  return "?";
}

const InstanceBlock& InstanceSpec::primary() const {
  if (blocks.empty()) throw ValidationError("instance has no blocks");
  return blocks.back();
}

const InstanceBlock* InstanceSpec::find(const std::string& name) const {
  for (const auto& b : blocks)
    if (b.name == name) return &b;
  return nullptr;
}

namespace {

struct Token {
  std::string_view text;
  std::size_t column;  // 1-based
};

std::vector<Token> tokenize(std::string_view line) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < line.size()) {
    while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) ++i;
    if (i >= line.size() || line[i] == '#') break;
    const std::size_t start = i;
    while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') ++i;
    out.push_back({line.substr(start, i - start), start + 1});
  }
  return out;
}

class Parser {
 public:
  explicit Parser(std::string_view text) {
    std::size_t start = 0;
    while (start <= text.size()) {
      const std::size_t nl = text.find('\n', start);
      const std::size_t end = nl == std::string_view::npos ? text.size() : nl;
      lines_.push_back(text.substr(start, end - start));
      if (nl == std::string_view::npos) break;
      start = nl + 1;
    }
  }

  InstanceSpec run() {
    InstanceSpec spec;
    bool seen_block = false;
    while (next_line()) {
      const auto& head = toks_[0];
      if (head.text == "source") {
        if (seen_block) fail(head, "source line must precede all blocks");
        const std::string_view line = lines_[line_no_ - 1];
        std::string_view rest = line.substr(head.column - 1 + head.text.size());
        while (!rest.empty() && (rest.front() == ' ' || rest.front() == '\t')) rest.remove_prefix(1);
        while (!rest.empty() && (rest.back() == ' ' || rest.back() == '\r')) rest.remove_suffix(1);
        spec.source = std::string(rest);
        continue;
      }
      seen_block = true;
      InstanceBlock block;
      if (head.text == "alg") {
        block = parse_algebra(spec);
      } else if (head.text == "mod") {
        block = parse_module(spec);
      } else if (head.text == "map") {
        block = parse_matrix_block(spec, InstanceKind::Morphism);
      } else if (head.text == "hom") {
        block = parse_matrix_block(spec, InstanceKind::ModuleHom);
      } else {
        fail(head, "expected 'alg', 'mod', 'map', 'hom' or 'source', found '" + std::string(head.text) + "'");
      }
      spec.blocks.push_back(std::move(block));
    }
    if (spec.blocks.empty()) throw ParseError(line_no_ ? line_no_ : 1, 1, "no blocks");
    return spec;
  }

 private:
  [[noreturn]] void fail(const Token& t, const std::string& msg) const { throw ParseError(line_no_, t.column, msg); }

  bool next_line() {
    while (line_no_ < lines_.size()) {
      toks_ = tokenize(lines_[line_no_++]);
      if (!toks_.empty()) {
        last_content_ = line_no_;
        return true;
      }
    }
    return false;
  }

  std::uint64_t number(const Token& t, std::string_view digits) const {
    std::uint64_t v = 0;
    const auto [ptr, ec] = std::from_chars(digits.data(), digits.data() + digits.size(), v);
    if (ec != std::errc() || ptr != digits.data() + digits.size() || digits.empty())
      fail(t, "expected a nonnegative integer, found '" + std::string(t.text) + "'");
    return v;
  }
  std::uint64_t number(const Token& t) const { return number(t, t.text); }

  Residue residue(const Token& t, Residue p) const {
    const std::uint64_t v = number(t);
    if (v >= p) fail(t, "entry " + std::to_string(v) + " is not reduced mod " + std::to_string(p));
    return static_cast<Residue>(v);
  }

  // Header: keyword [name] key=value...
  struct Header {
    std::string name;
    std::map<std::string, Token> keys;
  };
  Header header(std::initializer_list<std::string_view> allowed, const std::string& default_name) const {
    Header h;
    for (std::size_t i = 1; i < toks_.size(); ++i) {
      const Token& t = toks_[i];
      const std::size_t eq = t.text.find('=');
      if (eq == std::string_view::npos) {
        if (!h.name.empty() || i != 1) fail(t, "unexpected token '" + std::string(t.text) + "'");
        h.name = std::string(t.text);
        continue;
      }
      const std::string key(t.text.substr(0, eq));
      bool ok = false;
      for (auto a : allowed) ok = ok || a == key;
      if (!ok) fail(t, "unknown key '" + key + "'");
      if (h.keys.count(key)) fail(t, "duplicate key '" + key + "'");
      h.keys.emplace(key, Token{t.text.substr(eq + 1), t.column + eq + 1});
    }
    if (h.name.empty()) h.name = default_name;
    return h;
  }

  Residue modulus(const Header& h) const {
    const auto it = h.keys.find("p");
    if (it == h.keys.end()) fail(toks_[0], "missing p=<prime>");
    const std::uint64_t p = number(it->second);
    if (p > kMaxModulus || !is_prime(p)) fail(it->second, "modulus must be a prime below 2^31");
    return static_cast<Residue>(p);
  }

  std::size_t dimension(const Header& h) const {
    const auto it = h.keys.find("dim");
    if (it == h.keys.end()) fail(toks_[0], "missing dim=<n>");
    const std::uint64_t d = number(it->second);
    if (d > 4096) fail(it->second, "dimension too large");
    return static_cast<std::size_t>(d);
  }

  void check_fresh(const InstanceSpec& spec, const std::string& name) const {
    if (spec.find(name)) fail(toks_.size() > 1 ? toks_[1] : toks_[0], "name '" + name + "' already defined");
  }

  // Resolves a reference key, defaulting to the last block of the given kind.
  const InstanceBlock& reference(const InstanceSpec& spec, const Header& h, const std::string& key,
                                 InstanceKind kind) const {
    const auto it = h.keys.find(key);
    if (it == h.keys.end()) {
      for (auto b = spec.blocks.rbegin(); b != spec.blocks.rend(); ++b)
        if (b->kind == kind) return *b;
      fail(toks_[0], "missing " + key + "= and no earlier " + to_string(kind));
    }
    const InstanceBlock* b = spec.find(std::string(it->second.text));
    if (!b) fail(it->second, "undefined name '" + std::string(it->second.text) + "'");
    if (b->kind != kind) fail(it->second, "'" + b->name + "' is not an " + to_string(kind));
    return *b;
  }

  std::string default_name(const InstanceSpec& spec, const char* stem) const {
    return stem + std::to_string(spec.blocks.size());
  }

  bool at_end() const { return toks_.size() == 1 && toks_[0].text == "end"; }

  void require_line(const std::string& what) {
    if (!next_line()) throw ParseError(last_content_, 1, "unexpected end of input inside " + what);
  }

  InstanceBlock parse_algebra(const InstanceSpec& spec) {
    const Header h = header({"p", "dim"}, default_name(spec, "alg"));
    check_fresh(spec, h.name);
    InstanceBlock b;
    b.kind = InstanceKind::Algebra;
    b.name = h.name;
    b.p = modulus(h);
    b.dim = dimension(h);
    const std::size_t n = b.dim;
    b.constants.assign(n * n * n, 0);
    std::set<std::size_t> seen;
    bool have_unit = false;
    for (;;) {
      require_line("alg block");
      if (at_end()) break;
      const Token& kw = toks_[0];
      if (kw.text == "c") {
        if (toks_.size() != 5) fail(kw, "expected 'c i j k v'");
        std::size_t idx[3];
        for (int t = 0; t < 3; ++t) {
          const std::uint64_t v = number(toks_[1 + t]);
          if (v >= n) fail(toks_[1 + t], "basis index out of range");
          idx[t] = static_cast<std::size_t>(v);
        }
        const std::size_t flat = (idx[0] * n + idx[1]) * n + idx[2];
        if (!seen.insert(flat).second) fail(kw, "duplicate structure constant");
        b.constants[flat] = residue(toks_[4], b.p);
      } else if (kw.text == "unit") {
        if (have_unit) fail(kw, "duplicate unit line");
        if (toks_.size() != n + 1) fail(kw, "unit needs " + std::to_string(n) + " entries");
        for (std::size_t i = 0; i < n; ++i) b.unit.push_back(residue(toks_[1 + i], b.p));
        have_unit = true;
      } else {
        fail(kw, "expected 'c', 'unit' or 'end'");
      }
    }
    if (!have_unit) fail(toks_[0], "alg block has no unit line");
    return b;
  }

  InstanceBlock parse_module(const InstanceSpec& spec) {
    const Header h = header({"p", "dim", "over"}, default_name(spec, "mod"));
    check_fresh(spec, h.name);
    InstanceBlock b;
    b.kind = InstanceKind::Module;
    b.name = h.name;
    b.p = modulus(h);
    b.dim = dimension(h);
    const InstanceBlock& owner = reference(spec, h, "over", InstanceKind::Algebra);
    b.over = owner.name;
    if (owner.p != b.p) fail(h.keys.at("p"), "modulus differs from algebra '" + owner.name + "'");
    std::vector<bool> have(owner.dim, false);
    b.actions.assign(owner.dim, FpMatrix(b.p, b.dim, b.dim));
    for (;;) {
      require_line("mod block");
      if (at_end()) break;
      const Token& kw = toks_[0];
      if (kw.text != "act") fail(kw, "expected 'act i : entries' or 'end'");
      if (toks_.size() < 3 || toks_[2].text != ":") fail(kw, "expected 'act i : entries'");
      const std::uint64_t i = number(toks_[1]);
      if (i >= owner.dim) fail(toks_[1], "basis index out of range");
      if (have[i]) fail(toks_[1], "duplicate action");
      if (toks_.size() != 3 + b.dim * b.dim)
        fail(kw, "action needs " + std::to_string(b.dim * b.dim) + " entries");
      for (std::size_t e = 0; e < b.dim * b.dim; ++e)
        b.actions[i](e / b.dim, e % b.dim) = residue(toks_[3 + e], b.p);
      have[i] = true;
    }
    for (std::size_t i = 0; i < owner.dim; ++i)
      if (!have[i]) fail(toks_[0], "missing action of basis element " + std::to_string(i));
    return b;
  }

  InstanceBlock parse_matrix_block(const InstanceSpec& spec, InstanceKind kind) {
    const bool is_map = kind == InstanceKind::Morphism;
    const Header h = header({"from", "to"}, default_name(spec, is_map ? "map" : "hom"));
    check_fresh(spec, h.name);
    if (!h.keys.count("from") || !h.keys.count("to"))
      fail(toks_[0], std::string(is_map ? "map" : "hom") + " needs from= and to=");
    const InstanceKind ref = is_map ? InstanceKind::Algebra : InstanceKind::Module;
    const InstanceBlock& from = reference(spec, h, "from", ref);
    const InstanceBlock& to = reference(spec, h, "to", ref);
    if (from.p != to.p) fail(toks_[0], "modulus mismatch between '" + from.name + "' and '" + to.name + "'");
    InstanceBlock b;
    b.kind = kind;
    b.name = h.name;
    b.p = from.p;
    b.from = from.name;
    b.to = to.name;
    const std::size_t rows = is_map ? to.dim : from.dim;
    const std::size_t cols = is_map ? from.dim : to.dim;
    b.matrix = FpMatrix(b.p, rows, cols);
    std::size_t r = 0;
    for (;;) {
      require_line(is_map ? "map block" : "hom block");
      if (at_end()) break;
      if (r == rows) fail(toks_[0], "too many matrix rows (expected " + std::to_string(rows) + ")");
      if (toks_.size() != cols) fail(toks_[0], "row needs " + std::to_string(cols) + " entries");
      for (std::size_t c = 0; c < cols; ++c) b.matrix(r, c) = residue(toks_[c], b.p);
      ++r;
    }
    if (r != rows) fail(toks_[0], "expected " + std::to_string(rows) + " matrix rows, found " + std::to_string(r));
    return b;
  }

  std::vector<std::string_view> lines_;
  std::size_t line_no_ = 0;
  std::size_t last_content_ = 1;
  std::vector<Token> toks_;
};

void write_row(std::ostringstream& out, std::span<const Residue> row) {
  for (std::size_t i = 0; i < row.size(); ++i) out << (i ? " " : "") << row[i];
}

}  // namespace

InstanceSpec parse_instance(std::string_view text) { return Parser(text).run(); }

std::string serialize(const InstanceSpec& spec) {
  std::ostringstream out;
  if (spec.source.find('\n') != std::string::npos) throw ValidationError("source must be a single line");
  out << "source " << spec.source << "\n";
  for (const auto& b : spec.blocks) {
    switch (b.kind) {
      case InstanceKind::Algebra: {
        out << "alg " << b.name << " p=" << b.p << " dim=" << b.dim << "\n";
        const std::size_t n = b.dim;
        for (std::size_t f = 0; f < b.constants.size(); ++f)
          if (b.constants[f])
            out << "c " << f / (n * n) << " " << (f / n) % n << " " << f % n << " " << b.constants[f] << "\n";
        out << "unit";
        for (Residue v : b.unit) out << " " << v;
        out << "\n";
        break;
      }
      case InstanceKind::Module:
        out << "mod " << b.name << " p=" << b.p << " dim=" << b.dim << " over=" << b.over << "\n";
        for (std::size_t i = 0; i < b.actions.size(); ++i) {
          out << "act " << i << " :";
          for (Residue v : b.actions[i].data()) out << " " << v;
          out << "\n";
        }
        break;
      case InstanceKind::Morphism:
      case InstanceKind::ModuleHom:
        out << (b.kind == InstanceKind::Morphism ? "map " : "hom ") << b.name << " from=" << b.from
            << " to=" << b.to << "\n";
        for (std::size_t r = 0; r < b.matrix.rows(); ++r) {
          write_row(out, b.matrix.row(r));
          out << "\n";
        }
        break;
    }
    out << "end\n";
  }
  return out.str();
}

// ---------------------------------------------------------------------------

namespace {

template <class Map>
const typename Map::mapped_type& lookup(const Map& m, const std::string& name, const char* what) {
  const auto it = m.find(name);
  if (it == m.end()) throw ValidationError(std::string("no ") + what + " named '" + name + "'");
  return it->second;
}

}  // namespace

const Algebra& LoadedInstance::algebra() const {
  if (kind == InstanceKind::Algebra) return lookup(algebras, primary, "algebra");
  if (kind == InstanceKind::Module) return module().algebra();
  throw ValidationError("primary object is a " + to_string(kind));
}
const Module& LoadedInstance::module() const { return lookup(modules, primary, "module"); }
const AlgebraMorphism& LoadedInstance::morphism() const { return lookup(morphisms, primary, "morphism"); }
const ModuleHom& LoadedInstance::hom() const { return lookup(homs, primary, "module hom"); }

LoadedInstance load(const InstanceSpec& spec) {
  LoadedInstance out;
  out.kind = spec.kind();
  out.primary = spec.primary().name;
  for (const auto& b : spec.blocks) {
    switch (b.kind) {
      case InstanceKind::Algebra:
        out.algebras.emplace(b.name, Algebra::make(b.p, b.dim, b.constants, b.unit, b.name));
        break;
      case InstanceKind::Module:
        out.modules.emplace(b.name, Module::make(lookup(out.algebras, b.over, "algebra"), b.actions, b.name));
        break;
      case InstanceKind::Morphism:
        out.morphisms.emplace(b.name, AlgebraMorphism::make(lookup(out.algebras, b.from, "algebra"),
                                                            lookup(out.algebras, b.to, "algebra"), b.matrix));
        break;
      case InstanceKind::ModuleHom:
        out.homs.emplace(b.name, ModuleHom::make(lookup(out.modules, b.from, "module"),
                                                 lookup(out.modules, b.to, "module"), b.matrix));
        break;
    }
  }
  return out;
}

LoadedInstance load_text(std::string_view text) { return load(parse_instance(text)); }

namespace {

void require_fresh(const InstanceSpec& spec, const std::string& name) {
  if (name.empty() || name.find_first_of(" \t\n=#") != std::string::npos)
    throw ValidationError("invalid instance name '" + name + "'");
  if (spec.find(name)) throw ValidationError("name '" + name + "' already used");
}

const InstanceBlock& require_ref(const InstanceSpec& spec, const std::string& name, InstanceKind kind) {
  const InstanceBlock* b = spec.find(name);
  if (!b || b->kind != kind) throw ValidationError("no " + to_string(kind) + " named '" + name + "'");
  return *b;
}

}  // namespace

void add_algebra(InstanceSpec& spec, const std::string& name, const Algebra& a) {
  require_fresh(spec, name);
  InstanceBlock b;
  b.kind = InstanceKind::Algebra;
  b.name = name;
  b.p = a.p();
  b.dim = a.dim();
  b.constants = a.constants();
  b.unit = a.unit();
  spec.blocks.push_back(std::move(b));
}

void add_module(InstanceSpec& spec, const std::string& name, const Module& m, const std::string& over) {
  require_fresh(spec, name);
  const auto& owner = require_ref(spec, over, InstanceKind::Algebra);
  if (owner.dim != m.algebra().dim() || owner.p != m.p())
    throw DimensionMismatch("module '" + name + "' does not fit algebra '" + over + "'");
  InstanceBlock b;
  b.kind = InstanceKind::Module;
  b.name = name;
  b.p = m.p();
  b.dim = m.dim();
  b.over = over;
  b.actions = m.actions();
  spec.blocks.push_back(std::move(b));
}

void add_morphism(InstanceSpec& spec, const std::string& name, const AlgebraMorphism& phi,
                  const std::string& from, const std::string& to) {
  require_fresh(spec, name);
  const auto& f = require_ref(spec, from, InstanceKind::Algebra);
  const auto& t = require_ref(spec, to, InstanceKind::Algebra);
  if (f.dim != phi.domain().dim() || t.dim != phi.codomain().dim())
    throw DimensionMismatch("morphism '" + name + "' does not fit its algebras");
  InstanceBlock b;
  b.kind = InstanceKind::Morphism;
  b.name = name;
  b.p = phi.domain().p();
  b.from = from;
  b.to = to;
  b.matrix = phi.matrix();
  spec.blocks.push_back(std::move(b));
}

void add_hom(InstanceSpec& spec, const std::string& name, const ModuleHom& f, const std::string& from,
             const std::string& to) {
  require_fresh(spec, name);
  const auto& d = require_ref(spec, from, InstanceKind::Module);
  const auto& c = require_ref(spec, to, InstanceKind::Module);
  if (d.dim != f.domain().dim() || c.dim != f.codomain().dim())
    throw DimensionMismatch("hom '" + name + "' does not fit its modules");
  InstanceBlock b;
  b.kind = InstanceKind::ModuleHom;
  b.name = name;
  b.p = f.domain().p();
  b.from = from;
  b.to = to;
  b.matrix = f.matrix();
  spec.blocks.push_back(std::move(b));
}

InstanceSpec algebra_instance(const Algebra& a, std::string source) {
  InstanceSpec s;
  s.source = std::move(source);
  add_algebra(s, "A", a);
  return s;
}

InstanceSpec module_instance(const Module& m, std::string source) {
  InstanceSpec s = algebra_instance(m.algebra(), std::move(source));
  add_module(s, "M", m, "A");
  return s;
}

InstanceSpec morphism_instance(const AlgebraMorphism& phi, std::string source) {
  InstanceSpec s;
  s.source = std::move(source);
  add_algebra(s, "R", phi.domain());
  add_algebra(s, "S", phi.codomain());
  add_morphism(s, "phi", phi, "R", "S");
  return s;
}

}  // namespace semiloc
