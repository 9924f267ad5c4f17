#pragma once

#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "result.hpp"
#include "type_expr.hpp"

namespace goptics {

struct FieldDef {
  Symbol name;  // empty for positional fields
  TypeExpr type;
  bool named() const { return !name.empty(); }
};

struct CtorDef {
  Symbol name;
  std::vector<FieldDef> fields;
};

struct TypeDef {
  Symbol name;
  uint32_t arity = 0;
  std::vector<Symbol> params;  // surface names, |params| == arity when parsed
  std::vector<CtorDef> ctors;
};

bool operator==(const FieldDef& a, const FieldDef& b);
bool operator==(const CtorDef& a, const CtorDef& b);
bool operator==(const TypeDef& a, const TypeDef& b);

struct SchemaFinding {
  enum class Code {
    UnknownType,
    ArityMismatch,
    VarOutOfRange,
    DuplicateType,
    MalformedDef,
    GroundExprVar,
  };
  Code code;
  Symbol subject;
  std::string detail;
};

std::string to_string(const SchemaFinding& f);

// Registered type definitions plus the fixed primitive set
// {Int, Float, Char, String}. The prelude (Bool, Maybe, Either, List, Pair,
// Unit) is registered up front and cannot be replaced.
class Schema {
public:
  static Schema with_prelude();

  Result<std::monostate, SchemaFinding> register_def(const TypeDef& def);

  // Checks every App target and Var index across all definitions; collects
  // every finding instead of stopping at the first.
  std::vector<SchemaFinding> validate() const;

  // Checks a user-supplied ground expression: no Vars, Apps resolve with the
  // right arity, primitives take no arguments.
  std::vector<SchemaFinding> check_ground(const TypeExpr& ty) const;

  const TypeDef* find(Symbol name) const;
  const TypeDef* find(std::string_view name) const;
  bool has(Symbol name) const { return find(name) != nullptr; }

  static bool is_primitive(Symbol name);
  static bool is_primitive(const TypeExpr& ty);

  const std::vector<Symbol>& order() const { return order_; }

private:
  // Local (per-def) invariants; returns the violated invariant's description.
  static std::optional<std::string> malformed(const TypeDef& def);

  std::unordered_map<uint32_t, TypeDef> defs_;
  std::vector<Symbol> order_;
};

// Instantiates def's constructors at the given arguments (Var(j) -> args[j]).
// Arguments must be ground but may contain Param tags.
Result<std::vector<CtorDef>, std::string> substitute(const TypeDef& def,
                                                     const std::vector<TypeExpr>& args);

TypeExpr substitute_expr(const TypeExpr& body, const std::vector<TypeExpr>& args);

} // namespace goptics
