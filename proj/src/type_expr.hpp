#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "symbol.hpp"

namespace goptics {

// Type expressions. Var carries a de Bruijn-style position counted from the
// LEFT of a definition's parameter list and only appears inside TypeDef
// bodies. Param carries the user-facing index counted from the RIGHT and is
// produced exclusively by the parameter-indexing pass.
enum class TypeNode : uint8_t { Prim, Var, App, Param };

struct TypeExpr {
  TypeNode node = TypeNode::App;
  Symbol name;         // Prim, App
  uint32_t index = 0;  // Var (left index), Param (right index)
  std::vector<TypeExpr> args;  // App arguments; Param stores its inner type as args[0]

  static TypeExpr prim(Symbol name);
  static TypeExpr prim(std::string_view name);
  static TypeExpr var(uint32_t left_index);
  static TypeExpr app(Symbol name, std::vector<TypeExpr> args = {});
  static TypeExpr app(std::string_view name, std::vector<TypeExpr> args = {});
  static TypeExpr param(uint32_t right_index, TypeExpr inner);

  const TypeExpr& param_inner() const { return args[0]; }

  bool is_ground() const;
  bool contains_param_tag() const;
  TypeExpr erase_param_tags() const;

  friend bool operator==(const TypeExpr& a, const TypeExpr& b);
  friend bool operator!=(const TypeExpr& a, const TypeExpr& b) { return !(a == b); }
};

// Renders with the surface sugar: List a as [a], Pair a b as (a, b).
std::string to_string(const TypeExpr& ty);

// True when the expression needs no parentheses in argument position.
bool is_atomic(const TypeExpr& ty);

size_t hash_value(const TypeExpr& ty);

struct TypeExprHash {
  size_t operator()(const TypeExpr& ty) const { return hash_value(ty); }
};

// Well-known names, interned once.
struct WellKnown {
  Symbol int_, float_, char_, string_;
  Symbol bool_, maybe_, either_, list_, pair_, unit_;
  Symbol true_, false_, nothing_, just_, left_, right_, nil_, cons_;
  static const WellKnown& get();
};

} // namespace goptics
