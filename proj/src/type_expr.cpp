#include "type_expr.hpp"

namespace goptics {

TypeExpr TypeExpr::prim(Symbol name) {
  TypeExpr t;
  t.node = TypeNode::Prim;
  t.name = name;
  return t;
}

TypeExpr TypeExpr::prim(std::string_view name) { return prim(Symbol::intern(name)); }

TypeExpr TypeExpr::var(uint32_t left_index) {
  TypeExpr t;
  t.node = TypeNode::Var;
  t.index = left_index;
  return t;
}

TypeExpr TypeExpr::app(Symbol name, std::vector<TypeExpr> args) {
  TypeExpr t;
  t.node = TypeNode::App;
  t.name = name;
  t.args = std::move(args);
  return t;
}

TypeExpr TypeExpr::app(std::string_view name, std::vector<TypeExpr> args) {
  return app(Symbol::intern(name), std::move(args));
}

TypeExpr TypeExpr::param(uint32_t right_index, TypeExpr inner) {
  TypeExpr t;
  t.node = TypeNode::Param;
  t.index = right_index;
  t.args.push_back(std::move(inner));
  return t;
}

bool TypeExpr::is_ground() const {
  if (node == TypeNode::Var) return false;
  for (const TypeExpr& a : args)
    if (!a.is_ground()) return false;
  return true;
}

bool TypeExpr::contains_param_tag() const {
  if (node == TypeNode::Param) return true;
  for (const TypeExpr& a : args)
    if (a.contains_param_tag()) return true;
  return false;
}

TypeExpr TypeExpr::erase_param_tags() const {
  if (node == TypeNode::Param) return param_inner().erase_param_tags();
  TypeExpr out = *this;
  for (TypeExpr& a : out.args) a = a.erase_param_tags();
  return out;
}

bool operator==(const TypeExpr& a, const TypeExpr& b) {
  if (a.node != b.node || a.name != b.name || a.index != b.index) return false;
  if (a.args.size() != b.args.size()) return false;
  for (size_t i = 0; i < a.args.size(); ++i)
    if (!(a.args[i] == b.args[i])) return false;
  return true;
}

bool is_atomic(const TypeExpr& ty) {
  switch (ty.node) {
    case TypeNode::Prim:
    case TypeNode::Var:
      return true;
    case TypeNode::App: {
      const WellKnown& wk = WellKnown::get();
      if (ty.name == wk.list_ && ty.args.size() == 1) return true;
      if (ty.name == wk.pair_ && ty.args.size() == 2) return true;
      return ty.args.empty();
    }
    case TypeNode::Param:
      return false;
  }
  return false;
}

namespace {

void render(const TypeExpr& ty, std::string& out) {
  const WellKnown& wk = WellKnown::get();
  switch (ty.node) {
    case TypeNode::Prim:
      out += ty.name.str();
      return;
    case TypeNode::Var:
      // Vars only occur inside definitions; render positionally.
      if (ty.index < 26) {
        out += static_cast<char>('a' + ty.index);
      } else {
        out += "v" + std::to_string(ty.index);
      }
      return;
    case TypeNode::App: {
      if (ty.name == wk.list_ && ty.args.size() == 1) {
        out += '[';
        render(ty.args[0], out);
        out += ']';
        return;
      }
      if (ty.name == wk.pair_ && ty.args.size() == 2) {
        out += '(';
        render(ty.args[0], out);
        out += ", ";
        render(ty.args[1], out);
        out += ')';
        return;
      }
      out += ty.name.str();
      for (const TypeExpr& a : ty.args) {
        out += ' ';
        if (is_atomic(a)) {
          render(a, out);
        } else {
          out += '(';
          render(a, out);
          out += ')';
        }
      }
      return;
    }
    case TypeNode::Param: {
      out += "Param " + std::to_string(ty.index) + ' ';
      const TypeExpr& inner = ty.param_inner();
      if (is_atomic(inner)) {
        render(inner, out);
      } else {
        out += '(';
        render(inner, out);
        out += ')';
      }
      return;
    }
  }
}

} // namespace

std::string to_string(const TypeExpr& ty) {
  std::string out;
  render(ty, out);
  return out;
}

size_t hash_value(const TypeExpr& ty) {
  size_t h = static_cast<size_t>(ty.node) * 0x9e3779b97f4a7c15ull;
  h ^= ty.name.id() + 0x9e3779b9u + (h << 6) + (h >> 2);
  h ^= ty.index + 0x85ebca6bu + (h << 6) + (h >> 2);
  for (const TypeExpr& a : ty.args) h ^= hash_value(a) + 0x9e3779b9u + (h << 6) + (h >> 2);
  return h;
}

const WellKnown& WellKnown::get() {
  static const WellKnown wk = [] {
    WellKnown w;
    w.int_ = Symbol::intern("Int");
    w.float_ = Symbol::intern("Float");
    w.char_ = Symbol::intern("Char");
    w.string_ = Symbol::intern("String");
    w.bool_ = Symbol::intern("Bool");
    w.maybe_ = Symbol::intern("Maybe");
    w.either_ = Symbol::intern("Either");
    w.list_ = Symbol::intern("List");
    w.pair_ = Symbol::intern("Pair");
    w.unit_ = Symbol::intern("Unit");
    w.true_ = Symbol::intern("True");
    w.false_ = Symbol::intern("False");
    w.nothing_ = Symbol::intern("Nothing");
    w.just_ = Symbol::intern("Just");
    w.left_ = Symbol::intern("Left");
    w.right_ = Symbol::intern("Right");
    w.nil_ = Symbol::intern("Nil");
    w.cons_ = Symbol::intern("Cons");
    return w;
  }();
  return wk;
}

} // namespace goptics
