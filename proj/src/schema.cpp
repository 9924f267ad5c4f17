#include "schema.hpp"

#include <unordered_set>

namespace goptics {

bool operator==(const FieldDef& a, const FieldDef& b) {
  return a.name == b.name && a.type == b.type;
}

bool operator==(const CtorDef& a, const CtorDef& b) {
  return a.name == b.name && a.fields == b.fields;
}

bool operator==(const TypeDef& a, const TypeDef& b) {
  return a.name == b.name && a.arity == b.arity && a.ctors == b.ctors;
}

std::string to_string(const SchemaFinding& f) {
  switch (f.code) {
    case SchemaFinding::Code::UnknownType:
      return "UnknownType " + f.subject.str() + (f.detail.empty() ? "" : " (" + f.detail + ")");
    case SchemaFinding::Code::ArityMismatch:
      return "ArityMismatch " + f.subject.str() + (f.detail.empty() ? "" : " (" + f.detail + ")");
    case SchemaFinding::Code::VarOutOfRange:
      return "VarOutOfRange " + f.subject.str() + (f.detail.empty() ? "" : " (" + f.detail + ")");
    case SchemaFinding::Code::DuplicateType:
      return "DuplicateType " + f.subject.str();
    case SchemaFinding::Code::MalformedDef:
      return "MalformedDef " + f.subject.str() + ": " + f.detail;
    case SchemaFinding::Code::GroundExprVar:
      return "GroundExprVar " + f.detail;
  }
  return "?";
}

bool Schema::is_primitive(Symbol name) {
  const WellKnown& wk = WellKnown::get();
  return name == wk.int_ || name == wk.float_ || name == wk.char_ || name == wk.string_;
}

bool Schema::is_primitive(const TypeExpr& ty) {
  return ty.node == TypeNode::Prim;
}

namespace {

TypeDef make_def(const char* name, std::vector<const char*> params,
                 std::vector<CtorDef> ctors) {
  TypeDef d;
  d.name = Symbol::intern(name);
  d.arity = static_cast<uint32_t>(params.size());
  for (const char* p : params) d.params.push_back(Symbol::intern(p));
  d.ctors = std::move(ctors);
  return d;
}

CtorDef make_ctor(const char* name, std::vector<TypeExpr> fields) {
  CtorDef c;
  c.name = Symbol::intern(name);
  for (TypeExpr& t : fields) c.fields.push_back(FieldDef{Symbol(), std::move(t)});
  return c;
}

} // namespace

Schema Schema::with_prelude() {
  Schema s;
  auto reg = [&s](TypeDef d) {
    auto r = s.register_def(d);
    (void)r;
  };
  reg(make_def("Bool", {}, {make_ctor("True", {}), make_ctor("False", {})}));
  reg(make_def("Maybe", {"a"},
               {make_ctor("Nothing", {}), make_ctor("Just", {TypeExpr::var(0)})}));
  reg(make_def("Either", {"a", "b"},
               {make_ctor("Left", {TypeExpr::var(0)}), make_ctor("Right", {TypeExpr::var(1)})}));
  reg(make_def("List", {"a"},
               {make_ctor("Nil", {}),
                make_ctor("Cons", {TypeExpr::var(0),
                                   TypeExpr::app("List", {TypeExpr::var(0)})})}));
  reg(make_def("Pair", {"a", "b"},
               {make_ctor("Pair", {TypeExpr::var(0), TypeExpr::var(1)})}));
  reg(make_def("Unit", {}, {make_ctor("Unit", {})}));
  return s;
}

std::optional<std::string> Schema::malformed(const TypeDef& def) {
  if (is_primitive(def.name))
    return "name collides with the primitive " + def.name.str();
  std::unordered_set<uint32_t> ctor_names;
  for (const CtorDef& c : def.ctors) {
    if (!ctor_names.insert(c.name.id()).second)
      return "duplicate constructor name " + c.name.str();
    bool any_named = false, any_unnamed = false;
    std::unordered_set<uint32_t> field_names;
    for (const FieldDef& f : c.fields) {
      if (f.named()) {
        any_named = true;
        if (!field_names.insert(f.name.id()).second)
          return "duplicate field name " + f.name.str() + " in constructor " + c.name.str();
      } else {
        any_unnamed = true;
      }
    }
    if (any_named && any_unnamed)
      return "constructor " + c.name.str() + " mixes named and unnamed fields";
  }
  // Var indices must stay within the declared arity.
  struct {
    void walk(const TypeExpr& t, uint32_t arity, bool& bad) {
      if (t.node == TypeNode::Var && t.index >= arity) bad = true;
      for (const TypeExpr& a : t.args) walk(a, arity, bad);
    }
  } w;
  for (const CtorDef& c : def.ctors)
    for (const FieldDef& f : c.fields) {
      bool bad = false;
      w.walk(f.type, def.arity, bad);
      if (bad)
        return "type variable out of range in constructor " + c.name.str();
    }
  return std::nullopt;
}

Result<std::monostate, SchemaFinding> Schema::register_def(const TypeDef& def) {
  if (auto why = malformed(def))
    return SchemaFinding{SchemaFinding::Code::MalformedDef, def.name, *why};
  auto it = defs_.find(def.name.id());
  if (it != defs_.end()) {
    if (it->second == def) return std::monostate{};  // identical re-registration
    return SchemaFinding{SchemaFinding::Code::DuplicateType, def.name, {}};
  }
  defs_.emplace(def.name.id(), def);
  order_.push_back(def.name);
  return std::monostate{};
}

const TypeDef* Schema::find(Symbol name) const {
  auto it = defs_.find(name.id());
  return it == defs_.end() ? nullptr : &it->second;
}

const TypeDef* Schema::find(std::string_view name) const {
  return find(Symbol::intern(name));
}

namespace {

void check_body(const Schema& s, const TypeExpr& t, uint32_t arity, Symbol context,
                std::vector<SchemaFinding>& out) {
  switch (t.node) {
    case TypeNode::Prim:
      return;
    case TypeNode::Var:
      if (t.index >= arity)
        out.push_back({SchemaFinding::Code::VarOutOfRange, context,
                       "index " + std::to_string(t.index)});
      return;
    case TypeNode::Param:
      check_body(s, t.param_inner(), arity, context, out);
      return;
    case TypeNode::App: {
      if (Schema::is_primitive(t.name)) {
        if (!t.args.empty())
          out.push_back({SchemaFinding::Code::ArityMismatch, t.name,
                         "primitive applied to arguments in " + context.str()});
      } else if (const TypeDef* def = s.find(t.name)) {
        if (def->arity != t.args.size())
          out.push_back({SchemaFinding::Code::ArityMismatch, t.name,
                         "expected " + std::to_string(def->arity) + " arguments, got " +
                             std::to_string(t.args.size()) + " in " + context.str()});
      } else {
        out.push_back({SchemaFinding::Code::UnknownType, t.name,
                       "referenced from " + context.str()});
      }
      for (const TypeExpr& a : t.args) check_body(s, a, arity, context, out);
      return;
    }
  }
}

} // namespace

std::vector<SchemaFinding> Schema::validate() const {
  std::vector<SchemaFinding> out;
  for (Symbol name : order_) {
    const TypeDef& def = *find(name);
    for (const CtorDef& c : def.ctors)
      for (const FieldDef& f : c.fields) check_body(*this, f.type, def.arity, name, out);
  }
  return out;
}

std::vector<SchemaFinding> Schema::check_ground(const TypeExpr& ty) const {
  std::vector<SchemaFinding> out;
  if (!ty.is_ground()) {
    out.push_back({SchemaFinding::Code::GroundExprVar, Symbol(),
                   "type variable in ground expression " + to_string(ty)});
    return out;
  }
  check_body(*this, ty, 0, Symbol::intern("<ground>"), out);
  return out;
}

TypeExpr substitute_expr(const TypeExpr& body, const std::vector<TypeExpr>& args) {
  switch (body.node) {
    case TypeNode::Var:
      return args[body.index];
    case TypeNode::Prim:
      return body;
    case TypeNode::Param: {
      return TypeExpr::param(body.index, substitute_expr(body.param_inner(), args));
    }
    case TypeNode::App: {
      TypeExpr out = TypeExpr::app(body.name);
      out.args.reserve(body.args.size());
      for (const TypeExpr& a : body.args) out.args.push_back(substitute_expr(a, args));
      return out;
    }
  }
  return body;
}

Result<std::vector<CtorDef>, std::string> substitute(const TypeDef& def,
                                                     const std::vector<TypeExpr>& args) {
  if (args.size() != def.arity)
    return std::string("arity mismatch: " + def.name.str() + " expects " +
                       std::to_string(def.arity) + " arguments, got " +
                       std::to_string(args.size()));
  std::vector<CtorDef> out = def.ctors;
  for (CtorDef& c : out)
    for (FieldDef& f : c.fields) f.type = substitute_expr(f.type, args);
  return out;
}

} // namespace goptics
