#include "latforge/term.hpp"

#include <algorithm>
#include <cctype>

namespace latforge {

Term Term::meet(std::vector<Term> args) {
  if (args.empty()) throw BadParamError("BadParam: meet of no arguments");
  Term t;
  t.kind_ = Kind::Meet;
  t.args_ = std::move(args);
  return t;
}

Term Term::join(std::vector<Term> args) {
  if (args.empty()) throw BadParamError("BadParam: join of no arguments");
  Term t;
  t.kind_ = Kind::Join;
  t.args_ = std::move(args);
  return t;
}

ElementId Term::const_value(const FiniteLattice& l) const {
  if (!const_name_.empty()) return l.by_name(const_name_);
  if (const_ >= l.size()) throw BadParamError("BadParam: constant out of range");
  return const_;
}

void Term::collect_variables(std::vector<std::string>& out) const {
  switch (kind_) {
    case Kind::Var:
      if (std::find(out.begin(), out.end(), var_) == out.end()) out.push_back(var_);
      break;
    case Kind::Const:
      break;
    default:
      for (const Term& a : args_) a.collect_variables(out);
  }
}

std::string Term::to_sexpr() const {
  switch (kind_) {
    case Kind::Var:
      return var_;
    case Kind::Const:
      return "@" + (const_name_.empty() ? std::to_string(const_) : const_name_);
    case Kind::Meet:
    case Kind::Join: {
      std::string s = kind_ == Kind::Meet ? "(meet" : "(join";
      for (const Term& a : args_) s += " " + a.to_sexpr();
      return s + ")";
    }
  }
  return {};
}

std::string Atom::to_sexpr() const {
  return std::string("(") + (equality ? "eq" : "leq") + " " + lhs.to_sexpr() + " " + rhs.to_sexpr() + ")";
}

std::string QuasiIdentity::to_sexpr() const {
  std::string s = "(quasi (vars";
  for (const auto& v : variables) s += " " + v;
  s += ") (premises";
  for (const Atom& a : premises) s += " " + a.to_sexpr();
  s += ") (conclusion " + conclusion.to_sexpr() + "))";
  return s;
}

namespace {

// Flat evaluator: terms compiled to postfix over variable slots.
struct Op {
  enum { PushVar, PushConst, MeetN, JoinN } what;
  std::size_t arg;  // slot index, constant value, or arity
};

struct Compiled {
  std::vector<Op> ops;

  void check_depth() const {
    std::size_t depth = 0, peak = 0;
    for (const Op& op : ops) {
      if (op.what == Op::MeetN || op.what == Op::JoinN)
        depth -= op.arg - 1;
      else
        ++depth;
      peak = std::max(peak, depth);
    }
    if (peak > 64) throw BadParamError("BadParam: term nests too deeply");
  }

  ElementId eval(const FiniteLattice& l, const std::vector<ElementId>& slots) const {
    ElementId stack[64];
    std::size_t sp = 0;
    for (const Op& op : ops) {
      switch (op.what) {
        case Op::PushVar:
          stack[sp++] = slots[op.arg];
          break;
        case Op::PushConst:
          stack[sp++] = ElementId(op.arg);
          break;
        case Op::MeetN: {
          ElementId acc = stack[--sp];
          for (std::size_t i = 1; i < op.arg; ++i) acc = l.meet(acc, stack[--sp]);
          stack[sp++] = acc;
          break;
        }
        case Op::JoinN: {
          ElementId acc = stack[--sp];
          for (std::size_t i = 1; i < op.arg; ++i) acc = l.join(acc, stack[--sp]);
          stack[sp++] = acc;
          break;
        }
      }
    }
    return stack[0];
  }
};

void compile_term(const FiniteLattice& l, const Term& t, const std::vector<std::string>& vars,
                  Compiled& out) {
  switch (t.kind()) {
    case Term::Kind::Var: {
      auto it = std::find(vars.begin(), vars.end(), t.var_name());
      if (it == vars.end()) throw UnboundVariableError(t.var_name());
      out.ops.push_back({Op::PushVar, std::size_t(it - vars.begin())});
      break;
    }
    case Term::Kind::Const:
      out.ops.push_back({Op::PushConst, t.const_value(l)});
      break;
    case Term::Kind::Meet:
    case Term::Kind::Join:
      for (const Term& a : t.args()) compile_term(l, a, vars, out);
      out.ops.push_back({t.kind() == Term::Kind::Meet ? Op::MeetN : Op::JoinN, t.args().size()});
      break;
  }
}

std::size_t max_var_slot(const Term& t, const std::vector<std::string>& vars) {
  std::vector<std::string> used;
  t.collect_variables(used);
  std::size_t hi = 0;
  for (const auto& name : used) {
    auto it = std::find(vars.begin(), vars.end(), name);
    if (it == vars.end()) throw UnboundVariableError(name);
    hi = std::max(hi, std::size_t(it - vars.begin()) + 1);
  }
  return hi;
}

}  // namespace

ElementId eval_term(const FiniteLattice& l, const Term& t, const Assignment& assignment) {
  switch (t.kind()) {
    case Term::Kind::Var:
      for (const auto& [name, v] : assignment)
        if (name == t.var_name()) return v;
      throw UnboundVariableError(t.var_name());
    case Term::Kind::Const:
      return t.const_value(l);
    case Term::Kind::Meet:
    case Term::Kind::Join: {
      ElementId acc = eval_term(l, t.args()[0], assignment);
      for (std::size_t i = 1; i < t.args().size(); ++i) {
        ElementId b = eval_term(l, t.args()[i], assignment);
        acc = t.kind() == Term::Kind::Meet ? l.meet(acc, b) : l.join(acc, b);
      }
      return acc;
    }
  }
  throw LatticeError("internal: bad term");
}

IdentityReport satisfies_identity(const FiniteLattice& l, const Atom& identity) {
  std::vector<std::string> vars;
  identity.lhs.collect_variables(vars);
  identity.rhs.collect_variables(vars);
  QuasiIdentity q{vars, {}, identity};
  return satisfies_quasi_identity(l, q);
}

IdentityReport satisfies_quasi_identity(const FiniteLattice& l, const QuasiIdentity& q) {
  const std::size_t nvars = q.variables.size();
  const std::size_t n = l.size();

  struct CompiledAtom {
    Compiled lhs, rhs;
    bool equality;
  };
  // premises grouped by the depth at which all their variables are bound
  std::vector<std::vector<CompiledAtom>> by_depth(nvars + 1);
  for (const Atom& a : q.premises) {
    CompiledAtom ca;
    compile_term(l, a.lhs, q.variables, ca.lhs);
    compile_term(l, a.rhs, q.variables, ca.rhs);
    ca.equality = a.equality;
    std::size_t depth = std::max(max_var_slot(a.lhs, q.variables), max_var_slot(a.rhs, q.variables));
    by_depth[depth].push_back(std::move(ca));
  }
  CompiledAtom goal;
  compile_term(l, q.conclusion.lhs, q.variables, goal.lhs);
  compile_term(l, q.conclusion.rhs, q.variables, goal.rhs);
  goal.equality = q.conclusion.equality;
  goal.lhs.check_depth();
  goal.rhs.check_depth();
  for (auto& group : by_depth)
    for (auto& ca : group) {
      ca.lhs.check_depth();
      ca.rhs.check_depth();
    }

  std::vector<ElementId> slots(nvars, 0);
  auto atom_holds = [&](const CompiledAtom& ca) {
    ElementId a = ca.lhs.eval(l, slots);
    ElementId b = ca.rhs.eval(l, slots);
    return ca.equality ? a == b : l.leq(a, b);
  };

  // constant premises: if one fails, no assignment satisfies the premises
  for (const CompiledAtom& ca : by_depth[0])
    if (!atom_holds(ca)) return {};

  // iterative DFS over the assignment prefix
  std::size_t k = 0;
  std::vector<ElementId> next(nvars + 1, 0);
  for (;;) {
    if (k == nvars) {
      if (!atom_holds(goal)) {
        Assignment cx;
        for (std::size_t i = 0; i < nvars; ++i) cx.emplace_back(q.variables[i], slots[i]);
        return {false, std::move(cx)};
      }
      if (k == 0) return {};
      --k;
      continue;
    }
    if (next[k] >= n) {
      if (k == 0) return {};
      --k;
      continue;
    }
    slots[k] = ElementId(next[k]++);
    bool ok = true;
    for (const CompiledAtom& ca : by_depth[k + 1])
      if (!atom_holds(ca)) {
        ok = false;
        break;
      }
    if (!ok) continue;
    ++k;
    next[k] = 0;
  }
}

Atom jonsson_inclusion() {
  Term x = Term::var("x"), y = Term::var("y"), u = Term::var("u"), v = Term::var("v");
  Term lhs = Term::meet({x, Term::join(y, Term::meet(u, v)), Term::join(u, v)});
  Term rhs = Term::join({y, Term::meet(x, u), Term::meet(x, v)});
  return Atom{lhs, rhs, false};
}

bool in_momega(const FiniteLattice& l) {
  return is_modular(l).ok && satisfies_identity(l, jonsson_inclusion()).holds;
}

QuasiIdentity momega_quasi_identity() {
  auto V = [](const char* s) { return Term::var(s); };
  QuasiIdentity q;
  q.variables = {"a0", "a1", "b0", "b1", "ap0", "ap1", "bp0", "bp1"};
  q.premises = {
      {V("a0"), V("ap0"), false},
      {V("a1"), V("ap1"), false},
      {Term::meet(V("b0"), V("b1")), Term::join(V("a0"), V("a1")), false},
      {V("bp0"), Term::join({V("b0"), V("a0"), V("a1")}), true},
      {V("bp1"), Term::join({V("b1"), V("a0"), V("a1")}), true},
      {Term::meet(V("bp0"), V("bp1")), Term::join(V("ap0"), V("ap1")), false},
  };
  Term astar0 = Term::meet({V("ap0"), V("bp0"), V("bp1")});
  Term astar1 = Term::meet({V("ap1"), V("bp0"), V("bp1")});
  q.conclusion = Atom{Term::join(astar0, astar1), Term::meet(V("bp0"), V("bp1")), true};
  return q;
}

std::vector<ElementId> solve_pointwise(const FiniteLattice& l,
                                       const std::vector<std::pair<Term, Term>>& constraints) {
  std::vector<ElementId> out;
  for (ElementId t = 0; t < l.size(); ++t) {
    Assignment asg{{"t", t}};
    bool all = true;
    for (const auto& [lhs, rhs] : constraints)
      if (eval_term(l, lhs, asg) != eval_term(l, rhs, asg)) {
        all = false;
        break;
      }
    if (all) out.push_back(t);
  }
  return out;
}

namespace {

struct Lexer {
  const std::string& s;
  std::size_t pos = 0;

  void skip() {
    while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
  }
  bool eat(char c) {
    skip();
    if (pos < s.size() && s[pos] == c) {
      ++pos;
      return true;
    }
    return false;
  }
  void expect(char c) {
    if (!eat(c)) throw ParseError("ParseError: expected '" + std::string(1, c) + "' at " + std::to_string(pos));
  }
  std::string ident() {
    skip();
    std::size_t start = pos;
    while (pos < s.size() && (std::isalnum(static_cast<unsigned char>(s[pos])) || s[pos] == '_' ||
                              s[pos] == '@' || s[pos] == '*' || s[pos] == '\'' || s[pos] == '{' ||
                              s[pos] == '}' || s[pos] == ','))
      ++pos;
    if (start == pos) throw ParseError("ParseError: expected identifier at " + std::to_string(pos));
    return s.substr(start, pos - start);
  }
  bool at_open() {
    skip();
    return pos < s.size() && s[pos] == '(';
  }
  void done() {
    skip();
    if (pos != s.size()) throw ParseError("ParseError: trailing input at " + std::to_string(pos));
  }
};

Term parse_term_inner(Lexer& lx) {
  if (!lx.at_open()) {
    std::string id = lx.ident();
    if (id[0] == '@') {
      std::string body = id.substr(1);
      if (!body.empty() && std::all_of(body.begin(), body.end(),
                                       [](char c) { return std::isdigit(static_cast<unsigned char>(c)); }))
        return Term::constant(ElementId(std::stoi(body)));
      return Term::named_constant(body);
    }
    return Term::var(id);
  }
  lx.expect('(');
  std::string head = lx.ident();
  std::vector<Term> args;
  while (!lx.eat(')')) args.push_back(parse_term_inner(lx));
  if (head == "meet") return Term::meet(std::move(args));
  if (head == "join") return Term::join(std::move(args));
  throw ParseError("ParseError: unknown operator " + head);
}

Atom parse_atom_inner(Lexer& lx) {
  lx.expect('(');
  std::string head = lx.ident();
  if (head != "leq" && head != "eq") throw ParseError("ParseError: expected leq or eq, got " + head);
  Term lhs = parse_term_inner(lx);
  Term rhs = parse_term_inner(lx);
  lx.expect(')');
  return Atom{std::move(lhs), std::move(rhs), head == "eq"};
}

}  // namespace

Term parse_term(const std::string& text) {
  Lexer lx{text};
  Term t = parse_term_inner(lx);
  lx.done();
  return t;
}

Atom parse_atom(const std::string& text) {
  Lexer lx{text};
  Atom a = parse_atom_inner(lx);
  lx.done();
  return a;
}

QuasiIdentity parse_quasi_identity(const std::string& text) {
  Lexer lx{text};
  lx.expect('(');
  if (lx.ident() != "quasi") throw ParseError("ParseError: expected quasi");
  QuasiIdentity q;
  lx.expect('(');
  if (lx.ident() != "vars") throw ParseError("ParseError: expected vars");
  while (!lx.eat(')')) q.variables.push_back(lx.ident());
  lx.expect('(');
  if (lx.ident() != "premises") throw ParseError("ParseError: expected premises");
  while (!lx.eat(')')) q.premises.push_back(parse_atom_inner(lx));
  lx.expect('(');
  if (lx.ident() != "conclusion") throw ParseError("ParseError: expected conclusion");
  q.conclusion = parse_atom_inner(lx);
  lx.expect(')');
  lx.expect(')');
  lx.done();
  return q;
}

}  // namespace latforge
