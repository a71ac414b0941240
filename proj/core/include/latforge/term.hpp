#ifndef LATFORGE_TERM_HPP
#define LATFORGE_TERM_HPP

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "latforge/lattice.hpp"

namespace latforge {

/// A lattice term: variable, constant, or an n-ary meet/join (n >= 1).
class Term {
 public:
  enum class Kind { Var, Const, Meet, Join };

  static Term var(std::string name) {
    Term t;
    t.kind_ = Kind::Var;
    t.var_ = std::move(name);
    return t;
  }
  static Term constant(ElementId v) {
    Term t;
    t.kind_ = Kind::Const;
    t.const_ = v;
    return t;
  }
  /// Constant referencing an element by label, resolved against the lattice
  /// at evaluation time.
  static Term named_constant(std::string label) {
    Term t;
    t.kind_ = Kind::Const;
    t.const_name_ = std::move(label);
    return t;
  }
  static Term meet(std::vector<Term> args);
  static Term join(std::vector<Term> args);
  static Term meet(Term a, Term b) { return meet(std::vector<Term>{std::move(a), std::move(b)}); }
  static Term join(Term a, Term b) { return join(std::vector<Term>{std::move(a), std::move(b)}); }

  Kind kind() const { return kind_; }
  const std::string& var_name() const { return var_; }
  const std::vector<Term>& args() const { return args_; }

  ElementId const_value(const FiniteLattice& l) const;

  /// Variable names in first-appearance order.
  void collect_variables(std::vector<std::string>& out) const;

  std::string to_sexpr() const;

 private:
  Kind kind_ = Kind::Var;
  std::string var_;
  ElementId const_ = 0;
  std::string const_name_;  // nonempty for label-resolved constants
  std::vector<Term> args_;
};

/// lhs <= rhs, or lhs = rhs when `equality`.
struct Atom {
  Term lhs, rhs;
  bool equality = false;

  std::string to_sexpr() const;
};

struct QuasiIdentity {
  std::vector<std::string> variables;  // enumeration order; also premise-pruning order
  std::vector<Atom> premises;
  Atom conclusion;

  std::string to_sexpr() const;
};

using Assignment = std::vector<std::pair<std::string, ElementId>>;

/// Structural evaluation using the lattice tables. Throws UnboundVariableError.
ElementId eval_term(const FiniteLattice& l, const Term& t, const Assignment& assignment);

struct IdentityReport {
  bool holds = true;
  Assignment counterexample;  // lexicographically first violating assignment
  explicit operator bool() const { return holds; }
};

/// Exhaustive check of an identity over all assignments. Variable order is
/// first appearance in lhs then rhs.
IdentityReport satisfies_identity(const FiniteLattice& l, const Atom& identity);

/// Exhaustive check over all premise-satisfying assignments, pruning in the
/// declared variable order as soon as a premise's variables are all bound.
IdentityReport satisfies_quasi_identity(const FiniteLattice& l, const QuasiIdentity& q);

/// The length-two variety inclusion
///   x ^ (y v (u ^ v)) ^ (u v v)  <=  y v (x ^ u) v (x ^ v).
Atom jonsson_inclusion();

/// Membership in the variety generated by all length-two lattices:
/// modular plus the inclusion above.
bool in_momega(const FiniteLattice& l);

/// The eight-variable quasi-identity behind the two-square repair: premises
///   a_i <= a'_i,  b'_i = b_i v a0 v a1,  b0 ^ b1 <= a0 v a1,
///   b'0 ^ b'1 <= a'0 v a'1
/// force (a'0 ^ b'0 ^ b'1) v (a'1 ^ b'0 ^ b'1) = b'0 ^ b'1.
QuasiIdentity momega_quasi_identity();

/// All t in l satisfying every equation of the list (each an equation in the
/// single variable "t" with constants), ascending.
std::vector<ElementId> solve_pointwise(const FiniteLattice& l,
                                       const std::vector<std::pair<Term, Term>>& constraints);

/// S-expressions: (meet x (join y z)), variables are plain identifiers,
/// @label / @3 are constants (by element label or index).
Term parse_term(const std::string& text);
/// (leq t1 t2) or (eq t1 t2).
Atom parse_atom(const std::string& text);
/// (quasi (vars x y ...) (premises atom...) (conclusion atom)).
QuasiIdentity parse_quasi_identity(const std::string& text);

}  // namespace latforge

#endif
