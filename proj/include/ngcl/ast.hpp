#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <vector>

#include "ngcl/predicate.hpp"
#include "ngcl/state_space.hpp"

namespace ngcl {

// ---- integer expressions over Z_m ----

struct ExprNode;
using Expr = std::shared_ptr<const ExprNode>;

enum class ExprKind { Const, Var, Neg, Add, Sub, Mul };

struct ExprNode {
    ExprKind kind;
    Value value = 0;        // Const
    std::size_t var = 0;    // Var
    std::string name;       // Var
    Expr lhs, rhs;          // Neg uses lhs
};

Expr e_const(Value v);
Expr e_var(std::size_t index, std::string name);
Expr e_var(const StateSpace& space, const std::string& name);
Expr e_neg(Expr a);
Expr e_add(Expr a, Expr b);
Expr e_sub(Expr a, Expr b);
Expr e_mul(Expr a, Expr b);

Value eval(const Expr& e, const StateSpace& space, StateIndex s);
bool equal(const Expr& a, const Expr& b);
std::string print(const Expr& e);

// ---- guards ----

struct GuardNode;
using Guard = std::shared_ptr<const GuardNode>;

enum class GuardKind { True, False, Eq, Ne, Lt, Le, Not, And, Or };

struct GuardNode {
    GuardKind kind;
    Expr lhs, rhs;      // comparisons
    Guard a, b;         // Not uses a
};

Guard g_true();
Guard g_false();
Guard g_cmp(GuardKind op, Expr a, Expr b);
Guard g_not(Guard a);
Guard g_and(Guard a, Guard b);
Guard g_or(Guard a, Guard b);

bool eval(const Guard& g, const StateSpace& space, StateIndex s);
Predicate guard_predicate(const Guard& g, const StateSpace& space);
bool equal(const Guard& a, const Guard& b);
std::string print(const Guard& g);

// ---- programs ----

struct ProgramNode;
using Program = std::shared_ptr<const ProgramNode>;

enum class ProgramKind { Skip, Diverge, Assign, Seq, Choice, Ite, While };

struct ProgramNode {
    ProgramKind kind;
    std::size_t var = 0;     // Assign
    std::string name;        // Assign
    Expr expr;               // Assign
    Guard guard;             // Ite, While
    Program a, b;            // Seq/Choice/Ite operands; While body in a
};

Program p_skip();
Program p_diverge();
Program p_assign(std::size_t var, std::string name, Expr e);
Program p_assign(const StateSpace& space, const std::string& name, Expr e);
Program p_seq(Program a, Program b);
Program p_choice(Program a, Program b);
Program p_ite(Guard g, Program a, Program b);
Program p_while(Guard g, Program body);

bool equal(const Program& a, const Program& b);
// Canonical single-line concrete syntax; parse(print(p)) == p.
std::string print(const Program& p);

std::size_t depth(const Program& p);
std::size_t size(const Program& p);
bool has_choice(const Program& p);
bool has_loop(const Program& p);

}  // namespace ngcl
