#include "ngcl/ast.hpp"

#include <algorithm>

#include "ngcl/errors.hpp"

namespace ngcl {

namespace {

template <class Node>
std::shared_ptr<const Node> make(Node n) {
    return std::make_shared<const Node>(std::move(n));
}

int expr_level(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Add:
        case ExprKind::Sub: return 1;
        case ExprKind::Mul: return 2;
        default: return 3;
    }
}

std::string wrap_if(bool cond, const std::string& s) { return cond ? "(" + s + ")" : s; }

int guard_level(const Guard& g) {
    switch (g->kind) {
        case GuardKind::Or: return 1;
        case GuardKind::And: return 2;
        default: return 3;
    }
}

}  // namespace

Expr e_const(Value v) {
    if (v < 0) throw InvalidArgument("constants are non-negative; use e_neg");
    return make(ExprNode{ExprKind::Const, v, 0, {}, nullptr, nullptr});
}
Expr e_var(std::size_t index, std::string name) {
    return make(ExprNode{ExprKind::Var, 0, index, std::move(name), nullptr, nullptr});
}
Expr e_var(const StateSpace& space, const std::string& name) { return e_var(space.require_index(name), name); }
Expr e_neg(Expr a) { return make(ExprNode{ExprKind::Neg, 0, 0, {}, std::move(a), nullptr}); }
Expr e_add(Expr a, Expr b) { return make(ExprNode{ExprKind::Add, 0, 0, {}, std::move(a), std::move(b)}); }
Expr e_sub(Expr a, Expr b) { return make(ExprNode{ExprKind::Sub, 0, 0, {}, std::move(a), std::move(b)}); }
Expr e_mul(Expr a, Expr b) { return make(ExprNode{ExprKind::Mul, 0, 0, {}, std::move(a), std::move(b)}); }

Value eval(const Expr& e, const StateSpace& space, StateIndex s) {
    switch (e->kind) {
        case ExprKind::Const: return space.normalize(e->value);
        case ExprKind::Var: return space.get(s, e->var);
        case ExprKind::Neg: return space.normalize(-eval(e->lhs, space, s));
        case ExprKind::Add: return space.normalize(eval(e->lhs, space, s) + eval(e->rhs, space, s));
        case ExprKind::Sub: return space.normalize(eval(e->lhs, space, s) - eval(e->rhs, space, s));
        case ExprKind::Mul: return space.normalize(eval(e->lhs, space, s) * eval(e->rhs, space, s));
    }
    throw InvariantError("bad expression kind");
}

bool equal(const Expr& a, const Expr& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case ExprKind::Const: return a->value == b->value;
        case ExprKind::Var: return a->var == b->var && a->name == b->name;
        case ExprKind::Neg: return equal(a->lhs, b->lhs);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

std::string print(const Expr& e) {
    switch (e->kind) {
        case ExprKind::Const: return std::to_string(e->value);
        case ExprKind::Var: return e->name;
        case ExprKind::Neg: return "-" + wrap_if(expr_level(e->lhs) < 3, print(e->lhs));
        case ExprKind::Add: return print(e->lhs) + " + " + wrap_if(expr_level(e->rhs) <= 1, print(e->rhs));
        case ExprKind::Sub: return print(e->lhs) + " - " + wrap_if(expr_level(e->rhs) <= 1, print(e->rhs));
        case ExprKind::Mul:
            return wrap_if(expr_level(e->lhs) < 2, print(e->lhs)) + " * " +
                   wrap_if(expr_level(e->rhs) <= 2, print(e->rhs));
    }
    throw InvariantError("bad expression kind");
}

Guard g_true() { return make(GuardNode{GuardKind::True, nullptr, nullptr, nullptr, nullptr}); }
Guard g_false() { return make(GuardNode{GuardKind::False, nullptr, nullptr, nullptr, nullptr}); }
Guard g_cmp(GuardKind op, Expr a, Expr b) {
    if (op != GuardKind::Eq && op != GuardKind::Ne && op != GuardKind::Lt && op != GuardKind::Le)
        throw InvalidArgument("not a comparison operator");
    return make(GuardNode{op, std::move(a), std::move(b), nullptr, nullptr});
}
Guard g_not(Guard a) { return make(GuardNode{GuardKind::Not, nullptr, nullptr, std::move(a), nullptr}); }
Guard g_and(Guard a, Guard b) { return make(GuardNode{GuardKind::And, nullptr, nullptr, std::move(a), std::move(b)}); }
Guard g_or(Guard a, Guard b) { return make(GuardNode{GuardKind::Or, nullptr, nullptr, std::move(a), std::move(b)}); }

bool eval(const Guard& g, const StateSpace& space, StateIndex s) {
    switch (g->kind) {
        case GuardKind::True: return true;
        case GuardKind::False: return false;
        case GuardKind::Eq: return eval(g->lhs, space, s) == eval(g->rhs, space, s);
        case GuardKind::Ne: return eval(g->lhs, space, s) != eval(g->rhs, space, s);
        case GuardKind::Lt: return eval(g->lhs, space, s) < eval(g->rhs, space, s);
        case GuardKind::Le: return eval(g->lhs, space, s) <= eval(g->rhs, space, s);
        case GuardKind::Not: return !eval(g->a, space, s);
        case GuardKind::And: return eval(g->a, space, s) && eval(g->b, space, s);
        case GuardKind::Or: return eval(g->a, space, s) || eval(g->b, space, s);
    }
    throw InvariantError("bad guard kind");
}

Predicate guard_predicate(const Guard& g, const StateSpace& space) {
    Predicate p(space.size());
    for (StateIndex s = 0; s < space.size(); ++s)
        if (eval(g, space, s)) p.set(s);
    return p;
}

bool equal(const Guard& a, const Guard& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case GuardKind::True:
        case GuardKind::False: return true;
        case GuardKind::Not: return equal(a->a, b->a);
        case GuardKind::And:
        case GuardKind::Or: return equal(a->a, b->a) && equal(a->b, b->b);
        default: return equal(a->lhs, b->lhs) && equal(a->rhs, b->rhs);
    }
}

std::string print(const Guard& g) {
    switch (g->kind) {
        case GuardKind::True: return "true";
        case GuardKind::False: return "false";
        case GuardKind::Eq: return print(g->lhs) + " = " + print(g->rhs);
        case GuardKind::Ne: return print(g->lhs) + " != " + print(g->rhs);
        case GuardKind::Lt: return print(g->lhs) + " < " + print(g->rhs);
        case GuardKind::Le: return print(g->lhs) + " <= " + print(g->rhs);
        case GuardKind::Not: {
            bool bare = g->a->kind == GuardKind::True || g->a->kind == GuardKind::False || g->a->kind == GuardKind::Not;
            return "!" + wrap_if(!bare, print(g->a));
        }
        case GuardKind::And:
            return wrap_if(guard_level(g->a) < 2, print(g->a)) + " && " + wrap_if(guard_level(g->b) <= 2, print(g->b));
        case GuardKind::Or: return print(g->a) + " || " + wrap_if(guard_level(g->b) <= 1, print(g->b));
    }
    throw InvariantError("bad guard kind");
}

Program p_skip() {
    static const Program skip = make(ProgramNode{ProgramKind::Skip, 0, {}, nullptr, nullptr, nullptr, nullptr});
    return skip;
}
Program p_diverge() {
    static const Program d = make(ProgramNode{ProgramKind::Diverge, 0, {}, nullptr, nullptr, nullptr, nullptr});
    return d;
}
Program p_assign(std::size_t var, std::string name, Expr e) {
    return make(ProgramNode{ProgramKind::Assign, var, std::move(name), std::move(e), nullptr, nullptr, nullptr});
}
Program p_assign(const StateSpace& space, const std::string& name, Expr e) {
    return p_assign(space.require_index(name), name, std::move(e));
}
Program p_seq(Program a, Program b) {
    return make(ProgramNode{ProgramKind::Seq, 0, {}, nullptr, nullptr, std::move(a), std::move(b)});
}
Program p_choice(Program a, Program b) {
    return make(ProgramNode{ProgramKind::Choice, 0, {}, nullptr, nullptr, std::move(a), std::move(b)});
}
Program p_ite(Guard g, Program a, Program b) {
    return make(ProgramNode{ProgramKind::Ite, 0, {}, nullptr, std::move(g), std::move(a), std::move(b)});
}
Program p_while(Guard g, Program body) {
    return make(ProgramNode{ProgramKind::While, 0, {}, nullptr, std::move(g), std::move(body), nullptr});
}

bool equal(const Program& a, const Program& b) {
    if (a == b) return true;
    if (!a || !b || a->kind != b->kind) return false;
    switch (a->kind) {
        case ProgramKind::Skip:
        case ProgramKind::Diverge: return true;
        case ProgramKind::Assign: return a->var == b->var && a->name == b->name && equal(a->expr, b->expr);
        case ProgramKind::Seq:
        case ProgramKind::Choice: return equal(a->a, b->a) && equal(a->b, b->b);
        case ProgramKind::Ite: return equal(a->guard, b->guard) && equal(a->a, b->a) && equal(a->b, b->b);
        case ProgramKind::While: return equal(a->guard, b->guard) && equal(a->a, b->a);
    }
    return false;
}

std::string print(const Program& p) {
    switch (p->kind) {
        case ProgramKind::Skip: return "skip";
        case ProgramKind::Diverge: return "diverge";
        case ProgramKind::Assign: return p->name + " := " + print(p->expr);
        case ProgramKind::Seq: {
            std::string left = print(p->a);
            if (p->a->kind == ProgramKind::Seq) left = "{ " + left + " }";
            return left + "; " + print(p->b);
        }
        case ProgramKind::Choice: return "{ " + print(p->a) + " } [] { " + print(p->b) + " }";
        case ProgramKind::Ite:
            return "if " + print(p->guard) + " { " + print(p->a) + " } else { " + print(p->b) + " }";
        case ProgramKind::While: return "while " + print(p->guard) + " { " + print(p->a) + " }";
    }
    throw InvariantError("bad program kind");
}

std::size_t depth(const Program& p) {
    switch (p->kind) {
        case ProgramKind::Skip:
        case ProgramKind::Diverge:
        case ProgramKind::Assign: return 1;
        case ProgramKind::While: return 1 + depth(p->a);
        default: return 1 + std::max(depth(p->a), depth(p->b));
    }
}

std::size_t size(const Program& p) {
    switch (p->kind) {
        case ProgramKind::Skip:
        case ProgramKind::Diverge:
        case ProgramKind::Assign: return 1;
        case ProgramKind::While: return 1 + size(p->a);
        default: return 1 + size(p->a) + size(p->b);
    }
}

bool has_choice(const Program& p) {
    switch (p->kind) {
        case ProgramKind::Choice: return true;
        case ProgramKind::While: return has_choice(p->a);
        case ProgramKind::Seq:
        case ProgramKind::Ite: return has_choice(p->a) || has_choice(p->b);
        default: return false;
    }
}

bool has_loop(const Program& p) {
    switch (p->kind) {
        case ProgramKind::While: return true;
        case ProgramKind::Seq:
        case ProgramKind::Choice:
        case ProgramKind::Ite: return has_loop(p->a) || has_loop(p->b);
        default: return false;
    }
}

}  // namespace ngcl
