#!/usr/bin/env python3
# Copyright 2026 The owlfol Authors.
# SPDX-License-Identifier: Apache-2.0
"""Finite model finder for TPTP FOF in the MACE style.

The problem (axioms plus negated conjecture) is put in negation normal form
and skolemized once. For domain sizes 1, 2, ... it is then grounded into
CNF, with one-hot variables for function values, and handed to a SAT solver
from python-sat. Prints one SZS status line: Satisfiable or
CounterSatisfiable when a model is found, GaveUp when --max-size is passed.
"""

import argparse
import itertools
import os
import sys
import time

sys.path.insert(0, os.path.dirname(os.path.abspath(__file__)))

import fof  # noqa: E402


# ---------------------------------------------------------------------------
# Domain independent preprocessing.

class _Skolemizer:

    def __init__(self, taken):
        self.taken = set(taken)
        self.counter = itertools.count()
        self.skolems = {}

    def fresh(self, prefix):
        while True:
            name = "%s%d" % (prefix, next(self.counter))
            if name not in self.taken:
                self.taken.add(name)
                return name

    # Returns an NNF formula over forall/and/or/literals. env maps bound
    # names to replacement terms; universals lists the universal variables
    # in scope, outermost first.
    def nnf(self, f, positive, env, universals):
        tag = f[0]
        if tag in ("true", "false"):
            value = (tag == "true") == positive
            return ("true",) if value else ("false",)
        if tag in ("pred", "eq"):
            atom = self.substitute(f, env)
            return atom if positive else ("not", atom)
        if tag == "not":
            return self.nnf(f[1], not positive, env, universals)
        if tag in ("and", "or"):
            conj = (tag == "and") == positive
            parts = tuple(self.nnf(g, positive, env, universals) for g in f[1])
            return ("and" if conj else "or", parts)
        if tag == "imp":
            return self.nnf(("or", (("not", f[1]), f[2])), positive, env,
                            universals)
        if tag in ("iff", "xor"):
            a, b = f[1], f[2]
            if (tag == "iff") == positive:
                g = ("and", (("or", (("not", a), b)), ("or", (a, ("not", b)))))
            else:
                g = ("or", (("and", (a, ("not", b))), ("and", (("not", a), b))))
            return self.nnf(g, True, env, universals)
        universal = (tag == "forall") == positive
        inner = dict(env)
        if universal:
            names = []
            for v in f[1]:
                fresh = self.fresh("X")
                inner[v] = ("var", fresh)
                names.append(fresh)
            body = self.nnf(f[2], positive, inner, universals + names)
            return ("forall", tuple(names), body)
        free = free_variables(self.substitute_formula_vars(f, env))
        args = tuple(("var", u) for u in universals if u in free)
        for v in f[1]:
            sk = self.fresh("sk")
            self.skolems[sk] = len(args)
            inner[v] = ("app", sk, args)
        return self.nnf(f[2], positive, inner, universals)

    def substitute_term(self, t, env):
        if t[0] == "var":
            return env.get(t[1], t)
        if not t[2]:
            return t
        return ("app", t[1], tuple(self.substitute_term(a, env)
                                   for a in t[2]))

    def substitute(self, atom, env):
        if atom[0] == "pred":
            return ("pred", atom[1],
                    tuple(self.substitute_term(a, env) for a in atom[2]))
        return ("eq", self.substitute_term(atom[1], env),
                self.substitute_term(atom[2], env))

    # Only the variable renaming part matters for free_variables().
    def substitute_formula_vars(self, f, env):
        tag = f[0]
        if tag in ("pred", "eq"):
            return self.substitute(f, env)
        if tag == "not":
            return ("not", self.substitute_formula_vars(f[1], env))
        if tag in ("and", "or"):
            return (tag, tuple(self.substitute_formula_vars(g, env)
                               for g in f[1]))
        if tag in ("imp", "iff", "xor"):
            return (tag, self.substitute_formula_vars(f[1], env),
                    self.substitute_formula_vars(f[2], env))
        if tag in ("forall", "exists"):
            inner = {k: v for k, v in env.items() if k not in f[1]}
            return (tag, f[1], self.substitute_formula_vars(f[2], inner))
        return f


def _term_variables(t, out):
    if t[0] == "var":
        out.add(t[1])
    else:
        for a in t[2]:
            _term_variables(a, out)


def free_variables(f):
    tag = f[0]
    out = set()
    if tag == "pred":
        for a in f[2]:
            _term_variables(a, out)
    elif tag == "eq":
        _term_variables(f[1], out)
        _term_variables(f[2], out)
    elif tag == "not":
        out = free_variables(f[1])
    elif tag in ("and", "or"):
        for g in f[1]:
            out |= free_variables(g)
    elif tag in ("imp", "iff", "xor"):
        out = free_variables(f[1]) | free_variables(f[2])
    elif tag in ("forall", "exists"):
        out = free_variables(f[2]) - set(f[1])
    return out


def clausal_input(problem):
    """NNF, skolemized formulas plus the function arities they use."""
    names = set(problem.functions) | set(problem.predicates)
    sk = _Skolemizer(names)
    formulas = [sk.nnf(f, True, {}, []) for f in problem.axioms]
    if problem.conjecture is not None:
        formulas.append(sk.nnf(problem.conjecture, False, {}, []))
    functions = dict(problem.functions)
    functions.update(sk.skolems)
    return formulas, functions, dict(problem.predicates)


# ---------------------------------------------------------------------------
# Grounding for a fixed domain size.

class _Grounding:

    def __init__(self, size, functions, predicates):
        self.n = size
        self.functions = functions
        self.predicates = predicates
        self.clauses = []
        self.next_var = 1
        self.pred_vars = {}
        self.func_vars = {}
        self.memo = {}
        self.free = {}

    def new_var(self):
        v = self.next_var
        self.next_var += 1
        return v

    def pred_var(self, p, args):
        key = (p, args)
        v = self.pred_vars.get(key)
        if v is None:
            v = self.pred_vars[key] = self.new_var()
        return v

    # One-hot indicators for f(args) with concrete args.
    def func_row(self, f, args):
        key = (f, args)
        row = self.func_vars.get(key)
        if row is None:
            row = tuple(self.new_var() for _ in range(self.n))
            self.func_vars[key] = row
            self.clauses.append(list(row))
            for a, b in itertools.combinations(row, 2):
                self.clauses.append([-a, -b])
        return row

    def break_symmetry(self):
        constants = sorted(f for f, arity in self.functions.items()
                           if arity == 0)
        for i, c in enumerate(constants):
            row = self.func_row(c, ())
            for e in range(i + 1, self.n):
                self.clauses.append([-row[e]])

    # Value of a term: an int element, or a tuple of one-hot literals.
    def term(self, t, env):
        if t[0] == "var":
            return env[t[1]]
        f, args = t[1], t[2]
        values = tuple(self.term(a, env) for a in args)
        if all(isinstance(v, int) for v in values):
            return self.func_row(f, values)
        key = ("t", f, values)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        out = tuple(self.new_var() for _ in range(self.n))
        for combo, guard in self.combinations(values):
            row = self.func_row(f, combo)
            for e in range(self.n):
                self.clauses.append(guard + [-out[e], row[e]])
                self.clauses.append(guard + [out[e], -row[e]])
        self.memo[key] = out
        return out

    # Concrete argument tuples, each with the negated literals selecting it.
    def combinations(self, values):
        choices = []
        for v in values:
            if isinstance(v, int):
                choices.append(((v, None),))
            else:
                choices.append(tuple((e, v[e]) for e in range(self.n)))
        for pick in itertools.product(*choices):
            yield (tuple(e for e, _ in pick),
                   [-lit for _, lit in pick if lit is not None])

    # Literal (or bool) equivalent to the atom.
    def atom(self, a, env):
        if a[0] == "eq":
            x = self.term(a[1], env)
            y = self.term(a[2], env)
            if isinstance(x, int) and isinstance(y, int):
                return x == y
            if isinstance(x, int):
                return y[x]
            if isinstance(y, int):
                return x[y]
            key = ("e", x, y)
            hit = self.memo.get(key)
            if hit is not None:
                return hit
            out = self.new_var()
            for e in range(self.n):
                self.clauses.append([-x[e], -out, y[e]])
                self.clauses.append([-x[e], out, -y[e]])
            self.memo[key] = out
            return out
        values = tuple(self.term(t, env) for t in a[2])
        if all(isinstance(v, int) for v in values):
            return self.pred_var(a[1], values)
        key = ("p", a[1], values)
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        out = self.new_var()
        for combo, guard in self.combinations(values):
            p = self.pred_var(a[1], combo)
            self.clauses.append(guard + [-out, p])
            self.clauses.append(guard + [out, -p])
        self.memo[key] = out
        return out

    def free_of(self, f):
        fv = self.free.get(id(f))
        if fv is None:
            fv = self.free[id(f)] = tuple(sorted(free_variables(f)))
        return fv

    # Literal (or bool) that implies f; f is in NNF.
    def encode(self, f, env):
        tag = f[0]
        if tag == "true":
            return True
        if tag == "false":
            return False
        if tag in ("pred", "eq"):
            return self.atom(f, env)
        if tag == "not":
            v = self.atom(f[1], env)
            return (not v) if isinstance(v, bool) else -v
        key = (id(f),) + tuple(env[v] for v in self.free_of(f))
        hit = self.memo.get(key)
        if hit is not None:
            return hit
        if tag == "forall":
            children = self.children_forall(f, env)
            out = self.conjunction(children)
        elif tag == "and":
            out = self.conjunction(self.encode(g, env) for g in f[1])
        else:
            out = self.disjunction(self.encode(g, env) for g in f[1])
        self.memo[key] = out
        return out

    def children_forall(self, f, env):
        for combo in itertools.product(range(self.n), repeat=len(f[1])):
            inner = dict(env)
            inner.update(zip(f[1], combo))
            yield self.encode(f[2], inner)

    def conjunction(self, children):
        lits = []
        for c in children:
            if c is False:
                return False
            if c is not True:
                lits.append(c)
        if not lits:
            return True
        if len(lits) == 1:
            return lits[0]
        out = self.new_var()
        for c in lits:
            self.clauses.append([-out, c])
        return out

    def disjunction(self, children):
        lits = []
        for c in children:
            if c is True:
                return True
            if c is not False:
                lits.append(c)
        if not lits:
            return False
        if len(lits) == 1:
            return lits[0]
        out = self.new_var()
        self.clauses.append([-out] + lits)
        return out

    # Adds clauses forcing f; returns False when f is trivially false.
    def require(self, f, env):
        tag = f[0]
        if tag == "and":
            return all(self.require(g, env) for g in f[1])
        if tag == "forall":
            for combo in itertools.product(range(self.n), repeat=len(f[1])):
                inner = dict(env)
                inner.update(zip(f[1], combo))
                if not self.require(f[2], inner):
                    return False
            return True
        lit = self.encode(f, env)
        if lit is True:
            return True
        if lit is False:
            return False
        self.clauses.append([lit])
        return True


class Model:
    """A finite interpretation: total function tables and predicate sets."""

    def __init__(self, size, functions, predicates):
        self.size = size
        self.functions = functions
        self.predicates = predicates

    def term(self, t, env):
        if t[0] == "var":
            return env[t[1]]
        args = tuple(self.term(a, env) for a in t[2])
        return self.functions[t[1]].get(args, 0)

    def holds(self, f, env=None):
        env = env or {}
        tag = f[0]
        if tag in ("true", "false"):
            return tag == "true"
        if tag == "pred":
            args = tuple(self.term(a, env) for a in f[2])
            return args in self.predicates.get(f[1], ())
        if tag == "eq":
            return self.term(f[1], env) == self.term(f[2], env)
        if tag == "not":
            return not self.holds(f[1], env)
        if tag == "and":
            return all(self.holds(g, env) for g in f[1])
        if tag == "or":
            return any(self.holds(g, env) for g in f[1])
        if tag == "imp":
            return not self.holds(f[1], env) or self.holds(f[2], env)
        if tag == "iff":
            return self.holds(f[1], env) == self.holds(f[2], env)
        if tag == "xor":
            return self.holds(f[1], env) != self.holds(f[2], env)
        test = all if tag == "forall" else any
        inner = dict(env)

        def body(combo):
            inner.update(zip(f[1], combo))
            return self.holds(f[2], inner)

        return test(body(c) for c in
                    itertools.product(range(self.size), repeat=len(f[1])))


def find_model(formulas, functions, predicates, size, solver_name):
    """A Model of the clausal input with the given domain size, or None."""
    from pysat.solvers import Solver

    g = _Grounding(size, functions, predicates)
    g.break_symmetry()
    for f in formulas:
        if not g.require(f, {}):
            return None
    with Solver(name=solver_name, bootstrap_with=g.clauses) as s:
        if not s.solve():
            return None
        true = {v for v in s.get_model() if v > 0}
    tables = {f: {} for f in functions}
    for (f, args), row in g.func_vars.items():
        tables[f][args] = next(e for e, v in enumerate(row) if v in true)
    sets = {p: set() for p in predicates}
    for (p, args), v in g.pred_vars.items():
        if v in true:
            sets[p].add(args)
    return Model(size, tables, sets)


def satisfies(model, problem):
    """Whether the model satisfies the axioms and falsifies the conjecture."""
    if not all(model.holds(f) for f in problem.axioms):
        return False
    return problem.conjecture is None or not model.holds(problem.conjecture)


def main(argv=None):
    ap = argparse.ArgumentParser(description=__doc__)
    ap.add_argument("problem")
    ap.add_argument("--max-size", type=int, default=10)
    ap.add_argument("--solver", default="cadical153")
    ap.add_argument("--verbose", action="store_true")
    ap.add_argument("--check", action="store_true",
                    help="re-evaluate the input on the model found")
    args = ap.parse_args(argv)
    try:
        with open(args.problem, encoding="utf-8") as f:
            problem = fof.parse_problem(f.read())
    except (OSError, fof.TptpError) as e:
        print("% SZS status Error for", args.problem, ":", e)
        return 1
    try:
        import pysat  # noqa: F401
    except ImportError:
        print("% SZS status Error : the python-sat package is not installed")
        return 1
    formulas, functions, predicates = clausal_input(problem)
    start = time.monotonic()
    for size in range(1, args.max_size + 1):
        model = find_model(formulas, functions, predicates, size, args.solver)
        if args.verbose:
            print("%% size %d: %s (%.2fs)" %
                  (size, "model" if model else "none",
                   time.monotonic() - start), flush=True)
        if model is not None:
            if args.check and not satisfies(model, problem):
                print("%% SZS status Error : model check failed at size %d"
                      % size)
                return 1
            status = ("CounterSatisfiable" if problem.conjecture is not None
                      else "Satisfiable")
            print("%% SZS status %s for %s" % (status, args.problem))
            print("%% domain size %d" % size)
            return 0
    print("%% SZS status GaveUp for %s" % args.problem)
    return 0


if __name__ == "__main__":
    sys.exit(main())
