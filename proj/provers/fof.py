# Copyright 2026 The owlfol Authors.
# SPDX-License-Identifier: Apache-2.0
"""Minimal TPTP FOF reader shared by the bundled model finder adapters.

Terms are ("var", name) or ("app", symbol, args). Formulas are tuples tagged
true, false, pred, eq, not, and, or, imp, iff, xor, forall, exists.
"""

import re

_TOKEN = re.compile(
    r"\s*(<=>|<~>|=>|<=|~\||~&|!=|[()\[\],:&|~!?=.]|\$true|\$false"
    r"|'(?:[^'\\]|\\.)*'|[A-Za-z_][A-Za-z0-9_]*)")


class TptpError(Exception):
    pass


def tokenize(text):
    text = "\n".join(line for line in text.splitlines()
                     if not line.lstrip().startswith("%"))
    out = []
    pos = 0
    while True:
        m = _TOKEN.match(text, pos)
        if not m:
            if text[pos:].strip():
                raise TptpError("unexpected input: " + text[pos:pos + 30])
            return out
        out.append(m.group(1))
        pos = m.end()


class _Parser:

    def __init__(self, tokens):
        self.tokens = tokens
        self.pos = 0

    def peek(self):
        return self.tokens[self.pos] if self.pos < len(self.tokens) else None

    def take(self, expected=None):
        if self.pos >= len(self.tokens):
            raise TptpError("unexpected end of input")
        tok = self.tokens[self.pos]
        if expected is not None and tok != expected:
            raise TptpError("expected %s, got %s" % (expected, tok))
        self.pos += 1
        return tok

    def arguments(self, bound):
        self.take("(")
        args = [self.term(bound)]
        while self.peek() == ",":
            self.take()
            args.append(self.term(bound))
        self.take(")")
        return tuple(args)

    def term(self, bound):
        name = self.take()
        if name in bound:
            return ("var", name)
        if name[0].isupper():
            raise TptpError("unbound variable " + name)
        args = self.arguments(bound) if self.peek() == "(" else ()
        return ("app", name, args)

    def unitary(self, bound):
        tok = self.peek()
        if tok == "~":
            self.take()
            return ("not", self.unitary(bound))
        if tok in ("!", "?"):
            self.take()
            self.take("[")
            names = [self.take()]
            while self.peek() == ",":
                self.take()
                names.append(self.take())
            self.take("]")
            self.take(":")
            body = self.unitary(bound | set(names))
            return ("forall" if tok == "!" else "exists", tuple(names), body)
        if tok == "(":
            self.take()
            f = self.formula(bound)
            self.take(")")
            return f
        if tok in ("$true", "$false"):
            self.take()
            return (tok[1:],)
        start = self.pos
        name = self.take()
        args = ()
        if name not in bound and self.peek() == "(":
            args = self.arguments(bound)
        if self.peek() in ("=", "!="):
            self.pos = start
            lhs = self.term(bound)
            op = self.take()
            eq = ("eq", lhs, self.term(bound))
            return eq if op == "=" else ("not", eq)
        if name in bound:
            raise TptpError("variable %s used as a formula" % name)
        return ("pred", name, args)

    def formula(self, bound):
        lhs = self.unitary(bound)
        op = self.peek()
        if op in ("&", "|"):
            parts = [lhs]
            while self.peek() == op:
                self.take()
                parts.append(self.unitary(bound))
            return ("and" if op == "&" else "or", tuple(parts))
        if op in ("=>", "<=", "<=>", "<~>", "~|", "~&"):
            self.take()
            rhs = self.unitary(bound)
            if op == "=>":
                return ("imp", lhs, rhs)
            if op == "<=":
                return ("imp", rhs, lhs)
            if op == "<=>":
                return ("iff", lhs, rhs)
            if op == "<~>":
                return ("xor", lhs, rhs)
            return ("not", ("or" if op == "~|" else "and", (lhs, rhs)))
        return lhs


class Problem:
    """Axioms plus an optional conjecture, with symbol arities."""

    def __init__(self, axioms, conjecture):
        self.axioms = axioms
        self.conjecture = conjecture
        self.functions = {}
        self.predicates = {}
        for f in axioms + ([conjecture] if conjecture else []):
            self._collect(f)
        clash = set(self.functions) & set(self.predicates)
        if clash:
            raise TptpError("symbol used as function and predicate: " +
                            sorted(clash)[0])

    def _declare(self, table, name, arity):
        if table.setdefault(name, arity) != arity:
            raise TptpError("%s used with arities %d and %d" %
                            (name, table[name], arity))

    def _collect_term(self, t):
        if t[0] == "app":
            self._declare(self.functions, t[1], len(t[2]))
            for a in t[2]:
                self._collect_term(a)

    def _collect(self, f):
        tag = f[0]
        if tag == "pred":
            self._declare(self.predicates, f[1], len(f[2]))
            for a in f[2]:
                self._collect_term(a)
        elif tag == "eq":
            self._collect_term(f[1])
            self._collect_term(f[2])
        elif tag == "not":
            self._collect(f[1])
        elif tag in ("and", "or"):
            for g in f[1]:
                self._collect(g)
        elif tag in ("imp", "iff", "xor"):
            self._collect(f[1])
            self._collect(f[2])
        elif tag in ("forall", "exists"):
            self._collect(f[2])


def parse_problem(text):
    p = _Parser(tokenize(text))
    axioms = []
    conjectures = []
    while p.peek() is not None:
        p.take("fof")
        p.take("(")
        p.take()
        p.take(",")
        role = p.take()
        p.take(",")
        f = p.formula(set())
        p.take(")")
        p.take(".")
        (conjectures if role == "conjecture" else axioms).append(f)
    if len(conjectures) > 1:
        conjecture = ("and", tuple(conjectures))
    else:
        conjecture = conjectures[0] if conjectures else None
    return Problem(axioms, conjecture)
