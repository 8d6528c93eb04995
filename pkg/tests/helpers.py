"""Shared generators and reference oracles.

Everything here is deliberately written against the data model only, in a
different style from the library internals, so tests that compare against
these helpers are genuine cross-checks rather than mirrors.
"""

import itertools

from illation.formulas import Claw, Conn16, Const, Neg, Prod, Sum, Var

# The fixed 16-column connective table, rows (v,v),(v,f),(f,v),(f,f).
# Frozen here independently of the library constant so the two can be
# compared against each other.
EXPECTED_VECTORS = {
    1: (False, False, False, False),
    2: (False, False, False, True),
    3: (False, False, True, False),
    4: (False, True, False, False),
    5: (True, False, False, False),
    6: (True, True, False, False),
    7: (True, False, True, False),
    8: (True, False, False, True),
    9: (False, True, True, False),
    10: (False, True, False, True),
    11: (False, False, True, True),
    12: (False, True, True, True),
    13: (True, False, True, True),
    14: (True, True, False, True),
    15: (True, True, True, False),
    16: (True, True, True, True),
}


def ref_eval(f, env):
    """Reference evaluator: dispatch by node type, no shared code with src."""
    kind = type(f).__name__
    if kind == "Var":
        return env[f.name]
    if kind == "Const":
        return f.value
    if kind == "Neg":
        return not ref_eval(f.inner, env)
    if kind == "Claw":
        return ref_eval(f.consequent, env) if ref_eval(f.antecedent, env) else True
    if kind == "Prod":
        return ref_eval(f.left, env) and ref_eval(f.right, env)
    if kind == "Sum":
        return ref_eval(f.left, env) or ref_eval(f.right, env)
    if kind == "Conn16":
        row = {(True, True): 0, (True, False): 1, (False, True): 2, (False, False): 3}[
            (ref_eval(f.left, env), ref_eval(f.right, env))
        ]
        return EXPECTED_VECTORS[f.index][row]
    raise AssertionError(f"unknown node {kind}")


def all_envs(names):
    for bits in itertools.product((True, False), repeat=len(names)):
        yield dict(zip(names, bits))


def semantically_equal(f, g, names):
    return all(ref_eval(f, env) == ref_eval(g, env) for env in all_envs(names))


def formula_layers(names, with_consts=True, with_conn16=False, conn_indices=(8, 13)):
    """Layer 0 is the leaves; each later layer adds one construction step."""
    leaves = [Var(n) for n in names]
    if with_consts:
        leaves += [Const(True), Const(False)]
    return leaves


def grow(layer, with_conn16=False, conn_indices=(8, 13)):
    """All formulas built with one new top node over the given pool."""
    out = []
    for f in layer:
        out.append(Neg(f))
    for f, g in itertools.product(layer, repeat=2):
        out.append(Claw(f, g))
        out.append(Prod(f, g))
        out.append(Sum(f, g))
        if with_conn16:
            for k in conn_indices:
                out.append(Conn16(k, f, g))
    return out


def formulas_up_to_depth(depth, names, with_consts=True, with_conn16=False,
                         conn_indices=(8, 13)):
    """Every formula of AST depth <= depth over the given variable names."""
    pool = formula_layers(names, with_consts)
    for _ in range(depth - 1):
        pool = pool + grow(pool, with_conn16, conn_indices)
    return pool


def random_formula(rng, depth, names, with_consts=True, with_conn16=False):
    if depth <= 1 or rng.random() < 0.2:
        choices = list(names) + (["#t", "#f"] if with_consts else [])
        pick = rng.choice(choices)
        if pick == "#t":
            return Const(True)
        if pick == "#f":
            return Const(False)
        return Var(pick)
    kinds = ["neg", "claw", "prod", "sum"] + (["conn"] if with_conn16 else [])
    kind = rng.choice(kinds)
    if kind == "neg":
        return Neg(random_formula(rng, depth - 1, names, with_consts, with_conn16))
    left = random_formula(rng, depth - 1, names, with_consts, with_conn16)
    right = random_formula(rng, depth - 1, names, with_consts, with_conn16)
    if kind == "claw":
        return Claw(left, right)
    if kind == "prod":
        return Prod(left, right)
    if kind == "sum":
        return Sum(left, right)
    return Conn16(rng.randrange(1, 17), left, right)
