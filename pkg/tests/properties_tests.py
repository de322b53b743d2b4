# acx/tests/properties_tests.py
"""Seeded randomized checks over small generated signatures."""

import pytest

from acx.core.ordering import OrderResult, compare, compare_x, step_decreases
from acx.core.terms import Equation, app, comb, kconst, make, num, positions
from acx.engine.canon import CanonContext, can_ac, global_can, wrapped_solve
from acx.engine.completion import FinalSystem, Inconsistent, complete, decide
from acx.engine.preprocess import abstract_equations, is_abstracted, unabstract
from acx.engine.rewrite import Normalizer, can_rewrite_step, rewrite_ac
from acx.frontend.oracle import OracleResult, oracle_derivable
from acx.theories import EmptyTheory, LinearArithmetic
from acx.theories.base import Bottom
from acx.theories.lia import PLUS, TIMES

pytestmark = pytest.mark.slow

CASES = 1000
ORACLE_CASES = 500
STRATEGIES = 20


########################################
# Generators
########################################

def random_term(rng, sig, depth=2):
    leaves = [sig.a, sig.b, sig.c, sig.d]
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(leaves)
    pick = rng.random()
    if pick < 0.3:
        return sig.F(random_term(rng, sig, depth - 1))
    items = [random_term(rng, sig, depth - 1) for _ in range(rng.randint(2, 3))]
    return sig.U(*items)


def random_free_mix(rng, sig, depth=2):
    """Two AC symbols next to free unary and binary symbols."""
    if depth == 0 or rng.random() < 0.25:
        return rng.choice([sig.a, sig.b, sig.c])
    pick = rng.random()
    if pick < 0.2:
        return sig.F(random_free_mix(rng, sig, depth - 1))
    if pick < 0.35:
        return app(sig.h, random_free_mix(rng, sig, depth - 1), random_free_mix(rng, sig, depth - 1))
    items = [random_free_mix(rng, sig, depth - 1) for _ in range(rng.randint(2, 3))]
    return sig.U(*items) if pick < 0.7 else sig.W(*items)


def random_linear(rng, sig, depth=2):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([sig.a, sig.b, num(rng.randint(-3, 3)), sig.U(sig.a, sig.b)])
    if rng.random() < 0.5:
        return make(PLUS, (random_linear(rng, sig, depth - 1), random_linear(rng, sig, depth - 1)))
    return make(TIMES, (num(rng.randint(-2, 3)), random_linear(rng, sig, depth - 1)))


def random_mixed(rng, sig, depth=2):
    """Arithmetic, AC and free symbols nested in any order."""
    if depth == 0 or rng.random() < 0.3:
        return rng.choice([sig.a, sig.b, sig.c, num(rng.randint(-2, 3))])
    pick = rng.random()
    if pick < 0.3:
        return make(PLUS, (random_mixed(rng, sig, depth - 1), random_mixed(rng, sig, depth - 1)))
    if pick < 0.45:
        return make(TIMES, (num(rng.randint(-2, 3)), random_mixed(rng, sig, depth - 1)))
    if pick < 0.7:
        return sig.F(random_mixed(rng, sig, depth - 1))
    return sig.U(random_mixed(rng, sig, depth - 1), random_mixed(rng, sig, depth - 1))


def random_pure(rng, ks, depth=2):
    if depth == 0 or rng.random() < 0.3:
        return rng.choice(ks + [num(rng.randint(0, 3))])
    if rng.random() < 0.6:
        return make(PLUS, (random_pure(rng, ks, depth - 1), random_pure(rng, ks, depth - 1)))
    return make(TIMES, (num(rng.randint(1, 3)), random_pure(rng, ks, depth - 1)))


def random_abstracted(rng, sig, ks, arithmetic, depth=2):
    """A pure, 𝒯_∅ or 𝒯_AC term over ks; K constants only when not arithmetic."""
    def pure():
        return random_pure(rng, ks, depth) if arithmetic else rng.choice(ks)

    pick = rng.random()
    if pick < 0.35:
        return pure()
    if pick < 0.6:
        return sig.F(pure())
    return comb(sig.u, [pure() for _ in range(rng.randint(2, 4))])


def shuffled_regrouping(rng, sig, t):
    """Same AC term, aliens permuted and re-associated at random."""
    if not t.args:
        return t
    if not t.is_ac:
        return make(t.head, [shuffled_regrouping(rng, sig, a) for a in t.args])
    items = [shuffled_regrouping(rng, sig, a) for a in _flat(t, t.head)]
    rng.shuffle(items)
    while len(items) > 1:
        i = rng.randrange(len(items) - 1)
        items[i:i + 2] = [app(t.head, items[i], items[i + 1])]
    return items[0]


def _flat(t, u):
    if t.head == u:
        return _flat(t.args[0], u) + _flat(t.args[1], u)
    return [t]


def ac_key(t):
    """Structural key with AC arguments as a sorted bag; built without the canonizer."""
    if not t.args:
        return (str(t.head),)
    if t.is_ac:
        return (str(t.head), tuple(sorted(ac_key(a) for a in _flat(t, t.head))))
    return (str(t.head), tuple(ac_key(a) for a in t.args))


def random_problem(rng, sig):
    E0 = [Equation(random_term(rng, sig), random_term(rng, sig)) for _ in range(rng.randint(1, 3))]
    goal = Equation(random_term(rng, sig, depth=1), random_term(rng, sig, depth=1))
    return E0, goal


def random_linear_problem(rng, sig):
    E0 = [Equation(random_mixed(rng, sig, depth=1), random_mixed(rng, sig, depth=1))
          for _ in range(rng.randint(1, 3))]
    goal = Equation(random_mixed(rng, sig, depth=1), random_mixed(rng, sig, depth=1))
    return E0, goal


def either_problem(rng, sig, i):
    """Even i: empty theory; odd i: linear arithmetic."""
    if i % 2 == 0:
        E0, goal = random_problem(rng, sig)
        return E0, goal, "empty", EmptyTheory()
    E0, goal = random_linear_problem(rng, sig)
    return E0, goal, "lia", LinearArithmetic()


def random_reduction(rng, s, rules, ctx, limit=1000):
    """Rewrite s with a redex picked at random each step, until irreducible."""
    for _ in range(limit):
        redexes = [(p, rule) for p, _ in positions(s) for rule in rules
                   if rewrite_ac(s, rule, p) is not None]
        if not redexes:
            return s
        p, rule = rng.choice(redexes)
        s = global_can(rewrite_ac(s, rule, p), ctx)
    raise AssertionError(f"no normal form reached from {s} within {limit} steps")


########################################
# Canonizers
########################################

class TestCanonizers:
    def test_can_ac_ignores_grouping_and_order(self, sig, rng):
        for _ in range(CASES):
            t = random_term(rng, sig, depth=3)
            assert can_ac(shuffled_regrouping(rng, sig, t)) is can_ac(t)

    def test_can_ac_separates_different_bags(self, sig, rng):
        equal = 0
        for _ in range(CASES):
            s, t = random_free_mix(rng, sig, depth=2), random_free_mix(rng, sig, depth=2)
            same = ac_key(s) == ac_key(t)
            equal += same
            assert (can_ac(s) is can_ac(t)) is same, (s, t)
        assert equal > 0

    def test_global_can_idempotent(self, sig, rng):
        ctx = CanonContext(LinearArithmetic())
        for _ in range(CASES):
            once = global_can(random_linear(rng, sig, depth=3), ctx)
            assert global_can(once, ctx) is once

    def test_global_can_idempotent_on_mixes(self, sig, rng):
        lia, empty = CanonContext(LinearArithmetic()), CanonContext(EmptyTheory())
        for _ in range(CASES):
            once = global_can(random_mixed(rng, sig, depth=3), lia)
            assert global_can(once, lia) is once
            once = global_can(random_free_mix(rng, sig, depth=3), empty)
            assert global_can(once, empty) is once

    def test_global_can_ignores_grouping_and_order(self, sig, rng):
        ctx = CanonContext(LinearArithmetic())
        for _ in range(CASES):
            t = random_mixed(rng, sig, depth=3)
            assert global_can(shuffled_regrouping(rng, sig, t), ctx) is global_can(t, ctx)

    def test_canonization_never_goes_up(self, rng):
        ks = [kconst(f"k{i}", i) for i in range(4)]
        ctx = CanonContext(LinearArithmetic())
        for _ in range(CASES):
            t = random_pure(rng, ks, depth=3)
            assert compare_x(global_can(t, ctx), t) in (OrderResult.LESS, OrderResult.EQUIVALENT)

    def test_canonization_never_goes_up_under_symbols(self, sig, rng):
        ks = [kconst(f"k{i}", i) for i in range(4)]
        ctx = CanonContext(LinearArithmetic())
        for _ in range(CASES):
            items = [random_pure(rng, ks, depth=2) for _ in range(rng.randint(1, 3))]
            if len(items) == 1:
                t = sig.F(items[0])
                after = global_can(t, ctx)
                assert compare_x(after.args[0], t.args[0]) in (OrderResult.LESS, OrderResult.EQUIVALENT)
            else:
                t = comb(sig.u, items)
                after = global_can(t, ctx)
                assert compare(after, t) in (OrderResult.LESS, OrderResult.EQUIVALENT)


########################################
# Ordering
########################################

class TestOrdering:
    def test_compare_x_total_and_antisymmetric(self, rng):
        ks = [kconst(f"k{i}", i) for i in range(3)]
        pool = [random_pure(rng, ks) for _ in range(40)]
        for s in pool:
            for t in pool:
                r = compare_x(s, t)
                assert r is not OrderResult.INCOMPARABLE
                assert compare_x(t, s) is r.flip()

    def test_ac_subterms_below_extensions(self, sig, rng):
        ks = [kconst(f"k{i}", i) for i in range(4)]
        for _ in range(CASES):
            items = [rng.choice(ks) for _ in range(rng.randint(2, 4))]
            bigger = comb(sig.u, items + [rng.choice(ks)])
            assert compare(comb(sig.u, items), bigger) is OrderResult.LESS


########################################
# Solve wrapper
########################################

class TestWrappedSolve:
    @pytest.mark.parametrize("theory", [EmptyTheory(), LinearArithmetic()], ids=["empty", "lia"])
    def test_solved_rules_go_down(self, sig, rng, theory):
        ctx = CanonContext(theory)
        ks = [ctx.name_constant(c.head) for c in (sig.a, sig.b, sig.c, sig.d)]
        arithmetic = isinstance(theory, LinearArithmetic)
        solved = 0
        for _ in range(CASES):
            s = global_can(random_abstracted(rng, sig, ks, arithmetic), ctx)
            t = global_can(random_abstracted(rng, sig, ks, arithmetic), ctx)
            if s is t or not is_abstracted(s, t):
                continue
            result = wrapped_solve(s, t, ctx)
            if isinstance(result, Bottom):
                assert arithmetic
                continue
            for rule in result:
                solved += 1
                assert compare(rule.rhs, rule.lhs) is OrderResult.LESS, (s, t, rule)
                assert global_can(rule.rhs, ctx) is rule.rhs
        assert solved > CASES // 4


########################################
# Completion
########################################

class TestCompletion:
    def test_final_systems_are_inter_reduced(self, sig, rng, config):
        for _ in range(200):
            E0, goal = random_problem(rng, sig)
            ctx = CanonContext(EmptyTheory())
            verdict = decide(E0, goal, ctx, config)
            if not isinstance(verdict.result, FinalSystem):
                continue
            rules = verdict.result.all_rules
            for i, rule in enumerate(rules):
                assert can_rewrite_step(rule.lhs, rules[:i] + rules[i + 1:], ctx) is None
                assert can_rewrite_step(rule.rhs, rules, ctx) is None
                assert compare(rule.rhs, rule.lhs) is OrderResult.LESS

    def test_every_step_goes_down(self, sig, rng, config):
        steps = 0
        for i in range(2000):
            E0, goal, _, theory = either_problem(rng, sig, i)
            ctx = CanonContext(theory)
            result = decide(E0, goal, ctx, config).result
            if not isinstance(result, FinalSystem):
                continue
            ks = [k for k, _ in ctx.k_registry]
            arithmetic = isinstance(theory, LinearArithmetic)
            for _ in range(20):
                s = global_can(random_abstracted(rng, sig, ks, arithmetic), ctx)
                for _ in range(1000):
                    step = can_rewrite_step(s, result.rule_set, ctx)
                    if step is None:
                        break
                    after, rule, _ = step
                    assert step_decreases(s, after) is True, (s, rule, after)
                    steps += 1
                    s = after
                else:
                    raise AssertionError(f"no normal form reached from {s}")
            if steps >= CASES:
                break
        assert steps >= CASES

    def test_confluent_under_random_strategies(self, sig, rng, config):
        for i in range(50):
            E0, _, _, theory = either_problem(rng, sig, i)
            goals = [random_problem(rng, sig)[1] for _ in range(2)]
            if i % 2:
                goals = [random_linear_problem(rng, sig)[1] for _ in range(2)]
            ctx = CanonContext(theory)
            verdict = decide(E0, goals, ctx, config)
            if not isinstance(verdict.result, FinalSystem):
                continue
            rules = verdict.result.all_rules
            norm = Normalizer(verdict.result.rule_set, ctx)
            for goal in verdict.run.goals:
                for side in (goal.lhs, goal.rhs):
                    expected = norm(side)
                    for _ in range(STRATEGIES):
                        assert random_reduction(rng, side, rules, ctx) is expected, side

    def test_oracle_derivations_are_proved(self, sig, rng, config):
        for _ in range(200):
            E0, goal = random_problem(rng, sig)
            if oracle_derivable(E0, goal, bound=4, max_terms=500) is OracleResult.DERIVABLE:
                assert decide(E0, goal, CanonContext(EmptyTheory()), config).valid, (E0, goal)

    def test_agrees_with_oracle(self, sig, rng, config):
        seen = {(name, r): 0 for name in ("empty", "lia")
                for r in (OracleResult.DERIVABLE, OracleResult.NOT_DERIVABLE)}
        for i in range(ORACLE_CASES):
            E0, goal, name, theory = either_problem(rng, sig, i)
            if rng.random() < 0.3:
                lhs, rhs = rng.choice(E0).lhs, rng.choice(E0).rhs
                goal = Equation(sig.F(lhs), sig.F(rhs))
            answer = oracle_derivable(E0, goal, bound=6, theory=name, max_terms=1500)
            if answer is OracleResult.NOT_WITHIN_BOUND:
                continue
            seen[name, answer] += 1
            valid = decide(E0, goal, CanonContext(theory), config).valid
            assert valid is (answer is OracleResult.DERIVABLE), (name, E0, goal, answer)
        assert all(count > 0 for count in seen.values()), seen

    def test_hypotheses_are_proved(self, sig, rng, config):
        for _ in range(CASES):
            E0, _ = random_problem(rng, sig)
            assert decide(E0, E0, CanonContext(EmptyTheory()), config).valid

    def test_verdict_ignores_input_order(self, sig, rng, config):
        for _ in range(200):
            E0, goal = random_problem(rng, sig)
            expected = decide(E0, goal, CanonContext(EmptyTheory()), config).valid
            for _ in range(5):
                shuffled = list(E0)
                rng.shuffle(shuffled)
                assert decide(shuffled, goal, CanonContext(EmptyTheory()), config).valid is expected

    def test_linear_hypotheses_are_proved(self, sig, rng, config):
        for _ in range(CASES):
            E0 = [Equation(random_linear(rng, sig), random_linear(rng, sig)) for _ in range(rng.randint(1, 2))]
            verdict = decide(E0, E0, CanonContext(LinearArithmetic()), config)
            assert verdict.valid


########################################
# Abstraction
########################################

class TestAbstraction:
    def test_output_is_abstracted(self, sig, rng):
        for i in range(CASES):
            E0, goal, _, theory = either_problem(rng, sig, i)
            run = abstract_equations(E0, CanonContext(theory), [goal])
            assert len(run.output) >= len(E0)
            for eq in run.output + run.goals:
                assert is_abstracted(eq.lhs, eq.rhs), eq

    def test_output_is_abstracted_without_named_constants(self, sig, rng):
        for i in range(CASES // 2):
            E0, goal, _, theory = either_problem(rng, sig, i)
            run = abstract_equations(E0, CanonContext(theory), [goal], name_constants=False)
            for eq in run.output + run.goals:
                assert is_abstracted(eq.lhs, eq.rhs), eq

    def test_input_follows_from_output(self, sig, rng, config):
        checked = 0
        for i in range(2 * CASES):
            E0, _, _, theory = either_problem(rng, sig, i)
            ctx = CanonContext(theory)
            run = abstract_equations(E0, ctx, E0)
            result = complete(run.output, ctx, config)
            if isinstance(result, Inconsistent):
                continue
            norm = Normalizer(result.rule_set, ctx)
            for eq in run.goals:
                assert norm(eq.lhs) is norm(eq.rhs), eq
                checked += 1
            if checked >= CASES:
                break
        assert checked >= CASES

    def test_output_follows_from_input(self, sig, rng, config):
        checked = 0
        for i in range(2 * CASES):
            E0, _, _, theory = either_problem(rng, sig, i)
            ctx = CanonContext(theory)
            run = abstract_equations(E0, ctx)
            for eq in run.output:
                back = Equation(unabstract(eq.lhs, run), unabstract(eq.rhs, run))
                assert decide(E0, back, CanonContext(theory), config).valid, (E0, eq, back)
                checked += 1
            if checked >= CASES:
                break
        assert checked >= CASES
