# acx/tests/rewrite_tests.py

import pytest

from acx.core.terms import Rule, kconst, make, num
from acx.engine.canon import CanonContext, global_can
from acx.engine.rewrite import (
    MatchKind,
    Normalizer,
    RuleSet,
    ac_match_at,
    can_rewrite_step,
    normal_form,
    rewrite_ac,
    rewrite_once,
)
from acx.errors import BudgetExceededError
from acx.theories import EmptyTheory
from acx.theories.lia import PLUS, TIMES


def plus(a, b):
    return make(PLUS, (a, b))


def times(c, a):
    return make(TIMES, (num(c), a))


class TestMatch:
    def test_plain(self, sig):
        s = sig.U(sig.a, sig.b, sig.c)
        assert ac_match_at(s, (), s).kind is MatchKind.PLAIN

    def test_extended_keeps_remainder(self, sig):
        outcome = ac_match_at(sig.U(sig.a, sig.b, sig.c), (), sig.U(sig.a, sig.b))
        assert outcome.kind is MatchKind.EXTENDED
        assert outcome.remainder == (sig.c,)

    def test_no_match(self, sig):
        s = sig.U(sig.a, sig.b, sig.c)
        assert not ac_match_at(s, (), sig.U(sig.a, sig.d))
        assert not ac_match_at(sig.U(sig.a, sig.b), (), s)
        assert not ac_match_at(s, (), sig.W(sig.a, sig.b))

    def test_below_the_root(self, sig):
        s = sig.F(sig.U(sig.a, sig.a, sig.b))
        assert ac_match_at(s, (0,), sig.U(sig.a, sig.a)).remainder == (sig.b,)


class TestRewriteAC:
    def test_extension_step(self, sig):
        rule = Rule(sig.U(sig.a, sig.b), sig.d)
        assert rewrite_ac(sig.U(sig.a, sig.b, sig.c), rule, ()) is sig.U(sig.c, sig.d)

    def test_inside_context(self, sig):
        rule = Rule(sig.U(sig.a, sig.b), sig.d)
        assert rewrite_ac(sig.F(sig.U(sig.a, sig.b, sig.c)), rule, (0,)) is sig.F(sig.U(sig.c, sig.d))

    def test_ac_rhs_merges_into_the_comb(self, sig):
        rule = Rule(sig.U(sig.a, sig.b), sig.U(sig.d, sig.e))
        assert rewrite_ac(sig.U(sig.a, sig.b, sig.c), rule, ()) is sig.U(sig.c, sig.d, sig.e)

    def test_no_match(self, sig):
        assert rewrite_ac(sig.F(sig.a), Rule(sig.b, sig.c), (0,)) is None


class TestCanRewriteStep:
    def test_recanonizes_after_the_step(self, sig, lia_ctx):
        s = global_can(sig.F(plus(sig.a, times(2, sig.U(sig.b, sig.a)))), lia_ctx)
        rule = Rule(sig.U(sig.a, sig.b), sig.a)
        reduct, used, pos = can_rewrite_step(s, [rule], lia_ctx)
        assert reduct is sig.F(times(3, sig.a))
        assert used == rule
        assert pos == (0, 0, 1)

    def test_irreducible(self, sig, empty_ctx):
        assert can_rewrite_step(sig.F(sig.a), [Rule(sig.b, sig.c)], empty_ctx) is None

    def test_innermost_first(self, sig):
        rules = [Rule(sig.F(sig.a), sig.c), Rule(sig.a, sig.b)]
        reduct, used, pos = can_rewrite_step(sig.F(sig.a), rules, CanonContext(EmptyTheory()))
        assert reduct is sig.F(sig.b)
        assert pos == (0,)


class TestNormalForm:
    def test_chains_extension_and_plain_steps(self, sig, empty_ctx):
        rules = RuleSet([Rule(sig.U(sig.a, sig.b), sig.c), Rule(sig.U(sig.c, sig.c), sig.a)])
        norm = Normalizer(rules, empty_ctx)
        assert norm(sig.U(sig.a, sig.b, sig.c)) is sig.a
        assert norm.used == [0, 1]

    def test_normal_form_is_irreducible(self, sig, empty_ctx):
        rules = [Rule(sig.U(sig.a, sig.b), sig.c), Rule(sig.F(sig.c), sig.d)]
        nf = normal_form(sig.F(sig.U(sig.a, sig.b)), rules, empty_ctx)
        assert nf is sig.d
        assert can_rewrite_step(nf, rules, empty_ctx) is None

    def test_budget(self, sig):
        rules = [Rule(sig.a, sig.b), Rule(sig.b, sig.a)]
        with pytest.raises(BudgetExceededError):
            normal_form(sig.a, rules, CanonContext(EmptyTheory()), budget=10)


class TestRuleSet:
    def test_identifiers_follow_insertion(self, sig):
        rs = RuleSet()
        first = rs.add(Rule(sig.a, sig.b))
        second = rs.add(Rule(sig.U(sig.a, sig.c), sig.b), ident=7)
        third = rs.add(Rule(sig.c, sig.b))
        assert (first.ident, second.ident, third.ident) == (0, 7, 8)
        assert len(rs) == 3

    def test_ac_index(self, sig):
        rs = RuleSet([Rule(sig.U(sig.a, sig.c), sig.b), Rule(sig.W(sig.a, sig.c), sig.b), Rule(sig.a, sig.b)])
        assert [e.ident for e in rs.ac_rules(sig.u)] == [0]
        rs.remove(0)
        assert rs.ac_rules(sig.u) == []

    def test_remove_falls_back_to_same_lhs(self, sig):
        rs = RuleSet([Rule(sig.a, sig.b), Rule(sig.a, sig.c)])
        rs.remove(0)
        entry, _ = rs.first_match(sig.a)
        assert entry.ident == 1

    def test_first_match_on_comb(self, sig):
        rs = RuleSet([Rule(sig.U(sig.b, sig.c), sig.a)])
        entry, outcome = rs.first_match(sig.U(sig.a, sig.b, sig.c))
        assert entry.ident == 0
        assert outcome.remainder == (sig.a,)

    def test_generation_follows_changes(self, sig):
        rs = RuleSet([Rule(sig.a, sig.b)])
        seen = rs.generation
        entry = rs.add(Rule(sig.c, sig.b))
        assert rs.generation > seen
        seen = rs.generation
        rs.replace_rhs(entry.ident, sig.a)
        assert rs.generation > seen
        seen = rs.generation
        rs.remove(entry.ident)
        assert rs.generation > seen


K1, K2, K3 = kconst("k1", 0), kconst("k2", 1), kconst("k3", 2)


class TestRewriteOnce:
    def test_agrees_with_can_rewrite_step(self, sig, empty_ctx):
        rs = RuleSet([Rule(sig.U(K1, K2), K3)])
        s = sig.F(sig.U(K1, K2, K2))
        reduct, pos = rewrite_once(s, rs.get(0), empty_ctx)
        assert (reduct, rs.get(0).rule, pos) == can_rewrite_step(s, rs, empty_ctx)

    def test_absent_head(self, sig, empty_ctx):
        rs = RuleSet([Rule(sig.W(K1, K2), K3)])
        assert rewrite_once(sig.U(K1, K2), rs.get(0), empty_ctx) is None


class TestStepDecreaseChecks:
    def test_increasing_rule_is_reported(self, sig, empty_ctx):
        rules = [Rule(K1, K3)]
        with pytest.raises(AssertionError):
            normal_form(sig.F(K1), rules, empty_ctx)
        with pytest.raises(AssertionError):
            can_rewrite_step(sig.F(K1), rules, empty_ctx)

    def test_extension_by_an_older_sibling_passes(self, sig, empty_ctx):
        kb, kc, k5 = kconst("kb", 3), kconst("kc", 4), kconst("k5", 5)
        rules = [Rule(sig.U(kb, kb, kc), k5)]
        assert normal_form(sig.U(K1, kb, kb, kc), rules, empty_ctx) is sig.U(K1, k5)

    def test_checks_off_without_debug(self, sig):
        assert normal_form(sig.F(K1), [Rule(K1, K3)], CanonContext(EmptyTheory())) is sig.F(K3)


class TestNormalizerCache:
    def test_cache_hit_reports_rules(self, sig, empty_ctx):
        rules = RuleSet([Rule(sig.U(K1, K2), K3)])
        norm = Normalizer(rules, empty_ctx)
        t = sig.F(sig.U(K1, K2))
        assert norm(t) is sig.F(K3)
        norm.reset()
        assert norm(t) is sig.F(K3)
        assert norm.used == [0]

    def test_budget_is_per_call(self, sig, empty_ctx):
        rules = RuleSet([Rule(K3, K2), Rule(K2, K1)])
        norm = Normalizer(rules, empty_ctx, budget=2)
        assert norm(K3) is K1
        assert norm(sig.F(K2)) is sig.F(K1)

    def test_stale_after_rule_changes(self, sig, empty_ctx):
        rules = RuleSet([Rule(K2, K1)])
        norm = Normalizer(rules, empty_ctx)
        assert not norm.stale
        rules.add(Rule(K3, K1))
        assert norm.stale
