# acx/tests/canon_tests.py

import pytest

from acx.core.terms import Rule, make, num
from acx.engine.canon import can_ac, global_can, pure_part, wrapped_solve
from acx.errors import UnboundConstantError
from acx.theories import BOTTOM
from acx.theories.lia import PLUS, TIMES


def plus(a, b):
    return make(PLUS, (a, b))


def times(c, a):
    return make(TIMES, (num(c), a))


class TestCanAC:
    def test_flattens_and_sorts(self, sig):
        t = sig.U(sig.U(sig.W(sig.c, sig.b), sig.b), sig.c)
        assert can_ac(t) is sig.U(sig.b, sig.c, sig.W(sig.b, sig.c))

    def test_idempotent(self, sig):
        t = sig.U(sig.U(sig.W(sig.c, sig.b), sig.b), sig.c)
        once = can_ac(t)
        assert can_ac(once) is once

    def test_reaches_under_free_symbols(self, sig):
        assert can_ac(sig.F(sig.U(sig.b, sig.a))) is sig.F(sig.U(sig.a, sig.b))

    def test_leaves_constants(self, sig):
        assert can_ac(sig.a) is sig.a


class TestPurePart:
    def test_foreign_subterms_become_variables(self, sig, lia_ctx):
        t = plus(sig.a, times(2, sig.U(sig.b, sig.a)))
        pure = pure_part(t, lia_ctx)
        x_a = lia_ctx.alpha[sig.a]
        x_u = lia_ctx.alpha[sig.U(sig.b, sig.a)]
        assert pure is plus(x_a, times(2, x_u))
        assert lia_ctx.rho[x_a] is sig.a

    def test_alpha_is_stable(self, sig, lia_ctx):
        assert pure_part(sig.F(sig.a), lia_ctx) is pure_part(sig.F(sig.a), lia_ctx)

    def test_pure_terms_untouched(self, lia_ctx):
        k1, _ = lia_ctx.abstraction_constant(num(7))
        t = plus(k1, num(1))
        assert pure_part(t, lia_ctx) is t


class TestGlobalCan:
    def test_linear_over_ac(self, sig, lia_ctx):
        t = plus(sig.a, times(2, sig.U(sig.b, sig.a)))
        assert global_can(t, lia_ctx) is plus(times(2, sig.U(sig.a, sig.b)), sig.a)
        assert str(global_can(t, lia_ctx)) == "2*u(a,b) + a"

    def test_idempotent(self, sig, lia_ctx):
        t = sig.F(plus(sig.b, plus(sig.a, make(PLUS, (sig.b, num(3))))))
        once = global_can(t, lia_ctx)
        assert global_can(once, lia_ctx) is once

    def test_cancellation_inside_free_symbol(self, sig, lia_ctx):
        t = sig.F(make(PLUS, (sig.a, times(-1, sig.a))))
        assert global_can(t, lia_ctx) is sig.F(num(0))

    def test_named_constants(self, sig, empty_ctx):
        k = empty_ctx.name_constant(sig.symbols["a"])
        assert global_can(sig.F(sig.a), empty_ctx) is sig.F(k)
        assert str(k) == "a"


class TestContext:
    def test_abstraction_constant_is_shared(self, sig, empty_ctx):
        k, fresh = empty_ctx.abstraction_constant(sig.F(sig.a))
        again, fresh_again = empty_ctx.abstraction_constant(sig.F(sig.a))
        assert fresh and not fresh_again
        assert k is again
        assert empty_ctx.binding(k) is sig.F(sig.a)
        assert empty_ctx.is_abstraction_k(k)

    def test_named_constants_are_not_abstraction_ks(self, sig, empty_ctx):
        k = empty_ctx.name_constant(sig.symbols["b"])
        assert not empty_ctx.is_abstraction_k(k)
        assert empty_ctx.binding(k) is sig.b

    def test_fresh_names_skip_taken_ones(self, sig, empty_ctx):
        empty_ctx.reserve_names(["k1"])
        k, _ = empty_ctx.abstraction_constant(sig.a)
        assert str(k) == "k2"

    def test_unbound(self, empty_ctx):
        from acx.core.terms import kconst
        with pytest.raises(UnboundConstantError):
            empty_ctx.binding(kconst("k9", 9))


class TestWrappedSolve:
    def test_orients_free_term(self, sig, empty_ctx):
        ka = empty_ctx.name_constant(sig.symbols["a"])
        kb = empty_ctx.name_constant(sig.symbols["b"])
        assert wrapped_solve(sig.F(ka), kb, empty_ctx) == [Rule(sig.F(ka), kb)]
        assert wrapped_solve(kb, sig.F(ka), empty_ctx) == [Rule(sig.F(ka), kb)]

    def test_trivial(self, sig, empty_ctx):
        ka = empty_ctx.name_constant(sig.symbols["a"])
        assert wrapped_solve(ka, ka, empty_ctx) == []

    def test_bottom(self, sig, lia_ctx):
        ka = lia_ctx.name_constant(sig.symbols["a"])
        assert wrapped_solve(ka, plus(ka, num(1)), lia_ctx) is BOTTOM

    def test_newest_constant_is_eliminated(self, sig, lia_ctx):
        ka = lia_ctx.name_constant(sig.symbols["a"])
        kb = lia_ctx.name_constant(sig.symbols["b"])
        assert wrapped_solve(plus(kb, num(1)), plus(ka, num(1)), lia_ctx) == [Rule(kb, ka)]

    def test_ac_term_equal_to_linear_term(self, sig, lia_ctx):
        ka = lia_ctx.name_constant(sig.symbols["a"])
        kb = lia_ctx.name_constant(sig.symbols["b"])
        lhs = sig.U(ka, kb)
        assert wrapped_solve(lhs, plus(ka, num(2)), lia_ctx) == [Rule(lhs, plus(ka, num(2)))]
