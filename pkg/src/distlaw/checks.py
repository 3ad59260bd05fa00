"""Bounded exhaustive verification of monad laws, with failure witnesses."""

from .errors import DistlawError
from .monads import enum_stack


class Witness:
    """One failing instance: which diagram, on what input, both leg values."""

    def __init__(self, check_id, input_term, left, right):
        self.check_id = check_id
        self.input = input_term
        self.left = left
        self.right = right

    def __repr__(self):
        return (f"Witness({self.check_id}: input={self.input}, "
                f"left={self.left}, right={self.right})")


class CheckReport:
    """Outcome of a suite of pointwise diagram comparisons."""

    def __init__(self, title, checked=0, witnesses=None, sections=None):
        self.title = title
        self.checked = checked
        self.witnesses = list(witnesses or ())
        self.sections = list(sections or ())

    @property
    def passed(self):
        return not self.witnesses and all(s.passed for s in self.sections)

    @property
    def verdict(self):
        return "PASS" if self.passed else "FAIL"

    def total_checked(self):
        return self.checked + sum(s.total_checked() for s in self.sections)

    def all_witnesses(self):
        out = list(self.witnesses)
        for s in self.sections:
            out.extend(s.all_witnesses())
        return out

    def lines(self):
        """One deterministic report line per check, witnesses on failure."""
        out = []
        if not self.sections:
            line = f"CHECK {self.title} {self.verdict}"
            if self.witnesses:
                w = self.witnesses[0]
                line += f" witness={w.check_id}:{w.input}"
            out.append(line)
        else:
            for s in self.sections:
                out.extend(s.lines())
        return out

    def __repr__(self):
        return f"CheckReport({self.title}: {self.verdict}, {self.total_checked()} checked)"


def merge_reports(title, reports):
    return CheckReport(title, sections=list(reports))


def compare(check_id, inputs, left_leg, right_leg):
    """Evaluate two legs pointwise; a raised package error counts as a leg value."""
    witnesses = []
    checked = 0
    for t in inputs:
        checked += 1
        try:
            lhs = left_leg(t)
        except DistlawError as exc:
            lhs = f"error:{type(exc).__name__}"
        try:
            rhs = right_leg(t)
        except DistlawError as exc:
            rhs = f"error:{type(exc).__name__}"
        if lhs != rhs:
            witnesses.append(Witness(check_id, t, lhs, rhs))
    return CheckReport(check_id, checked=checked, witnesses=witnesses)


def check_monad_laws(monad, carrier, bound):
    """Unit and associativity laws on every enumerated term within bound.

    Unit laws run over M(X); each leg builds the doubly wrapped term and
    multiplies, so witnesses show the M(M(X)) input actually fed to mult.
    Associativity runs over M(M(M(X))).
    """
    base = list(carrier)
    level1 = monad.enumerate(base, bound)
    left_unit = compare(
        f"monad[{monad.name}]:unit-left",
        level1,
        lambda t: monad.mult(monad.unit(t)),
        lambda t: t,
    )
    right_unit = compare(
        f"monad[{monad.name}]:unit-right",
        level1,
        lambda t: monad.mult(monad.fmap(monad.unit, t)),
        lambda t: t,
    )
    # Recast unit witnesses to show the term handed to mult.
    for report, wrap in ((left_unit, monad.unit), (right_unit, lambda t: monad.fmap(monad.unit, t))):
        for w in report.witnesses:
            w.input = wrap(w.input)
    level3 = enum_stack([monad, monad, monad], base, bound)
    assoc = compare(
        f"monad[{monad.name}]:assoc",
        level3,
        lambda t: monad.mult(monad.mult(t)),
        lambda t: monad.mult(monad.fmap(monad.mult, t)),
    )
    return merge_reports(f"monad-laws[{monad.name}]", [left_unit, right_unit, assoc])


def check_functoriality(monad, carrier, bound, function_pairs):
    """fmap preserves identities and composition on sampled functions."""
    base = list(carrier)
    terms = monad.enumerate(base, bound)
    identity = compare(
        f"functor[{monad.name}]:identity",
        terms,
        lambda t: monad.fmap(lambda x: x, t),
        lambda t: t,
    )
    sections = [identity]
    for idx, (f, g) in enumerate(function_pairs):
        comp = compare(
            f"functor[{monad.name}]:compose#{idx}",
            terms,
            lambda t, f=f, g=g: monad.fmap(lambda x: g[f[x]], t),
            lambda t, f=f, g=g: monad.fmap(lambda x: g[x], monad.fmap(lambda x: f[x], t)),
        )
        sections.append(comp)
    return merge_reports(f"functoriality[{monad.name}]", sections)


def check_monad_naturality(monad, src_carrier, functions, bound):
    """Unit and mult are natural in the carrier, for the given maps."""
    base = list(src_carrier)
    level2 = enum_stack([monad, monad], base, bound)
    sections = []
    for idx, f in enumerate(functions):
        fn = lambda x, f=f: f[x]
        unit_nat = compare(
            f"naturality[{monad.name}]:unit#{idx}",
            base,
            lambda x, fn=fn: monad.fmap(fn, monad.unit(x)),
            lambda x, fn=fn: monad.unit(fn(x)),
        )
        mult_nat = compare(
            f"naturality[{monad.name}]:mult#{idx}",
            level2,
            lambda t, fn=fn: monad.fmap(fn, monad.mult(t)),
            lambda t, fn=fn: monad.mult(monad.fmap(lambda s: monad.fmap(fn, s), t)),
        )
        sections.extend([unit_nat, mult_nat])
    return merge_reports(f"naturality[{monad.name}]", sections)
