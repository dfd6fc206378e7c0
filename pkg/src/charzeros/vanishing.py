"""Vanishing-class predicates on exact character tables.

Everything here works on verified tables: which classes a row vanishes on,
whether a faithful row vanishes only on elements of one fixed prime-power
order within the outer-automorphism bound and with a compatible centre,
whether every nonlinear row vanishes somewhere, which single-vanishing-class
rows carry degrees with two distinct prime factors, and how the observed
single-vanishing-class rows compare against the shipped expected results.
"""
from __future__ import annotations

import json
from dataclasses import dataclass, field
from importlib import resources
from math import gcd

from sympy import primefactors

from .chartab import CharacterTable, is_faithful, kernel_of
from .constructions import out_order as registry_out_order
from .constructions.registry import RegistryError
from .numtheory import prime_power

TWO_PRIME_EXCEPTIONS = ("Sz(8):3",)

PRIMITIVITY_NOTE = "primitivity of the flagged row is assumed, not computed"


def vanishing_classes(t: CharacterTable, row: int) -> tuple[int, ...]:
    """Class indices on which the row is exactly zero."""
    return tuple(j for j, v in enumerate(t.rows[row]) if v.is_zero())


def _central_classes(t: CharacterTable) -> tuple[int, ...]:
    return tuple(j for j, c in enumerate(t.classes) if c.size == 1)


def _lcm(values) -> int:
    out = 1
    for v in values:
        out = out * v // gcd(out, v)
    return out


# -- property star -------------------------------------------------------------------

@dataclass(frozen=True)
class StarReport:
    group: str
    row: int
    degree: int
    out_order: int
    vanishing: tuple[tuple[int, int], ...]  # (class index, element order)
    faithful: bool
    cond_i: bool
    cond_ii: bool
    cond_iii: bool
    p: int | None
    holds: bool
    notes: tuple[str, ...]

    def to_obj(self) -> dict:
        return {
            "group": self.group, "row": self.row, "degree": self.degree,
            "out_order": self.out_order,
            "vanishing": [list(v) for v in self.vanishing],
            "faithful": self.faithful, "cond_i": self.cond_i,
            "cond_ii": self.cond_ii, "cond_iii": self.cond_iii,
            "p": self.p, "holds": self.holds, "notes": list(self.notes),
        }

    def text(self) -> str:
        verdict = "holds" if self.holds else "fails"
        head = (f"{self.group} row {self.row} (degree {self.degree}): "
                f"star {verdict}" + (f" with p = {self.p}" if self.p else ""))
        body = [f"  vanishing classes: "
                + (", ".join(f"{j} (order {o})" for j, o in self.vanishing) or "none")]
        body.extend(f"  {n}" for n in self.notes)
        return "\n".join([head] + body)


def star_check(t: CharacterTable, row: int, *,
               out_order: int | None = None) -> StarReport:
    """Evaluate, on one row, the three-part vanishing condition: all zeros at
    one common prime-power element order, at most out_order vanishing
    classes, and a centre that is cyclic of order a power of the same prime.
    A non-faithful row never satisfies it."""
    if out_order is None:
        try:
            out_order = registry_out_order(t.group)
        except RegistryError:
            raise ValueError(f"no outer-order bound known for {t.group!r}; "
                             "pass out_order explicitly") from None

    vc = vanishing_classes(t, row)
    vanishing = tuple((j, t.classes[j].element_order) for j in vc)
    faithful = is_faithful(t, row)
    notes = []
    if not faithful:
        notes.append("row is not faithful")

    orders = sorted({o for _, o in vanishing})
    p: int | None = None
    if not vanishing:
        cond_i = True
        notes.append("no vanishing classes; order condition is vacuous")
    elif len(orders) > 1:
        cond_i = False
        notes.append("vanishing elements have distinct orders "
                     + "{" + ", ".join(map(str, orders)) + "}")
    else:
        pk = prime_power(orders[0])
        if pk is None:
            cond_i = False
            notes.append(f"common vanishing order {orders[0]} is not a prime power")
        else:
            cond_i = True
            p = pk[0]
            notes.append(f"all vanishing elements have order {orders[0]}"
                         f" = {pk[0]}^{pk[1]}")

    cond_ii = len(vanishing) <= out_order
    notes.append(f"{len(vanishing)} vanishing classes "
                 f"{'<=' if cond_ii else '>'} outer bound {out_order}")

    central = _central_classes(t)
    z = sum(t.classes[j].size for j in central)
    z_exp = _lcm(t.classes[j].element_order for j in central)
    if z == 1:
        cond_iii = True
        notes.append("centre is trivial")
    else:
        zpk = prime_power(z)
        cyclic = z_exp == z
        if not cyclic or zpk is None:
            cond_iii = False
            notes.append(f"centre of order {z} is "
                         + ("not cyclic" if not cyclic else "not of prime-power order"))
        elif p is not None and zpk[0] != p:
            cond_iii = False
            notes.append(f"centre order {z} is a power of {zpk[0]}, not of {p}")
        else:
            cond_iii = True
            if p is None:
                p = zpk[0]
            notes.append(f"centre is cyclic of order {z} = {zpk[0]}^{zpk[1]}")

    holds = faithful and cond_i and cond_ii and cond_iii
    return StarReport(group=t.group, row=row, degree=t.degree(row),
                      out_order=out_order, vanishing=vanishing,
                      faithful=faithful, cond_i=cond_i, cond_ii=cond_ii,
                      cond_iii=cond_iii, p=p, holds=holds,
                      notes=tuple(notes))


def star_survey(t: CharacterTable, *, out_order: int | None = None) -> tuple[StarReport, ...]:
    return tuple(star_check(t, i, out_order=out_order)
                 for i in range(len(t.rows)))


# -- Burnside ------------------------------------------------------------------------

@dataclass(frozen=True)
class BurnsideReport:
    group: str
    checked_rows: int
    violations: tuple[int, ...]  # nonlinear rows with no vanishing class

    @property
    def ok(self) -> bool:
        return not self.violations

    def to_obj(self) -> dict:
        return {"group": self.group, "checked_rows": self.checked_rows,
                "violations": list(self.violations), "ok": self.ok}

    def text(self) -> str:
        if self.ok:
            return (f"{self.group}: every nonlinear row "
                    f"({self.checked_rows} checked) vanishes somewhere")
        return (f"{self.group}: rows {list(self.violations)} are nonlinear "
                "but vanish nowhere")


def burnside_check(t: CharacterTable) -> BurnsideReport:
    """Every row of degree > 1 must vanish on at least one class."""
    bad = []
    checked = 0
    for i in range(len(t.rows)):
        if t.degree(i) == 1:
            continue
        checked += 1
        if not vanishing_classes(t, i):
            bad.append(i)
    return BurnsideReport(group=t.group, checked_rows=checked,
                          violations=tuple(bad))


# -- two distinct prime factors in one-class degrees ----------------------------------

@dataclass(frozen=True)
class TwoPrimeReport:
    group: str
    flagged: tuple[tuple[int, int], ...]  # (row, degree) with >= 2 prime factors
    excused: bool  # group is on the exception list
    notes: tuple[str, ...]

    @property
    def ok(self) -> bool:
        return not self.flagged or self.excused

    def to_obj(self) -> dict:
        return {"group": self.group, "flagged": [list(f) for f in self.flagged],
                "excused": self.excused, "ok": self.ok,
                "notes": list(self.notes)}

    def text(self) -> str:
        if not self.flagged:
            return (f"{self.group}: no single-vanishing-class row has a degree "
                    "with two distinct prime factors")
        rows = ", ".join(f"row {r} degree {d}" for r, d in self.flagged)
        verdict = "excused as a known exception" if self.excused else "UNEXPECTED"
        return "\n".join([f"{self.group}: {rows} ({verdict})"]
                         + [f"  {n}" for n in self.notes])


def two_prime_degree_check(t: CharacterTable,
                           exceptions=TWO_PRIME_EXCEPTIONS) -> TwoPrimeReport:
    """Flag rows with exactly one vanishing class whose degree has at least
    two distinct prime factors; such rows should occur only in the known
    exceptional groups."""
    flagged = []
    for i in range(len(t.rows)):
        d = t.degree(i)
        if len(primefactors(d)) >= 2 and len(vanishing_classes(t, i)) == 1:
            flagged.append((i, d))
    notes = (PRIMITIVITY_NOTE,) if flagged else ()
    return TwoPrimeReport(group=t.group, flagged=tuple(flagged),
                          excused=t.group in tuple(exceptions), notes=notes)


# -- expected results for single-vanishing-class rows ---------------------------------

def _expected_data() -> dict:
    text = resources.files("charzeros").joinpath("data/expected.json").read_text()
    return json.loads(text)


@dataclass(frozen=True)
class OneClassReport:
    group: str
    rows: tuple[tuple[int, int, int, bool], ...]  # (row, degree, #vanishing, faithful)
    one_class_rows: tuple[tuple[int, int, bool], ...]  # (row, degree, faithful)
    observed: tuple[int, ...]  # degrees of faithful one-class rows, sorted
    expected: tuple[int, ...] | None
    match: bool | None
    notes: tuple[str, ...] = field(default=())

    def to_obj(self) -> dict:
        return {
            "group": self.group,
            "rows": [list(r) for r in self.rows],
            "one_class_rows": [list(r) for r in self.one_class_rows],
            "observed": list(self.observed),
            "expected": None if self.expected is None else list(self.expected),
            "match": self.match, "notes": list(self.notes),
        }

    def text(self) -> str:
        if self.expected is None:
            verdict = "no expected entry"
        else:
            verdict = "match" if self.match else "MISMATCH"
        head = (f"{self.group}: faithful single-vanishing-class degrees "
                f"{list(self.observed)}"
                + (f", expected {list(self.expected)}" if self.expected is not None else "")
                + f" ({verdict})")
        body = [f"  row {r} degree {d}" + ("" if f else " (not faithful)")
                for r, d, f in self.one_class_rows]
        body.extend(f"  {n}" for n in self.notes)
        return "\n".join([head] + body)


def classify_one_class(t: CharacterTable) -> OneClassReport:
    """Collect the faithful rows with exactly one vanishing class and compare
    their degree multiset with the shipped expected entry for the group."""
    data = _expected_data()
    rows = []
    one_class = []
    observed = []
    for i in range(len(t.rows)):
        nv = len(vanishing_classes(t, i))
        f = is_faithful(t, i)
        rows.append((i, t.degree(i), nv, f))
        if nv == 1:
            one_class.append((i, t.degree(i), f))
            if f:
                observed.append(t.degree(i))
    observed.sort()

    expected = data["one_class"].get(t.group)
    notes = []
    note = data.get("notes", {}).get(t.group)
    if note:
        notes.append(note)
    if expected is None:
        match = None
        notes.append("group has no expected entry; no comparison performed")
    else:
        match = list(observed) == list(expected)
    return OneClassReport(group=t.group, rows=tuple(rows),
                          one_class_rows=tuple(one_class),
                          observed=tuple(observed),
                          expected=None if expected is None else tuple(expected),
                          match=match, notes=tuple(notes))


# -- survey over the simple corpus ----------------------------------------------------

@dataclass(frozen=True)
class SurveyEntry:
    group: str
    one_class_rows: tuple[tuple[int, int], ...]  # (row, degree)
    allowed: tuple[int, ...]
    ok: bool


@dataclass(frozen=True)
class SurveyReport:
    entries: tuple[SurveyEntry, ...]

    @property
    def ok(self) -> bool:
        return all(e.ok for e in self.entries)

    def to_obj(self) -> dict:
        return {"ok": self.ok, "entries": [
            {"group": e.group, "one_class_rows": [list(r) for r in e.one_class_rows],
             "allowed": list(e.allowed), "ok": e.ok} for e in self.entries]}

    def text(self) -> str:
        lines = []
        for e in self.entries:
            got = ", ".join(f"row {r} degree {d}" for r, d in e.one_class_rows) or "none"
            lines.append(f"{e.group}: single-vanishing-class rows: {got}; "
                         f"allowed degrees {list(e.allowed)} "
                         f"({'ok' if e.ok else 'VIOLATION'})")
        lines.append("survey " + ("passed" if self.ok else "FAILED"))
        return "\n".join(lines)


def simple_one_class_survey(tables) -> SurveyReport:
    """Check that in each simple-group table every row with exactly one
    vanishing class has one of the degrees permitted for that group (and
    that groups without a permitted entry have no such rows)."""
    allowed_map = _expected_data()["simple_allowed"]
    entries = []
    for t in sorted(tables, key=lambda t: t.group):
        allowed = tuple(allowed_map.get(t.group, ()))
        found = tuple((i, t.degree(i)) for i in range(len(t.rows))
                      if len(vanishing_classes(t, i)) == 1)
        ok = all(d in allowed for _, d in found)
        entries.append(SurveyEntry(group=t.group, one_class_rows=found,
                                   allowed=allowed, ok=ok))
    return SurveyReport(entries=tuple(entries))
