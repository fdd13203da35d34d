"""Brute-force property suites for the coset-leader facts behind the bounds.

Every closed-form result in :mod:`dualbch.dualtools` rests on a small set of
structural claims about q-cyclotomic cosets: floor claims ("the leader of the
coset containing this element is at least/greater than this value") and
membership claims ("this element lies in the dual defining set and is a coset
leader").  This module re-checks those claims by direct enumeration over their
full hypothesis grids, so a formula bug or a transcription slip shows up as a
concrete counterexample rather than a silently wrong bound.

Each check returns a :class:`PropResult` whose ``failures`` tuple is expected
to be empty.  The default parameter grids are pinned in
``data/prop_grids.json`` (see :func:`load_grid_manifest`), keeping experiment
scale a configuration concern: extending coverage means editing the manifest,
not the checking code.
"""

from __future__ import annotations

import json
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from importlib import resources
from pathlib import Path

import numpy as np

from .bch import DivisorOfQMinus1, PowerForm
from .cyclotomic import CosetTable, coset_table

MANIFEST_SCHEMA = "dualbch-prop-grids/1"


@dataclass(frozen=True)
class PropResult:
    """Outcome of one property check.

    ``parameter_grid`` records what was swept, one tuple per contiguous
    sub-range: ``(t, u_lo, u_hi)`` for the floor checks (plus a leading ``s``
    for the divisor form) and ``(label, delta_lo, delta_hi, element)`` for the
    membership checks.  ``failures`` holds one tuple per counterexample and is
    empty whenever the checked claim holds on the grid.
    """

    lemma_id: str
    parameter_grid: tuple
    failures: tuple

    @property
    def ok(self) -> bool:
        return not self.failures


def _own_table(order: int, q: int, table: CosetTable | None) -> CosetTable:
    if table is None:
        return coset_table(order, q)
    if table.n != order or table.q != q:
        raise ValueError(
            f"table is modulo {table.n} base {table.q}, need modulo {order} base {q}"
        )
    return table


def check_leader_floor_power_form(
    q: int, s: int, m: int, table: CosetTable | None = None
) -> PropResult:
    """Check that CL(q^{ts}-1 + (q^s-1)*u*q^{ts}) mod q^m-1 is >= q^{ts+s}-1.

    Sweeps every t in [1, m/s-2] and u in [1, (q^{m-ts}-1)/(q^s-1) - 1].
    These floors pin the large coset leaders that make the dual defining set
    of a power-form code start with a long run of consecutive elements.
    """
    if m % s or m // s < 3:
        raise ValueError("need s | m and m/s >= 3")
    order = q**m - 1
    table = _own_table(order, q, table)
    lead = table.leader_of
    grid: list[tuple] = []
    failures: list[tuple] = []
    for t in range(1, m // s - 1):
        u_hi = (q ** (m - t * s) - 1) // (q**s - 1) - 1
        if u_hi < 1:
            continue
        grid.append((t, 1, u_hi))
        floor = q ** (t * s + s) - 1
        us = np.arange(1, u_hi + 1, dtype=np.int64)
        elems = (q ** (t * s) - 1 + (q**s - 1) * us * q ** (t * s)) % order
        leaders = lead[elems]
        for j in np.flatnonzero(leaders < floor):
            failures.append((t, int(us[j]), int(elems[j]), int(leaders[j]), floor))
    return PropResult("leader_floor_power_form", tuple(grid), tuple(failures))


def check_leader_floor_divisor_form(
    q: int, lam: int, m: int, table: CosetTable | None = None
) -> PropResult:
    """Check that CL((lam*u+1)*q^{t+1} - q + lam*s) mod q^m-1 exceeds
    q^{t+1} - q + lam*s (strictly).

    Sweeps every s in [1, (q-1)/lam - 1], t in [0, m-2] and
    u in [1, (q^{m-t}-1)/lam - s*q^{m-t-1} - 1].  The element is reduced
    modulo q^m-1 before the coset lookup since the raw value can exceed the
    modulus.
    """
    if q < 3 or (q - 1) % lam or lam == q - 1:
        raise ValueError("need q >= 3, lam | q-1 and lam != q-1")
    if m < 2:
        raise ValueError("need m >= 2")
    order = q**m - 1
    table = _own_table(order, q, table)
    lead = table.leader_of
    grid: list[tuple] = []
    failures: list[tuple] = []
    for s in range(1, (q - 1) // lam):
        for t in range(0, m - 1):
            u_hi = (q ** (m - t) - 1) // lam - s * q ** (m - t - 1) - 1
            if u_hi < 1:
                continue
            grid.append((s, t, 1, u_hi))
            floor = q ** (t + 1) - q + lam * s
            us = np.arange(1, u_hi + 1, dtype=np.int64)
            elems = ((lam * us + 1) * q ** (t + 1) - q + lam * s) % order
            leaders = lead[elems]
            for j in np.flatnonzero(leaders <= floor):
                failures.append(
                    (s, t, int(us[j]), int(elems[j]), int(leaders[j]), floor)
                )
    return PropResult("leader_floor_divisor_form", tuple(grid), tuple(failures))


def _membership_failures(
    lead: np.ndarray, n: int, label: str, d_lo: int, d_hi: int, x: int
) -> list[tuple]:
    """Check x is a coset leader mod n and lies in the dual defining set for
    every delta in [d_lo, d_hi].

    Membership unfolds the definition directly: x is in the dual defining set
    iff (n - x) mod n is not in the defining set, i.e. iff the coset leader of
    (n - x) mod n is outside [1, delta-1].
    """
    out: list[tuple] = []
    if not 0 <= x < n:
        out.append((label, None, x, "element outside [0, n)"))
        return out
    if int(lead[x]) != x:
        out.append((label, None, x, "not a coset leader"))
    cl = int(lead[(n - x) % n])
    deltas = np.arange(d_lo, d_hi + 1, dtype=np.int64)
    for d in deltas[(cl >= 1) & (cl <= deltas - 1)]:
        out.append((label, int(d), x, "missing from dual defining set"))
    return out


def check_tperp_leader_membership(
    q: int, lambda_kind, m: int, table: CosetTable | None = None
) -> PropResult:
    """Check the explicit dual-defining-set members used by the dually-BCH
    arguments: each claimed element is a coset leader modulo n and belongs to
    the dual defining set for every delta in its stated range.

    Power form (requires s > 1): for t in [1, m/s-2] the element
    (q^{m-ts} + q^{m-ts-1} - q^{m-(t+1)s-1} - 1)/(q^s-1) over the delta range
    ((q^{ts}-1)/(q^s-1), (q^{(t+1)s}-1)/(q^s-1)].

    Divisor form (requires q > 3 and 1 < lam < q-1): three range/element
    pairs covering delta from 2 up to n - q^{m-1}.
    """
    grid: list[tuple] = []
    failures: list[tuple] = []
    if isinstance(lambda_kind, PowerForm):
        s = lambda_kind.s
        if s <= 1:
            raise ValueError("power-form membership claims need s > 1")
        if m % s or m // s < 3:
            raise ValueError("need s | m and m/s >= 3")
        n = (q**m - 1) // (q**s - 1)
        table = _own_table(n, q, table)
        for t in range(1, m // s - 1):
            num = q ** (m - t * s) + q ** (m - t * s - 1) - q ** (m - (t + 1) * s - 1) - 1
            assert num % (q**s - 1) == 0
            x = num // (q**s - 1)
            d_lo = (q ** (t * s) - 1) // (q**s - 1) + 1
            d_hi = (q ** ((t + 1) * s) - 1) // (q**s - 1)
            grid.append((f"t={t}", d_lo, d_hi, x))
            failures.extend(
                _membership_failures(table.leader_of, n, f"t={t}", d_lo, d_hi, x)
            )
        lemma_id = "tperp_leader_membership_power_form"
    elif isinstance(lambda_kind, DivisorOfQMinus1):
        lam = lambda_kind.lam
        if not (q > 3 and 1 < lam < q - 1):
            raise ValueError("divisor-form membership claims need q > 3 and 1 < lam < q-1")
        if (q - 1) % lam:
            raise ValueError("need lam | q-1")
        if m < 2:
            raise ValueError("need m >= 2")
        n = (q**m - 1) // lam
        table = _own_table(n, q, table)
        num1 = q**m - ((lam - 1) * q + 1) * q ** (m - 2) - 1
        assert num1 % lam == 0
        b = (-m) % lam
        num2 = sum(q**j for j in range(b, m)) + 2 * sum(q**j for j in range(b))
        assert num2 % lam == 0
        assert (q - 1 + lam) % lam == 0
        sections = (
            ("low_delta", 2, (q - 1) // lam + 1, num1 // lam),
            ("mid_delta", (q - 1) // lam + 2, (q ** (m - 1) - 1) // lam, num2 // lam),
            ("high_delta", (q ** (m - 1) - 1) // lam + 1, n - q ** (m - 1), (q - 1 + lam) // lam),
        )
        for label, d_lo, d_hi, x in sections:
            if d_lo > d_hi:
                continue
            grid.append((label, d_lo, d_hi, x))
            failures.extend(
                _membership_failures(table.leader_of, n, label, d_lo, d_hi, x)
            )
        lemma_id = "tperp_leader_membership_divisor_form"
    else:
        raise TypeError(f"unsupported length family: {lambda_kind!r}")
    return PropResult(lemma_id, tuple(grid), tuple(failures))


def load_grid_manifest(path: str | Path | None = None) -> dict:
    """Load a parameter-grid manifest.

    With no argument, loads the packaged default (``data/prop_grids.json``).
    The manifest is a JSON object::

        {"schema": "dualbch-prop-grids/1",
         "grids": [{"lemma_id": "<check name>", "cases": [{...}, ...]}, ...]}

    Case objects carry the keyword arguments of the corresponding check:
    ``{"q", "s", "m"}`` for ``leader_floor_power_form``, ``{"q", "lam", "m"}``
    for ``leader_floor_divisor_form``, and ``{"q", "kind", "s"|"lam", "m"}``
    (``kind`` one of ``"power"``/``"divisor"``) for the membership checks.
    """
    if path is None:
        text = resources.files("dualbch").joinpath("data/prop_grids.json").read_text()
    else:
        text = Path(path).read_text()
    manifest = json.loads(text)
    if manifest.get("schema") != MANIFEST_SCHEMA:
        raise ValueError(f"unrecognised manifest schema: {manifest.get('schema')!r}")
    return manifest


def _run_case(lemma_id: str, case: dict, tables: dict) -> PropResult:
    q, m = case["q"], case["m"]
    if lemma_id == "leader_floor_power_form":
        return check_leader_floor_power_form(
            q, case["s"], m, table=tables.get((q**m - 1, q))
        )
    if lemma_id == "leader_floor_divisor_form":
        return check_leader_floor_divisor_form(
            q, case["lam"], m, table=tables.get((q**m - 1, q))
        )
    if lemma_id == "tperp_leader_membership":
        if case["kind"] == "power":
            kind = PowerForm(case["s"])
            n = (q**m - 1) // (q ** case["s"] - 1)
        elif case["kind"] == "divisor":
            kind = DivisorOfQMinus1(case["lam"])
            n = (q**m - 1) // case["lam"]
        else:
            raise ValueError(f"unknown membership kind: {case['kind']!r}")
        return check_tperp_leader_membership(q, kind, m, table=tables.get((n, q)))
    raise ValueError(f"unknown lemma_id in manifest: {lemma_id!r}")


def _case_modulus(lemma_id: str, case: dict) -> tuple[int, int]:
    q, m = case["q"], case["m"]
    if lemma_id == "tperp_leader_membership":
        if case["kind"] == "power":
            return ((q**m - 1) // (q ** case["s"] - 1), q)
        return ((q**m - 1) // case["lam"], q)
    return (q**m - 1, q)


def run_grid(manifest: dict | None = None, threads: int = 1) -> list[PropResult]:
    """Run every check in the manifest and return results in manifest order.

    Coset tables are shared across cases with the same modulus/base.  With
    ``threads > 1`` the independent checks are fanned out to a thread pool;
    the result ordering is unaffected.
    """
    if manifest is None:
        manifest = load_grid_manifest()
    if threads < 1:
        raise ValueError("threads must be >= 1")
    jobs = [
        (grid["lemma_id"], case)
        for grid in manifest["grids"]
        for case in grid["cases"]
    ]
    tables: dict[tuple[int, int], CosetTable] = {}
    for lemma_id, case in jobs:
        key = _case_modulus(lemma_id, case)
        if key not in tables:
            tables[key] = coset_table(*key)
    if threads == 1:
        return [_run_case(lemma_id, case, tables) for lemma_id, case in jobs]
    with ThreadPoolExecutor(max_workers=threads) as pool:
        futures = [pool.submit(_run_case, lm, c, tables) for lm, c in jobs]
        return [f.result() for f in futures]
