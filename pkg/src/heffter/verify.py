"""Certification of array conditions and the simplicity hierarchy.

An ordering of a line is *simple* when no proper contiguous block of it sums
to zero; equivalently its partial sums (counting the empty prefix as zero)
are pairwise distinct, except that the sum of the whole line may be zero.
A valid array is *globally simple* when the natural left-to-right and
top-to-bottom orderings are simple, and *simple* when some ordering of each
line is.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from typing import Iterable, Optional, Sequence

from .core import PFArray, Residue
from .errors import InvalidParameters, VerificationFailed

SEARCH_FOUND = "found"
SEARCH_NONE = "none"
SEARCH_EXHAUSTED = "exhausted"

DEFAULT_BUDGET = 10**6


@dataclass(frozen=True)
class Violation:
    location: str
    rule: str
    detail: str

    def __str__(self) -> str:
        return f"{self.location}: {self.detail}"


@dataclass(frozen=True)
class Verdict:
    valid: bool
    violations: tuple

    @classmethod
    def from_violations(cls, violations: Iterable[Violation]) -> "Verdict":
        vs = tuple(violations)
        return cls(valid=not vs, violations=vs)

    def report(self) -> str:
        if self.valid:
            return "valid"
        return "\n".join(str(v) for v in self.violations)


@dataclass(frozen=True)
class OrderingPair:
    """One ordering per row and per column of an array's filled entries."""

    rows: tuple
    cols: tuple

    @classmethod
    def natural(cls, array: PFArray) -> "OrderingPair":
        return cls(
            rows=tuple(array.row_entries(i) for i in range(1, array.m + 1)),
            cols=tuple(array.col_entries(j) for j in range(1, array.n + 1)),
        )

    def validate(self, array: PFArray) -> None:
        """Each ordering must permute exactly its line's entries."""
        if len(self.rows) != array.m or len(self.cols) != array.n:
            raise InvalidParameters(
                f"ordering pair shape ({len(self.rows)},{len(self.cols)}) "
                f"does not match array {array.m}x{array.n}"
            )
        for i, ordering in enumerate(self.rows, start=1):
            if Counter(ordering) != Counter(array.row_entries(i)):
                raise InvalidParameters(f"row {i} ordering is not a permutation of the row")
        for j, ordering in enumerate(self.cols, start=1):
            if Counter(ordering) != Counter(array.col_entries(j)):
                raise InvalidParameters(f"column {j} ordering is not a permutation of the column")

    def reversed_rows(self) -> "OrderingPair":
        return OrderingPair(
            rows=tuple(tuple(reversed(o)) for o in self.rows), cols=self.cols
        )


# ---------------------------------------------------------------------------
# Defining conditions


def _count_violations(array: PFArray, rule: str) -> list:
    p = array.params
    out = []
    for i in range(1, p.m + 1):
        filled = len(array.row_entries(i))
        if filled != p.h:
            out.append(Violation(f"row {i}", rule, f"filled={filled} expected={p.h}"))
    for j in range(1, p.n + 1):
        filled = len(array.col_entries(j))
        if filled != p.k:
            out.append(Violation(f"column {j}", rule, f"filled={filled} expected={p.k}"))
    return out


def _coverage_violations(array: PFArray, rule: str) -> list:
    p = array.params
    excluded = {x.value for x in p.excluded_subgroup()}
    counts = Counter()
    for _, _, e in array.filled_cells():
        counts[e.value] += 1
        counts[(-e).value] += 1
    out = []
    for x in range(p.v):
        seen = counts[x]
        if x in excluded:
            if seen:
                out.append(
                    Violation("array", rule, f"excluded value {x} appears")
                )
            continue
        if seen == 0:
            out.append(
                Violation("array", rule, f"{Residue(x, p.v).signed} unrepresented")
            )
        elif seen > 1:
            out.append(
                Violation(
                    "array", rule, f"{Residue(x, p.v).signed} represented {seen} times"
                )
            )
    return out


def _sum_violations(array: PFArray, rule: str, want_zero: bool) -> list:
    p = array.params
    out = []
    lines = [(f"row {i}", array.row_entries(i)) for i in range(1, p.m + 1)]
    lines += [(f"column {j}", array.col_entries(j)) for j in range(1, p.n + 1)]
    for label, entries in lines:
        total = sum((x.value for x in entries), 0) % p.v
        if want_zero and total != 0:
            out.append(Violation(label, rule, f"sum={Residue(total, p.v).signed}"))
        elif not want_zero and total == 0:
            out.append(Violation(label, rule, "sum=0"))
    return out


def verify_nh(array: PFArray) -> Verdict:
    """Certify the non-zero sum conditions: fill counts, one of each +/- pair
    outside the excluded subgroup, and all line sums nonzero."""
    violations = _count_violations(array, "a2")
    violations += _coverage_violations(array, "b2")
    violations += _sum_violations(array, "c2", want_zero=False)
    return Verdict.from_violations(violations)


def verify_heffter(array: PFArray) -> Verdict:
    """Certify the zero-sum conditions: fill counts, coverage, all line sums zero."""
    violations = _count_violations(array, "a1")
    violations += _coverage_violations(array, "b1")
    violations += _sum_violations(array, "c1", want_zero=True)
    return Verdict.from_violations(violations)


# ---------------------------------------------------------------------------
# Simplicity


def is_simple_ordering(elements: Sequence[Residue]) -> bool:
    """True when no proper contiguous block of ``elements`` sums to zero.

    The full sum may be zero (the whole sequence is not a proper block), so
    this applies to zero-sum lines as well.
    """
    elements = tuple(elements)
    if not elements:
        return True
    v = elements[0].modulus
    seen = {0}
    total = 0
    last = len(elements) - 1
    for idx, x in enumerate(elements):
        total = (total + x.value) % v
        if total in seen:
            if idx == last and total == 0:
                break
            return False
        seen.add(total)
    return True


def is_globally_simple(array: PFArray) -> Verdict:
    """Check the natural ordering of every row and column for simplicity."""
    violations = []
    for i in range(1, array.m + 1):
        if not is_simple_ordering(array.row_entries(i)):
            violations.append(
                Violation(f"row {i}", "simple", "natural ordering is not simple")
            )
    for j in range(1, array.n + 1):
        if not is_simple_ordering(array.col_entries(j)):
            violations.append(
                Violation(f"column {j}", "simple", "natural ordering is not simple")
            )
    return Verdict.from_violations(violations)


@dataclass(frozen=True)
class OrderingSearch:
    """Outcome of a backtracking ordering search."""

    status: str
    ordering: Optional[tuple] = None
    nodes: int = 0


def find_simple_ordering(
    elements: Iterable[Residue],
    require_nonzero_sums: bool = True,
    budget: int = DEFAULT_BUDGET,
) -> OrderingSearch:
    """Search for an ordering of ``elements`` with pairwise distinct partial sums.

    With ``require_nonzero_sums`` every partial sum must also be nonzero (the
    elements' total must then be nonzero).  Candidates are tried in increasing
    canonical order, so the first ordering found is the lexicographically
    least valid one.  Returns status ``none`` only after exhausting the whole
    search tree; ``exhausted`` means the node budget was hit first.
    """
    elems = sorted(elements, key=lambda x: x.value)
    if not elems:
        return OrderingSearch(SEARCH_FOUND, ())
    v = elems[0].modulus
    values = [x.value for x in elems]
    if len(set(values)) != len(values):
        raise InvalidParameters("elements must be distinct")
    if any(x == 0 for x in values):
        raise InvalidParameters("elements must be nonzero")
    total_all = sum(values) % v
    if require_nonzero_sums and total_all == 0:
        raise InvalidParameters("elements sum to zero; no all-nonzero partial sums exist")

    n = len(elems)
    used = [False] * n
    order = []
    seen = {0}
    nodes = 0
    budget_hit = False

    def extend(depth: int, total: int) -> bool:
        nonlocal nodes, budget_hit
        if depth == n:
            return True
        for idx in range(n):
            if used[idx]:
                continue
            nodes += 1
            if nodes > budget:
                budget_hit = True
                return False
            s = (total + values[idx]) % v
            if s in seen:
                if not (depth == n - 1 and s == 0 and not require_nonzero_sums):
                    continue
                added = False
            else:
                seen.add(s)
                added = True
            used[idx] = True
            order.append(elems[idx])
            if extend(depth + 1, s):
                return True
            used[idx] = False
            order.pop()
            if added:
                seen.discard(s)
            if budget_hit:
                return False
        return False

    if extend(0, 0):
        return OrderingSearch(SEARCH_FOUND, tuple(order), nodes)
    if budget_hit:
        return OrderingSearch(SEARCH_EXHAUSTED, None, nodes)
    return OrderingSearch(SEARCH_NONE, None, nodes)


@dataclass(frozen=True)
class SimplePairSearch:
    """Outcome of a per-line simple-ordering search over a whole array."""

    status: str
    pair: Optional[OrderingPair] = None
    failures: tuple = ()


def make_simple_pair(array: PFArray, budget: int = DEFAULT_BUDGET) -> SimplePairSearch:
    """Simple orderings for every line, preferring the natural ones.

    Lines whose natural ordering is not simple fall back to the backtracking
    search with ``budget`` nodes per line.  Any line that fails is reported in
    ``failures`` with its search status.
    """
    verdict = verify_nh(array)
    if not verdict.valid:
        raise VerificationFailed(
            "array fails non-zero sum certification:\n" + verdict.report()
        )
    failures = []

    def order_line(label: str, entries: tuple) -> Optional[tuple]:
        if is_simple_ordering(entries):
            return entries
        result = find_simple_ordering(entries, require_nonzero_sums=True, budget=budget)
        if result.status == SEARCH_FOUND:
            return result.ordering
        failures.append((label, result.status))
        return None

    rows = [order_line(f"row {i}", array.row_entries(i)) for i in range(1, array.m + 1)]
    cols = [order_line(f"column {j}", array.col_entries(j)) for j in range(1, array.n + 1)]
    if failures:
        statuses = {status for _, status in failures}
        status = SEARCH_EXHAUSTED if SEARCH_EXHAUSTED in statuses else SEARCH_NONE
        return SimplePairSearch(status, None, tuple(failures))
    return SimplePairSearch(SEARCH_FOUND, OrderingPair(tuple(rows), tuple(cols)))
