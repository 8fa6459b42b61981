"""Number-theoretic hamiltonicity tests.

* :func:`is_pushed_product_hamiltonian` decides whether the product of two
  directed cycles, with the four edges at one vertex reversed, is hamiltonian.
* :func:`is_deleted_rect_hamiltonian` decides the same for the product with an
  ``a x b`` rectangle of vertices removed, trying both orientations.

Both only do a handful of CRT evaluations, so they run in time polynomial in
the number of digits of ``m`` and ``n``.
"""
from __future__ import annotations

import enum
from dataclasses import dataclass, field

from .arith import DomainError, Moduli, gcd

__all__ = [
    "Condition",
    "Verdict",
    "main_conditions",
    "is_pushed_product_hamiltonian",
    "rectangle_conditions",
    "is_deleted_rect_hamiltonian",
    "pushed_equals_deleted",
]


class Condition(str, enum.Enum):
    COPRIMALITY = "coprimality"
    MIN_INEQUALITY = "min-inequality"
    KNOT_GCD = "knot-gcd"
    CRT_NONEXISTENCE = "crt-nonexistence"
    MIN_ATTAINMENT = "min-attainment"
    # P(C_2 x C_n) is hamiltonian iff n in {2, 3}
    TWO_CYCLE_RULE = "two-cycle-rule"


@dataclass(frozen=True)
class Verdict:
    """Outcome of a test plus the intermediate values it was decided on.

    ``failed`` is ``None`` exactly when ``hamiltonian`` is true.  Witness keys
    use ``<i|j>`` for CRT values; keys prefixed ``swapped:`` were evaluated with
    ``m, n`` (and ``a, b``) interchanged.
    """

    hamiltonian: bool
    failed: Condition | None = None
    witnesses: dict[str, int] = field(default_factory=dict)
    swapped: bool = False

    def __bool__(self):
        return self.hamiltonian

    def to_dict(self) -> dict:
        return {
            "hamiltonian": self.hamiltonian,
            "failedCondition": None if self.failed is None else self.failed.value,
            "swappedOrientation": self.swapped,
            "witnesses": dict(self.witnesses),
        }


def _check_int(name, value, low):
    if isinstance(value, bool) or not isinstance(value, int):
        raise DomainError(f"{name} must be an integer, got {value!r}")
    if value < low:
        raise DomainError(f"{name} must be >= {low}, got {value}")


def main_conditions(m: int, n: int) -> Verdict:
    """Evaluate the three coprimality / minimum / gcd conditions in order."""
    mod = Moduli(m, n)
    w = {"gcd(m,n)": mod.g}
    if mod.g != 1:
        return Verdict(False, Condition.COPRIMALITY, w)
    c = mod.crt
    w["<0|-2>"] = c(0, -2)
    w["<-2|0>"] = c(-2, 0)
    w["<0|-1>"] = c(0, -1)
    w["<-1|0>"] = c(-1, 0)
    if not min(w["<0|-2>"], w["<-2|0>"]) < min(w["<0|-1>"], w["<-1|0>"]):
        return Verdict(False, Condition.MIN_INEQUALITY, w)
    p, rp = divmod(c(0, -4), m)
    q, rq = divmod(c(-4, 0), n)
    assert rp == 0 and rq == 0
    w["<0|-4>/m"] = p
    w["<-4|0>/n"] = q
    w["gcd(<0|-4>/m,<-4|0>/n)"] = g = gcd(p, q)
    if g != 1:
        return Verdict(False, Condition.KNOT_GCD, w)
    return Verdict(True, None, w)


def is_pushed_product_hamiltonian(m: int, n: int) -> Verdict:
    """Is the product of directed m- and n-cycles, pushed at one vertex, hamiltonian?

    >>> is_pushed_product_hamiltonian(3, 5).hamiltonian
    True
    >>> is_pushed_product_hamiltonian(4, 6).failed
    <Condition.COPRIMALITY: 'coprimality'>
    """
    _check_int("m", m, 2)
    _check_int("n", n, 2)
    if min(m, n) == 2:
        other = max(m, n)
        w = {"min(m,n)": 2, "max(m,n)": other}
        if other in (2, 3):
            return Verdict(True, None, w)
        return Verdict(False, Condition.TWO_CYCLE_RULE, w)
    return main_conditions(m, n)


def rectangle_conditions(mod: Moduli, a: int, b: int) -> tuple[Condition | None, dict[str, int]]:
    """Check the rectangle conditions in one orientation.

    Returns ``(failed, witnesses)``; ``failed`` is ``None`` when all hold.
    Nonexistent CRT values are skipped in the minimum.  Costs ``a + b + 3``
    CRT evaluations.
    """
    m, n = mod.m, mod.n
    c = mod.crt
    w: dict[str, int] = {}
    lead = c(-a, 0)
    if lead is None:
        return Condition.CRT_NONEXISTENCE, w
    w["<-a|0>"] = lead
    terms = [c(-a, -b + k) for k in range(b + 1)]
    terms += [c(-a + k, -b) for k in range(a + 1)]
    smallest = min(t for t in terms if t is not None)
    w["min"] = smallest
    if lead != smallest:
        return Condition.MIN_ATTAINMENT, w
    left = n - b - b * (lead // m)
    right = b * (lead // n)
    w["n-b-b*floor(<-a|0>/m)"] = left
    w["b*<-a|0>/n"] = right
    w["gcd"] = g = gcd(left, right)
    if g != 1:
        return Condition.KNOT_GCD, w
    return None, w


def is_deleted_rect_hamiltonian(m: int, n: int, a: int, b: int) -> Verdict:
    """Is ``C_m x C_n`` minus the rectangle ``{0..a-1} x {0..b-1}`` hamiltonian?

    The conditions are tried as given and then with ``m <-> n``, ``a <-> b``;
    ``Verdict.swapped`` tells which orientation succeeded.  On failure,
    ``Verdict.failed`` is the first failing condition of the unswapped
    orientation.  Rectangles spanning a whole cycle (``a == m`` or ``b == n``)
    are rejected.
    """
    _check_int("m", m, 2)
    _check_int("n", n, 2)
    _check_int("a", a, 1)
    _check_int("b", b, 1)
    if a >= m or b >= n:
        raise DomainError(f"need a < m and b < n, got a={a}, b={b}, m={m}, n={n}")
    failed, w = rectangle_conditions(Moduli(m, n), a, b)
    if failed is None:
        return Verdict(True, None, w, swapped=False)
    failed_sw, w_sw = rectangle_conditions(Moduli(n, m), b, a)
    w.update({f"swapped:{k}": v for k, v in w_sw.items()})
    if failed_sw is None:
        return Verdict(True, None, w, swapped=True)
    return Verdict(False, failed, w)


def pushed_equals_deleted(m: int, n: int) -> bool:
    """Do the pushed and the 2x2-deleted tests agree on ``(m, n)``?  (They always should.)"""
    _check_int("m", m, 3)
    _check_int("n", n, 3)
    return bool(is_pushed_product_hamiltonian(m, n)) == bool(is_deleted_rect_hamiltonian(m, n, 2, 2))
