"""Wall-crossing transforms on stability parameters and dimension vectors,
and mutation of configuration states with composed coordinate charts.

Conventions:

* A stability vector lists the rational coordinates theta_1..theta_r, one
  per slot; theta_0 is implicit through theta . rk = 0 and is reconstructed
  only inside ``pairing``.
* A dimension vector lists beta_0..beta_r (vertex-0 entry first).
* ``MutationState.chart`` is an r x r unimodular integer matrix whose rows
  are covectors in the original coordinates: the pulled-back chamber of a
  state is ``{theta : row . theta > 0 for every row}``.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence, Tuple

from .errors import DomainError, InternalConsistencyError
from .knitting import Configuration, ExchangeData, knit
from .linalg import IntMat, identity, mat_det, mat_mul

Theta = Tuple[Fraction, ...]
Beta = Tuple[int, ...]


def _as_theta(theta: Sequence, rank: int) -> Theta:
    if len(theta) != rank:
        raise DomainError(f"stability vector has length {len(theta)}, expected {rank}")
    return tuple(Fraction(x) for x in theta)


def nu_theta(b: ExchangeData, theta: Sequence) -> Theta:
    """Wall-crossing transform on stability coordinates:
    theta_t -> theta_t + b_t theta_i for t != i, theta_i -> -theta_i."""
    r = b.config.rank
    th = _as_theta(theta, r)
    i = b.pivot_slot
    out = [th[t] + b.slot_coefficient(t) * th[i] for t in range(r)]
    out[i] = -th[i]
    return tuple(out)


def nu_beta(b: ExchangeData, beta: Sequence[int]) -> Beta:
    """Wall-crossing transform on dimension vectors; the vertex-0 entry
    pairs with the vertex-0 coefficient of b."""
    r = b.config.rank
    if len(beta) != r + 1:
        raise DomainError(f"dimension vector has length {len(beta)}, expected {r + 1}")
    bv = tuple(int(x) for x in beta)
    i = b.pivot_slot
    total = b.b.get("0", 0) * bv[0]
    total += sum(b.slot_coefficient(t) * bv[t + 1] for t in range(r) if t != i)
    new_i = total - bv[i + 1]
    if new_i < 0:
        raise DomainError(
            f"transformed dimension vector is negative at the pivot slot ({new_i})"
        )
    out = list(bv)
    out[i + 1] = new_i
    return tuple(out)


def pairing(config: Configuration, theta: Sequence, beta: Sequence[int]) -> Fraction:
    """Canonical pairing theta . beta, with theta_0 reconstructed as
    -sum_k delta(slot k) theta_k so that theta . rk = 0 automatically."""
    r = config.rank
    th = _as_theta(theta, r)
    if len(beta) != r + 1:
        raise DomainError(f"dimension vector has length {len(beta)}, expected {r + 1}")
    delta = config.diagram.delta
    theta0 = -sum(delta[v] * t for v, t in zip(config.slots, th))
    return theta0 * beta[0] + sum(t * x for t, x in zip(th, beta[1:]))


def rk_vector(config: Configuration) -> Beta:
    """The distinguished dimension vector: module ranks delta, with 1 at
    the vertex-0 slot."""
    return (1,) + tuple(config.diagram.delta[v] for v in config.slots)


def crossing_matrix(b: ExchangeData) -> IntMat:
    """Matrix of nu_theta in slot coordinates (an involution)."""
    r = b.config.rank
    i = b.pivot_slot
    rows = []
    for t in range(r):
        row = [0] * r
        if t == i:
            row[i] = -1
        else:
            row[t] = 1
            row[i] = b.slot_coefficient(t)
        rows.append(tuple(row))
    return tuple(rows)


@dataclass(frozen=True)
class MutationState:
    """A configuration together with the unimodular chart pulling its
    C_+ chamber back to the original Theta coordinates, and the mutation
    word that produced it."""

    config: Configuration
    chart: IntMat
    word: Tuple[int, ...]

    @classmethod
    def initial(cls, config: Configuration) -> "MutationState":
        return cls(config, identity(config.rank), ())

    def key(self) -> Tuple[Tuple[str, ...], IntMat]:
        return (self.config.slots, self.chart)

    def chamber_rows(self) -> IntMat:
        return self.chart

    def check_unimodular(self) -> None:
        if mat_det(self.chart) not in (1, -1):
            raise InternalConsistencyError(
                f"chart is not unimodular: det = {mat_det(self.chart)}"
            )


def mutate(state: MutationState, slot: int) -> MutationState:
    """Knit at ``slot``, swap in the replacement vertex, and compose the
    chart so that the new state's C_+ still reads in original coordinates."""
    b = knit(state.config, slot)
    new_config = state.config.replace(slot, b.new_vertex)
    new_chart = mat_mul(crossing_matrix(b), state.chart)
    return MutationState(new_config, new_chart, state.word + (slot,))
