"""Immersion of a filtration in a larger one, and the pseudo-stopping criterion."""

from fractions import Fraction
from itertools import chain
from typing import Optional, Tuple, Union

import numpy as np

from .._report import CheckReport, Witness
from ..projections.optional import _dual_optional_projection
from ..space.digest import instance_digest
from ..space.expectation import (
    _cond_expect,
    _first_martingale_defect,
    _optional_projection,
    basis_martingales,
)
from ..space.filtration import FilteredPair
from ..space.process import indicator
from ..utils._checks import _check_seed, _check_type, _ensure_int
from ..utils._config import get_config
from ..utils._docs import fill_doc
from ..utils._logs import logger, verbose
from ._criteria import GapCriterion, PseudoCriterion
from .enumeration import (
    StoppingTimeEnumerationError,
    _check_cap,
    _from_codes,
    _iter_code_batches,
    _sample_codes,
    count_stopping_times,
    two_valued_stopping_times,
)
from .generator import random_increasing_process

_LABELS = ("immersion", "pseudo-stopping", "dual-projection")


@fill_doc
def is_immersed(
    pair: FilteredPair, *, return_witness: bool = False
) -> Union[bool, Tuple[bool, Optional[Witness]]]:
    """Check if ``F`` is immersed in ``G``.

    Parameters
    ----------
    %(pair)s
    return_witness : bool
        If True, the counterexample is returned along the verdict.

    Returns
    -------
    immersed : bool
        True if every basis F-martingale is a G-martingale. Every F-martingale is an
        affine combination of the basis martingales.
    witness : Witness | None
        First failing basis block, time and outcome, with
        ``(E[M_t | G_{t-1}], M_{t-1})``. Only returned if ``return_witness=True``.
    """
    _check_type(pair, (FilteredPair,), "pair")
    witness = None
    F, G = pair.F, pair.G
    for block, M in zip(F[F.horizon], basis_martingales(F)):
        defect = _first_martingale_defect(M, G)
        if defect is not None:
            t, k, projected, previous = defect
            witness = Witness(
                condition="immersion",
                t=t,
                outcome=k,
                values=(projected, previous),
                block=block,
            )
            break
    if return_witness:
        return witness is None, witness
    return witness is None


@fill_doc
def immersion_cond_indep(pair: FilteredPair) -> bool:
    """Check immersion through conditional independence.

    Parameters
    ----------
    %(pair)s

    Returns
    -------
    immersed : bool
        True if ``P(B | G_t) = P(B | F_t)`` for every ``t`` and every block ``B`` of
        ``F[T]``, i.e. ``F_T`` and ``G_t`` are conditionally independent given
        ``F_t``.
    """
    _check_type(pair, (FilteredPair,), "pair")
    F, G = pair.F, pair.G
    probs = pair.space.probs
    for block in F[F.horizon]:
        mask = np.zeros(pair.space.n, dtype=bool)
        mask[list(block)] = True
        x = indicator(mask)
        for t in range(F.horizon + 1):
            if np.any(_cond_expect(x, G[t], probs) != _cond_expect(x, F[t], probs)):
                return False
    return True


def _two_valued_codes(pair: FilteredPair) -> np.ndarray:
    T = pair.horizon
    codes = [tau.codes(T) for tau in two_valued_stopping_times(pair.G)]
    return np.array(codes, dtype=np.intp).reshape(-1, pair.space.n)


@fill_doc
@verbose
def pseudoH_check(
    pair: FilteredPair,
    cap: Optional[int] = None,
    *,
    seed: int = 0,
    n_processes: int = 4,
    fallback: bool = True,
    n_samples: int = 256,
    digest: Optional[str] = None,
    verbose=None,
) -> CheckReport:
    """Check that immersion is equivalent to G-stopping times being pseudo-stopping.

    The conditions are evaluated independently:

    * ``immersion``: every F-martingale is a G-martingale.
    * ``pseudo-stopping``: every G-stopping time is an F-pseudo-stopping time.
    * ``dual-projection``: the F-dual optional projection of every G-optional
      increasing process equals its F-optional projection. The quantifier is
      discharged on the processes ``1{nu <= t}`` for G-stopping times ``nu`` and on
      random G-adapted increasing processes; the class is generated by these
      through linearity and monotone limits.

    The G-stopping times are, in order, the two-valued times ``nu = t - 1`` on a
    block of ``G[t - 1]`` and ``t`` elsewhere, then every G-stopping time if their
    number does not exceed ``cap``, else a random sample of them. The two-valued
    times alone detect every failure of immersion.

    Parameters
    ----------
    %(pair)s
    %(cap)s
        If None, the ``ENUMERATION_CAP`` configuration value is used.
    seed : int
        Seed of the random increasing processes and of the sampled stopping times.
    n_processes : int
        Number of random G-adapted increasing processes.
    fallback : bool
        If True, a random sample of stopping times is evaluated when the cap is
        exceeded. If False, `~pyfiltrations.lab.StoppingTimeEnumerationError` is
        raised instead.
    n_samples : int
        Number of sampled stopping times on fallback.
    digest : str | None
        Digest of the instance. If None, the digest of the pair is used.
    %(verbose)s

    Returns
    -------
    %(check_report)s
        The details carry the number of G-stopping times ``count``, the number of
        evaluated ones ``evaluated`` and the ``fallback`` flag.
    """
    _check_type(pair, (FilteredPair,), "pair")
    cap = get_config()["ENUMERATION_CAP"] if cap is None else cap
    cap = _check_cap(cap)
    seed = _check_seed(seed)
    n_processes = _ensure_int(n_processes, "n_processes")
    F, G = pair.F, pair.G
    rng = np.random.default_rng(seed)

    immersed, immersion_witness = is_immersed(pair, return_witness=True)
    count = count_stopping_times(G)
    logger.debug("G carries %i stopping times (cap %i).", count, cap)
    if count <= cap:
        batches = _iter_code_batches(G)
        used_fallback = False
    elif fallback:
        logger.info(
            "%i G-stopping times exceed the cap of %i, sampling %i of them.",
            count,
            cap,
            n_samples,
        )
        batches = iter([_sample_codes(G, rng, n_samples)])
        used_fallback = True
    else:
        raise StoppingTimeEnumerationError(count, cap)

    pseudo_criterion = PseudoCriterion(F)
    gap_criterion = GapCriterion(F)
    pseudo_witness = None
    gap_witness = None
    evaluated = 0
    for codes in chain([_two_valued_codes(pair)], batches):
        evaluated += codes.shape[0]
        if pseudo_witness is None:
            failure = pseudo_criterion.first_failure(codes)
            if failure is not None:
                k, r, value = failure
                pseudo_witness = Witness(
                    condition="pseudo-stopping",
                    values=(value, pseudo_criterion.target(r)),
                    block=pseudo_criterion.blocks[r],
                    tau=_from_codes(codes[k], G.horizon).values,
                )
        if gap_witness is None:
            failure = gap_criterion.first_failure(codes)
            if failure is not None:
                k, r, value = failure
                t, outcome = gap_criterion.coordinates[r]
                gap_witness = Witness(
                    condition="dual-projection",
                    t=t,
                    outcome=outcome,
                    values=(value, gap_criterion.target(r)),
                    tau=_from_codes(codes[k], G.horizon).values,
                )
        if pseudo_witness is not None and gap_witness is not None:
            break

    for _ in range(n_processes):
        if gap_witness is not None:
            break
        V = random_increasing_process(G, rng, adapted=True)
        difference = _optional_projection(V, F) - _dual_optional_projection(V, F)
        nonzero = np.argwhere(difference != 0)
        if nonzero.shape[0] != 0:
            t, outcome = (int(v) for v in nonzero[0])
            gap_witness = Witness(
                condition="dual-projection",
                t=t,
                outcome=outcome,
                values=(difference[t, outcome], Fraction(0)),
            )

    conditions = tuple(
        zip(_LABELS, (immersed, pseudo_witness is None, gap_witness is None))
    )
    witness = next(
        (w for w in (pseudo_witness, gap_witness, immersion_witness) if w is not None),
        None,
    )
    if digest is None:
        digest = instance_digest(pair.space, {"F": F, "G": G})
    report = CheckReport(
        name="pseudoH",
        conditions=conditions,
        instance_digest=digest,
        witness=witness,
        details={"count": count, "evaluated": evaluated, "fallback": used_fallback},
    )
    logger.info(
        "pseudoH over %i stopping times: agree=%s, holds=%s",
        evaluated,
        report.agree,
        report.holds,
    )
    return report
