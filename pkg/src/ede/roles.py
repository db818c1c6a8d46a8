"""Single-factor belief updates, one per role kind, plus their inverses.

Each update takes the current belief, the role intensity, and the
evidential strength eta, and moves the belief by a linear interpolation
between the role's two margin behaviors: eta = 1 applies the factor's
full "present at the high margin" effect, eta = 0 its "at the low
margin" effect. Non-linearity is expressed upstream, by sharpening eta,
never here.

The elicitation inverses recover an intensity from a prior/posterior
pair the decision maker supplies. Mis-ordered pairs are rejected rather
than clamped: a posterior below the prior is adversity, not support, and
the caller has to pick the matching role. There is deliberately no
bridge equating support for H with adversity against not-H; beliefs here
are sub-additive, so that MYCIN-style symmetry does not hold.
"""

from __future__ import annotations

from .core import check_unit, clip_unit
from .errors import DegeneratePriorError, OrderingError


def update_supportive(bel: float, supp: float, eta: float = 1.0) -> float:
    """Raise belief toward 1 by the fraction supp of the remaining doubt.

    Confirmed absence (eta = 0) leaves the belief unchanged; a purely
    supportive factor never counts against the decision.
    """
    bel = check_unit(bel, "bel")
    supp = check_unit(supp, "supp")
    eta = check_unit(eta, "eta")
    return clip_unit(bel + supp * eta * (1.0 - bel))


def update_adverse(bel: float, adv: float, eta: float = 1.0) -> float:
    """Discount belief by the factor's adversity, scaled by eta."""
    bel = check_unit(bel, "bel")
    adv = check_unit(adv, "adv")
    eta = check_unit(eta, "eta")
    return clip_unit(bel * (1.0 - adv * eta))


def update_sufficient(bel: float, suff: float, eta: float = 1.0) -> float:
    """Guarantee belief up to suff when the factor is present.

    Interpolates between the current belief (eta = 0) and the degree of
    sufficiency (eta = 1), and never lowers an already-higher belief.
    """
    bel = check_unit(bel, "bel")
    suff = check_unit(suff, "suff")
    eta = check_unit(eta, "eta")
    return clip_unit(max(bel, (1.0 - eta) * bel + eta * suff))


def update_necessary(bel: float, nec: float, eta: float = 1.0) -> float:
    """Filter belief down to 1 - nec when the factor is absent.

    A confirmed necessary factor (eta = 1) adds nothing; its absence
    (eta = 0) caps the belief at 1 - nec.
    """
    bel = check_unit(bel, "bel")
    nec = check_unit(nec, "nec")
    eta = check_unit(eta, "eta")
    return clip_unit(min(bel, eta * bel + (1.0 - eta) * (1.0 - nec)))


def update_contrary(bel: float, contr: float, eta: float = 1.0) -> float:
    """Cap belief at 1 - contr when the factor is present.

    The mirror image of a necessary factor: presence excludes the
    decision, absence changes nothing.
    """
    bel = check_unit(bel, "bel")
    contr = check_unit(contr, "contr")
    eta = check_unit(eta, "eta")
    return clip_unit(min(bel, (1.0 - eta) * bel + eta * (1.0 - contr)))


def elicit_supp(prior: float, posterior: float) -> float:
    """Degree of support implied by a belief raised from prior to posterior."""
    prior = check_unit(prior, "prior")
    posterior = check_unit(posterior, "posterior")
    if prior == 1.0:
        raise DegeneratePriorError("support is undefined at prior 1 (no doubt left to reduce)")
    if posterior < prior:
        raise OrderingError(
            f"posterior {posterior} below prior {prior}: this is adversity, use elicit_adv"
        )
    return clip_unit((posterior - prior) / (1.0 - prior))


def elicit_adv(prior: float, posterior: float) -> float:
    """Degree of adversity implied by a belief lowered from prior to posterior."""
    prior = check_unit(prior, "prior")
    posterior = check_unit(posterior, "posterior")
    if prior == 0.0:
        raise DegeneratePriorError("adversity is undefined at prior 0 (no belief left to reduce)")
    if posterior > prior:
        raise OrderingError(
            f"posterior {posterior} above prior {prior}: this is support, use elicit_supp"
        )
    return clip_unit((prior - posterior) / prior)


def elicit_nec(bel_at_low: float) -> float:
    """Degree of necessity from the belief that remains when the factor is absent."""
    return 1.0 - check_unit(bel_at_low, "bel_at_low")


def elicit_contr(bel_at_high: float) -> float:
    """Degree of contraries from the belief that remains when the factor is present."""
    return 1.0 - check_unit(bel_at_high, "bel_at_high")
