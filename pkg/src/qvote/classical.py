"""Classical social welfare functions used as baselines and mutation rules."""
from .orders import (condorcet_scores, linear_extensions, order_to_index,
                     weak_order_from_scores)


def condorcet_lex_swf(profile):
    """Condorcet completion with lexicographic tie-break.

    Scores, weak order and linear extensions as in the quantum channel,
    then the extension with the smallest basis index.
    """
    weak = weak_order_from_scores(condorcet_scores(profile))
    return min(linear_extensions(weak), key=order_to_index)


def dictator_swf(voter):
    def swf(profile):
        return tuple(profile[voter])

    swf.__name__ = f"dictator({voter})"
    return swf


def constant_swf(order):
    order = tuple(order)

    def swf(profile):
        return order

    swf.__name__ = f"constant({order})"
    return swf
