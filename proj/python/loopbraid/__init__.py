"""Loop braid toolkit: word problem, presentations, rewriting and Gauss diagrams."""

import json as _json

from ._loopbraid import (
    BraidWord,
    ConfigurationError,
    FreeWord,
    GaussDiagram,
    MoveInapplicable,
    ParseError,
    PCAut,
    alpha_word,
    equal,
    evaluate,
    from_word,
    gauss_equal,
    inverse_word,
    is_extended,
    is_pure,
    permutation,
    random_word,
    realize,
    render_ascii,
    render_svg,
    search,
    simplify,
    strand_endpoints,
)
from ._loopbraid import verify_presentation as _verify_presentation


def verify_presentation(name, strands):
    """Report for presentation `name` (ur, r, pur, plbe) as a dict."""
    return _json.loads(_verify_presentation(name, strands))


__all__ = [name for name in dir() if not name.startswith("_")]
