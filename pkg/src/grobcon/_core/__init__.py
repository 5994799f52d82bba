"""Term-kernel backend selection.

The compiled kernel is preferred when the extension built; setting
``GROBCON_PURE=1`` in the environment forces the pure-Python twin.  Both
expose identical module-level functions (see ``_pure`` for the contract).
"""

import os

if os.environ.get("GROBCON_PURE"):
    from . import _pure as impl

    BACKEND = "pure"
else:
    try:
        from . import _speedups as impl  # type: ignore[no-redef]

        BACKEND = "speedups"
    except ImportError:
        from . import _pure as impl

        BACKEND = "pure"

LEX = impl.LEX
GREVLEX = impl.GREVLEX
WEIGHT_LEX = impl.WEIGHT_LEX
WEIGHT_GREVLEX = impl.WEIGHT_GREVLEX
BLOCK_GREVLEX = impl.BLOCK_GREVLEX

cmp_expvec = impl.cmp_expvec
exp_divides = impl.exp_divides
exp_sub = impl.exp_sub
exp_add = impl.exp_add
exp_lcm = impl.exp_lcm
sort_terms = impl.sort_terms
add_terms = impl.add_terms
neg_terms = impl.neg_terms
scale_terms = impl.scale_terms
mul_term = impl.mul_term
mul_terms = impl.mul_terms
sub_scaled = impl.sub_scaled
normal_form_terms = impl.normal_form_terms
