"""Named distributive series: the building blocks of ring and rig normal forms.

* ``ring2``: integer combinations over commutative monomials (two monads).
* ``ring3``: integer combinations over unit-extended words (three monads);
  the composite is the free ring monad on words.
* ``rig``: zero-extended positive sums of unit-extended words (four
  monads); the composite is the free rig monad.
"""

from .laws import (LAW_PRODUCT_OVER_SUM_COMM, LAW_PRODUCT_OVER_SUM_RIG,
                   LAW_PRODUCT_OVER_SUM_WORDS, LAW_UNIT_ABSORPTION,
                   LAW_UNIT_INTO_SUM_RIG, LAW_UNIT_INTO_SUM_RING,
                   LAW_UNIT_PAST_ZERO, LAW_ZERO_ANNIHILATION, LAW_ZERO_IN_SUM)
from .monads import (ADJOIN_UNIT, ADJOIN_ZERO, FREE_ABELIAN_GROUP,
                     FREE_COMM_MONOID, FREE_COMM_SEMIGROUP, FREE_SEMIGROUP)
from .series import DistributiveSeries

RING2_SERIES = DistributiveSeries(
    "ring2",
    [FREE_ABELIAN_GROUP, FREE_COMM_MONOID],
    {(2, 1): LAW_PRODUCT_OVER_SUM_COMM},
)

RING3_SERIES = DistributiveSeries(
    "ring3",
    [FREE_ABELIAN_GROUP, ADJOIN_UNIT, FREE_SEMIGROUP],
    {
        (2, 1): LAW_UNIT_INTO_SUM_RING,
        (3, 1): LAW_PRODUCT_OVER_SUM_WORDS,
        (3, 2): LAW_UNIT_ABSORPTION,
    },
)

RIG_SERIES = DistributiveSeries(
    "rig",
    [ADJOIN_ZERO, FREE_COMM_SEMIGROUP, ADJOIN_UNIT, FREE_SEMIGROUP],
    {
        (2, 1): LAW_ZERO_IN_SUM,
        (3, 1): LAW_UNIT_PAST_ZERO,
        (3, 2): LAW_UNIT_INTO_SUM_RIG,
        (4, 1): LAW_ZERO_ANNIHILATION,
        (4, 2): LAW_PRODUCT_OVER_SUM_RIG,
        (4, 3): LAW_UNIT_ABSORPTION,
    },
)

SERIES = {s.name: s for s in (RING2_SERIES, RING3_SERIES, RIG_SERIES)}
