from .nakayama import (
    NakayamaSpec,
    nakayama_universe,
    semisimple_universe,
    cyclic_nakayama_universe,
    parse_catalog_name,
)
from .oracle import brute_force_nct_search
