from functools import lru_cache

from smoothperm.admissible import all_admissible
from smoothperm.perm import all_perms
from smoothperm.tables import is_smooth


def P(text: str) -> tuple[int, ...]:
    """Compact one-line notation, e.g. P("231")."""
    return tuple(int(c) for c in text)


@lru_cache(maxsize=None)
def perms(n: int) -> tuple:
    return tuple(all_perms(n))


@lru_cache(maxsize=None)
def smooth(n: int) -> tuple:
    return tuple(s for s in perms(n) if is_smooth(s))


@lru_cache(maxsize=None)
def admissible(n: int) -> tuple:
    return tuple(all_admissible(n))
